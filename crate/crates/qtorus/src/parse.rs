//! Text literals for scalars, lattice vectors, basis keys, torus and
//! algebra elements, and module words. Formatting round-trips with
//! parsing, which keeps CLI output reusable as CLI input.
//!
//! Grammar sketch (whitespace-insensitive):
//!
//! ```text
//! scalar  := term (('+'|'-') term)*
//! term    := '-'? atom ('*' atom)*
//! atom    := rational | 'z' ('^' int)? | 'q' i j ('^' int)? | '(' scalar ')'
//! vector  := '('? int (',' int)* ')'?
//! key     := ('X'|'Y'|'U'|'W') ':' vector | ('C'|'D') ':' index
//! element := '-'? (atom '*')* key (('+'|'-') ...)*
//! word    := key key ... ('v')?
//! ```
//!
//! Generic Laurent generators use single-digit pair indices (`q12`,
//! `q13^-1`), which covers every rank this crate is used at.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{AlgebraElement, BasisKey};
use crate::error::{Error, Result};
use crate::heis::{HeisFactor, Letter};
use crate::lattice::LatticeVector;
use crate::scalar::{Context, Scalar};
use crate::torus::TorusElement;
use crate::verma::{MMonomial, MVector};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected '{}' at offset {}",
                c as char, self.pos
            )))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && (self.src[self.pos] == b'-' || self.src[self.pos] == b'+')
        {
            self.pos += 1;
        }
        let digits_from = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_from {
            return Err(Error::Parse(format!("expected integer at offset {start}")));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer '{text}': {e}")))
    }

    fn small_int(&mut self) -> Result<i64> {
        let big = self.integer()?;
        i64::try_from(&big).map_err(|_| Error::Parse(format!("integer {big} out of range")))
    }
}

fn parse_rational(cur: &mut Cursor) -> Result<BigRational> {
    let numer = cur.integer()?;
    if cur.eat(b'/') {
        let denom = cur.integer()?;
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(numer, denom))
    } else {
        Ok(BigRational::from(numer))
    }
}

/// One multiplicative atom of a scalar literal.
fn parse_atom(ctx: &Context, cur: &mut Cursor) -> Result<Scalar> {
    match cur.peek() {
        Some(b'(') => {
            cur.expect(b'(')?;
            let s = parse_scalar_inner(ctx, cur)?;
            cur.expect(b')')?;
            Ok(s)
        }
        Some(b'z') => {
            cur.expect(b'z')?;
            let e = if cur.eat(b'^') { cur.small_int()? } else { 1 };
            ctx.root_of_unity(e)
        }
        Some(b'q') => {
            cur.expect(b'q')?;
            let i = match cur.bump() {
                Some(c) if c.is_ascii_digit() => (c - b'0') as usize,
                _ => return Err(Error::Parse("expected digit after 'q'".into())),
            };
            let j = match cur.bump() {
                Some(c) if c.is_ascii_digit() => (c - b'0') as usize,
                _ => return Err(Error::Parse("expected two digits after 'q'".into())),
            };
            let e = if cur.eat(b'^') { cur.small_int()? } else { 1 };
            ctx.laurent_generator(i, j, e)
        }
        Some(c) if c == b'-' || c == b'+' || c.is_ascii_digit() => {
            Ok(ctx.from_rational(parse_rational(cur)?))
        }
        other => Err(Error::Parse(format!("unexpected scalar atom: {other:?}"))),
    }
}

fn parse_term(ctx: &Context, cur: &mut Cursor) -> Result<Scalar> {
    let negative = if cur.peek() == Some(b'-') {
        // sign belongs to the term unless it starts a number
        let save = cur.pos;
        cur.pos += 1;
        if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            cur.pos = save;
            false
        } else {
            true
        }
    } else {
        false
    };
    let mut acc = parse_atom(ctx, cur)?;
    while cur.eat(b'*') {
        let next = parse_atom(ctx, cur)?;
        acc = ctx.mul(&acc, &next);
    }
    if negative {
        acc = ctx.neg(&acc);
    }
    Ok(acc)
}

fn parse_scalar_inner(ctx: &Context, cur: &mut Cursor) -> Result<Scalar> {
    let mut acc = parse_term(ctx, cur)?;
    loop {
        match cur.peek() {
            Some(b'+') => {
                cur.expect(b'+')?;
                let t = parse_term(ctx, cur)?;
                acc = ctx.add(&acc, &t);
            }
            Some(b'-') => {
                cur.expect(b'-')?;
                let t = parse_term(ctx, cur)?;
                acc = ctx.sub(&acc, &t);
            }
            _ => break,
        }
    }
    Ok(acc)
}

/// Parse a scalar literal in the context backend.
pub fn parse_scalar(ctx: &Context, input: &str) -> Result<Scalar> {
    let mut cur = Cursor::new(input);
    let s = parse_scalar_inner(ctx, &mut cur)?;
    if !cur.at_end() {
        return Err(Error::Parse(format!("trailing input at offset {}", cur.pos)));
    }
    Ok(s)
}

fn parse_vector_inner(ctx: &Context, cur: &mut Cursor) -> Result<LatticeVector> {
    let parens = cur.eat(b'(');
    let mut coords = vec![cur.small_int()?];
    while cur.eat(b',') {
        coords.push(cur.small_int()?);
    }
    if parens {
        cur.expect(b')')?;
    }
    if coords.len() != ctx.rank() {
        return Err(Error::RankMismatch { expected: ctx.rank(), got: coords.len() });
    }
    Ok(LatticeVector::new(coords))
}

/// Parse a lattice vector like `(1,0)` or `1,0`.
pub fn parse_vector(ctx: &Context, input: &str) -> Result<LatticeVector> {
    let mut cur = Cursor::new(input);
    let v = parse_vector_inner(ctx, &mut cur)?;
    if !cur.at_end() {
        return Err(Error::Parse(format!("trailing input at offset {}", cur.pos)));
    }
    Ok(v)
}

fn parse_key_inner(ctx: &Context, cur: &mut Cursor) -> Result<BasisKey> {
    let kind = cur
        .bump()
        .ok_or_else(|| Error::Parse("expected basis key".into()))?;
    cur.expect(b':')?;
    match kind {
        b'X' => Ok(BasisKey::X(parse_vector_inner(ctx, cur)?)),
        b'Y' => Ok(BasisKey::Y(parse_vector_inner(ctx, cur)?)),
        b'U' => Ok(BasisKey::U(parse_vector_inner(ctx, cur)?)),
        b'W' => ctx.w_key(parse_vector_inner(ctx, cur)?),
        b'C' | b'D' => {
            let i = cur.small_int()?;
            if i < 1 || i as usize > ctx.rank() {
                return Err(Error::Parse(format!("index {i} out of range 1..={}", ctx.rank())));
            }
            Ok(if kind == b'C' { BasisKey::C(i as usize) } else { BasisKey::D(i as usize) })
        }
        other => Err(Error::Parse(format!("unknown basis kind '{}'", other as char))),
    }
}

/// Parse a single basis key like `X:(1,0)` or `C:1`.
pub fn parse_key(ctx: &Context, input: &str) -> Result<BasisKey> {
    let mut cur = Cursor::new(input);
    let k = parse_key_inner(ctx, &mut cur)?;
    if !cur.at_end() {
        return Err(Error::Parse(format!("trailing input at offset {}", cur.pos)));
    }
    Ok(k)
}

/// Parse a linear combination of basis keys with optional scalar
/// coefficients, e.g. `U:(0,0) + 2*W:(0,1) - 1/2*X:(1,0)`.
pub fn parse_element(ctx: &Context, input: &str) -> Result<AlgebraElement> {
    let mut cur = Cursor::new(input);
    let mut out = AlgebraElement::zero();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.at_end() {
            if first {
                return Err(Error::Parse("empty element".into()));
            }
            break;
        }
        let mut sign = 1i64;
        if !first {
            match cur.bump() {
                Some(b'+') => {}
                Some(b'-') => sign = -1,
                other => {
                    return Err(Error::Parse(format!("expected '+' or '-', got {other:?}")));
                }
            }
        } else if cur.eat(b'-') {
            sign = -1;
        }
        first = false;
        // coefficient atoms followed by '*', then a key
        let mut coeff = ctx.from_i64(sign);
        loop {
            match cur.peek() {
                Some(c) if matches!(c, b'X' | b'Y' | b'U' | b'W' | b'C' | b'D') => {
                    let key = parse_key_inner(ctx, &mut cur)?;
                    out.add_term(key, coeff);
                    break;
                }
                _ => {
                    let atom = parse_atom(ctx, &mut cur)?;
                    coeff = ctx.mul(&coeff, &atom);
                    cur.expect(b'*')?;
                }
            }
        }
    }
    Ok(out)
}

/// Parse a torus element: terms `t:(1,0)` with optional coefficients.
pub fn parse_torus(ctx: &Context, input: &str) -> Result<TorusElement> {
    let mut cur = Cursor::new(input);
    let mut out = TorusElement::zero();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.at_end() {
            if first {
                return Err(Error::Parse("empty torus element".into()));
            }
            break;
        }
        let mut sign = 1i64;
        if !first {
            match cur.bump() {
                Some(b'+') => {}
                Some(b'-') => sign = -1,
                other => {
                    return Err(Error::Parse(format!("expected '+' or '-', got {other:?}")));
                }
            }
        } else if cur.eat(b'-') {
            sign = -1;
        }
        first = false;
        let mut coeff = ctx.from_i64(sign);
        loop {
            if cur.peek() == Some(b't') {
                cur.expect(b't')?;
                cur.expect(b':')?;
                let v = parse_vector_inner(ctx, &mut cur)?;
                out.add_term(v, coeff);
                break;
            }
            let atom = parse_atom(ctx, &mut cur)?;
            coeff = ctx.mul(&coeff, &atom);
            cur.expect(b'*')?;
        }
    }
    Ok(out)
}

/// Parse a whitespace-separated word of Heisenberg factors
/// (`U:(-1,0) W:(0,-1)`).
pub fn parse_heis_word(ctx: &Context, input: &str) -> Result<Vec<HeisFactor>> {
    let mut out = Vec::new();
    for token in input.split_whitespace() {
        if token == "v" {
            continue;
        }
        match parse_key(ctx, token)? {
            BasisKey::U(a) => out.push((Letter::U, a)),
            BasisKey::W(a) => out.push((Letter::W, a)),
            other => {
                return Err(Error::KindViolation(other.kind_name().into()));
            }
        }
    }
    Ok(out)
}

/// Parse a module word: `Y:` factors plus a Heisenberg tail, optionally
/// ending in `v`. The Heisenberg tail is straightened, so the result is a
/// vector, not necessarily a single monomial.
pub fn parse_m_word(ctx: &Context, input: &str) -> Result<MVector> {
    let mut yfactors = Vec::new();
    let mut heis_word = Vec::new();
    for token in input.split_whitespace() {
        if token == "v" {
            continue;
        }
        match parse_key(ctx, token)? {
            BasisKey::Y(a) => yfactors.push(a),
            BasisKey::U(a) => heis_word.push((Letter::U, a)),
            BasisKey::W(a) => heis_word.push((Letter::W, a)),
            other => {
                return Err(Error::KindViolation(other.kind_name().into()));
            }
        }
    }
    let straightened = ctx.straighten(&heis_word)?;
    let mut out = MVector::new();
    for (hm, c) in straightened {
        let m = MMonomial::new(yfactors.clone(), hm);
        out.insert(m, c);
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// formatting

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn pair_name(index: usize, npairs: usize) -> (usize, usize) {
    // recover n from npairs = n(n-1)/2
    let mut n = 1usize;
    while n * (n - 1) / 2 < npairs {
        n += 1;
    }
    let mut idx = index;
    for i in 1..n {
        let row = n - i;
        if idx < row {
            return (i, i + 1 + idx);
        }
        idx -= row;
    }
    panic!("pair index {index} out of range for {npairs} pairs");
}

/// Canonical literal form of a scalar; parses back to the same value.
pub fn format_scalar(s: &Scalar) -> String {
    match s {
        Scalar::Rational(r) => format_rational(r),
        Scalar::Cyclotomic(coeffs) => {
            let mut parts: Vec<(bool, String)> = Vec::new();
            for (k, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let neg = c.is_negative();
                let abs = c.abs();
                let body = if k == 0 {
                    format_rational(&abs)
                } else if abs.is_one() {
                    format!("z^{k}")
                } else {
                    format!("{}*z^{k}", format_rational(&abs))
                };
                parts.push((neg, body));
            }
            join_signed(parts)
        }
        Scalar::Laurent(terms) => {
            let mut parts: Vec<(bool, String)> = Vec::new();
            for (exp, c) in terms {
                let neg = c.is_negative();
                let abs = c.abs();
                let mut factors: Vec<String> = Vec::new();
                for (idx, &e) in exp.iter().enumerate() {
                    if e != 0 {
                        let (i, j) = pair_name(idx, exp.len());
                        factors.push(format!("q{i}{j}^{e}"));
                    }
                }
                let body = if factors.is_empty() {
                    format_rational(&abs)
                } else if abs.is_one() {
                    factors.join("*")
                } else {
                    format!("{}*{}", format_rational(&abs), factors.join("*"))
                };
                parts.push((neg, body));
            }
            join_signed(parts)
        }
    }
}

fn join_signed(parts: Vec<(bool, String)>) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in parts.iter().enumerate() {
        if i == 0 {
            if *neg {
                out.push('-');
            }
        } else if *neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(body);
    }
    out
}

/// Round-trippable element literal: terms `KEY` or `(coeff)*KEY` joined
/// with ` + `.
pub fn format_element(e: &AlgebraElement) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.terms
        .iter()
        .map(|(k, c)| {
            if let Scalar::Rational(r) = c {
                if r.is_one() {
                    return format!("{k}");
                }
            }
            if *c == one_like(c) {
                format!("{k}")
            } else {
                format!("({})*{k}", format_scalar(c))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn one_like(c: &Scalar) -> Scalar {
    match c {
        Scalar::Rational(_) => Scalar::Rational(BigRational::one()),
        Scalar::Cyclotomic(v) => {
            let mut o = vec![BigRational::zero(); v.len()];
            o[0] = BigRational::one();
            Scalar::Cyclotomic(o)
        }
        Scalar::Laurent(t) => {
            let width = t.keys().next().map_or(0, |k| k.len());
            let mut o = std::collections::BTreeMap::new();
            o.insert(vec![0; width], BigRational::one());
            Scalar::Laurent(o)
        }
    }
}

/// Table-style rendering `KEY coeff, KEY coeff, ...` used by the CLI
/// bracket report; `0` when empty.
pub fn format_element_table(e: &AlgebraElement) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.terms
        .iter()
        .map(|(k, c)| format!("{k} {}", format_scalar(c)))
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ScalarConfig;

    fn cyclo(n: u32) -> Context {
        Context::new(ScalarConfig::cyclotomic2(n, 1)).unwrap()
    }

    #[test]
    fn scalar_literals() {
        let q = Context::new(ScalarConfig::rational(2)).unwrap();
        assert_eq!(parse_scalar(&q, "3/4").unwrap(), q.from_rational(
            BigRational::new(BigInt::from(3), BigInt::from(4))
        ));
        assert_eq!(parse_scalar(&q, "-2").unwrap(), q.from_i64(-2));
        assert_eq!(parse_scalar(&q, " 1/2 + 1/2 ").unwrap(), q.one());

        let c = cyclo(4);
        assert_eq!(parse_scalar(&c, "z^2").unwrap(), c.from_i64(-1));
        assert_eq!(parse_scalar(&c, "1/2*z^1 + z^2").unwrap(), {
            let half_z = c.mul(
                &c.from_rational(BigRational::new(BigInt::from(1), BigInt::from(2))),
                &c.root_of_unity(1).unwrap(),
            );
            c.add(&half_z, &c.root_of_unity(2).unwrap())
        });
        assert_eq!(parse_scalar(&c, "-z").unwrap(), c.neg(&c.root_of_unity(1).unwrap()));

        let g = Context::new(ScalarConfig::generic(3)).unwrap();
        let want = g.mul(
            &g.laurent_generator(1, 2, 3).unwrap(),
            &g.laurent_generator(1, 3, -1).unwrap(),
        );
        assert_eq!(parse_scalar(&g, "q12^3*q13^-1").unwrap(), want);

        // backend mismatches surface as errors
        assert!(parse_scalar(&q, "z^1").is_err());
        assert!(parse_scalar(&g, "z^1").is_err());
        assert!(parse_scalar(&q, "1/0").is_err());
        assert!(parse_scalar(&q, "1 +").is_err());
        assert!(parse_scalar(&q, "abc").is_err());
    }

    #[test]
    fn scalar_round_trips() {
        let c = cyclo(6);
        for lit in ["0", "1", "-1", "z^1", "1/2*z^1 + z^2", "-2/3 + z^1", "5/4"] {
            let s = parse_scalar(&c, lit).unwrap();
            let printed = format_scalar(&s);
            let again = parse_scalar(&c, &printed).unwrap();
            assert_eq!(s, again, "{lit} -> {printed}");
        }
        let g = Context::new(ScalarConfig::generic(3)).unwrap();
        for lit in ["q12^3*q13^-1", "2*q23^1 - 1", "-q12^1", "0"] {
            let s = parse_scalar(&g, lit).unwrap();
            let printed = format_scalar(&s);
            let again = parse_scalar(&g, &printed).unwrap();
            assert_eq!(s, again, "{lit} -> {printed}");
        }
    }

    #[test]
    fn vectors_and_keys() {
        let ctx = cyclo(3);
        assert_eq!(parse_vector(&ctx, "(1,0)").unwrap(), LatticeVector::new(vec![1, 0]));
        assert_eq!(parse_vector(&ctx, "1, -2").unwrap(), LatticeVector::new(vec![1, -2]));
        assert!(parse_vector(&ctx, "(1)").is_err(), "rank mismatch");
        assert!(parse_vector(&ctx, "(1,0,0)").is_err());

        assert_eq!(
            parse_key(&ctx, "X:(1,0)").unwrap(),
            BasisKey::X(LatticeVector::new(vec![1, 0]))
        );
        assert_eq!(parse_key(&ctx, "C:1").unwrap(), BasisKey::C(1));
        assert!(parse_key(&ctx, "C:3").is_err());
        assert!(parse_key(&ctx, "W:(3,0)").is_err(), "w inside the radical");
        assert!(parse_key(&ctx, "Q:(1,0)").is_err());
    }

    #[test]
    fn elements_and_torus() {
        let ctx = cyclo(3);
        let e = parse_element(&ctx, "U:(0,0) + 2*W:(0,1) - 1/2*X:(1,0)").unwrap();
        assert_eq!(e.terms.len(), 3);
        assert_eq!(e.terms[&BasisKey::U(LatticeVector::new(vec![0, 0]))], ctx.one());
        assert_eq!(
            e.terms[&BasisKey::W(LatticeVector::new(vec![0, 1]))],
            ctx.from_i64(2)
        );
        // formatted form parses back
        let printed = format_element(&e);
        let again = parse_element(&ctx, &printed).unwrap();
        assert_eq!(e, again, "{printed}");

        let t = parse_torus(&ctx, "t:(1,0) - z^1*t:(0,1)").unwrap();
        assert_eq!(t.terms.len(), 2);
        assert!(parse_torus(&ctx, "").is_err());

        // scalar coefficient with parentheses
        let e2 = parse_element(&ctx, "(1 + z^1)*U:(1,0)").unwrap();
        let want = ctx.add(&ctx.one(), &ctx.root_of_unity(1).unwrap());
        assert_eq!(e2.terms[&BasisKey::U(LatticeVector::new(vec![1, 0]))], want);
    }

    #[test]
    fn words() {
        let ctx = cyclo(3);
        let w = parse_heis_word(&ctx, "U:(-1,0) W:(0,-1)").unwrap();
        assert_eq!(w.len(), 2);
        assert!(parse_heis_word(&ctx, "X:(1,0)").is_err());

        let mv = parse_m_word(&ctx, "Y:(1,0) U:(0,-1) v").unwrap();
        assert_eq!(mv.len(), 1);
        let m = mv.keys().next().unwrap();
        assert_eq!(m.y_count(), 1);
        // vacuum alone
        let vac = parse_m_word(&ctx, "v").unwrap();
        assert_eq!(vac.keys().next().unwrap(), &MMonomial::vacuum());
    }
}
