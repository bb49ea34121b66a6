//! The Verma-type module `H(lambda)` over the generalized Heisenberg
//! subalgebra: ordered PBW monomials, straightening, the module action,
//! graded bases inside a truncation box, the distinguished proper
//! submodule generated along radical directions orthogonal to the central
//! character, and the singular-vector probe for the irreducibility
//! theorems.
//!
//! Graded components of `H(lambda)` are infinite dimensional, so every
//! module-level computation here is relative to a [`SupportBox`]: factor
//! exponents bounded by `bound`, monomial length bounded by `maxlen`.
//! Membership certificates (a vector lies in the submodule) are exact;
//! completeness is relative to the box.

use std::collections::{BTreeMap, BTreeSet};
use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{AlgebraElement, BasisKey};
use crate::error::{Error, Result};
use crate::lattice::{neg_order_compare, LatticeVector, WeightCentral};
use crate::linalg::{self, Echelon, SparseVec};
use crate::scalar::{Context, Scalar};

/// Heisenberg letters; at equal exponent `w_a` precedes `u_a` in the basis
/// order, which the derived `Ord` reproduces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    W,
    U,
}

impl Letter {
    pub fn name(self) -> &'static str {
        match self {
            Letter::W => "W",
            Letter::U => "U",
        }
    }

    pub fn key(self, a: LatticeVector) -> BasisKey {
        match self {
            Letter::W => BasisKey::W(a),
            Letter::U => BasisKey::U(a),
        }
    }
}

/// One PBW factor `z_a` with `z` in `{u, w}` and `a` lexicographically
/// negative.
pub type HeisFactor = (Letter, LatticeVector);

/// Basis-order comparison of factors: exponents first (recursive negative
/// order), then `w < u`.
pub fn factor_cmp(f1: &HeisFactor, f2: &HeisFactor) -> Result<Ordering> {
    match neg_order_compare(&f1.1, &f2.1)? {
        Ordering::Equal => Ok(f1.0.cmp(&f2.0)),
        o => Ok(o),
    }
}

/// Ordered PBW monomial applied to the highest-weight generator; the empty
/// monomial is the generator itself.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct HeisMonomial {
    factors: Vec<HeisFactor>,
}

impl HeisMonomial {
    pub fn vacuum() -> Self {
        HeisMonomial { factors: Vec::new() }
    }

    /// Build from factors already in weakly increasing basis order;
    /// verifies ordering, negativity, and the radical constraint on `w`.
    pub fn new(ctx: &Context, factors: Vec<HeisFactor>) -> Result<Self> {
        for (letter, a) in &factors {
            if !a.is_lex_negative() {
                return Err(Error::NotNegative);
            }
            if *letter == Letter::W && ctx.in_full_radical(a) {
                return Err(Error::WInRadical);
            }
        }
        for pair in factors.windows(2) {
            if factor_cmp(&pair[0], &pair[1])? == Ordering::Greater {
                return Err(Error::Parse("factors are not in basis order".into()));
            }
        }
        Ok(HeisMonomial { factors })
    }

    pub fn factors(&self) -> &[HeisFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total lattice degree: the sum of the factor exponents.
    pub fn degree(&self, n: usize) -> LatticeVector {
        let mut d = LatticeVector::zero(n);
        for (_, a) in &self.factors {
            d = d.add(a);
        }
        d
    }

    /// Does the monomial fit in the truncation box?
    pub fn fits(&self, b: &SupportBox) -> bool {
        self.factors.len() <= b.maxlen
            && self.factors.iter().all(|(_, a)| a.max_abs() <= b.bound)
    }
}

impl fmt::Display for HeisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "v");
        }
        for (i, (letter, a)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}:{a}", letter.name())?;
        }
        write!(f, " v")
    }
}

/// Sparse vector in `H(lambda)`.
pub type HeisVector = SparseVec<HeisMonomial>;

/// The vacuum vector `v` with coefficient 1.
pub fn vacuum_vector(ctx: &Context) -> HeisVector {
    let mut v = HeisVector::new();
    v.insert(HeisMonomial::vacuum(), ctx.one());
    v
}

/// Truncation box for module computations: factor exponents bounded by
/// `bound`, monomial lengths bounded by `maxlen`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportBox {
    pub bound: i64,
    pub maxlen: usize,
}

impl SupportBox {
    pub fn new(bound: i64, maxlen: usize) -> Result<Self> {
        if bound < 1 || maxlen < 1 {
            return Err(Error::Config("box bound and maxlen must be at least 1".into()));
        }
        Ok(SupportBox { bound, maxlen })
    }
}

impl Context {
    /// Rewrite an arbitrary word of negative Heisenberg factors into the
    /// ordered PBW basis. Each out-of-order swap emits the transposed word
    /// plus one strictly shorter word (the bracket term); central terms
    /// cannot arise because the exponent sum of two negatives is nonzero.
    pub fn straighten(&self, word: &[HeisFactor]) -> Result<HeisVector> {
        for (letter, a) in word {
            if !a.is_lex_negative() {
                return Err(Error::NotNegative);
            }
            if *letter == Letter::W && self.in_full_radical(a) {
                return Err(Error::WInRadical);
            }
        }
        let mut out = HeisVector::new();
        let mut pending: Vec<(Vec<HeisFactor>, Scalar)> = vec![(word.to_vec(), self.one())];
        while let Some((w, coeff)) = pending.pop() {
            let mut swap_at = None;
            for i in 0..w.len().saturating_sub(1) {
                if factor_cmp(&w[i], &w[i + 1])? == Ordering::Greater {
                    swap_at = Some(i);
                    break;
                }
            }
            match swap_at {
                None => {
                    add_to(&mut out, HeisMonomial { factors: w }, coeff);
                }
                Some(i) => {
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    pending.push((swapped, coeff.clone()));
                    if let Some((factor, xi)) = self.heis_commutator(&w[i], &w[i + 1])? {
                        let mut shorter = w.clone();
                        shorter.splice(i..=i + 1, [factor]);
                        pending.push((shorter, self.mul(&coeff, &xi)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[z_a, z_b]` for two Heisenberg factors with `a + b != 0`, as an
    /// optional replacement factor with its coefficient. `None` encodes a
    /// vanishing bracket (sum inside the radical).
    fn heis_commutator(
        &self,
        f1: &HeisFactor,
        f2: &HeisFactor,
    ) -> Result<Option<(HeisFactor, Scalar)>> {
        let sum = f1.1.add(&f2.1);
        // sum == 0 only reaches here with differing letters, where the
        // bracket vanishes; equal-letter contractions are central and are
        // handled by the caller
        if self.in_full_radical(&sum) {
            return Ok(None);
        }
        let xi = self.mul(
            &self.sigma(&f2.1, &f1.1),
            &self.sub(&self.f_map(&f1.1, &f2.1), &self.one()),
        );
        if xi.is_zero() {
            return Ok(None);
        }
        let letter = if f1.0 == f2.0 { Letter::W } else { Letter::U };
        Ok(Some(((letter, sum), xi)))
    }

    /// Module action of the Heisenberg subalgebra (plus central and
    /// derivation keys) on `H(lambda)`.
    pub fn act_heis(
        &self,
        g: &AlgebraElement,
        v: &HeisVector,
        lambda: &WeightCentral,
    ) -> Result<HeisVector> {
        for key in g.terms.keys() {
            match key {
                BasisKey::X(_) | BasisKey::Y(_) => {
                    return Err(Error::KindViolation(key.kind_name().into()));
                }
                BasisKey::U(a) | BasisKey::W(a) => {
                    if a.is_zero() {
                        return Err(Error::ZeroExponent);
                    }
                }
                BasisKey::C(_) | BasisKey::D(_) => {}
            }
        }
        let mut out = HeisVector::new();
        for (key, cg) in &g.terms {
            for (m, cm) in v {
                let part = self.act_heis_key(key, m, lambda)?;
                let scale = self.mul(cg, cm);
                for (mono, c) in part {
                    add_to(&mut out, mono, self.mul(&c, &scale));
                }
            }
        }
        Ok(out)
    }

    fn act_heis_key(
        &self,
        key: &BasisKey,
        m: &HeisMonomial,
        lambda: &WeightCentral,
    ) -> Result<HeisVector> {
        match key {
            BasisKey::C(i) => {
                let mut out = HeisVector::new();
                add_to(&mut out, m.clone(), lambda.value(*i - 1).clone());
                Ok(out)
            }
            BasisKey::D(i) => {
                let beta = m.degree(self.rank());
                let mut out = HeisVector::new();
                add_to(&mut out, m.clone(), self.from_i64(beta.0[*i - 1]));
                Ok(out)
            }
            BasisKey::U(b) | BasisKey::W(b) => {
                let letter = if matches!(key, BasisKey::U(_)) { Letter::U } else { Letter::W };
                self.act_factor((letter, b.clone()), m.factors(), lambda)
            }
            _ => unreachable!("checked in act_heis"),
        }
    }

    /// Act by a single Heisenberg factor on an ordered word.
    fn act_factor(
        &self,
        zb: HeisFactor,
        word: &[HeisFactor],
        lambda: &WeightCentral,
    ) -> Result<HeisVector> {
        if zb.1.is_lex_negative() {
            let mut full = Vec::with_capacity(word.len() + 1);
            full.push(zb);
            full.extend_from_slice(word);
            return self.straighten(&full);
        }
        // positive generator: commute rightwards and annihilate the vacuum
        let mut out = HeisVector::new();
        if word.is_empty() {
            return Ok(out);
        }
        let head = &word[0];
        let rest = &word[1..];
        // z_head * (z_b . rest)
        let tail_acted = self.act_factor(zb.clone(), rest, lambda)?;
        for (mono, c) in tail_acted {
            let mut w = Vec::with_capacity(mono.len() + 1);
            w.push(head.clone());
            w.extend_from_slice(mono.factors());
            for (m2, c2) in self.straighten(&w)? {
                add_to(&mut out, m2, self.mul(&c, &c2));
            }
        }
        // [z_b, z_head] . rest
        if zb.1 == head.1.neg() && zb.0 == head.0 {
            // central contraction through the character
            let mut coeff = self.mul(&self.from_i64(2), &self.sigma(&zb.1, &head.1));
            coeff = self.mul(&coeff, &lambda.pair(self, &zb.1));
            if !coeff.is_zero() {
                let rest_mono = HeisMonomial { factors: rest.to_vec() };
                add_to(&mut out, rest_mono, coeff);
            }
        } else if let Some((factor, xi)) = self.heis_commutator(&zb, head)? {
            if factor.1.is_lex_negative() {
                let mut w = Vec::with_capacity(rest.len() + 1);
                w.push(factor);
                w.extend_from_slice(rest);
                for (m2, c2) in self.straighten(&w)? {
                    add_to(&mut out, m2, self.mul(&xi, &c2));
                }
            } else {
                for (m2, c2) in self.act_factor(factor, rest, lambda)? {
                    add_to(&mut out, m2, self.mul(&xi, &c2));
                }
            }
        }
        Ok(out)
    }

    /// All ordered monomials of the given degree whose factors fit in the
    /// box. Degree zero yields exactly the vacuum.
    pub fn enumerate_basis(&self, beta: &LatticeVector, b: &SupportBox) -> Vec<HeisMonomial> {
        if beta.is_zero() {
            return vec![HeisMonomial::vacuum()];
        }
        if !beta.is_lex_negative() {
            return Vec::new();
        }
        let alphabet = self.factor_alphabet(b.bound);
        let mut out = Vec::new();
        let mut stack: Vec<HeisFactor> = Vec::new();
        self.enumerate_rec(beta, &alphabet, 0, b.maxlen, &mut stack, &mut out);
        out
    }

    /// Factors `(letter, a)` with `a` negative in the box, sorted in basis
    /// order; `w` letters only outside the radical.
    pub(crate) fn factor_alphabet(&self, bound: i64) -> Vec<HeisFactor> {
        let mut vecs = vec![Vec::new()];
        for _ in 0..self.rank() {
            let mut next = Vec::new();
            for v in &vecs {
                for x in -bound..=bound {
                    let mut v2 = v.clone();
                    v2.push(x);
                    next.push(v2);
                }
            }
            vecs = next;
        }
        let mut alphabet = Vec::new();
        for v in vecs {
            let a = LatticeVector::new(v);
            if a.is_lex_negative() {
                if !self.in_full_radical(&a) {
                    alphabet.push((Letter::W, a.clone()));
                }
                alphabet.push((Letter::U, a));
            }
        }
        alphabet.sort_by(|f1, f2| factor_cmp(f1, f2).expect("negative factors"));
        alphabet
    }

    fn enumerate_rec(
        &self,
        remaining: &LatticeVector,
        alphabet: &[HeisFactor],
        from: usize,
        room: usize,
        stack: &mut Vec<HeisFactor>,
        out: &mut Vec<HeisMonomial>,
    ) {
        if remaining.is_zero() {
            out.push(HeisMonomial { factors: stack.clone() });
            return;
        }
        if room == 0 || !remaining.is_lex_negative() {
            return;
        }
        let bound = remaining.0.iter().map(|x| x.abs()).max().unwrap_or(0);
        for idx in from..alphabet.len() {
            let (letter, a) = &alphabet[idx];
            // each coordinate moves by at most `bound_per_factor` per factor
            let bf = a.max_abs().max(1);
            let _ = bf;
            let next = LatticeVector(
                remaining.0.iter().zip(&a.0).map(|(r, x)| r - x).collect(),
            );
            // feasibility: |next_i| must be reachable with room-1 factors
            let max_step = alphabet
                .iter()
                .skip(idx)
                .map(|(_, v)| v.max_abs())
                .max()
                .unwrap_or(0);
            if next
                .0
                .iter()
                .any(|x| x.abs() > (room as i64 - 1) * max_step)
            {
                continue;
            }
            stack.push((*letter, a.clone()));
            self.enumerate_rec(&next, alphabet, idx, room - 1, stack, out);
            stack.pop();
        }
        let _ = bound;
    }
}

fn add_to(v: &mut HeisVector, m: HeisMonomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match v.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let merged = crate::scalar::merge_add(e.get(), &c);
            if merged.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = merged;
            }
        }
    }
}

/// The computed approximation of the distinguished submodule: per-degree
/// echelon bases of certified members, relative to a box.
#[derive(Debug, Clone)]
pub struct TildeH {
    pub components: BTreeMap<LatticeVector, Echelon<HeisMonomial>>,
    pub support: SupportBox,
}

impl TildeH {
    pub fn empty(support: SupportBox) -> Self {
        TildeH { components: BTreeMap::new(), support }
    }

    pub fn dims(&self) -> BTreeMap<LatticeVector, usize> {
        self.components
            .iter()
            .filter(|(_, e)| !e.is_empty())
            .map(|(k, e)| (k.clone(), e.dim()))
            .collect()
    }

    pub fn dim_at(&self, beta: &LatticeVector) -> usize {
        self.components.get(beta).map_or(0, Echelon::dim)
    }
}

impl Context {
    /// Generators of the submodule: box vectors in the lambda-orthogonal
    /// lattice that lie in some radical `R_r`.
    pub fn tilde_h_generators(
        &self,
        lambda: &WeightCentral,
        b: &SupportBox,
    ) -> Vec<LatticeVector> {
        let mut gens = BTreeSet::new();
        for r in 1..=self.rank() {
            let mut vecs = vec![Vec::new()];
            for _ in 0..r {
                let mut next = Vec::new();
                for v in &vecs {
                    for x in -b.bound..=b.bound {
                        let mut v2 = v.clone();
                        v2.push(x);
                        next.push(v2);
                    }
                }
                vecs = next;
            }
            for mut v in vecs {
                v.resize(self.rank(), 0);
                let a = LatticeVector::new(v);
                if a.is_zero() {
                    continue;
                }
                if self.in_radical(&a, r).unwrap_or(false) && self.in_lambda_lattice(lambda, &a) {
                    gens.insert(a);
                }
            }
        }
        gens.into_iter().collect()
    }

    /// Compute the box approximation of the distinguished submodule:
    /// seed with the Heisenberg strings along each generator direction,
    /// then close under all in-box Heisenberg generators until the graded
    /// dimensions are stable for a full sweep. Every vector kept is
    /// certified inside the submodule; outputs escaping the box are
    /// discarded, which is the documented truncation.
    pub fn tilde_h_components(
        &self,
        lambda: &WeightCentral,
        b: &SupportBox,
    ) -> Result<TildeH> {
        let mut tilde = TildeH::empty(*b);
        let gens = self.tilde_h_generators(lambda, b);
        // seeds: nonempty ordered monomials in the factors z_{l a}
        for a in &gens {
            let dir = if a.is_lex_negative() { a.clone() } else { a.neg() };
            let mut letters: Vec<HeisFactor> = Vec::new();
            let mut l = 1i64;
            loop {
                let c = dir.scale(l);
                if c.max_abs() > b.bound {
                    break;
                }
                if !self.in_full_radical(&c) {
                    letters.push((Letter::W, c.clone()));
                }
                letters.push((Letter::U, c));
                l += 1;
            }
            letters.sort_by(|f1, f2| factor_cmp(f1, f2).expect("negative factors"));
            let mut stack = Vec::new();
            let mut monos = Vec::new();
            seed_monomials(&letters, 0, b.maxlen, &mut stack, &mut monos);
            for m in monos {
                let degree = m.degree(self.rank());
                let mut v = HeisVector::new();
                add_to(&mut v, m, self.one());
                tilde
                    .components
                    .entry(degree)
                    .or_insert_with(Echelon::new)
                    .insert(self, &v);
            }
        }
        if gens.is_empty() {
            return Ok(tilde);
        }
        // worklist closure: acting on a generating set of each span is
        // enough, so only newly inserted vectors are expanded
        let generators = self.heis_generator_elements(b.bound);
        let mut capacities: BTreeMap<LatticeVector, usize> = BTreeMap::new();
        let mut queue: Vec<(LatticeVector, HeisVector)> = tilde
            .components
            .iter()
            .flat_map(|(d, e)| e.rows().iter().map(move |r| (d.clone(), r.clone())))
            .collect();
        while let Some((degree, v)) = queue.pop() {
            for (gdeg, g) in &generators {
                let w = self.act_heis(g, &v, lambda)?;
                if w.is_empty() || !w.keys().all(|m| m.fits(b)) {
                    continue;
                }
                let target = degree.add(gdeg);
                let cap = *capacities
                    .entry(target.clone())
                    .or_insert_with(|| self.enumerate_basis(&target, b).len());
                let slot = tilde.components.entry(target.clone()).or_insert_with(Echelon::new);
                if slot.dim() >= cap {
                    continue;
                }
                if slot.insert(self, &w) {
                    queue.push((target, w));
                }
            }
        }
        tilde.components.retain(|_, e| !e.is_empty());
        Ok(tilde)
    }

    /// Counts of in-box basis monomials grouped by degree (one recursive
    /// enumeration over the whole box).
    pub fn heis_degree_counts(&self, b: &SupportBox) -> BTreeMap<LatticeVector, usize> {
        let alphabet = self.factor_alphabet(b.bound);
        let mut counts = BTreeMap::new();
        counts.insert(LatticeVector::zero(self.rank()), 1usize);
        let mut stack = Vec::new();
        self.degree_count_rec(&alphabet, 0, b.maxlen, &mut stack, &mut counts);
        counts
    }

    fn degree_count_rec(
        &self,
        alphabet: &[HeisFactor],
        from: usize,
        room: usize,
        stack: &mut Vec<HeisFactor>,
        counts: &mut BTreeMap<LatticeVector, usize>,
    ) {
        if room == 0 {
            return;
        }
        for idx in from..alphabet.len() {
            stack.push(alphabet[idx].clone());
            let degree = stack
                .iter()
                .fold(LatticeVector::zero(self.rank()), |acc, (_, a)| acc.add(a));
            *counts.entry(degree).or_insert(0) += 1;
            self.degree_count_rec(alphabet, idx, room - 1, stack, counts);
            stack.pop();
        }
    }

    /// All in-box Heisenberg generators (both signs) paired with their
    /// degrees.
    pub(crate) fn heis_generator_elements(
        &self,
        bound: i64,
    ) -> Vec<(LatticeVector, AlgebraElement)> {
        let mut vecs = vec![Vec::new()];
        for _ in 0..self.rank() {
            let mut next = Vec::new();
            for v in &vecs {
                for x in -bound..=bound {
                    let mut v2 = v.clone();
                    v2.push(x);
                    next.push(v2);
                }
            }
            vecs = next;
        }
        let mut out = Vec::new();
        for v in vecs {
            let a = LatticeVector::new(v);
            if a.is_zero() {
                continue;
            }
            out.push((a.clone(), AlgebraElement::generator(self, BasisKey::U(a.clone()))));
            if !self.in_full_radical(&a) {
                out.push((a.clone(), AlgebraElement::generator(self, BasisKey::W(a))));
            }
        }
        out
    }

    /// Per-degree singular vectors of `H(lambda)` (or of the quotient by
    /// the computed submodule): vectors annihilated by every raising
    /// generator with exponents bounded by `raise_bound`, modulo the
    /// submodule. Degree zero always reports the highest-weight line.
    pub fn singular_vectors(
        &self,
        lambda: &WeightCentral,
        quotient_by: Option<&TildeH>,
        b: &SupportBox,
        raise_bound: i64,
    ) -> Result<BTreeMap<LatticeVector, Vec<HeisVector>>> {
        // raising generators
        let mut raising: Vec<(LatticeVector, AlgebraElement)> = Vec::new();
        for (a, g) in self.heis_generator_elements(raise_bound) {
            if a.is_lex_positive() {
                raising.push((a, g));
            }
        }
        // degrees to scan: zero plus the negative box
        let mut degrees = vec![LatticeVector::zero(self.rank())];
        let mut vecs = vec![Vec::new()];
        for _ in 0..self.rank() {
            let mut next = Vec::new();
            for v in &vecs {
                for x in -b.bound..=b.bound {
                    let mut v2 = v.clone();
                    v2.push(x);
                    next.push(v2);
                }
            }
            vecs = next;
        }
        for v in vecs {
            let a = LatticeVector::new(v);
            if a.is_lex_negative() {
                degrees.push(a);
            }
        }
        degrees.sort();
        degrees.reverse();

        let empty = TildeH::empty(*b);
        let tilde = quotient_by.unwrap_or(&empty);
        let mut out = BTreeMap::new();
        for beta in degrees {
            let basis = self.enumerate_basis(&beta, b);
            if basis.is_empty() {
                continue;
            }
            // columns: stacked residuals of all raising actions
            #[derive(PartialEq, Eq, PartialOrd, Ord, Clone)]
            struct RowKey(usize, HeisMonomial);
            let mut columns: Vec<SparseVec<RowKey>> = Vec::new();
            for m in &basis {
                let mut v = HeisVector::new();
                add_to(&mut v, m.clone(), self.one());
                let mut col: SparseVec<RowKey> = SparseVec::new();
                for (gi, (gdeg, g)) in raising.iter().enumerate() {
                    let acted = self.act_heis(g, &v, lambda)?;
                    if acted.is_empty() {
                        continue;
                    }
                    let target = beta.add(gdeg);
                    let residual = match tilde.components.get(&target) {
                        Some(e) => e.reduce(self, &acted),
                        None => acted,
                    };
                    for (mono, c) in residual {
                        col.insert(RowKey(gi, mono), c);
                    }
                }
                columns.push(col);
            }
            let kernel = linalg::kernel_basis(self, &columns);
            if kernel.is_empty() {
                continue;
            }
            // quotient the kernel by the submodule part at this degree
            let mut reps: Echelon<HeisMonomial> = Echelon::new();
            let tilde_slot = tilde.components.get(&beta);
            let mut found = Vec::new();
            for coeffs in kernel {
                let mut v = HeisVector::new();
                for (m, c) in basis.iter().zip(coeffs) {
                    add_to(&mut v, m.clone(), c);
                }
                let reduced = match tilde_slot {
                    Some(e) => e.reduce(self, &v),
                    None => v,
                };
                if !reduced.is_empty() && reps.insert(self, &reduced) {
                    found.push(reps.rows().last().cloned().expect("just inserted"));
                }
            }
            // report canonical representatives (the reduced rows)
            let reps: Vec<HeisVector> = reps.rows().to_vec();
            if !reps.is_empty() {
                out.insert(beta, reps);
            }
            let _ = found;
        }
        Ok(out)
    }
}

fn seed_monomials(
    letters: &[HeisFactor],
    from: usize,
    room: usize,
    stack: &mut Vec<HeisFactor>,
    out: &mut Vec<HeisMonomial>,
) {
    if !stack.is_empty() {
        out.push(HeisMonomial { factors: stack.clone() });
    }
    if room == 0 {
        return;
    }
    for idx in from..letters.len() {
        stack.push(letters[idx].clone());
        seed_monomials(letters, idx, room - 1, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ScalarConfig;

    fn lv(coords: &[i64]) -> LatticeVector {
        LatticeVector::new(coords.to_vec())
    }

    fn cyclo23() -> Context {
        Context::new(ScalarConfig::cyclotomic2(3, 1)).unwrap()
    }

    fn rational1() -> Context {
        Context::new(ScalarConfig::rational(1)).unwrap()
    }

    fn single(ctx: &Context, factors: Vec<HeisFactor>) -> HeisVector {
        let mut v = HeisVector::new();
        add_to(&mut v, HeisMonomial::new(ctx, factors).unwrap(), ctx.one());
        v
    }

    #[test]
    fn straighten_ordered_word_is_identity() {
        let ctx = cyclo23();
        let word = vec![(Letter::U, lv(&[0, -1])), (Letter::U, lv(&[-1, 0]))];
        let got = ctx.straighten(&word).unwrap();
        assert_eq!(got, single(&ctx, word));
    }

    #[test]
    fn straighten_rank_one_swap() {
        // n=1: [u_a, u_b] = 0 off-center, so the swap is clean
        let ctx = rational1();
        let got = ctx
            .straighten(&[(Letter::U, lv(&[-2])), (Letter::U, lv(&[-1]))])
            .unwrap();
        assert_eq!(
            got,
            single(&ctx, vec![(Letter::U, lv(&[-1])), (Letter::U, lv(&[-2]))])
        );
    }

    #[test]
    fn straighten_single_swap_with_bracket_term() {
        // (0,-1) precedes (-1,0), so the reversed word straightens with one
        // bracket term whose coefficient comes from the structure table.
        let ctx = cyclo23();
        let word = vec![(Letter::U, lv(&[-1, 0])), (Letter::U, lv(&[0, -1]))];
        let got = ctx.straighten(&word).unwrap();
        let xi = ctx.mul(
            &ctx.sigma(&lv(&[0, -1]), &lv(&[-1, 0])),
            &ctx.sub(&ctx.f_map(&lv(&[-1, 0]), &lv(&[0, -1])), &ctx.one()),
        );
        // cross-check the coefficient against the bracket oracle
        let oracle = ctx
            .bracket_oracle(
                &AlgebraElement::generator(&ctx, BasisKey::U(lv(&[-1, 0]))),
                &AlgebraElement::generator(&ctx, BasisKey::U(lv(&[0, -1]))),
            )
            .unwrap();
        assert_eq!(
            oracle,
            AlgebraElement::single(BasisKey::W(lv(&[-1, -1])), xi.clone())
        );
        let mut want = single(
            &ctx,
            vec![(Letter::U, lv(&[0, -1])), (Letter::U, lv(&[-1, 0]))],
        );
        add_to(
            &mut want,
            HeisMonomial::new(&ctx, vec![(Letter::W, lv(&[-1, -1]))]).unwrap(),
            xi,
        );
        assert_eq!(got, want);
        assert!(!ctx.f_map(&lv(&[-1, 0]), &lv(&[0, -1])).is_zero());
    }

    #[test]
    fn straighten_is_confluent() {
        // different swap schedules must agree; compare against acting
        // factor by factor from the right
        let ctx = cyclo23();
        let lambda = WeightCentral::from_i64(&ctx, &[1, -1]).unwrap();
        let words = [
            vec![(Letter::U, lv(&[-1, 0])), (Letter::W, lv(&[0, -1])), (Letter::U, lv(&[-1, -1]))],
            vec![(Letter::W, lv(&[-1, -1])), (Letter::U, lv(&[-1, 0])), (Letter::W, lv(&[0, -1]))],
            vec![(Letter::U, lv(&[1, -1])), (Letter::U, lv(&[-1, 0])), (Letter::W, lv(&[1, -1]))],
        ];
        for word in words {
            let direct = ctx.straighten(&word).unwrap();
            // build by repeated left multiplication
            let mut acc = vacuum_vector(&ctx);
            for factor in word.iter().rev() {
                let g = AlgebraElement::generator(&ctx, factor.0.key(factor.1.clone()));
                acc = ctx.act_heis(&g, &acc, &lambda).unwrap();
            }
            assert_eq!(direct, acc);
            // degree preservation
            let total: LatticeVector =
                word.iter().fold(lv(&[0, 0]), |acc, (_, a)| acc.add(a));
            for m in direct.keys() {
                assert_eq!(m.degree(2), total);
            }
        }
    }

    #[test]
    fn act_examples() {
        // affine relation: u_1 u_{-1} v = 2 lambda(c_1) v for n = 1
        let ctx = rational1();
        let lambda = WeightCentral::from_i64(&ctx, &[1]).unwrap();
        let um1 = single(&ctx, vec![(Letter::U, lv(&[-1]))]);
        let up1 = AlgebraElement::generator(&ctx, BasisKey::U(lv(&[1])));
        let got = ctx.act_heis(&up1, &um1, &lambda).unwrap();
        let mut want = HeisVector::new();
        add_to(&mut want, HeisMonomial::vacuum(), ctx.from_i64(2));
        assert_eq!(got, want);

        // central and derivation actions on the vacuum
        let ctx2 = cyclo23();
        let lambda2 = WeightCentral::from_i64(&ctx2, &[1, -1]).unwrap();
        let v = vacuum_vector(&ctx2);
        let c2 = AlgebraElement::generator(&ctx2, BasisKey::C(2));
        let got = ctx2.act_heis(&c2, &v, &lambda2).unwrap();
        assert_eq!(got.get(&HeisMonomial::vacuum()), Some(&ctx2.from_i64(-1)));
        let d1 = AlgebraElement::generator(&ctx2, BasisKey::D(1));
        assert!(ctx2.act_heis(&d1, &v, &lambda2).unwrap().is_empty());

        // errors
        let x = AlgebraElement::generator(&ctx2, BasisKey::X(lv(&[0, 0])));
        assert!(matches!(
            ctx2.act_heis(&x, &v, &lambda2),
            Err(Error::KindViolation(_))
        ));
        let h = AlgebraElement::generator(&ctx2, BasisKey::U(lv(&[0, 0])));
        assert!(matches!(ctx2.act_heis(&h, &v, &lambda2), Err(Error::ZeroExponent)));
    }

    #[test]
    fn derivation_eigenvalue_is_the_degree() {
        let ctx = cyclo23();
        let lambda = WeightCentral::from_i64(&ctx, &[1, -1]).unwrap();
        let m = single(
            &ctx,
            vec![(Letter::W, lv(&[-1, -1])), (Letter::U, lv(&[0, -1]))],
        );
        for (i, expect) in [(1usize, -1i64), (2, -2)] {
            let d = AlgebraElement::generator(&ctx, BasisKey::D(i));
            let got = ctx.act_heis(&d, &m, &lambda).unwrap();
            let want: HeisVector = m
                .iter()
                .map(|(k, _)| (k.clone(), ctx.from_i64(expect)))
                .collect();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn degree_of_examples() {
        let ctx = cyclo23();
        assert_eq!(HeisMonomial::vacuum().degree(2), lv(&[0, 0]));
        let m = HeisMonomial::new(
            &ctx,
            vec![(Letter::W, lv(&[-1, -1])), (Letter::U, lv(&[-1, 0]))],
        )
        .unwrap();
        assert_eq!(m.degree(2), lv(&[-2, -1]));
        // out-of-order factors are rejected
        assert!(HeisMonomial::new(
            &ctx,
            vec![(Letter::U, lv(&[-1, 0])), (Letter::W, lv(&[-1, -1]))],
        )
        .is_err());
    }

    #[test]
    fn enumerate_rank_one_partitions() {
        let ctx = rational1();
        let b = SupportBox::new(3, 3).unwrap();
        // partitions of 3: 1+1+1, 1+2, 3 (no w letters in rank one)
        let monos = ctx.enumerate_basis(&lv(&[-3]), &b);
        assert_eq!(monos.len(), 3);
        // with parts bounded by 2: only 1+1+1 and 1+2
        let b2 = SupportBox::new(2, 4).unwrap();
        assert_eq!(ctx.enumerate_basis(&lv(&[-3]), &b2).len(), 2);
        // degree zero is the vacuum
        assert_eq!(ctx.enumerate_basis(&lv(&[0]), &b), vec![HeisMonomial::vacuum()]);
    }

    #[test]
    fn enumerate_mixed_letters() {
        let ctx = cyclo23();
        let b = SupportBox::new(1, 2).unwrap();
        // degree (0,-1): singles {u,w}(0,-1) and pairs {u,w}(1,-1){u,w}(-1,0)
        let monos = ctx.enumerate_basis(&lv(&[0, -1]), &b);
        assert_eq!(monos.len(), 6, "{monos:?}");
    }

    #[test]
    fn tilde_h_seeds_and_properness() {
        let ctx = cyclo23();
        let lambda = WeightCentral::from_i64(&ctx, &[1, -1]).unwrap();
        let b = SupportBox::new(3, 3).unwrap();
        let gens = ctx.tilde_h_generators(&lambda, &b);
        assert!(gens.contains(&lv(&[3, 3])));
        assert!(gens.contains(&lv(&[-3, -3])));
        let tilde = ctx.tilde_h_components(&lambda, &b).unwrap();
        // contains the string u_{(-3,-3)} v at its degree
        let slot = tilde.components.get(&lv(&[-3, -3])).expect("degree (-3,-3)");
        let want = single(&ctx, vec![(Letter::U, lv(&[-3, -3]))]);
        assert!(slot.contains(&ctx, &want));
        // the degree-zero slot is empty: the submodule is proper
        assert_eq!(tilde.dim_at(&lv(&[0, 0])), 0);
    }

    #[test]
    fn tilde_h_empty_when_no_generators() {
        // generic backend, lambda(c) = (1, 0): the orthogonal lattice meets
        // no radical direction, so the submodule approximation is empty
        let ctx = Context::new(ScalarConfig::generic(2)).unwrap();
        let lambda = WeightCentral::from_i64(&ctx, &[1, 0]).unwrap();
        let b = SupportBox::new(2, 2).unwrap();
        assert!(ctx.tilde_h_generators(&lambda, &b).is_empty());
        let tilde = ctx.tilde_h_components(&lambda, &b).unwrap();
        assert!(tilde.components.is_empty());
    }

    #[test]
    fn singular_vector_at_zero_central_charge() {
        let ctx = rational1();
        let lambda = WeightCentral::from_i64(&ctx, &[0]).unwrap();
        let b = SupportBox::new(2, 2).unwrap();
        let sing = ctx.singular_vectors(&lambda, None, &b, 2).unwrap();
        // u_{-1} v is singular since the central charge vanishes
        let at_m1 = sing.get(&lv(&[-1])).expect("degree -1");
        let want = single(&ctx, vec![(Letter::U, lv(&[-1]))]);
        assert_eq!(at_m1, &vec![want]);
        // the highest-weight line is always reported
        assert!(sing.contains_key(&lv(&[0])));
    }

    #[test]
    fn no_singular_vectors_for_nonzero_charge_rank_one() {
        let ctx = rational1();
        let lambda = WeightCentral::from_i64(&ctx, &[1]).unwrap();
        let b = SupportBox::new(2, 3).unwrap();
        let sing = ctx.singular_vectors(&lambda, None, &b, 2).unwrap();
        let below: Vec<_> = sing.keys().filter(|k| k.is_lex_negative()).collect();
        assert!(below.is_empty(), "unexpected singular vectors at {below:?}");
        assert!(sing.contains_key(&lv(&[0])));
    }

    #[test]
    fn representation_property_sampled() {
        let ctx = cyclo23();
        let lambda = WeightCentral::from_i64(&ctx, &[1, -1]).unwrap();
        let gens = ctx.heis_generator_elements(1);
        let vectors = [
            vacuum_vector(&ctx),
            single(&ctx, vec![(Letter::U, lv(&[0, -1]))]),
            single(&ctx, vec![(Letter::W, lv(&[1, -1])), (Letter::U, lv(&[-1, 0]))]),
        ];
        for (_, g1) in gens.iter().step_by(3) {
            for (_, g2) in gens.iter().step_by(2) {
                let br = ctx.bracket(g2, g1).unwrap();
                for v in &vectors {
                    let lhs = ctx
                        .act_heis(g2, &ctx.act_heis(g1, v, &lambda).unwrap(), &lambda)
                        .unwrap();
                    let rhs_swap = ctx
                        .act_heis(g1, &ctx.act_heis(g2, v, &lambda).unwrap(), &lambda)
                        .unwrap();
                    let mut diff = lhs;
                    for (m, c) in rhs_swap {
                        add_to(&mut diff, m, ctx.neg(&c));
                    }
                    let want = ctx.act_heis(&br, v, &lambda).unwrap();
                    assert_eq!(diff, want);
                }
            }
        }
    }
}
