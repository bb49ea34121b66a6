//! Scalar backends: exact arithmetic in which every identity of the crate
//! is a decidable equality of canonical forms.
//!
//! Three backends are supported:
//!
//! * `Rational` — plain `Q`; all torus parameters `q_ij` equal 1.
//! * `Cyclotomic` — `Q(z_N)` with `q_ij = z_N^{m_ij}` for a configured
//!   skew exponent matrix `m`. Elements are kept reduced modulo the N-th
//!   cyclotomic polynomial, so payload equality is field equality.
//! * `GenericLaurent` — the Laurent ring `Q[q_ij^{±1}, i<j]` with one
//!   formal parameter per unordered pair; `q_ji` is represented as the
//!   inverse exponent, which makes `q_ij q_ji = 1` structural.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{self, LatticeVector};

/// Which exact coefficient domain a session computes in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Rational,
    Cyclotomic,
    GenericLaurent,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Rational => "rational",
            Backend::Cyclotomic => "cyclotomic",
            Backend::GenericLaurent => "generic",
        }
    }
}

/// Backend configuration: rank of the lattice plus, for the cyclotomic
/// backend, the order `N` of the root of unity and the exponent matrix
/// `m` with `q_ij = z_N^{m_ij}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarConfig {
    pub backend: Backend,
    /// Rank `n` of the lattice `Z^n`.
    pub n: usize,
    /// Order of the root of unity (cyclotomic backend; 1 otherwise).
    pub order: u32,
    /// `n x n` integer exponent matrix; skew-symmetric mod `order` with
    /// zero diagonal. Ignored by the other backends.
    pub exponents: Vec<Vec<i64>>,
}

impl ScalarConfig {
    pub fn rational(n: usize) -> Self {
        ScalarConfig { backend: Backend::Rational, n, order: 1, exponents: vec![vec![0; n]; n] }
    }

    pub fn generic(n: usize) -> Self {
        ScalarConfig { backend: Backend::GenericLaurent, n, order: 1, exponents: vec![vec![0; n]; n] }
    }

    pub fn cyclotomic(n: usize, order: u32, exponents: Vec<Vec<i64>>) -> Self {
        ScalarConfig { backend: Backend::Cyclotomic, n, order, exponents }
    }

    /// Cyclotomic shortcut for `n = 2` with a single exponent `m_12 = m`.
    pub fn cyclotomic2(order: u32, m: i64) -> Self {
        Self::cyclotomic(2, order, vec![vec![0, m], vec![-m, 0]])
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Config("rank n must be at least 1".into()));
        }
        if self.order == 0 {
            return Err(Error::Config("order N must be at least 1".into()));
        }
        if self.backend == Backend::Cyclotomic {
            let n = self.n;
            let nn = self.order as i64;
            if self.exponents.len() != n || self.exponents.iter().any(|row| row.len() != n) {
                return Err(Error::Config(format!("exponent matrix must be {n}x{n}")));
            }
            for i in 0..n {
                if self.exponents[i][i].rem_euclid(nn) != 0 {
                    return Err(Error::Config("exponent matrix must have zero diagonal mod N".into()));
                }
                for j in 0..n {
                    if (self.exponents[i][j] + self.exponents[j][i]).rem_euclid(nn) != 0 {
                        return Err(Error::Config("exponent matrix must be skew-symmetric mod N".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exponent vector of a Laurent monomial: one entry per unordered pair
/// `i < j`, in the order (1,2), (1,3), ..., (1,n), (2,3), ...
type PairExp = Vec<i64>;

/// A canonical scalar. Equality of payloads is equality in the backend
/// domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    /// Coefficients of 1, z, z^2, ... with degree < phi(N); the vector has
    /// length max(phi(N), 1) and is owned by a context with matching N.
    Cyclotomic(Vec<BigRational>),
    /// Sparse map from pair-exponent vectors to rational coefficients.
    Laurent(BTreeMap<PairExp, BigRational>),
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Rational(_) => Backend::Rational,
            Scalar::Cyclotomic(_) => Backend::Cyclotomic,
            Scalar::Laurent(_) => Backend::GenericLaurent,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic(c) => c.iter().all(|x| x.is_zero()),
            Scalar::Laurent(t) => t.is_empty(),
        }
    }

    /// The rational value of a constant scalar, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Cyclotomic(c) => {
                if c.iter().skip(1).all(|x| x.is_zero()) {
                    Some(c[0].clone())
                } else {
                    None
                }
            }
            Scalar::Laurent(t) => {
                if t.is_empty() {
                    Some(BigRational::zero())
                } else if t.len() == 1 {
                    let (k, v) = t.iter().next().unwrap();
                    if k.iter().all(|&e| e == 0) {
                        Some(v.clone())
                    } else {
                        None
                    }
                } else {
                    None
                }
            }
        }
    }
}

/// Session-wide context: validated configuration plus the precomputed
/// cyclotomic modulus and radical sublattice bases.
///
/// All operations on scalars, lattice vectors, torus elements, algebra
/// elements and module vectors go through a shared `&Context`.
#[derive(Debug, Clone)]
pub struct Context {
    cfg: ScalarConfig,
    /// Monic N-th cyclotomic polynomial, ascending coefficients.
    cyclo_mod: Vec<BigRational>,
    /// Degree of the cyclotomic field extension, phi(N).
    phi_deg: usize,
    /// Number of unordered pairs i<j (generic backend variables).
    npairs: usize,
    /// Canonical basis of R_r for r = 1..=n (entry r-1).
    radical_bases: Vec<Vec<LatticeVector>>,
}

impl Context {
    pub fn new(cfg: ScalarConfig) -> Result<Context> {
        cfg.validate()?;
        let (cyclo_mod, phi_deg) = if cfg.backend == Backend::Cyclotomic {
            let m = cyclotomic_polynomial(cfg.order);
            let d = m.len() - 1;
            (m, d.max(1))
        } else {
            (vec![-BigRational::one(), BigRational::one()], 1)
        };
        let npairs = cfg.n * (cfg.n - 1) / 2;
        let radical_bases = (1..=cfg.n)
            .map(|r| lattice::radical_basis_raw(&cfg, r))
            .collect();
        Ok(Context { cfg, cyclo_mod, phi_deg, npairs, radical_bases })
    }

    pub fn config(&self) -> &ScalarConfig {
        &self.cfg
    }

    pub fn backend(&self) -> Backend {
        self.cfg.backend
    }

    pub fn rank(&self) -> usize {
        self.cfg.n
    }

    pub fn order(&self) -> u32 {
        self.cfg.order
    }

    pub(crate) fn radical_bases(&self) -> &[Vec<LatticeVector>] {
        &self.radical_bases
    }

    pub(crate) fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j <= self.cfg.n);
        // pairs (1,2),(1,3),...,(1,n),(2,3),... with 1-based i, j
        let n = self.cfg.n;
        (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
    }

    pub fn zero(&self) -> Scalar {
        match self.cfg.backend {
            Backend::Rational => Scalar::Rational(BigRational::zero()),
            Backend::Cyclotomic => Scalar::Cyclotomic(vec![BigRational::zero(); self.phi_deg]),
            Backend::GenericLaurent => Scalar::Laurent(BTreeMap::new()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, r: BigRational) -> Scalar {
        match self.cfg.backend {
            Backend::Rational => Scalar::Rational(r),
            Backend::Cyclotomic => {
                let mut c = vec![BigRational::zero(); self.phi_deg];
                c[0] = r;
                Scalar::Cyclotomic(c)
            }
            Backend::GenericLaurent => {
                let mut t = BTreeMap::new();
                if !r.is_zero() {
                    t.insert(vec![0; self.npairs], r);
                }
                Scalar::Laurent(t)
            }
        }
    }

    pub fn from_i64(&self, k: i64) -> Scalar {
        self.from_rational(BigRational::from(BigInt::from(k)))
    }

    /// `z_N^k` in the cyclotomic backend.
    pub fn root_of_unity(&self, k: i64) -> Result<Scalar> {
        if self.cfg.backend != Backend::Cyclotomic {
            return Err(Error::BackendMismatch {
                expected: "cyclotomic",
                got: self.cfg.backend.name(),
            });
        }
        let n = self.cfg.order as i64;
        let k = k.rem_euclid(n) as usize;
        let mut c = vec![BigRational::zero(); (self.cfg.order as usize).max(self.phi_deg)];
        c[k] = BigRational::one();
        Ok(Scalar::Cyclotomic(self.reduce_cyclotomic(c)))
    }

    /// The Laurent monomial `q_ij^e` (generic backend); `i < j` required.
    pub fn laurent_generator(&self, i: usize, j: usize, e: i64) -> Result<Scalar> {
        if self.cfg.backend != Backend::GenericLaurent {
            return Err(Error::BackendMismatch {
                expected: "generic",
                got: self.cfg.backend.name(),
            });
        }
        if i == 0 || j == 0 || i >= j || j > self.cfg.n {
            return Err(Error::Config(format!("q{i}{j} is not a generator (need 1 <= i < j <= n)")));
        }
        let mut exp = vec![0; self.npairs];
        exp[self.pair_index(i, j)] = e;
        let mut t = BTreeMap::new();
        t.insert(exp, BigRational::one());
        Ok(Scalar::Laurent(t))
    }

    fn assert_same(&self, x: &Scalar) {
        assert_eq!(
            x.backend(),
            self.cfg.backend,
            "scalar backend {:?} does not match context backend {:?}",
            x.backend(),
            self.cfg.backend
        );
    }

    /// Reduce a coefficient vector modulo the N-th cyclotomic polynomial,
    /// returning exactly `phi_deg` coefficients.
    fn reduce_cyclotomic(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.cyclo_mod.len() - 1;
        while c.len() > d {
            let top = c.pop().unwrap();
            if !top.is_zero() {
                let k = c.len() - d;
                // subtract top * x^k * (cyclo_mod - x^d); cyclo_mod is monic
                for (i, m) in self.cyclo_mod.iter().take(d).enumerate() {
                    let v = &top * m;
                    c[k + i] -= v;
                }
            }
        }
        c.resize(self.phi_deg, BigRational::zero());
        c
    }

    pub fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.assert_same(x);
        self.assert_same(y);
        match (x, y) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                Scalar::Cyclotomic(a.iter().zip(b).map(|(p, q)| p + q).collect())
            }
            (Scalar::Laurent(a), Scalar::Laurent(b)) => {
                let mut t = a.clone();
                for (k, v) in b {
                    let entry = t.entry(k.clone()).or_insert_with(BigRational::zero);
                    *entry += v;
                    if entry.is_zero() {
                        t.remove(k);
                    }
                }
                Scalar::Laurent(t)
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &Scalar) -> Scalar {
        self.assert_same(x);
        match x {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(a.iter().map(|p| -p).collect()),
            Scalar::Laurent(a) => {
                Scalar::Laurent(a.iter().map(|(k, v)| (k.clone(), -v)).collect())
            }
        }
    }

    pub fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.assert_same(x);
        self.assert_same(y);
        match (x, y) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                let mut prod = vec![BigRational::zero(); a.len() + b.len()];
                for (i, p) in a.iter().enumerate() {
                    if p.is_zero() {
                        continue;
                    }
                    for (j, q) in b.iter().enumerate() {
                        if q.is_zero() {
                            continue;
                        }
                        prod[i + j] += p * q;
                    }
                }
                Scalar::Cyclotomic(self.reduce_cyclotomic(prod))
            }
            (Scalar::Laurent(a), Scalar::Laurent(b)) => {
                let mut t: BTreeMap<PairExp, BigRational> = BTreeMap::new();
                for (ka, va) in a {
                    for (kb, vb) in b {
                        let k: PairExp = ka.iter().zip(kb).map(|(p, q)| p + q).collect();
                        let entry = t.entry(k).or_insert_with(BigRational::zero);
                        *entry += va * vb;
                    }
                }
                t.retain(|_, v| !v.is_zero());
                Scalar::Laurent(t)
            }
            _ => unreachable!(),
        }
    }

    pub fn mul_assign(&self, x: &mut Scalar, y: &Scalar) {
        *x = self.mul(x, y);
    }

    pub fn add_assign(&self, x: &mut Scalar, y: &Scalar) {
        *x = self.add(x, y);
    }

    /// Exact inverse. In the generic backend only monomials (single-term
    /// elements) are invertible.
    pub fn inv(&self, x: &Scalar) -> Result<Scalar> {
        self.assert_same(x);
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match x {
            Scalar::Rational(a) => Ok(Scalar::Rational(a.recip())),
            Scalar::Cyclotomic(a) => {
                let inv = poly_inverse_mod(a, &self.cyclo_mod)
                    .ok_or(Error::DivisionByZero)?;
                Ok(Scalar::Cyclotomic(self.reduce_cyclotomic(inv)))
            }
            Scalar::Laurent(t) => {
                if t.len() != 1 {
                    return Err(Error::NonInvertible(
                        "generic Laurent inverse is defined for monomials only".into(),
                    ));
                }
                let (k, v) = t.iter().next().unwrap();
                let mut out = BTreeMap::new();
                out.insert(k.iter().map(|e| -e).collect::<PairExp>(), v.recip());
                Ok(Scalar::Laurent(out))
            }
        }
    }

    /// Integer power; negative exponents go through `inv`.
    pub fn pow(&self, x: &Scalar, e: i64) -> Result<Scalar> {
        if e == 0 {
            return Ok(self.one());
        }
        let base = if e < 0 { self.inv(x)? } else { x.clone() };
        let mut acc = self.one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            k >>= 1;
            if k > 0 {
                b = self.mul(&b, &b);
            }
        }
        Ok(acc)
    }

    /// Halve a scalar (the bracket table divides by 2; all backends have
    /// characteristic zero, so this is always defined).
    pub fn halve(&self, x: &Scalar) -> Scalar {
        let half = self.from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)));
        self.mul(x, &half)
    }
}

/// Add two canonical scalars of the same backend without a context; used by
/// the sparse containers when merging coefficients of equal keys.
pub(crate) fn merge_add(x: &Scalar, y: &Scalar) -> Scalar {
    match (x, y) {
        (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
        (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
            Scalar::Cyclotomic(a.iter().zip(b).map(|(p, q)| p + q).collect())
        }
        (Scalar::Laurent(a), Scalar::Laurent(b)) => {
            let mut t = a.clone();
            for (k, v) in b {
                let entry = t.entry(k.clone()).or_insert_with(BigRational::zero);
                *entry += v;
                if entry.is_zero() {
                    t.remove(k);
                }
            }
            Scalar::Laurent(t)
        }
        _ => panic!("mixed scalar backends in one container"),
    }
}

/// Monic cyclotomic polynomial `Phi_N`, ascending coefficients, computed by
/// dividing `x^N - 1` by the cyclotomic polynomials of the proper divisors.
fn cyclotomic_polynomial(n: u32) -> Vec<BigRational> {
    if n == 1 {
        return vec![-BigRational::one(), BigRational::one()];
    }
    // x^n - 1
    let mut num = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    let mut quo = num;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            quo = poly_div_exact(&quo, &phi_d);
        }
    }
    quo
}

/// Exact division of polynomials over Q (ascending coefficients); panics if
/// the division is not exact, which cannot happen for cyclotomic factors.
fn poly_div_exact(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let mut rem: Vec<BigRational> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    assert!(!lead.is_zero());
    let mut quo = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
    for k in (dd..rem.len()).rev() {
        let c = &rem[k] / &lead;
        if !c.is_zero() {
            quo[k - dd] = c.clone();
            for (i, d) in den.iter().enumerate() {
                let v = &c * d;
                rem[k - dd + i] -= v;
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    while quo.len() > 1 && quo.last().unwrap().is_zero() {
        quo.pop();
    }
    quo
}

/// Inverse of `a` modulo the monic polynomial `m`, via the extended
/// Euclidean algorithm over Q[x]. Returns None when gcd(a, m) != 1.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
        while p.len() > 1 && p.last().unwrap().is_zero() {
            p.pop();
        }
        p
    }
    fn is_zero_poly(p: &[BigRational]) -> bool {
        p.iter().all(|c| c.is_zero())
    }
    fn divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let den = den.to_vec();
        let dd = den.len() - 1;
        let lead = den[dd].clone();
        let mut rem = num.to_vec();
        if rem.len() <= dd {
            return (vec![BigRational::zero()], trim(rem));
        }
        let mut quo = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] / &lead;
            if !c.is_zero() {
                quo[k - dd] = c.clone();
                for (i, d) in den.iter().enumerate() {
                    let v = &c * d;
                    rem[k - dd + i] -= v;
                }
            }
        }
        (trim(quo), trim(rem))
    }
    fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, p) in a.iter().enumerate() {
            for (j, q) in b.iter().enumerate() {
                out[i + j] += p * q;
            }
        }
        trim(out)
    }
    fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = a.to_vec();
        out.resize(out.len().max(b.len()), BigRational::zero());
        for (i, q) in b.iter().enumerate() {
            out[i] -= q;
        }
        trim(out)
    }

    let mut r0 = m.to_vec();
    let mut r1 = trim(a.to_vec());
    let mut t0: Vec<BigRational> = vec![BigRational::zero()];
    let mut t1: Vec<BigRational> = vec![BigRational::one()];
    while !is_zero_poly(&r1) {
        let (q, r) = divmod(&r0, &r1);
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    // r0 = gcd; invertible iff gcd is a nonzero constant
    if r0.len() != 1 || r0[0].is_zero() {
        return None;
    }
    let c = r0[0].recip();
    Some(t0.iter().map(|x| x * &c).collect())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_scalar(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclo(n: u32) -> Context {
        Context::new(ScalarConfig::cyclotomic2(n, 1)).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials_are_the_classical_ones() {
        let as_i64 = |p: Vec<BigRational>| -> Vec<i64> {
            p.iter().map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            }).collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn root_of_unity_basics() {
        let ctx = cyclo(4);
        // z_4^2 = -1
        assert_eq!(ctx.root_of_unity(2).unwrap(), ctx.from_i64(-1));
        // z_4 * z_4^3 = 1
        let z = ctx.root_of_unity(1).unwrap();
        let z3 = ctx.root_of_unity(3).unwrap();
        assert_eq!(ctx.mul(&z, &z3), ctx.one());

        let ctx3 = cyclo(3);
        assert_eq!(ctx3.root_of_unity(0).unwrap(), ctx3.one());
    }

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        // oracle: 1 + z + z^2 is the minimal polynomial of z_3, so
        // z + z^2 = -1 exactly.
        let ctx = cyclo(3);
        let z1 = ctx.root_of_unity(1).unwrap();
        let z2 = ctx.root_of_unity(2).unwrap();
        assert_eq!(ctx.add(&z1, &z2), ctx.from_i64(-1));
        // and the sum over all N-th roots vanishes
        let total = ctx.add(&ctx.one(), &ctx.add(&z1, &z2));
        assert!(total.is_zero());
    }

    #[test]
    fn rational_add() {
        let ctx = Context::new(ScalarConfig::rational(1)).unwrap();
        let half = ctx.from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(ctx.add(&half, &half), ctx.one());
    }

    #[test]
    fn generic_inverse_monomial() {
        let ctx = Context::new(ScalarConfig::generic(2)).unwrap();
        let q = ctx.laurent_generator(1, 2, 1).unwrap();
        let qinv = ctx.laurent_generator(1, 2, -1).unwrap();
        assert_eq!(ctx.mul(&q, &qinv), ctx.one());
        assert_eq!(ctx.inv(&q).unwrap(), qinv);

        let two_terms = ctx.add(&q, &ctx.one());
        assert!(matches!(ctx.inv(&two_terms), Err(Error::NonInvertible(_))));
        assert!(matches!(ctx.inv(&ctx.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn cyclotomic_inverse() {
        let ctx = cyclo(6);
        for k in 0..6 {
            let z = ctx.root_of_unity(k).unwrap();
            let zi = ctx.inv(&z).unwrap();
            assert_eq!(ctx.mul(&z, &zi), ctx.one());
            assert_eq!(zi, ctx.root_of_unity(-k).unwrap());
        }
        // a non-monomial element: 1 + z_6
        let x = ctx.add(&ctx.one(), &ctx.root_of_unity(1).unwrap());
        let xi = ctx.inv(&x).unwrap();
        assert_eq!(ctx.mul(&x, &xi), ctx.one());
    }

    #[test]
    fn wrong_backend_is_reported() {
        let ctx = Context::new(ScalarConfig::rational(2)).unwrap();
        assert!(matches!(ctx.root_of_unity(1), Err(Error::BackendMismatch { .. })));
        assert!(matches!(ctx.laurent_generator(1, 2, 1), Err(Error::BackendMismatch { .. })));
    }

    #[test]
    fn skew_validation() {
        let bad = ScalarConfig::cyclotomic(2, 3, vec![vec![0, 1], vec![1, 0]]);
        assert!(bad.validate().is_err());
        let good = ScalarConfig::cyclotomic(2, 3, vec![vec![0, 1], vec![2, 0]]);
        assert!(good.validate().is_ok(), "m21 = 2 = -1 mod 3 is skew");
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let ctx = cyclo(4);
        let z = ctx.root_of_unity(1).unwrap();
        assert_eq!(ctx.pow(&z, -3).unwrap(), ctx.root_of_unity(1).unwrap());
        assert_eq!(ctx.pow(&z, 0).unwrap(), ctx.one());
        assert_eq!(ctx.pow(&z, 6).unwrap(), ctx.from_i64(-1));
    }
}
