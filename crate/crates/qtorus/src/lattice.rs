//! The lattice `Z^n`, its two orderings, the cocycle `sigma`, the
//! commutator map `f`, and the radical sublattices `R_r`.
//!
//! Conventions:
//!
//! * `sigma(a, b) = prod_{i<j} q_ji^{a_j b_i}`, so `t^a t^b = sigma(a,b) t^{a+b}`;
//! * `f(a, b) = sigma(a,b) sigma(b,a)^{-1} = prod_{i!=j} q_ij^{a_i b_j}`;
//! * `R_r` is the set of vectors supported on the first `r` coordinates on
//!   which `f(., b) = 1` for every `b` supported there; `R = R_n`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::intmat;
use crate::scalar::{Backend, Context, Scalar, ScalarConfig};

/// Element of the lattice `Z^n`.
///
/// The derived total order is the lexicographic order used throughout:
/// the *largest* differing coordinate decides, so `a < 0` exactly when the
/// last nonzero coordinate of `a` is negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticeVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        LatticeVector(vec![0; n])
    }

    /// Standard basis vector `e_i` (1-based `i`).
    pub fn unit(i: usize, n: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        LatticeVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Index of the last nonzero coordinate, if any.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.0.iter().rposition(|&x| x != 0)
    }

    /// `a < 0` in the lexicographic order.
    pub fn is_lex_negative(&self) -> bool {
        matches!(self.last_nonzero(), Some(i) if self.0[i] < 0)
    }

    /// `a > 0` in the lexicographic order.
    pub fn is_lex_positive(&self) -> bool {
        matches!(self.last_nonzero(), Some(i) if self.0[i] > 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        LatticeVector(self.0.iter().map(|a| k * a).collect())
    }

    /// Is the vector supported on the first `r` coordinates?
    pub fn supported_on(&self, r: usize) -> bool {
        self.0.iter().skip(r).all(|&x| x == 0)
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl Ord for LatticeVector {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        for i in (0..self.0.len()).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for LatticeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Three-way comparison in the lexicographic order (largest differing
/// coordinate decides).
pub fn lex_compare(a: &LatticeVector, b: &LatticeVector) -> Ordering {
    a.cmp(b)
}

fn lex_compare_prefix(a: &[i64], b: &[i64]) -> Ordering {
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// The recursive ordering on lexicographically negative vectors that
/// underlies the PBW basis of the Heisenberg Verma module.
///
/// Writing `a = (ã, -k, 0, ..., 0)` with `-k < 0` its last nonzero entry:
/// a deeper last-nonzero position precedes a shallower one; at equal
/// position, smaller `k` precedes, and ties fall back to the lexicographic
/// order of the prefixes.
pub fn neg_order_compare(a: &LatticeVector, b: &LatticeVector) -> Result<Ordering> {
    let ra = a.last_nonzero().filter(|&i| a.0[i] < 0).ok_or(Error::NotNegative)?;
    let rb = b.last_nonzero().filter(|&i| b.0[i] < 0).ok_or(Error::NotNegative)?;
    if ra != rb {
        // deeper position first
        return Ok(rb.cmp(&ra));
    }
    let ka = -a.0[ra];
    let kb = -b.0[rb];
    match ka.cmp(&kb) {
        Ordering::Equal => Ok(lex_compare_prefix(&a.0[..ra], &b.0[..rb])),
        o => Ok(o),
    }
}

/// A central character: the values `lambda(c_1), ..., lambda(c_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightCentral {
    values: Vec<Scalar>,
}

impl WeightCentral {
    /// Values must live in the context backend; in the generic backend only
    /// constant (rational) values keep the module computations decidable.
    pub fn new(ctx: &Context, values: Vec<Scalar>) -> Result<WeightCentral> {
        if values.len() != ctx.rank() {
            return Err(Error::RankMismatch { expected: ctx.rank(), got: values.len() });
        }
        for v in &values {
            if v.backend() != ctx.backend() {
                return Err(Error::BackendMismatch {
                    expected: ctx.backend().name(),
                    got: v.backend().name(),
                });
            }
            if ctx.backend() == Backend::GenericLaurent && v.as_rational().is_none() {
                return Err(Error::NonDecidableLambda);
            }
        }
        Ok(WeightCentral { values })
    }

    pub fn from_i64(ctx: &Context, values: &[i64]) -> Result<WeightCentral> {
        WeightCentral::new(ctx, values.iter().map(|&k| ctx.from_i64(k)).collect())
    }

    pub fn value(&self, i: usize) -> &Scalar {
        &self.values[i]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// `sum_i r_i lambda(c_i)` as a scalar.
    pub fn pair(&self, ctx: &Context, r: &LatticeVector) -> Scalar {
        let mut acc = ctx.zero();
        for (i, &ri) in r.0.iter().enumerate() {
            if ri != 0 {
                let term = ctx.mul(&ctx.from_i64(ri), &self.values[i]);
                acc = ctx.add(&acc, &term);
            }
        }
        acc
    }
}

impl Context {
    fn check_rank(&self, v: &LatticeVector) {
        assert_eq!(
            v.len(),
            self.rank(),
            "lattice vector length {} does not match rank {}",
            v.len(),
            self.rank()
        );
    }

    /// The multiplication cocycle: `sigma(a, b) = prod_{i<j} q_ji^{a_j b_i}`.
    pub fn sigma(&self, a: &LatticeVector, b: &LatticeVector) -> Scalar {
        self.check_rank(a);
        self.check_rank(b);
        let n = self.rank();
        match self.backend() {
            Backend::Rational => self.one(),
            Backend::Cyclotomic => {
                let m = &self.config().exponents;
                let modulus = self.order() as i64;
                let mut e: i64 = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        let t = (m[j][i].rem_euclid(modulus)) * a.0[j].rem_euclid(modulus) % modulus
                            * b.0[i].rem_euclid(modulus)
                            % modulus;
                        e = (e + t).rem_euclid(modulus);
                    }
                }
                self.root_of_unity(e).expect("cyclotomic backend")
            }
            Backend::GenericLaurent => {
                let mut exp = vec![0i64; n * (n - 1) / 2];
                for i in 0..n {
                    for j in i + 1..n {
                        // q_ji = q_ij^{-1}
                        exp[self.pair_index(i + 1, j + 1)] -= a.0[j] * b.0[i];
                    }
                }
                self.laurent_monomial(exp)
            }
        }
    }

    /// The commutator map: `f(a, b) = sigma(a,b) sigma(b,a)^{-1}
    /// = prod_{i!=j} q_ij^{a_i b_j}`.
    pub fn f_map(&self, a: &LatticeVector, b: &LatticeVector) -> Scalar {
        self.check_rank(a);
        self.check_rank(b);
        let n = self.rank();
        match self.backend() {
            Backend::Rational => self.one(),
            Backend::Cyclotomic => {
                let m = &self.config().exponents;
                let modulus = self.order() as i64;
                let mut e: i64 = 0;
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            let t = m[i][j].rem_euclid(modulus) * a.0[i].rem_euclid(modulus)
                                % modulus
                                * b.0[j].rem_euclid(modulus)
                                % modulus;
                            e = (e + t).rem_euclid(modulus);
                        }
                    }
                }
                self.root_of_unity(e).expect("cyclotomic backend")
            }
            Backend::GenericLaurent => {
                let mut exp = vec![0i64; n * (n - 1) / 2];
                for i in 0..n {
                    for j in i + 1..n {
                        exp[self.pair_index(i + 1, j + 1)] += a.0[i] * b.0[j] - a.0[j] * b.0[i];
                    }
                }
                self.laurent_monomial(exp)
            }
        }
    }

    fn laurent_monomial(&self, exp: Vec<i64>) -> Scalar {
        let mut t = std::collections::BTreeMap::new();
        t.insert(exp, num_rational::BigRational::from(num_bigint::BigInt::from(1)));
        Scalar::Laurent(t)
    }

    /// Canonical basis of the radical sublattice `R_r` (vectors padded to
    /// full rank). `R = R_n`.
    pub fn radical_basis(&self, r: usize) -> Result<&[LatticeVector]> {
        if r == 0 || r > self.rank() {
            return Err(Error::RankOutOfRange { r, n: self.rank() });
        }
        Ok(&self.radical_bases()[r - 1])
    }

    /// Membership in `R_r`; the argument must be supported on the first
    /// `r` coordinates.
    pub fn in_radical(&self, a: &LatticeVector, r: usize) -> Result<bool> {
        if r == 0 || r > self.rank() {
            return Err(Error::RankOutOfRange { r, n: self.rank() });
        }
        self.check_rank(a);
        if !a.supported_on(r) {
            return Err(Error::SupportViolation { r });
        }
        Ok(match self.backend() {
            Backend::Rational => true,
            Backend::GenericLaurent => r == 1 || a.is_zero(),
            Backend::Cyclotomic => {
                let m = &self.config().exponents;
                let modulus = self.order() as i64;
                (0..r).all(|i| {
                    let dot: i64 = (0..r).map(|j| m[i][j] * a.0[j]).sum();
                    dot.rem_euclid(modulus) == 0
                })
            }
        })
    }

    /// Membership in the full radical `R = R_n` (no support restriction).
    pub fn in_full_radical(&self, a: &LatticeVector) -> bool {
        self.in_radical(a, self.rank()).expect("full-rank radical test")
    }

    /// Is `r` a nonzero vector orthogonal to the central character?
    pub fn in_lambda_lattice(&self, lambda: &WeightCentral, rvec: &LatticeVector) -> bool {
        self.check_rank(rvec);
        !rvec.is_zero() && lambda.pair(self, rvec).is_zero()
    }

    /// Search for `c = (-N_1, ..., -N_{r-1}, 1, 0, ..., 0)` with
    /// `N_i > bounds_i` and `f(c, b) != 1`. The existence is guaranteed for
    /// `b` outside `R_r`, so exhausting the budget signals the budget, not
    /// nonexistence. Candidates are scanned by increasing `sum N_i`, then
    /// lexicographically.
    pub fn lemma2_witness(
        &self,
        b: &LatticeVector,
        bounds: &[u32],
    ) -> Result<LatticeVector> {
        let r = bounds.len() + 1;
        if r > self.rank() {
            return Err(Error::RankOutOfRange { r, n: self.rank() });
        }
        self.check_rank(b);
        if !b.supported_on(r) {
            return Err(Error::SupportViolation { r });
        }
        if self.in_radical(b, r)? {
            return Err(Error::InRadical { r });
        }
        let n = self.rank();
        const CAP: usize = 100_000;
        let mins: Vec<i64> = bounds.iter().map(|&k| k as i64 + 1).collect();
        let base: i64 = mins.iter().sum();
        let mut scanned = 0usize;
        for extra in 0..=(CAP as i64) {
            let total = base + extra;
            let mut stack = vec![(Vec::<i64>::new(), total)];
            while let Some((prefix, rem)) = stack.pop() {
                if prefix.len() == bounds.len() {
                    if rem != 0 {
                        continue;
                    }
                    scanned += 1;
                    let mut c = vec![0i64; n];
                    for (i, v) in prefix.iter().enumerate() {
                        c[i] = -v;
                    }
                    c[r - 1] = 1;
                    let c = LatticeVector(c);
                    if self.f_map(&c, b) != self.one() {
                        return Ok(c);
                    }
                    if scanned >= CAP {
                        return Err(Error::SearchBudgetExceeded { scanned, cap: CAP });
                    }
                    continue;
                }
                let idx = prefix.len();
                let tail_min: i64 = mins[idx + 1..].iter().sum();
                // push in reverse so smaller N_idx is explored first
                let hi = rem - tail_min;
                for v in (mins[idx]..=hi).rev() {
                    let mut p = prefix.clone();
                    p.push(v);
                    stack.push((p, rem - v));
                }
            }
        }
        Err(Error::SearchBudgetExceeded { scanned, cap: CAP })
    }
}

/// Raw radical basis computation used while building a context (before the
/// cache exists).
pub(crate) fn radical_basis_raw(cfg: &ScalarConfig, r: usize) -> Vec<LatticeVector> {
    let n = cfg.n;
    let pad = |rows: Vec<Vec<i64>>| -> Vec<LatticeVector> {
        rows.into_iter()
            .map(|mut v| {
                v.resize(n, 0);
                LatticeVector(v)
            })
            .collect()
    };
    match cfg.backend {
        Backend::Rational => {
            pad((0..r).map(|i| {
                let mut v = vec![0i64; r];
                v[i] = 1;
                v
            }).collect())
        }
        Backend::GenericLaurent => {
            if r == 1 {
                pad(vec![vec![1]])
            } else {
                Vec::new()
            }
        }
        Backend::Cyclotomic => {
            let modulus = cfg.order as i64;
            // kernel of [S_r | N I_r] acting on (a, k), projected to a
            let mut a = Vec::with_capacity(r);
            for i in 0..r {
                let mut row = vec![0i64; 2 * r];
                for j in 0..r {
                    row[j] = cfg.exponents[i][j].rem_euclid(modulus);
                }
                row[r + i] = modulus;
                a.push(row);
            }
            let kernel = intmat::integer_kernel(&a, 2 * r);
            let projected: Vec<Vec<i64>> =
                kernel.into_iter().map(|v| v[..r].to_vec()).collect();
            pad(intmat::hermite_normal_form(&projected))
        }
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

    #[test]
    fn lex_order_compares_at_largest_differing_index() {
        assert_eq!(lex_compare(&lv(&[5, -1]), &lv(&[0, 0])), Ordering::Less);
        assert_eq!(lex_compare(&lv(&[-3, 1]), &lv(&[0, 0])), Ordering::Greater);
        assert_eq!(lex_compare(&lv(&[0, 0]), &lv(&[0, 0])), Ordering::Equal);
        assert!(lv(&[5, -1]).is_lex_negative());
        assert!(!lv(&[-3, 1]).is_lex_negative());
    }

    #[test]
    fn neg_order_examples() {
        // smaller k first
        assert_eq!(neg_order_compare(&lv(&[-1, 0]), &lv(&[-2, 0])).unwrap(), Ordering::Less);
        assert_eq!(neg_order_compare(&lv(&[5, -1]), &lv(&[3, -2])).unwrap(), Ordering::Less);
        // equal k: lexicographic prefix
        assert_eq!(neg_order_compare(&lv(&[2, -1]), &lv(&[3, -1])).unwrap(), Ordering::Less);
        // deeper last-nonzero position precedes
        assert_eq!(neg_order_compare(&lv(&[0, -1]), &lv(&[-1, 0])).unwrap(), Ordering::Less);
        assert_eq!(neg_order_compare(&lv(&[-1, 0]), &lv(&[0, -1])).unwrap(), Ordering::Greater);
        // not negative
        assert!(neg_order_compare(&lv(&[1, 0]), &lv(&[-1, 0])).is_err());
        assert!(neg_order_compare(&lv(&[0, 0]), &lv(&[-1, 0])).is_err());
    }

    #[test]
    fn neg_order_is_a_total_order_on_samples() {
        // antisymmetry + transitivity over a small box
        let mut neg = Vec::new();
        for x in -2..=2i64 {
            for y in -2..=2i64 {
                let v = lv(&[x, y]);
                if v.is_lex_negative() {
                    neg.push(v);
                }
            }
        }
        for a in &neg {
            for b in &neg {
                let ab = neg_order_compare(a, b).unwrap();
                let ba = neg_order_compare(b, a).unwrap();
                assert_eq!(ab, ba.reverse());
                if ab == Ordering::Equal {
                    assert_eq!(a, b);
                }
                for c in &neg {
                    let bc = neg_order_compare(b, c).unwrap();
                    if ab != Ordering::Greater && bc != Ordering::Greater {
                        assert_ne!(neg_order_compare(a, c).unwrap(), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_examples() {
        // sigma(0, b) = 1
        let ctx = cyclo23();
        assert_eq!(ctx.sigma(&lv(&[0, 0]), &lv(&[2, -1])), ctx.one());

        // n=2, N=4, m12=1: sigma((1,1),(1,0)) = z^{-1} = -i
        let ctx4 = Context::new(ScalarConfig::cyclotomic2(4, 1)).unwrap();
        let got = ctx4.sigma(&lv(&[1, 1]), &lv(&[1, 0]));
        assert_eq!(got, ctx4.root_of_unity(-1).unwrap());

        // generic: sigma((0,1),(1,0)) = q12^{-1}
        let g = Context::new(ScalarConfig::generic(2)).unwrap();
        assert_eq!(
            g.sigma(&lv(&[0, 1]), &lv(&[1, 0])),
            g.laurent_generator(1, 2, -1).unwrap()
        );
    }

    #[test]
    fn f_examples() {
        let g = Context::new(ScalarConfig::generic(2)).unwrap();
        for v in [[0i64, 0], [1, 2], [-3, 1]] {
            let a = lv(&v);
            assert_eq!(g.f_map(&a, &a), g.one());
            assert_eq!(g.f_map(&a, &a.neg()), g.one());
        }
        assert_eq!(
            g.f_map(&lv(&[1, 0]), &lv(&[0, 1])),
            g.laurent_generator(1, 2, 1).unwrap()
        );
        let ctx = cyclo23();
        assert_eq!(
            ctx.f_map(&lv(&[1, 0]), &lv(&[0, 1])),
            ctx.root_of_unity(1).unwrap()
        );
    }

    #[test]
    fn f_is_bimultiplicative_and_antisymmetric() {
        let ctx = cyclo23();
        let g = Context::new(ScalarConfig::generic(2)).unwrap();
        let vecs: Vec<LatticeVector> = (-2..=2)
            .flat_map(|x| (-2..=2).map(move |y| lv(&[x, y])))
            .collect();
        for ctx in [&ctx, &g] {
            for a in &vecs {
                for b in vecs.iter().step_by(3) {
                    for a2 in vecs.iter().step_by(4) {
                        let lhs = ctx.f_map(&a.add(a2), b);
                        let rhs = ctx.mul(&ctx.f_map(a, b), &ctx.f_map(a2, b));
                        assert_eq!(lhs, rhs);
                    }
                    let inv = ctx.inv(&ctx.f_map(a, b)).unwrap();
                    assert_eq!(ctx.f_map(b, a), inv);
                }
            }
        }
    }

    #[test]
    fn sigma_is_bimultiplicative() {
        let ctx = cyclo23();
        let vecs: Vec<LatticeVector> = (-2..=2)
            .flat_map(|x| (-2..=2).map(move |y| lv(&[x, y])))
            .collect();
        for a in vecs.iter().step_by(2) {
            for a2 in vecs.iter().step_by(3) {
                for b in vecs.iter().step_by(4) {
                    let lhs = ctx.sigma(&a.add(a2), b);
                    let rhs = ctx.mul(&ctx.sigma(a, b), &ctx.sigma(a2, b));
                    assert_eq!(lhs, rhs);
                    let lhs2 = ctx.sigma(b, &a.add(a2));
                    let rhs2 = ctx.mul(&ctx.sigma(b, a), &ctx.sigma(b, a2));
                    assert_eq!(lhs2, rhs2);
                }
            }
        }
    }

    #[test]
    fn radical_for_n2_order3() {
        let ctx = cyclo23();
        // R = 3Z^2
        let basis = ctx.radical_basis(2).unwrap();
        let rows: Vec<Vec<i64>> = basis.iter().map(|v| v.0.clone()).collect();
        assert_eq!(rows, vec![vec![3, 0], vec![0, 3]]);
        // rank-1 radical is everything
        let r1 = ctx.radical_basis(1).unwrap();
        assert_eq!(r1.iter().map(|v| v.0.clone()).collect::<Vec<_>>(), vec![vec![1, 0]]);

        assert!(ctx.in_radical(&lv(&[0, 0]), 2).unwrap());
        assert!(!ctx.in_radical(&lv(&[1, 1]), 2).unwrap());
        assert!(ctx.in_radical(&lv(&[3, 0]), 2).unwrap());
        assert!(matches!(
            ctx.in_radical(&lv(&[0, 1]), 1),
            Err(Error::SupportViolation { .. })
        ));
    }

    #[test]
    fn radical_generic_and_rational() {
        let g = Context::new(ScalarConfig::generic(2)).unwrap();
        assert!(g.radical_basis(2).unwrap().is_empty());
        assert_eq!(g.radical_basis(1).unwrap().len(), 1);
        assert!(g.in_radical(&lv(&[5, 0]), 1).unwrap());
        assert!(!g.in_radical(&lv(&[5, 0]), 2).unwrap());
        assert!(g.in_radical(&lv(&[0, 0]), 2).unwrap());

        let q = Context::new(ScalarConfig::rational(2)).unwrap();
        assert_eq!(q.radical_basis(2).unwrap().len(), 2);
        assert!(q.in_radical(&lv(&[7, -4]), 2).unwrap());
    }

    #[test]
    fn radical_matches_brute_force_f_vanishing() {
        // oracle: a is in R_r iff f(a, b) = 1 for every b in the residue box
        let ctx = cyclo23();
        let modulus = 3i64;
        for r in 1..=2usize {
            for a1 in -modulus..=modulus {
                for a2 in -modulus..=modulus {
                    let a = if r == 1 { lv(&[a1, 0]) } else { lv(&[a1, a2]) };
                    let mut brute = true;
                    'outer: for b1 in -modulus..=modulus {
                        for b2 in -modulus..=modulus {
                            let b = if r == 1 { lv(&[b1, 0]) } else { lv(&[b1, b2]) };
                            if ctx.f_map(&a, &b) != ctx.one() {
                                brute = false;
                                break 'outer;
                            }
                        }
                    }
                    assert_eq!(ctx.in_radical(&a, r).unwrap(), brute, "a = {a}, r = {r}");
                    // membership also matches the basis span
                    let basis: Vec<Vec<i64>> = ctx
                        .radical_basis(r)
                        .unwrap()
                        .iter()
                        .map(|v| v.0.clone())
                        .collect();
                    assert_eq!(intmat::in_span(&basis, &a.0), brute);
                }
            }
        }
    }

    #[test]
    fn lambda_lattice_membership() {
        let ctx = cyclo23();
        let lam = WeightCentral::from_i64(&ctx, &[1, -1]).unwrap();
        assert!(ctx.in_lambda_lattice(&lam, &lv(&[2, 2])));
        assert!(!ctx.in_lambda_lattice(&lam, &lv(&[0, 0])));
        let lam2 = WeightCentral::from_i64(&ctx, &[1, 0]).unwrap();
        assert!(!ctx.in_lambda_lattice(&lam2, &lv(&[1, 0])));
    }

    #[test]
    fn witness_search() {
        let ctx = cyclo23();
        // b = (1,0) is outside R_2; first witness with N_1 > 1 is (-2, 1)
        let c = ctx.lemma2_witness(&lv(&[1, 0]), &[1]).unwrap();
        assert_eq!(c, lv(&[-2, 1]));
        assert!(ctx.f_map(&c, &lv(&[1, 0])) != ctx.one());

        // b in the radical is rejected
        assert!(matches!(
            ctx.lemma2_witness(&lv(&[3, 0]), &[1]),
            Err(Error::InRadical { .. })
        ));

        let g = Context::new(ScalarConfig::generic(2)).unwrap();
        let c = g.lemma2_witness(&lv(&[0, 1]), &[1]).unwrap();
        assert_eq!(c, lv(&[-2, 1]));
        assert_eq!(g.f_map(&c, &lv(&[0, 1])), g.laurent_generator(1, 2, -2).unwrap());
    }
}
