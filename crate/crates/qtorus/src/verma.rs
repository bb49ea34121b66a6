//! Imaginary Verma modules `M(lambda)` for the non-standard Borel
//! subalgebra: PBW monomials with commuting `y`-factors on top of a
//! Heisenberg part, the action of the full algebra, weights, the
//! `y`-length invariant, and the submodule structure probes.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{AlgebraElement, BasisKey};
use crate::error::{Error, Result};
use crate::heis::{HeisMonomial, HeisVector, Letter, SupportBox};
use crate::lattice::{LatticeVector, WeightCentral};
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::{Backend, Context, Scalar};

/// A weight: values of the functional on `h`, the central elements and the
/// derivations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    h: Scalar,
    central: WeightCentral,
    d: Vec<Scalar>,
}

impl Weight {
    pub fn new(ctx: &Context, h: Scalar, c: Vec<Scalar>, d: Vec<Scalar>) -> Result<Weight> {
        let central = WeightCentral::new(ctx, c)?;
        if d.len() != ctx.rank() {
            return Err(Error::RankMismatch { expected: ctx.rank(), got: d.len() });
        }
        for v in std::iter::once(&h).chain(&d) {
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
        Ok(Weight { h, central, d })
    }

    /// Weight with the given `h` and central values; derivation values
    /// default to zero (they shift all eigenvalues uniformly).
    pub fn from_i64(ctx: &Context, h: i64, c: &[i64]) -> Result<Weight> {
        Weight::new(
            ctx,
            ctx.from_i64(h),
            c.iter().map(|&k| ctx.from_i64(k)).collect(),
            vec![ctx.zero(); ctx.rank()],
        )
    }

    pub fn h(&self) -> &Scalar {
        &self.h
    }

    pub fn central(&self) -> &WeightCentral {
        &self.central
    }

    pub fn c(&self, i: usize) -> &Scalar {
        self.central.value(i - 1)
    }

    pub fn d(&self, i: usize) -> &Scalar {
        &self.d[i - 1]
    }
}

/// PBW monomial of `M(lambda)`: a weakly increasing (lexicographic) list of
/// commuting `y`-exponents over an ordered Heisenberg monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct MMonomial {
    yfactors: Vec<LatticeVector>,
    heis: HeisMonomial,
}

impl MMonomial {
    pub fn vacuum() -> Self {
        MMonomial::default()
    }

    /// `y`-factors are sorted on construction; sorting is pure bookkeeping
    /// since the `y`-sector is abelian.
    pub fn new(mut yfactors: Vec<LatticeVector>, heis: HeisMonomial) -> Self {
        yfactors.sort();
        MMonomial { yfactors, heis }
    }

    pub fn yfactors(&self) -> &[LatticeVector] {
        &self.yfactors
    }

    pub fn heis(&self) -> &HeisMonomial {
        &self.heis
    }

    pub fn y_count(&self) -> usize {
        self.yfactors.len()
    }

    /// Total lattice degree: `y`-exponents plus the Heisenberg degree.
    pub fn degree(&self, n: usize) -> LatticeVector {
        let mut d = self.heis.degree(n);
        for a in &self.yfactors {
            d = d.add(a);
        }
        d
    }

    /// Box membership: all exponents bounded, both factor lists within the
    /// length cap.
    pub fn fits(&self, b: &SupportBox) -> bool {
        self.yfactors.len() <= b.maxlen
            && self.yfactors.iter().all(|a| a.max_abs() <= b.bound)
            && self.heis.fits(b)
    }
}

impl fmt::Display for MMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.yfactors {
            write!(f, "Y:{a} ")?;
        }
        write!(f, "{}", self.heis)
    }
}

/// Sparse vector in `M(lambda)`.
pub type MVector = SparseVec<MMonomial>;

pub fn m_vacuum_vector(ctx: &Context) -> MVector {
    let mut v = MVector::new();
    v.insert(MMonomial::vacuum(), ctx.one());
    v
}

fn add_to(v: &mut MVector, m: MMonomial, c: Scalar) {
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

impl Context {
    /// Module action of the whole algebra on `M(lambda)`.
    pub fn act_full(
        &self,
        g: &AlgebraElement,
        v: &MVector,
        lambda: &Weight,
    ) -> Result<MVector> {
        let mut out = MVector::new();
        for (key, cg) in &g.terms {
            for (m, cm) in v {
                let part = self.act_key_m(key, m, lambda)?;
                let scale = self.mul(cg, cm);
                for (mono, c) in part {
                    add_to(&mut out, mono, self.mul(&c, &scale));
                }
            }
        }
        Ok(out)
    }

    fn act_key_m(&self, key: &BasisKey, m: &MMonomial, lambda: &Weight) -> Result<MVector> {
        let mut out = MVector::new();
        match key {
            BasisKey::C(i) => {
                add_to(&mut out, m.clone(), lambda.c(*i).clone());
            }
            BasisKey::D(i) => {
                let beta = m.degree(self.rank());
                let eig = self.add(lambda.d(*i), &self.from_i64(beta.0[*i - 1]));
                add_to(&mut out, m.clone(), eig);
            }
            BasisKey::Y(a) => {
                let mut ys = m.yfactors.to_vec();
                ys.push(a.clone());
                add_to(&mut out, MMonomial::new(ys, m.heis.clone()), self.one());
            }
            BasisKey::U(b) if b.is_zero() => {
                // h acts by lambda(h) - 2 (number of y-factors)
                let eig = self.sub(lambda.h(), &self.from_i64(2 * m.y_count() as i64));
                add_to(&mut out, m.clone(), eig);
            }
            BasisKey::U(b) | BasisKey::W(b) => {
                let letter =
                    if matches!(key, BasisKey::U(_)) { Letter::U } else { Letter::W };
                return self.act_z_m(letter, b, m, lambda);
            }
            BasisKey::X(a) => {
                return self.act_x_m(a, m, lambda);
            }
        }
        Ok(out)
    }

    /// Heisenberg generator on an `M`-monomial: replace each `y`-factor via
    /// the bracket (derivation-like sum, the `y`-sector is abelian), plus
    /// the passthrough action on the Heisenberg part.
    fn act_z_m(
        &self,
        letter: Letter,
        b: &LatticeVector,
        m: &MMonomial,
        lambda: &Weight,
    ) -> Result<MVector> {
        let mut out = MVector::new();
        for (j, a) in m.yfactors.iter().enumerate() {
            // [z_b, y_a] = -sigma(b,a)(f(a,b) +/- 1) y_{a+b}
            let pm = match letter {
                Letter::U => self.add(&self.f_map(a, b), &self.one()),
                Letter::W => self.sub(&self.f_map(a, b), &self.one()),
            };
            let xi = self.neg(&self.mul(&self.sigma(b, a), &pm));
            if xi.is_zero() {
                continue;
            }
            let mut ys = m.yfactors.to_vec();
            ys[j] = a.add(b);
            add_to(&mut out, MMonomial::new(ys, m.heis.clone()), xi);
        }
        // passthrough to the Heisenberg part
        let g = AlgebraElement::generator(self, letter.key(b.clone()));
        let mut hv = HeisVector::new();
        hv.insert(m.heis.clone(), self.one());
        let acted = self.act_heis(&g, &hv, lambda.central())?;
        for (hm, c) in acted {
            add_to(&mut out, MMonomial::new(m.yfactors.to_vec(), hm), c);
        }
        Ok(out)
    }

    /// Raising generator `x_a` on an `M`-monomial: commute past the
    /// `y`-sector (consuming one `y` per surviving term), then through the
    /// Heisenberg part, annihilating the highest-weight generator.
    fn act_x_m(&self, a: &LatticeVector, m: &MMonomial, lambda: &Weight) -> Result<MVector> {
        if m.yfactors.is_empty() {
            let acted = self.act_x_on_heis(a, m.heis.factors())?;
            let mut out = MVector::new();
            for (hm, c) in acted {
                add_to(&mut out, MMonomial::new(Vec::new(), hm), c);
            }
            return Ok(out);
        }
        let head = m.yfactors[0].clone();
        let rest = MMonomial {
            yfactors: m.yfactors[1..].to_vec(),
            heis: m.heis.clone(),
        };
        let mut out = MVector::new();
        // y_head * (x_a . rest)
        for (mono, c) in self.act_x_m(a, &rest, lambda)? {
            let mut ys = mono.yfactors.to_vec();
            ys.push(head.clone());
            add_to(&mut out, MMonomial::new(ys, mono.heis.clone()), c);
        }
        // [x_a, y_head] . rest through the structure table
        let br = self.bracket_keys(&BasisKey::X(a.clone()), &BasisKey::Y(head))?;
        for (key, c) in &br.terms {
            for (mono, c2) in self.act_key_m(key, &rest, lambda)? {
                add_to(&mut out, mono, self.mul(c, &c2));
            }
        }
        Ok(out)
    }

    /// `x_a` on a pure Heisenberg word; emits only Heisenberg monomials.
    fn act_x_on_heis(&self, a: &LatticeVector, word: &[(Letter, LatticeVector)]) -> Result<HeisVector> {
        let mut out = HeisVector::new();
        if word.is_empty() {
            return Ok(out);
        }
        let head = &word[0];
        let rest = &word[1..];
        // z_head * (x_a . rest)
        for (mono, c) in self.act_x_on_heis(a, rest)? {
            let mut w = Vec::with_capacity(mono.len() + 1);
            w.push(head.clone());
            w.extend_from_slice(mono.factors());
            for (m2, c2) in self.straighten(&w)? {
                let merged = self.mul(&c, &c2);
                match out.entry(m2) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        if !merged.is_zero() {
                            e.insert(merged);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = self.add(e.get(), &merged);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        // [x_a, z_head] = coeff * x_{a + head}, continuing rightwards
        let c = &head.1;
        let coeff = match head.0 {
            Letter::U => self.neg(&self.mul(
                &self.sigma(c, a),
                &self.add(&self.f_map(a, c), &self.one()),
            )),
            Letter::W => self.mul(
                &self.sigma(c, a),
                &self.sub(&self.f_map(a, c), &self.one()),
            ),
        };
        if !coeff.is_zero() {
            for (m2, c2) in self.act_x_on_heis(&a.add(c), rest)? {
                let merged = self.mul(&coeff, &c2);
                match out.entry(m2) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        if !merged.is_zero() {
                            e.insert(merged);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = self.add(e.get(), &merged);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Weight of a monomial: `h` drops by 2 per `y`-factor, derivation
    /// values shift by the total degree, central values are unchanged.
    pub fn weight_of(&self, m: &MMonomial, lambda: &Weight) -> Weight {
        let beta = m.degree(self.rank());
        let h = self.sub(lambda.h(), &self.from_i64(2 * m.y_count() as i64));
        let d = (1..=self.rank())
            .map(|i| self.add(lambda.d(i), &self.from_i64(beta.0[i - 1])))
            .collect();
        Weight { h, central: lambda.central().clone(), d }
    }

    /// The common number of `y`-factors of a weight vector.
    pub fn y_length(&self, v: &MVector) -> Result<usize> {
        let mut iter = v.keys();
        let first = iter.next().ok_or(Error::NotWeightVector)?;
        let count = first.y_count();
        let degree = first.degree(self.rank());
        for m in iter {
            if m.y_count() != count || m.degree(self.rank()) != degree {
                return Err(Error::NotWeightVector);
            }
        }
        Ok(count)
    }

    /// Counts of `y`-multisets of the given size with box-bounded exponents,
    /// grouped by their degree sum.
    pub fn count_y_multisets(&self, bound: i64, size: usize) -> BTreeMap<LatticeVector, usize> {
        let mut alphabet = Vec::new();
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
        for v in vecs {
            alphabet.push(LatticeVector::new(v));
        }
        let mut acc = BTreeMap::new();
        y_count_rec(self.rank(), &alphabet, 0, size, &LatticeVector::zero(self.rank()), &mut acc);
        acc
    }

    /// Number of in-box monomials with exactly `m` `y`-factors and the given
    /// total degree.
    pub fn weight_dimension_m(
        &self,
        y_count: usize,
        beta: &LatticeVector,
        b: &SupportBox,
    ) -> usize {
        let ys = self.count_y_multisets(b.bound, y_count);
        let heis_counts = self.heis_degree_counts(b);
        let mut total = 0usize;
        for (ydeg, yc) in &ys {
            let need = LatticeVector(
                beta.0.iter().zip(&ydeg.0).map(|(b, y)| b - y).collect(),
            );
            if let Some(hc) = heis_counts.get(&need) {
                total += yc * hc;
            }
        }
        total
    }

    /// Intersection of the span with the `y`-free subspace, by exact
    /// elimination pivoting on `y`-carrying monomials first.
    pub fn hat_projection(&self, vs: &[MVector]) -> Vec<MVector> {
        #[derive(PartialEq, Eq, PartialOrd, Ord, Clone)]
        struct HatKey(bool, MMonomial); // false = has y-factors, sorts first
        let mut ech: Echelon<HatKey> = Echelon::new();
        for v in vs {
            let row: SparseVec<HatKey> = v
                .iter()
                .map(|(m, c)| (HatKey(m.y_count() == 0, m.clone()), c.clone()))
                .collect();
            ech.insert(self, &row);
        }
        let mut out = Vec::new();
        for row in ech.rows() {
            if row.keys().all(|k| k.0) {
                out.push(row.iter().map(|(k, c)| (k.1.clone(), c.clone())).collect());
            }
        }
        out
    }

    /// Search the box for `A` with `x_A v != 0`; the `y`-length of the
    /// result drops by exactly one. Candidates are scanned by increasing
    /// L1-norm, then lexicographically.
    pub fn prop3_probe(
        &self,
        v: &MVector,
        lambda: &Weight,
        search: &SupportBox,
    ) -> Result<BasisKey> {
        let m = self.y_length(v)?;
        if m == 0 {
            return Err(Error::HypothesisUnmet("y-length must be at least 1".into()));
        }
        let mut candidates = Vec::new();
        let mut vecs = vec![Vec::new()];
        for _ in 0..self.rank() {
            let mut next = Vec::new();
            for w in &vecs {
                for x in -search.bound..=search.bound {
                    let mut w2 = w.clone();
                    w2.push(x);
                    next.push(w2);
                }
            }
            vecs = next;
        }
        for w in vecs {
            candidates.push(LatticeVector::new(w));
        }
        candidates.sort_by_key(|a| {
            (a.0.iter().map(|x| x.abs()).sum::<i64>(), a.clone())
        });
        let cap = candidates.len();
        let mut scanned = 0usize;
        for a in candidates {
            scanned += 1;
            let x = AlgebraElement::generator(self, BasisKey::X(a.clone()));
            let w = self.act_full(&x, v, lambda)?;
            if !w.is_empty() {
                debug_assert_eq!(self.y_length(&w).unwrap(), m - 1);
                return Ok(BasisKey::X(a));
            }
        }
        Err(Error::SearchBudgetExceeded { scanned, cap })
    }
}

fn y_count_rec(
    n: usize,
    alphabet: &[LatticeVector],
    from: usize,
    room: usize,
    degree: &LatticeVector,
    acc: &mut BTreeMap<LatticeVector, usize>,
) {
    if room == 0 {
        *acc.entry(degree.clone()).or_insert(0) += 1;
        return;
    }
    for idx in from..alphabet.len() {
        y_count_rec(n, alphabet, idx, room - 1, &degree.add(&alphabet[idx]), acc);
    }
}

/// Slot index of the weight grading: the `y`-count and the lattice degree
/// separate weights exactly.
pub type SlotKey = (usize, LatticeVector);

/// Per-slot outcome of the tensor-factorization check.
#[derive(Debug, Clone)]
pub struct SlotReport {
    pub y_count: usize,
    pub degree: LatticeVector,
    pub dim_closure: usize,
    pub dim_convolution: usize,
    pub interior: bool,
}

/// Result of [`Context::theorem2_check`].
#[derive(Debug, Clone)]
pub struct FactorizationReport {
    pub slots: Vec<SlotReport>,
    /// Equality held on every interior slot.
    pub pass: bool,
    /// Some central value is nonzero (the theorem hypothesis).
    pub hypothesis_met: bool,
}

impl Context {
    /// Closure of a cyclic submodule under the in-box generators of the
    /// whole algebra, by slots. Outputs escaping the box are discarded, so
    /// every tracked vector is certified inside the submodule.
    pub fn submodule_closure(
        &self,
        generator: &MVector,
        lambda: &Weight,
        b: &SupportBox,
    ) -> Result<BTreeMap<SlotKey, Echelon<MMonomial>>> {
        if generator.is_empty() {
            return Err(Error::NotWeightVector);
        }
        let m0 = self.y_length(generator)?;
        let beta0 = generator.keys().next().expect("nonempty").degree(self.rank());
        if !generator.keys().all(|m| m.fits(b)) {
            return Err(Error::Config("generator does not fit the box".into()));
        }
        let mut slots: BTreeMap<SlotKey, Echelon<MMonomial>> = BTreeMap::new();
        slots.entry((m0, beta0.clone())).or_insert_with(Echelon::new).insert(self, generator);
        let mut queue: Vec<(SlotKey, MVector)> = vec![((m0, beta0), generator.clone())];

        // generators of the algebra restricted to the box
        let mut gens: Vec<(i64, LatticeVector, AlgebraElement)> = Vec::new();
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
            gens.push((1, a.clone(), AlgebraElement::generator(self, BasisKey::X(a.clone()))));
            gens.push((-1, a.clone(), AlgebraElement::generator(self, BasisKey::Y(a.clone()))));
            if !a.is_zero() {
                gens.push((0, a.clone(), AlgebraElement::generator(self, BasisKey::U(a.clone()))));
                if !self.in_full_radical(&a) {
                    gens.push((0, a.clone(), AlgebraElement::generator(self, BasisKey::W(a))));
                }
            }
        }

        let mut capacities: BTreeMap<SlotKey, usize> = BTreeMap::new();
        while let Some(((m, beta), v)) = queue.pop() {
            for (dy, gdeg, g) in &gens {
                let my = m as i64 - dy; // x consumes a y, y adds one
                if my < 0 {
                    continue;
                }
                let target: SlotKey = (my as usize, beta.add(gdeg));
                let w = self.act_full(g, &v, lambda)?;
                if w.is_empty() || !w.keys().all(|mm| mm.fits(b)) {
                    continue;
                }
                let cap = *capacities
                    .entry(target.clone())
                    .or_insert_with(|| self.weight_dimension_m(target.0, &target.1, b));
                let slot = slots.entry(target.clone()).or_insert_with(Echelon::new);
                if slot.dim() >= cap {
                    continue;
                }
                if slot.insert(self, &w) {
                    queue.push((target, w));
                }
            }
        }
        slots.retain(|_, e| !e.is_empty());
        Ok(slots)
    }

    /// Compare the graded dimensions of a cyclic submodule against the
    /// tensor factorization over the real negative root vectors: per slot,
    /// `dim N_{(m, beta)}` must equal the convolution of `y`-multiset
    /// counts with the dimensions of the `y`-free part of the closure.
    pub fn theorem2_check(
        &self,
        generator: &MVector,
        lambda: &Weight,
        b: &SupportBox,
    ) -> Result<FactorizationReport> {
        let hypothesis_met = (1..=self.rank()).any(|i| !lambda.c(i).is_zero());
        let closure = self.submodule_closure(generator, lambda, b)?;

        // hat part: y-free slice of the closure, extracted per degree
        let mut hat_dims: BTreeMap<LatticeVector, usize> = BTreeMap::new();
        for ((m, beta), ech) in &closure {
            if *m == 0 {
                let vectors: Vec<MVector> = ech.rows().to_vec();
                let hat = self.hat_projection(&vectors);
                if !hat.is_empty() {
                    hat_dims.insert(beta.clone(), hat.len());
                }
            }
        }

        // y-multiset counts per size
        let mut y_counts: Vec<BTreeMap<LatticeVector, usize>> = Vec::new();
        for m in 0..=b.maxlen {
            y_counts.push(self.count_y_multisets(b.bound, m));
        }

        // all slots with either a computed or an expected dimension
        let mut slot_keys: std::collections::BTreeSet<SlotKey> =
            closure.keys().cloned().collect();
        for (m, ys) in y_counts.iter().enumerate() {
            for ydeg in ys.keys() {
                for hdeg in hat_dims.keys() {
                    slot_keys.insert((m, ydeg.add(hdeg)));
                }
            }
        }

        let dmax = b.bound * (2 * b.maxlen) as i64;
        let mut slots = Vec::new();
        let mut pass = true;
        for (m, beta) in slot_keys {
            let dim_closure = closure.get(&(m, beta.clone())).map_or(0, Echelon::dim);
            let mut dim_convolution = 0usize;
            if let Some(ys) = y_counts.get(m) {
                for (ydeg, yc) in ys {
                    let need = LatticeVector(
                        beta.0.iter().zip(&ydeg.0).map(|(b, y)| b - y).collect(),
                    );
                    if let Some(hd) = hat_dims.get(&need) {
                        dim_convolution += yc * hd;
                    }
                }
            }
            // interior: every one-step neighbor slot stays representable
            let interior = m + 1 <= b.maxlen
                && beta.0.iter().all(|x| x.abs() + b.bound <= dmax);
            if interior && dim_closure != dim_convolution {
                pass = false;
            }
            if dim_closure != 0 || dim_convolution != 0 {
                slots.push(SlotReport {
                    y_count: m,
                    degree: beta,
                    dim_closure,
                    dim_convolution,
                    interior,
                });
            }
        }
        Ok(FactorizationReport { slots, pass, hypothesis_met })
    }

    /// Graded dimensions of the irreducible quotient `L(lambda)` in the
    /// box, as the convolution of `y`-multiset counts with the in-box
    /// dimensions of the Heisenberg quotient by the distinguished
    /// submodule. Requires a nonzero first central value.
    pub fn l_lambda_dims(
        &self,
        lambda: &Weight,
        b: &SupportBox,
    ) -> Result<BTreeMap<SlotKey, usize>> {
        if lambda.c(1).is_zero() {
            return Err(Error::HypothesisUnmet(
                "the first central value must be nonzero".into(),
            ));
        }
        let tilde = self.tilde_h_components(lambda.central(), b)?;
        let heis_counts = self.heis_degree_counts(b);
        let mut quotient: BTreeMap<LatticeVector, usize> = BTreeMap::new();
        for (deg, count) in &heis_counts {
            let q = count - tilde.dim_at(deg);
            if q > 0 {
                quotient.insert(deg.clone(), q);
            }
        }
        let mut out = BTreeMap::new();
        for m in 0..=b.maxlen {
            let ys = self.count_y_multisets(b.bound, m);
            for (ydeg, yc) in &ys {
                for (qdeg, qd) in &quotient {
                    let slot = (m, ydeg.add(qdeg));
                    *out.entry(slot).or_insert(0) += yc * qd;
                }
            }
        }
        Ok(out)
    }
}
