//! Exact sparse linear algebra over the scalar backends.
//!
//! Elimination is fraction-free: rows are combined by cross-multiplication
//! only, then divided by their rational content, so the routines work
//! uniformly over the rational, cyclotomic and generic Laurent backends
//! (the last is an integral domain, not a field). Pivot choice is the
//! smallest key of a row, which makes every reduced basis deterministic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Context, Scalar};

/// Sparse vector keyed by an ordered coordinate set.
pub type SparseVec<K> = BTreeMap<K, Scalar>;

pub fn is_zero_vec<K: Ord>(v: &SparseVec<K>) -> bool {
    v.is_empty()
}

/// `target += c * src`, dropping cancelled entries.
pub fn add_scaled<K: Ord + Clone>(
    ctx: &Context,
    target: &mut SparseVec<K>,
    src: &SparseVec<K>,
    c: &Scalar,
) {
    if c.is_zero() {
        return;
    }
    for (k, v) in src {
        let add = ctx.mul(v, c);
        match target.entry(k.clone()) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !add.is_zero() {
                    e.insert(add);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let merged = ctx.add(e.get(), &add);
                if merged.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = merged;
                }
            }
        }
    }
}

pub fn scale_vec<K: Ord + Clone>(ctx: &Context, v: &SparseVec<K>, c: &Scalar) -> SparseVec<K> {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(k, x)| (k.clone(), ctx.mul(x, c))).collect()
}

/// All rational coefficients appearing inside a scalar.
fn rational_parts(s: &Scalar) -> Vec<&BigRational> {
    match s {
        Scalar::Rational(r) => vec![r],
        Scalar::Cyclotomic(c) => c.iter().filter(|x| !x.is_zero()).collect(),
        Scalar::Laurent(t) => t.values().collect(),
    }
}

/// Sign of the canonically-first rational inside a scalar (for the sign
/// convention of normalized rows).
fn leading_sign(s: &Scalar) -> i8 {
    match s {
        Scalar::Rational(r) => {
            if r.is_negative() {
                -1
            } else {
                1
            }
        }
        Scalar::Cyclotomic(c) => {
            for x in c {
                if !x.is_zero() {
                    return if x.is_negative() { -1 } else { 1 };
                }
            }
            1
        }
        Scalar::Laurent(t) => {
            for v in t.values() {
                if !v.is_zero() {
                    return if v.is_negative() { -1 } else { 1 };
                }
            }
            1
        }
    }
}

/// Divide a row by its rational content and fix the sign of its leading
/// coefficient; pure renormalization, deterministic.
pub fn normalize_content<K: Ord + Clone>(ctx: &Context, v: &mut SparseVec<K>) {
    if v.is_empty() {
        return;
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for s in v.values() {
        for r in rational_parts(s) {
            num_gcd = num_gcd.gcd(&r.numer().abs());
            den_lcm = den_lcm.lcm(r.denom());
        }
    }
    if num_gcd.is_zero() {
        return;
    }
    let mut factor = BigRational::new(den_lcm, num_gcd);
    let lead = v.values().next().expect("nonempty row");
    if leading_sign(lead) < 0 {
        factor = -factor;
    }
    if factor.is_one() {
        return;
    }
    let f = ctx.from_rational(factor);
    for s in v.values_mut() {
        *s = ctx.mul(s, &f);
    }
}

/// A fully inter-reduced set of rows with distinct pivots (the smallest key
/// of each row). Supports exact rank tracking, residual reduction and
/// membership tests over any backend.
#[derive(Debug, Clone, Default)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<SparseVec<K>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn pivot_of(row: &SparseVec<K>) -> &K {
        row.keys().next().expect("empty row in echelon")
    }

    /// Fraction-free residual of `v` against the rows. The result is zero
    /// exactly when `v` lies in the span (over the fraction field).
    pub fn reduce(&self, ctx: &Context, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        for row in &self.rows {
            if v.is_empty() {
                break;
            }
            let p = Self::pivot_of(row);
            if let Some(c) = v.get(p).cloned() {
                // v <- row[p] * v - c * row
                let rp = row.get(p).cloned().expect("pivot coefficient");
                v = scale_vec(ctx, &v, &rp);
                add_scaled(ctx, &mut v, row, &ctx.neg(&c));
            }
        }
        normalize_content(ctx, &mut v);
        v
    }

    pub fn contains(&self, ctx: &Context, v: &SparseVec<K>) -> bool {
        self.reduce(ctx, v).is_empty()
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, ctx: &Context, v: &SparseVec<K>) -> bool {
        let red = self.reduce(ctx, v);
        if red.is_empty() {
            return false;
        }
        // eliminate the new pivot from existing rows to stay inter-reduced
        let p = Self::pivot_of(&red).clone();
        let rp = red.get(&p).cloned().expect("pivot");
        for row in &mut self.rows {
            if let Some(c) = row.get(&p).cloned() {
                *row = scale_vec(ctx, row, &rp);
                add_scaled(ctx, row, &red, &ctx.neg(&c));
                normalize_content(ctx, row);
            }
        }
        let at = self
            .rows
            .binary_search_by(|row| Self::pivot_of(row).cmp(&p))
            .expect_err("duplicate pivot after reduction");
        self.rows.insert(at, red);
        true
    }
}

/// Coordinates of a kernel: during elimination the image block is ordered
/// before the tag block, so rows whose image part vanished carry kernel
/// combinations in their tags.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum AugKey<K: Ord + Clone> {
    Img(K),
    Tag(usize),
}

/// Exact kernel of the linear map sending unit vector `i` to `columns[i]`:
/// returns coefficient vectors `x` with `sum_i x_i columns[i] = 0`,
/// normalized and deterministic.
pub fn kernel_basis<K: Ord + Clone>(
    ctx: &Context,
    columns: &[SparseVec<K>],
) -> Vec<Vec<Scalar>> {
    let mut ech: Echelon<AugKey<K>> = Echelon::new();
    for (i, col) in columns.iter().enumerate() {
        let mut row: SparseVec<AugKey<K>> = col
            .iter()
            .map(|(k, v)| (AugKey::Img(k.clone()), v.clone()))
            .collect();
        row.insert(AugKey::Tag(i), ctx.one());
        ech.insert(ctx, &row);
    }
    let mut out = Vec::new();
    for row in ech.rows() {
        if row.keys().all(|k| matches!(k, AugKey::Tag(_))) {
            let mut coeffs = vec![ctx.zero(); columns.len()];
            for (k, v) in row {
                if let AugKey::Tag(i) = k {
                    coeffs[*i] = v.clone();
                }
            }
            out.push(coeffs);
        }
    }
    out
}
