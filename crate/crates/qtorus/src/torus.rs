//! The associative quantum torus `C_q`: sparse Laurent combinations of the
//! monomials `t^a` with `t^a t^b = sigma(a,b) t^{a+b}`.

use std::collections::BTreeMap;

use crate::lattice::LatticeVector;
use crate::scalar::{Context, Scalar};

/// Element of `C_q`: finitely many terms `coeff * t^a`, keyed in the
/// canonical lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TorusElement {
    pub terms: BTreeMap<LatticeVector, Scalar>,
}

impl TorusElement {
    pub fn zero() -> Self {
        TorusElement { terms: BTreeMap::new() }
    }

    pub fn monomial(a: LatticeVector, coeff: Scalar) -> Self {
        let mut t = TorusElement::zero();
        t.add_term(a, coeff);
        t
    }

    /// `t^a` with coefficient 1.
    pub fn generator(ctx: &Context, a: LatticeVector) -> Self {
        TorusElement::monomial(a, ctx.one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: LatticeVector, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(a) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let merged = crate::scalar::merge_add(e.get(), &coeff);
                if merged.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = merged;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, ctx: &Context) -> Self {
        TorusElement {
            terms: self.terms.iter().map(|(a, c)| (a.clone(), ctx.neg(c))).collect(),
        }
    }

    pub fn sub(&self, ctx: &Context, other: &Self) -> Self {
        self.add(&other.neg(ctx))
    }

    pub fn scale(&self, ctx: &Context, s: &Scalar) -> Self {
        if s.is_zero() {
            return TorusElement::zero();
        }
        let mut out = TorusElement::zero();
        for (a, c) in &self.terms {
            out.add_term(a.clone(), ctx.mul(c, s));
        }
        out
    }
}

impl Context {
    /// Bilinear extension of `t^a t^b = sigma(a,b) t^{a+b}`.
    pub fn torus_multiply(&self, u: &TorusElement, v: &TorusElement) -> TorusElement {
        let mut out = TorusElement::zero();
        for (a, ca) in &u.terms {
            for (b, cb) in &v.terms {
                let coeff = self.mul(&self.mul(ca, cb), &self.sigma(a, b));
                out.add_term(a.add(b), coeff);
            }
        }
        out
    }

    /// The counit-style functional: coefficient of `t^0`.
    pub fn epsilon(&self, u: &TorusElement) -> Scalar {
        u.terms
            .get(&LatticeVector::zero(self.rank()))
            .cloned()
            .unwrap_or_else(|| self.zero())
    }

    /// Split `u = z + c` with `z` supported on the radical (the center) and
    /// `c` on its complement (the commutator subspace).
    pub fn center_split(&self, u: &TorusElement) -> (TorusElement, TorusElement) {
        let mut central = TorusElement::zero();
        let mut comm = TorusElement::zero();
        for (a, coeff) in &u.terms {
            if self.in_full_radical(a) {
                central.add_term(a.clone(), coeff.clone());
            } else {
                comm.add_term(a.clone(), coeff.clone());
            }
        }
        (central, comm)
    }
}
