//! Exact computations in the quantum torus `C_q`, the extended affine Lie
//! algebra `sl_2(C_q) + C + D`, and its Verma-type modules.
//!
//! Everything is computed over one of three exact scalar backends:
//!
//! * rational numbers (the commutative torus),
//! * the cyclotomic field `Q(z_N)` with `q_ij = z_N^{m_ij}`,
//! * the generic Laurent ring `Q[q_ij^{±1}]` with formal parameters.
//!
//! All identities checked by this crate are decidable equalities of
//! canonical forms; there is no floating point anywhere.
//!
//! The layers build bottom-up:
//!
//! * [`scalar`] — backend configuration and canonical scalar arithmetic;
//! * [`lattice`] — the lattice `Z^n`, its two orderings, the cocycle
//!   `sigma`, the commutator map `f`, and the radical sublattices `R_r`;
//! * [`torus`] — the associative algebra `C_q` itself;
//! * [`algebra`] — basis, bracket table, matrix oracle, invariant form,
//!   roots of the Lie algebra;
//! * [`heis`] — the Heisenberg Verma module `H(lambda)`: PBW straightening,
//!   graded bases, the distinguished submodule, singular-vector search;
//! * [`verma`] — imaginary Verma modules `M(lambda)` and their structure
//!   probes;
//! * [`parse`] — text literals for scalars, lattice vectors, basis keys and
//!   module vectors (round-trips with the formatters);
//! * [`config`] — JSON session configuration shared with the CLI.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod config;
pub mod error;
pub mod heis;
pub mod intmat;
pub mod lattice;
pub mod linalg;
pub mod parse;
pub mod scalar;
pub mod torus;
pub mod verma;

pub use crate::config::SessionConfig;
pub use crate::error::{Error, Result};
pub use crate::lattice::LatticeVector;
pub use crate::scalar::{Backend, Context, Scalar, ScalarConfig};
