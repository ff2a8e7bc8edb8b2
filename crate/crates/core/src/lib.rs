//! Exact representation theory of the holomorph `Hol(C_{p^n}) = C_{p^n} ⋊ (Z/p^n)^*`.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactnum`]: rationals, cyclotomic polynomials and exact arithmetic in
//!   `Q(ζ_m)` using the power basis.
//! * [`holgroup`]: the `(i, u)` element model, conjugacy classes, subgroups
//!   and cores.
//! * [`littlegroup`]: complex irreducible characters built from orbits of the
//!   unit group on the dual of `C_{p^n}`, plus monomial matrix models.
//! * [`ratreps`]: Galois classes, rational characters, rational matrix models
//!   and the Wedderburn decomposition of `Q[G]`.
//! * [`quasiperm`]: the invariants `d(χ)`, `m(χ)`, `c(χ)` and the minimal
//!   degrees `c(G)`, `q(G)`, `p(G)` with a brute-force permutation oracle.
//! * [`verify`]: the end-to-end invariant suite used by the `verify` command.

pub mod error;
pub mod exactnum;
pub mod holgroup;
pub mod littlegroup;
pub mod quasiperm;
pub mod ratreps;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{Cyclotomic, CyclotomicPoly, Matrix, Rational};
pub use holgroup::{ConjClasses, Element, Holomorph, HolomorphParams, Subgroup};
pub use littlegroup::{CharacterTable, ComplexIrrep, IrrepParams, MatrixModel, Orbit};
pub use quasiperm::{DegreesReport, QuasiPermData};
pub use ratreps::{RationalIrrep, RationalMatrixModel, SchurStatus, WedderburnComponent};
