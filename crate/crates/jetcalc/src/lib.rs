//! Exact symbolic computation for jet differentials.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals,
//! certifications are polynomial identities in formal group parameters, and
//! dimension counts come from exact integer linear algebra. There is no
//! floating point anywhere.
//!
//! The crate is organized around four layers:
//!
//! - [`ratpoly`]: sparse multivariate polynomials over the rationals with a
//!   fixed canonical form, plus exact nullspace computation.
//! - [`jetcore`]: the k-jet model — jet variables `x[j,s]`, the group of
//!   truncated reparametrizations `t -> a_1 t + ... + a_k t^k`, its matrix
//!   action on jets, the induced pullback on jet polynomials, and the total
//!   derivative.
//! - [`invariants`]: generation and certification of relative invariants —
//!   Wronskians, brackets, the Q-sequence, coordinate-change numerators,
//!   Picard operators.
//! - [`dimension`]: fiber dimensions of the full (Green–Griffiths) and
//!   invariant (Demailly–Semple) jet spaces by generating functions and
//!   exact kernel computation.

pub mod dimension;
pub mod invariants;
pub mod jetcore;
pub mod ratpoly;

pub use ratpoly::{Monomial, Polynomial, RatPolyError, Rational, RationalFunction, VarId};

pub use jetcore::{FaaDiBrunoMatrix, JetConfig, JetError, JetPolynomial, Reparametrization};

pub use invariants::{
    CoordinateChangeResult, Group, InvarianceReport, InvarianceStatus, InvariantError,
    PicardOperator,
};

pub use dimension::{DimensionError, GenerationReport, GrowthReport, HilbertTable, InvariantBasis};
