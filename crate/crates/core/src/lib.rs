//! Exact computations with finite-dimensional Hopf algebras.
//!
//! Algebras are stored by structure constants over a cyclotomic field
//! Q(ζ_n). On top of that the crate builds smash coproducts `A ♮ k^G` from
//! group actions by Hopf automorphisms and computes integrals, twisted Hopf
//! powers, twisted exponents and (twisted) Frobenius–Schur indicators, all
//! in exact arithmetic.
//!
//! ```
//! use hopfsmash::catalog;
//! use hopfsmash::indicators::regular_twisted_indicator;
//!
//! let a = catalog::nichols8();
//! let id = catalog::nichols8_automorphism_int(&a.algebra, [1, 0, 0, 1]).unwrap();
//! let nu = regular_twisted_indicator(&a.algebra, 3, &id).unwrap();
//! assert_eq!(nu.value.to_string(), "9");
//! ```

pub mod catalog;
pub mod error;
pub mod exact_math;
pub mod formats;
pub mod hopf_core;
pub mod indicators;
pub mod integrals;
pub mod powers_exponents;
pub mod representations;
pub mod smash;

pub use error::{HopfError, Result};
pub use exact_math::{FieldSpec, Matrix, Scalar, Vector};
pub use hopf_core::FiniteHopfAlgebra;
