//! Tight-closure invariants of the maximal ideal in Stanley-Reisner rings.
//!
//! The central object is the *core of 𝔪: the intersection of all minimal
//! *-reductions of the homogeneous maximal ideal of k[Δ]. It can be computed
//! exactly for some families of complexes, by exhaustive search over small
//! prime fields, or estimated by random sampling.

pub mod algebra;
pub mod complex;
pub mod core_engine;
pub mod error;
pub mod monomial_ideals;
pub mod reductions;
pub mod sr_ring;

pub use algebra::{Field, FieldConfig, Matrix, PrimeField, Rationals};
pub use complex::SimplicialComplex;
pub use core_engine::{CoreReport, Mode};
pub use error::{Error, Result};
pub use monomial_ideals::{Ambient, Monomial, MonomialIdeal};
pub use reductions::{LinearIdeal, ReductionCertificate};
pub use sr_ring::{GradedPiece, StanleyReisnerRing};
