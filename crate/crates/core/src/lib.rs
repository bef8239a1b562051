//! Invariants of affine and projective monomial curves: numerical semigroups,
//! Apery sets and posets, toric ideals, graded Betti numbers, and the
//! closed-form families built on them.

pub mod error;
pub mod families;
pub mod homog;
pub mod input;
pub mod numsg;
pub mod poset;
pub mod report;
pub mod resolve;
pub mod sweep;
pub mod toric;

pub use error::{Error, Result};
pub use homog::{HomogeneousMonoid, Point2, ProjectiveAperySet};
pub use numsg::{AperySet, NumericalSemigroup, Sequence};
pub use poset::AperyPoset;
