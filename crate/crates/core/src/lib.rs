//! Exact-arithmetic toolkit for GL(k) weight combinatorics: window intervals
//! and their generator sets, Schur/Littlewood-Richardson calculus with an
//! independent character-ring oracle, Borel-Weil-Bott cohomology on
//! Grassmannians, a Lascoux-type resolution engine, graded term catalogs with
//! their cancellation matching, and grade-restriction weight checks.
//!
//! Everything is computed over arbitrary-precision integers; there is no
//! floating point anywhere in this crate.

pub mod bwb;
pub mod characters;
pub mod error;
pub mod graderestrict;
pub mod lascoux;
pub mod qpoly;
pub mod rickard;
pub mod tensorcalc;
pub mod weights;
pub mod windows;

pub use bwb::{BwbResult, GrWeight};
pub use characters::{Decomposition, SymLaurentPoly};
pub use error::{Error, Result};
pub use lascoux::{Contribution, LascouxSetup, LascouxTerm};
pub use tensorcalc::{SlotLabel, SlotSpace};
pub use qpoly::QPolynomial;
pub use rickard::{BettiCopy, Matching, RickardTerm};
pub use weights::{DominantWeight, Partition};
pub use windows::{KernelDescriptor, KernelKind, WindowSpec};
