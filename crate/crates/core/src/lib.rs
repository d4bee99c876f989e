//! Algebraic shifting of simplicial complexes and companion invariants.

pub mod complex;
pub mod construct;
pub mod error;
pub mod exterior;
pub mod face;
pub mod generators;
pub mod homology;
pub mod intervals;
pub mod io;
pub mod lefschetz;
pub mod linalg;
pub mod minors;
pub mod nearcone;
pub mod obstruction;
pub mod rigidity;
pub mod shift;
pub mod structure;
pub mod symmetric;
pub mod vectors;

pub use complex::{ComplexOrder, SimplicialComplex};
pub use error::{Error, Result};
pub use face::Face;
pub use homology::BettiVector;
pub use linalg::{GenericConfig, GenericMatrixSource};
pub use minors::{MinorStep, MinorWitness};
pub use obstruction::{SmithClass, VanKampenReport};
pub use shift::{shift, ShiftResult, Variant};
pub use vectors::{FVector, GVector, HVector};
