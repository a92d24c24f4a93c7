//! Combinatorial topology of quivers: multipath and matching complexes,
//! blow-ups, integral simplicial homology and magnitude homology.

pub mod blowup;
pub mod complex;
pub mod construct;
pub mod family;
pub mod format;
pub mod homology;
pub mod magnitude;
pub mod minor;
pub mod predicates;
pub mod quiver;
pub mod random;
pub mod snf;
pub mod survey;

pub use complex::{SimplicialComplex, SimplicialMap};
pub use family::Family;
pub use minor::{Image, MinorMorphism};
pub use quiver::{Edge, Kind, Quiver, QuiverError};
