//! Highest-weight words of the type B and C crystals, their tableaux, promotion,
//! growth diagrams and chord diagrams, plus the cyclic sieving checks built on them.

pub mod crystals;
pub mod growth;
pub mod promotion;
pub mod sieving;
pub mod verify;
pub mod virtualize;
pub mod weights;

pub use crystals::{enumerate_zero, enumerate_zero_par, Dir, Family, Kind, Letter, TableauSeq, Word};
pub use growth::{blocksum, blowup, growth_diagram, growth_inverse, growth_matrix, ChainDir, RuleSet};
pub use promotion::{chord_matrix, promote, promotion_grid, rotate_matrix, ChordMap, FilledMatrix};
pub use weights::{Partition, StepKind, WeightVec};
