//! Shifted tableau crystals.
//!
//! Semistandard shifted tableaux over the primed alphabet `1' < 1 < 2' < ...`
//! carry primed and unprimed crystal operators that commute with shifted
//! jeu de taquin. This crate builds those crystals, the reversal
//! (Schützenberger) involution and its restrictions to letter intervals, the
//! shifted reflection operators `σ_i`, and the action of the cactus group,
//! together with exhaustive checkers for their properties.
//!
//! - [`shape`]: strict partitions, skew shifted shapes, complements
//! - [`word`]: primed letters, canonical words, weights, standardization
//! - [`tableau`]: shifted tableaux, enumeration, interval restriction, splicing
//! - [`jdt`]: slides, rectification, Knuth equivalence, LRS tableaux
//! - [`involutions`]: star, evacuation, reversal, `η_{p,q}`
//! - [`crystal`]: crystal operators, strings, length functions, `σ_i`
//! - [`graph`]: crystal graphs, components, cactus action, exports
//! - [`verify`]: verification suites

pub mod crystal;
pub mod error;
pub mod graph;
pub mod involutions;
pub mod jdt;
pub mod shape;
pub mod tableau;
pub mod verify;
pub mod word;

pub use crystal::{Operator, StringDescriptor, StringKind};
pub use error::{Error, Result};
pub use graph::{CactusGenerator, CrystalGraph};
pub use involutions::IntervalPermutation;
pub use jdt::SlideRecord;
pub use shape::{Cell, SkewShape, StrictPartition};
pub use tableau::ShiftedTableau;
pub use word::{Letter, PrimedWord, Weight};
