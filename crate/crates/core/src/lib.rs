//! The poset of skew diagrams ordered by column addition and row union,
//! Littlewood-Richardson decomposition of skew characters, and an exhaustive
//! checker for the resulting bounds on components, constituents and
//! one-box-differing pairs.

pub mod diagrams;
pub mod error;
pub mod lrrule;
pub mod poset;
pub mod sequences;
pub mod verifier;

pub use diagrams::{decay, Partition, PathPair, SkewClass, SkewDiagram, Step};
pub use error::{Error, Result};
pub use lrrule::{CcType, SkewCharacter};
pub use poset::{CoverMove, Direction, MoveKind, WitnessChain};
