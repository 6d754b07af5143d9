//! Partitions, skew diagrams, boundary paths and equivalence classes of
//! skew diagrams up to translation of their connected components.

mod class;
mod partition;
mod skew;

pub use class::{arrange, decay, SkewClass};
pub use partition::Partition;
pub use skew::{PathPair, SkewDiagram, Step};
