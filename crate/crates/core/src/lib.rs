//! Exact enumeration and cyclic-sieving verification for plane-partition dynamics.

pub mod error;
pub mod plane;
pub mod poset;
pub mod qpoly;
pub mod sieve;
pub mod tableau;

pub use error::{Error, Result};
pub use plane::{apply_word, Generator, GroupWord, PlanePartition, Toggle, ToggleWord};
pub use poset::{ElementId, PPartition, Poset, PosetKind};
pub use qpoly::{CyclotomicElement, IntPolynomial, ProductFormula};
pub use sieve::{CheckReport, Conjecture, ConjectureReport, CspReport, CyArray, Theorem};
pub use tableau::{GtPattern, Partition, Ssyt, SubsetI};
