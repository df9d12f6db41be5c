//! Exact computer algebra for the character bases of symmetric functions.
//!
//! The crate provides integer partitions and multisets, column-strict
//! tableaux (integer- and multiset-valued), Littlewood-Richardson rules,
//! exact sparse symmetric-function arithmetic over the h/p/s bases, the
//! induced (ht) and irreducible (st) character bases with their tableau
//! product rules, stable Kronecker coefficients, and brute-force oracles
//! validating every combinatorial rule at desk scale.
//!
//! All arithmetic is exact; there is no floating point anywhere. Values are
//! immutable after construction and all operations are pure, so everything
//! can be shared freely across threads; the internal memo tables are behind
//! mutexes.

pub mod error;
pub mod multiset;
pub mod oracle;
pub mod partition;
pub mod selftest;
pub mod stable;
pub mod symfunc;
pub mod tableau;
pub mod word;

pub use error::{Error, Result};
pub use multiset::{Letter, Multiset, MultisetPartition};
pub use partition::{Composition, Partition};
pub use symfunc::{BasisTag, Coeff, SymExpr};
pub use tableau::{CellLabel, FillProfile, MultisetTableau, SkewShape, SkewTableau};
