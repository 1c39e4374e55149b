//! Exact combinatorics of integer partitions and t-cores: the GBG-rank
//! statistic with values in cyclotomic integer rings, the census of its
//! distinct values, and truncated q-series verification of the 4-core
//! eta-product and theta-function identities.

pub mod cyclotomic;
pub mod error;
pub mod gbg;
pub mod littlewood;
pub mod partition;
pub mod qseries;

pub use error::{Error, Result};
pub use partition::{NVector, Partition};
