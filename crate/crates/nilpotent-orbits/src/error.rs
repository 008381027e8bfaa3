//! Crate-wide error type.
//!
//! Every fallible operation in the library reports through [`Error`]. The
//! variants mirror the precondition vocabulary of the combinatorial maps:
//! size parities, orbit membership, dominance comparability, and the
//! enumeration bounds that keep exhaustive searches finite.

use crate::orbit::Family;
use crate::partition::Partition;

/// Errors raised by partition, orbit, duality, character, and verification
/// operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A box was requested from the empty diagram.
    #[error("cannot remove a box from the empty diagram")]
    EmptyDiagram,

    /// A prepended row would be shorter than the current first row.
    #[error("row of length {len} is shorter than the first row ({min})")]
    RowTooShort { len: u32, min: u32 },

    /// A prepended column would be shorter than the current first column.
    #[error("column of length {len} is shorter than the first column ({min})")]
    ColumnTooShort { len: u32, min: u32 },

    /// Dominance order only compares partitions of equal size.
    #[error("dominance order is undefined between sizes {left} and {right}")]
    SizeMismatch { left: u32, right: u32 },

    /// An enumeration or verification request exceeds the configured bound.
    #[error("{what} {requested} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        requested: u32,
        bound: u32,
    },

    /// The size parity of the partition does not match the family.
    #[error("size {size} has the wrong parity for a type-{family} orbit")]
    ParityMismatch { family: Family, size: u32 },

    /// The partition is not the Young diagram of an orbit of the family.
    #[error("{partition} is not a nilpotent orbit of type {family}")]
    NotAnOrbit {
        partition: Partition,
        family: Family,
    },

    /// The orbit exists but is not special, as the operation requires.
    #[error("{partition} is not a special orbit of type {family}")]
    NotSpecial {
        partition: Partition,
        family: Family,
    },

    /// The operation is undefined for the given family.
    #[error("family {family} is not supported by {operation}")]
    UnsupportedFamily {
        family: Family,
        operation: &'static str,
    },

    /// Filter/family combination with no meaning (metaplectic special is a
    /// type-C notion).
    #[error("filter {filter} is only defined for family C, got {family}")]
    UnsupportedFilter {
        filter: &'static str,
        family: Family,
    },

    /// The brute-force collapse oracle found no dominance maximum. This
    /// signals a theory violation and is treated as a test failure.
    #[error("the dominated type-{family} partitions below {partition} have no maximum")]
    NoMaximum {
        partition: Partition,
        family: Family,
    },

    /// Theta lift requested outside the stable range `a >= n`.
    #[error("stable range requires a >= n, got a = {a} for an orbit of size {size}")]
    StableRangeViolated { a: u32, size: u32 },

    /// A theta-lifted orbit failed its type-B validation. This signals a
    /// theory violation.
    #[error("theta lift {lift} of {partition} is not of type B")]
    LiftNotTypeB {
        partition: Partition,
        lift: Partition,
    },

    /// The requested rank cannot hold all rho-string entries.
    #[error("rank {rank} is too small: the rho strings already fill {needed} slots")]
    RankTooSmall { rank: u32, needed: u32 },

    /// An unknown verification check identifier.
    #[error("unknown check id {0:?} (expected C1..C14)")]
    UnknownCheck(String),

    /// A string did not parse as a partition.
    #[error("invalid partition {0:?}: {1}")]
    InvalidPartition(String, &'static str),

    /// A string did not parse as a half-integer.
    #[error("invalid half-integer {0:?}")]
    InvalidHalfInt(String),

    /// A string did not parse as a family letter.
    #[error("invalid family {0:?}: expected one of A, B, C, D")]
    InvalidFamily(String),

    /// A string did not parse as an orbit filter.
    #[error("invalid filter {0:?}: expected one of all, sp, ms")]
    InvalidFilter(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
