use thiserror::Error;

/// Errors reported by partition construction, parsing, and the
/// dominance/cover/verification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Parts (or sequence values) were not in non-increasing order.
    #[error("parts are not non-increasing: {prev} is followed by {next} at position {position}")]
    Unsorted {
        /// 1-based position of the offending (larger) entry.
        position: usize,
        prev: u64,
        next: u64,
    },

    /// A single part exceeded the supported input range.
    #[error("part {part} exceeds the input limit {limit}")]
    PartTooLarge { part: u64, limit: u64 },

    /// The total weight exceeded the supported input range.
    #[error("weight {weight} exceeds the input limit {limit}")]
    WeightTooLarge { weight: u128, limit: u64 },

    /// A padding request was shorter than the positive parts it must keep.
    #[error("cannot pad to length {len}: the partition has {required} positive parts")]
    PadTooShort { len: usize, required: usize },

    /// Enumeration refused a weight above the safety bound.
    #[error("weight {weight} exceeds the enumeration safety bound {bound}")]
    WeightBoundExceeded { weight: u64, bound: u64 },

    /// Two partitions that must have equal weight do not.
    /// The transform does not preserve dominance across weights:
    /// (2) dominates (1), yet their 2-transforms are (0) and (1).
    #[error("weights differ ({left} vs {right}); equal weight is required")]
    WeightMismatch { left: u64, right: u64 },

    /// The first partition does not dominate the second.
    #[error("{upper} does not dominate {lower}")]
    NotDominating { upper: String, lower: String },

    /// A cover move that cannot be applied to the given partition.
    #[error("invalid cover move (i={i}, j={j}): {reason}")]
    InvalidMove {
        i: usize,
        j: usize,
        reason: &'static str,
    },

    /// The transform parameter for a theorem check must be a positive integer.
    #[error("k must be a positive integer, got {k}")]
    NonPositiveK { k: u64 },

    /// The transform parameter is too large to offset parts against.
    #[error("k = {k} is out of the supported range")]
    KOutOfRange { k: u64 },

    /// Partition text with no entries.
    #[error("empty partition text; write the zero partition as '0'")]
    EmptyInput,

    /// Partition text with an empty entry, e.g. a doubled or trailing comma.
    #[error("empty entry in partition text")]
    EmptyToken,

    /// A token that does not parse as a non-negative integer.
    #[error("cannot parse '{token}' as a non-negative part")]
    BadToken { token: String },
}
