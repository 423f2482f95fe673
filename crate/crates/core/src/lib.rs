//! Computations in the dominance (majorization) order on integer
//! partitions.
//!
//! * [`partition`] — the [`Partition`] and [`NonIncSequence`] types,
//!   prefix-sum dominance, padding, and the k-transform
//!   `|part - k|`-sorted-descending.
//! * [`enumerate`] — streaming enumeration of the partitions of a weight,
//!   largest first.
//! * [`cover`] — single-unit covering moves, a brute-force covering oracle,
//!   cover enumeration, saturated chains, and Hasse edges.
//! * [`theorem`] — the dominance-preservation property of the k-transform,
//!   its five-regime constructive analysis, and exhaustive verification
//!   sweeps.
//!
//! Everything is a pure function on immutable values; all types are `Send`
//! and `Sync`, and sweeps parallelize by splitting index ranges rather than
//! sharing any state.

pub mod cover;
pub mod enumerate;
pub mod error;
pub mod partition;
pub mod theorem;

pub use cover::{
    apply_move, cover_chain, cover_chain_traced, covers_bruteforce, find_cover_move, hasse_edges,
    hasse_edges_with, lower_covers, upper_covers, ChainTrace, CoverFlavor, CoverMove, HasseEdge,
};
pub use enumerate::{
    partitions_of, partitions_of_with, EnumerationOptions, Partitions, DEFAULT_WEIGHT_BOUND,
};
pub use error::Error;
pub use partition::{dominates, first_violation, NonIncSequence, Partition, PART_LIMIT};
pub use theorem::{
    apply_case_replacement, classify_case, replacement_plan, sweep, sweep_with,
    unequal_weight_counterexample, verify_pair, verify_pair_detailed, CaseHistogram, CaseLabel,
    Counterexample, PairCheck, ReplacementPlan, Substitution, SweepOptions, VerificationReport,
    WeightMismatchDemo,
};
