//! Integer partitions, non-increasing sequences, the dominance order, and
//! the k-transform.
//!
//! A [`Partition`] stores its parts non-increasingly and may carry explicit
//! trailing zeros: `(4,2,1,0)` and `(4,2,1)` are the same partition (equality
//! and hashing ignore trailing zeros) but have different stored lengths. The
//! stored length matters to exactly one operation, [`Partition::k_transform`],
//! whose output keeps the stored length and where every zero part contributes
//! a value `k`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::Error;

/// Largest accepted input part, and largest accepted input weight.
///
/// Keeping parts and weights at or below 2^31 guarantees that every prefix
/// sum and every transformed value fits comfortably in the accumulators used
/// here, so no arithmetic in this crate can silently wrap.
pub const PART_LIMIT: u64 = 1 << 31;

/// An integer partition: a non-increasing sequence of non-negative parts.
#[derive(Clone, Debug, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Strict constructor: `parts` must already be non-increasing.
    ///
    /// Rejects unsorted input, parts above [`PART_LIMIT`], and total weight
    /// above [`PART_LIMIT`].
    pub fn new(parts: Vec<u64>) -> Result<Self, Error> {
        check_sorted(&parts)?;
        check_limits(&parts)?;
        Ok(Self { parts })
    }

    /// Sorting constructor: accepts parts in any order and canonicalizes.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self, Error> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        check_limits(&parts)?;
        Ok(Self { parts })
    }

    /// The empty partition (weight 0, stored length 0).
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Internal constructor for parts known to be sorted and in range.
    pub(crate) fn from_raw(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    /// All stored parts, including any trailing zeros.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The parts with trailing zeros stripped: the canonical form.
    pub fn nonzero_parts(&self) -> &[u64] {
        &self.parts[..self.nonzero_len()]
    }

    /// Stored length, counting trailing zeros.
    pub fn stored_len(&self) -> usize {
        self.parts.len()
    }

    /// Number of positive parts.
    pub fn nonzero_len(&self) -> usize {
        let mut len = self.parts.len();
        while len > 0 && self.parts[len - 1] == 0 {
            len -= 1;
        }
        len
    }

    /// Sum of the parts. Stable under trailing-zero padding.
    ///
    /// Cannot overflow: constructors reject weights above [`PART_LIMIT`].
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// A copy stored at exactly `len` entries, padding with trailing zeros.
    ///
    /// `len` may also shrink the stored form, as long as no positive part is
    /// cut off. The result is equal to `self` under canonical comparison.
    pub fn pad(&self, len: usize) -> Result<Self, Error> {
        let required = self.nonzero_len();
        if len < required {
            return Err(Error::PadTooShort { len, required });
        }
        let mut parts = self.parts[..required.min(self.parts.len())].to_vec();
        parts.resize(len, 0);
        Ok(Self { parts })
    }

    /// A copy with trailing zeros stripped.
    pub fn stripped(&self) -> Self {
        Self {
            parts: self.nonzero_parts().to_vec(),
        }
    }

    /// True iff `self` dominates `other`: every prefix sum of `self` is at
    /// least the corresponding prefix sum of `other`, treating entries past
    /// the end as zeros. Reflexive, and unaffected by trailing zeros.
    pub fn dominates(&self, other: &Partition) -> bool {
        dominates(&self.parts, &other.parts)
    }

    /// The sequence `|part - k|` for every stored part, sorted
    /// non-increasingly. Output length equals the stored length, so each
    /// explicit zero part contributes a value `k` (pad first when a specific
    /// length is wanted).
    ///
    /// For `k <= 0` this is the original order with every part raised by
    /// `-k`; for `k >= parts[0]` it is the reversal `(k - last, ..., k - first)`.
    pub fn k_transform(&self, k: i64) -> NonIncSequence {
        let k = i128::from(k);
        let mut values: Vec<u64> = self.parts.iter().map(|&p| abs_offset(p, k)).collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        NonIncSequence { values }
    }

    /// Parse with the same tokenization as [`FromStr`], but sorting the
    /// parts instead of rejecting unordered input.
    pub fn parse_unsorted(text: &str) -> Result<Self, Error> {
        Self::from_unsorted(tokenize(text)?)
    }
}

/// |p - k| for a part p, exact over the full supported range.
fn abs_offset(part: u64, k: i128) -> u64 {
    let diff = i128::from(part) - k;
    // parts <= 2^31 and |k| <= 2^63, so |diff| < 2^64 always fits.
    u64::try_from(diff.unsigned_abs()).expect("offset fits in 64 bits")
}

fn check_sorted(parts: &[u64]) -> Result<(), Error> {
    for (pos, pair) in parts.windows(2).enumerate() {
        if pair[0] < pair[1] {
            return Err(Error::Unsorted {
                position: pos + 2,
                prev: pair[0],
                next: pair[1],
            });
        }
    }
    Ok(())
}

fn check_limits(parts: &[u64]) -> Result<(), Error> {
    let mut weight: u128 = 0;
    for &part in parts {
        if part > PART_LIMIT {
            return Err(Error::PartTooLarge {
                part,
                limit: PART_LIMIT,
            });
        }
        weight += u128::from(part);
    }
    if weight > u128::from(PART_LIMIT) {
        return Err(Error::WeightTooLarge {
            weight,
            limit: PART_LIMIT,
        });
    }
    Ok(())
}

fn tokenize(text: &str) -> Result<Vec<u64>, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut parts = Vec::new();
    for piece in trimmed.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::EmptyToken);
        }
        for token in piece.split_whitespace() {
            let part: u64 = token.parse().map_err(|_| Error::BadToken {
                token: token.to_string(),
            })?;
            parts.push(part);
        }
    }
    Ok(parts)
}

/// Strict parse of comma- or whitespace-separated parts, e.g. `4,2,1,0`.
/// Rejects anything that is not a non-negative integer and rejects
/// increasing adjacent pairs; use [`Partition::parse_unsorted`] to sort
/// instead.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        Partition::new(tokenize(text)?)
    }
}

/// Prints the canonical (zero-stripped) form, comma-separated; the empty
/// partition prints as `0`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_values(f, self.nonzero_parts())
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.nonzero_parts() == other.nonzero_parts()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nonzero_parts().hash(state);
    }
}

/// A non-increasing sequence of non-negative integers.
///
/// Unlike [`Partition`], the length is significant: `(3,0)` and `(3)` are
/// different sequences. This is the codomain of [`Partition::k_transform`],
/// which fixes the output length to the input's stored length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NonIncSequence {
    values: Vec<u64>,
}

impl NonIncSequence {
    /// `values` must already be non-increasing; no magnitude limit applies.
    pub fn new(values: Vec<u64>) -> Result<Self, Error> {
        check_sorted(&values)?;
        Ok(Self { values })
    }

    /// Internal constructor for values known to be sorted.
    pub(crate) fn from_raw(values: Vec<u64>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        Self { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Prefix-sum dominance, exactly as for partitions.
    pub fn dominates(&self, other: &NonIncSequence) -> bool {
        dominates(&self.values, &other.values)
    }
}

/// Prints all stored values, comma-separated; the empty sequence prints as `0`.
impl fmt::Display for NonIncSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_values(f, &self.values)
    }
}

fn format_values(f: &mut fmt::Formatter<'_>, values: &[u64]) -> fmt::Result {
    if values.is_empty() {
        return write!(f, "0");
    }
    for (idx, value) in values.iter().enumerate() {
        if idx > 0 {
            write!(f, ",")?;
        }
        write!(f, "{value}")?;
    }
    Ok(())
}

/// Prefix-sum dominance on raw non-increasing slices, padding the shorter
/// one with zeros. The accumulators are 128-bit, so the comparison is exact
/// for every value this crate can produce.
pub fn dominates(a: &[u64], b: &[u64]) -> bool {
    first_violation(a, b).is_none()
}

/// The first (1-based) prefix index at which `a`'s prefix sum falls below
/// `b`'s, or `None` when `a` dominates `b`.
pub fn first_violation(a: &[u64], b: &[u64]) -> Option<usize> {
    let len = a.len().max(b.len());
    let mut sum_a: u128 = 0;
    let mut sum_b: u128 = 0;
    for idx in 0..len {
        sum_a += a.get(idx).copied().unwrap_or(0) as u128;
        sum_b += b.get(idx).copied().unwrap_or(0) as u128;
        if sum_a < sum_b {
            return Some(idx + 1);
        }
    }
    None
}
