//! Streaming enumeration of the partitions of a given weight, in descending
//! lexicographic order, with optional part-size and length constraints.

use crate::error::Error;
use crate::partition::Partition;

/// Default refusal threshold for enumeration weights. p(40) is 37338
/// partitions; anything far beyond that is almost certainly a typo rather
/// than a desk-scale sweep, so it must be overridden explicitly.
pub const DEFAULT_WEIGHT_BOUND: u64 = 40;

/// Constraints and safety bound for [`partitions_of_with`].
#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    /// Keep only partitions with at most this many (positive) parts.
    pub max_len: Option<usize>,
    /// Keep only partitions whose largest part is at most this.
    pub max_part: Option<u64>,
    /// Refuse weights above this bound.
    pub weight_bound: u64,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            max_len: None,
            max_part: None,
            weight_bound: DEFAULT_WEIGHT_BOUND,
        }
    }
}

impl EnumerationOptions {
    /// Default constraints with an explicit safety bound.
    pub fn with_bound(weight_bound: u64) -> Self {
        Self {
            weight_bound,
            ..Self::default()
        }
    }
}

/// Every partition of weight `n`, largest first, under the default bound.
pub fn partitions_of(n: u64) -> Result<Partitions, Error> {
    partitions_of_with(n, &EnumerationOptions::default())
}

/// Every partition of weight `n` satisfying `options`, in descending
/// lexicographic order: `(n)` first, all-ones last.
pub fn partitions_of_with(n: u64, options: &EnumerationOptions) -> Result<Partitions, Error> {
    if n > options.weight_bound {
        return Err(Error::WeightBoundExceeded {
            weight: n,
            bound: options.weight_bound,
        });
    }
    // Positive parts mean at most n of them, each at most n.
    let max_part = options.max_part.unwrap_or(n).min(n);
    let max_len = options.max_len.unwrap_or(n as usize).min(n as usize);
    Ok(Partitions {
        n,
        max_part,
        max_len,
        state: State::Fresh,
    })
}

enum State {
    Fresh,
    Running(Vec<u64>),
    Done,
}

/// Iterator over partitions of a fixed weight; see [`partitions_of_with`].
pub struct Partitions {
    n: u64,
    max_part: u64,
    max_len: usize,
    state: State,
}

impl Partitions {
    /// Greedily fill `remaining` into at most `slots` parts bounded by
    /// `bound`, largest parts first. Callers guarantee feasibility.
    fn fill(&self, out: &mut Vec<u64>, mut remaining: u64, mut bound: u64, mut slots: usize) {
        while remaining > 0 {
            debug_assert!(slots > 0);
            let part = bound.min(remaining);
            out.push(part);
            remaining -= part;
            bound = part;
            slots -= 1;
        }
    }

    fn feasible(remaining: u64, bound: u64, slots: usize) -> bool {
        u128::from(remaining) <= u128::from(bound) * slots as u128
    }

    fn first(&self) -> Option<Vec<u64>> {
        if self.n == 0 {
            return Some(Vec::new());
        }
        if !Self::feasible(self.n, self.max_part, self.max_len) {
            return None;
        }
        let mut parts = Vec::new();
        self.fill(&mut parts, self.n, self.max_part, self.max_len);
        Some(parts)
    }

    /// The next partition after `parts` in descending lexicographic order:
    /// decrement the rightmost part that can absorb the change, then refill
    /// the tail greedily under the new, smaller head.
    fn successor(&self, parts: &[u64]) -> Option<Vec<u64>> {
        let mut suffix: u64 = 0;
        for idx in (0..parts.len()).rev() {
            suffix += parts[idx];
            if parts[idx] == 1 {
                continue;
            }
            let head = parts[idx] - 1;
            let remaining = suffix - head;
            let slots = self.max_len - idx - 1;
            if !Self::feasible(remaining, head, slots) {
                continue;
            }
            let mut next = parts[..idx].to_vec();
            next.push(head);
            self.fill(&mut next, remaining, head, slots);
            return Some(next);
        }
        None
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = match std::mem::replace(&mut self.state, State::Done) {
            State::Fresh => self.first(),
            State::Running(parts) => self.successor(&parts),
            State::Done => None,
        }?;
        let item = Partition::from_raw(current.clone());
        self.state = State::Running(current);
        Some(item)
    }
}
