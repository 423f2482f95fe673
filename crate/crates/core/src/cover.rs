//! Covering relations of the dominance order on fixed-weight partitions:
//! recognizing covers, enumerating them, decomposing a dominance relation
//! into a saturated chain of covering steps, and assembling Hasse edges.
//!
//! A partition covers another exactly when one unit moves from a part `i` to
//! a later part `j` (all other parts equal) and either the parts are
//! adjacent (`j = i + 1`) or the lower partition has equal parts at `i` and
//! `j`. Everything here is cross-checked against [`covers_bruteforce`],
//! which decides covering by exhaustive enumeration instead.

use std::collections::HashMap;
use std::fmt;

use crate::enumerate::{partitions_of, partitions_of_with, EnumerationOptions};
use crate::error::Error;
use crate::partition::Partition;

/// Why a single-unit move is a covering step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverFlavor {
    /// The source and target parts are adjacent: `j = i + 1`.
    Adjacent,
    /// The lower partition has equal parts at `i` and `j`.
    EqualParts,
    /// Both conditions hold at once.
    Both,
}

impl CoverFlavor {
    pub fn is_adjacent(self) -> bool {
        matches!(self, CoverFlavor::Adjacent | CoverFlavor::Both)
    }

    pub fn is_equal_parts(self) -> bool {
        matches!(self, CoverFlavor::EqualParts | CoverFlavor::Both)
    }

    fn classify(adjacent: bool, equal_parts: bool) -> Option<Self> {
        match (adjacent, equal_parts) {
            (true, true) => Some(CoverFlavor::Both),
            (true, false) => Some(CoverFlavor::Adjacent),
            (false, true) => Some(CoverFlavor::EqualParts),
            (false, false) => None,
        }
    }
}

impl fmt::Display for CoverFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CoverFlavor::Adjacent => "adjacent",
            CoverFlavor::EqualParts => "equal-parts",
            CoverFlavor::Both => "adjacent+equal-parts",
        };
        write!(f, "{name}")
    }
}

/// One covering step, described on the lower partition: raise part `i` by
/// one and lower part `j` by one. Indices are 1-based and `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverMove {
    pub i: usize,
    pub j: usize,
    pub flavor: CoverFlavor,
}

impl fmt::Display for CoverMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i={} j={} ({})", self.i, self.j, self.flavor)
    }
}

/// One edge of the Hasse diagram: `upper` covers `lower` via `mv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseEdge {
    pub upper: Partition,
    pub lower: Partition,
    pub mv: CoverMove,
}

/// Apply `mv` to the lower partition `mu`, producing the partition that
/// covers it. The stored length is preserved. Fails if the move is not a
/// valid covering step on `mu`.
pub fn apply_move(mu: &Partition, mv: &CoverMove) -> Result<Partition, Error> {
    let parts = mu.parts();
    let fail = |reason| Error::InvalidMove {
        i: mv.i,
        j: mv.j,
        reason,
    };
    if mv.i == 0 || mv.i >= mv.j {
        return Err(fail("indices must satisfy 1 <= i < j"));
    }
    if mv.j > parts.len() {
        return Err(fail("j is past the end of the partition"));
    }
    let (pi, pj) = (parts[mv.i - 1], parts[mv.j - 1]);
    if pj == 0 {
        return Err(fail("part j is zero and cannot be lowered"));
    }
    let adjacent = mv.j == mv.i + 1;
    let equal_parts = pi == pj;
    match CoverFlavor::classify(adjacent, equal_parts) {
        Some(flavor) if flavor == mv.flavor => {}
        Some(_) => return Err(fail("flavor does not match the parts at i and j")),
        None => return Err(fail("neither adjacent nor equal-parts")),
    }
    let mut raised = parts.to_vec();
    raised[mv.i - 1] += 1;
    raised[mv.j - 1] -= 1;
    if !is_non_increasing(&raised) {
        return Err(fail("the raised sequence is not non-increasing"));
    }
    Ok(Partition::from_raw(raised))
}

fn is_non_increasing(values: &[u64]) -> bool {
    values.windows(2).all(|w| w[0] >= w[1])
}

/// The covering move from `a` down to `b`, if `a` covers `b`.
///
/// Both inputs are compared at a common length; weights must match. This is
/// the structural test (one unit moved, adjacency or equal parts) and runs
/// in linear time, unlike [`covers_bruteforce`].
pub fn find_cover_move(a: &Partition, b: &Partition) -> Option<CoverMove> {
    if a.weight() != b.weight() {
        return None;
    }
    let len = a.stored_len().max(b.stored_len());
    let part = |p: &Partition, idx: usize| p.parts().get(idx).copied().unwrap_or(0);
    let mut raised = None;
    let mut lowered = None;
    for idx in 0..len {
        let (ap, bp) = (part(a, idx), part(b, idx));
        if ap == bp {
            continue;
        }
        if ap == bp + 1 && raised.is_none() {
            raised = Some(idx);
        } else if bp == ap + 1 && lowered.is_none() {
            lowered = Some(idx);
        } else {
            return None;
        }
    }
    let (i0, j0) = (raised?, lowered?);
    if i0 >= j0 {
        return None;
    }
    let flavor = CoverFlavor::classify(j0 == i0 + 1, part(b, i0) == part(b, j0))?;
    Some(CoverMove {
        i: i0 + 1,
        j: j0 + 1,
        flavor,
    })
}

/// Decide `a` covers `b` by exhaustive search: `a` must strictly dominate
/// `b` with no partition of the same weight strictly between. Independent
/// of [`find_cover_move`]; weights above the enumeration bound are refused.
pub fn covers_bruteforce(a: &Partition, b: &Partition) -> Result<bool, Error> {
    if a.weight() != b.weight() {
        return Ok(false);
    }
    if a == b || !a.dominates(b) {
        return Ok(false);
    }
    for nu in partitions_of(a.weight())? {
        if nu != *a && nu != *b && a.dominates(&nu) && nu.dominates(b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions covered by `a`, each with the move that produces `a` from
/// it, ordered by ascending `(i, j)`.
pub fn lower_covers(a: &Partition) -> Vec<(Partition, CoverMove)> {
    // One spare slot so a move may lower a part onto a fresh zero,
    // e.g. (2,2) -> (2,1,1).
    let mut upper = a.nonzero_parts().to_vec();
    upper.push(0);
    let len = upper.len();
    let mut found = Vec::new();
    for i0 in 0..len {
        if upper[i0] == 0 {
            break;
        }
        for j0 in (i0 + 1)..len {
            let mut lower = upper.clone();
            lower[i0] -= 1;
            lower[j0] += 1;
            if !is_non_increasing(&lower) {
                continue;
            }
            let flavor = match CoverFlavor::classify(j0 == i0 + 1, lower[i0] == lower[j0]) {
                Some(flavor) => flavor,
                None => continue,
            };
            let mv = CoverMove {
                i: i0 + 1,
                j: j0 + 1,
                flavor,
            };
            found.push((Partition::from_raw(strip(lower)), mv));
        }
    }
    found
}

/// All partitions covering `b`, each with its move, ordered by ascending
/// `(i, j)`.
pub fn upper_covers(b: &Partition) -> Vec<(Partition, CoverMove)> {
    let lower = b.nonzero_parts();
    let len = lower.len();
    let mut found = Vec::new();
    for i0 in 0..len {
        for j0 in (i0 + 1)..len {
            let flavor = match CoverFlavor::classify(j0 == i0 + 1, lower[i0] == lower[j0]) {
                Some(flavor) => flavor,
                None => continue,
            };
            let mut raised = lower.to_vec();
            raised[i0] += 1;
            raised[j0] -= 1;
            if !is_non_increasing(&raised) {
                continue;
            }
            let mv = CoverMove {
                i: i0 + 1,
                j: j0 + 1,
                flavor,
            };
            found.push((Partition::from_raw(strip(raised)), mv));
        }
    }
    found
}

fn strip(mut values: Vec<u64>) -> Vec<u64> {
    while values.last() == Some(&0) {
        values.pop();
    }
    values
}

/// A saturated chain together with a flag recording whether the greedy
/// descent ever had to fall back to breadth-first search.
#[derive(Clone, Debug)]
pub struct ChainTrace {
    pub chain: Vec<Partition>,
    pub used_fallback: bool,
}

/// A saturated chain `a = c_0 > c_1 > ... > c_m = b` in which every step is
/// a covering step. Requires equal weights and `a` dominating `b`; the two
/// failure modes are reported separately.
///
/// Deterministic rule: from the current partition, take the lower cover
/// with the smallest `(i, j)` that still dominates `b`. Should no lower
/// cover qualify (not expected to happen; see [`ChainTrace::used_fallback`]),
/// a breadth-first search over lower covers completes the chain.
pub fn cover_chain(a: &Partition, b: &Partition) -> Result<Vec<Partition>, Error> {
    cover_chain_traced(a, b).map(|trace| trace.chain)
}

/// [`cover_chain`], also reporting whether the fallback search was used.
pub fn cover_chain_traced(a: &Partition, b: &Partition) -> Result<ChainTrace, Error> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch {
            left: a.weight(),
            right: b.weight(),
        });
    }
    if !a.dominates(b) {
        return Err(Error::NotDominating {
            upper: a.to_string(),
            lower: b.to_string(),
        });
    }
    let target = b.stripped();
    let mut chain = vec![a.stripped()];
    let mut used_fallback = false;
    while chain.last().unwrap() != &target {
        let current = chain.last().unwrap();
        let greedy = lower_covers(current)
            .into_iter()
            .map(|(low, _)| low)
            .find(|low| low.dominates(&target));
        match greedy {
            Some(next) => chain.push(next),
            None => {
                used_fallback = true;
                let rest = bfs_chain(current, &target);
                chain.extend(rest.into_iter().skip(1));
            }
        }
    }
    Ok(ChainTrace {
        chain,
        used_fallback,
    })
}

/// Breadth-first search from `from` down the cover relation to `to`,
/// returning the discovered path including both endpoints. `from` must
/// dominate `to` (same weight), so a path always exists.
fn bfs_chain(from: &Partition, to: &Partition) -> Vec<Partition> {
    let mut parents: HashMap<Partition, Partition> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(from.clone());
    while let Some(current) = queue.pop_front() {
        if current == *to {
            let mut path = vec![current];
            while let Some(parent) = parents.get(path.last().unwrap()) {
                path.push(parent.clone());
            }
            path.reverse();
            return path;
        }
        for (low, _) in lower_covers(&current) {
            if low == *from || parents.contains_key(&low) {
                continue;
            }
            parents.insert(low.clone(), current.clone());
            queue.push_back(low);
        }
    }
    unreachable!("a dominating pair of equal weight is always chain-connected");
}

/// Every covering pair among partitions of weight `n`, exactly once, under
/// the default enumeration bound. Edges are ordered by the descending
/// lexicographic position of the upper partition, then by move `(i, j)`.
pub fn hasse_edges(n: u64) -> Result<Vec<HasseEdge>, Error> {
    hasse_edges_with(n, &EnumerationOptions::default())
}

/// [`hasse_edges`] with an explicit enumeration bound.
pub fn hasse_edges_with(n: u64, options: &EnumerationOptions) -> Result<Vec<HasseEdge>, Error> {
    let mut edges = Vec::new();
    for upper in partitions_of_with(n, options)? {
        for (lower, mv) in lower_covers(&upper) {
            edges.push(HasseEdge {
                upper: upper.clone(),
                lower,
                mv,
            });
        }
    }
    Ok(edges)
}
