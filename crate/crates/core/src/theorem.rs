//! Executable form of the dominance-preservation property of the
//! k-transform, together with its constructive cover-step analysis.
//!
//! The property: if `lambda` and `mu` are partitions of the same weight,
//! padded to a common length, and `lambda` dominates `mu`, then for every
//! positive `k` the transform preserves dominance:
//! `lambda.k_transform(k)` dominates `mu.k_transform(k)`.
//!
//! Because every dominance relation decomposes into covering steps
//! ([`crate::cover::cover_chain`]), it suffices to understand one covering
//! step. A step raises part `i` and lowers part `j` of `mu`; on the
//! transformed multiset this replaces one copy of `|mu_i - k|` by
//! `|mu_i + 1 - k|` and one copy of `|mu_j - k|` by `|mu_j - 1 - k|`. How
//! those two values move splits into five regimes of `k` relative to `mu_i`
//! and `mu_j` — the five [`CaseLabel`] variants. [`sweep`] checks all of
//! this exhaustively for one weight and reports every deviation it finds.

use std::fmt;
use std::time::{Duration, Instant};

use crate::cover::{apply_move, lower_covers, CoverMove};
use crate::enumerate::{partitions_of_with, EnumerationOptions};
use crate::error::Error;
use crate::partition::{first_violation, NonIncSequence, Partition};

/// Which of the five regimes `k` falls into, relative to the parts
/// `mu_i >= mu_j` of a covering step on `mu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// `k < mu_j`: both transformed values sit on the positive side.
    KBelow,
    /// `k = mu_j < mu_i`: the lowered part crosses zero.
    KEqualsLowerOnly,
    /// `k = mu_j = mu_i`: both parts sit exactly at `k`.
    KEqualsBoth,
    /// `mu_j < k <= mu_i`: the two parts straddle `k`.
    KBetween,
    /// `k > mu_i`: both transformed values sit on the reflected side.
    KAbove,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 5] = [
        CaseLabel::KBelow,
        CaseLabel::KEqualsLowerOnly,
        CaseLabel::KEqualsBoth,
        CaseLabel::KBetween,
        CaseLabel::KAbove,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseLabel::KBelow => "k_below",
            CaseLabel::KEqualsLowerOnly => "k_equals_lower_only",
            CaseLabel::KEqualsBoth => "k_equals_both",
            CaseLabel::KBetween => "k_between",
            CaseLabel::KAbove => "k_above",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Which occurrence of a value an in-place substitution touches.
///
/// A value that grows replaces its first occurrence and a value that
/// shrinks replaces its last; either way a sorted sequence stays sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OccurrenceTarget {
    First,
    Last,
}

/// Replace one occurrence of `old_value` by `new_value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub old_value: u64,
    pub new_value: u64,
    pub target: OccurrenceTarget,
}

/// The two substitutions that turn `mu`'s transformed multiset into the
/// covering partition's, for one `(move, k)` instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReplacementPlan {
    pub label: CaseLabel,
    /// Part `i`'s substitution first, part `j`'s second.
    pub substitutions: [Substitution; 2],
    /// False only in the [`CaseLabel::KAbove`] regime with `mu_i = mu_j`,
    /// where the two substitutions target the same value in opposite
    /// directions and no single in-place occurrence choice is forced.
    pub positional_well_defined: bool,
}

impl ReplacementPlan {
    /// Perform both substitutions on the multiset content of `mu_k` and
    /// re-sort. This is the constructive route to the covering partition's
    /// transform.
    pub fn apply_multiset(&self, mu_k: &NonIncSequence) -> NonIncSequence {
        let mut values = mu_k.values().to_vec();
        for sub in &self.substitutions {
            let pos = values
                .iter()
                .position(|&v| v == sub.old_value)
                .expect("substitution value occurs in the transformed sequence");
            values[pos] = sub.new_value;
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
        NonIncSequence::from_raw(values)
    }

    /// Perform both substitutions in place, honoring each occurrence
    /// target, without re-sorting. Returns `None` when the targeting is
    /// ambiguous (see [`Self::positional_well_defined`]). The result is
    /// expected to be sorted already; callers check.
    pub fn apply_positional(&self, mu_k: &NonIncSequence) -> Option<Vec<u64>> {
        if !self.positional_well_defined {
            return None;
        }
        let values = mu_k.values();
        let [first_sub, second_sub] = &self.substitutions;
        let locate = |sub: &Substitution| -> usize {
            let found = match sub.target {
                OccurrenceTarget::First => values.iter().position(|&v| v == sub.old_value),
                OccurrenceTarget::Last => values.iter().rposition(|&v| v == sub.old_value),
            };
            found.expect("substitution value occurs in the transformed sequence")
        };
        let pos_a = locate(first_sub);
        let mut pos_b = locate(second_sub);
        if pos_b == pos_a {
            // Same value, same direction: take the first two occurrences.
            pos_b = pos_a + 1;
            assert_eq!(values[pos_b], second_sub.old_value);
        }
        let mut out = values.to_vec();
        out[pos_a] = first_sub.new_value;
        out[pos_b] = second_sub.new_value;
        Some(out)
    }
}

fn to_signed(k: u64) -> Result<i64, Error> {
    if k == 0 {
        return Err(Error::NonPositiveK { k });
    }
    i64::try_from(k).map_err(|_| Error::KOutOfRange { k })
}

/// The parts of `mu` at the move's two positions, after validating that the
/// move is a genuine covering step on `mu`.
fn move_parts(mu: &Partition, mv: &CoverMove) -> Result<(u64, u64), Error> {
    apply_move(mu, mv)?;
    Ok((mu.parts()[mv.i - 1], mu.parts()[mv.j - 1]))
}

fn classify(mu_i: u64, mu_j: u64, k: u64) -> CaseLabel {
    debug_assert!(mu_i >= mu_j);
    if k < mu_j {
        CaseLabel::KBelow
    } else if k == mu_j && mu_j < mu_i {
        CaseLabel::KEqualsLowerOnly
    } else if k == mu_j {
        CaseLabel::KEqualsBoth
    } else if k <= mu_i {
        CaseLabel::KBetween
    } else {
        CaseLabel::KAbove
    }
}

/// The unique regime a valid `(mu, move, k)` instance falls into, `k >= 1`.
pub fn classify_case(mu: &Partition, mv: &CoverMove, k: u64) -> Result<CaseLabel, Error> {
    to_signed(k)?;
    let (mu_i, mu_j) = move_parts(mu, mv)?;
    Ok(classify(mu_i, mu_j, k))
}

/// The two substitutions a covering step performs on `mu`'s transformed
/// multiset, with their in-place occurrence targets.
pub fn replacement_plan(mu: &Partition, mv: &CoverMove, k: u64) -> Result<ReplacementPlan, Error> {
    to_signed(k)?;
    let (mu_i, mu_j) = move_parts(mu, mv)?;
    let label = classify(mu_i, mu_j, k);
    let sub = |old: u64, new: u64| Substitution {
        old_value: old,
        new_value: new,
        target: if new > old {
            OccurrenceTarget::First
        } else {
            OccurrenceTarget::Last
        },
    };
    // Part i goes from mu_i to mu_i + 1, part j from mu_j to mu_j - 1;
    // mu_j >= 1 is guaranteed by move validation.
    let sub_i = sub(mu_i.abs_diff(k), (mu_i + 1).abs_diff(k));
    let sub_j = sub(mu_j.abs_diff(k), (mu_j - 1).abs_diff(k));
    Ok(ReplacementPlan {
        label,
        substitutions: [sub_i, sub_j],
        positional_well_defined: !(label == CaseLabel::KAbove && mu_i == mu_j),
    })
}

/// Construct the covering partition's transform from `mu`'s transform by
/// substitution and a re-sort. Equals `apply_move(mu, mv).k_transform(k)`.
pub fn apply_case_replacement(
    mu: &Partition,
    mv: &CoverMove,
    k: u64,
) -> Result<NonIncSequence, Error> {
    let plan = replacement_plan(mu, mv, k)?;
    let mu_k = mu.k_transform(to_signed(k)?);
    Ok(plan.apply_multiset(&mu_k))
}

/// Outcome of checking one `(lambda, mu, k)` instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub holds: bool,
    pub lambda_k: NonIncSequence,
    pub mu_k: NonIncSequence,
    /// 1-based prefix index where dominance first fails, when it fails.
    pub first_violated_prefix: Option<usize>,
}

/// Does the transform preserve dominance for this pair and this `k`?
///
/// `lambda` must dominate `mu` and the weights must match — violations are
/// errors, not `false` returns. Both partitions are padded to a common
/// length before transforming; skipping that padding would make the
/// comparison length-sensitive (each explicit zero contributes a value `k`)
/// and produce spurious failures.
pub fn verify_pair(lambda: &Partition, mu: &Partition, k: u64) -> Result<bool, Error> {
    verify_pair_detailed(lambda, mu, k).map(|check| check.holds)
}

/// [`verify_pair`] with the transformed sequences and the violation index.
pub fn verify_pair_detailed(
    lambda: &Partition,
    mu: &Partition,
    k: u64,
) -> Result<PairCheck, Error> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.weight(),
            right: mu.weight(),
        });
    }
    if !lambda.dominates(mu) {
        return Err(Error::NotDominating {
            upper: lambda.to_string(),
            lower: mu.to_string(),
        });
    }
    let signed = to_signed(k)?;
    let len = lambda.stored_len().max(mu.stored_len());
    let lambda_k = lambda.pad(len)?.k_transform(signed);
    let mu_k = mu.pad(len)?.k_transform(signed);
    let violation = first_violation(lambda_k.values(), mu_k.values());
    Ok(PairCheck {
        holds: violation.is_none(),
        lambda_k,
        mu_k,
        first_violated_prefix: violation,
    })
}

/// The standard demonstration that equal weight is a necessary hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMismatchDemo {
    pub lambda: Partition,
    pub mu: Partition,
    pub k: u64,
    pub lambda_k: NonIncSequence,
    pub mu_k: NonIncSequence,
    pub dominance_holds: bool,
}

/// `(2)` dominates `(1)`, yet their 2-transforms `(0)` and `(1)` do not
/// stay ordered. Computed live, not hardcoded.
pub fn unequal_weight_counterexample() -> WeightMismatchDemo {
    let lambda = Partition::new(vec![2]).expect("valid partition");
    let mu = Partition::new(vec![1]).expect("valid partition");
    let k = 2u64;
    let lambda_k = lambda.k_transform(k as i64);
    let mu_k = mu.k_transform(k as i64);
    WeightMismatchDemo {
        dominance_holds: lambda_k.dominates(&mu_k),
        lambda,
        mu,
        k,
        lambda_k,
        mu_k,
    }
}

/// Per-regime tallies across a sweep's covering-pair checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CaseHistogram {
    pub k_below: u64,
    pub k_equals_lower_only: u64,
    pub k_equals_both: u64,
    pub k_between: u64,
    pub k_above: u64,
}

impl CaseHistogram {
    pub fn bump(&mut self, label: CaseLabel) {
        *self.slot(label) += 1;
    }

    pub fn count(&self, label: CaseLabel) -> u64 {
        match label {
            CaseLabel::KBelow => self.k_below,
            CaseLabel::KEqualsLowerOnly => self.k_equals_lower_only,
            CaseLabel::KEqualsBoth => self.k_equals_both,
            CaseLabel::KBetween => self.k_between,
            CaseLabel::KAbove => self.k_above,
        }
    }

    pub fn total(&self) -> u64 {
        CaseLabel::ALL.iter().map(|&label| self.count(label)).sum()
    }

    pub fn add(&mut self, other: &CaseHistogram) {
        for label in CaseLabel::ALL {
            *self.slot(label) += other.count(label);
        }
    }

    fn slot(&mut self, label: CaseLabel) -> &mut u64 {
        match label {
            CaseLabel::KBelow => &mut self.k_below,
            CaseLabel::KEqualsLowerOnly => &mut self.k_equals_lower_only,
            CaseLabel::KEqualsBoth => &mut self.k_equals_both,
            CaseLabel::KBetween => &mut self.k_between,
            CaseLabel::KAbove => &mut self.k_above,
        }
    }
}

/// A `(lambda, mu, k)` instance where transform dominance failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub lambda: Partition,
    pub mu: Partition,
    pub k: u64,
    pub lambda_k: NonIncSequence,
    pub mu_k: NonIncSequence,
    pub first_violated_prefix: usize,
}

/// A covering-pair instance where the substitution route disagreed with the
/// direct transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionMismatch {
    pub mu: Partition,
    pub mv: CoverMove,
    pub k: u64,
    pub constructed: NonIncSequence,
    pub direct: NonIncSequence,
}

/// A covering-pair instance where the in-place substitution left the
/// sequence unsorted or off-target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionalViolation {
    pub mu: Partition,
    pub mv: CoverMove,
    pub k: u64,
    pub label: CaseLabel,
    pub in_place: Vec<u64>,
}

/// Everything one exhaustive sweep over a weight class found.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n: u64,
    pub k_max: u64,
    /// Ordered pairs (lambda, mu) with lambda dominating mu, lambda = mu
    /// included. Each was checked for every k in `1..=k_max`.
    pub pairs_checked: u64,
    /// Covering pairs found; each was checked constructively for every k.
    pub covers_checked: u64,
    pub case_histogram: CaseHistogram,
    pub counterexamples: Vec<Counterexample>,
    pub replacement_mismatches: Vec<ConstructionMismatch>,
    pub positional_violations: Vec<PositionalViolation>,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// No dominance counterexamples found.
    pub fn theorem_holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Nothing at all went wrong: no counterexamples, no construction
    /// mismatches, no positional violations.
    pub fn is_clean(&self) -> bool {
        self.theorem_holds()
            && self.replacement_mismatches.is_empty()
            && self.positional_violations.is_empty()
    }
}

/// Tuning for [`sweep_with`].
#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Upper end of the k range; defaults to `n + 1`, which already reaches
    /// the regime where the transform is a pure reversal for every
    /// partition of weight `n`.
    pub k_max: Option<u64>,
    /// Worker threads for the pair checks. The report is identical for any
    /// value: work is split into contiguous index ranges and merged in
    /// order.
    pub threads: usize,
    pub enumeration: EnumerationOptions,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            k_max: None,
            threads: 1,
            enumeration: EnumerationOptions::default(),
        }
    }
}

/// Exhaustively verify the dominance property over all partitions of
/// weight `n`, single-threaded, with the default k range.
pub fn sweep(n: u64) -> Result<VerificationReport, Error> {
    sweep_with(n, &SweepOptions::default())
}

/// Exhaustively verify weight `n`:
///
/// * every ordered dominating pair, every k in `1..=k_max` — transform
///   dominance must hold;
/// * every covering pair, every k — the substitution construction must
///   reproduce the direct transform, the case histogram is tallied, and
///   where the in-place targeting is well-defined the un-re-sorted result
///   must already be sorted and on target.
///
/// All partitions are padded to the common length `n` before transforming.
pub fn sweep_with(n: u64, options: &SweepOptions) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let k_max = options.k_max.unwrap_or(n + 1).max(1);
    to_signed(k_max)?;
    let common_len = n as usize;
    let padded: Vec<Partition> = partitions_of_with(n, &options.enumeration)?
        .map(|p| p.pad(common_len))
        .collect::<Result<_, _>>()?;

    // Transforms are shared by both sweeps; index [p][k - 1].
    let transforms: Vec<Vec<NonIncSequence>> = padded
        .iter()
        .map(|p| (1..=k_max).map(|k| p.k_transform(k as i64)).collect())
        .collect();

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (li, lambda) in padded.iter().enumerate() {
        for (mi, mu) in padded.iter().enumerate() {
            if lambda.dominates(mu) {
                pairs.push((li, mi));
            }
        }
    }

    let counterexamples = check_pairs(&padded, &transforms, &pairs, k_max, options.threads);

    let mut covers_checked = 0u64;
    let mut case_histogram = CaseHistogram::default();
    let mut replacement_mismatches = Vec::new();
    let mut positional_violations = Vec::new();
    for (ui, upper) in padded.iter().enumerate() {
        for (lower, mv) in lower_covers(upper) {
            covers_checked += 1;
            let lower = lower.pad(common_len)?;
            for k in 1..=k_max {
                let plan = replacement_plan(&lower, &mv, k)?;
                case_histogram.bump(plan.label);
                let mu_k = lower.k_transform(k as i64);
                let direct = &transforms[ui][(k - 1) as usize];
                let constructed = plan.apply_multiset(&mu_k);
                if constructed != *direct {
                    replacement_mismatches.push(ConstructionMismatch {
                        mu: lower.stripped(),
                        mv,
                        k,
                        constructed,
                        direct: direct.clone(),
                    });
                }
                if let Some(in_place) = plan.apply_positional(&mu_k) {
                    let sorted = in_place.windows(2).all(|w| w[0] >= w[1]);
                    if !sorted || in_place != direct.values() {
                        positional_violations.push(PositionalViolation {
                            mu: lower.stripped(),
                            mv,
                            k,
                            label: plan.label,
                            in_place,
                        });
                    }
                }
            }
        }
    }

    Ok(VerificationReport {
        n,
        k_max,
        pairs_checked: pairs.len() as u64,
        covers_checked,
        case_histogram,
        counterexamples,
        replacement_mismatches,
        positional_violations,
        elapsed: started.elapsed(),
    })
}

fn check_pairs(
    padded: &[Partition],
    transforms: &[Vec<NonIncSequence>],
    pairs: &[(usize, usize)],
    k_max: u64,
    threads: usize,
) -> Vec<Counterexample> {
    let threads = threads.max(1);
    if threads == 1 || pairs.len() < 2 * threads {
        return check_pair_slice(padded, transforms, pairs, k_max);
    }
    let chunk = pairs.len().div_ceil(threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = pairs
            .chunks(chunk)
            .map(|slice| scope.spawn(move || check_pair_slice(padded, transforms, slice, k_max)))
            .collect();
        handles
            .into_iter()
            .flat_map(|handle| handle.join().expect("sweep worker panicked"))
            .collect()
    })
}

fn check_pair_slice(
    padded: &[Partition],
    transforms: &[Vec<NonIncSequence>],
    pairs: &[(usize, usize)],
    k_max: u64,
) -> Vec<Counterexample> {
    let mut found = Vec::new();
    for &(li, mi) in pairs {
        for k in 1..=k_max {
            let lambda_k = &transforms[li][(k - 1) as usize];
            let mu_k = &transforms[mi][(k - 1) as usize];
            if let Some(prefix) = first_violation(lambda_k.values(), mu_k.values()) {
                found.push(Counterexample {
                    lambda: padded[li].stripped(),
                    mu: padded[mi].stripped(),
                    k,
                    lambda_k: lambda_k.clone(),
                    mu_k: mu_k.clone(),
                    first_violated_prefix: prefix,
                });
            }
        }
    }
    found
}
