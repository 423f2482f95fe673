//! Property tests for the partition, cover, and theorem machinery.

use std::collections::BTreeMap;

use proptest::prelude::*;

use domord::cover::{apply_move, cover_chain_traced, find_cover_move, lower_covers, upper_covers};
use domord::partition::{NonIncSequence, Partition};
use domord::theorem::{classify_case, replacement_plan, CaseLabel};

fn counts(values: &[u64]) -> BTreeMap<u64, usize> {
    let mut map = BTreeMap::new();
    for &v in values {
        *map.entry(v).or_insert(0) += 1;
    }
    map
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0u64..=12, 0..=8)
        .prop_map(|parts| Partition::from_unsorted(parts).unwrap())
}

fn arb_k() -> impl Strategy<Value = i64> {
    -20i64..=20
}

proptest! {
    #[test]
    fn dominance_is_unaffected_by_trailing_zeros(a in arb_partition(), b in arb_partition(), extra in 0usize..5) {
        let padded = a.pad(a.stored_len() + extra).unwrap();
        prop_assert_eq!(a.dominates(&b), padded.dominates(&b));
        prop_assert_eq!(b.dominates(&a), b.dominates(&padded));
    }

    #[test]
    fn dominance_implies_weight_order(a in arb_partition(), b in arb_partition()) {
        if a.dominates(&b) {
            prop_assert!(a.weight() >= b.weight());
        }
    }

    #[test]
    fn transform_is_the_sorted_offset_multiset(p in arb_partition(), k in arb_k()) {
        let seq = p.k_transform(k);
        prop_assert_eq!(seq.len(), p.stored_len());
        prop_assert!(seq.values().windows(2).all(|w| w[0] >= w[1]));
        let expected: Vec<u64> = p
            .parts()
            .iter()
            .map(|&part| (i128::from(part) - i128::from(k)).unsigned_abs() as u64)
            .collect();
        prop_assert_eq!(counts(seq.values()), counts(&expected));
    }

    #[test]
    fn transform_reverses_when_k_reaches_the_largest_part(p in arb_partition(), above in 0i64..5) {
        let largest = p.parts().first().copied().unwrap_or(0);
        let k = largest as i64 + above;
        let seq = p.k_transform(k);
        let reversed: Vec<u64> = p.parts().iter().rev().map(|&part| k as u64 - part).collect();
        prop_assert_eq!(seq.values(), &reversed[..]);
    }

    #[test]
    fn transform_shifts_when_k_is_non_positive(p in arb_partition(), m in 0i64..10) {
        let seq = p.k_transform(-m);
        let shifted: Vec<u64> = p.parts().iter().map(|&part| part + m as u64).collect();
        prop_assert_eq!(seq.values(), &shifted[..]);
    }

    #[test]
    fn display_round_trips_through_parse(p in arb_partition()) {
        let text = p.to_string();
        let back: Partition = text.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn lower_cover_moves_reproduce_the_upper_partition(p in arb_partition()) {
        for (low, mv) in lower_covers(&p) {
            let raised = apply_move(&low, &mv).unwrap();
            prop_assert_eq!(&raised, &p);
            prop_assert_eq!(low.weight(), p.weight());
            prop_assert!(p.dominates(&low) && low != p);
            prop_assert_eq!(find_cover_move(&p, &low), Some(mv));
        }
    }

    #[test]
    fn case_conditions_are_exhaustive_and_exclusive(p in arb_partition(), pick in any::<proptest::sample::Index>(), k in 1u64..=30) {
        let ups = upper_covers(&p);
        prop_assume!(!ups.is_empty());
        let mv = ups[pick.index(ups.len())].1;
        let (mu_i, mu_j) = (p.parts()[mv.i - 1], p.parts()[mv.j - 1]);
        let conditions = [
            k < mu_j,
            k == mu_j && mu_j < mu_i,
            k == mu_j && mu_j == mu_i,
            mu_j < k && k <= mu_i,
            k > mu_i,
        ];
        prop_assert_eq!(conditions.iter().filter(|&&c| c).count(), 1);
        let label = classify_case(&p, &mv, k).unwrap();
        let expected = CaseLabel::ALL[conditions.iter().position(|&c| c).unwrap()];
        prop_assert_eq!(label, expected);
    }

    #[test]
    fn plan_substitutions_rewrite_the_multiset(p in arb_partition(), pick in any::<proptest::sample::Index>(), k in 1u64..=30) {
        let ups = upper_covers(&p);
        prop_assume!(!ups.is_empty());
        let mv = ups[pick.index(ups.len())].1;
        // Work at a fixed common length so both transforms line up.
        let len = p.stored_len().max(p.nonzero_len() + 1);
        let mu = p.pad(len).unwrap();
        let lambda = apply_move(&mu, &mv).unwrap();
        let plan = replacement_plan(&mu, &mv, k).unwrap();

        let mut expected = counts(mu.k_transform(k as i64).values());
        for sub in &plan.substitutions {
            let slot = expected.get_mut(&sub.old_value).unwrap();
            *slot -= 1;
            if *slot == 0 {
                expected.remove(&sub.old_value);
            }
            *expected.entry(sub.new_value).or_insert(0) += 1;
        }
        prop_assert_eq!(expected, counts(lambda.k_transform(k as i64).values()));

        let constructed = plan.apply_multiset(&mu.k_transform(k as i64));
        prop_assert_eq!(constructed, lambda.k_transform(k as i64));
    }

    #[test]
    fn chains_between_random_comparable_pairs_are_saturated(parts in proptest::collection::vec(1u64..=6, 1..=6), steps in 0usize..6) {
        // Walk down from a random partition to get a comparable pair.
        let top = Partition::from_unsorted(parts).unwrap();
        let mut bottom = top.clone();
        for _ in 0..steps {
            match lower_covers(&bottom).pop() {
                Some((low, _)) => bottom = low,
                None => break,
            }
        }
        let trace = cover_chain_traced(&top, &bottom).unwrap();
        prop_assert!(!trace.used_fallback);
        prop_assert_eq!(trace.chain.first().unwrap(), &top);
        prop_assert_eq!(trace.chain.last().unwrap(), &bottom);
        for window in trace.chain.windows(2) {
            prop_assert!(find_cover_move(&window[0], &window[1]).is_some());
            prop_assert_eq!(window[0].weight(), window[1].weight());
        }
    }

    #[test]
    fn parsing_never_panics_and_agrees_with_display(text in ".{0,40}") {
        // Arbitrary input either parses or reports a structured error.
        if let Ok(parsed) = text.parse::<Partition>() {
            let reparsed: Partition = parsed.to_string().parse().unwrap();
            prop_assert_eq!(reparsed, parsed);
        }
        let _ = Partition::parse_unsorted(&text);
    }

    #[test]
    fn sequence_dominance_matches_prefix_sums(a in proptest::collection::vec(0u64..50, 0..8), b in proptest::collection::vec(0u64..50, 0..8)) {
        let mut a = a;
        let mut b = b;
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable_by(|x, y| y.cmp(x));
        let sa = NonIncSequence::new(a.clone()).unwrap();
        let sb = NonIncSequence::new(b.clone()).unwrap();
        let len = a.len().max(b.len());
        let mut expect = true;
        let mut pa = 0u64;
        let mut pb = 0u64;
        for idx in 0..len {
            pa += a.get(idx).copied().unwrap_or(0);
            pb += b.get(idx).copied().unwrap_or(0);
            if pa < pb {
                expect = false;
                break;
            }
        }
        prop_assert_eq!(sa.dominates(&sb), expect);
    }
}
