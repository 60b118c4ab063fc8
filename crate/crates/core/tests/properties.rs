mod common;

use proptest::prelude::*;
use tff::duality::{naimark_dual, recur_strip, spatial_dual};
use tff::partition::partitions_of;
use tff::rational::ratio;
use tff::tff::{first3_check, k_block_bound, unique_maximal, MaximalTable};
use tff::{
    count_configs, decide, dominance_leq, find_config, majorization_chain, maximal_elements,
    validate_config, ConfigMatrix, Error, Partition, Tableau, Violation,
};

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_size, 0..=max_size)
        .prop_filter("bounded size", move |v| v.iter().sum::<usize>() <= max_size)
        .prop_map(Partition::from_unsorted)
}

fn same_size_pair(max_size: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max_size).prop_flat_map(|n| {
        let all = partitions_of(n, n, n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

proptest! {
    #[test]
    fn dominance_is_reflexive_and_antisymmetric((a, b) in same_size_pair(12)) {
        prop_assert!(dominance_leq(&a, &a));
        if dominance_leq(&a, &b) && dominance_leq(&b, &a) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn conjugation_reverses_dominance((a, b) in same_size_pair(12)) {
        prop_assert_eq!(dominance_leq(&a, &b), dominance_leq(&b.conjugate(), &a.conjugate()));
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn majorization_chain_steps_by_unit_moves((a, b) in same_size_pair(12)) {
        match majorization_chain(&a, &b) {
            Ok(chain) => {
                prop_assert!(dominance_leq(&a, &b));
                prop_assert_eq!(chain.first(), Some(&a));
                prop_assert_eq!(chain.last(), Some(&b));
                for pair in chain.windows(2) {
                    prop_assert!(dominance_leq(&pair[0], &pair[1]));
                    let len = pair[0].len().max(pair[1].len());
                    let moved: usize = pair[0]
                        .padded(len)
                        .iter()
                        .zip(pair[1].padded(len))
                        .map(|(x, y)| x.abs_diff(y))
                        .sum();
                    prop_assert_eq!(moved, 2);
                }
            }
            Err(Error::NotDominated { .. }) => prop_assert!(!dominance_leq(&a, &b)),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn count_is_invariant_under_reordering(p in partition(9), dim in 1usize..=6, seed in any::<u64>()) {
        prop_assume!(!p.is_empty() && p.largest() <= dim);
        let mut shuffled = p.parts().to_vec();
        let k = shuffled.len();
        for i in (1..k).rev() {
            shuffled.swap(i, (seed as usize).wrapping_add(i * 7919) % (i + 1));
        }
        prop_assert_eq!(count_configs(p.parts(), dim).unwrap(), count_configs(&shuffled, dim).unwrap());
    }

    #[test]
    fn ranks_json_round_trip(p in partition(20)) {
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&text).unwrap(), p);
    }
}

#[test]
fn count_agrees_with_find() {
    for dim in 1..=6usize {
        for m in 1..=2 * dim + 2 {
            for p in partitions_of(m, dim, m) {
                let count = count_configs(p.parts(), dim).unwrap();
                let found = find_config(p.parts(), dim).unwrap();
                assert_eq!(count > 0, found.is_some(), "{p} N={dim}");
                if let Some(a) = found {
                    assert!(validate_config(&a).unwrap().valid, "{p} N={dim}");
                }
            }
        }
    }
}

#[test]
fn sequence_dualities_preserve_membership() {
    for dim in 1..=6usize {
        for m in dim + 1..=2 * dim + 2 {
            for p in partitions_of(m, dim, m) {
                let member = decide(&p, dim).unwrap();
                let (q, n) = naimark_dual(&p, dim).unwrap();
                if q.largest() <= n {
                    assert_eq!(decide(&q, n).unwrap(), member, "Naimark {p} N={dim}");
                } else {
                    assert!(!member, "{p} N={dim} has L1 > M-N");
                }
                match spatial_dual(&p, dim) {
                    Ok((q, n)) => assert_eq!(decide(&q, n).unwrap(), member, "spatial {p} N={dim}"),
                    Err(Error::Degenerate(_)) => assert!(p.parts().iter().all(|&l| l == dim)),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
}

#[test]
fn stripping_a_full_first_block() {
    let mut stripped = 0;
    for dim in 1..=6usize {
        for m in dim + 1..=2 * dim {
            for p in partitions_of(m, dim, m) {
                match recur_strip(&p, dim) {
                    Ok((rest, n)) => {
                        stripped += 1;
                        let fits = rest.largest() <= n;
                        assert_eq!(
                            decide(&p, dim).unwrap(),
                            fits && decide(&rest, n).unwrap(),
                            "{p} N={dim}"
                        );
                    }
                    Err(Error::PreconditionNotMet(_)) => assert_ne!(p.part(0), m - dim),
                    Err(Error::Degenerate(_)) => assert_eq!(p.len(), 1),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    assert!(stripped > 0);
}

#[test]
fn filters_never_reject_members() {
    for dim in 1..=7usize {
        for m in dim + 1..2 * dim {
            let alpha = ratio(m, dim);
            for p in partitions_of(m, dim, m) {
                if !decide(&p, dim).unwrap() {
                    continue;
                }
                assert!(
                    k_block_bound(&p, dim, alpha),
                    "k-block bound rejects {p} N={dim}"
                );
                assert!(
                    first3_check(p.part(0), p.part(1), p.part(2), alpha, dim).unwrap(),
                    "first-three bound rejects {p} N={dim}"
                );
            }
        }
    }
}

#[test]
fn maximal_elements_form_an_antichain() {
    for dim in 1..=9usize {
        for m in dim..=2 * dim {
            let alpha = ratio(m, dim);
            let tops = maximal_elements(alpha, dim).unwrap();
            assert!(!tops.is_empty(), "alpha={alpha} N={dim}");
            for (i, a) in tops.iter().enumerate() {
                for b in &tops[i + 1..] {
                    assert!(
                        !dominance_leq(a, b) && !dominance_leq(b, a),
                        "{a} and {b} comparable"
                    );
                }
            }
            if let Some(top) = unique_maximal(alpha, dim) {
                assert_eq!(tops, vec![top], "alpha={alpha} N={dim}");
            }
        }
    }
}

/// All but one of the further printed unions are LR certificates. The
/// `(3,3,3,3)`, `N = 5` printing breaks the lattice condition in block 3
/// (its second row adds three 2s under two 1s), though the sequence itself has
/// valid certificates.
#[test]
fn further_printed_tableaux() {
    for (i, text) in common::MORE_UNIONS.iter().enumerate() {
        let t: Tableau = text.parse().unwrap();
        let a = t.to_config().unwrap();
        let report = validate_config(&a).unwrap();
        if i == 4 {
            assert_eq!(a.ranks(), &[3, 3, 3, 3]);
            assert!(
                matches!(
                    report.violation,
                    Some(Violation::ColumnDominance {
                        block: 2,
                        letter: 0,
                        ..
                    })
                ),
                "{report:?}"
            );
            let fixed = find_config(a.ranks(), 5)
                .unwrap()
                .expect("(3,3,3,3) in dimension 5");
            assert!(validate_config(&fixed).unwrap().valid);
        } else {
            assert!(report.valid, "{text}\n{report:?}");
            assert_eq!(tff::render_tableaux(&a).unwrap().to_string(), *text);
        }
    }
}

#[test]
fn certificates_and_tables_round_trip_through_json() {
    for a in [
        common::cert_2222(),
        common::cert_32111(),
        common::cert_2221_naimark(),
    ] {
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<ConfigMatrix>(&text).unwrap(), a);
    }
    let tables = tff::tff::maximal_tables(5).unwrap();
    let text = serde_json::to_string(&tables).unwrap();
    let back: Vec<MaximalTable> = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}
