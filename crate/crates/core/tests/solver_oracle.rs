mod common;

use coeven::graph::{enumerate_connected, generate, Family, Graph, VertexSet};
use coeven::solver::{coeven_domination_number, domination_number, forced_set, is_coeven_dominating, is_dominating};
use proptest::prelude::*;

fn assert_agrees(g: &Graph) {
    let (gv, gw) = common::naive(g, false);
    let (cv, cw) = common::naive(g, true);
    let plain = domination_number(g);
    let coe = coeven_domination_number(g);
    assert_eq!((plain.value, plain.witness.to_vec()), (gv, gw), "gamma on {g:?}");
    assert_eq!((coe.value, coe.witness.to_vec()), (cv, cw), "coeven on {g:?}");
}

#[test]
fn matches_naive_on_all_connected_graphs_up_to_five() {
    for n in 1..=5 {
        for g in enumerate_connected(n).unwrap() {
            assert_agrees(&g);
        }
    }
}

#[test]
fn matches_naive_on_seeded_graphs() {
    for (seed, n) in [(1, 6), (2, 7), (3, 8), (4, 10)] {
        for g in common::seeded_graphs(seed, n, 0.4, 40) {
            assert_agrees(&g);
        }
    }
}

#[test]
fn matches_naive_on_disconnected_graphs() {
    for g in common::seeded_graphs(9, 8, 0.15, 60) {
        assert_agrees(&g);
    }
}

#[test]
fn gamma_at_most_coeven_on_all_connected_graphs_up_to_six() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let plain = domination_number(&g);
            let coe = coeven_domination_number(&g);
            assert!(plain.value <= coe.value);
            assert!(forced_set(&g).is_subset(&coe.witness));
            assert!(is_coeven_dominating(&g, &coe.witness));
            assert!(is_dominating(&g, &plain.witness));
            // Vertices left out have degree at least 2.
            assert!(coe.witness.complement().iter().all(|v| g.degree(v).unwrap() >= 2));
        }
    }
}

#[test]
fn no_smaller_coeven_set_containing_the_forced_set() {
    for n in 1..=5 {
        for g in enumerate_connected(n).unwrap() {
            let coe = coeven_domination_number(&g);
            let forced = forced_set(&g);
            for mask in 0u64..1 << n {
                let s = VertexSet::from_mask(n, mask);
                if s.len() + 1 == coe.value && forced.is_subset(&s) {
                    assert!(!is_coeven_dominating(&g, &s));
                }
            }
        }
    }
}

#[test]
fn regular_generators() {
    for n in 3..=10 {
        let c = generate(Family::Cycle(n)).unwrap();
        assert_eq!(coeven_domination_number(&c).value, domination_number(&c).value);
        assert_eq!(domination_number(&c).value, n.div_ceil(3));
    }
    for n in 2..=8 {
        let k = generate(Family::Complete(n)).unwrap();
        let expected = if (n - 1) % 2 == 1 { n } else { 1 };
        assert_eq!(coeven_domination_number(&k).value, expected);
    }
}

#[test]
fn named_values() {
    let v = |f| coeven_domination_number(&generate(f).unwrap()).value;
    assert_eq!(v(Family::Complete(4)), 4);
    assert_eq!(v(Family::Cycle(4)), 2);
    assert_eq!(v(Family::Path(7)), 3);
    assert_eq!(domination_number(&generate(Family::Cycle(5)).unwrap()).value, 2);
    assert_eq!(domination_number(&generate(Family::Path(6)).unwrap()).value, 2);
    assert_eq!(common::naive(&generate(Family::Path(7)).unwrap(), true).0, 3);
    assert_eq!(common::naive(&generate(Family::Cycle(5)).unwrap(), false).0, 2);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges = common::pairs(n).into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn branch_and_bound_equals_brute_force(g in arb_graph(9)) {
        let (gv, gw) = common::naive(&g, false);
        let (cv, cw) = common::naive(&g, true);
        let plain = domination_number(&g);
        let coe = coeven_domination_number(&g);
        prop_assert_eq!((plain.value, plain.witness.to_vec()), (gv, gw));
        prop_assert_eq!((coe.value, coe.witness.to_vec()), (cv, cw));
    }
}
