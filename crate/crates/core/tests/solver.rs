mod common;

use perfect_coalition::harness::fixtures::graphs_upto7;
use perfect_coalition::solver::{
    bell_number, coalition_number_bruteforce, prc_bruteforce, prc_solve, prc_solve_with, verify_certificate, SolveOptions,
};
use perfect_coalition::Graph;
use proptest::prelude::*;

#[test]
fn solver_matches_oracle_on_every_graph_up_to_7() {
    for g in graphs_upto7() {
        let fast = prc_solve(&g).unwrap();
        let slow = prc_bruteforce(&g).unwrap();
        assert_eq!(fast.prc, slow.prc, "{g:?}");
        assert_eq!(fast.certificate, slow.certificate, "{g:?}");
        assert_eq!(Some(slow.stats.partitions_tested), bell_number(g.n()));
        if let Some(cert) = &fast.certificate {
            assert!(verify_certificate(&g, cert));
        }
    }
}

#[test]
fn prc_at_most_coalition_number_up_to_7() {
    for g in graphs_upto7() {
        let c = coalition_number_bruteforce(&g).unwrap();
        assert!(prc_solve(&g).unwrap().prc <= c, "{g:?}");
    }
}

#[test]
fn worker_count_does_not_change_certificates() {
    let graphs = [common::family("path:12"), common::family("cycle:12"), common::family("t1:5"), common::family("b:3,4")];
    let seq: Vec<_> = graphs.iter().map(|g| prc_solve(g).unwrap().certificate).collect();
    for (threads, split_depth) in [(2, 3), (3, 6), (4, 9)] {
        let opts = SolveOptions { threads, split_depth };
        let par: Vec<_> = graphs.iter().map(|g| prc_solve_with(g, &opts).unwrap().certificate).collect();
        assert_eq!(seq, par, "threads = {threads}");
    }
}

fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.1f64..0.9).prop_flat_map(|(n, p)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(p), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_equivalence_random(g in arb_graph(7, 9)) {
        let fast = prc_solve(&g).unwrap();
        let slow = prc_bruteforce(&g).unwrap();
        prop_assert_eq!(fast.prc, slow.prc);
        prop_assert_eq!(&fast.certificate, &slow.certificate);
        if let Some(cert) = &fast.certificate {
            prop_assert!(verify_certificate(&g, cert));
        }
    }
}
