mod common;

use common::relabel;
use perfect_coalition::families::{
    classify_t1_t2, family_membership, formula_prc_cycle, formula_prc_path, generate, is_in_family_b, FamilySpec, TClass,
};
use perfect_coalition::prc_solve;
use perfect_coalition::Graph;

fn prc(g: &Graph) -> usize {
    prc_solve(g).unwrap().prc
}

fn t_specs() -> Vec<FamilySpec> {
    let mut specs: Vec<FamilySpec> = (2..=4).map(FamilySpec::T1).collect();
    for r in 2..=4 {
        for s in 2..=4 {
            for m in 0..r.min(s) {
                specs.push(FamilySpec::T2 { r, s, m });
            }
        }
    }
    specs
}

#[test]
fn t1_and_t2_members_have_full_prc_and_round_trip() {
    for spec in t_specs() {
        let g = generate(&spec).unwrap();
        assert_eq!(prc(&g), g.n(), "{spec}");
        let expected = match spec {
            FamilySpec::T1(r) => TClass::T1 { r },
            FamilySpec::T2 { r, s, m } => TClass::T2 { r: r.min(s), s: r.max(s), m },
            _ => unreachable!(),
        };
        assert_eq!(classify_t1_t2(&g), expected, "{spec}");
        let reversed: Vec<usize> = (0..g.n()).rev().collect();
        assert_eq!(classify_t1_t2(&relabel(&g, &reversed)), expected, "{spec} relabeled");
    }
}

#[test]
fn family_b_members_have_full_prc() {
    for a in 1..=3 {
        for b in 1..=3 {
            let g = generate(&FamilySpec::FamilyB { a, b }).unwrap();
            assert_eq!(prc(&g), g.n(), "b:{a},{b}");
            let shifted: Vec<usize> = (0..g.n()).map(|v| (v + 3) % g.n()).collect();
            assert!(is_in_family_b(&relabel(&g, &shifted)).is_some(), "b:{a},{b} relabeled");
        }
    }
}

#[test]
fn membership_report() {
    let m = family_membership(&common::family("path:4"));
    assert!(m.in_b() && m.in_t1_or_t2());
    let json = serde_json::to_value(m).unwrap();
    assert_eq!(json["family_b"]["leaf"], 0);
    assert_eq!(json["t_class"]["class"], "t2");
    let m = family_membership(&common::family("cycle:5"));
    assert!(!m.in_b() && !m.in_t1_or_t2());
}

#[test]
fn small_tables_match_solver() {
    for n in 1..=11 {
        assert_eq!(Some(prc(&common::family(&format!("path:{n}")))), formula_prc_path(n), "P_{n}");
    }
    for n in 3..=11 {
        assert_eq!(Some(prc(&common::family(&format!("cycle:{n}")))), formula_prc_cycle(n), "C_{n}");
    }
}

#[test]
fn complete_graphs_and_stars() {
    for n in 1..=7 {
        assert_eq!(prc(&common::family(&format!("complete:{n}"))), n);
    }
    for s in 2..=6 {
        assert_eq!(prc(&common::family(&format!("star:{s}"))), 0, "K_1,{s}");
    }
}
