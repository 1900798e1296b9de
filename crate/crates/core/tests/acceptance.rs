//! End-to-end acceptance checks. Each test prints one line naming the
//! criterion and whether it passed; run with `--nocapture` to see all
//! lines. Everything is exact arithmetic with zero tolerance.

use std::collections::BTreeSet;

use rand::prelude::*;
use sgwedge::exterior::{
    induced_switching, relabel_power_back, wedge_power, wedge_power_with_rule,
};
use sgwedge::families::{generate, random_relabeling, random_signed_graph, random_switching,
    Family, FamilySpec, Signing};
use sgwedge::oracle::{
    check_cover_isomorphisms, check_cycle_power_parity, check_exterior_identities,
    check_family_isomorphisms, check_hypercube_powers, check_signed_path_powers,
    sweep_balance_characterization, FactSuiteConfig, SweepOptions,
};
use sgwedge::{Sign, SignedGraph, WedgeSignRule};

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn claw() -> SignedGraph {
    SignedGraph::all_positive(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
}

fn c4() -> SignedGraph {
    SignedGraph::all_positive(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
}

/// Signs along the hexagon walk of the claw's square, for a given rule.
fn hexagon_walk_signs(rule: WedgeSignRule) -> (Vec<Sign>, bool) {
    let w = wedge_power_with_rule(&claw(), 2, rule).unwrap();
    let is_hexagon = w.graph().is_cycle_graph();
    let walk = [0, 3, 1, 5, 2, 4];
    let signs = (0..6)
        .map(|i| w.graph().sign(walk[i], walk[(i + 1) % 6]).unwrap())
        .collect();
    (signs, is_hexagon)
}

const HEXAGON_SIGNS: [Sign; 6] = [
    Sign::Minus,
    Sign::Plus,
    Sign::Minus,
    Sign::Plus,
    Sign::Plus,
    Sign::Minus,
];

#[test]
fn criterion_1_claw_square_is_a_negative_hexagon() {
    let (signs, is_hexagon) = hexagon_walk_signs(WedgeSignRule::Standard);
    let product = signs.iter().copied().fold(Sign::Plus, |a, b| a * b);
    let ok = is_hexagon && signs == HEXAGON_SIGNS && product == Sign::Minus;
    println!(
        "criterion 1 (square of the claw is a negative hexagon): {}",
        verdict(ok)
    );
    assert!(ok, "signs {signs:?}, hexagon {is_hexagon}, product {product}");
}

#[test]
fn criterion_2_c4_square_is_k24_with_two_negative_edges() {
    let w = wedge_power(&c4(), 2).unwrap();
    let g = w.graph();
    // K_{2,4}: the two diagonal pairs {0,2} (rank 1) and {1,3} (rank 4)
    // are joined to everything else and to nothing among themselves.
    let expected_edges: BTreeSet<(usize, usize)> = [1usize, 4]
        .iter()
        .flat_map(|&hub| [0usize, 2, 3, 5].iter().map(move |&o| (hub.min(o), hub.max(o))))
        .collect();
    let got_edges: BTreeSet<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();
    let negatives: Vec<(usize, usize)> = g
        .edges()
        .filter(|(_, _, s)| s.is_negative())
        .map(|(u, v, _)| (u, v))
        .collect();
    let ok = g.n() == 6
        && got_edges == expected_edges
        && negatives.len() == 2
        && !g.is_balanced().is_balanced();
    println!(
        "criterion 2 (square of C4 is K_2,4 with two negative edges, unbalanced): {}",
        verdict(ok)
    );
    assert!(ok, "edges {got_edges:?}, negatives {negatives:?}");
}

#[test]
fn criterion_3_characterization_sweep_small_exhaustive_and_n6_sampled() {
    let exhaustive = sweep_balance_characterization(&SweepOptions {
        n_min: 2,
        n_max: 5,
        signing_budget: 1024,
        ..SweepOptions::default()
    })
    .unwrap();
    let sampled = sweep_balance_characterization(&SweepOptions {
        n_min: 6,
        n_max: 6,
        signing_budget: 1,
        ..SweepOptions::default()
    })
    .unwrap();
    let ok = exhaustive.passed()
        && exhaustive.stats["sampled_graphs"] == 0
        && exhaustive.stats["graphs"] == 771
        && sampled.passed()
        && sampled.stats["signings"] >= 10_000;
    println!(
        "criterion 3 (balance characterization: exhaustive n<=5, {} random signings at n=6): {}",
        sampled.stats["signings"],
        verdict(ok)
    );
    assert!(
        ok,
        "exhaustive {:?}, sampled {:?}",
        exhaustive.counterexamples.first(),
        sampled.counterexamples.first()
    );
}

#[test]
fn criterion_4_alternator_identities_on_random_graphs() {
    let report = check_exterior_identities(&FactSuiteConfig::default()).unwrap();
    let ok = report.passed() && report.instances >= 30;
    println!(
        "criterion 4 (alternator identities on 30 random signed graphs, {} checks): {}",
        report.instances,
        verdict(ok)
    );
    assert!(ok, "{:?}", report.counterexamples.first());
}

#[test]
fn criterion_5_covers_match_deleted_powers() {
    let report = check_cover_isomorphisms(&FactSuiteConfig::default()).unwrap();
    let ok = report.passed()
        && report.stats["double_cover_instances"] > 0
        && report.notes.iter().any(|n| n.contains("double cover"));
    println!(
        "criterion 5 (permutation covers match deleted powers, {} double covers noted): {}",
        report.stats["double_cover_instances"],
        verdict(ok)
    );
    assert!(ok, "{:?}", report.counterexamples.first());
}

#[test]
fn criterion_6_family_facts() {
    let cfg = FactSuiteConfig::default();
    let reports = [
        check_family_isomorphisms(&cfg).unwrap(),
        check_signed_path_powers(&cfg).unwrap(),
        check_cycle_power_parity(&cfg).unwrap(),
        check_hypercube_powers(&cfg).unwrap(),
    ];
    let ok = reports.iter().all(|r| r.passed());
    println!(
        "criterion 6 (Johnson + mirror isomorphisms, signed paths, cycle parity, cube powers): {}",
        verdict(ok)
    );
    for r in &reports {
        assert!(r.passed(), "{}: {:?}", r.claim, r.counterexamples.first());
    }
}

#[test]
fn criterion_7_switching_and_relabeling_preservation() {
    let mut rng = StdRng::seed_from_u64(0xACCE);
    let mut failures = 0usize;
    for _ in 0..200 {
        let n = rng.random_range(2..=6);
        let g = random_signed_graph(n, &mut rng);
        let d = random_switching(n, &mut rng);
        let rho = random_relabeling(n, &mut rng);
        let k = rng.random_range(1..n);
        let w = wedge_power(&g, k).unwrap();
        let switched = wedge_power(&g.switch(&d).unwrap(), k).unwrap();
        let lift = induced_switching(&d, k).unwrap();
        if *switched.graph() != w.graph().switch(&lift).unwrap() {
            failures += 1;
            continue;
        }
        let relabeled = wedge_power(&g.relabel(&rho).unwrap(), k).unwrap();
        let mapped = relabel_power_back(&relabeled, &rho).unwrap();
        if w.graph().switching_equivalent(&mapped).unwrap().is_none() {
            failures += 1;
        }
    }
    let ok = failures == 0;
    println!(
        "criterion 7 (200 random triples: switching commutes exactly, relabeling keeps the class): {}",
        verdict(ok)
    );
    assert!(ok, "{failures} failures");
}

#[test]
fn criterion_8_inverted_sign_rule_breaks_the_fixtures_and_the_sweep() {
    // Fixture 1: the hexagon's signs all flip.
    let (signs, _) = hexagon_walk_signs(WedgeSignRule::NegatedPermutationSign);
    let fixture_1_fails = signs != HEXAGON_SIGNS;
    // Fixture 2: the negative-edge count of the C4 square changes.
    let mutated = wedge_power_with_rule(&c4(), 2, WedgeSignRule::NegatedPermutationSign).unwrap();
    let fixture_2_fails = mutated
        .graph()
        .edges()
        .filter(|(_, _, s)| s.is_negative())
        .count()
        != 2;
    // The sweep reports counterexamples.
    let sweep = sweep_balance_characterization(&SweepOptions {
        n_max: 4,
        signing_budget: 16,
        rule: WedgeSignRule::NegatedPermutationSign,
        ..SweepOptions::default()
    })
    .unwrap();
    let ok = fixture_1_fails && fixture_2_fails && !sweep.passed();
    println!(
        "criterion 8 (inverted permutation-sign factor breaks criteria 1-3): {}",
        verdict(ok)
    );
    assert!(
        ok,
        "fixture1 {fixture_1_fails}, fixture2 {fixture_2_fails}, sweep cx {}",
        sweep.counterexamples.len()
    );
}

#[test]
fn generated_families_match_their_contracts() {
    // Supporting spot checks used throughout the criteria above.
    let j = generate(&FamilySpec {
        family: Family::Johnson { n: 4, k: 2, l: 1 },
        signing: Signing::AllPositive,
    })
    .unwrap();
    assert_eq!((j.n(), j.num_edges()), (6, 12));
    let c5 = generate(&FamilySpec {
        family: Family::Cycle { n: 5 },
        signing: Signing::OneNegative { edge: None },
    })
    .unwrap();
    assert_eq!(c5.sign(0, 4), Some(Sign::Minus));
}
