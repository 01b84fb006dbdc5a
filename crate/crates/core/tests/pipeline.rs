use foldhard::clique_encoding::{CliqueEncoding, GadgetCounts};
use foldhard::reduction::{
    build_s_g, build_s_g_from_payloads, decide_3k_clique_via_rna, make_schedule, payload_counts, thresholds,
    thresholds_from_payloads, LengthSchedule, Payload, DEFAULT_GROWTH,
};
use foldhard::seq::seq;
use foldhard::solvers::rna_score;
use foldhard::{has_3k_clique_bruteforce, Error, Graph};

#[test]
fn schedule_for_k4_at_growth_two() {
    let g = Graph::complete(4);
    let enc = CliqueEncoding::new(&g, 1).unwrap();
    let (clg, cng) = enc.all_gadgets().unwrap();
    // count the symbols of an actual gadget pair rather than trusting the type arithmetic
    let l0 = (clg[0].len() + cng[0].len()) as u64;
    let s = make_schedule(&enc, 2).unwrap();
    assert_eq!(s.ell, [l0, 2 * l0, 4 * l0, 8 * l0, 2 * 4 * 8 * l0]);
    assert_eq!(s.ell[0] % 2, 0);
}

#[test]
fn default_growth_ratios() {
    let enc = CliqueEncoding::new(&Graph::cycle(5), 2).unwrap();
    let s = make_schedule(&enc, DEFAULT_GROWTH).unwrap();
    for i in 1..4 {
        assert_eq!(s.ell[i], 100 * s.ell[i - 1]);
    }
    assert_eq!(s.ell[4], 100 * 5 * s.ell[3]);
    assert_eq!(make_schedule(&enc, 1), Err(Error::GrowthTooSmall { growth: 1 }));
}

#[test]
fn graphs_without_k_cliques_are_rejected() {
    let enc = CliqueEncoding::new(&Graph::path(4), 3).unwrap();
    assert_eq!(make_schedule(&enc, 2), Err(Error::NoCliques { k: 3 }));
    assert!(matches!(build_s_g(&enc, &LengthSchedule::custom([2, 2, 2, 2, 2]).unwrap(), 1000), Err(Error::NoCliques { k: 3 })));
}

#[test]
fn m1_ignores_edges_beyond_the_clique_list() {
    // two graphs with the same triangles in the same order
    let a = Graph::new(5, [(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
    let b = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
    let (ea, eb) = (CliqueEncoding::new(&a, 3).unwrap(), CliqueEncoding::new(&b, 3).unwrap());
    let (sa, sb) = (make_schedule(&ea, 100).unwrap(), make_schedule(&eb, 100).unwrap());
    assert_eq!(thresholds(&ea, &sa).unwrap().m1, thresholds(&eb, &sb).unwrap().m1);
}

#[test]
fn thresholds_match_exhaustive_search_on_named_graphs() {
    for (g, k) in [
        (Graph::complete(6), 2),
        (Graph::complete(5), 2),
        (Graph::cycle(6), 1),
        (Graph::complete(3), 1),
        (Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(), 1),
    ] {
        let enc = CliqueEncoding::new(&g, k).unwrap();
        let r = thresholds(&enc, &make_schedule(&enc, DEFAULT_GROWTH).unwrap()).unwrap();
        assert!(r.q >= 3 * r.c1);
        assert_eq!(r.decision, has_3k_clique_bruteforce(&g, k), "{:?} k = {k}", g.edges());
    }
}

#[test]
fn full_scale_folding_is_refused() {
    let enc = CliqueEncoding::new(&Graph::complete(4), 1).unwrap();
    let s = make_schedule(&enc, DEFAULT_GROWTH).unwrap();
    match decide_3k_clique_via_rna(&enc, &s, 1 << 24, rna_score) {
        Err(Error::InfeasibleScale { needed, .. }) => assert!(needed > 100_000_000),
        other => panic!("expected a scale refusal, got {other:?}"),
    }
}

/// On toy schedules the explicit folding with `m1 + m2` pairs still exists,
/// so the optimum can only be larger.
#[test]
fn toy_s_g_folds_at_least_m1_plus_m2() {
    let payload_sets = [
        vec![Payload { clg: seq("01"), cng: seq("10") }, Payload { clg: seq("10"), cng: seq("01") }],
        vec![Payload { clg: seq("01"), cng: seq("01") }, Payload { clg: seq("10"), cng: seq("10") }],
    ];
    for payloads in payload_sets {
        let c: GadgetCounts = payload_counts(&payloads).unwrap();
        let (l1, l2, l3) = (8, 10, 12);
        let zeros_primed = 3 * 3 * l3 + 2 * 3 * (2 * l1 + c.clg0 + c.cng0);
        let s = LengthSchedule::custom([c.total(), l1, l2, l3, zeros_primed + 1]).unwrap();
        let sg = build_s_g_from_payloads(&payloads, &s, 100_000).unwrap();
        let r = thresholds_from_payloads(&payloads, 0, 0, &s).unwrap();
        assert!(rna_score(&sg) as u128 >= r.m1 + r.m2);
    }
}
