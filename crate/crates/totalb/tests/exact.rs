use proptest::prelude::*;

use totalb::colouring::{path_graph, star_graph, total_m_degree};
use totalb::exact::{exists_total_k_colouring, find_b_chromatic, solve_exact, ExactError, SearchConfig};
use totalb::generate::{caterpillar_from_leaf_counts, generate, Family};
use totalb::graph::Graph;
use totalb::verify;

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

#[test]
fn closed_form_agreement() {
    let paths = [1, 3, 3, 4, 5, 5, 5, 5];
    for (i, &want) in paths.iter().enumerate() {
        let r = solve_exact(&path_graph(i + 1), &cfg()).unwrap();
        assert_eq!(r.phi_t, want, "P_{}", i + 1);
    }
    for n in 1..=5 {
        let want = if n == 1 { 3 } else { n + 1 };
        assert_eq!(solve_exact(&star_graph(n), &cfg()).unwrap().phi_t, want, "K_1,{n}");
    }
}

#[test]
fn witnesses_verify_and_bound_is_tight() {
    for g in [path_graph(5), star_graph(3), caterpillar_from_leaf_counts(&[2, 0, 2])] {
        let r = solve_exact(&g, &cfg()).unwrap();
        assert_eq!(r.witness.k(), r.phi_t);
        assert!(verify(&g, &r.witness).unwrap().is_valid());
        assert_eq!(r.m_t, total_m_degree(&g).unwrap());
        if r.phi_t < r.m_t {
            assert!(find_b_chromatic(&g, r.phi_t + 1, &cfg()).unwrap().is_none());
        }
    }
}

#[test]
fn seven_vertex_two_path_core() {
    // spine w1 w2 v w3 w4 with one leaf on w2 and w3: m_t is only 5 here
    let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 6)]).unwrap();
    assert_eq!(g.element_count(), 13);
    assert_eq!(total_m_degree(&g).unwrap(), 5);
    assert_eq!(solve_exact(&g, &cfg()).unwrap().phi_t, 5);
}

#[test]
fn proper_colouring_search() {
    assert!(exists_total_k_colouring(&path_graph(3), 3, &cfg()).unwrap().is_some());
    assert!(exists_total_k_colouring(&star_graph(3), 3, &cfg()).unwrap().is_none());
    let q3 = generate(&Family::CubeGraph).unwrap();
    let c = exists_total_k_colouring(&q3, 4, &cfg()).unwrap().expect("Q3 has a total 4-colouring");
    let r = verify(&q3, &c).unwrap();
    assert!(r.proper && r.complete);
}

#[test]
fn cap_and_budget() {
    let big = path_graph(30);
    assert!(matches!(solve_exact(&big, &cfg()), Err(ExactError::CapExceeded { elements: 59, cap: 40 })));
    let g = generate(&Family::PivotedType2a).unwrap();
    let tiny = SearchConfig { cap: 40, budget: Some(10) };
    match solve_exact(&g, &tiny) {
        Err(ExactError::BudgetExceeded { lower, upper, .. }) => assert!(lower <= upper && upper == 6),
        other => panic!("expected budget exhaustion, got {other:?}"),
    }
}

#[test]
fn deterministic() {
    let g = caterpillar_from_leaf_counts(&[2, 1, 2]);
    let a = solve_exact(&g, &cfg()).unwrap();
    let b = solve_exact(&g, &cfg()).unwrap();
    assert_eq!(a.witness, b.witness);
    assert_eq!(a.nodes_explored, b.nodes_explored);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn phi_is_exactly_feasible(seed in any::<u64>(), max_n in 2usize..9) {
        let g = generate(&Family::RandomCaterpillar { seed, max_n }).unwrap();
        let r = solve_exact(&g, &cfg()).unwrap();
        prop_assert!(verify(&g, &r.witness).unwrap().is_valid());
        prop_assert!(find_b_chromatic(&g, r.phi_t, &cfg()).unwrap().is_some());
        if r.phi_t < r.m_t {
            prop_assert!(find_b_chromatic(&g, r.phi_t + 1, &cfg()).unwrap().is_none());
        }
    }
}
