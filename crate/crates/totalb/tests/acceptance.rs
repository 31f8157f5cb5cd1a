//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Each check panics on the first violation; panics are caught so
//! the remaining criteria still run.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use totalb::caterpillar::{
    check_pivot_properties, classify_pivoted, colour_dense_path_type1, colour_pivoted, colour_small_m_degree,
    detect_type1, detect_type2, solve, Caterpillar, DensePathType, PivotClassification,
};
use totalb::colouring::{path_graph, star_graph};
use totalb::exact::{exists_total_k_colouring, find_b_chromatic, solve_exact, SearchConfig};
use totalb::generate::{caterpillar_from_leaf_counts, generate, Family};
use totalb::graph::{Element, Graph};
use totalb::reduction::{build_gadget, equal_up_to_renaming, lift_colouring, project_colouring};
use totalb::verify;

mod common;
use common::raw_total_degree;

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

/// m_t from raw degrees: largest i with at least i elements of degree >= i-1.
fn raw_m_degree(g: &Graph) -> usize {
    let mut d: Vec<usize> = g.elements().map(|x| raw_total_degree(g, x)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    (1..=d.len()).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0)
}

fn raw_dense(g: &Graph) -> BTreeSet<Element> {
    let m = raw_m_degree(g);
    g.elements().filter(|&x| raw_total_degree(g, x) + 1 >= m).collect()
}

fn closed_forms() -> String {
    let paths = [1, 3, 3, 4, 5, 5, 5];
    for (i, &want) in paths.iter().enumerate() {
        let r = solve_exact(&path_graph(i + 1), &cfg()).unwrap();
        assert_eq!(r.phi_t, want, "P_{}", i + 1);
        assert!(verify(&path_graph(i + 1), &r.witness).unwrap().is_valid());
    }
    for n in 1..=5 {
        let want = if n == 1 { 3 } else { n + 1 };
        assert_eq!(solve_exact(&star_graph(n), &cfg()).unwrap().phi_t, want, "K_1,{n}");
    }
    "paths 1..7, stars 1..5".into()
}

fn golden_k6() -> String {
    let g = generate(&Family::MinimalDensePath { k: 6, kind: DensePathType::Type1, flipped: false }).unwrap();
    let c = colour_dense_path_type1(&g, &(0..6).collect::<Vec<_>>()).unwrap();
    let got = c.to_json_string();
    assert_eq!(got, common::k6_golden_json());
    assert!(verify(&g, &c).unwrap().is_valid());
    format!("{} bytes identical", got.len())
}

fn dense_path_suites() -> String {
    common::dense_path_suite(DensePathType::Type1, 3..=12, false);
    common::dense_path_suite(DensePathType::Type2, 4..=12, false);
    common::dense_path_suite(DensePathType::Type2, 4..=12, true);
    common::dense_path_suite(DensePathType::Type3, 5..=12, false);
    "type 1 k=3..12, type 2 k=4..12 both ends, type 3 k=5..12".into()
}

fn pivot_certificate() -> String {
    let mut out = vec![];
    for f in [Family::PivotedType2a, Family::PivotedType2b] {
        let g = generate(&f).unwrap();
        assert_eq!(raw_m_degree(&g), 6, "{f:?}");
        let r = solve_exact(&g, &cfg()).unwrap();
        assert_eq!(r.phi_t, 5, "{f:?}");
        assert_eq!(r.attempts.first().map(|a| a.0), Some(6), "{f:?}: k = 6 not searched first");
        assert!(find_b_chromatic(&g, 6, &cfg()).unwrap().is_none(), "{f:?}");
        let c = colour_pivoted(&g, &classify_pivoted(&g).unwrap()).unwrap();
        assert_eq!(c.k(), 5);
        assert!(verify(&g, &c).unwrap().is_valid(), "{f:?}");
        out.push(format!("{} vertices: k=6 exhausted in {} nodes", g.vertex_count(), r.attempts[0].1));
    }
    out.join("; ")
}

fn small_m_sweep() -> String {
    let mut graphs = vec![path_graph(1), path_graph(2)];
    graphs.extend(common::all_caterpillars(9).iter().map(|l| caterpillar_from_leaf_counts(l)));
    let mut checked = 0;
    for g in graphs {
        let m = raw_m_degree(&g);
        if m > 5 {
            continue;
        }
        let c = colour_small_m_degree(&g).unwrap_or_else(|e| panic!("{:?}: {e}", g.edges()));
        assert_eq!(c.k(), m, "{:?}", g.edges());
        assert!(verify(&g, &c).unwrap().is_valid(), "{:?}", g.edges());
        assert_eq!(solve_exact(&g, &cfg()).unwrap().phi_t, m, "{:?}", g.edges());
        checked += 1;
    }
    format!("{checked} caterpillars")
}

fn differential() -> String {
    let mut fallback = 0;
    for seed in 0..200 {
        let g = generate(&Family::RandomCaterpillar { seed, max_n: 10 }).unwrap();
        let exact = solve_exact(&g, &cfg()).unwrap();
        assert!(verify(&g, &exact.witness).unwrap().is_valid(), "seed {seed}");
        let out = solve(&g, true).unwrap();
        assert_eq!(out.phi_t, Some(exact.phi_t), "seed {seed} via {:?}", out.method);
        let c = out.colouring.as_ref().expect("witness returned");
        assert!(verify(&g, c).unwrap().is_valid(), "seed {seed}");
        fallback += usize::from(out.certificate.m_t != exact.phi_t);
    }
    format!("200 seeds, {fallback} with phi_t = m_t - 1")
}

fn reduction() -> String {
    let q3 = generate(&Family::CubeGraph).unwrap();
    let gd = build_gadget(&q3).unwrap();
    let (h, n) = (&gd.h, 8);
    assert_eq!(h.vertex_count(), 57);
    assert_eq!(raw_m_degree(h), 17);
    let v = gd.apex();
    let e = |a, b| Element::Edge(h.edge_between(a, b).unwrap());
    assert_eq!(raw_total_degree(h, Element::Vertex(v)), 2 * n + 8);
    for j in 0..n {
        assert_eq!(raw_total_degree(h, Element::Vertex(j)), 8);
        assert_eq!(raw_total_degree(h, e(j, v)), n + 8);
    }
    for i in 1..=4 {
        let vi = gd.hub(i);
        assert_eq!(raw_total_degree(h, Element::Vertex(vi)), 2 * n + 8);
        assert_eq!(raw_total_degree(h, e(v, vi)), 2 * n + 8);
        for j in 1..=n + 3 {
            let p = gd.pendant(i, j);
            // hub and pendant edge
            assert_eq!(raw_total_degree(h, Element::Vertex(p)), 2);
            assert_eq!(raw_total_degree(h, e(vi, p)), n + 5);
        }
    }
    let cg = exists_total_k_colouring(&q3, 4, &cfg()).unwrap().expect("Q3 is totally 4-colourable");
    let ch = lift_colouring(&gd, &q3, &cg).unwrap();
    assert_eq!(ch.k(), 17);
    assert!(verify(h, &ch).unwrap().is_valid());
    let back = project_colouring(&gd, &q3, &ch).unwrap();
    assert!(equal_up_to_renaming(&back, &cg));
    "57 vertices, m_t = 17, lift verifies, round trip holds".into()
}

fn relabel(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    let mut edges: Vec<_> = g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    edges.shuffle(rng);
    Graph::from_edges(g.vertex_count(), &edges).unwrap()
}

fn structural_check(g: &Graph) -> PivotClassification {
    let dense = raw_dense(g);
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if dense.contains(&Element::Edge(e)) {
            assert!(dense.contains(&Element::Vertex(a)) || dense.contains(&Element::Vertex(b)), "edge {e}");
        }
    }
    let m = raw_m_degree(g);
    if m < 6 {
        return PivotClassification::NotPivoted;
    }
    let cat = Caterpillar::new(g).unwrap();
    assert!(!(detect_type1(&cat).is_some() && detect_type2(&cat).is_some()), "both pivot conditions hold");
    let cls = classify_pivoted(g).unwrap();
    check_pivot_properties(g, &cls).unwrap();
    let deg = |v: usize| g.neighbours(v).count();
    match &cls {
        PivotClassification::Type1 { u, v, .. } => {
            let mut set: BTreeSet<Element> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == *u || b == *u)
                .map(|(i, _)| Element::Edge(i))
                .collect();
            set.insert(Element::Vertex(*u));
            set.insert(Element::Vertex(*v));
            assert_eq!(set.intersection(&dense).count(), m);
            assert!(deg(*v) + 2 < m);
        }
        PivotClassification::Type2 { p1, p2, .. } => {
            assert_eq!(m, 6);
            for p in [p1, p2] {
                assert_eq!(p.vertices.len(), 3);
                assert_eq!(deg(p.vertices[1]), 3);
                assert_eq!((deg(p.vertices[0]), deg(p.vertices[2])), (2, 2));
            }
        }
        PivotClassification::NotPivoted => {}
    }
    cls
}

fn structural() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut type1 = 0;
    for m in 7..=56 {
        let g = relabel(&generate(&Family::PivotedType1 { m }).unwrap(), &mut rng);
        assert!(matches!(structural_check(&g), PivotClassification::Type1 { .. }), "m={m}");
        type1 += 1;
    }
    let mut type2 = 0;
    for f in [Family::PivotedType2a, Family::PivotedType2b] {
        let base = generate(&f).unwrap();
        for _ in 0..25 {
            let g = relabel(&base, &mut rng);
            assert!(matches!(structural_check(&g), PivotClassification::Type2 { .. }), "{f:?}");
            type2 += 1;
        }
    }
    let (mut plain, mut seed) = (0, 0);
    while plain < 50 {
        let g = generate(&Family::RandomCaterpillar { seed, max_n: 30 }).unwrap();
        seed += 1;
        if raw_m_degree(&g) >= 6 && structural_check(&g) == PivotClassification::NotPivoted {
            plain += 1;
        }
    }
    format!("{type1} type 1, {type2} type 2, {plain} non-pivoted (from {seed} random)")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> String); 8] = [
        ("closed-form agreement", closed_forms),
        ("k=6 type 1 golden colouring", golden_k6),
        ("dense path suites", dense_path_suites),
        ("pivoted non-existence certificate", pivot_certificate),
        ("m_t <= 5 sweep", small_m_sweep),
        ("differential fuzzing", differential),
        ("reduction integrity", reduction),
        ("structural properties", structural),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = panic::catch_unwind(AssertUnwindSafe(check));
        let ms = t.elapsed().as_millis();
        match res {
            Ok(detail) => println!("PASS {} {name}: {detail} ({ms} ms)", i + 1),
            Err(p) => {
                failed += 1;
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL {} {name}: {msg} ({ms} ms)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
