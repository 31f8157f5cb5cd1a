use proptest::prelude::*;

use totalb::colouring::{
    colour_path, colour_star, dense_elements, is_tight, path_graph, star_graph, total_m_degree, ColouringError,
};
use totalb::graph::{Element, Graph};
use totalb::{verify, Colour, TotalColouring, Verdict};

fn colouring(g: &Graph, k: usize, vertices: &[Colour], edges: &[Colour]) -> TotalColouring {
    let mut c = TotalColouring::new(g, k);
    for (v, &col) in vertices.iter().enumerate() {
        c.set(Element::Vertex(v), col);
    }
    for (e, &col) in edges.iter().enumerate() {
        c.set(Element::Edge(e), col);
    }
    c
}

/// Naive reference: pairwise adjacency from the edge list, no shared code
/// with the library verifier.
fn reference(g: &Graph, c: &TotalColouring) -> (bool, bool, Vec<bool>) {
    let k = c.k();
    let mut xs: Vec<(Element, Colour)> = vec![];
    for v in 0..g.vertex_count() {
        xs.push((Element::Vertex(v), c.get(Element::Vertex(v)).unwrap()));
    }
    for e in 0..g.edge_count() {
        xs.push((Element::Edge(e), c.get(Element::Edge(e)).unwrap()));
    }
    let touches = |x: Element, y: Element| -> bool {
        let ends = |e: usize| g.edges()[e];
        match (x, y) {
            (Element::Vertex(a), Element::Vertex(b)) => {
                g.edges().iter().any(|&(p, q)| (p, q) == (a, b) || (q, p) == (a, b))
            }
            (Element::Vertex(a), Element::Edge(e)) | (Element::Edge(e), Element::Vertex(a)) => {
                let (p, q) = ends(e);
                a == p || a == q
            }
            (Element::Edge(e), Element::Edge(f)) => {
                let (p, q) = ends(e);
                let (r, s) = ends(f);
                e != f && (p == r || p == s || q == r || q == s)
            }
        }
    };
    let mut proper = true;
    let mut witness = vec![false; k + 1];
    for &(x, cx) in &xs {
        let mut seen = vec![false; k + 1];
        for &(y, cy) in &xs {
            if x != y && touches(x, y) {
                proper &= cx != cy;
                seen[cy] = true;
            }
        }
        if (1..=k).all(|col| col == cx || seen[col]) {
            witness[cx] = true;
        }
    }
    let surjective = (1..=k).all(|col| xs.iter().any(|&(_, c)| c == col));
    (proper, surjective, witness)
}

#[test]
fn verifier_examples() {
    let p2 = path_graph(2);
    assert_eq!(verify(&p2, &colouring(&p2, 3, &[1, 3], &[2])).unwrap().verdict, Verdict::ValidTotalBChromatic);
    assert_eq!(verify(&p2, &colouring(&p2, 2, &[1, 2], &[1])).unwrap().verdict, Verdict::Improper);

    let p4 = path_graph(4);
    let r = verify(&p4, &colouring(&p4, 4, &[1, 3, 1, 4], &[2, 4, 2])).unwrap();
    assert_eq!(r.verdict, Verdict::ValidTotalBChromatic);
    // w_4 sees only colours 1 and 2; colour 3 is witnessed by w_2
    let w: Vec<_> = (1..=4).map(|c| r.witnesses[&c].unwrap()).collect();
    assert_eq!(w, vec![Element::Vertex(2), Element::Edge(0), Element::Vertex(1), Element::Edge(1)]);
}

#[test]
fn verifier_errors() {
    let p2 = path_graph(2);
    let c = colouring(&p2, 2, &[1, 3], &[2]);
    assert!(matches!(verify(&p2, &c), Err(ColouringError::ColourOutOfRange { colour: 3, k: 2, .. })));
    let c = colouring(&path_graph(3), 3, &[1, 2, 1], &[3, 3]);
    assert!(matches!(verify(&p2, &c), Err(ColouringError::ShapeMismatch { .. })));
}

#[test]
fn m_degree_examples() {
    assert_eq!(total_m_degree(&path_graph(1)).unwrap(), 1);
    assert_eq!(total_m_degree(&path_graph(4)).unwrap(), 4);
    assert_eq!(total_m_degree(&path_graph(9)).unwrap(), 5);
    assert_eq!(total_m_degree(&star_graph(5)).unwrap(), 6);
    assert!(matches!(total_m_degree(&Graph::new(0)), Err(ColouringError::EmptyGraph)));
}

#[test]
fn dense_examples() {
    use Element::{Edge, Vertex};
    assert_eq!(dense_elements(&path_graph(5)).unwrap(), vec![Vertex(1), Vertex(2), Vertex(3), Edge(1), Edge(2)]);
    assert_eq!(dense_elements(&star_graph(3)).unwrap(), vec![Vertex(0), Edge(0), Edge(1), Edge(2)]);
    // K_{1,3}: m = 4, edges have d_t = 4 (dense, not tight), centre 6
    assert!(!is_tight(&star_graph(3), Edge(0)).unwrap());
    // P_5: m = 5, middle vertices have d_t = 4 = m - 1
    assert!(is_tight(&path_graph(5), Vertex(2)).unwrap());
}

#[test]
fn closed_forms() {
    let expected_path = [1, 3, 3, 4, 5, 5, 5, 5, 5, 5, 5, 5];
    for (i, &k) in expected_path.iter().enumerate() {
        let n = i + 1;
        let (g, c) = colour_path(n);
        assert_eq!(c.k(), k, "P_{n}");
        assert_eq!(total_m_degree(&g).unwrap(), k);
        assert!(verify(&g, &c).unwrap().is_valid(), "P_{n}");
    }
    let (g, c) = colour_path(1);
    assert_eq!(c.get(Element::Vertex(0)), Some(1));
    assert_eq!(g.element_count(), 1);
    let (_, c) = colour_path(4);
    assert_eq!(c.to_json_string(), colouring(&path_graph(4), 4, &[1, 3, 1, 4], &[2, 4, 2]).to_json_string());

    // K_{1,1} is P_2
    let (_, c) = colour_star(1);
    assert_eq!(c.k(), 3);
    for n in 2..=10 {
        let (g, c) = colour_star(n);
        assert_eq!(c.k(), n + 1);
        let r = verify(&g, &c).unwrap();
        assert!(r.is_valid(), "K_1,{n}");
        assert_eq!(c.get(Element::Vertex(0)), Some(1));
        assert_eq!(c.get(Element::Vertex(n)), Some(2));
    }
}

fn arb_coloured() -> impl Strategy<Value = (Graph, TotalColouring)> {
    (1usize..6, 1usize..6).prop_flat_map(|(n, k)| {
        proptest::collection::vec((0..n, 0..n), 0..7).prop_flat_map(move |pairs| {
            let mut g = Graph::new(n);
            for (a, b) in pairs {
                let _ = g.add_edge(a, b);
            }
            let cells = g.element_count();
            proptest::collection::vec(1..=k, cells).prop_map(move |cols| {
                let (vs, es) = cols.split_at(g.vertex_count());
                let c = colouring(&g, k, vs, es);
                (g.clone(), c)
            })
        })
    })
}

proptest! {
    #[test]
    fn verifier_agrees_with_reference((g, c) in arb_coloured()) {
        let r = verify(&g, &c).unwrap();
        let (proper, surjective, witness) = reference(&g, &c);
        prop_assert_eq!(r.proper, proper);
        prop_assert_eq!(r.surjective, surjective);
        if proper && surjective {
            for col in 1..=c.k() {
                prop_assert_eq!(r.witnesses[&col].is_some(), witness[col], "colour {}", col);
            }
            prop_assert_eq!(r.is_valid(), witness[1..].iter().all(|&w| w));
        } else {
            prop_assert!(!r.is_valid());
        }
        if r.is_valid() {
            prop_assert!(c.k() <= total_m_degree(&g).unwrap());
            for w in r.witnesses.values().flatten() {
                prop_assert!(g.total_degree(*w).unwrap() + 1 >= c.k());
            }
        }
    }

    #[test]
    fn json_round_trip((g, c) in arb_coloured()) {
        prop_assert_eq!(TotalColouring::from_json_str(&g, &c.to_json_string()).unwrap(), c);
    }
}
