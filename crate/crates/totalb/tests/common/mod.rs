#![allow(dead_code)]

use std::collections::BTreeSet;

use totalb::caterpillar::{
    check_path_postcondition, colour_dense_path_type1, colour_dense_path_type2, colour_dense_path_type3,
    find_dense_paths, Caterpillar, DensePathType,
};
use totalb::colouring::dense_elements;
use totalb::generate::{generate, Family};
use totalb::graph::{Element, Graph};
use totalb::{Colour, TotalColouring};

/// Neighbourhood colours recomputed from the edge list alone.
pub fn seen_colours(g: &Graph, c: &TotalColouring, x: Element) -> Vec<Colour> {
    let mut out = vec![];
    let mut push = |y: Element| {
        if let Some(col) = c.get(y) {
            out.push(col);
        }
    };
    let edges = g.edges();
    match x {
        Element::Vertex(v) => {
            for (e, &(a, b)) in edges.iter().enumerate() {
                if a == v || b == v {
                    push(Element::Edge(e));
                    push(Element::Vertex(if a == v { b } else { a }));
                }
            }
        }
        Element::Edge(f) => {
            let (a, b) = edges[f];
            push(Element::Vertex(a));
            push(Element::Vertex(b));
            for (e, &(p, q)) in edges.iter().enumerate() {
                if e != f && (p == a || p == b || q == a || q == b) {
                    push(Element::Edge(e));
                }
            }
        }
    }
    out
}

// degrees recomputed from the raw edge list, not through Graph::total_degree
pub fn raw_total_degree(h: &Graph, x: Element) -> usize {
    let deg = |v| h.edges().iter().filter(|&&(a, b)| a == v || b == v).count();
    match x {
        Element::Vertex(v) => 2 * deg(v),
        Element::Edge(e) => {
            let (a, b) = h.edges()[e];
            deg(a) + deg(b)
        }
    }
}

// Leaf colours of the k = 6 running example, (vertex, edge) per w_i^j.
const K6_LEAVES: [&[(Colour, Colour)]; 6] = [
    &[(4, 5), (7, 6), (8, 9), (11, 10)],
    &[(6, 7), (9, 8), (10, 11)],
    &[(2, 1), (8, 9), (11, 10)],
    &[(1, 2), (4, 3), (10, 11)],
    &[(2, 1), (3, 4), (6, 5)],
    &[(1, 2), (4, 3), (5, 6), (8, 7)],
];

/// Expected JSON for the k = 6 type 1 running example, formatted by hand.
pub fn k6_golden_json() -> String {
    // spine 0..5 gets 1,3,..,11; spine edges 0..4 get 2,4,..,10; leaves are
    // numbered after the spine in order, their edges after the spine edges
    let mut vertices: Vec<Colour> = (1..=6).map(|i| 2 * i - 1).collect();
    let mut edges: Vec<Colour> = (1..=5).map(|i| 2 * i).collect();
    for row in K6_LEAVES {
        for &(v, e) in row {
            vertices.push(v);
            edges.push(e);
        }
    }
    let body = |xs: &[Colour]| xs.iter().enumerate().map(|(i, c)| format!("\"{i}\":{c}")).collect::<Vec<_>>().join(",");
    format!("{{\"k\":11,\"vertices\":{{{}}},\"edges\":{{{}}}}}", body(&vertices), body(&edges))
}

pub fn q_of(kind: DensePathType, k: usize) -> usize {
    match kind {
        DensePathType::Type1 => 2 * k - 1,
        DensePathType::Type2 => 2 * k - 2,
        DensePathType::Type3 => 2 * k - 3,
    }
}

/// Colours the minimal instance of each `k` and checks it with an
/// independent neighbourhood scan. Panics on the first failure.
pub fn dense_path_suite(kind: DensePathType, ks: std::ops::RangeInclusive<usize>, flipped: bool) {
    for k in ks {
        let g = generate(&Family::MinimalDensePath { k, kind, flipped }).unwrap();
        let cat = Caterpillar::new(&g).unwrap();
        let paths = find_dense_paths(&cat);
        assert_eq!(paths.len(), 1, "{kind:?} k={k}");
        let p = &paths[0];
        assert_eq!((p.kind(), p.k()), (kind, k));
        let q = q_of(kind, k);
        assert_eq!(p.q(), q);
        assert_eq!(cat.m, q, "minimal instances have m_t = q");
        let c = match kind {
            DensePathType::Type1 => colour_dense_path_type1(&g, &p.vertices),
            DensePathType::Type2 => colour_dense_path_type2(&g, p),
            DensePathType::Type3 => colour_dense_path_type3(&g, &p.vertices),
        }
        .unwrap();
        check_path_postcondition(&g, &c, &p.witnesses(&g), q).unwrap();

        // independent scan over every dense element of the graph
        let dense = dense_elements(&g).unwrap();
        assert_eq!(dense.len(), q);
        let own: BTreeSet<Colour> = dense.iter().map(|&x| c.get(x).expect("dense element coloured")).collect();
        assert_eq!(own, (1..=q).collect(), "{kind:?} k={k}");
        for &x in &dense {
            let seen = seen_colours(&g, &c, x);
            let distinct: BTreeSet<_> = seen.iter().copied().collect();
            assert!(!distinct.contains(&c.get(x).unwrap()), "{kind:?} k={k}: {x} clashes");
            assert_eq!(distinct.len(), q - 1, "{kind:?} k={k}: {x} picks up {distinct:?}");
            if raw_total_degree(&g, x) + 1 == q {
                assert_eq!(seen.len(), distinct.len(), "{kind:?} k={k}: tight {x} repeats a colour");
            }
        }
    }
}

/// Leaf-count vectors of every connected caterpillar on at most `max_n`
/// vertices, one per reversal class. Spines of length one need two leaves,
/// so P_1 and P_2 are not included.
pub fn all_caterpillars(max_n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for l in 0..=left {
            cur[i] = l;
            rec(i + 1, left - l, cur, out);
        }
    }
    let mut out = vec![];
    for s in 1..=max_n {
        rec(0, max_n - s, &mut vec![0; s], &mut out);
    }
    // ends of a spine of length >= 2 carry a leaf, or they would be leaves
    out.retain(|l| {
        let s = l.len();
        (s == 1 && l[0] >= 2) || (s >= 2 && l[0] >= 1 && l[s - 1] >= 1)
    });
    let mut seen = BTreeSet::new();
    out.retain(|l| {
        let r: Vec<_> = l.iter().rev().copied().collect();
        seen.insert(if &r < l { r } else { l.clone() })
    });
    out
}
