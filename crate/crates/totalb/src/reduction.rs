//! The hardness gadget: from a cubic bipartite graph G on n vertices build H
//! with m_t(H) = n + 9, such that G is totally 4-colourable exactly when H has
//! a total b-chromatic (n + 9)-colouring. Colourings map both ways.
//!
//! Vertex ids in H: G's vertices keep their ids, then the apex `v`, then the
//! hubs `v_1..v_4`, then the pendants `u_i^j` hub by hub. G's edges keep their
//! ids too; the apex edges, hub edges and pendant edges follow in that order.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::colouring::{total_m_degree, verify, Colour, ColouringError, TotalColouring, Verdict};
use crate::graph::{Element, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("input graph has no vertices")]
    Empty,
    #[error("vertex {vertex} has degree {degree}; the input must be cubic")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("input is not bipartite: odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<VertexId> },
    #[error("colouring of G rejected: {0}")]
    BadInput(String),
    #[error("restriction to G breaks the 4-colouring certificate: {0}")]
    CertificateViolation(String),
    #[error("gadget invariant failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}

#[derive(Debug, Clone)]
pub struct Gadget {
    pub h: Graph,
    /// |V(G)|.
    pub n: usize,
    /// `v`, `v_i`, `u_i^j` and `u_j` (the G vertices, 1-based) to H ids.
    pub element_map: BTreeMap<String, VertexId>,
    /// G element to H element. Both ids are preserved, so this is the
    /// identity; kept explicit for auditing.
    pub origin_map: BTreeMap<Element, Element>,
}

/// Sidecar naming map written next to the gadget's edge list.
#[derive(Debug, Clone, Serialize)]
pub struct GadgetNames<'a> {
    pub n: usize,
    pub m_t: usize,
    pub names: &'a BTreeMap<String, VertexId>,
}

impl Gadget {
    pub fn apex(&self) -> VertexId {
        self.n
    }

    /// v_i, 1-based.
    pub fn hub(&self, i: usize) -> VertexId {
        debug_assert!((1..=4).contains(&i));
        self.n + i
    }

    /// u_i^j, both 1-based, j up to n + 3.
    pub fn pendant(&self, i: usize, j: usize) -> VertexId {
        debug_assert!((1..=4).contains(&i) && (1..=self.n + 3).contains(&j));
        self.n + 5 + (i - 1) * (self.n + 3) + (j - 1)
    }

    fn edge(&self, a: VertexId, b: VertexId) -> Element {
        Element::Edge(self.h.edge_between(a, b).expect("gadget edge"))
    }

    pub fn names(&self) -> GadgetNames<'_> {
        GadgetNames { n: self.n, m_t: self.n + 9, names: &self.element_map }
    }
}

/// BFS 2-colouring; on failure returns an odd cycle.
fn odd_cycle(g: &Graph) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut side = vec![None::<bool>; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbours(x) {
                match side[y] {
                    None => {
                        side[y] = Some(!side[x].unwrap());
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                    Some(sy) if Some(sy) == side[x] => {
                        // walk both ends up to their common ancestor
                        let (mut a, mut b) = (x, y);
                        let (mut left, mut right) = (vec![a], vec![b]);
                        while a != b {
                            if depth[a] >= depth[b] {
                                a = parent[a];
                                left.push(a);
                            } else {
                                b = parent[b];
                                right.push(b);
                            }
                        }
                        right.pop();
                        right.reverse();
                        left.extend(right);
                        return Some(left);
                    }
                    Some(_) => {}
                }
            }
        }
    }
    None
}

pub fn build_gadget(g: &Graph) -> Result<Gadget, ReductionError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(ReductionError::Empty);
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) != 3) {
        return Err(ReductionError::NotCubic { vertex: v, degree: g.degree(v) });
    }
    if let Some(cycle) = odd_cycle(g) {
        return Err(ReductionError::NotBipartite { cycle });
    }

    let mut h = Graph::new(5 * n + 17);
    let mut origin_map = BTreeMap::new();
    for v in 0..n {
        origin_map.insert(Element::Vertex(v), Element::Vertex(v));
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let id = h.add_edge(a, b).expect("G is simple");
        debug_assert_eq!(id, e);
        origin_map.insert(Element::Edge(e), Element::Edge(id));
    }
    let mut gadget = Gadget { h, n, element_map: BTreeMap::new(), origin_map };
    let (apex, hubs): (VertexId, Vec<VertexId>) = (gadget.apex(), (1..=4).map(|i| gadget.hub(i)).collect());
    for u in 0..n {
        gadget.h.add_edge(u, apex).expect("fresh apex edge");
        gadget.element_map.insert(format!("u_{}", u + 1), u);
    }
    gadget.element_map.insert("v".into(), apex);
    for (i, &vi) in hubs.iter().enumerate() {
        gadget.h.add_edge(apex, vi).expect("fresh hub edge");
        gadget.element_map.insert(format!("v_{}", i + 1), vi);
    }
    for i in 1..=4 {
        for j in 1..=n + 3 {
            let p = gadget.pendant(i, j);
            gadget.h.add_edge(gadget.hub(i), p).expect("fresh pendant edge");
            gadget.element_map.insert(format!("u_{i}^{j}"), p);
        }
    }
    check_degree_profile(&gadget).map_err(ReductionError::Internal)?;
    Ok(gadget)
}

/// The seven total-degree equations and m_t(H) = n + 9.
pub fn check_degree_profile(gd: &Gadget) -> Result<(), String> {
    let (h, n) = (&gd.h, gd.n);
    let dt = |x: Element| h.total_degree(x).map_err(|e| e.to_string());
    let expect = |x: Element, want: usize, what: &str| -> Result<(), String> {
        let got = dt(x)?;
        if got == want {
            Ok(())
        } else {
            Err(format!("d_t({what}) = {got}, expected {want}"))
        }
    };
    if h.vertex_count() != 5 * n + 17 {
        return Err(format!("|V(H)| = {}, expected {}", h.vertex_count(), 5 * n + 17));
    }
    let v = gd.apex();
    for u in 0..n {
        expect(Element::Vertex(u), 8, &format!("u_{}", u + 1))?;
        expect(gd.edge(u, v), n + 8, &format!("u_{}, v", u + 1))?;
    }
    expect(Element::Vertex(v), 2 * n + 8, "v")?;
    for i in 1..=4 {
        let vi = gd.hub(i);
        expect(gd.edge(v, vi), 2 * n + 8, &format!("v, v_{i}"))?;
        expect(Element::Vertex(vi), 2 * n + 8, &format!("v_{i}"))?;
        for j in 1..=n + 3 {
            let p = gd.pendant(i, j);
            expect(gd.edge(vi, p), n + 5, &format!("v_{i}, u_{i}^{j}"))?;
            // a pendant sees its hub and its edge
            expect(Element::Vertex(p), 2, &format!("u_{i}^{j}"))?;
        }
    }
    let m = total_m_degree(h).map_err(|e| e.to_string())?;
    if m != n + 9 {
        return Err(format!("m_t(H) = {m}, expected {}", n + 9));
    }
    Ok(())
}

fn check_four_colouring(g: &Graph, c: &TotalColouring) -> Result<(), ReductionError> {
    let report = verify(g, c)?;
    if !report.proper || !report.complete {
        return Err(ReductionError::BadInput(format!("not a proper complete total colouring ({:?})", report.verdict)));
    }
    if let Some(col) = c.colours_used().into_iter().find(|&col| col > 4) {
        return Err(ReductionError::BadInput(format!("uses colour {col}; at most 4 allowed")));
    }
    Ok(())
}

/// Extends a total 4-colouring of G to a total b-chromatic (n+9)-colouring
/// of H.
pub fn lift_colouring(gd: &Gadget, g: &Graph, cg: &TotalColouring) -> Result<TotalColouring, ReductionError> {
    if g.vertex_count() != gd.n {
        return Err(ReductionError::BadInput(format!("G has {} vertices, gadget built for {}", g.vertex_count(), gd.n)));
    }
    check_four_colouring(g, cg)?;
    let n = gd.n;
    let mut c = TotalColouring::new(&gd.h, n + 9);
    for (x, col) in cg.assigned() {
        c.set(gd.origin_map[&x], col);
    }
    let v = gd.apex();
    for u in 0..n {
        c.set(gd.edge(u, v), u + 5);
    }
    c.set(Element::Vertex(v), n + 5);
    for i in 1..=4 {
        let vi = gd.hub(i);
        c.set(gd.edge(v, vi), n + 5 + i);
        c.set(Element::Vertex(vi), i);
        let abc: Vec<Colour> = (1..=4).filter(|&x| x != i).collect();
        let z = abc[0];
        for j in 1..=n {
            let p = gd.pendant(i, j);
            c.set(Element::Vertex(p), z);
            c.set(gd.edge(vi, p), j + 4);
        }
        for (t, &a) in abc.iter().enumerate() {
            let p = gd.pendant(i, n + 1 + t);
            c.set(Element::Vertex(p), n + 5 + a);
            c.set(gd.edge(vi, p), a);
        }
    }
    let report = verify(&gd.h, &c)?;
    if report.verdict != Verdict::ValidTotalBChromatic {
        return Err(ReductionError::Internal(format!("lifted colouring is {:?}", report.verdict)));
    }
    Ok(c)
}

/// Restricts a total b-chromatic (n+9)-colouring of H to G and renames the
/// colours found there to 1..=4 in increasing order.
pub fn project_colouring(gd: &Gadget, g: &Graph, ch: &TotalColouring) -> Result<TotalColouring, ReductionError> {
    if g.vertex_count() != gd.n {
        return Err(ReductionError::BadInput(format!("G has {} vertices, gadget built for {}", g.vertex_count(), gd.n)));
    }
    let report = verify(&gd.h, ch)?;
    if report.verdict != Verdict::ValidTotalBChromatic || ch.k() != gd.n + 9 {
        return Err(ReductionError::BadInput(format!(
            "H colouring is {:?} with k = {}, need a total b-chromatic {}-colouring",
            report.verdict,
            ch.k(),
            gd.n + 9
        )));
    }
    let mut cg = TotalColouring::new(g, 4);
    for (&x, &y) in &gd.origin_map {
        cg.set(x, ch.get(y).expect("verified complete"));
    }
    let used: BTreeSet<Colour> = cg.colours_used().into_iter().collect();
    if used.len() > 4 {
        return Err(ReductionError::CertificateViolation(format!("G's elements carry {} colours: {used:?}", used.len())));
    }
    let rename: BTreeMap<Colour, Colour> = used.iter().enumerate().map(|(i, &c)| (c, i + 1)).collect();
    cg.map_colours(|c| rename[&c]);
    let back = verify(g, &cg)?;
    if !back.proper || !back.complete {
        return Err(ReductionError::CertificateViolation(format!("restriction is {:?}", back.verdict)));
    }
    Ok(cg)
}

/// Whether two colourings of the same graph differ only by a bijective
/// renaming of colours.
pub fn equal_up_to_renaming(a: &TotalColouring, b: &TotalColouring) -> bool {
    let (mut fwd, mut bwd) = (BTreeMap::new(), BTreeMap::new());
    let xs: Vec<_> = a.assigned().collect();
    let ys: Vec<_> = b.assigned().collect();
    xs.len() == ys.len()
        && xs.iter().zip(&ys).all(|(&(x, cx), &(y, cy))| {
            x == y && *fwd.entry(cx).or_insert(cy) == cy && *bwd.entry(cy).or_insert(cx) == cx
        })
}
