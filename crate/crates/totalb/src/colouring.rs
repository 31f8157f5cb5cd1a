//! Total colourings, the b-chromatic verifier, total m-degree, and the
//! closed-form colourings of paths and stars.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Element, Graph, GraphError};

pub type Colour = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("element {element} has colour {colour}, outside 1..={k}")]
    ColourOutOfRange { element: Element, colour: Colour, k: usize },
    #[error("colouring is sized for {found_v} vertices / {found_e} edges, graph has {want_v} / {want_e}")]
    ShapeMismatch { found_v: usize, found_e: usize, want_v: usize, want_e: usize },
    #[error("colouring names {0}, which is not in the graph")]
    UnknownElement(Element),
    #[error("graph has no elements")]
    EmptyGraph,
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("malformed colouring JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Assignment of colours in `1..=k` to the elements of a graph, possibly
/// partial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalColouring {
    k: usize,
    vertices: Vec<Option<Colour>>,
    edges: Vec<Option<Colour>>,
}

/// Wire format: `{"k": .., "vertices": {id: colour}, "edges": {id: colour}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringJson {
    pub k: usize,
    pub vertices: BTreeMap<usize, Colour>,
    pub edges: BTreeMap<usize, Colour>,
}

impl TotalColouring {
    /// Empty colouring of `g` with palette `1..=k`.
    pub fn new(g: &Graph, k: usize) -> Self {
        TotalColouring { k, vertices: vec![None; g.vertex_count()], edges: vec![None; g.edge_count()] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn set_k(&mut self, k: usize) {
        self.k = k;
    }

    pub fn get(&self, x: Element) -> Option<Colour> {
        match x {
            Element::Vertex(v) => self.vertices.get(v).copied().flatten(),
            Element::Edge(e) => self.edges.get(e).copied().flatten(),
        }
    }

    pub fn set(&mut self, x: Element, c: Colour) {
        match x {
            Element::Vertex(v) => self.vertices[v] = Some(c),
            Element::Edge(e) => self.edges[e] = Some(c),
        }
    }

    pub fn clear(&mut self, x: Element) {
        match x {
            Element::Vertex(v) => self.vertices[v] = None,
            Element::Edge(e) => self.edges[e] = None,
        }
    }

    pub fn is_coloured(&self, x: Element) -> bool {
        self.get(x).is_some()
    }

    pub fn fits(&self, g: &Graph) -> bool {
        self.vertices.len() == g.vertex_count() && self.edges.len() == g.edge_count()
    }

    pub fn is_complete(&self) -> bool {
        self.vertices.iter().chain(&self.edges).all(Option::is_some)
    }

    /// Assigned `(element, colour)` pairs in `(kind, id)` order.
    pub fn assigned(&self) -> impl Iterator<Item = (Element, Colour)> + '_ {
        let vs = self.vertices.iter().enumerate().filter_map(|(i, c)| c.map(|c| (Element::Vertex(i), c)));
        let es = self.edges.iter().enumerate().filter_map(|(i, c)| c.map(|c| (Element::Edge(i), c)));
        vs.chain(es)
    }

    pub fn uncoloured(&self) -> impl Iterator<Item = Element> + '_ {
        let vs = self.vertices.iter().enumerate().filter(|(_, c)| c.is_none()).map(|(i, _)| Element::Vertex(i));
        let es = self.edges.iter().enumerate().filter(|(_, c)| c.is_none()).map(|(i, _)| Element::Edge(i));
        vs.chain(es)
    }

    pub fn colours_used(&self) -> Vec<Colour> {
        let mut cs: Vec<_> = self.assigned().map(|(_, c)| c).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    /// Colours assigned to the total neighbourhood of `x` (with repeats).
    pub fn neighbour_colours(&self, g: &Graph, x: Element) -> Vec<Colour> {
        let mut out = Vec::new();
        g.for_each_total_neighbour(x, |y| out.extend(self.get(y)));
        out
    }

    /// Smallest colour in `1..=k` not present on the total neighbourhood of `x`.
    pub fn smallest_free(&self, g: &Graph, x: Element) -> Option<Colour> {
        let mut used = vec![false; self.k + 2];
        g.for_each_total_neighbour(x, |y| {
            if let Some(c) = self.get(y) {
                if c < used.len() {
                    used[c] = true;
                }
            }
        });
        (1..=self.k).find(|&c| !used[c])
    }

    /// Renames every assigned colour through `f`.
    pub fn map_colours(&mut self, mut f: impl FnMut(Colour) -> Colour) {
        for c in self.vertices.iter_mut().chain(self.edges.iter_mut()).flatten() {
            *c = f(*c);
        }
    }

    pub fn to_json(&self) -> ColouringJson {
        let pick = |xs: &[Option<Colour>]| xs.iter().enumerate().filter_map(|(i, c)| c.map(|c| (i, c))).collect();
        ColouringJson { k: self.k, vertices: pick(&self.vertices), edges: pick(&self.edges) }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("colouring serialises")
    }

    pub fn from_json(g: &Graph, json: &ColouringJson) -> Result<Self, ColouringError> {
        let mut c = TotalColouring::new(g, json.k);
        for (&v, &col) in &json.vertices {
            let x = Element::Vertex(v);
            if !g.contains(x) {
                return Err(ColouringError::UnknownElement(x));
            }
            c.set(x, col);
        }
        for (&e, &col) in &json.edges {
            let x = Element::Edge(e);
            if !g.contains(x) {
                return Err(ColouringError::UnknownElement(x));
            }
            c.set(x, col);
        }
        Ok(c)
    }

    pub fn from_json_str(g: &Graph, s: &str) -> Result<Self, ColouringError> {
        let json: ColouringJson = serde_json::from_str(s).map_err(|e| ColouringError::Json(e.to_string()))?;
        Self::from_json(g, &json)
    }
}

impl Serialize for TotalColouring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    ValidTotalBChromatic,
    ValidTotalOnly,
    Improper,
    NotSurjective,
    Incomplete,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub k: usize,
    pub proper: bool,
    pub complete: bool,
    pub surjective: bool,
    /// First b-chromatic element of each colour in `(kind, id)` order.
    pub witnesses: BTreeMap<Colour, Option<Element>>,
    /// Adjacent pairs sharing a colour, each listed once.
    pub conflicts: Vec<(Element, Element)>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::ValidTotalBChromatic
    }

    pub fn missing_witnesses(&self) -> Vec<Colour> {
        self.witnesses.iter().filter(|(_, w)| w.is_none()).map(|(&c, _)| c).collect()
    }
}

pub fn verify(g: &Graph, c: &TotalColouring) -> Result<VerificationReport, ColouringError> {
    if !c.fits(g) {
        return Err(ColouringError::ShapeMismatch {
            found_v: c.vertices.len(),
            found_e: c.edges.len(),
            want_v: g.vertex_count(),
            want_e: g.edge_count(),
        });
    }
    let k = c.k();
    if k == 0 {
        return Err(ColouringError::EmptyPalette);
    }
    for (x, col) in c.assigned() {
        if col == 0 || col > k {
            return Err(ColouringError::ColourOutOfRange { element: x, colour: col, k });
        }
    }
    let mut witnesses: BTreeMap<Colour, Option<Element>> = (1..=k).map(|i| (i, None)).collect();
    let mut conflicts = Vec::new();
    let mut used = vec![false; k + 1];
    let mut seen = vec![0usize; k + 1];
    let mut stamp = 0;
    for x in g.elements() {
        let Some(cx) = c.get(x) else { continue };
        used[cx] = true;
        stamp += 1;
        let mut distinct = 0;
        let mut clash = false;
        g.for_each_total_neighbour(x, |y| {
            if let Some(cy) = c.get(y) {
                if cy == cx {
                    clash = true;
                    if x < y {
                        conflicts.push((x, y));
                    }
                } else if seen[cy] != stamp {
                    seen[cy] = stamp;
                    distinct += 1;
                }
            }
        });
        if !clash && distinct == k - 1 {
            witnesses.get_mut(&cx).expect("colour in range").get_or_insert(x);
        }
    }
    conflicts.sort_unstable();
    let proper = conflicts.is_empty();
    let complete = c.is_complete();
    let surjective = used[1..].iter().all(|&u| u);
    let all_witnessed = witnesses.values().all(Option::is_some);
    let verdict = if !proper {
        Verdict::Improper
    } else if !complete {
        Verdict::Incomplete
    } else if !surjective {
        Verdict::NotSurjective
    } else if all_witnessed {
        Verdict::ValidTotalBChromatic
    } else {
        Verdict::ValidTotalOnly
    };
    Ok(VerificationReport { k, proper, complete, surjective, witnesses, conflicts, verdict })
}

/// Total degrees of all elements, in `(kind, id)` order.
pub fn total_degrees(g: &Graph) -> Vec<usize> {
    g.elements().map(|x| g.total_degree_unchecked(x)).collect()
}

/// m_t(G): the largest i such that at least i elements have total degree
/// at least i-1.
pub fn total_m_degree(g: &Graph) -> Result<usize, ColouringError> {
    if g.element_count() == 0 {
        return Err(ColouringError::EmptyGraph);
    }
    let mut ds = total_degrees(g);
    ds.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ds.iter().enumerate().take_while(|&(i, &d)| d >= i).count())
}

/// Elements with d_t >= m-1 for the given m, in `(kind, id)` order.
pub fn dense_elements_for(g: &Graph, m: usize) -> Vec<Element> {
    g.elements().filter(|&x| g.total_degree_unchecked(x) + 1 >= m).collect()
}

pub fn dense_elements(g: &Graph) -> Result<Vec<Element>, ColouringError> {
    Ok(dense_elements_for(g, total_m_degree(g)?))
}

pub fn is_dense(g: &Graph, x: Element) -> Result<bool, ColouringError> {
    let m = total_m_degree(g)?;
    Ok(g.total_degree(x)? + 1 >= m)
}

pub fn is_tight(g: &Graph, x: Element) -> Result<bool, ColouringError> {
    let m = total_m_degree(g)?;
    Ok(g.total_degree(x)? + 1 == m)
}

/// Colours every uncoloured element of `order` with the smallest colour free
/// in its total neighbourhood. Returns the first element for which no colour
/// is free.
pub fn greedy_complete(
    g: &Graph,
    c: &mut TotalColouring,
    order: impl IntoIterator<Item = Element>,
) -> Result<(), Element> {
    for x in order {
        if c.is_coloured(x) {
            continue;
        }
        let col = c.smallest_free(g, x).ok_or(x)?;
        c.set(x, col);
    }
    Ok(())
}

/// The path w_1..w_n on vertices `0..n`; edge `i` joins `i` and `i+1`.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path is simple")
}

/// K_{1,n}: centre `0`, leaves `1..=n`; edge `i-1` joins `0` and `i`.
pub fn star_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    Graph::from_edges(n + 1, &edges).expect("star is simple")
}

/// m_t(P_n).
pub fn path_m_degree(n: usize) -> usize {
    match n {
        0 => 0,
        1 => 1,
        2 | 3 => 3,
        4 => 4,
        _ => 5,
    }
}

/// phi_t(K_{1,n}); K_{1,1} is P_2.
pub fn star_phi(n: usize) -> usize {
    match n {
        0 => 1,
        1 => 3,
        _ => n + 1,
    }
}

/// P_n with a total b-chromatic m_t(P_n)-colouring.
pub fn colour_path(n: usize) -> (Graph, TotalColouring) {
    assert!(n >= 1, "path needs at least one vertex");
    let g = path_graph(n);
    let mut c = TotalColouring::new(&g, path_m_degree(n));
    let w = |i: usize| Element::Vertex(i - 1);
    // e(i) joins w_i and w_{i+1}
    let e = |i: usize| Element::Edge(i - 1);
    let fixed: &[(Element, Colour)] = match n {
        1 => &[(w(1), 1)],
        2 => &[(w(1), 1), (e(1), 2), (w(2), 3)],
        3 => &[(w(1), 1), (e(1), 2), (w(2), 3), (e(2), 1), (w(3), 2)],
        4 => &[(w(1), 1), (e(1), 2), (w(2), 3), (e(2), 4), (w(3), 1), (e(3), 2), (w(4), 4)],
        _ => &[
            (w(2), 1),
            (e(2), 2),
            (w(3), 3),
            (e(3), 4),
            (w(4), 5),
            (w(1), 4),
            (e(1), 5),
            (e(4), 1),
            (w(5), 2),
        ],
    };
    for &(x, col) in fixed {
        c.set(x, col);
    }
    // tail: edge then vertex, left to right
    let tail = (5..n).flat_map(|i| [e(i), w(i + 1)]);
    greedy_complete(&g, &mut c, tail).expect("five colours always suffice on a path tail");
    (g, c)
}

/// K_{1,n} with a total b-chromatic phi_t-colouring.
pub fn colour_star(n: usize) -> (Graph, TotalColouring) {
    assert!(n >= 1, "star needs at least one leaf");
    let g = star_graph(n);
    let mut c = TotalColouring::new(&g, star_phi(n));
    c.set(Element::Vertex(0), 1);
    if n == 1 {
        c.set(Element::Edge(0), 2);
        c.set(Element::Vertex(1), 3);
        return (g, c);
    }
    for i in 1..=n {
        c.set(Element::Edge(i - 1), i + 1);
        c.set(Element::Vertex(i), if i < n { i + 2 } else { 2 });
    }
    (g, c)
}

/// Disjoint union of stars `K_{1,sizes[i]}` (size 0 is an isolated vertex),
/// coloured with max_i phi_t(K_{1,sizes[i]}) colours: the largest star is made
/// b-chromatic and the rest just need to be proper.
pub fn colour_star_forest(sizes: &[usize]) -> (Graph, TotalColouring) {
    assert!(!sizes.is_empty(), "forest needs a component");
    let mut g = Graph::new(0);
    let mut parts = Vec::new();
    for &s in sizes {
        let centre = g.add_vertex();
        for _ in 0..s {
            let leaf = g.add_vertex();
            g.add_edge(centre, leaf).expect("fresh vertices");
        }
        parts.push((centre, s));
    }
    let k = sizes.iter().map(|&s| star_phi(s)).max().expect("non-empty");
    let mut c = TotalColouring::new(&g, k);
    let mut edge = 0;
    for (centre, s) in parts {
        if s == 0 {
            c.set(Element::Vertex(centre), 1);
            continue;
        }
        let (_, local) = colour_star(s);
        for (x, col) in local.assigned() {
            let y = match x {
                Element::Vertex(v) => Element::Vertex(centre + v),
                Element::Edge(e) => Element::Edge(edge + e),
            };
            c.set(y, col);
        }
        edge += s;
    }
    (g, c)
}
