//! Simple undirected graphs whose vertices *and* edges are first-class
//! elements.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(VertexId, usize),
    #[error("edge {0} out of range (graph has {1} edges)")]
    EdgeOutOfRange(EdgeId, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
}

/// A vertex or an edge. Ordering is `(kind, id)` with vertices first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "id")]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Edge(e) => write!(f, "e{e}"),
        }
    }
}

/// Simple undirected graph. Edge ids are handed out in insertion order and
/// are never reused; there is no removal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(VertexId, VertexId)>,
    // (neighbour, edge id), in insertion order
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange(w, n));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.edge_between(u, v).is_some() {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `|V| + |E|`.
    pub fn element_count(&self) -> usize {
        self.vertex_count() + self.edge_count()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbour, connecting edge)` pairs.
    pub fn incidences(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.adj[v].iter().map(|&(_, e)| e)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].iter().find(|&&(w, _)| w == b).map(|&(_, e)| e)
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn contains(&self, x: Element) -> bool {
        match x {
            Element::Vertex(v) => v < self.vertex_count(),
            Element::Edge(e) => e < self.edge_count(),
        }
    }

    fn check(&self, x: Element) -> Result<(), GraphError> {
        match x {
            Element::Vertex(v) if v >= self.vertex_count() => {
                Err(GraphError::VertexOutOfRange(v, self.vertex_count()))
            }
            Element::Edge(e) if e >= self.edge_count() => {
                Err(GraphError::EdgeOutOfRange(e, self.edge_count()))
            }
            _ => Ok(()),
        }
    }

    /// All elements in `(kind, id)` order: vertices, then edges.
    pub fn elements(&self) -> impl Iterator<Item = Element> {
        let (n, m) = (self.vertex_count(), self.edge_count());
        (0..n).map(Element::Vertex).chain((0..m).map(Element::Edge))
    }

    /// Dense index of an element: vertices occupy `0..n`, edges `n..n+m`.
    pub fn index(&self, x: Element) -> usize {
        match x {
            Element::Vertex(v) => v,
            Element::Edge(e) => self.vertex_count() + e,
        }
    }

    pub fn element(&self, index: usize) -> Element {
        let n = self.vertex_count();
        if index < n {
            Element::Vertex(index)
        } else {
            Element::Edge(index - n)
        }
    }

    /// N_t(x), sorted.
    pub fn total_neighbourhood(&self, x: Element) -> Result<Vec<Element>, GraphError> {
        self.check(x)?;
        let mut out = Vec::new();
        self.for_each_total_neighbour(x, |y| out.push(y));
        out.sort_unstable();
        Ok(out)
    }

    pub(crate) fn for_each_total_neighbour(&self, x: Element, mut f: impl FnMut(Element)) {
        match x {
            Element::Vertex(v) => {
                for &(w, e) in &self.adj[v] {
                    f(Element::Vertex(w));
                    f(Element::Edge(e));
                }
            }
            Element::Edge(e) => {
                let (a, b) = self.edges[e];
                f(Element::Vertex(a));
                f(Element::Vertex(b));
                for end in [a, b] {
                    for &(_, e2) in &self.adj[end] {
                        if e2 != e {
                            f(Element::Edge(e2));
                        }
                    }
                }
            }
        }
    }

    /// d_t(x): `2d(v)` for a vertex, `d(u)+d(v)` for an edge.
    pub fn total_degree(&self, x: Element) -> Result<usize, GraphError> {
        self.check(x)?;
        Ok(self.total_degree_unchecked(x))
    }

    pub(crate) fn total_degree_unchecked(&self, x: Element) -> usize {
        match x {
            Element::Vertex(v) => 2 * self.degree(v),
            Element::Edge(e) => {
                let (a, b) = self.edges[e];
                self.degree(a) + self.degree(b)
            }
        }
    }

    /// Total adjacency over dense element indices (see [`Graph::index`]).
    pub fn total_adjacency(&self) -> Vec<Vec<usize>> {
        self.elements()
            .map(|x| {
                let mut row = Vec::with_capacity(self.total_degree_unchecked(x));
                self.for_each_total_neighbour(x, |y| row.push(self.index(y)));
                row.sort_unstable();
                row
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.edge_count() + 1 == self.vertex_count() && self.is_connected()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<VertexId>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut members = vec![s];
            comp[s] = c;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for w in self.neighbours(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = c;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

/// The total graph T(G): one node per element of `g` (vertices first, then
/// edges by id), adjacent iff the elements are adjacent or incident.
pub fn total_graph(g: &Graph) -> Graph {
    let adj = g.total_adjacency();
    let mut t = Graph::new(g.element_count());
    for (i, row) in adj.iter().enumerate() {
        for &j in row {
            if i < j {
                t.add_edge(i, j).expect("total adjacency is simple");
            }
        }
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum NotCaterpillar {
    #[error("graph is not a tree")]
    NotTree,
    #[error("leaf-removed subgraph is not a path")]
    SpineNotPath,
}

/// Central path plus the pendant leaves of each spine vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaterpillarDecomposition {
    pub spine: Vec<VertexId>,
    /// `leaves[i]` are the degree-1 neighbours of `spine[i]`, ascending.
    pub leaves: Vec<Vec<VertexId>>,
}

impl CaterpillarDecomposition {
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.spine.iter().position(|&w| w == v)
    }

    pub fn on_spine(&self, v: VertexId) -> bool {
        self.spine.contains(&v)
    }

    /// True when some end of the spine carries exactly one leaf, so the
    /// central path could equally be drawn through that leaf. Reported as a
    /// diagnostic only.
    pub fn has_alternative_spine(&self) -> bool {
        match self.spine.len() {
            0 => false,
            1 => self.leaves[0].len() <= 2,
            _ => self.leaves[0].len() == 1 || self.leaves.last().is_some_and(|l| l.len() == 1),
        }
    }

    /// Edge list implied by the decomposition (spine edges then leaf edges),
    /// each pair ordered low id first.
    pub fn edge_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let ord = |a: usize, b: usize| (a.min(b), a.max(b));
        let mut out: Vec<_> = self.spine.windows(2).map(|w| ord(w[0], w[1])).collect();
        for (i, ls) in self.leaves.iter().enumerate() {
            out.extend(ls.iter().map(|&l| ord(self.spine[i], l)));
        }
        out
    }
}

/// Splits a caterpillar into spine and leaves. K1 and K2 have an empty spine.
/// The spine is oriented so its first vertex has the smaller id of the two
/// ends.
pub fn decompose_caterpillar(g: &Graph) -> Result<CaterpillarDecomposition, NotCaterpillar> {
    if !g.is_tree() {
        return Err(NotCaterpillar::NotTree);
    }
    let n = g.vertex_count();
    if n <= 2 {
        return Ok(CaterpillarDecomposition { spine: vec![], leaves: vec![] });
    }
    let inner: Vec<bool> = (0..n).map(|v| g.degree(v) >= 2).collect();
    let inner_deg = |v: usize| g.neighbours(v).filter(|&w| inner[w]).count();
    let mut ends = Vec::new();
    for v in (0..n).filter(|&v| inner[v]) {
        match inner_deg(v) {
            0 | 1 => ends.push(v),
            2 => {}
            _ => return Err(NotCaterpillar::SpineNotPath),
        }
    }
    // inner vertices of a tree induce a subtree, so max inner-degree 2 means a path
    let start = *ends.iter().min().expect("a tree on >= 3 vertices has an inner vertex");
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g.neighbours(cur).find(|&w| inner[w] && w != prev);
        match next {
            Some(w) => {
                spine.push(w);
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    let leaves = spine
        .iter()
        .map(|&v| {
            let mut ls: Vec<_> = g.neighbours(v).filter(|&w| !inner[w]).collect();
            ls.sort_unstable();
            ls
        })
        .collect();
    Ok(CaterpillarDecomposition { spine, leaves })
}
