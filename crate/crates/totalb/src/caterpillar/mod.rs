//! Constructive total b-chromatic colourings of caterpillars.
//!
//! Dispatch lives in [`solve`]; the individual constructions are exposed so
//! they can be tested against their stated postconditions.

pub mod algorithms;
pub mod dense_path;
pub mod pivoted;
pub mod solve;
pub mod theorems;

use thiserror::Error;

use crate::colouring::{greedy_complete, total_m_degree, verify, Colour, ColouringError, TotalColouring};
use crate::exact::ExactError;
use crate::graph::{decompose_caterpillar, CaterpillarDecomposition, EdgeId, Element, Graph, NotCaterpillar, VertexId};

pub use algorithms::{
    check_path_postcondition, colour_dense_path_type1, colour_dense_path_type2, colour_dense_path_type3,
};
pub use dense_path::{find_dense_paths, DensePath, DensePathType};
pub use pivoted::{
    check_pivot_properties, classify_pivoted, colour_pivoted, detect_type1, detect_type2, PivotClassification,
};
pub use solve::{solve, solve_with, Certificate, Method, SolveOptions, SolveOutcome};
pub use theorems::{colour_dense_outside_spine, colour_single_dense_path, colour_small_m_degree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaterpillarError {
    #[error("not a caterpillar: {0}")]
    NotCaterpillar(#[from] NotCaterpillar),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} needs {needed} neighbours off the path, has {found}")]
    InsufficientLeaves { vertex: VertexId, needed: usize, found: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("construction failed verification: {0}")]
    Internal(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}

/// A caterpillar together with the quantities every construction needs.
#[derive(Debug, Clone)]
pub struct Caterpillar<'a> {
    pub g: &'a Graph,
    pub decomp: CaterpillarDecomposition,
    pub m: usize,
    dense: Vec<bool>,
}

impl<'a> Caterpillar<'a> {
    pub fn new(g: &'a Graph) -> Result<Self, CaterpillarError> {
        if !g.is_connected() {
            return Err(CaterpillarError::Disconnected);
        }
        let decomp = decompose_caterpillar(g)?;
        let m = total_m_degree(g)?;
        let dense = g.elements().map(|x| g.total_degree_unchecked(x) + 1 >= m).collect();
        Ok(Caterpillar { g, decomp, m, dense })
    }

    pub fn is_dense(&self, x: Element) -> bool {
        self.dense[self.g.index(x)]
    }

    pub fn is_dense_vertex(&self, v: VertexId) -> bool {
        self.is_dense(Element::Vertex(v))
    }

    pub fn dense_elements(&self) -> Vec<Element> {
        self.g.elements().filter(|&x| self.is_dense(x)).collect()
    }

    pub fn dense_count(&self) -> usize {
        self.dense.iter().filter(|&&d| d).count()
    }

    pub fn on_spine(&self, v: VertexId) -> bool {
        self.decomp.on_spine(v)
    }

    pub fn edge(&self, u: VertexId, v: VertexId) -> EdgeId {
        self.g.edge_between(u, v).unwrap_or_else(|| panic!("no edge ({u}, {v})"))
    }

    pub fn spine_edges(&self) -> Vec<EdgeId> {
        self.decomp.spine.windows(2).map(|w| self.edge(w[0], w[1])).collect()
    }

    /// Completion order: vertices (spine left to right, then leaves), then
    /// spine edges, then leaf edges.
    pub fn completion_order(&self) -> Vec<Element> {
        let g = self.g;
        let mut out: Vec<Element> = Vec::with_capacity(g.element_count());
        let spine = &self.decomp.spine;
        out.extend(spine.iter().map(|&v| Element::Vertex(v)));
        for ls in &self.decomp.leaves {
            out.extend(ls.iter().map(|&l| Element::Vertex(l)));
        }
        out.extend(self.spine_edges().into_iter().map(Element::Edge));
        for (i, ls) in self.decomp.leaves.iter().enumerate() {
            out.extend(ls.iter().map(|&l| Element::Edge(self.edge(spine[i], l))));
        }
        // K1 / K2 have no spine
        let mut seen = vec![false; g.element_count()];
        for &x in &out {
            seen[g.index(x)] = true;
        }
        let rest: Vec<_> = g.elements().filter(|&x| !seen[g.index(x)]).collect();
        out.extend(rest);
        out
    }

    /// Greedy completion followed by verification. Never returns a colouring
    /// that is not total b-chromatic with palette `c.k()`.
    pub fn finish(&self, mut c: TotalColouring, what: &str) -> Result<TotalColouring, CaterpillarError> {
        greedy_complete(self.g, &mut c, self.completion_order()).map_err(|x| {
            CaterpillarError::Internal(format!("{what}: no free colour for {x} during completion"))
        })?;
        let report = verify(self.g, &c)?;
        if !report.is_valid() {
            return Err(CaterpillarError::Internal(format!(
                "{what}: verdict {:?}, conflicts {:?}, colours without witness {:?}",
                report.verdict,
                report.conflicts,
                report.missing_witnesses()
            )));
        }
        Ok(c)
    }
}

/// Neighbours of `v` not on `path`: leaves first, then spine vertices, each
/// group by id. `w_i^j` in the path algorithms is the j-th entry.
pub(crate) fn off_path_neighbours(g: &Graph, v: VertexId, path: &[VertexId]) -> Vec<VertexId> {
    let mut out: Vec<_> = g.neighbours(v).filter(|w| !path.contains(w)).collect();
    out.sort_by_key(|&w| (g.degree(w) >= 2, w));
    out
}

/// Colours `z` still has to pick up.
pub(crate) fn missing_colours(g: &Graph, c: &TotalColouring, z: Element) -> Vec<Colour> {
    let mut seen = vec![false; c.k() + 2];
    if let Some(own) = c.get(z) {
        seen[own] = true;
    }
    for col in c.neighbour_colours(g, z) {
        if col < seen.len() {
            seen[col] = true;
        }
    }
    (1..=c.k()).filter(|&col| !seen[col]).collect()
}

fn allowed(g: &Graph, c: &TotalColouring, y: Element, col: Colour) -> bool {
    !c.neighbour_colours(g, y).contains(&col)
}

/// Places every colour `z` is missing on distinct uncoloured elements of
/// `pool` (earlier entries preferred), keeping the colouring proper. All or
/// nothing: returns false and leaves `c` untouched when impossible.
pub(crate) fn supply(g: &Graph, c: &mut TotalColouring, z: Element, pool: &[Element]) -> bool {
    let missing = missing_colours(g, c, z);
    let slots: Vec<Element> = pool.iter().copied().filter(|&y| !c.is_coloured(y) && y != z).collect();
    let ok: Vec<Vec<bool>> =
        missing.iter().map(|&col| slots.iter().map(|&y| allowed(g, c, y, col)).collect()).collect();
    let mut slot_of = vec![usize::MAX; slots.len()];
    for ci in 0..missing.len() {
        let mut seen = vec![false; slots.len()];
        if !augment(ci, &ok, &mut seen, &mut slot_of) {
            return false;
        }
    }
    for (s, &ci) in slot_of.iter().enumerate() {
        if ci != usize::MAX {
            c.set(slots[s], missing[ci]);
        }
    }
    true
}

fn augment(ci: usize, ok: &[Vec<bool>], seen: &mut [bool], slot_of: &mut [usize]) -> bool {
    for s in 0..ok[ci].len() {
        if !ok[ci][s] || seen[s] {
            continue;
        }
        seen[s] = true;
        if slot_of[s] == usize::MAX || augment(slot_of[s], ok, seen, slot_of) {
            slot_of[s] = ci;
            return true;
        }
    }
    false
}

/// Edges then vertices of the closed star of `v`, minus `skip`.
pub(crate) fn star_pool(g: &Graph, v: VertexId, skip: &[Element]) -> Vec<Element> {
    let mut out: Vec<Element> = g.incident_edges(v).map(Element::Edge).collect();
    out.extend(g.neighbours(v).map(Element::Vertex));
    out.retain(|x| !skip.contains(x));
    out
}
