//! Total dense paths along the spine.

use serde::{Deserialize, Serialize};

use super::Caterpillar;
use crate::graph::{Element, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DensePathType {
    /// Both boundary vertices dense: q = 2k - 1.
    Type1,
    /// Exactly one boundary vertex dense: q = 2k - 2.
    Type2,
    /// Neither boundary vertex dense: q = 2k - 3.
    Type3,
}

impl DensePathType {
    pub fn min_len(self) -> usize {
        match self {
            DensePathType::Type1 => 3,
            DensePathType::Type2 => 4,
            DensePathType::Type3 => 5,
        }
    }
}

/// A path w_1..w_k whose internal vertices and edges are dense. The boundary
/// flags say whether w_1 / w_k count among its dense elements; a sub-path
/// chosen for colouring may leave a dense boundary vertex uncounted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensePath {
    pub vertices: Vec<VertexId>,
    pub first_dense: bool,
    pub last_dense: bool,
}

impl DensePath {
    pub fn new(vertices: Vec<VertexId>, first_dense: bool, last_dense: bool) -> Self {
        assert!(!vertices.is_empty(), "a dense path has at least one vertex");
        DensePath { vertices, first_dense, last_dense }
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn kind(&self) -> DensePathType {
        if self.k() == 1 {
            return DensePathType::Type1;
        }
        match (self.first_dense, self.last_dense) {
            (true, true) => DensePathType::Type1,
            (false, false) => DensePathType::Type3,
            _ => DensePathType::Type2,
        }
    }

    /// Number of dense elements on the path.
    pub fn q(&self) -> usize {
        let k = self.k();
        if k == 1 {
            return 1;
        }
        (k - 1) + (k - 2) + self.first_dense as usize + self.last_dense as usize
    }

    /// The dense elements in path order: w_1?, e_1, w_2, e_2, ..., w_k?.
    pub fn witnesses(&self, g: &Graph) -> Vec<Element> {
        let k = self.k();
        let mut out = Vec::with_capacity(self.q());
        for (i, &w) in self.vertices.iter().enumerate() {
            let counted = if k == 1 {
                true
            } else if i == 0 {
                self.first_dense
            } else if i + 1 == k {
                self.last_dense
            } else {
                true
            };
            if counted {
                out.push(Element::Vertex(w));
            }
            if i + 1 < k {
                let e = g.edge_between(w, self.vertices[i + 1]).expect("path vertices are adjacent");
                out.push(Element::Edge(e));
            }
        }
        out
    }

    pub fn reversed(&self) -> DensePath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        DensePath { vertices, first_dense: self.last_dense, last_dense: self.first_dense }
    }
}

/// Maximal dense paths along the spine, left to right. A run of dense spine
/// edges is cut at every non-dense vertex, which then bounds the paths on
/// both sides; a dense spine vertex with no dense spine edge is a path of
/// length one.
pub fn find_dense_paths(cat: &Caterpillar) -> Vec<DensePath> {
    let spine = &cat.decomp.spine;
    let dense_edge = |i: usize| cat.is_dense(Element::Edge(cat.edge(spine[i], spine[i + 1])));
    let mut out = Vec::new();
    let mut i = 0;
    while i < spine.len() {
        let has_right = i + 1 < spine.len() && dense_edge(i);
        let has_left = i > 0 && dense_edge(i - 1);
        if !has_right {
            if !has_left && cat.is_dense_vertex(spine[i]) {
                out.push(DensePath::new(vec![spine[i]], true, true));
            }
            i += 1;
            continue;
        }
        let start = i;
        let mut j = i + 1;
        // extend through dense vertices joined by dense edges
        while j + 1 < spine.len() && cat.is_dense_vertex(spine[j]) && dense_edge(j) {
            j += 1;
        }
        let vs = spine[start..=j].to_vec();
        out.push(DensePath::new(vs, cat.is_dense_vertex(spine[start]), cat.is_dense_vertex(spine[j])));
        // a non-dense cut vertex may start the next path
        i = if cat.is_dense_vertex(spine[j]) { j + 1 } else { j };
    }
    out
}

/// A sub-path of `path` with exactly `m` counted dense elements, long enough
/// for its colouring algorithm. Leftmost start first, then shortest; a dense
/// boundary vertex is left uncounted only when no sub-path works otherwise.
pub fn select_subpath(path: &DensePath, m: usize) -> Option<DensePath> {
    let k = path.k();
    let actual = |idx: usize| {
        if idx == 0 {
            path.first_dense
        } else if idx + 1 == k {
            path.last_dense
        } else {
            true
        }
    };
    for demote in [false, true] {
        for a in 0..k {
            for b in a + 1..k {
                let (fa, fb) = (actual(a), actual(b));
                let mut options = vec![(fa, fb)];
                if demote {
                    options = vec![(fa, false), (false, fb), (false, false)];
                    options.retain(|&o| o != (fa, fb));
                }
                for (f, l) in options {
                    let sub = DensePath::new(path.vertices[a..=b].to_vec(), f, l);
                    if sub.q() == m && sub.k() >= sub.kind().min_len() {
                        return Some(sub);
                    }
                }
            }
        }
    }
    None
}
