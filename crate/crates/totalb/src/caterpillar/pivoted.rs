//! Total pivoted caterpillars: the two structural obstructions that force
//! phi_t = m_t - 1, and the (m_t - 1)-colourings that realise the bound.

use serde::{Deserialize, Serialize};

use super::{find_dense_paths, Caterpillar, CaterpillarError, DensePath};
use crate::colouring::TotalColouring;
use crate::graph::{Element, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum PivotClassification {
    NotPivoted,
    /// `u` dense with d(u) = m - 2; `u_prime` a degree-2 neighbour of `u`
    /// adjacent to the dense vertex `v`.
    Type1 { u: VertexId, u_prime: VertexId, v: VertexId },
    /// Two dense paths of three dense elements each, joined by `q` (one
    /// shared vertex, or one edge) carrying no dense element.
    Type2 { p1: DensePath, p2: DensePath, q: Vec<VertexId>, q_length: usize },
}

impl PivotClassification {
    pub fn is_pivoted(&self) -> bool {
        !matches!(self, PivotClassification::NotPivoted)
    }
}

/// Condition 1: a dense `u` of degree m-2 with a degree-2 neighbour that
/// touches another dense vertex.
pub fn detect_type1(cat: &Caterpillar) -> Option<(VertexId, VertexId, VertexId)> {
    let g = cat.g;
    let m = cat.m;
    for u in 0..g.vertex_count() {
        if !cat.is_dense_vertex(u) || g.degree(u) + 2 != m {
            continue;
        }
        let mut nbrs: Vec<_> = g.neighbours(u).collect();
        nbrs.sort_unstable();
        for up in nbrs {
            if g.degree(up) != 2 {
                continue;
            }
            if let Some(v) = g.neighbours(up).find(|&v| v != u && cat.is_dense_vertex(v)) {
                return Some((u, up, v));
            }
        }
    }
    None
}

/// Condition 2: exactly two dense paths, three dense elements each, every
/// dense element on them, joined along the spine by a dense-free path of
/// length at most one.
pub fn detect_type2(cat: &Caterpillar) -> Option<(DensePath, DensePath, Vec<VertexId>)> {
    let paths = find_dense_paths(cat);
    let [p1, p2] = paths.as_slice() else { return None };
    if p1.q() != 3 || p2.q() != 3 || p1.q() + p2.q() != cat.dense_count() {
        return None;
    }
    let spine = &cat.decomp.spine;
    let a = cat.decomp.position(*p1.vertices.last()?)?;
    let b = cat.decomp.position(p2.vertices[0])?;
    if b < a || b - a > 1 {
        return None;
    }
    let q: Vec<VertexId> = spine[a..=b].to_vec();
    let dense_free = q.iter().all(|&x| !cat.is_dense_vertex(x))
        && q.windows(2).all(|w| !cat.is_dense(Element::Edge(cat.edge(w[0], w[1]))));
    dense_free.then(|| (p1.clone(), p2.clone(), q))
}

/// Classifies `g` against both pivot conditions. Requires m_t >= 6; with a
/// dense-element count other than m_t the answer is `NotPivoted`.
pub fn classify_pivoted(g: &Graph) -> Result<PivotClassification, CaterpillarError> {
    let cat = Caterpillar::new(g)?;
    classify(&cat)
}

pub(crate) fn classify(cat: &Caterpillar) -> Result<PivotClassification, CaterpillarError> {
    if cat.m < 6 {
        return Err(CaterpillarError::Precondition(format!("pivoting needs m_t >= 6, got {}", cat.m)));
    }
    if cat.dense_count() != cat.m {
        return Ok(PivotClassification::NotPivoted);
    }
    match (detect_type1(cat), detect_type2(cat)) {
        (Some(_), Some(_)) => {
            Err(CaterpillarError::Internal("both pivot conditions hold at once".into()))
        }
        (Some((u, u_prime, v)), None) => Ok(PivotClassification::Type1 { u, u_prime, v }),
        (None, Some((p1, p2, q))) => {
            let q_length = q.len() - 1;
            Ok(PivotClassification::Type2 { p1, p2, q, q_length })
        }
        (None, None) => Ok(PivotClassification::NotPivoted),
    }
}

/// The structural facts a pivoted classification implies; an `Err` names
/// the first one that fails.
pub fn check_pivot_properties(g: &Graph, cls: &PivotClassification) -> Result<(), String> {
    let cat = Caterpillar::new(g).map_err(|e| e.to_string())?;
    let m = cat.m;
    match cls {
        PivotClassification::NotPivoted => Ok(()),
        PivotClassification::Type1 { u, v, .. } => {
            let mut set: Vec<Element> = g.incident_edges(*u).map(Element::Edge).collect();
            set.push(Element::Vertex(*u));
            set.push(Element::Vertex(*v));
            let dense = set.iter().filter(|&&x| cat.is_dense(x)).count();
            if dense != m {
                return Err(format!("E(u) + {{u, v}} holds {dense} dense elements, expected {m}"));
            }
            if g.degree(*v) + 2 >= m {
                return Err(format!("d(v) = {} is not below m - 2 = {}", g.degree(*v), m - 2));
            }
            Ok(())
        }
        PivotClassification::Type2 { p1, p2, .. } => {
            if m != 6 {
                return Err(format!("type 2 pivot with m = {m}"));
            }
            for p in [p1, p2] {
                if p.k() != 3 {
                    return Err(format!("dense path {:?} has length {}", p.vertices, p.k() - 1));
                }
                let (a, mid, b) = (p.vertices[0], p.vertices[1], p.vertices[2]);
                if g.degree(mid) != 3 || !cat.is_dense_vertex(mid) {
                    return Err(format!("dense vertex {mid} has degree {}", g.degree(mid)));
                }
                if g.degree(a) != 2 || g.degree(b) != 2 {
                    return Err(format!("boundary of {:?} is not of degree 2", p.vertices));
                }
            }
            Ok(())
        }
    }
}

/// A total b-chromatic (m_t - 1)-colouring of a pivoted caterpillar.
pub fn colour_pivoted(g: &Graph, cls: &PivotClassification) -> Result<TotalColouring, CaterpillarError> {
    let cat = Caterpillar::new(g)?;
    let found = classify(&cat)?;
    if &found != cls {
        return Err(CaterpillarError::Internal(format!(
            "classification mismatch: given {cls:?}, found {found:?}"
        )));
    }
    let k = cat.m - 1;
    let mut c = TotalColouring::new(g, k);
    let v_ = |x: VertexId| Element::Vertex(x);
    let e_ = |a: VertexId, b: VertexId| Element::Edge(cat.edge(a, b));
    match cls {
        PivotClassification::NotPivoted => {
            return Err(CaterpillarError::Precondition("caterpillar is not pivoted".into()));
        }
        &PivotClassification::Type1 { u, u_prime, v } => {
            // u_1 = u', the rest by id; u_{m-2} takes colour 2
            let mut nbrs: Vec<_> = g.neighbours(u).filter(|&x| x != u_prime).collect();
            nbrs.sort_unstable();
            nbrs.insert(0, u_prime);
            c.set(v_(u), 1);
            let last = nbrs.len();
            for (i, &x) in nbrs.iter().enumerate() {
                let i = i + 1;
                c.set(e_(u, x), i + 1);
                c.set(v_(x), if i < last { i + 2 } else { 2 });
            }
            c.set(e_(u_prime, v), 1);
            c.set(v_(v), 2);
            let mut others: Vec<_> = g.neighbours(v).filter(|&x| x != u_prime).collect();
            others.sort_unstable();
            for (i, &x) in others.iter().enumerate() {
                c.set(e_(v, x), i + 3);
                c.set(v_(x), 1);
            }
        }
        PivotClassification::Type2 { p1, p2, q_length, .. } => {
            let (w1, w2) = (p1.vertices[0], p1.vertices[1]);
            let (w3, w4) = (p2.vertices[1], p2.vertices[2]);
            let off = |x: VertexId, a: VertexId, b: VertexId| -> Result<VertexId, CaterpillarError> {
                g.neighbours(x).find(|&y| y != a && y != b).ok_or_else(|| {
                    CaterpillarError::Internal(format!("dense vertex {x} has no pendant neighbour"))
                })
            };
            if *q_length == 0 {
                let v = p1.vertices[2];
                let w2p = off(w2, w1, v)?;
                let w3p = off(w3, v, w4)?;
                for (x, col) in [
                    (e_(w1, w2), 1),
                    (v_(w2), 2),
                    (e_(w2, v), 3),
                    (e_(v, w3), 4),
                    (v_(w3), 5),
                    (v_(w1), 4),
                    (e_(w2, w2p), 5),
                    (e_(w3, w4), 1),
                    (e_(w3, w3p), 2),
                    (v_(w4), 3),
                    (v_(w3p), 1),
                    (v_(v), 1),
                ] {
                    c.set(x, col);
                }
            } else {
                let u = p1.vertices[2];
                let v = p2.vertices[0];
                let w2p = off(w2, w1, u)?;
                let w3p = off(w3, v, w4)?;
                for (x, col) in [
                    (e_(w1, w2), 1),
                    (v_(w2), 2),
                    (e_(w2, u), 3),
                    (e_(v, w3), 4),
                    (v_(w3), 5),
                    (v_(w1), 4),
                    (e_(w2, w2p), 5),
                    (v_(u), 4),
                    (v_(w4), 1),
                    (e_(w3, w4), 2),
                    (v_(v), 3),
                    (e_(w3, w3p), 1),
                    (v_(w3p), 2),
                    (e_(u, v), 1),
                ] {
                    c.set(x, col);
                }
            }
        }
    }
    cat.finish(c, "pivoted colouring")
}
