//! Partial colourings of a dense path and its pendant neighbours.
//!
//! Each algorithm colours the dense elements of the path with distinct
//! colours `1..=q` and enough of their neighbourhoods that every one of them
//! picks up all `q` colours. Neighbour `j` of `w_i` means the j-th entry of
//! [`off_path_neighbours`](super::off_path_neighbours): leaves first by id,
//! spine vertices last.

use super::{off_path_neighbours, supply, CaterpillarError, DensePath, DensePathType};
use crate::colouring::{Colour, TotalColouring};
use crate::graph::{Element, Graph, VertexId};

struct PathFrame<'a> {
    g: &'a Graph,
    path: &'a [VertexId],
    outside: Vec<Vec<VertexId>>,
}

impl<'a> PathFrame<'a> {
    fn new(g: &'a Graph, path: &'a [VertexId]) -> Self {
        let outside = path.iter().map(|&w| off_path_neighbours(g, w, path)).collect();
        PathFrame { g, path, outside }
    }

    /// w_i, 1-based.
    fn w(&self, i: usize) -> VertexId {
        self.path[i - 1]
    }

    /// e_i = (w_i, w_{i+1}), 1-based.
    fn e(&self, i: usize) -> Element {
        Element::Edge(self.g.edge_between(self.w(i), self.w(i + 1)).expect("path is a path"))
    }

    fn need(&self, i: usize, count: usize) -> Result<(), CaterpillarError> {
        let found = self.outside[i - 1].len();
        if found < count {
            return Err(CaterpillarError::InsufficientLeaves { vertex: self.w(i), needed: count, found });
        }
        Ok(())
    }

    /// Colours w_i^j and the edge (w_i, w_i^j); `j` is 1-based.
    fn leaf(&self, c: &mut TotalColouring, i: usize, j: usize, vertex: Colour, edge: Colour) {
        let x = self.outside[i - 1][j - 1];
        c.set(Element::Vertex(x), vertex);
        c.set(Element::Edge(self.g.edge_between(self.w(i), x).expect("neighbour")), edge);
    }

    fn leaf_vertex(&self, i: usize, j: usize) -> Element {
        Element::Vertex(self.outside[i - 1][j - 1])
    }

    fn leaf_edge(&self, i: usize, j: usize) -> Element {
        let x = self.outside[i - 1][j - 1];
        Element::Edge(self.g.edge_between(self.w(i), x).expect("neighbour"))
    }
}

fn alg1_into(f: &PathFrame, c: &mut TotalColouring, shift: Colour) -> Result<(), CaterpillarError> {
    let k = f.path.len();
    if k < 3 {
        return Err(CaterpillarError::Precondition(format!("type 1 path needs k >= 3, got {k}")));
    }
    f.need(1, k - 2)?;
    f.need(k, k - 2)?;
    for i in 2..k {
        f.need(i, k - 3)?;
    }
    let mut leaf = |i: usize, j: usize, v: Colour, e: Colour| f.leaf(c, i, j, v + shift, e + shift);
    for j in 1..=k - 2 {
        if j % 2 == 1 {
            leaf(1, j, 2 * j + 2, 2 * j + 3);
            leaf(k, k - j - 1, 2 * k - 2 * j - 2, 2 * k - 2 * j - 3);
        } else {
            leaf(1, j, 2 * j + 3, 2 * j + 2);
            leaf(k, k - j - 1, 2 * k - 2 * j - 3, 2 * k - 2 * j - 2);
        }
    }
    for i in 2..k {
        for j in 1..=i.saturating_sub(2) {
            if j % 2 == 1 {
                leaf(i, i - j - 1, 2 * i - 2 * j - 2, 2 * i - 2 * j - 3);
            } else {
                leaf(i, i - j - 1, 2 * i - 2 * j - 3, 2 * i - 2 * j - 2);
            }
        }
        for j in 1..=k - i - 1 {
            if j % 2 == 1 {
                leaf(i, i + j - 2, 2 * i + 2 * j, 2 * i + 2 * j + 1);
            } else {
                leaf(i, i + j - 2, 2 * i + 2 * j + 1, 2 * i + 2 * j);
            }
        }
    }
    for i in 1..=k {
        c.set(Element::Vertex(f.w(i)), 2 * i - 1 + shift);
    }
    for i in 1..k {
        c.set(f.e(i), 2 * i + shift);
    }
    Ok(())
}

/// Both boundary vertices dense, k >= 3: a partial (2k-1)-colouring in which
/// w_i gets 2i-1, e_i gets 2i, and every path element picks up all 2k-1
/// colours from the path and its pendant neighbours.
pub fn colour_dense_path_type1(g: &Graph, path: &[VertexId]) -> Result<TotalColouring, CaterpillarError> {
    let k = path.len();
    let mut c = TotalColouring::new(g, (2 * k).saturating_sub(1));
    alg1_into(&PathFrame::new(g, path), &mut c, 0)?;
    Ok(c)
}

/// Fills the closed star of the outer end `b` of boundary edge `eb` so that
/// `eb` picks up every colour; falls back to the inner end's free slots.
fn complete_boundary_edge(
    g: &Graph,
    c: &mut TotalColouring,
    eb: Element,
    inner: VertexId,
    outer: VertexId,
) -> Result<(), CaterpillarError> {
    let Element::Edge(e) = eb else { unreachable!("boundary is an edge") };
    let mut pool = vec![Element::Vertex(outer)];
    pool.extend(g.incident_edges(outer).filter(|&x| x != e).map(Element::Edge));
    if supply(g, c, eb, &pool) {
        return Ok(());
    }
    pool.extend(g.incident_edges(inner).filter(|&x| x != e).map(Element::Edge));
    if supply(g, c, eb, &pool) {
        return Ok(());
    }
    Err(CaterpillarError::Internal(format!("boundary edge {eb} cannot pick up every colour")))
}

/// Exactly one boundary vertex dense, k >= 4: a partial (2k-2)-colouring.
/// `path.first_dense` selects which end is the dense one.
pub fn colour_dense_path_type2(g: &Graph, path: &DensePath) -> Result<TotalColouring, CaterpillarError> {
    if path.kind() != DensePathType::Type2 || path.k() < 4 {
        return Err(CaterpillarError::Precondition(format!(
            "type 2 path with k >= 4 expected, got {:?} with k = {}",
            path.kind(),
            path.k()
        )));
    }
    let k = path.k();
    let q = 2 * k - 2;
    let d = usize::from(!path.first_dense);
    let sub = &path.vertices[d..d + k - 1];
    let inner = PathFrame::new(g, sub);
    let mut c = TotalColouring::new(g, q);
    alg1_into(&inner, &mut c, d)?;
    let outer = PathFrame::new(g, &path.vertices);
    let kp = k - 1;
    if d == 1 {
        c.set(outer.e(1), 1);
    } else {
        c.set(outer.e(k - 1), q);
    }
    // the extra neighbour of u_j is the first one the type 1 step left alone
    let used = |j: usize| if j == 1 || j == kp { kp - 2 } else { kp - 3 };
    for i in 1..kp {
        let (j, col) = if d == 1 { (i + 1, 1) } else { (kp - i, q) };
        inner.need(j, used(j) + 1)?;
        let x = if i % 2 == 1 { inner.leaf_vertex(j, used(j) + 1) } else { inner.leaf_edge(j, used(j) + 1) };
        c.set(x, col);
    }
    if d == 1 {
        complete_boundary_edge(g, &mut c, outer.e(1), outer.w(2), outer.w(1))?;
    } else {
        complete_boundary_edge(g, &mut c, outer.e(k - 1), outer.w(k - 1), outer.w(k))?;
    }
    Ok(c)
}

/// Neither boundary vertex dense, k >= 5: a partial (2k-3)-colouring.
pub fn colour_dense_path_type3(g: &Graph, path: &[VertexId]) -> Result<TotalColouring, CaterpillarError> {
    let k = path.len();
    if k < 5 {
        return Err(CaterpillarError::Precondition(format!("type 3 path needs k >= 5, got {k}")));
    }
    let q = 2 * k - 3;
    let sub = &path[1..k - 1];
    let inner = PathFrame::new(g, sub);
    let kp = k - 2;
    let mut c = TotalColouring::new(g, q);
    alg1_into(&inner, &mut c, 1)?;
    // u_1 = w_2 and u_{k'} = w_{k-1} have used k'-2 neighbours, the rest k'-3
    inner.need(1, kp - 1)?;
    inner.need(kp, kp - 1)?;
    c.set(inner.leaf_edge(1, kp - 1), q);
    c.set(inner.leaf_edge(kp, kp - 1), 1);
    for i in 3..=k - 2 {
        let j = i - 1;
        inner.need(j, kp - 2)?;
        let (vc, ec) = if i % 2 == 1 { (1, q) } else { (q, 1) };
        c.set(inner.leaf_vertex(j, kp - 2), vc);
        c.set(inner.leaf_edge(j, kp - 2), ec);
    }
    let outer = PathFrame::new(g, path);
    // the two boundary edges take the colours the path has not used yet
    if !c.is_coloured(outer.e(1)) {
        c.set(outer.e(1), 1);
    }
    if !c.is_coloured(outer.e(k - 1)) {
        c.set(outer.e(k - 1), q);
    }
    complete_boundary_edge(g, &mut c, outer.e(1), outer.w(2), outer.w(1))?;
    complete_boundary_edge(g, &mut c, outer.e(k - 1), outer.w(k - 1), outer.w(k))?;
    Ok(c)
}

/// Checks the postcondition shared by the three path algorithms: the
/// witnesses carry colours `1..=q` once each, all of them pick up every other
/// colour, and a witness with total degree `q - 1` sees no colour twice.
pub fn check_path_postcondition(
    g: &Graph,
    c: &TotalColouring,
    witnesses: &[Element],
    q: usize,
) -> Result<(), String> {
    let mut own: Vec<Colour> = Vec::with_capacity(witnesses.len());
    for &z in witnesses {
        own.push(c.get(z).ok_or_else(|| format!("{z} is uncoloured"))?);
    }
    let mut sorted = own.clone();
    sorted.sort_unstable();
    if sorted != (1..=q).collect::<Vec<_>>() {
        return Err(format!("witness colours {sorted:?} are not 1..={q}"));
    }
    for (&z, &col) in witnesses.iter().zip(&own) {
        let seen = c.neighbour_colours(g, z);
        if seen.contains(&col) {
            return Err(format!("{z} clashes with a neighbour on colour {col}"));
        }
        let mut distinct = seen.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let missing: Vec<_> = (1..=q).filter(|x| *x != col && distinct.binary_search(x).is_err()).collect();
        if !missing.is_empty() {
            return Err(format!("{z} (colour {col}) misses {missing:?}"));
        }
        if g.total_degree_unchecked(z) + 1 == q && distinct.len() != seen.len() {
            return Err(format!("tight element {z} repeats a colour"));
        }
    }
    Ok(())
}
