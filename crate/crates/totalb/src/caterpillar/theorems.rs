//! The constructive colourings for caterpillars with m_t <= 5, with a dense
//! edge off the spine, and with a single dense path on the spine.

use super::algorithms::{
    check_path_postcondition, colour_dense_path_type1, colour_dense_path_type2, colour_dense_path_type3,
};
use super::dense_path::select_subpath;
use super::{find_dense_paths, star_pool, supply, Caterpillar, CaterpillarError, DensePathType};
use crate::colouring::{colour_path, colour_star, Colour, TotalColouring};
use crate::graph::{Element, Graph, VertexId};

fn sorted_neighbours(g: &Graph, v: VertexId) -> Vec<VertexId> {
    let mut out: Vec<_> = g.neighbours(v).collect();
    out.sort_unstable();
    out
}

/// Path (max degree <= 2) coloured by the closed form, walking from the
/// lowest-id end.
pub fn colour_as_path(g: &Graph) -> Result<TotalColouring, CaterpillarError> {
    let n = g.vertex_count();
    if n == 0 || !g.is_tree() || g.max_degree() > 2 {
        return Err(CaterpillarError::Precondition("not a path".into()));
    }
    let start = (0..n).find(|&v| g.degree(v) <= 1).expect("a path has an end");
    let mut order = vec![start];
    while order.len() < n {
        let cur = *order.last().expect("non-empty");
        let prev = order.len().checked_sub(2).map(|i| order[i]);
        let next = g.neighbours(cur).find(|&w| Some(w) != prev).expect("path continues");
        order.push(next);
    }
    let (_, canon) = colour_path(n);
    let mut c = TotalColouring::new(g, canon.k());
    for (x, col) in canon.assigned() {
        let y = match x {
            Element::Vertex(i) => Element::Vertex(order[i]),
            Element::Edge(i) => Element::Edge(g.edge_between(order[i], order[i + 1]).expect("consecutive")),
        };
        c.set(y, col);
    }
    Ok(c)
}

/// K_{1,n} coloured by the closed form; leaves are matched in id order.
pub fn colour_as_star(g: &Graph) -> Result<TotalColouring, CaterpillarError> {
    let n = g.vertex_count();
    if n < 2 || !g.is_tree() {
        return Err(CaterpillarError::Precondition("not a star".into()));
    }
    let centre = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).expect("non-empty");
    if g.degree(centre) != n - 1 {
        return Err(CaterpillarError::Precondition("not a star".into()));
    }
    let leaves = sorted_neighbours(g, centre);
    let (_, canon) = colour_star(n - 1);
    let mut c = TotalColouring::new(g, canon.k());
    for (x, col) in canon.assigned() {
        let y = match x {
            Element::Vertex(0) => Element::Vertex(centre),
            Element::Vertex(i) => Element::Vertex(leaves[i - 1]),
            Element::Edge(i) => Element::Edge(g.edge_between(centre, leaves[i]).expect("star edge")),
        };
        c.set(y, col);
    }
    Ok(c)
}

struct Paint<'a> {
    g: &'a Graph,
    c: TotalColouring,
}

impl Paint<'_> {
    fn v(&mut self, x: VertexId, col: Colour) {
        self.c.set(Element::Vertex(x), col);
    }

    fn e(&mut self, a: VertexId, b: VertexId, col: Colour) {
        let e = self.g.edge_between(a, b).unwrap_or_else(|| panic!("no edge ({a}, {b})"));
        self.c.set(Element::Edge(e), col);
    }
}

/// A total b-chromatic m_t-colouring of a connected caterpillar with
/// m_t <= 5.
pub fn colour_small_m_degree(g: &Graph) -> Result<TotalColouring, CaterpillarError> {
    let cat = Caterpillar::new(g)?;
    if cat.m > 5 {
        return Err(CaterpillarError::Precondition(format!("m_t = {} exceeds 5", cat.m)));
    }
    if g.max_degree() <= 2 {
        return colour_as_path(g);
    }
    if cat.decomp.spine.len() <= 1 {
        return colour_as_star(g);
    }
    let spine = cat.decomp.spine.clone();
    let mut p = Paint { g, c: TotalColouring::new(g, cat.m) };
    let is_leaf = |x: VertexId| g.degree(x) == 1;
    let spine_nbrs = |x: VertexId| -> Vec<VertexId> {
        let mut s: Vec<_> = g.neighbours(x).filter(|&y| cat.on_spine(y)).collect();
        s.sort_by_key(|&y| cat.decomp.position(y));
        s
    };
    let leaves_of = |x: VertexId| -> Vec<VertexId> {
        let mut l: Vec<_> = g.neighbours(x).filter(|&y| is_leaf(y)).collect();
        l.sort_unstable();
        l
    };

    if let Some(&u) = spine.iter().find(|&&x| g.degree(x) == 4) {
        // E(u) + {u} witness 1..5; u_4 is left to the completion, since the
        // colour 5 it would get is already on (u, u_4)
        let nbrs = sorted_neighbours(g, u);
        p.v(u, 1);
        for (i, &x) in nbrs.iter().enumerate() {
            p.e(u, x, i + 2);
            if i < 3 {
                p.v(x, i + 3);
            }
        }
        return cat.finish(p.c, "m_t <= 5, degree-4 vertex");
    }

    let deg3: Vec<VertexId> = spine.iter().copied().filter(|&x| g.degree(x) == 3).collect();
    let u = if deg3.len() == 3 { deg3[1] } else { deg3[0] };
    let sn = spine_nbrs(u);
    let lv = leaves_of(u);
    let u1 = sn[0];
    let u2 = lv[0];
    let u3 = if sn.len() > 1 { sn[1] } else { lv[1] };
    let v = {
        let others: Vec<_> = sorted_neighbours(g, u1).into_iter().filter(|&x| x != u).collect();
        others.iter().copied().find(|&x| cat.on_spine(x)).unwrap_or(others[0])
    };
    p.v(u, 1);
    for (i, &x) in [u1, u2, u3].iter().enumerate() {
        p.e(u, x, i + 2);
        p.v(x, 5);
    }
    p.e(u1, v, 3);
    p.v(v, 4);

    match deg3.len() {
        1 => {}
        2 => {
            let w = deg3[1];
            // w_3 is a pendant neighbour of w, w_1 the neighbour towards u
            let pick_rest = |w1: VertexId| -> (VertexId, VertexId) {
                let rest: Vec<_> = sorted_neighbours(g, w).into_iter().filter(|&x| x != w1).collect();
                let w3 = rest.iter().copied().find(|&x| is_leaf(x)).expect("degree-3 spine vertex has a leaf");
                let w2 = rest.into_iter().find(|&x| x != w3).expect("two more neighbours");
                (w2, w3)
            };
            if g.edge_between(u, w).is_some() {
                if w == u1 {
                    let w3 = g.neighbours(w).find(|&x| x != u && x != v).expect("degree 3");
                    p.e(w, w3, 1);
                    p.v(w3, 2);
                } else {
                    let (w2, w3) = pick_rest(u);
                    p.v(w3, 1);
                    p.v(w2, 2);
                    p.e(w, w2, 1);
                    p.e(w, w3, 2);
                }
            } else if let Some(w1) = g.neighbours(w).find(|&x| g.edge_between(u, x).is_some()) {
                let (w2, w3) = pick_rest(w1);
                if w == v {
                    p.v(w3, 1);
                    p.v(w2, 2);
                    p.e(w, w2, 1);
                    p.e(w, w3, 2);
                } else {
                    p.v(w, 1);
                    p.v(w2, 2);
                    p.v(w3, 3);
                    p.e(w, w1, 2);
                    p.e(w, w2, 3);
                    p.e(w, w3, 4);
                }
            } else {
                let mut nbrs = sorted_neighbours(g, w);
                // an edge to v must avoid colour 3 on (u_1, v)
                nbrs.sort_by_key(|&x| x != v);
                p.v(w, 5);
                for (i, &x) in nbrs.iter().enumerate() {
                    p.e(w, x, i + 1);
                }
                // colour 4 goes only where it fits: a neighbour of w may
                // itself be adjacent to v, which already has 4
                for &x in &nbrs {
                    let vx = Element::Vertex(x);
                    if !p.c.is_coloured(vx) && !p.c.neighbour_colours(g, vx).contains(&4) {
                        p.v(x, 4);
                    }
                }
            }
        }
        3 => {
            let l1 = leaves_of(u1);
            let u1p = *l1.iter().find(|&&x| x != v).expect("end of spine has two leaves");
            let l3 = leaves_of(u3);
            let (u3p, u3pp) = (l3[0], l3[1]);
            p.v(u1p, 3);
            p.e(u1, u1p, 4);
            p.v(u3p, 1);
            p.v(u3pp, 2);
            p.e(u3, u3p, 2);
            p.e(u3, u3pp, 1);
        }
        n => {
            return Err(CaterpillarError::Precondition(format!("{n} vertices of degree 3 with m_t <= 5")));
        }
    }
    cat.finish(p.c, "m_t <= 5, degree-3 vertex")
}

/// Where the extra dense vertex `v` sits relative to `u`; lower is simpler.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Relation {
    Far,
    Adjacent,
    SharedWide(VertexId),
    SharedNarrow(VertexId),
}

/// A total b-chromatic m_t-colouring when a dense edge hangs off the spine.
pub fn colour_dense_outside_spine(g: &Graph) -> Result<TotalColouring, CaterpillarError> {
    let cat = Caterpillar::new(g)?;
    let m = cat.m;
    if m < 6 {
        return Err(CaterpillarError::Precondition(format!("needs m_t >= 6, got {m}")));
    }
    if super::pivoted::classify(&cat)?.is_pivoted() {
        return Err(CaterpillarError::Precondition("caterpillar is pivoted".into()));
    }
    let u = (0..g.vertex_count())
        .filter(|&x| cat.on_spine(x))
        .filter(|&x| {
            g.incidences(x).iter().any(|&(y, e)| g.degree(y) == 1 && cat.is_dense(Element::Edge(e)))
        })
        .max_by_key(|&x| (g.degree(x), std::cmp::Reverse(x)))
        .ok_or_else(|| CaterpillarError::Precondition("no dense edge off the spine".into()))?;
    let du = g.degree(u);
    if du + 1 != m && du + 2 != m {
        return Err(CaterpillarError::Precondition(format!("d(u) = {du} with m = {m}")));
    }
    let mut p = Paint { g, c: TotalColouring::new(g, m) };
    let nbrs = sorted_neighbours(g, u);
    p.v(u, 1);
    if du + 1 == m {
        for (i, &x) in nbrs.iter().enumerate() {
            p.e(u, x, i + 2);
        }
        return cat.finish(p.c, "dense edge off the spine, d(u) = m - 1");
    }

    let relation = |v: VertexId| -> Relation {
        if g.edge_between(u, v).is_some() {
            return Relation::Adjacent;
        }
        match g.neighbours(v).find(|&x| g.edge_between(u, x).is_some()) {
            Some(x) if g.degree(x) > 2 => Relation::SharedWide(x),
            Some(x) => Relation::SharedNarrow(x),
            None => Relation::Far,
        }
    };
    let (v, rel) = (0..g.vertex_count())
        .filter(|&x| x != u && cat.is_dense_vertex(x))
        .map(|x| (x, relation(x)))
        .min_by_key(|&(x, r)| (r, x))
        .ok_or_else(|| CaterpillarError::Internal("no second dense vertex".into()))?;

    // u_1 first, an optional u_{m-2} last, the rest by id
    let arrange = |first: Option<VertexId>, last: Option<VertexId>| -> Vec<VertexId> {
        let mut out: Vec<_> = nbrs.iter().copied().filter(|&x| Some(x) != first && Some(x) != last).collect();
        if let Some(f) = first {
            out.insert(0, f);
        }
        out.extend(last);
        out
    };
    let vx = |x: VertexId| Element::Vertex(x);
    let ex = |a: VertexId, b: VertexId| Element::Edge(cat.edge(a, b));
    let need = |ok: bool, who: &str| {
        if ok {
            Ok(())
        } else {
            Err(CaterpillarError::Internal(format!("{who} cannot pick up every colour")))
        }
    };

    match rel {
        Relation::Far | Relation::Adjacent => {
            let order = arrange((rel == Relation::Adjacent).then_some(v), None);
            for (i, &x) in order.iter().enumerate() {
                p.e(u, x, i + 2);
            }
            p.v(v, m);
            for &x in order.iter().filter(|&&x| x != v) {
                p.v(x, m);
            }
            let pool = star_pool(g, v, &[vx(u), Element::Edge(g.edge_between(u, v).unwrap_or(usize::MAX))]);
            need(supply(g, &mut p.c, vx(v), &pool), "v")?;
        }
        Relation::SharedWide(u1) => {
            let order = arrange(Some(u1), None);
            for (i, &x) in order.iter().enumerate() {
                p.e(u, x, i + 2);
            }
            p.v(v, m);
            let w = sorted_neighbours(g, u1).into_iter().find(|&x| x != u && x != v).expect("d(u_1) > 2");
            p.e(u1, w, m);
            for &x in &order[1..] {
                p.v(x, m);
            }
            p.v(u1, 3);
            p.e(u1, v, 1);
            let pool = star_pool(g, v, &[vx(u1), ex(u1, v)]);
            need(supply(g, &mut p.c, vx(v), &pool), "v")?;
        }
        Relation::SharedNarrow(u1) => {
            // (u, u_1) cannot see m; a third dense vertex w takes colour 2
            let rank = |w: VertexId| -> (u8, Option<VertexId>) {
                if g.edge_between(u, w).is_some() {
                    (0, None)
                } else if g.edge_between(v, w).is_some() {
                    (1, None)
                } else if let Some(x) = g.neighbours(w).find(|&x| g.edge_between(v, x).is_some()) {
                    (2, Some(x))
                } else if let Some(x) = g.neighbours(w).find(|&x| g.edge_between(u, x).is_some()) {
                    (3, Some(x))
                } else {
                    (4, None)
                }
            };
            let third = (0..g.vertex_count())
                .filter(|&x| x != u && x != v && x != u1 && cat.is_dense_vertex(x))
                .map(|x| (x, rank(x)))
                .min_by_key(|&(x, r)| (r.0, x));
            let Some((w, (case, via))) = third else {
                return colour_with_edge_witness(&cat, u, &nbrs);
            };
            let last = match case {
                0 => Some(w),
                3 => via,
                _ => None,
            };
            let order = arrange(Some(u1), last);
            for (i, &x) in order.iter().enumerate() {
                p.e(u, x, i + 2);
            }
            p.v(v, m);
            p.v(w, 2);
            match case {
                0 => {
                    p.v(u1, m - 1);
                    for &x in &order[1..order.len() - 1] {
                        p.v(x, m);
                    }
                    // (u, w) picks up m from an edge at w
                    let e = g.incident_edges(w).find(|&e| e != cat.edge(u, w)).ok_or_else(|| {
                        CaterpillarError::Internal("dense vertex w has a single edge".into())
                    })?;
                    p.c.set(Element::Edge(e), m);
                    need(supply(g, &mut p.c, vx(w), &star_pool(g, w, &[ex(u, w), vx(u)])), "w")?;
                    p.e(u1, v, 1);
                    need(supply(g, &mut p.c, vx(v), &star_pool(g, v, &[ex(u1, v), vx(u1)])), "v")?;
                }
                1 => {
                    p.v(u1, 3);
                    for &x in &order[1..] {
                        p.v(x, m);
                    }
                    p.e(u1, v, 1);
                    p.e(v, w, 4);
                    let pool = star_pool(g, v, &[ex(u1, v), vx(w), vx(u1), ex(v, w)]);
                    need(supply(g, &mut p.c, vx(v), &pool), "v")?;
                    need(supply(g, &mut p.c, vx(w), &star_pool(g, w, &[ex(v, w), vx(v)])), "w")?;
                }
                _ => {
                    p.v(u1, m - 1);
                    for &x in &order[1..] {
                        p.v(x, m);
                    }
                    p.e(u1, v, 1);
                    match (case, via) {
                        (2, Some(wp)) => {
                            p.v(wp, 3);
                            p.e(w, wp, 1);
                            p.e(v, wp, 2);
                            let pool = star_pool(g, v, &[ex(u1, v), ex(v, wp), vx(u1), vx(wp)]);
                            need(supply(g, &mut p.c, vx(v), &pool), "v")?;
                            need(supply(g, &mut p.c, vx(w), &star_pool(g, w, &[ex(w, wp), vx(wp)])), "w")?;
                        }
                        (3, Some(x)) => {
                            p.e(w, x, 1);
                            need(supply(g, &mut p.c, vx(w), &star_pool(g, w, &[ex(w, x), vx(x)])), "w")?;
                            need(supply(g, &mut p.c, vx(v), &star_pool(g, v, &[ex(u1, v), vx(u1)])), "v")?;
                        }
                        _ => {
                            need(supply(g, &mut p.c, vx(w), &star_pool(g, w, &[])), "w")?;
                            need(supply(g, &mut p.c, vx(v), &star_pool(g, v, &[ex(u1, v), vx(u1)])), "v")?;
                        }
                    }
                }
            }
        }
    }
    cat.finish(p.c, "dense edge off the spine, d(u) = m - 2")
}

/// The extra dense element is an edge `y` away from `u` (its dense end being
/// the vertex already considered): `y` takes colour m and every neighbour of
/// `u` off `y` does too, so each edge at `u` still sees m.
fn colour_with_edge_witness(
    cat: &Caterpillar,
    u: VertexId,
    nbrs: &[VertexId],
) -> Result<TotalColouring, CaterpillarError> {
    let g = cat.g;
    let m = cat.m;
    let y = (0..g.edge_count())
        .find(|&e| {
            let (a, b) = g.endpoints(e);
            a != u && b != u && cat.is_dense(Element::Edge(e))
        })
        .ok_or_else(|| CaterpillarError::Internal("no dense element for colour m".into()))?;
    let (a, b) = g.endpoints(y);
    let mut c = TotalColouring::new(g, m);
    c.set(Element::Vertex(u), 1);
    for (i, &x) in nbrs.iter().enumerate() {
        c.set(Element::Edge(cat.edge(u, x)), i + 2);
        if x != a && x != b {
            c.set(Element::Vertex(x), m);
        }
    }
    c.set(Element::Edge(y), m);
    let mut pool = vec![Element::Vertex(a), Element::Vertex(b)];
    pool.extend(g.incident_edges(a).chain(g.incident_edges(b)).filter(|&e| e != y).map(Element::Edge));
    if !supply(g, &mut c, Element::Edge(y), &pool) {
        return Err(CaterpillarError::Internal(format!("edge {y} cannot pick up every colour")));
    }
    cat.finish(c, "dense edge off the spine, edge witness for m")
}

/// A total b-chromatic m_t-colouring when every dense element lies on one
/// dense path of the spine.
pub fn colour_single_dense_path(g: &Graph) -> Result<TotalColouring, CaterpillarError> {
    let cat = Caterpillar::new(g)?;
    let m = cat.m;
    if m < 6 {
        return Err(CaterpillarError::Precondition(format!("needs m_t >= 6, got {m}")));
    }
    let paths = find_dense_paths(&cat);
    let [path] = paths.as_slice() else {
        return Err(CaterpillarError::Precondition(format!("{} dense paths on the spine", paths.len())));
    };
    let on_path: usize = path.q();
    if on_path != cat.dense_count() {
        return Err(CaterpillarError::Precondition("a dense element lies off the dense path".into()));
    }
    let sub = if path.q() == m && path.k() >= path.kind().min_len() {
        path.clone()
    } else {
        select_subpath(path, m)
            .ok_or_else(|| CaterpillarError::Precondition(format!("no sub-path with {m} dense elements")))?
    };
    let partial = match sub.kind() {
        DensePathType::Type1 => colour_dense_path_type1(g, &sub.vertices)?,
        DensePathType::Type2 => colour_dense_path_type2(g, &sub)?,
        DensePathType::Type3 => colour_dense_path_type3(g, &sub.vertices)?,
    };
    check_path_postcondition(g, &partial, &sub.witnesses(g), m).map_err(CaterpillarError::Internal)?;
    cat.finish(partial, "single dense path")
}
