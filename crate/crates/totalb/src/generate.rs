//! Instance generators. Caterpillars are numbered spine first (left to
//! right), then leaves grouped by spine vertex; spine edges come before leaf
//! edges.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::caterpillar::DensePathType;
use crate::colouring::{path_graph, star_graph};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid generator parameter: {0}")]
pub struct GenerateError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Path { n: usize },
    Star { n: usize },
    /// `spine_len` spine vertices with `leaves_per_spine` leaves each.
    UniformCaterpillar { spine_len: usize, leaves_per_spine: usize },
    /// The spine is a single dense path of the given type, every vertex at the
    /// smallest degree the type allows, and m_t equal to its dense count.
    /// `flipped` puts the non-dense end of a type 2 path first.
    MinimalDensePath { k: usize, kind: DensePathType, flipped: bool },
    /// Pivot of the first kind with m_t = m (m >= 7).
    PivotedType1 { m: usize },
    /// Two three-element dense paths sharing a non-dense vertex.
    PivotedType2a,
    /// Two three-element dense paths joined by a non-dense edge.
    PivotedType2b,
    /// Spine length uniform in [2, max_n/2], then each remaining vertex
    /// becomes a leaf of a uniform spine vertex with probability 1/2.
    RandomCaterpillar { seed: u64, max_n: usize },
    /// The 3-cube Q_3.
    CubeGraph,
}

/// Caterpillar with `leaves[i]` leaves on spine vertex `i`.
pub fn caterpillar_from_leaf_counts(leaves: &[usize]) -> Graph {
    let s = leaves.len();
    let mut g = Graph::new(s);
    for i in 1..s {
        g.add_edge(i - 1, i).expect("fresh spine");
    }
    for (i, &l) in leaves.iter().enumerate() {
        for _ in 0..l {
            let x = g.add_vertex();
            g.add_edge(i, x).expect("fresh leaf");
        }
    }
    g
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), GenerateError> {
    if ok {
        Ok(())
    } else {
        Err(GenerateError(msg()))
    }
}

/// Leaf counts for [`Family::MinimalDensePath`].
pub fn minimal_leaf_counts(k: usize, kind: DensePathType, flipped: bool) -> Result<Vec<usize>, GenerateError> {
    check(k >= kind.min_len(), || format!("{kind:?} dense path needs k >= {}, got {k}", kind.min_len()))?;
    let mut out = match kind {
        DensePathType::Type1 => {
            let mut v = vec![k - 3; k];
            v[0] = k - 2;
            v[k - 1] = k - 2;
            v
        }
        DensePathType::Type2 => {
            // w_1 dense with k - 1 neighbours, w_k of degree k - 2
            let mut v = vec![k - 3; k];
            v[0] = k - 2;
            v
        }
        DensePathType::Type3 => {
            // ends of degree k - 3; w_2, w_{k-1} of degree k - 1 keep the
            // boundary edges dense
            let mut v = vec![k - 4; k];
            v[1] = k - 3;
            v[k - 2] = k - 3;
            v
        }
    };
    if flipped {
        out.reverse();
    }
    Ok(out)
}

pub fn generate(f: &Family) -> Result<Graph, GenerateError> {
    match *f {
        Family::Path { n } => {
            check(n >= 1, || "path needs n >= 1".into())?;
            Ok(path_graph(n))
        }
        Family::Star { n } => {
            check(n >= 1, || "star needs n >= 1".into())?;
            Ok(star_graph(n))
        }
        Family::UniformCaterpillar { spine_len, leaves_per_spine } => {
            check(spine_len >= 1, || "spine needs at least one vertex".into())?;
            Ok(caterpillar_from_leaf_counts(&vec![leaves_per_spine; spine_len]))
        }
        Family::MinimalDensePath { k, kind, flipped } => {
            Ok(caterpillar_from_leaf_counts(&minimal_leaf_counts(k, kind, flipped)?))
        }
        Family::PivotedType1 { m } => {
            // spine a - u - u' - v - b; d(u) = m - 2, d(u') = 2,
            // d(v) = ceil((m - 1) / 2); a and b carry one leaf each
            check(m >= 7, || format!("type 1 pivot needs m >= 7, got {m}"))?;
            let dv = m / 2;
            Ok(caterpillar_from_leaf_counts(&[1, m - 4, 0, dv - 2, 1]))
        }
        Family::PivotedType2a => Ok(caterpillar_from_leaf_counts(&[1, 1, 0, 1, 1])),
        Family::PivotedType2b => Ok(caterpillar_from_leaf_counts(&[1, 1, 0, 0, 1, 1])),
        Family::RandomCaterpillar { seed, max_n } => {
            check(max_n >= 2, || "random caterpillar needs max_n >= 2".into())?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = rng.gen_range(2..=(max_n / 2).max(2));
            let mut leaves = vec![0; s];
            for _ in s..max_n {
                if rng.gen_bool(0.5) {
                    leaves[rng.gen_range(0..s)] += 1;
                }
            }
            Ok(caterpillar_from_leaf_counts(&leaves))
        }
        Family::CubeGraph => {
            let mut g = Graph::new(8);
            for v in 0..8usize {
                for bit in [1, 2, 4] {
                    if v < v ^ bit {
                        g.add_edge(v, v ^ bit).expect("cube is simple");
                    }
                }
            }
            Ok(g)
        }
    }
}
