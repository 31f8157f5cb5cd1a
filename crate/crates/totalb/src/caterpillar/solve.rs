//! Dispatch over the caterpillar constructions.

use serde::{Deserialize, Serialize};

use super::pivoted::classify;
use super::theorems::{colour_as_path, colour_as_star};
use super::{
    colour_dense_outside_spine, colour_pivoted, colour_single_dense_path, colour_small_m_degree,
    find_dense_paths, Caterpillar, CaterpillarError, DensePath, PivotClassification,
};
use crate::colouring::{verify, TotalColouring, Verdict};
use crate::exact::{solve_exact, SearchConfig};
use crate::graph::{Element, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    ClosedFormPath,
    ClosedFormStar,
    SmallMDegree,
    PivotedMinusOne,
    DenseOutsideSpine,
    SingleDensePath,
    FallbackExact,
    OutsideTheoremScope,
}

/// What the dispatcher looked at on the way to its answer.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub m_t: usize,
    pub dense_count: usize,
    pub classification: Option<PivotClassification>,
    pub dense_paths: Vec<DensePath>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveOutcome {
    /// None only for `OutsideTheoremScope`.
    pub phi_t: Option<usize>,
    pub method: Method,
    pub colouring: Option<TotalColouring>,
    pub certificate: Certificate,
}

/// Options for [`solve_with`].
#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    /// Run the exact solver when no construction applies.
    pub exact_fallback: bool,
    pub exact: SearchConfig,
}

/// phi_t of a connected caterpillar, with a verified colouring.
pub fn solve(g: &Graph, allow_exact_fallback: bool) -> Result<SolveOutcome, CaterpillarError> {
    solve_with(g, &SolveOptions { exact_fallback: allow_exact_fallback, ..SolveOptions::default() })
}

pub fn solve_with(g: &Graph, opts: &SolveOptions) -> Result<SolveOutcome, CaterpillarError> {
    if g.vertex_count() == 0 {
        return Err(CaterpillarError::Precondition("empty graph".into()));
    }
    let cat = Caterpillar::new(g)?;
    let mut cert = Certificate { m_t: cat.m, dense_count: cat.dense_count(), ..Certificate::default() };
    let done = |c: TotalColouring, method: Method, cert: Certificate| -> Result<SolveOutcome, CaterpillarError> {
        let report = verify(g, &c)?;
        if report.verdict != Verdict::ValidTotalBChromatic {
            return Err(CaterpillarError::Internal(format!("{method:?} produced {:?}", report.verdict)));
        }
        Ok(SolveOutcome { phi_t: Some(c.k()), method, colouring: Some(c), certificate: cert })
    };

    if g.max_degree() <= 2 {
        return done(colour_as_path(g)?, Method::ClosedFormPath, cert);
    }
    if cat.decomp.spine.len() <= 1 {
        return done(colour_as_star(g)?, Method::ClosedFormStar, cert);
    }
    if cat.m <= 5 {
        return done(colour_small_m_degree(g)?, Method::SmallMDegree, cert);
    }
    let cls = classify(&cat)?;
    if cat.dense_count() > cat.m {
        cert.notes.push(format!("{} dense elements exceed m_t = {}", cat.dense_count(), cat.m));
    }
    cert.classification = Some(cls.clone());
    cert.dense_paths = find_dense_paths(&cat);
    if cls.is_pivoted() {
        return done(colour_pivoted(g, &cls)?, Method::PivotedMinusOne, cert);
    }
    let off_spine = g.edges().iter().enumerate().any(|(e, &(a, b))| {
        (g.degree(a) == 1 || g.degree(b) == 1) && cat.is_dense(Element::Edge(e))
    });
    if off_spine {
        return done(colour_dense_outside_spine(g)?, Method::DenseOutsideSpine, cert);
    }
    if cert.dense_paths.len() == 1 {
        return done(colour_single_dense_path(g)?, Method::SingleDensePath, cert);
    }
    cert.notes.push(format!("{} dense paths on the spine", cert.dense_paths.len()));
    if opts.exact_fallback && g.element_count() <= opts.exact.cap {
        let r = solve_exact(g, &opts.exact)?;
        return done(r.witness, Method::FallbackExact, cert);
    }
    Ok(SolveOutcome { phi_t: None, method: Method::OutsideTheoremScope, colouring: None, certificate: cert })
}
