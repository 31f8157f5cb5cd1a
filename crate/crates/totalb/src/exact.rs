//! Exhaustive backtracking for phi_t and for plain total k-colourings.
//!
//! Elements are branched in order of decreasing total degree. Two prunes do
//! the real work: properness (per-element colour block counts), and a
//! witness check that matches every colour to a distinct element still able
//! to become b-chromatic for it. Colours not yet used anywhere are
//! interchangeable, so only the smallest of them is ever tried.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::colouring::{total_m_degree, verify, Colour, ColouringError, TotalColouring};
use crate::graph::{Element, Graph};

pub const DEFAULT_CAP: usize = 40;
/// Palette sizes above this are rejected by the witness matcher.
pub const MAX_PALETTE: usize = 126;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `|V|+|E|` accepted.
    pub cap: usize,
    /// Maximum number of colour assignments tried, across all `k`.
    pub budget: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { cap: DEFAULT_CAP, budget: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("graph has {elements} elements, above the cap of {cap}")]
    CapExceeded { elements: usize, cap: usize },
    #[error("node budget exhausted after {nodes} nodes; phi_t is in {lower}..={upper}")]
    BudgetExceeded { lower: usize, upper: usize, nodes: u64 },
    #[error("palette of {0} colours is too large for the search")]
    PaletteTooLarge(usize),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactResult {
    pub phi_t: usize,
    pub m_t: usize,
    pub witness: TotalColouring,
    pub nodes_explored: u64,
    /// `(k, nodes)` for each palette size tried, largest first.
    pub attempts: Vec<(usize, u64)>,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

enum Outcome {
    Found(TotalColouring),
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    adj: Vec<Vec<usize>>,
    k: usize,
    order: Vec<usize>,
    colour: Vec<Colour>,
    // block[i * (k+1) + c]: neighbours of i coloured c
    block: Vec<u32>,
    present: Vec<usize>,
    uncoloured_nbrs: Vec<usize>,
    used: Vec<usize>,
    candidates: Vec<usize>,
    b_chromatic: bool,
    nodes: u64,
    limit: Option<u64>,
    // scratch for the matcher
    masks: Vec<u128>,
    owner: Vec<usize>,
    visited: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, b_chromatic: bool, nodes_before: u64, budget: Option<u64>) -> Self {
        let adj = g.total_adjacency();
        let n = adj.len();
        let mut order: Vec<usize> = (0..n).collect();
        // stable: ties stay in (kind, id) order
        order.sort_by(|&a, &b| adj[b].len().cmp(&adj[a].len()));
        let candidates = (0..n).filter(|&i| adj[i].len() + 1 >= k).collect();
        let uncoloured_nbrs = adj.iter().map(Vec::len).collect();
        Search {
            g,
            k,
            order,
            colour: vec![0; n],
            block: vec![0; n * (k + 1)],
            present: vec![0; n],
            uncoloured_nbrs,
            used: vec![0; k + 1],
            candidates,
            b_chromatic,
            nodes: nodes_before,
            limit: budget,
            masks: Vec::new(),
            owner: Vec::new(),
            visited: Vec::new(),
            adj,
        }
    }

    fn assign(&mut self, i: usize, c: Colour) {
        self.colour[i] = c;
        self.used[c] += 1;
        let k1 = self.k + 1;
        for idx in 0..self.adj[i].len() {
            let j = self.adj[i][idx];
            let slot = &mut self.block[j * k1 + c];
            *slot += 1;
            if *slot == 1 {
                self.present[j] += 1;
            }
            self.uncoloured_nbrs[j] -= 1;
        }
    }

    fn unassign(&mut self, i: usize) {
        let c = self.colour[i];
        self.colour[i] = 0;
        self.used[c] -= 1;
        let k1 = self.k + 1;
        for idx in 0..self.adj[i].len() {
            let j = self.adj[i][idx];
            let slot = &mut self.block[j * k1 + c];
            *slot -= 1;
            if *slot == 0 {
                self.present[j] -= 1;
            }
            self.uncoloured_nbrs[j] += 1;
        }
    }

    fn blocked(&self, i: usize, c: Colour) -> bool {
        self.block[i * (self.k + 1) + c] > 0
    }

    /// Can every colour still be given its own b-chromatic witness?
    fn witnesses_feasible(&mut self) -> bool {
        if !self.b_chromatic {
            return true;
        }
        let k = self.k;
        self.masks.clear();
        let mut union: u128 = 0;
        for idx in 0..self.candidates.len() {
            let x = self.candidates[idx];
            let mut mask = 0u128;
            if self.present[x] + self.uncoloured_nbrs[x] + 1 >= k {
                if self.colour[x] != 0 {
                    mask = 1 << self.colour[x];
                } else {
                    for c in 1..=k {
                        if !self.blocked(x, c) {
                            mask |= 1 << c;
                        }
                    }
                }
            }
            union |= mask;
            self.masks.push(mask);
        }
        let full: u128 = ((1u128 << (k + 1)) - 1) & !1;
        if union & full != full {
            return false;
        }
        // Kuhn matching colours -> candidates
        self.owner.clear();
        self.owner.resize(k + 1, usize::MAX);
        let mut cand_match = vec![usize::MAX; self.masks.len()];
        for c in 1..=k {
            self.visited.clear();
            self.visited.resize(self.masks.len(), false);
            if !Self::augment(c, &self.masks, &mut self.visited, &mut cand_match, &mut self.owner) {
                return false;
            }
        }
        true
    }

    fn augment(
        c: usize,
        masks: &[u128],
        visited: &mut [bool],
        cand_match: &mut [usize],
        owner: &mut [usize],
    ) -> bool {
        for x in 0..masks.len() {
            if masks[x] & (1 << c) == 0 || visited[x] {
                continue;
            }
            visited[x] = true;
            if cand_match[x] == usize::MAX || Self::augment(cand_match[x], masks, visited, cand_match, owner) {
                cand_match[x] = c;
                owner[c] = x;
                return true;
            }
        }
        false
    }

    fn preassign(&mut self, fixed: &TotalColouring) -> bool {
        for (x, c) in fixed.assigned() {
            let i = self.g.index(x);
            if c == 0 || c > self.k || self.blocked(i, c) {
                return false;
            }
            self.assign(i, c);
        }
        true
    }

    fn run(&mut self) -> Outcome {
        if !self.witnesses_feasible() {
            return Outcome::Exhausted;
        }
        match self.dfs(0) {
            Some(true) => {
                let mut c = TotalColouring::new(self.g, self.k);
                for (i, &col) in self.colour.iter().enumerate() {
                    c.set(self.g.element(i), col);
                }
                Outcome::Found(c)
            }
            Some(false) => Outcome::Exhausted,
            None => Outcome::OutOfBudget,
        }
    }

    /// `Some(found)`, or `None` when the budget ran out.
    fn dfs(&mut self, mut depth: usize) -> Option<bool> {
        while depth < self.order.len() && self.colour[self.order[depth]] != 0 {
            depth += 1;
        }
        if depth == self.order.len() {
            return Some(true);
        }
        let i = self.order[depth];
        let fresh = (1..=self.k).find(|&c| self.used[c] == 0);
        for c in 1..=self.k {
            if self.blocked(i, c) || (self.used[c] == 0 && Some(c) != fresh) {
                continue;
            }
            self.nodes += 1;
            if self.limit.is_some_and(|b| self.nodes > b) {
                return None;
            }
            self.assign(i, c);
            if self.witnesses_feasible() {
                match self.dfs(depth + 1) {
                    Some(true) => return Some(true),
                    None => {
                        self.unassign(i);
                        return None;
                    }
                    Some(false) => {}
                }
            }
            self.unassign(i);
        }
        Some(false)
    }
}

fn check_cap(g: &Graph, cfg: &SearchConfig) -> Result<(), ExactError> {
    if g.element_count() > cfg.cap {
        return Err(ExactError::CapExceeded { elements: g.element_count(), cap: cfg.cap });
    }
    Ok(())
}

/// phi_t(G) with a witness colouring, searching `k = m_t, m_t - 1, ...`.
pub fn solve_exact(g: &Graph, cfg: &SearchConfig) -> Result<ExactResult, ExactError> {
    check_cap(g, cfg)?;
    let m_t = total_m_degree(g)?;
    if m_t > MAX_PALETTE {
        return Err(ExactError::PaletteTooLarge(m_t));
    }
    let start = Instant::now();
    let mut nodes = 0u64;
    let mut attempts = Vec::new();
    for k in (1..=m_t).rev() {
        let mut s = Search::new(g, k, true, nodes, cfg.budget);
        let outcome = s.run();
        attempts.push((k, s.nodes - nodes));
        nodes = s.nodes;
        match outcome {
            Outcome::Found(witness) => {
                debug_assert!(verify(g, &witness).map(|r| r.is_valid()).unwrap_or(false));
                return Ok(ExactResult {
                    phi_t: k,
                    m_t,
                    witness,
                    nodes_explored: nodes,
                    attempts,
                    elapsed: start.elapsed(),
                });
            }
            Outcome::Exhausted => {}
            Outcome::OutOfBudget => {
                // phi_t >= chi_t >= Delta + 1 (a minimum total colouring is b-chromatic)
                let lower = (g.max_degree() + 1).min(k);
                return Err(ExactError::BudgetExceeded { lower, upper: k, nodes });
            }
        }
    }
    unreachable!("a minimum total colouring is always b-chromatic")
}

/// Is there a total b-chromatic k-colouring? Returns one if so.
pub fn find_b_chromatic(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Option<TotalColouring>, ExactError> {
    check_cap(g, cfg)?;
    search_with(g, k, true, None, cfg.budget)
}

/// A proper total colouring with at most `k` colours, if one exists.
pub fn exists_total_k_colouring(
    g: &Graph,
    k: usize,
    cfg: &SearchConfig,
) -> Result<Option<TotalColouring>, ExactError> {
    check_cap(g, cfg)?;
    search_with(g, k, false, None, cfg.budget)
}

/// Extends a partial colouring to a total b-chromatic `k`-colouring, keeping
/// every assigned colour. No element cap applies; bound the work with
/// `budget`.
pub fn complete_b_chromatic(
    g: &Graph,
    partial: &TotalColouring,
    k: usize,
    budget: Option<u64>,
) -> Result<Option<TotalColouring>, ExactError> {
    search_with(g, k, true, Some(partial), budget)
}

fn search_with(
    g: &Graph,
    k: usize,
    b_chromatic: bool,
    fixed: Option<&TotalColouring>,
    budget: Option<u64>,
) -> Result<Option<TotalColouring>, ExactError> {
    if k > MAX_PALETTE {
        return Err(ExactError::PaletteTooLarge(k));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut s = Search::new(g, k, b_chromatic, 0, budget);
    if let Some(p) = fixed {
        if !s.preassign(p) {
            return Ok(None);
        }
    }
    match s.run() {
        Outcome::Found(c) => Ok(Some(c)),
        Outcome::Exhausted => Ok(None),
        Outcome::OutOfBudget => {
            Err(ExactError::BudgetExceeded { lower: 1, upper: k, nodes: s.nodes })
        }
    }
}

/// The order in which the search branches on elements.
pub fn branching_order(g: &Graph) -> Vec<Element> {
    let s = Search::new(g, 1, false, 0, None);
    s.order.iter().map(|&i| g.element(i)).collect()
}
