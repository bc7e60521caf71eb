//! Exact domination, matching and transversal numbers with certificates.
//!
//! Every certificate carries the lexicographically smallest optimal
//! witness, so values and witnesses agree across proof modes, runs and
//! platforms. Graphs are handled as 2-uniform hypergraphs.

mod domination;
mod exhaustive;
mod matching;
mod transversal;

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

pub const DEFAULT_NODE_CAP: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Gamma,
    Nu,
    Tau,
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parameter::Gamma => "gamma",
            Parameter::Nu => "nu",
            Parameter::Tau => "tau",
        })
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma" | "domination" => Ok(Parameter::Gamma),
            "nu" | "matching" => Ok(Parameter::Nu),
            "tau" | "transversal" => Ok(Parameter::Tau),
            other => Err(Error::UnknownName(format!("parameter '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProofMode {
    Exhaustive,
    #[default]
    BranchAndBound,
}

impl FromStr for ProofMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(ProofMode::Exhaustive),
            "branch_and_bound" | "bnb" => Ok(ProofMode::BranchAndBound),
            other => Err(Error::UnknownName(format!("proof mode '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub node_cap: u64,
    pub mode: ProofMode,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_cap: DEFAULT_NODE_CAP,
            mode: ProofMode::BranchAndBound,
        }
    }
}

/// An optimal value with the witness that attains it.
///
/// For `gamma` and `tau` the witness is a vertex set; for `nu` it is a set
/// of edge indices. Witnesses are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub parameter: Parameter,
    pub value: usize,
    pub witness: Vec<usize>,
    pub mode: ProofMode,
    pub node_count: u64,
}

impl Certificate {
    /// Checks that the witness has the claimed size and property.
    /// Optimality is not re-proved.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        if self.witness.len() != self.value || self.witness.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        match self.parameter {
            Parameter::Gamma => {
                self.witness.iter().all(|&v| v < h.order()) && is_dominating(h, &self.witness)
            }
            Parameter::Tau => {
                self.witness.iter().all(|&v| v < h.order()) && is_transversal(h, &self.witness)
            }
            Parameter::Nu => {
                self.witness.iter().all(|&e| e < h.edge_count()) && is_matching(h, &self.witness)
            }
        }
    }

    pub fn summary(&self) -> String {
        format!("{} = {}", self.parameter, self.value)
    }
}

pub fn is_dominating(h: &Hypergraph, set: &[usize]) -> bool {
    let mut covered = FixedBitSet::with_capacity(h.order());
    for &v in set {
        covered.union_with(&h.closed_neighborhood(v));
    }
    covered.count_ones(..) == h.order()
}

pub fn is_transversal(h: &Hypergraph, set: &[usize]) -> bool {
    h.edges().iter().all(|e| set.iter().any(|&v| e.contains(v)))
}

pub fn is_matching(h: &Hypergraph, edges: &[usize]) -> bool {
    let mut used = FixedBitSet::with_capacity(h.order());
    for &e in edges {
        if !used.is_disjoint(h.edge(e)) {
            return false;
        }
        used.union_with(h.edge(e));
    }
    true
}

/// Shared node counter.
pub(crate) struct Budget {
    pub nodes: u64,
    cap: u64,
}

impl Budget {
    pub fn new(cap: u64) -> Self {
        Budget { nodes: 0, cap }
    }

    #[inline]
    pub fn tick(&mut self) -> std::result::Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.cap {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }

    pub fn error(&self, parameter: Parameter, bound: &str) -> Error {
        Error::Budget {
            nodes: self.cap,
            detail: format!("{parameter}: {bound}"),
        }
    }
}

pub(crate) struct Exhausted;

pub fn matching_number(h: &Hypergraph) -> Result<Certificate> {
    matching_number_with(h, &SolverConfig::default())
}

pub fn matching_number_with(h: &Hypergraph, cfg: &SolverConfig) -> Result<Certificate> {
    match cfg.mode {
        ProofMode::BranchAndBound => matching::solve(h, cfg.node_cap),
        ProofMode::Exhaustive => exhaustive::matching(h, cfg.node_cap),
    }
}

pub fn transversal_number(h: &Hypergraph) -> Result<Certificate> {
    transversal_number_with(h, &SolverConfig::default())
}

pub fn transversal_number_with(h: &Hypergraph, cfg: &SolverConfig) -> Result<Certificate> {
    match cfg.mode {
        ProofMode::BranchAndBound => transversal::solve(h, cfg.node_cap),
        ProofMode::Exhaustive => exhaustive::transversal(h, cfg.node_cap),
    }
}

pub fn domination_number(h: &Hypergraph) -> Result<Certificate> {
    domination_number_with(h, &SolverConfig::default())
}

pub fn domination_number_with(h: &Hypergraph, cfg: &SolverConfig) -> Result<Certificate> {
    match cfg.mode {
        ProofMode::BranchAndBound => domination::solve(h, cfg.node_cap),
        ProofMode::Exhaustive => exhaustive::domination(h, cfg.node_cap),
    }
}

pub fn solve(h: &Hypergraph, parameter: Parameter, cfg: &SolverConfig) -> Result<Certificate> {
    match parameter {
        Parameter::Gamma => domination_number_with(h, cfg),
        Parameter::Nu => matching_number_with(h, cfg),
        Parameter::Tau => transversal_number_with(h, cfg),
    }
}

/// Graph-level convenience wrappers.
pub fn graph_gamma(g: &Graph) -> Result<Certificate> {
    domination_number(&g.to_hypergraph())
}

pub fn graph_nu(g: &Graph) -> Result<Certificate> {
    matching_number(&g.to_hypergraph())
}

pub fn graph_tau(g: &Graph) -> Result<Certificate> {
    transversal_number(&g.to_hypergraph())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KegReport {
    pub keg: bool,
    pub tau: Certificate,
    pub nu: Certificate,
}

/// König–Egerváry test: `tau(g) == nu(g)`.
pub fn is_keg(g: &Graph) -> Result<KegReport> {
    is_keg_with(g, &SolverConfig::default())
}

pub fn is_keg_with(g: &Graph, cfg: &SolverConfig) -> Result<KegReport> {
    let h = g.to_hypergraph();
    let tau = transversal_number_with(&h, cfg)?;
    let nu = matching_number_with(&h, cfg)?;
    Ok(KegReport {
        keg: tau.value == nu.value,
        tau,
        nu,
    })
}

/// Picks the lexicographically smallest set of size `value` among those
/// `feasible` accepts. `feasible(chosen, next)` must answer whether
/// `chosen` extends by vertices `>= next` to a solution of total size
/// `value`; `forced` vertices always belong to the set.
pub(crate) fn lex_min<F>(
    universe: usize,
    value: usize,
    forced: &FixedBitSet,
    mut feasible: F,
) -> std::result::Result<Vec<usize>, Exhausted>
where
    F: FnMut(&FixedBitSet, usize) -> std::result::Result<bool, Exhausted>,
{
    let mut chosen = FixedBitSet::with_capacity(universe);
    for v in 0..universe {
        if chosen.count_ones(..) + forced.count_ones(v..) == value {
            break;
        }
        if forced.contains(v) {
            chosen.insert(v);
            continue;
        }
        chosen.insert(v);
        if !feasible(&chosen, v + 1)? {
            chosen.set(v, false);
        }
    }
    chosen.union_with(forced);
    Ok(chosen.ones().collect())
}
