//! Structural families of graphs with `gamma == nu`, the König–Egerváry
//! view of extremal dilations, and predictors of `gamma(H)` computed from
//! the underlying graph alone.
//!
//! Every verdict carries evidence in terms of the input graph's vertex
//! indices, enough to re-check it by hand.

use serde::Serialize;

use crate::dilation::DilationClass;
use crate::error::{Error, Result};
use crate::graph::{
    bit, enumerate_connected, is_isomorphic, mask_iter, parse_graph6, write_graph6,
    EnumerationConstraints, Graph, MAX_ENUMERATION_ORDER,
};
use crate::invariants::{graph_gamma, graph_nu, graph_tau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Bipartite, minimum degree at least 2.
    #[serde(rename = "g2b")]
    G2B,
    /// Non-bipartite, minimum degree at least 2.
    #[serde(rename = "g2nb")]
    G2NB,
    /// Minimum degree 1.
    #[serde(rename = "g1")]
    G1,
    GeneralizedCorona,
    KOddComplete,
    Keg,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyVerdict {
    pub family: Family,
    pub member: bool,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    NotApplicable {
        reason: String,
    },
    /// Checks of the pair condition for each orientation tried.
    Bipartite {
        orientations: Vec<OrientationCheck>,
    },
    /// Index of the isomorphic candidate, if any.
    Candidate {
        index: Option<usize>,
        candidates: usize,
        max_n: usize,
    },
    /// `other` lists the vertices that are neither leaves nor stems.
    LeafStem {
        leaves: Vec<usize>,
        stems: Vec<usize>,
        other: Vec<usize>,
    },
    SingleEdge,
    Components {
        leaves: Vec<usize>,
        stems: Vec<usize>,
        components: Vec<ComponentCheck>,
    },
    Parameters {
        order: usize,
        tau: usize,
        nu: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationCheck {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    /// Pairs of `v1` with a common neighbour, and the vertices of `v2`
    /// whose neighbourhood is exactly that pair.
    pub pairs: Vec<PairCheck>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub x1: usize,
    pub x2: usize,
    pub private: Vec<usize>,
}

/// How a component of `G - (End(G) | Stem(G))` fared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCheck {
    pub vertices: Vec<usize>,
    /// Component vertices adjacent to a stem.
    pub attached: Vec<usize>,
    pub accepted_by: Option<ComponentRule>,
    pub reason: String,
    /// Only a match against the candidate list could have accepted it.
    pub candidate_pathway: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum ComponentRule {
    Trivial,
    Bipartite,
    StableCandidate { index: usize },
}

fn vertices(mask: u64) -> Vec<usize> {
    mask_iter(mask).collect()
}

fn not_applicable(family: Family, reason: impl Into<String>) -> FamilyVerdict {
    FamilyVerdict {
        family,
        member: false,
        evidence: Evidence::NotApplicable {
            reason: reason.into(),
        },
    }
}

/// For every pair of `v1` with a common neighbour inside `scope`, the
/// vertices of `v2 & allowed` whose neighbourhood within `scope` is exactly
/// the pair. The condition holds when each pair has at least two.
fn pair_condition(g: &Graph, scope: u64, v1: u64, v2: u64, allowed: u64) -> OrientationCheck {
    let xs = vertices(v1);
    let mut pairs = Vec::new();
    let mut holds = true;
    for (i, &x1) in xs.iter().enumerate() {
        for &x2 in &xs[i + 1..] {
            let common = g.neighbors(x1) & g.neighbors(x2) & v2 & scope;
            if common == 0 {
                continue;
            }
            let exact = bit(x1) | bit(x2);
            let private: Vec<usize> = mask_iter(v2 & allowed & scope)
                .filter(|&y| g.neighbors(y) & scope == exact)
                .collect();
            holds &= private.len() >= 2;
            pairs.push(PairCheck { x1, x2, private });
        }
    }
    OrientationCheck {
        v1: vertices(v1),
        v2: vertices(v2),
        pairs,
        holds,
    }
}

/// Bipartite graphs with minimum degree at least 2 where every pair of the
/// smaller side with a common neighbour has two private common neighbours.
/// With equal sides both orientations are tried.
pub fn in_family_g2b(g: &Graph) -> FamilyVerdict {
    if !g.is_connected() {
        return not_applicable(Family::G2B, "graph is not connected");
    }
    if g.min_degree() < 2 {
        return not_applicable(
            Family::G2B,
            format!("minimum degree {} is below 2", g.min_degree()),
        );
    }
    let Some((a, b)) = g.two_coloring() else {
        return not_applicable(Family::G2B, "graph is not bipartite");
    };
    let (small, large) = if a.count_ones() <= b.count_ones() {
        (a, b)
    } else {
        (b, a)
    };
    let all = g.vertex_mask();
    let mut orientations = vec![pair_condition(g, all, small, large, all)];
    if small.count_ones() == large.count_ones() && !orientations[0].holds {
        orientations.push(pair_condition(g, all, large, small, all));
    }
    let member = orientations.iter().any(|o| o.holds);
    if member {
        orientations.retain(|o| o.holds);
        orientations.truncate(1);
    }
    FamilyVerdict {
        family: Family::G2B,
        member,
        evidence: Evidence::Bipartite { orientations },
    }
}

/// Candidate graphs for the non-bipartite family, derived by enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NbList {
    /// Largest order searched.
    pub max_n: usize,
    pub graphs: Vec<Graph>,
}

const SHIPPED_NB_LIST: &str = include_str!("../data/g2nb_candidates.g6");

impl NbList {
    /// The list shipped with the crate.
    pub fn shipped() -> NbList {
        NbList::parse(SHIPPED_NB_LIST).expect("shipped candidate list parses")
    }

    /// Candidates of order at most `n`.
    pub fn restricted(&self, n: usize) -> NbList {
        NbList {
            max_n: self.max_n.min(n),
            graphs: self.graphs.iter().filter(|g| g.n() <= n).cloned().collect(),
        }
    }

    pub fn position(&self, g: &Graph) -> Option<usize> {
        self.graphs.iter().position(|c| is_isomorphic(c, g))
    }

    /// graph6 lines after a `# max_n N` header.
    pub fn to_text(&self) -> String {
        let mut out = format!("# max_n {}\n", self.max_n);
        for g in &self.graphs {
            out.push_str(&write_graph6(g));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<NbList> {
        let mut max_n = None;
        let mut graphs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix('#') {
                if let Some(v) = rest.trim().strip_prefix("max_n") {
                    let v = v.trim().parse().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("bad max_n '{}'", v.trim()),
                    })?;
                    max_n = Some(v);
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            graphs.push(parse_graph6(line).map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse {
                    line: i + 1,
                    message,
                },
                other => other,
            })?);
        }
        let max_n = max_n.ok_or_else(|| Error::Parse {
            line: 1,
            message: "missing '# max_n' header".into(),
        })?;
        Ok(NbList { max_n, graphs })
    }
}

/// All connected non-bipartite graphs with minimum degree at least 2 and
/// `gamma == nu` on at most `max_n` vertices, one per isomorphism class,
/// ordered by order and then canonical form.
pub fn derive_g2nb_candidates(max_n: usize) -> Result<NbList> {
    if max_n > MAX_ENUMERATION_ORDER {
        return Err(Error::Capacity(format!(
            "candidate derivation supports max_n <= {MAX_ENUMERATION_ORDER}, got {max_n}"
        )));
    }
    let constraints = EnumerationConstraints {
        min_degree: Some(2),
        bipartite: false,
        non_bipartite: true,
    };
    let mut graphs = Vec::new();
    for n in 3..=max_n {
        let level: Vec<Graph> = enumerate_connected(n, constraints)?.collect();
        let keep: Vec<Result<bool>> = {
            use rayon::prelude::*;
            level
                .par_iter()
                .map(|g| Ok(graph_gamma(g)?.value == graph_nu(g)?.value))
                .collect()
        };
        for (g, k) in level.into_iter().zip(keep) {
            if k? {
                graphs.push(g);
            }
        }
    }
    Ok(NbList { max_n, graphs })
}

pub fn in_family_g2nb(g: &Graph, nb: &NbList) -> FamilyVerdict {
    if !g.is_connected() {
        return not_applicable(Family::G2NB, "graph is not connected");
    }
    if g.min_degree() < 2 {
        return not_applicable(
            Family::G2NB,
            format!("minimum degree {} is below 2", g.min_degree()),
        );
    }
    if g.is_bipartite() {
        return not_applicable(Family::G2NB, "graph is bipartite");
    }
    let index = nb.position(g);
    FamilyVerdict {
        family: Family::G2NB,
        member: index.is_some(),
        evidence: Evidence::Candidate {
            index,
            candidates: nb.graphs.len(),
            max_n: nb.max_n,
        },
    }
}

/// Connected, order at least 3, every vertex a leaf or a stem.
pub fn is_generalized_corona(g: &Graph) -> FamilyVerdict {
    let leaves = g.leaves();
    let stems = g.stems();
    let other = g.vertex_mask() & !(leaves | stems);
    let member = g.is_connected() && g.n() >= 3 && other == 0;
    FamilyVerdict {
        family: Family::GeneralizedCorona,
        member,
        evidence: Evidence::LeafStem {
            leaves: vertices(leaves),
            stems: vertices(stems),
            other: vertices(other),
        },
    }
}

/// Minimum degree 1: `K2`, generalized coronas, and graphs whose
/// components after deleting leaves and stems are each trivial, a
/// bipartite graph with private pair neighbours away from the stems, or a
/// candidate from `nb` whose domination number survives deleting any
/// non-empty set of its stem-adjacent vertices.
pub fn in_family_g1(g: &Graph, nb: &NbList) -> Result<FamilyVerdict> {
    if !g.is_connected() {
        return Ok(not_applicable(Family::G1, "graph is not connected"));
    }
    if g.min_degree() != 1 {
        return Ok(not_applicable(
            Family::G1,
            format!("minimum degree is {}, not 1", g.min_degree()),
        ));
    }
    if g.n() == 2 {
        return Ok(FamilyVerdict {
            family: Family::G1,
            member: true,
            evidence: Evidence::SingleEdge,
        });
    }
    let leaves = g.leaves();
    let stems = g.stems();
    let rest = g.vertex_mask() & !(leaves | stems);
    if rest == 0 {
        return Ok(FamilyVerdict {
            family: Family::G1,
            member: true,
            evidence: is_generalized_corona(g).evidence,
        });
    }
    let near_stems = mask_iter(stems).fold(0, |acc, s| acc | g.neighbors(s));
    let sub = g.induced(rest);
    let index: Vec<usize> = vertices(rest);
    let mut components = Vec::new();
    for local in sub.components() {
        let comp = mask_iter(local).fold(0u64, |acc, v| acc | bit(index[v]));
        components.push(check_component(g, comp, comp & near_stems, nb)?);
    }
    Ok(FamilyVerdict {
        family: Family::G1,
        member: components.iter().all(|c| c.accepted_by.is_some()),
        evidence: Evidence::Components {
            leaves: vertices(leaves),
            stems: vertices(stems),
            components,
        },
    })
}

fn check_component(g: &Graph, comp: u64, attached: u64, nb: &NbList) -> Result<ComponentCheck> {
    let mut check = ComponentCheck {
        vertices: vertices(comp),
        attached: vertices(attached),
        accepted_by: None,
        reason: String::new(),
        candidate_pathway: false,
    };
    if comp.count_ones() == 1 {
        check.accepted_by = Some(ComponentRule::Trivial);
        check.reason = "trivial component".into();
        return Ok(check);
    }
    let gj = g.induced(comp);
    let local: Vec<usize> = vertices(comp);
    let to_global = |m: u64| mask_iter(m).fold(0u64, |acc, v| acc | bit(local[v]));

    if let Some((a, b)) = gj.two_coloring() {
        let (a, b) = (to_global(a), to_global(b));
        let (v1, v2) = if a.count_ones() <= b.count_ones() {
            (a, b)
        } else {
            (b, a)
        };
        if v1.count_ones() == v2.count_ones() {
            check.reason = format!("bipartite with equal sides of size {}", v1.count_ones());
            return Ok(check);
        }
        if attached == 0 || attached & !v2 != 0 {
            check.reason = "stem-adjacent vertices are not all on the larger side".into();
            return Ok(check);
        }
        let o = pair_condition(g, comp, v1, v2, !attached);
        if o.holds {
            check.accepted_by = Some(ComponentRule::Bipartite);
            check.reason = format!("pair condition holds for {} pairs", o.pairs.len());
        } else {
            let bad = o
                .pairs
                .iter()
                .find(|p| p.private.len() < 2)
                .expect("a failing pair");
            check.reason = format!(
                "pair ({}, {}) has {} private neighbours away from stems",
                bad.x1,
                bad.x2,
                bad.private.len()
            );
        }
        return Ok(check);
    }

    check.candidate_pathway = true;
    let Some(index) = nb.position(&gj) else {
        check.reason = format!(
            "non-bipartite and not isomorphic to any of {} candidates",
            nb.graphs.len()
        );
        return Ok(check);
    };
    let base = graph_gamma(&gj)?.value;
    let att: Vec<usize> = mask_iter(attached).collect();
    for subset in 1u64..(1u64 << att.len()) {
        let removed = mask_iter(subset).fold(0u64, |acc, i| acc | bit(att[i]));
        let reduced = g.induced(comp & !removed);
        let gamma = if reduced.n() == 0 {
            0
        } else {
            graph_gamma(&reduced)?.value
        };
        if gamma != base {
            check.reason = format!(
                "candidate {index}, but deleting {:?} changes gamma from {base} to {gamma}",
                vertices(removed)
            );
            return Ok(check);
        }
    }
    check.accepted_by = Some(ComponentRule::StableCandidate { index });
    check.reason = format!("candidate {index} with gamma {base} stable under stem-side deletions");
    Ok(check)
}

/// Membership in the union of families whose `G^{4,2}`-type dilations have
/// `gamma == nu`, dispatching on minimum degree and bipartiteness.
pub fn in_gamma0_extremal_family(g: &Graph, nb: &NbList) -> Result<FamilyVerdict> {
    match g.min_degree() {
        0 => Ok(not_applicable(Family::G1, "graph has an isolated vertex")),
        1 => in_family_g1(g, nb),
        _ if g.is_bipartite() => Ok(in_family_g2b(g)),
        _ => Ok(in_family_g2nb(g, nb)),
    }
}

pub fn keg_verdict(g: &Graph) -> Result<FamilyVerdict> {
    let tau = graph_tau(g)?.value;
    let nu = graph_nu(g)?.value;
    Ok(FamilyVerdict {
        family: Family::Keg,
        member: tau == nu,
        evidence: Evidence::Parameters {
            order: g.n(),
            tau,
            nu,
        },
    })
}

/// `K_{2 nu + 1}`.
pub fn odd_complete_verdict(g: &Graph) -> Result<FamilyVerdict> {
    let tau = graph_tau(g)?.value;
    let nu = graph_nu(g)?.value;
    Ok(FamilyVerdict {
        family: Family::KOddComplete,
        member: g.is_complete() && g.n() == 2 * nu + 1,
        evidence: Evidence::Parameters {
            order: g.n(),
            tau,
            nu,
        },
    })
}

/// `gamma(H)` for every dilation `H` of the given class: `gamma(G)` on
/// dilations without additional vertices, `tau(G)` when every hyperedge
/// has one.
pub fn predict_gamma(g: &Graph, class: DilationClass) -> Result<usize> {
    if g.edge_count() == 0 {
        return Err(Error::Domain("graph has no edges".into()));
    }
    match class {
        DilationClass::Gamma0 => Ok(graph_gamma(g)?.value),
        DilationClass::Gamma1 => Ok(graph_tau(g)?.value),
        DilationClass::Mixed => Err(Error::Domain(
            "no single value is determined for mixed dilations".into(),
        )),
    }
}

/// Where `gamma(H)` falls in `[nu, 2 nu]` for dilations with additional
/// vertices on every edge. `Strict` carries the realized value `tau(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", content = "gamma", rename_all = "snake_case")]
pub enum ExtremalClass {
    Equal,
    Double,
    Strict(usize),
}

pub fn extremal_class_gamma1(g: &Graph) -> Result<ExtremalClass> {
    let tau = graph_tau(g)?.value;
    let nu = graph_nu(g)?.value;
    Ok(if tau == nu {
        ExtremalClass::Equal
    } else if g.is_complete() && g.n() == 2 * nu + 1 {
        ExtremalClass::Double
    } else {
        ExtremalClass::Strict(tau)
    })
}
