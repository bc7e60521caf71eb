//! Berge-G witnesses: verification and exact desk-scale search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// Vertex injection `V(G) -> V(H)` plus edge bijection `E(G) -> E(H)`,
/// with graph edges indexed as in [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeWitness {
    pub injection: Vec<usize>,
    pub edge_map: Vec<usize>,
}

fn check_sizes(g: &Graph, h: &Hypergraph) -> Result<()> {
    if g.edge_count() != h.edge_count() {
        return Err(Error::Structural(format!(
            "graph has {} edges, hypergraph has {}",
            g.edge_count(),
            h.edge_count()
        )));
    }
    Ok(())
}

pub fn verify_berge_witness(g: &Graph, h: &Hypergraph, w: &BergeWitness) -> Result<bool> {
    check_sizes(g, h)?;
    let m = g.edge_count();
    if w.injection.len() != g.n() || w.edge_map.len() != m {
        return Ok(false);
    }
    let mut used = vec![false; h.order()];
    for &x in &w.injection {
        if x >= h.order() || used[x] {
            return Ok(false);
        }
        used[x] = true;
    }
    let mut hit = vec![false; m];
    for &t in &w.edge_map {
        if t >= m || hit[t] {
            return Ok(false);
        }
        hit[t] = true;
    }
    Ok(g.edges().iter().zip(&w.edge_map).all(|(&(u, v), &t)| {
        h.edge(t).contains(w.injection[u]) && h.edge(t).contains(w.injection[v])
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BergeOutcome {
    Found(BergeWitness),
    NotBerge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BergeSearch {
    pub outcome: BergeOutcome,
    pub nodes: u64,
}

/// Backtracks over vertex injections, largest graph degree first. Each
/// partial injection is kept only while every graph edge can still be
/// matched to a distinct compatible hyperedge (a bipartite matching test),
/// and a complete injection is accepted when that matching is perfect.
pub fn search_berge_witness(g: &Graph, h: &Hypergraph, node_cap: u64) -> Result<BergeSearch> {
    check_sizes(g, h)?;
    if g.n() > h.order() {
        return Ok(BergeSearch {
            outcome: BergeOutcome::NotBerge,
            nodes: 0,
        });
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut state = SearchState {
        g,
        h,
        edges: g.edges(),
        order,
        assign: vec![None; g.n()],
        used: vec![false; h.order()],
        nodes: 0,
        cap: node_cap,
        deepest: 0,
        h_degree: (0..h.order()).map(|x| h.degree(x)).collect(),
    };
    let found = state.extend(0)?;
    let outcome = match found {
        Some(w) => BergeOutcome::Found(w),
        None => BergeOutcome::NotBerge,
    };
    Ok(BergeSearch {
        outcome,
        nodes: state.nodes,
    })
}

struct SearchState<'a> {
    g: &'a Graph,
    h: &'a Hypergraph,
    edges: Vec<(usize, usize)>,
    order: Vec<usize>,
    assign: Vec<Option<usize>>,
    used: Vec<bool>,
    nodes: u64,
    cap: u64,
    deepest: usize,
    h_degree: Vec<usize>,
}

impl SearchState<'_> {
    fn extend(&mut self, depth: usize) -> Result<Option<BergeWitness>> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::Budget {
                nodes: self.cap,
                detail: format!(
                    "deepest partial injection fixed {} of {} vertices",
                    self.deepest,
                    self.g.n()
                ),
            });
        }
        self.deepest = self.deepest.max(depth);
        let matching = self.edge_matching();
        let Some(matching) = matching else {
            return Ok(None);
        };
        if depth == self.order.len() {
            return Ok(Some(BergeWitness {
                injection: self.assign.iter().map(|a| a.expect("complete")).collect(),
                edge_map: matching,
            }));
        }
        let u = self.order[depth];
        let need = self.g.degree(u);
        let placed: Vec<usize> = self
            .g
            .neighbor_list(u)
            .into_iter()
            .filter_map(|w| self.assign[w])
            .collect();
        for x in 0..self.h.order() {
            if self.used[x] || self.h_degree[x] < need {
                continue;
            }
            if !placed.iter().all(|&y| self.h.adjacent(x, y)) {
                continue;
            }
            self.assign[u] = Some(x);
            self.used[x] = true;
            let r = self.extend(depth + 1)?;
            self.used[x] = false;
            self.assign[u] = None;
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }

    fn compatible(&self, t: usize, e: usize) -> bool {
        let (u, v) = self.edges[t];
        let edge = self.h.edge(e);
        [u, v]
            .iter()
            .all(|&w| self.assign[w].is_none_or(|x| edge.contains(x)))
    }

    /// A matching of every graph edge into distinct compatible hyperedges,
    /// found with augmenting paths.
    fn edge_matching(&self) -> Option<Vec<usize>> {
        let m = self.edges.len();
        let mut owner: Vec<Option<usize>> = vec![None; m];
        fn augment(
            s: &SearchState<'_>,
            t: usize,
            seen: &mut [bool],
            owner: &mut [Option<usize>],
        ) -> bool {
            for e in 0..owner.len() {
                if seen[e] || !s.compatible(t, e) {
                    continue;
                }
                seen[e] = true;
                if owner[e].is_none_or(|o| augment(s, o, seen, owner)) {
                    owner[e] = Some(t);
                    return true;
                }
            }
            false
        }
        for t in 0..m {
            let mut seen = vec![false; m];
            if !augment(self, t, &mut seen, &mut owner) {
                return None;
            }
        }
        let mut map = vec![0; m];
        for (e, o) in owner.iter().enumerate() {
            map[o.expect("perfect matching")] = e;
        }
        Some(map)
    }
}

/// Named hypergraph fixtures.
pub fn builtin_hypergraph(name: &str) -> Result<Hypergraph> {
    match name {
        "fano" => Hypergraph::new(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        ),
        other => Err(Error::UnknownName(format!("hypergraph '{other}'"))),
    }
}

/// A Berge-G that need not be a dilation: every hyperedge is its graph
/// edge plus a random subset of the other vertices, drawn from `V(G)` and
/// `extra` fresh vertices. The identity injection is returned as witness.
pub fn random_berge(g: &Graph, extra: usize, seed: u64) -> (Hypergraph, BergeWitness) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = g.n() + extra;
    let edges: Vec<Vec<usize>> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let mut e = vec![u, v];
            e.extend((0..order).filter(|&x| x != u && x != v && rng.gen_ratio(1, 4)));
            e.sort_unstable();
            e
        })
        .collect();
    let m = edges.len();
    let h = Hypergraph::new(order, edges).expect("random Berge edges are valid");
    (
        h,
        BergeWitness {
            injection: (0..g.n()).collect(),
            edge_map: (0..m).collect(),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dilation::generalized_power;
    use crate::graph::{generate, FamilySpec};

    const CAP: u64 = 1_000_000;

    #[test]
    fn identity_witness_on_a_graph() {
        let g = generate(&FamilySpec::Cycle(4)).unwrap();
        let h = g.to_hypergraph();
        let w = BergeWitness {
            injection: (0..4).collect(),
            edge_map: (0..4).collect(),
        };
        assert!(verify_berge_witness(&g, &h, &w).unwrap());
    }

    #[test]
    fn dilation_natural_witness_verifies() {
        let g = generate(&FamilySpec::Cycle(5)).unwrap();
        let d = generalized_power(&g, 5, 2).unwrap();
        assert!(verify_berge_witness(&g, &d.hypergraph, &d.witness.berge_witness()).unwrap());
    }

    #[test]
    fn edge_count_mismatch_is_structural() {
        let g = generate(&FamilySpec::Complete(3)).unwrap();
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert!(matches!(
            verify_berge_witness(
                &g,
                &h,
                &BergeWitness {
                    injection: vec![],
                    edge_map: vec![]
                }
            ),
            Err(Error::Structural(_))
        ));
        assert!(matches!(
            search_berge_witness(&g, &h, CAP),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn repeated_hyperedge_hosts_a_path() {
        let g = generate(&FamilySpec::Path(3)).unwrap();
        let h = Hypergraph::new(3, vec![vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        let r = search_berge_witness(&g, &h, CAP).unwrap();
        let BergeOutcome::Found(w) = r.outcome else {
            panic!("expected a witness")
        };
        assert!(verify_berge_witness(&g, &h, &w).unwrap());
    }

    #[test]
    fn disjoint_triples_do_not_host_a_triangle() {
        let g = generate(&FamilySpec::Complete(3)).unwrap();
        let h = Hypergraph::new(9, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]).unwrap();
        assert_eq!(
            search_berge_witness(&g, &h, CAP).unwrap().outcome,
            BergeOutcome::NotBerge
        );
    }

    #[test]
    fn budget_exhaustion() {
        let g = generate(&FamilySpec::Cycle(5)).unwrap();
        let h = generate(&FamilySpec::Path(6)).unwrap().to_hypergraph();
        assert_eq!(
            search_berge_witness(&g, &h, CAP).unwrap().outcome,
            BergeOutcome::NotBerge
        );
        assert!(matches!(
            search_berge_witness(&g, &h, 2),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn fano_plane_axioms() {
        let f = builtin_hypergraph("fano").unwrap();
        assert_eq!((f.order(), f.edge_count()), (7, 7));
        assert!(f.is_uniform(3));
        for a in 0..7 {
            assert_eq!(f.degree(a), 3);
            for b in a + 1..7 {
                assert_eq!(f.edge(a).intersection_count(f.edge(b)), 1);
            }
        }
        assert!(builtin_hypergraph("petersen").is_err());
    }

    #[test]
    fn random_berge_witness_verifies() {
        let g = generate(&FamilySpec::Cycle(5)).unwrap();
        let (h, w) = random_berge(&g, 3, 11);
        assert!(verify_berge_witness(&g, &h, &w).unwrap());
    }
}
