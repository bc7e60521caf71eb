//! Dilations of a graph and their block structure.
//!
//! A dilation replaces every vertex `v_i` of `G` by a copy block of `s_i`
//! vertices (containing `v_i` itself) and every edge `e = v_i v_j` by the
//! hyperedge `block(v_i) ∪ block(v_j) ∪ extra(e)`, where `extra(e)` holds
//! `a_e` additional vertices of degree one. All blocks are pairwise
//! disjoint.
//!
//! Vertex numbering of the produced hypergraph: support vertex `v_i` keeps
//! index `i`; copies follow block by block in vertex order; additional
//! vertices follow edge by edge in the order of [`Graph::edges`]. Hyperedge
//! `t` corresponds to graph edge `t`.

mod berge;

pub use berge::{
    builtin_hypergraph, random_berge, search_berge_witness, verify_berge_witness, BergeOutcome,
    BergeSearch, BergeWitness,
};

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DilationSpec {
    /// Declared rank cap, at least 3.
    pub k: usize,
    /// Copy-block size per vertex, including the vertex itself.
    pub copy_sizes: Vec<usize>,
    /// Additional-block size per edge, indexed like [`Graph::edges`].
    pub extra_sizes: Vec<usize>,
}

impl DilationSpec {
    pub fn uniform(g: &Graph, k: usize, s: usize, a: usize) -> Self {
        DilationSpec {
            k,
            copy_sizes: vec![s; g.n()],
            extra_sizes: vec![a; g.edge_count()],
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.k < 3 {
            return Err(Error::Domain(format!(
                "rank cap k must be at least 3, got {}",
                self.k
            )));
        }
        if self.copy_sizes.len() != g.n() || self.extra_sizes.len() != g.edge_count() {
            return Err(Error::Domain(format!(
                "spec has {} copy sizes and {} extra sizes for a graph with {} vertices and {} edges",
                self.copy_sizes.len(),
                self.extra_sizes.len(),
                g.n(),
                g.edge_count()
            )));
        }
        for (v, &s) in self.copy_sizes.iter().enumerate() {
            if s == 0 || s >= self.k {
                return Err(Error::Domain(format!(
                    "copy size of vertex {v} is {s}, must lie in 1..{}",
                    self.k
                )));
            }
        }
        for (t, (u, v)) in g.edges().into_iter().enumerate() {
            let (su, sv, a) = (self.copy_sizes[u], self.copy_sizes[v], self.extra_sizes[t]);
            if su + sv > self.k {
                return Err(Error::Constraint {
                    edge: (u, v),
                    message: format!("s_i + s_j = {} exceeds k = {}", su + sv, self.k),
                });
            }
            if su + sv + a > self.k {
                return Err(Error::Constraint {
                    edge: (u, v),
                    message: format!(
                        "additional block of size {a} exceeds k - s_i - s_j = {}",
                        self.k - su - sv
                    ),
                });
            }
        }
        Ok(())
    }
}

/// How the vertices of a dilation split into blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockWitness {
    /// `support[i]` is the hypergraph vertex playing `v_i`.
    pub support: Vec<usize>,
    /// Copy block of each graph vertex; contains `support[i]`.
    pub copy_blocks: Vec<Vec<usize>>,
    /// Additional block of each graph edge, possibly empty.
    pub extra_blocks: Vec<Vec<usize>>,
    /// Graph edges in index order.
    pub graph_edges: Vec<(usize, usize)>,
    /// `edge_map[t]` is the hyperedge corresponding to graph edge `t`.
    pub edge_map: Vec<usize>,
}

impl BlockWitness {
    /// Checks the block structure against `h` alone.
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        let n = self.support.len();
        let m = self.graph_edges.len();
        let fail = |msg: String| Err(Error::Witness(msg));
        if self.copy_blocks.len() != n || self.extra_blocks.len() != m || self.edge_map.len() != m {
            return fail("block counts disagree with support map and edge list".into());
        }
        if h.edge_count() != m {
            return fail(format!(
                "witness maps {m} edges, hypergraph has {}",
                h.edge_count()
            ));
        }
        let mut owner = vec![false; h.order()];
        let blocks = self.copy_blocks.iter().chain(self.extra_blocks.iter());
        for block in blocks {
            for &x in block {
                if x >= h.order() {
                    return fail(format!("block vertex {x} outside the hypergraph"));
                }
                if owner[x] {
                    return fail(format!("vertex {x} lies in two blocks"));
                }
                owner[x] = true;
            }
        }
        if let Some(x) = owner.iter().position(|&o| !o) {
            return fail(format!("vertex {x} lies in no block"));
        }
        for (i, block) in self.copy_blocks.iter().enumerate() {
            if !block.contains(&self.support[i]) {
                return fail(format!("copy block {i} omits its support vertex"));
            }
        }
        let mut hit = vec![false; m];
        for (t, &(u, v)) in self.graph_edges.iter().enumerate() {
            let target = self.edge_map[t];
            if target >= m || hit[target] {
                return fail("edge correspondence is not a bijection".into());
            }
            hit[target] = true;
            if u >= n || v >= n || u == v {
                return fail(format!("graph edge {t} = ({u}, {v}) is invalid"));
            }
            let mut expected: Vec<usize> = self.copy_blocks[u]
                .iter()
                .chain(&self.copy_blocks[v])
                .chain(&self.extra_blocks[t])
                .copied()
                .collect();
            expected.sort_unstable();
            if expected != h.edge_vertices(target) {
                return fail(format!(
                    "hyperedge {target} is not the union of the blocks of ({u}, {v})"
                ));
            }
        }
        Ok(())
    }

    /// Validates against both the hypergraph and its support graph.
    pub fn validate_for(&self, g: &Graph, h: &Hypergraph) -> Result<()> {
        if self.support.len() != g.n() || self.graph_edges != g.edges() {
            return Err(Error::Witness(
                "witness was built for a different graph".into(),
            ));
        }
        self.validate(h)
    }

    pub fn copy_sizes(&self) -> Vec<usize> {
        self.copy_blocks.iter().map(Vec::len).collect()
    }

    pub fn extra_sizes(&self) -> Vec<usize> {
        self.extra_blocks.iter().map(Vec::len).collect()
    }

    /// The natural Berge witness: support map and edge correspondence.
    pub fn berge_witness(&self) -> BergeWitness {
        BergeWitness {
            injection: self.support.clone(),
            edge_map: self.edge_map.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dilation {
    pub hypergraph: Hypergraph,
    pub witness: BlockWitness,
    pub declared_rank: usize,
    pub rank: usize,
}

impl Dilation {
    /// True when no hyperedge reaches the declared rank.
    pub fn rank_below_cap(&self) -> bool {
        self.rank < self.declared_rank
    }

    pub fn class(&self) -> DilationClass {
        class_of(&self.witness)
    }
}

pub fn dilate(g: &Graph, spec: &DilationSpec) -> Result<Dilation> {
    if g.edge_count() == 0 {
        return Err(Error::Domain("dilations need at least one edge".into()));
    }
    spec.validate(g)?;
    let n = g.n();
    let edges = g.edges();
    let mut next = n;
    let copy_blocks: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut block = vec![i];
            block.extend(next..next + spec.copy_sizes[i] - 1);
            next += spec.copy_sizes[i] - 1;
            block
        })
        .collect();
    let extra_blocks: Vec<Vec<usize>> = spec
        .extra_sizes
        .iter()
        .map(|&a| {
            let block: Vec<usize> = (next..next + a).collect();
            next += a;
            block
        })
        .collect();
    let hyperedges: Vec<Vec<usize>> = edges
        .iter()
        .enumerate()
        .map(|(t, &(u, v))| {
            let mut e: Vec<usize> = copy_blocks[u]
                .iter()
                .chain(&copy_blocks[v])
                .chain(&extra_blocks[t])
                .copied()
                .collect();
            e.sort_unstable();
            e
        })
        .collect();
    let hypergraph = Hypergraph::new(next, hyperedges)?;
    let rank = hypergraph.rank();
    let witness = BlockWitness {
        support: (0..n).collect(),
        copy_blocks,
        extra_blocks,
        edge_map: (0..edges.len()).collect(),
        graph_edges: edges,
    };
    Ok(Dilation {
        hypergraph,
        witness,
        declared_rank: spec.k,
        rank,
    })
}

/// `G^{k,s}`: the `k`-uniform dilation with copy blocks of size `s` and
/// additional blocks of size `k - 2s`.
pub fn generalized_power(g: &Graph, k: usize, s: usize) -> Result<Dilation> {
    if k < 3 {
        return Err(Error::Domain(format!("k must be at least 3, got {k}")));
    }
    if s == 0 || 2 * s > k {
        return Err(Error::Domain(format!(
            "s must satisfy 1 <= s <= k/2, got s = {s}, k = {k}"
        )));
    }
    dilate(g, &DilationSpec::uniform(g, k, s, k - 2 * s))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DilationClass {
    /// No hyperedge has an additional vertex.
    Gamma0,
    /// Every hyperedge has at least one additional vertex.
    Gamma1,
    Mixed,
}

impl fmt::Display for DilationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DilationClass::Gamma0 => "Gamma0",
            DilationClass::Gamma1 => "Gamma1",
            DilationClass::Mixed => "Mixed",
        })
    }
}

fn class_of(w: &BlockWitness) -> DilationClass {
    let sizes = w.extra_sizes();
    if sizes.iter().all(|&a| a == 0) {
        DilationClass::Gamma0
    } else if sizes.iter().all(|&a| a >= 1) {
        DilationClass::Gamma1
    } else {
        DilationClass::Mixed
    }
}

pub fn classify_dilation(h: &Hypergraph, w: &BlockWitness) -> Result<DilationClass> {
    w.validate(h)?;
    Ok(class_of(w))
}

/// The four basic structural properties every dilation has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// Each hyperedge holds exactly two support vertices.
    pub two_support_vertices: bool,
    /// Support vertices are adjacent in H exactly when adjacent in G.
    pub support_adjacency: bool,
    /// Hyperedges are disjoint exactly when their graph edges are.
    pub edge_disjointness: bool,
    /// H is connected exactly when G is.
    pub connectivity: bool,
    pub graph_connected: bool,
    pub hypergraph_connected: bool,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.two_support_vertices
            && self.support_adjacency
            && self.edge_disjointness
            && self.connectivity
    }
}

pub fn check_structure(g: &Graph, h: &Hypergraph, w: &BlockWitness) -> StructureReport {
    let n = g.n();
    let edges = g.edges();
    let shapes_ok = w.support.len() == n
        && w.edge_map.len() == edges.len()
        && w.support.iter().all(|&x| x < h.order())
        && w.edge_map.iter().all(|&t| t < h.edge_count());

    let two_support_vertices = shapes_ok
        && h.edges()
            .iter()
            .all(|e| w.support.iter().filter(|&&x| e.contains(x)).count() == 2);

    let support_adjacency = shapes_ok
        && (0..n).all(|i| {
            (i + 1..n).all(|j| h.adjacent(w.support[i], w.support[j]) == g.has_edge(i, j))
        });

    let edge_disjointness = shapes_ok
        && (0..edges.len()).all(|s| {
            (s + 1..edges.len()).all(|t| {
                let (a, b) = (edges[s], edges[t]);
                let graph_disjoint = a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1;
                let hyper_disjoint = h.edge(w.edge_map[s]).is_disjoint(h.edge(w.edge_map[t]));
                graph_disjoint == hyper_disjoint
            })
        });

    let graph_connected = g.is_connected();
    let hypergraph_connected = h.is_connected();
    StructureReport {
        two_support_vertices,
        support_adjacency,
        edge_disjointness,
        connectivity: graph_connected == hypergraph_connected,
        graph_connected,
        hypergraph_connected,
    }
}

/// Class constraint for [`random_dilation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassRequest {
    Any,
    Gamma0,
    Gamma1,
    /// Some, but not all, hyperedges carry additional vertices.
    Mixed,
}

impl FromStr for ClassRequest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "any" => Ok(ClassRequest::Any),
            "gamma0" | "g0" => Ok(ClassRequest::Gamma0),
            "gamma1" | "g1" => Ok(ClassRequest::Gamma1),
            "mixed" => Ok(ClassRequest::Mixed),
            other => Err(Error::UnknownName(format!("dilation class '{other}'"))),
        }
    }
}

/// Samples a dilation of `g` with rank cap `k`, deterministic in all inputs.
pub fn random_dilation(g: &Graph, k: usize, seed: u64, class: ClassRequest) -> Result<Dilation> {
    if k < 3 {
        return Err(Error::Feasibility(format!("rank cap {k} is below 3")));
    }
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::Feasibility("graph has no edges".into()));
    }
    if class == ClassRequest::Mixed && m < 2 {
        return Err(Error::Feasibility(
            "a mixed dilation needs at least two edges".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Room reserved on every edge for additional vertices.
    let reserve = match class {
        ClassRequest::Gamma1 | ClassRequest::Mixed => 1,
        ClassRequest::Any | ClassRequest::Gamma0 => 0,
    };
    let n = g.n();
    let mut s = vec![0usize; n];
    for v in 0..n {
        let mut cap = k - 1;
        for w in g.neighbor_list(v) {
            let other = if s[w] == 0 { 1 } else { s[w] };
            cap = cap.min(k - reserve - other);
        }
        s[v] = rng.gen_range(1..=cap);
    }
    let edges = g.edges();
    let mut a: Vec<usize> = edges
        .iter()
        .map(|&(u, v)| {
            let room = k - s[u] - s[v];
            match class {
                ClassRequest::Gamma0 => 0,
                ClassRequest::Gamma1 => rng.gen_range(1..=room),
                ClassRequest::Any | ClassRequest::Mixed => rng.gen_range(0..=room),
            }
        })
        .collect();
    if class == ClassRequest::Mixed {
        let zero = rng.gen_range(0..m);
        let mut some = rng.gen_range(0..m - 1);
        if some >= zero {
            some += 1;
        }
        a[zero] = 0;
        if a[some] == 0 {
            let (u, v) = edges[some];
            a[some] = rng.gen_range(1..=k - s[u] - s[v]);
        }
    }
    dilate(
        g,
        &DilationSpec {
            k,
            copy_sizes: s,
            extra_sizes: a,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn cycle(p: usize) -> Graph {
        generate(&FamilySpec::Cycle(p)).unwrap()
    }

    #[test]
    fn triangle_with_one_extra_per_edge() {
        let g = cycle(3);
        let d = dilate(&g, &DilationSpec::uniform(&g, 3, 1, 1)).unwrap();
        assert_eq!(d.hypergraph.order(), 6);
        assert_eq!(d.hypergraph.edge_count(), 3);
        assert!(d.hypergraph.is_uniform(3));
        assert!(d.witness.extra_blocks.iter().all(|b| b.len() == 1));
        assert!(!d.rank_below_cap());
    }

    #[test]
    fn c5_power_6_3_is_gamma0() {
        let g = cycle(5);
        let d = dilate(&g, &DilationSpec::uniform(&g, 6, 3, 0)).unwrap();
        assert_eq!(d.hypergraph.order(), 15);
        assert_eq!(
            classify_dilation(&d.hypergraph, &d.witness).unwrap(),
            DilationClass::Gamma0
        );
    }

    #[test]
    fn oversize_extra_block_names_edge() {
        let g = generate(&FamilySpec::Complete(2)).unwrap();
        let spec = DilationSpec {
            k: 3,
            copy_sizes: vec![1, 1],
            extra_sizes: vec![5],
        };
        assert!(matches!(
            dilate(&g, &spec),
            Err(Error::Constraint { edge: (0, 1), .. })
        ));
    }

    #[test]
    fn powers_of_c5() {
        let g = cycle(5);
        let p41 = generalized_power(&g, 4, 1).unwrap();
        assert_eq!(p41.hypergraph.order(), 15);
        assert!(p41.hypergraph.is_uniform(4));
        assert_eq!(p41.class(), DilationClass::Gamma1);
        let p42 = generalized_power(&g, 4, 2).unwrap();
        assert_eq!(p42.hypergraph.order(), 10);
        assert_eq!(p42.class(), DilationClass::Gamma0);
        assert!(generalized_power(&g, 4, 3).is_err());
    }

    #[test]
    fn kth_power_has_no_copies() {
        let g = cycle(3);
        let d = generalized_power(&g, 3, 1).unwrap();
        assert!(d.witness.copy_blocks.iter().all(|b| b.len() == 1));
        assert_eq!(d.hypergraph.order(), 6);
    }

    #[test]
    fn mixed_class() {
        let g = cycle(3);
        let spec = DilationSpec {
            k: 3,
            copy_sizes: vec![1, 1, 1],
            extra_sizes: vec![1, 0, 0],
        };
        let d = dilate(&g, &spec).unwrap();
        assert_eq!(
            classify_dilation(&d.hypergraph, &d.witness).unwrap(),
            DilationClass::Mixed
        );
    }

    #[test]
    fn structure_on_disconnected_graph() {
        let g = cycle(3).disjoint_union(&cycle(3)).unwrap();
        let d = generalized_power(&g, 4, 1).unwrap();
        let r = check_structure(&g, &d.hypergraph, &d.witness);
        assert!(r.all_hold());
        assert!(!r.graph_connected && !r.hypergraph_connected);
    }

    #[test]
    fn fake_witness_rejected() {
        // Vertex 3 is an additional vertex shared by two hyperedges.
        let h = Hypergraph::new(4, vec![vec![0, 1, 3], vec![1, 2, 3]]).unwrap();
        let w = BlockWitness {
            support: vec![0, 1, 2],
            copy_blocks: vec![vec![0], vec![1], vec![2]],
            extra_blocks: vec![vec![3], vec![3]],
            graph_edges: vec![(0, 1), (1, 2)],
            edge_map: vec![0, 1],
        };
        assert!(matches!(w.validate(&h), Err(Error::Witness(_))));
        assert!(classify_dilation(&h, &w).is_err());
    }

    #[test]
    fn isolated_vertices_allowed_edgeless_rejected() {
        let mut g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let d = dilate(&g, &DilationSpec::uniform(&g, 4, 2, 0)).unwrap();
        assert_eq!(d.hypergraph.order(), 6);
        assert_eq!(d.hypergraph.degree(2), 0);
        g = Graph::empty(2).unwrap();
        assert!(dilate(&g, &DilationSpec::uniform(&g, 4, 1, 0)).is_err());
    }

    #[test]
    fn random_dilation_classes_and_determinism() {
        let g = cycle(5);
        let d = random_dilation(&g, 5, 1, ClassRequest::Gamma1).unwrap();
        assert_eq!(d.class(), DilationClass::Gamma1);
        let d0 = random_dilation(&g, 4, 2, ClassRequest::Gamma0).unwrap();
        assert!(d0.witness.extra_sizes().iter().all(|&a| a == 0));
        let dm = random_dilation(&g, 4, 3, ClassRequest::Mixed).unwrap();
        assert_eq!(dm.class(), DilationClass::Mixed);
        assert_eq!(random_dilation(&g, 5, 1, ClassRequest::Gamma1).unwrap(), d);
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        assert!(matches!(
            random_dilation(&k2, 4, 0, ClassRequest::Mixed),
            Err(Error::Feasibility(_))
        ));
        assert!(random_dilation(&g, 2, 0, ClassRequest::Any).is_err());
    }
}
