//! Finite simple graphs on at most 64 vertices.
//!
//! Each adjacency row is a single `u64`, so neighbourhood tests and set
//! operations in the solvers are word operations. Vertices are always
//! `0..n`; optional string labels ride along for display only and take no
//! part in equality or hashing.

mod canon;
mod enumerate;
mod family;
mod format;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use enumerate::{enumerate_connected, EnumerationConstraints, MAX_ENUMERATION_ORDER};
pub use family::{generate, vertex_amalgam, FamilySpec};
pub use format::{
    parse_edge_list, parse_graph, parse_graph6, write_edge_list, write_graph6, GraphFormat,
};

use serde::Serialize;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Largest vertex count of the bit-packed representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, Default)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates over the set bits of a mask in increasing order.
pub(crate) fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "graph has {n} vertices, the bit-packed core holds at most {MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
            labels: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`; self-loops and repeated edges are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Domain(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Domain(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::Domain(format!("duplicate edge ({u}, {v})")));
        }
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
        Ok(())
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.n == MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "cannot grow past {MAX_VERTICES} vertices"
            )));
        }
        self.rows.push(0);
        if let Some(labels) = self.labels.as_mut() {
            labels.push(self.n.to_string());
        }
        self.n += 1;
        Ok(self.n - 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bit mask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbor_list(&self, v: usize) -> Vec<usize> {
        mask_iter(self.rows[v]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order. Edge indices used
    /// throughout the crate refer to positions in this list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in mask_iter(self.rows[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// All vertices as a mask.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Domain(format!(
                "{} labels supplied for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in mask_iter(self.rows[u]) {
                rows[perm[u]] |= bit(perm[v]);
            }
        }
        Graph {
            n: self.n,
            rows,
            labels: None,
        }
    }

    /// Subgraph induced by `keep`, relabelled in increasing vertex order.
    pub fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let order: Vec<usize> = mask_iter(keep).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| {
                mask_iter(self.rows[v] & keep)
                    .map(|w| bit(index[w]))
                    .fold(0, |a, b| a | b)
            })
            .collect();
        Graph {
            n: order.len(),
            rows,
            labels: self
                .labels
                .as_ref()
                .map(|l| order.iter().map(|&v| l[v].clone()).collect()),
        }
    }

    /// Graph with `removed` deleted (remaining vertices keep their order).
    pub fn without(&self, removed: u64) -> Graph {
        self.induced(self.vertex_mask() & !removed)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v)?;
        }
        Ok(g)
    }

    /// Vertices reachable from `start`, as a mask.
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_iter(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components as masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_of(left.trailing_zeros() as usize);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// The empty graph counts as disconnected; K1 is connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_of(0) == self.vertex_mask()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Two-colouring by BFS from the smallest vertex of each component
    /// (that vertex gets side 0), or `None` when an odd cycle exists.
    pub fn two_coloring(&self) -> Option<(u64, u64)> {
        let mut side = [0u64; 2];
        for comp in self.components() {
            let root = comp.trailing_zeros() as usize;
            let mut color = [bit(root), 0u64];
            let mut frontier = bit(root);
            let mut depth = 0;
            let mut seen = bit(root);
            while frontier != 0 {
                let mut next = 0;
                for v in mask_iter(frontier) {
                    next |= self.rows[v];
                }
                depth ^= 1;
                let fresh = next & !seen;
                color[depth] |= fresh;
                seen |= fresh;
                frontier = fresh;
            }
            for part in color {
                for v in mask_iter(part) {
                    if self.rows[v] & part != 0 {
                        return None;
                    }
                }
            }
            side[0] |= color[0];
            side[1] |= color[1];
        }
        Some((side[0], side[1]))
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn leaves(&self) -> u64 {
        (0..self.n)
            .filter(|&v| self.degree(v) == 1)
            .map(bit)
            .fold(0, |a, b| a | b)
    }

    /// Vertices adjacent to a leaf.
    pub fn stems(&self) -> u64 {
        mask_iter(self.leaves())
            .map(|l| self.rows[l])
            .fold(0, |a, b| a | b)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        let edges: Vec<Vec<usize>> = self.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
        Hypergraph::new(self.n, edges).expect("graph edges are valid hyperedges")
    }

    pub fn profile(&self) -> StructureProfile {
        structure_profile(self)
    }
}

/// Degree and leaf structure together with a bipartition when one exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub leaves: Vec<usize>,
    pub stems: Vec<usize>,
}

pub fn structure_profile(g: &Graph) -> StructureProfile {
    let connected = g.is_connected();
    let bipartition = g.two_coloring().map(|(a, b)| {
        let (a, b) = if connected && a.count_ones() > b.count_ones() {
            (b, a)
        } else {
            (a, b)
        };
        (mask_iter(a).collect(), mask_iter(b).collect())
    });
    StructureProfile {
        degrees: (0..g.n()).map(|v| g.degree(v)).collect(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        connected,
        bipartition,
        leaves: mask_iter(g.leaves()).collect(),
        stems: mask_iter(g.stems()).collect(),
    }
}
