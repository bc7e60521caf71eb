//! Finite hypergraphs with an ordered edge list.
//!
//! Edges are bit sets over `0..order` and may repeat. There is no vertex
//! cap: dilations of 64-vertex graphs routinely have hundreds of vertices.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    order: usize,
    edges: Vec<FixedBitSet>,
}

impl Hypergraph {
    pub fn new(order: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut sets = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::Domain(format!("edge {i} is empty")));
            }
            let mut s = FixedBitSet::with_capacity(order);
            for &v in e {
                if v >= order {
                    return Err(Error::Domain(format!(
                        "edge {i} names vertex {v}, order is {order}"
                    )));
                }
                if s.put(v) {
                    return Err(Error::Domain(format!("edge {i} repeats vertex {v}")));
                }
            }
            sets.push(s);
        }
        Ok(Hypergraph { order, edges: sets })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, i: usize) -> &FixedBitSet {
        &self.edges[i]
    }

    pub fn edges(&self) -> &[FixedBitSet] {
        &self.edges
    }

    pub fn edge_vertices(&self, i: usize) -> Vec<usize> {
        self.edges[i].ones().collect()
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        (0..self.edges.len())
            .map(|i| self.edge_vertices(i))
            .collect()
    }

    /// Largest edge size, 0 without edges.
    pub fn rank(&self) -> usize {
        self.edges
            .iter()
            .map(|e| e.count_ones(..))
            .max()
            .unwrap_or(0)
    }

    pub fn is_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.count_ones(..) == k)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Indices of edges containing `v`.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].contains(v))
            .collect()
    }

    /// Closed neighbourhood: `v` together with every vertex sharing an edge.
    pub fn closed_neighborhood(&self, v: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.order);
        s.insert(v);
        for e in self.edges.iter().filter(|e| e.contains(v)) {
            s.union_with(e);
        }
        s
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.iter().any(|e| e.contains(u) && e.contains(v))
    }

    /// Connected when the vertex-edge incidence graph is; a vertex in no
    /// edge disconnects any hypergraph of order at least two.
    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(self.order);
        seen.insert(0);
        let mut used = vec![false; self.edges.len()];
        let mut grew = true;
        while grew {
            grew = false;
            for (i, e) in self.edges.iter().enumerate() {
                if !used[i] && !e.is_disjoint(&seen) {
                    used[i] = true;
                    seen.union_with(e);
                    grew = true;
                }
            }
        }
        seen.count_ones(..) == self.order
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut order: Option<usize> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if order.is_none() {
                match tokens.as_slice() {
                    ["m", count] => {
                        order = Some(count.parse().map_err(|_| {
                            Error::parse(lineno, format!("bad vertex count '{count}'"))
                        })?);
                        continue;
                    }
                    _ => return Err(Error::parse(lineno, "expected header 'm <vertex count>'")),
                }
            }
            let m = order.unwrap_or(0);
            let mut edge = Vec::with_capacity(tokens.len());
            for t in tokens {
                let v: usize = t
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("bad vertex index '{t}'")))?;
                if v >= m {
                    return Err(Error::parse(
                        lineno,
                        format!("vertex {v} out of range 0..{m}"),
                    ));
                }
                if edge.contains(&v) {
                    return Err(Error::parse(lineno, format!("vertex {v} repeated in edge")));
                }
                edge.push(v);
            }
            edges.push(edge);
        }
        let order = order.ok_or_else(|| Error::parse(1, "missing header 'm <vertex count>'"))?;
        Hypergraph::new(order, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("m {}\n", self.order);
        for e in &self.edges {
            let line: Vec<String> = e.ones().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    pub fn summary(&self) -> HypergraphSummary {
        HypergraphSummary {
            order: self.order,
            edge_count: self.edges.len(),
            rank: self.rank(),
            edges: self.edge_lists(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypergraphSummary {
    pub order: usize,
    pub edge_count: usize,
    pub rank: usize,
    pub edges: Vec<Vec<usize>>,
}
