//! Canonical labelling by colour refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first smallest
//! non-singleton cell, recurse. Every leaf is a discrete partition and
//! thus a relabelling; the canonical form is the lexicographically
//! smallest relabelled adjacency matrix. Leaves that reproduce an already
//! seen matrix yield automorphisms, which prune siblings lying in the same
//! orbit of the pointwise stabiliser of the current path.

use serde::Serialize;

use super::{bit, mask_iter, Graph};

/// Relabelling-invariant code of a graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonically labelled graph.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("canonical form within capacity");
        for u in 0..self.n {
            for v in mask_iter(self.rows[u]) {
                if u < v {
                    g.add_edge(u, v)
                        .expect("canonical rows form a simple graph");
                }
            }
        }
        g
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Returns the canonical form and the relabelling `perm` (vertex `v` of
/// `g` becomes `perm[v]`) that produces it.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (CanonicalForm { n, rows: vec![] }, vec![]);
    }
    let mut search = Search {
        g,
        best: None,
        first: None,
        automorphisms: Vec::new(),
    };
    let root = initial_partition(g);
    let root = refine(g, root);
    search.visit(root, &mut Vec::new());
    let (rows, order) = search.best.expect("search reaches at least one leaf");
    let mut perm = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    (CanonicalForm { n, rows }, perm)
}

/// Cells ordered by degree.
fn initial_partition(g: &Graph) -> Vec<u64> {
    let mut by_degree: Vec<u64> = vec![0; g.n()];
    for v in 0..g.n() {
        by_degree[g.degree(v)] |= bit(v);
    }
    by_degree.into_iter().filter(|&c| c != 0).collect()
}

/// Splits cells by neighbour counts into every cell until the partition is
/// equitable. Fragments are ordered by ascending count, which keeps the
/// procedure invariant under relabelling.
fn refine(g: &Graph, mut cells: Vec<u64>) -> Vec<u64> {
    let mut changed = true;
    while changed {
        changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut next = Vec::with_capacity(cells.len() + 1);
            for &cell in &cells {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut buckets: Vec<(u32, u64)> = Vec::new();
                for v in mask_iter(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones();
                    match buckets.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, m)) => *m |= bit(v),
                        None => buckets.push((c, bit(v))),
                    }
                }
                if buckets.len() > 1 {
                    changed = true;
                    buckets.sort_unstable_by_key(|&(k, _)| k);
                }
                next.extend(buckets.into_iter().map(|(_, m)| m));
            }
            cells = next;
            w += 1;
        }
    }
    cells
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    /// Automorphisms as maps `v -> sigma(v)`.
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[t];
        let mut explored: Vec<usize> = Vec::new();
        for v in mask_iter(cell) {
            if !explored.is_empty() && self.same_orbit(path, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[t + 1..]);
            let child = refine(self.g, child);
            path.push(v);
            self.visit(child, path);
            path.pop();
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let n = order.len();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| {
                mask_iter(self.g.neighbors(v))
                    .map(|w| bit(pos[w]))
                    .fold(0, |a, b| a | b)
            })
            .collect();

        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == rows {
                // order maps position -> vertex; compose to a vertex map.
                let sigma: Vec<usize> = (0..n).map(|v| reference.1[pos[v]]).collect();
                if sigma.iter().enumerate().any(|(i, &s)| i != s) {
                    self.automorphisms.push(sigma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((rows.clone(), order.clone()));
        }
        match &self.best {
            Some((b, _)) if *b <= rows => {}
            _ => self.best = Some((rows, order)),
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix `path` pointwise.
    fn same_orbit(&self, path: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for sigma in &self.automorphisms {
            if path.iter().any(|&p| sigma[p] != p) {
                continue;
            }
            any = true;
            for (x, &image) in sigma.iter().enumerate().take(n) {
                let (a, b) = (find(&mut parent, x), find(&mut parent, image));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }
}
