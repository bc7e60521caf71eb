//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's solvers or canonical labelling.

#![allow(dead_code)]

use dilations::graph::Graph;
use dilations::hypergraph::Hypergraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Edges as vertex masks; order must stay below 64.
pub fn edge_masks(h: &Hypergraph) -> Vec<u64> {
    assert!(h.order() < 64);
    h.edges()
        .iter()
        .map(|e| e.ones().fold(0u64, |m, v| m | 1 << v))
        .collect()
}

fn closed_neighbourhoods(h: &Hypergraph) -> Vec<u64> {
    let edges = edge_masks(h);
    (0..h.order())
        .map(|v| {
            edges
                .iter()
                .filter(|&&e| e >> v & 1 == 1)
                .fold(1u64 << v, |m, &e| m | e)
        })
        .collect()
}

/// Smallest `|S|` over all vertex masks `S` accepted by `ok`.
fn smallest_mask(order: usize, ok: impl Fn(u64) -> bool) -> usize {
    assert!(order <= 24, "oracle is exponential in the order");
    (0u64..1 << order)
        .filter(|&s| ok(s))
        .map(|s| s.count_ones() as usize)
        .min()
        .expect("the full vertex set is accepted")
}

pub fn gamma(h: &Hypergraph) -> usize {
    let nb = closed_neighbourhoods(h);
    let full = if h.order() == 64 {
        u64::MAX
    } else {
        (1u64 << h.order()) - 1
    };
    smallest_mask(h.order(), |s| {
        let mut covered = 0u64;
        let mut rest = s;
        while rest != 0 {
            covered |= nb[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        covered == full
    })
}

pub fn tau(h: &Hypergraph) -> usize {
    let edges = edge_masks(h);
    smallest_mask(h.order(), |s| edges.iter().all(|&e| e & s != 0))
}

/// Maximum matching: either the first edge is left out, or it is taken and
/// every edge meeting it is discarded.
pub fn nu(h: &Hypergraph) -> usize {
    fn go(edges: &[u64]) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&e, rest)) => {
                let without = go(rest);
                let compatible: Vec<u64> = rest.iter().copied().filter(|&f| f & e == 0).collect();
                without.max(1 + go(&compatible))
            }
        }
    }
    go(&edge_masks(h))
}

pub fn graph_gamma(g: &Graph) -> usize {
    gamma(&g.to_hypergraph())
}

pub fn graph_tau(g: &Graph) -> usize {
    tau(&g.to_hypergraph())
}

pub fn graph_nu(g: &Graph) -> usize {
    nu(&g.to_hypergraph())
}

/// Heap's algorithm over all permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut out = vec![p.clone()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Upper-triangle adjacency bits under `perm`, as a comparable key.
fn relabelled_code(g: &Graph, perm: &[usize]) -> Vec<bool> {
    let n = g.n();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut code = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            code.push(g.has_edge(inv[i], inv[j]));
        }
    }
    code
}

/// Lexicographically largest adjacency code over all relabellings.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    permutations(g.n())
        .iter()
        .map(|p| relabelled_code(g, p))
        .max()
        .unwrap_or_default()
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && brute_canonical(a) == brute_canonical(b)
}

pub fn random_graph(n: usize, p_num: u32, p_den: u32, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_ratio(p_num, p_den) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// A hypergraph with `1..=max_order` vertices and `1..=max_edges` edges of
/// random nonempty support, repeated edges allowed.
pub fn random_hypergraph(max_order: usize, max_edges: usize, rng: &mut ChaCha8Rng) -> Hypergraph {
    let order = rng.gen_range(1..=max_order);
    let m = rng.gen_range(1..=max_edges);
    let edges = (0..m)
        .map(|_| {
            let size = rng.gen_range(1..=order.min(5));
            let mut e: Vec<usize> = Vec::with_capacity(size);
            while e.len() < size {
                let v = rng.gen_range(0..order);
                if !e.contains(&v) {
                    e.push(v);
                }
            }
            e
        })
        .collect();
    Hypergraph::new(order, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Is there an injection `V(G) -> V(H)` and an edge bijection with each
/// graph edge inside its hyperedge? Tries every injection, then every
/// assignment of hyperedges to graph edges.
pub fn brute_berge(g: &Graph, h: &Hypergraph) -> bool {
    let edges = g.edges();
    if edges.len() != h.edge_count() || g.n() > h.order() {
        return false;
    }
    let hmasks = edge_masks(h);
    let mut injection = vec![usize::MAX; g.n()];
    fn assign(
        edges: &[(usize, usize)],
        inj: &[usize],
        hmasks: &[u64],
        t: usize,
        used: u64,
    ) -> bool {
        if t == edges.len() {
            return true;
        }
        let (u, v) = edges[t];
        let need = 1u64 << inj[u] | 1u64 << inj[v];
        (0..hmasks.len()).any(|s| {
            used >> s & 1 == 0
                && hmasks[s] & need == need
                && assign(edges, inj, hmasks, t + 1, used | 1 << s)
        })
    }
    fn inject(
        i: usize,
        inj: &mut Vec<usize>,
        taken: u64,
        order: usize,
        edges: &[(usize, usize)],
        hmasks: &[u64],
    ) -> bool {
        if i == inj.len() {
            return assign(edges, inj, hmasks, 0, 0);
        }
        for x in 0..order {
            if taken >> x & 1 == 0 {
                inj[i] = x;
                if inject(i + 1, inj, taken | 1 << x, order, edges, hmasks) {
                    return true;
                }
            }
        }
        false
    }
    inject(0, &mut injection, 0, h.order(), &edges, &hmasks)
}
