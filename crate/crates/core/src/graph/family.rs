//! Named graph families and vertex amalgamation.
//!
//! Labelings are fixed so certificates are reproducible:
//!
//! * `cycle(p)`: `0 - 1 - ... - (p-1) - 0`; `path(p)`: `0 - 1 - ... - (p-1)`.
//! * `complete_bipartite(a, b)`: sides `0..a` and `a..a+b`; `star(m)`: centre 0.
//! * `corona(base)`: base vertices first, the pendant of `v` is `n + v`.
//! * `complete_minus_clique(n, r)`: `K_2n` with the edges among `0..r` removed.
//! * `t1`: triangle `{0, 1, 2}` with pendant `3` on `2`; vertex 0 has degree 2.
//! * `t2`: triangle `{0, 1, 2}` with pendants `3` on `1` and `4` on `2`;
//!   vertex 0 is the only degree-2 vertex.
//! * `g_nr(n, r)` / `ghat_nr(n, r)`: shared vertex 0, then the triangle
//!   blocks, then the `t2` blocks, then (for `ghat_nr`) the `t1` block, each
//!   block glued at its vertex 0.
//! * `cp_vee_cq(p, q)`: `cycle(p)` and `cycle(q)` glued at their vertex 0.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Corona(Box<FamilySpec>),
    CompleteMinusClique(usize, usize),
    T1,
    T2,
    GNr(usize, usize),
    GHatNr(usize, usize),
    CpVeeCq(usize, usize),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(p) => write!(f, "cycle:{p}"),
            FamilySpec::Path(p) => write!(f, "path:{p}"),
            FamilySpec::Complete(m) => write!(f, "complete:{m}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            FamilySpec::Star(m) => write!(f, "star:{m}"),
            FamilySpec::Corona(base) => write!(f, "corona:{base}"),
            FamilySpec::CompleteMinusClique(n, r) => write!(f, "complete_minus_clique:{n},{r}"),
            FamilySpec::T1 => write!(f, "t1"),
            FamilySpec::T2 => write!(f, "t2"),
            FamilySpec::GNr(n, r) => write!(f, "g_nr:{n},{r}"),
            FamilySpec::GHatNr(n, r) => write!(f, "ghat_nr:{n},{r}"),
            FamilySpec::CpVeeCq(p, q) => write!(f, "cp_vee_cq:{p},{q}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Grammar: `name[:arg1,arg2]`; `corona:` takes a nested spec.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = match s.split_once(':') {
            Some((n, r)) => (n, Some(r)),
            None => (s, None),
        };
        if name == "corona" {
            let inner = rest.ok_or_else(|| Error::parse(1, "corona needs a base family"))?;
            return Ok(FamilySpec::Corona(Box::new(inner.parse()?)));
        }
        let args: Vec<usize> = match rest {
            None => vec![],
            Some(r) => r
                .split(',')
                .map(|a| {
                    a.trim()
                        .parse()
                        .map_err(|_| Error::parse(1, format!("bad integer '{a}' in '{s}'")))
                })
                .collect::<Result<_>>()?,
        };
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(Error::parse(
                    1,
                    format!("family '{name}' takes {k} arguments, got {}", args.len()),
                ))
            }
        };
        let spec = match name {
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(args[0])
            }
            "path" => {
                arity(1)?;
                FamilySpec::Path(args[0])
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(args[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite(args[0], args[1])
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star(args[0])
            }
            "complete_minus_clique" => {
                arity(2)?;
                FamilySpec::CompleteMinusClique(args[0], args[1])
            }
            "t1" => {
                arity(0)?;
                FamilySpec::T1
            }
            "t2" => {
                arity(0)?;
                FamilySpec::T2
            }
            "g_nr" => {
                arity(2)?;
                FamilySpec::GNr(args[0], args[1])
            }
            "ghat_nr" => {
                arity(2)?;
                FamilySpec::GHatNr(args[0], args[1])
            }
            "cp_vee_cq" => {
                arity(2)?;
                FamilySpec::CpVeeCq(args[0], args[1])
            }
            other => return Err(Error::UnknownName(format!("graph family '{other}'"))),
        };
        Ok(spec)
    }
}

fn require(ok: bool, message: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(message()))
    }
}

fn cycle(p: usize) -> Result<Graph> {
    require(p >= 3, || format!("cycle needs p >= 3, got {p}"))?;
    let edges: Vec<_> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    Graph::from_edges(p, &edges)
}

fn complete(m: usize) -> Result<Graph> {
    let mut g = Graph::empty(m)?;
    for u in 0..m {
        for v in u + 1..m {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

fn t1() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).expect("fixed graph")
}

fn t2() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).expect("fixed graph")
}

/// Glues `blocks` together at their vertex 0, which becomes vertex 0.
fn bouquet(blocks: &[Graph]) -> Result<Graph> {
    let total = 1 + blocks.iter().map(|b| b.n() - 1).sum::<usize>();
    let mut g = Graph::empty(total)?;
    let mut offset = 1;
    for b in blocks {
        let map = |v: usize| if v == 0 { 0 } else { offset + v - 1 };
        for (u, v) in b.edges() {
            g.add_edge(map(u), map(v))?;
        }
        offset += b.n() - 1;
    }
    Ok(g)
}

fn check_nr(n: usize, r: usize) -> Result<()> {
    require(n > 2, || format!("n must exceed 2, got {n}"))?;
    require(r >= 1 && r <= (n - 1) / 2, || {
        format!(
            "r must satisfy 1 <= r <= floor((n-1)/2) = {}, got {r}",
            (n - 1) / 2
        )
    })
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Cycle(p) => cycle(*p),
        FamilySpec::Path(p) => {
            require(*p >= 1, || "path needs at least one vertex".into())?;
            let edges: Vec<_> = (1..*p).map(|i| (i - 1, i)).collect();
            Graph::from_edges(*p, &edges)
        }
        FamilySpec::Complete(m) => {
            require(*m >= 1, || {
                "complete graph needs at least one vertex".into()
            })?;
            complete(*m)
        }
        FamilySpec::CompleteBipartite(a, b) => {
            require(*a >= 1 && *b >= 1, || {
                format!("both sides must be non-empty, got {a},{b}")
            })?;
            let mut g = Graph::empty(a + b)?;
            for x in 0..*a {
                for y in *a..a + b {
                    g.add_edge(x, y)?;
                }
            }
            Ok(g)
        }
        FamilySpec::Star(m) => {
            require(*m >= 1, || "star needs at least one leaf".into())?;
            let edges: Vec<_> = (1..=*m).map(|i| (0, i)).collect();
            Graph::from_edges(m + 1, &edges)
        }
        FamilySpec::Corona(base) => {
            let b = generate(base)?;
            let n = b.n();
            let mut g = Graph::empty(2 * n)?;
            for (u, v) in b.edges() {
                g.add_edge(u, v)?;
            }
            for v in 0..n {
                g.add_edge(v, n + v)?;
            }
            Ok(g)
        }
        FamilySpec::CompleteMinusClique(n, r) => {
            require(*n >= 2, || format!("n must be at least 2, got {n}"))?;
            require(*r >= 2 && *r < *n, || {
                format!("r must satisfy 2 <= r <= n-1 = {}, got {r}", n - 1)
            })?;
            let mut g = Graph::empty(2 * n)?;
            for u in 0..2 * n {
                for v in u + 1..2 * n {
                    if !(u < *r && v < *r) {
                        g.add_edge(u, v)?;
                    }
                }
            }
            Ok(g)
        }
        FamilySpec::T1 => Ok(t1()),
        FamilySpec::T2 => Ok(t2()),
        FamilySpec::GNr(n, r) => {
            check_nr(*n, *r)?;
            let mut blocks = vec![complete(3)?; n - 2 * r];
            blocks.extend(std::iter::repeat_n(t2(), *r));
            bouquet(&blocks)
        }
        FamilySpec::GHatNr(n, r) => {
            check_nr(*n, *r)?;
            let mut blocks = vec![complete(3)?; n - 2 * r];
            blocks.extend(std::iter::repeat_n(t2(), r - 1));
            blocks.push(t1());
            bouquet(&blocks)
        }
        FamilySpec::CpVeeCq(p, q) => vertex_amalgam(&cycle(*p)?, 0, &cycle(*q)?, 0),
    }
}

/// Identifies `v1` of `g1` with `v2` of `g2`. Vertices of `g1` keep their
/// indices; the remaining vertices of `g2` follow in order.
pub fn vertex_amalgam(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    if v1 >= g1.n() || v2 >= g2.n() {
        return Err(Error::Domain(format!(
            "amalgamation vertices ({v1}, {v2}) out of range for orders ({}, {})",
            g1.n(),
            g2.n()
        )));
    }
    let n1 = g1.n();
    let mut g = Graph::empty(n1 + g2.n() - 1)?;
    for (u, v) in g1.edges() {
        g.add_edge(u, v)?;
    }
    let map = |w: usize| match w.cmp(&v2) {
        std::cmp::Ordering::Equal => v1,
        std::cmp::Ordering::Less => n1 + w,
        std::cmp::Ordering::Greater => n1 + w - 1,
    };
    for (u, v) in g2.edges() {
        g.add_edge(map(u), map(v))?;
    }
    if g1.labels().is_some() || g2.labels().is_some() {
        let mut labels: Vec<String> = (0..n1).map(|v| g1.label(v)).collect();
        labels.extend((0..g2.n()).filter(|&w| w != v2).map(|w| g2.label(w)));
        g = g.with_labels(labels)?;
    }
    Ok(g)
}
