//! Connected graphs up to isomorphism, grown one vertex at a time.
//!
//! Every connected graph on `n` vertices has a vertex whose removal leaves
//! it connected, so extending each class on `n - 1` vertices by a new
//! vertex joined to every non-empty subset reaches every class on `n`.
//! Children are deduplicated by canonical form. Output is sorted by
//! canonical form, which makes the order independent of thread timing.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{bit, canonical_form, CanonicalForm, Graph};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationConstraints {
    pub min_degree: Option<usize>,
    pub bipartite: bool,
    pub non_bipartite: bool,
}

impl EnumerationConstraints {
    pub fn accepts(&self, g: &Graph) -> bool {
        if let Some(d) = self.min_degree {
            if g.min_degree() < d {
                return false;
            }
        }
        if self.bipartite && !g.is_bipartite() {
            return false;
        }
        if self.non_bipartite && g.is_bipartite() {
            return false;
        }
        true
    }
}

/// One representative (the canonically labelled graph) per isomorphism
/// class of connected graphs on exactly `n` vertices meeting `constraints`.
pub fn enumerate_connected(
    n: usize,
    constraints: EnumerationConstraints,
) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::Capacity(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    // Bipartiteness survives vertex deletion, so it may prune early.
    let hereditary_bipartite = constraints.bipartite;
    let mut level: Vec<CanonicalForm> = vec![canonical_form(&Graph::empty(1)?)];
    for _ in 2..=n {
        level = extend(&level, hereditary_bipartite);
    }
    Ok(level
        .into_iter()
        .map(|f| f.graph())
        .filter(move |g| constraints.accepts(g)))
}

fn extend(parents: &[CanonicalForm], bipartite_only: bool) -> Vec<CanonicalForm> {
    let children: HashSet<CanonicalForm> = parents
        .par_iter()
        .flat_map_iter(|p| {
            let g = p.graph();
            let m = g.n();
            let mut local = HashSet::new();
            for subset in 1u64..(1u64 << m) {
                let mut child = g.clone();
                let v = child
                    .add_vertex()
                    .expect("enumeration stays below capacity");
                for u in super::mask_iter(subset) {
                    child.rows[u] |= bit(v);
                    child.rows[v] |= bit(u);
                }
                if bipartite_only && !child.is_bipartite() {
                    continue;
                }
                local.insert(canonical_form(&child));
            }
            local
        })
        .collect();
    let mut out: Vec<CanonicalForm> = children.into_iter().collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, c: EnumerationConstraints) -> usize {
        enumerate_connected(n, c).unwrap().count()
    }

    #[test]
    fn small_counts() {
        let none = EnumerationConstraints::default();
        assert_eq!(count(1, none), 1);
        assert_eq!(count(2, none), 1);
        assert_eq!(count(3, none), 2);
        assert_eq!(count(4, none), 6);
        assert_eq!(count(5, none), 21);
    }

    #[test]
    fn constrained_n5_contains_c5_and_k5() {
        let c = EnumerationConstraints {
            min_degree: Some(2),
            non_bipartite: true,
            ..Default::default()
        };
        let graphs: Vec<Graph> = enumerate_connected(5, c).unwrap().collect();
        assert!(graphs
            .iter()
            .any(|g| g.edge_count() == 5 && g.max_degree() == 2));
        assert!(graphs.iter().any(|g| g.is_complete()));
        assert!(graphs
            .iter()
            .all(|g| g.min_degree() >= 2 && !g.is_bipartite()));
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_connected(0, Default::default()).is_err());
        assert!(enumerate_connected(10, Default::default()).is_err());
    }
}
