//! Maximum matchings (pairwise disjoint hyperedges).
//!
//! Branches on the smallest free vertex that still has a usable edge:
//! either one of its edges is taken, or the vertex stays unmatched and all
//! its edges are discarded.

use fixedbitset::FixedBitSet;

use super::{lex_min, Budget, Certificate, Exhausted, Parameter, ProofMode};
use crate::error::Result;
use crate::hypergraph::Hypergraph;

struct Search<'a> {
    h: &'a Hypergraph,
    budget: &'a mut Budget,
    /// Best size found so far.
    best: usize,
    /// Stop as soon as `best` reaches this.
    target: usize,
}

impl Search<'_> {
    fn run(
        &mut self,
        used: &FixedBitSet,
        live: &FixedBitSet,
        count: usize,
    ) -> std::result::Result<(), Exhausted> {
        self.budget.tick()?;
        self.best = self.best.max(count);
        if self.best >= self.target {
            return Ok(());
        }
        let mut live = live.clone();
        for e in live.clone().ones() {
            if !self.h.edge(e).is_disjoint(used) {
                live.set(e, false);
            }
        }
        if live.is_clear() {
            return Ok(());
        }
        let mut touched = FixedBitSet::with_capacity(self.h.order());
        let mut min_size = usize::MAX;
        for e in live.ones() {
            touched.union_with(self.h.edge(e));
            min_size = min_size.min(self.h.edge(e).count_ones(..));
        }
        let bound = live.count_ones(..).min(touched.count_ones(..) / min_size);
        if count + bound <= self.best {
            return Ok(());
        }
        let v = touched.ones().next().expect("live edges have vertices");
        let mut rest = live.clone();
        let mine: Vec<usize> = live
            .ones()
            .filter(|&e| self.h.edge(e).contains(v))
            .collect();
        for &e in &mine {
            rest.set(e, false);
        }
        for &e in &mine {
            let mut next = used.clone();
            next.union_with(self.h.edge(e));
            self.run(&next, &rest, count + 1)?;
            if self.best >= self.target {
                return Ok(());
            }
        }
        self.run(used, &rest, count)
    }
}

/// Largest number of edges from `live` that can be added to a matching
/// covering `used`, searching no further once `target` is reached.
fn maximum(
    h: &Hypergraph,
    used: &FixedBitSet,
    live: &FixedBitSet,
    target: usize,
    budget: &mut Budget,
) -> std::result::Result<usize, Exhausted> {
    let mut s = Search {
        h,
        budget,
        best: 0,
        target,
    };
    s.run(used, live, 0)?;
    Ok(s.best)
}

fn greedy(h: &Hypergraph) -> usize {
    let mut used = FixedBitSet::with_capacity(h.order());
    let mut count = 0;
    for e in h.edges() {
        if e.is_disjoint(&used) {
            used.union_with(e);
            count += 1;
        }
    }
    count
}

pub(super) fn solve(h: &Hypergraph, node_cap: u64) -> Result<Certificate> {
    let m = h.edge_count();
    let mut budget = Budget::new(node_cap);
    let mut all = FixedBitSet::with_capacity(m);
    all.insert_range(..);
    let none = FixedBitSet::with_capacity(h.order());

    let lower = greedy(h);
    let value = maximum(h, &none, &all, usize::MAX, &mut budget)
        .map_err(|_| budget.error(Parameter::Nu, &format!("optimum is at least {lower}")))?;

    let witness = lex_min(m, value, &FixedBitSet::with_capacity(m), |chosen, next| {
        let mut used = FixedBitSet::with_capacity(h.order());
        for e in chosen.ones() {
            if !used.is_disjoint(h.edge(e)) {
                return Ok(false);
            }
            used.union_with(h.edge(e));
        }
        let have = chosen.count_ones(..);
        let mut live = FixedBitSet::with_capacity(m);
        live.insert_range(next..);
        Ok(have + maximum(h, &used, &live, value - have, &mut budget)? >= value)
    })
    .map_err(|_| {
        budget.error(
            Parameter::Nu,
            &format!("value {value} proved, witness extraction unfinished"),
        )
    })?;

    Ok(Certificate {
        parameter: Parameter::Nu,
        value,
        witness,
        mode: ProofMode::BranchAndBound,
        node_count: budget.nodes,
    })
}
