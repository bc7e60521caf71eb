//! Minimum transversals (vertex covers of hyperedges).
//!
//! Branches on the vertices of an uncovered edge with the fewest candidate
//! vertices, highest remaining degree first, excluding earlier siblings.
//! A greedy packing of pairwise disjoint uncovered edges bounds the rest
//! from below, since each needs its own vertex. Vertices whose incident
//! edges are a subset of another candidate's are dropped.

use fixedbitset::FixedBitSet;

use super::{lex_min, Budget, Certificate, Exhausted, Parameter, ProofMode};
use crate::error::Result;
use crate::hypergraph::Hypergraph;

struct Instance<'a> {
    h: &'a Hypergraph,
    /// Incident edge set of each vertex.
    incidence: Vec<FixedBitSet>,
}

impl<'a> Instance<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let m = h.edge_count();
        let incidence = (0..h.order())
            .map(|v| {
                let mut s = FixedBitSet::with_capacity(m);
                for e in h.incident(v) {
                    s.insert(e);
                }
                s
            })
            .collect();
        Instance { h, incidence }
    }

    fn reduce(&self, allowed: &FixedBitSet) -> FixedBitSet {
        let mut out = allowed.clone();
        for v in allowed.ones() {
            let iv = &self.incidence[v];
            let beaten = iv.is_clear()
                || allowed.ones().any(|w| {
                    w != v
                        && out.contains(w)
                        && iv.is_subset(&self.incidence[w])
                        && (w < v || !self.incidence[w].is_subset(iv))
                });
            if beaten {
                out.set(v, false);
            }
        }
        out
    }

    fn uncovered_by(&self, chosen: &FixedBitSet) -> FixedBitSet {
        let mut covered = FixedBitSet::with_capacity(self.h.edge_count());
        for v in chosen.ones() {
            covered.union_with(&self.incidence[v]);
        }
        let mut u = FixedBitSet::with_capacity(self.h.edge_count());
        u.insert_range(..);
        u.difference_with(&covered);
        u
    }
}

struct Search<'a, 'b> {
    inst: &'a Instance<'b>,
    budget: &'a mut Budget,
    best: usize,
    best_set: Option<Vec<usize>>,
    stop_at_first: bool,
    picked: Vec<usize>,
}

impl Search<'_, '_> {
    fn run(
        &mut self,
        uncovered: &FixedBitSet,
        allowed: &FixedBitSet,
    ) -> std::result::Result<bool, Exhausted> {
        self.budget.tick()?;
        let count = self.picked.len();
        if uncovered.is_clear() {
            if count < self.best {
                self.best = count;
                self.best_set = Some(self.picked.clone());
            }
            return Ok(true);
        }
        if count + 1 >= self.best {
            return Ok(false);
        }
        let mut options: Vec<(usize, FixedBitSet)> = Vec::new();
        for e in uncovered.ones() {
            let mut c = self.inst.h.edge(e).clone();
            c.intersect_with(allowed);
            if c.is_clear() {
                return Ok(false);
            }
            options.push((e, c));
        }
        options.sort_by_key(|(e, c)| (c.count_ones(..), *e));
        let target = options[0].1.clone();

        let max_degree = allowed
            .ones()
            .map(|v| self.inst.incidence[v].intersection_count(uncovered))
            .max()
            .unwrap_or(1)
            .max(1);
        let mut taken = FixedBitSet::with_capacity(self.inst.h.order());
        let mut packing = 0;
        for (_, c) in &options {
            if c.is_disjoint(&taken) {
                taken.union_with(c);
                packing += 1;
            }
        }
        let bound = packing.max(uncovered.count_ones(..).div_ceil(max_degree));
        if count + bound >= self.best {
            return Ok(false);
        }

        let mut candidates: Vec<(usize, usize)> = target
            .ones()
            .map(|v| (v, self.inst.incidence[v].intersection_count(uncovered)))
            .collect();
        candidates.sort_by_key(|&(v, d)| (std::cmp::Reverse(d), v));
        let mut allowed = allowed.clone();
        let mut found = false;
        for (v, _) in candidates {
            allowed.set(v, false);
            let mut next = uncovered.clone();
            next.difference_with(&self.inst.incidence[v]);
            self.picked.push(v);
            let r = self.run(&next, &allowed)?;
            self.picked.pop();
            if r {
                found = true;
                if self.stop_at_first {
                    return Ok(true);
                }
            }
            if count + 1 >= self.best {
                break;
            }
        }
        Ok(found)
    }
}

fn minimum(
    inst: &Instance<'_>,
    chosen: &FixedBitSet,
    allowed: &FixedBitSet,
    limit: usize,
    stop_at_first: bool,
    budget: &mut Budget,
) -> std::result::Result<Option<usize>, Exhausted> {
    let uncovered = inst.uncovered_by(chosen);
    let allowed = inst.reduce(allowed);
    let mut s = Search {
        inst,
        budget,
        best: limit,
        best_set: None,
        stop_at_first,
        picked: Vec::new(),
    };
    s.run(&uncovered, &allowed)?;
    Ok(s.best_set.map(|set| set.len()))
}

fn greedy(inst: &Instance<'_>) -> usize {
    let mut uncovered = inst.uncovered_by(&FixedBitSet::with_capacity(inst.h.order()));
    let mut count = 0;
    while !uncovered.is_clear() {
        let (_, v) = (0..inst.h.order())
            .map(|v| (inst.incidence[v].intersection_count(&uncovered), v))
            .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)))
            .expect("uncovered edges have vertices");
        uncovered.difference_with(&inst.incidence[v]);
        count += 1;
    }
    count
}

pub(super) fn solve(h: &Hypergraph, node_cap: u64) -> Result<Certificate> {
    let inst = Instance::new(h);
    let n = h.order();
    let mut budget = Budget::new(node_cap);
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let none = FixedBitSet::with_capacity(n);

    let upper = greedy(&inst);
    let value = match minimum(&inst, &none, &all, upper, false, &mut budget) {
        Ok(Some(k)) => k,
        Ok(None) => upper,
        Err(Exhausted) => {
            return Err(budget.error(Parameter::Tau, &format!("optimum lies in [1, {upper}]")))
        }
    };

    let witness = lex_min(n, value, &none, |chosen, next| {
        let used = chosen.count_ones(..);
        if used > value {
            return Ok(false);
        }
        let mut rest = FixedBitSet::with_capacity(n);
        rest.insert_range(next..);
        Ok(minimum(&inst, chosen, &rest, value - used + 1, true, &mut budget)?.is_some())
    })
    .map_err(|_| {
        budget.error(
            Parameter::Tau,
            &format!("value {value} proved, witness extraction unfinished"),
        )
    })?;

    Ok(Certificate {
        parameter: Parameter::Tau,
        value,
        witness,
        mode: ProofMode::BranchAndBound,
        node_count: budget.nodes,
    })
}
