//! Minimum dominating sets under co-occurrence adjacency.
//!
//! Branches on the closed neighbourhood of an undominated vertex with the
//! fewest candidate dominators, excluding earlier siblings. Candidates whose
//! closed neighbourhood is contained in another candidate's are dropped; a
//! vertex whose closed neighbourhood is itself alone (it lies in no edge,
//! or only in singleton edges) is forced into the set.

use fixedbitset::FixedBitSet;

use super::{lex_min, Budget, Certificate, Exhausted, Parameter, ProofMode};
use crate::error::Result;
use crate::hypergraph::Hypergraph;

struct Instance {
    order: usize,
    closed: Vec<FixedBitSet>,
}

impl Instance {
    fn new(h: &Hypergraph) -> Self {
        Instance {
            order: h.order(),
            closed: (0..h.order()).map(|v| h.closed_neighborhood(v)).collect(),
        }
    }

    fn forced(&self) -> FixedBitSet {
        let mut f = FixedBitSet::with_capacity(self.order);
        for v in 0..self.order {
            if self.closed[v].count_ones(..) == 1 {
                f.insert(v);
            }
        }
        f
    }

    /// Drops candidates dominated by another candidate or by a vertex
    /// already chosen.
    fn reduce(&self, allowed: &FixedBitSet, chosen: &FixedBitSet) -> FixedBitSet {
        let mut out = allowed.clone();
        for v in allowed.ones() {
            let nv = &self.closed[v];
            let beaten = chosen.ones().any(|w| nv.is_subset(&self.closed[w]))
                || allowed.ones().any(|w| {
                    w != v
                        && out.contains(w)
                        && nv.is_subset(&self.closed[w])
                        && (w < v || !self.closed[w].is_subset(nv))
                });
            if beaten {
                out.set(v, false);
            }
        }
        out
    }

    fn covered_by(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut c = FixedBitSet::with_capacity(self.order);
        for v in set.ones() {
            c.union_with(&self.closed[v]);
        }
        c
    }
}

struct Search<'a> {
    inst: &'a Instance,
    budget: &'a mut Budget,
    /// Size of the smallest solution found (exclusive bound for improvements).
    best: usize,
    best_set: Option<Vec<usize>>,
    stop_at_first: bool,
    picked: Vec<usize>,
}

impl Search<'_> {
    fn run(
        &mut self,
        dominated: &FixedBitSet,
        allowed: &FixedBitSet,
    ) -> std::result::Result<bool, Exhausted> {
        self.budget.tick()?;
        let count = self.picked.len();
        let undominated: Vec<usize> = (0..self.inst.order)
            .filter(|&v| !dominated.contains(v))
            .collect();
        if undominated.is_empty() {
            if count < self.best {
                self.best = count;
                self.best_set = Some(self.picked.clone());
            }
            return Ok(true);
        }
        if count + 1 >= self.best {
            return Ok(false);
        }
        // Candidate dominators of each undominated vertex.
        let mut target = None;
        let mut target_size = usize::MAX;
        let mut options: Vec<(usize, FixedBitSet)> = Vec::with_capacity(undominated.len());
        for &u in &undominated {
            let mut c = self.inst.closed[u].clone();
            c.intersect_with(allowed);
            let k = c.count_ones(..);
            if k == 0 {
                return Ok(false);
            }
            if k < target_size {
                target_size = k;
                target = Some(options.len());
            }
            options.push((u, c));
        }
        let target = options[target.expect("at least one undominated vertex")]
            .1
            .clone();
        if count + self.lower_bound(dominated, allowed, &mut options, undominated.len())
            >= self.best
        {
            return Ok(false);
        }
        let mut candidates: Vec<(usize, usize)> = target
            .ones()
            .map(|c| {
                let gain = self.inst.closed[c].count_ones(..)
                    - self.inst.closed[c].intersection_count(dominated);
                (c, gain)
            })
            .collect();
        candidates.sort_by_key(|&(c, gain)| (std::cmp::Reverse(gain), c));

        let mut allowed = allowed.clone();
        let mut found = false;
        for (c, _) in candidates {
            allowed.set(c, false);
            let mut next = dominated.clone();
            next.union_with(&self.inst.closed[c]);
            self.picked.push(c);
            let r = self.run(&next, &allowed)?;
            self.picked.pop();
            if r {
                found = true;
                if self.stop_at_first {
                    return Ok(true);
                }
            }
            if self.picked.len() + 1 >= self.best {
                break;
            }
        }
        Ok(found)
    }

    /// Max of a coverage bound and a packing bound: undominated vertices
    /// with pairwise disjoint candidate sets need distinct dominators.
    fn lower_bound(
        &self,
        dominated: &FixedBitSet,
        allowed: &FixedBitSet,
        options: &mut [(usize, FixedBitSet)],
        undominated: usize,
    ) -> usize {
        let max_gain = allowed
            .ones()
            .map(|c| {
                self.inst.closed[c].count_ones(..)
                    - self.inst.closed[c].intersection_count(dominated)
            })
            .max()
            .unwrap_or(0)
            .max(1);
        let coverage = undominated.div_ceil(max_gain);
        options.sort_by_key(|(u, c)| (c.count_ones(..), *u));
        let mut taken = FixedBitSet::with_capacity(self.inst.order);
        let mut packing = 0;
        for (_, c) in options.iter() {
            if c.is_disjoint(&taken) {
                taken.union_with(c);
                packing += 1;
            }
        }
        coverage.max(packing)
    }
}

/// Smallest number of vertices from `allowed` which, together with
/// `chosen`, dominate everything; `None` if no set smaller than `limit`
/// exists.
fn minimum(
    inst: &Instance,
    chosen: &FixedBitSet,
    allowed: &FixedBitSet,
    limit: usize,
    stop_at_first: bool,
    budget: &mut Budget,
) -> std::result::Result<Option<(usize, Vec<usize>)>, Exhausted> {
    let allowed = inst.reduce(allowed, chosen);
    let dominated = inst.covered_by(chosen);
    let mut s = Search {
        inst,
        budget,
        best: limit,
        best_set: None,
        stop_at_first,
        picked: Vec::new(),
    };
    s.run(&dominated, &allowed)?;
    Ok(s.best_set.map(|set| (set.len(), set)))
}

fn greedy(inst: &Instance, chosen: &FixedBitSet, allowed: &FixedBitSet) -> Option<usize> {
    let mut dominated = inst.covered_by(chosen);
    let mut count = 0;
    while dominated.count_ones(..) < inst.order {
        let best = allowed
            .ones()
            .map(|c| {
                (
                    inst.closed[c].count_ones(..) - inst.closed[c].intersection_count(&dominated),
                    c,
                )
            })
            .max_by_key(|&(gain, c)| (gain, std::cmp::Reverse(c)))?;
        if best.0 == 0 {
            return None;
        }
        dominated.union_with(&inst.closed[best.1]);
        count += 1;
    }
    Some(count)
}

pub(super) fn solve(h: &Hypergraph, node_cap: u64) -> Result<Certificate> {
    let inst = Instance::new(h);
    let n = inst.order;
    let forced = inst.forced();
    let mut allowed = FixedBitSet::with_capacity(n);
    allowed.insert_range(..);
    allowed.difference_with(&forced);
    let mut budget = Budget::new(node_cap);

    let extra_upper =
        greedy(&inst, &forced, &allowed).expect("all vertices can dominate themselves");
    let fixed = forced.count_ones(..);
    let optimum = match minimum(&inst, &forced, &allowed, extra_upper, false, &mut budget) {
        Ok(Some((k, _))) => k,
        Ok(None) => extra_upper,
        Err(Exhausted) => {
            return Err(budget.error(
                Parameter::Gamma,
                &format!("optimum lies in [{}, {}]", fixed + 1, fixed + extra_upper),
            ))
        }
    };
    let value = fixed + optimum;

    let witness = lex_min(n, value, &forced, |chosen, next| {
        let mut with_forced = chosen.clone();
        let mut rest = FixedBitSet::with_capacity(n);
        for v in next..n {
            if forced.contains(v) {
                with_forced.insert(v);
            } else {
                rest.insert(v);
            }
        }
        let used = with_forced.count_ones(..);
        if used > value {
            return Ok(false);
        }
        let r = minimum(
            &inst,
            &with_forced,
            &rest,
            value - used + 1,
            true,
            &mut budget,
        )?;
        Ok(r.is_some())
    })
    .map_err(|_| {
        budget.error(
            Parameter::Gamma,
            &format!("value {value} proved, witness extraction unfinished"),
        )
    })?;

    Ok(Certificate {
        parameter: Parameter::Gamma,
        value,
        witness,
        mode: ProofMode::BranchAndBound,
        node_count: budget.nodes,
    })
}
