//! Plain subset enumeration, for cross-checking the branch-and-bound
//! solvers. Subsets of each size are visited in lexicographic order, so
//! the first hit is the lexicographically smallest witness.

use super::{
    is_dominating, is_matching, is_transversal, Budget, Certificate, Parameter, ProofMode,
};
use crate::error::Result;
use crate::hypergraph::Hypergraph;

/// First `k`-subset of `0..n` in lexicographic order accepted by `pred`.
fn first_subset<F>(
    n: usize,
    k: usize,
    budget: &mut Budget,
    parameter: Parameter,
    mut pred: F,
) -> Result<Option<Vec<usize>>>
where
    F: FnMut(&[usize]) -> bool,
{
    if k > n {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        budget.tick().map_err(|_| {
            budget.error(parameter, &format!("exhaustive search stopped at size {k}"))
        })?;
        if pred(&idx) {
            return Ok(Some(idx));
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return Ok(None);
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn certificate(parameter: Parameter, witness: Vec<usize>, budget: &Budget) -> Certificate {
    Certificate {
        parameter,
        value: witness.len(),
        witness,
        mode: ProofMode::Exhaustive,
        node_count: budget.nodes,
    }
}

fn smallest<F>(n: usize, parameter: Parameter, cap: u64, mut pred: F) -> Result<Certificate>
where
    F: FnMut(&[usize]) -> bool,
{
    let mut budget = Budget::new(cap);
    for k in 0..=n {
        if let Some(w) = first_subset(n, k, &mut budget, parameter, &mut pred)? {
            return Ok(certificate(parameter, w, &budget));
        }
    }
    unreachable!("the full set always qualifies")
}

pub(super) fn domination(h: &Hypergraph, cap: u64) -> Result<Certificate> {
    smallest(h.order(), Parameter::Gamma, cap, |s| is_dominating(h, s))
}

pub(super) fn transversal(h: &Hypergraph, cap: u64) -> Result<Certificate> {
    smallest(h.order(), Parameter::Tau, cap, |s| is_transversal(h, s))
}

pub(super) fn matching(h: &Hypergraph, cap: u64) -> Result<Certificate> {
    let mut budget = Budget::new(cap);
    let mut best = Vec::new();
    for k in 1..=h.edge_count() {
        match first_subset(h.edge_count(), k, &mut budget, Parameter::Nu, |s| {
            is_matching(h, s)
        })? {
            Some(w) => best = w,
            None => break,
        }
    }
    Ok(certificate(Parameter::Nu, best, &budget))
}
