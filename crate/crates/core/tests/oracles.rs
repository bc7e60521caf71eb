mod common;

use std::collections::HashSet;

use dilations::dilation::{generalized_power, random_dilation, ClassRequest};
use dilations::graph::{
    canonical_form, canonical_labeling, enumerate_connected, is_isomorphic, EnumerationConstraints,
    Graph,
};
use dilations::invariants::{self, Parameter, ProofMode, SolverConfig};

fn bnb() -> SolverConfig {
    SolverConfig::default()
}

fn exhaustive() -> SolverConfig {
    SolverConfig {
        mode: ProofMode::Exhaustive,
        ..SolverConfig::default()
    }
}

fn all_connected(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_connected(n, EnumerationConstraints::default()).unwrap())
        .collect()
}

// Connected graphs on n unlabelled vertices, n = 1..=8.
const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];
// Connected bipartite graphs, n = 1..=8.
const CONNECTED_BIPARTITE_COUNTS: [usize; 8] = [1, 1, 1, 3, 5, 17, 44, 182];

#[test]
fn enumeration_counts_match_known_sequences() {
    for n in 1..=8 {
        assert_eq!(
            enumerate_connected(n, EnumerationConstraints::default())
                .unwrap()
                .count(),
            CONNECTED_COUNTS[n - 1],
            "n = {n}"
        );
        let bip = EnumerationConstraints {
            bipartite: true,
            ..Default::default()
        };
        assert_eq!(
            enumerate_connected(n, bip).unwrap().count(),
            CONNECTED_BIPARTITE_COUNTS[n - 1],
            "bipartite n = {n}"
        );
    }
}

#[test]
fn enumeration_is_pairwise_non_isomorphic() {
    for n in 1..=6 {
        let graphs: Vec<Graph> = enumerate_connected(n, EnumerationConstraints::default())
            .unwrap()
            .collect();
        let codes: HashSet<Vec<bool>> = graphs.iter().map(common::brute_canonical).collect();
        assert_eq!(codes.len(), graphs.len(), "n = {n}");
        assert!(graphs.iter().all(Graph::is_connected));
    }
}

#[test]
fn canonical_form_agrees_with_permutation_oracle() {
    let mut rng = common::rng(11);
    for round in 0..400 {
        let n = 1 + round % 6;
        let a = common::random_graph(n, 1, 2, &mut rng);
        let b = if round % 3 == 0 {
            let perms = common::permutations(n);
            a.permuted(&perms[round % perms.len()])
        } else {
            common::random_graph(n, 1, 2, &mut rng)
        };
        assert_eq!(
            is_isomorphic(&a, &b),
            common::brute_isomorphic(&a, &b),
            "{:?} vs {:?}",
            a.edges(),
            b.edges()
        );
        let (form, perm) = canonical_labeling(&a);
        assert_eq!(a.permuted(&perm), form.graph());
        assert_eq!(canonical_form(&form.graph()), form);
    }
}

#[test]
fn graph_invariants_match_brute_force() {
    for g in all_connected(6) {
        assert_eq!(
            invariants::graph_gamma(&g).unwrap().value,
            common::graph_gamma(&g),
            "{:?}",
            g.edges()
        );
        assert_eq!(
            invariants::graph_nu(&g).unwrap().value,
            common::graph_nu(&g),
            "{:?}",
            g.edges()
        );
        assert_eq!(
            invariants::graph_tau(&g).unwrap().value,
            common::graph_tau(&g),
            "{:?}",
            g.edges()
        );
    }
}

#[test]
fn dilation_invariants_match_brute_force() {
    let mut checked = 0;
    for (i, g) in all_connected(5)
        .into_iter()
        .enumerate()
        .filter(|(_, g)| g.edge_count() > 0)
    {
        let mut hs = vec![generalized_power(&g, 4, 1).unwrap().hypergraph];
        for class in [ClassRequest::Gamma0, ClassRequest::Gamma1] {
            hs.push(random_dilation(&g, 4, i as u64, class).unwrap().hypergraph);
        }
        for h in hs.into_iter().filter(|h| h.order() <= 20) {
            for (p, want) in [
                (Parameter::Gamma, common::gamma(&h)),
                (Parameter::Nu, common::nu(&h)),
                (Parameter::Tau, common::tau(&h)),
            ] {
                let c = invariants::solve(&h, p, &bnb()).unwrap();
                assert_eq!(c.value, want, "{p} of {:?}", h.edge_lists());
                assert!(c.verify(&h));
            }
            checked += 1;
        }
    }
    assert!(checked > 50);
}

#[test]
fn both_modes_match_brute_force_on_random_hypergraphs() {
    let mut rng = common::rng(5);
    for _ in 0..200 {
        let h = common::random_hypergraph(12, 10, &mut rng);
        for (p, want) in [
            (Parameter::Gamma, common::gamma(&h)),
            (Parameter::Nu, common::nu(&h)),
            (Parameter::Tau, common::tau(&h)),
        ] {
            for cfg in [bnb(), exhaustive()] {
                let c = invariants::solve(&h, p, &cfg).unwrap();
                assert_eq!(c.value, want, "{p} {:?} of {:?}", cfg.mode, h.edge_lists());
                assert!(c.verify(&h));
            }
        }
    }
}

#[test]
fn witnesses_do_not_depend_on_mode() {
    let mut rng = common::rng(8);
    for _ in 0..100 {
        let h = common::random_hypergraph(10, 8, &mut rng);
        for p in [Parameter::Gamma, Parameter::Nu, Parameter::Tau] {
            let a = invariants::solve(&h, p, &bnb()).unwrap();
            let b = invariants::solve(&h, p, &exhaustive()).unwrap();
            assert_eq!(a.witness, b.witness, "{p} of {:?}", h.edge_lists());
        }
    }
}
