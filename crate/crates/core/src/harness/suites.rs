use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    run_suite, HarnessConfig, InstanceResult, NamedCertificate, Outcome, VerificationReport,
};
use crate::dilation::{
    check_structure, generalized_power, random_berge, random_dilation, verify_berge_witness,
    ClassRequest, Dilation, DilationClass,
};
use crate::error::{Error, Result};
use crate::families::{
    extremal_class_gamma1, in_family_g1, in_family_g2b, in_gamma0_extremal_family, Evidence,
    ExtremalClass, NbList,
};
use crate::graph::{
    enumerate_connected, generate, write_graph6, EnumerationConstraints, FamilySpec, Graph,
};
use crate::hypergraph::Hypergraph;
use crate::invariants::{solve, Certificate, Parameter, SolverConfig};

fn require_range(what: &str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::Domain(format!(
            "{what} must lie in [{lo}, {hi}], got {value}"
        )));
    }
    Ok(())
}

/// Connected graphs with at least one edge on `2..=max_n` vertices.
fn connected_graphs(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.extend(enumerate_connected(n, EnumerationConstraints::default())?);
    }
    Ok(out)
}

fn graph_key(g: &Graph) -> String {
    format!("n{}/{}", g.n(), write_graph6(g))
}

/// Runs `body`, turning budget errors into timeouts and any other error
/// into a failure.
fn guarded(key: String, body: impl FnOnce(&mut InstanceResult) -> Result<()>) -> InstanceResult {
    let mut r = InstanceResult::new(key.clone());
    match body(&mut r) {
        Ok(()) => r,
        Err(e) if e.is_budget() => {
            let mut t = InstanceResult::timeout(key, &e);
            t.graph = r.graph;
            t.certificates = r.certificates;
            t
        }
        Err(e) => {
            r.outcome = Outcome::Fail;
            r.violations.push(format!("error: {e}"));
            r
        }
    }
}

struct Values {
    gamma: Certificate,
    nu: Certificate,
    tau: Certificate,
}

impl Values {
    fn of(h: &Hypergraph, solver: &SolverConfig) -> Result<Values> {
        Ok(Values {
            gamma: solve(h, Parameter::Gamma, solver)?,
            nu: solve(h, Parameter::Nu, solver)?,
            tau: solve(h, Parameter::Tau, solver)?,
        })
    }

    fn attach(&self, r: &mut InstanceResult, target: &str) {
        for c in [&self.gamma, &self.nu, &self.tau] {
            r.certificates.push(NamedCertificate {
                target: target.to_string(),
                certificate: c.clone(),
            });
        }
    }
}

fn attach_one(r: &mut InstanceResult, target: &str, c: &Certificate) {
    r.certificates.push(NamedCertificate {
        target: target.to_string(),
        certificate: c.clone(),
    });
}

/// The uniform powers `G^{4,2}` and `G^{4,1}`, then `samples` random
/// dilations cycling through the classes, all drawn from one stream per
/// graph.
fn dilation_corpus(
    g: &Graph,
    index: usize,
    samples: usize,
    seed: u64,
) -> Vec<(String, Result<Dilation>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let mut out = vec![
        ("power-4-2".to_string(), generalized_power(g, 4, 2)),
        ("power-4-1".to_string(), generalized_power(g, 4, 1)),
    ];
    let classes = [
        ClassRequest::Gamma0,
        ClassRequest::Gamma1,
        ClassRequest::Mixed,
    ];
    for j in 0..samples {
        let mut class = classes[j % 3];
        if class == ClassRequest::Mixed && g.edge_count() < 2 {
            class = ClassRequest::Any;
        }
        let k = rng.gen_range(3..=5);
        let s: u64 = rng.gen();
        out.push((
            format!("sample-{j:02}-{class:?}-k{k}").to_lowercase(),
            random_dilation(g, k, s, class),
        ));
    }
    out
}

fn check_dilation_basics(r: &mut InstanceResult, g: &Graph, d: &Dilation) {
    let h = &d.hypergraph;
    let valid = d.witness.validate_for(g, h);
    r.check(valid.is_ok(), || {
        format!("block witness invalid: {:?}", valid.err())
    });
    let berge = verify_berge_witness(g, h, &d.witness.berge_witness());
    r.check(berge == Ok(true), || {
        "natural Berge witness does not verify".into()
    });
    let s = check_structure(g, h, &d.witness);
    r.check(s.all_hold(), || {
        format!("structural properties fail: {s:?}")
    });
}

fn hereditary_checks(r: &mut InstanceResult, gv: &Values, hv: &Values, class: DilationClass) {
    let (gg, gn, gt) = (gv.gamma.value, gv.nu.value, gv.tau.value);
    let (hg, hn, ht) = (hv.gamma.value, hv.nu.value, hv.tau.value);
    let gamma_claim = match class {
        DilationClass::Gamma0 => format!("={gg}"),
        DilationClass::Gamma1 => format!("={gt}"),
        DilationClass::Mixed => format!(" in [{gg}, {gt}]"),
    };
    r.expected = format!("nu(H)={gn} tau(H)={gt} gamma(H){gamma_claim}");
    r.got = format!("nu(H)={hn} tau(H)={ht} gamma(H)={hg}");
    r.check(hn == gn, || format!("nu(H)={hn} differs from nu(G)={gn}"));
    r.check(ht == gt, || format!("tau(H)={ht} differs from tau(G)={gt}"));
    r.check(gg <= hg && hg <= gt, || {
        format!("gamma(H)={hg} outside [gamma(G), tau(G)] = [{gg}, {gt}]")
    });
    match class {
        DilationClass::Gamma0 => r.check(hg == gg, || {
            format!("gamma(H)={hg} differs from gamma(G)={gg}")
        }),
        DilationClass::Gamma1 => r.check(hg == gt, || {
            format!("gamma(H)={hg} differs from tau(G)={gt}")
        }),
        DilationClass::Mixed => {}
    }
}

fn bound_checks(r: &mut InstanceResult, hv: &Values, class: DilationClass) {
    let (hg, hn) = (hv.gamma.value, hv.nu.value);
    r.got = format!("nu(H)={hn} gamma(H)={hg}");
    match class {
        DilationClass::Gamma1 => {
            r.expected = format!("{hn} <= gamma(H) <= {}", 2 * hn);
            r.check(hn <= hg && hg <= 2 * hn, || {
                format!("gamma(H)={hg} outside [nu, 2 nu] = [{hn}, {}]", 2 * hn)
            });
        }
        DilationClass::Gamma0 => {
            r.expected = format!("gamma(H) <= {hn}");
            r.check(hg <= hn, || format!("gamma(H)={hg} exceeds nu(H)={hn}"));
        }
        DilationClass::Mixed => r.expected = "no bound claimed".into(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum DilationSuite {
    Hereditary,
    Bounds,
}

fn dilation_suite(
    which: DilationSuite,
    max_n: usize,
    samples: usize,
    seed: u64,
    cfg: &HarnessConfig,
) -> Result<VerificationReport> {
    require_range("max_n", max_n, 2, 7)?;
    let graphs: Vec<(usize, Graph)> = connected_graphs(max_n)?.into_iter().enumerate().collect();
    let solver = cfg.solver;
    let name = match which {
        DilationSuite::Hereditary => "hereditary",
        DilationSuite::Bounds => "bounds",
    };
    run_suite(name, Some(seed), cfg, graphs, |(index, g)| {
        let base = graph_key(&g);
        let gv = match Values::of(&g.to_hypergraph(), &solver) {
            Ok(v) => v,
            Err(e) if e.is_budget() => return vec![InstanceResult::timeout(base, &e)],
            Err(e) => {
                let mut r = InstanceResult::new(base);
                r.check(false, || format!("error: {e}"));
                return vec![r];
            }
        };
        let mut out = Vec::new();
        for (label, d) in dilation_corpus(&g, index, samples, seed) {
            out.push(guarded(format!("{base}/{label}"), |r| {
                r.graph = Some(write_graph6(&g));
                let d = d?;
                r.hypergraph = Some(d.hypergraph.summary());
                check_dilation_basics(r, &g, &d);
                let hv = Values::of(&d.hypergraph, &solver)?;
                gv.attach(r, "G");
                hv.attach(r, "H");
                match which {
                    DilationSuite::Hereditary => hereditary_checks(r, &gv, &hv, d.class()),
                    DilationSuite::Bounds => bound_checks(r, &hv, d.class()),
                }
                Ok(())
            }));
        }
        if which == DilationSuite::Hereditary {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
            rng.set_stream(index as u64);
            let (h, w) = random_berge(&g, 2, rng.gen());
            out.push(guarded(format!("{base}/berge"), |r| {
                r.graph = Some(write_graph6(&g));
                r.hypergraph = Some(h.summary());
                r.check(verify_berge_witness(&g, &h, &w)?, || {
                    "Berge witness does not verify".into()
                });
                let nu = solve(&h, Parameter::Nu, &solver)?;
                let tau = solve(&h, Parameter::Tau, &solver)?;
                r.expected = format!("nu(H) <= {} tau(H) <= {}", gv.nu.value, gv.tau.value);
                r.got = format!("nu(H)={} tau(H)={}", nu.value, tau.value);
                r.check(nu.value <= gv.nu.value, || {
                    format!("nu(H)={} exceeds nu(G)={}", nu.value, gv.nu.value)
                });
                r.check(tau.value <= gv.tau.value, || {
                    format!("tau(H)={} exceeds tau(G)={}", tau.value, gv.tau.value)
                });
                attach_one(r, "G", &gv.nu);
                attach_one(r, "G", &gv.tau);
                attach_one(r, "H", &nu);
                attach_one(r, "H", &tau);
                Ok(())
            }));
        }
        out
    })
}

/// Parameter identities between every connected graph on at most `max_n`
/// vertices and its dilations: the uniform powers, `samples` random
/// dilations, and one random Berge hypergraph that is not a dilation.
pub fn verify_hereditary(
    max_n: usize,
    samples: usize,
    seed: u64,
    cfg: &HarnessConfig,
) -> Result<VerificationReport> {
    dilation_suite(DilationSuite::Hereditary, max_n, samples, seed, cfg)
}

/// `nu <= gamma <= 2 nu` on dilations with additional vertices everywhere
/// and `gamma <= nu` on those without, over the same corpus.
pub fn verify_bounds(
    max_n: usize,
    samples: usize,
    seed: u64,
    cfg: &HarnessConfig,
) -> Result<VerificationReport> {
    dilation_suite(DilationSuite::Bounds, max_n, samples, seed, cfg)
}

#[derive(Serialize)]
struct Gamma1Detail {
    extremal_class: ExtremalClass,
    keg: bool,
    odd_complete: bool,
}

/// On `G^{4,1}`: `gamma == nu` exactly for König–Egerváry `G`, and
/// `gamma == 2 nu` exactly for `G = K_{2 nu + 1}`.
pub fn crosscheck_extremal_gamma1(max_n: usize, cfg: &HarnessConfig) -> Result<VerificationReport> {
    require_range("max_n", max_n, 2, 7)?;
    let solver = cfg.solver;
    run_suite(
        "extremal-gamma1",
        None,
        cfg,
        connected_graphs(max_n)?,
        |g| {
            vec![guarded(graph_key(&g), |r| {
                r.graph = Some(write_graph6(&g));
                let h = generalized_power(&g, 4, 1)?.hypergraph;
                r.hypergraph = Some(h.summary());
                let gh = solve(&h, Parameter::Gamma, &solver)?;
                let nh = solve(&h, Parameter::Nu, &solver)?;
                let tg = solve(&g.to_hypergraph(), Parameter::Tau, &solver)?;
                let ng = solve(&g.to_hypergraph(), Parameter::Nu, &solver)?;
                for (t, c) in [("H", &gh), ("H", &nh), ("G", &tg), ("G", &ng)] {
                    attach_one(r, t, c);
                }
                let keg = tg.value == ng.value;
                let odd_complete = g.is_complete() && g.n() == 2 * ng.value + 1;
                let class = extremal_class_gamma1(&g)?;
                r.expected = format!("keg={keg} odd_complete={odd_complete}");
                r.got = format!("gamma(H)={} nu(H)={} class={class:?}", gh.value, nh.value);
                r.check((gh.value == nh.value) == keg, || {
                    format!(
                        "gamma(H)==nu(H) is {} but keg is {keg}",
                        gh.value == nh.value
                    )
                });
                r.check((gh.value == 2 * nh.value) == odd_complete, || {
                    format!(
                        "gamma(H)==2nu(H) is {} but odd_complete is {odd_complete}",
                        gh.value == 2 * nh.value
                    )
                });
                let expected_class = if keg {
                    ExtremalClass::Equal
                } else if odd_complete {
                    ExtremalClass::Double
                } else {
                    ExtremalClass::Strict(gh.value)
                };
                r.check(class == expected_class, || {
                    format!("class {class:?}, expected {expected_class:?}")
                });
                r.detail = serde_json::to_value(Gamma1Detail {
                    extremal_class: class,
                    keg,
                    odd_complete,
                })
                .ok();
                Ok(())
            })]
        },
    )
}

/// On `G^{4,2}`: `gamma == nu` exactly for members of the union of the
/// structural families. Disagreements that hinge on a non-bipartite
/// component matched against `nb` are flagged rather than failed.
pub fn crosscheck_extremal_gamma0(
    max_n: usize,
    nb: &NbList,
    cfg: &HarnessConfig,
) -> Result<VerificationReport> {
    require_range("max_n", max_n, 2, 8)?;
    let solver = cfg.solver;
    run_suite(
        "extremal-gamma0",
        None,
        cfg,
        connected_graphs(max_n)?,
        |g| {
            vec![guarded(graph_key(&g), |r| {
                r.graph = Some(write_graph6(&g));
                let h = generalized_power(&g, 4, 2)?.hypergraph;
                r.hypergraph = Some(h.summary());
                let gh = solve(&h, Parameter::Gamma, &solver)?;
                let nh = solve(&h, Parameter::Nu, &solver)?;
                attach_one(r, "H", &gh);
                attach_one(r, "H", &nh);
                let verdict = in_gamma0_extremal_family(&g, nb)?;
                let equal = gh.value == nh.value;
                r.expected = format!("gamma(H)==nu(H) iff member; member={}", verdict.member);
                r.got = format!("gamma(H)={} nu(H)={}", gh.value, nh.value);
                if equal != verdict.member {
                    let via_candidates = matches!(
                        &verdict.evidence,
                        Evidence::Components { components, .. } if components.iter().any(|c| c.candidate_pathway)
                    );
                    r.violations.push(format!(
                        "{:?} verdict {} disagrees with gamma==nu {equal}",
                        verdict.family, verdict.member
                    ));
                    r.outcome = if via_candidates {
                        Outcome::Flagged
                    } else {
                        Outcome::Fail
                    };
                }
                r.detail = serde_json::to_value(&verdict).ok();
                Ok(())
            })]
        },
    )
}

#[derive(Serialize)]
struct Realized {
    gamma1: Vec<usize>,
    gamma0: Vec<usize>,
}

struct Construction {
    key: String,
    spec: FamilySpec,
    class: DilationClass,
    nu: usize,
    gamma: usize,
}

fn constructions(n: usize) -> Vec<Construction> {
    let mut out = Vec::new();
    let mut push = |key: String, spec: FamilySpec, class, gamma| {
        out.push(Construction {
            key,
            spec,
            class,
            nu: n,
            gamma,
        });
    };
    push(
        format!("n{n}/cycle"),
        FamilySpec::Cycle(2 * n + 1),
        DilationClass::Gamma1,
        n + 1,
    );
    push(
        format!("n{n}/complete/gamma1"),
        FamilySpec::Complete(2 * n),
        DilationClass::Gamma1,
        2 * n - 1,
    );
    push(
        format!("n{n}/complete/gamma0"),
        FamilySpec::Complete(2 * n),
        DilationClass::Gamma0,
        1,
    );
    for r in 2..n {
        push(
            format!("n{n}/complete_minus_clique/r{r}"),
            FamilySpec::CompleteMinusClique(n, r),
            DilationClass::Gamma1,
            2 * n - r,
        );
    }
    if n > 2 {
        for r in 1..=(n - 1) / 2 {
            push(
                format!("n{n}/g_nr/r{r}"),
                FamilySpec::GNr(n, r),
                DilationClass::Gamma0,
                2 * r + 1,
            );
            push(
                format!("n{n}/ghat_nr/r{r}"),
                FamilySpec::GHatNr(n, r),
                DilationClass::Gamma0,
                2 * r,
            );
        }
    }
    out
}

/// Dilations used per class: `G^{4,1}` and `G^{5,2}` carry additional
/// vertices, `G^{4,2}` and `G^{6,3}` do not.
fn class_powers(class: DilationClass) -> [(usize, usize); 2] {
    match class {
        DilationClass::Gamma1 => [(4, 1), (5, 2)],
        _ => [(4, 2), (6, 3)],
    }
}

/// The explicit graphs whose dilations realize every non-extremal value of
/// `gamma` for matching number `n`, for each `2 <= n <= n_max`.
pub fn verify_nonextremal(n_max: usize, cfg: &HarnessConfig) -> Result<VerificationReport> {
    require_range("n_max", n_max, 2, 6)?;
    let solver = cfg.solver;
    let mut items: Vec<(usize, Option<Construction>)> = Vec::new();
    for n in 2..=n_max {
        items.extend(constructions(n).into_iter().map(|c| (n, Some(c))));
        items.push((n, None));
    }
    run_suite("nonextremal", None, cfg, items, |(n, c)| match c {
        Some(c) => class_powers(c.class)
            .into_iter()
            .map(|(k, s)| {
                guarded(format!("{}/power-{k}-{s}", c.key), |r| {
                    let g = generate(&c.spec)?;
                    r.graph = Some(write_graph6(&g));
                    let d = generalized_power(&g, k, s)?;
                    r.hypergraph = Some(d.hypergraph.summary());
                    r.check(d.class() == c.class, || {
                        format!("dilation class {:?}", d.class())
                    });
                    let gh = solve(&d.hypergraph, Parameter::Gamma, &solver)?;
                    let nh = solve(&d.hypergraph, Parameter::Nu, &solver)?;
                    attach_one(r, "H", &gh);
                    attach_one(r, "H", &nh);
                    r.expected = format!("nu(H)={} gamma(H)={}", c.nu, c.gamma);
                    r.got = format!("nu(H)={} gamma(H)={}", nh.value, gh.value);
                    r.check(nh.value == c.nu, || format!("nu(H)={}", nh.value));
                    r.check(gh.value == c.gamma, || format!("gamma(H)={}", gh.value));
                    Ok(())
                })
            })
            .collect(),
        None => {
            let mut r = InstanceResult::new(format!("n{n}/coverage"));
            let mut gamma1: Vec<usize> = Vec::new();
            let mut gamma0: Vec<usize> = Vec::new();
            for c in constructions(n) {
                match c.class {
                    DilationClass::Gamma1 => gamma1.push(c.gamma),
                    _ => gamma0.push(c.gamma),
                }
            }
            gamma1.sort_unstable();
            gamma1.dedup();
            gamma0.sort_unstable();
            gamma0.dedup();
            let want1: Vec<usize> = (n + 1..2 * n).collect();
            let want0: Vec<usize> = (1..n).collect();
            r.expected = format!("gamma1 covers {want1:?}, gamma0 covers {want0:?}");
            r.got = format!("gamma1 {gamma1:?}, gamma0 {gamma0:?}");
            r.check(want1.iter().all(|m| gamma1.contains(m)), || {
                "a value above nu is not realized".into()
            });
            r.check(want0.iter().all(|m| gamma0.contains(m)), || {
                "a value below nu is not realized".into()
            });
            r.detail = serde_json::to_value(Realized { gamma1, gamma0 }).ok();
            vec![r]
        }
    })
}

/// `K_{2,n}` has `gamma(G^{4,2}) == nu(G^{4,2}) == 2` and lies in the
/// bipartite family, though outside the non-bipartite candidates and the
/// minimum-degree-1 family.
pub fn verify_appendix(n_max: usize, cfg: &HarnessConfig) -> Result<VerificationReport> {
    require_range("n_max", n_max, 2, 5)?;
    let solver = cfg.solver;
    let nb = NbList::shipped();
    run_suite("appendix", None, cfg, (2..=n_max).collect(), |n| {
        vec![guarded(format!("k2_{n}"), |r| {
            let g = generate(&FamilySpec::CompleteBipartite(2, n))?;
            r.graph = Some(write_graph6(&g));
            let h = generalized_power(&g, 4, 2)?.hypergraph;
            r.hypergraph = Some(h.summary());
            let gh = solve(&h, Parameter::Gamma, &solver)?;
            let nh = solve(&h, Parameter::Nu, &solver)?;
            attach_one(r, "H", &gh);
            attach_one(r, "H", &nh);
            let g2b = in_family_g2b(&g);
            let candidate = nb.position(&g);
            let g1 = in_family_g1(&g, &nb)?;
            r.expected = "gamma(H)=2 nu(H)=2 g2b=true candidate=none g1=false".into();
            r.got = format!(
                "gamma(H)={} nu(H)={} g2b={} candidate={candidate:?} g1={}",
                gh.value, nh.value, g2b.member, g1.member
            );
            r.check(gh.value == 2 && nh.value == 2, || {
                "values differ from 2".into()
            });
            r.check(g2b.member, || "not accepted by the bipartite family".into());
            r.check(candidate.is_none(), || {
                "matches a non-bipartite candidate".into()
            });
            r.check(!g1.member, || {
                "accepted by the minimum-degree-1 family".into()
            });
            r.detail = serde_json::to_value([&g2b, &g1]).ok();
            Ok(())
        })]
    })
}
