//! Seeded property suites: each one checks a proved statement about
//! socles of ideal powers on a family of generated instances, so any
//! failure is a bug (in the arithmetic, in a decider, or in the
//! statement's transcription) and is dumped with a replayable
//! instance.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::census::RunConfig;
use crate::complex::{SimplicialComplex, VertexSet};
use crate::constructions;
use crate::error::Error;
use crate::formulas;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::sampling;
use crate::socle::{self, SocleStrategy};

/// The available property suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Socle exponents of `S/I^k` stay at most `k - 1` for squarefree `I`.
    Powersocle,
    /// Socle exponents of `S/J` stay at most `c_i - 1` for general `J`.
    GeneralBound,
    /// Single degree above the threshold forces an empty socle at power `k`.
    HoweverA,
    /// At the threshold with depth zero: the socle is exactly the
    /// maximal candidate and stays nonzero in all higher powers.
    HoweverC,
    /// The Veronese depth formula's zero set matches the socle oracle.
    HhBoundary,
    /// A maximal socle element at power `k` forces `k < n` and
    /// positive depth below `k`.
    Smallern,
    /// The top-degree Veronese family: depth-zero exactly from power `k` on.
    Allk,
    /// The two constructed families have depth-zero squares with the
    /// full product of variables in the socle.
    Examples,
    /// The nested-intersection bound behind the threshold.
    IntersectionChain,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Powersocle,
        Suite::GeneralBound,
        Suite::HoweverA,
        Suite::HoweverC,
        Suite::HhBoundary,
        Suite::Smallern,
        Suite::Allk,
        Suite::Examples,
        Suite::IntersectionChain,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Powersocle => "powersocle",
            Suite::GeneralBound => "general-bound",
            Suite::HoweverA => "however-a",
            Suite::HoweverC => "however-c",
            Suite::HhBoundary => "hh-boundary",
            Suite::Smallern => "smallern",
            Suite::Allk => "allk",
            Suite::Examples => "examples",
            Suite::IntersectionChain => "intersection-chain",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown suite {s:?}; expected one of: {}",
                    Suite::ALL.map(|s| s.name()).join(", ")
                )
            })
    }
}

/// One failed check: what went wrong plus a replayable instance dump.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteFailure {
    pub description: String,
    pub instance: String,
}

/// Outcome of one suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: usize,
    pub passes: usize,
    pub budget_exceeded: usize,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    fn new(suite: Suite, seed: u64) -> Self {
        Self {
            suite: suite.name().into(),
            seed,
            checks: 0,
            passes: 0,
            budget_exceeded: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, description: impl FnOnce() -> String, instance: impl FnOnce() -> String) {
        self.checks += 1;
        if ok {
            self.passes += 1;
        } else {
            self.failures.push(SuiteFailure {
                description: description(),
                instance: instance(),
            });
        }
    }

    /// Records an oracle outcome: budget errors are counted apart,
    /// any other error is itself a failure.
    fn record_result(
        &mut self,
        outcome: Result<bool, Error>,
        description: impl FnOnce() -> String,
        instance: impl FnOnce() -> String,
    ) {
        match outcome {
            Ok(ok) => self.record(ok, description, instance),
            Err(e) if e.is_budget() => self.budget_exceeded += 1,
            Err(e) => self.record(false, || format!("{}: {e}", description()), instance),
        }
    }
}

fn compact(ideal: &MonomialIdeal) -> String {
    serde_json::to_string(ideal).expect("ideal serializes")
}

/// Runs one suite under the given config.
pub fn run_suite(suite: Suite, config: &RunConfig) -> SuiteReport {
    match suite {
        Suite::Powersocle => powersocle(config),
        Suite::GeneralBound => general_bound(config),
        Suite::HoweverA => however_a(config),
        Suite::HoweverC => however_c(config),
        Suite::HhBoundary => hh_boundary(config),
        Suite::Smallern => smallern(config),
        Suite::Allk => allk(config),
        Suite::Examples => examples(config),
        Suite::IntersectionChain => intersection_chain(config),
    }
}

/// Runs every suite in declaration order.
pub fn run_all(config: &RunConfig) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|s| run_suite(*s, config)).collect()
}

fn powersocle(config: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Powersocle, config.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.sample_count {
        let n = rng.random_range(2..=config.n_max.max(2));
        let k = rng.random_range(1..=config.k_max.max(1));
        let ideal = sampling::random_squarefree_ideal(&mut rng, n);
        report.record_result(
            socle::verify_exponent_bound(&ideal, k, config.box_budget),
            || format!("socle exponent above k-1 = {} at power k = {k}", k - 1),
            || compact(&ideal),
        );
    }
    report
}

fn general_bound(config: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::GeneralBound, config.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.sample_count {
        let n = rng.random_range(2..=config.n_max.max(2));
        let ideal = sampling::random_general_ideal(&mut rng, n, 3);
        let outcome = socle::socle_box_bound(&ideal).and_then(|bound| {
            let set =
                socle::socle_set(&ideal, SocleStrategy::CrossChecked, config.box_budget)?;
            Ok(set.iter().all(|u| {
                u.exponents().iter().zip(&bound).all(|(&e, &b)| e <= b)
            }))
        });
        report.record_result(
            outcome,
            || "socle exponent above the per-variable bound c_i - 1".into(),
            || compact(&ideal),
        );
    }
    report
}

/// All `(n, d, k)` with `d` strictly above the threshold.
fn above_threshold_triples(config: &RunConfig) -> Vec<(usize, usize, u32)> {
    let mut triples = Vec::new();
    for n in 2..=config.n_max.max(2) {
        for k in 1..=config.k_max.max(1) {
            for d in 1..=n {
                if formulas::degree_above_threshold(n, d, k) {
                    triples.push((n, d, k));
                }
            }
        }
    }
    triples
}

fn binomial(n: usize, d: usize) -> usize {
    let mut c: usize = 1;
    for i in 0..d {
        c = c * (n - i) / (i + 1);
    }
    c
}

fn however_a(config: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::HoweverA, config.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let triples = above_threshold_triples(config);
    for _ in 0..config.sample_count {
        let (n, d, k) = triples[rng.random_range(0..triples.len())];
        let count = rng.random_range(1..=binomial(n, d));
        let ideal = sampling::random_single_degree_ideal(&mut rng, n, d, count)
            .expect("parameters are in range");
        let outcome = socle::socle_report_of_power(
            &ideal,
            k,
            SocleStrategy::CrossChecked,
            config.box_budget,
        )
        .map(|r| !r.depth_zero);
        report.record_result(
            outcome,
            || {
                format!(
                    "nonempty socle at power k = {k} despite degree d = {d} above threshold {}",
                    formulas::threshold(n, k)
                )
            },
            || compact(&ideal),
        );
    }
    report
}

fn however_c(config: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::HoweverC, config.seed);
    for n in 1..=config.n_max {
        for d in 1..=n {
            for k in 1..=config.k_max {
                if !formulas::degree_at_threshold(n, d, k) {
                    continue;
                }
                let ideal = constructions::squarefree_veronese(n, d)
                    .expect("1 <= d <= n");
                let power_report = match socle::socle_report_of_power(
                    &ideal,
                    k,
                    SocleStrategy::CrossChecked,
                    config.box_budget,
                ) {
                    Ok(r) => r,
                    Err(e) if e.is_budget() => {
                        report.budget_exceeded += 1;
                        continue;
                    }
                    Err(e) => {
                        report.record(false, || e.to_string(), || compact(&ideal));
                        continue;
                    }
                };
                if !power_report.depth_zero {
                    // The equality case only makes claims once depth
                    // zero is reached at k.
                    continue;
                }
                let candidate = Monomial::full_support_power(n, k - 1);
                report.record(
                    power_report.socle == vec![candidate],
                    || {
                        format!(
                            "socle at power {k} must be exactly the maximal candidate \
                             for (n, d, k) = ({n}, {d}, {k})"
                        )
                    },
                    || compact(&ideal),
                );
                let probe_to = (k + 2).max(config.l_max);
                let profile = match socle::depth_zero_profile(
                    &ideal,
                    probe_to,
                    SocleStrategy::CrossChecked,
                    config.box_budget,
                ) {
                    Ok(p) => p,
                    Err(e) if e.is_budget() => {
                        report.budget_exceeded += 1;
                        continue;
                    }
                    Err(e) => {
                        report.record(false, || e.to_string(), || compact(&ideal));
                        continue;
                    }
                };
                report.record(
                    (k..=probe_to).all(|l| profile[(l - 1) as usize]),
                    || {
                        format!(
                            "depth must stay zero for every power >= {k} \
                             for (n, d, k) = ({n}, {d}, {k})"
                        )
                    },
                    || compact(&ideal),
                );
                if n > 1 {
                    // Depth stabilizes at zero from the first true
                    // index on, so that index must stay below n.
                    let first_true = profile
                        .iter()
                        .position(|&b| b)
                        .map(|i| i + 1)
                        .unwrap_or(usize::MAX);
                    report.record(
                        first_true < n,
                        || {
                            format!(
                                "depth stabilization index {first_true} must be \
                                 below n = {n} for (n, d, k) = ({n}, {d}, {k})"
                            )
                        },
                        || compact(&ideal),
                    );
                }
            }
        }
    }
    report
}

fn hh_boundary(config: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::HhBoundary, config.seed);
    for n in 1..=config.n_max {
        for d in 1..=n {
            for k in 1..=config.k_max {
                let ideal = constructions::squarefree_veronese(n, d)
                    .expect("1 <= d <= n");
                let formula_zero = formulas::hh_depth(n, d, k) == 0;
                let outcome = socle::socle_report_of_power(
                    &ideal,
                    k,
                    SocleStrategy::CrossChecked,
                    config.box_budget,
                )
                .map(|r| r.depth_zero == formula_zero);
                report.record_result(
                    outcome,
                    || {
                        format!(
                            "depth formula and socle oracle disagree at \
                             (n, d, k) = ({n}, {d}, {k}); formula says depth {}",
                            formulas::hh_depth(n, d, k)
                        )
                    },
                    || compact(&ideal),
                );
            }
        }
    }
    report
}

fn smallern(config: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Smallern, config.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let mut instances: Vec<(MonomialIdeal, u32)> = Vec::new();
    for n in 3..=config.n_max.max(3) {
        instances.push((constructions::example_a(n).expect("n >= 3"), 2));
    }
    for d in 2..=3 {
        instances.push((constructions::example_b(d).expect("d >= 2"), 2));
    }
    for k in 2..=config.k_max.max(2) {
        instances.push((constructions::allk_ideal(k).expect("k >= 2"), k));
    }
    for _ in 0..config.sample_count {
        let n = rng.random_range(2..=config.n_max.max(2));
        let k = rng.random_range(1..=config.k_max.max(1));
        instances.push((sampling::random_squarefree_ideal(&mut rng, n), k));
    }

    for (ideal, k) in instances {
        let n = ideal.n();
        if n <= 1 {
            continue;
        }
        let power_report = match socle::socle_report_of_power(
            &ideal,
            k,
            SocleStrategy::CrossChecked,
            config.box_budget,
        ) {
            Ok(r) => r,
            Err(e) if e.is_budget() => {
                report.budget_exceeded += 1;
                continue;
            }
            Err(e) => {
                report.record(false, || e.to_string(), || compact(&ideal));
                continue;
            }
        };
        if !power_report.has_maximal_socle {
            // The property is conditional on a maximal socle element.
            report.record(true, String::new, String::new);
            continue;
        }
        report.record(
            (k as usize) < n,
            || format!("maximal socle at power k = {k} requires k < n = {n}"),
            || compact(&ideal),
        );
        if k > 1 {
            let profile_ok = socle::depth_zero_profile(
                &ideal,
                k - 1,
                SocleStrategy::CrossChecked,
                config.box_budget,
            )
            .map(|profile| profile.iter().all(|&depth_zero| !depth_zero));
            report.record_result(
                profile_ok,
                || {
                    format!(
                        "depth must be positive below power k = {k} \
                         when the maximal socle element appears at k"
                    )
                },
                || compact(&ideal),
            );
        }
    }
    report
}

fn allk(config: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Allk, config.seed);
    for k in 2..=config.k_max.max(2) {
        let ideal = constructions::allk_ideal(k).expect("k >= 2");
        let n = ideal.n();
        report.record(
            (k as usize) < n,
            || format!("allk family must satisfy k = {k} < n = {n}"),
            || compact(&ideal),
        );
        // The family sits exactly on the threshold, so depth stays
        // zero from power k on; probe at least one power past k.
        let probe_to = (k + 1).max(config.l_max);
        let mut expected = vec![false; (k - 1) as usize];
        expected.extend(std::iter::repeat_n(true, (probe_to - k + 1) as usize));
        let profile_ok = socle::depth_zero_profile(
            &ideal,
            probe_to,
            SocleStrategy::CrossChecked,
            config.box_budget,
        )
        .map(|profile| profile == expected);
        report.record_result(
            profile_ok,
            || {
                format!(
                    "allk(k = {k}) profile must be depth-zero exactly from power {k} on"
                )
            },
            || compact(&ideal),
        );
        let complex = SimplicialComplex::from_facet_ideal(&ideal)
            .expect("veronese ideals are squarefree");
        report.record(
            complex.maximal_socle_check(k).maximal_socle,
            || format!("allk(k = {k}) must pass both intersection conditions at k"),
            || compact(&ideal),
        );
    }
    report
}

fn examples(config: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Examples, config.seed);
    let mut families: Vec<(String, MonomialIdeal)> = Vec::new();
    for n in 3..=6 {
        families.push((format!("example_a({n})"), constructions::example_a(n).unwrap()));
    }
    for d in 2..=4 {
        families.push((format!("example_b({d})"), constructions::example_b(d).unwrap()));
    }
    for (name, ideal) in families {
        let n = ideal.n();
        let outcome = socle::socle_report_of_power(
            &ideal,
            2,
            SocleStrategy::CrossChecked,
            config.box_budget,
        )
        .map(|r| {
            r.depth_zero && r.socle.contains(&Monomial::full_support_power(n, 1))
        });
        report.record_result(
            outcome,
            || format!("{name} must have a depth-zero square with x_1...x_n in the socle"),
            || compact(&ideal),
        );
    }
    report
}

fn intersection_chain(config: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::IntersectionChain, config.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let triples = above_threshold_triples(config);
    for _ in 0..config.sample_count {
        let (n, d, k) = triples[rng.random_range(0..triples.len())];
        let sets: Vec<VertexSet> = (0..k)
            .map(|_| {
                let picked = rand::seq::index::sample(&mut rng, n, d);
                VertexSet::from_vertices(picked.iter().map(|i| i + 1))
                    .expect("vertices in range")
            })
            .collect();
        let outcome = formulas::intersection_chain_check(&sets, n, k);
        report.record_result(
            outcome,
            || {
                format!(
                    "prefix intersection bound violated for (n, d, k) = ({n}, {d}, {k})"
                )
            },
            || {
                sets.iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            },
        );
    }
    report
}
