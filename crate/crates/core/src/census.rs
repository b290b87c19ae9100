//! Instance sweeps comparing the combinatorial deciders against the
//! ideal-arithmetic oracle: exhaustive labeled-graph censuses and
//! seeded random complex censuses.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::graph::Graph;
use crate::monomial::Monomial;
use crate::sampling;
use crate::socle::{self, SocleStrategy, DEFAULT_BOX_BUDGET};

/// Bounds and seed for a census or verification run. Identical
/// configs reproduce runs byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// Seed for every randomized choice in the run.
    pub seed: u64,
    /// Cap on candidate monomials per socle enumeration.
    pub box_budget: u64,
    /// Largest power probed by depth-zero profiles.
    pub l_max: u32,
    /// Largest power probed by the property suites.
    pub k_max: u32,
    /// Largest variable count probed by the property suites.
    pub n_max: usize,
    /// Number of random instances per suite or sampled census.
    pub sample_count: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            box_budget: DEFAULT_BOX_BUDGET,
            l_max: 4,
            k_max: 3,
            n_max: 5,
            sample_count: 200,
        }
    }
}

/// Per-graph census record: both decider verdicts next to both oracle
/// verdicts, plus the instance in graph-file form for replay.
#[derive(Debug, Clone, Serialize)]
pub struct GraphRecord {
    pub index: u64,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub file: String,
    pub decider_depth_zero: bool,
    pub decider_witness: Option<[usize; 3]>,
    pub oracle_depth_zero: bool,
    pub decider_maximal_socle: bool,
    pub oracle_maximal_socle: bool,
    pub agree: bool,
}

/// Per-complex census record: the intersection conditions next to the
/// power-membership facts they must match. The singleton-cover pair is
/// only defined when every k facets intersect.
#[derive(Debug, Clone, Serialize)]
pub struct ComplexRecord {
    pub index: u64,
    pub n: usize,
    pub k: u32,
    pub facets: Vec<Vec<usize>>,
    pub file: String,
    pub decider_intersections_nonempty: bool,
    pub oracle_candidate_outside_power: bool,
    pub decider_singleton_cover: Option<bool>,
    pub oracle_multiples_in_power: Option<bool>,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum CensusRecord {
    Graph(GraphRecord),
    Complex(ComplexRecord),
}

impl CensusRecord {
    pub fn agree(&self) -> bool {
        match self {
            CensusRecord::Graph(r) => r.agree,
            CensusRecord::Complex(r) => r.agree,
        }
    }
}

/// Outcome of a census: per-instance records plus the summary counts.
/// `agreements + disagreements.len() == instances_checked`; instances
/// skipped for budget reasons are counted separately and never as
/// agreements.
#[derive(Debug, Clone, Serialize)]
pub struct CensusResult {
    pub family: String,
    pub n: usize,
    pub k: u32,
    pub exhaustive: bool,
    pub instances_checked: usize,
    pub agreements: usize,
    pub budget_exceeded: usize,
    pub disagreements: Vec<CensusRecord>,
    pub records: Vec<CensusRecord>,
}

impl CensusResult {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Exhaustive labeled-graph census for the depth-zero-square
/// criterion and the maximal-socle clause, both checked against the
/// socle oracle on the squared edge ideal.
///
/// All `2^(n choose 2)` labeled graphs are enumerated when that count
/// is at most 65536; beyond that, `config.sample_count` seeded random
/// edge masks are drawn instead.
pub fn census_graphs(n: usize, config: &RunConfig) -> Result<CensusResult, Error> {
    let bits = Graph::complete_edge_list(n).len();
    if bits > 63 {
        return Err(Error::TooManyVertices { n });
    }
    let total: u64 = 1 << bits;
    let exhaustive = total <= 65_536;
    let masks: Vec<u64> = if exhaustive {
        (0..total).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        (0..config.sample_count)
            .map(|_| rng.random_range(0..total))
            .collect()
    };

    let mut result = CensusResult {
        family: "graphs".into(),
        n,
        k: 2,
        exhaustive,
        instances_checked: 0,
        agreements: 0,
        budget_exceeded: 0,
        disagreements: Vec::new(),
        records: Vec::new(),
    };

    for mask in masks {
        let graph = Graph::from_edge_mask(n, mask)?;
        let decider_witness = graph.depth2_criterion();
        let decider_maximal_socle = graph.maximal_socle_criterion();

        let oracle = match graph_oracle(&graph, config.box_budget) {
            Ok(pair) => pair,
            Err(e) if e.is_budget() => {
                result.budget_exceeded += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let (oracle_depth_zero, oracle_maximal_socle) = oracle;

        let agree = (decider_witness.is_some() == oracle_depth_zero)
            && (decider_maximal_socle == oracle_maximal_socle);
        let record = CensusRecord::Graph(GraphRecord {
            index: mask,
            n,
            edges: graph.edges().collect(),
            file: graph.to_file_string(),
            decider_depth_zero: decider_witness.is_some(),
            decider_witness,
            oracle_depth_zero,
            decider_maximal_socle,
            oracle_maximal_socle,
            agree,
        });
        result.instances_checked += 1;
        if agree {
            result.agreements += 1;
        } else {
            result.disagreements.push(record.clone());
        }
        result.records.push(record);
    }
    Ok(result)
}

/// Oracle pair for a graph: depth-zero of `S/I^2` and membership of
/// `x_1...x_n` in its socle. A graph without edges has the zero edge
/// ideal, so its quotient is the whole ring: no socle at all.
fn graph_oracle(graph: &Graph, budget: u64) -> Result<(bool, bool), Error> {
    if graph.edge_count() == 0 {
        return Ok((false, false));
    }
    let square = graph.edge_ideal()?.power(2)?;
    let set = socle::socle_set(&square, SocleStrategy::CrossChecked, budget)?;
    let full = Monomial::full_support_power(graph.n(), 1);
    Ok((!set.is_empty(), set.contains(&full)))
}

/// Seeded random-complex census: the facet-intersection conditions
/// against direct membership of `(x_1...x_n)^{k-1}` and its variable
/// multiples in the k-th power of the facet ideal.
pub fn census_complexes(
    n: usize,
    k: u32,
    config: &RunConfig,
) -> Result<CensusResult, Error> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut result = CensusResult {
        family: "complexes".into(),
        n,
        k,
        exhaustive: false,
        instances_checked: 0,
        agreements: 0,
        budget_exceeded: 0,
        disagreements: Vec::new(),
        records: Vec::new(),
    };

    for index in 0..config.sample_count {
        let complex = sampling::random_antichain_complex(&mut rng, n);
        let power = complex.facet_ideal().power(k)?;
        let candidate = Monomial::full_support_power(n, k - 1);

        let decider_a = complex.k_intersections_nonempty(k).holds;
        let oracle_a = !power.contains(&candidate)?;

        let (decider_b, oracle_b) = if decider_a && oracle_a {
            let cover = complex.singleton_intersection_cover(k).holds;
            let mut all_in = true;
            for i in 0..n {
                if !power.contains(&candidate.times_variable(i)?)? {
                    all_in = false;
                    break;
                }
            }
            (Some(cover), Some(all_in))
        } else {
            (None, None)
        };

        let agree = decider_a == oracle_a && decider_b == oracle_b;
        let record = CensusRecord::Complex(ComplexRecord {
            index: index as u64,
            n,
            k,
            facets: complex.facets().iter().map(|f| f.vertices()).collect(),
            file: complex.to_file_string(),
            decider_intersections_nonempty: decider_a,
            oracle_candidate_outside_power: oracle_a,
            decider_singleton_cover: decider_b,
            oracle_multiples_in_power: oracle_b,
            agree,
        });
        result.instances_checked += 1;
        if agree {
            result.agreements += 1;
        } else {
            result.disagreements.push(record.clone());
        }
        result.records.push(record);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_census_n3_is_exhaustive_and_clean() {
        let result = census_graphs(3, &RunConfig::default()).unwrap();
        assert!(result.exhaustive);
        assert_eq!(result.instances_checked, 8);
        assert_eq!(result.agreements, 8);
        assert!(result.passed());
    }

    #[test]
    fn graph_census_n4_is_clean() {
        let result = census_graphs(4, &RunConfig::default()).unwrap();
        assert_eq!(result.instances_checked, 64);
        assert!(result.passed());
    }

    #[test]
    fn complex_census_small_is_clean() {
        let config = RunConfig { sample_count: 60, ..RunConfig::default() };
        for k in 1..=3 {
            let result = census_complexes(4, k, &config).unwrap();
            assert_eq!(result.instances_checked, 60);
            assert!(result.passed(), "disagreements: {:?}", result.disagreements);
        }
    }

    #[test]
    fn census_is_deterministic_per_seed() {
        let config = RunConfig { sample_count: 25, ..RunConfig::default() };
        let a = census_complexes(5, 2, &config).unwrap();
        let b = census_complexes(5, 2, &config).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
