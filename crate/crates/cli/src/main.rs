//! Command-line front end: file ingestion, one subcommand per decider
//! and oracle, censuses over instance families, and the property
//! suites, with text or JSON reports.
//!
//! Exit codes: 0 all checks pass, 1 property violation found,
//! 2 usage or parse error, 3 resource budget exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use socle::census::{self, CensusResult, RunConfig};
use socle::socle::DEFAULT_BOX_BUDGET;
use socle::verify::{self, Suite, SuiteReport};
use socle::{
    Error, Graph, Monomial, MonomialIdeal, SimplicialComplex, SocleStrategy,
};

#[derive(Parser)]
#[command(
    name = "socle",
    version,
    about = "Socles of powers of monomial ideals: exact oracles, \
             combinatorial deciders, censuses, and property suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    /// Run both enumeration strategies and cross-check them.
    Both,
    /// Enumerate the candidate exponent box.
    Box,
    /// Enumerate multiples of the colon ideal's generators.
    Colon,
}

impl Strategy {
    fn to_core(self) -> SocleStrategy {
        match self {
            Strategy::Both => SocleStrategy::CrossChecked,
            Strategy::Box => SocleStrategy::BoxEnumeration,
            Strategy::Colon => SocleStrategy::ColonEnumeration,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Graphs,
    Complexes,
}

#[derive(Subcommand)]
enum Command {
    /// Socle of S/J for an ideal file, or of S/I^k when --k is given
    /// (the file must then hold a squarefree ideal).
    Socle {
        ideal_file: PathBuf,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value_t = Strategy::Both)]
        strategy: Strategy,
        #[arg(long, env = "SOCLE_BUDGET", default_value_t = DEFAULT_BOX_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// k-th power of the ideal in a file, printed in the ideal format.
    Power {
        ideal_file: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Membership of a monomial (given by its exponents) in the ideal,
    /// or in its k-th power with --k.
    Member {
        ideal_file: PathBuf,
        /// Exponent vector of the probe monomial, one entry per variable.
        #[arg(num_args = 1..)]
        exponents: Vec<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Depth-zero criterion for the square of a graph's edge ideal,
    /// with the witness triangle; --oracle also runs the socle oracle
    /// and reports agreement.
    GraphCheck {
        graph_file: PathBuf,
        #[arg(long)]
        oracle: bool,
        #[arg(long, env = "SOCLE_BUDGET", default_value_t = DEFAULT_BOX_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Facet-intersection conditions for the maximal socle monomial of
    /// S/I(Δ)^k; --oracle also checks the power memberships directly.
    ComplexCheck {
        facet_file: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decider-versus-oracle census over an instance family.
    Census {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Power to probe; defaults to 2 and must be 2 for graphs.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, env = "SOCLE_BUDGET", default_value_t = DEFAULT_BOX_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Seeded property suites; any failure dumps a replayable instance.
    Verify {
        /// Suite name, or "all".
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        k_max: u32,
        #[arg(long, default_value_t = 4)]
        l_max: u32,
        #[arg(long, env = "SOCLE_BUDGET", default_value_t = DEFAULT_BOX_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed-form values: the Veronese depth formula, the degree
    /// threshold, and the parameters meeting it exactly.
    Formula {
        #[command(subcommand)]
        which: FormulaCommand,
    },
}

#[derive(Subcommand)]
enum FormulaCommand {
    /// max(0, n - k(n - d) - 1): depth of S/I^k for the degree-d
    /// squarefree Veronese ideal in n variables.
    Hh {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u32,
    },
    /// The exact rational threshold ((k-1)n + 1)/k.
    Threshold {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
    },
    /// The (n, d) meeting the threshold exactly for given k >= 2, r >= 0.
    Params {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
    },
}

/// Outcome severity, in exit-code order.
enum Outcome {
    Pass,
    Violation,
    UsageError(String),
    Budget(String),
}

impl Outcome {
    fn exit_code(self) -> ExitCode {
        match self {
            Outcome::Pass => ExitCode::from(0),
            Outcome::Violation => ExitCode::from(1),
            Outcome::UsageError(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Outcome::Budget(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli.command).exit_code()
}

fn classify(error: Error) -> Outcome {
    if error.is_budget() {
        Outcome::Budget(error.to_string())
    } else {
        Outcome::UsageError(error.to_string())
    }
}

fn read_file(path: &PathBuf) -> Result<String, Outcome> {
    fs::read_to_string(path)
        .map_err(|e| Outcome::UsageError(format!("{}: {e}", path.display())))
}

fn load_ideal(path: &PathBuf) -> Result<MonomialIdeal, Outcome> {
    let text = read_file(path)?;
    MonomialIdeal::from_json(&text)
        .map_err(|e| Outcome::UsageError(format!("{}: {e}", path.display())))
}

fn load_graph(path: &PathBuf) -> Result<Graph, Outcome> {
    let text = read_file(path)?;
    Graph::parse(&text)
        .map_err(|e| Outcome::UsageError(format!("{}: {e}", path.display())))
}

fn load_complex(path: &PathBuf) -> Result<SimplicialComplex, Outcome> {
    let text = read_file(path)?;
    SimplicialComplex::parse(&text)
        .map_err(|e| Outcome::UsageError(format!("{}: {e}", path.display())))
}

fn emit(format: Format, value: &serde_json::Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable"))
        }
        Format::Text => println!("{}", text()),
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Socle { ideal_file, k, strategy, budget, format } => {
            cmd_socle(ideal_file, k, strategy, budget, format)
        }
        Command::Power { ideal_file, k, format } => cmd_power(ideal_file, k, format),
        Command::Member { ideal_file, exponents, k, format } => {
            cmd_member(ideal_file, exponents, k, format)
        }
        Command::GraphCheck { graph_file, oracle, budget, format } => {
            cmd_graph_check(graph_file, oracle, budget, format)
        }
        Command::ComplexCheck { facet_file, k, oracle, format } => {
            cmd_complex_check(facet_file, k, oracle, format)
        }
        Command::Census { family, n, k, seed, samples, budget, format } => {
            cmd_census(family, n, k, seed, samples, budget, format)
        }
        Command::Verify { suite, seed, samples, n_max, k_max, l_max, budget, format } => {
            cmd_verify(suite, seed, samples, n_max, k_max, l_max, budget, format)
        }
        Command::Formula { which } => cmd_formula(which),
    }
}

fn cmd_socle(
    path: PathBuf,
    k: Option<u32>,
    strategy: Strategy,
    budget: u64,
    format: Format,
) -> Outcome {
    let ideal = match load_ideal(&path) {
        Ok(i) => i,
        Err(o) => return o,
    };
    let report = match k {
        Some(k) => socle::socle_report_of_power(&ideal, k, strategy.to_core(), budget),
        None => socle::socle_report_with(&ideal, strategy.to_core(), budget),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => return classify(e),
    };
    let doc = json!({
        "command": "socle",
        "file": path.display().to_string(),
        "strategy": strategy.to_core(),
        "budget": budget,
        "report": report,
    });
    emit(format, &doc, || {
        let mut out = format!(
            "n: {}\nk: {}\ndepth_zero: {}\nhas_maximal_socle: {}\nsocle ({} monomials):",
            report.n,
            report.k.map_or("-".into(), |k| k.to_string()),
            report.depth_zero,
            report.has_maximal_socle,
            report.socle.len()
        );
        for u in &report.socle {
            out.push_str(&format!("\n  {u}  {:?}", u.exponents()));
        }
        out
    });
    Outcome::Pass
}

fn cmd_power(path: PathBuf, k: u32, format: Format) -> Outcome {
    let ideal = match load_ideal(&path) {
        Ok(i) => i,
        Err(o) => return o,
    };
    let power = match ideal.power(k) {
        Ok(p) => p,
        Err(e) => return classify(e),
    };
    emit(
        format,
        &serde_json::to_value(&power).expect("ideal serializes"),
        || format!("{}\n{}", power, power.to_json()),
    );
    Outcome::Pass
}

fn cmd_member(
    path: PathBuf,
    exponents: Vec<u32>,
    k: Option<u32>,
    format: Format,
) -> Outcome {
    let ideal = match load_ideal(&path) {
        Ok(i) => i,
        Err(o) => return o,
    };
    if exponents.len() != ideal.n() {
        return Outcome::UsageError(format!(
            "monomial has {} exponents but the ideal lives in {} variables",
            exponents.len(),
            ideal.n()
        ));
    }
    let probe = Monomial::new(exponents);
    let target = match k {
        Some(k) => match ideal.power(k) {
            Ok(p) => p,
            Err(e) => return classify(e),
        },
        None => ideal,
    };
    let member = match target.contains(&probe) {
        Ok(m) => m,
        Err(e) => return classify(e),
    };
    let doc = json!({
        "command": "member",
        "file": path.display().to_string(),
        "monomial": probe.exponents(),
        "k": k,
        "member": member,
    });
    emit(format, &doc, || format!("{probe} in {}: {member}", target));
    Outcome::Pass
}

fn cmd_graph_check(path: PathBuf, oracle: bool, budget: u64, format: Format) -> Outcome {
    let graph = match load_graph(&path) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let witness = graph.depth2_criterion();
    let maximal = graph.maximal_socle_criterion();

    let oracle_part = if oracle {
        match graph_oracle(&graph, budget) {
            Ok(pair) => Some(pair),
            Err(e) => return classify(e),
        }
    } else {
        None
    };
    let agree = oracle_part.map(|(depth_zero, maximal_socle)| {
        witness.is_some() == depth_zero && maximal == maximal_socle
    });

    let doc = json!({
        "command": "graph-check",
        "file": path.display().to_string(),
        "criterion": {
            "depth_zero_square": witness.is_some(),
            "witness_triangle": witness,
            "maximal_socle": maximal,
        },
        "oracle": oracle_part.map(|(d, m)| json!({
            "depth_zero_square": d,
            "maximal_socle": m,
        })),
        "agree": agree,
    });
    emit(format, &doc, || {
        let mut out = format!("{graph}\ncriterion depth_zero(S/I^2): {}", witness.is_some());
        if let Some([a, b, c]) = witness {
            out.push_str(&format!("\nwitness triangle: {{{a},{b},{c}}}"));
        }
        out.push_str(&format!("\ncriterion maximal socle (x_[n] at k=2): {maximal}"));
        if let Some((d, m)) = oracle_part {
            out.push_str(&format!(
                "\noracle depth_zero(S/I^2): {d}\noracle maximal socle: {m}\nagreement: {}",
                agree.unwrap()
            ));
        }
        out
    });
    match agree {
        Some(false) => Outcome::Violation,
        _ => Outcome::Pass,
    }
}

fn graph_oracle(graph: &Graph, budget: u64) -> Result<(bool, bool), Error> {
    if graph.edge_count() == 0 {
        return Ok((false, false));
    }
    let square = graph.edge_ideal()?.power(2)?;
    let set = socle::socle::socle_set(&square, SocleStrategy::CrossChecked, budget)?;
    let full = Monomial::full_support_power(graph.n(), 1);
    Ok((!set.is_empty(), set.contains(&full)))
}

fn cmd_complex_check(path: PathBuf, k: u32, oracle: bool, format: Format) -> Outcome {
    if k == 0 {
        return Outcome::UsageError("k must be at least 1".into());
    }
    let complex = match load_complex(&path) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let check = complex.maximal_socle_check(k);

    let oracle_part = if oracle {
        match complex_oracle(&complex, k) {
            Ok(part) => Some(part),
            Err(e) => return classify(e),
        }
    } else {
        None
    };
    let agree = oracle_part.as_ref().map(|(outside, per_vertex)| {
        let a_agrees = check.intersections_nonempty.holds == *outside;
        let b_agrees = if check.intersections_nonempty.holds && *outside {
            check.singleton_cover.holds == per_vertex.iter().all(|&m| m)
        } else {
            true
        };
        a_agrees && b_agrees
    });

    let doc = json!({
        "command": "complex-check",
        "file": path.display().to_string(),
        "k": k,
        "check": check,
        "oracle": oracle_part.as_ref().map(|(outside, per_vertex)| json!({
            "candidate_outside_power": outside,
            "variable_multiples_in_power": per_vertex,
        })),
        "agree": agree,
    });
    emit(format, &doc, || {
        let mut out = format!(
            "{complex}\nk = {k}\nall k-wise facet intersections nonempty: {}",
            check.intersections_nonempty.holds
        );
        if let Some(tuple) = &check.intersections_nonempty.counterexample {
            out.push_str("\n  counterexample:");
            for f in tuple {
                out.push_str(&format!(" {f}"));
            }
        }
        out.push_str(&format!(
            "\nevery vertex is an exact k-wise intersection: {}",
            check.singleton_cover.holds
        ));
        for (j, witness) in check.singleton_cover.witnesses.iter().enumerate() {
            match witness {
                Some(tuple) => {
                    out.push_str(&format!("\n  vertex {}:", j + 1));
                    for f in tuple {
                        out.push_str(&format!(" {f}"));
                    }
                }
                None => out.push_str(&format!("\n  vertex {}: unreachable", j + 1)),
            }
        }
        out.push_str(&format!(
            "\nmaximal socle monomial at power {k}: {}",
            check.maximal_socle
        ));
        if let Some((outside, per_vertex)) = &oracle_part {
            out.push_str(&format!(
                "\noracle (x_1...x_n)^(k-1) outside I^k: {outside}\noracle multiples in I^k: {per_vertex:?}\nagreement: {}",
                agree.unwrap()
            ));
        }
        out
    });
    match agree {
        Some(false) => Outcome::Violation,
        _ => Outcome::Pass,
    }
}

/// Membership facts for the maximal-socle candidate: is
/// `(x_1...x_n)^{k-1}` outside `I^k`, and is each variable multiple
/// inside.
fn complex_oracle(
    complex: &SimplicialComplex,
    k: u32,
) -> Result<(bool, Vec<bool>), Error> {
    let power = complex.facet_ideal().power(k)?;
    let candidate = Monomial::full_support_power(complex.n(), k - 1);
    let outside = !power.contains(&candidate)?;
    let mut per_vertex = Vec::with_capacity(complex.n());
    for i in 0..complex.n() {
        per_vertex.push(power.contains(&candidate.times_variable(i)?)?);
    }
    Ok((outside, per_vertex))
}

#[allow(clippy::too_many_arguments)]
fn cmd_census(
    family: Family,
    n: usize,
    k: Option<u32>,
    seed: u64,
    samples: usize,
    budget: u64,
    format: Format,
) -> Outcome {
    let config = RunConfig {
        seed,
        box_budget: budget,
        sample_count: samples,
        ..RunConfig::default()
    };
    let result = match family {
        Family::Graphs => {
            if let Some(k) = k {
                if k != 2 {
                    return Outcome::UsageError(
                        "the graph census checks the square; --k must be 2".into(),
                    );
                }
            }
            census::census_graphs(n, &config)
        }
        Family::Complexes => census::census_complexes(n, k.unwrap_or(2), &config),
    };
    let result = match result {
        Ok(r) => r,
        Err(e) => return classify(e),
    };
    let doc = json!({
        "command": "census",
        "config": config,
        "result": result,
    });
    emit(format, &doc, || census_text(&result));
    if !result.passed() {
        Outcome::Violation
    } else if result.budget_exceeded > 0 {
        Outcome::Budget(format!(
            "{} instances exceeded the box budget",
            result.budget_exceeded
        ))
    } else {
        Outcome::Pass
    }
}

fn census_text(result: &CensusResult) -> String {
    let mut out = format!(
        "census family={} n={} k={} exhaustive={}\nchecked: {}\nagreements: {}\ndisagreements: {}\nbudget_exceeded: {}",
        result.family,
        result.n,
        result.k,
        result.exhaustive,
        result.instances_checked,
        result.agreements,
        result.disagreements.len(),
        result.budget_exceeded
    );
    for record in &result.disagreements {
        out.push_str(&format!(
            "\ndisagreement: {}",
            serde_json::to_string(record).expect("record serializes")
        ));
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: String,
    seed: u64,
    samples: usize,
    n_max: usize,
    k_max: u32,
    l_max: u32,
    budget: u64,
    format: Format,
) -> Outcome {
    let config = RunConfig {
        seed,
        box_budget: budget,
        l_max,
        k_max,
        n_max,
        sample_count: samples,
    };
    let reports: Vec<SuiteReport> = if suite == "all" {
        verify::run_all(&config)
    } else {
        match suite.parse::<Suite>() {
            Ok(s) => vec![verify::run_suite(s, &config)],
            Err(e) => return Outcome::UsageError(e),
        }
    };
    let doc = json!({
        "command": "verify",
        "config": config,
        "reports": reports,
    });
    emit(format, &doc, || {
        let mut out = String::new();
        for (i, report) in reports.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&format!(
                "suite {}: {} — {} checks, {} passed, {} failed, {} over budget",
                report.suite,
                if report.passed() { "PASS" } else { "FAIL" },
                report.checks,
                report.passes,
                report.failures.len(),
                report.budget_exceeded
            ));
            for failure in &report.failures {
                out.push_str(&format!(
                    "\n  failure (seed {}): {}\n    instance: {}",
                    report.seed, failure.description, failure.instance
                ));
            }
        }
        out
    });
    if reports.iter().any(|r| !r.passed()) {
        Outcome::Violation
    } else if reports.iter().any(|r| r.budget_exceeded > 0) {
        Outcome::Budget("some checks exceeded the box budget".into())
    } else {
        Outcome::Pass
    }
}

fn cmd_formula(which: FormulaCommand) -> Outcome {
    match which {
        FormulaCommand::Hh { n, d, k } => {
            if d == 0 || d > n || k == 0 {
                return Outcome::UsageError(format!(
                    "need 1 <= d <= n and k >= 1, got n={n} d={d} k={k}"
                ));
            }
            let depth = socle::formulas::hh_depth(n, d, k);
            println!("{depth}");
        }
        FormulaCommand::Threshold { n, k } => {
            if n == 0 || k == 0 {
                return Outcome::UsageError("need n >= 1 and k >= 1".into());
            }
            println!("{}", socle::formulas::threshold(n, k));
        }
        FormulaCommand::Params { k, r } => {
            if k < 2 {
                return Outcome::UsageError("need k >= 2".into());
            }
            let p = socle::formulas::admissible_params(k, r);
            println!("n={} d={} k={}", p.n, p.d, p.k);
        }
    }
    Outcome::Pass
}
