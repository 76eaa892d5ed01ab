//! Command-line front end: enumeration listings, count tables with
//! cross-engine agreement checking, the property suite, and series dumps.
//!
//! Exit codes are a stable contract for scripts and CI: 0 on success and
//! agreement, 1 on any discrepancy or failed property, 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use andre_core::counting::{
    brute_table_bounded, eco_lr_expand, eco_rl_expand, g_table, series_lr_table, series_rl_table,
    CountingError,
};
use andre_core::perm::phi;
use andre_core::series::{
    cycle_egf, euler_egf, f2_series, ftilde, SeriesError, TruncatedSeries, MAX_ORDER,
};
use andre_core::tree::{enumerate_trees_bounded, TreeError, DEFAULT_SIZE_BOUND};
use andre_core::verify::{run_verification, FaultInjection};
use andre_core::{CountTable, Engine, Orientation, Statistic};

const SIZE_BOUND_ENV: &str = "ANDRE_SIZE_BOUND";

#[derive(Parser)]
#[command(
    name = "andre",
    version,
    about = "Exact enumeration of binary increasing trees and of the restrictions \
             of strictly-binary André permutations, with independently cross-checked \
             counting engines"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every binary increasing tree of one size, with node statistics
    /// and both permutation images
    Trees {
        /// Number of nodes
        #[arg(long)]
        n: usize,
    },
    /// Print a count table by size and statistic and check that the selected
    /// engines agree on it
    Table {
        /// Statistic to count by
        #[arg(long)]
        stat: StatArg,
        /// Largest size to tabulate
        #[arg(long)]
        n_max: usize,
        /// Engines to run (comma separated), or "all"
        #[arg(long, value_delimiter = ',', default_value = "all")]
        engine: Vec<EngineArg>,
        #[arg(long, default_value = "pretty")]
        format: FormatArg,
    },
    /// Run the full property suite and report pass/fail per property
    Verify {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Test mode: run with a deliberately broken rule to exercise
        /// discrepancy reporting
        #[arg(long, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Dump exact coefficients of one of the named series
    Series {
        #[arg(long)]
        name: SeriesArg,
        /// Truncation order (inclusive)
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[arg(long, default_value = "pretty")]
        format: FormatArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatArg {
    /// Left-to-right minima (min-path of the tree)
    Lr,
    /// Right-to-left minima (max-path of the tree)
    Rl,
}

impl From<StatArg> for Statistic {
    fn from(value: StatArg) -> Self {
        match value {
            StatArg::Lr => Statistic::LeftToRightMinima,
            StatArg::Rl => Statistic::RightToLeftMinima,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Brute,
    Eco,
    Series,
    Recursion,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Pretty,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesArg {
    /// sec z + tan z, the Euler number EGF
    Euler,
    /// (1/(1 - sin z))^y, coefficients refined by the y marker
    Ftilde,
    /// -ln(1 - sin z)/(1 - sin z), total cycles of cycle-up-down permutations
    Cycle,
    /// EGF of trees whose max-path has length exactly two
    F2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FaultArg {
    /// Inflate the first production of the min-path succession rule
    EcoLrOvercount,
}

/// Failures carrying their exit code: usage problems exit 2, detected
/// discrepancies (or internal invariant breaches) exit 1.
enum CmdError {
    Usage(String),
    Discrepancy(String),
}

fn usage(message: impl Into<String>) -> CmdError {
    CmdError::Usage(message.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = size_bound().and_then(|bound| run(cli, bound));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Discrepancy(message)) => {
            eprintln!("discrepancy: {message}");
            ExitCode::from(1)
        }
        Err(CmdError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Global enumeration cap, overridable through the environment.
fn size_bound() -> Result<usize, CmdError> {
    match std::env::var(SIZE_BOUND_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SIZE_BOUND),
        Err(e) => Err(usage(format!("cannot read {SIZE_BOUND_ENV}: {e}"))),
        Ok(raw) => raw
            .parse::<usize>()
            .ok()
            .filter(|&b| b >= 1)
            .ok_or_else(|| {
                usage(format!(
                    "{SIZE_BOUND_ENV}={raw:?} is not a positive integer"
                ))
            }),
    }
}

fn run(cli: Cli, bound: usize) -> Result<(), CmdError> {
    match cli.command {
        Command::Trees { n } => cmd_trees(n, bound),
        Command::Table {
            stat,
            n_max,
            engine,
            format,
        } => cmd_table(stat.into(), n_max, &engine, format, bound),
        Command::Verify {
            n_max,
            inject_fault,
        } => cmd_verify(n_max, inject_fault),
        Command::Series {
            name,
            order,
            format,
        } => cmd_series(name, order, format),
    }
}

fn map_tree_error(e: TreeError) -> CmdError {
    usage(format!("{e} (raise {SIZE_BOUND_ENV} to lift the cap)"))
}

fn map_counting_error(e: CountingError) -> CmdError {
    match e {
        CountingError::Tree(inner) => map_tree_error(inner),
        CountingError::Series(inner) => usage(inner.to_string()),
        CountingError::Perm(inner) => usage(inner.to_string()),
        // rule breaches mean an engine disagrees with reality
        other => CmdError::Discrepancy(other.to_string()),
    }
}

fn cmd_trees(n: usize, bound: usize) -> Result<(), CmdError> {
    let trees = enumerate_trees_bounded(n, bound).map_err(map_tree_error)?;
    for (index, tree) in trees.iter().enumerate() {
        let s = tree.statistics();
        let standard = phi(&tree.drawing(Orientation::Standard));
        let left = phi(&tree.drawing(Orientation::LeftOriented));
        println!(
            "#{index:<4} parents={tree} leaves={} unary={} binary={} minpath={} maxpath={} \
             class={} phi=({standard}) phi_left=({left})",
            s.leaves,
            s.unary,
            s.binary,
            s.min_path_len,
            s.max_path_len,
            s.end,
            index = index + 1,
        );
    }
    println!("count: {}", trees.len());
    Ok(())
}

/// The engines that can produce the given statistic, in comparison order.
fn engines_for(stat: Statistic) -> Vec<Engine> {
    match stat {
        Statistic::LeftToRightMinima => vec![Engine::Brute, Engine::Eco, Engine::Series],
        Statistic::RightToLeftMinima => vec![
            Engine::Brute,
            Engine::Eco,
            Engine::Recursion,
            Engine::Series,
        ],
    }
}

fn resolve_engines(stat: Statistic, requested: &[EngineArg]) -> Result<Vec<Engine>, CmdError> {
    let mut engines = Vec::new();
    for &arg in requested {
        let expanded = match arg {
            EngineArg::All => engines_for(stat),
            EngineArg::Brute => vec![Engine::Brute],
            EngineArg::Eco => vec![Engine::Eco],
            EngineArg::Series => vec![Engine::Series],
            EngineArg::Recursion => vec![Engine::Recursion],
        };
        for engine in expanded {
            if engine == Engine::Recursion && stat == Statistic::LeftToRightMinima {
                return Err(usage(
                    "the polynomial recursion produces only the rl statistic",
                ));
            }
            if !engines.contains(&engine) {
                engines.push(engine);
            }
        }
    }
    Ok(engines)
}

fn compute_table(
    engine: Engine,
    stat: Statistic,
    n_max: usize,
    bound: usize,
) -> Result<CountTable, CmdError> {
    let table = match (engine, stat) {
        (Engine::Brute, _) => brute_table_bounded(stat, n_max, bound),
        (Engine::Eco, Statistic::LeftToRightMinima) => eco_lr_expand(n_max),
        (Engine::Eco, Statistic::RightToLeftMinima) => eco_rl_expand(n_max),
        (Engine::Series, Statistic::LeftToRightMinima) => series_lr_table(n_max),
        (Engine::Series, Statistic::RightToLeftMinima) => series_rl_table(n_max),
        (Engine::Recursion, Statistic::RightToLeftMinima) => g_table(n_max),
        (Engine::Recursion, Statistic::LeftToRightMinima) => {
            unreachable!("rejected during engine resolution")
        }
    };
    table.map_err(map_counting_error)
}

fn cmd_table(
    stat: Statistic,
    n_max: usize,
    requested: &[EngineArg],
    format: FormatArg,
    bound: usize,
) -> Result<(), CmdError> {
    if n_max < 1 {
        return Err(usage("--n-max must be at least 1"));
    }
    let engines = resolve_engines(stat, requested)?;
    let tables: Vec<CountTable> = engines
        .iter()
        .map(|&engine| compute_table(engine, stat, n_max, bound))
        .collect::<Result<_, _>>()?;

    let reference = &tables[0];
    let mut verdicts = Vec::new();
    let mut disagreement = None;
    for candidate in &tables[1..] {
        match candidate.first_difference(reference) {
            None => verdicts.push(format!(
                "engine {}: agrees with {}",
                candidate.engine(),
                reference.engine()
            )),
            Some(diff) => {
                let message = format!(
                    "{stat} entry ({}, {}): {} says {}, {} says {}",
                    diff.size,
                    diff.stat,
                    candidate.engine(),
                    diff.left,
                    reference.engine(),
                    diff.right
                );
                verdicts.push(format!("engine {}: DISAGREES", candidate.engine()));
                disagreement.get_or_insert(message);
            }
        }
    }

    match format {
        FormatArg::Pretty => {
            print!("{}", reference.to_pretty());
            let names: Vec<&str> = engines.iter().map(|e| e.tag()).collect();
            println!("engines: {}", names.join(","));
            for verdict in &verdicts {
                println!("{verdict}");
            }
        }
        FormatArg::Csv => {
            // one stream, engine column distinguishes the tables
            let mut out = String::new();
            for (i, table) in tables.iter().enumerate() {
                let csv = table.to_csv();
                if i == 0 {
                    out.push_str(&csv);
                } else {
                    let body = csv.split_once('\n').map(|(_, b)| b).unwrap_or("");
                    out.push_str(body);
                }
            }
            print!("{out}");
        }
        FormatArg::Json => {
            let values: Vec<serde_json::Value> = tables.iter().map(CountTable::to_json).collect();
            println!(
                "{}",
                serde_json::Value::Array(values)
            );
        }
    }

    match disagreement {
        None => Ok(()),
        Some(message) => Err(CmdError::Discrepancy(message)),
    }
}

fn cmd_verify(n_max: usize, fault: Option<FaultArg>) -> Result<(), CmdError> {
    if n_max < 1 {
        return Err(usage("--n-max must be at least 1"));
    }
    if n_max > 12 {
        return Err(usage(
            "the property sweeps are brute-force; --n-max is capped at 12",
        ));
    }
    let fault = fault.map(|FaultArg::EcoLrOvercount| FaultInjection::EcoLrOvercount);
    let report = run_verification(n_max, fault)
        .map_err(|e| CmdError::Discrepancy(e.to_string()))?;
    for outcome in &report.outcomes {
        if outcome.passed {
            println!("PASS {}", outcome.name);
        } else {
            println!("FAIL {} — {}", outcome.name, outcome.detail);
        }
    }
    println!(
        "passed {}/{} properties at n_max={}",
        report.passed_count(),
        report.outcomes.len(),
        report.n_max
    );
    if report.all_passed() {
        Ok(())
    } else {
        Err(CmdError::Discrepancy("property suite failed".to_string()))
    }
}

fn map_series_error(e: SeriesError) -> CmdError {
    usage(e.to_string())
}

fn cmd_series(name: SeriesArg, order: usize, format: FormatArg) -> Result<(), CmdError> {
    if order > MAX_ORDER {
        return Err(usage(format!(
            "--order {order} exceeds the configured bound {MAX_ORDER}"
        )));
    }
    match name {
        SeriesArg::Euler => dump_univariate("euler", &euler_egf(order).map_err(map_series_error)?, format),
        SeriesArg::Cycle => dump_univariate("cycle", &cycle_egf(order).map_err(map_series_error)?, format),
        SeriesArg::F2 => dump_univariate("f2", &f2_series(order).map_err(map_series_error)?, format),
        SeriesArg::Ftilde => dump_ftilde(order, format),
    }
    Ok(())
}

fn dump_univariate(name: &str, series: &TruncatedSeries, format: FormatArg) {
    match format {
        FormatArg::Pretty => {
            for line in series.dump_lines() {
                println!("{line}");
            }
        }
        FormatArg::Csv => {
            println!("k,numerator,denominator,egf");
            for k in 0..=series.order() {
                let c = series.coeff(k);
                let egf = series
                    .egf_integer(k)
                    .map(|v| v.to_string())
                    .unwrap_or_default();
                println!("{k},{},{},{egf}", c.numer(), c.denom());
            }
        }
        FormatArg::Json => {
            let coefficients: Vec<serde_json::Value> = (0..=series.order())
                .map(|k| {
                    let c = series.coeff(k);
                    serde_json::json!({
                        "k": k,
                        "numerator": c.numer().to_string(),
                        "denominator": c.denom().to_string(),
                        "egf": series.egf_integer(k).map(|v| v.to_string()),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({ "name": name, "order": series.order(), "coefficients": coefficients })
            );
        }
    }
}

fn dump_ftilde(order: usize, format: FormatArg) {
    let f = ftilde(order, order).expect("order validated against the cap");
    let nonzero: Vec<(usize, usize, num::BigRational)> = (0..=order)
        .flat_map(|k| (0..=f.y_degree(k)).map(move |j| (k, j)))
        .map(|(k, j)| (k, j, f.coeff(k, j)))
        .filter(|(_, _, c)| !num::Zero::is_zero(c))
        .collect();
    match format {
        FormatArg::Pretty => {
            for (k, j, c) in &nonzero {
                println!("{k} y^{j} {}/{}", c.numer(), c.denom());
                if let Some(int) = f.egf_integer(*k, *j) {
                    println!("{k}! * coeff = {int}");
                }
            }
        }
        FormatArg::Csv => {
            println!("k,j,numerator,denominator,egf");
            for (k, j, c) in &nonzero {
                let egf = f
                    .egf_integer(*k, *j)
                    .map(|v| v.to_string())
                    .unwrap_or_default();
                println!("{k},{j},{},{},{egf}", c.numer(), c.denom());
            }
        }
        FormatArg::Json => {
            let coefficients: Vec<serde_json::Value> = nonzero
                .iter()
                .map(|(k, j, c)| {
                    serde_json::json!({
                        "k": k,
                        "j": j,
                        "numerator": c.numer().to_string(),
                        "denominator": c.denom().to_string(),
                        "egf": f.egf_integer(*k, *j).map(|v| v.to_string()),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({ "name": "ftilde", "order": order, "coefficients": coefficients })
            );
        }
    }
}
