//! `tcore`: command-line front end for the tcores library.
//!
//! Exit codes: 0 on success / all checks holding, 1 on an identity failure or
//! property violation, 2 on a usage error. All flag defaults can be overridden
//! through `TCORE_`-prefixed environment variables.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use tcores::cyclotomic::{lemma14_decide, counterexample_family, ExponentVector};
use tcores::gbg::{self, GbgValue};
use tcores::littlewood;
use tcores::partition::{zero_sum_vectors_below, Partition};
use tcores::qseries::{self, theta};

#[derive(Parser)]
#[command(name = "tcore", version, about = "t-cores, GBG-ranks and q-series identity checks")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,

    #[command(subcommand)]
    command: Command,
}

/// Shared knobs; every subcommand reads the ones it needs.
#[derive(Args)]
struct RunConfig {
    /// Truncation order for series computations
    #[arg(long, global = true, default_value_t = 60, env = "TCORE_ORDER")]
    order: usize,

    /// Candidate budget for enumerations
    #[arg(long, global = true, default_value_t = 10_000_000, env = "TCORE_BUDGET")]
    budget: u64,

    /// Norm cap for exhaustive sweeps
    #[arg(long = "max-norm", global = true, default_value_t = 30, env = "TCORE_MAX_NORM")]
    max_norm: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table, env = "TCORE_FORMAT")]
    format: Format,

    /// Shorthand for --format json
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for bulk verification (default: all cores)
    #[arg(long, global = true, env = "TCORE_JOBS")]
    jobs: Option<usize>,
}

impl RunConfig {
    fn json(&self) -> bool {
        self.json || matches!(self.format, Format::Json)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the GBG-rank of a partition
    Gbg {
        /// Comma-separated parts, e.g. "4,2"
        #[arg(long)]
        partition: String,
        /// Root-of-unity modulus s
        #[arg(long = "mod")]
        modulus: usize,
    },
    /// Census of GBG-rank values over t-cores
    Nu {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Classify all 27 residue classes for (s,t) = (3,4)
    Table1,
    /// Decide whether matching power sums and products force equal exponent vectors
    Lemma14 {
        /// Modulus for the counterexample family (with --t)
        #[arg(long, conflicts_with_all = ["j", "j_tilde", "modulus"])]
        s: Option<usize>,
        /// Family parameter t (with --s)
        #[arg(long, requires = "s")]
        t: Option<usize>,
        /// Explicit exponent vector, comma-separated (with --j-tilde and --mod)
        #[arg(long, requires_all = ["j_tilde", "modulus"])]
        j: Option<String>,
        /// Second exponent vector
        #[arg(long = "j-tilde")]
        j_tilde: Option<String>,
        /// Modulus for explicit vectors
        #[arg(long = "mod")]
        modulus: Option<usize>,
    },
    /// Verify a registered q-series identity
    Qcheck {
        /// Identity id, e.g. 4.13
        #[arg(long, conflicts_with = "all")]
        id: Option<String>,
        /// Run the whole registry
        #[arg(long)]
        all: bool,
    },
    /// Core enumeration and decomposition
    Cores {
        #[command(subcommand)]
        command: CoresCommand,
    },
    /// Littlewood decomposition of a partition (alias of `cores decompose`)
    Decompose {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        t: usize,
    },
    /// Run the full identity registry plus property sweeps
    VerifyAll,
}

#[derive(Subcommand)]
enum CoresCommand {
    /// List simultaneous (s,t)-cores with norms and GBG values
    St {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Check that the s-core of every small t-core is again a t-core
    Olsson {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Littlewood decomposition of a partition
    Decompose {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        t: usize,
    },
}

fn main() -> ExitCode {
    // clap already exits with 2 on flag errors
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

enum CliError {
    Usage(String),
}

impl From<tcores::Error> for CliError {
    fn from(e: tcores::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let cfg = &cli.config;
    if cfg.order < 2 {
        return Err(CliError::Usage("--order must be at least 2".into()));
    }
    if cfg.budget == 0 {
        return Err(CliError::Usage("--budget must be positive".into()));
    }
    if let Some(jobs) = cfg.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
    }

    match &cli.command {
        Command::Gbg { partition, modulus } => cmd_gbg(cfg, partition, *modulus),
        Command::Nu { s, t } => cmd_nu(cfg, *s, *t),
        Command::Table1 => cmd_table1(cfg),
        Command::Lemma14 { s, t, j, j_tilde, modulus } => {
            cmd_lemma14(cfg, *s, *t, j.as_deref(), j_tilde.as_deref(), *modulus)
        }
        Command::Qcheck { id, all } => cmd_qcheck(cfg, id.as_deref(), *all),
        Command::Cores { command } => match command {
            CoresCommand::St { s, t } => cmd_cores_st(cfg, *s, *t),
            CoresCommand::Olsson { s, t } => cmd_cores_olsson(cfg, *s, *t),
            CoresCommand::Decompose { partition, t } => cmd_decompose(cfg, partition, *t),
        },
        Command::Decompose { partition, t } => cmd_decompose(cfg, partition, *t),
        Command::VerifyAll => cmd_verify_all(cfg),
    }
}

// JSON helpers. serde_json maps are BTreeMaps here, so keys come out sorted
// and the output is byte-stable.

fn bigint_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn gbg_json(v: &GbgValue) -> Value {
    json!({
        "coeffs": v.coeffs().iter().map(bigint_json).collect::<Vec<_>>(),
        "modulus": v.modulus(),
        "pretty": v.pretty(),
    })
}

fn partition_json(pi: &Partition) -> Value {
    json!(pi.parts())
}

fn emit(cfg: &RunConfig, value: &Value) {
    if cfg.json() {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    }
}

fn parse_partition(text: &str) -> Result<Partition, CliError> {
    Partition::parse(text).map_err(|e| CliError::Usage(format!("--partition: {e}")))
}

fn parse_exponents(flag: &str, text: &str) -> Result<Vec<u32>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<u32>()
                .map_err(|e| CliError::Usage(format!("--{flag}: bad entry {p:?}: {e}")))
        })
        .collect()
}

fn cmd_gbg(cfg: &RunConfig, partition: &str, modulus: usize) -> Result<ExitCode, CliError> {
    let pi = parse_partition(partition)?;
    let value = gbg::gbg_direct(&pi, modulus)?;
    if cfg.json() {
        emit(cfg, &json!({
            "modulus": modulus,
            "partition": partition_json(&pi),
            "value": gbg_json(&value),
        }));
    } else {
        println!("gbg({}, s={}) = {}", pi, modulus, value.pretty());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_nu(cfg: &RunConfig, s: usize, t: usize) -> Result<ExitCode, CliError> {
    let census = gbg::nu(s, t, cfg.budget)?;
    let values: Vec<&GbgValue> = census.values.iter().collect();
    if cfg.json() {
        emit(cfg, &json!({
            "bound": census.bound,
            "count": census.count(),
            "equality": census.attains_bound(),
            "s": s,
            "t": t,
            "values": values.iter().map(|v| gbg_json(v)).collect::<Vec<_>>(),
        }));
    } else {
        println!("nu({s},{t}) = {}", census.count());
        println!("bound = {}", census.bound);
        println!("equality = {}", census.attains_bound());
        for v in values {
            println!("  {}", v.pretty());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table1(cfg: &RunConfig) -> Result<ExitCode, CliError> {
    let rows = gbg::table1();
    if cfg.json() {
        let items: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "index": r.index,
                    "nvec": r.nvec.coords(),
                    "value": gbg_json(&r.value),
                })
            })
            .collect();
        emit(cfg, &json!(items));
    } else {
        println!("{:>5}  {:<18} value", "index", "n-vector");
        for r in rows {
            let nvec = format!("{:?}", r.nvec.coords());
            println!("{:>5}  {:<18} {}", r.index, nvec, r.value.pretty());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lemma14(
    cfg: &RunConfig,
    s: Option<usize>,
    t: Option<usize>,
    j: Option<&str>,
    j_tilde: Option<&str>,
    modulus: Option<usize>,
) -> Result<ExitCode, CliError> {
    let (jv, jt) = match (s, j) {
        (Some(s), None) => {
            let t = t.ok_or_else(|| CliError::Usage("--s requires --t".into()))?;
            counterexample_family(s, t)?
        }
        (None, Some(j)) => {
            let jt = j_tilde.ok_or_else(|| CliError::Usage("--j requires --j-tilde".into()))?;
            let m = modulus.ok_or_else(|| CliError::Usage("--j requires --mod".into()))?;
            (
                ExponentVector::new(m, parse_exponents("j", j)?)?,
                ExponentVector::new(m, parse_exponents("j-tilde", jt)?)?,
            )
        }
        _ => {
            return Err(CliError::Usage(
                "pass either --s/--t (family) or --j/--j-tilde/--mod (explicit)".into(),
            ))
        }
    };
    let outcome = lemma14_decide(&jv, &jt)?;
    if cfg.json() {
        emit(cfg, &json!({
            "conditions_hold": outcome.conditions_hold,
            "equal_forced": outcome.equal_forced,
            "j": jv.exponents(),
            "j_tilde": jt.exponents(),
            "modulus": jv.modulus(),
        }));
    } else {
        println!("j        = {:?} (mod {})", jv.exponents(), jv.modulus());
        println!("j~       = {:?}", jt.exponents());
        println!("conditions_hold = {}", outcome.conditions_hold);
        println!("equal_forced    = {}", outcome.equal_forced);
    }
    Ok(ExitCode::SUCCESS)
}

/// Runs one registry entry, either the univariate or the bivariate route.
fn run_identity(id: &str, order: usize) -> Result<(bool, Value), CliError> {
    if qseries::REGISTRY_IDS.contains(&id) {
        let report = qseries::check_identity(id, order)?;
        let value = json!({
            "first_discrepancy": report.first_discrepancy,
            "holds": report.holds,
            "id": report.id,
            "order": report.order,
        });
        Ok((report.holds, value))
    } else if theta::THETA_IDS.contains(&id) {
        let order = (order as i64).max(12);
        let report = theta::check_theta_identity(id, order)?;
        let value = json!({
            "first_discrepancy": report.first_discrepancy,
            "holds": report.holds,
            "id": report.id,
            "order": report.order,
        });
        Ok((report.holds, value))
    } else {
        Err(CliError::Usage(format!("--id: unknown identity {id:?}")))
    }
}

fn cmd_qcheck(cfg: &RunConfig, id: Option<&str>, all: bool) -> Result<ExitCode, CliError> {
    let ids: Vec<&str> = match (id, all) {
        (Some(id), false) => vec![id],
        (None, true) => qseries::REGISTRY_IDS
            .iter()
            .chain(theta::THETA_IDS.iter())
            .copied()
            .collect(),
        _ => return Err(CliError::Usage("pass --id <ID> or --all".into())),
    };

    use rayon::prelude::*;
    let mut results: Vec<(String, Result<(bool, Value), String>)> = ids
        .par_iter()
        .map(|id| {
            let out = run_identity(id, cfg.order).map_err(|e| {
                let CliError::Usage(m) = e;
                m
            });
            (id.to_string(), out)
        })
        .collect();
    results.sort_by(|a, b| a.0.cmp(&b.0));

    let mut all_hold = true;
    let mut items = Vec::new();
    for (id, out) in &results {
        match out {
            Ok((holds, value)) => {
                all_hold &= holds;
                items.push(value.clone());
                if !cfg.json() {
                    println!("{id:<12} {}", if *holds { "holds" } else { "FAILS" });
                }
            }
            Err(msg) => return Err(CliError::Usage(format!("{id}: {msg}"))),
        }
    }
    if cfg.json() {
        let value = if items.len() == 1 {
            items.pop().expect("one item")
        } else {
            json!(items)
        };
        emit(cfg, &value);
    }
    Ok(if all_hold { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_cores_st(cfg: &RunConfig, s: usize, t: usize) -> Result<ExitCode, CliError> {
    let set = littlewood::st_cores(s, t)?;
    if cfg.json() {
        let items: Vec<Value> = set
            .cores
            .iter()
            .map(|pi| {
                let value = gbg::gbg_direct(pi, s)?;
                Ok(json!({
                    "gbg": gbg_json(&value),
                    "norm": pi.norm(),
                    "parts": partition_json(pi),
                }))
            })
            .collect::<Result<_, CliError>>()?;
        emit(cfg, &json!({
            "cores": items,
            "count": set.len(),
            "s": s,
            "t": t,
        }));
    } else {
        println!("({s},{t})-cores: {}", set.len());
        for pi in &set.cores {
            let value = gbg::gbg_direct(pi, s)?;
            println!("  {:<14} |.|={:<3} gbg={}", pi.to_string(), pi.norm(), value.pretty());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_cores_olsson(cfg: &RunConfig, s: usize, t: usize) -> Result<ExitCode, CliError> {
    let holds = littlewood::olsson_check(s, t, cfg.max_norm)?;
    if cfg.json() {
        emit(cfg, &json!({
            "holds": holds,
            "max_norm": cfg.max_norm,
            "s": s,
            "t": t,
        }));
    } else {
        println!(
            "olsson({s},{t}) on t-cores of norm < {}: {}",
            cfg.max_norm,
            if holds { "holds" } else { "FAILS" }
        );
    }
    Ok(if holds { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_decompose(cfg: &RunConfig, partition: &str, t: usize) -> Result<ExitCode, CliError> {
    let pi = parse_partition(partition)?;
    let d = littlewood::decompose(&pi, t)?;
    if cfg.json() {
        emit(cfg, &json!({
            "core": partition_json(&d.core),
            "core_norm": d.core.norm(),
            "partition": partition_json(&pi),
            "quotient": d.quotient.iter().map(partition_json).collect::<Vec<_>>(),
            "quotient_norm": d.quotient_norm(),
            "t": t,
        }));
    } else {
        println!("{}-core:     {}", t, d.core);
        println!("{}-quotient: ({})", t, d.quotient.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", "));
        println!("norm check: {} = {} + {}*{}", pi.norm(), d.core.norm(), t, d.quotient_norm());
    }
    Ok(ExitCode::SUCCESS)
}

/// One line per check; any failure flips the exit code to 1.
fn cmd_verify_all(cfg: &RunConfig) -> Result<ExitCode, CliError> {
    use rayon::prelude::*;

    let order = cfg.order;
    let theta_order = (order as i64).max(12);

    let mut checks: Vec<(String, Box<dyn Fn() -> Result<bool, String> + Send + Sync>)> = Vec::new();

    for id in qseries::REGISTRY_IDS {
        checks.push((
            format!("identity {id}"),
            Box::new(move || Ok(qseries::check_identity(id, order).map_err(|e| e.to_string())?.holds)),
        ));
    }
    for id in theta::THETA_IDS {
        checks.push((
            format!("identity {id}"),
            Box::new(move || {
                Ok(theta::check_theta_identity(id, theta_order).map_err(|e| e.to_string())?.holds)
            }),
        ));
    }
    for (i, j) in theta::FUNCTIONAL_PAIRS {
        checks.push((
            format!("shift {i:>2} -> {j:>2}"),
            Box::new(move || theta::functional_equation_check(i, j, theta_order.min(30)).map_err(|e| e.to_string())),
        ));
    }
    checks.push((
        "closed form vs direct".into(),
        Box::new(|| {
            for s in 2..=4usize {
                for t in 2..=4usize {
                    if gcd(s, t) != 1 {
                        continue;
                    }
                    for n in zero_sum_vectors_below(t, 16) {
                        let f = gbg::gbg_formula(&n, s).map_err(|e| e.to_string())?;
                        let d = gbg::gbg_direct(&n.to_core(), s).map_err(|e| e.to_string())?;
                        if f != d {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }),
    ));
    checks.push((
        "census (3,4)".into(),
        Box::new(|| {
            let c = gbg::nu(3, 4, 1_000_000).map_err(|e| e.to_string())?;
            Ok(c.count() == 5 && c.attains_bound())
        }),
    ));
    checks.push((
        "littlewood round trip".into(),
        Box::new(|| {
            for n in 0..=10u64 {
                for pi in tcores::partition::partitions_of(n) {
                    for t in 2..=4usize {
                        let d = littlewood::decompose(&pi, t).map_err(|e| e.to_string())?;
                        if littlewood::recompose(&d).map_err(|e| e.to_string())? != pi {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }),
    ));
    checks.push((
        "diagonal additivity".into(),
        Box::new(|| {
            for pi in tcores::partition::partitions_up_to(12) {
                for s in 2..=4usize {
                    if !gbg::diagonal_additivity_check(&pi, s).map_err(|e| e.to_string())? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }),
    ));
    checks.push((
        "olsson (3,4) and (4,5)".into(),
        Box::new(|| {
            Ok(littlewood::olsson_check(3, 4, 30).map_err(|e| e.to_string())?
                && littlewood::olsson_check(4, 5, 30).map_err(|e| e.to_string())?)
        }),
    ));
    checks.push((
        "anderson counts".into(),
        Box::new(|| {
            for (s, t, want) in [(2usize, 3usize, 2usize), (3, 4, 5), (4, 5, 14)] {
                if littlewood::st_cores(s, t).map_err(|e| e.to_string())?.len() != want {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
    ));
    checks.push((
        "injectivity boundary".into(),
        Box::new(|| {
            let good = littlewood::gbg_injectivity_check(3, 4).map_err(|e| e.to_string())?;
            let bad = littlewood::gbg_injectivity_check(4, 7).map_err(|e| e.to_string())?;
            Ok(good.injective && !bad.injective)
        }),
    ));

    let mut results: Vec<(String, Result<bool, String>)> = checks
        .par_iter()
        .map(|(name, f)| (name.clone(), f()))
        .collect();
    results.sort_by(|a, b| a.0.cmp(&b.0));

    let mut all_hold = true;
    let mut report = BTreeMap::new();
    for (name, out) in &results {
        let ok = matches!(out, Ok(true));
        all_hold &= ok;
        report.insert(name.clone(), ok);
        if !cfg.json() {
            match out {
                Ok(true) => println!("{name:<24} ok"),
                Ok(false) => println!("{name:<24} FAIL"),
                Err(e) => println!("{name:<24} ERROR {e}"),
            }
        }
    }
    if cfg.json() {
        emit(cfg, &json!({ "all_hold": all_hold, "checks": report, "order": order }));
    }
    Ok(if all_hold { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}
