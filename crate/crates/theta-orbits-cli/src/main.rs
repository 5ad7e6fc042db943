//! `theta-orbits`: batch front-end for the engine.
//!
//! ```text
//! theta-orbits run <job.json> [--format json|markdown|csv] [--max-genus N] [--group-order-cap N]
//! theta-orbits fixtures <dir>
//! theta-orbits search-gv --degree N --sig 2,3,7 [--g0 K] --generators '[[...],...]' [...]
//! ```
//!
//! Exit codes: 0 success, 1 engine error, 2 schema/usage error, 3 fixture
//! mismatch.

use std::path::PathBuf;
use std::process::ExitCode;

use theta_orbits_cli::{fixtures, job, parse_signature_list, CliError};
use theta_orbits_cli::{Job, JobInput, JobKind, OutputFormat, RamificationInput};

fn usage() -> String {
    "usage:\n  theta-orbits run <job.json> [--format json|markdown|csv] \
     [--max-genus N] [--group-order-cap N]\n  theta-orbits fixtures <dir>\n  \
     theta-orbits search-gv --degree N --sig C1,C2,... [--g0 K] \
     (--generators JSON | --group-file FILE) [--cap N] [--format ...]"
        .to_string()
}

fn parse_format(s: &str) -> Result<OutputFormat, CliError> {
    match s {
        "json" => Ok(OutputFormat::Json),
        "markdown" | "md" => Ok(OutputFormat::Markdown),
        "csv" => Ok(OutputFormat::Csv),
        other => Err(CliError::Schema(format!("unknown format {other}"))),
    }
}

struct Flags {
    positional: Vec<String>,
    options: std::collections::BTreeMap<String, String>,
}

fn parse_flags(args: &[String]) -> Result<Flags, CliError> {
    let mut positional = Vec::new();
    let mut options = std::collections::BTreeMap::new();
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        if let Some(name) = arg.strip_prefix("--") {
            let value = it
                .next()
                .ok_or_else(|| CliError::Schema(format!("--{name} needs a value")))?;
            options.insert(name.to_string(), value.clone());
        } else {
            positional.push(arg.clone());
        }
    }
    Ok(Flags { positional, options })
}

fn cmd_run(args: &[String]) -> Result<(), CliError> {
    let flags = parse_flags(args)?;
    let [path] = flags.positional.as_slice() else {
        return Err(CliError::Schema(usage()));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Schema(format!("{path}: {e}")))?;
    // a job file holds one job or a batch array; reports come out in order
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("{path}: {e}")))?;
    let mut jobs: Vec<Job> = if value.is_array() {
        serde_json::from_value(value).map_err(|e| CliError::Schema(format!("{path}: {e}")))?
    } else {
        vec![serde_json::from_value(value).map_err(|e| CliError::Schema(format!("{path}: {e}")))?]
    };
    for job in &mut jobs {
        if let Some(fmt) = flags.options.get("format") {
            job.output_format = parse_format(fmt)?;
        }
        if let Some(mg) = flags.options.get("max-genus") {
            job.max_genus = mg
                .parse()
                .map_err(|e| CliError::Schema(format!("bad --max-genus: {e}")))?;
        }
        if let Some(cap) = flags.options.get("group-order-cap") {
            job.group_order_cap = cap
                .parse()
                .map_err(|e| CliError::Schema(format!("bad --group-order-cap: {e}")))?;
        }
    }
    for (index, job) in jobs.iter().enumerate() {
        let report = job::run_job(job).map_err(|e| match e {
            CliError::Engine(err) => {
                CliError::Engine(theta_orbits::Error::InvalidInput(format!("job {index}: {err}")))
            }
            CliError::Schema(msg) => CliError::Schema(format!("job {index}: {msg}")),
        })?;
        println!("{}", report.render(job.output_format)?);
    }
    Ok(())
}

fn cmd_fixtures(args: &[String]) -> Result<bool, CliError> {
    let flags = parse_flags(args)?;
    let [dir] = flags.positional.as_slice() else {
        return Err(CliError::Schema(usage()));
    };
    let outcomes = fixtures::run_fixture_suite(&PathBuf::from(dir))?;
    let mut all_passed = true;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("{status} {}: {}", o.name, o.detail);
        all_passed &= o.passed;
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("{passed}/{} fixtures passed", outcomes.len());
    Ok(all_passed)
}

fn cmd_search_gv(args: &[String]) -> Result<(), CliError> {
    let flags = parse_flags(args)?;
    let sig = flags
        .options
        .get("sig")
        .ok_or_else(|| CliError::Schema("--sig is required".into()))?;
    let branch_orders = parse_signature_list(sig)?;
    let g0: usize = flags
        .options
        .get("g0")
        .map_or(Ok(0), |s| s.parse().map_err(|e| CliError::Schema(format!("bad --g0: {e}"))))?;
    let generators_json = match (flags.options.get("generators"), flags.options.get("group-file")) {
        (Some(inline), None) => inline.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Schema(format!("{path}: {e}")))?,
        _ => return Err(CliError::Schema("give exactly one of --generators / --group-file".into())),
    };
    let group_generators: Vec<Vec<usize>> = serde_json::from_str(&generators_json)
        .map_err(|e| CliError::Schema(format!("bad generators JSON: {e}")))?;
    let degree: usize = match flags.options.get("degree") {
        Some(s) => s.parse().map_err(|e| CliError::Schema(format!("bad --degree: {e}")))?,
        None => group_generators.first().map_or(0, Vec::len),
    };
    let cap: u64 = flags
        .options
        .get("cap")
        .map_or(Ok(50_000_000), |s| s.parse().map_err(|e| CliError::Schema(format!("bad --cap: {e}"))))?;
    let format = flags
        .options
        .get("format")
        .map_or(Ok(OutputFormat::Json), |s| parse_format(s))?;
    let job = Job {
        kind: JobKind::SearchGv,
        input: JobInput::Ramification(RamificationInput {
            degree,
            group_generators,
            signature: branch_orders,
            quotient_genus: g0,
            generating_vector: Vec::new(),
        }),
        output_format: format,
        max_genus: 9,
        group_order_cap: theta_orbits::perm::DEFAULT_ORDER_CAP,
        search_cap: cap,
    };
    let report = job::run_job(&job)?;
    println!("{}", report.render(format)?);
    Ok(())
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let Some(command) = args.first() else {
        eprintln!("{}", usage());
        return ExitCode::from(2);
    };
    let rest = &args[1..];
    let result: Result<bool, CliError> = match command.as_str() {
        "run" => cmd_run(rest).map(|()| true),
        "fixtures" => cmd_fixtures(rest),
        "search-gv" => cmd_search_gv(rest).map(|()| true),
        "--help" | "help" => {
            println!("{}", usage());
            return ExitCode::SUCCESS;
        }
        other => {
            eprintln!("unknown command {other}\n{}", usage());
            return ExitCode::from(2);
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
