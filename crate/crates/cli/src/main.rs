use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use galblock::census::{run_census, CensusConfig};
use galblock::corpus::{load, CorpusRecord};
use galblock::render;
use galblock::report::{emit_report, Format};
use galblock_core::theorems::{resolve_check, GroupContext, SweepBudget, CHECK_NAMES};

#[derive(Parser)]
#[command(name = "galblock", version, about = "Character tables, principal blocks and theorem checks over a group corpus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct GroupArgs {
    /// Group id as it appears in the corpus.
    id: String,
    /// Corpus to look the id up in: a file path, or `fallback`, `extended` or `builtin`.
    #[arg(long, default_value = "builtin")]
    corpus: String,
    #[arg(long, default_value_t = 3)]
    prime: u64,
}

#[derive(clap::Args)]
struct RunArgs {
    /// A corpus file path, or `fallback`, `extended` or `builtin`.
    corpus: String,
    #[arg(long, default_value_t = 3)]
    prime: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Worker threads; overrides CENSUS_JOBS.
    #[arg(long, env = "CENSUS_JOBS")]
    jobs: Option<usize>,
    /// Groups above this order skip the sweeping checks.
    #[arg(long, default_value_t = SweepBudget::default().max_order)]
    max_order: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of a corpus group.
    Table(GroupArgs),
    /// Print k0sigma(B0(G)) and its characters.
    K0sigma(GroupArgs),
    /// Print the p-block partition.
    Blocks(GroupArgs),
    /// Run one check over a corpus.
    Check {
        #[arg(long)]
        name: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a set of checks over a corpus.
    Census {
        /// `all`, or a comma-separated list of check names.
        #[arg(long, default_value = "all")]
        checks: String,
        #[command(flatten)]
        run: RunArgs,
    },
}

const INPUT_ERROR: u8 = 2;

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(INPUT_ERROR)
}

fn prime_ok(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn find<'a>(records: &'a [CorpusRecord], id: &str) -> Option<&'a CorpusRecord> {
    records.iter().find(|r| r.id == id)
}

fn single(args: &GroupArgs, view: fn(&GroupContext) -> String) -> ExitCode {
    if !prime_ok(args.prime) {
        return input_error(format!("{} is not a prime", args.prime));
    }
    let records = match load(&args.corpus) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let Some(rec) = find(&records, &args.id) else {
        return input_error(format!("no group with id {:?} in corpus {}", args.id, args.corpus));
    };
    match GroupContext::new(rec.id.clone(), rec.group.clone(), args.prime, rec.flags) {
        Ok(ctx) => {
            print!("{}", view(&ctx));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}: {e}", rec.id);
            ExitCode::from(1)
        }
    }
}

fn parse_checks(spec: &str) -> Result<Vec<&'static str>, String> {
    if spec == "all" {
        return Ok(CHECK_NAMES.to_vec());
    }
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| resolve_check(s).ok_or_else(|| format!("unknown check {s:?}; known: {}", CHECK_NAMES.join(", "))))
        .collect()
}

fn run(args: &RunArgs, checks: Vec<&'static str>) -> ExitCode {
    if !prime_ok(args.prime) {
        return input_error(format!("{} is not a prime", args.prime));
    }
    let records = match load(&args.corpus) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let cfg = CensusConfig {
        checks,
        prime: args.prime,
        jobs: args.jobs,
        budget: SweepBudget { max_order: args.max_order },
    };
    let rows = run_census(&records, &cfg);
    let bytes = emit_report(&rows, &cfg.checks, args.format);
    if std::io::stdout().write_all(&bytes).is_err() {
        return ExitCode::from(INPUT_ERROR);
    }
    for r in rows.iter().filter(|r| r.failed()) {
        let names: Vec<&str> = r.reports.iter().filter(|x| x.status.is_fail()).map(|x| x.check_name.as_str()).collect();
        eprintln!("FAIL {}: {}{}", r.id, names.join(","), r.error.as_ref().map(|e| format!(" ({e})")).unwrap_or_default());
    }
    if rows.iter().any(|r| r.failed()) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Table(a) => single(&a, render::table),
        Command::K0sigma(a) => single(&a, render::k0sigma),
        Command::Blocks(a) => single(&a, render::blocks),
        Command::Check { name, run: r } => match resolve_check(&name) {
            Some(c) => run(&r, vec![c]),
            None => input_error(format!("unknown check {name:?}; known: {}", CHECK_NAMES.join(", "))),
        },
        Command::Census { checks, run: r } => match parse_checks(&checks) {
            Ok(c) => run(&r, c),
            Err(e) => input_error(e),
        },
    }
}
