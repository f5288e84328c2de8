//! Command line front end: sequence printing, determinant evaluation,
//! expansion sums, generating function coefficients, path family counts,
//! identity verification, and reference cross-checks.
//!
//! Exit codes: 0 when everything requested passed, 1 when a verification
//! or cross-check ran and found a mismatch, 2 for usage and domain errors.

use anyhow::{anyhow, bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hessfine_core::hessenberg::{self, HTSpec};
use hessfine_core::numeric::Integer;
use hessfine_core::paths::{self, PathFamily};
use hessfine_core::sequences::{self, SequenceId, Source};
use hessfine_core::series::{self, GfId};
use hessfine_core::trudi;
use hessfine_core::verify::{self, bfile, oeis, Route};

#[derive(Parser)]
#[command(
    name = "hessfine",
    version,
    about = "Exact Hessenberg determinant and lattice path sequence checks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a sequence prefix.
    Seq {
        /// Sequence name (for example catalan, fine, large-schroeder, u).
        id: String,
        /// Highest index to print, inclusive.
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = SeqFormat::Json)]
        format: SeqFormat,
    },
    /// Evaluate determinants with sequence entries for every order up to a bound.
    Det(DetArgs),
    /// Evaluate one determinant through an expansion formula.
    Trudi(TrudiArgs),
    /// Print generating function coefficients.
    Series {
        /// Generating function name (catalan, large-schroeder, small-schroeder, fine, a134425).
        id: String,
        /// Number of coefficients.
        #[arg(long)]
        order: usize,
    },
    /// Count or sign-sum a lattice path family.
    Paths {
        #[command(subcommand)]
        cmd: PathsCmd,
    },
    /// Check identities from the catalog.
    Verify(VerifyArgs),
    /// Compare computed terms against reference b-files.
    Oeis {
        #[command(subcommand)]
        cmd: OeisCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqFormat {
    Json,
    Csv,
    Bfile,
}

#[derive(Args)]
#[command(group(ArgGroup::new("sign").required(true).multiple(false)))]
struct DetArgs {
    /// Superdiagonal +1.
    #[arg(long, group = "sign")]
    plus: bool,
    /// Superdiagonal -1.
    #[arg(long, group = "sign")]
    minus: bool,
    /// Sequence the entries are drawn from.
    #[arg(long)]
    sequence: String,
    /// Index of the first entry; defaults to the sequence's first index.
    #[arg(long)]
    offset: Option<usize>,
    /// Largest matrix order.
    #[arg(long)]
    max_n: usize,
}

#[derive(Args)]
struct TrudiArgs {
    /// Superdiagonal entry (nonzero).
    #[arg(long)]
    a0: i64,
    /// Sequence the entries are drawn from.
    #[arg(long)]
    sequence: String,
    /// Index of the first entry; defaults to the sequence's first index.
    #[arg(long)]
    offset: Option<usize>,
    /// Matrix order to expand.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    mode: TrudiMode,
}

#[derive(Clone, Copy, ValueEnum)]
enum TrudiMode {
    Partitions,
    Compositions,
}

#[derive(Subcommand)]
enum PathsCmd {
    /// Number of members at a given length.
    Count {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Sum of member signs at a given length.
    SignedSum {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id; repeat for several, omit for the whole catalog.
    #[arg(long = "identity")]
    identities: Vec<String>,
    /// Largest order to check (clamped to each identity's own bound).
    #[arg(long)]
    max_n: Option<usize>,
    /// Route name; repeat for several. Defaults to each identity's routes
    /// except enumeration.
    #[arg(long = "routes")]
    routes: Vec<String>,
}

#[derive(Subcommand)]
enum OeisCmd {
    /// Check a sequence against its shipped fixture, or the published
    /// b-file with --remote.
    Check {
        id: String,
        #[arg(long)]
        remote: bool,
    },
}

fn source_tag(source: Source) -> &'static str {
    match source {
        Source::ClosedForm => "closed-form",
        Source::Recurrence => "recurrence",
        Source::Series => "series",
        Source::Enumeration => "enumeration",
        Source::Determinant => "determinant",
    }
}

fn entries_for(seq: SequenceId, first: usize, n: usize) -> anyhow::Result<Vec<Integer>> {
    (first..first + n)
        .map(|i| sequences::term(seq, i).map_err(Into::into))
        .collect()
}

fn cmd_seq(id: &str, max_n: usize, format: SeqFormat) -> anyhow::Result<i32> {
    let id = SequenceId::parse(id)?;
    let first = id.first_index();
    if max_n < first {
        bail!(
            "{} starts at index {first}, so --max-n must be at least {first}",
            id.tag()
        );
    }
    let prefix = sequences::prefix(id, max_n - first + 1)?;
    match format {
        SeqFormat::Json => {
            let doc = json!({
                "id": prefix.id.tag(),
                "first_index": prefix.first_index,
                "values": prefix.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "source": source_tag(prefix.source),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        SeqFormat::Csv => {
            println!("n,value");
            for (i, v) in prefix.values.iter().enumerate() {
                println!("{},{}", prefix.first_index + i, v);
            }
        }
        SeqFormat::Bfile => print!("{}", bfile::write_bfile(&prefix)),
    }
    Ok(0)
}

fn cmd_det(args: &DetArgs) -> anyhow::Result<i32> {
    let seq = SequenceId::parse(&args.sequence)?;
    let first = args.offset.unwrap_or_else(|| seq.first_index());
    if first < seq.first_index() {
        bail!("{} has no term at index {first}", seq.tag());
    }
    let a0: i64 = if args.plus { 1 } else { -1 };
    let entries = entries_for(seq, first, args.max_n)?;
    let spec = HTSpec::new(Integer::from(a0), entries)?;
    let dets = hessenberg::det_prefix(&spec);
    let doc = json!({
        "a0": a0.to_string(),
        "sequence": seq.tag(),
        "offset": first,
        "determinants": dets
            .iter()
            .enumerate()
            .map(|(n, v)| json!({"n": n, "value": v.to_string()}))
            .collect::<Vec<_>>(),
    });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(0)
}

fn cmd_trudi(args: &TrudiArgs) -> anyhow::Result<i32> {
    let seq = SequenceId::parse(&args.sequence)?;
    let first = args.offset.unwrap_or_else(|| seq.first_index());
    if first < seq.first_index() {
        bail!("{} has no term at index {first}", seq.tag());
    }
    let a0 = Integer::from(args.a0);
    let entries = entries_for(seq, first, args.n)?;
    let (mode, value) = match args.mode {
        TrudiMode::Partitions => (
            "partitions",
            trudi::trudi_partition_sum(&a0, &entries)?,
        ),
        TrudiMode::Compositions => (
            "compositions",
            trudi::trudi_composition_sum(&a0, &entries)?,
        ),
    };
    let doc = json!({
        "a0": args.a0.to_string(),
        "sequence": seq.tag(),
        "offset": first,
        "n": args.n,
        "mode": mode,
        "value": value.to_string(),
    });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(0)
}

fn cmd_series(id: &str, order: usize) -> anyhow::Result<i32> {
    let id = GfId::parse(id)?;
    let gf = series::gf_catalog(id, order);
    let doc = json!({
        "gf": id.tag(),
        "order": order,
        "coefficients": gf.coefficient_strings(),
    });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(0)
}

fn cmd_paths(cmd: &PathsCmd) -> anyhow::Result<i32> {
    let doc = match cmd {
        PathsCmd::Count { family, n } => {
            let family = PathFamily::parse(family)?;
            let count = paths::family_cardinality(family, *n)?;
            json!({"family": family.tag(), "n": n, "count": count.to_string()})
        }
        PathsCmd::SignedSum { family, n } => {
            let family = PathFamily::parse(family)?;
            let sum = paths::family_signed_sum(family, *n)?;
            json!({"family": family.tag(), "n": n, "signed_sum": sum.to_string()})
        }
    };
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<i32> {
    let routes: Vec<Route> = args
        .routes
        .iter()
        .map(|r| Route::parse(r).map_err(Into::into))
        .collect::<anyhow::Result<_>>()?;
    let reports = if args.identities.is_empty() {
        let selected = if routes.is_empty() {
            None
        } else {
            Some(routes.as_slice())
        };
        verify::run_all(args.max_n, selected)?
    } else {
        let mut reports = Vec::new();
        for id in &args.identities {
            let spec = verify::lookup(id)?;
            let selected = if routes.is_empty() {
                verify::default_routes(spec)
            } else {
                routes.clone()
            };
            reports.push(verify::run_identity(spec, args.max_n, &selected)?);
        }
        reports
    };
    for report in &reports {
        let verdict = if report.pass { "pass" } else { "FAIL" };
        eprintln!(
            "{}: {verdict} ({} checks)",
            report.identity,
            report.records.len()
        );
        for note in &report.notes {
            eprintln!("  note: {note}");
        }
    }
    println!("{}", serde_json::to_string_pretty(&reports)?);
    Ok(if reports.iter().all(|r| r.pass) { 0 } else { 1 })
}

fn fetch_remote_bfile(a_number: &str) -> anyhow::Result<String> {
    let digits = &a_number[1..];
    let url = format!("https://oeis.org/{a_number}/b{digits}.txt");
    let text = reqwest::blocking::get(&url)
        .with_context(|| format!("fetching {url}"))?
        .error_for_status()
        .with_context(|| format!("fetching {url}"))?
        .text()?;
    Ok(text)
}

fn cmd_oeis(cmd: &OeisCmd) -> anyhow::Result<i32> {
    let OeisCmd::Check { id, remote } = cmd;
    let id = SequenceId::parse(id)?;
    let (mode, outcome) = if *remote {
        let a_number = id
            .a_number()
            .ok_or_else(|| anyhow!("{} has no OEIS cross-reference", id.tag()))?;
        let text = fetch_remote_bfile(a_number)?;
        ("remote", oeis::crosscheck_against(id, &text)?)
    } else {
        ("fixture", oeis::crosscheck_fixture(id)?)
    };
    let doc = json!({
        "id": id.tag(),
        "a_number": id.a_number(),
        "mode": mode,
        "compared": outcome.compared,
        "index_delta": outcome.index_delta,
        "pass": outcome.pass,
        "mismatches": outcome
            .mismatches
            .iter()
            .map(|m| json!({"index": m.index, "ours": m.ours, "theirs": m.theirs}))
            .collect::<Vec<_>>(),
    });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(if outcome.pass { 0 } else { 1 })
}

fn run() -> anyhow::Result<i32> {
    let cli = Cli::parse();
    match &cli.cmd {
        Cmd::Seq { id, max_n, format } => cmd_seq(id, *max_n, *format),
        Cmd::Det(args) => cmd_det(args),
        Cmd::Trudi(args) => cmd_trudi(args),
        Cmd::Series { id, order } => cmd_series(id, *order),
        Cmd::Paths { cmd } => cmd_paths(cmd),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Oeis { cmd } => cmd_oeis(cmd),
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
