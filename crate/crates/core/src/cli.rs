//! Command-line front end. Exit status: 0 all checks pass, 1 a verification
//! failed, 2 usage error, 3 resource cap exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use crate::diagram::{DecompositionLabel, TypeLabel};
use crate::error::Error;
use crate::geometry::{montecarlo_nu, partition_check, PartitionReport, VolumeEstimate};
use crate::identity::{verify_many, IdentityReport};
use crate::invariants::{degrees_of, nu, weyl_order};
use crate::series::{check_lemma, LemmaCheck, DEFAULT_ORDER};
use crate::serde_rat;
use crate::suite::{self, CriterionResult};
use crate::weylgrp::{
    default_expansion_points, default_solomon_points, enumerate_type, verify_companion,
    verify_restricted_expansion, verify_solomon, verify_steinberg, CheckReport, DEFAULT_CAP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Tsv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "weylnu", version, about = "Exact checks of the affine-deletion nu identity and its companions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Also write the report to this file
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// nu(R), degrees and |W| for a (possibly reducible) type such as E7 or A1xC3
    Nu {
        #[arg(long = "type")]
        types: String,
    },
    /// Per-node terms and their exact sum; `--type B2..B12` sweeps a family
    Identity {
        #[arg(long = "type")]
        types: Option<String>,
        /// highest classical rank when no type is given
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
    },
    /// The three central-binomial convolutions, direct and by series
    Series {
        #[arg(long, default_value_t = DEFAULT_ORDER as u64)]
        order: u64,
        #[arg(long)]
        part: Option<u8>,
    },
    /// Group average of det(1-qw)/det(1-tw) against the degree product
    Solomon(GroupArgs),
    /// det(1-w) as an alternating sum over proper subsets of the extended generators
    Steinberg(GroupArgs),
    /// det(w) as an alternating sum over subsets of the simple generators
    Companion(GroupArgs),
    /// <det(1-w), delta(1,t)> against the sum over rank-l subsets
    Expansion(GroupArgs),
    /// Monte Carlo estimate of the simple-root cone's share of the sphere
    Volume {
        #[arg(long = "type")]
        types: String,
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        workers: usize,
    },
    /// Assigns sampled directions to the cones of the extended basis
    Partition {
        #[arg(long = "type")]
        types: String,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Every check of the verification battery
    ReportAll,
}

#[derive(Debug, clap::Args)]
pub struct GroupArgs {
    #[arg(long = "type")]
    pub types: String,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Serialize)]
struct NuEntry {
    #[serde(rename = "type")]
    label: DecompositionLabel,
    degrees: Vec<u64>,
    #[serde(serialize_with = "serde_rat::serialize")]
    nu: BigRational,
    weyl_order: String,
}

/// Output text plus exit status.
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

fn status_of(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Parse(_)
        | Error::Inadmissible { .. }
        | Error::InvalidArgument(_)
        | Error::LemmaRange { .. }
        | Error::Reducible(_) => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

fn failure(err: Error) -> Outcome {
    Outcome {
        status: status_of(&err),
        output: format!("error: {err}\n"),
    }
}

fn render<T: Serialize>(
    items: &[T],
    format: Format,
    text: impl Fn(&T) -> String,
    tsv_header: &str,
    tsv: impl Fn(&T) -> String,
) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(items).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for it in items {
                s.push_str(&text(it));
                if !s.ends_with('\n') {
                    s.push('\n');
                }
            }
            s
        }
        Format::Tsv => {
            let mut s = format!("{tsv_header}\n");
            for it in items {
                s.push_str(&tsv(it));
            }
            s
        }
    }
}

fn finish(pass: bool, output: String) -> Outcome {
    Outcome {
        status: if pass { EXIT_OK } else { EXIT_FAILED },
        output,
    }
}

fn parse_types(s: &str) -> Result<Vec<TypeLabel>, Error> {
    let mut out = Vec::new();
    for part in s.split(',') {
        out.extend(TypeLabel::parse_sweep(part.trim())?);
    }
    Ok(out)
}

fn check_text(r: &CheckReport) -> String {
    let mut s = format!(
        "{} {}: {} ({} checked)\n",
        r.label,
        r.check,
        if r.pass { "PASS" } else { "FAIL" },
        r.checked
    );
    for p in &r.points {
        let _ = writeln!(s, "  {}  lhs {}  rhs {}  {}", p.at, p.lhs, p.rhs, if p.pass { "ok" } else { "MISMATCH" });
    }
    s
}

fn check_tsv(r: &CheckReport) -> String {
    let mut s = String::new();
    for p in &r.points {
        let _ = writeln!(s, "{}\t{}\t{}\t{}\t{}\t{}", r.label, r.check, p.at, p.lhs, p.rhs, p.pass);
    }
    if r.points.is_empty() {
        let _ = writeln!(s, "{}\t{}\t-\t{}\t{}\t{}", r.label, r.check, r.lhs, r.rhs, r.pass);
    }
    s
}

fn run_group(args: &GroupArgs, format: Format, which: &str) -> Outcome {
    let types = match parse_types(&args.types) {
        Ok(t) => t,
        Err(e) => return failure(e),
    };
    let mut reports = Vec::new();
    for label in types {
        let g = match enumerate_type(label, args.cap) {
            Ok(g) => g,
            Err(e) => return failure(e),
        };
        let r = match which {
            "solomon" => verify_solomon(&g, &default_solomon_points()),
            "steinberg" => Ok(verify_steinberg(&g)),
            "companion" => Ok(verify_companion(&g)),
            _ => verify_restricted_expansion(&g, &default_expansion_points()),
        };
        match r {
            Ok(r) => reports.push(r),
            Err(e) => return failure(e),
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    finish(
        pass,
        render(&reports, format, check_text, "type\tcheck\tat\tlhs\trhs\tpass", check_tsv),
    )
}

pub fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Nu { types } => {
            let mut entries = Vec::new();
            for part in types.split(',') {
                let labels: Vec<DecompositionLabel> = if part.contains("..") {
                    match TypeLabel::parse_sweep(part.trim()) {
                        Ok(v) => v.into_iter().map(Into::into).collect(),
                        Err(e) => return failure(e),
                    }
                } else {
                    match part.parse() {
                        Ok(l) => vec![l],
                        Err(e) => return failure(e),
                    }
                };
                for label in labels {
                    let d = degrees_of(&label);
                    entries.push(NuEntry {
                        degrees: d.as_slice().to_vec(),
                        nu: nu(&d),
                        weyl_order: weyl_order(&d).to_string(),
                        label,
                    });
                }
            }
            let text = |e: &NuEntry| format!("{}\n", e.nu);
            let tsv = |e: &NuEntry| format!("{}\t{:?}\t{}\t{}\n", e.label, e.degrees, e.nu, e.weyl_order);
            finish(true, render(&entries, format, text, "type\tdegrees\tnu\tweyl_order", tsv))
        }
        Command::Identity { types, max_rank } => {
            let labels = match types {
                Some(s) => match parse_types(s) {
                    Ok(v) => v,
                    Err(e) => return failure(e),
                },
                None => crate::standard_types(*max_rank),
            };
            let mut reports: Vec<IdentityReport> = Vec::new();
            for r in verify_many(&labels) {
                match r {
                    Ok(r) => reports.push(r),
                    Err(e) => return failure(e),
                }
            }
            let pass = reports.iter().all(|r| r.pass);
            let tsv = |r: &IdentityReport| r.to_tsv().lines().skip(1).map(|l| format!("{l}\n")).collect();
            finish(
                pass,
                render(&reports, format, IdentityReport::to_text, "type\tnode\tdecomposition\tnu\tscaled", tsv),
            )
        }
        Command::Series { order, part } => {
            let parts: Vec<u8> = match part {
                Some(p) => vec![*p],
                None => vec![1, 2, 3],
            };
            let mut checks: Vec<LemmaCheck> = Vec::new();
            for p in parts {
                let lo = if p == 1 { 0 } else { 2 };
                for n in lo..=*order {
                    match check_lemma(p, n) {
                        Ok(c) => checks.push(c),
                        Err(e) => return failure(e),
                    }
                }
            }
            let pass = checks.iter().all(|c| c.pass);
            let text = |c: &LemmaCheck| {
                format!(
                    "part {} n={:>2}: {} = {} (direct) = {} (series) {}\n",
                    c.part,
                    c.n,
                    c.lhs,
                    c.direct,
                    c.series,
                    if c.pass { "ok" } else { "FAIL" }
                )
            };
            let tsv = |c: &LemmaCheck| format!("{}\t{}\t{}\t{}\t{}\t{}\n", c.part, c.n, c.lhs, c.direct, c.series, c.pass);
            finish(pass, render(&checks, format, text, "part\tn\tlhs\tdirect\tseries\tpass", tsv))
        }
        Command::Solomon(a) => run_group(a, format, "solomon"),
        Command::Steinberg(a) => run_group(a, format, "steinberg"),
        Command::Companion(a) => run_group(a, format, "companion"),
        Command::Expansion(a) => run_group(a, format, "expansion"),
        Command::Volume {
            types,
            samples,
            seed,
            workers,
        } => {
            let mut results: Vec<VolumeEstimate> = Vec::new();
            for part in types.split(',') {
                let label: DecompositionLabel = match part.parse() {
                    Ok(l) => l,
                    Err(e) => return failure(e),
                };
                match montecarlo_nu(&label, *samples, *seed, *workers) {
                    Ok(r) => results.push(r),
                    Err(e) => return failure(e),
                }
            }
            let pass = results.iter().all(|r| r.z_score.abs() <= 4.0);
            let text = |r: &VolumeEstimate| {
                format!(
                    "{}: estimate {:.6} +- {:.6}, exact {} ({:.6}), z = {:.3}\n",
                    r.label,
                    r.estimate,
                    r.stderr,
                    r.exact,
                    num_traits::ToPrimitive::to_f64(&r.exact).unwrap_or(f64::NAN),
                    r.z_score
                )
            };
            let tsv = |r: &VolumeEstimate| {
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.label, r.samples, r.seed, r.workers, r.estimate, r.stderr, r.exact, r.z_score
                )
            };
            finish(
                pass,
                render(&results, format, text, "type\tsamples\tseed\tworkers\testimate\tstderr\texact\tz_score", tsv),
            )
        }
        Command::Partition { types, samples, seed } => {
            let labels = match parse_types(types) {
                Ok(v) => v,
                Err(e) => return failure(e),
            };
            let mut reports: Vec<PartitionReport> = Vec::new();
            for label in labels {
                match partition_check(label, *samples, *seed) {
                    Ok(r) => reports.push(r),
                    Err(e) => return failure(e),
                }
            }
            let pass = reports.iter().all(|r| r.pass);
            let text = |r: &PartitionReport| {
                let mut s = format!(
                    "{}: {} samples, {} on walls, {} bad, {} disagreeing: {}\n",
                    r.label,
                    r.samples,
                    r.boundary,
                    r.bad_membership,
                    r.disagreements,
                    if r.pass { "PASS" } else { "FAIL" }
                );
                for c in &r.cones {
                    let _ = writeln!(
                        s,
                        "  cone {} {:<12} freq {:.4} +- {:.4}  exact {}  z = {:.2}",
                        c.node, c.decomposition.to_string(), c.estimate.estimate, c.estimate.stderr, c.estimate.exact, c.estimate.z_score
                    );
                }
                s
            };
            let tsv = |r: &PartitionReport| {
                r.cones
                    .iter()
                    .map(|c| {
                        format!(
                            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                            r.label, c.node, c.decomposition, c.estimate.hits, c.estimate.estimate, c.estimate.exact, c.estimate.z_score
                        )
                    })
                    .collect()
            };
            finish(
                pass,
                render(&reports, format, text, "type\tnode\tdecomposition\thits\tfrequency\texact\tz_score", tsv),
            )
        }
        Command::ReportAll => {
            let results = suite::run_all();
            let pass = results.iter().all(|r| r.pass);
            let text = |r: &CriterionResult| {
                format!(
                    "[{}] {:<26} {}  {}\n",
                    r.criterion,
                    r.name,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.detail
                )
            };
            let tsv = |r: &CriterionResult| format!("{}\t{}\t{}\t{}\n", r.criterion, r.name, r.pass, r.detail);
            finish(pass, render(&results, format, text, "criterion\tname\tpass\tdetail", tsv))
        }
    }
}

/// Parses arguments, runs, prints and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = run(&cli);
    if outcome.status == EXIT_USAGE || outcome.status == EXIT_CAP {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, &outcome.output) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    outcome.status
}
