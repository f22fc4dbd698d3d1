//! `g2disc`: discriminants, Igusa invariants, family scans and the classification
//! searches for genus 2 curves, with exact output throughout.

mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use g2disc_core::classify::{
    classify_four_wp, classify_six_wp, classify_three_wp, classify_two_plus_quadratic,
};
use g2disc_core::families::scan::with_jobs;
use g2disc_core::families::{instantiate, is_prime, lookup, prime_disc_scan_with, PrimeRule, FAMILIES};
use g2disc_core::igusa::{absolute_invariants, potential_good_reduction};
use g2disc_core::record::{write_csv, CurveRecord, DiscriminantReport, FamilyTag, JsonlStore};
use g2disc_core::serial::{parse_int, rat_to_string};
use g2disc_core::verify::{all_criteria, criterion};
use g2disc_core::{BigInt, IgusaInvariants};
use serde::Serialize;

/// Exit with 1 on a verification mismatch and 2 on a usage error.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<g2disc_core::Error> for Failure {
    fn from(e: g2disc_core::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Parser)]
#[command(name = "g2disc", version, about = "Exact discriminants and invariants of genus 2 curves y^2 + Q(x) y = P(x)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Output format; csv is available for curve records only.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// JSONL store for records (family, scan) or a file for the JSON report (classify, verify-paper).
    #[arg(long, global = true, env = "G2DISC_STORE")]
    out: Option<PathBuf>,
    /// Worker threads; never changes the output.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Discriminant of an equation given as {"P": [c0, ..], "Q": [c0, ..]}, `-` for stdin or `@file`.
    Disc {
        equation: String,
        #[command(flatten)]
        common: Common,
    },
    /// Igusa invariants J2, J4, J6, J8, J10 and the absolute invariants.
    Igusa {
        equation: String,
        #[command(flatten)]
        common: Common,
    },
    /// Potential good reduction at a prime.
    Potgood {
        equation: String,
        p: u64,
        #[command(flatten)]
        common: Common,
    },
    /// List the registered families.
    Families {
        #[command(flatten)]
        common: Common,
    },
    /// One member of a family as a curve record.
    Family {
        name: String,
        #[arg(allow_negative_numbers = true)]
        t: String,
        /// Signs, each 1 or -1.
        #[arg(allow_negative_numbers = true)]
        eps: Vec<i64>,
        /// Extra integer parameters, in the family's order.
        #[arg(long = "extra", allow_negative_numbers = true)]
        extra: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Records for every t in lo..=hi where the family's discriminant quartic is prime.
    Scan {
        name: String,
        #[arg(allow_negative_numbers = true)]
        lo: i64,
        #[arg(allow_negative_numbers = true)]
        hi: i64,
        /// Signs, each 1 or -1.
        #[arg(long, allow_negative_numbers = true, value_delimiter = ',')]
        eps: Vec<i64>,
        /// Test |D(t)| instead of the named quartic.
        #[arg(long)]
        absolute: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run a classification search.
    Classify {
        #[command(subcommand)]
        search: Search,
    },
    /// Check every acceptance criterion and print a claim-by-claim table.
    VerifyPaper {
        /// Only these criteria.
        #[arg(long)]
        criterion: Vec<u32>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum Search {
    /// Six rational Weierstrass points, |Δ| = 2^a p^b.
    #[command(name = "6wp")]
    SixWp {
        #[arg(long, default_value_t = 3)]
        p: u64,
        /// Largest exponent of 2 and p in a root.
        #[arg(long, default_value_t = 16)]
        bound: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Four rational Weierstrass points, odd prime |Δ|.
    #[command(name = "4wp")]
    FourWp {
        #[command(flatten)]
        common: Common,
    },
    /// Two rational Weierstrass points and a pair of quadratics, odd prime |Δ|.
    #[command(name = "2q")]
    TwoQuad {
        #[command(flatten)]
        common: Common,
    },
    /// Three rational Weierstrass points, odd |Δ|: surviving exponent tuples.
    #[command(name = "3wp")]
    ThreeWp {
        /// Power of two, at least 64.
        #[arg(long, default_value_t = 64)]
        modulus: u64,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn print(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}") {
        // a closed pipe (`| head`) is not an error
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        r => r.map_err(|e| Failure::usage(format!("stdout: {e}"))),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn no_csv(f: Format) -> Result<Format, Failure> {
    if f == Format::Csv {
        return Err(Failure::usage("--format csv is only available for family and scan"));
    }
    Ok(f)
}

fn emit_records(records: &[CurveRecord], common: &Common) -> Result<(), Failure> {
    if let Some(path) = &common.out {
        JsonlStore::open(path).append(records)?;
    }
    match common.format.unwrap_or(Format::Json) {
        Format::Json => {
            for r in records {
                print(&r.to_line())?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(records, &mut buf)?;
            std::io::stdout()
                .write_all(&buf)
                .map_err(|e| Failure::usage(format!("stdout: {e}")))
        }
        Format::Table => print(&render::records(records)),
    }
}

/// Prints a report and writes its JSON to `--out` when given.
fn emit_report<T: Serialize>(report: &T, common: &Common, table: impl FnOnce() -> String) -> Result<(), Failure> {
    if let Some(path) = &common.out {
        std::fs::write(path, json(report) + "\n").map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    match no_csv(common.format.unwrap_or(Format::Table))? {
        Format::Table => print(&table()),
        _ => print(&json(report)),
    }
}

fn int_arg(field: &str, s: &str) -> Result<BigInt, Failure> {
    parse_int(s).map_err(|_| Failure::usage(format!("`{field}`: not an integer: `{s}`")))
}

#[derive(Serialize)]
struct IgusaOut {
    #[serde(rename = "J")]
    j: [String; 5],
    absolute: Option<g2disc_core::AbsoluteInvariants>,
}

#[derive(Serialize)]
struct PotGoodOut {
    p: u64,
    potential_good_reduction: bool,
    /// First `i` with `v_p(J_2i^5 / J10^i) < 0`.
    witness: Option<usize>,
}

#[derive(Serialize)]
struct FamilyOut {
    name: &'static str,
    equation: &'static str,
    signs: usize,
    extra: &'static [&'static str],
    disc_scale_log2: u32,
    odd_discriminant: bool,
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Disc { equation, common } => {
            let e = input::equation(&equation)?;
            let d = DiscriminantReport::of(&e);
            match no_csv(common.format.unwrap_or(Format::Json))? {
                Format::Table => print(&render::discriminant(&e, &d)),
                _ => print(&json(&d)),
            }
        }
        Command::Igusa { equation, common } => {
            let e = input::equation(&equation)?;
            let j = IgusaInvariants::of(&e)?;
            let out = IgusaOut {
                j: j.as_array().map(rat_to_string),
                absolute: absolute_invariants(&j).ok(),
            };
            match no_csv(common.format.unwrap_or(Format::Json))? {
                Format::Table => print(&render::igusa(&j)),
                _ => print(&json(&out)),
            }
        }
        Command::Potgood { equation, p, common } => {
            if !is_prime(&BigInt::from(p)) {
                return Err(Failure::usage(format!("`p`: {p} is not prime")));
            }
            let e = input::equation(&equation)?;
            let good = potential_good_reduction(&e, p)?;
            let out = PotGoodOut {
                p,
                potential_good_reduction: good,
                witness: IgusaInvariants::of(&e)?.bad_reduction_witness(p),
            };
            match no_csv(common.format.unwrap_or(Format::Json))? {
                Format::Table => print(&format!("potential good reduction at {p}: {good}")),
                _ => print(&json(&out)),
            }
        }
        Command::Families { common } => {
            let fams: Vec<FamilyOut> = FAMILIES
                .iter()
                .map(|f| FamilyOut {
                    name: f.name,
                    equation: f.summary,
                    signs: f.signs,
                    extra: f.extra,
                    disc_scale_log2: f.disc_scale_log2,
                    odd_discriminant: f.odd_discriminant,
                })
                .collect();
            match no_csv(common.format.unwrap_or(Format::Table))? {
                Format::Table => print(
                    &fams
                        .iter()
                        .map(|f| format!("{:<12} signs {} extra {:?}  {}", f.name, f.signs, f.extra, f.equation))
                        .collect::<Vec<_>>()
                        .join("\n"),
                ),
                _ => print(&json(&fams)),
            }
        }
        Command::Family { name, t, eps, extra, common } => {
            lookup(&name)?;
            let t = int_arg("t", &t)?;
            let extra = extra.iter().map(|x| int_arg("extra", x)).collect::<Result<Vec<_>, _>>()?;
            let e = instantiate(&name, &t, &eps, &extra)?;
            let tag = FamilyTag {
                name,
                t,
                eps,
                extra: extra.iter().map(|x| x.to_string()).collect(),
            };
            emit_records(&[CurveRecord::new(&e, Some(tag))?], &common)
        }
        Command::Scan { name, lo, hi, eps, absolute, common } => {
            if lo > hi {
                return Err(Failure::usage(format!("`lo` ({lo}) exceeds `hi` ({hi})")));
            }
            let rule = if absolute { PrimeRule::Absolute } else { PrimeRule::Named };
            let hits = prime_disc_scan_with(&name, lo, hi, &eps, rule, common.jobs)?;
            let records = hits
                .into_iter()
                .map(|h| {
                    let e = instantiate(&name, &h.t, &h.eps, &[])?;
                    let tag = FamilyTag { name: name.clone(), t: h.t, eps: h.eps, extra: vec![] };
                    CurveRecord::new(&e, Some(tag))
                })
                .collect::<Result<Vec<_>, _>>()?;
            emit_records(&records, &common)
        }
        Command::Classify { search } => match search {
            Search::SixWp { p, bound, common } => {
                let r = with_jobs(common.jobs, || classify_six_wp(p, bound))??;
                emit_report(&r, &common, || render::six_wp(&r))
            }
            Search::FourWp { common } => {
                let r = with_jobs(common.jobs, classify_four_wp)?;
                emit_report(&r, &common, || render::four_wp(&r))
            }
            Search::TwoQuad { common } => {
                let r = with_jobs(common.jobs, classify_two_plus_quadratic)?;
                emit_report(&r, &common, || render::two_quad(&r))
            }
            Search::ThreeWp { modulus, samples, common } => {
                let r = with_jobs(common.jobs, || classify_three_wp(modulus, samples))??;
                emit_report(&r, &common, || render::three_wp(&r))
            }
        },
        Command::VerifyPaper { criterion: ids, common } => {
            let reports = if ids.is_empty() {
                all_criteria()
            } else {
                ids.iter()
                    .map(|&id| criterion(id).ok_or_else(|| Failure::usage(format!("`criterion`: no criterion {id}"))))
                    .collect::<Result<Vec<_>, _>>()?
            };
            emit_report(&reports, &common, || {
                let mut s: Vec<String> = reports.iter().map(|r| r.summary_line()).collect();
                s.push(String::new());
                s.extend(reports.iter().map(|r| r.table()));
                s.join("\n")
            })?;
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                return Err(Failure {
                    code: 1,
                    message: format!("{failed} of {} criteria fail", reports.len()),
                });
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("g2disc: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
