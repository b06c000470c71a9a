//! The `stabop` command line. [`cmd_dispatch`] does all the work and returns
//! what would be printed, so the binary is a thin wrapper and tests can call
//! it directly.
//!
//! Exit codes: 0 pass, 1 verification failure or counterexample, 2 usage.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{invalid, Error, Result};
use crate::exactpoly::{Polynomial, TaylorData};
use crate::lpclass::{random_corpus, write_jsonl};
use crate::operators::{
    apply_lkp, extended_turan_at_zero, laguerre_expression, lkp_coefficients, turan_row_scale,
    MuSequence, OperatorSpec,
};
use crate::rational::{int, parse, to_canonical, Rational};
use crate::report::VerificationReport;
use crate::rootcert::{
    certify_all_real_negative, certify_nonnegative, NonnegativityVerdict, Verdict,
};
use crate::search::{append_records, counterexample_search, Budget, SearchConfig, Strategy};
use crate::suites::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "stabop",
    version,
    about = "Exact tools for coefficient operators that preserve real-rootedness"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    /// Search family config (TOML, or JSON by extension).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OpKind {
    #[value(name = "Lkp", alias = "lkp")]
    Lkp,
    #[value(name = "Sr", alias = "sr")]
    Sr,
    #[value(name = "Tmu", alias = "tmu")]
    Tmu,
}

#[derive(Debug, clap::Args)]
struct OpArgs {
    #[arg(long, value_enum)]
    op: OpKind,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    /// Comma-separated rationals `mu_0,mu_1,...`.
    #[arg(long)]
    mu: Option<String>,
}

impl OpArgs {
    fn spec(&self) -> Result<OperatorSpec> {
        let need = |v: Option<u32>, flag: &str| {
            v.ok_or_else(|| invalid(format!("--op {:?} needs --{flag}", self.op)))
        };
        Ok(match self.op {
            OpKind::Lkp => OperatorSpec::Lkp {
                p: need(self.p, "p")?,
            },
            OpKind::Sr => OperatorSpec::Sr {
                r: need(self.r, "r")?,
            },
            OpKind::Tmu => {
                let list = self
                    .mu
                    .as_deref()
                    .ok_or_else(|| invalid("--op Tmu needs --mu"))?;
                let mus = list
                    .split(',')
                    .map(|s| parse(s.trim()))
                    .collect::<Result<Vec<_>>>()?;
                OperatorSpec::Tmu {
                    mu: MuSequence::new(mus),
                }
            }
        })
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply L^p, S_r or T_mu to a polynomial.
    Apply {
        #[command(flatten)]
        op: OpArgs,
        /// Polynomial JSON, inline or as a file path.
        #[arg(long)]
        input: String,
    },
    /// Certify that every zero is real and negative.
    Certify {
        #[arg(long)]
        input: String,
        /// Decide global nonnegativity instead.
        #[arg(long)]
        nonnegative: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Re-derive the worked examples and coefficient tables.
    Reproduce,
    /// Look for inputs whose image is not real-negative-rooted.
    Search {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long)]
        seed: u64,
        /// Number of inputs to try.
        #[arg(long, conflicts_with = "seconds", required_unless_present = "seconds")]
        budget: Option<usize>,
        /// Wall-clock budget instead of a count.
        #[arg(long)]
        seconds: Option<u64>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Random)]
        strategy: StrategyArg,
        /// Append hits to this JSONL file.
        #[arg(long)]
        records: Option<PathBuf>,
    },
    /// Emit a seeded corpus of rooted products as JSONL.
    Corpus {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        /// Degree range `A:B`.
        #[arg(long, default_value = "1:12")]
        degree: String,
        #[arg(long, default_value_t = 20)]
        rho_bound: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Random,
    Structured,
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmdOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(pass: bool, stdout: String) -> Self {
        CmdOutput {
            code: if pass { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: String) -> Self {
        CmdOutput {
            code: 2,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn cmd_dispatch<I, T>(argv: I) -> CmdOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CmdOutput::usage(text)
            } else {
                CmdOutput::ok(text)
            };
        }
    };
    match run(&cli) {
        Ok(out) => out,
        Err(
            e @ (Error::Io(_)
            | Error::Json(_)
            | Error::InvalidParameter(_)
            | Error::ParseRational(_)),
        ) => CmdOutput::usage(format!("error: {e}\n")),
        Err(e) => CmdOutput {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn run(cli: &Cli) -> Result<CmdOutput> {
    let json_out = cli.output == OutputFormat::Json;
    match &cli.command {
        Command::Apply { op, input } => {
            let spec = op.spec()?;
            let out = spec.apply(&read_polynomial(input)?)?;
            Ok(CmdOutput::ok(if json_out {
                out.to_json() + "\n"
            } else {
                format!("{out}\n")
            }))
        }
        Command::Certify { input, nonnegative } => {
            let p = read_polynomial(input)?;
            if *nonnegative {
                let cert = certify_nonnegative(&p)?;
                let pass = cert.verdict == NonnegativityVerdict::NonnegativeEverywhere;
                let text = match &cert.witness {
                    Some(w) => format!("{:?} (p({}) < 0)\n", cert.verdict, to_canonical(w)),
                    None => format!("{:?}\n", cert.verdict),
                };
                return Ok(CmdOutput::verdict(
                    pass,
                    if json_out { json_line(&cert)? } else { text },
                ));
            }
            let cert = certify_all_real_negative(&p)?;
            let text = format!(
                "{:?}: {} real, {} non-real ({:?})\n",
                cert.verdict, cert.real_root_count, cert.nonreal_count, cert.evidence
            );
            Ok(CmdOutput::verdict(
                cert.is_all_real_negative(),
                if json_out { json_line(&cert)? } else { text },
            ))
        }
        Command::Verify { suite, max, seed } => {
            let report = run_suite(*suite, *max, *seed)?;
            Ok(CmdOutput::verdict(
                report.pass,
                render_reports(&[report], json_out)?,
            ))
        }
        Command::Reproduce => {
            let reports = reproduce()?;
            let pass = reports.iter().all(|r| r.pass);
            Ok(CmdOutput::verdict(
                pass,
                render_reports(&reports, json_out)?,
            ))
        }
        Command::Search {
            op,
            seed,
            budget,
            seconds,
            strategy,
            records,
        } => {
            let spec = op.spec()?;
            let config = match &cli.config {
                Some(path) => SearchConfig::load(path)?,
                None => SearchConfig::default(),
            };
            let budget = match (budget, seconds) {
                (Some(n), _) => Budget::Count(*n),
                (None, Some(s)) => Budget::Seconds(*s),
                (None, None) => return Err(invalid("search needs --budget or --seconds")),
            };
            let strategy = match strategy {
                StrategyArg::Random => Strategy::Random,
                StrategyArg::Structured => Strategy::Structured,
            };
            let outcome = counterexample_search(&spec, *seed, budget, strategy, &config)?;
            if let Some(path) = records {
                append_records(path, &outcome.records)?;
            }
            let summary = json!({
                "operator": spec,
                "seed": seed,
                "inputs_tried": outcome.inputs_tried,
                "inputs_skipped": outcome.inputs_skipped,
                "records": outcome.records,
            });
            let text = if json_out {
                json_line(&summary)?
            } else {
                let mut s = format!(
                    "{}: {} inputs tried, {} skipped, {} records\n",
                    spec.label(),
                    outcome.inputs_tried,
                    outcome.inputs_skipped,
                    outcome.records.len()
                );
                for r in &outcome.records {
                    let _ = writeln!(
                        s,
                        "  {} -> {:?}: {}",
                        r.source, r.certificate.verdict, r.input
                    );
                }
                s
            };
            Ok(CmdOutput::verdict(outcome.records.is_empty(), text))
        }
        Command::Corpus {
            seed,
            count,
            degree,
            rho_bound,
        } => {
            let (a, b) = degree
                .split_once(':')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| invalid(format!("--degree expects A:B, got {degree}")))?;
            let corpus = random_corpus(*seed, *count, (a, b), *rho_bound)?;
            let mut buf = Vec::new();
            if json_out {
                write_jsonl(&mut buf, &corpus)?;
            } else {
                let expanded: Vec<Polynomial> = corpus.iter().map(|m| m.expand()).collect();
                write_jsonl(&mut buf, &expanded)?;
            }
            Ok(CmdOutput::ok(
                String::from_utf8(buf).expect("JSON is UTF-8"),
            ))
        }
    }
}

fn json_line<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string(v)? + "\n")
}

/// Inline JSON, or the contents of the file it names.
fn read_polynomial(arg: &str) -> Result<Polynomial> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Polynomial::from_json(arg);
    }
    Polynomial::from_json(&std::fs::read_to_string(Path::new(arg))?)
}

fn render_reports(reports: &[VerificationReport], json_out: bool) -> Result<String> {
    let mut s = String::new();
    for r in reports {
        if json_out {
            s += &json_line(r)?;
        } else {
            let status = if r.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{status} {} {}", r.identity, r.params);
            if let Some(c) = &r.counterexample {
                let _ = writeln!(s, "  counterexample: {c}");
            }
        }
    }
    Ok(s)
}

/// Extended Turán rows `(scale, weights)` with
/// `scale * L_p(phi)(0) = sum_j weights[j] gamma_{p-j} gamma_{p+j}`.
const TURAN_TABLE: [(i64, &[i64]); 5] = [
    (1, &[1]),
    (1, &[1, -1]),
    (12, &[3, -4, 1]),
    (360, &[10, -15, 6, -1]),
    (20160, &[35, -56, 28, -8, 1]),
];

/// Every check behind `reproduce`, in order.
pub fn reproduce() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let psi = Polynomial::from_ints(&[1, 1]).pow(5);
    let l2 = apply_lkp(&psi, 2)?;
    let expected = Polynomial::from_ints(&[3, 35, 105, 105, 35, 3]);
    out.push(VerificationReport::from_check(
        "l2_of_binomial_5",
        json!({"output": l2.to_string()}),
        (l2 != expected).then(|| json!({"expected": expected.to_string()})),
    ));
    out.push(verdict_check(
        "l2_of_binomial_5_roots",
        &l2,
        Verdict::AllRealNegative,
        0,
    )?);
    out.push(verdict_check(
        "l2_of_binomial_5_truncated_roots",
        &l2.truncate(4),
        Verdict::NotAllReal,
        2,
    )?);

    let stated = Polynomial::from_ints(&[12, 84, 36, 108]);
    out.push(verdict_check(
        "turan_sum_of_binomial_3_roots",
        &stated,
        Verdict::NotAllReal,
        2,
    )?);
    // The same sum recomputed from gamma = (1, 3, 6, 6) is reported, not judged.
    let gammas = TaylorData::from_polynomial(&Polynomial::from_ints(&[1, 1]).pow(3));
    let recomputed = Polynomial::new(
        (0..4i64)
            .map(|k| {
                int(3) * gammas.gamma(k).pow(2) - int(4) * gammas.gamma(k - 1) * gammas.gamma(k + 1)
                    + gammas.gamma(k - 2) * gammas.gamma(k + 2)
            })
            .collect(),
    );
    let cert = certify_all_real_negative(&recomputed)?;
    out.push(VerificationReport::passed(
        "turan_sum_of_binomial_3_recomputed",
        json!({"stated": stated.to_string(), "recomputed": recomputed.to_string(), "verdict": cert.verdict, "nonreal": cert.nonreal_count}),
    ));

    // Generic gammas so that no cancellation can hide a wrong weight.
    let gammas = TaylorData::new(
        [2, 3, 5, 7, 11, 13, 17, 19, 23]
            .iter()
            .map(|&g| int(g))
            .collect(),
    );
    let phi = gammas.to_polynomial();
    for (p, (scale, weights)) in TURAN_TABLE.iter().enumerate() {
        let p = p as u32;
        let pi = i64::from(p);
        let table: Rational = weights
            .iter()
            .enumerate()
            .map(|(j, w)| int(*w) * gammas.gamma(pi - j as i64) * gammas.gamma(pi + j as i64))
            .sum();
        let from_laguerre = int(*scale) * laguerre_expression(&phi, p)?.eval(&Rational::zero());
        let scale_ok = turan_row_scale(p) == int(*scale);
        let closed = if p == 0 {
            None
        } else {
            Some(extended_turan_at_zero(&gammas, 0, p)?)
        };
        let ok = scale_ok && from_laguerre == table && closed.as_ref().is_none_or(|c| *c == table);
        out.push(VerificationReport::from_check(
            "extended_turan_row",
            json!({"p": p, "scale": scale, "value": to_canonical(&table)}),
            (!ok).then(
                || json!({"from_laguerre": to_canonical(&from_laguerre), "scale_ok": scale_ok}),
            ),
        ));
        if p >= 1 {
            let coeffs = lkp_coefficients(p)?;
            let ok = coeffs.len() == weights.len()
                && coeffs.iter().zip(*weights).all(|(c, w)| *c == int(*w));
            out.push(VerificationReport::from_check(
                "lkp_coefficients",
                json!({"p": p, "row": coeffs.iter().map(to_canonical).collect::<Vec<_>>()}),
                (!ok).then(|| json!({"expected": weights})),
            ));
        }
    }
    Ok(out)
}

fn verdict_check(
    name: &str,
    p: &Polynomial,
    want: Verdict,
    nonreal: usize,
) -> Result<VerificationReport> {
    let cert = certify_all_real_negative(p)?;
    let params: Value = json!({"polynomial": p.to_string(), "verdict": cert.verdict, "nonreal": cert.nonreal_count});
    let failure = (cert.verdict != want || cert.nonreal_count != nonreal)
        .then(|| json!({"expected_verdict": want, "expected_nonreal": nonreal}));
    Ok(VerificationReport::from_check(name, params, failure))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CmdOutput {
        cmd_dispatch(std::iter::once("stabop").chain(args.iter().copied()))
    }

    #[test]
    fn certify_quadratic() {
        let out = run(&["certify", "--input", r#"{"coeffs":["1","3","1"]}"#]);
        assert_eq!(out.code, 0, "{out:?}");
        assert!(out.stdout.starts_with("AllRealNegative"));
        let out = run(&["certify", "--input", r#"{"coeffs":["1","0","1"]}"#]);
        assert_eq!(out.code, 1);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(&[]).code, 2);
        assert_eq!(run(&["frobnicate"]).code, 2);
        assert_eq!(
            run(&["apply", "--op", "Lkp", "--input", r#"{"coeffs":["1","2"]}"#]).code,
            2
        );
        assert_eq!(run(&["verify", "--suite", "symfun"]).code, 2);
        assert_eq!(
            run(&["corpus", "--seed", "1", "--count", "2", "--degree", "3"]).code,
            2
        );
        assert_eq!(run(&["--help"]).code, 0);
    }

    #[test]
    fn reproduce_passes() {
        let reports = reproduce().unwrap();
        assert!(reports.iter().all(|r| r.pass), "{reports:#?}");
        assert_eq!(run(&["reproduce"]).code, 0);
    }
}
