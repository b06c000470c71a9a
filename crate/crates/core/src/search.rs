//! Counterexample search for Fisk's question: does `S_r` keep real-negative
//! rootedness?
//!
//! Inputs come either from the seeded random corpus or from structured
//! families described in a TOML or JSON config. An input is only tried after
//! it certifies `AllRealNegative`; a record is kept when the operator output
//! does not.

use std::fs::{File, OpenOptions};
use std::io::{BufReader, Write};
use std::path::Path;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::exactpoly::{binomial_q, factorial_q, Polynomial, TaylorData};
use crate::lpclass::{corpus_member, jensen_polynomial, read_jsonl};
use crate::operators::OperatorSpec;
use crate::rational::Rational;
use crate::rootcert::{certify_all_real_negative, RootCertificate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub operator: OperatorSpec,
    pub input: Polynomial,
    pub certificate: RootCertificate,
    pub seed: u64,
    /// Where the input came from, e.g. `corpus[17]` or `binomial[a=3,b=1/2,c=2]`.
    pub source: String,
    /// Seconds since the Unix epoch.
    pub found_at: u64,
}

impl SearchRecord {
    /// Re-runs the whole check from the stored input.
    pub fn revalidate(&self) -> Result<bool> {
        if !certify_all_real_negative(&self.input)?.is_all_real_negative() {
            return Ok(false);
        }
        let cert = certify_all_real_negative(&self.operator.apply(&self.input)?)?;
        Ok(cert == self.certificate && !cert.is_all_real_negative())
    }

    /// Equality ignoring `found_at`.
    pub fn same_finding(&self, other: &SearchRecord) -> bool {
        SearchRecord {
            found_at: 0,
            ..self.clone()
        } == SearchRecord {
            found_at: 0,
            ..other.clone()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    Count(usize),
    Seconds(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Random,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RandomFamily {
    pub degree_min: usize,
    pub degree_max: usize,
    pub rho_bound: u32,
}

impl Default for RandomFamily {
    fn default() -> Self {
        RandomFamily {
            degree_min: 1,
            degree_max: 12,
            rho_bound: 20,
        }
    }
}

/// `(1 + x)^a (1 + b x)^c` over the full grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BinomialFamily {
    pub a: Vec<u32>,
    pub b: Vec<String>,
    pub c: Vec<u32>,
}

/// Jensen polynomials `g_n` of `e^{x} prod (1 + rho x)`, one per `n` and
/// per list of extra factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JensenFamily {
    pub n: Vec<usize>,
    pub perturbations: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    #[serde(default)]
    pub random: RandomFamily,
    /// Families missing from a config file are empty, not the built-in grid.
    #[serde(default)]
    pub binomial: Vec<BinomialFamily>,
    #[serde(default)]
    pub jensen: Vec<JensenFamily>,
    #[serde(default)]
    pub threads: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        let b = ["1/4", "1/3", "1/2", "2/3", "3/2", "2", "3", "4", "8"]
            .map(String::from)
            .to_vec();
        SearchConfig {
            random: RandomFamily::default(),
            binomial: vec![BinomialFamily {
                a: (1..=16).collect(),
                b,
                c: (1..=8).collect(),
            }],
            jensen: vec![JensenFamily {
                n: vec![6, 10, 14, 18, 24],
                perturbations: vec![
                    vec![],
                    vec!["1".into()],
                    vec!["5".into()],
                    vec!["1/5".into(), "7".into()],
                    vec!["12".into(), "12".into(), "12".into()],
                ],
            }],
            threads: None,
        }
    }
}

impl SearchConfig {
    /// Parses TOML, or JSON when the path ends in `.json`.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        if path.extension().is_some_and(|e| e == "json") {
            Ok(serde_json::from_str(&text)?)
        } else {
            Self::from_toml(&text)
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| invalid(format!("search config: {e}")))
    }

    /// Every structured input in grid order.
    pub fn structured_inputs(&self) -> Result<Vec<(String, Polynomial)>> {
        let mut out = Vec::new();
        let one = Polynomial::from_ints(&[1, 1]);
        for fam in &self.binomial {
            for &a in &fam.a {
                for b in &fam.b {
                    let b_q = positive(b)?;
                    let factor = Polynomial::new(vec![Rational::one(), b_q]);
                    for &c in &fam.c {
                        out.push((
                            format!("binomial[a={a},b={b},c={c}]"),
                            one.pow(a) * factor.pow(c),
                        ));
                    }
                }
            }
        }
        for fam in &self.jensen {
            for rhos in &fam.perturbations {
                let max_n = fam.n.iter().copied().max().unwrap_or(0);
                let mut extra = Polynomial::one();
                for r in rhos {
                    extra = extra * Polynomial::new(vec![Rational::one(), positive(r)?]);
                }
                // gamma_k of e^x * extra(x) is sum_j C(k,j) j! e_j.
                let phi_gammas = TaylorData::new(
                    (0..=max_n as i64)
                        .map(|k| {
                            (0..=k)
                                .map(|j| {
                                    binomial_q(k, j) * factorial_q(j as usize) * extra.coeff(j)
                                })
                                .sum()
                        })
                        .collect(),
                );
                for &n in &fam.n {
                    let g = jensen_polynomial(&phi_gammas, n, false)?;
                    out.push((format!("jensen[n={n},rhos=({})]", rhos.join(",")), g));
                }
            }
        }
        Ok(out)
    }
}

fn positive(s: &str) -> Result<Rational> {
    let q = crate::rational::parse(s)?;
    if q.is_positive() {
        Ok(q)
    } else {
        Err(invalid(format!(
            "family parameter must be positive, got {s}"
        )))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub records: Vec<SearchRecord>,
    pub inputs_tried: usize,
    /// Structured inputs that did not certify and were not used.
    pub inputs_skipped: usize,
}

const CHUNK: usize = 64;

/// Applies `spec` to negative-rooted inputs until the budget is spent.
///
/// With a count budget the result depends only on `seed`, the budget and
/// the config: chunks run in parallel but are merged in input order.
pub fn counterexample_search(
    spec: &OperatorSpec,
    seed: u64,
    budget: Budget,
    strategy: Strategy,
    config: &SearchConfig,
) -> Result<SearchOutcome> {
    match spec {
        OperatorSpec::Sr { .. } | OperatorSpec::Lkp { .. } => {}
        OperatorSpec::Tmu { .. } => return Err(invalid("search supports Sr and Lkp operators")),
    }
    if matches!(budget, Budget::Count(0) | Budget::Seconds(0)) {
        return Err(invalid("search budget must be positive"));
    }
    let rf = &config.random;
    if rf.degree_min > rf.degree_max || rf.rho_bound == 0 {
        return Err(invalid(
            "random family needs degree_min <= degree_max and rho_bound >= 1",
        ));
    }
    let structured = match strategy {
        Strategy::Structured => Some(config.structured_inputs()?),
        Strategy::Random => None,
    };
    let total = match (budget, &structured) {
        (Budget::Count(n), Some(items)) => n.min(items.len()),
        (Budget::Count(n), None) => n,
        (Budget::Seconds(_), Some(items)) => items.len(),
        (Budget::Seconds(_), None) => usize::MAX,
    };
    let deadline = match budget {
        Budget::Seconds(s) => Some(Instant::now() + Duration::from_secs(s)),
        Budget::Count(_) => None,
    };
    let threads = config
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);

    let input_at = |i: usize| -> Result<(String, Polynomial)> {
        match &structured {
            Some(items) => Ok(items[i].clone()),
            None => {
                let m =
                    corpus_member(seed, i as u64, (rf.degree_min, rf.degree_max), rf.rho_bound)?;
                Ok((format!("corpus[{i}]"), m.expand()))
            }
        }
    };

    let mut outcome = SearchOutcome {
        records: Vec::new(),
        inputs_tried: 0,
        inputs_skipped: 0,
    };
    let mut next = 0usize;
    while next < total && deadline.is_none_or(|d| Instant::now() < d) {
        let end = next.saturating_add(CHUNK * threads).min(total);
        let results: Vec<Result<Tried>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (next..end)
                .step_by(CHUNK)
                .map(|start| {
                    let input_at = &input_at;
                    scope.spawn(move || {
                        (start..(start + CHUNK).min(end))
                            .map(|i| {
                                input_at(i).and_then(|(src, poly)| try_input(spec, seed, src, poly))
                            })
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("search worker panicked"))
                .collect()
        });
        for r in results {
            match r? {
                Tried::Skipped => outcome.inputs_skipped += 1,
                Tried::Held => outcome.inputs_tried += 1,
                Tried::Found(rec) => {
                    outcome.inputs_tried += 1;
                    outcome.records.push(*rec);
                }
            }
        }
        next = end;
    }
    Ok(outcome)
}

enum Tried {
    Skipped,
    Held,
    Found(Box<SearchRecord>),
}

fn try_input(spec: &OperatorSpec, seed: u64, source: String, input: Polynomial) -> Result<Tried> {
    if input.degree().is_none_or(|d| d == 0)
        || !certify_all_real_negative(&input)?.is_all_real_negative()
    {
        return Ok(Tried::Skipped);
    }
    let certificate = certify_all_real_negative(&spec.apply(&input)?)?;
    if certificate.is_all_real_negative() {
        return Ok(Tried::Held);
    }
    let found_at = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    Ok(Tried::Found(Box::new(SearchRecord {
        operator: spec.clone(),
        input,
        certificate,
        seed,
        source,
        found_at,
    })))
}

/// Appends one JSON line per record.
pub fn append_records(path: &Path, records: &[SearchRecord]) -> Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut buf = Vec::new();
    for r in records {
        serde_json::to_writer(&mut buf, r)?;
        buf.push(b'\n');
    }
    file.write_all(&buf)?;
    Ok(())
}

pub fn load_records(path: &Path) -> Result<Vec<SearchRecord>> {
    read_jsonl(BufReader::new(File::open(path)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::rootcert::Verdict;

    fn small() -> SearchConfig {
        SearchConfig {
            random: RandomFamily {
                degree_min: 1,
                degree_max: 8,
                rho_bound: 10,
            },
            ..Default::default()
        }
    }

    #[test]
    fn s1_and_lkp_have_no_records() {
        for spec in [OperatorSpec::Sr { r: 1 }, OperatorSpec::Lkp { p: 3 }] {
            let out =
                counterexample_search(&spec, 11, Budget::Count(60), Strategy::Random, &small())
                    .unwrap();
            assert!(out.records.is_empty());
            assert_eq!(out.inputs_tried, 60);
        }
    }

    #[test]
    fn count_budget_is_deterministic_across_thread_counts() {
        let spec = OperatorSpec::Sr { r: 2 };
        let one = SearchConfig {
            threads: Some(1),
            ..small()
        };
        let many = SearchConfig {
            threads: Some(4),
            ..small()
        };
        let a =
            counterexample_search(&spec, 3, Budget::Count(150), Strategy::Random, &one).unwrap();
        let b =
            counterexample_search(&spec, 3, Budget::Count(150), Strategy::Random, &many).unwrap();
        assert_eq!(a.inputs_tried, b.inputs_tried);
        assert_eq!(a.records.len(), b.records.len());
        assert!(a
            .records
            .iter()
            .zip(&b.records)
            .all(|(x, y)| x.same_finding(y)));
    }

    #[test]
    fn rejects_bad_requests() {
        let mu = OperatorSpec::Lkp { p: 1 }.mu().unwrap();
        assert!(counterexample_search(
            &OperatorSpec::Tmu { mu },
            1,
            Budget::Count(1),
            Strategy::Random,
            &small()
        )
        .is_err());
        assert!(counterexample_search(
            &OperatorSpec::Sr { r: 1 },
            1,
            Budget::Count(0),
            Strategy::Random,
            &small()
        )
        .is_err());
    }

    #[test]
    fn structured_grid_from_toml() {
        let cfg = SearchConfig::from_toml(
            r#"
            binomial = [{ a = [1, 2], b = ["1/2", "3"], c = [1] }]
            jensen = [{ n = [3], perturbations = [[], ["2"]] }]
            "#,
        )
        .unwrap();
        let inputs = cfg.structured_inputs().unwrap();
        assert_eq!(inputs.len(), 6);
        assert_eq!(
            inputs[0].1,
            Polynomial::new(vec![
                int(1),
                crate::rational::frac(3, 2),
                crate::rational::frac(1, 2)
            ])
        );
        // e^x: g_3 = (1 + x)^3
        assert_eq!(inputs[4].1, Polynomial::from_ints(&[1, 3, 3, 1]));
        // e^x (1 + 2x): gamma_k = 1 + 2k, so g_3 = (1+x)^2 (1 + 7x)
        assert_eq!(
            inputs[5].1,
            Polynomial::from_ints(&[1, 1]).pow(2) * Polynomial::from_ints(&[1, 7])
        );
        assert!(SearchConfig::from_toml("bogus = 1").is_err());
        assert!(
            SearchConfig::from_toml(r#"binomial = [{ a = [1], b = ["-1"], c = [1] }]"#)
                .unwrap()
                .structured_inputs()
                .is_err()
        );
    }

    #[test]
    fn records_round_trip_and_revalidate() {
        let input = Polynomial::from_ints(&[1, 1]).pow(6);
        let spec = OperatorSpec::Sr { r: 3 };
        let out = spec.apply(&input).unwrap();
        let certificate = certify_all_real_negative(&out).unwrap();
        let rec = SearchRecord {
            operator: spec,
            input,
            certificate: certificate.clone(),
            seed: 0,
            source: "t".into(),
            found_at: 1,
        };
        assert_eq!(
            rec.revalidate().unwrap(),
            certificate.verdict != Verdict::AllRealNegative
        );

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("hits.jsonl");
        append_records(&path, std::slice::from_ref(&rec)).unwrap();
        append_records(&path, std::slice::from_ref(&rec)).unwrap();
        let back = load_records(&path).unwrap();
        assert_eq!(back, vec![rec.clone(), rec]);
    }
}
