//! Batch verification suites behind `verify --suite`.
//!
//! Each suite folds its individual checks into one [`VerificationReport`]
//! whose params record the case count. Randomized suites draw from a
//! ChaCha stream and refuse to run without a seed.

use clap::ValueEnum;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{invalid, Result};
use crate::exactpoly::{binomial_q, Polynomial, TaylorData};
use crate::identities::{
    gauss_2f1_truncated, jacobi_samples, lkp_sr_decomposition, q_polynomial, super_catalan,
    szily_check, toeplitz_minor_scan, verify_jacobi_relation, verify_symmetric_identity,
};
use crate::lpclass::random_corpus;
use crate::operators::{
    apply_lkp, apply_sr, extended_turan_at_zero, gamma_transform, laguerre_expression,
    turan_row_scale, MuSequence,
};
use crate::rational::{frac, int, to_canonical, Rational};
use crate::report::VerificationReport;
use crate::rootcert::certify_all_real_negative;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Szily,
    Symfun,
    Hyper,
    Jacobi,
    Prop51,
    Turan,
    Toeplitz,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Szily,
        Suite::Symfun,
        Suite::Hyper,
        Suite::Jacobi,
        Suite::Prop51,
        Suite::Turan,
        Suite::Toeplitz,
    ];

    pub fn needs_seed(self) -> bool {
        matches!(
            self,
            Suite::Symfun | Suite::Prop51 | Suite::Turan | Suite::Toeplitz | Suite::All
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Szily => "szily",
            Suite::Symfun => "symfun",
            Suite::Hyper => "hyper",
            Suite::Jacobi => "jacobi",
            Suite::Prop51 => "prop51",
            Suite::Turan => "turan",
            Suite::Toeplitz => "toeplitz",
            Suite::All => "all",
        }
    }

    /// What `--max` bounds, and its default.
    pub fn default_max(self) -> u32 {
        match self {
            Suite::Szily => 10,
            Suite::Symfun => 6,
            Suite::Hyper | Suite::Jacobi => 12,
            Suite::Prop51 => 200,
            Suite::Turan => 100,
            Suite::Toeplitz => 50,
            Suite::All => 0,
        }
    }
}

/// Runs one suite; `max` overrides [`Suite::default_max`] for single suites.
pub fn run_suite(suite: Suite, max: Option<u32>, seed: Option<u64>) -> Result<VerificationReport> {
    let seed_for =
        |s: Suite| seed.ok_or_else(|| invalid(format!("suite {} needs --seed", s.name())));
    let m = max.unwrap_or(suite.default_max());
    match suite {
        Suite::Szily => szily_suite(m),
        Suite::Symfun => symmetric_suite(m, 4, 20, seed_for(suite)?),
        Suite::Hyper => hypergeometric_suite(m, 5),
        Suite::Jacobi => jacobi_suite(m, 5),
        Suite::Prop51 => decomposition_suite(m as usize, 5, seed_for(suite)?),
        Suite::Turan => turan_suite(m as usize, 6, 4, seed_for(suite)?),
        Suite::Toeplitz => toeplitz_suite(m as usize, 3, seed_for(suite)?),
        Suite::All => {
            let seed = seed_for(suite)?;
            let reports = Suite::EACH
                .iter()
                .map(|&s| run_suite(s, None, Some(seed)))
                .collect::<Result<Vec<_>>>()?;
            let names: Vec<_> = Suite::EACH.iter().map(|s| s.name()).collect();
            Ok(VerificationReport::summarize(
                "all",
                json!({"suites": names, "seed": seed}),
                &reports,
            ))
        }
    }
}

/// `szily_check(a, b)` for `0 <= b <= a <= max_a`.
pub fn szily_suite(max_a: u32) -> Result<VerificationReport> {
    let mut reports = Vec::new();
    for a in 0..=max_a {
        for b in 0..=a {
            reports.push(szily_check(a, b)?);
        }
    }
    Ok(VerificationReport::summarize(
        "szily",
        json!({"max_a": max_a, "cases": reports.len()}),
        &reports,
    ))
}

fn nonzero_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let num = rng.gen_range(1..=bound) * if rng.gen_bool(0.5) { -1 } else { 1 };
    frac(num, rng.gen_range(1..=bound))
}

fn random_polynomial(rng: &mut ChaCha8Rng, max_degree: usize, bound: i64) -> Polynomial {
    let d = rng.gen_range(0..=max_degree);
    Polynomial::new((0..=d).map(|_| nonzero_rational(rng, bound)).collect())
}

/// The symmetric-function identity for `mu(L^p)` on random nonzero tuples,
/// plus the closed form of the even gamma-transform values.
pub fn symmetric_suite(
    max_n: u32,
    max_p: u32,
    tuples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    for p in 1..=max_p {
        let mu = MuSequence::for_lkp(p)?;
        for n in 1..=max_n as usize {
            for _ in 0..tuples {
                let points: Vec<Rational> = (0..n).map(|_| nonzero_rational(&mut rng, 9)).collect();
                reports.push(verify_symmetric_identity(&mu, &points)?);
            }
        }
        for k in 0..=8u32 {
            let even = gamma_transform(&mu, 2 * k);
            let expected = super_catalan(p, k)? / int(2);
            let odd = gamma_transform(&mu, 2 * k + 1);
            let failure = (even != expected || !odd.is_zero()).then(|| {
                json!({"even": to_canonical(&even), "expected": to_canonical(&expected), "odd": to_canonical(&odd)})
            });
            reports.push(VerificationReport::from_check(
                "gamma_transform",
                json!({"p": p, "k": k}),
                failure,
            ));
        }
    }
    let params = json!({"max_n": max_n, "max_p": max_p, "tuples": tuples, "seed": seed, "cases": reports.len()});
    Ok(VerificationReport::summarize("symfun", params, &reports))
}

/// `Q_n^p = C(2p-1,p) 2F1(-n/2, (1-n)/2; p+1; 4z)` coefficient by coefficient.
pub fn hypergeometric_suite(max_n: u32, max_p: u32) -> Result<VerificationReport> {
    let mut reports = Vec::new();
    for n in 1..=max_n {
        for p in 1..=max_p {
            let nq = int(i64::from(n));
            let f = gauss_2f1_truncated(
                &(-&nq / int(2)),
                &((int(1) - &nq) / int(2)),
                &int(i64::from(p) + 1),
                &int(4),
                n as usize,
            )?;
            let scaled = f.scale(&binomial_q(2 * i64::from(p) - 1, i64::from(p)));
            let q = q_polynomial(n, p)?;
            let failure = (scaled != q)
                .then(|| json!({"q": q.to_string(), "scaled_2f1": scaled.to_string()}));
            reports.push(VerificationReport::from_check(
                "q_vs_2f1",
                json!({"n": n, "p": p}),
                failure,
            ));
        }
    }
    Ok(VerificationReport::summarize(
        "hyper",
        json!({"max_n": max_n, "max_p": max_p, "cases": reports.len()}),
        &reports,
    ))
}

/// Negative-rootedness of `Q_n^p` plus the Jacobi relation and root mapping.
pub fn jacobi_suite(max_n: u32, max_p: u32) -> Result<VerificationReport> {
    let mut reports = Vec::new();
    for n in 1..=max_n {
        for p in 1..=max_p {
            let q = q_polynomial(n, p)?;
            let cert = certify_all_real_negative(&q)?;
            let expected_ok = if n < 2 {
                q.degree() == Some(0)
            } else {
                cert.is_all_real_negative()
            };
            let failure = (!expected_ok).then(|| json!({"verdict": cert.verdict}));
            reports.push(VerificationReport::from_check(
                "q_negative_rooted",
                json!({"n": n, "p": p}),
                failure,
            ));
            reports.push(verify_jacobi_relation(n, p, &jacobi_samples(n))?);
        }
    }
    Ok(VerificationReport::summarize(
        "jacobi",
        json!({"max_n": max_n, "max_p": max_p, "cases": reports.len()}),
        &reports,
    ))
}

/// `sum_j w_j S_j(psi) = L^p(psi)` on random `psi`, and `sum_j w_j = C(2p-1,p)`.
pub fn decomposition_suite(polys: usize, max_p: u32, seed: u64) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    for p in 1..=12u32 {
        let sum: Rational = lkp_sr_decomposition(p)?.into_iter().map(|(_, w)| w).sum();
        let expected = binomial_q(2 * i64::from(p) - 1, i64::from(p));
        let failure = (sum != expected).then(|| json!({"sum": to_canonical(&sum)}));
        reports.push(VerificationReport::from_check(
            "weight_sum",
            json!({"p": p}),
            failure,
        ));
    }
    for _ in 0..polys {
        let psi = random_polynomial(&mut rng, 10, 12);
        for p in 1..=max_p {
            let mut combined = Polynomial::zero();
            for (j, w) in lkp_sr_decomposition(p)? {
                combined = &combined + &apply_sr(&psi, j)?.scale(&w);
            }
            let direct = apply_lkp(&psi, p)?;
            let failure = (combined != direct).then(|| json!({"psi": psi.to_string()}));
            reports.push(VerificationReport::from_check(
                "lkp_as_sr_sum",
                json!({"p": p}),
                failure,
            ));
        }
    }
    let params = json!({"polys": polys, "max_p": max_p, "seed": seed, "cases": reports.len()});
    Ok(VerificationReport::summarize("prop51", params, &reports))
}

/// `((2p)!/2) L_p(phi^{(k)})(0)` against the binomial-weighted gamma form.
pub fn turan_suite(polys: usize, max_k: u32, max_p: u32, seed: u64) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    for _ in 0..polys {
        let phi = random_polynomial(&mut rng, 12, 12);
        let gammas = TaylorData::from_polynomial(&phi);
        for k in 0..=max_k {
            let d = phi.derivative(k as usize);
            for p in 1..=max_p {
                let lhs = if d.is_zero() {
                    Rational::zero()
                } else {
                    turan_row_scale(p) * laguerre_expression(&d, p)?.eval(&Rational::zero())
                };
                let rhs = extended_turan_at_zero(&gammas, k, p)?;
                let failure = (lhs != rhs).then(|| json!({"phi": phi.to_string(), "lhs": to_canonical(&lhs), "rhs": to_canonical(&rhs)}));
                reports.push(VerificationReport::from_check(
                    "extended_turan",
                    json!({"k": k, "p": p}),
                    failure,
                ));
            }
        }
    }
    let params = json!({"polys": polys, "max_k": max_k, "max_p": max_p, "seed": seed, "cases": reports.len()});
    Ok(VerificationReport::summarize("turan", params, &reports))
}

pub const TOEPLITZ_ORDER: usize = 3;
pub const TOEPLITZ_WINDOW: usize = 12;

/// Contiguous Toeplitz minors of the `L^p` output coefficients for corpus
/// members of degree 1 to 12.
pub fn toeplitz_suite(members: usize, max_p: u32, seed: u64) -> Result<VerificationReport> {
    let mut reports = Vec::new();
    for (i, m) in random_corpus(seed, members, (1, 12), 20)?
        .iter()
        .enumerate()
    {
        let psi = m.expand();
        for p in 1..=max_p {
            let out = apply_lkp(&psi, p)?;
            let scan = toeplitz_minor_scan(out.coeffs(), TOEPLITZ_ORDER, TOEPLITZ_WINDOW)?;
            let mut r = scan.to_report(TOEPLITZ_ORDER, TOEPLITZ_WINDOW);
            r.params["member"] = json!(i);
            r.params["p"] = json!(p);
            reports.push(r);
        }
    }
    let params = json!({"members": members, "max_p": max_p, "seed": seed, "cases": reports.len()});
    Ok(VerificationReport::summarize("toeplitz", params, &reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_suites_demand_a_seed() {
        for s in Suite::EACH {
            assert_eq!(run_suite(s, Some(2), None).is_err(), s.needs_seed());
        }
        assert!(run_suite(Suite::All, None, None).is_err());
    }

    #[test]
    fn small_runs_pass() {
        assert!(szily_suite(4).unwrap().pass);
        assert_eq!(szily_suite(10).unwrap().params["cases"], 66);
        assert!(symmetric_suite(3, 2, 3, 1).unwrap().pass);
        assert!(hypergeometric_suite(6, 3).unwrap().pass);
        assert!(jacobi_suite(5, 2).unwrap().pass);
        assert!(decomposition_suite(5, 3, 1).unwrap().pass);
        assert!(turan_suite(5, 3, 2, 1).unwrap().pass);
        assert!(toeplitz_suite(5, 2, 1).unwrap().pass);
    }

    #[test]
    fn random_inputs_depend_only_on_seed() {
        let a = turan_suite(3, 1, 1, 9).unwrap();
        assert_eq!(a, turan_suite(3, 1, 1, 9).unwrap());
    }
}
