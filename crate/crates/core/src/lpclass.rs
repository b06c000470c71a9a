//! Polynomial members of LP+ and the Jensen-polynomial approximation of
//! transcendental ones.

use std::io::{BufRead, Write};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{invalid, Error, Result};
use crate::exactpoly::{binomial_q, Polynomial, TaylorData};
use crate::operators::apply_lkp;
use crate::rational::{frac, int, to_canonical, Rational};
use crate::report::VerificationReport;
use crate::rootcert::{certify_all_real_negative, Evidence, Verdict};

/// `lead * prod (1 + rho_k z)` with every `rho_k > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedProduct {
    #[serde(with = "crate::rational::serde_vec")]
    pub rhos: Vec<Rational>,
    #[serde(with = "crate::rational::serde_str")]
    pub lead: Rational,
}

impl RootedProduct {
    pub fn new(rhos: Vec<Rational>, lead: Rational) -> Result<Self> {
        if !lead.is_positive() {
            return Err(invalid(format!(
                "lead must be positive, got {}",
                to_canonical(&lead)
            )));
        }
        if let Some(bad) = rhos.iter().find(|r| !r.is_positive()) {
            return Err(invalid(format!(
                "rho must be positive, got {}",
                to_canonical(bad)
            )));
        }
        Ok(RootedProduct { rhos, lead })
    }

    pub fn degree(&self) -> usize {
        self.rhos.len()
    }

    /// The zeros `-1/rho_k`, in input order.
    pub fn zeros(&self) -> Vec<Rational> {
        self.rhos.iter().map(|r| -r.recip()).collect()
    }

    pub fn expand(&self) -> Polynomial {
        let mut coeffs = vec![self.lead.clone()];
        for rho in &self.rhos {
            coeffs.push(Rational::zero());
            for k in (1..coeffs.len()).rev() {
                let t = &coeffs[k - 1] * rho;
                coeffs[k] += t;
            }
        }
        Polynomial::new(coeffs)
    }
}

pub fn rooted_product(rhos: &[Rational], lead: &Rational) -> Result<Polynomial> {
    Ok(RootedProduct::new(rhos.to_vec(), lead.clone())?.expand())
}

/// `g_n(z) = sum_{k<=n} C(n,k) gamma_k z^k`, or `g_n(z/n)` when `scaled`.
pub fn jensen_polynomial(gammas: &TaylorData, n: usize, scaled: bool) -> Result<Polynomial> {
    if n == 0 {
        return Err(invalid("Jensen polynomial index must be positive"));
    }
    let n_q = int(n as i64);
    let mut step = Rational::one();
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        coeffs.push(binomial_q(n as i64, k as i64) * gammas.gamma(k as i64) / &step);
        if scaled {
            step *= &n_q;
        }
    }
    Ok(Polynomial::new(coeffs))
}

/// One `n` of the convergence experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JensenRow {
    pub n: usize,
    pub verdict: Verdict,
    pub evidence: Evidence,
    /// `|b_k(n) - b_k|` for `k` inside the coefficient window.
    #[serde(with = "crate::rational::serde_vec")]
    pub distances: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JensenConvergence {
    pub p: u32,
    /// `L_k^p` of `a_k = gamma_k / k!` for `k` inside the window.
    #[serde(with = "crate::rational::serde_vec")]
    pub limits: Vec<Rational>,
    pub rows: Vec<JensenRow>,
}

impl JensenConvergence {
    /// Every output has only real nonpositive zeros. Constant outputs count.
    pub fn all_certified(&self) -> bool {
        self.rows.iter().all(|r| {
            matches!(
                r.verdict,
                Verdict::AllRealNegative | Verdict::VacuousConstant
            )
        })
    }

    /// First `(k, n_prev, n)` at which a distance grows.
    pub fn first_increase(&self) -> Option<(usize, usize, usize)> {
        self.rows.windows(2).find_map(|w| {
            (0..self.limits.len())
                .find(|&k| w[1].distances[k] > w[0].distances[k])
                .map(|k| (k, w[0].n, w[1].n))
        })
    }

    pub fn first_negative_limit(&self) -> Option<usize> {
        self.limits.iter().position(|b| b.is_negative())
    }

    pub fn to_report(&self) -> VerificationReport {
        let params = json!({
            "p": self.p,
            "n_values": self.rows.iter().map(|r| r.n).collect::<Vec<_>>(),
            "limits": self.limits.iter().map(to_canonical).collect::<Vec<_>>(),
        });
        let failure = if let Some(row) = self.rows.iter().find(|r| {
            !matches!(
                r.verdict,
                Verdict::AllRealNegative | Verdict::VacuousConstant
            )
        }) {
            Some(json!({ "n": row.n, "verdict": row.verdict }))
        } else if let Some(k) = self.first_negative_limit() {
            Some(json!({ "negative_limit": k, "value": to_canonical(&self.limits[k]) }))
        } else {
            self.first_increase().map(|(k, from, to)| json!({ "distance_increases": { "k": k, "from_n": from, "to_n": to } }))
        };
        VerificationReport::from_check("jensen_convergence", params, failure)
    }
}

/// Applies `L^p` to `g_n(z/n)` for each `n` and measures the first
/// `coeff_window` coefficients against their `n -> infinity` limits.
pub fn jensen_convergence(
    gammas: &TaylorData,
    p: u32,
    n_values: &[usize],
    coeff_window: usize,
) -> Result<JensenConvergence> {
    if p == 0 || coeff_window == 0 {
        return Err(invalid("p and coeff_window must be positive"));
    }
    if n_values.is_empty() || n_values[0] == 0 || n_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid("n_values must be positive and strictly increasing"));
    }
    if let Some(index) = gammas.gammas.iter().position(|g| g.is_negative()) {
        return Err(Error::NegativeGamma { index });
    }
    let head = TaylorData::new(
        (0..coeff_window + p as usize)
            .map(|k| gammas.gamma(k as i64))
            .collect(),
    );
    let limit_poly = apply_lkp(&head.to_polynomial(), p)?;
    let limits: Vec<Rational> = (0..coeff_window)
        .map(|k| limit_poly.coeff(k as i64))
        .collect();
    let mut rows = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let out = apply_lkp(&jensen_polynomial(gammas, n, true)?, p)?;
        let cert = certify_all_real_negative(&out)?;
        let distances = limits
            .iter()
            .enumerate()
            .map(|(k, b)| (out.coeff(k as i64) - b).abs())
            .collect();
        rows.push(JensenRow {
            n,
            verdict: cert.verdict,
            evidence: cert.evidence,
            distances,
        });
    }
    Ok(JensenConvergence { p, limits, rows })
}

/// Passes when every `L^p(g_n(z/n))` certifies, every windowed distance is
/// nonincreasing in `n` (exactly), and the limit coefficients are nonnegative.
pub fn jensen_convergence_report(
    gammas: &TaylorData,
    p: u32,
    n_values: &[usize],
    coeff_window: usize,
) -> Result<VerificationReport> {
    Ok(jensen_convergence(gammas, p, n_values, coeff_window)?.to_report())
}

/// Member `index` of the corpus for `seed`. Each member draws from its own
/// ChaCha stream, so members can be generated in any order or in parallel.
pub fn corpus_member(
    seed: u64,
    index: u64,
    degree_range: (usize, usize),
    rho_bound: u32,
) -> Result<RootedProduct> {
    let (dmin, dmax) = degree_range;
    if dmin > dmax || rho_bound == 0 {
        return Err(invalid(
            "corpus needs degree_min <= degree_max and rho_bound >= 1",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let degree = rng.gen_range(dmin..=dmax);
    let bound = i64::from(rho_bound);
    let rhos = (0..degree)
        .map(|_| frac(rng.gen_range(1..=bound), rng.gen_range(1..=bound)))
        .collect();
    RootedProduct::new(rhos, Rational::one())
}

/// Deterministic list of `count` monic rooted products whose `rho` values
/// are ratios of integers in `[1, rho_bound]`.
pub fn random_corpus(
    seed: u64,
    count: usize,
    degree_range: (usize, usize),
    rho_bound: u32,
) -> Result<Vec<RootedProduct>> {
    if count == 0 {
        return Err(invalid("corpus count must be positive"));
    }
    (0..count as u64)
        .map(|i| corpus_member(seed, i, degree_range, rho_bound))
        .collect()
}

pub fn write_jsonl<T: Serialize, W: Write>(mut out: W, items: &[T]) -> Result<()> {
    for item in items {
        serde_json::to_writer(&mut out, item)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_jsonl<T: DeserializeOwned, R: BufRead>(input: R) -> Result<Vec<T>> {
    let mut items = Vec::new();
    for line in input.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            items.push(serde_json::from_str(&line)?);
        }
    }
    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::factorial_q;
    use proptest::prelude::*;

    #[test]
    fn rooted_product_examples() {
        let ones = vec![int(1); 5];
        assert_eq!(
            rooted_product(&ones, &int(1)).unwrap(),
            Polynomial::from_ints(&[1, 5, 10, 10, 5, 1])
        );
        assert_eq!(
            rooted_product(&[], &int(3)).unwrap(),
            Polynomial::from_ints(&[3])
        );
        assert_eq!(
            rooted_product(&[int(1), int(2)], &int(1)).unwrap(),
            Polynomial::from_ints(&[1, 3, 2])
        );
        assert!(rooted_product(&[int(0)], &int(1)).is_err());
        assert!(rooted_product(&[int(1)], &int(-1)).is_err());
    }

    #[test]
    fn jensen_examples() {
        let e = TaylorData::exponential(10);
        assert_eq!(
            jensen_polynomial(&e, 3, false).unwrap(),
            Polynomial::from_ints(&[1, 3, 3, 1])
        );
        let g = TaylorData::new(vec![int(2), int(7)]);
        assert_eq!(
            jensen_polynomial(&g, 1, false).unwrap(),
            jensen_polynomial(&g, 1, true).unwrap()
        );
        let cube = TaylorData::new(vec![int(1), int(3), int(6), int(6)]);
        assert_eq!(
            jensen_polynomial(&cube, 3, false).unwrap(),
            Polynomial::from_ints(&[1, 9, 18, 6])
        );
        assert!(jensen_polynomial(&e, 0, false).is_err());
        // (1 + z/4)^4
        let scaled = jensen_polynomial(&e, 4, true).unwrap();
        assert_eq!(
            scaled,
            Polynomial::new(vec![int(1), int(1), frac(3, 8), frac(1, 16), frac(1, 256)])
        );
    }

    #[test]
    fn exponential_limits() {
        let c = jensen_convergence(&TaylorData::exponential(40), 1, &[4, 8, 16, 32], 5).unwrap();
        for (k, b) in c.limits.iter().enumerate() {
            let kf = factorial_q(k);
            assert_eq!(*b, Rational::one() / (&kf * &kf * int(k as i64 + 1)));
        }
        assert_eq!(c.limits[1], frac(1, 2));
        assert!(c.all_certified());
        assert!(c.to_report().pass, "{:?}", c.to_report());
    }

    #[test]
    fn polynomial_gammas_converge_to_exact_lkp() {
        let phi = Polynomial::from_ints(&[1, 3, 3, 1]);
        let gammas = TaylorData::from_polynomial(&phi);
        let c = jensen_convergence(&gammas, 2, &[3, 6, 12, 24, 48], 4).unwrap();
        let exact = apply_lkp(&phi, 2).unwrap();
        assert_eq!(c.limits, (0..4).map(|k| exact.coeff(k)).collect::<Vec<_>>());
        assert!(c.all_certified());
    }

    #[test]
    fn constant_gammas_trivially_converge() {
        let r =
            jensen_convergence_report(&TaylorData::new(vec![int(1)]), 2, &[1, 2, 5], 3).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn convergence_input_errors() {
        let e = TaylorData::exponential(5);
        assert!(matches!(
            jensen_convergence(&TaylorData::new(vec![int(1), int(-1)]), 1, &[2], 2),
            Err(Error::NegativeGamma { index: 1 })
        ));
        assert!(jensen_convergence(&e, 1, &[4, 2], 2).is_err());
        assert!(jensen_convergence(&e, 0, &[4], 2).is_err());
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = random_corpus(42, 3, (1, 8), 20).unwrap();
        assert_eq!(a, random_corpus(42, 3, (1, 8), 20).unwrap());
        assert_ne!(a, random_corpus(43, 3, (1, 8), 20).unwrap());
        assert_eq!(a[2], corpus_member(42, 2, (1, 8), 20).unwrap());
        assert!(random_corpus(1, 10, (5, 5), 20)
            .unwrap()
            .iter()
            .all(|m| m.degree() == 5));
        assert!(random_corpus(1, 0, (5, 5), 20).is_err());
        assert!(random_corpus(1, 1, (5, 4), 20).is_err());
    }

    #[test]
    fn corpus_members_certify() {
        for m in random_corpus(7, 40, (1, 10), 20).unwrap() {
            let cert = certify_all_real_negative(&m.expand()).unwrap();
            let expected = if m.degree() == 0 {
                Verdict::VacuousConstant
            } else {
                Verdict::AllRealNegative
            };
            assert_eq!(cert.verdict, expected);
            assert_eq!(cert.real_root_count, m.degree());
        }
    }

    #[test]
    fn jsonl_round_trip() {
        let corpus = random_corpus(5, 4, (0, 4), 9).unwrap();
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &corpus).unwrap();
        assert_eq!(buf.iter().filter(|&&b| b == b'\n').count(), 4);
        let back: Vec<RootedProduct> = read_jsonl(&buf[..]).unwrap();
        assert_eq!(back, corpus);
    }

    proptest! {
        #[test]
        fn expansion_vanishes_at_each_zero(seed in any::<u64>()) {
            let m = corpus_member(seed, 0, (1, 6), 12).unwrap();
            let p = m.expand();
            for z in m.zeros() {
                prop_assert!(p.eval(&z).is_zero());
            }
            prop_assert!(p.coeffs().iter().all(|c| c.is_positive()));
        }

        #[test]
        fn jensen_of_rooted_product_is_negative_rooted(seed in any::<u64>(), n in 1usize..10) {
            let phi = corpus_member(seed, 0, (1, 6), 12).unwrap().expand();
            let g = jensen_polynomial(&TaylorData::from_polynomial(&phi), n, false).unwrap();
            prop_assert_eq!(certify_all_real_negative(&g).unwrap().verdict, Verdict::AllRealNegative);
        }
    }
}
