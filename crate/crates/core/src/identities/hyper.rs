//! Terminating hypergeometric polynomials, `Q_n^p`, and the Jacobi bridge
//! that places the zeros of `Q_n^p` on the negative axis.

use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::error::{invalid, Error, Result};
use crate::exactpoly::{binomial_q, factorial_q, pochhammer, Polynomial};
use crate::identities::catalan::super_catalan;
use crate::rational::{frac, int, to_canonical, Rational};
use crate::report::VerificationReport;
use crate::rootcert::approximate_real_roots;

/// `Q_n^p(z) = sum_{k <= n/2} (S(p,k)/2) C(n, 2k) z^k`.
pub fn q_polynomial(n: u32, p: u32) -> Result<Polynomial> {
    if n < 1 || p < 1 {
        return Err(invalid("Q_n^p needs n, p >= 1"));
    }
    let coeffs = (0..=n / 2)
        .map(|k| Ok(super_catalan(p, k)? / int(2) * binomial_q(i64::from(n), 2 * i64::from(k))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

/// `sum_k ((a)_k (b)_k / (k! (c)_k)) scale^k z^k` for a series that terminates
/// (an upper parameter hits a nonpositive integer) with degree at most `n_cap`.
pub fn gauss_2f1_truncated(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    scale: &Rational,
    n_cap: usize,
) -> Result<Polynomial> {
    if !c.is_positive() && c.is_integer() {
        return Err(invalid(format!(
            "lower parameter {c} is a nonpositive integer"
        )));
    }
    let mut coeffs = vec![Rational::one()];
    let mut term = Rational::one();
    for k in 0.. {
        let kq = int(k as i64);
        let upper = (a + &kq) * (b + &kq);
        if upper.is_zero() {
            return Ok(Polynomial::new(coeffs));
        }
        if k >= n_cap {
            return Err(Error::NonTerminating(n_cap));
        }
        term = term * upper / ((&kq + int(1)) * (c + &kq)) * scale;
        coeffs.push(term.clone());
    }
    unreachable!()
}

/// Jacobi polynomial `P_m^{(alpha, beta)}(x)` from its terminating
/// hypergeometric form in `(1 - x)/2`.
pub fn jacobi_polynomial(m: u32, alpha: &Rational, beta: &Rational) -> Polynomial {
    let m = m as usize;
    let mq = int(m as i64);
    let half_one_minus_x = Polynomial::new(vec![frac(1, 2), frac(-1, 2)]);
    let mut acc = Polynomial::zero();
    let mut power = Polynomial::one();
    let m_fact = factorial_q(m);
    for k in 0..=m {
        let kq = int(k as i64);
        let c = pochhammer(&(alpha + &kq + int(1)), m - k) / &m_fact
            * pochhammer(&(-&mq), k)
            * pochhammer(&(&mq + alpha + beta + int(1)), k)
            / factorial_q(k);
        acc = &acc + &power.scale(&c);
        power = &power * &half_one_minus_x;
    }
    acc
}

/// Parity dispatch for the Jacobi representation of `Q_n^p`: returns
/// `(degree d, beta)` with `d = floor(n/2)`, `beta = -1/2` (even n) or `1/2` (odd n).
fn jacobi_parameters(n: u32) -> (u32, Rational) {
    let beta = if n.is_multiple_of(2) {
        frac(-1, 2)
    } else {
        frac(1, 2)
    };
    (n / 2, beta)
}

/// Maps a Jacobi root `g in (-1, 1)` to `z = (g - 1) / (4 (g + 1))`.
pub fn jacobi_root_to_z(g: &Rational) -> Rational {
    (g - int(1)) / (int(4) * (g + int(1)))
}

const ROOT_WIDTH_BITS: usize = 48;

/// Checks, exactly at every sample `z`,
/// `(1 - 4z)^d P_d^{(p, beta)}((1 + 4z)/(1 - 4z)) = ((1+p)_d / d!) 2F1(-n/2, (1-n)/2; p+1; 4z)`
/// together with `C(2p-1,p) 2F1(...) = Q_n^p(z)`, then maps certified
/// enclosures of the Jacobi roots into the `z` plane and confirms each image
/// is negative and brackets a root of `Q_n^p`.
pub fn verify_jacobi_relation(n: u32, p: u32, samples: &[Rational]) -> Result<VerificationReport> {
    if n < 1 || p < 1 {
        return Err(invalid("verify_jacobi_relation needs n, p >= 1"));
    }
    let quarter = frac(1, 4);
    if samples.contains(&quarter) {
        return Err(Error::SampleAtPole);
    }
    if samples.len() <= (n / 2) as usize {
        return Err(invalid(format!(
            "need more than {} samples, got {}",
            n / 2,
            samples.len()
        )));
    }
    let params =
        json!({"n": n, "p": p, "samples": samples.iter().map(to_canonical).collect::<Vec<_>>()});
    let report = |failure: Option<serde_json::Value>| {
        VerificationReport::from_check("jacobi_relation", params.clone(), failure)
    };

    let (d, beta) = jacobi_parameters(n);
    let pq = int(i64::from(p));
    let jac = jacobi_polynomial(d, &pq, &beta);
    let nq = int(i64::from(n));
    let hyp = gauss_2f1_truncated(
        &(-&nq / int(2)),
        &((int(1) - &nq) / int(2)),
        &(&pq + int(1)),
        &int(4),
        n as usize,
    )?;
    let q = q_polynomial(n, p)?;
    let norm = pochhammer(&(&pq + int(1)), d as usize) / factorial_q(d as usize);
    let c0 = binomial_q(2 * i64::from(p) - 1, i64::from(p));

    for z in samples {
        let one_minus = int(1) - int(4) * z;
        let x = (int(1) + int(4) * z) / &one_minus;
        let lhs = num_traits::pow(one_minus.clone(), d as usize) * jac.eval(&x);
        let h = hyp.eval(z);
        let rhs = &norm * &h;
        if lhs != rhs {
            return Ok(report(Some(json!({
                "step": "jacobi_vs_2f1", "z": to_canonical(z),
                "lhs": to_canonical(&lhs), "rhs": to_canonical(&rhs),
            }))));
        }
        let qz = q.eval(z);
        if &c0 * &h != qz {
            return Ok(report(Some(
                json!({"step": "2f1_vs_q", "z": to_canonical(z)}),
            )));
        }
    }

    if d == 0 {
        return Ok(report(None));
    }
    let width = Rational::new(1.into(), num_bigint::BigInt::one() << ROOT_WIDTH_BITS);
    let roots = approximate_real_roots(&jac, &width)?;
    if roots.len() != d as usize || roots.iter().any(|r| r.multiplicity != 1) {
        return Ok(report(Some(
            json!({"step": "jacobi_root_count", "found": roots.len(), "expected": d}),
        )));
    }
    let derivative_bound = |radius: &Rational| -> Rational {
        q.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.abs() * int(k as i64) * num_traits::pow(radius.clone(), k - 1))
            .sum()
    };
    for iv in &roots {
        if iv.lo <= int(-1) || iv.hi >= int(1) {
            return Ok(report(Some(
                json!({"step": "jacobi_root_outside_unit_interval", "lo": to_canonical(&iv.lo)}),
            )));
        }
        // z(g) is increasing on (-1, 1)
        let (z_lo, z_hi) = (jacobi_root_to_z(&iv.lo), jacobi_root_to_z(&iv.hi));
        if !z_hi.is_negative() {
            return Ok(report(Some(
                json!({"step": "mapped_root_not_negative", "z_hi": to_canonical(&z_hi)}),
            )));
        }
        let (q_lo, q_hi) = (q.eval(&z_lo), q.eval(&z_hi));
        let brackets = q_lo.is_zero() || q_hi.is_zero() || q_lo.is_negative() != q_hi.is_negative();
        let mid = (&z_lo + &z_hi) / int(2);
        let bound = derivative_bound(&z_lo.abs()) * (&z_hi - &z_lo);
        if !brackets || q.eval(&mid).abs() > bound {
            return Ok(report(Some(json!({
                "step": "mapped_root_residual", "z_lo": to_canonical(&z_lo), "z_hi": to_canonical(&z_hi),
            }))));
        }
    }
    Ok(report(None))
}

/// Deterministic sample set of size `floor(n/2) + 3` avoiding the pole at 1/4.
pub fn jacobi_samples(n: u32) -> Vec<Rational> {
    let count = (n / 2 + 3) as usize;
    (0..count)
        .map(|i| {
            let i = i as i64;
            if i % 2 == 0 {
                frac(-(i + 1), i / 2 + 2)
            } else {
                frac(i + 1, 3 * i + 4)
            }
        })
        .collect()
}
