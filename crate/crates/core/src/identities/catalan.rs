use num_traits::Zero;
use serde_json::json;

use crate::error::{invalid, Error, Result};
use crate::exactpoly::{binomial, binomial_q, elementary_symmetric_all};
use crate::operators::{gamma_transform, MuSequence};
use crate::rational::{from_big, to_canonical, Rational};
use crate::report::VerificationReport;

/// Super Catalan number `S(p, k) = C(2p,p) C(2k,k) / C(p+k,p)`.
pub fn super_catalan(p: u32, k: u32) -> Result<Rational> {
    let (p, k) = (i64::from(p), i64::from(k));
    let value = binomial_q(2 * p, p) * binomial_q(2 * k, k) / binomial_q(p + k, p);
    if !value.is_integer() {
        return Err(Error::IntegralityViolation(format!("S({p},{k}) = {value}")));
    }
    Ok(value)
}

/// Alternating sum `sum_{r=-b}^{b} (-1)^r C(2a, a-r) C(2b, b-r)`.
pub fn szily_sum(a: u32, b: u32) -> Rational {
    let (a, b) = (i64::from(a), i64::from(b));
    let mut acc = num_bigint::BigInt::zero();
    for r in -b..=b {
        let t = binomial(2 * a, a - r) * binomial(2 * b, b - r);
        if r.rem_euclid(2) == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    from_big(acc)
}

/// Brute-force alternating sum against `C(2a,a) C(2b,b) / C(a+b,a)`.
pub fn szily_check(a: u32, b: u32) -> Result<VerificationReport> {
    if a < b {
        return Err(invalid("szily_check needs a >= b"));
    }
    let lhs = szily_sum(a, b);
    let (ai, bi) = (i64::from(a), i64::from(b));
    let rhs = binomial_q(2 * ai, ai) * binomial_q(2 * bi, bi) / binomial_q(ai + bi, ai);
    let failure =
        (lhs != rhs).then(|| json!({"lhs": to_canonical(&lhs), "rhs": to_canonical(&rhs)}));
    Ok(VerificationReport::from_check(
        "szily",
        json!({"a": a, "b": b}),
        failure,
    ))
}

/// Both sides of the symmetric-function identity
/// `sum_{i<=j} mu_{j-i} e_i e_j = e_n sum_k gamma_k e_{n-k}(z + 1/z)`.
pub fn symmetric_identity_sides(
    mu: &MuSequence,
    points: &[Rational],
) -> Result<(Rational, Rational)> {
    if points.iter().any(Zero::is_zero) {
        return Err(Error::ZeroPoint);
    }
    let n = points.len();
    let e = elementary_symmetric_all(points);
    let mut lhs = Rational::zero();
    for i in 0..=n {
        for j in i..=n {
            let m = mu.get((j - i) as i64);
            if !m.is_zero() {
                lhs += m * &e[i] * &e[j];
            }
        }
    }
    let shifted: Vec<Rational> = points.iter().map(|z| z + z.recip()).collect();
    let w = elementary_symmetric_all(&shifted);
    let rhs = &e[n]
        * (0..=n)
            .map(|k| gamma_transform(mu, k as u32) * &w[n - k])
            .sum::<Rational>();
    Ok((lhs, rhs))
}

pub fn verify_symmetric_identity(
    mu: &MuSequence,
    points: &[Rational],
) -> Result<VerificationReport> {
    let (lhs, rhs) = symmetric_identity_sides(mu, points)?;
    let params = json!({
        "mu": mu,
        "points": points.iter().map(to_canonical).collect::<Vec<_>>(),
    });
    let failure =
        (lhs != rhs).then(|| json!({"lhs": to_canonical(&lhs), "rhs": to_canonical(&rhs)}));
    Ok(VerificationReport::from_check(
        "symmetric_function_identity",
        params,
        failure,
    ))
}

/// Weights `w_j = (-1)^{j+1} C(2p, p-j)` with `L_k^p = sum_j w_j S_j`.
pub fn lkp_sr_decomposition(p: u32) -> Result<Vec<(u32, Rational)>> {
    if p < 1 {
        return Err(invalid("decomposition needs p >= 1"));
    }
    let pi = i64::from(p);
    Ok((1..=p)
        .map(|j| {
            let c = binomial_q(2 * pi, pi - i64::from(j));
            (j, if j % 2 == 1 { c } else { -c })
        })
        .collect())
}

/// Catalan number `C_k = C(2k,k)/(k+1)`.
pub fn catalan(k: u32) -> Rational {
    binomial_q(2 * i64::from(k), i64::from(k)) / Rational::from_integer((k + 1).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn super_catalan_values() {
        assert_eq!(super_catalan(1, 1).unwrap(), int(2));
        assert_eq!(super_catalan(2, 0).unwrap(), int(6));
        assert_eq!(super_catalan(2, 1).unwrap(), int(4));
        assert_eq!(super_catalan(2, 2).unwrap(), int(6));
        for k in 0..12 {
            assert_eq!(super_catalan(1, k).unwrap(), int(2) * catalan(k));
            assert_eq!(
                super_catalan(k, 0).unwrap(),
                binomial_q(2 * i64::from(k), i64::from(k))
            );
        }
    }

    #[test]
    fn szily_examples() {
        assert_eq!(szily_sum(1, 1), int(2));
        assert_eq!(szily_sum(0, 0), int(1));
        assert_eq!(szily_sum(2, 1), int(4));
        assert!(szily_check(1, 1).unwrap().pass);
        assert!(szily_check(2, 1).unwrap().pass);
        assert!(szily_check(1, 2).is_err());
    }

    #[test]
    fn symmetric_identity_examples() {
        let l1 = MuSequence::for_lkp(1).unwrap();
        assert!(
            verify_symmetric_identity(&l1, &[int(1), int(1)])
                .unwrap()
                .pass
        );
        let only0 = MuSequence::new(vec![int(1)]);
        let pts = [frac(2, 3), int(-5), frac(1, 7)];
        let (lhs, _) = symmetric_identity_sides(&only0, &pts).unwrap();
        let e = elementary_symmetric_all(&pts);
        assert_eq!(lhs, e.iter().map(|x| x * x).sum::<Rational>());
        assert!(verify_symmetric_identity(&only0, &pts).unwrap().pass);
        let l3 = MuSequence::for_lkp(3).unwrap();
        assert!(
            verify_symmetric_identity(&l3, &[int(1), int(2), int(3), int(4)])
                .unwrap()
                .pass
        );
        assert!(matches!(
            verify_symmetric_identity(&l3, &[int(0)]),
            Err(Error::ZeroPoint)
        ));
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(lkp_sr_decomposition(1).unwrap(), vec![(1, int(1))]);
        assert_eq!(
            lkp_sr_decomposition(2).unwrap(),
            vec![(1, int(4)), (2, int(-1))]
        );
        assert_eq!(
            lkp_sr_decomposition(3).unwrap(),
            vec![(1, int(15)), (2, int(-6)), (3, int(1))]
        );
        for p in 1..=12 {
            let s: Rational = lkp_sr_decomposition(p)
                .unwrap()
                .into_iter()
                .map(|(_, w)| w)
                .sum();
            assert_eq!(s, binomial_q(2 * i64::from(p) - 1, i64::from(p)));
        }
        assert!(lkp_sr_decomposition(0).is_err());
    }
}
