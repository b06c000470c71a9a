//! Exact sign-change certificate for high-degree candidates.
//!
//! A polynomial of degree `n` that changes sign `n` times along an increasing
//! sequence of negative sample points has `n` simple negative roots, one in
//! each bracketing pair. The samples are dyadic rationals laid out on a
//! geometric grid between rigorous lower and upper root-modulus bounds, so
//! every evaluation is an integer Horner pass.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use crate::exactpoly::Polynomial;
use crate::rational::Rational;

/// Smallest `e` with `|z| <= 2^e` for every root (Fujiwara's bound).
fn root_modulus_exponent(coeffs: &[BigInt]) -> i64 {
    let n = coeffs.len() - 1;
    let lead_bits = coeffs[n].bits() as i64;
    let mut best = i64::MIN;
    for k in 1..=n {
        let a = &coeffs[n - k];
        if a.is_zero() {
            continue;
        }
        // log2 |a / lead| < bits(a) - bits(lead) + 1
        let num = a.bits() as i64 - lead_bits + 1;
        best = best.max(num.div_euclid(k as i64) + i64::from(num.rem_euclid(k as i64) != 0));
    }
    best + 1
}

/// Sign of `p(-m * 2^shift)` for integer coefficients.
fn sign_at(coeffs: &[BigInt], m: u64, shift: i64) -> Sign {
    let u = -BigInt::from(m);
    let n = coeffs.len() - 1;
    let mut acc = coeffs[n].clone();
    if shift >= 0 {
        let x = u << (shift as usize);
        for a in coeffs[..n].iter().rev() {
            acc = acc * &x + a;
        }
    } else {
        let s = (-shift) as usize;
        for (k, a) in coeffs[..n].iter().enumerate().rev() {
            acc = acc * &u + (a << (s * (n - k)));
        }
    }
    acc.sign()
}

/// Brackets (closed, possibly degenerate) for `deg p` distinct negative roots, or `None` if the grid
/// (refined up to `2^max_log_density` points per octave) does not resolve them.
pub(crate) fn negative_root_brackets(
    p: &Polynomial,
    max_log_density: u32,
) -> Option<Vec<(Rational, Rational)>> {
    let n = p.degree()?;
    if n == 0 {
        return Some(Vec::new());
    }
    let q = p.primitive_integer();
    let coeffs: Vec<BigInt> = q.coeffs().iter().map(|c| c.to_integer()).collect();
    if coeffs.iter().any(|c| !c.is_positive()) {
        return None;
    }
    let hi_exp = root_modulus_exponent(&coeffs);
    let reversed: Vec<BigInt> = coeffs.iter().rev().cloned().collect();
    let lo_exp = -root_modulus_exponent(&reversed);

    for log_density in 3..=max_log_density {
        let density = 1u64 << log_density;
        // points -(density + i) 2^(e - log_density), walking from -2^hi_exp toward -2^lo_exp
        let mut samples: Vec<(u64, i64)> = Vec::new();
        for e in (lo_exp..hi_exp).rev() {
            for i in (0..density).rev() {
                samples.push((density + i, e - log_density as i64));
            }
        }
        samples.insert(0, (1, hi_exp));

        // evidence: exact zeros, and sign changes between adjacent nonzero samples
        let mut brackets = Vec::new();
        let mut prev: Option<(Sign, (u64, i64))> = None;
        for &pt in &samples {
            let s = sign_at(&coeffs, pt.0, pt.1);
            if s == Sign::NoSign {
                let r = to_rational(pt);
                brackets.push((r.clone(), r));
            } else if let Some((ps, ppt)) = prev {
                if ps != Sign::NoSign && ps != s {
                    brackets.push((to_rational(ppt), to_rational(pt)));
                }
            }
            prev = Some((s, pt));
        }
        if brackets.len() == n {
            return Some(brackets);
        }
    }
    None
}

fn to_rational((m, shift): (u64, i64)) -> Rational {
    let m = -BigInt::from(m);
    if shift >= 0 {
        Rational::from_integer(m << (shift as usize))
    } else {
        Rational::new(m, BigInt::from(1) << ((-shift) as usize))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn brackets_distinct_negative_roots() {
        let roots = [frac(-1, 3), int(-2), int(-7), frac(-1000, 3), frac(-1, 500)];
        let p: Polynomial = roots
            .iter()
            .map(|r| Polynomial::new(vec![-r, int(1)]))
            .product();
        let b = negative_root_brackets(&p, 10).unwrap();
        assert_eq!(b.len(), 5);
        for (lo, hi) in &b {
            assert!(lo <= hi);
            assert_eq!(roots.iter().filter(|r| *r >= lo && *r <= hi).count(), 1);
        }
    }

    #[test]
    fn rejects_double_root_and_complex() {
        assert!(negative_root_brackets(&Polynomial::from_ints(&[1, 2, 1]), 8).is_none());
        assert!(negative_root_brackets(&Polynomial::from_ints(&[1, 0, 1]), 8).is_none());
        assert!(negative_root_brackets(&Polynomial::from_ints(&[-1, 1]), 8).is_none());
    }
}
