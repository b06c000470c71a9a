//! The non-linear coefficient operators and the Laguerre / Turán expressions.
//!
//! All operators act on the `a_k` presentation `psi(x) = sum a_k x^k`;
//! callers holding [`TaylorData`] convert explicitly first. Coefficient
//! indices outside `0..=deg psi` read as zero.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::exactpoly::{binomial_q, factorial_q, Polynomial, TaylorData};
use crate::rational::{int, Rational};

/// Finitely supported sequence `mu_0, mu_1, ...`; reads as zero past the end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MuSequence {
    #[serde(with = "crate::rational::serde_vec")]
    pub mus: Vec<Rational>,
}

impl MuSequence {
    pub fn new(mus: Vec<Rational>) -> Self {
        MuSequence { mus }
    }

    pub fn get(&self, i: i64) -> Rational {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.mus.get(i).cloned())
            .unwrap_or_else(Rational::zero)
    }

    /// The sequence induced by `L_k^p`: `mu_0 = C(2p-1, p)`,
    /// `mu_{2j} = (-1)^j C(2p, p-j)`, odd entries zero.
    pub fn for_lkp(p: u32) -> Result<Self> {
        let c = lkp_coefficients(p)?;
        let mut mus = vec![Rational::zero(); 2 * p as usize + 1];
        for (j, cj) in c.into_iter().enumerate() {
            mus[2 * j] = cj;
        }
        Ok(MuSequence { mus })
    }
}

/// Which operator to apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum OperatorSpec {
    Lkp { p: u32 },
    Sr { r: u32 },
    Tmu { mu: MuSequence },
}

impl OperatorSpec {
    pub fn apply(&self, psi: &Polynomial) -> Result<Polynomial> {
        match self {
            OperatorSpec::Lkp { p } => apply_lkp(psi, *p),
            OperatorSpec::Sr { r } => apply_sr(psi, *r),
            OperatorSpec::Tmu { mu } => apply_tmu(psi, mu),
        }
    }

    /// The `mu` sequence whose `T_mu` realizes this operator after `z -> z^2`.
    pub fn mu(&self) -> Result<MuSequence> {
        match self {
            OperatorSpec::Lkp { p } => MuSequence::for_lkp(*p),
            OperatorSpec::Sr { r } => {
                let mut mus = vec![Rational::zero(); 2 * *r as usize + 1];
                if *r > 0 {
                    mus[0] = Rational::one();
                    mus[2 * *r as usize] = -Rational::one();
                }
                Ok(MuSequence::new(mus))
            }
            OperatorSpec::Tmu { mu } => Ok(mu.clone()),
        }
    }

    pub fn label(&self) -> String {
        match self {
            OperatorSpec::Lkp { p } => format!("L^{p}"),
            OperatorSpec::Sr { r } => format!("S_{r}"),
            OperatorSpec::Tmu { mu } => format!("T_mu(len {})", mu.mus.len()),
        }
    }
}

/// `(c_0, ..., c_p)` with `c_0 = C(2p-1, p)` and `c_j = (-1)^j C(2p, p-j)`.
pub fn lkp_coefficients(p: u32) -> Result<Vec<Rational>> {
    if p < 1 {
        return Err(invalid("L_k^p needs p >= 1"));
    }
    let p = i64::from(p);
    let mut out = vec![binomial_q(2 * p - 1, p)];
    for j in 1..=p {
        let c = binomial_q(2 * p, p - j);
        out.push(if j % 2 == 1 { -c } else { c });
    }
    Ok(out)
}

/// Applies the quadratic coefficient map `a_k -> sum_j w_j a_{k-j} a_{k+j}`,
/// keeping indices `0..=deg psi`.
fn apply_centered(psi: &Polynomial, weights: &[Rational]) -> Polynomial {
    let n = psi.degree().unwrap() as i64;
    let out = (0..=n)
        .map(|k| {
            let mut acc = Rational::zero();
            for (j, w) in weights.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                let j = j as i64;
                let (Some(a), Some(b)) = (psi.coeff_ref(k - j), psi.coeff_ref(k + j)) else {
                    continue;
                };
                acc += w * a * b;
            }
            acc
        })
        .collect();
    Polynomial::new(out)
}

/// `L_k^p[psi] = sum_k (C(2p-1,p) a_k^2 + sum_j (-1)^j C(2p,p-j) a_{k-j} a_{k+j}) z^k`.
pub fn apply_lkp(psi: &Polynomial, p: u32) -> Result<Polynomial> {
    psi.require_nonzero()?;
    let c = lkp_coefficients(p)?;
    Ok(apply_centered(psi, &c))
}

/// Fisk's `S_r`: `a_k -> a_k^2 - a_{k-r} a_{k+r}`. `S_0` is identically zero.
pub fn apply_sr(psi: &Polynomial, r: u32) -> Result<Polynomial> {
    psi.require_nonzero()?;
    if r == 0 {
        return Ok(Polynomial::zero());
    }
    let mut w = vec![Rational::zero(); r as usize + 1];
    w[0] = Rational::one();
    w[r as usize] = -Rational::one();
    Ok(apply_centered(psi, &w))
}

/// `T_mu: sum a_k z^k -> sum_{i <= j} mu_{j-i} a_i a_j z^{i+j}`.
pub fn apply_tmu(psi: &Polynomial, mu: &MuSequence) -> Result<Polynomial> {
    psi.require_nonzero()?;
    let a = psi.coeffs();
    let n = a.len();
    let mut out = vec![Rational::zero(); 2 * n - 1];
    for i in 0..n {
        for j in i..n {
            let m = mu.get((j - i) as i64);
            if m.is_zero() {
                continue;
            }
            out[i + j] += m * &a[i] * &a[j];
        }
    }
    Ok(Polynomial::new(out))
}

/// `gamma_k = sum_{j=0}^{floor(k/2)} C(k, j) mu_{k-2j}`.
pub fn gamma_transform(mu: &MuSequence, k: u32) -> Rational {
    let k = i64::from(k);
    (0..=k / 2)
        .map(|j| binomial_q(k, j) * mu.get(k - 2 * j))
        .sum()
}

/// `L_p(phi) = sum_{j=0}^{2p} ((-1)^{p+j} / (2p)!) C(2p, j) phi^{(j)} phi^{(2p-j)}`.
pub fn laguerre_expression(phi: &Polynomial, p: u32) -> Result<Polynomial> {
    phi.require_nonzero()?;
    let two_p = 2 * p as usize;
    let derivs: Vec<Polynomial> = (0..=two_p).map(|j| phi.derivative(j)).collect();
    let inv = factorial_q(two_p).recip();
    let mut acc = Polynomial::zero();
    for j in 0..=two_p {
        let mut w = &inv * binomial_q(two_p as i64, j as i64);
        if (p as usize + j) % 2 == 1 {
            w = -w;
        }
        acc = &acc + &(&derivs[j] * &derivs[two_p - j]).scale(&w);
    }
    Ok(acc)
}

/// `C(2p-1,p) gamma_{k+p}^2 + sum_{j=1}^p (-1)^j C(2p,p-j) gamma_{k+p-j} gamma_{k+p+j}`,
/// which equals `((2p)!/2) L_p(phi^{(k)})(0)`.
pub fn extended_turan_at_zero(gammas: &TaylorData, k: u32, p: u32) -> Result<Rational> {
    let c = lkp_coefficients(p)?;
    let center = i64::from(k) + i64::from(p);
    Ok(c.iter()
        .enumerate()
        .map(|(j, cj)| {
            let j = j as i64;
            cj * gammas.gamma(center - j) * gammas.gamma(center + j)
        })
        .sum())
}

/// Multiplier turning `L_p(phi)(0)` into an integer-weighted extended Turán
/// row: `(2p)!/2`, and 1 for `p = 0`.
pub fn turan_row_scale(p: u32) -> Rational {
    if p == 0 {
        return int(1);
    }
    factorial_q(2 * p as usize) / int(2)
}
