use serde::{Deserialize, Serialize};

use crate::exactpoly::{factorial_q, Polynomial};
use crate::rational::Rational;

/// The `gamma` presentation `phi(x) = sum (gamma_k / k!) x^k`.
///
/// Kept distinct from [`Polynomial`] so that converting between the two
/// coefficient conventions is always an explicit call.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaylorData {
    #[serde(with = "crate::rational::serde_vec")]
    pub gammas: Vec<Rational>,
}

impl TaylorData {
    pub fn new(gammas: Vec<Rational>) -> Self {
        TaylorData { gammas }
    }

    /// `gamma_k` with zero beyond the stored range.
    pub fn gamma(&self, k: i64) -> Rational {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.gammas.get(k).cloned())
            .unwrap_or_else(|| Rational::from_integer(0.into()))
    }

    /// Taylor data of `e^x` truncated after `gamma_{len-1}` (all ones).
    pub fn exponential(len: usize) -> Self {
        TaylorData {
            gammas: vec![Rational::from_integer(1.into()); len],
        }
    }

    /// `gamma_k = k! a_k`.
    pub fn from_polynomial(p: &Polynomial) -> Self {
        TaylorData {
            gammas: p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, a)| a * factorial_q(k))
                .collect(),
        }
    }

    /// `a_k = gamma_k / k!`.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(
            self.gammas
                .iter()
                .enumerate()
                .map(|(k, g)| g / factorial_q(k))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn cube_gammas() {
        let cube = Polynomial::from_ints(&[1, 3, 3, 1]);
        let t = TaylorData::from_polynomial(&cube);
        assert_eq!(t.gammas, vec![int(1), int(3), int(6), int(6)]);
        assert_eq!(t.to_polynomial(), cube);
        assert_eq!(t.gamma(-1), int(0));
        assert_eq!(t.gamma(9), int(0));
    }
}
