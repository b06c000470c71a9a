//! Integer-coefficient working form used by the gcd and Sturm hot paths.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactpoly::Polynomial;
use crate::rational::Rational;

/// Primitive integer polynomial; trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    fn trimmed(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        IntPoly(v)
    }

    /// Positive integer multiple of `p` made primitive.
    pub fn from_rational(p: &Polynomial) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let v = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        Self::trimmed(v).primitive()
    }

    pub fn to_rational(&self) -> Polynomial {
        Polynomial::new(self.0.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lead(&self) -> &BigInt {
        self.0.last().expect("lead of zero polynomial")
    }

    /// Divides out the positive content.
    pub fn primitive(self) -> Self {
        let g = self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() || g.is_one() {
            return self;
        }
        IntPoly(self.0.into_iter().map(|c| c / &g).collect())
    }

    pub fn neg(self) -> Self {
        IntPoly(self.0.into_iter().map(|c| -c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// A positive multiple of the Euclidean remainder `self mod divisor`.
    pub fn positive_prem(&self, divisor: &Self) -> Self {
        let db = divisor.degree();
        let lb = divisor.lead();
        let lb_abs = lb.abs();
        let flip = lb.is_negative();
        let mut r = self.0.clone();
        while !r.is_empty() && r.len() > db {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            // r <- |lb| r - sign(lb) lr x^(dr-db) b, which kills the leading term
            let factor = if flip { -lr } else { lr };
            for c in r.iter_mut() {
                *c *= &lb_abs;
            }
            for (j, b) in divisor.0.iter().enumerate() {
                r[dr - db + j] -= &factor * b;
            }
            debug_assert!(r[dr].is_zero());
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly(r)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.clone(), other.clone())
        } else {
            (other.clone(), self.clone())
        };
        while !b.is_zero() {
            let r = a.positive_prem(&b).primitive();
            a = b;
            b = r;
        }
        if !a.is_zero() && a.lead().is_negative() {
            a = a.neg();
        }
        a.primitive()
    }

    /// Exact sign of `p(x)` through the homogenized Horner scheme.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let n = self.degree();
        let (u, v) = (x.numer(), x.denom());
        let mut acc = self.0[n].clone();
        let mut vpow = BigInt::one();
        for a in self.0[..n].iter().rev() {
            vpow *= v;
            acc = acc * u + a * &vpow;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn prem_is_positive_multiple_of_remainder() {
        let a = Polynomial::new(vec![frac(1, 2), int(-3), int(0), frac(7, 3), int(1)]);
        let b = Polynomial::new(vec![int(2), int(1), frac(-5, 2)]);
        let r = IntPoly::from_rational(&a)
            .positive_prem(&IntPoly::from_rational(&b))
            .to_rational();
        let exact = a.rem(&b);
        let ratio = r.leading().unwrap() / exact.leading().unwrap();
        assert!(ratio > int(0));
        assert_eq!(exact.scale(&ratio), r);
    }

    #[test]
    fn sign_evaluation() {
        let p = IntPoly::from_rational(&Polynomial::from_ints(&[-2, 0, 1]));
        assert_eq!(p.sign_at(&frac(3, 2)), 1);
        assert_eq!(p.sign_at(&frac(-7, 5)), -1);
        assert_eq!(
            IntPoly::from_rational(&Polynomial::from_ints(&[1, 1])).sign_at(&int(-1)),
            0
        );
    }
}
