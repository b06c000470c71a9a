use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Factorials up to this argument are memoized process-wide.
pub const MEMO_CAP: usize = 512;

fn table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

pub fn factorial(n: usize) -> BigInt {
    if n > MEMO_CAP {
        return (2..=n).map(BigInt::from).product();
    }
    {
        let t = table().read().expect("factorial table poisoned");
        if let Some(v) = t.get(n) {
            return v.clone();
        }
    }
    let mut t = table().write().expect("factorial table poisoned");
    while t.len() <= n {
        let next = t.last().unwrap() * BigInt::from(t.len());
        t.push(next);
    }
    t[n].clone()
}

pub fn factorial_q(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `C(n, k)` for integer arguments; zero unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k.min(n - k) as usize);
    if n <= MEMO_CAP {
        return factorial(n) / (factorial(k) * factorial(n - k));
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_q(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// Rising factorial `(base)_length = base (base+1) ... (base+length-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pochhammer {
    pub base: Rational,
    pub length: usize,
}

impl Pochhammer {
    pub fn new(base: Rational, length: usize) -> Self {
        Pochhammer { base, length }
    }

    pub fn value(&self) -> Rational {
        pochhammer(&self.base, self.length)
    }
}

pub fn pochhammer(base: &Rational, length: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = base.clone();
    for _ in 0..length {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(3, 2), BigInt::from(3));
    }

    #[test]
    fn beyond_memo_cap_agrees_with_pascal() {
        let n = MEMO_CAP as i64 + 3;
        for k in [0, 1, 7, 250, n / 2] {
            assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
        assert_eq!(
            factorial(MEMO_CAP + 1),
            factorial(MEMO_CAP) * BigInt::from(MEMO_CAP + 1)
        );
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&int(3), 0), int(1));
        assert_eq!(pochhammer(&int(1), 5), int(120));
        assert_eq!(Pochhammer::new(frac(1, 2), 2).value(), frac(3, 4));
        assert_eq!(pochhammer(&int(-2), 3), int(0));
    }

    #[test]
    fn duplication_fact_for_rising_factorials() {
        // (a)_{2k} = 4^k (a/2)_k ((1+a)/2)_k
        for a in [int(-5), frac(1, 3), int(4)] {
            for k in 0..6 {
                let lhs = pochhammer(&a, 2 * k);
                let rhs = Rational::from_integer(BigInt::from(4).pow(k as u32))
                    * pochhammer(&(&a / int(2)), k)
                    * pochhammer(&((int(1) + &a) / int(2)), k);
                assert_eq!(lhs, rhs);
            }
        }
    }
}
