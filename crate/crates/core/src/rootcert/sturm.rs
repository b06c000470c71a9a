use num_traits::Signed;

use crate::error::Result;
use crate::exactpoly::intpoly::IntPoly;
use crate::exactpoly::{squarefree_part, Polynomial};
use crate::rational::Rational;

/// Interval endpoint; infinite ends are evaluated from leading terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl From<Rational> for Bound {
    fn from(r: Rational) -> Self {
        Bound::Finite(r)
    }
}

/// Sturm chain of the squarefree part of a polynomial: `f, f'`, then negated
/// remainders, each stored as a primitive integer polynomial (a positive
/// multiple of the textbook entry, so all sign counts agree).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
    ints: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Result<Self> {
        p.require_nonzero()?;
        if p.degree() == Some(0) {
            return Ok(SturmChain {
                chain: vec![p.clone()],
                ints: vec![IntPoly::from_rational(p)],
            });
        }
        Ok(Self::of_squarefree(squarefree_part(p)?))
    }

    /// Caller guarantees `f` is squarefree and nonconstant.
    pub(crate) fn of_squarefree(f: Polynomial) -> Self {
        let f = IntPoly::from_rational(&f);
        let df = f.derivative().primitive();
        let mut ints = vec![f, df];
        loop {
            let n = ints.len();
            let r = ints[n - 2].positive_prem(&ints[n - 1]);
            if r.is_zero() {
                break;
            }
            ints.push(r.primitive().neg());
        }
        SturmChain {
            chain: ints.iter().map(IntPoly::to_rational).collect(),
            ints,
        }
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.chain
    }

    /// The squarefree polynomial the chain was built from.
    pub fn base(&self) -> &Polynomial {
        &self.chain[0]
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn sign_at(p: &IntPoly, at: &Bound) -> i8 {
        let lc = if p.lead().is_negative() { -1 } else { 1 };
        match at {
            Bound::PosInf => lc,
            Bound::NegInf => {
                if p.degree().is_multiple_of(2) {
                    lc
                } else {
                    -lc
                }
            }
            Bound::Finite(x) => p.sign_at(x),
        }
    }

    /// Exact sign of the chain's base polynomial at `x`.
    pub(crate) fn base_sign(&self, x: &Rational) -> i8 {
        self.ints[0].sign_at(x)
    }

    /// Sign variations of the chain at `at`, zeros skipped.
    pub fn variations(&self, at: &Bound) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.ints {
            let s = Self::sign_at(p, at);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the half-open interval `(lo, hi]`. Exact even when
    /// an endpoint is itself a root.
    pub fn count_half_open(&self, lo: &Bound, hi: &Bound) -> usize {
        if self.chain.len() == 1 {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    /// Distinct roots in the open interval `(lo, hi)`.
    pub fn count_open(&self, lo: &Bound, hi: &Bound) -> usize {
        let n = self.count_half_open(lo, hi);
        match hi {
            Bound::Finite(x) if self.chain.len() > 1 && self.base_sign(x) == 0 => n - 1,
            _ => n,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn chain_examples() {
        let c = SturmChain::new(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.polys()[2].degree(), Some(0));
        let c = SturmChain::new(&p(&[1, 1])).unwrap();
        assert_eq!(c.polys(), &[p(&[1, 1]), p(&[1])]);
        let c = SturmChain::new(&p(&[2])).unwrap();
        assert_eq!(c.polys(), &[p(&[2])]);
        let c = SturmChain::new(&(&p(&[1, 1]).pow(2) * &p(&[-3, 2]))).unwrap();
        assert_eq!(c.polys()[0], &p(&[1, 1]) * &p(&[-3, 2]));
    }

    #[test]
    fn endpoint_on_root() {
        let c = SturmChain::new(&p(&[-1, 0, 1])).unwrap();
        let f = |v: i64| Bound::Finite(int(v));
        assert_eq!(c.count_open(&f(-1), &f(1)), 0);
        assert_eq!(c.count_half_open(&f(-1), &f(1)), 1);
        assert_eq!(c.count_open(&f(-2), &f(1)), 1);
        assert_eq!(c.count_open(&f(-1), &f(2)), 1);
        assert_eq!(c.count_open(&Bound::NegInf, &Bound::PosInf), 2);
    }

    #[test]
    fn negated_remainder_recurrence() {
        let q = p(&[3, -7, 0, 2, 1, -1]);
        let c = SturmChain::new(&q).unwrap();
        let ps = c.polys();
        for w in ps.windows(3) {
            let r = w[0].rem(&w[1]);
            // w[2] is a negative multiple of the remainder
            let ratio = &w[2].leading().unwrap().clone() / r.leading().unwrap();
            assert!(ratio < int(0));
            assert_eq!(r.scale(&ratio), w[2]);
        }
    }
}
