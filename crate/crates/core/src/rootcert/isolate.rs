use num_traits::Zero;

use crate::rational::{int, Rational};
use crate::rootcert::sturm::{Bound, SturmChain};

/// Splits `(-B, B]` (with a forced cut at zero) into half-open intervals each
/// holding exactly one root of the chain's squarefree base, sorted ascending.
pub(crate) fn isolate(chain: &SturmChain) -> Vec<(Rational, Rational)> {
    let f = chain.base();
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let b = f.cauchy_bound();
    let mut out = Vec::new();
    let mut stack = vec![(Rational::zero(), b.clone()), (-b, Rational::zero())];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count_half_open(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / int(2);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out
}

/// Narrows a half-open isolating interval `(lo, hi]` of the chain's base `f`.
///
/// The result is either a point `[r, r]` at an exactly rational root, or a
/// closed interval with `f(lo)`, `f(hi)` nonzero of opposite sign, length at
/// most `width` (when given), and not containing zero.
pub(crate) fn refine(
    chain: &SturmChain,
    mut lo: Rational,
    mut hi: Rational,
    width: Option<&Rational>,
) -> (Rational, Rational) {
    let two = int(2);
    let sgn = |x: &Rational| chain.base_sign(x);
    if sgn(&hi) == 0 {
        return (hi.clone(), hi);
    }
    // the interval may start on a neighbouring root
    while sgn(&lo) == 0 {
        let mid = (&lo + &hi) / &two;
        if chain.count_half_open(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone())) == 1 {
            hi = mid;
            if sgn(&hi) == 0 {
                return (hi.clone(), hi);
            }
        } else {
            lo = mid;
        }
    }
    let s_lo = sgn(&lo);
    let zero = Rational::zero();
    let straddles_zero = |lo: &Rational, hi: &Rational| lo <= &zero && hi >= &zero;
    loop {
        let wide = width.is_some_and(|w| &(&hi - &lo) > w);
        if !wide && !straddles_zero(&lo, &hi) {
            return (lo, hi);
        }
        let mid = (&lo + &hi) / &two;
        let s = sgn(&mid);
        if s == 0 {
            return (mid.clone(), mid);
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}
