//! Exact statements about where the roots of a rational polynomial lie.
//!
//! Everything routes through the squarefree decomposition: Sturm chains are
//! only built for squarefree polynomials and multiplicities are read off the
//! decomposition afterwards.

mod isolate;
mod signgrid;
mod sturm;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::exactpoly::{squarefree_decomposition, Polynomial, SquarefreeDecomposition};
use crate::rational::{int, Rational};

pub use sturm::{Bound, SturmChain};

/// Degree from which [`certify_all_real_negative`] first tries the
/// sign-change certificate before building a Sturm chain.
pub const SIGN_GRID_MIN_DEGREE: usize = 24;
const SIGN_GRID_MAX_LOG_DENSITY: u32 = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    AllRealNegative,
    NotAllReal,
    RealButNotAllNegative,
    ZeroRoot,
    VacuousConstant,
}

/// How the root count was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Evidence {
    /// Sturm sign variations on each squarefree factor.
    Sturm,
    /// `deg p` exact sign changes on negative dyadic sample points.
    SignChanges,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    #[serde(with = "crate::rational::serde_str")]
    pub lo: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub hi: Rational,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCertificate {
    pub verdict: Verdict,
    pub real_root_count: usize,
    pub nonreal_count: usize,
    pub isolating_intervals: Vec<RootInterval>,
    pub evidence: Evidence,
}

impl RootCertificate {
    pub fn is_all_real_negative(&self) -> bool {
        self.verdict == Verdict::AllRealNegative
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NonnegativityVerdict {
    NonnegativeEverywhere,
    AttainsNegative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonnegativityCertificate {
    pub verdict: NonnegativityVerdict,
    #[serde(with = "crate::rational::serde_opt")]
    pub witness: Option<Rational>,
}

pub fn sturm_chain(p: &Polynomial) -> Result<SturmChain> {
    SturmChain::new(p)
}

/// Distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn count_real_roots(p: &Polynomial, lo: &Bound, hi: &Bound) -> Result<usize> {
    let chain = SturmChain::new(p)?;
    let ordered = match (lo, hi) {
        (Bound::PosInf, _) | (_, Bound::NegInf) => false,
        (Bound::Finite(a), Bound::Finite(b)) => a < b,
        _ => true,
    };
    if !ordered {
        return Err(invalid("count_real_roots needs lo < hi"));
    }
    Ok(chain.count_open(lo, hi))
}

/// Isolating intervals for the distinct real roots, tagged with multiplicity.
fn isolate_with_multiplicity(
    sq: &SquarefreeDecomposition,
    width: Option<&Rational>,
) -> Vec<RootInterval> {
    if sq.factors.is_empty() {
        return Vec::new();
    }
    let radical = sq.radical();
    let chain = SturmChain::of_squarefree(radical);
    isolate::isolate(&chain)
        .into_iter()
        .map(|(lo, hi)| {
            let (lo, hi) = isolate::refine(&chain, lo, hi, width);
            let multiplicity = sq
                .factors
                .iter()
                .find(|(f, _)| {
                    let (a, b) = (f.eval(&lo), f.eval(&hi));
                    a.is_zero() || b.is_zero() || a.is_negative() != b.is_negative()
                })
                .map(|(_, m)| *m)
                .expect("isolated root belongs to some squarefree factor");
            RootInterval {
                lo,
                hi,
                multiplicity,
            }
        })
        .collect()
}

/// Certified verdict on "all zeros real and strictly negative".
pub fn certify_all_real_negative(p: &Polynomial) -> Result<RootCertificate> {
    p.require_nonzero()?;
    let degree = p.degree().unwrap();
    if degree == 0 {
        return Ok(RootCertificate {
            verdict: Verdict::VacuousConstant,
            real_root_count: 0,
            nonreal_count: 0,
            isolating_intervals: Vec::new(),
            evidence: Evidence::Sturm,
        });
    }
    if degree >= SIGN_GRID_MIN_DEGREE {
        if let Some(brackets) = signgrid::negative_root_brackets(p, SIGN_GRID_MAX_LOG_DENSITY) {
            return Ok(RootCertificate {
                verdict: Verdict::AllRealNegative,
                real_root_count: degree,
                nonreal_count: 0,
                isolating_intervals: brackets
                    .into_iter()
                    .map(|(lo, hi)| RootInterval {
                        lo,
                        hi,
                        multiplicity: 1,
                    })
                    .collect(),
                evidence: Evidence::SignChanges,
            });
        }
    }
    let sq = squarefree_decomposition(p)?;
    let intervals = isolate_with_multiplicity(&sq, None);
    let real: usize = intervals.iter().map(|r| r.multiplicity).sum();
    let nonreal = degree - real;
    let zero = Rational::zero();
    let verdict = if nonreal > 0 {
        Verdict::NotAllReal
    } else if p.coeff(0).is_zero() {
        Verdict::ZeroRoot
    } else if intervals.iter().any(|r| r.hi > zero) {
        Verdict::RealButNotAllNegative
    } else {
        Verdict::AllRealNegative
    };
    Ok(RootCertificate {
        verdict,
        real_root_count: real,
        nonreal_count: nonreal,
        isolating_intervals: intervals,
        evidence: Evidence::Sturm,
    })
}

/// Certified verdict on `p(x) >= 0` for every real `x`.
pub fn certify_nonnegative(p: &Polynomial) -> Result<NonnegativityCertificate> {
    p.require_nonzero()?;
    let degree = p.degree().unwrap();
    let lead_positive = p.leading().unwrap().is_positive();
    let sq = squarefree_decomposition(p)?;
    let nonnegative = if degree == 0 {
        lead_positive
    } else {
        lead_positive
            && degree.is_multiple_of(2)
            && sq.factors.iter().filter(|(_, m)| m % 2 == 1).all(|(f, _)| {
                SturmChain::of_squarefree(f.clone()).count_open(&Bound::NegInf, &Bound::PosInf) == 0
            })
    };
    if nonnegative {
        return Ok(NonnegativityCertificate {
            verdict: NonnegativityVerdict::NonnegativeEverywhere,
            witness: None,
        });
    }
    // one sample inside every root-free gap covers every sign region of p
    let intervals = isolate_with_multiplicity(&sq, None);
    let mut samples = Vec::new();
    match (intervals.first(), intervals.last()) {
        (Some(first), Some(last)) => {
            samples.push(&first.lo - int(1));
            for w in intervals.windows(2) {
                samples.push((&w[0].hi + &w[1].lo) / int(2));
            }
            samples.push(&last.hi + int(1));
        }
        _ => samples.push(Rational::zero()),
    }
    let witness = samples
        .into_iter()
        .find(|x| p.eval(x).is_negative())
        .expect("a polynomial failing the nonnegativity test is negative in some root-free gap");
    Ok(NonnegativityCertificate {
        verdict: NonnegativityVerdict::AttainsNegative,
        witness: Some(witness),
    })
}

/// Certified enclosures of the distinct real roots, each of length at most `width`.
pub fn approximate_real_roots(p: &Polynomial, width: &Rational) -> Result<Vec<RootInterval>> {
    p.require_nonzero()?;
    if !width.is_positive() {
        return Err(invalid("width must be positive"));
    }
    let sq = squarefree_decomposition(p)?;
    Ok(isolate_with_multiplicity(&sq, Some(width)))
}
