use serde::Serialize;

use crate::error::Result;
use crate::exactpoly::Polynomial;
use crate::rational::Rational;

/// `p = lead * prod factor_i^multiplicity_i` with monic, squarefree,
/// pairwise coprime factors listed by increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquarefreeDecomposition {
    #[serde(with = "crate::rational::serde_str")]
    pub lead: Rational,
    pub factors: Vec<(Polynomial, usize)>,
}

impl SquarefreeDecomposition {
    pub fn reassemble(&self) -> Polynomial {
        let prod: Polynomial = self.factors.iter().map(|(f, m)| f.pow(*m as u32)).product();
        prod.scale(&self.lead)
    }

    /// Product of the distinct factors: monic with the same roots as `p`.
    pub fn radical(&self) -> Polynomial {
        self.factors.iter().map(|(f, _)| f.clone()).product()
    }
}

/// Yun's algorithm over the rationals.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<SquarefreeDecomposition> {
    p.require_nonzero()?;
    let lead = p.leading().unwrap().clone();
    let f = p.monic();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquarefreeDecomposition { lead, factors });
    }
    let df = f.derivative(1);
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0);
    let c = df.div_exact(&a0);
    let mut d = &c - &b.derivative(1);
    let mut mult = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = b.gcd(&d);
        b = b.div_exact(&a);
        let c = d.div_exact(&a);
        d = &c - &b.derivative(1);
        if a.degree().is_some_and(|deg| deg > 0) {
            factors.push((a, mult));
        }
        mult += 1;
    }
    Ok(SquarefreeDecomposition { lead, factors })
}

/// `p / gcd(p, p')`, keeping the leading coefficient of `p`.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    p.require_nonzero()?;
    if p.degree() == Some(0) {
        return Ok(p.clone());
    }
    let g = p.gcd(&p.derivative(1));
    Ok(p.div_exact(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn examples() {
        let sq = squarefree_decomposition(&(&p(&[1, 1]).pow(2) * &p(&[2, 1]))).unwrap();
        assert_eq!(sq.factors, vec![(p(&[2, 1]), 1), (p(&[1, 1]), 2)]);
        assert_eq!(sq.lead, int(1));

        let sq = squarefree_decomposition(&p(&[1, 1])).unwrap();
        assert_eq!(sq.factors, vec![(p(&[1, 1]), 1)]);

        let sq = squarefree_decomposition(&p(&[5])).unwrap();
        assert!(sq.factors.is_empty());
        assert_eq!(sq.lead, int(5));

        assert!(matches!(
            squarefree_decomposition(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn gcd_chain_oracle() {
        // multiplicity of (1+x): largest m with (1+x)^m | p
        let q = &(&p(&[1, 1]).pow(3) * &p(&[0, 1]).pow(2)) * &p(&[-2, 0, 1]);
        let sq = squarefree_decomposition(&q).unwrap();
        let mut seen: Vec<_> = sq
            .factors
            .iter()
            .map(|(f, m)| (f.degree().unwrap(), *m))
            .collect();
        seen.sort();
        assert_eq!(seen, vec![(1, 2), (1, 3), (2, 1)]);
        assert_eq!(sq.reassemble(), q);
        assert_eq!(squarefree_part(&q).unwrap().degree(), Some(4));
    }

    proptest! {
        #[test]
        fn reassembles_exactly(
            roots in prop::collection::vec((-4i64..5, 1i64..4), 1..7),
            lead in 1i64..9,
            extra in prop::collection::vec(-3i64..4, 0..3),
        ) {
            let mut q: Polynomial = roots.iter().map(|&(n, d)| Polynomial::new(vec![frac(-n, d), int(1)])).product();
            if !extra.is_empty() { q = &q * &Polynomial::from_ints(&[1, 0, 1]); }
            let q = q.scale(&int(lead));
            let sq = squarefree_decomposition(&q).unwrap();
            prop_assert_eq!(sq.reassemble(), q.clone());
            let total: usize = sq.factors.iter().map(|(f, m)| f.degree().unwrap() * m).sum();
            prop_assert_eq!(total, q.degree().unwrap());
            for (i, (f, _)) in sq.factors.iter().enumerate() {
                prop_assert_eq!(f.leading().unwrap(), &int(1));
                prop_assert_eq!(f.gcd(&f.derivative(1)).degree(), Some(0));
                for (g, _) in &sq.factors[i + 1..] {
                    prop_assert_eq!(f.gcd(g).degree(), Some(0));
                }
            }
        }
    }
}
