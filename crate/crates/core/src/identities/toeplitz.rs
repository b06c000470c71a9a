use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use crate::error::{invalid, Result};
use crate::rational::{to_canonical, Rational};
use crate::report::VerificationReport;

/// Finite section of the Toeplitz matrix `(i, j) -> seq[center + i - j]`,
/// zero outside the sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToeplitzWindow {
    pub seq: Vec<Rational>,
    pub center: i64,
    pub order: usize,
}

impl ToeplitzWindow {
    pub fn entry(&self, i: usize, j: usize) -> Rational {
        let idx = self.center + i as i64 - j as i64;
        usize::try_from(idx)
            .ok()
            .and_then(|k| self.seq.get(k).cloned())
            .unwrap_or_else(Rational::zero)
    }

    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn determinant(&self) -> Rational {
        determinant(self.matrix())
    }
}

/// Gaussian elimination over the rationals.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::from_integer(1.into());
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            let (upper, lower) = m.split_at_mut(r);
            for (dst, src) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *dst -= &f * src;
            }
        }
    }
    det
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorPosition {
    pub order: usize,
    pub row: usize,
    pub col: usize,
    #[serde(with = "crate::rational::serde_str")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToeplitzScan {
    pub min_value: Rational,
    pub first_negative: Option<MinorPosition>,
    pub distinct_minors: usize,
}

impl ToeplitzScan {
    pub fn to_report(&self, max_order: usize, window: usize) -> VerificationReport {
        let params = json!({
            "max_order": max_order,
            "window": window,
            "min_minor": to_canonical(&self.min_value),
            "distinct_minors": self.distinct_minors,
        });
        VerificationReport::from_check(
            "toeplitz_minors",
            params,
            self.first_negative
                .as_ref()
                .map(|m| serde_json::to_value(m).expect("serializable")),
        )
    }
}

/// Scans every contiguous square minor of order `<= max_order` in the
/// `window x window` section `(i, j) -> seq[i - j]`.
///
/// A contiguous block only depends on its order and on the diagonal offset
/// of its top-left corner, so each distinct minor is evaluated once and
/// reported at its first position.
pub fn toeplitz_minor_scan(
    seq: &[Rational],
    max_order: usize,
    window: usize,
) -> Result<ToeplitzScan> {
    if max_order == 0 || window == 0 || max_order > window {
        return Err(invalid("toeplitz scan needs 1 <= max_order <= window"));
    }
    let mut min_value: Option<Rational> = None;
    let mut first_negative = None;
    let mut distinct = 0;
    for order in 1..=max_order {
        let span = (window - order) as i64;
        for offset in -span..=span {
            let block = ToeplitzWindow {
                seq: seq.to_vec(),
                center: offset,
                order,
            };
            let value = block.determinant();
            distinct += 1;
            let (row, col) = if offset >= 0 {
                (offset as usize, 0)
            } else {
                (0, (-offset) as usize)
            };
            if value < Rational::zero() && first_negative.is_none() {
                first_negative = Some(MinorPosition {
                    order,
                    row,
                    col,
                    value: value.clone(),
                });
            }
            if min_value.as_ref().is_none_or(|m| &value < m) {
                min_value = Some(value);
            }
        }
    }
    Ok(ToeplitzScan {
        min_value: min_value.expect("at least one minor"),
        first_negative,
        distinct_minors: distinct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn window_entries() {
        let w = ToeplitzWindow {
            seq: ints(&[1, 2, 1]),
            center: 1,
            order: 2,
        };
        assert_eq!(w.matrix(), vec![ints(&[2, 1]), ints(&[1, 2])]);
        assert_eq!(w.determinant(), int(3));
        let w = ToeplitzWindow {
            seq: ints(&[1, 0, 1]),
            center: 1,
            order: 2,
        };
        assert_eq!(w.determinant(), int(-1));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = vec![
            ints(&[2, -1, 3]),
            ints(&[0, 4, 1]),
            vec![frac(1, 2), int(5), int(-2)],
        ];
        // 2(4*-2 - 5) + 1(0 - 1/2) + 3(0 - 2)
        assert_eq!(determinant(m), frac(-65, 2));
        assert_eq!(determinant(vec![ints(&[0, 1]), ints(&[1, 0])]), int(-1));
    }

    #[test]
    fn scan_examples() {
        let s = toeplitz_minor_scan(&ints(&[1, 2, 1]), 2, 4).unwrap();
        assert!(s.first_negative.is_none());
        assert!(s.to_report(2, 4).pass);

        let s = toeplitz_minor_scan(&ints(&[1, 0, 1]), 2, 4).unwrap();
        let neg = s.first_negative.unwrap();
        assert_eq!(neg.order, 2);
        assert_eq!(neg.value, int(-1));
        assert!(
            !toeplitz_minor_scan(&ints(&[1, 0, 1]), 2, 4)
                .unwrap()
                .to_report(2, 4)
                .pass
        );

        let s = toeplitz_minor_scan(&ints(&[3, 5, 4]), 1, 5).unwrap();
        assert_eq!(s.min_value, int(0));
        let s = toeplitz_minor_scan(&ints(&[3, 5, 4]), 1, 1).unwrap();
        assert_eq!(s.min_value, int(3));

        assert!(toeplitz_minor_scan(&ints(&[1]), 3, 2).is_err());
    }
}
