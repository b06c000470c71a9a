use num_traits::{One, Zero};

use crate::rational::Rational;

/// `e_0 .. e_n` of the given points, from the expansion of `prod (1 + z_i t)`.
pub fn elementary_symmetric_all(points: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); points.len() + 1];
    e[0] = Rational::one();
    for (i, z) in points.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            let t = &e[k - 1] * z;
            e[k] += t;
        }
    }
    e
}

/// `e_k(points)`; zero for `k` outside `0..=n`, and `e_0 = 1`.
pub fn elementary_symmetric(points: &[Rational], k: i64) -> Rational {
    if k < 0 || k as usize > points.len() {
        return Rational::zero();
    }
    elementary_symmetric_all(points).swap_remove(k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::Polynomial;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let pts = [int(1), int(2), int(3)];
        assert_eq!(elementary_symmetric(&pts, 1), int(6));
        assert_eq!(elementary_symmetric(&pts, 2), int(11));
        assert_eq!(elementary_symmetric(&pts, 3), int(6));
        assert_eq!(elementary_symmetric(&pts, 0), int(1));
        assert_eq!(elementary_symmetric(&[], 0), int(1));
        assert_eq!(elementary_symmetric(&pts, 4), int(0));
        assert_eq!(elementary_symmetric(&pts, -1), int(0));
    }

    /// Direct subset enumeration.
    fn brute(points: &[Rational], k: usize) -> Rational {
        let n = points.len();
        let mut acc = Rational::zero();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k {
                acc += (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| points[i].clone())
                    .product::<Rational>();
            }
        }
        acc
    }

    proptest! {
        #[test]
        fn agrees_with_product_expansion(raw in prop::collection::vec((-9i64..10, 1i64..6), 0..=8)) {
            let pts: Vec<_> = raw.iter().map(|&(n, d)| frac(n, d)).collect();
            let prod: Polynomial = pts.iter().map(|z| Polynomial::new(vec![int(1), z.clone()])).product();
            for k in 0..=pts.len() {
                prop_assert_eq!(prod.coeff(k as i64), elementary_symmetric(&pts, k as i64));
                prop_assert_eq!(brute(&pts, k), elementary_symmetric(&pts, k as i64));
            }
        }
    }
}
