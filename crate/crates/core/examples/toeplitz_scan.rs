//! Scans Toeplitz minors of coefficient sequences: `L^p` images of rooted
//! products stay totally nonnegative at low order, while `1 + x^2` does not.

use stabop::identities::toeplitz_minor_scan;
use stabop::lpclass::random_corpus;
use stabop::operators::apply_lkp;
use stabop::rational::to_canonical;
use stabop::Polynomial;

fn main() -> stabop::Result<()> {
    for (i, m) in random_corpus(99, 4, (4, 10), 20)?.iter().enumerate() {
        let out = apply_lkp(&m.expand(), 2)?;
        let scan = toeplitz_minor_scan(out.coeffs(), 4, 12)?;
        println!(
            "member {i} (degree {}): {} minors, smallest {}",
            m.degree(),
            scan.distinct_minors,
            to_canonical(&scan.min_value)
        );
    }
    let gap = Polynomial::from_ints(&[1, 0, 1]);
    let scan = toeplitz_minor_scan(gap.coeffs(), 2, 4)?;
    if let Some(neg) = &scan.first_negative {
        println!(
            "1 + x^2: order-{} minor at ({}, {}) equals {}",
            neg.order,
            neg.row,
            neg.col,
            to_canonical(&neg.value)
        );
    }
    Ok(())
}
