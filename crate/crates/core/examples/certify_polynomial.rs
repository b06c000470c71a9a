//! Certifies root locations exactly: a real-negative-rooted quadratic, a
//! polynomial with a complex pair, one with a positive root, and a
//! nonnegativity check with a witness.

use stabop::rational::to_canonical;
use stabop::rootcert::{approximate_real_roots, certify_all_real_negative, certify_nonnegative};
use stabop::{Polynomial, Rational};

fn main() -> stabop::Result<()> {
    let cases = [
        ("1 + 3x + x^2", Polynomial::from_ints(&[1, 3, 1])),
        (
            "12 + 84x + 36x^2 + 108x^3",
            Polynomial::from_ints(&[12, 84, 36, 108]),
        ),
        ("(x - 1)(x + 2)^2", Polynomial::from_ints(&[-4, 0, 3, 1])),
    ];
    for (name, p) in &cases {
        let cert = certify_all_real_negative(p)?;
        println!(
            "{name}: {:?}, {} real / {} non-real",
            cert.verdict, cert.real_root_count, cert.nonreal_count
        );
        for iv in &cert.isolating_intervals {
            println!(
                "  root in [{}, {}] x{}",
                to_canonical(&iv.lo),
                to_canonical(&iv.hi),
                iv.multiplicity
            );
        }
    }

    let width = Rational::new(1.into(), 1_000_000.into());
    for iv in approximate_real_roots(&Polynomial::from_ints(&[1, 3, 1]), &width)? {
        println!("1 + 3x + x^2 root near {}", to_canonical(&iv.lo));
    }

    for p in [
        Polynomial::from_ints(&[1, -2, 1]),
        Polynomial::from_ints(&[1, -3, 1]),
    ] {
        let cert = certify_nonnegative(&p)?;
        let witness = cert
            .witness
            .as_ref()
            .map(to_canonical)
            .unwrap_or_else(|| "-".into());
        println!(
            "{p} >= 0 everywhere? {:?} (witness {witness})",
            cert.verdict
        );
    }
    Ok(())
}
