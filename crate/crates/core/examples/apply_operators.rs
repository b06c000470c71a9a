//! Applies `L^p`, `S_r` and `T_mu` to `(1+x)^5` and shows the degree
//! hypothesis at work: truncating the `L^2` image breaks real-rootedness.

use num_traits::{Signed, Zero};
use stabop::identities::lkp_sr_decomposition;
use stabop::operators::{apply_lkp, apply_sr, apply_tmu, lkp_coefficients, MuSequence};
use stabop::rational::to_canonical;
use stabop::rootcert::certify_all_real_negative;
use stabop::{Polynomial, Rational};

fn main() -> stabop::Result<()> {
    let psi = Polynomial::from_ints(&[1, 1]).pow(5);
    println!("psi = {psi}");
    for p in 1..=4 {
        let row: Vec<String> = lkp_coefficients(p)?.iter().map(to_canonical).collect();
        let out = apply_lkp(&psi, p)?;
        println!(
            "L^{p} [{}]: {out}  ({:?})",
            row.join(", "),
            certify_all_real_negative(&out)?.verdict
        );
    }

    let l2 = apply_lkp(&psi, 2)?;
    let cut = l2.truncate(4);
    let cert = certify_all_real_negative(&cut)?;
    println!(
        "truncated: {cut}  ({:?}, {} non-real)",
        cert.verdict, cert.nonreal_count
    );

    for r in 1..=3 {
        println!("S_{r}: {}", apply_sr(&psi, r)?);
    }
    let mut sum = String::new();
    for (j, w) in lkp_sr_decomposition(3)? {
        let sign = if w < Rational::zero() {
            " - "
        } else if sum.is_empty() {
            ""
        } else {
            " + "
        };
        sum += &format!("{sign}{} S_{j}", to_canonical(&w.abs()));
    }
    println!("L^3 = {sum}");

    // T_mu with mu(L^1) = (1, 0, -1) squares the variable: T_mu(psi)(z) = L^1(psi)(z^2).
    let mu = MuSequence::for_lkp(1)?;
    println!("T_mu(L^1): {}", apply_tmu(&psi, &mu)?);
    Ok(())
}
