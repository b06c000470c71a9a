//! `Q_n^p` as a terminating hypergeometric polynomial, and its zeros
//! obtained from Jacobi polynomial roots mapped into `z < 0`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use stabop::identities::{
    jacobi_polynomial, jacobi_root_to_z, jacobi_samples, q_polynomial, verify_jacobi_relation,
};
use stabop::rational::frac;
use stabop::rootcert::{approximate_real_roots, certify_all_real_negative};
use stabop::Rational;

fn main() -> stabop::Result<()> {
    let width = Rational::new(BigInt::one(), BigInt::one() << 40);
    for (n, p) in [(6, 1), (7, 2), (12, 5)] {
        let q = q_polynomial(n, p)?;
        let cert = certify_all_real_negative(&q)?;
        println!("Q_{n}^{p} = {q}  ({:?})", cert.verdict);

        let beta = if n % 2 == 0 { frac(-1, 2) } else { frac(1, 2) };
        let jac = jacobi_polynomial(n / 2, &Rational::from_integer(p.into()), &beta);
        let zs: Vec<String> = approximate_real_roots(&jac, &width)?
            .iter()
            .map(|iv| {
                format!(
                    "{:.9}",
                    jacobi_root_to_z(&iv.lo).to_f64().unwrap_or(f64::NAN)
                )
            })
            .collect();
        println!("  zeros via Jacobi roots: {}", zs.join(", "));
        let report = verify_jacobi_relation(n, p, &jacobi_samples(n))?;
        println!(
            "  relation at {} samples: {}",
            jacobi_samples(n).len(),
            if report.pass { "holds" } else { "FAILS" }
        );
    }
    Ok(())
}
