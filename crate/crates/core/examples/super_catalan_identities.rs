//! Super Catalan numbers, the Szily sum, and the symmetric-function identity
//! behind the `gamma` transform.

use stabop::identities::{catalan, super_catalan, symmetric_identity_sides, szily_check};
use stabop::operators::{gamma_transform, MuSequence};
use stabop::rational::{frac, to_canonical};

fn main() -> stabop::Result<()> {
    for p in 0..=4 {
        let row = (0..=6)
            .map(|k| super_catalan(p, k).map(|s| to_canonical(&s)))
            .collect::<stabop::Result<Vec<_>>>()?;
        println!("S({p}, k) = {}", row.join(" "));
    }
    let cat: Vec<String> = (0..=6).map(|k| to_canonical(&catalan(k))).collect();
    println!("Catalan   = {}", cat.join(" "));

    let all = (0..=10).all(|a| (0..=a).all(|b| szily_check(a, b).map(|r| r.pass).unwrap_or(false)));
    println!("Szily sum matches the closed form for b <= a <= 10: {all}");

    let mu = MuSequence::for_lkp(2)?;
    let gammas: Vec<String> = (0..=8)
        .map(|k| to_canonical(&gamma_transform(&mu, k)))
        .collect();
    println!("gamma transform of mu(L^2): {}", gammas.join(" "));

    let points = [frac(1, 2), frac(-3, 1), frac(2, 7), frac(5, 3)];
    let (lhs, rhs) = symmetric_identity_sides(&mu, &points)?;
    println!(
        "symmetric identity at (1/2, -3, 2/7, 5/3): {} = {}",
        to_canonical(&lhs),
        to_canonical(&rhs)
    );
    Ok(())
}
