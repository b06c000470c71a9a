//! Approximates `L^1[e^z]` through the scaled Jensen polynomials
//! `g_n(z/n) = (1 + z/n)^n` and prints how fast the first coefficients settle.

use stabop::lpclass::jensen_convergence;
use stabop::rational::to_canonical;
use stabop::TaylorData;

fn main() -> stabop::Result<()> {
    let n_values = [8, 16, 32, 64, 128, 256];
    let started = std::time::Instant::now();
    let run = jensen_convergence(&TaylorData::exponential(257), 1, &n_values, 5)?;

    println!("limits b_k = 1/(k!^2 (k+1)):");
    for (k, b) in run.limits.iter().enumerate() {
        println!("  b_{k} = {}", to_canonical(b));
    }
    for row in &run.rows {
        let errs: Vec<String> = row
            .distances
            .iter()
            .map(|d| format!("{:.3e}", approx(d)))
            .collect();
        println!(
            "n = {:>3}  {:?} via {:?}  |b_k(n) - b_k| = [{}]",
            row.n,
            row.verdict,
            row.evidence,
            errs.join(", ")
        );
    }
    println!("report: {}", serde_json::to_string(&run.to_report())?);
    println!("elapsed {:.2?}", started.elapsed());
    Ok(())
}

fn approx(r: &stabop::Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
