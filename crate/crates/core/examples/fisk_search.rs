//! Runs `S_r` over the seeded corpus and the structured families and
//! reports any input whose image stops being real-negative-rooted.

use stabop::operators::OperatorSpec;
use stabop::search::{counterexample_search, Budget, SearchConfig, Strategy};

fn main() -> stabop::Result<()> {
    let seed = 2024;
    let config = SearchConfig::default();
    for r in 1..=6 {
        let spec = OperatorSpec::Sr { r };
        for strategy in [Strategy::Random, Strategy::Structured] {
            let started = std::time::Instant::now();
            let out = counterexample_search(&spec, seed, Budget::Count(500), strategy, &config)?;
            println!(
                "S_{r} {strategy:?}: {} tried, {} skipped, {} records ({:.2?})",
                out.inputs_tried,
                out.inputs_skipped,
                out.records.len(),
                started.elapsed()
            );
            if let Some(rec) = out.records.first() {
                println!(
                    "  first: {} -> {:?}, nonreal {}",
                    rec.source, rec.certificate.verdict, rec.certificate.nonreal_count
                );
                println!("  input {}", rec.input);
            }
        }
    }
    Ok(())
}
