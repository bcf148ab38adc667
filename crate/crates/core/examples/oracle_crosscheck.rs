//! Runs each solver against its brute-force oracle on seeded instances.
//!
//! cargo run --release --example oracle_crosscheck [count]

use bichrome::harness::{verify, GenParams, Problem};
use bichrome::range_count::CounterKind;

fn main() -> bichrome::Result<()> {
    let count = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    for (problem, n, m) in [(Problem::Mrr, 10, 10), (Problem::MrrAxis, 30, 30), (Problem::MaxCol, 8, 0)] {
        let report = verify(GenParams::new(problem, 42, n, m, 1000), count, CounterKind::Accel)?;
        println!("{:>9}: {} cases, {} mismatches", problem.name(), report.count, report.mismatches);
        for c in report.cases.iter().filter(|c| !c.ok) {
            println!("  seed {}: solver {} oracle {}", c.seed, c.solver, c.oracle);
        }
    }
    Ok(())
}
