//! Writes `mrr.svg` and `maxcol.svg` for generated instances.
//!
//! cargo run --example svg_figure [out-dir]

use std::path::PathBuf;

use bichrome::harness::{gen_instance, render_svg, solve, GenParams, Problem};
use bichrome::range_count::CounterKind;

fn main() -> bichrome::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    for (problem, name, n, m) in [(Problem::Mrr, "mrr.svg", 12, 8), (Problem::MaxCol, "maxcol.svg", 6, 0)] {
        let inst = gen_instance(GenParams::new(problem, 5, n, m, 100))?;
        let sol = solve(problem, &inst, CounterKind::Naive)?;
        let path = dir.join(name);
        std::fs::write(&path, render_svg(&inst, Some(&sol)))?;
        println!("{}: objective {}", path.display(), sol.objective);
    }
    Ok(())
}
