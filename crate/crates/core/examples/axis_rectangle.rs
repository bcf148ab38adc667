//! Largest axis-parallel rectangle holding red points and no blue point.
//!
//! cargo run --example axis_rectangle

use bichrome::geom::Point;
use bichrome::mrr_axis::{enumerate_axis_candidates, solve_axis_mrr, AxisInstance};
use bichrome::range_count::NaiveCounter;

fn main() -> bichrome::Result<()> {
    let red = vec![Point::new(1, 1), Point::new(2, 5), Point::new(4, 2), Point::new(6, 6), Point::new(8, 1)];
    let blue = vec![Point::new(3, 3), Point::new(7, 4), Point::new(5, 0)];
    let inst = AxisInstance::new(red, blue)?;

    let cands = enumerate_axis_candidates(inst.blue(), &inst.clip())?;
    println!("{} maximal blue-empty rectangles inside {:?}", cands.len(), inst.clip());

    let best = solve_axis_mrr(&inst, &NaiveCounter::new(inst.red()))?;
    let (x0, x1) = best.rect.u_bounds();
    let (y0, y1) = best.rect.v_bounds();
    println!("best: [{x0}, {x1}] x [{y0}, {y1}] holds {} red points", best.size);
    Ok(())
}
