//! Largest red rectangle of any orientation, compared with the best
//! axis-parallel one on the same points.
//!
//! cargo run --example rotating_rectangle

use bichrome::geom::Point;
use bichrome::mrr_axis::{solve_axis_mrr, AxisInstance};
use bichrome::mrr_rotating::{solve_mrr, RotatingInstance};
use bichrome::range_count::{build_counter, CounterKind};

fn main() -> bichrome::Result<()> {
    let red = vec![Point::new(10, 1), Point::new(13, 11), Point::new(2, 1), Point::new(7, 9), Point::new(14, 13)];
    let blue = vec![Point::new(9, 5), Point::new(11, 2), Point::new(1, 6), Point::new(13, 8)];

    let inst = RotatingInstance::new(red.clone(), blue.clone())?;
    let counter = build_counter(CounterKind::Accel, inst.red());
    let best = solve_mrr(&inst, counter.as_ref())?;
    println!("any orientation: {} reds", best.size);
    println!("  frame direction {}", best.rect.dir());
    println!("  u in [{}, {}]", best.rect.u_bounds().0, best.rect.u_bounds().1);
    println!("  v in [{}, {}]", best.rect.v_bounds().0, best.rect.v_bounds().1);
    if let Some(s) = best.support {
        println!("  bottom side through {} and {}", s.from, s.to);
    }
    println!(
        "  {} events, {} anchored, {} candidates",
        best.stats.events_processed, best.stats.anchor_events, best.stats.candidates_enumerated
    );

    let axis = AxisInstance::new(red, blue)?;
    let a = solve_axis_mrr(&axis, counter.as_ref())?;
    println!("axis-parallel only: {} reds", a.size);
    Ok(())
}
