//! Steps through the rotational sweep and prints what each event does to
//! the blue orders.
//!
//! cargo run --example kinetic_sweep

use bichrome::geom::Point;
use bichrome::mrr_rotating::{EventKind, RotatingInstance, RotatingSweep, StepOutcome};

fn main() -> bichrome::Result<()> {
    let red = vec![Point::new(5, 2)];
    let blue = vec![Point::new(0, 0), Point::new(4, 7), Point::new(9, 3)];
    let inst = RotatingInstance::new(red, blue)?;
    println!("{} events", inst.events().len());

    let mut sweep = RotatingSweep::new(&inst);
    while let Some(step) = sweep.step() {
        let (event, outcome) = step?;
        let what = match (event.kind, outcome) {
            (EventKind::Bootstrap, _) => "initial sort".to_string(),
            (_, StepOutcome::Swapped(axis, a, b)) => format!("swap b{a} <-> b{b} in {}-order", axis.name()),
            (EventKind::Anchor { from, to }, StepOutcome::Anchored(c)) => {
                format!("anchor {from} -> {to}: {} candidates", c.len())
            }
            _ => unreachable!(),
        };
        println!(
            "{:>10}  bx={:?} by={:?}  {what}",
            event.dir.to_string(),
            sweep.order().bx(),
            sweep.order().by()
        );
    }
    Ok(())
}
