//! Colors one point of each pair red so that an open halfplane holds as
//! many reds as possible and no blue.
//!
//! cargo run --example max_coloring

use bichrome::geom::Point;
use bichrome::maxcol::{decide, dualize, solve_maxcol, DualSide, PairInstance};

fn main() -> bichrome::Result<()> {
    let pairs = vec![
        (Point::new(6, 3), Point::new(8, 2)),
        (Point::new(2, 2), Point::new(8, 9)),
        (Point::new(4, 7), Point::new(9, 9)),
        (Point::new(5, 4), Point::new(6, 0)),
    ];
    let inst = PairInstance::new(pairs)?;

    let dual = dualize(&inst);
    for side in [DualSide::Below, DualSide::Above] {
        let feasible: Vec<usize> = (0..dual.lines.len())
            .filter(|&k| decide(&dual, k, side).map(|w| w.is_some()).unwrap_or(false))
            .collect();
        println!("{side:?}: feasible levels {feasible:?}");
    }

    let cert = solve_maxcol(&inst)?;
    cert.validate(&inst)?;
    println!("eta = {}", cert.eta);
    println!("open halfplane {:?} of {}", cert.halfplane.side, cert.halfplane.line);
    for ((a, b), (ca, cb)) in inst.pairs().iter().zip(&cert.coloring) {
        println!("  {a:?} {ca:?}   {b:?} {cb:?}");
    }
    Ok(())
}
