//! Walks every level of a small line arrangement.
//!
//! cargo run --example k_level

use bichrome::geom::{Line, Rational};
use bichrome::maxcol::k_level;

fn main() -> bichrome::Result<()> {
    let q = |n: i128| Rational::from_int(n);
    let lines = vec![
        Line::from_slope_intercept(q(0), q(0)),
        Line::from_slope_intercept(q(1), q(-1)),
        Line::from_slope_intercept(q(-1), q(3)),
        Line::from_slope_intercept(Rational::new(1, 2), q(2)),
    ];
    for k in 0..lines.len() {
        let level = k_level(&lines, k)?;
        print!("level {k}: starts on line {}", level.first);
        for v in &level.vertices {
            print!(" -> ({}, {}) line {}", v.x, v.y, v.outgoing);
        }
        println!();
    }
    Ok(())
}
