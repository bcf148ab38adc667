//! Counts points in oriented rectangles with both backends and times them.
//!
//! cargo run --release --example range_counting

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bichrome::geom::{Direction, Point};
use bichrome::range_count::{AcceleratedCounter, Bound, NaiveCounter, OrientedRect, RangeCounter};

fn main() -> bichrome::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let pts: Vec<Point> = (0..20_000)
        .map(|_| Point::new(rng.gen_range(0..100_000), rng.gen_range(0..100_000)))
        .collect();
    let dir = Direction::new(3, 4)?;
    let rects: Vec<OrientedRect> = (0..2_000)
        .map(|_| {
            let u = rng.gen_range(0..500_000i128);
            let v = rng.gen_range(-300_000..300_000i128);
            OrientedRect::new(dir, Bound::int(u), Bound::int(u + 40_000), Bound::int(v), Bound::PosInf)
        })
        .collect::<Result<_, _>>()?;

    let naive = NaiveCounter::new(&pts);
    let t = Instant::now();
    let a: usize = rects.iter().map(|r| naive.count_closed(r)).sum();
    println!("naive:       {a} hits in {:?}", t.elapsed());

    let t = Instant::now();
    let accel = AcceleratedCounter::build(&pts);
    let b: usize = rects.iter().map(|r| accel.count_closed(r)).sum();
    println!("accelerated: {b} hits in {:?} (including indexing)", t.elapsed());
    assert_eq!(a, b);
    Ok(())
}
