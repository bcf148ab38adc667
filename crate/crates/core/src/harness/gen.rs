//! Seeded random instances.
//!
//! Points are drawn uniformly from `[0, coord_max]²` one at a time; a point
//! that breaks the validation rules of the target problem is discarded and
//! redrawn. The stream depends only on the seed, so output is reproducible
//! byte for byte.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{check_no_three_collinear, Point, COORD_LIMIT};
use crate::mrr_axis::AxisInstance;
use crate::mrr_rotating::RotatingInstance;

use super::io::{InstanceFile, MaxColInstanceFile, MrrInstanceFile, Problem};

/// Redraws allowed per point before giving up.
const MAX_REDRAWS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub problem: Problem,
    pub seed: u64,
    /// Red points, or pairs for MaxCol.
    pub n: usize,
    /// Blue points; ignored for MaxCol.
    pub m: usize,
    pub coord_max: i64,
}

impl GenParams {
    pub fn new(problem: Problem, seed: u64, n: usize, m: usize, coord_max: i64) -> Self {
        GenParams {
            problem,
            seed,
            n,
            m,
            coord_max,
        }
    }
}

fn valid(problem: Problem, red: &[Point], blue: &[Point]) -> bool {
    match problem {
        Problem::Mrr => RotatingInstance::new(red.to_vec(), blue.to_vec()).is_ok(),
        Problem::MrrAxis => AxisInstance::new(red.to_vec(), blue.to_vec()).is_ok(),
        Problem::MaxCol => unreachable!("pairs are drawn separately"),
    }
}

pub fn gen_instance(params: GenParams) -> Result<InstanceFile> {
    if params.coord_max < 1 || params.coord_max > COORD_LIMIT {
        return Err(Error::Parse(format!(
            "coord-max must be in 1..={COORD_LIMIT}, got {}",
            params.coord_max
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let draw = |rng: &mut ChaCha8Rng| Point::new(rng.gen_range(0..=params.coord_max), rng.gen_range(0..=params.coord_max));
    let exhausted = || {
        Error::Generation(format!(
            "no valid placement found after {MAX_REDRAWS} draws; raise coord-max"
        ))
    };

    match params.problem {
        Problem::MaxCol => {
            let mut pts: Vec<Point> = Vec::with_capacity(2 * params.n);
            for _ in 0..2 * params.n {
                let ok = (0..MAX_REDRAWS).any(|_| {
                    pts.push(draw(&mut rng));
                    let ok = check_no_three_collinear(&pts).is_ok();
                    if !ok {
                        pts.pop();
                    }
                    ok
                });
                if !ok {
                    return Err(exhausted());
                }
            }
            Ok(InstanceFile::MaxCol(MaxColInstanceFile {
                pairs: pts.chunks(2).map(|c| [c[0], c[1]]).collect(),
            }))
        }
        problem => {
            let (mut red, mut blue) = (Vec::with_capacity(params.n), Vec::with_capacity(params.m));
            for is_blue in std::iter::repeat_n(false, params.n).chain(std::iter::repeat_n(true, params.m)) {
                let ok = (0..MAX_REDRAWS).any(|_| {
                    let p = draw(&mut rng);
                    let list = if is_blue { &mut blue } else { &mut red };
                    list.push(p);
                    let ok = valid(problem, &red, &blue);
                    if !ok {
                        let list = if is_blue { &mut blue } else { &mut red };
                        list.pop();
                    }
                    ok
                });
                if !ok {
                    return Err(exhausted());
                }
            }
            Ok(InstanceFile::Mrr(MrrInstanceFile { red, blue }))
        }
    }
}
