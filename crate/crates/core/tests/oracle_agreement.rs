use std::collections::BTreeSet;

use bichrome::geom::{frame_coords, Direction, Point};
use bichrome::harness::{gen_instance, GenParams, MrrInstanceFile, Problem};
use bichrome::maxcol::{decide, dualize, solve_maxcol, DualSide};
use bichrome::mrr_axis::{enumerate_axis_candidates, solve_axis_mrr, AxisInstance};
use bichrome::mrr_rotating::{solve_mrr, EventKind, RotatingInstance, RotatingSweep, StepOutcome};
use bichrome::oracles::{
    oracle_anchored_candidates, oracle_axis_candidates, oracle_axis_mrr, oracle_decide, oracle_maxcol, oracle_mrr,
};
use bichrome::range_count::{Bound, NaiveCounter};

fn mrr(seed: u64, n: usize, m: usize, coord_max: i64) -> MrrInstanceFile {
    gen_instance(GenParams::new(Problem::Mrr, seed, n, m, coord_max))
        .unwrap()
        .as_mrr()
        .unwrap()
        .clone()
}

type Key = (Direction, Bound, Bound, Bound, Bound);

fn key(r: &bichrome::range_count::OrientedRect) -> Key {
    let (a, b, c, d) = r.bound_tuple();
    (r.dir(), a, b, c, d)
}

#[test]
fn rotating_matches_oracle_on_small_grids() {
    for seed in 0..150 {
        let (n, m) = (1 + seed as usize % 7, 1 + (seed as usize / 7) % 7);
        let f = mrr(seed, n, m, 40);
        let inst = RotatingInstance::new(f.red.clone(), f.blue.clone()).unwrap();
        let got = solve_mrr(&inst, &NaiveCounter::new(inst.red())).unwrap().size;
        assert_eq!(got, oracle_mrr(&f.red, &f.blue).unwrap(), "seed {seed}: {f:?}");
    }
}

#[test]
fn rotating_is_at_least_axis() {
    for seed in 0..60 {
        let f = mrr(seed, 8, 8, 1000);
        let rot = RotatingInstance::new(f.red.clone(), f.blue.clone()).unwrap();
        let axis = AxisInstance::new(f.red.clone(), f.blue.clone()).unwrap();
        let r = solve_mrr(&rot, &NaiveCounter::new(&f.red)).unwrap().size;
        let a = solve_axis_mrr(&axis, &NaiveCounter::new(&f.red)).unwrap().size;
        assert!(r >= a, "seed {seed}");
    }
}

/// The axis solver run in a turned frame: integer frame coordinates are a
/// scaled rotation, so rectangles map to rectangles.
#[test]
fn rotating_is_at_least_axis_in_any_frame() {
    let frames = [(3, 1), (2, 5), (-4, 7), (9, -2)];
    for seed in 0..40 {
        let f = mrr(seed, 6, 6, 200);
        let rot = RotatingInstance::new(f.red.clone(), f.blue.clone()).unwrap();
        let best = solve_mrr(&rot, &NaiveCounter::new(&f.red)).unwrap().size;
        for (dx, dy) in frames {
            let d = Direction::new(dx, dy).unwrap();
            let turn = |p: &Point| {
                let (u, v) = frame_coords(*p, d);
                Point::new(u as i64, v as i64)
            };
            let red: Vec<Point> = f.red.iter().map(turn).collect();
            let blue: Vec<Point> = f.blue.iter().map(turn).collect();
            let Ok(axis) = AxisInstance::new(red.clone(), blue) else {
                continue;
            };
            let a = solve_axis_mrr(&axis, &NaiveCounter::new(&red)).unwrap().size;
            assert!(best >= a, "seed {seed} frame {d}");
        }
    }
}

#[test]
fn axis_matches_oracle() {
    for seed in 0..100 {
        let f = gen_instance(GenParams::new(Problem::MrrAxis, seed, 1 + seed as usize % 25, seed as usize % 20, 60))
            .unwrap()
            .as_mrr()
            .unwrap()
            .clone();
        let inst = AxisInstance::new(f.red.clone(), f.blue.clone()).unwrap();
        let got = solve_axis_mrr(&inst, &NaiveCounter::new(&f.red)).unwrap().size;
        assert_eq!(got, oracle_axis_mrr(&f.red, &f.blue).unwrap(), "seed {seed}");
    }
}

#[test]
fn axis_candidate_sets_match() {
    for seed in 0..80 {
        let f = gen_instance(GenParams::new(Problem::MrrAxis, seed, 3, seed as usize % 14, 100))
            .unwrap()
            .as_mrr()
            .unwrap()
            .clone();
        let inst = AxisInstance::new(f.red.clone(), f.blue.clone()).unwrap();
        let got = enumerate_axis_candidates(inst.blue(), &inst.clip()).unwrap();
        let mut want: Vec<Key> = oracle_axis_candidates(inst.blue(), &inst.clip()).unwrap().iter().map(key).collect();
        let mut have: Vec<Key> = got.iter().map(key).collect();
        have.sort();
        want.sort();
        assert_eq!(have, want, "seed {seed}");
    }
}

#[test]
fn anchored_candidate_sets_match() {
    for seed in 0..60 {
        let f = mrr(seed, 4, 1 + seed as usize % 10, 300);
        let inst = RotatingInstance::new(f.red.clone(), f.blue.clone()).unwrap();
        for step in RotatingSweep::new(&inst) {
            let (event, outcome) = step.unwrap();
            let (EventKind::Anchor { from, to }, StepOutcome::Anchored(cands)) = (event.kind, outcome) else {
                continue;
            };
            let (s, t) = (from.point(&f.red, &f.blue), to.point(&f.red, &f.blue));
            let mut have: Vec<Key> = cands.iter().map(|c| key(&c.rect)).collect();
            let mut want: Vec<Key> = oracle_anchored_candidates(&f.blue, s, t).unwrap().iter().map(key).collect();
            have.sort();
            want.sort();
            assert_eq!(have.len(), have.iter().collect::<BTreeSet<_>>().len(), "duplicates");
            assert_eq!(have, want, "seed {seed} anchor {from} -> {to}");
        }
    }
}

#[test]
fn maxcol_matches_oracle() {
    for seed in 0..150 {
        let n = 1 + seed as usize % 8;
        let f = gen_instance(GenParams::new(Problem::MaxCol, seed, n, 0, 50)).unwrap();
        let inst = f.as_maxcol().unwrap().to_instance().unwrap();
        let cert = solve_maxcol(&inst).unwrap();
        cert.validate(&inst).unwrap();
        assert_eq!(cert.eta, oracle_maxcol(inst.pairs()).unwrap(), "seed {seed}");
    }
}

#[test]
fn decide_matches_arrangement_oracle() {
    for seed in 0..60 {
        let n = 1 + seed as usize % 7;
        let f = gen_instance(GenParams::new(Problem::MaxCol, seed, n, 0, 80)).unwrap();
        let d = dualize(&f.as_maxcol().unwrap().to_instance().unwrap());
        for k in 0..d.lines.len() {
            for (side, below) in [(DualSide::Below, true), (DualSide::Above, false)] {
                let got = decide(&d, k, side).unwrap();
                assert_eq!(got.is_some(), oracle_decide(&d.lines, k, below).unwrap(), "seed {seed} k {k} {side:?}");
                if let Some((u, v)) = got {
                    let on_side = d
                        .lines
                        .iter()
                        .filter(|l| if below { l.value_at(u) < v } else { l.value_at(u) > v })
                        .count();
                    assert_eq!(on_side, k);
                }
            }
        }
    }
}
