//! Brute-force reference implementations.
//!
//! Nothing here calls into the solver modules; only the primitives of
//! [`crate::geom`] and the plain data types of the other modules are used.
//! Each oracle enumerates a finite space known to contain an optimum and
//! checks every element directly. The only pruning is "a taller empty
//! rectangle is never worse", which keeps the rectangle oracles usable at
//! test sizes.

use crate::error::{Error, Result};
use crate::geom::{frame_coords, Direction, Line, Point, Rational};
use crate::mrr_axis::ClipBox;
use crate::range_count::{Bound, OrientedRect};

/// Largest red or blue set accepted by [`oracle_mrr`].
pub const MRR_LIMIT: usize = 24;
/// Largest red or blue set accepted by [`oracle_axis_mrr`].
pub const AXIS_LIMIT: usize = 64;
/// Largest blue set accepted by the candidate-set oracles.
pub const CANDIDATE_LIMIT: usize = 24;
/// Largest pair count accepted by [`oracle_maxcol`].
pub const MAXCOL_LIMIT: usize = 32;
/// Largest arrangement accepted by [`oracle_decide`].
pub const LINES_LIMIT: usize = 64;

fn limit(what: &str, len: usize, max: usize) -> Result<()> {
    if len > max {
        return Err(Error::LimitExceeded(format!("{len} {what}, at most {max} supported")));
    }
    Ok(())
}

// An extended integer: None below everything on the low side, above on
// the high side. Kept local so the oracles do not lean on `Bound`.
fn lt_lo(lo: Option<i128>, x: i128) -> bool {
    lo.is_none_or(|l| l < x)
}

fn lt_hi(x: i128, hi: Option<i128>) -> bool {
    hi.is_none_or(|h| x < h)
}

fn le_lo(lo: Option<i128>, x: i128) -> bool {
    lo.is_none_or(|l| l <= x)
}

fn le_hi(x: i128, hi: Option<i128>) -> bool {
    hi.is_none_or(|h| x <= h)
}

/// Maximum number of red points in a closed rectangle of any orientation
/// whose open interior holds no blue point.
///
/// Some optimal rectangle has one side through a blue point and a second
/// point, every other side through a blue point or at infinity. For every
/// ordered such pair `(s, t)` the frame is turned so `s → t` points along
/// +u and rectangles above the line through them are tried, with left and
/// right sides at blue u-values or infinite and the top as high as the
/// blue points allow.
pub fn oracle_mrr(red: &[Point], blue: &[Point]) -> Result<usize> {
    limit("red points", red.len(), MRR_LIMIT)?;
    limit("blue points", blue.len(), MRR_LIMIT)?;
    if blue.is_empty() {
        return Ok(red.len());
    }
    let mut best = 0;
    let sites: Vec<(Point, bool)> = red
        .iter()
        .map(|&p| (p, false))
        .chain(blue.iter().map(|&p| (p, true)))
        .collect();
    for &(s, s_blue) in &sites {
        for &(t, t_blue) in &sites {
            if s == t || !(s_blue || t_blue) {
                continue;
            }
            let dir = Direction::between(s, t)?;
            let (us, vs) = frame_coords(s, dir);
            let (ut, _) = frame_coords(t, dir);
            let bf: Vec<(i128, i128)> = blue.iter().map(|&b| frame_coords(b, dir)).collect();
            let rf: Vec<(i128, i128)> = red.iter().map(|&r| frame_coords(r, dir)).collect();

            let lefts = std::iter::once(None).chain(bf.iter().filter(|b| b.0 <= us).map(|b| Some(b.0)));
            for l in lefts {
                let rights =
                    std::iter::once(None).chain(bf.iter().filter(|b| b.0 >= ut).map(|b| Some(b.0)));
                for r in rights {
                    // highest admissible top
                    let top = bf
                        .iter()
                        .filter(|b| lt_lo(l, b.0) && lt_hi(b.0, r) && b.1 > vs)
                        .map(|b| b.1)
                        .min();
                    let count = rf
                        .iter()
                        .filter(|p| le_lo(l, p.0) && le_hi(p.0, r) && p.1 >= vs && le_hi(p.1, top))
                        .count();
                    best = best.max(count);
                }
            }
        }
    }
    Ok(best)
}

/// Maximum number of red points in a closed axis-parallel rectangle whose
/// open interior holds no blue point.
pub fn oracle_axis_mrr(red: &[Point], blue: &[Point]) -> Result<usize> {
    limit("red points", red.len(), AXIS_LIMIT)?;
    limit("blue points", blue.len(), AXIS_LIMIT)?;
    let xs: Vec<i128> = blue.iter().map(|p| p.x as i128).collect();
    let ys: Vec<i128> = blue.iter().map(|p| p.y as i128).collect();
    let opts = |v: &[i128]| std::iter::once(None).chain(v.iter().map(|&x| Some(x))).collect::<Vec<_>>();
    let (xo, yo) = (opts(&xs), opts(&ys));
    let mut best = 0;
    for &l in &xo {
        for &r in &xo {
            if let (Some(l), Some(r)) = (l, r) {
                if l >= r {
                    continue;
                }
            }
            for &b in &yo {
                let top = blue
                    .iter()
                    .filter(|p| lt_lo(l, p.x as i128) && lt_hi(p.x as i128, r) && lt_lo(b, p.y as i128))
                    .map(|p| p.y as i128)
                    .min();
                let count = red
                    .iter()
                    .filter(|p| {
                        let (x, y) = (p.x as i128, p.y as i128);
                        le_lo(l, x) && le_hi(x, r) && le_lo(b, y) && le_hi(y, top)
                    })
                    .count();
                best = best.max(count);
            }
        }
    }
    Ok(best)
}

/// Every maximal axis-parallel rectangle inside `clip` whose open interior
/// holds no blue point. Blue x- and y-coordinates must be distinct.
pub fn oracle_axis_candidates(blue: &[Point], clip: &ClipBox) -> Result<Vec<OrientedRect>> {
    limit("blue points", blue.len(), CANDIDATE_LIMIT)?;
    let mut xs: Vec<i64> = blue.iter().map(|p| p.x).collect();
    xs.extend([clip.x_lo, clip.x_hi]);
    let mut ys: Vec<i64> = blue.iter().map(|p| p.y).collect();
    ys.extend([clip.y_lo, clip.y_hi]);

    let mut out = Vec::new();
    for &l in &xs {
        for &r in xs.iter().filter(|&&r| r > l) {
            for &b in &ys {
                for &t in ys.iter().filter(|&&t| t > b) {
                    let inside = |p: &&Point| l < p.x && p.x < r && b < p.y && p.y < t;
                    if blue.iter().any(|p| inside(&p)) {
                        continue;
                    }
                    let stopped_x = |x: i64| blue.iter().any(|p| p.x == x && b < p.y && p.y < t);
                    let stopped_y = |y: i64| blue.iter().any(|p| p.y == y && l < p.x && p.x < r);
                    let maximal = (l == clip.x_lo || stopped_x(l))
                        && (r == clip.x_hi || stopped_x(r))
                        && (b == clip.y_lo || stopped_y(b))
                        && (t == clip.y_hi || stopped_y(t));
                    if maximal {
                        out.push(OrientedRect::new(
                            Direction::EAST,
                            Bound::int(l as i128),
                            Bound::int(r as i128),
                            Bound::int(b as i128),
                            Bound::int(t as i128),
                        )?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Every maximal rectangle whose bottom side lies on the line through
/// `from` and `to` and contains both, lying on the left of `from → to`,
/// with no blue point in its open interior. Sides may be unbounded.
pub fn oracle_anchored_candidates(blue: &[Point], from: Point, to: Point) -> Result<Vec<OrientedRect>> {
    limit("blue points", blue.len(), CANDIDATE_LIMIT)?;
    let dir = Direction::between(from, to)?;
    let (us, vs) = frame_coords(from, dir);
    let (ut, _) = frame_coords(to, dir);
    let bf: Vec<(i128, i128)> = blue.iter().map(|&b| frame_coords(b, dir)).collect();

    let lefts: Vec<Option<i128>> = std::iter::once(None)
        .chain(bf.iter().filter(|b| b.0 <= us).map(|b| Some(b.0)))
        .collect();
    let rights: Vec<Option<i128>> = std::iter::once(None)
        .chain(bf.iter().filter(|b| b.0 >= ut).map(|b| Some(b.0)))
        .collect();
    let tops: Vec<Option<i128>> = std::iter::once(None)
        .chain(bf.iter().filter(|b| b.1 > vs).map(|b| Some(b.1)))
        .collect();

    let mut out = Vec::new();
    for &l in &lefts {
        for &r in &rights {
            for &t in &tops {
                let open = |b: &&(i128, i128)| lt_lo(l, b.0) && lt_hi(b.0, r) && vs < b.1 && lt_hi(b.1, t);
                if bf.iter().any(|b| open(&b)) {
                    continue;
                }
                let side_stopped = |x: Option<i128>| {
                    x.is_none_or(|x| bf.iter().any(|b| b.0 == x && vs < b.1 && lt_hi(b.1, t)))
                };
                let top_stopped =
                    t.is_none_or(|t| bf.iter().any(|b| b.1 == t && lt_lo(l, b.0) && lt_hi(b.0, r)));
                if side_stopped(l) && side_stopped(r) && top_stopped {
                    let fin = |x: Option<i128>, inf: Bound| x.map_or(inf, Bound::int);
                    out.push(OrientedRect::new(
                        dir,
                        fin(l, Bound::NegInf),
                        fin(r, Bound::PosInf),
                        Bound::int(vs),
                        fin(t, Bound::PosInf),
                    )?);
                }
            }
        }
    }
    Ok(out)
}

/// Largest open halfplane holding at most one point of each pair, by
/// point count.
///
/// Any such halfplane can be shifted and turned until its boundary passes
/// through two of the points without changing which points it contains
/// strictly, so it is a line through two points plus some of those two.
pub fn oracle_maxcol(pairs: &[(Point, Point)]) -> Result<usize> {
    limit("pairs", pairs.len(), MAXCOL_LIMIT)?;
    let pts: Vec<(Point, usize)> = pairs
        .iter()
        .enumerate()
        .flat_map(|(i, &(a, b))| [(a, i), (b, i)])
        .collect();
    if pts.is_empty() {
        return Ok(0);
    }
    // any single extreme point can be cut off on its own
    let mut best = 1;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let line = Line::through(pts[i].0, pts[j].0)?;
            for sign in [1i128, -1] {
                for take in 0..4u8 {
                    let mut used = vec![false; pairs.len()];
                    let mut count = 0;
                    let mut ok = true;
                    for (idx, &(p, pair)) in pts.iter().enumerate() {
                        let s = line.eval(p) * sign;
                        let inside = s > 0
                            || (idx == i && take & 1 != 0)
                            || (idx == j && take & 2 != 0);
                        if inside {
                            if used[pair] {
                                ok = false;
                                break;
                            }
                            used[pair] = true;
                            count += 1;
                        }
                    }
                    if ok {
                        best = best.max(count);
                    }
                }
            }
        }
    }
    Ok(best)
}

/// The `(k+1)`-th smallest value of the lines at `x`.
pub fn oracle_level_height(lines: &[Line], k: usize, x: Rational) -> Rational {
    let mut vals: Vec<Rational> = lines.iter().map(|l| l.value_at(x)).collect();
    vals.sort_unstable();
    vals[k]
}

/// Whether some edge of the arrangement has, at its sample point, exactly
/// `k` lines strictly on `below`'s side and no pair `(2i, 2i+1)` entirely
/// there. Lines must not be vertical.
pub fn oracle_decide(lines: &[Line], k: usize, below: bool) -> Result<bool> {
    limit("lines", lines.len(), LINES_LIMIT)?;
    let one = Rational::from_int(1);
    for (i, li) in lines.iter().enumerate() {
        let mut xs: Vec<Rational> = lines
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .filter_map(|(_, lj)| li.crossing_x(lj))
            .collect();
        xs.sort_unstable();
        xs.dedup();
        let mut samples = Vec::new();
        match (xs.first(), xs.last()) {
            (Some(&lo), Some(&hi)) => {
                samples.push(lo - one);
                samples.push(hi + one);
                samples.extend(xs.windows(2).map(|w| (w[0] + w[1]) / Rational::from_int(2)));
            }
            _ => samples.push(Rational::zero()),
        }
        for x in samples {
            let y = li.value_at(x);
            let mut per_pair = vec![0u8; lines.len().div_ceil(2)];
            let mut total = 0;
            for (j, lj) in lines.iter().enumerate() {
                let v = lj.value_at(x);
                if (below && v < y) || (!below && v > y) {
                    per_pair[j / 2] += 1;
                    total += 1;
                }
            }
            if total == k && per_pair.iter().all(|&c| c < 2) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn pair(a: (i64, i64), b: (i64, i64)) -> (Point, Point) {
        (Point::new(a.0, a.1), Point::new(b.0, b.1))
    }

    #[test]
    fn mrr_examples() {
        assert_eq!(oracle_mrr(&pts(&[(0, 0), (10, 10)]), &pts(&[(5, 6)])).unwrap(), 2);
        assert_eq!(oracle_mrr(&pts(&[(0, 0), (4, 7), (9, 1)]), &[]).unwrap(), 3);
        let blue = pts(&[(0, 0), (2, 2), (0, 2), (2, 0)]);
        assert_eq!(oracle_mrr(&pts(&[(1, 1)]), &blue).unwrap(), 1);
    }

    #[test]
    fn mrr_limit() {
        let many: Vec<Point> = (0..=MRR_LIMIT as i64).map(|i| Point::new(i, i * i)).collect();
        assert!(matches!(oracle_mrr(&many, &[]), Err(Error::LimitExceeded(_))));
    }

    #[test]
    fn axis_examples() {
        assert_eq!(oracle_axis_mrr(&pts(&[(0, 0), (10, 0)]), &pts(&[(5, 1)])).unwrap(), 2);
        assert_eq!(oracle_axis_mrr(&pts(&[(0, 0), (10, 10)]), &pts(&[(5, 6)])).unwrap(), 1);
    }

    #[test]
    fn axis_candidates_single_blue() {
        let clip = ClipBox {
            x_lo: 0,
            x_hi: 10,
            y_lo: 0,
            y_hi: 10,
        };
        assert_eq!(oracle_axis_candidates(&pts(&[(4, 6)]), &clip).unwrap().len(), 4);
        assert_eq!(oracle_axis_candidates(&[], &clip).unwrap().len(), 1);
    }

    #[test]
    fn anchored_half_plane() {
        let out = oracle_anchored_candidates(&pts(&[(0, 0), (2, -3)]), Point::new(0, 0), Point::new(4, 0)).unwrap();
        assert_eq!(out.len(), 1);
        assert!(!out[0].is_bounded());
    }

    #[test]
    fn maxcol_examples() {
        assert_eq!(oracle_maxcol(&[pair((0, 0), (1, 1))]).unwrap(), 1);
        assert_eq!(oracle_maxcol(&[pair((0, 0), (2, 2)), pair((0, 2), (2, 0))]).unwrap(), 2);
        assert_eq!(oracle_maxcol(&[pair((0, 0), (1, 0)), pair((0, 1), (1, 1))]).unwrap(), 2);
    }

    #[test]
    fn level_height_examples() {
        let flat = [
            Line::from_slope_intercept(Rational::zero(), Rational::zero()),
            Line::from_slope_intercept(Rational::zero(), Rational::from_int(1)),
        ];
        assert_eq!(oracle_level_height(&flat, 0, Rational::from_int(5)), Rational::zero());
        let cross = [
            Line::from_slope_intercept(Rational::from_int(1), Rational::zero()),
            Line::from_slope_intercept(Rational::from_int(-1), Rational::zero()),
        ];
        assert_eq!(oracle_level_height(&cross, 1, Rational::from_int(2)), Rational::from_int(2));
    }

    #[test]
    fn decide_level_zero() {
        let lines = [
            Line::from_slope_intercept(Rational::from_int(1), Rational::zero()),
            Line::from_slope_intercept(Rational::from_int(-1), Rational::from_int(3)),
        ];
        assert!(oracle_decide(&lines, 0, true).unwrap());
        assert!(oracle_decide(&lines, 1, true).unwrap());
        assert!(!oracle_decide(&lines, 2, true).unwrap());
    }
}
