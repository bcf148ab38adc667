//! Axis-parallel maximum red rectangle.
//!
//! The candidates are the maximal axis-parallel rectangles whose open
//! interior avoids every blue point. Unbounded sides are clipped to a box
//! one unit outside all input points, which leaves every red count
//! unchanged because red points lie strictly inside the box.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{validate_points, Direction, Point};
use crate::range_count::{Bound, OrientedRect, RangeCounter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClipBox {
    pub x_lo: i64,
    pub x_hi: i64,
    pub y_lo: i64,
    pub y_hi: i64,
}

impl ClipBox {
    /// `[min - 1, max + 1]` on both axes; `[-1, 1]²` for no points.
    pub fn around<'a>(points: impl IntoIterator<Item = &'a Point>) -> Self {
        let mut it = points.into_iter().peekable();
        if it.peek().is_none() {
            return ClipBox {
                x_lo: -1,
                x_hi: 1,
                y_lo: -1,
                y_hi: 1,
            };
        }
        let (mut x_lo, mut x_hi, mut y_lo, mut y_hi) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for p in it {
            x_lo = x_lo.min(p.x);
            x_hi = x_hi.max(p.x);
            y_lo = y_lo.min(p.y);
            y_hi = y_hi.max(p.y);
        }
        ClipBox {
            x_lo: x_lo - 1,
            x_hi: x_hi + 1,
            y_lo: y_lo - 1,
            y_hi: y_hi + 1,
        }
    }

    fn rect(&self, x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> OrientedRect {
        debug_assert!(self.x_lo <= x_lo && x_hi <= self.x_hi);
        OrientedRect::new(
            Direction::EAST,
            Bound::int(x_lo as i128),
            Bound::int(x_hi as i128),
            Bound::int(y_lo as i128),
            Bound::int(y_hi as i128),
        )
        .expect("candidate sides are strictly ordered")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisInstance {
    red: Vec<Point>,
    blue: Vec<Point>,
    clip: ClipBox,
}

impl AxisInstance {
    /// Validates coordinates, that all points are distinct, and that blue
    /// points have pairwise distinct x- and y-coordinates. Red points may
    /// share coordinates: they only ever get counted.
    pub fn new(red: Vec<Point>, blue: Vec<Point>) -> Result<Self> {
        validate_points(&red)?;
        validate_points(&blue)?;
        let mut all: Vec<Point> = red.iter().chain(&blue).copied().collect();
        check_distinct_coordinates(&blue)?;
        let clip = ClipBox::around(&all);
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::EqualPoints(w[0]));
        }
        Ok(AxisInstance { red, blue, clip })
    }

    pub fn red(&self) -> &[Point] {
        &self.red
    }

    pub fn blue(&self) -> &[Point] {
        &self.blue
    }

    pub fn clip(&self) -> ClipBox {
        self.clip
    }
}

fn check_distinct_coordinates(points: &[Point]) -> Result<()> {
    for (axis, key) in [("x", (|p: &Point| p.x) as fn(&Point) -> i64), ("y", |p: &Point| p.y)] {
        let mut vals: Vec<i64> = points.iter().map(key).collect();
        vals.sort_unstable();
        if let Some(w) = vals.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::GeneralPosition(format!(
                "two points share the {axis}-coordinate {}",
                w[0]
            )));
        }
    }
    Ok(())
}

/// All maximal blue-empty axis rectangles inside `clip`.
///
/// Each side of an output either lies on the clip box or has a blue point
/// strictly inside it. Rectangles are grouped by what supports the bottom
/// and the top side; within each group the supports identify the rectangle,
/// so the output has no duplicates.
pub fn enumerate_axis_candidates(blue: &[Point], clip: &ClipBox) -> Result<Vec<OrientedRect>> {
    check_distinct_coordinates(blue)?;
    if let Some(p) = blue
        .iter()
        .find(|p| p.x <= clip.x_lo || p.x >= clip.x_hi || p.y <= clip.y_lo || p.y >= clip.y_hi)
    {
        return Err(Error::GeneralPosition(format!(
            "blue point {p:?} is not strictly inside the clip box"
        )));
    }

    let mut by_y = blue.to_vec();
    by_y.sort_unstable_by_key(|p| p.y);
    let mut out = Vec::new();

    // bottom supported by a blue point
    for (i, p) in by_y.iter().enumerate() {
        let (mut left, mut right) = (clip.x_lo, clip.x_hi);
        for q in &by_y[i + 1..] {
            if left < q.x && q.x < right {
                out.push(clip.rect(left, right, p.y, q.y));
                if q.x < p.x {
                    left = q.x;
                } else {
                    right = q.x;
                }
            }
        }
        out.push(clip.rect(left, right, p.y, clip.y_hi));
    }

    // bottom on the clip box, top supported by a blue point
    for t in blue {
        let (mut left, mut right) = (clip.x_lo, clip.x_hi);
        for b in blue.iter().filter(|b| b.y < t.y) {
            if b.x < t.x {
                left = left.max(b.x);
            } else {
                right = right.min(b.x);
            }
        }
        out.push(clip.rect(left, right, clip.y_lo, t.y));
    }

    // vertical strips spanning the whole box
    let mut xs: Vec<i64> = blue.iter().map(|p| p.x).collect();
    xs.push(clip.x_lo);
    xs.push(clip.x_hi);
    xs.sort_unstable();
    for w in xs.windows(2) {
        out.push(clip.rect(w[0], w[1], clip.y_lo, clip.y_hi));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisSolution {
    pub rect: OrientedRect,
    pub size: usize,
    pub candidates: usize,
}

/// Best candidate by closed red count; ties go to the lexicographically
/// smallest `(u_lo, u_hi, v_lo, v_hi)`.
pub fn solve_axis_mrr(instance: &AxisInstance, counter: &dyn RangeCounter) -> Result<AxisSolution> {
    let candidates = enumerate_axis_candidates(&instance.blue, &instance.clip)?;
    let total = candidates.len();
    let (rect, size) = candidates
        .into_iter()
        .map(|r| (r, counter.count_closed(&r)))
        .min_by(|(ra, sa), (rb, sb)| sb.cmp(sa).then_with(|| ra.bound_tuple().cmp(&rb.bound_tuple())))
        .expect("at least one candidate always exists");
    Ok(AxisSolution {
        rect,
        size,
        candidates: total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::range_count::{count_open_interior, NaiveCounter};

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn solve(red: &[(i64, i64)], blue: &[(i64, i64)]) -> AxisSolution {
        let inst = AxisInstance::new(pts(red), pts(blue)).unwrap();
        solve_axis_mrr(&inst, &NaiveCounter::new(inst.red())).unwrap()
    }

    #[test]
    fn no_blue_gives_whole_box() {
        let clip = ClipBox::around(&pts(&[(0, 0), (5, 5)]));
        let c = enumerate_axis_candidates(&[], &clip).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0], clip.rect(-1, 6, -1, 6));
    }

    #[test]
    fn single_blue_gives_four() {
        let blue = pts(&[(0, 0)]);
        let clip = ClipBox::around(&blue);
        let c = enumerate_axis_candidates(&blue, &clip).unwrap();
        assert_eq!(c.len(), 4);
        for r in &c {
            assert_eq!(count_open_interior(&blue, r), 0);
        }
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve(&[(1, 1), (2, 2)], &[]).size, 2);
        assert_eq!(solve(&[(0, 0), (10, 0)], &[(5, 1)]).size, 2);
        assert_eq!(solve(&[(0, 0), (10, 10)], &[(5, 6)]).size, 1);
    }

    #[test]
    fn returned_rect_is_blue_empty() {
        let blue = [(3, 4), (7, 1), (5, 8), (1, 6)];
        let s = solve(&[(2, 2), (4, 5), (6, 7), (8, 3)], &blue);
        assert_eq!(count_open_interior(&pts(&blue), &s.rect), 0);
    }

    #[test]
    fn ties_rejected() {
        let err = AxisInstance::new(pts(&[]), pts(&[(0, 0), (0, 5)])).unwrap_err();
        assert!(matches!(err, Error::GeneralPosition(_)));
        let err = AxisInstance::new(pts(&[]), pts(&[(1, 5), (0, 5)])).unwrap_err();
        assert!(matches!(err, Error::GeneralPosition(_)));
        let err = AxisInstance::new(pts(&[(1, 5)]), pts(&[(1, 5)])).unwrap_err();
        assert!(matches!(err, Error::EqualPoints(_)));
    }
}
