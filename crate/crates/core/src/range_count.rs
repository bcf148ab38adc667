//! Counting points in rectangles of arbitrary orientation.
//!
//! A query rectangle lives in the frame of a [`Direction`]; its bounds are
//! expressed in the same unnormalized frame units as [`frame_coords`], and
//! any side may be unbounded. Red points are counted in the closed
//! rectangle, blue points are tested against the open interior.
//!
//! Two backends implement [`RangeCounter`]. [`NaiveCounter`] scans every
//! point and is the reference. [`AcceleratedCounter`] answers a query in
//! `O(log² n)` once the frame of the query has been indexed; frames are
//! indexed on first use and a handful of recent ones are kept, which suits
//! the solvers since they issue bursts of queries per orientation.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geom::{frame_coords, Direction, Point, Rational};

/// One end of a rectangle side interval. The derived order puts `NegInf`
/// before every finite value and `PosInf` after.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn int(v: i128) -> Bound {
        Bound::Finite(Rational::from_int(v))
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            Bound::Finite(r) => Some(*r),
            _ => None,
        }
    }

    fn cmp_int(&self, v: i128) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match self {
            Bound::NegInf => Less,
            Bound::PosInf => Greater,
            Bound::Finite(r) => r.cmp_int(v),
        }
    }

    /// Smallest integer `t` with `t >= self` (`strict`: `t > self`).
    fn lower_threshold(&self, strict: bool) -> i128 {
        match self {
            Bound::NegInf => i128::MIN,
            Bound::PosInf => i128::MAX,
            Bound::Finite(r) if strict => r.floor() + 1,
            Bound::Finite(r) => r.ceil(),
        }
    }

    /// Largest integer `t` with `t <= self` (`strict`: `t < self`).
    fn upper_threshold(&self, strict: bool) -> i128 {
        match self {
            Bound::NegInf => i128::MIN,
            Bound::PosInf => i128::MAX,
            Bound::Finite(r) if strict => r.ceil() - 1,
            Bound::Finite(r) => r.floor(),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::PosInf => f.write_str("inf"),
            Bound::Finite(r) => r.fmt(f),
        }
    }
}

impl FromStr for Bound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" => Ok(Bound::NegInf),
            "inf" | "+inf" => Ok(Bound::PosInf),
            other => other.parse().map(Bound::Finite),
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Bound {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `[u_lo, u_hi] × [v_lo, v_hi]` in the frame of `dir`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRect")]
pub struct OrientedRect {
    dir: Direction,
    u_lo: Bound,
    u_hi: Bound,
    v_lo: Bound,
    v_hi: Bound,
}

#[derive(Deserialize)]
struct RawRect {
    dir: Direction,
    u_lo: Bound,
    u_hi: Bound,
    v_lo: Bound,
    v_hi: Bound,
}

impl TryFrom<RawRect> for OrientedRect {
    type Error = Error;

    fn try_from(r: RawRect) -> Result<Self> {
        OrientedRect::new(r.dir, r.u_lo, r.u_hi, r.v_lo, r.v_hi)
    }
}

impl OrientedRect {
    pub fn new(dir: Direction, u_lo: Bound, u_hi: Bound, v_lo: Bound, v_hi: Bound) -> Result<Self> {
        if u_lo >= u_hi || v_lo >= v_hi {
            return Err(Error::EmptyRect);
        }
        Ok(OrientedRect {
            dir,
            u_lo,
            u_hi,
            v_lo,
            v_hi,
        })
    }

    /// The whole plane, in the identity frame.
    pub fn plane() -> Self {
        OrientedRect {
            dir: Direction::EAST,
            u_lo: Bound::NegInf,
            u_hi: Bound::PosInf,
            v_lo: Bound::NegInf,
            v_hi: Bound::PosInf,
        }
    }

    pub fn dir(&self) -> Direction {
        self.dir
    }

    pub fn u_bounds(&self) -> (Bound, Bound) {
        (self.u_lo, self.u_hi)
    }

    pub fn v_bounds(&self) -> (Bound, Bound) {
        (self.v_lo, self.v_hi)
    }

    /// Bounds as `(u_lo, u_hi, v_lo, v_hi)`, used for lexicographic tie-breaks.
    pub fn bound_tuple(&self) -> (Bound, Bound, Bound, Bound) {
        (self.u_lo, self.u_hi, self.v_lo, self.v_hi)
    }

    pub fn contains_closed(&self, p: Point) -> bool {
        use std::cmp::Ordering::*;
        let (u, v) = frame_coords(p, self.dir);
        self.u_lo.cmp_int(u) != Greater
            && self.u_hi.cmp_int(u) != Less
            && self.v_lo.cmp_int(v) != Greater
            && self.v_hi.cmp_int(v) != Less
    }

    pub fn contains_open(&self, p: Point) -> bool {
        use std::cmp::Ordering::*;
        let (u, v) = frame_coords(p, self.dir);
        self.u_lo.cmp_int(u) == Less
            && self.u_hi.cmp_int(u) == Greater
            && self.v_lo.cmp_int(v) == Less
            && self.v_hi.cmp_int(v) == Greater
    }

    /// Every bound finite.
    pub fn is_bounded(&self) -> bool {
        [self.u_lo, self.u_hi, self.v_lo, self.v_hi]
            .iter()
            .all(|b| b.finite().is_some())
    }
}

/// Backend contract: the number of stored points in a closed rectangle.
/// All backends must agree exactly.
pub trait RangeCounter: Send + Sync {
    fn count_closed(&self, rect: &OrientedRect) -> usize;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Number of `points` in the open interior of `rect`.
pub fn count_open_interior(points: &[Point], rect: &OrientedRect) -> usize {
    points.iter().filter(|p| rect.contains_open(**p)).count()
}

#[derive(Clone, Debug, Default)]
pub struct NaiveCounter {
    points: Vec<Point>,
}

impl NaiveCounter {
    pub fn new(points: &[Point]) -> Self {
        NaiveCounter {
            points: points.to_vec(),
        }
    }
}

impl RangeCounter for NaiveCounter {
    fn count_closed(&self, rect: &OrientedRect) -> usize {
        self.points.iter().filter(|p| rect.contains_closed(**p)).count()
    }

    fn len(&self) -> usize {
        self.points.len()
    }
}

/// Points of one frame, sorted by u, with a merge-sort tree over v.
#[derive(Debug)]
struct FrameIndex {
    us: Vec<i128>,
    // tree[node] holds the sorted v values of the u-rank range it covers
    tree: Vec<Vec<i128>>,
    leaves: usize,
}

impl FrameIndex {
    fn build(points: &[Point], dir: Direction) -> Self {
        let mut coords: Vec<(i128, i128)> = points.iter().map(|p| frame_coords(*p, dir)).collect();
        coords.sort_unstable();
        let leaves = coords.len().next_power_of_two().max(1);
        let mut tree = vec![Vec::new(); 2 * leaves];
        for (i, &(_, v)) in coords.iter().enumerate() {
            tree[leaves + i].push(v);
        }
        for node in (1..leaves).rev() {
            let (l, r) = (&tree[2 * node], &tree[2 * node + 1]);
            let mut merged = Vec::with_capacity(l.len() + r.len());
            let (mut i, mut j) = (0, 0);
            while i < l.len() && j < r.len() {
                if l[i] <= r[j] {
                    merged.push(l[i]);
                    i += 1;
                } else {
                    merged.push(r[j]);
                    j += 1;
                }
            }
            merged.extend_from_slice(&l[i..]);
            merged.extend_from_slice(&r[j..]);
            tree[node] = merged;
        }
        FrameIndex {
            us: coords.into_iter().map(|(u, _)| u).collect(),
            tree,
            leaves,
        }
    }

    /// Points with `u_min <= u <= u_max` and `v_min <= v <= v_max`.
    fn count(&self, u_min: i128, u_max: i128, v_min: i128, v_max: i128) -> usize {
        if u_min > u_max || v_min > v_max {
            return 0;
        }
        let lo = self.us.partition_point(|&u| u < u_min);
        let hi = self.us.partition_point(|&u| u <= u_max);
        let in_node = |node: usize| {
            let vs = &self.tree[node];
            vs.partition_point(|&v| v <= v_max) - vs.partition_point(|&v| v < v_min)
        };
        let (mut l, mut r) = (lo + self.leaves, hi + self.leaves);
        let mut total = 0;
        while l < r {
            if l & 1 == 1 {
                total += in_node(l);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                total += in_node(r);
            }
            l >>= 1;
            r >>= 1;
        }
        total
    }
}

const FRAME_CACHE: usize = 8;

/// Sublinear-query backend; see the module docs for its indexing policy.
#[derive(Debug)]
pub struct AcceleratedCounter {
    points: Vec<Point>,
    frames: Mutex<VecDeque<(Direction, Arc<FrameIndex>)>>,
}

impl AcceleratedCounter {
    pub fn build(points: &[Point]) -> Self {
        let counter = AcceleratedCounter {
            points: points.to_vec(),
            frames: Mutex::new(VecDeque::with_capacity(FRAME_CACHE)),
        };
        counter.frame(Direction::EAST);
        counter
    }

    fn frame(&self, dir: Direction) -> Arc<FrameIndex> {
        let mut frames = self.frames.lock().expect("frame cache poisoned");
        if let Some((_, idx)) = frames.iter().find(|(d, _)| *d == dir) {
            return Arc::clone(idx);
        }
        let idx = Arc::new(FrameIndex::build(&self.points, dir));
        if frames.len() == FRAME_CACHE {
            frames.pop_front();
        }
        frames.push_back((dir, Arc::clone(&idx)));
        idx
    }
}

impl RangeCounter for AcceleratedCounter {
    fn count_closed(&self, rect: &OrientedRect) -> usize {
        if self.points.is_empty() {
            return 0;
        }
        let idx = self.frame(rect.dir);
        idx.count(
            rect.u_lo.lower_threshold(false),
            rect.u_hi.upper_threshold(false),
            rect.v_lo.lower_threshold(false),
            rect.v_hi.upper_threshold(false),
        )
    }

    fn len(&self) -> usize {
        self.points.len()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CounterKind {
    #[default]
    Naive,
    Accel,
}

impl FromStr for CounterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(CounterKind::Naive),
            "accel" => Ok(CounterKind::Accel),
            other => Err(Error::Parse(format!("unknown counter backend {other:?}"))),
        }
    }
}

pub fn build_counter(kind: CounterKind, points: &[Point]) -> Box<dyn RangeCounter> {
    match kind {
        CounterKind::Naive => Box::new(NaiveCounter::new(points)),
        CounterKind::Accel => Box::new(AcceleratedCounter::build(points)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn rect(dir: (i64, i64), u: (Bound, Bound), v: (Bound, Bound)) -> OrientedRect {
        OrientedRect::new(Direction::new(dir.0, dir.1).unwrap(), u.0, u.1, v.0, v.1).unwrap()
    }

    use Bound::{NegInf, PosInf};
    fn b(v: i128) -> Bound {
        Bound::int(v)
    }

    #[test]
    fn closed_counts() {
        let red = pts(&[(0, 0), (2, 0), (1, 5)]);
        let r = rect((1, 0), (b(0), b(2)), (b(0), b(1)));
        assert_eq!(NaiveCounter::new(&red).count_closed(&r), 2);
        assert_eq!(AcceleratedCounter::build(&red).count_closed(&r), 2);

        let one = pts(&[(1, 1)]);
        let all = rect((1, 0), (NegInf, PosInf), (NegInf, PosInf));
        assert_eq!(NaiveCounter::new(&one).count_closed(&all), 1);
        assert_eq!(AcceleratedCounter::build(&one).count_closed(&all), 1);

        let red = pts(&[(0, 0), (3, 3), (5, 1)]);
        let r = rect((1, 1), (b(0), b(6)), (b(-1), b(1)));
        assert_eq!(NaiveCounter::new(&red).count_closed(&r), 2);
        assert_eq!(AcceleratedCounter::build(&red).count_closed(&r), 2);
    }

    #[test]
    fn open_counts() {
        let r = rect((1, 0), (b(0), b(2)), (b(0), b(2)));
        assert_eq!(count_open_interior(&pts(&[(1, 0)]), &r), 0);
        assert_eq!(count_open_interior(&pts(&[(1, 1)]), &r), 1);
        let r = rect((1, 1), (b(0), b(10)), (NegInf, b(1)));
        assert_eq!(count_open_interior(&pts(&[(2, 2)]), &r), 1);
    }

    #[test]
    fn rational_bounds_round_correctly() {
        let red = pts(&[(0, 0), (1, 0), (2, 0)]);
        let half = |n| Bound::Finite(Rational::new(n, 2));
        let r = rect((1, 0), (half(1), half(4)), (half(-1), half(1)));
        assert_eq!(NaiveCounter::new(&red).count_closed(&r), 2);
        assert_eq!(AcceleratedCounter::build(&red).count_closed(&r), 2);
    }

    #[test]
    fn empty_and_single() {
        let acc = AcceleratedCounter::build(&[]);
        assert_eq!(acc.count_closed(&OrientedRect::plane()), 0);
        let p = pts(&[(7, -3)]);
        let r = rect((1, 0), (b(6), b(8)), (b(-4), b(-2)));
        assert_eq!(AcceleratedCounter::build(&p).count_closed(&r), 1);
    }

    #[test]
    fn invalid_rect_rejected() {
        let d = Direction::EAST;
        assert!(matches!(
            OrientedRect::new(d, b(1), b(1), NegInf, PosInf),
            Err(Error::EmptyRect)
        ));
        assert!(OrientedRect::new(d, PosInf, PosInf, NegInf, PosInf).is_err());
    }

    #[test]
    fn bound_text_roundtrip() {
        for s in ["-inf", "inf", "3/4", "-5/1"] {
            let bd: Bound = s.parse().unwrap();
            assert_eq!(bd.to_string(), s);
        }
    }
}
