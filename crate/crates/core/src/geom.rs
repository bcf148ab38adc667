//! Exact planar primitives.
//!
//! Everything here works on integer coordinates with exact intermediate
//! arithmetic. Angles are never materialized: a [`Direction`] is a reduced
//! integer vector and the angular order between directions is decided by a
//! half-plane classification followed by a cross product.
//!
//! A direction `d = (dx, dy)` names the rotated frame whose x-axis points
//! along `d`. Frame coordinates are `u(p) = p·d` and `v(p) = p·(-dy, dx)`.
//! They are scaled by `|d|`, uniformly per frame, so comparisons inside one
//! frame reproduce the rotated order exactly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest accepted absolute coordinate value.
///
/// Point differences then fit in 22 bits, frame coordinates in 44 bits and
/// every product formed by the solvers stays far inside `i128`.
pub const COORD_LIMIT: i64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Constructs a point after checking the coordinate bound.
    pub fn checked(x: i64, y: i64) -> Result<Self> {
        let p = Point { x, y };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.x.abs() > COORD_LIMIT || self.y.abs() > COORD_LIMIT {
            return Err(Error::CoordinateOutOfRange(*self));
        }
        Ok(())
    }

    pub fn minus(self, other: Point) -> (i64, i64) {
        (self.x - other.x, self.y - other.y)
    }
}

impl From<[i64; 2]> for Point {
    fn from([x, y]: [i64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// Validates the coordinate bound for every point of a slice.
pub fn validate_points(points: &[Point]) -> Result<()> {
    points.iter().try_for_each(Point::validate)
}

/// Rejects repeated points and collinear triples in `O(N² log N)`.
pub fn check_no_three_collinear(points: &[Point]) -> Result<()> {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::EqualPoints(w[0]));
    }
    for (i, &p) in points.iter().enumerate() {
        let mut dirs: Vec<Direction> = points
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &q)| Direction::between(p, q).map(|d| d.canonical_half()))
            .collect::<Result<_>>()?;
        dirs.sort_unstable();
        if let Some(w) = dirs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::GeneralPosition(format!(
                "three collinear points through {p:?} along {}",
                w[0]
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

/// Sign of the cross product `(q - p) × (r - p)`.
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    let (ax, ay) = q.minus(p);
    let (bx, by) = r.minus(p);
    let cross = ax as i128 * by as i128 - ay as i128 * bx as i128;
    match cross.cmp(&0) {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// A gcd-reduced non-zero integer vector. Each geometric direction in
/// `[0°, 360°)` has exactly one representation, so `Eq`/`Hash` are
/// geometric equality. `Ord` is the counter-clockwise angle from `+x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct Direction {
    dx: i64,
    dy: i64,
}

impl Direction {
    /// The 0° frame, i.e. the identity.
    pub const EAST: Direction = Direction { dx: 1, dy: 0 };

    pub fn new(dx: i64, dy: i64) -> Result<Self> {
        if dx == 0 && dy == 0 {
            return Err(Error::ZeroDirection);
        }
        let g = dx.gcd(&dy);
        Ok(Direction {
            dx: dx / g,
            dy: dy / g,
        })
    }

    /// Direction of the vector from `from` to `to`.
    pub fn between(from: Point, to: Point) -> Result<Self> {
        if from == to {
            return Err(Error::EqualPoints(from));
        }
        let (dx, dy) = to.minus(from);
        Direction::new(dx, dy)
    }

    pub fn dx(&self) -> i64 {
        self.dx
    }

    pub fn dy(&self) -> i64 {
        self.dy
    }

    pub fn opposite(&self) -> Direction {
        Direction {
            dx: -self.dx,
            dy: -self.dy,
        }
    }

    /// The direction rotated by +90°. The v-axis of this frame.
    pub fn perp(&self) -> Direction {
        Direction {
            dx: -self.dy,
            dy: self.dx,
        }
    }

    /// Representative in `[0°, 180°)`: `dy > 0`, or `dy == 0 && dx > 0`.
    pub fn canonical_half(&self) -> Direction {
        if self.upper_half() {
            *self
        } else {
            self.opposite()
        }
    }

    fn upper_half(&self) -> bool {
        self.dy > 0 || (self.dy == 0 && self.dx > 0)
    }
}

impl From<Direction> for [i64; 2] {
    fn from(d: Direction) -> Self {
        [d.dx, d.dy]
    }
}

impl TryFrom<[i64; 2]> for Direction {
    type Error = Error;

    fn try_from([dx, dy]: [i64; 2]) -> Result<Self> {
        Direction::new(dx, dy)
    }
}

impl Ord for Direction {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_directions(*self, *other)
    }
}

impl PartialOrd for Direction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.dx, self.dy)
    }
}

/// Angular order on `[0°, 360°)` starting at `+x`, counter-clockwise.
pub fn compare_directions(a: Direction, b: Direction) -> Ordering {
    // lower half-plane sorts after the upper one
    let (ha, hb) = (!a.upper_half(), !b.upper_half());
    ha.cmp(&hb).then_with(|| {
        let cross = a.dx as i128 * b.dy as i128 - a.dy as i128 * b.dx as i128;
        0.cmp(&cross)
    })
}

/// Coordinates of `p` in the frame of `d`: `(p·d, p·perp(d))`.
pub fn frame_coords(p: Point, d: Direction) -> (i128, i128) {
    let (x, y) = (p.x as i128, p.y as i128);
    let (dx, dy) = (d.dx as i128, d.dy as i128);
    (x * dx + y * dy, -x * dy + y * dx)
}

/// The critical frame in `[0°, 180°)` where `a` and `b` share their
/// u-coordinate. Their u-order flips exactly when a sweep crosses this
/// direction or its opposite.
pub fn critical_direction_x(a: Point, b: Point) -> Result<Direction> {
    Ok(Direction::between(b, a)?.perp().canonical_half())
}

/// The critical frame in `[0°, 180°)` where `a` and `b` share their
/// v-coordinate.
pub fn critical_direction_y(a: Point, b: Point) -> Result<Direction> {
    Ok(Direction::between(b, a)?.canonical_half())
}

/// Exact rational over `i128`, always reduced with a positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i128>);

impl Rational {
    /// Panics when `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        Rational(Ratio::new(num, den))
    }

    pub fn from_int(v: i128) -> Self {
        Rational(Ratio::from_integer(v))
    }

    pub fn zero() -> Self {
        Rational(Ratio::zero())
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn floor(&self) -> i128 {
        Integer::div_floor(&self.numer(), &self.denom())
    }

    pub fn ceil(&self) -> i128 {
        -Integer::div_floor(&-self.numer(), &self.denom())
    }

    pub fn is_integer(&self) -> bool {
        self.denom() == 1
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    /// Compares with an integer without allocating a rational.
    pub fn cmp_int(&self, v: i128) -> Ordering {
        self.numer().cmp(&(v * self.denom()))
    }
}

impl From<i128> for Rational {
    fn from(v: i128) -> Self {
        Rational::from_int(v)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v as i128)
    }
}

macro_rules! rational_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: i128 = num.parse().map_err(|_| bad())?;
        let den: i128 = den.parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(Rational::new(num, den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The locus `a·x + b·y + c = 0`, gcd-reduced, with `b > 0` or
/// `b == 0 && a > 0`. With that sign, `eval(p) > 0` means `p` lies strictly
/// above a non-vertical line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Line {
    a: i128,
    b: i128,
    c: i128,
}

impl Line {
    pub fn new(a: i128, b: i128, c: i128) -> Result<Self> {
        if a == 0 && b == 0 {
            return Err(Error::DegenerateLine);
        }
        let g = a.gcd(&b).gcd(&c);
        let (mut a, mut b, mut c) = (a / g, b / g, c / g);
        if b < 0 || (b == 0 && a < 0) {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    /// The line `y = slope·x + intercept` with rational coefficients.
    pub fn from_slope_intercept(slope: Rational, intercept: Rational) -> Self {
        // clear denominators: L·y = S·x + I
        let l = slope.denom().lcm(&intercept.denom());
        let s = slope.numer() * (l / slope.denom());
        let i = intercept.numer() * (l / intercept.denom());
        Line::new(-s, l, -i).expect("b = lcm > 0")
    }

    pub fn through(p: Point, q: Point) -> Result<Self> {
        if p == q {
            return Err(Error::EqualPoints(p));
        }
        let (dx, dy) = (q.x as i128 - p.x as i128, q.y as i128 - p.y as i128);
        // normal (dy, -dx)
        Line::new(dy, -dx, -(dy * p.x as i128 - dx * p.y as i128))
    }

    pub fn coefficients(&self) -> (i128, i128, i128) {
        (self.a, self.b, self.c)
    }

    pub fn is_vertical(&self) -> bool {
        self.b == 0
    }

    pub fn eval(&self, p: Point) -> i128 {
        self.a * p.x as i128 + self.b * p.y as i128 + self.c
    }

    pub fn eval_rational(&self, x: Rational, y: Rational) -> Rational {
        Rational::from(self.a) * x + Rational::from(self.b) * y + Rational::from(self.c)
    }

    /// `-a/b`; panics for vertical lines.
    pub fn slope(&self) -> Rational {
        assert!(!self.is_vertical(), "slope of a vertical line");
        Rational::new(-self.a, self.b)
    }

    /// Height of the line at `x`; panics for vertical lines.
    pub fn value_at(&self, x: Rational) -> Rational {
        assert!(!self.is_vertical(), "value of a vertical line");
        -(Rational::from(self.a) * x + Rational::from(self.c)) / Rational::from(self.b)
    }

    /// x-coordinate where two non-vertical lines cross, `None` if parallel.
    pub fn crossing_x(&self, other: &Line) -> Option<Rational> {
        // y = -(a x + c)/b; equate and solve
        let den = self.a * other.b - other.a * self.b;
        if den == 0 {
            return None;
        }
        Some(Rational::new(other.c * self.b - self.c * other.b, den))
    }

    /// Mirror image under `y ↦ -y`.
    pub fn reflect_y(&self) -> Line {
        Line::new(self.a, -self.b, self.c).expect("reflection keeps (a, b) non-zero")
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {} = 0", self.a, self.b, self.c)
    }
}

/// Point `(a, b)` to the line `y = a·x - b`.
pub fn dual_line(p: Point) -> Line {
    Line::new(-(p.x as i128), 1, p.y as i128).expect("b = 1")
}

/// Line `y = u·x - v` to the point `(u, v)`.
pub fn dual_point(l: &Line) -> Result<(Rational, Rational)> {
    if l.is_vertical() {
        return Err(Error::VerticalLine);
    }
    let (a, b, c) = l.coefficients();
    Ok((Rational::new(-a, b), Rational::new(c, b)))
}
