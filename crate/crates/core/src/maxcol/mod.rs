//! Maximum coloring of point pairs.
//!
//! Coloring one point of each pair red and the other blue, the best
//! coloring maximizes the number of reds an open halfplane can hold while
//! holding no blue. Equivalently, find an open halfplane containing at most
//! one point of each pair and as many points as possible; its points are
//! colored red and their partners blue.
//!
//! In the dual, a point `(u, v)` has a line strictly below it exactly when
//! the primal point lies strictly above the line `y = u·x - v`. So the
//! question for a fixed `k` is whether some point with exactly `k` dual
//! lines below it has no pair with both lines below. Such points, if any,
//! can be found on the edges of the k-level, which [`decide`] walks while
//! tracking per pair how many of its lines are below.

mod level;

pub use level::{check_simple_arrangement, k_level, LevelEdge, LevelPolyline, LevelVertex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{check_no_three_collinear, dual_line, validate_points, Line, Point, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairInstance {
    pairs: Vec<(Point, Point)>,
}

impl PairInstance {
    /// Requires all `2n` points distinct and no three collinear, which makes
    /// the dual arrangement simple.
    pub fn new(pairs: Vec<(Point, Point)>) -> Result<Self> {
        let pts: Vec<Point> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        validate_points(&pts)?;
        check_no_three_collinear(&pts)?;
        Ok(PairInstance { pairs })
    }

    pub fn pairs(&self) -> &[(Point, Point)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Point `2i` is the first point of pair `i`, `2i + 1` the second.
    pub fn point(&self, id: usize) -> Point {
        let (a, b) = self.pairs[id / 2];
        if id.is_multiple_of(2) {
            a
        } else {
            b
        }
    }
}

/// Dual lines in the point order of [`PairInstance::point`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualArrangement {
    pub lines: Vec<Line>,
}

impl DualArrangement {
    pub fn pair_of(&self, line: usize) -> usize {
        line / 2
    }

    pub fn pairs(&self) -> usize {
        self.lines.len() / 2
    }

    pub fn reflected(&self) -> DualArrangement {
        DualArrangement {
            lines: self.lines.iter().map(Line::reflect_y).collect(),
        }
    }
}

pub fn dualize(instance: &PairInstance) -> DualArrangement {
    DualArrangement {
        lines: (0..2 * instance.len())
            .map(|i| dual_line(instance.point(i)))
            .collect(),
    }
}

/// Which side of the dual witness the counted lines lie on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualSide {
    Below,
    Above,
}

/// One edge of the walk together with the bookkeeping valid on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub edge: LevelEdge,
    /// Number of lines of each pair strictly below the level.
    pub arr: Vec<u8>,
    /// Pairs with both lines below.
    pub n_b: usize,
}

/// Walks the k-level of `dual` (mirrored first for [`DualSide::Above`]),
/// reporting every edge until `visit` returns true.
fn walk(
    dual: &DualArrangement,
    k: usize,
    side: DualSide,
    mut visit: impl FnMut(&TraceStep) -> bool,
) -> Result<()> {
    let mirrored;
    let dual = match side {
        DualSide::Below => dual,
        DualSide::Above => {
            mirrored = dual.reflected();
            &mirrored
        }
    };
    let lines = &dual.lines;
    let level = k_level(lines, k)?;
    let mut edges = level.edges();
    let first = edges.next().expect("a level has at least one edge");

    let x0 = first.sample_x();
    let y0 = lines[first.line].value_at(x0);
    let mut arr = vec![0u8; dual.pairs()];
    for (j, l) in lines.iter().enumerate() {
        if l.value_at(x0) < y0 {
            arr[dual.pair_of(j)] += 1;
        }
    }
    let mut step = TraceStep {
        edge: first,
        n_b: arr.iter().filter(|&&c| c == 2).count(),
        arr,
    };
    if visit(&step) {
        return Ok(());
    }

    for (vertex, edge) in level.vertices.iter().zip(edges) {
        let (inc, out) = (vertex.incoming, vertex.outgoing);
        if lines[out].slope() > lines[inc].slope() {
            // out was below and becomes the level; inc drops below
            let (po, pi) = (dual.pair_of(out), dual.pair_of(inc));
            if step.arr[po] == 2 {
                step.n_b -= 1;
            }
            step.arr[po] -= 1;
            step.arr[pi] += 1;
            if step.arr[pi] == 2 {
                step.n_b += 1;
            }
        }
        step.edge = edge;
        if visit(&step) {
            break;
        }
    }
    Ok(())
}

/// A point with exactly `k` lines strictly below it (strictly above, for
/// [`DualSide::Above`]) and no pair entirely on that side, if one exists.
/// The point is the sample point of the first such edge of the k-level.
pub fn decide(dual: &DualArrangement, k: usize, side: DualSide) -> Result<Option<(Rational, Rational)>> {
    let mut found = None;
    walk(dual, k, side, |step| {
        if step.n_b == 0 {
            found = Some(step.edge);
            true
        } else {
            false
        }
    })?;
    // the witness lies on the level line, which mirroring does not move
    Ok(found.map(|e| {
        let x = e.sample_x();
        (x, dual.lines[e.line].value_at(x))
    }))
}

/// Every edge of the walk with its maintained state; for inspection and
/// testing.
pub fn trace(dual: &DualArrangement, k: usize, side: DualSide) -> Result<Vec<TraceStep>> {
    let mut out = Vec::new();
    walk(dual, k, side, |s| {
        out.push(s.clone());
        false
    })?;
    Ok(out)
}

/// Largest `k` for which [`decide`] succeeds, with its witness. Assumes the
/// feasible set is downward closed; `k = 0` always succeeds.
pub fn max_feasible_level(dual: &DualArrangement, side: DualSide) -> Result<(usize, (Rational, Rational))> {
    let mut best = (0, decide(dual, 0, side)?.expect("the lowest level has nothing below"));
    let (mut lo, mut hi) = (1, dual.lines.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match decide(dual, mid, side)? {
            Some(w) => {
                best = (mid, w);
                lo = mid + 1;
            }
            None => hi = mid,
        }
    }
    Ok(best)
}

/// Side of the primal line on which the halfplane lies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HalfplaneSide {
    Above,
    Below,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

/// The open halfplane strictly on `side` of `line`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Halfplane {
    pub line: Line,
    pub side: HalfplaneSide,
}

impl Halfplane {
    pub fn contains(&self, p: Point) -> bool {
        let s = self.line.eval(p);
        match self.side {
            HalfplaneSide::Above => s > 0,
            HalfplaneSide::Below => s < 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub halfplane: Halfplane,
    pub eta: usize,
    /// Colors of `(first, second)` point of each pair.
    pub coloring: Vec<(Color, Color)>,
    pub red_points_in_halfplane: Vec<Point>,
}

impl ColoringCertificate {
    /// Recounts the certificate against `instance`.
    pub fn validate(&self, instance: &PairInstance) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCertificate(msg));
        if self.coloring.len() != instance.len() {
            return bad(format!(
                "{} colorings for {} pairs",
                self.coloring.len(),
                instance.len()
            ));
        }
        let mut reds = Vec::new();
        for (i, (&(a, b), &(ca, cb))) in instance.pairs().iter().zip(&self.coloring).enumerate() {
            if ca == cb {
                return bad(format!("pair {i} is not split into one red and one blue"));
            }
            for (p, c) in [(a, ca), (b, cb)] {
                if !self.halfplane.contains(p) {
                    continue;
                }
                match c {
                    Color::Blue => return bad(format!("blue point {p:?} lies in the halfplane")),
                    Color::Red => reds.push(p),
                }
            }
        }
        if reds.len() != self.eta {
            return bad(format!("halfplane holds {} reds, claimed {}", reds.len(), self.eta));
        }
        let mut listed = self.red_points_in_halfplane.clone();
        listed.sort_unstable();
        reds.sort_unstable();
        if listed != reds {
            return bad("listed red points differ from the recount".into());
        }
        Ok(())
    }
}

/// Builds the certificate for the primal open halfplane `h`: its points
/// are red, their partners blue, untouched pairs red-then-blue.
pub fn certificate_for(instance: &PairInstance, halfplane: Halfplane) -> ColoringCertificate {
    let mut reds = Vec::new();
    let coloring = instance
        .pairs()
        .iter()
        .map(|&(a, b)| {
            if halfplane.contains(b) {
                reds.push(b);
                (Color::Blue, Color::Red)
            } else {
                if halfplane.contains(a) {
                    reds.push(a);
                }
                (Color::Red, Color::Blue)
            }
        })
        .collect();
    ColoringCertificate {
        halfplane,
        eta: reds.len(),
        coloring,
        red_points_in_halfplane: reds,
    }
}

/// Maps a dual witness back to the primal halfplane it certifies.
pub fn primal_halfplane(witness: (Rational, Rational), side: DualSide) -> Halfplane {
    let (u, v) = witness;
    Halfplane {
        line: Line::from_slope_intercept(u, -v),
        side: match side {
            DualSide::Below => HalfplaneSide::Above,
            DualSide::Above => HalfplaneSide::Below,
        },
    }
}

pub fn solve_maxcol(instance: &PairInstance) -> Result<ColoringCertificate> {
    if instance.is_empty() {
        return Err(Error::EmptyInstance);
    }
    let dual = dualize(instance);
    let (below, above) = rayon::join(
        || max_feasible_level(&dual, DualSide::Below),
        || max_feasible_level(&dual, DualSide::Above),
    );
    let (below, above) = (below?, above?);
    let (k, witness, side) = if above.0 > below.0 {
        (above.0, above.1, DualSide::Above)
    } else {
        (below.0, below.1, DualSide::Below)
    };
    let cert = certificate_for(instance, primal_halfplane(witness, side));
    if cert.eta != k {
        return Err(Error::InvalidCertificate(format!(
            "witness halfplane holds {} points, level {k}",
            cert.eta
        )));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Pair = ((i64, i64), (i64, i64));

    fn inst(v: &[Pair]) -> PairInstance {
        PairInstance::new(
            v.iter()
                .map(|&((a, b), (c, d))| (Point::new(a, b), Point::new(c, d)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn dualize_example() {
        let d = dualize(&inst(&[((2, 3), (0, 1))]));
        let x = Rational::from(5i64);
        assert_eq!(d.lines[0].value_at(x), Rational::from(7i64));
        assert_eq!(d.lines[1].value_at(x), Rational::from(-1i64));
    }

    #[test]
    fn single_pair() {
        let c = solve_maxcol(&inst(&[((0, 0), (1, 1))])).unwrap();
        assert_eq!(c.eta, 1);
    }

    #[test]
    fn crossing_pairs() {
        let i = inst(&[((0, 0), (2, 2)), ((0, 2), (2, 0))]);
        let c = solve_maxcol(&i).unwrap();
        assert_eq!(c.eta, 2);
        c.validate(&i).unwrap();
    }

    #[test]
    fn level_zero_always_feasible() {
        let d = dualize(&inst(&[((0, 0), (3, 1)), ((1, 5), (4, 2))]));
        for side in [DualSide::Below, DualSide::Above] {
            assert!(decide(&d, 0, side).unwrap().is_some());
        }
    }

    #[test]
    fn one_pair_level_one() {
        let d = dualize(&inst(&[((0, 0), (1, 1))]));
        let (u, v) = decide(&d, 1, DualSide::Below).unwrap().unwrap();
        let below = d.lines.iter().filter(|l| l.value_at(u) < v).count();
        assert_eq!(below, 1);
    }

    #[test]
    fn traced_arr_matches_recount() {
        let i = inst(&[((0, 0), (5, 2)), ((1, 7), (6, 6)), ((3, 1), (2, 9))]);
        let d = dualize(&i);
        for side in [DualSide::Below, DualSide::Above] {
            let lines = match side {
                DualSide::Below => d.lines.clone(),
                DualSide::Above => d.reflected().lines,
            };
            for k in 0..d.lines.len() {
                for s in trace(&d, k, side).unwrap() {
                    let x = s.edge.sample_x();
                    let y = lines[s.edge.line].value_at(x);
                    let mut arr = vec![0u8; d.pairs()];
                    for (j, l) in lines.iter().enumerate() {
                        if l.value_at(x) < y {
                            arr[j / 2] += 1;
                        }
                    }
                    assert_eq!(arr, s.arr);
                    assert_eq!(arr.iter().map(|&c| c as usize).sum::<usize>(), k);
                }
            }
        }
    }

    #[test]
    fn certificate_rejects_tampering() {
        let i = inst(&[((0, 0), (2, 2)), ((0, 2), (2, 0))]);
        let mut c = solve_maxcol(&i).unwrap();
        c.eta += 1;
        assert!(c.validate(&i).is_err());
    }

    #[test]
    fn empty_instance() {
        assert!(matches!(
            solve_maxcol(&PairInstance::new(vec![]).unwrap()),
            Err(Error::EmptyInstance)
        ));
    }
}
