//! k-levels of line arrangements.
//!
//! The walker starts on the line holding the `(k+1)`-th smallest value as
//! `x → -∞` and follows it to its nearest crossing on the right. In an
//! arrangement with no three concurrent lines the level changes line at
//! every crossing it meets, because the rank of the current line moves by
//! one there. Each vertex costs one scan over all lines.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Line, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelVertex {
    pub x: Rational,
    pub y: Rational,
    pub incoming: usize,
    pub outgoing: usize,
}

/// A maximal segment of the level: `line` between `x_lo` and `x_hi`,
/// `None` meaning unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelEdge {
    pub line: usize,
    pub x_lo: Option<Rational>,
    pub x_hi: Option<Rational>,
}

impl LevelEdge {
    /// A point strictly inside the edge: the midpoint when bounded, one unit
    /// past the only vertex otherwise.
    pub fn sample_x(&self) -> Rational {
        let one = Rational::from_int(1);
        match (self.x_lo, self.x_hi) {
            (Some(lo), Some(hi)) => (lo + hi) / Rational::from_int(2),
            (Some(lo), None) => lo + one,
            (None, Some(hi)) => hi - one,
            (None, None) => Rational::zero(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelPolyline {
    pub k: usize,
    pub first: usize,
    pub vertices: Vec<LevelVertex>,
}

impl LevelPolyline {
    pub fn edges(&self) -> impl Iterator<Item = LevelEdge> + '_ {
        (0..=self.vertices.len()).map(move |i| LevelEdge {
            line: if i == 0 {
                self.first
            } else {
                self.vertices[i - 1].outgoing
            },
            x_lo: i.checked_sub(1).map(|j| self.vertices[j].x),
            x_hi: self.vertices.get(i).map(|v| v.x),
        })
    }

    /// Height of the level at `x`.
    pub fn height_at(&self, lines: &[Line], x: Rational) -> Rational {
        let i = self.vertices.partition_point(|v| v.x < x);
        let line = if i == 0 {
            self.first
        } else {
            self.vertices[i - 1].outgoing
        };
        lines[line].value_at(x)
    }
}

/// Rejects vertical lines, duplicates, and three lines through one point.
pub fn check_simple_arrangement(lines: &[Line]) -> Result<()> {
    if lines.iter().any(Line::is_vertical) {
        return Err(Error::VerticalLine);
    }
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let Some(x) = lines[i].crossing_x(&lines[j]) else {
                if lines[i] == lines[j] {
                    return Err(Error::ConcurrentLines);
                }
                continue;
            };
            let y = lines[i].value_at(x);
            if lines[j + 1..].iter().any(|l| l.value_at(x) == y) {
                return Err(Error::ConcurrentLines);
            }
        }
    }
    Ok(())
}

/// The level with exactly `k` lines strictly below each of its edges.
pub fn k_level(lines: &[Line], k: usize) -> Result<LevelPolyline> {
    if k >= lines.len() {
        return Err(Error::LevelOutOfRange {
            k,
            lines: lines.len(),
        });
    }
    check_simple_arrangement(lines)?;

    // order at x → -∞: larger slope is lower; parallel lines by intercept
    let mut at_left: Vec<usize> = (0..lines.len()).collect();
    at_left.sort_by(|&a, &b| {
        let (la, lb) = (&lines[a], &lines[b]);
        lb.slope()
            .cmp(&la.slope())
            .then_with(|| la.value_at(Rational::zero()).cmp(&lb.value_at(Rational::zero())))
    });
    let first = at_left[k];

    let mut vertices = Vec::new();
    let (mut cur, mut from_x): (usize, Option<Rational>) = (first, None);
    loop {
        let next = lines
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != cur)
            .filter_map(|(j, l)| lines[cur].crossing_x(l).map(|x| (x, j)))
            .filter(|(x, _)| from_x.is_none_or(|f| *x > f))
            .min();
        let Some((x, j)) = next else { break };
        vertices.push(LevelVertex {
            x,
            y: lines[cur].value_at(x),
            incoming: cur,
            outgoing: j,
        });
        cur = j;
        from_x = Some(x);
    }
    Ok(LevelPolyline { k, first, vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Rational as Q;

    /// `y = slope·x + intercept`
    fn line(slope: i64, intercept: i64) -> Line {
        Line::from_slope_intercept(Q::from(slope), Q::from(intercept))
    }

    fn nth_smallest(lines: &[Line], k: usize, x: Q) -> Q {
        let mut vals: Vec<Q> = lines.iter().map(|l| l.value_at(x)).collect();
        vals.sort();
        vals[k]
    }

    #[test]
    fn concurrent_lines_rejected() {
        let lines = [line(0, 0), line(1, -1), line(-1, 1)];
        assert!(matches!(k_level(&lines, 0), Err(Error::ConcurrentLines)));
    }

    #[test]
    fn single_line() {
        let lvl = k_level(&[line(3, 2)], 0).unwrap();
        assert_eq!(lvl.first, 0);
        assert!(lvl.vertices.is_empty());
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            k_level(&[line(1, 0)], 1),
            Err(Error::LevelOutOfRange { .. })
        ));
    }

    #[test]
    fn envelopes_of_three_lines() {
        // y = 0, y = x - 1, y = -x + 3: crossings at x = 1, 3, 2
        let lines = [line(0, 0), line(1, -1), line(-1, 3)];
        for k in 0..3 {
            let lvl = k_level(&lines, k).unwrap();
            for i in -20..=20 {
                let x = Q::new(i, 4);
                assert_eq!(lvl.height_at(&lines, x), nth_smallest(&lines, k, x), "k={k} x={x}");
            }
        }
        let lower = k_level(&lines, 0).unwrap();
        let xs: Vec<Q> = lower.vertices.iter().map(|v| v.x).collect();
        assert_eq!(xs, vec![Q::from(1i64), Q::from(3i64)]);
    }

    #[test]
    fn parallel_lines_are_fine() {
        let lines = [line(1, 0), line(1, 5), line(-2, 1)];
        for k in 0..3 {
            let lvl = k_level(&lines, k).unwrap();
            for e in lvl.edges() {
                let x = e.sample_x();
                assert_eq!(lines[e.line].value_at(x), nth_smallest(&lines, k, x));
            }
        }
    }
}
