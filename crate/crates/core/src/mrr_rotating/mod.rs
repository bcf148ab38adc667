//! Maximum red rectangle of arbitrary orientation.
//!
//! Every anchor event (a blue point and a second point defining the
//! direction of one rectangle side) calls [`anchored_candidates`] with the
//! blue points already sorted in that frame. The sorted lists are carried
//! across the full turn by [`KineticOrder`]: between two events no pair of
//! blue points changes order, and at a swap event the two points involved
//! are neighbours, so one exchange restores both lists.

mod anchored;
mod events;
mod kinetic;

pub use anchored::{anchored_candidates, CandidateRect, Support};
pub use events::{build_events, Axis, Event, EventKind, Site};
pub use kinetic::KineticOrder;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{check_no_three_collinear, validate_points, Direction, Point};
use crate::range_count::{OrientedRect, RangeCounter};

/// A validated instance together with its sorted event list.
///
/// General position here means: all points distinct, no three of them
/// collinear, and pairwise distinct event directions apart from the
/// unavoidable y-swap/anchor coincidence described on [`build_events`].
#[derive(Clone, Debug)]
pub struct RotatingInstance {
    red: Vec<Point>,
    blue: Vec<Point>,
    events: Vec<Event>,
}

impl RotatingInstance {
    pub fn new(red: Vec<Point>, blue: Vec<Point>) -> Result<Self> {
        validate_points(&red)?;
        validate_points(&blue)?;
        let all: Vec<Point> = red.iter().chain(&blue).copied().collect();
        check_no_three_collinear(&all)?;
        let events = build_events(&red, &blue)?;
        Ok(RotatingInstance { red, blue, events })
    }

    pub fn red(&self) -> &[Point] {
        &self.red
    }

    pub fn blue(&self) -> &[Point] {
        &self.blue
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }
}

#[derive(Clone, Debug)]
pub enum StepOutcome {
    Bootstrapped,
    Swapped(Axis, usize, usize),
    Anchored(Vec<CandidateRect>),
}

/// Step-by-step driver of the rotational sweep.
pub struct RotatingSweep<'a> {
    instance: &'a RotatingInstance,
    order: KineticOrder,
    next: usize,
}

impl<'a> RotatingSweep<'a> {
    pub fn new(instance: &'a RotatingInstance) -> Self {
        RotatingSweep {
            instance,
            order: KineticOrder::after(&instance.blue, Direction::EAST),
            next: 0,
        }
    }

    pub fn order(&self) -> &KineticOrder {
        &self.order
    }

    /// Direction of the event processed last.
    pub fn current_dir(&self) -> Direction {
        self.next
            .checked_sub(1)
            .map_or(Direction::EAST, |i| self.instance.events[i].dir)
    }

    pub fn step(&mut self) -> Option<Result<(Event, StepOutcome)>> {
        let event = *self.instance.events.get(self.next)?;
        self.next += 1;
        let outcome = match event.kind {
            EventKind::Bootstrap => {
                self.order = KineticOrder::after(&self.instance.blue, event.dir);
                Ok(StepOutcome::Bootstrapped)
            }
            EventKind::XSwap(a, b) => self
                .order
                .apply_swap(Axis::X, a, b)
                .map(|_| StepOutcome::Swapped(Axis::X, a, b)),
            EventKind::YSwap(a, b) => self
                .order
                .apply_swap(Axis::Y, a, b)
                .map(|_| StepOutcome::Swapped(Axis::Y, a, b)),
            EventKind::Anchor { from, to } => Ok(StepOutcome::Anchored(anchored_candidates(
                &self.instance.red,
                &self.instance.blue,
                from,
                to,
                event.dir,
                &self.order,
            ))),
        };
        Some(outcome.map(|o| (event, o)))
    }
}

impl Iterator for RotatingSweep<'_> {
    type Item = Result<(Event, StepOutcome)>;

    fn next(&mut self) -> Option<Self::Item> {
        self.step()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepStats {
    pub candidates_enumerated: usize,
    pub events_processed: usize,
    pub anchor_events: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MrrSolution {
    pub rect: OrientedRect,
    /// `None` only for the blue-free short cut.
    pub support: Option<Support>,
    pub size: usize,
    pub stats: SweepStats,
}

/// Runs the full sweep and keeps the first candidate of maximum red count.
pub fn solve_mrr(instance: &RotatingInstance, counter: &dyn RangeCounter) -> Result<MrrSolution> {
    if instance.red.is_empty() {
        return Err(Error::EmptyRed);
    }
    if instance.blue.is_empty() {
        return Ok(MrrSolution {
            rect: OrientedRect::plane(),
            support: None,
            size: instance.red.len(),
            stats: SweepStats::default(),
        });
    }

    let mut stats = SweepStats::default();
    let mut best: Option<(CandidateRect, usize)> = None;
    for step in RotatingSweep::new(instance) {
        let (_, outcome) = step?;
        stats.events_processed += 1;
        if let StepOutcome::Anchored(cands) = outcome {
            stats.anchor_events += 1;
            stats.candidates_enumerated += cands.len();
            for c in cands {
                let size = counter.count_closed(&c.rect);
                if best.as_ref().is_none_or(|(_, s)| size > *s) {
                    best = Some((c, size));
                }
            }
        }
    }
    let (best, size) = best.expect("every anchor event yields a candidate");
    Ok(MrrSolution {
        rect: best.rect,
        support: Some(best.support),
        size,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::range_count::{count_open_interior, NaiveCounter};

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn solve(red: &[(i64, i64)], blue: &[(i64, i64)]) -> MrrSolution {
        let inst = RotatingInstance::new(pts(red), pts(blue)).unwrap();
        solve_mrr(&inst, &NaiveCounter::new(inst.red())).unwrap()
    }

    #[test]
    fn diagonal_beats_axis_parallel() {
        let s = solve(&[(0, 0), (10, 10)], &[(5, 6)]);
        assert_eq!(s.size, 2);
        assert_eq!(count_open_interior(&pts(&[(5, 6)]), &s.rect), 0);
    }

    #[test]
    fn no_blue_takes_everything() {
        let s = solve(&[(0, 0), (3, 1), (7, 9)], &[]);
        assert_eq!(s.size, 3);
        assert!(s.support.is_none());
    }

    #[test]
    fn empty_red_is_an_error() {
        let inst = RotatingInstance::new(vec![], pts(&[(1, 2)])).unwrap();
        assert!(matches!(
            solve_mrr(&inst, &NaiveCounter::new(&[])),
            Err(Error::EmptyRed)
        ));
    }

    #[test]
    fn collinear_rejected() {
        let err = RotatingInstance::new(pts(&[(0, 0), (2, 2)]), pts(&[(1, 1)])).unwrap_err();
        assert!(matches!(err, Error::GeneralPosition(_)));
        let err = RotatingInstance::new(pts(&[(0, 0)]), pts(&[(0, 0)])).unwrap_err();
        assert!(matches!(err, Error::EqualPoints(_)));
    }

    #[test]
    fn candidate_lower_bound() {
        let red = [(11, 7), (10, 11), (8, 12)];
        let blue = [(0, 2), (4, 10), (11, 0), (2, 5)];
        let s = solve(&red, &blue);
        let (n, m) = (red.len(), blue.len());
        assert!(s.stats.candidates_enumerated >= m * n + m * (m - 1) / 2);
        assert_eq!(s.stats.anchor_events, 2 * (m * n + m * (m - 1) / 2));
    }
}
