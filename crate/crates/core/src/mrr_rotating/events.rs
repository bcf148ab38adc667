use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{critical_direction_x, critical_direction_y, Direction, Point};

/// A point of the instance: an index into the red or the blue list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "color", content = "index", rename_all = "lowercase")]
pub enum Site {
    Red(usize),
    Blue(usize),
}

impl Site {
    pub fn point(&self, red: &[Point], blue: &[Point]) -> Point {
        match *self {
            Site::Red(i) => red[i],
            Site::Blue(i) => blue[i],
        }
    }

    pub fn blue_id(&self) -> Option<usize> {
        match *self {
            Site::Blue(i) => Some(i),
            Site::Red(_) => None,
        }
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Red(i) => write!(f, "r{i}"),
            Site::Blue(i) => write!(f, "b{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn name(&self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
        }
    }
}

/// Variant order is the processing priority among events sharing a
/// direction. Swap pairs are stored with the smaller blue index first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventKind {
    /// Initial sort of both lists at 0°.
    Bootstrap,
    XSwap(usize, usize),
    YSwap(usize, usize),
    /// Enumerate rectangles whose bottom side runs from `from` to `to`; the
    /// event direction is that of `to - from`. At least one end is blue.
    Anchor { from: Site, to: Site },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Event {
    pub dir: Direction,
    pub kind: EventKind,
}

impl Event {
    fn key(&self) -> (Direction, EventKind) {
        (self.dir, self.kind)
    }
}

/// All events of a full turn, sorted by angle and then by kind.
///
/// Fails with `GeneralPosition` when two events share a direction, with one
/// exception that no input can avoid: a blue pair's y-swap always coincides
/// with the anchor event of the same pair, because both points sit on the
/// anchor line. No real event may sit at 0°, where the bootstrap sort runs.
pub fn build_events(red: &[Point], blue: &[Point]) -> Result<Vec<Event>> {
    let m = blue.len();
    let mut events = Vec::with_capacity(1 + 4 * m * m + 2 * m * red.len());
    events.push(Event {
        dir: Direction::EAST,
        kind: EventKind::Bootstrap,
    });

    for a in 0..m {
        for b in a + 1..m {
            let dx = critical_direction_x(blue[a], blue[b])?;
            let dy = critical_direction_y(blue[a], blue[b])?;
            for dir in [dx, dx.opposite()] {
                events.push(Event {
                    dir,
                    kind: EventKind::XSwap(a, b),
                });
            }
            for dir in [dy, dy.opposite()] {
                events.push(Event {
                    dir,
                    kind: EventKind::YSwap(a, b),
                });
            }
            push_anchor_pair(&mut events, Site::Blue(a), Site::Blue(b), red, blue)?;
        }
    }
    for p in 0..m {
        for q in 0..red.len() {
            push_anchor_pair(&mut events, Site::Blue(p), Site::Red(q), red, blue)?;
        }
    }

    events.sort_unstable_by_key(Event::key);
    check_distinct_directions(&events)?;
    Ok(events)
}

fn push_anchor_pair(events: &mut Vec<Event>, s: Site, t: Site, red: &[Point], blue: &[Point]) -> Result<()> {
    let dir = Direction::between(s.point(red, blue), t.point(red, blue))?;
    events.push(Event {
        dir,
        kind: EventKind::Anchor { from: s, to: t },
    });
    events.push(Event {
        dir: dir.opposite(),
        kind: EventKind::Anchor { from: t, to: s },
    });
    Ok(())
}

fn check_distinct_directions(events: &[Event]) -> Result<()> {
    let mut i = 0;
    while i < events.len() {
        let mut j = i + 1;
        while j < events.len() && events[j].dir == events[i].dir {
            j += 1;
        }
        let group = &events[i..j];
        let ok = match group {
            [_] => true,
            [Event {
                kind: EventKind::YSwap(a, b),
                ..
            }, Event {
                kind: EventKind::Anchor { from, to },
                ..
            }] => {
                let mut ends = [from.blue_id(), to.blue_id()];
                ends.sort();
                ends == [Some(*a), Some(*b)]
            }
            _ => false,
        };
        if !ok {
            return Err(Error::GeneralPosition(format!(
                "{} events share the direction {}: {:?}",
                group.len(),
                group[0].dir,
                group.iter().map(|e| e.kind).collect::<Vec<_>>()
            )));
        }
        i = j;
    }
    Ok(())
}
