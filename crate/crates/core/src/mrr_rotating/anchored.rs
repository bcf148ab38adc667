//! Rectangles anchored by a pair of points on their bottom side.
//!
//! In the frame of the anchor direction the pair `s`, `t` lies on the line
//! `v = v(s)` with `u(s) < u(t)`. Heights `h = v - v(s)` are measured from
//! that line. Only the open upper half-plane is searched here; the event for
//! the opposite direction covers the other half.
//!
//! Let `B1` be the blue points with `h > 0` and `r_m` the lowest of them
//! strictly between `s` and `t` in u. No candidate can reach above `r_m`, so
//! only `B'`, the points of `B1` below `r_m`, can bound a left, right or
//! lower top side. Scanning `B'` outward from the pair, the left (right)
//! staircase keeps every point lower than all points seen before it. Every
//! maximal rectangle is then one of:
//!
//! * the rectangle topped by `r_m` (or unbounded above when `r_m` is absent),
//!   whose sides stop at the nearest staircase points;
//! * for each staircase point `t`, the rectangle of height `h(t)` whose sides
//!   stop at the first staircase point lower than `t` on either side.
//!
//! Both staircases descend outward, so the second family is produced by one
//! merge walk over the two lists in decreasing height.

use serde::{Deserialize, Serialize};

use crate::geom::{frame_coords, Direction, Point};
use crate::range_count::{Bound, OrientedRect};

use super::events::Site;
use super::kinetic::KineticOrder;

/// What pins each side of a candidate. `None` means unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Support {
    pub from: Site,
    pub to: Site,
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub top: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CandidateRect {
    pub rect: OrientedRect,
    pub support: Support,
}

#[derive(Clone, Copy, Debug)]
struct Stair {
    id: usize,
    u: i128,
    h: i128,
}

/// Maximal blue-empty rectangles above the segment `from → to`, whose
/// direction must be `dir`; `order` must be valid at `dir`.
pub fn anchored_candidates(
    red: &[Point],
    blue: &[Point],
    from: Site,
    to: Site,
    dir: Direction,
    order: &KineticOrder,
) -> Vec<CandidateRect> {
    let (us, vs) = frame_coords(from.point(red, blue), dir);
    let (ut, vt) = frame_coords(to.point(red, blue), dir);
    debug_assert!(us < ut && vs == vt, "anchor pair must lie on a line of direction {dir}");
    let anchor_ids = [from.blue_id(), to.blue_id()];
    let is_anchor = |id: usize| anchor_ids.contains(&Some(id));
    let coords = |id: usize| {
        let (u, v) = frame_coords(blue[id], dir);
        (u, v - vs)
    };

    // r_m: first point above the line in v-order whose u lies strictly
    // between the anchors
    let blue_anchor = anchor_ids.iter().flatten().next().copied().expect("one anchor is blue");
    let r_m = order.by()[order.pos_y(blue_anchor) + 1..]
        .iter()
        .map(|&id| (id, coords(id)))
        .find(|&(id, (u, h))| !is_anchor(id) && h > 0 && us < u && u < ut)
        .map(|(id, (_, h))| (id, h));
    let ceiling = r_m.map(|(_, h)| h);
    let admissible = |h: i128| h > 0 && ceiling.is_none_or(|c| h < c);

    let bx = order.bx();
    let left_end = bx.partition_point(|&id| coords(id).0 <= us);
    let right_start = bx.partition_point(|&id| coords(id).0 < ut);
    let staircase = |ids: &mut dyn Iterator<Item = &usize>| {
        let mut stairs: Vec<Stair> = Vec::new();
        for &id in ids {
            if is_anchor(id) {
                continue;
            }
            let (u, h) = coords(id);
            if admissible(h) && stairs.last().is_none_or(|s| h < s.h) {
                stairs.push(Stair { id, u, h });
            }
        }
        stairs
    };
    let left = staircase(&mut bx[..left_end].iter().rev());
    let right = staircase(&mut bx[right_start..].iter());

    let make = |l: Option<&Stair>, r: Option<&Stair>, top: Option<(usize, i128)>| {
        let rect = OrientedRect::new(
            dir,
            l.map_or(Bound::NegInf, |s| Bound::int(s.u)),
            r.map_or(Bound::PosInf, |s| Bound::int(s.u)),
            Bound::int(vs),
            top.map_or(Bound::PosInf, |(_, h)| Bound::int(vs + h)),
        )
        .expect("anchored rectangles have positive width and height");
        CandidateRect {
            rect,
            support: Support {
                from,
                to,
                left: l.map(|s| s.id),
                right: r.map(|s| s.id),
                top: top.map(|(id, _)| id),
            },
        }
    };

    let mut out = Vec::with_capacity(left.len() + right.len() + 1);
    out.push(make(left.first(), right.first(), r_m));
    let (mut i, mut j) = (0, 0);
    while i < left.len() || j < right.len() {
        let take_left = match (left.get(i), right.get(j)) {
            (Some(l), Some(r)) => l.h > r.h,
            (Some(_), None) => true,
            _ => false,
        };
        if take_left {
            let t = left[i];
            out.push(make(left.get(i + 1), right.get(j), Some((t.id, t.h))));
            i += 1;
        } else {
            let t = right[j];
            out.push(make(left.get(i), right.get(j + 1), Some((t.id, t.h))));
            j += 1;
        }
    }
    out
}
