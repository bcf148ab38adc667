use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geom::{frame_coords, Direction, Point};

use super::events::Axis;

/// Blue points sorted by u (`bx`) and by v (`by`) in the current frame,
/// maintained across the sweep by adjacent swaps only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KineticOrder {
    bx: Vec<usize>,
    by: Vec<usize>,
    pos_x: Vec<usize>,
    pos_y: Vec<usize>,
}

impl KineticOrder {
    /// The orders that hold for frames just counter-clockwise of `dir`.
    ///
    /// Rotating the frame by `dθ` changes u by `v·dθ` and v by `-u·dθ`, so
    /// ties at `dir` are broken by v for `bx` and by decreasing u for `by`.
    pub fn after(blue: &[Point], dir: Direction) -> Self {
        let coords: Vec<(i128, i128)> = blue.iter().map(|p| frame_coords(*p, dir)).collect();
        let mut bx: Vec<usize> = (0..blue.len()).collect();
        let mut by = bx.clone();
        bx.sort_by(|&a, &b| cmp_after_x(coords[a], coords[b]).then(a.cmp(&b)));
        by.sort_by(|&a, &b| cmp_after_y(coords[a], coords[b]).then(a.cmp(&b)));
        let mut order = KineticOrder {
            pos_x: vec![0; blue.len()],
            pos_y: vec![0; blue.len()],
            bx,
            by,
        };
        order.reindex();
        order
    }

    fn reindex(&mut self) {
        for (i, &id) in self.bx.iter().enumerate() {
            self.pos_x[id] = i;
        }
        for (i, &id) in self.by.iter().enumerate() {
            self.pos_y[id] = i;
        }
    }

    pub fn bx(&self) -> &[usize] {
        &self.bx
    }

    pub fn by(&self) -> &[usize] {
        &self.by
    }

    pub fn pos_x(&self, id: usize) -> usize {
        self.pos_x[id]
    }

    pub fn pos_y(&self, id: usize) -> usize {
        self.pos_y[id]
    }

    /// Exchanges two blue points that must be neighbours in the list.
    /// A non-adjacent pair means the general-position contract was broken;
    /// the lists are left untouched.
    pub fn apply_swap(&mut self, axis: Axis, a: usize, b: usize) -> Result<()> {
        let (list, pos) = match axis {
            Axis::X => (&mut self.bx, &mut self.pos_x),
            Axis::Y => (&mut self.by, &mut self.pos_y),
        };
        let (pa, pb) = (pos[a], pos[b]);
        if pa.abs_diff(pb) != 1 {
            return Err(Error::AdjacencyViolation {
                axis: axis.name(),
                a,
                b,
            });
        }
        list.swap(pa, pb);
        pos[a] = pb;
        pos[b] = pa;
        Ok(())
    }
}

fn cmp_after_x(a: (i128, i128), b: (i128, i128)) -> Ordering {
    a.0.cmp(&b.0).then(a.1.cmp(&b.1))
}

fn cmp_after_y(a: (i128, i128), b: (i128, i128)) -> Ordering {
    a.1.cmp(&b.1).then(b.0.cmp(&a.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(ids: &[usize]) -> KineticOrder {
        let mut o = KineticOrder {
            bx: ids.to_vec(),
            by: ids.to_vec(),
            pos_x: vec![0; ids.len()],
            pos_y: vec![0; ids.len()],
        };
        o.reindex();
        o
    }

    #[test]
    fn swap_adjacent() {
        let mut o = order(&[0, 1, 2]);
        o.apply_swap(Axis::X, 0, 1).unwrap();
        assert_eq!(o.bx(), &[1, 0, 2]);
        assert_eq!(o.pos_x(0), 1);
        assert_eq!(o.by(), &[0, 1, 2]);
    }

    #[test]
    fn swap_non_adjacent_fails() {
        let mut o = order(&[0, 2, 1]);
        let err = o.apply_swap(Axis::Y, 0, 1).unwrap_err();
        assert!(matches!(err, Error::AdjacencyViolation { axis: "y", .. }));
        assert_eq!(o.by(), &[0, 2, 1]);
    }

    #[test]
    fn tie_break_matches_a_slightly_rotated_frame() {
        // (0,0) and (1,2) tie in v at their own direction (1,2)
        let blue = [Point::new(0, 0), Point::new(1, 2)];
        let at = Direction::new(1, 2).unwrap();
        let later = Direction::new(1000, 2001).unwrap();
        assert!(later > at);
        let o = KineticOrder::after(&blue, at);
        let fresh = KineticOrder::after(&blue, later);
        assert_eq!(o.by(), fresh.by());
        assert_eq!(o.bx(), fresh.bx());
    }
}
