//! Exact solvers for two bichromatic problems on integer points.
//!
//! * Maximum red rectangle: given red and blue points, find a rectangle
//!   (axis-parallel in [`mrr_axis`], any orientation in [`mrr_rotating`])
//!   containing as many red points as possible and no blue point in its
//!   interior.
//! * Maximum coloring ([`maxcol`]): color one point of each given pair red
//!   and the other blue so that some open halfplane holds as many reds as
//!   possible and no blue.
//!
//! All predicates are exact: coordinates are bounded integers, and derived
//! quantities are `i128` or rationals over `i128`. [`oracles`] holds
//! brute-force references used by the tests and by `bichrome verify`.
//!
//! ```
//! use bichrome::geom::Point;
//! use bichrome::mrr_rotating::{solve_mrr, RotatingInstance};
//! use bichrome::range_count::NaiveCounter;
//!
//! let red = vec![Point::new(0, 0), Point::new(10, 10)];
//! let blue = vec![Point::new(5, 6)];
//! let inst = RotatingInstance::new(red, blue)?;
//! let best = solve_mrr(&inst, &NaiveCounter::new(inst.red()))?;
//! assert_eq!(best.size, 2);
//! # Ok::<(), bichrome::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod geom;
pub mod harness;
pub mod maxcol;
pub mod mrr_axis;
pub mod mrr_rotating;
pub mod oracles;
pub mod range_count;

pub use error::{Error, Result};
pub use geom::{Direction, Line, Point, Rational};
