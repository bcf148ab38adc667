//! File formats, instance generation, rendering and randomized
//! verification, shared by the command-line tool and the examples.

mod gen;
mod io;
mod render;
mod verify;

pub use gen::{gen_instance, GenParams};
pub use io::{
    Certificate, ColoredPoint, InstanceFile, MaxColInstanceFile, MrrInstanceFile, Problem, SolutionFile, Stats,
};
pub use render::render_svg;
pub use verify::{oracle_objective, verify, CaseReport, VerifyReport};

use std::time::Instant;

use crate::error::Result;
use crate::maxcol::solve_maxcol;
use crate::mrr_axis::{solve_axis_mrr, AxisInstance};
use crate::mrr_rotating::{solve_mrr, RotatingInstance};
use crate::range_count::{build_counter, CounterKind};

/// Validates `instance` for `problem`, solves it and wraps the result.
pub fn solve(problem: Problem, instance: &InstanceFile, counter: CounterKind) -> Result<SolutionFile> {
    let start = Instant::now();
    match problem {
        Problem::Mrr => {
            let m = instance.as_mrr()?;
            let inst = RotatingInstance::new(m.red.clone(), m.blue.clone())?;
            let s = solve_mrr(&inst, build_counter(counter, inst.red()).as_ref())?;
            let stats = Stats {
                candidates_enumerated: Some(s.stats.candidates_enumerated),
                events_processed: Some(s.stats.events_processed),
                ..Stats::default()
            };
            Ok(SolutionFile::rectangle(problem, s.size, s.rect, s.support, stats.with_time(start.elapsed())))
        }
        Problem::MrrAxis => {
            let m = instance.as_mrr()?;
            let inst = AxisInstance::new(m.red.clone(), m.blue.clone())?;
            let s = solve_axis_mrr(&inst, build_counter(counter, inst.red()).as_ref())?;
            let stats = Stats {
                candidates_enumerated: Some(s.candidates),
                ..Stats::default()
            };
            Ok(SolutionFile::rectangle(problem, s.size, s.rect, None, stats.with_time(start.elapsed())))
        }
        Problem::MaxCol => {
            let inst = instance.as_maxcol()?.to_instance()?;
            let cert = solve_maxcol(&inst)?;
            Ok(SolutionFile::coloring(&inst, &cert, Stats::default().with_time(start.elapsed())))
        }
    }
}
