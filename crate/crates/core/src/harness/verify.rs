//! Solver against oracle on seeded random instances.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::oracles::{oracle_axis_mrr, oracle_maxcol, oracle_mrr};
use crate::range_count::CounterKind;

use super::gen::{gen_instance, GenParams};
use super::io::{InstanceFile, Problem};
use super::solve;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub index: usize,
    pub seed: u64,
    pub solver: usize,
    pub oracle: usize,
    /// Objectives agree and the certificate re-validates.
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub problem: Problem,
    pub count: usize,
    pub mismatches: usize,
    pub cases: Vec<CaseReport>,
}

pub fn oracle_objective(problem: Problem, instance: &InstanceFile) -> Result<usize> {
    match problem {
        Problem::Mrr => {
            let m = instance.as_mrr()?;
            oracle_mrr(&m.red, &m.blue)
        }
        Problem::MrrAxis => {
            let m = instance.as_mrr()?;
            oracle_axis_mrr(&m.red, &m.blue)
        }
        Problem::MaxCol => {
            let pairs: Vec<_> = instance.as_maxcol()?.pairs.iter().map(|&[a, b]| (a, b)).collect();
            oracle_maxcol(&pairs)
        }
    }
}

fn run_case(problem: Problem, index: usize, seed: u64, params: GenParams, counter: CounterKind) -> Result<CaseReport> {
    let instance = gen_instance(GenParams { seed, ..params })?;
    let sol = solve(problem, &instance, counter)?;
    let oracle = oracle_objective(problem, &instance)?;
    let valid = sol.validate(&instance);
    Ok(CaseReport {
        index,
        seed,
        solver: sol.objective,
        oracle,
        ok: sol.objective == oracle && valid.is_ok(),
        error: valid.err().map(|e| e.to_string()),
    })
}

/// Case `i` uses seed `seed + i`. Cases run in parallel; the report lists
/// them by index.
pub fn verify(params: GenParams, count: usize, counter: CounterKind) -> Result<VerifyReport> {
    let cases = (0..count)
        .into_par_iter()
        .map(|i| run_case(params.problem, i, params.seed.wrapping_add(i as u64), params, counter))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        problem: params.problem,
        count,
        mismatches: cases.iter().filter(|c| !c.ok).count(),
        cases,
    })
}
