//! Code constructions: the plain lexicode, the multilevel construction and
//! the lexicode with a seed, plus an independent verifier.

mod code;
mod engine;
mod ml;
mod report;
mod seeded;
mod verify;

pub use code::{dualize, CodeParams, SubspaceCode};
pub use ml::{default_ml_idvecs, ml_construction, DefaultBuilder, SubcodeBuilder};
pub use report::{CellProgress, CellReport, ProgressFn, SearchOptions, SearchReport};
pub use seeded::{lexicode_with_seed, prune_by_first_seed, prune_by_second_seed, second_seed_idvec, SeedConfig};
pub use verify::{verify, verify_with_workers, Verification, Witness};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::distance::kernel::{with_kernel, Kernel};
use crate::grassmann::{enumerate_idvecs, tableau_positions, GrassmannError, IdentifyingVector};
use crate::rankmetric::RankMetricError;

use engine::Sweep;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("invalid codeword: {0}")]
    Codeword(String),
    #[error("identifying vectors {0} and {1} are at Hamming distance {2}, below d")]
    HammingTooSmall(IdentifyingVector, IdentifyingVector, usize),
    #[error("seed does not match the parameters: {0}")]
    SeedMismatch(String),
    #[error("seed has minimum distance {0}, below d")]
    SeedFailsVerify(usize, Box<Witness>),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    RankMetric(#[from] RankMetricError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Greedy code over all identifying vectors in diagram order and, within a
/// cell, all fillings in tableau order.
pub fn lexicode(params: &CodeParams, opts: &SearchOptions) -> Result<(SubspaceCode, SearchReport), SearchError> {
    if params.needs_dual() {
        let (c, mut r) = lexicode(&params.dual(), opts)?;
        r.dualized = true;
        let c = dualize(&c);
        r.cells = cell_reports(&c);
        return Ok((c, r));
    }
    Ok(with_kernel!(params.field(), k => run_lexicode(k, params, opts)))
}

fn run_lexicode<K: Kernel>(kernel: K, params: &CodeParams, opts: &SearchOptions) -> (SubspaceCode, SearchReport) {
    let mut sweep = Sweep::new(kernel, SubspaceCode::new(params.clone()), opts);
    for v in enumerate_idvecs(params.n(), params.k()).expect("valid params") {
        sweep.sweep_cell(&v, &tableau_positions(&v), None);
    }
    sweep.finish()
}

pub(crate) fn cell_reports(c: &SubspaceCode) -> Vec<CellReport> {
    c.cell_sizes().into_iter().map(|(idvec, size)| CellReport { idvec, size, seeded: 0 }).collect()
}
