use std::collections::HashMap;
use std::time::Instant;

use crate::algebra::{FieldSpec, Matrix};
use crate::grassmann::{enumerate_idvecs, FerrersDiagram, IdentifyingVector};
use crate::rankmetric::{
    dimension_bound, gabidulin_mrd, lift, rank_lexicode, EntryOrder, FerrersDiagramCode, RankMetricError,
};

use super::{CellReport, CodeParams, SearchError, SearchReport, SubspaceCode};

/// Produces the rank-metric code placed in one cell.
pub trait SubcodeBuilder {
    fn build(
        &self,
        v: &IdentifyingVector,
        delta: usize,
        field: &FieldSpec,
    ) -> Result<FerrersDiagramCode, RankMetricError>;
}

/// A Gabidulin code for the full box and a rank lexicode everywhere else,
/// in the diagram's entry order unless `orders` has an entry for the cell.
#[derive(Clone, Debug, Default)]
pub struct DefaultBuilder {
    pub orders: HashMap<IdentifyingVector, EntryOrder>,
}

impl SubcodeBuilder for DefaultBuilder {
    fn build(
        &self,
        v: &IdentifyingVector,
        delta: usize,
        field: &FieldSpec,
    ) -> Result<FerrersDiagramCode, RankMetricError> {
        let d = FerrersDiagram::from_idvec(v);
        let (k, m) = (d.box_rows(), d.box_cols());
        if let Some(order) = self.orders.get(v) {
            return rank_lexicode(&d, delta, field, order);
        }
        if d == FerrersDiagram::full(k, m) && delta <= k.min(m) {
            return if k <= m {
                gabidulin_mrd(k, m, delta, field)
            } else {
                let t = gabidulin_mrd(m, k, delta, field)?;
                let words: Vec<Matrix> = t.words().iter().map(Matrix::transpose).collect();
                FerrersDiagramCode::new(field, d, delta, words)
            };
        }
        rank_lexicode(&d, delta, field, &EntryOrder::identity(d.size()))
    }
}

/// Greedy constant weight code: identifying vectors in diagram order, kept
/// when at Hamming distance at least `d` from all kept ones.
pub fn default_ml_idvecs(n: usize, k: usize, d: usize) -> Result<Vec<IdentifyingVector>, SearchError> {
    let mut out: Vec<IdentifyingVector> = Vec::new();
    for v in enumerate_idvecs(n, k)? {
        if out.iter().all(|u| u.hamming(&v) >= d) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Union of lifted rank-metric codes, one per identifying vector. No
/// distances between cells are checked: identifying vectors at Hamming
/// distance `d` or more already keep their cells that far apart.
pub fn ml_construction(
    params: &CodeParams,
    idvecs: &[IdentifyingVector],
    builder: &dyn SubcodeBuilder,
) -> Result<(SubspaceCode, SearchReport), SearchError> {
    let started = Instant::now();
    let (n, k, d) = (params.n(), params.k(), params.d());
    for v in idvecs {
        if v.len() != n || v.weight() != k {
            return Err(SearchError::Params(format!("identifying vector {v} is not of length {n} and weight {k}")));
        }
    }
    for (i, u) in idvecs.iter().enumerate() {
        for v in &idvecs[i + 1..] {
            if u.hamming(v) < d {
                return Err(SearchError::HammingTooSmall(*u, *v, u.hamming(v)));
            }
        }
    }
    let mut code = SubspaceCode::new(params.clone());
    let mut report = SearchReport::default();
    for v in idvecs {
        let rc = builder.build(v, params.delta(), params.field())?;
        let bound = dimension_bound(rc.diagram(), params.delta())?;
        match rc.dimension() {
            Some(dim) if dim == bound => {}
            Some(dim) => report.notes.push(format!("cell {v}: dimension {dim}, bound {bound}")),
            None => report.notes.push(format!("cell {v}: {} words, bound q^{bound}", rc.len())),
        }
        for s in lift(&rc, v)? {
            code.push_unchecked(s);
        }
        report.cells.push(CellReport { idvec: *v, size: rc.len(), seeded: 0 });
    }
    report.wall = started.elapsed();
    Ok((code, report))
}
