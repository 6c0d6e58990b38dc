//! Rank-metric codes shaped by Ferrers diagrams, and the lifting that turns
//! them into sub-codes of one Schubert cell.

mod gabidulin;
mod lexicode;

pub use gabidulin::{gabidulin_mrd, LinearizedPolynomial};
pub use lexicode::{rank_lexicode, EntryOrder};

use std::collections::HashSet;

use thiserror::Error;

use crate::algebra::{self, AlgebraError, FieldSpec, Matrix};
use crate::grassmann::{echelon_skeleton, FerrersDiagram, IdentifyingVector, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RankMetricError {
    #[error("matrix shapes differ: {0:?} vs {1:?}")]
    ShapeMismatch((usize, usize), (usize, usize)),
    #[error("minimum rank distance must be at least 1")]
    BadDelta,
    #[error("need delta <= k <= m, got k={k}, m={m}, delta={delta}")]
    BadMrdParams { k: usize, m: usize, delta: usize },
    #[error("code would have more than {0} words")]
    TooLarge(u64),
    #[error("word has a nonzero entry outside the diagram at ({0}, {1})")]
    OutsideDiagram(usize, usize),
    #[error("code diagram does not match the identifying vector {0}")]
    DiagramMismatch(IdentifyingVector),
    #[error("bad entry order: {0}")]
    BadOrder(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Upper limit on the number of words any constructor materializes.
pub const MAX_WORDS: u64 = 1 << 24;

/// `rank(A - B)`.
pub fn rank_distance(f: &FieldSpec, a: &Matrix, b: &Matrix) -> Result<usize, RankMetricError> {
    if a.shape() != b.shape() {
        return Err(RankMetricError::ShapeMismatch(a.shape(), b.shape()));
    }
    let diff = algebra::mat_sub(f, a, b)?;
    Ok(algebra::rank(f, &diff))
}

/// Upper bound on the dimension of a linear rank-metric code with minimum
/// distance `delta` whose words are supported on `d`: the minimum over
/// `0 <= i < delta` of the number of dots outside the top `i` rows and the
/// rightmost `delta - 1 - i` columns.
pub fn dimension_bound(d: &FerrersDiagram, delta: usize) -> Result<usize, RankMetricError> {
    if delta == 0 {
        return Err(RankMetricError::BadDelta);
    }
    Ok((0..delta)
        .map(|i| d.cols().iter().skip(delta - 1 - i).map(|&c| c.saturating_sub(i)).sum::<usize>())
        .min()
        .expect("delta >= 1"))
}

/// A rank-metric code whose words are `k x (n-k)` matrices supported on a
/// Ferrers diagram.
#[derive(Clone, Debug)]
pub struct FerrersDiagramCode {
    field: FieldSpec,
    diagram: FerrersDiagram,
    delta: usize,
    words: Vec<Matrix>,
}

impl FerrersDiagramCode {
    /// Checks shape and support; the distance claim is checked by
    /// [`FerrersDiagramCode::min_distance`], not here.
    pub fn new(
        field: &FieldSpec,
        diagram: FerrersDiagram,
        delta: usize,
        words: Vec<Matrix>,
    ) -> Result<Self, RankMetricError> {
        let shape = (diagram.box_rows(), diagram.box_cols());
        for w in &words {
            if w.shape() != shape {
                return Err(RankMetricError::ShapeMismatch(shape, w.shape()));
            }
            w.check_entries(field)?;
            for r in 0..shape.0 {
                for c in 0..shape.1 {
                    if w.get(r, c) != 0 && !diagram.contains(r, c) {
                        return Err(RankMetricError::OutsideDiagram(r, c));
                    }
                }
            }
        }
        Ok(Self { field: field.clone(), diagram, delta, words })
    }

    pub(crate) fn from_parts(field: &FieldSpec, diagram: FerrersDiagram, delta: usize, words: Vec<Matrix>) -> Self {
        Self { field: field.clone(), diagram, delta, words }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn diagram(&self) -> &FerrersDiagram {
        &self.diagram
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn words(&self) -> &[Matrix] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Matrix> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Exhaustive minimum pairwise rank distance, `None` below two words.
    pub fn min_distance(&self) -> Option<usize> {
        let mut best = None;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                let d = rank_distance(&self.field, a, b).expect("same shape");
                best = Some(best.map_or(d, |x: usize| x.min(d)));
            }
        }
        best
    }

    /// Whether `A + B` is a word for every pair of words.
    pub fn is_additively_closed(&self) -> bool {
        let set: HashSet<&Matrix> = self.words.iter().collect();
        self.words.iter().all(|a| {
            self.words.iter().all(|b| {
                let s = algebra::mat_add(&self.field, a, b).expect("same shape");
                set.contains(&s)
            })
        })
    }

    /// `log_q |C|` when the size is a power of `q`.
    pub fn dimension(&self) -> Option<usize> {
        let q = self.field.size() as usize;
        let mut n = self.words.len();
        let mut e = 0;
        while n > 1 && n.is_multiple_of(q) {
            n /= q;
            e += 1;
        }
        (n == 1).then_some(e)
    }
}

fn check_diagram(d: &FerrersDiagram, v: &IdentifyingVector) -> Result<(), RankMetricError> {
    if FerrersDiagram::from_idvec(v) != *d {
        return Err(RankMetricError::DiagramMismatch(*v));
    }
    Ok(())
}

/// Writes one word into the dots of `EF(v)`.
pub fn lift_word(field: &FieldSpec, v: &IdentifyingVector, word: &Matrix) -> Result<Subspace, RankMetricError> {
    let d = FerrersDiagram::from_idvec(v);
    if word.shape() != (d.box_rows(), d.box_cols()) {
        return Err(RankMetricError::ShapeMismatch((d.box_rows(), d.box_cols()), word.shape()));
    }
    let zeros: Vec<usize> = v.zeros().collect();
    let mut m = echelon_skeleton(v);
    for (r, c) in d.entry_positions() {
        m.set(r, zeros[c], word.get(r, c));
    }
    Ok(Subspace::from_parts(field, m, *v))
}

/// Lifts every word of `c` into the Schubert cell of `v`.
pub fn lift(c: &FerrersDiagramCode, v: &IdentifyingVector) -> Result<Vec<Subspace>, RankMetricError> {
    check_diagram(&c.diagram, v)?;
    c.words.iter().map(|w| lift_word(&c.field, v, w)).collect()
}

/// `R(X)`: the columns of `RE(X)` indexed by the zeros of `v(X)`.
pub fn unlift(s: &Subspace) -> Matrix {
    let zeros: Vec<usize> = s.idvec().zeros().collect();
    s.rref().select_cols(&zeros)
}
