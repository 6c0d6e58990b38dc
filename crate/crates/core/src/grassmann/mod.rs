//! The Grassmannian `G_q(n, k)`: identifying vectors, Ferrers diagrams and
//! tableaux, the lexicographic order on subspaces, Schubert cells.

mod enumerate;
mod ferrers;
mod idvec;
mod subspace;

use std::cmp::Ordering;

use thiserror::Error;

use crate::algebra::{AlgebraError, FieldSpec};

pub use enumerate::{enumerate_idvecs, gaussian_binomial, CellIter, SchubertCell};
pub use ferrers::FerrersDiagram;
#[cfg(test)]
pub(crate) use idvec::all_of_weight;
pub use idvec::{IdentifyingVector, MAX_N};
pub use subspace::{echelon_skeleton, tableau_positions, Subspace, TableauEntries};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrassmannError {
    #[error("invalid identifying vector: {0}")]
    BadIdVec(String),
    #[error("invalid Ferrers diagram: {0}")]
    BadDiagram(String),
    #[error("matrix is not in reduced row echelon form with full rank")]
    NotRref,
    #[error("expected {expected} tableau entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("ambient dimension {0} exceeds the supported maximum")]
    TooLong(usize),
    #[error("invalid dimensions n={n}, k={k}")]
    BadDimensions { n: usize, k: usize },
    #[error("integer overflow")]
    Overflow,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub fn identifying_vector(s: &Subspace) -> IdentifyingVector {
    *s.idvec()
}

pub fn echelon_ferrers_diagram(v: &IdentifyingVector) -> FerrersDiagram {
    FerrersDiagram::from_idvec(v)
}

/// Inverse of [`echelon_ferrers_diagram`] for a diagram in the `k x (n-k)` box.
pub fn diagram_to_idvec(d: &FerrersDiagram, n: usize, k: usize) -> Result<IdentifyingVector, GrassmannError> {
    if d.box_rows() != k || d.box_cols() + k != n {
        return Err(GrassmannError::BadDiagram(format!("diagram does not fill a {k}x{} box", n.saturating_sub(k))));
    }
    Ok(d.to_idvec())
}

pub fn diagram_compare(a: &FerrersDiagram, b: &FerrersDiagram) -> Ordering {
    a.compare(b)
}

pub fn tableau_entries(s: &Subspace) -> TableauEntries {
    s.tableau_entries()
}

pub fn subspace_from_tableau(
    field: &FieldSpec,
    v: &IdentifyingVector,
    t: &TableauEntries,
) -> Result<Subspace, GrassmannError> {
    Subspace::from_tableau(field, v, t)
}

pub fn subspace_compare(a: &Subspace, b: &Subspace) -> Ordering {
    a.compare(b)
}

pub fn enumerate_cell(field: &FieldSpec, v: IdentifyingVector) -> SchubertCell {
    SchubertCell::new(field, v)
}

pub fn orthogonal_complement(s: &Subspace) -> Subspace {
    s.orthogonal_complement()
}
