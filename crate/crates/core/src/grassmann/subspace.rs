use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::algebra::{self, Element, FieldSpec, Matrix};

use super::ferrers::FerrersDiagram;
use super::idvec::{IdentifyingVector, MAX_N};
use super::GrassmannError;

/// Entries of a Ferrers tableaux form, in entry order (rightmost column
/// first, top to bottom within a column).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableauEntries(pub Vec<Element>);

impl TableauEntries {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Dot positions of `EF(v)` as absolute `(row, column)` matrix coordinates,
/// in entry order.
pub fn tableau_positions(v: &IdentifyingVector) -> Vec<(usize, usize)> {
    let zeros: Vec<usize> = v.zeros().collect();
    FerrersDiagram::from_idvec(v).entry_positions().into_iter().map(|(r, c)| (r, zeros[c])).collect()
}

/// The echelon Ferrers form of `v` with every dot set to zero.
pub fn echelon_skeleton(v: &IdentifyingVector) -> Matrix {
    let mut m = Matrix::zeros(v.weight(), v.len());
    for (r, p) in v.ones().enumerate() {
        m.set(r, p, 1);
    }
    m
}

/// A subspace of `F_q^n`, held as its unique RREF generator matrix.
#[derive(Clone)]
pub struct Subspace {
    field: FieldSpec,
    rref: Matrix,
    idvec: IdentifyingVector,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.rref == other.rref && self.field == other.field
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rref.hash(state);
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(q={}, {:?})", self.field.size(), self.rref)
    }
}

impl Subspace {
    /// The row space of `generators`.
    pub fn from_generators(field: &FieldSpec, generators: &Matrix) -> Result<Self, GrassmannError> {
        generators.check_entries(field)?;
        if generators.cols() > MAX_N {
            return Err(GrassmannError::TooLong(generators.cols()));
        }
        let e = algebra::rref(field, generators);
        let mut m = e.matrix;
        m.truncate_rows(e.rank);
        let idvec = IdentifyingVector::from_positions(m.cols(), &e.pivots)?;
        Ok(Self { field: field.clone(), rref: m, idvec })
    }

    /// Wraps a matrix that must already be in RREF with no zero rows.
    pub fn from_rref(field: &FieldSpec, m: Matrix) -> Result<Self, GrassmannError> {
        m.check_entries(field)?;
        if m.cols() > MAX_N {
            return Err(GrassmannError::TooLong(m.cols()));
        }
        let e = algebra::rref(field, &m);
        if e.rank != m.rows() || e.matrix != m {
            return Err(GrassmannError::NotRref);
        }
        let idvec = IdentifyingVector::from_positions(m.cols(), &e.pivots)?;
        Ok(Self { field: field.clone(), rref: m, idvec })
    }

    pub(crate) fn from_parts(field: &FieldSpec, rref: Matrix, idvec: IdentifyingVector) -> Self {
        debug_assert_eq!(rref.rows(), idvec.weight());
        Self { field: field.clone(), rref, idvec }
    }

    /// The zero subspace of `F_q^n`.
    pub fn zero(field: &FieldSpec, n: usize) -> Self {
        Self {
            field: field.clone(),
            rref: Matrix::zeros(0, n),
            idvec: IdentifyingVector::from_bits(n, 0).expect("n fits"),
        }
    }

    /// Substitutes `entries` into the dots of `EF(v)`.
    pub fn from_tableau(
        field: &FieldSpec,
        v: &IdentifyingVector,
        entries: &TableauEntries,
    ) -> Result<Self, GrassmannError> {
        let positions = tableau_positions(v);
        if positions.len() != entries.len() {
            return Err(GrassmannError::LengthMismatch { expected: positions.len(), found: entries.len() });
        }
        if let Some(&x) = entries.0.iter().find(|&&x| u32::from(x) >= field.size()) {
            return Err(algebra::AlgebraError::EntryOutOfRange { value: x, q: field.size() }.into());
        }
        let mut m = echelon_skeleton(v);
        for (&(r, c), &x) in positions.iter().zip(&entries.0) {
            m.set(r, c, x);
        }
        Ok(Self { field: field.clone(), rref: m, idvec: *v })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rref(&self) -> &Matrix {
        &self.rref
    }

    pub fn idvec(&self) -> &IdentifyingVector {
        &self.idvec
    }

    pub fn diagram(&self) -> FerrersDiagram {
        FerrersDiagram::from_idvec(&self.idvec)
    }

    /// Ambient dimension `n`.
    pub fn ambient(&self) -> usize {
        self.rref.cols()
    }

    pub fn dim(&self) -> usize {
        self.rref.rows()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.idvec.ones().collect()
    }

    pub fn tableau_entries(&self) -> TableauEntries {
        TableauEntries(tableau_positions(&self.idvec).into_iter().map(|(r, c)| self.rref.get(r, c)).collect())
    }

    /// The order on subspaces of equal dimension: diagrams first, then the
    /// tableau entry vectors lexicographically.
    pub fn compare(&self, other: &Self) -> Ordering {
        self.diagram().compare(&other.diagram()).then_with(|| self.tableau_entries().cmp(&other.tableau_entries()))
    }

    /// Null space of the generator matrix under the standard dot product.
    pub fn orthogonal_complement(&self) -> Subspace {
        let n = self.ambient();
        let f = &self.field;
        let pivots = self.pivots();
        let free: Vec<usize> = self.idvec.zeros().collect();
        let mut basis = Matrix::zeros(free.len(), n);
        for (i, &c) in free.iter().enumerate() {
            basis.set(i, c, 1);
            for (r, &p) in pivots.iter().enumerate() {
                basis.set(i, p, f.neg(self.rref.get(r, c)));
            }
        }
        Subspace::from_generators(f, &basis).expect("entries are field elements")
    }

    /// Whether `x` lies in this subspace.
    pub fn contains(&self, x: &[Element]) -> bool {
        let row = Matrix::from_rows(self.ambient(), &[x.to_vec()]).expect("length n");
        let s = algebra::stack(&self.rref, &row).expect("same width");
        algebra::rank(&self.field, &s) == self.dim()
    }
}
