use std::collections::HashSet;

use indexmap::IndexMap;

use crate::algebra::{FieldSpec, Matrix};
use crate::grassmann::{IdentifyingVector, Subspace, MAX_N};

use super::SearchError;

/// Parameters of an `(n, M, d, k)_q` constant dimension code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeParams {
    n: usize,
    k: usize,
    d: usize,
    field: FieldSpec,
}

impl CodeParams {
    pub fn new(n: usize, k: usize, d: usize, q: u32) -> Result<Self, SearchError> {
        let field = FieldSpec::new(q)?;
        Self::with_field(n, k, d, &field)
    }

    pub fn with_field(n: usize, k: usize, d: usize, field: &FieldSpec) -> Result<Self, SearchError> {
        if n == 0 || n > MAX_N {
            return Err(SearchError::Params(format!("n must be between 1 and {MAX_N}")));
        }
        if k > n {
            return Err(SearchError::Params(format!("k={k} exceeds n={n}")));
        }
        if d % 2 == 1 {
            return Err(SearchError::Params("d must be even".into()));
        }
        if d < 2 {
            return Err(SearchError::Params("d must be at least 2".into()));
        }
        if d > 2 * k {
            return Err(SearchError::Params(format!("d exceeds 2k (d={d}, k={k})")));
        }
        Ok(Self { n, k, d, field: field.clone() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn delta(&self) -> usize {
        self.d / 2
    }

    pub fn q(&self) -> u32 {
        self.field.size()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Parameters of the dual code, `k` replaced by `n - k`. The `d <= 2k`
    /// check is not repeated: for `d > 2(n-k)` the dual search still works
    /// and returns a single codeword.
    pub fn dual(&self) -> Self {
        Self { n: self.n, k: self.n - self.k, d: self.d, field: self.field.clone() }
    }

    /// Whether searches run on the dual parameters.
    pub fn needs_dual(&self) -> bool {
        self.k > self.n - self.k
    }
}

/// A constant dimension code kept as sub-codes, one per identifying
/// vector, in insertion order.
#[derive(Clone, Debug)]
pub struct SubspaceCode {
    params: CodeParams,
    subcodes: IndexMap<IdentifyingVector, Vec<Subspace>>,
}

impl SubspaceCode {
    pub fn new(params: CodeParams) -> Self {
        Self { params, subcodes: IndexMap::new() }
    }

    pub fn from_subspaces(params: CodeParams, words: impl IntoIterator<Item = Subspace>) -> Result<Self, SearchError> {
        let mut code = Self::new(params);
        for w in words {
            code.push(w)?;
        }
        Ok(code)
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    /// Appends `s` to the sub-code of its identifying vector.
    pub fn push(&mut self, s: Subspace) -> Result<(), SearchError> {
        if s.ambient() != self.params.n || s.dim() != self.params.k {
            return Err(SearchError::Codeword(format!(
                "expected a {}-dimensional subspace of F^{}, got dimension {} in F^{}",
                self.params.k,
                self.params.n,
                s.dim(),
                s.ambient()
            )));
        }
        if s.field() != self.params.field() {
            return Err(SearchError::Codeword("codeword over a different field".into()));
        }
        self.push_unchecked(s);
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, s: Subspace) {
        self.subcodes.entry(*s.idvec()).or_default().push(s);
    }

    pub fn len(&self) -> usize {
        self.subcodes.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.subcodes.is_empty()
    }

    pub fn subcodes(&self) -> &IndexMap<IdentifyingVector, Vec<Subspace>> {
        &self.subcodes
    }

    pub fn subcode(&self, v: &IdentifyingVector) -> &[Subspace] {
        self.subcodes.get(v).map_or(&[], Vec::as_slice)
    }

    /// `(identifying vector, size)` per sub-code, in order.
    pub fn cell_sizes(&self) -> Vec<(IdentifyingVector, usize)> {
        self.subcodes.iter().map(|(v, s)| (*v, s.len())).collect()
    }

    /// All codewords, sub-code by sub-code.
    pub fn iter(&self) -> impl Iterator<Item = &Subspace> {
        self.subcodes.values().flatten()
    }

    pub(crate) fn rref_set(&self) -> HashSet<Matrix> {
        self.iter().map(|s| s.rref().clone()).collect()
    }

    /// Whether the two codes hold the same codewords, in any order.
    pub fn same_set(&self, other: &Self) -> bool {
        self.len() == other.len() && self.rref_set() == other.rref_set()
    }
}

/// `{X^⊥ : X ∈ C}`, an `(n, M, d, n-k)_q` code.
pub fn dualize(c: &SubspaceCode) -> SubspaceCode {
    let mut out = SubspaceCode::new(c.params.dual());
    for s in c.iter() {
        out.push_unchecked(s.orthogonal_complement());
    }
    out
}
