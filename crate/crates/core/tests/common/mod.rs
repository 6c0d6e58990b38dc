#![allow(dead_code)]

use rand::Rng;
use sublex::algebra::{self, FieldSpec, Matrix};
use sublex::grassmann::Subspace;

/// Row space of a random `rows x n` matrix; its dimension may fall short.
pub fn random_span(rng: &mut impl Rng, f: &FieldSpec, n: usize, rows: usize) -> Subspace {
    let q = f.size() as u8;
    let data: Vec<u8> = (0..rows * n).map(|_| rng.gen_range(0..q)).collect();
    Subspace::from_generators(f, &Matrix::from_vec(rows, n, data).unwrap()).unwrap()
}

/// A uniformly chosen dimension, then a random subspace of exactly that
/// dimension.
pub fn random_subspace(rng: &mut impl Rng, f: &FieldSpec, n: usize) -> Subspace {
    let k = rng.gen_range(0..=n);
    random_of_dim(rng, f, n, k)
}

pub fn random_of_dim(rng: &mut impl Rng, f: &FieldSpec, n: usize, k: usize) -> Subspace {
    loop {
        let s = random_span(rng, f, n, k);
        if s.dim() == k {
            return s;
        }
    }
}

/// `dim(X ∩ Y)` by the Zassenhaus algorithm: reduce `[[X, X], [Y, 0]]`;
/// the rows whose left half vanishes span the intersection.
pub fn intersection_dim(x: &Subspace, y: &Subspace) -> usize {
    let n = x.ambient();
    let f = x.field();
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for r in x.rref().iter_rows() {
        rows.push(r.iter().chain(r).copied().collect());
    }
    for r in y.rref().iter_rows() {
        rows.push(r.iter().copied().chain(std::iter::repeat_n(0, n)).collect());
    }
    if rows.is_empty() {
        return 0;
    }
    let e = algebra::rref(f, &Matrix::from_rows(2 * n, &rows).unwrap());
    e.pivots.iter().filter(|&&p| p >= n).count()
}
