//! Subspace distance `d_S(X, Y) = dim X + dim Y - 2 dim(X ∩ Y)`.
//!
//! Three routes are provided. [`distance_rank`] stacks the two generator
//! matrices and takes a rank; it is kept as the reference. [`distance_fast`]
//! splits the work by identifying vectors: the Hamming distance of `v(X)` and
//! `v(Y)` plus twice the rank of a `|μ| x |ρ|` matrix, where `μ` and `ρ` are
//! the common ones and common zeros of the identifying vectors.
//! [`distance_same_idvec`] is the special case `v(X) = v(Y)`.

pub(crate) mod kernel;

use thiserror::Error;

use crate::algebra::{self, Matrix};
use crate::grassmann::{IdentifyingVector, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistanceError {
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspaces live over different fields")]
    FieldMismatch,
    #[error("identifying vectors differ: {0} vs {1}")]
    IdVecMismatch(IdentifyingVector, IdentifyingVector),
}

fn check_pair(x: &Subspace, y: &Subspace) -> Result<(), DistanceError> {
    if x.ambient() != y.ambient() {
        return Err(DistanceError::AmbientMismatch(x.ambient(), y.ambient()));
    }
    if x.field() != y.field() {
        return Err(DistanceError::FieldMismatch);
    }
    Ok(())
}

pub fn hamming_distance(u: &IdentifyingVector, v: &IdentifyingVector) -> Result<usize, DistanceError> {
    if u.len() != v.len() {
        return Err(DistanceError::AmbientMismatch(u.len(), v.len()));
    }
    Ok(u.hamming(v))
}

/// Row and column bookkeeping for the fast distance formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuSplit {
    /// Common ones of `v(X)` and `v(Y)`.
    pub mu: Vec<usize>,
    /// Common zeros of `v(X)` and `v(Y)`.
    pub rho: Vec<usize>,
    /// Rows of `RE(X)` with their pivot in `μ`.
    pub x_mu: Matrix,
    pub x_mu_c: Matrix,
    pub y_mu: Matrix,
    pub y_mu_c: Matrix,
}

pub fn mu_split(x: &Subspace, y: &Subspace) -> Result<MuSplit, DistanceError> {
    check_pair(x, y)?;
    let (vx, vy) = (x.idvec(), y.idvec());
    let n = x.ambient();
    let mu: Vec<usize> = (0..n).filter(|&i| vx.get(i) && vy.get(i)).collect();
    let rho: Vec<usize> = (0..n).filter(|&i| !vx.get(i) && !vy.get(i)).collect();
    let split = |s: &Subspace, other: &IdentifyingVector| {
        let (mut inside, mut outside) = (Vec::new(), Vec::new());
        for (r, p) in s.idvec().ones().enumerate() {
            if other.get(p) {
                inside.push(r);
            } else {
                outside.push(r);
            }
        }
        (s.rref().select_rows(&inside), s.rref().select_rows(&outside))
    };
    let (x_mu, x_mu_c) = split(x, vy);
    let (y_mu, y_mu_c) = split(y, vx);
    Ok(MuSplit { mu, rho, x_mu, x_mu_c, y_mu, y_mu_c })
}

/// Rows of `RE(RE(X) * other_mu_c)` whose leading one sits in a column of `mu`.
pub fn tilde_mu(x: &Subspace, other_mu_c: &Matrix, mu: &[usize]) -> Matrix {
    let stacked = algebra::stack(x.rref(), other_mu_c).expect("same ambient dimension");
    let e = algebra::rref(x.field(), &stacked);
    let rows: Vec<usize> = e.pivots.iter().enumerate().filter(|(_, p)| mu.contains(p)).map(|(r, _)| r).collect();
    e.matrix.select_rows(&rows)
}

/// `2 rank(RE(X) * RE(Y)) - dim X - dim Y`.
pub fn distance_rank(x: &Subspace, y: &Subspace) -> Result<usize, DistanceError> {
    check_pair(x, y)?;
    let stacked = algebra::stack(x.rref(), y.rref()).expect("same ambient dimension");
    let r = algebra::rank(x.field(), &stacked);
    Ok(2 * r - x.dim() - y.dim())
}

/// `d_H(v(X), v(Y)) + 2 rank(X̃_μ - Ỹ_μ)`, with the rank taken over the
/// `ρ` columns only (the difference vanishes elsewhere).
pub fn distance_fast(x: &Subspace, y: &Subspace) -> Result<usize, DistanceError> {
    let split = mu_split(x, y)?;
    let dh = x.idvec().hamming(y.idvec());
    if split.mu.is_empty() || split.rho.is_empty() {
        return Ok(dh);
    }
    let xt = tilde_mu(x, &split.y_mu_c, &split.mu);
    let yt = tilde_mu(y, &split.x_mu_c, &split.mu);
    let diff = algebra::mat_sub(x.field(), &xt, &yt).expect("both are |mu| x n");
    let r = algebra::rank(x.field(), &diff.select_cols(&split.rho));
    Ok(dh + 2 * r)
}

/// `2 rank(RE(X) - RE(Y))`, valid when `v(X) = v(Y)`.
pub fn distance_same_idvec(x: &Subspace, y: &Subspace) -> Result<usize, DistanceError> {
    check_pair(x, y)?;
    if x.idvec() != y.idvec() {
        return Err(DistanceError::IdVecMismatch(*x.idvec(), *y.idvec()));
    }
    let diff = algebra::mat_sub(x.field(), x.rref(), y.rref()).expect("same shape");
    Ok(2 * algebra::rank(x.field(), &diff))
}

/// `d_H(v(X), v(Y))`, never more than the subspace distance.
pub fn distance_lower_bound(x: &Subspace, y: &Subspace) -> Result<usize, DistanceError> {
    check_pair(x, y)?;
    Ok(x.idvec().hamming(y.idvec()))
}

/// Same-cell shortcut when the identifying vectors agree, the fast formula
/// otherwise.
pub fn distance(x: &Subspace, y: &Subspace) -> Result<usize, DistanceError> {
    check_pair(x, y)?;
    if x.idvec() == y.idvec() {
        distance_same_idvec(x, y)
    } else {
        distance_fast(x, y)
    }
}
