//! Constant dimension subspace codes in the Grassmannian `G_q(n, k)`:
//! lexicodes over the Ferrers tableaux order, the multilevel construction,
//! lexicodes with a rank-metric seed, and an exact verifier.

pub mod algebra;
pub mod distance;
pub mod grassmann;
pub mod io;
pub mod rankmetric;
pub mod search;
