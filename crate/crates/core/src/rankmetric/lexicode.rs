//! Greedy rank-metric codes on a Ferrers diagram, with a configurable order
//! of significance on the dots.

use smallvec::SmallVec;

use crate::algebra::{self, Element, FieldSpec, Matrix};
use crate::grassmann::FerrersDiagram;

use super::{rank_distance, FerrersDiagramCode, RankMetricError};

/// Upper limit on the number of fillings [`rank_lexicode`] walks through.
pub const MAX_FILLINGS: u64 = 1 << 28;

/// Order of significance on the dots of a diagram. `order[t]` is the index,
/// in the diagram's entry order, of the `t`-th most significant dot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryOrder {
    order: Vec<usize>,
}

impl EntryOrder {
    /// The diagram's own entry order.
    pub fn identity(size: usize) -> Self {
        Self { order: (0..size).collect() }
    }

    pub fn from_order(order: Vec<usize>) -> Result<Self, RankMetricError> {
        let mut seen = vec![false; order.len()];
        for &i in &order {
            if i >= order.len() || std::mem::replace(&mut seen[i], true) {
                return Err(RankMetricError::BadOrder(format!("{order:?} is not a permutation of 0..{}", order.len())));
            }
        }
        Ok(Self { order })
    }

    /// Reads a grid of labels `1..=|F|`, one row of the diagram per line,
    /// label 1 the most significant dot. Row `r` lists the dots of that row
    /// from left to right.
    pub fn from_grid(d: &FerrersDiagram, grid: &[Vec<usize>]) -> Result<Self, RankMetricError> {
        let lens = d.row_lengths();
        if grid.len() != lens.len() {
            return Err(RankMetricError::BadOrder(format!("expected {} rows, found {}", lens.len(), grid.len())));
        }
        let width = d.box_cols();
        let index_of: std::collections::HashMap<(usize, usize), usize> =
            d.entry_positions().into_iter().enumerate().map(|(i, p)| (p, i)).collect();
        let size = d.size();
        let mut order = vec![usize::MAX; size];
        for (r, (row, &len)) in grid.iter().zip(&lens).enumerate() {
            if row.len() != len {
                return Err(RankMetricError::BadOrder(format!(
                    "row {} has {} labels, the diagram has {len} dots there",
                    r + 1,
                    row.len()
                )));
            }
            for (j, &label) in row.iter().enumerate() {
                if label == 0 || label > size || order[label - 1] != usize::MAX {
                    return Err(RankMetricError::BadOrder(format!("labels must be a permutation of 1..={size}")));
                }
                order[label - 1] = index_of[&(r, width - len + j)];
            }
        }
        Ok(Self { order })
    }

    /// Inverse of [`EntryOrder::from_grid`].
    pub fn to_grid(&self, d: &FerrersDiagram) -> Vec<Vec<usize>> {
        let positions = d.entry_positions();
        let width = d.box_cols();
        let mut grid: Vec<Vec<usize>> = d.row_lengths().iter().map(|&l| vec![0; l]).collect();
        for (t, &i) in self.order.iter().enumerate() {
            let (r, c) = positions[i];
            let len = grid[r].len();
            grid[r][c + len - width] = t + 1;
        }
        grid
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Greedy code on `d`: walk all fillings in lexicographic order of the dot
/// values read in `order`, keeping a filling when its rank distance to every
/// kept word is at least `delta`.
pub fn rank_lexicode(
    d: &FerrersDiagram,
    delta: usize,
    field: &FieldSpec,
    order: &EntryOrder,
) -> Result<FerrersDiagramCode, RankMetricError> {
    if delta == 0 {
        return Err(RankMetricError::BadDelta);
    }
    if order.len() != d.size() {
        return Err(RankMetricError::BadOrder(format!(
            "order covers {} dots, the diagram has {}",
            order.len(),
            d.size()
        )));
    }
    u64::from(field.size())
        .checked_pow(d.size() as u32)
        .filter(|&c| c <= MAX_FILLINGS)
        .ok_or(RankMetricError::TooLarge(MAX_FILLINGS))?;
    let entries = d.entry_positions();
    let positions: Vec<(usize, usize)> = order.as_slice().iter().map(|&i| entries[i]).collect();
    let words = if field.is_binary() && d.box_cols() <= 64 {
        binary_lexicode(d, delta, &positions)
    } else {
        general_lexicode(d, delta, field, &positions)
    };
    Ok(FerrersDiagramCode::from_parts(field, d.clone(), delta, words))
}

type Packed = SmallVec<[u64; 8]>;

fn binary_lexicode(d: &FerrersDiagram, delta: usize, positions: &[(usize, usize)]) -> Vec<Matrix> {
    let rows = d.box_rows();
    let mut current: Packed = SmallVec::from_elem(0, rows);
    let mut kept: Vec<Packed> = Vec::new();
    let mut scratch: Packed = SmallVec::from_elem(0, rows);
    loop {
        let ok = kept.iter().rev().all(|w| {
            for (s, (a, b)) in scratch.iter_mut().zip(w.iter().zip(&current)) {
                *s = a ^ b;
            }
            algebra::rank_bits(&mut scratch) >= delta
        });
        if ok {
            kept.push(current.clone());
        }
        // odometer: the least significant dot moves fastest
        let mut carried = true;
        for &(r, c) in positions.iter().rev() {
            let bit = 1u64 << c;
            current[r] ^= bit;
            if current[r] & bit != 0 {
                carried = false;
                break;
            }
        }
        if carried {
            break;
        }
    }
    kept.into_iter()
        .map(|w| {
            let mut m = Matrix::zeros(rows, d.box_cols());
            for (r, bits) in w.iter().enumerate() {
                for c in 0..d.box_cols() {
                    m.set(r, c, ((bits >> c) & 1) as Element);
                }
            }
            m
        })
        .collect()
}

fn general_lexicode(d: &FerrersDiagram, delta: usize, field: &FieldSpec, positions: &[(usize, usize)]) -> Vec<Matrix> {
    let q = field.size();
    let mut current = Matrix::zeros(d.box_rows(), d.box_cols());
    let mut kept: Vec<Matrix> = Vec::new();
    loop {
        if kept.iter().rev().all(|w| rank_distance(field, w, &current).expect("same shape") >= delta) {
            kept.push(current.clone());
        }
        let mut carried = true;
        for &(r, c) in positions.iter().rev() {
            let x = current.get(r, c);
            if u32::from(x) + 1 < q {
                current.set(r, c, x + 1);
                carried = false;
                break;
            }
            current.set(r, c, 0);
        }
        if carried {
            break;
        }
    }
    kept
}
