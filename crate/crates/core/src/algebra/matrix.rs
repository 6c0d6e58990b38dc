use std::fmt;

use super::field::{Element, FieldSpec};
use super::AlgebraError;

/// Dense row-major matrix of field elements.
///
/// The matrix does not carry its field; operations that need arithmetic take
/// a [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for (i, row) in self.iter_rows().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            for x in row {
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Element>) -> Result<Self, AlgebraError> {
        if data.len() != rows * cols {
            return Err(AlgebraError::ShapeMismatch { expected: (rows, cols), found: (data.len(), 1) });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from equal-length rows. `cols` is needed to give an
    /// empty row list a width.
    pub fn from_rows(cols: usize, rows: &[Vec<Element>]) -> Result<Self, AlgebraError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(AlgebraError::ShapeMismatch { expected: (rows.len(), cols), found: (rows.len(), r.len()) });
            }
            data.extend_from_slice(r);
        }
        Ok(Self { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn data(&self) -> &[Element] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Element {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Element) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Element] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Element] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Element]> {
        // chunks_exact rejects a zero chunk size
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// The sub-matrix made of the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Self { rows: rows.len(), cols: self.cols, data }
    }

    /// The sub-matrix made of the given columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        Self { rows: self.rows, cols: cols.len(), data }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Drops rows from the bottom until `rows` remain.
    pub fn truncate_rows(&mut self, rows: usize) {
        if rows < self.rows {
            self.rows = rows;
            self.data.truncate(rows * self.cols);
        }
    }

    /// Checks every entry is a valid element of `f`.
    pub fn check_entries(&self, f: &FieldSpec) -> Result<(), AlgebraError> {
        match self.data.iter().find(|&&x| u32::from(x) >= f.size()) {
            Some(&x) => Err(AlgebraError::EntryOutOfRange { value: x, q: f.size() }),
            None => Ok(()),
        }
    }
}

/// `a` on top of `b`.
pub fn stack(a: &Matrix, b: &Matrix) -> Result<Matrix, AlgebraError> {
    if a.cols != b.cols {
        return Err(AlgebraError::ShapeMismatch { expected: a.shape(), found: b.shape() });
    }
    let mut data = Vec::with_capacity(a.data.len() + b.data.len());
    data.extend_from_slice(&a.data);
    data.extend_from_slice(&b.data);
    Ok(Matrix { rows: a.rows + b.rows, cols: a.cols, data })
}

/// Entrywise `a - b`.
pub fn mat_sub(f: &FieldSpec, a: &Matrix, b: &Matrix) -> Result<Matrix, AlgebraError> {
    if a.shape() != b.shape() {
        return Err(AlgebraError::ShapeMismatch { expected: a.shape(), found: b.shape() });
    }
    let data = a.data.iter().zip(&b.data).map(|(&x, &y)| f.sub(x, y)).collect();
    Ok(Matrix { rows: a.rows, cols: a.cols, data })
}

/// Entrywise `a + b`.
pub fn mat_add(f: &FieldSpec, a: &Matrix, b: &Matrix) -> Result<Matrix, AlgebraError> {
    if a.shape() != b.shape() {
        return Err(AlgebraError::ShapeMismatch { expected: a.shape(), found: b.shape() });
    }
    let data = a.data.iter().zip(&b.data).map(|(&x, &y)| f.add(x, y)).collect();
    Ok(Matrix { rows: a.rows, cols: a.cols, data })
}

/// Result of Gauss–Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// Same shape as the input; the zero rows sit at the bottom.
    pub matrix: Matrix,
    pub rank: usize,
    /// Strictly increasing, one per nonzero row.
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form by Gauss–Jordan elimination with first-nonzero
/// pivot selection.
pub fn rref(f: &FieldSpec, m: &Matrix) -> Echelon {
    let mut out = m.clone();
    let (rank, pivots) =
        if f.is_binary() && m.cols <= 64 { rref_binary_in_place(&mut out) } else { rref_in_place(f, &mut out) };
    Echelon { matrix: out, rank, pivots }
}

pub fn rank(f: &FieldSpec, m: &Matrix) -> usize {
    if f.is_binary() && m.cols <= 64 {
        let mut rows: Vec<u64> = m.iter_rows().map(pack_row).collect();
        rank_bits(&mut rows)
    } else {
        rref(f, m).rank
    }
}

fn rref_in_place(f: &FieldSpec, m: &mut Matrix) -> (usize, Vec<usize>) {
    let (rows, cols) = m.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m.get(i, c) != 0) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
        for j in c..cols {
            let v = f.mul(m.get(r, j), inv);
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c);
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (r, pivots)
}

/// Packs a binary row, column `j` into bit `j`.
pub(crate) fn pack_row(row: &[Element]) -> u64 {
    row.iter().enumerate().fold(0u64, |acc, (j, &x)| acc | (u64::from(x & 1) << j))
}

fn rref_binary_in_place(m: &mut Matrix) -> (usize, Vec<usize>) {
    let (rows, cols) = m.shape();
    let mut packed: Vec<u64> = m.iter_rows().map(pack_row).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let bit = 1u64 << c;
        let Some(p) = (r..rows).find(|&i| packed[i] & bit != 0) else {
            continue;
        };
        packed.swap(p, r);
        let pivot_row = packed[r];
        for (i, row) in packed.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        pivots.push(c);
        r += 1;
    }
    for (i, row) in packed.iter().enumerate() {
        for j in 0..cols {
            m.set(i, j, ((row >> j) & 1) as Element);
        }
    }
    (r, pivots)
}

/// Rank of a set of packed binary rows; the slice is used as scratch.
#[inline]
pub(crate) fn rank_bits(rows: &mut [u64]) -> usize {
    // branch-free: the row pattern is data dependent and mispredicts badly
    let mut rank = 0;
    for i in 0..rows.len() {
        let row = rows[i];
        rank += usize::from(row != 0);
        let low = row & row.wrapping_neg();
        for other in rows[i + 1..].iter_mut() {
            *other ^= row & u64::from(*other & low != 0).wrapping_neg();
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<u8>> = rows.iter().map(|r| r.bytes().map(|b| b - b'0').collect()).collect();
        Matrix::from_rows(cols, &rows).unwrap()
    }

    fn is_rref(e: &Echelon) -> bool {
        let mat = &e.matrix;
        let mut last = None;
        for (i, row) in mat.iter_rows().enumerate() {
            match row.iter().position(|&x| x != 0) {
                None => {
                    if i < e.rank {
                        return false;
                    }
                }
                Some(c) => {
                    if i >= e.rank || row[c] != 1 || last.is_some_and(|l| l >= c) {
                        return false;
                    }
                    if (0..mat.rows()).any(|j| j != i && mat.get(j, c) != 0) {
                        return false;
                    }
                    last = Some(c);
                }
            }
        }
        true
    }

    #[test]
    fn identity_is_fixed() {
        let f = FieldSpec::new(3).unwrap();
        let e = rref(&f, &Matrix::identity(4));
        assert_eq!(e.matrix, Matrix::identity(4));
        assert_eq!(e.rank, 4);
        assert_eq!(e.pivots, vec![0, 1, 2, 3]);
    }

    #[test]
    fn already_reduced_matrix() {
        let f = FieldSpec::new(2).unwrap();
        let x = m(&["1000110", "0010101", "0001011"]);
        let e = rref(&f, &x);
        assert_eq!(e.matrix, x);
        assert_eq!(e.rank, 3);
        assert_eq!(e.pivots, vec![0, 2, 3]);
    }

    #[test]
    fn dependent_rows() {
        let f = FieldSpec::new(2).unwrap();
        let e = rref(&f, &m(&["110", "011", "101"]));
        assert_eq!(e.rank, 2);
        assert_eq!(e.pivots, vec![0, 1]);
        assert!(is_rref(&e));
    }

    #[test]
    fn zero_matrix() {
        let f = FieldSpec::new(5).unwrap();
        let e = rref(&f, &Matrix::zeros(3, 4));
        assert_eq!(e.rank, 0);
        assert!(e.pivots.is_empty());
    }

    #[test]
    fn ternary_elimination() {
        let f = FieldSpec::new(3).unwrap();
        let e = rref(&f, &m(&["210", "120", "022"]));
        assert!(is_rref(&e));
        assert_eq!(e.rank, 2);
        assert_eq!(e.matrix.row(0), &[1, 0, 1]);
        assert_eq!(e.matrix.row(1), &[0, 1, 1]);
    }

    #[test]
    fn stacking() {
        let a = m(&["101"]);
        let b = m(&["011"]);
        let s = stack(&a, &b).unwrap();
        assert_eq!(s.shape(), (2, 3));
        assert_eq!(stack(&Matrix::zeros(0, 3), &a).unwrap(), a);
        assert!(stack(&a, &m(&["01"])).is_err());
    }

    #[test]
    fn subtraction() {
        let f3 = FieldSpec::new(3).unwrap();
        let a = m(&["2"]);
        let b = m(&["1"]);
        assert_eq!(mat_sub(&f3, &a, &b).unwrap(), m(&["1"]));
        assert!(mat_sub(&f3, &a, &a).unwrap().is_zero());
        let f2 = FieldSpec::new(2).unwrap();
        let x = m(&["1100"]);
        let y = m(&["1010"]);
        assert_eq!(mat_sub(&f2, &x, &y).unwrap(), mat_add(&f2, &x, &y).unwrap());
        assert!(mat_sub(&f2, &x, &m(&["11"])).is_err());
    }

    #[test]
    fn binary_and_generic_paths_agree() {
        let f = FieldSpec::new(2).unwrap();
        let x = m(&["1101", "0111", "1010", "0001"]);
        let mut generic = x.clone();
        let (r, p) = rref_in_place(&f, &mut generic);
        let fast = rref(&f, &x);
        assert_eq!(fast.matrix, generic);
        assert_eq!(fast.rank, r);
        assert_eq!(fast.pivots, p);
    }
}
