//! Lazy enumeration of Schubert cells and of identifying vectors in the
//! order used by the lexicode constructions.

use std::ops::Range;

use crate::algebra::{Element, FieldSpec, Matrix};

use super::ferrers::FerrersDiagram;
use super::idvec::{all_of_weight, IdentifyingVector};
use super::subspace::{echelon_skeleton, tableau_positions, Subspace};
use super::GrassmannError;

/// All subspaces sharing one identifying vector.
#[derive(Clone, Debug)]
pub struct SchubertCell {
    field: FieldSpec,
    idvec: IdentifyingVector,
    positions: Vec<(usize, usize)>,
    skeleton: Matrix,
}

impl SchubertCell {
    pub fn new(field: &FieldSpec, idvec: IdentifyingVector) -> Self {
        Self { field: field.clone(), positions: tableau_positions(&idvec), skeleton: echelon_skeleton(&idvec), idvec }
    }

    pub fn idvec(&self) -> &IdentifyingVector {
        &self.idvec
    }

    pub fn diagram(&self) -> FerrersDiagram {
        FerrersDiagram::from_idvec(&self.idvec)
    }

    /// Number of dots, i.e. free entries.
    pub fn dots(&self) -> usize {
        self.positions.len()
    }

    /// Absolute `(row, column)` dot positions in entry order.
    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// `q^{|F|}`, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        u128::from(self.field.size()).checked_pow(self.dots() as u32).unwrap_or(u128::MAX)
    }

    /// Every member in increasing subspace order.
    pub fn iter(&self) -> CellIter<'_> {
        self.range(0..self.size())
    }

    /// The members with ranks in `range`; contiguous ranges concatenate to
    /// the full cell in order.
    pub fn range(&self, range: Range<u128>) -> CellIter<'_> {
        let q = self.field.size();
        let mut digits = vec![0 as Element; self.dots()];
        // entry 0 is the most significant digit
        let mut r = range.start;
        for d in digits.iter_mut().rev() {
            *d = (r % u128::from(q)) as Element;
            r /= u128::from(q);
        }
        let mut current = self.skeleton.clone();
        for (&(row, col), &x) in self.positions.iter().zip(&digits) {
            current.set(row, col, x);
        }
        CellIter { cell: self, digits, current, remaining: range.end.saturating_sub(range.start) }
    }

    /// The all-zero filling, the first member of the cell.
    pub fn first(&self) -> Subspace {
        Subspace::from_parts(&self.field, self.skeleton.clone(), self.idvec)
    }
}

/// Odometer over the tableau entries; the last entry moves fastest.
pub struct CellIter<'a> {
    cell: &'a SchubertCell,
    digits: Vec<Element>,
    current: Matrix,
    remaining: u128,
}

impl CellIter<'_> {
    fn advance(&mut self) {
        let q = self.cell.field.size();
        for i in (0..self.digits.len()).rev() {
            let (row, col) = self.cell.positions[i];
            if u32::from(self.digits[i]) + 1 < q {
                self.digits[i] += 1;
                self.current.set(row, col, self.digits[i]);
                return;
            }
            self.digits[i] = 0;
            self.current.set(row, col, 0);
        }
    }

    /// Current entry vector, without building a [`Subspace`].
    pub fn entries(&self) -> &[Element] {
        &self.digits
    }
}

impl Iterator for CellIter<'_> {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.remaining == 0 {
            return None;
        }
        let out = Subspace::from_parts(&self.cell.field, self.current.clone(), self.cell.idvec);
        self.remaining -= 1;
        if self.remaining > 0 {
            self.advance();
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, usize::try_from(self.remaining).ok())
    }
}

/// All weight-`k` vectors of length `n`, sorted by the order of their
/// Ferrers diagrams (largest diagram first).
pub fn enumerate_idvecs(n: usize, k: usize) -> Result<Vec<IdentifyingVector>, GrassmannError> {
    if k > n {
        return Err(GrassmannError::BadDimensions { n, k });
    }
    if n > super::idvec::MAX_N {
        return Err(GrassmannError::TooLong(n));
    }
    let mut keyed: Vec<(FerrersDiagram, IdentifyingVector)> =
        all_of_weight(n, k).into_iter().map(|v| (FerrersDiagram::from_idvec(&v), v)).collect();
    keyed.sort_by(|a, b| a.0.compare(&b.0));
    Ok(keyed.into_iter().map(|(_, v)| v).collect())
}

/// Gaussian binomial `[n, k]_q`, the number of `k`-dimensional subspaces of
/// `F_q^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u32) -> Result<u128, GrassmannError> {
    if k > n {
        return Err(GrassmannError::BadDimensions { n, k });
    }
    let q = u128::from(q);
    let pow = |e: usize| q.checked_pow(e as u32).ok_or(GrassmannError::Overflow);
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = pow(n - i)? - 1;
        let den = pow(i + 1)? - 1;
        // acc = [n, i]_q here, and [n, i]_q * num / den = [n, i+1]_q exactly
        acc = acc.checked_mul(num).ok_or(GrassmannError::Overflow)? / den;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idvec_order_endpoints() {
        let vs = enumerate_idvecs(8, 4).unwrap();
        assert_eq!(vs.len(), 70);
        assert_eq!(vs[0].to_string(), "11110000");
        assert_eq!(vs[1].to_string(), "11101000");
        assert_eq!(vs.last().unwrap().to_string(), "00001111");
    }

    #[test]
    fn cell_sizes_and_order() {
        let f = FieldSpec::new(2).unwrap();
        let cell = SchubertCell::new(&f, "0011".parse().unwrap());
        assert_eq!(cell.iter().count(), 1);
        let cell = SchubertCell::new(&f, "11110000".parse().unwrap());
        assert_eq!(cell.size(), 65536);
        let first = cell.iter().next().unwrap();
        assert!(first.tableau_entries().0.iter().all(|&x| x == 0));

        let f3 = FieldSpec::new(3).unwrap();
        let cell = SchubertCell::new(&f3, "1010".parse().unwrap());
        let all: Vec<_> = cell.iter().collect();
        assert_eq!(all.len(), 27);
        assert!(all.windows(2).all(|w| w[0].compare(&w[1]).is_lt()));
    }

    #[test]
    fn ranges_concatenate() {
        let f = FieldSpec::new(3).unwrap();
        let cell = SchubertCell::new(&f, "10100".parse().unwrap());
        let whole: Vec<_> = cell.iter().collect();
        let mut parts: Vec<_> = cell.range(0..100).collect();
        parts.extend(cell.range(100..cell.size()));
        assert_eq!(whole, parts);
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gaussian_binomial(5, 0, 2).unwrap(), 1);
        assert_eq!(gaussian_binomial(8, 4, 2).unwrap(), 200787);
        assert_eq!(gaussian_binomial(7, 3, 3).unwrap(), 925771);
        assert_eq!(gaussian_binomial(6, 3, 2).unwrap(), 1395);
        assert!(matches!(gaussian_binomial(200, 100, 3), Err(GrassmannError::Overflow)));
    }
}
