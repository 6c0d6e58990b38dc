use std::cmp::Ordering;
use std::fmt;

use super::idvec::IdentifyingVector;
use super::GrassmannError;

/// Ferrers diagram embedded in a `k x (n-k)` box, stored as column dot
/// counts numbered from right to left: `cols[0]` is the rightmost column.
///
/// Dots in a column are top-aligned and columns never grow towards the left,
/// so `cols` is non-increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FerrersDiagram {
    rows: usize,
    cols: Vec<usize>,
}

impl FerrersDiagram {
    /// `cols` lists the column counts from right to left.
    pub fn new(rows: usize, cols: Vec<usize>) -> Result<Self, GrassmannError> {
        if cols.iter().any(|&c| c > rows) {
            return Err(GrassmannError::BadDiagram("column taller than the box".into()));
        }
        if cols.windows(2).any(|w| w[1] > w[0]) {
            return Err(GrassmannError::BadDiagram("column counts must not increase towards the left".into()));
        }
        Ok(Self { rows, cols })
    }

    pub fn full(rows: usize, width: usize) -> Self {
        Self { rows, cols: vec![rows; width] }
    }

    /// Diagram of the echelon Ferrers form `EF(v)`: the column above the
    /// zero at position `z` holds one dot per pivot left of `z`.
    pub fn from_idvec(v: &IdentifyingVector) -> Self {
        let mut cols = Vec::with_capacity(v.len() - v.weight());
        let mut pivots = 0;
        for i in 0..v.len() {
            if v.get(i) {
                pivots += 1;
            } else {
                cols.push(pivots);
            }
        }
        cols.reverse();
        Self { rows: v.weight(), cols }
    }

    /// Inverse of [`FerrersDiagram::from_idvec`].
    pub fn to_idvec(&self) -> IdentifyingVector {
        let n = self.rows + self.cols.len();
        let mut ones = Vec::with_capacity(self.rows);
        let mut pos = 0;
        let mut placed = 0;
        for &c in self.cols.iter().rev() {
            while placed < c {
                ones.push(pos);
                pos += 1;
                placed += 1;
            }
            pos += 1;
        }
        while placed < self.rows {
            ones.push(pos);
            pos += 1;
            placed += 1;
        }
        IdentifyingVector::from_positions(n, &ones).expect("positions fit the box")
    }

    /// Number of rows of the enclosing box (`k`).
    pub fn box_rows(&self) -> usize {
        self.rows
    }

    /// Number of columns of the enclosing box (`n - k`).
    pub fn box_cols(&self) -> usize {
        self.cols.len()
    }

    /// Column counts, rightmost column first.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// `F_i` with the right-to-left numbering `1..=n-k`.
    pub fn col(&self, i: usize) -> usize {
        self.cols[i - 1]
    }

    pub fn size(&self) -> usize {
        self.cols.iter().sum()
    }

    /// Dots per row, top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.rows).map(|r| self.cols.iter().filter(|&&c| c > r).count()).collect()
    }

    /// Whether box cell `(row, col)` holds a dot; `col` counts from the left.
    pub fn contains(&self, row: usize, col: usize) -> bool {
        let width = self.cols.len();
        col < width && self.cols[width - 1 - col] > row
    }

    /// Dot positions `(row, col)` in box coordinates (column from the left),
    /// in entry order: rightmost column first, top to bottom within a column.
    pub fn entry_positions(&self) -> Vec<(usize, usize)> {
        let width = self.cols.len();
        let mut out = Vec::with_capacity(self.size());
        for (i, &c) in self.cols.iter().enumerate() {
            for r in 0..c {
                out.push((r, width - 1 - i));
            }
        }
        out
    }

    /// Diagram order: larger diagrams first, then the first (rightmost)
    /// column where they differ decides, the taller column first.
    pub fn compare(&self, other: &Self) -> Ordering {
        other.size().cmp(&self.size()).then_with(|| {
            self.cols.iter().zip(&other.cols).find(|(a, b)| a != b).map_or(Ordering::Equal, |(a, b)| b.cmp(a))
        })
    }
}

impl fmt::Debug for FerrersDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FerrersDiagram{:?}", self.cols)
    }
}

impl fmt::Display for FerrersDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.cols.len();
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            let line: String = (0..width).map(|c| if self.contains(r, c) { '*' } else { ' ' }).collect();
            f.write_str(line.trim_end())?;
        }
        Ok(())
    }
}
