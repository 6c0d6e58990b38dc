//! Packed distance kernels for the search loops.
//!
//! The search asks the same two questions billions of times: the rank of
//! `RE(X) - RE(Y)` for codewords in one cell, and the rank of
//! `X̃_μ - Ỹ_μ` on the `ρ` columns for codewords in different cells. Over
//! `F_2` and `F_3` rows are packed into machine words; other fields go
//! through the matrix routines.

use smallvec::SmallVec;

use crate::algebra::{self, rank_bits};
use crate::grassmann::Subspace;

/// Runs `$body` with `$k` bound to the fastest kernel for the field.
macro_rules! with_kernel {
    ($field:expr, $k:ident => $body:expr) => {
        match $field.size() {
            2 => {
                let $k = $crate::distance::kernel::BinaryKernel;
                $body
            }
            3 => {
                let $k = $crate::distance::kernel::TernaryKernel;
                $body
            }
            _ => {
                let $k = $crate::distance::kernel::GeneralKernel;
                $body
            }
        }
    };
}
pub(crate) use with_kernel;

pub(crate) trait Kernel: Sync {
    type Word: Clone + Send + Sync;

    fn pack(&self, s: &Subspace) -> Self::Word;

    /// `rank(RE(X) - RE(Y))`; both words must share their identifying vector.
    fn same_cell_rank(&self, x: &Self::Word, y: &Self::Word) -> usize;

    /// `rank(X̃_μ - Ỹ_μ)`.
    fn cross_rank(&self, x: &Self::Word, y: &Self::Word) -> usize;
}

/// Rows of an RREF matrix over `F_2`, column `j` in bit `j`.
#[derive(Clone, Debug)]
pub(crate) struct BitWord {
    rows: SmallVec<[u64; 8]>,
    pivots: u64,
}

pub(crate) struct BinaryKernel;

/// Scratch rows kept on the stack; larger inputs take the heap.
const STACK_ROWS: usize = 16;

#[inline]
fn with_scratch<R>(len: usize, f: impl FnOnce(&mut [u64]) -> R) -> R {
    if len <= STACK_ROWS {
        let mut buf = [0u64; STACK_ROWS];
        f(&mut buf[..len])
    } else {
        f(&mut vec![0u64; len])
    }
}

impl Kernel for BinaryKernel {
    type Word = BitWord;

    fn pack(&self, s: &Subspace) -> BitWord {
        BitWord { rows: s.rref().iter_rows().map(algebra::pack_row).collect(), pivots: s.idvec().bits() }
    }

    #[inline]
    fn same_cell_rank(&self, x: &BitWord, y: &BitWord) -> usize {
        let (xr, yr) = (x.rows.as_slice(), y.rows.as_slice());
        with_scratch(xr.len(), |buf| {
            for ((b, a), c) in buf.iter_mut().zip(xr).zip(yr) {
                *b = a ^ c;
            }
            rank_bits(buf)
        })
    }

    /// Over `F_2` the stacked rank is cheaper than forming `X̃_μ` and `Ỹ_μ`
    /// and gives the same value, `rank(X * Y) - (dim X + dim Y + d_H) / 2`.
    fn cross_rank(&self, x: &BitWord, y: &BitWord) -> usize {
        let (xr, yr) = (x.rows.as_slice(), y.rows.as_slice());
        let dh = (x.pivots ^ y.pivots).count_ones() as usize;
        let r = with_scratch(xr.len() + yr.len(), |buf| {
            buf[..xr.len()].copy_from_slice(xr);
            buf[xr.len()..].copy_from_slice(yr);
            rank_bits(buf)
        });
        (2 * r - xr.len() - yr.len() - dh) / 2
    }
}

/// A vector over `F_3` as two masks: the positions holding 1 and those
/// holding 2 = -1.
type Trits = (u64, u64);

#[inline]
fn trit_add(a: Trits, b: Trits) -> Trits {
    let (ap, an, bp, bn) = (a.0, a.1, b.0, b.1);
    let az = !(ap | an);
    let bz = !(bp | bn);
    ((ap & bz) | (bp & az) | (an & bn), (an & bz) | (bn & az) | (ap & bp))
}

#[inline]
fn trit_sub(a: Trits, b: Trits) -> Trits {
    trit_add(a, (b.1, b.0))
}

#[inline]
fn select(mask: u64, a: Trits, b: Trits) -> Trits {
    ((a.0 & mask) | (b.0 & !mask), (a.1 & mask) | (b.1 & !mask))
}

/// Rank of a set of `F_3` rows; the slice is used as scratch.
#[inline]
pub(crate) fn rank_trits(rows: &mut [Trits]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let row = rows[i];
        let support = row.0 | row.1;
        rank += usize::from(support != 0);
        let low = support & support.wrapping_neg();
        let sign_pos = u64::from(row.0 & low != 0).wrapping_neg();
        for other in rows[i + 1..].iter_mut() {
            let hit = u64::from((other.0 | other.1) & low != 0).wrapping_neg();
            let other_pos = u64::from(other.0 & low != 0).wrapping_neg();
            // equal signs at the pivot cancel by subtraction
            let same = !(sign_pos ^ other_pos);
            let reduced = select(same, trit_sub(*other, row), trit_add(*other, row));
            *other = select(hit, reduced, *other);
        }
    }
    rank
}

fn pack_trits(row: &[algebra::Element]) -> Trits {
    row.iter().enumerate().fold((0, 0), |(p, n), (j, &x)| (p | (u64::from(x == 1) << j), n | (u64::from(x == 2) << j)))
}

#[derive(Clone, Debug)]
pub(crate) struct TritWord {
    rows: SmallVec<[Trits; 8]>,
    pivots: u64,
}

/// Bitsliced kernel for `F_3`.
pub(crate) struct TernaryKernel;

#[inline]
fn with_trit_scratch<R>(len: usize, f: impl FnOnce(&mut [Trits]) -> R) -> R {
    if len <= STACK_ROWS {
        let mut buf = [(0u64, 0u64); STACK_ROWS];
        f(&mut buf[..len])
    } else {
        f(&mut vec![(0, 0); len])
    }
}

impl Kernel for TernaryKernel {
    type Word = TritWord;

    fn pack(&self, s: &Subspace) -> TritWord {
        TritWord { rows: s.rref().iter_rows().map(pack_trits).collect(), pivots: s.idvec().bits() }
    }

    #[inline]
    fn same_cell_rank(&self, x: &TritWord, y: &TritWord) -> usize {
        let (xr, yr) = (x.rows.as_slice(), y.rows.as_slice());
        with_trit_scratch(xr.len(), |buf| {
            for ((b, &a), &c) in buf.iter_mut().zip(xr).zip(yr) {
                *b = trit_sub(a, c);
            }
            rank_trits(buf)
        })
    }

    fn cross_rank(&self, x: &TritWord, y: &TritWord) -> usize {
        let (xr, yr) = (x.rows.as_slice(), y.rows.as_slice());
        let dh = (x.pivots ^ y.pivots).count_ones() as usize;
        let r = with_trit_scratch(xr.len() + yr.len(), |buf| {
            buf[..xr.len()].copy_from_slice(xr);
            buf[xr.len()..].copy_from_slice(yr);
            rank_trits(buf)
        });
        (2 * r - xr.len() - yr.len() - dh) / 2
    }
}

/// Table-driven fallback for every other field.
pub(crate) struct GeneralKernel;

impl Kernel for GeneralKernel {
    type Word = Subspace;

    fn pack(&self, s: &Subspace) -> Subspace {
        s.clone()
    }

    fn same_cell_rank(&self, x: &Subspace, y: &Subspace) -> usize {
        let diff = algebra::mat_sub(x.field(), x.rref(), y.rref()).expect("same shape");
        algebra::rank(x.field(), &diff)
    }

    fn cross_rank(&self, x: &Subspace, y: &Subspace) -> usize {
        let d = super::distance_fast(x, y).expect("same ambient space and field");
        (d - x.idvec().hamming(y.idvec())) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;
    use crate::distance::distance_rank;
    use crate::grassmann::{enumerate_idvecs, SchubertCell};

    #[test]
    fn binary_kernel_matches_reference_on_g63() {
        let f = FieldSpec::new(2).unwrap();
        let all: Vec<Subspace> = enumerate_idvecs(6, 3)
            .unwrap()
            .into_iter()
            .flat_map(|v| SchubertCell::new(&f, v).iter().collect::<Vec<_>>())
            .collect();
        let words: Vec<BitWord> = all.iter().map(|s| BinaryKernel.pack(s)).collect();
        for (i, x) in all.iter().enumerate().step_by(7) {
            for (j, y) in all.iter().enumerate() {
                let exact = distance_rank(x, y).unwrap();
                let dh = x.idvec().hamming(y.idvec());
                let fast = if dh == 0 {
                    2 * BinaryKernel.same_cell_rank(&words[i], &words[j])
                } else {
                    dh + 2 * BinaryKernel.cross_rank(&words[i], &words[j])
                };
                assert_eq!(fast, exact, "{x:?} {y:?}");
            }
        }
    }

    #[test]
    fn ternary_kernel_matches_reference_on_g52() {
        let f = FieldSpec::new(3).unwrap();
        let all: Vec<Subspace> = enumerate_idvecs(5, 2)
            .unwrap()
            .into_iter()
            .flat_map(|v| SchubertCell::new(&f, v).iter().collect::<Vec<_>>())
            .collect();
        let words: Vec<TritWord> = all.iter().map(|s| TernaryKernel.pack(s)).collect();
        for (i, x) in all.iter().enumerate().step_by(3) {
            for (j, y) in all.iter().enumerate() {
                let exact = distance_rank(x, y).unwrap();
                let dh = x.idvec().hamming(y.idvec());
                let fast = if dh == 0 {
                    2 * TernaryKernel.same_cell_rank(&words[i], &words[j])
                } else {
                    dh + 2 * TernaryKernel.cross_rank(&words[i], &words[j])
                };
                assert_eq!(fast, exact, "{x:?} {y:?}");
            }
        }
    }

    #[test]
    fn trit_arithmetic() {
        let f = FieldSpec::new(3).unwrap();
        for a in 0..3u8 {
            for b in 0..3u8 {
                let (s, d) =
                    (trit_add(pack_trits(&[a]), pack_trits(&[b])), trit_sub(pack_trits(&[a]), pack_trits(&[b])));
                assert_eq!(s, pack_trits(&[f.add(a, b)]));
                assert_eq!(d, pack_trits(&[f.sub(a, b)]));
            }
        }
    }
}
