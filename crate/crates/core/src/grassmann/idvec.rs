use std::fmt;
use std::str::FromStr;

use super::GrassmannError;

/// Largest ambient dimension representable by an [`IdentifyingVector`].
pub const MAX_N: usize = 64;

/// Binary vector of length `n` marking the pivot columns of an RREF matrix.
///
/// Position 0 is the leftmost coordinate (the first character when printed).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct IdentifyingVector {
    bits: u64,
    n: u8,
}

impl IdentifyingVector {
    pub fn from_bits(n: usize, bits: u64) -> Result<Self, GrassmannError> {
        if n > MAX_N {
            return Err(GrassmannError::TooLong(n));
        }
        if n < MAX_N && bits >> n != 0 {
            return Err(GrassmannError::BadIdVec(format!("bits beyond length {n}")));
        }
        Ok(Self { bits, n: n as u8 })
    }

    pub fn from_positions(n: usize, ones: &[usize]) -> Result<Self, GrassmannError> {
        let mut bits = 0u64;
        for &p in ones {
            if p >= n {
                return Err(GrassmannError::BadIdVec(format!("position {p} out of range")));
            }
            bits |= 1 << p;
        }
        Self::from_bits(n, bits)
    }

    /// `1^k 0^(n-k)`.
    pub fn leading_ones(n: usize, k: usize) -> Self {
        Self { bits: low_mask(k), n: n as u8 }
    }

    /// `0^(n-k) 1^k`.
    pub fn trailing_ones(n: usize, k: usize) -> Self {
        Self { bits: low_mask(k) << (n - k), n: n as u8 }
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }

    /// Positions of the ones, increasing.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.get(i))
    }

    /// Positions of the zeros, increasing.
    pub fn zeros(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| !self.get(i))
    }

    /// Mask with a one at every position `< n`.
    pub fn full_mask(&self) -> u64 {
        low_mask(self.len())
    }

    #[inline]
    pub fn hamming(&self, other: &Self) -> usize {
        (self.bits ^ other.bits).count_ones() as usize
    }
}

fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

impl fmt::Display for IdentifyingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for IdentifyingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v({self})")
    }
}

impl FromStr for IdentifyingVector {
    type Err = GrassmannError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut ones = Vec::new();
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '1' => ones.push(i),
                '0' => {}
                _ => return Err(GrassmannError::BadIdVec(format!("unexpected character {ch:?}"))),
            }
        }
        Self::from_positions(s.chars().count(), &ones)
    }
}

/// All weight-`k` vectors of length `n`, in increasing order of their bit
/// patterns (Gosper's hack).
pub(crate) fn all_of_weight(n: usize, k: usize) -> Vec<IdentifyingVector> {
    assert!(k <= n && n <= MAX_N);
    if k == 0 {
        return vec![IdentifyingVector { bits: 0, n: n as u8 }];
    }
    let limit = low_mask(n);
    let mut out = Vec::new();
    let mut x = low_mask(k);
    loop {
        out.push(IdentifyingVector { bits: x, n: n as u8 });
        let c = x & x.wrapping_neg();
        let r = x.wrapping_add(c);
        if r == 0 || r & !limit != 0 {
            break;
        }
        let next = (((r ^ x) >> 2) / c) | r;
        if next & !limit != 0 {
            break;
        }
        x = next;
    }
    out
}
