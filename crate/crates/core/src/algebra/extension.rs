//! `F_{q^m}` as an extension of a [`FieldSpec`], with elements kept as
//! coordinate vectors over the polynomial basis `1, α, …, α^{m-1}`.

use super::field::{builtin_modulus, Element, FieldSpec};
use super::poly;
use super::AlgebraError;

/// An element of `F_{q^m}`: coordinates over the polynomial basis.
pub type ExtElement = Vec<Element>;

#[derive(Clone, Debug)]
pub struct ExtensionField {
    base: FieldSpec,
    degree: usize,
    modulus: Vec<Element>,
}

impl ExtensionField {
    /// `F_{q^m}` over `base`. Prime bases with a shipped modulus use it;
    /// everything else takes the first irreducible polynomial found by search.
    pub fn new(base: &FieldSpec, degree: usize) -> Result<Self, AlgebraError> {
        if degree == 0 {
            return Err(AlgebraError::BadModulus("extension degree must be at least 1".into()));
        }
        let modulus = if degree == 1 {
            vec![0, 1]
        } else if base.degree() == 1 {
            match builtin_modulus(base.characteristic(), degree) {
                Some(m) => m.to_vec(),
                None => poly::find_irreducible(base, degree),
            }
        } else {
            poly::find_irreducible(base, degree)
        };
        Self::with_modulus(base, &modulus)
    }

    pub fn with_modulus(base: &FieldSpec, modulus: &[Element]) -> Result<Self, AlgebraError> {
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(AlgebraError::BadModulus("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| u32::from(c) >= base.size()) {
            return Err(AlgebraError::BadModulus("coefficient out of range".into()));
        }
        if !poly::is_irreducible(base, modulus) {
            return Err(AlgebraError::Reducible);
        }
        Ok(Self { base: base.clone(), degree: modulus.len() - 1, modulus: modulus.to_vec() })
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[Element] {
        &self.modulus
    }

    pub fn zero(&self) -> ExtElement {
        vec![0; self.degree]
    }

    pub fn one(&self) -> ExtElement {
        let mut e = self.zero();
        e[0] = 1;
        e
    }

    /// The basis element `α^i`, `i < m`.
    pub fn basis(&self, i: usize) -> ExtElement {
        let mut e = self.zero();
        e[i] = 1;
        e
    }

    /// Decodes the integer whose base-`q` digits are the coordinates.
    pub fn from_index(&self, mut idx: u64) -> ExtElement {
        let q = u64::from(self.base.size());
        (0..self.degree)
            .map(|_| {
                let d = (idx % q) as Element;
                idx /= q;
                d
            })
            .collect()
    }

    pub fn order(&self) -> u64 {
        u64::from(self.base.size()).pow(self.degree as u32)
    }

    pub fn add(&self, a: &[Element], b: &[Element]) -> ExtElement {
        a.iter().zip(b).map(|(&x, &y)| self.base.add(x, y)).collect()
    }

    pub fn mul(&self, a: &[Element], b: &[Element]) -> ExtElement {
        poly::mulmod(&self.base, a, b, &self.modulus)
    }

    pub fn pow(&self, a: &[Element], mut exp: u64) -> ExtElement {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// `a^(q^i)`: the `F_q`-linear Frobenius map iterated `i` times.
    pub fn frobenius(&self, a: &[Element], i: usize) -> ExtElement {
        let mut x = a.to_vec();
        for _ in 0..(i % self.degree) {
            x = self.pow(&x, u64::from(self.base.size()));
        }
        x
    }
}
