//! Small finite fields `F_q`, `q = p^e`, backed by full arithmetic tables.
//!
//! Elements are encoded as integers `0..q`: the base-`p` digits of an element
//! are the coefficients of its polynomial representative, lowest degree first.
//! For `q = 4` with modulus `x^2 + x + 1`, `2` is `x` and `3` is `x + 1`.

use std::fmt;
use std::sync::Arc;

use super::poly;
use super::AlgebraError;

/// A field element, encoded as described in the module docs.
pub type Element = u8;

/// Largest field size supported by [`FieldSpec`] (elements must fit a byte).
pub const MAX_FIELD_SIZE: u32 = 256;

/// Monic irreducible polynomials over `F_p` for `p` in {2, 3} and degrees 2..=8,
/// coefficients listed lowest degree first (leading one included).
pub(crate) const BUILTIN_MODULI: &[(u32, usize, &[u8])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 1, 0, 0, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (3, 7, &[2, 0, 1, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 0, 1, 0, 0, 0, 0, 0, 1]),
];

/// Looks up the shipped modulus for `F_{p^e}`, if there is one.
pub fn builtin_modulus(p: u32, e: usize) -> Option<&'static [u8]> {
    BUILTIN_MODULI.iter().find(|(bp, be, _)| *bp == p && *be == e).map(|(_, _, m)| *m)
}

struct Tables {
    p: u32,
    e: usize,
    q: u32,
    modulus: Vec<u8>,
    add: Vec<Element>,
    sub: Vec<Element>,
    mul: Vec<Element>,
    inv: Vec<Element>,
}

/// Description of `F_q` together with its arithmetic tables.
///
/// Cloning is cheap; clones share the tables.
#[derive(Clone)]
pub struct FieldSpec {
    tables: Arc<Tables>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.tables.p)
            .field("e", &self.tables.e)
            .field("modulus", &self.tables.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.tables, &other.tables)
            || (self.tables.p == other.tables.p
                && self.tables.e == other.tables.e
                && self.tables.modulus == other.tables.modulus)
    }
}

impl Eq for FieldSpec {}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Splits `q` into `(p, e)` with `q = p^e`, `p` prime.
pub fn prime_power(q: u32) -> Option<(u32, usize)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

impl FieldSpec {
    /// `F_q` with the shipped modulus (or the first irreducible one found by
    /// search when `q` is a power of a prime other than 2 or 3).
    pub fn new(q: u32) -> Result<Self, AlgebraError> {
        let (p, e) = prime_power(q).ok_or(AlgebraError::NotPrimePower(q))?;
        if q > MAX_FIELD_SIZE {
            return Err(AlgebraError::FieldTooLarge(q));
        }
        let modulus = if e == 1 {
            Vec::new()
        } else if let Some(m) = builtin_modulus(p, e) {
            m.to_vec()
        } else {
            poly::find_irreducible_prime(p, e)
        };
        Self::with_modulus(p, e, &modulus)
    }

    /// `F_{p^e}` built from an explicit modulus (coefficients lowest degree first,
    /// monic, degree `e`). The modulus is checked for irreducibility.
    pub fn with_modulus(p: u32, e: usize, modulus: &[u8]) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if e == 0 {
            return Err(AlgebraError::BadModulus("extension degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(e as u32)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or(AlgebraError::FieldTooLarge(p.saturating_pow(e as u32)))?;
        let modulus = if e == 1 {
            Vec::new()
        } else {
            if modulus.len() != e + 1 || modulus[e] != 1 {
                return Err(AlgebraError::BadModulus(format!("expected a monic polynomial of degree {e}")));
            }
            if modulus.iter().any(|&c| u32::from(c) >= p) {
                return Err(AlgebraError::BadModulus("coefficient out of range".into()));
            }
            if !poly::is_irreducible_prime(p, modulus) {
                return Err(AlgebraError::Reducible);
            }
            modulus.to_vec()
        };

        let digits = |a: u32| -> Vec<u32> {
            let mut v = vec![0; e];
            let mut a = a;
            for d in v.iter_mut() {
                *d = a % p;
                a /= p;
            }
            v
        };
        let encode = |v: &[u32]| -> u32 { v.iter().rev().fold(0, |acc, &d| acc * p + d) };

        let prime = if e > 1 { Some(FieldSpec::with_modulus(p, 1, &[])?) } else { None };
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut sub = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                let d: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + p - y) % p).collect();
                let idx = (a * q + b) as usize;
                add[idx] = encode(&s) as Element;
                sub[idx] = encode(&d) as Element;
                let prod = match &prime {
                    None => (a * b) % p,
                    Some(pf) => {
                        let pa: Vec<Element> = da.iter().map(|&x| x as Element).collect();
                        let pb: Vec<Element> = db.iter().map(|&x| x as Element).collect();
                        let r = poly::mulmod(pf, &pa, &pb, &modulus);
                        encode(&r.iter().map(|&x| u32::from(x)).collect::<Vec<_>>())
                    }
                };
                mul[idx] = prod as Element;
            }
        }
        let mut inv = vec![0; qs];
        for a in 1..q {
            inv[a as usize] =
                (1..q).find(|&b| mul[(a * q + b) as usize] == 1).ok_or(AlgebraError::Reducible)? as Element;
        }
        Ok(Self { tables: Arc::new(Tables { p, e, q, modulus, add, sub, mul, inv }) })
    }

    pub fn characteristic(&self) -> u32 {
        self.tables.p
    }

    pub fn degree(&self) -> usize {
        self.tables.e
    }

    pub fn size(&self) -> u32 {
        self.tables.q
    }

    /// Modulus coefficients, lowest degree first; empty for prime fields.
    pub fn modulus(&self) -> &[u8] {
        &self.tables.modulus
    }

    pub fn is_binary(&self) -> bool {
        self.tables.q == 2
    }

    #[inline]
    fn idx(&self, a: Element, b: Element) -> usize {
        a as usize * self.tables.q as usize + b as usize
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        self.tables.add[self.idx(a, b)]
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.tables.sub[self.idx(a, b)]
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        self.sub(0, a)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.tables.mul[self.idx(a, b)]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Element) -> Option<Element> {
        (a != 0).then(|| self.tables.inv[a as usize])
    }

    pub fn pow(&self, a: Element, mut exp: u64) -> Element {
        let mut base = a;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// `a^(p^i)`, the `i`-th iterate of the Frobenius automorphism.
    pub fn frobenius(&self, a: Element, i: usize) -> Element {
        let mut x = a;
        for _ in 0..(i % self.tables.e.max(1)) {
            x = self.pow(x, u64::from(self.tables.p));
        }
        x
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.tables.q).map(|a| a as Element)
    }
}
