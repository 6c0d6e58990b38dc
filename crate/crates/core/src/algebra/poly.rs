//! Dense univariate polynomials over a [`FieldSpec`], coefficients lowest
//! degree first. Only what field construction needs: products, remainders and
//! an exhaustive irreducibility test for small degrees.

use super::field::{Element, FieldSpec};

fn trim(mut a: Vec<Element>) -> Vec<Element> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn mul(f: &FieldSpec, a: &[Element], b: &[Element]) -> Vec<Element> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a monic `m`.
pub fn rem(f: &FieldSpec, a: &[Element], m: &[Element]) -> Vec<Element> {
    let dm = m.len() - 1;
    let mut r = trim(a.to_vec());
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(lead, c));
        }
        r = trim(r);
    }
    r
}

/// `a * b mod m`, padded to exactly `deg m` coefficients.
pub fn mulmod(f: &FieldSpec, a: &[Element], b: &[Element], m: &[Element]) -> Vec<Element> {
    let mut r = rem(f, &mul(f, a, b), m);
    r.resize(m.len() - 1, 0);
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`q`
/// digits of `code`.
fn monic_from_code(q: u32, deg: usize, mut code: u64) -> Vec<Element> {
    let mut v = Vec::with_capacity(deg + 1);
    for _ in 0..deg {
        v.push((code % u64::from(q)) as Element);
        code /= u64::from(q);
    }
    v.push(1);
    v
}

/// Exhaustive factor check: `m` is irreducible iff no monic polynomial of
/// degree `1..=deg/2` divides it.
pub fn is_irreducible(f: &FieldSpec, m: &[Element]) -> bool {
    let m = trim(m.to_vec());
    if m.len() < 2 {
        return false;
    }
    let deg = m.len() - 1;
    let q = f.size();
    for d in 1..=deg / 2 {
        let count = u64::from(q).pow(d as u32);
        for code in 0..count {
            let g = monic_from_code(q, d, code);
            if rem(f, &m, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

/// First monic irreducible polynomial of degree `deg` over `f`, in order of
/// the base-`q` encoding of its lower coefficients.
pub fn find_irreducible(f: &FieldSpec, deg: usize) -> Vec<Element> {
    let q = f.size();
    let count = u64::from(q).pow(deg as u32);
    (0..count)
        .map(|code| monic_from_code(q, deg, code))
        .find(|m| m[0] != 0 && is_irreducible(f, m))
        .expect("irreducible polynomials exist in every degree")
}

fn prime_field(p: u32) -> FieldSpec {
    FieldSpec::with_modulus(p, 1, &[]).expect("prime field")
}

pub(crate) fn is_irreducible_prime(p: u32, m: &[u8]) -> bool {
    is_irreducible(&prime_field(p), m)
}

pub(crate) fn find_irreducible_prime(p: u32, deg: usize) -> Vec<u8> {
    find_irreducible(&prime_field(p), deg)
}
