//! Gabidulin codes: evaluations of linearized polynomials of bounded
//! `q`-degree at `F_q`-independent points of `F_{q^m}`.

use crate::algebra::{Element, ExtElement, ExtensionField, FieldSpec, Matrix};
use crate::grassmann::FerrersDiagram;

use super::{FerrersDiagramCode, RankMetricError, MAX_WORDS};

/// `f(x) = Σ a_i x^{q^i}` over `F_{q^m}`.
#[derive(Clone, Debug)]
pub struct LinearizedPolynomial {
    coeffs: Vec<ExtElement>,
}

impl LinearizedPolynomial {
    pub fn new(coeffs: Vec<ExtElement>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[ExtElement] {
        &self.coeffs
    }

    /// Largest `i` with `a_i != 0`.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|a| a.iter().any(|&x| x != 0))
    }

    pub fn eval(&self, field: &ExtensionField, x: &[Element]) -> ExtElement {
        let mut acc = field.zero();
        let mut power = x.to_vec();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = field.frobenius(&power, 1);
            }
            acc = field.add(&acc, &field.mul(a, &power));
        }
        acc
    }
}

/// The Gabidulin code of `k x m` matrices over `F_q` with minimum rank
/// distance `delta`: row `i` of a word is `f(α^i)` written over the
/// polynomial basis of `F_{q^m}`, for every `f` of `q`-degree at most
/// `k - delta`.
///
/// Words are listed by the index whose base-`q` digits are the coordinates of
/// `a_0, a_1, …` in turn, lowest digit first.
pub fn gabidulin_mrd(
    k: usize,
    m: usize,
    delta: usize,
    field: &FieldSpec,
) -> Result<FerrersDiagramCode, RankMetricError> {
    if delta == 0 || delta > k || k > m {
        return Err(RankMetricError::BadMrdParams { k, m, delta });
    }
    let ext = ExtensionField::new(field, m)?;
    let dim = m * (k - delta + 1);
    let q = u64::from(field.size());
    let count = q.checked_pow(dim as u32).filter(|&c| c <= MAX_WORDS).ok_or(RankMetricError::TooLarge(MAX_WORDS))?;

    // generator j = (coefficient slot j / m, basis element j % m)
    let points: Vec<ExtElement> = (0..k).map(|i| ext.basis(i)).collect();
    let generators: Vec<Matrix> = (0..dim)
        .map(|j| {
            let mut coeffs = vec![ext.zero(); k - delta + 1];
            coeffs[j / m] = ext.basis(j % m);
            evaluate(&ext, &LinearizedPolynomial::new(coeffs), &points)
        })
        .collect();

    let mut words = Vec::with_capacity(count as usize);
    let mut digits = vec![0 as Element; dim];
    let mut current = Matrix::zeros(k, m);
    for idx in 0..count {
        words.push(current.clone());
        if idx + 1 == count {
            break;
        }
        // a digit wrapping from q-1 to 0 also adds its generator once, since
        // q copies sum to zero
        for (j, d) in digits.iter_mut().enumerate() {
            axpy(field, &mut current, &generators[j], 1);
            if u64::from(*d) + 1 < q {
                *d += 1;
                break;
            }
            *d = 0;
        }
    }
    Ok(FerrersDiagramCode::from_parts(field, FerrersDiagram::full(k, m), delta, words))
}

fn evaluate(ext: &ExtensionField, f: &LinearizedPolynomial, points: &[ExtElement]) -> Matrix {
    let mut out = Matrix::zeros(points.len(), ext.degree());
    for (i, p) in points.iter().enumerate() {
        for (j, &x) in f.eval(ext, p).iter().enumerate() {
            out.set(i, j, x);
        }
    }
    out
}

fn axpy(f: &FieldSpec, acc: &mut Matrix, g: &Matrix, a: Element) {
    for r in 0..acc.rows() {
        for c in 0..acc.cols() {
            let v = f.add(acc.get(r, c), f.mul(a, g.get(r, c)));
            acc.set(r, c, v);
        }
    }
}
