use super::{Poly, Ring};
use crate::error::{Error, Result};

/// Determinant of a square matrix of polynomials by fraction-free Bareiss
/// elimination. Every intermediate division is exact in `R[z]`; a failed
/// division is reported rather than silently truncated.
pub fn bareiss_determinant<R: Ring>(matrix: &[Vec<Poly<R>>]) -> Result<Poly<R>> {
    let n = matrix.len();
    if n == 0 {
        return Ok(Poly::one());
    }
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InexactDivision("non-square matrix"));
    }
    let mut m: Vec<Vec<Poly<R>>> = matrix.to_vec();
    let mut sign_flip = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(Poly::zero());
            };
            m.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .ok_or(Error::InexactDivision("Bareiss elimination"))?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign_flip { -det } else { det })
}

/// Wronskian `det(f_j^{(i)})` of a list of polynomials; `1` for the empty list.
pub fn wronskian<R: Ring>(fs: &[Poly<R>]) -> Result<Poly<R>> {
    let rows: Vec<Vec<Poly<R>>> = (0..fs.len())
        .map(|i| fs.iter().map(|f| f.nth_derivative(i)).collect())
        .collect();
    bareiss_determinant(&rows)
}
