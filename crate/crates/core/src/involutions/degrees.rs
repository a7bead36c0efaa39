//! Characteristic degrees from the eigenvalues of a Coxeter element.

use nalgebra::DMatrix;
use thiserror::Error;

use crate::coxgroup::RootSystem;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DegreeError {
    #[error("characteristic degrees need an irreducible type")]
    NotIrreducible,
    #[error("eigenangle {0} is not within tolerance of an exponent")]
    Rounding(f64),
    #[error("degree check failed: product {product} vs order {order}, exponent sum {sum} vs {reflections} reflections")]
    Validation { product: u128, order: u128, sum: usize, reflections: usize },
}

const TOLERANCE: f64 = 1e-6;

/// Degrees `d_j = m_j + 1`, where `e^{2πi m_j/h}` are the eigenvalues of a
/// Coxeter element of order `h`. The floating eigenvalues are rounded to
/// exponents and the result is accepted only if `∏ d_j = |G|` and
/// `Σ (d_j − 1)` is the number of reflections.
pub fn characteristic_degrees(rs: &RootSystem) -> Result<Vec<u32>, DegreeError> {
    if !rs.ty().is_irreducible() {
        return Err(DegreeError::NotIrreducible);
    }
    let n = rs.rank();
    let b = rs.gram_f64();
    // Simple reflection s_i in the basis of simple roots: row i becomes
    // δ_ij − 2B_ij.
    let mut c = DMatrix::<f64>::identity(n, n);
    for i in 0..n {
        let mut s = DMatrix::<f64>::identity(n, n);
        for j in 0..n {
            s[(i, j)] = if i == j { -1.0 } else { -2.0 * b[i][j] };
        }
        c *= s;
    }
    let h = rs.coxeter_element().order() as f64;
    let mut degrees = Vec::with_capacity(n);
    for z in c.complex_eigenvalues().iter() {
        let mut theta = z.im.atan2(z.re);
        if theta < 0.0 {
            theta += std::f64::consts::TAU;
        }
        let x = h * theta / std::f64::consts::TAU;
        let m = x.round();
        if (x - m).abs() > TOLERANCE || m < 1.0 {
            return Err(DegreeError::Rounding(x));
        }
        degrees.push(m as u32 + 1);
    }
    degrees.sort_unstable();
    let product: u128 = degrees.iter().map(|&d| d as u128).product();
    let sum: usize = degrees.iter().map(|&d| d as usize - 1).sum();
    let (order, reflections) = (rs.ty().order(), rs.npos());
    if product != order || sum != reflections {
        return Err(DegreeError::Validation { product, order, sum, reflections });
    }
    Ok(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_degrees() {
        for (s, d) in [
            ("A2", vec![2, 3]),
            ("E6", vec![2, 5, 6, 8, 9, 12]),
            ("E8", vec![2, 8, 12, 14, 18, 20, 24, 30]),
            ("H4", vec![2, 12, 20, 30]),
            ("I2(7)", vec![2, 7]),
        ] {
            let rs = RootSystem::build(&s.parse().unwrap()).unwrap();
            assert_eq!(characteristic_degrees(&rs).unwrap(), d, "{s}");
        }
    }
}
