//! Dense vectors, matrices and polynomials over Q(√2, √5).

use std::fmt;
use std::ops::{Index, IndexMut};

use super::{NumError, QNum};

pub type VectorQ = Vec<QNum>;

pub fn inner_product(u: &[QNum], v: &[QNum]) -> Result<QNum, NumError> {
    if u.len() != v.len() {
        return Err(NumError::DimensionMismatch(u.len(), v.len()));
    }
    let mut acc = QNum::zero();
    for (x, y) in u.iter().zip(v) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc += &(x * y);
    }
    Ok(acc)
}

/// Standard basis vector `e_i` of dimension `n`.
pub fn unit_vector(n: usize, i: usize) -> VectorQ {
    let mut v = vec![QNum::zero(); n];
    v[i] = QNum::one();
    v
}

pub fn vec_add(u: &[QNum], v: &[QNum]) -> VectorQ {
    u.iter().zip(v).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(u: &[QNum], v: &[QNum]) -> VectorQ {
    u.iter().zip(v).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(u: &[QNum], s: &QNum) -> VectorQ {
    u.iter().map(|x| x * s).collect()
}

pub fn vec_neg(u: &[QNum]) -> VectorQ {
    u.iter().map(|x| -x).collect()
}

/// Row-major square or rectangular matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    data: Vec<QNum>,
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ { rows, cols, data: vec![QNum::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = QNum::one();
        }
        m
    }

    pub fn from_rows(rows: &[VectorQ]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        MatrixQ { rows: r, cols: c, data: rows.iter().flatten().cloned().collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[VectorQ]) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn diagonal(entries: &[QNum]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[QNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> VectorQ {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &MatrixQ) -> Result<MatrixQ, NumError> {
        if self.cols != o.rows {
            return Err(NumError::DimensionMismatch(self.cols, o.rows));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[QNum]) -> Result<VectorQ, NumError> {
        if self.cols != v.len() {
            return Err(NumError::DimensionMismatch(self.cols, v.len()));
        }
        (0..self.rows).map(|i| inner_product(self.row(i), v)).collect()
    }

    pub fn add(&self, o: &MatrixQ) -> MatrixQ {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &MatrixQ) -> MatrixQ {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &QNum) -> MatrixQ {
        MatrixQ { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn trace(&self) -> QNum {
        let mut t = QNum::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QNum::is_zero)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (MatrixQ, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in 0..m.cols {
                    let v = &m[(r, j)] * &f;
                    m[(i, j)] -= &v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<VectorQ> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![QNum::zero(); self.cols];
                x[f] = QNum::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    x[pc] = -&r[(row, f)];
                }
                x
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<MatrixQ, NumError> {
        if !self.is_square() {
            return Err(NumError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = MatrixQ::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = QNum::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(NumError::Singular);
        }
        let mut inv = MatrixQ::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Result<QNum, NumError> {
        if !self.is_square() {
            return Err(NumError::NotSquare(self.rows, self.cols));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = QNum::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(QNum::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = &det * &pivot;
            let inv = pivot.inv()?;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let v = &m[(c, j)] * &f;
                    m[(i, j)] -= &v;
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).iter().map(QNum::to_f64).collect()).collect()
    }
}

impl Index<(usize, usize)> for MatrixQ {
    type Output = QNum;
    fn index(&self, (i, j): (usize, usize)) -> &QNum {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for MatrixQ {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut QNum {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixQ {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Dense polynomial, coefficients listed from degree 0 upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<QNum>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<QNum>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(QNum::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// `t - r`
    pub fn linear(root: QNum) -> Self {
        Poly::new(vec![-root, QNum::one()])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = vec![QNum::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::new(vec![QNum::one()]), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &QNum) -> QNum {
        self.coeffs.iter().rev().fold(QNum::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &MatrixQ) -> MatrixQ {
        let n = m.rows();
        let mut acc = MatrixQ::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).expect("square").add(&MatrixQ::identity(n).scale(c));
        }
        acc
    }
}

/// Characteristic polynomial `det(tI − M)` by the Faddeev–LeVerrier recurrence.
pub fn char_poly(m: &MatrixQ) -> Result<Poly, NumError> {
    if !m.is_square() {
        return Err(NumError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    let mut coeffs = vec![QNum::zero(); n + 1];
    coeffs[n] = QNum::one();
    let mut mk = MatrixQ::zeros(n, n);
    for k in 1..=n {
        mk = m.mul(&mk)?.add(&MatrixQ::identity(n).scale(&coeffs[n - k + 1]));
        let t = m.mul(&mk)?.trace();
        coeffs[n - k] = -(&t * &QNum::frac(1, k as i64));
    }
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_ints(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| QNum::int(x)).collect())
    }

    #[test]
    fn char_poly_identity_and_diag() {
        let p = char_poly(&MatrixQ::identity(2)).unwrap();
        assert_eq!(p, poly_ints(&[1, -2, 1]));
        let d = MatrixQ::diagonal(&[QNum::int(1), QNum::int(-1)]);
        assert_eq!(char_poly(&d).unwrap(), poly_ints(&[-1, 0, 1]));
    }

    #[test]
    fn char_poly_of_reflection() {
        // reflection in e1 - e2 on Q^3
        let m = MatrixQ::from_rows(&[
            vec![QNum::int(0), QNum::int(1), QNum::int(0)],
            vec![QNum::int(1), QNum::int(0), QNum::int(0)],
            vec![QNum::int(0), QNum::int(0), QNum::int(1)],
        ]);
        let expected = Poly::linear(QNum::int(-1)).mul(&Poly::linear(QNum::int(1)).pow(2));
        assert_eq!(char_poly(&m).unwrap(), expected);
    }

    #[test]
    fn inner_products_of_bn_roots() {
        let e1 = unit_vector(3, 0);
        let e2 = unit_vector(3, 1);
        assert_eq!(inner_product(&e1, &e1).unwrap(), QNum::int(1));
        let d = vec_sub(&e1, &e2);
        assert_eq!(inner_product(&d, &d).unwrap(), QNum::int(2));
        assert!(inner_product(&e1, &[QNum::one()]).is_err());
    }

    #[test]
    fn inverse_and_kernel() {
        let m = MatrixQ::from_rows(&[
            vec![QNum::int(2), QNum::sqrt5()],
            vec![QNum::sqrt2(), QNum::int(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), MatrixQ::identity(2));
        let sing = MatrixQ::from_rows(&[vec![QNum::int(1), QNum::int(2)], vec![QNum::int(2), QNum::int(4)]]);
        assert_eq!(sing.inverse(), Err(NumError::Singular));
        let k = sing.kernel();
        assert_eq!(k.len(), 1);
        assert!(sing.mul_vec(&k[0]).unwrap().iter().all(QNum::is_zero));
        assert_eq!(sing.determinant().unwrap(), QNum::zero());
        assert_eq!(m.determinant().unwrap(), &QNum::int(2) - &QNum::sqrt10());
    }
}
