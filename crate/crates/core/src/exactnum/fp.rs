//! Small dense matrices over the prime fields F2 and F3.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixFp {
    p: u8,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl MatrixFp {
    pub fn zeros(p: u8, rows: usize, cols: usize) -> Self {
        assert!(p == 2 || p == 3, "only F2 and F3 are supported");
        MatrixFp { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u8, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from integer rows, reducing each entry mod p.
    pub fn from_rows(p: u8, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x.rem_euclid(p as i64) as u8);
            }
        }
        m
    }

    pub fn prime(&self) -> u8 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn inv_scalar(&self, x: u8) -> u8 {
        // Both nonzero elements of F3 are self-inverse, as is 1 in F2.
        debug_assert!(x != 0);
        x
    }

    pub fn mul(&self, o: &MatrixFp) -> MatrixFp {
        assert_eq!(self.p, o.p);
        assert_eq!(self.cols, o.rows);
        let mut out = MatrixFp::zeros(self.p, self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = 0u32;
                for k in 0..self.cols {
                    acc += self.get(i, k) as u32 * o.get(k, j) as u32;
                }
                out.set(i, j, (acc % self.p as u32) as u8);
            }
        }
        out
    }

    pub fn transpose(&self) -> MatrixFp {
        let mut t = MatrixFp::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn scale(&self, s: u8) -> MatrixFp {
        let mut m = self.clone();
        for x in &mut m.data {
            *x = (*x as u32 * s as u32 % self.p as u32) as u8;
        }
        m
    }

    /// Reduced row echelon form and pivot columns.
    pub fn row_reduce(&self) -> (MatrixFp, Vec<usize>) {
        let p = self.p as u32;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, piv * m.cols + j);
            }
            let inv = m.inv_scalar(m.get(r, c)) as u32;
            for j in 0..m.cols {
                let v = (m.get(r, j) as u32 * inv % p) as u8;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let f = m.get(i, c) as u32;
                if i == r || f == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = (m.get(i, j) as u32 + p * p - f * m.get(r, j) as u32) % p;
                    m.set(i, j, v as u8);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u8>> {
        let (r, pivots) = self.row_reduce();
        let p = self.p;
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|f| {
                let mut x = vec![0u8; self.cols];
                x[f] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    x[pc] = (p - r.get(row, f)) % p;
                }
                x
            })
            .collect()
    }

    pub fn determinant(&self) -> u8 {
        assert_eq!(self.rows, self.cols);
        let p = self.p as u32;
        let mut m = self.clone();
        let n = self.rows;
        let mut det = 1u32;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if piv != c {
                for j in 0..n {
                    m.data.swap(c * n + j, piv * n + j);
                }
                det = (p - det) % p;
            }
            let pv = m.get(c, c) as u32;
            det = det * pv % p;
            let inv = m.inv_scalar(pv as u8) as u32;
            for i in c + 1..n {
                let f = m.get(i, c) as u32 * inv % p;
                if f == 0 {
                    continue;
                }
                for j in c..n {
                    let v = (m.get(i, j) as u32 + p * p - f * m.get(c, j) as u32) % p;
                    m.set(i, j, v as u8);
                }
            }
        }
        det as u8
    }

    /// Inverse of a square matrix, or `None` when it is singular.
    pub fn inverse(&self) -> Option<MatrixFp> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = MatrixFp::zeros(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = MatrixFp::zeros(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        let p = self.p as u32;
        (0..self.rows)
            .map(|i| (self.row(i).iter().zip(v).map(|(&a, &b)| a as u32 * b as u32).sum::<u32>() % p) as u8)
            .collect()
    }

    /// Compact key: base-p digits packed into a u128 (at most 80 entries).
    pub fn key(&self) -> u128 {
        assert!(self.data.len() <= 80);
        self.data.iter().rev().fold(0u128, |acc, &x| acc * self.p as u128 + x as u128)
    }
}

impl fmt::Debug for MatrixFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixF{} {}x{}", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

pub fn fp_rank(m: &MatrixFp) -> usize {
    m.rank()
}

pub fn fp_kernel(m: &MatrixFp) -> Vec<Vec<u8>> {
    m.kernel()
}

pub fn fp_row_reduce(m: &MatrixFp) -> (MatrixFp, Vec<usize>) {
    m.row_reduce()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_over_f3() {
        let m = MatrixFp::from_rows(3, &[vec![1, 2, 0], vec![0, 1, 1], vec![2, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), MatrixFp::identity(3, 3));
        assert_eq!(inv.mul_vec(&m.mul_vec(&[2, 1, 0])), vec![2, 1, 0]);
        assert!(MatrixFp::zeros(2, 2, 2).inverse().is_none());
    }

    #[test]
    fn identity_and_zero_ranks() {
        assert_eq!(MatrixFp::identity(2, 6).rank(), 6);
        assert_eq!(MatrixFp::zeros(3, 5, 5).rank(), 0);
        assert_eq!(MatrixFp::zeros(3, 5, 5).kernel().len(), 5);
    }

    #[test]
    fn rank_nullity_over_f3() {
        let m = MatrixFp::from_rows(3, &[vec![1, 2, 0, 1], vec![2, 1, 0, 2], vec![0, 0, 1, 1]]);
        let k = m.kernel();
        assert_eq!(m.rank() + k.len(), 4);
        for v in k {
            let col: Vec<Vec<i64>> = v.iter().map(|&x| vec![x as i64]).collect();
            let prod = m.mul(&MatrixFp::from_rows(3, &col));
            assert!((0..prod.rows()).all(|i| prod.get(i, 0) == 0));
        }
    }

    #[test]
    fn determinant_f3() {
        let m = MatrixFp::from_rows(3, &[vec![2, 0], vec![0, 2]]);
        assert_eq!(m.determinant(), 1);
        let m = MatrixFp::from_rows(3, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), 2);
    }
}
