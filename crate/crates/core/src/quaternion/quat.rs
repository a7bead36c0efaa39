//! Quaternions over `Q(√2, √5)`.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::exactnum::{MatrixQ, QNum};

/// `w + x i + y j + z k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: QNum,
    pub x: QNum,
    pub y: QNum,
    pub z: QNum,
}

impl Quaternion {
    pub fn new(w: QNum, x: QNum, y: QNum, z: QNum) -> Quaternion {
        Quaternion { w, x, y, z }
    }

    pub fn one() -> Quaternion {
        Quaternion::new(QNum::one(), QNum::zero(), QNum::zero(), QNum::zero())
    }

    /// Basis element `e_n` of `(1, i, j, k)`.
    pub fn basis(n: usize) -> Quaternion {
        let mut c = [QNum::zero(), QNum::zero(), QNum::zero(), QNum::zero()];
        c[n] = QNum::one();
        let [w, x, y, z] = c;
        Quaternion::new(w, x, y, z)
    }

    pub fn from_coords(c: &[QNum]) -> Quaternion {
        Quaternion::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
    }

    pub fn coords(&self) -> [QNum; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm(&self) -> QNum {
        self.coords().iter().fold(QNum::zero(), |acc, c| &acc + &c.square())
    }

    pub fn scale(&self, s: &QNum) -> Quaternion {
        Quaternion::new(&self.w * s, &self.x * s, &self.y * s, &self.z * s)
    }

    /// Matrix of the real-linear map `f` of `H` in the basis `(1, i, j, k)`.
    pub fn linear_map(f: impl Fn(&Quaternion) -> Quaternion) -> MatrixQ {
        let cols: Vec<Vec<QNum>> = (0..4).map(|n| f(&Quaternion::basis(n)).coords().to_vec()).collect();
        MatrixQ::from_columns(&cols)
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion::new(
            &(&(a * e) - &(b * f)) - &(&(c * g) + &(d * h)),
            &(&(a * f) + &(b * e)) + &(&(c * h) - &(d * g)),
            &(&(a * g) - &(b * h)) + &(&(c * e) + &(d * f)),
            &(&(a * h) + &(b * g)) + &(&(d * e) - &(c * f)),
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})i + ({})j + ({})k", self.w, self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::basis(1), Quaternion::basis(2), Quaternion::basis(3));
        let minus_one = -&Quaternion::one();
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&(&i * &j) * &k, minus_one);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
    }

    #[test]
    fn norm_is_multiplicative() {
        let h = QNum::frac(1, 2);
        let a = Quaternion::new(h.clone(), h.clone(), h.clone(), h.clone());
        let b = Quaternion::new(QNum::int(1), QNum::int(2), QNum::int(0), QNum::sqrt5());
        assert_eq!((&a * &b).norm(), &a.norm() * &b.norm());
    }
}
