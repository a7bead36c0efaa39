//! h-polynomials: `h_n` is the number of conjugacy classes of involutions of
//! degree `n`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::classes::{class_key, classes_by_orbit, involutions_by_group};
use super::InvolutionError;
use crate::coxgroup::{enumerate_group, CoxeterType, Enumeration, RootSystem};
use crate::cubes::{involutions_by_cubes, phi_orbit_class_table};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HPolynomial {
    pub coeffs: Vec<u64>,
}

impl HPolynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HPolynomial { coeffs }
    }

    /// `1 + t + ... + t^k`
    pub fn geometric(k: usize) -> Self {
        HPolynomial::new(vec![1; k + 1])
    }

    pub fn one() -> Self {
        HPolynomial::new(vec![1])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, o: &HPolynomial) -> HPolynomial {
        let mut c = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        HPolynomial::new(c)
    }

    pub fn add(&self, o: &HPolynomial) -> HPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |p: &HPolynomial, i: usize| p.coeffs.get(i).copied().unwrap_or(0);
        HPolynomial::new((0..n).map(|i| get(self, i) + get(o, i)).collect())
    }

    /// Exact division by `1 + t`; `None` if it does not divide.
    pub fn div_one_plus_t(&self) -> Option<HPolynomial> {
        let mut rem: Vec<i64> = self.coeffs.iter().map(|&x| x as i64).collect();
        let n = rem.len();
        if n < 2 {
            return None;
        }
        let mut q = vec![0i64; n - 1];
        for i in (1..n).rev() {
            q[i - 1] = rem[i];
            rem[i] -= q[i - 1];
            rem[i - 1] -= q[i - 1];
        }
        if rem.iter().any(|&x| x != 0) || q.iter().any(|&x| x < 0) {
            return None;
        }
        Some(HPolynomial::new(q.into_iter().map(|x| x as u64).collect()))
    }

    /// `h_n = h_{d−n}`
    pub fn is_reciprocal(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `h_n ≤ h_{n+1}` for `n < d/2`.
    pub fn is_increasing_to_middle(&self) -> bool {
        let d = self.degree();
        (0..d).filter(|&n| 2 * n < d).all(|n| self.coeffs[n] <= self.coeffs[n + 1])
    }

    pub fn csv_fields(&self) -> String {
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for HPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c == 1 && n > 0 { String::new() } else { c.to_string() };
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coef}t")?,
                _ => write!(f, "{coef}t^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Closed forms for the irreducible types, multiplied over product factors.
pub fn h_polynomial_formula(ty: &CoxeterType) -> HPolynomial {
    use CoxeterType::*;
    let s = HPolynomial::geometric;
    let v = |c: &[u64]| HPolynomial::new(c.to_vec());
    match ty {
        A(n) => s((n + 1) / 2),
        B(n) if n % 2 == 0 => s(n / 2).mul(&s(n / 2)),
        B(n) => s((n - 1) / 2).mul(&s((n + 1) / 2)),
        D(n) if n % 2 == 1 => s((n - 1) / 2).mul(&s((n + 1) / 2)).div_one_plus_t().expect("divisible"),
        D(n) => {
            let mut t = vec![0; n / 2 + 1];
            t[n / 2] = 1;
            v(&t).add(&s(n / 2).mul(&s(n / 2 + 1)).div_one_plus_t().expect("divisible"))
        }
        E6 | H4 => s(4),
        E7 => v(&[1, 1, 1, 2, 2, 1, 1, 1]),
        E8 => v(&[1, 1, 1, 1, 2, 1, 1, 1, 1]),
        F4 => v(&[1, 2, 2, 2, 1]),
        G2 => v(&[1, 2, 1]),
        H3 => s(3),
        I2(m) if m % 2 == 1 => s(1),
        I2(_) => v(&[1, 2, 1]),
        Product(f) => f.iter().fold(HPolynomial::one(), |acc, t| acc.mul(&h_polynomial_formula(t))),
    }
}

/// Counts classes per degree.
pub fn h_polynomial_from_classes(degrees: impl IntoIterator<Item = usize>) -> HPolynomial {
    let mut c = Vec::new();
    for d in degrees {
        if c.len() <= d {
            c.resize(d + 1, 0);
        }
        c[d] += 1;
    }
    HPolynomial::new(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HMethod {
    Formula,
    /// Counted from the group: class keys over the enumerated group when it
    /// is irreducible and small enough, conjugation orbits of cube
    /// extremities for products, and Φ-orbits on subsets of a maximal cube
    /// base for large odd types.
    Enumeration { limit: u128 },
}

pub fn h_polynomial(rs: &RootSystem, method: HMethod) -> Result<HPolynomial, InvolutionError> {
    let limit = match method {
        HMethod::Formula => return Ok(h_polynomial_formula(rs.ty())),
        HMethod::Enumeration { limit } => limit,
    };
    if !rs.ty().is_irreducible() {
        let invs = involutions_by_cubes(rs);
        let classes = classes_by_orbit(rs, &invs);
        return Ok(h_polynomial_from_classes(classes.iter().map(|c| super::greedy_base(rs, &c[0]).len())));
    }
    match enumerate_group(rs, limit) {
        Enumeration::Complete(els) => {
            let keys: HashSet<_> = involutions_by_group(&els).iter().map(|n| class_key(rs, n)).collect();
            Ok(h_polynomial_from_classes(keys.iter().map(|k| k.degree)))
        }
        Enumeration::Refused { .. } if rs.ty().is_odd_type() => {
            phi_orbit_class_table(rs).map_err(|e| InvolutionError::Unsupported(e.to_string()))
        }
        Enumeration::Refused { .. } => Err(InvolutionError::Unsupported(format!(
            "{} is too large to enumerate and is not of odd type",
            rs.ty()
        ))),
    }
}

/// Number of connected components of the Coxeter graph restricted to edges
/// with odd label.
pub fn h1_rank(ty: &CoxeterType) -> usize {
    let m = ty.coxeter_matrix();
    let n = m.len();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for i in 0..n {
        for j in i + 1..n {
            if m[i][j] % 2 == 1 {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    (0..n).filter(|&i| find(&mut comp, i) == i).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Vec<u64> {
        h_polynomial_formula(&s.parse().unwrap()).coeffs
    }

    #[test]
    fn listed_closed_forms() {
        assert_eq!(f("A3"), vec![1, 1, 1]);
        assert_eq!(f("B10"), vec![1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1]);
        assert_eq!(f("B9"), vec![1, 2, 3, 4, 5, 5, 4, 3, 2, 1]);
        assert_eq!(f("D11"), vec![1, 1, 2, 2, 3, 3, 3, 2, 2, 1, 1]);
        assert_eq!(f("D4"), vec![1, 1, 3, 1, 1]);
        assert_eq!(f("D10"), vec![1, 1, 2, 2, 3, 4, 3, 2, 2, 1, 1]);
        assert_eq!(f("A1xA1"), vec![1, 2, 1]);
        assert_eq!(f("I2(9)"), vec![1, 1]);
    }

    #[test]
    fn display() {
        assert_eq!(HPolynomial::new(vec![1, 1, 3, 1, 1]).to_string(), "1 + t + 3t^2 + t^3 + t^4");
    }

    #[test]
    fn h1_ranks() {
        assert_eq!(h1_rank(&CoxeterType::F4), 2);
        assert_eq!(h1_rank(&CoxeterType::E8), 1);
        assert_eq!(h1_rank(&CoxeterType::I2(8)), 2);
        assert_eq!(h1_rank(&CoxeterType::I2(9)), 1);
    }
}
