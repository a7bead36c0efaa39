//! The catalog of finite Coxeter types and their closed-form data.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
    H3,
    H4,
    I2(usize),
    /// Direct product of irreducible factors; never nested.
    Product(Vec<CoxeterType>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("unknown Coxeter type `{0}`")]
    Unknown(String),
    #[error("rank out of range for `{0}`")]
    Rank(String),
}

impl CoxeterType {
    /// Builds a product, flattening nested products. A single factor is
    /// returned unwrapped.
    pub fn product(factors: impl IntoIterator<Item = CoxeterType>) -> CoxeterType {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                CoxeterType::Product(v) => flat.extend(v),
                t => flat.push(t),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            CoxeterType::Product(flat)
        }
    }

    pub fn factors(&self) -> Vec<CoxeterType> {
        match self {
            CoxeterType::Product(v) => v.clone(),
            t => vec![t.clone()],
        }
    }

    pub fn is_irreducible(&self) -> bool {
        !matches!(self, CoxeterType::Product(_))
    }

    /// Normal form for comparing isomorphism types: `I2(2)=A1×A1`,
    /// `I2(3)=A2`, `I2(4)=B2`, `I2(6)=G2`, `D3=A3`, and product factors
    /// sorted.
    pub fn canonical(&self) -> CoxeterType {
        use CoxeterType::*;
        match self {
            I2(2) => Product(vec![A(1), A(1)]),
            I2(3) => A(2),
            I2(4) => B(2),
            I2(6) => G2,
            D(3) => A(3),
            Product(v) => {
                let mut f: Vec<CoxeterType> = CoxeterType::product(v.iter().map(|t| t.canonical())).factors();
                f.sort();
                CoxeterType::product(f)
            }
            t => t.clone(),
        }
    }

    pub fn is_isomorphic(&self, o: &CoxeterType) -> bool {
        self.canonical() == o.canonical()
    }

    pub fn rank(&self) -> usize {
        use CoxeterType::*;
        match self {
            A(n) | B(n) | D(n) => *n,
            E6 => 6,
            E7 => 7,
            E8 => 8,
            F4 | H4 => 4,
            G2 | I2(_) => 2,
            H3 => 3,
            Product(v) => v.iter().map(|t| t.rank()).sum(),
        }
    }

    /// Group order |G|.
    pub fn order(&self) -> u128 {
        use CoxeterType::*;
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            A(n) => fact(n + 1),
            B(n) => (1u128 << n) * fact(*n),
            D(n) => (1u128 << (n - 1)) * fact(*n),
            E6 => 51840,
            E7 => 2903040,
            E8 => 696729600,
            F4 => 1152,
            G2 => 12,
            H3 => 120,
            H4 => 14400,
            I2(m) => 2 * *m as u128,
            Product(v) => v.iter().map(|t| t.order()).product(),
        }
    }

    /// Number of reflections, equal to the number of positive roots.
    pub fn reflection_count(&self) -> usize {
        use CoxeterType::*;
        match self {
            A(n) => n * (n + 1) / 2,
            B(n) => n * n,
            D(n) => n * (n - 1),
            E6 => 36,
            E7 => 63,
            E8 => 120,
            F4 => 24,
            G2 => 6,
            H3 => 15,
            H4 => 60,
            I2(m) => *m,
            Product(v) => v.iter().map(|t| t.reflection_count()).sum(),
        }
    }

    /// Coxeter matrix in Bourbaki numbering (block diagonal for products).
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        use CoxeterType::*;
        let chain = |labels: &[u32]| {
            let n = labels.len() + 1;
            let mut m = vec![vec![2u32; n]; n];
            for i in 0..n {
                m[i][i] = 1;
            }
            for (i, &l) in labels.iter().enumerate() {
                m[i][i + 1] = l;
                m[i + 1][i] = l;
            }
            m
        };
        match self {
            A(n) => chain(&vec![3; n - 1]),
            B(n) => {
                let mut l = vec![3; n - 1];
                l[n - 2] = 4;
                chain(&l)
            }
            D(n) => {
                let mut m = chain(&vec![3; n - 2]);
                for row in m.iter_mut() {
                    row.push(2);
                }
                m.push(vec![2; *n]);
                m[n - 1][n - 1] = 1;
                m[n - 3][n - 1] = 3;
                m[n - 1][n - 3] = 3;
                m
            }
            E6 | E7 | E8 => {
                // Bourbaki: 1-3-4-5-6-7-8 chain, with 2 attached to 4.
                let n = self.rank();
                let mut m = vec![vec![2u32; n]; n];
                for i in 0..n {
                    m[i][i] = 1;
                }
                let mut link = |a: usize, b: usize| {
                    m[a - 1][b - 1] = 3;
                    m[b - 1][a - 1] = 3;
                };
                link(1, 3);
                link(2, 4);
                for a in 3..n {
                    link(a, a + 1);
                }
                m
            }
            F4 => chain(&[3, 4, 3]),
            G2 => chain(&[6]),
            H3 => chain(&[5, 3]),
            H4 => chain(&[5, 3, 3]),
            I2(m) => chain(&[*m as u32]),
            Product(v) => {
                let n = self.rank();
                let mut m = vec![vec![2u32; n]; n];
                let mut off = 0;
                for t in v {
                    let b = t.coxeter_matrix();
                    for (i, row) in b.iter().enumerate() {
                        for (j, &x) in row.iter().enumerate() {
                            m[off + i][off + j] = x;
                        }
                    }
                    off += b.len();
                }
                m
            }
        }
    }

    /// The set of Coxeter-matrix entries greater than 2.
    pub fn m_set(&self) -> BTreeSet<u32> {
        self.coxeter_matrix().into_iter().flatten().filter(|&x| x > 2).collect()
    }

    /// Every entry of the M-set is odd (vacuously true when it is empty).
    pub fn is_odd_type(&self) -> bool {
        self.m_set().iter().all(|m| m % 2 == 1)
    }

    /// Whether the longest element is `−1`.
    pub fn contains_minus_one(&self) -> bool {
        use CoxeterType::*;
        match self {
            A(n) => *n == 1,
            D(n) => n % 2 == 0,
            E6 => false,
            I2(m) => m % 2 == 0,
            Product(v) => v.iter().all(|t| t.contains_minus_one()),
            _ => true,
        }
    }

    /// Maximum degree of an involution.
    pub fn reduced_rank(&self) -> usize {
        use CoxeterType::*;
        match self {
            A(n) => (n + 1) / 2,
            D(n) => {
                if n % 2 == 0 {
                    *n
                } else {
                    n - 1
                }
            }
            E6 => 4,
            I2(m) => {
                if m % 2 == 0 {
                    2
                } else {
                    1
                }
            }
            Product(v) => v.iter().map(|t| t.reduced_rank()).sum(),
            t => t.rank(),
        }
    }

    /// Whether the positive roots can be given exact coordinates in Q(√2,√5).
    pub fn has_coordinates(&self) -> bool {
        match self {
            CoxeterType::I2(_) => false,
            CoxeterType::Product(v) => v.iter().all(|t| t.has_coordinates()),
            _ => true,
        }
    }

    fn validate(self) -> Result<CoxeterType, TypeError> {
        use CoxeterType::*;
        let ok = match &self {
            A(n) => *n >= 1,
            B(n) => *n >= 2,
            D(n) => *n >= 3,
            I2(m) => *m >= 3,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(TypeError::Rank(self.to_string()))
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CoxeterType::*;
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            D(n) => write!(f, "D{n}"),
            E6 => write!(f, "E6"),
            E7 => write!(f, "E7"),
            E8 => write!(f, "E8"),
            F4 => write!(f, "F4"),
            G2 => write!(f, "G2"),
            H3 => write!(f, "H3"),
            H4 => write!(f, "H4"),
            I2(m) => write!(f, "I2({m})"),
            Product(v) => {
                let parts: Vec<String> = v.iter().map(|t| t.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
        }
    }
}

impl FromStr for CoxeterType {
    type Err = TypeError;

    /// Grammar: `NAME` or `NAME x NAME ...`, where `I2` takes a parenthesized
    /// integer, e.g. `E7`, `B5`, `I2(7)`, `A2xA2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parts: Vec<&str> = s.split(['x', '×']).map(str::trim).collect();
        if parts.len() > 1 {
            let factors = parts.iter().map(|p| p.parse()).collect::<Result<Vec<_>, _>>()?;
            return Ok(CoxeterType::product(factors));
        }
        let unknown = || TypeError::Unknown(s.to_string());
        let upper = s.to_ascii_uppercase();
        if let Some(rest) = upper.strip_prefix("I2(") {
            let m = rest.strip_suffix(')').ok_or_else(unknown)?.parse().map_err(|_| unknown())?;
            return CoxeterType::I2(m).validate();
        }
        let t = match upper.as_str() {
            "E6" => CoxeterType::E6,
            "E7" => CoxeterType::E7,
            "E8" => CoxeterType::E8,
            "F4" => CoxeterType::F4,
            "G2" => CoxeterType::G2,
            "H3" => CoxeterType::H3,
            "H4" => CoxeterType::H4,
            _ => {
                let (head, num) = upper.split_at(1.min(upper.len()));
                let n: usize = num.parse().map_err(|_| unknown())?;
                match head {
                    "A" => CoxeterType::A(n),
                    "B" => CoxeterType::B(n),
                    "D" => CoxeterType::D(n),
                    _ => return Err(unknown()),
                }
            }
        };
        t.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["E7", "B5", "I2(7)", "A2xA2", "H4", "D4xI2(5)"] {
            let t: CoxeterType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!("Q3".parse::<CoxeterType>().is_err());
        assert!("A0".parse::<CoxeterType>().is_err());
        assert!("I2(2)".parse::<CoxeterType>().is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(CoxeterType::E6.order(), 2u128.pow(7) * 81 * 5);
        assert_eq!(CoxeterType::B(3).order(), 48);
        assert_eq!(CoxeterType::D(4).reflection_count(), 12);
        assert_eq!(CoxeterType::A(3).reduced_rank(), 2);
        assert_eq!(CoxeterType::D(5).reduced_rank(), 4);
        assert_eq!(CoxeterType::E6.reduced_rank(), 4);
    }

    #[test]
    fn m_sets() {
        use CoxeterType::*;
        assert_eq!(E8.m_set(), [3].into());
        assert_eq!(F4.m_set(), [3, 4].into());
        assert_eq!(H3.m_set(), [3, 5].into());
        assert!(CoxeterType::product([A(1), A(1)]).m_set().is_empty());
        assert!(H4.is_odd_type());
        assert!(!B(5).is_odd_type());
        assert!(I2(7).is_odd_type());
    }

    #[test]
    fn canonical_forms() {
        use CoxeterType::*;
        assert!(I2(3).is_isomorphic(&A(2)));
        assert!(D(3).is_isomorphic(&A(3)));
        assert!(CoxeterType::product([B(2), A(1)]).is_isomorphic(&CoxeterType::product([A(1), I2(4)])));
    }
}
