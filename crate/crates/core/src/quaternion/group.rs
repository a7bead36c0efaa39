//! Finite groups `Γ` with a central element `e` of order 2, stored as
//! multiplication tables.

use std::collections::HashMap;
use std::fmt;

use super::{Quaternion, QuaternionError};
use crate::exactnum::QNum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// Preimage of a cyclic group of order `m`; cyclic of order `2m`.
    Cyclic(usize),
    /// Preimage of a dihedral group of order `2m`; dicyclic of order `4m`.
    BinaryDihedral(usize),
    /// Binary tetrahedral, over `Alt₄`.
    Tetrahedral,
    /// Binary octahedral, over `Sym₄`.
    Octahedral,
    /// Binary icosahedral, over `Alt₅`.
    Icosahedral,
}

impl GroupKind {
    pub fn order(&self) -> usize {
        match *self {
            GroupKind::Cyclic(m) => 2 * m,
            GroupKind::BinaryDihedral(m) => 4 * m,
            GroupKind::Tetrahedral => 24,
            GroupKind::Octahedral => 48,
            GroupKind::Icosahedral => 120,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(m) => write!(f, "cyclic({m})"),
            GroupKind::BinaryDihedral(m) => write!(f, "binary_dihedral({m})"),
            GroupKind::Tetrahedral => write!(f, "2T"),
            GroupKind::Octahedral => write!(f, "2O"),
            GroupKind::Icosahedral => write!(f, "2I"),
        }
    }
}

/// A finite group with identity `0` and a distinguished central involution.
#[derive(Clone)]
pub struct BinaryGroup {
    pub kind: GroupKind,
    table: Vec<Vec<u16>>,
    inv: Vec<u16>,
    e: usize,
    derived: Vec<bool>,
    quats: Option<Vec<Quaternion>>,
}

impl BinaryGroup {
    pub fn build(kind: GroupKind) -> Result<BinaryGroup, QuaternionError> {
        match kind {
            GroupKind::Cyclic(m) => Ok(Self::cyclic(m)),
            GroupKind::BinaryDihedral(m) => Ok(Self::dicyclic(m)),
            _ => Self::from_quaternions(kind),
        }
    }

    fn from_table(kind: GroupKind, table: Vec<Vec<u16>>, e: usize, quats: Option<Vec<Quaternion>>) -> BinaryGroup {
        let n = table.len();
        let inv = (0..n).map(|a| (0..n).find(|&b| table[a][b] == 0).expect("group table") as u16).collect();
        let mut g = BinaryGroup { kind, table, inv, e, derived: Vec::new(), quats };
        g.derived = g.compute_derived();
        g
    }

    fn cyclic(m: usize) -> BinaryGroup {
        let n = 2 * m;
        let table = (0..n).map(|a| (0..n).map(|b| ((a + b) % n) as u16).collect()).collect();
        Self::from_table(GroupKind::Cyclic(m), table, m, None)
    }

    /// `⟨X, Y | X^{2m} = 1, Y² = X^m, Y X Y⁻¹ = X⁻¹⟩`, with `X^k Y^f` at index
    /// `k + 2m·f`.
    fn dicyclic(m: usize) -> BinaryGroup {
        let n = 2 * m;
        let idx = |k: usize, f: usize| (k % n + n * f) as u16;
        let table = (0..2 * n)
            .map(|a| {
                let (ka, fa) = (a % n, a / n);
                (0..2 * n)
                    .map(|b| {
                        let (kb, fb) = (b % n, b / n);
                        match (fa, fb) {
                            (0, _) => idx(ka + kb, fb),
                            (1, 0) => idx(ka + n - kb, 1),
                            _ => idx(ka + n - kb + m, 0),
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_table(GroupKind::BinaryDihedral(m), table, m, None)
    }

    fn seeds(kind: GroupKind) -> Vec<Quaternion> {
        let h = QNum::frac(1, 2);
        let q = |w: QNum, x: QNum, y: QNum, z: QNum| Quaternion::new(w, x, y, z);
        let t = q(h.clone(), h.clone(), h.clone(), h.clone());
        match kind {
            GroupKind::Tetrahedral => vec![Quaternion::basis(1), t],
            GroupKind::Octahedral => {
                let r = &QNum::sqrt2() * &h;
                vec![Quaternion::basis(1), t, q(r.clone(), r, QNum::zero(), QNum::zero())]
            }
            _ => {
                let tau = QNum::tau();
                let tau_inv = &tau - &QNum::one();
                vec![t, q(&tau * &h, &tau_inv * &h, h.clone(), QNum::zero())]
            }
        }
    }

    fn from_quaternions(kind: GroupKind) -> Result<BinaryGroup, QuaternionError> {
        let gens = Self::seeds(kind);
        let expected = kind.order();
        let mut elems = vec![Quaternion::one()];
        let mut index: HashMap<Quaternion, usize> = HashMap::from([(Quaternion::one(), 0)]);
        let mut k = 0;
        while k < elems.len() {
            for g in &gens {
                let p = &elems[k] * g;
                if !index.contains_key(&p) {
                    if elems.len() == expected {
                        return Err(QuaternionError::BadGenerators { got: expected + 1, expected });
                    }
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            k += 1;
        }
        if elems.len() != expected {
            return Err(QuaternionError::BadGenerators { got: elems.len(), expected });
        }
        let table = elems.iter().map(|a| elems.iter().map(|b| index[&(a * b)] as u16).collect()).collect();
        let e = index[&-&Quaternion::one()];
        Ok(Self::from_table(kind, table, e, Some(elems)))
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// The central involution `e` (the quaternion `−1`).
    pub fn e(&self) -> usize {
        self.e
    }

    pub fn quaternion(&self, a: usize) -> Option<&Quaternion> {
        self.quats.as_ref().map(|q| &q[a])
    }

    pub fn has_quaternions(&self) -> bool {
        self.quats.is_some()
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Order of the image of `a` in `Γ₀ = Γ/{1, e}`.
    pub fn quotient_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 && x != self.e {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Representative of `a·{1, e}`: the smaller index.
    pub fn quotient_rep(&self, a: usize) -> usize {
        a.min(self.mul(a, self.e))
    }

    fn compute_derived(&self) -> Vec<bool> {
        let n = self.order();
        let mut member = vec![false; n];
        let mut list = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !member[c] {
                    member[c] = true;
                    list.push(c);
                }
            }
        }
        let gens = list.clone();
        let mut k = 0;
        while k < list.len() {
            for &g in &gens {
                let c = self.mul(list[k], g);
                if !member[c] {
                    member[c] = true;
                    list.push(c);
                }
            }
            k += 1;
        }
        member
    }

    pub fn in_derived(&self, a: usize) -> bool {
        self.derived[a]
    }

    pub fn derived_order(&self) -> usize {
        self.derived.iter().filter(|&&x| x).count()
    }

    pub fn abelianization_order(&self) -> usize {
        self.order() / self.derived_order()
    }

    /// `(a, b) ∈ Γ₂`, i.e. `ab ≡ 1` modulo the derived subgroup.
    pub fn gamma2_member(&self, a: usize, b: usize) -> bool {
        self.derived[self.mul(a, b)]
    }

    /// Checks that `(x, y) ↦ xy·D(Γ)` is constant on the cosets of `Γ₂`
    /// (tested against the generators `(a, a⁻¹)` of `Γ₂`) and that the
    /// number of cosets equals `|Γ^ab|`.
    pub fn gamma2_quotient_is_abelianization(&self) -> bool {
        let n = self.order();
        let members = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| self.gamma2_member(a, b)).count();
        let coset = |c: usize| -> Vec<bool> {
            let mut v = vec![false; n];
            for d in 0..n {
                if self.derived[d] {
                    v[self.mul(c, d)] = true;
                }
            }
            v
        };
        let invariant = (0..n).all(|x| {
            (0..n).all(|y| {
                let cls = coset(self.mul(x, y));
                (0..n).all(|a| cls[self.mul(self.mul(x, a), self.mul(y, self.inv(a)))])
            })
        });
        invariant && n * n / members == self.abelianization_order() && n * n % members == 0
    }
}

impl fmt::Debug for BinaryGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryGroup({}, order {})", self.kind, self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_abelianizations() {
        for (k, ab) in [
            (GroupKind::Cyclic(5), 10),
            (GroupKind::BinaryDihedral(3), 4),
            (GroupKind::BinaryDihedral(4), 4),
            (GroupKind::Tetrahedral, 3),
            (GroupKind::Octahedral, 2),
            (GroupKind::Icosahedral, 1),
        ] {
            let g = BinaryGroup::build(k).unwrap();
            assert_eq!(g.order(), k.order(), "{k}");
            assert_eq!(g.abelianization_order(), ab, "{k}");
            assert!(g.is_central(g.e()));
            assert_eq!(g.element_order(g.e()), 2);
        }
    }

    #[test]
    fn gamma2_membership() {
        let g = BinaryGroup::build(GroupKind::Tetrahedral).unwrap();
        assert!((0..24).all(|a| g.gamma2_member(a, g.inv(a))));
        let three = (0..24).find(|&a| g.element_order(a) == 3 && !g.in_derived(a)).unwrap();
        assert!(!g.gamma2_member(three, 0));
        assert!(g.gamma2_quotient_is_abelianization());
        let i = BinaryGroup::build(GroupKind::Icosahedral).unwrap();
        assert!((0..120).all(|a| (0..120).all(|b| i.gamma2_member(a, b))));
    }
}
