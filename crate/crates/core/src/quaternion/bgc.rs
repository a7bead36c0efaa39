//! `B(Γ)^c = (Γ₂ ⋊ {1, σ}) / {1, (e, e)}`, with `σ(x, y)σ = (y, x)`.

use std::collections::{HashMap, HashSet};

use super::{BinaryGroup, Quaternion, QuaternionError};
use crate::exactnum::MatrixQ;

/// `(a, b)·σ^sigma`, kept in the representative with the smaller first index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BgcElement {
    pub a: u16,
    pub b: u16,
    pub sigma: bool,
}

pub struct Bgc<'g> {
    pub gamma: &'g BinaryGroup,
}

impl<'g> Bgc<'g> {
    pub fn new(gamma: &'g BinaryGroup) -> Bgc<'g> {
        Bgc { gamma }
    }

    pub fn element(&self, a: usize, b: usize, sigma: bool) -> BgcElement {
        let g = self.gamma;
        let (ae, be) = (g.mul(a, g.e()), g.mul(b, g.e()));
        let (a, b) = if ae < a { (ae, be) } else { (a, b) };
        BgcElement { a: a as u16, b: b as u16, sigma }
    }

    pub fn identity(&self) -> BgcElement {
        self.element(0, 0, false)
    }

    pub fn mul(&self, x: BgcElement, y: BgcElement) -> BgcElement {
        let g = self.gamma;
        let (c, d) = if x.sigma { (y.b, y.a) } else { (y.a, y.b) };
        self.element(g.mul(x.a as usize, c as usize), g.mul(x.b as usize, d as usize), x.sigma ^ y.sigma)
    }

    pub fn inverse(&self, x: BgcElement) -> BgcElement {
        let g = self.gamma;
        let (a, b) = (g.inv(x.a as usize), g.inv(x.b as usize));
        if x.sigma {
            // ((a, b)σ)⁻¹ = σ(a⁻¹, b⁻¹) = (b⁻¹, a⁻¹)σ.
            self.element(b, a, true)
        } else {
            self.element(a, b, false)
        }
    }

    /// `σ_a = (a, a⁻¹)σ`.
    pub fn sigma(&self, a: usize) -> BgcElement {
        self.element(a, self.gamma.inv(a), true)
    }

    pub fn order_of(&self, x: BgcElement) -> usize {
        let id = self.identity();
        let mut y = x;
        let mut k = 1;
        while y != id {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Every element: `(a, b)` with `ab ∈ D(Γ)`, with and without `σ`.
    pub fn elements(&self) -> Vec<BgcElement> {
        let n = self.gamma.order();
        let set: HashSet<BgcElement> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.gamma.gamma2_member(a, b))
            .flat_map(|(a, b)| [self.element(a, b, false), self.element(a, b, true)])
            .collect();
        let mut v: Vec<BgcElement> = set.into_iter().collect();
        v.sort();
        v
    }

    /// `|Γ|² / |Γ^ab|`.
    pub fn expected_order(&self) -> usize {
        let n = self.gamma.order();
        n * n / self.gamma.abelianization_order()
    }

    pub fn closure(&self, gens: &[BgcElement]) -> Vec<BgcElement> {
        let id = self.identity();
        let mut seen: HashSet<BgcElement> = HashSet::from([id]);
        let mut out = vec![id];
        let mut k = 0;
        while k < out.len() {
            for &g in gens {
                let h = self.mul(out[k], g);
                if seen.insert(h) {
                    out.push(h);
                }
            }
            k += 1;
        }
        out
    }

    pub fn coxeter_matrix(&self, gens: &[BgcElement]) -> Vec<Vec<u32>> {
        gens.iter().map(|&x| gens.iter().map(|&y| self.order_of(self.mul(x, y)) as u32).collect()).collect()
    }

    /// The distinct `σ_a`, one per element of `Γ₀`.
    pub fn reflections(&self) -> Vec<BgcElement> {
        let mut v: Vec<BgcElement> = (0..self.gamma.order()).map(|a| self.sigma(a)).collect::<HashSet<_>>().into_iter().collect();
        v.sort();
        v
    }

    /// Pairs `(a, b)` of `Γ` where the order of `σ_a σ_b` differs from the
    /// order of `ab⁻¹` in `Γ₀`, over all pairs.
    pub fn product_order_mismatches(&self) -> usize {
        let g = self.gamma;
        let n = g.order();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| {
                self.order_of(self.mul(self.sigma(a), self.sigma(b))) != g.quotient_order(g.mul(a, g.inv(b)))
            })
            .count()
    }

    /// Matrix of `φ(x)` in `O₄`: `z ↦ a z b̄`, preceded by `z ↦ −z̄` when `x`
    /// involves `σ`.
    pub fn phi_to_o4(&self, x: BgcElement) -> Result<MatrixQ, QuaternionError> {
        let q = |i: u16| {
            self.gamma.quaternion(i as usize).cloned().ok_or_else(|| QuaternionError::NoCoordinates(self.gamma.kind.to_string()))
        };
        let (a, b) = (q(x.a)?, q(x.b)?.conj());
        Ok(Quaternion::linear_map(|z| {
            let z = if x.sigma { -&z.conj() } else { z.clone() };
            &(&a * &z) * &b
        }))
    }

    /// Conjugacy classes of involutions, by orbit search under conjugation
    /// by `gens`.
    pub fn involution_classes(&self, elements: &[BgcElement], gens: &[BgcElement]) -> Vec<Vec<BgcElement>> {
        let id = self.identity();
        let invs: Vec<BgcElement> = elements.iter().copied().filter(|&x| x != id && self.mul(x, x) == id).collect();
        let mut class_of: HashMap<BgcElement, usize> = HashMap::new();
        let mut classes = Vec::new();
        for &u in &invs {
            if class_of.contains_key(&u) {
                continue;
            }
            let mut orbit = vec![u];
            class_of.insert(u, classes.len());
            let mut k = 0;
            while k < orbit.len() {
                for &g in gens {
                    let v = self.mul(self.mul(g, orbit[k]), self.inverse(g));
                    if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(v) {
                        e.insert(classes.len());
                        orbit.push(v);
                    }
                }
                k += 1;
            }
            classes.push(orbit);
        }
        classes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::GroupKind;

    #[test]
    fn group_orders() {
        for (k, n) in [
            (GroupKind::Cyclic(4), 8),
            (GroupKind::BinaryDihedral(3), 36),
            (GroupKind::Tetrahedral, 192),
            (GroupKind::Octahedral, 1152),
        ] {
            let g = BinaryGroup::build(k).unwrap();
            let b = Bgc::new(&g);
            assert_eq!(b.expected_order(), n, "{k}");
            assert_eq!(b.elements().len(), n, "{k}");
        }
    }

    #[test]
    fn sigma_basics() {
        let g = BinaryGroup::build(GroupKind::Tetrahedral).unwrap();
        let b = Bgc::new(&g);
        assert_eq!(b.sigma(0), b.element(0, 0, true));
        assert!((0..24).all(|a| b.mul(b.sigma(a), b.sigma(a)) == b.identity()));
        assert!((0..24).all(|a| b.sigma(a) == b.sigma(g.mul(a, g.e()))));
        assert_eq!(b.product_order_mismatches(), 0);
        assert_eq!(b.closure(&b.reflections()).len(), 192);
        let x = b.element(3, 5, true);
        assert_eq!(b.mul(x, b.inverse(x)), b.identity());
    }

    #[test]
    fn phi_of_sigma_is_minus_conjugation() {
        let g = BinaryGroup::build(GroupKind::Tetrahedral).unwrap();
        let b = Bgc::new(&g);
        let m = b.phi_to_o4(b.sigma(0)).unwrap();
        let d: Vec<crate::exactnum::QNum> = [-1, 1, 1, 1].iter().map(|&x| crate::exactnum::QNum::int(x)).collect();
        assert_eq!(m, MatrixQ::diagonal(&d));
        assert_eq!(b.phi_to_o4(b.identity()).unwrap(), MatrixQ::identity(4));
    }
}
