//! Group elements as signed permutations of the positive roots.

use std::fmt;

use super::rootset::RootSet;

/// An element `g` of a finite reflection group, recorded by its action on the
/// positive roots: `g(β_i) = ±β_j`.
///
/// Entry `i` packs `j << 1 | neg`. The packed slice is the canonical key used
/// for hashing and ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    img: Box<[u16]>,
}

impl GroupElement {
    pub fn identity(npos: usize) -> Self {
        GroupElement { img: (0..npos as u16).map(|i| i << 1).collect() }
    }

    /// Builds from `(image index, negated)` pairs. The caller guarantees that the
    /// indices form a permutation.
    pub fn from_images(images: &[(usize, bool)]) -> Self {
        GroupElement { img: images.iter().map(|&(j, n)| (j as u16) << 1 | n as u16).collect() }
    }

    pub fn npos(&self) -> usize {
        self.img.len()
    }

    /// `g(β_i) = ±β_j`, returned as `(j, negated)`.
    #[inline]
    pub fn apply(&self, i: usize) -> (usize, bool) {
        let v = self.img[i];
        ((v >> 1) as usize, v & 1 == 1)
    }

    /// Image of a signed root `(i, neg)`.
    #[inline]
    pub fn apply_signed(&self, (i, neg): (usize, bool)) -> (usize, bool) {
        let (j, n) = self.apply(i);
        (j, n ^ neg)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        debug_assert_eq!(self.img.len(), other.img.len());
        let img = other
            .img
            .iter()
            .map(|&v| {
                let w = self.img[(v >> 1) as usize];
                w ^ (v & 1)
            })
            .collect();
        GroupElement { img }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut img = vec![0u16; self.img.len()].into_boxed_slice();
        for (i, &v) in self.img.iter().enumerate() {
            img[(v >> 1) as usize] = (i as u16) << 1 | (v & 1);
        }
        GroupElement { img }
    }

    /// `g h g⁻¹`
    pub fn conjugate(&self, h: &GroupElement) -> GroupElement {
        self.compose(h).compose(&self.inverse())
    }

    pub fn pow(&self, mut k: u64) -> GroupElement {
        let mut base = self.clone();
        let mut acc = GroupElement::identity(self.npos());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v == (i as u16) << 1)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    pub fn commutes_with(&self, o: &GroupElement) -> bool {
        self.compose(o) == o.compose(self)
    }

    /// Least `k ≥ 1` with `g^k = 1`.
    pub fn order(&self) -> u64 {
        // Order of a signed permutation: lcm over cycles of (cycle length × sign twist).
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut neg = false;
            let mut i = start;
            loop {
                seen[i] = true;
                let (j, s) = self.apply(i);
                neg ^= s;
                len += 1;
                i = j;
                if i == start {
                    break;
                }
            }
            let cyc = if neg { 2 * len } else { len };
            order = num_integer::lcm(order, cyc);
        }
        order
    }

    /// Number of positive roots sent to negative roots (the Coxeter length).
    pub fn length(&self) -> usize {
        self.img.iter().filter(|&&v| v & 1 == 1).count()
    }

    /// Determinant on V, equal to `(-1)^length`.
    pub fn det(&self) -> i32 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Positive roots `β` with `g(β) = −β`.
    pub fn negated_roots(&self) -> RootSet {
        self.img
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == (i as u16) << 1 | 1)
            .map(|(i, _)| i)
            .collect()
    }

    /// Positive roots `β` with `g(β) = β`.
    pub fn fixed_roots(&self) -> RootSet {
        self.img
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == (i as u16) << 1)
            .map(|(i, _)| i)
            .collect()
    }

    /// Image of a set of roots taken up to sign.
    pub fn map_set(&self, s: &RootSet) -> RootSet {
        s.iter().map(|i| self.apply(i).0).collect()
    }

    pub fn images(&self) -> Vec<(usize, bool)> {
        (0..self.npos()).map(|i| self.apply(i)).collect()
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.npos() {
            let (j, n) = self.apply(i);
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", if n { "-" } else { "" }, j)?;
        }
        write!(f, "]")
    }
}

/// Symbolic view of an element of `I2(m)`: the rotation `r^k` composed with an
/// optional flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    pub m: usize,
    pub rotation: usize,
    pub flip: bool,
}

impl DihedralElement {
    pub fn compose(&self, o: &DihedralElement) -> DihedralElement {
        assert_eq!(self.m, o.m);
        let r = if self.flip { self.m + self.rotation - o.rotation } else { self.rotation + o.rotation };
        DihedralElement { m: self.m, rotation: r % self.m, flip: self.flip ^ o.flip }
    }

    pub fn is_involution(&self) -> bool {
        self.flip || (2 * self.rotation) % self.m == 0
    }

    /// Action on root directions `0..2m` (direction `d` is the angle `dπ/m`).
    pub fn apply_direction(&self, d: usize) -> usize {
        let m2 = 2 * self.m;
        if self.flip {
            (self.m + 2 * self.rotation + m2 - d % m2) % m2
        } else {
            (d + 2 * self.rotation) % m2
        }
    }

    /// Closed-form degree: identity 0, reflections 1, the half turn (−1) 2.
    pub fn degree(&self) -> Option<usize> {
        if self.flip {
            Some(1)
        } else if self.rotation == 0 {
            Some(0)
        } else if 2 * self.rotation == self.m {
            Some(2)
        } else {
            None
        }
    }

    /// Reads the symbolic form off a signed permutation of the `m` root
    /// directions of a dihedral factor (direction `k` is the angle `kπ/m`).
    pub fn from_signed_perm(m: usize, g: &GroupElement, offset: usize) -> DihedralElement {
        let dir = |i: usize| {
            let (j, neg) = g.apply(offset + i);
            (j - offset + if neg { m } else { 0 }) % (2 * m)
        };
        let d0 = dir(0);
        let d1 = dir(1);
        // Rotation k: d ↦ d + 2k. Flip k: d ↦ m + 2k − d (all mod 2m).
        let flip = (d0 + 2 * m - d1) % (2 * m) == 1;
        let rotation = if flip { ((d0 + m) % (2 * m)) / 2 } else { d0 / 2 };
        DihedralElement { m, rotation, flip }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_inverse_order() {
        // signed 3-cycle with one sign: order 6
        let g = GroupElement::from_images(&[(1, false), (2, false), (0, true)]);
        assert_eq!(g.order(), 6);
        assert!(g.compose(&g.inverse()).is_identity());
        assert_eq!(g.pow(6), GroupElement::identity(3));
        assert_eq!(GroupElement::identity(4).order(), 1);
    }

    #[test]
    fn dihedral_round_trip() {
        for m in 3..9 {
            for rotation in 0..m {
                for flip in [false, true] {
                    let x = DihedralElement { m, rotation, flip };
                    let imgs: Vec<(usize, bool)> = (0..m)
                        .map(|k| {
                            let d = x.apply_direction(k);
                            (d % m, d >= m)
                        })
                        .collect();
                    let g = GroupElement::from_images(&imgs);
                    assert_eq!(DihedralElement::from_signed_perm(m, &g, 0), x);
                    assert_eq!(x.is_involution(), g.is_involution());
                }
            }
        }
    }

    #[test]
    fn negated_and_fixed() {
        let g = GroupElement::from_images(&[(0, true), (1, false), (3, false), (2, false)]);
        assert_eq!(g.negated_roots().to_vec(), vec![0]);
        assert_eq!(g.fixed_roots().to_vec(), vec![1]);
        assert_eq!(g.length(), 1);
        assert_eq!(g.det(), -1);
    }
}
