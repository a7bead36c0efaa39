//! `V₈ = R/2R` for E8 with the quadratic form `q(x) = ⟨x, x⟩/2 mod 2`, and
//! the Steiner system it induces on each maximal cube base.

use std::collections::BTreeSet;

use super::{mask, require, LatticeQuotient, ModpError, Sublattice};
use crate::coxgroup::{CoxeterType, RootSystem};
use crate::cubes::{subset_orbits, Cube, Perm, PhiGroup};

pub struct E8Quadratic {
    pub quotient: LatticeQuotient,
    /// Coordinate bitmask of the image of each positive root.
    pub images: Vec<u32>,
}

pub fn e8_model(rs: &RootSystem) -> Result<E8Quadratic, ModpError> {
    require(rs, CoxeterType::E8)?;
    let quotient = LatticeQuotient::new(rs, 2, Sublattice::Roots);
    let images = (0..rs.npos()).map(|r| mask(&quotient.coords(&quotient.image(r)))).collect();
    Ok(E8Quadratic { quotient, images })
}

/// Checks of the Steiner property over a set of maximal cube bases.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SteinerReport {
    pub bases: usize,
    /// 3-subsets `A` without exactly one `s ∉ A` whose image is `e(A)`.
    pub unique_completion_failures: usize,
    /// 3-subsets not in exactly one block.
    pub block_cover_failures: usize,
    /// Bases whose image is not closed under `x + y + z`.
    pub affine_failures: usize,
    /// Bases without exactly 14 blocks.
    pub block_count_failures: usize,
}

impl SteinerReport {
    pub fn passed(&self) -> bool {
        self.unique_completion_failures == 0
            && self.block_cover_failures == 0
            && self.affine_failures == 0
            && self.block_count_failures == 0
    }
}

impl E8Quadratic {
    /// Lift of a coordinate bitmask to simple-root coefficients.
    fn lift(&self, m: u32) -> Vec<i64> {
        let r = self.quotient.coefficients(0).len();
        let mut c = vec![0i64; r];
        for (i, &b) in self.quotient.basis_roots.iter().enumerate() {
            if m >> i & 1 == 1 {
                for (x, y) in c.iter_mut().zip(self.quotient.coefficients(b)) {
                    *x += y;
                }
            }
        }
        c
    }

    pub fn q(&self, m: u32) -> u8 {
        let c = self.lift(m);
        (self.quotient.pairing_coeffs(&c, &c) / 2).rem_euclid(2) as u8
    }

    /// Polar form `q(x + y) − q(x) − q(y)`.
    pub fn polar(&self, x: u32, y: u32) -> u8 {
        self.q(x ^ y) ^ self.q(x) ^ self.q(y)
    }

    /// `Q = {x : q(x) = 1}`.
    pub fn q_one(&self) -> BTreeSet<u32> {
        (0..1u32 << self.quotient.dim()).filter(|&m| self.q(m) == 1).collect()
    }

    /// The root images are distinct and are exactly `Q`.
    pub fn roots_biject_onto_q(&self) -> bool {
        let imgs: BTreeSet<u32> = self.images.iter().copied().collect();
        imgs.len() == self.images.len() && imgs == self.q_one()
    }

    /// Splits off hyperbolic planes `⟨e, f⟩` with `q(e) = q(f) = 0` and
    /// `b(e, f) = 1` until nothing is left; returns the planes found. The
    /// form is hyperbolic when this reaches half the dimension.
    pub fn witt_planes(&self) -> Vec<(u32, u32)> {
        let d = self.quotient.dim();
        let mut space: Vec<u32> = (0..1u32 << d).collect();
        let mut planes = Vec::new();
        loop {
            let Some(&e) = space.iter().find(|&&v| v != 0 && self.q(v) == 0) else { break };
            let Some(&f) = space.iter().find(|&&v| self.polar(e, v) == 1) else { break };
            let f = if self.q(f) == 1 { f ^ e } else { f };
            planes.push((e, f));
            space.retain(|&v| self.polar(v, e) == 0 && self.polar(v, f) == 0);
        }
        planes
    }

    /// 4-subsets of base positions whose images sum to zero.
    pub fn blocks(&self, c: &Cube) -> BTreeSet<u32> {
        let b = c.base();
        (0..1u32 << b.len())
            .filter(|m| m.count_ones() == 4)
            .filter(|&m| (0..b.len()).filter(|i| m >> i & 1 == 1).fold(0, |acc, i| acc ^ self.images[b[i]]) == 0)
            .collect()
    }

    pub fn steiner(&self, cubes: &[Cube]) -> SteinerReport {
        let mut rep = SteinerReport { bases: cubes.len(), ..Default::default() };
        for c in cubes {
            let b = c.base();
            let k = b.len();
            let img: Vec<u32> = b.iter().map(|&r| self.images[r]).collect();
            let blocks = self.blocks(c);
            rep.block_count_failures += usize::from(blocks.len() != 14);
            for a in (0..1u32 << k).filter(|m| m.count_ones() == 3) {
                let e = (0..k).filter(|i| a >> i & 1 == 1).fold(0, |acc, i| acc ^ img[i]);
                let completions = (0..k).filter(|&s| a >> s & 1 == 0 && img[s] == e).count();
                rep.unique_completion_failures += usize::from(completions != 1);
                let covering = blocks.iter().filter(|&&bl| bl & a == a).count();
                rep.block_cover_failures += usize::from(covering != 1);
            }
            let set: BTreeSet<u32> = img.iter().copied().collect();
            let closed = img.iter().all(|&x| img.iter().all(|&y| img.iter().all(|&z| set.contains(&(x ^ y ^ z)))));
            rep.affine_failures += usize::from(!closed);
        }
        rep
    }
}

/// The affine structure of `Φ` on an E8 maximal cube base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiStructure {
    pub order: usize,
    pub preserves_blocks: bool,
    pub transitive: bool,
    pub point_stabilizer: usize,
    /// Order of the translation subgroup, or 0 if the translations found do
    /// not form a fixed-point-free group.
    pub translations: usize,
    /// Sizes of the `Φ`-orbits on 4-subsets, blocks first.
    pub four_subset_orbits: Vec<usize>,
}

pub fn phi_structure(model: &E8Quadratic, phi: &PhiGroup) -> PhiStructure {
    let blocks = model.blocks(&phi.cube);
    let k = phi.cube.rank();
    let preserves_blocks = phi.elements.iter().all(|p| blocks.iter().all(|&b| blocks.contains(&p.apply_mask(b))));
    let orbit0: BTreeSet<usize> = phi.elements.iter().map(|p| p.apply(0)).collect();
    let point_stabilizer = phi.elements.iter().filter(|p| p.apply(0) == 0).count();
    // A translation sends each block to itself or to the parallel block, its
    // complement; other fixed-point-free affine maps move some block elsewhere.
    let full = (1u32 << k) - 1;
    let translations: Vec<&Perm> = phi
        .elements
        .iter()
        .filter(|p| blocks.iter().all(|&b| p.apply_mask(b) == b || p.apply_mask(b) == full ^ b))
        .collect();
    let closed = translations.iter().all(|a| translations.iter().all(|b| translations.contains(&&a.compose(b))))
        && translations.iter().all(|p| p.is_identity() || (0..k).all(|i| p.apply(i) != i));
    let mut four_subset_orbits: Vec<(bool, usize)> = subset_orbits(k, &phi.elements)
        .into_iter()
        .filter(|o| o[0].count_ones() == 4)
        .map(|o| (!blocks.contains(&o[0]), o.len()))
        .collect();
    four_subset_orbits.sort();
    PhiStructure {
        order: phi.order(),
        preserves_blocks,
        transitive: orbit0.len() == k,
        point_stabilizer,
        translations: if closed { translations.len() } else { 0 },
        four_subset_orbits: four_subset_orbits.into_iter().map(|(_, n)| n).collect(),
    }
}
