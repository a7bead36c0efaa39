//! `V₆ = R/2P` for E7 with its alternating form.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{mask, require, LatticeQuotient, ModpError, Sublattice};
use crate::coxgroup::{CoxeterType, GroupElement, RootSystem};
use crate::cubes::{Cube, PhiGroup};
use crate::exactnum::MatrixFp;

/// The E7 reflections as the nonzero vectors of a 6-dimensional symplectic
/// space over F2.
pub struct E7Symplectic {
    pub quotient: LatticeQuotient,
    /// Coordinate bitmask of the image of each positive root.
    pub images: Vec<u32>,
}

pub fn e7_model(rs: &RootSystem) -> Result<E7Symplectic, ModpError> {
    require(rs, CoxeterType::E7)?;
    let quotient = LatticeQuotient::new(rs, 2, Sublattice::Weights);
    let images = (0..rs.npos()).map(|r| mask(&quotient.coords(&quotient.image(r)))).collect();
    Ok(E7Symplectic { quotient, images })
}

fn bits(m: u32, d: usize) -> Vec<u8> {
    (0..d).map(|i| (m >> i & 1) as u8).collect()
}

impl E7Symplectic {
    pub fn form(&self, x: u32, y: u32) -> u8 {
        let d = self.quotient.dim();
        self.quotient.form(&bits(x, d), &bits(y, d))
    }

    /// The images are distinct and are exactly the nonzero vectors.
    pub fn is_bijective(&self) -> bool {
        let set: BTreeSet<u32> = self.images.iter().copied().collect();
        let d = self.quotient.dim();
        set.len() == self.images.len() && !set.contains(&0) && set.len() == (1 << d) - 1
    }

    /// Number of root pairs where commuting reflections and orthogonal images
    /// disagree, over all pairs.
    pub fn commutation_mismatches(&self, rs: &RootSystem) -> usize {
        let n = rs.npos();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| rs.reflection(a).commutes_with(rs.reflection(b)) != (self.form(self.images[a], self.images[b]) == 0))
            .count()
    }

    /// Totally isotropic 3-dimensional subspaces, each as its sorted set of
    /// seven nonzero vectors.
    pub fn maximal_isotropics(&self) -> BTreeSet<Vec<u32>> {
        let nonzero: Vec<u32> = (1..1u32 << self.quotient.dim()).collect();
        let mut out = BTreeSet::new();
        for &x in &nonzero {
            for &y in nonzero.iter().filter(|&&y| y > x && self.form(x, y) == 0) {
                for &z in nonzero.iter().filter(|&&z| z > y && z != x ^ y) {
                    if self.form(x, z) == 0 && self.form(y, z) == 0 {
                        let mut span: Vec<u32> = (1..8u32)
                            .map(|m| [x, y, z].iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).fold(0, |a, (_, &v)| a ^ v))
                            .collect();
                        span.sort_unstable();
                        out.insert(span);
                    }
                }
            }
        }
        out
    }

    /// Sorted images of a cube base.
    pub fn base_image(&self, c: &Cube) -> Vec<u32> {
        let mut v: Vec<u32> = c.base().iter().map(|&r| self.images[r]).collect();
        v.sort_unstable();
        v
    }

    /// Position triples of a maximal cube base whose images sum to zero: the
    /// lines of a Fano plane on the base.
    pub fn fano_lines(&self, c: &Cube) -> Vec<[usize; 3]> {
        let b = c.base();
        let mut lines = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                for k in j + 1..b.len() {
                    if self.images[b[i]] ^ self.images[b[j]] ^ self.images[b[k]] == 0 {
                        lines.push([i, j, k]);
                    }
                }
            }
        }
        lines
    }

    /// Whether every element of `Φ` maps lines of the base to lines.
    pub fn phi_preserves_fano(&self, phi: &PhiGroup) -> bool {
        let lines: BTreeSet<u32> =
            self.fano_lines(&phi.cube).iter().map(|l| l.iter().fold(0, |m, &i| m | 1 << i)).collect();
        lines.len() == 7 && phi.elements.iter().all(|p| lines.iter().all(|&l| lines.contains(&p.apply_mask(l))))
    }

    /// Matrix of `g` on `V₆`.
    pub fn element_matrix(&self, g: &GroupElement) -> MatrixFp {
        self.quotient.element_matrix(g)
    }

    /// Samples random words of length at most 60 and checks that `g ↦ g̃`
    /// is multiplicative, symplectic, and has kernel `{±1}`.
    pub fn sp6_sample(&self, rs: &RootSystem, samples: usize, seed: u64) -> Sp6Sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let word = |rng: &mut ChaCha8Rng| {
            let len = rng.gen_range(0..=60);
            (0..len).fold(rs.identity(), |g, _| g.compose(rs.simple_reflection(rng.gen_range(0..rs.rank()))))
        };
        let d = self.quotient.dim();
        let id = MatrixFp::identity(2, d);
        let w0 = rs.longest_element();
        let mut s = Sp6Sample { samples, ..Default::default() };
        for _ in 0..samples {
            let g = word(&mut rng);
            let h = word(&mut rng);
            let (mg, mh) = (self.element_matrix(&g), self.element_matrix(&h));
            s.multiplicative_failures += usize::from(self.element_matrix(&g.compose(&h)) != mg.mul(&mh));
            s.form_failures += usize::from(!self.quotient.preserves_form(&mg));
            if mg == id {
                s.kernel_hits += 1;
                s.kernel_failures += usize::from(!(g.is_identity() || g == w0));
            }
        }
        s.minus_one_in_kernel = self.element_matrix(&w0) == id;
        s
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Sp6Sample {
    pub samples: usize,
    pub multiplicative_failures: usize,
    pub form_failures: usize,
    pub kernel_hits: usize,
    pub kernel_failures: usize,
    pub minus_one_in_kernel: bool,
}

impl Sp6Sample {
    pub fn passed(&self) -> bool {
        self.multiplicative_failures == 0 && self.form_failures == 0 && self.kernel_failures == 0 && self.minus_one_in_kernel
    }
}

/// `|Sp_{2n}(F_q)| = q^{n²} ∏ (q^{2i} − 1)`.
pub fn symplectic_order(n: u32, q: u128) -> u128 {
    q.pow(n * n) * (1..=n).map(|i| q.pow(2 * i) - 1).product::<u128>()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineOrTriangle {
    Line,
    Triangle,
}

/// Classifies three pairwise orthogonal roots by whether their half-sum is
/// a weight, returning also the products of their sum with the simple roots.
pub fn e7_line_triangle(q: &LatticeQuotient, roots: [usize; 3]) -> (LineOrTriangle, Vec<i64>) {
    let r = q.coefficients(roots[0]).len();
    let sum: Vec<i64> = (0..r).map(|i| roots.iter().map(|&a| q.coefficients(a)[i]).sum()).collect();
    let products: Vec<i64> = (0..r)
        .map(|k| {
            let e: Vec<i64> = (0..r).map(|i| i64::from(i == k)).collect();
            q.pairing_coeffs(&sum, &e)
        })
        .collect();
    let kind = if products.iter().all(|x| x % 2 == 0) { LineOrTriangle::Line } else { LineOrTriangle::Triangle };
    (kind, products)
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symplectic_order_formula() {
        assert_eq!(symplectic_order(3, 2), 1_451_520);
        assert_eq!(symplectic_order(1, 2), 6);
    }

    #[test]
    fn witnesses() {
        let rs = RootSystem::build(&CoxeterType::E7).unwrap();
        let m = e7_model(&rs).unwrap();
        assert_eq!(m.quotient.dim(), 6);
        let s = rs.simple();
        let (k, p) = e7_line_triangle(&m.quotient, [s[1], s[4], s[6]]);
        assert_eq!(k, LineOrTriangle::Line);
        assert_eq!(p, vec![0, 2, 0, -2, 2, -2, 2]);
        let (k, p) = e7_line_triangle(&m.quotient, [s[0], s[1], s[4]]);
        assert_eq!(k, LineOrTriangle::Triangle);
        assert_eq!(p[2], -1);
    }
}
