//! Reductions of root lattices modulo small primes: the symplectic F2 space
//! of E7, the quadratic F2 space of E8, and the orthogonal F3 space of E6.

mod e6;
mod e7;
mod e8;

pub use e6::{e6_so5, omega1_fixator_order, E6Orthogonal};
pub use e7::{e7_line_triangle, e7_model, symplectic_order, E7Symplectic, LineOrTriangle, Sp6Sample};
pub use e8::{e8_model, phi_structure, E8Quadratic, PhiStructure, SteinerReport};

use num_traits::ToPrimitive;
use rand::Rng;
use thiserror::Error;

use crate::coxgroup::{CoxeterType, GroupElement, RootSystem};
use crate::exactnum::{MatrixFp, MatrixQ, QNum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModpError {
    #[error("expected a root system of type {0}")]
    WrongType(String),
    #[error("{0}")]
    Check(String),
}

/// Which sub-lattice is divided out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sublattice {
    /// `pP`, with `P` the weight lattice.
    Weights,
    /// `pR`, with `R` the root lattice.
    Roots,
}

/// `R / pL` for the root lattice `R`, with a basis of images of positive
/// roots and the reduction of the inner product.
///
/// A lattice vector with simple-root coefficients `c` reduces to `C·c mod p`
/// (its fundamental-weight coordinates, `C` the Cartan matrix) when `L = P`,
/// and to `c mod p` when `L = R`.
#[derive(Debug, Clone)]
pub struct LatticeQuotient {
    pub p: u8,
    pub sublattice: Sublattice,
    /// Reduction map from simple-root coefficients to `F_p^r`.
    pub reduction: MatrixFp,
    /// Positive roots whose images form a basis of the quotient.
    pub basis_roots: Vec<usize>,
    /// Gram matrix of the reduced form on the basis.
    pub gram: MatrixFp,
    pivots: Vec<usize>,
    coord_inv: MatrixFp,
    coeffs: Vec<Vec<i64>>,
    products: Vec<Vec<i64>>,
}

impl LatticeQuotient {
    pub fn new(rs: &RootSystem, p: u8, sublattice: Sublattice) -> LatticeQuotient {
        let r = rs.rank();
        let products: Vec<Vec<i64>> = {
            let c = rs.cartan_products().expect("coordinates");
            (0..r).map(|i| (0..r).map(|j| to_i64(&c[(i, j)])).collect()).collect()
        };
        let reduction = match sublattice {
            Sublattice::Weights => {
                // Cartan entries 2⟨α_i, α_j⟩/⟨α_j, α_j⟩ give weight coordinates.
                let rows: Vec<Vec<i64>> =
                    (0..r).map(|j| (0..r).map(|i| 2 * products[i][j] / products[j][j]).collect()).collect();
                MatrixFp::from_rows(p, &rows)
            }
            Sublattice::Roots => MatrixFp::identity(p, r),
        };
        let coeffs: Vec<Vec<i64>> =
            (0..rs.npos()).map(|i| rs.coefficients(i).expect("coefficients").iter().map(to_i64).collect()).collect();
        let mut q = LatticeQuotient {
            p,
            sublattice,
            reduction,
            basis_roots: Vec::new(),
            gram: MatrixFp::zeros(p, 0, 0),
            pivots: Vec::new(),
            coord_inv: MatrixFp::zeros(p, 0, 0),
            coeffs,
            products,
        };
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for i in 0..rs.npos() {
            let v: Vec<i64> = q.image(i).iter().map(|&x| x as i64).collect();
            let mut trial = rows.clone();
            trial.push(v);
            if MatrixFp::from_rows(p, &trial).rank() == trial.len() {
                rows = trial;
                q.basis_roots.push(i);
            }
        }
        let d = rows.len();
        let cols = MatrixFp::from_rows(p, &rows).transpose();
        let (_, pivots) = cols.transpose().row_reduce();
        let sub: Vec<Vec<i64>> = pivots.iter().map(|&k| (0..d).map(|j| cols.get(k, j) as i64).collect()).collect();
        q.coord_inv = MatrixFp::from_rows(p, &sub).inverse().expect("pivot minor is invertible");
        q.pivots = pivots;
        let gram: Vec<Vec<i64>> =
            q.basis_roots.iter().map(|&a| q.basis_roots.iter().map(|&b| q.pairing(a, b)).collect()).collect();
        q.gram = MatrixFp::from_rows(p, &gram);
        q
    }

    pub fn dim(&self) -> usize {
        self.basis_roots.len()
    }

    /// Integer inner product of two positive roots.
    pub fn pairing(&self, a: usize, b: usize) -> i64 {
        self.pairing_coeffs(&self.coeffs[a], &self.coeffs[b])
    }

    /// Inner product of lattice vectors given by simple-root coefficients.
    pub fn pairing_coeffs(&self, x: &[i64], y: &[i64]) -> i64 {
        let r = x.len();
        (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).map(|(i, j)| x[i] * self.products[i][j] * y[j]).sum()
    }

    pub fn coefficients(&self, r: usize) -> &[i64] {
        &self.coeffs[r]
    }

    /// Image in `F_p^r` of a lattice vector given by its coefficients.
    pub fn reduce(&self, c: &[i64]) -> Vec<u8> {
        let v: Vec<u8> = c.iter().map(|&x| x.rem_euclid(self.p as i64) as u8).collect();
        self.reduction.mul_vec(&v)
    }

    pub fn image(&self, r: usize) -> Vec<u8> {
        self.reduce(&self.coeffs[r])
    }

    /// Coordinates of a quotient vector in the root basis.
    pub fn coords(&self, v: &[u8]) -> Vec<u8> {
        let sub: Vec<u8> = self.pivots.iter().map(|&k| v[k]).collect();
        self.coord_inv.mul_vec(&sub)
    }

    /// Coordinates of the image of the signed root `(r, neg)`.
    pub fn root_coords(&self, (r, neg): (usize, bool)) -> Vec<u8> {
        let c = self.coords(&self.image(r));
        if neg {
            c.iter().map(|&x| (self.p - x) % self.p).collect()
        } else {
            c
        }
    }

    /// The reduced form on coordinate vectors.
    pub fn form(&self, x: &[u8], y: &[u8]) -> u8 {
        let gy = self.gram.mul_vec(y);
        (x.iter().zip(&gy).map(|(&a, &b)| a as u32 * b as u32).sum::<u32>() % self.p as u32) as u8
    }

    /// Matrix of `g` on the quotient, in the root basis.
    pub fn element_matrix(&self, g: &GroupElement) -> MatrixFp {
        let d = self.dim();
        let cols: Vec<Vec<u8>> = self.basis_roots.iter().map(|&b| self.root_coords(g.apply(b))).collect();
        let rows: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| cols[j][i] as i64).collect()).collect();
        MatrixFp::from_rows(self.p, &rows)
    }

    /// Whether `m` preserves the reduced form.
    pub fn preserves_form(&self, m: &MatrixFp) -> bool {
        m.transpose().mul(&self.gram).mul(m) == self.gram
    }

    /// `pL` as integer coefficient vectors in the simple roots, for
    /// re-randomizing coset representatives.
    pub fn sublattice_generators(&self) -> Vec<Vec<i64>> {
        let r = self.products.len();
        match self.sublattice {
            Sublattice::Roots => (0..r)
                .map(|i| (0..r).map(|j| if i == j { self.p as i64 } else { 0 }).collect())
                .collect(),
            Sublattice::Weights => {
                // ω_i = Σ_k (C⁻¹)_ik α_k with C_kj = 2⟨α_k, α_j⟩/⟨α_j, α_j⟩.
                let mut c = MatrixQ::zeros(r, r);
                for k in 0..r {
                    for j in 0..r {
                        c[(k, j)] = QNum::frac(2 * self.products[k][j], self.products[j][j]);
                    }
                }
                let ci = c.inverse().expect("Cartan matrix is invertible");
                (0..r).map(|i| (0..r).map(|k| to_i64(&(&ci[(i, k)] * &QNum::int(self.p as i64)))).collect()).collect()
            }
        }
    }
}

impl LatticeQuotient {
    /// Adds random vectors of `pL` to root representatives and checks that
    /// neither the reduction nor the reduced form changes.
    pub fn representatives_are_irrelevant<R: Rng>(&self, rng: &mut R, trials: usize) -> bool {
        let gens = self.sublattice_generators();
        let n = self.coeffs.len();
        let p = self.p as i64;
        let perturb = |c: &[i64], rng: &mut R| -> Vec<i64> {
            gens.iter().fold(c.to_vec(), |acc, g| {
                let k = rng.gen_range(-3..=3);
                acc.iter().zip(g).map(|(a, b)| a + k * b).collect()
            })
        };
        (0..trials).all(|_| {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let (x, y) = (perturb(&self.coeffs[a], rng), perturb(&self.coeffs[b], rng));
            let (rx, ry) = (self.reduce(&x), self.reduce(&y));
            rx == self.image(a)
                && ry == self.image(b)
                && self.pairing_coeffs(&x, &y).rem_euclid(p) as u8 == self.form(&self.coords(&rx), &self.coords(&ry))
        })
    }
}

pub(crate) fn to_i64(q: &crate::exactnum::QNum) -> i64 {
    q.as_integer().and_then(|x| x.to_i64()).expect("integral value")
}

pub(crate) fn require(rs: &RootSystem, ty: CoxeterType) -> Result<(), ModpError> {
    if *rs.ty() == ty {
        Ok(())
    } else {
        Err(ModpError::WrongType(ty.to_string()))
    }
}

/// Bitmask of an F2 coordinate vector.
pub(crate) fn mask(v: &[u8]) -> u32 {
    v.iter().enumerate().fold(0, |acc, (i, &x)| acc | (x as u32 & 1) << i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn build(t: CoxeterType) -> RootSystem {
        RootSystem::build(&t).unwrap()
    }

    #[test]
    fn quotient_dimensions() {
        assert_eq!(LatticeQuotient::new(&build(CoxeterType::E7), 2, Sublattice::Weights).dim(), 6);
        assert_eq!(LatticeQuotient::new(&build(CoxeterType::E8), 2, Sublattice::Roots).dim(), 8);
        assert_eq!(LatticeQuotient::new(&build(CoxeterType::E6), 3, Sublattice::Weights).dim(), 5);
    }

    #[test]
    fn forms_ignore_representatives() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (t, p, l) in [
            (CoxeterType::E7, 2, Sublattice::Weights),
            (CoxeterType::E8, 2, Sublattice::Roots),
            (CoxeterType::E6, 3, Sublattice::Weights),
        ] {
            let q = LatticeQuotient::new(&build(t.clone()), p, l);
            assert!(q.representatives_are_irrelevant(&mut rng, 300), "{t}");
        }
    }

    #[test]
    fn e8_quadratic_space() {
        let m = e8_model(&build(CoxeterType::E8)).unwrap();
        assert_eq!(m.q_one().len(), 120);
        assert!(m.roots_biject_onto_q());
        assert_eq!(m.witt_planes().len(), 4);
    }

    #[test]
    fn e7_reflections_and_commutation() {
        let rs = build(CoxeterType::E7);
        let m = e7_model(&rs).unwrap();
        assert!(m.is_bijective());
        assert_eq!(m.commutation_mismatches(&rs), 0);
        assert!(m.quotient.gram.determinant() != 0);
    }

    #[test]
    fn e6_weight_fixator() {
        let (order, ty) = omega1_fixator_order(&build(CoxeterType::E6)).unwrap();
        assert_eq!(order, 1920);
        assert_eq!(ty, CoxeterType::D(5));
    }

    #[test]
    fn wrong_type_rejected() {
        assert!(e7_model(&build(CoxeterType::E6)).is_err());
    }
}
