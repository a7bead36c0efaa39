//! Conjugation orbits of cubes, the permutation group `Φ` induced on a
//! maximal cube base by its normalizer, and the class counts it controls.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::{generate, subset_orbits, Perm};
use super::{maximal_cubes, count_bases, Cube, CubeError};
use crate::coxgroup::{enumerate_group, GroupElement, RootSet, RootSystem};
use crate::involutions::HPolynomial;

/// The conjugation orbit of a cube under the simple reflections, with a
/// transversal: `transversal[i]` conjugates `cubes[0]` to `cubes[i]`.
pub struct CubeOrbit {
    pub cubes: Vec<Cube>,
    pub transversal: Vec<GroupElement>,
}

pub fn cube_orbit(rs: &RootSystem, c: &Cube) -> CubeOrbit {
    let mut index: HashMap<Cube, usize> = HashMap::from([(c.clone(), 0)]);
    let mut cubes = vec![c.clone()];
    let mut transversal = vec![rs.identity()];
    let mut k = 0;
    while k < cubes.len() {
        for i in 0..rs.rank() {
            let s = rs.simple_reflection(i);
            let next = cubes[k].conjugate(s);
            if !index.contains_key(&next) {
                index.insert(next.clone(), cubes.len());
                transversal.push(s.compose(&transversal[k]));
                cubes.push(next);
            }
        }
        k += 1;
    }
    CubeOrbit { cubes, transversal }
}

/// Partition of the maximal cubes into conjugacy classes.
pub struct CubeOrbits {
    pub orbits: Vec<Vec<Cube>>,
}

pub fn maximal_cube_orbits(rs: &RootSystem) -> CubeOrbits {
    let all = maximal_cubes(rs);
    let mut placed: HashMap<Cube, usize> = HashMap::new();
    let mut orbits = Vec::new();
    for c in all {
        if placed.contains_key(&c) {
            continue;
        }
        let o = cube_orbit(rs, &c).cubes;
        for x in &o {
            placed.insert(x.clone(), orbits.len());
        }
        orbits.push(o);
    }
    CubeOrbits { orbits }
}

/// `Φ`: the permutations of the base positions of a maximal cube induced by
/// its normalizer.
pub struct PhiGroup {
    pub cube: Cube,
    pub elements: Vec<Perm>,
    pub orbit_size: usize,
}

impl PhiGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `|Φ|·2^k·|orbit| = |W|`, which holds when the kernel of the
    /// projection is the cube itself.
    pub fn order_identity_holds(&self, group_order: u128) -> bool {
        self.order() as u128 * (1u128 << self.cube.rank()) * self.orbit_size as u128 == group_order
    }
}

/// Position permutation induced on `base` by an element normalizing it.
fn project(base: &[usize], g: &GroupElement) -> Perm {
    Perm(base.iter().map(|&r| base.iter().position(|&b| b == g.apply(r).0).expect("normalizes the cube") as u8).collect())
}

/// Builds `Φ` for the lowest maximal cube from Schreier generators of its
/// stabilizer.
pub fn phi_group(rs: &RootSystem) -> Result<PhiGroup, CubeError> {
    let cube = maximal_cubes(rs).into_iter().next().ok_or_else(|| CubeError::Invalid("no maximal cube".into()))?;
    let orbit = cube_orbit(rs, &cube);
    let index: HashMap<&Cube, usize> = orbit.cubes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut gens: Vec<Perm> = Vec::new();
    for (k, c) in orbit.cubes.iter().enumerate() {
        for i in 0..rs.rank() {
            let s = rs.simple_reflection(i);
            let j = index[&c.conjugate(s)];
            let schreier = orbit.transversal[j].inverse().compose(s).compose(&orbit.transversal[k]);
            let p = project(cube.base(), &schreier);
            if !p.is_identity() && !gens.contains(&p) {
                gens.push(p);
            }
        }
    }
    let elements = generate(cube.rank(), &gens);
    Ok(PhiGroup { cube, elements, orbit_size: orbit.cubes.len() })
}

/// h-polynomial of an odd-type group from the `Φ`-orbits on subsets of a
/// maximal cube base: in odd type every involution is conjugate to the
/// extremity of a subcube, and two subcubes have conjugate extremities
/// exactly when their index sets are `Φ`-related.
pub fn phi_orbit_class_table(rs: &RootSystem) -> Result<HPolynomial, CubeError> {
    if !rs.ty().is_odd_type() {
        return Err(CubeError::NotOddType(rs.ty().to_string()));
    }
    let phi = phi_group(rs)?;
    let k = phi.cube.rank();
    let mut coeffs = vec![0u64; k + 1];
    for orbit in subset_orbits(k, &phi.elements) {
        coeffs[orbit[0].count_ones() as usize] += 1;
    }
    Ok(HPolynomial::new(coeffs))
}

/// Whether every cube with the same extremity as `c` (and the same rank)
/// is conjugate to `c`.
pub fn verify_cube_conjugacy(rs: &RootSystem, c: &Cube) -> bool {
    let n = c.extremity(rs).minus_roots;
    let in_orbit = cube_orbit(rs, c).cubes.iter().filter(|x| x.extremity(rs).minus_roots == n).count();
    in_orbit == count_bases(rs, &n, c.rank())
}

/// Outcome of testing whether `Φ` controls fusion of subcube extremities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FusionReport {
    pub tested: usize,
    pub failures: usize,
    pub exhaustive: bool,
}

impl FusionReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// For each tested `g`, let `T` be the subsets `I` of base positions whose
/// subcube extremity `g` conjugates to another subcube extremity `f(I)`.
/// Some `π ∈ Φ` must agree with `f` on all of `T`. Every element is tested
/// when `|W| ≤ 10⁴`; otherwise `samples` seeded random words are used.
pub fn fusion_check(rs: &RootSystem, phi: &PhiGroup, samples: usize, seed: u64) -> FusionReport {
    let base = phi.cube.base();
    let k = base.len();
    let nsets: Vec<RootSet> = (0..1u32 << k)
        .map(|m| {
            let roots: Vec<usize> = (0..k).filter(|i| m >> i & 1 == 1).map(|i| base[i]).collect();
            Cube::new(rs, roots).expect("subcube").extremity(rs).minus_roots
        })
        .collect();
    let lookup: HashMap<RootSet, u32> = nsets.iter().enumerate().map(|(m, n)| (*n, m as u32)).collect();
    let test = |g: &GroupElement| -> bool {
        let pairs: Vec<(u32, u32)> = nsets
            .iter()
            .enumerate()
            .filter_map(|(m, n)| lookup.get(&g.map_set(n)).map(|&j| (m as u32, j)))
            .collect();
        phi.elements.iter().any(|p| pairs.iter().all(|&(i, j)| p.apply_mask(i) == j))
    };
    let exhaustive = rs.ty().order() <= 10_000;
    let mut tested = 0;
    let mut failures = 0;
    if exhaustive {
        let els = enumerate_group(rs, 10_000).into_elements().expect("small group");
        for g in &els {
            tested += 1;
            failures += usize::from(!test(g));
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let len = rng.gen_range(0..=40);
            let mut g = rs.identity();
            for _ in 0..len {
                g = g.compose(rs.simple_reflection(rng.gen_range(0..rs.rank())));
            }
            tested += 1;
            failures += usize::from(!test(&g));
        }
    }
    FusionReport { tested, failures, exhaustive }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubes::perm::derived_subgroup;
    use crate::involutions::h_polynomial_formula;

    fn build(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn dihedral_orbits() {
        let o = maximal_cube_orbits(&build("G2"));
        assert_eq!(o.orbits.len(), 1);
        assert_eq!(o.orbits[0].len(), 3);
        let o = maximal_cube_orbits(&build("I2(8)"));
        let mut sizes: Vec<usize> = o.orbits.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2]);
    }

    #[test]
    fn h4_phi_is_alternating() {
        let rs = build("H4");
        let phi = phi_group(&rs).unwrap();
        assert_eq!(phi.order(), 12);
        assert!(phi.elements.iter().all(|p| [1, 2, 3].contains(&p.order())));
        assert_eq!(derived_subgroup(&phi.elements).len(), 4);
        assert!(phi.order_identity_holds(rs.ty().order()));
    }

    #[test]
    fn phi_tables_match_formula() {
        for s in ["A5", "H3", "H4", "E6", "E7"] {
            let rs = build(s);
            assert_eq!(phi_orbit_class_table(&rs).unwrap(), h_polynomial_formula(rs.ty()), "{s}");
        }
        assert!(phi_orbit_class_table(&build("B3")).is_err());
    }

    #[test]
    fn fusion_in_small_groups() {
        for s in ["A4", "H3"] {
            let rs = build(s);
            let phi = phi_group(&rs).unwrap();
            assert!(fusion_check(&rs, &phi, 0, 1).passed(), "{s}");
        }
    }

    #[test]
    fn subcubes_of_h3_are_conjugate_within_extremity() {
        let rs = build("H3");
        let c = maximal_cubes(&rs).remove(0);
        for m in 0..8u32 {
            let sub: Vec<usize> = (0..3).filter(|i| m >> i & 1 == 1).map(|i| c.base()[i]).collect();
            assert!(verify_cube_conjugacy(&rs, &Cube::new(&rs, sub).unwrap()));
        }
    }
}
