//! Cubes: subgroups generated by pairwise commuting reflections, identified
//! by their base of pairwise orthogonal positive roots.

mod bn;
mod orbits;
mod perm;

pub use bn::{bn_cube_invariant, d_to_a_projection, sym_involution_count};
pub use orbits::{
    cube_orbit, fusion_check, maximal_cube_orbits, phi_group, phi_orbit_class_table, verify_cube_conjugacy, CubeOrbit,
    CubeOrbits, FusionReport, PhiGroup,
};
pub use perm::{derived_subgroup, generate, subset_orbits, Perm};

use std::collections::{HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::coxgroup::{GroupElement, RootSet, RootSystem};
use crate::coxgroup::reflection_subgroup;
use crate::involutions::{extend_to_maximal, Involution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    #[error("roots {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("{0} is not of odd type")]
    NotOddType(String),
    #[error("{0}")]
    Invalid(String),
}

/// A cube, stored as its sorted base of positive-root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cube {
    base: Vec<usize>,
}

impl Cube {
    pub fn new(rs: &RootSystem, mut base: Vec<usize>) -> Result<Cube, CubeError> {
        base.sort_unstable();
        base.dedup();
        for (i, &a) in base.iter().enumerate() {
            for &b in &base[i + 1..] {
                if !rs.is_orthogonal(a, b) {
                    return Err(CubeError::NotOrthogonal(a, b));
                }
            }
        }
        Ok(Cube { base })
    }

    pub fn empty() -> Cube {
        Cube { base: Vec::new() }
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.len()
    }

    pub fn extremity(&self, rs: &RootSystem) -> Involution {
        let element = self.base.iter().fold(rs.identity(), |acc, &r| acc.compose(rs.reflection(r)));
        let minus_roots = element.negated_roots();
        Involution { element, degree: self.rank(), minus_roots }
    }

    /// `g C g⁻¹`, whose base is the image of the base up to sign.
    pub fn conjugate(&self, g: &GroupElement) -> Cube {
        let mut base: Vec<usize> = self.base.iter().map(|&r| g.apply(r).0).collect();
        base.sort_unstable();
        Cube { base }
    }

    pub fn to_set(&self) -> RootSet {
        RootSet::from_indices(self.base.iter().copied())
    }
}

/// Depth-first enumeration of all cliques in the orthogonality graph, each
/// produced once by extending only with higher-indexed roots. The callback
/// receives the base and the negated-root set of its extremity.
pub fn for_each_cube(rs: &RootSystem, max_rank: Option<usize>, mut f: impl FnMut(&[usize], &RootSet)) {
    let cap = max_rank.unwrap_or(usize::MAX);
    let mut base = Vec::new();
    fn rec(
        rs: &RootSystem,
        cand: RootSet,
        ext: GroupElement,
        base: &mut Vec<usize>,
        cap: usize,
        f: &mut dyn FnMut(&[usize], &RootSet),
    ) {
        f(base, &ext.negated_roots());
        if base.len() == cap {
            return;
        }
        for r in cand.iter() {
            let next: RootSet = cand.intersection(rs.orthogonal(r)).iter().filter(|&x| x > r).collect();
            base.push(r);
            rec(rs, next, ext.compose(rs.reflection(r)), base, cap, f);
            base.pop();
        }
    }
    rec(rs, RootSet::full(rs.npos()), rs.identity(), &mut base, cap, &mut f);
}

/// All cubes, including the empty one.
pub fn enumerate_cubes(rs: &RootSystem) -> Vec<Cube> {
    let mut out = Vec::new();
    for_each_cube(rs, None, |b, _| out.push(Cube { base: b.to_vec() }));
    out
}

/// Counts of cubes by rank and by extremity.
#[derive(Debug, Clone)]
pub struct CubeCensus {
    pub by_rank: Vec<usize>,
    pub by_extremity: HashMap<RootSet, usize>,
}

impl CubeCensus {
    pub fn total(&self) -> usize {
        self.by_rank.iter().sum()
    }

    pub fn maximal_count(&self) -> usize {
        *self.by_rank.last().unwrap_or(&0)
    }
}

pub fn census(rs: &RootSystem) -> CubeCensus {
    let mut by_rank = Vec::new();
    let mut by_extremity: HashMap<RootSet, usize> = HashMap::new();
    for_each_cube(rs, None, |b, n| {
        if by_rank.len() <= b.len() {
            by_rank.resize(b.len() + 1, 0);
        }
        by_rank[b.len()] += 1;
        *by_extremity.entry(*n).or_default() += 1;
    });
    CubeCensus { by_rank, by_extremity }
}

/// Negated-root sets of all involutions, collected as cube extremities.
pub fn involutions_by_cubes(rs: &RootSystem) -> Vec<RootSet> {
    let mut seen = HashSet::new();
    for_each_cube(rs, None, |_, n| {
        seen.insert(*n);
    });
    let mut v: Vec<RootSet> = seen.into_iter().collect();
    v.sort();
    v
}

/// Number of `k`-element pairwise orthogonal subsets of `set`.
pub fn count_bases(rs: &RootSystem, set: &RootSet, k: usize) -> usize {
    fn rec(rs: &RootSystem, cand: RootSet, k: usize) -> usize {
        if k == 0 {
            return 1;
        }
        if cand.len() < k {
            return 0;
        }
        cand.iter()
            .map(|r| {
                let next: RootSet = cand.intersection(rs.orthogonal(r)).iter().filter(|&x| x > r).collect();
                rec(rs, next, k - 1)
            })
            .sum()
    }
    rec(rs, *set, k)
}

/// Cubes whose extremity is the involution `u`: the orthogonal bases of
/// `N(u)`.
pub fn cubes_with_extremity(rs: &RootSystem, u: &GroupElement) -> usize {
    let n = u.negated_roots();
    let d = crate::involutions::degree(rs, u).expect("involution");
    count_bases(rs, &n, d)
}

/// All cubes of rank equal to the reduced rank.
pub fn maximal_cubes(rs: &RootSystem) -> Vec<Cube> {
    let d = rs.ty().reduced_rank();
    let mut out = Vec::new();
    for_each_cube(rs, Some(d), |b, _| {
        if b.len() == d {
            out.push(Cube { base: b.to_vec() });
        }
    });
    out
}

/// A maximal cube containing `c`, completed by the roots of
/// [`extend_to_maximal`] applied to its extremity.
pub fn embed_in_maximal(rs: &RootSystem, c: &Cube) -> Cube {
    let u = c.extremity(rs);
    let extra = extend_to_maximal(rs, &u.element).expect("extremity is an involution");
    Cube::new(rs, [c.base.clone(), extra].concat()).expect("extension roots are orthogonal to the base")
}

/// `(|G_C|, |C|·|G_u^+|)` for a cube `C` with extremity `u`, computing the
/// centralizer by filtering `elements`.
pub fn cube_centralizer(rs: &RootSystem, c: &Cube, elements: &[GroupElement]) -> (usize, usize) {
    let refl: Vec<&GroupElement> = c.base.iter().map(|&r| rs.reflection(r)).collect();
    let cent = elements.iter().filter(|g| refl.iter().all(|s| g.commutes_with(s))).count();
    let u = c.extremity(rs);
    let plus = reflection_subgroup(rs, &u.element.fixed_roots()).len();
    (cent, (1usize << c.rank()) * plus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_has_two_cubes() {
        assert_eq!(enumerate_cubes(&build("A1")).len(), 2);
    }

    #[test]
    fn extremity_counts_of_minus_one() {
        for (s, n) in [("B2", 2), ("G2", 3), ("H3", 5), ("D4", 3), ("A1", 1)] {
            let rs = build(s);
            assert_eq!(cubes_with_extremity(&rs, &rs.longest_element()), n, "{s}");
        }
    }

    #[test]
    fn maximal_cube_counts() {
        assert_eq!(maximal_cubes(&build("E7")).len(), 135);
        assert_eq!(maximal_cubes(&build("H4")).len(), 75);
    }

    #[test]
    fn non_orthogonal_base_rejected() {
        let rs = build("B2");
        assert!(Cube::new(&rs, vec![0, 1]).is_err());
    }

    #[test]
    fn embedding() {
        let rs = build("D4");
        assert_eq!(embed_in_maximal(&rs, &Cube::empty()).rank(), 4);
        let rs = build("B3");
        let short = rs.simple()[2];
        let c = embed_in_maximal(&rs, &Cube::new(&rs, vec![short]).unwrap());
        assert_eq!(c.rank(), 3);
        assert!(c.base().contains(&short));
    }
}
