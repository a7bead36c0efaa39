//! Group-level constructions over a root system: reflection subgroups,
//! fixators, reflection centralizers, and the checks built on them.

use std::collections::HashSet;

use rand::Rng;

use super::classify::{subsystem_type, ClassifyError};
use super::element::GroupElement;
use super::enumerate::closure;
use super::rootset::RootSet;
use super::rootsys::RootSystem;
use super::types::CoxeterType;
use crate::exactnum::{inner_product, QNum, VectorQ};

/// Whether some pair of reflections has product of order `n`, and whether `n`
/// divides an element of the M-set. The two answers should coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderDivisibility {
    pub pair_exists: bool,
    pub divides_m: bool,
}

impl OrderDivisibility {
    pub fn holds(&self) -> bool {
        self.pair_exists == self.divides_m
    }
}

pub fn reflection_pair_orders(rs: &RootSystem, n: u64) -> OrderDivisibility {
    let refl = rs.reflections();
    let pair_exists = (0..refl.len())
        .any(|a| (a + 1..refl.len()).any(|b| refl[a].compose(&refl[b]).order() == n));
    let divides_m = rs.ty().m_set().iter().any(|&m| m as u64 % n == 0);
    OrderDivisibility { pair_exists, divides_m }
}

/// Checks the equivalence above for one `n ≥ 3`.
pub fn pair_orders_match_m_set(rs: &RootSystem, n: u64) -> bool {
    reflection_pair_orders(rs, n).holds()
}

/// Positive roots orthogonal to every vector of `x`; their reflections
/// generate the pointwise fixator of `x`.
pub fn fixator_subgroup(rs: &RootSystem, x: &[VectorQ]) -> Option<RootSet> {
    let coords = rs.coords()?;
    Some(
        (0..rs.npos())
            .filter(|&r| x.iter().all(|v| inner_product(&coords[r], v).map(|p| p.is_zero()).unwrap_or(false)))
            .collect(),
    )
}

/// Inner products of `x` with every positive root, the input to
/// [`fixes_vector`].
pub fn root_pairings(rs: &RootSystem, x: &VectorQ) -> Option<Vec<QNum>> {
    let coords = rs.coords()?;
    coords.iter().map(|r| inner_product(r, x).ok()).collect()
}

/// Whether `g` fixes the vector whose root pairings are `p`: `gx = x` iff
/// `⟨x, g⁻¹α_i⟩ = ⟨x, α_i⟩` for every simple root.
pub fn fixes_vector(rs: &RootSystem, g: &GroupElement, p: &[QNum]) -> bool {
    let gi = g.inverse();
    rs.simple().iter().all(|&a| {
        let (j, neg) = gi.apply(a);
        if neg {
            -&p[j] == p[a]
        } else {
            p[j] == p[a]
        }
    })
}

/// The reflection `s`, and the roots whose reflections generate the part of
/// its centralizer fixing the line of `s`.
#[derive(Debug, Clone)]
pub struct ReflectionCentralizer {
    pub root: usize,
    pub reflection: GroupElement,
    pub plus_roots: RootSet,
    pub plus_type: CoxeterType,
}

pub fn centralizer_of_reflection(rs: &RootSystem, r: usize) -> Result<ReflectionCentralizer, ClassifyError> {
    let plus_roots = *rs.orthogonal(r);
    Ok(ReflectionCentralizer {
        root: r,
        reflection: rs.reflection(r).clone(),
        plus_roots,
        plus_type: subsystem_type(rs, &plus_roots)?,
    })
}

/// Subgroup generated by the reflections in `roots`.
pub fn reflection_subgroup(rs: &RootSystem, roots: &RootSet) -> Vec<GroupElement> {
    let gens: Vec<GroupElement> = roots.iter().map(|a| rs.reflection(a).clone()).collect();
    closure(&rs.identity(), &gens, None)
}

/// Checks `G_s = {1, s} × G_s^+` against the full element list.
pub fn verify_reflection_centralizer(rs: &RootSystem, c: &ReflectionCentralizer, elements: &[GroupElement]) -> bool {
    let cent: HashSet<&GroupElement> = elements.iter().filter(|g| g.commutes_with(&c.reflection)).collect();
    let plus = reflection_subgroup(rs, &c.plus_roots);
    if plus.len() as u128 != c.plus_type.order() || cent.len() != 2 * plus.len() {
        return false;
    }
    let plus_set: HashSet<&GroupElement> = plus.iter().collect();
    if plus.iter().any(|h| plus_set.contains(&c.reflection.compose(h))) {
        return false;
    }
    plus.iter().all(|h| cent.contains(h) && cent.contains(&c.reflection.compose(h)))
}

/// Whether all reflections are conjugate.
pub fn reflections_conjugate(rs: &RootSystem) -> bool {
    rs.root_class_count() == 1
}

/// Random word of length at most `max_len` in the simple reflections.
pub fn random_element<R: Rng>(rs: &RootSystem, rng: &mut R, max_len: usize) -> GroupElement {
    let len = rng.gen_range(0..=max_len);
    let mut g = rs.identity();
    for _ in 0..len {
        g = g.compose(rs.simple_reflection(rng.gen_range(0..rs.rank())));
    }
    g
}

/// Whether `g` preserves every pairwise inner product of positive roots.
pub fn preserves_inner_products(rs: &RootSystem, g: &GroupElement) -> bool {
    let Some(coords) = rs.coords() else { return true };
    let n = rs.npos();
    let signed = |(_, neg): (usize, bool), p: QNum| if neg { -p } else { p };
    (0..n).all(|a| {
        (a..n).all(|b| {
            let (ga, gb) = (g.apply(a), g.apply(b));
            let lhs = inner_product(&coords[ga.0], &coords[gb.0]).expect("dim");
            let lhs = signed(ga, signed(gb, lhs));
            lhs == inner_product(&coords[a], &coords[b]).expect("dim")
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgroup::enumerate::{enumerate_group, DEFAULT_LIMIT};

    fn build(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn pair_orders() {
        assert_eq!(reflection_pair_orders(&build("F4"), 4), OrderDivisibility { pair_exists: true, divides_m: true });
        assert_eq!(reflection_pair_orders(&build("E8"), 5), OrderDivisibility { pair_exists: false, divides_m: false });
        assert!(pair_orders_match_m_set(&build("H3"), 5));
    }

    #[test]
    fn centralizer_types() {
        for (s, t) in [("E6", "A5"), ("E7", "D6"), ("H3", "A1xA1")] {
            let rs = build(s);
            let c = centralizer_of_reflection(&rs, 0).unwrap();
            assert!(c.plus_type.is_isomorphic(&t.parse().unwrap()), "{s}: {}", c.plus_type);
        }
        let rs = build("H3");
        let els = enumerate_group(&rs, DEFAULT_LIMIT).into_elements().unwrap();
        for r in 0..rs.npos() {
            assert!(verify_reflection_centralizer(&rs, &centralizer_of_reflection(&rs, r).unwrap(), &els));
        }
    }

    #[test]
    fn fixator_extremes() {
        let rs = build("B3");
        assert_eq!(fixator_subgroup(&rs, &[]).unwrap().len(), 9);
        let all: Vec<VectorQ> = (0..3).map(|i| crate::exactnum::unit_vector(3, i)).collect();
        assert!(fixator_subgroup(&rs, &all).unwrap().is_empty());
    }
}
