//! Centralizer of a maximal involution, acting on its (−1)-eigenspace.

use super::{degree, InvolutionError};
use crate::coxgroup::{closure, CoxeterType, GroupElement, RootSystem};

#[derive(Debug, Clone)]
pub struct MaximalCentralizer {
    /// Reflections commuting with `u`, then products `s·usu` of commuting
    /// reflections swapped by `u`.
    pub generators: Vec<GroupElement>,
    pub order: usize,
    /// Elements acting as reflections on the (−1)-eigenspace.
    pub reflections: usize,
    pub rank: usize,
    pub identified: CoxeterType,
}

/// Irreducible types and two-factor products of the given rank, the
/// candidates for matching a centralizer by rank, order and reflection
/// count.
fn candidates(rank: usize) -> Vec<CoxeterType> {
    use CoxeterType::*;
    let irreducible = |r: usize| -> Vec<CoxeterType> {
        let mut v = vec![A(r)];
        if r >= 2 {
            v.push(B(r));
        }
        if r >= 4 {
            v.push(D(r));
        }
        v.extend([E6, E7, E8, F4, H3, H4, G2].into_iter().filter(|t| t.rank() == r));
        if r == 2 {
            v.extend((5..=12).filter(|&m| m != 6).map(I2));
        }
        v
    };
    let mut out = irreducible(rank);
    for k in 1..=rank / 2 {
        for a in irreducible(k) {
            for b in irreducible(rank - k) {
                out.push(CoxeterType::product([a.clone(), b]));
            }
        }
    }
    out
}

pub fn centralizer_of_maximal(rs: &RootSystem, u: &GroupElement) -> Result<MaximalCentralizer, InvolutionError> {
    let d = degree(rs, u)?;
    if d != rs.ty().reduced_rank() {
        return Err(InvolutionError::NotMaximal);
    }
    let mut generators = Vec::new();
    let mut pairs = Vec::new();
    for r in 0..rs.npos() {
        let (r2, _) = u.apply(r);
        if r2 == r {
            generators.push(rs.reflection(r).clone());
        } else if r < r2 && rs.is_orthogonal(r, r2) {
            pairs.push(rs.reflection(r).compose(rs.reflection(r2)));
        }
    }
    generators.extend(pairs);
    let group = closure(&rs.identity(), &generators, None);
    // On the (−1)-eigenspace, an involution g commuting with u has degree
    // (deg u + deg g − deg gu)/2.
    let reflections = group
        .iter()
        .filter(|g| g.is_involution() && !g.is_identity())
        .filter(|g| {
            let dg = degree(rs, g).expect("involution");
            let dgu = degree(rs, &g.compose(u)).expect("commuting involutions");
            d + dg - dgu == 2
        })
        .count();
    let order = group.len();
    let matches: Vec<CoxeterType> = candidates(d)
        .into_iter()
        .filter(|t| t.order() == order as u128 && t.reflection_count() == reflections)
        .collect();
    let mut canon: Vec<CoxeterType> = matches.iter().map(|t| t.canonical()).collect();
    canon.sort();
    canon.dedup();
    match canon.as_slice() {
        [t] => Ok(MaximalCentralizer { generators, order, reflections, rank: d, identified: t.clone() }),
        _ => Err(InvolutionError::Unsupported(format!(
            "centralizer of order {order} with {reflections} reflections matches {matches:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centralizer_types() {
        for (s, t, order) in [("A3", "B2", 8), ("D5", "B4", 384), ("E6", "F4", 1152), ("I2(7)", "A1", 2), ("A2", "A1", 2)] {
            let rs = RootSystem::build(&s.parse().unwrap()).unwrap();
            let c = centralizer_of_maximal(&rs, &rs.longest_element()).unwrap();
            assert!(c.identified.is_isomorphic(&t.parse().unwrap()), "{s}: {}", c.identified);
            assert_eq!(c.order, order, "{s}");
        }
    }
}
