//! Breadth-first closure of a group or subgroup given by generators.

use std::collections::HashSet;

use super::element::GroupElement;
use super::rootsys::RootSystem;

pub const DEFAULT_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone)]
pub enum Enumeration {
    Complete(Vec<GroupElement>),
    /// The group is larger than the limit; nothing was enumerated.
    Refused { order: u128, limit: u128 },
}

impl Enumeration {
    pub fn elements(&self) -> Option<&[GroupElement]> {
        match self {
            Enumeration::Complete(v) => Some(v),
            Enumeration::Refused { .. } => None,
        }
    }

    pub fn into_elements(self) -> Option<Vec<GroupElement>> {
        match self {
            Enumeration::Complete(v) => Some(v),
            Enumeration::Refused { .. } => None,
        }
    }
}

/// All elements of `W`, in BFS order from the identity over the simple
/// reflections, or a refusal if `|W|` exceeds `limit`.
pub fn enumerate_group(rs: &RootSystem, limit: u128) -> Enumeration {
    let order = rs.ty().order();
    if order > limit {
        return Enumeration::Refused { order, limit };
    }
    Enumeration::Complete(closure(&rs.identity(), &rs.simple_reflections(), None))
}

/// Subgroup generated by `gens`, stopping early (and returning what was
/// found) once more than `cap` elements are reached.
pub fn closure(identity: &GroupElement, gens: &[GroupElement], cap: Option<usize>) -> Vec<GroupElement> {
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut out = vec![identity.clone()];
    seen.insert(identity.clone());
    let mut k = 0;
    while k < out.len() {
        for g in gens {
            let h = out[k].compose(g);
            if seen.insert(h.clone()) {
                out.push(h);
                if cap.is_some_and(|c| out.len() > c) {
                    return out;
                }
            }
        }
        k += 1;
    }
    out
}

/// Order of the subgroup generated by `gens`.
pub fn subgroup_order(identity: &GroupElement, gens: &[GroupElement]) -> usize {
    closure(identity, gens, None).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        for s in ["A2", "A3", "B3", "G2", "I2(7)", "H3", "A1xA2"] {
            let rs = RootSystem::build(&s.parse().unwrap()).unwrap();
            let e = enumerate_group(&rs, DEFAULT_LIMIT);
            assert_eq!(e.elements().unwrap().len() as u128, rs.ty().order(), "{s}");
        }
    }

    #[test]
    fn refusal_above_limit() {
        let rs = RootSystem::build(&"E7".parse().unwrap()).unwrap();
        assert!(matches!(enumerate_group(&rs, DEFAULT_LIMIT), Enumeration::Refused { .. }));
    }
}
