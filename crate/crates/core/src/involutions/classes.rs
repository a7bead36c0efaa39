//! Conjugacy classes of involutions: orbit computation (ground truth) and
//! invariant keys.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::{greedy_base, product_of_reflections, InvolutionError};
use crate::coxgroup::{subsystem_type, CoxeterType, GroupElement, RootSet, RootSystem};
use crate::cubes::count_bases;
use crate::exactnum::{inner_product, vec_add, QNum};

/// Per-factor part of an [`InvClassKey`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FactorTag {
    /// Signed-permutation invariants for `B_n`/`D_n`: `a` basis vectors are
    /// negated, `b` pairs are swapped up to sign. `parity` is the parity of
    /// sign-reversing swaps, recorded only where it separates classes of
    /// `D_n` (`a = 0`, `2b = n`).
    BD { a: usize, b: usize, parity: Option<bool> },
    /// Type of the root subsystem in the (−1)-eigenspace, with the number of
    /// its roots in each reflection class. `half_sum` records, for three
    /// orthogonal roots of `E7`, whether half their sum is a weight; `cubes`
    /// counts orthogonal bases for degree-4 involutions of `E8`.
    Sub { subsystem: String, class_counts: Vec<usize>, half_sum: Option<bool>, cubes: Option<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InvClassKey {
    pub degree: usize,
    pub factors: Vec<FactorTag>,
}

impl fmt::Display for InvClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.degree)?;
        for t in &self.factors {
            match t {
                FactorTag::BD { a, b, parity } => {
                    write!(f, ":({a},{b})")?;
                    if let Some(p) = parity {
                        write!(f, "{}", if *p { "-" } else { "+" })?;
                    }
                }
                FactorTag::Sub { subsystem, class_counts, half_sum, cubes } => {
                    write!(f, ":{subsystem}")?;
                    if class_counts.len() > 1 {
                        let c: Vec<String> = class_counts.iter().map(|x| x.to_string()).collect();
                        write!(f, "[{}]", c.join("/"))?;
                    }
                    match half_sum {
                        Some(true) => write!(f, "/line")?,
                        Some(false) => write!(f, "/triangle")?,
                        None => {}
                    }
                    if let Some(c) = cubes {
                        write!(f, "/{c}cubes")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn is_bd(t: &CoxeterType) -> bool {
    matches!(t, CoxeterType::B(_) | CoxeterType::D(_))
}

/// For each basis vector `e_i` of a B/D factor, the image `u(e_i) = ±e_j`.
fn signed_basis_images(rs: &RootSystem, factor: usize, u: &GroupElement) -> Vec<(usize, bool)> {
    let f = &rs.factors()[factor];
    let coords = rs.coords().expect("B/D factors have coordinates");
    let n = f.ambient.len();
    let local = |r: usize| -> Vec<QNum> { coords[r][f.ambient.clone()].to_vec() };
    let signed_image = |r: usize| -> Vec<QNum> {
        let (j, neg) = u.apply(r);
        let v = local(j);
        if neg {
            v.iter().map(|x| -x).collect()
        } else {
            v
        }
    };
    // Express 2e_i as a signed sum of roots: e_i itself in B_n, or
    // (e_i + e_k) + (e_i − e_k) in D_n.
    let find = |target: &[i64]| -> (usize, bool) {
        let t: Vec<QNum> = target.iter().map(|&x| QNum::int(x)).collect();
        let neg: Vec<QNum> = target.iter().map(|&x| QNum::int(-x)).collect();
        for r in f.roots.clone() {
            let v = local(r);
            if v == t {
                return (r, false);
            }
            if v == neg {
                return (r, true);
            }
        }
        panic!("vector is not a root");
    };
    (0..n)
        .map(|i| {
            let parts: Vec<(usize, bool)> = if matches!(f.ty, CoxeterType::B(_)) {
                let mut e = vec![0i64; n];
                e[i] = 1;
                let r = find(&e);
                vec![r, r]
            } else {
                let k = if i == 0 { 1 } else { 0 };
                let mut p = vec![0i64; n];
                p[i] = 1;
                p[k] = 1;
                let mut m = p.clone();
                m[k] = -1;
                vec![find(&p), find(&m)]
            };
            let mut sum = vec![QNum::zero(); n];
            for (r, neg) in parts {
                let img = signed_image(r);
                let img: Vec<QNum> = if neg { img.iter().map(|x| -x).collect() } else { img };
                sum = vec_add(&sum, &img);
            }
            let j = sum.iter().position(|x| !x.is_zero()).expect("nonzero image");
            (j, sum[j].is_negative())
        })
        .collect()
}

/// `(a, b, parity)` for a signed permutation on the basis vectors.
fn bd_from_images(images: &[(usize, bool)]) -> (usize, usize, usize) {
    let mut a = 0;
    let mut b = 0;
    let mut neg_swaps = 0;
    for (i, &(j, neg)) in images.iter().enumerate() {
        if j == i && neg {
            a += 1;
        } else if j > i {
            b += 1;
            if neg {
                neg_swaps += 1;
            }
        }
    }
    (a, b, neg_swaps)
}

/// `(a, b, sign parity)` for an involution of an irreducible `B_n` or `D_n`.
/// The parity is `Some` only for the split classes of `D_n`.
pub fn bn_invariants(rs: &RootSystem, u: &GroupElement) -> Result<(usize, usize, Option<bool>), InvolutionError> {
    if rs.factors().len() != 1 || !is_bd(rs.ty()) {
        return Err(InvolutionError::WrongType);
    }
    if !u.is_involution() {
        return Err(InvolutionError::NotInvolution);
    }
    Ok(bd_tag(rs, 0, u))
}

fn bd_tag(rs: &RootSystem, factor: usize, u: &GroupElement) -> (usize, usize, Option<bool>) {
    let f = &rs.factors()[factor];
    let (a, b, neg_swaps) = bd_from_images(&signed_basis_images(rs, factor, u));
    let n = f.ambient.len();
    let split = matches!(f.ty, CoxeterType::D(_)) && a == 0 && 2 * b == n;
    (a, b, split.then_some(neg_swaps % 2 == 1))
}

/// Whether half the sum of the given roots pairs integrally with every
/// simple coroot of the factor.
fn half_sum_is_weight(rs: &RootSystem, factor: usize, roots: &[usize]) -> bool {
    let coords = rs.coords().expect("coordinates");
    let f = &rs.factors()[factor];
    let sum = roots.iter().fold(vec![QNum::zero(); rs.ambient_dim()], |acc, &r| vec_add(&acc, &coords[r]));
    rs.simple()[f.simple.clone()].iter().all(|&s| {
        let a = &coords[s];
        let num = &inner_product(&sum, a).expect("dim") * &QNum::int(2);
        let pairing = &num / &inner_product(a, a).expect("dim");
        pairing.as_integer().is_some_and(|k| k.is_even())
    })
}

/// Invariant key of the involution with negated roots `nset`.
pub fn class_key(rs: &RootSystem, nset: &RootSet) -> InvClassKey {
    let mut u: Option<GroupElement> = None;
    let mut degree = 0;
    let mut factors = Vec::with_capacity(rs.factors().len());
    for (fi, f) in rs.factors().iter().enumerate() {
        let local: RootSet = nset.iter().filter(|r| f.roots.contains(r)).collect();
        let base = greedy_base(rs, &local);
        degree += base.len();
        if is_bd(&f.ty) {
            let u = u.get_or_insert_with(|| product_of_reflections(rs, &greedy_base(rs, nset)));
            let (a, b, parity) = bd_tag(rs, fi, u);
            factors.push(FactorTag::BD { a, b, parity });
            continue;
        }
        let subsystem = subsystem_type(rs, &local).map(|t| t.to_string()).unwrap_or_else(|_| "?".into());
        let mut counts: BTreeMap<usize, usize> = f.roots.clone().map(|r| (rs.root_class(r), 0)).collect();
        for r in local.iter() {
            *counts.get_mut(&rs.root_class(r)).unwrap() += 1;
        }
        let half_sum = (f.ty == CoxeterType::E7 && base.len() == 3).then(|| half_sum_is_weight(rs, fi, &base));
        let cubes = (f.ty == CoxeterType::E8 && base.len() == 4).then(|| count_bases(rs, &local, 4));
        factors.push(FactorTag::Sub { subsystem, class_counts: counts.into_values().collect(), half_sum, cubes });
    }
    InvClassKey { degree, factors }
}

/// Negated-root sets of the involutions among `elements` (identity included).
pub fn involutions_by_group(elements: &[GroupElement]) -> Vec<RootSet> {
    let mut v: Vec<RootSet> = elements.iter().filter(|g| g.is_involution()).map(|g| g.negated_roots()).collect();
    v.sort();
    v
}

/// Conjugacy class of the involution with negated roots `nset`, as negated
/// root sets. Conjugating by `g` sends `N(u)` to `g(N(u))`.
pub fn orbit_of(rs: &RootSystem, nset: &RootSet) -> Vec<RootSet> {
    let gens = rs.simple_reflections();
    let mut seen = HashSet::from([*nset]);
    let mut queue = VecDeque::from([*nset]);
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        out.push(s);
        for g in &gens {
            let t = g.map_set(&s);
            if seen.insert(t) {
                queue.push_back(t);
            }
        }
    }
    out.sort();
    out
}

/// Partition of `invs` into conjugacy classes. Panics if a class leaves the
/// given set, which would mean `invs` was not conjugation-closed.
pub fn classes_by_orbit(rs: &RootSystem, invs: &[RootSet]) -> Vec<Vec<RootSet>> {
    let all: HashSet<RootSet> = invs.iter().copied().collect();
    let mut done: HashSet<RootSet> = HashSet::new();
    let mut classes = Vec::new();
    for s in invs {
        if done.contains(s) {
            continue;
        }
        let orbit = orbit_of(rs, s);
        assert!(orbit.iter().all(|t| all.contains(t)), "involution set is not conjugation-closed");
        done.extend(orbit.iter().copied());
        classes.push(orbit);
    }
    classes
}

/// One row of an involution class table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub r#type: String,
    pub degree: usize,
    pub class_key: String,
    pub size: usize,
    /// Orthogonal base of a representative, as positive-root indices.
    pub representative: Vec<usize>,
}

/// Groups `invs` by class key; rows sorted by degree then key.
pub fn class_table(rs: &RootSystem, invs: &[RootSet]) -> Vec<ClassRow> {
    let mut groups: BTreeMap<InvClassKey, (usize, RootSet)> = BTreeMap::new();
    for s in invs {
        let e = groups.entry(class_key(rs, s)).or_insert((0, *s));
        e.0 += 1;
    }
    groups
        .into_iter()
        .map(|(k, (size, rep))| ClassRow {
            r#type: rs.ty().to_string(),
            degree: k.degree,
            class_key: k.to_string(),
            size,
            representative: greedy_base(rs, &rep),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgroup::{enumerate_group, DEFAULT_LIMIT};

    fn build(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn keys_match_orbits_on_small_groups() {
        for s in ["A4", "B3", "B4", "D4", "D5", "F4", "G2", "H3", "I2(6)", "A1xB2"] {
            let rs = build(s);
            let els = enumerate_group(&rs, DEFAULT_LIMIT).into_elements().unwrap();
            let invs = involutions_by_group(&els);
            let classes = classes_by_orbit(&rs, &invs);
            let keys: HashSet<InvClassKey> = invs.iter().map(|n| class_key(&rs, n)).collect();
            assert_eq!(keys.len(), classes.len(), "{s}");
            for c in &classes {
                let k = class_key(&rs, &c[0]);
                assert!(c.iter().all(|n| class_key(&rs, n) == k), "{s}");
            }
        }
    }

    #[test]
    fn minus_one_in_b_has_invariants_n_0() {
        let rs = build("B5");
        assert_eq!(bn_invariants(&rs, &rs.longest_element()).unwrap(), (5, 0, None));
        let long = (0..rs.npos()).find(|&r| rs.root_class(r) != rs.root_class(rs.simple()[4])).unwrap();
        assert_eq!(bn_invariants(&rs, rs.reflection(long)).unwrap(), (0, 1, None));
    }
}
