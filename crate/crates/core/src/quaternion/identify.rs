//! Coxeter presentations of `B(Γ)^c` from explicit reflections `σ_a`, a
//! permutation model of `Γ₀`, the reflection subgroups coming from
//! subgroups of `Γ`, and the comparison with the root-system H4.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::{Bgc, BgcElement, BinaryGroup, GroupKind, QuaternionError};
use crate::coxgroup::{classify_coxeter_matrix, CoxeterType, RootSystem};
use crate::cubes::{generate, maximal_cubes, Perm};
use crate::involutions::{h_polynomial, h_polynomial_from_classes, HMethod, HPolynomial};
use crate::modp::to_i64;

/// An isomorphism from `Γ₀ = Γ/{±1}` onto a permutation group.
pub struct PermutationModel {
    images: Vec<Perm>,
    lifts: HashMap<Perm, usize>,
}

impl PermutationModel {
    /// Permutation image of `a ∈ Γ`.
    pub fn perm(&self, a: usize) -> &Perm {
        &self.images[a]
    }

    /// An element of `Γ` over the permutation `p`.
    pub fn lift(&self, p: &Perm) -> Option<usize> {
        self.lifts.get(p).copied()
    }
}

fn target_group(kind: GroupKind) -> Option<Vec<Perm>> {
    let c = Perm::from_cycles;
    let gens = match kind {
        GroupKind::Tetrahedral => vec![c(4, &[&[1, 2, 3]]), c(4, &[&[1, 2], &[3, 4]])],
        GroupKind::Octahedral => vec![c(4, &[&[1, 2]]), c(4, &[&[1, 2, 3, 4]])],
        GroupKind::Icosahedral => vec![c(5, &[&[1, 2, 3, 4, 5]]), c(5, &[&[1, 2, 3]])],
        _ => return None,
    };
    let n = gens[0].degree();
    Some(generate(n, &gens))
}

/// Finds an isomorphism `Γ₀ → Alt₄, Sym₄, Alt₅` by choosing a generating
/// pair of `Γ₀` and searching for images of matching orders that extend
/// consistently along the Cayley graph.
pub fn permutation_model(g: &BinaryGroup) -> Result<PermutationModel, QuaternionError> {
    let target = target_group(g.kind).ok_or(QuaternionError::NoIsomorphism)?;
    let n = g.order();
    let reps: Vec<usize> = (0..n).filter(|&a| g.quotient_rep(a) == a).collect();
    if reps.len() != target.len() {
        return Err(QuaternionError::NoIsomorphism);
    }
    let qmul = |a: usize, b: usize| g.quotient_rep(g.mul(a, b));
    let generates = |x: usize, y: usize| {
        let mut seen = HashSet::from([0usize]);
        let mut list = vec![0usize];
        let mut k = 0;
        while k < list.len() {
            for s in [x, y] {
                let z = qmul(list[k], s);
                if seen.insert(z) {
                    list.push(z);
                }
            }
            k += 1;
        }
        list.len() == reps.len()
    };
    let (x, y) = reps
        .iter()
        .flat_map(|&x| reps.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| generates(x, y))
        .ok_or(QuaternionError::NoIsomorphism)?;
    let degree = target[0].degree();
    for tx in target.iter().filter(|t| t.order() as usize == g.quotient_order(x)) {
        for ty in target.iter().filter(|t| t.order() as usize == g.quotient_order(y)) {
            let mut map: HashMap<usize, Perm> = HashMap::from([(0, Perm::identity(degree))]);
            let mut list = vec![0usize];
            let mut ok = true;
            let mut k = 0;
            'bfs: while k < list.len() {
                for (s, t) in [(x, tx), (y, ty)] {
                    let z = qmul(list[k], s);
                    let pz = map[&list[k]].compose(t);
                    match map.get(&z) {
                        Some(p) if *p != pz => {
                            ok = false;
                            break 'bfs;
                        }
                        Some(_) => {}
                        None => {
                            map.insert(z, pz);
                            list.push(z);
                        }
                    }
                }
                k += 1;
            }
            let distinct: HashSet<&Perm> = map.values().collect();
            if ok && distinct.len() == reps.len() {
                let images = (0..n).map(|a| map[&g.quotient_rep(a)].clone()).collect();
                let lifts = map.into_iter().map(|(a, p)| (p, a)).collect();
                return Ok(PermutationModel { images, lifts });
            }
        }
    }
    Err(QuaternionError::NoIsomorphism)
}

/// The explicit reflections `σ_a` forming a Coxeter base, with the expected
/// type.
pub fn coxeter_base(g: &BinaryGroup) -> Result<(Vec<BgcElement>, CoxeterType), QuaternionError> {
    let b = Bgc::new(g);
    let from_perms = |cycles: &[&[&[usize]]], ty: CoxeterType| -> Result<(Vec<BgcElement>, CoxeterType), QuaternionError> {
        let model = permutation_model(g)?;
        let n = model.perm(0).degree();
        let base = cycles
            .iter()
            .map(|c| model.lift(&Perm::from_cycles(n, c)).map(|a| b.sigma(a)).ok_or(QuaternionError::NoIsomorphism))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((base, ty))
    };
    match g.kind {
        GroupKind::Cyclic(m) => Ok((vec![b.sigma(0), b.sigma(1)], CoxeterType::I2(m).canonical())),
        GroupKind::BinaryDihedral(m) => {
            let (x, s) = (1, 2 * m);
            let ty = CoxeterType::product([CoxeterType::I2(m), CoxeterType::I2(m)]).canonical();
            Ok((vec![b.sigma(0), b.sigma(x), b.sigma(s), b.sigma(g.mul(s, x))], ty))
        }
        GroupKind::Tetrahedral => from_perms(&[&[], &[&[1, 2, 3]], &[&[1, 4, 2]], &[&[1, 3, 4]]], CoxeterType::D(4)),
        GroupKind::Octahedral => from_perms(&[&[], &[&[1, 2, 3]], &[&[1, 4]], &[&[1, 2]]], CoxeterType::F4),
        GroupKind::Icosahedral => {
            from_perms(&[&[], &[&[1, 2, 3, 4, 5]], &[&[1, 5], &[3, 4]], &[&[1, 5], &[2, 4]]], CoxeterType::H4)
        }
    }
}

/// Evidence that `B(Γ)^c` has the target type: the base has the target
/// Coxeter matrix, generates the group, and the orders agree.
#[derive(Debug, Clone, Serialize)]
pub struct CoxeterCertificate {
    pub group: String,
    pub target: String,
    pub matrix: Vec<Vec<u32>>,
    pub classified: String,
    pub generated_order: usize,
    pub group_order: usize,
    pub target_order: u128,
    pub passed: bool,
}

fn certify(b: &Bgc, name: String, base: &[BgcElement], target: &CoxeterType, group_order: usize) -> CoxeterCertificate {
    let matrix = b.coxeter_matrix(base);
    let classified = classify_coxeter_matrix(&matrix).map(|t| t.to_string()).unwrap_or_else(|e| e.to_string());
    let matches = classify_coxeter_matrix(&matrix).is_ok_and(|t| t.is_isomorphic(target));
    let generated_order = b.closure(base).len();
    CoxeterCertificate {
        group: name,
        target: target.to_string(),
        matrix,
        classified,
        generated_order,
        group_order,
        target_order: target.order(),
        passed: matches && generated_order == group_order && group_order as u128 == target.order(),
    }
}

pub fn identify_type(g: &BinaryGroup) -> Result<CoxeterCertificate, QuaternionError> {
    let b = Bgc::new(g);
    let (base, target) = coxeter_base(g)?;
    Ok(certify(&b, g.kind.to_string(), &base, &target, b.expected_order()))
}

/// A reflection subgroup of `B(2I)^c` coming from a subgroup of `Alt₅`.
#[derive(Debug, Clone, Serialize)]
pub struct Inclusion {
    pub certificate: CoxeterCertificate,
    /// Order of the subgroup of `Γ` over the permutation subgroup; it
    /// contains `−1` by construction.
    pub gamma_order: usize,
    /// The subgroup generated by all `σ_a` with `a` in that subgroup equals
    /// the one generated by the base.
    pub generated_by_reflections: bool,
}

/// The inclusions `D4`, `A2×A2`, `I2(5)×I2(5)` in `H4`, from `Alt₄`, `Sym₃`
/// and the dihedral group of order 10 inside `Alt₅`.
pub fn inclusion(g: &BinaryGroup, target: &CoxeterType) -> Result<Inclusion, QuaternionError> {
    if g.kind != GroupKind::Icosahedral {
        return Err(QuaternionError::Identification("inclusions are built inside 2I".into()));
    }
    let model = permutation_model(g)?;
    let c = |cy: &[&[usize]]| Perm::from_cycles(5, cy);
    let dihedral = |x: Perm, s: Perm| vec![Perm::identity(5), x.clone(), s.clone(), s.compose(&x)];
    let (perms, gens) = match target {
        CoxeterType::D(4) => (
            vec![Perm::identity(5), c(&[&[1, 2, 3]]), c(&[&[1, 4, 2]]), c(&[&[1, 3, 4]])],
            vec![c(&[&[1, 2, 3]]), c(&[&[1, 2], &[3, 4]])],
        ),
        CoxeterType::Product(f) if f == &[CoxeterType::A(2), CoxeterType::A(2)] => {
            let (x, s) = (c(&[&[1, 2, 3]]), c(&[&[1, 2], &[4, 5]]));
            (dihedral(x.clone(), s.clone()), vec![x, s])
        }
        CoxeterType::Product(f) if f == &[CoxeterType::I2(5), CoxeterType::I2(5)] => {
            let (x, s) = (c(&[&[1, 2, 3, 4, 5]]), c(&[&[2, 5], &[3, 4]]));
            (dihedral(x.clone(), s.clone()), vec![x, s])
        }
        _ => return Err(QuaternionError::Identification(format!("no inclusion of type {target}"))),
    };
    let b = Bgc::new(g);
    let sub: HashSet<Perm> = generate(5, &gens).into_iter().collect();
    let gamma: Vec<usize> = (0..g.order()).filter(|&a| sub.contains(model.perm(a))).collect();
    if !gamma.contains(&g.e()) {
        return Err(QuaternionError::MissingCenter);
    }
    let base: Vec<BgcElement> =
        perms.iter().map(|p| model.lift(p).map(|a| b.sigma(a)).ok_or(QuaternionError::NoIsomorphism)).collect::<Result<_, _>>()?;
    let from_base: HashSet<BgcElement> = b.closure(&base).into_iter().collect();
    let all_sigmas: Vec<BgcElement> = gamma.iter().map(|&a| b.sigma(a)).collect();
    let from_all: HashSet<BgcElement> = b.closure(&all_sigmas).into_iter().collect();
    let order = target.order() as usize;
    Ok(Inclusion {
        certificate: certify(&b, format!("{target} in 2I"), &base, target, order),
        gamma_order: gamma.len(),
        generated_by_reflections: from_base == from_all,
    })
}

/// The quaternionic and root-system constructions of H4, side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub order: (usize, u128),
    pub reflections: (usize, usize),
    pub h_polynomial: (Vec<u64>, Vec<u64>),
    pub maximal_cubes: (usize, usize),
    /// Distinct images of reflections under `φ`, all of trace 2 and
    /// determinant −1.
    pub o4_reflections: usize,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.order.0 as u128 == self.order.1
            && self.reflections.0 == self.reflections.1
            && self.h_polynomial.0 == self.h_polynomial.1
            && self.maximal_cubes.0 == self.maximal_cubes.1
            && self.o4_reflections == self.reflections.0
    }
}

/// Degree of an involution of `B(Γ)^c` from the trace of its `O₄` matrix.
fn involution_degree(b: &Bgc, x: BgcElement) -> Result<usize, QuaternionError> {
    let tr = to_i64(&b.phi_to_o4(x)?.trace());
    Ok(((4 - tr) / 2) as usize)
}

/// h-polynomial of `B(Γ)^c` from its involution classes.
pub fn bgc_h_polynomial(b: &Bgc, elements: &[BgcElement], gens: &[BgcElement]) -> Result<HPolynomial, QuaternionError> {
    let classes = b.involution_classes(elements, gens);
    let mut degrees = classes.iter().map(|c| involution_degree(b, c[0])).collect::<Result<Vec<_>, _>>()?;
    // The identity is the one involution of degree 0.
    degrees.push(0);
    Ok(h_polynomial_from_classes(degrees))
}

/// Number of 4-element sets of pairwise commuting reflections.
fn commuting_quadruples(b: &Bgc, refl: &[BgcElement]) -> usize {
    let n = refl.len();
    let c: Vec<Vec<bool>> =
        (0..n).map(|i| (0..n).map(|j| i != j && b.mul(refl[i], refl[j]) == b.mul(refl[j], refl[i])).collect()).collect();
    let mut count = 0;
    for i in 0..n {
        for j in (i + 1..n).filter(|&j| c[i][j]) {
            for k in (j + 1..n).filter(|&k| c[i][k] && c[j][k]) {
                count += (k + 1..n).filter(|&l| c[i][l] && c[j][l] && c[k][l]).count();
            }
        }
    }
    count
}

pub fn cross_validate_h4(rs: &RootSystem) -> Result<CrossValidation, QuaternionError> {
    if *rs.ty() != CoxeterType::H4 {
        return Err(QuaternionError::Identification("root system must be H4".into()));
    }
    let g = BinaryGroup::build(GroupKind::Icosahedral)?;
    let b = Bgc::new(&g);
    let elements = b.elements();
    let (base, _) = coxeter_base(&g)?;
    let refl = b.reflections();
    let mut mats = HashSet::new();
    for &r in &refl {
        let m = b.phi_to_o4(r)?;
        let is_reflection = to_i64(&m.trace()) == 2 && m.determinant().map(|d| to_i64(&d)) == Ok(-1);
        if is_reflection {
            mats.insert(m);
        }
    }
    let root_h = h_polynomial(rs, HMethod::Enumeration { limit: 1_000_000 })
        .map_err(|e| QuaternionError::Identification(e.to_string()))?;
    Ok(CrossValidation {
        order: (elements.len(), rs.ty().order()),
        reflections: (refl.len(), rs.npos()),
        h_polynomial: (bgc_h_polynomial(&b, &elements, &base)?.coeffs, root_h.coeffs),
        maximal_cubes: (commuting_quadruples(&b, &refl), maximal_cubes(rs).len()),
        o4_reflections: mats.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_models_exist() {
        for k in [GroupKind::Tetrahedral, GroupKind::Octahedral, GroupKind::Icosahedral] {
            let g = BinaryGroup::build(k).unwrap();
            let m = permutation_model(&g).unwrap();
            for a in 0..g.order() {
                for c in 0..g.order() {
                    assert_eq!(m.perm(g.mul(a, c)), &m.perm(a).compose(m.perm(c)));
                }
            }
        }
    }

    #[test]
    fn small_identifications() {
        for k in [GroupKind::Cyclic(5), GroupKind::BinaryDihedral(4), GroupKind::Tetrahedral] {
            let g = BinaryGroup::build(k).unwrap();
            let c = identify_type(&g).unwrap();
            assert!(c.passed, "{c:?}");
        }
    }
}
