//! Bodies of the twelve checks.

use std::collections::{BTreeSet, HashSet};

use super::{Checker, HRow, Suite, Verifier};
use crate::coxgroup::{
    centralizer_of_reflection, enumerate_group, verify_reflection_centralizer, CoxeterType, Enumeration, RootSystem,
};
use crate::cubes::{
    census, cube_centralizer, cubes_with_extremity, derived_subgroup, fusion_check, involutions_by_cubes,
    maximal_cubes, phi_group, verify_cube_conjugacy, Cube,
};
use crate::exactnum::{MatrixQ, QNum};
use crate::involutions::{
    adjoint, bn_invariants, centralizer_of_maximal, characteristic_degrees, classes_by_orbit, h_polynomial,
    h_polynomial_formula, h_polynomial_from_classes, is_adjoint, orbit_of, reduced_rank, HMethod, HPolynomial,
    Involution,
};
use crate::modp::{e6_so5, e7_line_triangle, e7_model, e8_model, omega1_fixator_order, phi_structure, LineOrTriangle};
use crate::quaternion::{cross_validate_h4, identify_type, inclusion, Bgc, BinaryGroup, GroupKind};

pub(super) fn run(v: &Verifier, id: usize, c: &mut Checker) {
    match id {
        1 => orders_and_reflections(v, c),
        2 => h_polynomials(v, c),
        3 => h_polynomial_shape(v, c),
        4 => cube_census(v, c),
        5 => phi_groups(c),
        6 => conjugacy(c),
        7 => adjoint_involutions(v, c),
        8 => characteristic_degree_identities(c),
        9 => centralizers(c),
        10 => modp_models(v, c),
        11 => quaternion_constructions(c),
        12 => h4_cross_validation(c),
        _ => unreachable!("unknown check {id}"),
    }
}

fn ty(s: &str) -> CoxeterType {
    s.parse().expect("built-in type string")
}

fn types(names: &[&str]) -> Vec<CoxeterType> {
    names.iter().map(|s| ty(s)).collect()
}

/// Every irreducible type of rank at most 8, with the dihedral family up to
/// `I2(12)`.
pub fn irreducible_up_to_rank_8() -> Vec<CoxeterType> {
    use CoxeterType::*;
    let mut v: Vec<CoxeterType> = (1..=8).map(A).collect();
    v.extend((2..=8).map(B));
    v.extend((4..=8).map(D));
    v.extend([E6, E7, E8, F4, G2, H3, H4]);
    v.extend((3..=12).map(I2));
    v
}

/// Irreducible types whose h-polynomials are compared by enumeration.
fn h_types() -> Vec<CoxeterType> {
    use CoxeterType::*;
    let mut v: Vec<CoxeterType> = (1..=8).map(A).collect();
    v.extend((2..=6).map(B));
    v.extend((3..=6).map(D));
    v.extend([F4, G2, H3, H4, E6]);
    v.extend((3..=12).map(I2));
    v
}

const PRODUCT_ORDER_LIMIT: u128 = 1_000_000;

/// Published h-polynomial coefficient lists.
const LISTED_H: [(&str, &[u64]); 13] = [
    ("A3", &[1, 1, 1]),
    ("B9", &[1, 2, 3, 4, 5, 5, 4, 3, 2, 1]),
    ("B10", &[1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1]),
    ("D4", &[1, 1, 3, 1, 1]),
    ("D10", &[1, 1, 2, 2, 3, 4, 3, 2, 2, 1, 1]),
    ("D11", &[1, 1, 2, 2, 3, 3, 3, 2, 2, 1, 1]),
    ("E6", &[1, 1, 1, 1, 1]),
    ("E7", &[1, 1, 1, 2, 2, 1, 1, 1]),
    ("E8", &[1, 1, 1, 1, 2, 1, 1, 1, 1]),
    ("F4", &[1, 2, 2, 2, 1]),
    ("G2", &[1, 2, 1]),
    ("H3", &[1, 1, 1, 1]),
    ("H4", &[1, 1, 1, 1, 1]),
];

pub(super) fn compute_h_rows(limit: u128) -> Vec<HRow> {
    let base = h_types();
    let mut all = base.clone();
    all.extend([CoxeterType::E7, CoxeterType::E8]);
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            if a.order() * b.order() <= PRODUCT_ORDER_LIMIT {
                all.push(CoxeterType::product([a.clone(), b.clone()]));
            }
        }
    }
    let row = |ty: CoxeterType| {
        let enumerated = RootSystem::build(&ty)
            .map_err(|e| e.to_string())
            .and_then(|rs| h_polynomial(&rs, HMethod::Enumeration { limit }).map_err(|e| e.to_string()));
        HRow { formula: h_polynomial_formula(&ty), ty, enumerated }
    };
    // Rows are independent; spread them over a few threads and keep the
    // input order.
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    let chunks: Vec<Vec<(usize, CoxeterType)>> = (0..workers)
        .map(|w| all.iter().cloned().enumerate().skip(w).step_by(workers).collect())
        .collect();
    let mut rows: Vec<(usize, HRow)> = std::thread::scope(|s| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| s.spawn(move || chunk.into_iter().map(|(i, t)| (i, row(t))).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker thread")).collect()
    });
    rows.sort_by_key(|(i, _)| *i);
    rows.into_iter().map(|(_, r)| r).collect()
}

fn orders_and_reflections(v: &Verifier, c: &mut Checker) {
    let limit = v.options().limit;
    for t in irreducible_up_to_rank_8() {
        let Some(mut rs) = c.build(&t) else { continue };
        if v.options().corrupt_root_table && t == CoxeterType::E6 {
            rs = rs.with_corrupted_reflection(rs.simple()[0]);
        }
        c.eq(format!("{t} reflection count"), rs.npos(), t.reflection_count());
        let distinct: HashSet<_> = rs.reflections().iter().collect();
        c.eq(format!("{t} distinct reflections"), distinct.len(), rs.npos());
        let bad = rs.reflections().iter().filter(|s| !s.is_involution() || s.is_identity()).count();
        c.eq(format!("{t} reflections that are not involutions"), bad, 0);
        match enumerate_group(&rs, limit) {
            Enumeration::Complete(els) => c.eq(format!("{t} enumerated order"), els.len() as u128, t.order()),
            Enumeration::Refused { order, .. } => c.note(format!("{t}: order {order} above the enumeration limit")),
        }
    }
    for (s, order, refl) in [
        ("E6", Some(51840), 36),
        ("E7", None, 63),
        ("E8", None, 120),
        ("H3", Some(120), 15),
        ("H4", Some(14400), 60),
        ("F4", Some(1152), 24),
    ] {
        let t = ty(s);
        if let Some(o) = order {
            c.eq(format!("{s} order"), t.order(), o);
        }
        if let Some(rs) = c.build(&t) {
            c.eq(format!("{s} positive roots"), rs.npos(), refl);
        }
    }
}

fn h_polynomials(v: &Verifier, c: &mut Checker) {
    let rows = v.h_rows();
    for r in rows {
        match &r.enumerated {
            Ok(p) => c.eq(format!("{} enumerated vs closed form", r.ty), p, &r.formula),
            Err(e) => c.check(false, || format!("{}: {e}", r.ty)),
        }
    }
    c.note(format!("{} types compared, including products of order at most 10^6", rows.len()));
    for (s, coeffs) in LISTED_H {
        let t = ty(s);
        let want = HPolynomial::new(coeffs.to_vec());
        c.eq(format!("{s} closed form vs listed"), h_polynomial_formula(&t), want.clone());
        if let Some(Ok(p)) = rows.iter().find(|r| r.ty == t).map(|r| &r.enumerated) {
            c.eq(format!("{s} enumerated vs listed"), p, &want);
        }
    }
}

fn h_polynomial_shape(v: &Verifier, c: &mut Checker) {
    let mut polys: Vec<(String, HPolynomial, usize)> = Vec::new();
    for r in v.h_rows() {
        let d = r.ty.reduced_rank();
        polys.push((format!("{} closed form", r.ty), r.formula.clone(), d));
        if let Ok(p) = &r.enumerated {
            polys.push((format!("{} enumerated", r.ty), p.clone(), d));
        }
    }
    for s in ["B9", "B10", "D10", "D11"] {
        let t = ty(s);
        polys.push((format!("{s} closed form"), h_polynomial_formula(&t), t.reduced_rank()));
    }
    for (name, p, d) in &polys {
        c.check(p.is_reciprocal(), || format!("{name} {p} is not reciprocal"));
        c.check(p.is_increasing_to_middle(), || format!("{name} {p} decreases before the middle"));
        c.eq(format!("{name} degree"), p.degree(), *d);
    }
}

fn double_factorial(n: u64) -> u64 {
    (1..=n).rev().step_by(2).product()
}

fn cube_census(v: &Verifier, c: &mut Checker) {
    for (s, n) in [("H3", 5), ("H4", 75), ("E7", 135), ("E8", 2025), ("D4", 3), ("D6", 15), ("D8", 105)] {
        let Some(rs) = c.build(&ty(s)) else { continue };
        c.eq(format!("{s} maximal cubes"), maximal_cubes(&rs).len(), n);
        if let CoxeterType::D(k) = rs.ty() {
            c.eq(format!("{s} maximal cubes vs (n-1)!!"), n as u64, double_factorial(*k as u64 - 1));
        }
    }
    let odd = types(&[
        "A1", "A2", "A3", "A4", "A5", "A6", "D3", "D4", "D5", "D6", "D8", "E6", "E7", "E8", "H3", "H4", "I2(3)",
        "I2(5)", "I2(7)", "I2(9)", "I2(11)",
    ]);
    for t in odd {
        let Some(rs) = c.build(&t) else { continue };
        c.check(rs.ty().is_odd_type(), || format!("{t} is not of odd type"));
        if t.contains_minus_one() {
            let n = cubes_with_extremity(&rs, &rs.longest_element());
            c.check(n % 2 == 1, || format!("{t}: {n} cubes with extremity -1"));
        }
        // E8 has too many involutions to list; its -1 count is covered above.
        if t == CoxeterType::E8 {
            continue;
        }
        for class in classes_by_orbit(&rs, &involutions_by_cubes(&rs)) {
            let u = Involution::from_minus_roots(&rs, class[0]);
            let n = cubes_with_extremity(&rs, &u.element);
            c.check(n % 2 == 1, || format!("{t}: {n} cubes with extremity of degree {}", u.degree));
        }
    }
    for (s, n) in [("B2", 2), ("G2", 3)] {
        if let Some(rs) = c.build(&ty(s)) {
            c.eq(format!("{s} cubes with extremity -1"), cubes_with_extremity(&rs, &rs.longest_element()), n);
        }
    }
    if v.options().suite == Suite::Heavy {
        if let Some(rs) = c.build(&CoxeterType::E8) {
            let cen = census(&rs);
            c.eq("E8 census maximal cubes", cen.maximal_count(), 2025);
            let all = rs.longest_element().negated_roots();
            c.eq("E8 census cubes with extremity -1", cen.by_extremity.get(&all).copied(), Some(2025));
            c.eq("E8 census total", cen.by_rank.iter().sum::<usize>(), cen.total());
            c.note(format!("E8 cubes by rank: {:?}", cen.by_rank));
        }
    } else {
        c.note("full E8 cube census runs in the heavy suite");
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn phi_groups(c: &mut Checker) {
    let mut cases: Vec<(CoxeterType, usize)> =
        vec![(CoxeterType::E7, 168), (CoxeterType::E8, 1344), (CoxeterType::H4, 12), (CoxeterType::H3, 3)];
    cases.extend((1..=8).map(|k| (CoxeterType::A(k), factorial((k + 1) / 2))));
    for (t, want) in cases {
        let Some(rs) = c.build(&t) else { continue };
        let Some(phi) = c.ok(format!("{t} phi group"), phi_group(&rs)) else { continue };
        c.eq(format!("{t} phi order"), phi.order(), want);
        c.check(phi.order_identity_holds(t.order()), || format!("{t}: |G| != |Phi| * orbit * 2^k"));
        match t {
            CoxeterType::H4 => {
                c.check(phi.elements.iter().all(|p| p.degree() == 4 && p.is_even()), || {
                    "H4 phi is not inside Alt4".into()
                });
                c.eq("H4 phi derived subgroup", derived_subgroup(&phi.elements).len(), 4);
            }
            CoxeterType::E7 => {
                if let Some(m) = c.ok("E7 model", e7_model(&rs)) {
                    c.check(m.phi_preserves_fano(&phi), || "E7 phi does not preserve the Fano plane".into());
                }
            }
            CoxeterType::E8 => {
                if let Some(m) = c.ok("E8 model", e8_model(&rs)) {
                    let s = phi_structure(&m, &phi);
                    c.check(s.preserves_blocks, || "E8 phi does not preserve the Steiner blocks".into());
                    c.check(s.transitive, || "E8 phi is not transitive".into());
                    c.eq("E8 phi point stabilizer", s.point_stabilizer, 168);
                    c.eq("E8 phi translations", s.translations, 8);
                    c.eq("E8 phi orbits on 4-subsets", s.four_subset_orbits, vec![14, 56]);
                }
            }
            _ => {}
        }
    }
}

fn conjugacy(c: &mut Checker) {
    let list = types(&[
        "A2", "A3", "A4", "A5", "A6", "D3", "D4", "D5", "D6", "E6", "H3", "H4", "I2(3)", "I2(5)", "I2(7)", "I2(9)",
        "I2(11)",
    ]);
    for t in list {
        let Some(rs) = c.build(&t) else { continue };
        let d = t.reduced_rank();
        let invs = involutions_by_cubes(&rs);
        let maximal = invs.iter().filter(|n| Involution::from_minus_roots(&rs, **n).degree == d).count();
        let orbit = orbit_of(&rs, &rs.longest_element().negated_roots()).len();
        c.eq(format!("{t} maximal involutions in the class of w0"), orbit, maximal);
        for class in classes_by_orbit(&rs, &invs) {
            let u = Involution::from_minus_roots(&rs, class[0]);
            if u.degree == 0 {
                continue;
            }
            let Some(cube) = c.ok("cube", Cube::new(&rs, crate::involutions::greedy_base(&rs, &u.minus_roots)))
            else {
                continue;
            };
            c.check(verify_cube_conjugacy(&rs, &cube), || {
                format!("{t}: cubes with an extremity of degree {} are not all conjugate", u.degree)
            });
        }
        let m = maximal_cubes(&rs).len();
        c.check(m % 2 == 1, || format!("{t}: {m} maximal cubes"));
        let Some(phi) = c.ok(format!("{t} phi group"), phi_group(&rs)) else { continue };
        let f = fusion_check(&rs, &phi, 1000, 7);
        c.check(f.passed(), || format!("{t}: fusion fails for {} of {} elements", f.failures, f.tested));
        c.eq(format!("{t} fusion exhaustive"), f.exhaustive, t.order() <= 10_000);
        c.check(f.tested >= 1000.min(t.order() as usize), || format!("{t}: only {} elements tested", f.tested));
    }
}

fn adjoint_involutions(v: &Verifier, c: &mut Checker) {
    let mut list: Vec<CoxeterType> =
        irreducible_up_to_rank_8().into_iter().filter(|t| t.order() <= v.options().limit).collect();
    list.extend(types(&["A1xA1xA1", "A2xA2", "A1xB3", "A3xG2", "H3xI2(5)"]));
    for t in list {
        let Some(rs) = c.build(&t) else { continue };
        let d = t.reduced_rank();
        let invs = involutions_by_cubes(&rs);
        let mut bad = 0;
        for n in &invs {
            let u = Involution::from_minus_roots(&rs, *n);
            let ok = adjoint(&rs, &u.element).is_ok_and(|a| {
                a.degree + u.degree == d && is_adjoint(&rs, &u.element, &a.element).unwrap_or(false)
            });
            bad += usize::from(!ok);
        }
        c.eq(format!("{t}: involutions without a valid adjoint (of {})", invs.len()), bad, 0);
        let classes = classes_by_orbit(&rs, &invs);
        let h = h_polynomial_from_classes(classes.iter().map(|k| Involution::from_minus_roots(&rs, k[0]).degree));
        c.check(h.is_reciprocal(), || format!("{t}: class counts by degree {h} are not symmetric"));
    }
    for n in 2..=6 {
        let Some(rs) = c.build(&CoxeterType::B(n)) else { continue };
        let mut bad = Vec::new();
        for s in involutions_by_cubes(&rs) {
            let u = Involution::from_minus_roots(&rs, s);
            let Ok((a, b, _)) = bn_invariants(&rs, &u.element) else {
                bad.push(format!("invariants of {s:?}"));
                continue;
            };
            let got = adjoint(&rs, &u.element).ok().and_then(|v| bn_invariants(&rs, &v.element).ok());
            if got.map(|(a2, b2, _)| (a2, b2)) != Some((n - a - 2 * b, b)) {
                bad.push(format!("({a},{b}) -> {got:?}"));
            }
        }
        c.check(bad.is_empty(), || format!("B{n} adjoint invariants: {}", bad.join("; ")));
    }
}

/// Involutions of `Sym_n` with the most transpositions.
fn sym_maximal_involutions(n: usize) -> usize {
    let k = n / 2;
    factorial(n) / ((1 << k) * factorial(k) * factorial(n - 2 * k))
}

fn characteristic_degree_identities(c: &mut Checker) {
    for t in irreducible_up_to_rank_8() {
        let Some(rs) = c.build(&t) else { continue };
        let Some(deg) = c.ok(format!("{t} degrees"), characteristic_degrees(&rs)) else { continue };
        let product: u128 = deg.iter().map(|&d| d as u128).product();
        c.eq(format!("{t} product of degrees"), product, t.order());
        c.eq(format!("{t} sum of exponents"), deg.iter().map(|&d| d as usize - 1).sum::<usize>(), rs.npos());
        let even = deg.iter().filter(|&&d| d % 2 == 0).count();
        c.eq(format!("{t} even degrees vs reduced rank"), even, reduced_rank(&rs));
        c.eq(format!("{t} even degrees vs closed form"), even, t.reduced_rank());
        let odd_product: usize = deg.iter().filter(|&&d| d % 2 == 1).map(|&d| d as usize).product();
        let maximal = orbit_of(&rs, &rs.longest_element().negated_roots()).len();
        c.eq(format!("{t} product of odd degrees vs maximal involutions"), odd_product, maximal);
        c.check(maximal % 2 == 1, || format!("{t}: {maximal} maximal involutions"));
        if let CoxeterType::A(k) = t {
            c.eq(format!("{t} maximal involutions of Sym"), maximal, sym_maximal_involutions(k + 1));
        }
        if t == CoxeterType::E6 {
            c.eq("E6 maximal involutions", maximal, 45);
        }
    }
}

fn centralizers(c: &mut Checker) {
    for t in types(&["A2", "A3", "A4", "B3", "B4", "D4", "D5", "F4", "G2", "H3", "E6"]) {
        let Some(rs) = c.build(&t) else { continue };
        let Some(els) = enumerate_group(&rs, 100_000).into_elements() else { continue };
        let mut seen = BTreeSet::new();
        for r in 0..rs.npos() {
            if !seen.insert(rs.root_class(r)) {
                continue;
            }
            if let Some(cent) = c.ok(format!("{t} reflection centralizer"), centralizer_of_reflection(&rs, r)) {
                c.check(verify_reflection_centralizer(&rs, &cent, &els), || {
                    format!("{t}: centralizer of reflection {r} is not {{1, s}} x {}", cent.plus_type)
                });
            }
        }
    }
    for (s, want, order) in [
        ("A2", "A1", 2),
        ("A3", "B2", 8),
        ("A4", "B2", 8),
        ("A5", "B3", 48),
        ("A6", "B3", 48),
        ("A7", "B4", 384),
        ("D5", "B4", 384),
        ("D7", "B6", 46080),
        ("E6", "F4", 1152),
        ("I2(5)", "A1", 2),
        ("I2(7)", "A1", 2),
    ] {
        let Some(rs) = c.build(&ty(s)) else { continue };
        let Some(m) = c.ok(format!("{s} centralizer"), centralizer_of_maximal(&rs, &rs.longest_element())) else {
            continue;
        };
        c.check(m.identified.is_isomorphic(&ty(want)), || format!("{s}: centralizer type {}", m.identified));
        c.eq(format!("{s} centralizer order"), m.order, order);
    }
    for t in types(&["A4", "D4", "H3", "H4"]) {
        let Some(rs) = c.build(&t) else { continue };
        let Some(els) = enumerate_group(&rs, 100_000).into_elements() else { continue };
        for class in classes_by_orbit(&rs, &involutions_by_cubes(&rs)) {
            let u = Involution::from_minus_roots(&rs, class[0]);
            let Ok(cube) = Cube::new(&rs, crate::involutions::greedy_base(&rs, &u.minus_roots)) else { continue };
            let (cent, product) = cube_centralizer(&rs, &cube, &els);
            c.eq(format!("{t} degree-{} cube centralizer vs C x G_u^+", u.degree), cent, product);
            if t == CoxeterType::H4 && u.degree == 2 {
                // The centralizer of the extremity is the cube normalizer,
                // since each such involution is the extremity of one cube.
                let of_u = els.iter().filter(|g| g.commutes_with(&u.element)).count();
                c.eq("H4 degree-2 involution centralizer", of_u, 32);
                c.eq("H4 degree-2 involutions", class.len(), 450);
                c.eq("H4 cubes per degree-2 involution", cubes_with_extremity(&rs, &u.element), 1);
                c.eq("H4 degree-2 cube centralizer", cent, 16);
            }
            if u.degree == t.reduced_rank() {
                c.eq(format!("{t} maximal cube is self-centralizing"), cent, 1 << u.degree);
            }
        }
    }
}

fn modp_models(v: &Verifier, c: &mut Checker) {
    if let Some(rs) = c.build(&CoxeterType::E7) {
        if let Some(m) = c.ok("E7 model", e7_model(&rs)) {
            c.eq("E7 quotient dimension", m.quotient.dim(), 6);
            c.check(m.is_bijective(), || "E7 roots do not biject onto V6 \\ 0".into());
            c.eq("E7 commuting vs orthogonal mismatches", m.commutation_mismatches(&rs), 0);
            let iso = m.maximal_isotropics();
            c.eq("E7 maximal isotropic subspaces", iso.len(), 135);
            let images: BTreeSet<Vec<u32>> = maximal_cubes(&rs).iter().map(|cb| m.base_image(cb)).collect();
            c.check(images == iso, || "E7 maximal cube images differ from the isotropic subspaces".into());
            let s = rs.simple();
            let (k, p) = e7_line_triangle(&m.quotient, [s[1], s[4], s[6]]);
            c.eq("E7 (a2, a5, a7) kind", k, LineOrTriangle::Line);
            c.eq("E7 (a2, a5, a7) products", p, vec![0, 2, 0, -2, 2, -2, 2]);
            let (k, _) = e7_line_triangle(&m.quotient, [s[0], s[1], s[4]]);
            c.eq("E7 (a1, a2, a5) kind", k, LineOrTriangle::Triangle);
            let sample = m.sp6_sample(&rs, 2000, 11);
            c.check(sample.passed(), || format!("E7 Sp6 sample: {sample:?}"));
        }
    }
    if let Some(rs) = c.build(&CoxeterType::E8) {
        if let Some(m) = c.ok("E8 model", e8_model(&rs)) {
            c.check(m.roots_biject_onto_q(), || "E8 roots do not biject onto q = 1".into());
            let rep = m.steiner(&maximal_cubes(&rs));
            c.eq("E8 bases checked", rep.bases, 2025);
            c.check(rep.passed(), || format!("E8 Steiner property: {rep:?}"));
        }
    }
    if let Some(rs) = c.build(&CoxeterType::E6) {
        if v.options().suite == Suite::Heavy {
            if let Some(r) = c.ok("E6 orthogonal model", e6_so5(&rs)) {
                c.eq("E6 image size", r.distinct_images, 51840);
                c.check(r.passed(), || format!("E6 SO5(F3): {r:?}"));
            }
        } else {
            c.note("exhaustive E6 -> SO5(F3) runs in the heavy suite");
        }
        if let Some((order, t)) = c.ok("E6 omega1 fixator", omega1_fixator_order(&rs)) {
            c.eq("E6 omega1 fixator order", order, 1920);
            c.check(t.is_isomorphic(&CoxeterType::D(5)), || format!("E6 omega1 fixator has type {t}"));
        }
    }
}

fn quaternion_constructions(c: &mut Checker) {
    let mut kinds: Vec<(GroupKind, usize, usize, usize)> = Vec::new();
    for m in 2..=6 {
        kinds.push((GroupKind::Cyclic(m), 2 * m, 2 * m, 2 * m));
        kinds.push((GroupKind::BinaryDihedral(m), 4 * m, 4, 4 * m * m));
    }
    kinds.extend([
        (GroupKind::Tetrahedral, 24, 3, 192),
        (GroupKind::Octahedral, 48, 2, 1152),
        (GroupKind::Icosahedral, 120, 1, 14400),
    ]);
    for (k, order, ab, bgc_order) in kinds {
        let Some(g) = c.ok(format!("{k}"), BinaryGroup::build(k)) else { continue };
        c.eq(format!("{k} order"), g.order(), order);
        c.eq(format!("{k} abelianization"), g.abelianization_order(), ab);
        c.check(g.gamma2_quotient_is_abelianization(), || format!("{k}: Gamma^2/Gamma_2 is not the abelianization"));
        let b = Bgc::new(&g);
        c.eq(format!("{k} B(Gamma)^c order"), b.elements().len(), bgc_order);
        c.eq(format!("{k} closure of reflections"), b.closure(&b.reflections()).len(), bgc_order);
        c.eq(format!("{k} product-order mismatches"), b.product_order_mismatches(), 0);
        if let Some(cert) = c.ok(format!("{k} identification"), identify_type(&g)) {
            c.check(cert.passed, || format!("{k}: identification failed: {cert:?}"));
        }
    }
    let Some(g) = c.ok("2I", BinaryGroup::build(GroupKind::Icosahedral)) else { return };
    let b = Bgc::new(&g);
    let images: Option<HashSet<MatrixQ>> = b.elements().iter().map(|&x| b.phi_to_o4(x).ok()).collect();
    c.eq("2I O4 images", images.map(|s| s.len()), Some(14400));
    let refl: Option<HashSet<MatrixQ>> = b.reflections().iter().map(|&x| b.phi_to_o4(x).ok()).collect();
    let refl = refl.unwrap_or_default();
    c.eq("2I O4 reflection images", refl.len(), 60);
    let id = MatrixQ::identity(4);
    c.check(refl.iter().all(|m| m.trace() == QNum::int(2) && m.mul(m).is_ok_and(|sq| sq == id)), || {
        "2I: some reflection image is not an orthogonal reflection".into()
    });
    for (s, order) in [("D4", 192), ("A2xA2", 36), ("I2(5)xI2(5)", 100)] {
        if let Some(inc) = c.ok(format!("{s} inclusion"), inclusion(&g, &ty(s).canonical())) {
            c.check(inc.certificate.passed && inc.generated_by_reflections, || format!("{s} inclusion: {inc:?}"));
            c.eq(format!("{s} inclusion order"), inc.certificate.generated_order, order);
        }
    }
}

fn h4_cross_validation(c: &mut Checker) {
    let Some(rs) = c.build(&CoxeterType::H4) else { return };
    if let Some(v) = c.ok("H4 cross-validation", cross_validate_h4(&rs)) {
        c.check(v.passed(), || format!("{v:?}"));
        c.eq("quaternionic H4 order", v.order.0, 14400);
        c.eq("quaternionic H4 reflections", v.reflections.0, 60);
        c.eq("quaternionic H4 maximal cubes", v.maximal_cubes.0, 75);
    }
}
