use std::collections::BTreeSet;

use finite_coxeter::coxgroup::{CoxeterType, RootSystem};
use finite_coxeter::cubes::{maximal_cubes, phi_group};
use finite_coxeter::involutions::{class_key, orbit_of};
use finite_coxeter::modp::{
    e6_so5, e7_line_triangle, e7_model, e8_model, phi_structure, symplectic_order, LineOrTriangle,
};

fn build(t: CoxeterType) -> RootSystem {
    RootSystem::build(&t).unwrap()
}

#[test]
fn e7_isotropic_subspaces_are_maximal_cube_images() {
    let rs = build(CoxeterType::E7);
    let m = e7_model(&rs).unwrap();
    let iso = m.maximal_isotropics();
    assert_eq!(iso.len(), 135);
    let from_cubes: BTreeSet<Vec<u32>> = maximal_cubes(&rs).iter().map(|c| m.base_image(c)).collect();
    assert_eq!(from_cubes, iso);
}

#[test]
fn e7_phi_preserves_a_fano_plane() {
    let rs = build(CoxeterType::E7);
    let m = e7_model(&rs).unwrap();
    let phi = phi_group(&rs).unwrap();
    assert_eq!(phi.order(), 168);
    assert!(m.phi_preserves_fano(&phi));
}

#[test]
fn e7_degree_three_classes_split_into_lines_and_triangles() {
    let rs = build(CoxeterType::E7);
    let m = e7_model(&rs).unwrap();
    let c = maximal_cubes(&rs).remove(0);
    let b = c.base();
    let mut classes = Vec::new();
    for (i, j, k) in (0..7).flat_map(|i| (i + 1..7).flat_map(move |j| (j + 1..7).map(move |k| (i, j, k)))) {
        let roots = [b[i], b[j], b[k]];
        let (kind, _) = e7_line_triangle(&m.quotient, roots);
        let is_line = m.images[roots[0]] ^ m.images[roots[1]] ^ m.images[roots[2]] == 0;
        assert_eq!(kind == LineOrTriangle::Line, is_line);
        let u = roots.iter().fold(rs.identity(), |g, &r| g.compose(rs.reflection(r)));
        let orbit: BTreeSet<_> = orbit_of(&rs, &u.negated_roots()).into_iter().collect();
        if !classes.iter().any(|(o, _): &(BTreeSet<_>, LineOrTriangle)| o.contains(&u.negated_roots())) {
            classes.push((orbit, kind));
        }
        let known = classes.iter().find(|(o, _)| o.contains(&u.negated_roots())).unwrap();
        assert_eq!(known.1, kind);
        let _ = class_key(&rs, &u.negated_roots());
    }
    assert_eq!(classes.len(), 2);
}

#[test]
fn e7_symplectic_sample() {
    let rs = build(CoxeterType::E7);
    let m = e7_model(&rs).unwrap();
    let s = m.sp6_sample(&rs, 2000, 11);
    assert!(s.passed(), "{s:?}");
    assert_eq!(symplectic_order(3, 2), CoxeterType::E7.order() / 2);
}

#[test]
fn e8_steiner_system_on_every_maximal_cube() {
    let rs = build(CoxeterType::E8);
    let m = e8_model(&rs).unwrap();
    let cubes = maximal_cubes(&rs);
    assert_eq!(cubes.len(), 2025);
    let rep = m.steiner(&cubes);
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn e8_phi_is_affine() {
    let rs = build(CoxeterType::E8);
    let m = e8_model(&rs).unwrap();
    let phi = phi_group(&rs).unwrap();
    let s = phi_structure(&m, &phi);
    assert_eq!(s.order, 1344);
    assert!(s.preserves_blocks);
    assert!(s.transitive);
    assert_eq!(s.point_stabilizer, 168);
    assert_eq!(s.translations, 8);
    assert_eq!(s.four_subset_orbits, vec![14, 56]);
}

#[test]
fn e6_embeds_in_so5_f3() {
    let rs = build(CoxeterType::E6);
    let r = e6_so5(&rs).unwrap();
    assert_eq!(r.dim, 5);
    assert_eq!(r.distinct_images, 51840);
    assert!(r.passed(), "{r:?}");
}
