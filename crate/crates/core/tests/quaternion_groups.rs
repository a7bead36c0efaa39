use std::collections::HashSet;

use finite_coxeter::coxgroup::{CoxeterType, RootSystem};
use finite_coxeter::exactnum::MatrixQ;
use finite_coxeter::quaternion::{cross_validate_h4, identify_type, inclusion, Bgc, BinaryGroup, GroupKind, Quaternion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn all_kinds_identify() {
    for k in [
        GroupKind::Cyclic(3),
        GroupKind::Cyclic(7),
        GroupKind::BinaryDihedral(2),
        GroupKind::BinaryDihedral(5),
        GroupKind::BinaryDihedral(6),
        GroupKind::Tetrahedral,
        GroupKind::Octahedral,
        GroupKind::Icosahedral,
    ] {
        let g = BinaryGroup::build(k).unwrap();
        let c = identify_type(&g).unwrap();
        assert!(c.passed, "{c:?}");
    }
}

#[test]
fn bgc_orders_match_formula() {
    for (k, n) in [(GroupKind::Cyclic(6), 12), (GroupKind::BinaryDihedral(5), 100), (GroupKind::Icosahedral, 14400)] {
        let g = BinaryGroup::build(k).unwrap();
        let b = Bgc::new(&g);
        assert_eq!(b.elements().len(), n, "{k}");
        assert_eq!(b.closure(&b.reflections()).len(), n, "{k}");
    }
}

#[test]
fn product_orders_in_icosahedral_case() {
    let g = BinaryGroup::build(GroupKind::Icosahedral).unwrap();
    assert_eq!(Bgc::new(&g).product_order_mismatches(), 0);
}

#[test]
fn o4_representation_of_icosahedral_case() {
    let g = BinaryGroup::build(GroupKind::Icosahedral).unwrap();
    let b = Bgc::new(&g);
    let elements = b.elements();
    let images: HashSet<MatrixQ> = elements.iter().map(|&x| b.phi_to_o4(x).unwrap()).collect();
    assert_eq!(images.len(), elements.len());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let x = elements[rng.gen_range(0..elements.len())];
        let y = elements[rng.gen_range(0..elements.len())];
        let lhs = b.phi_to_o4(b.mul(x, y)).unwrap();
        assert_eq!(lhs, b.phi_to_o4(x).unwrap().mul(&b.phi_to_o4(y).unwrap()).unwrap());
        let m = b.phi_to_o4(x).unwrap();
        assert_eq!(m.transpose().mul(&m).unwrap(), MatrixQ::identity(4));
    }
    for a in 0..g.order() {
        let m = b.phi_to_o4(b.sigma(a)).unwrap();
        let q = g.quaternion(a).unwrap();
        let image = Quaternion::from_coords(&m.mul_vec(&q.coords()).unwrap());
        assert_eq!(image, -q);
    }
}

#[test]
fn reflection_subgroups_of_h4() {
    let g = BinaryGroup::build(GroupKind::Icosahedral).unwrap();
    for (t, order) in [("D4", 192), ("A2xA2", 36), ("I2(5)xI2(5)", 100)] {
        let ty: CoxeterType = t.parse().unwrap();
        let inc = inclusion(&g, &ty.canonical()).unwrap();
        assert!(inc.certificate.passed, "{inc:?}");
        assert_eq!(inc.certificate.generated_order, order);
        assert!(inc.generated_by_reflections);
    }
}

#[test]
fn quaternionic_and_root_h4_agree() {
    let rs = RootSystem::build(&CoxeterType::H4).unwrap();
    let v = cross_validate_h4(&rs).unwrap();
    assert!(v.passed(), "{v:?}");
    assert_eq!(v.reflections.0, 60);
    assert_eq!(v.maximal_cubes.0, 75);
}
