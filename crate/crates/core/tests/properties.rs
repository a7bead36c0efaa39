//! Randomized invariants: field laws, group-element identities, involution
//! degrees under conjugation, permutation and polynomial algebra.

use std::sync::OnceLock;

use finite_coxeter::coxgroup::{CoxeterType, GroupElement, RootSystem};
use finite_coxeter::cubes::{Cube, Perm};
use finite_coxeter::exactnum::{MatrixFp, QNum};
use finite_coxeter::involutions::{degree, h_polynomial_formula, HPolynomial, Involution};
use proptest::prelude::*;

fn qnum() -> impl Strategy<Value = QNum> {
    let part = (-20i64..=20, 1i64..=6);
    (part.clone(), part.clone(), part.clone(), part).prop_map(|((a, b), (c, d), (e, f), (g, h))| {
        let s2 = QNum::sqrt2();
        let s5 = QNum::sqrt5();
        let s10 = QNum::sqrt10();
        let x = &QNum::frac(a, b) + &(&QNum::frac(c, d) * &s2);
        let y = &(&QNum::frac(e, f) * &s5) + &(&QNum::frac(g, h) * &s10);
        &x + &y
    })
}

fn systems() -> &'static [RootSystem] {
    static CELL: OnceLock<Vec<RootSystem>> = OnceLock::new();
    CELL.get_or_init(|| {
        ["A4", "B4", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "G2", "I2(7)", "A2xB3"]
            .iter()
            .map(|s| RootSystem::build(&s.parse().unwrap()).unwrap())
            .collect()
    })
}

/// A system index and a word in its simple reflections.
fn element() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..systems().len(), prop::collection::vec(0usize..8, 0..30))
}

fn realize(i: usize, word: &[usize]) -> (&'static RootSystem, GroupElement) {
    let rs = &systems()[i];
    let w: Vec<usize> = word.iter().map(|&k| k % rs.rank()).collect();
    (rs, rs.word(&w))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(x in qnum(), y in qnum(), z in qnum()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), QNum::one());
        }
    }

    #[test]
    fn ordering_is_compatible_with_addition(x in qnum(), y in qnum(), z in qnum()) {
        prop_assert_eq!(x.cmp(&y), (&x + &z).cmp(&(&y + &z)));
        prop_assert_eq!(x.cmp(&y), x.to_f64().partial_cmp(&y.to_f64()).unwrap());
    }

    #[test]
    fn inverse_and_order((i, w) in element()) {
        let (rs, g) = realize(i, &w);
        prop_assert!(g.compose(&g.inverse()).is_identity());
        prop_assert!(g.pow(g.order()).is_identity());
        prop_assert!(g.negated_roots().len() <= g.length());
        prop_assert_eq!(g.inverse().length(), g.length());
        prop_assert_eq!(g.det(), if g.length() % 2 == 0 { 1 } else { -1 });
        prop_assert!(g.length() <= rs.npos());
    }

    #[test]
    fn composition_is_associative((i, a) in element(), b in prop::collection::vec(0usize..8, 0..20), c in prop::collection::vec(0usize..8, 0..20)) {
        let (_, x) = realize(i, &a);
        let (_, y) = realize(i, &b);
        let (_, z) = realize(i, &c);
        prop_assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
        prop_assert_eq!(x.compose(&y).inverse(), y.inverse().compose(&x.inverse()));
    }

    #[test]
    fn conjugation_preserves_orthogonality_and_degree((i, w) in element(), r in 0usize..120) {
        let (rs, g) = realize(i, &w);
        let r = r % rs.npos();
        let s = rs.reflection(r);
        let t = g.compose(s).compose(&g.inverse());
        let (image, _) = g.apply(r);
        prop_assert_eq!(&t, rs.reflection(image));
        for o in rs.orthogonal(r).iter() {
            prop_assert!(rs.is_orthogonal(image, g.apply(o).0));
        }
        // A cube conjugates to a cube whose extremity is the conjugate involution.
        let base: Vec<usize> = std::iter::once(r).chain(rs.orthogonal(r).first()).collect();
        let cube = Cube::new(rs, base).unwrap();
        let moved = cube.conjugate(&g);
        let u = cube.extremity(rs);
        let v = moved.extremity(rs);
        prop_assert_eq!(v.degree, u.degree);
        prop_assert_eq!(v.minus_roots, g.map_set(&u.minus_roots));
        prop_assert_eq!(degree(rs, &g.compose(&u.element).compose(&g.inverse())).unwrap(), u.degree);
    }

    #[test]
    fn involutions_from_negated_roots((i, w) in element()) {
        let (rs, g) = realize(i, &w);
        let u = rs.longest_element();
        let h = g.compose(&u).compose(&g.inverse());
        let inv = Involution::from_minus_roots(rs, h.negated_roots());
        prop_assert_eq!(inv.element, h);
        prop_assert_eq!(inv.degree, rs.ty().reduced_rank());
    }

    #[test]
    fn perm_group_laws(a in Just(8usize).prop_flat_map(|n| Just((0..n as u8).collect::<Vec<_>>()).prop_shuffle()),
                       b in Just(8usize).prop_flat_map(|n| Just((0..n as u8).collect::<Vec<_>>()).prop_shuffle())) {
        let (p, q) = (Perm(a), Perm(b));
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(p.compose(&q).is_even(), p.is_even() == q.is_even());
        let mut x = Perm::identity(8);
        for _ in 0..p.order() {
            x = x.compose(&p);
        }
        prop_assert!(x.is_identity());
        let cycles: usize = p.cycles().iter().map(|c| c.len()).sum();
        prop_assert!(cycles <= 8);
    }

    #[test]
    fn fp_inverse(rows in prop::collection::vec(prop::collection::vec(0i64..3, 4), 4)) {
        let m = MatrixFp::from_rows(3, &rows);
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), MatrixFp::identity(3, 4));
                prop_assert_ne!(m.determinant(), 0);
            }
            None => prop_assert_eq!(m.determinant(), 0),
        }
    }

    #[test]
    fn h_polynomial_products_stay_reciprocal(a in 0usize..6, b in 0usize..6) {
        let names = ["A5", "B4", "D6", "E6", "H3", "I2(8)"];
        let (x, y): (CoxeterType, CoxeterType) = (names[a].parse().unwrap(), names[b].parse().unwrap());
        let p = h_polynomial_formula(&CoxeterType::product([x.clone(), y.clone()]));
        prop_assert_eq!(&p, &h_polynomial_formula(&x).mul(&h_polynomial_formula(&y)));
        prop_assert!(p.is_reciprocal());
        prop_assert!(p.is_increasing_to_middle());
        prop_assert_eq!(p.degree(), x.reduced_rank() + y.reduced_rank());
        let total: u64 = p.coeffs.iter().sum();
        prop_assert!(p.mul(&HPolynomial::geometric(1)).div_one_plus_t() == Some(p.clone()));
        prop_assert!(total >= 1);
    }

    #[test]
    fn type_strings_round_trip(a in 1usize..9, m in 3u32..20) {
        for s in [format!("A{a}"), format!("I2({m})"), format!("A{a}xI2({m})")] {
            let t: CoxeterType = s.parse().unwrap();
            prop_assert_eq!(t.to_string(), s);
        }
    }
}
