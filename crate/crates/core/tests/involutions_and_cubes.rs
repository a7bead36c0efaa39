//! Involution and cube counts checked against independent counts: recurrences
//! for symmetric and hyperoctahedral groups, published degree lists, and
//! the matrix route to the degree.

use std::collections::BTreeMap;

use finite_coxeter::coxgroup::{pair_orders_match_m_set, CoxeterType, RootSystem};
use finite_coxeter::cubes::{bn_cube_invariant, d_to_a_projection, involutions_by_cubes, maximal_cubes, sym_involution_count};
use finite_coxeter::involutions::{characteristic_degrees, classes_by_orbit, degree_by_matrix, Involution};

fn build(s: &str) -> RootSystem {
    RootSystem::build(&s.parse().unwrap()).unwrap()
}

/// Involutions of `Sym_n` including the identity: `t(n) = t(n−1) + (n−1)t(n−2)`.
fn telephone(n: usize) -> usize {
    let (mut a, mut b) = (1, 1);
    for k in 2..=n {
        (a, b) = (b, b + (k - 1) * a);
    }
    b
}

/// Involutions of the signed permutation group: `a(n) = 2a(n−1) + 2(n−1)a(n−2)`.
fn signed_involutions(n: usize) -> usize {
    let (mut a, mut b) = (1, 2);
    for k in 2..=n {
        (a, b) = (b, 2 * b + 2 * (k - 1) * a);
    }
    b
}

#[test]
fn involution_totals_match_recurrences() {
    for n in 2..=7 {
        assert_eq!(involutions_by_cubes(&build(&format!("A{}", n - 1))).len(), telephone(n), "A{}", n - 1);
    }
    for n in 2..=5 {
        assert_eq!(involutions_by_cubes(&build(&format!("B{n}"))).len(), signed_involutions(n), "B{n}");
    }
    // D_n keeps the signed involutions with an even number of minus signs.
    // Swapped pairs carry two equal signs, so only the fixed points matter:
    // C(n, 2j) pairings of 2j points, 2^j sign choices, and 2^(r-1) even
    // sign patterns on the r = n - 2j fixed points (1 if r = 0).
    let n = 4usize;
    let choose = |n: usize, r: usize| (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1));
    let even_signs: usize = (0..=n / 2)
        .map(|j| {
            let pairings: usize = (1..=j).map(|i| 2 * i - 1).product();
            let rest = n - 2 * j;
            choose(n, 2 * j) * pairings * (1 << j) * if rest == 0 { 1 } else { 1 << (rest - 1) }
        })
        .sum();
    let d4 = involutions_by_cubes(&build("D4")).len();
    assert_eq!(d4, even_signs);
}

#[test]
fn published_characteristic_degrees() {
    for (s, d) in [
        ("E6", vec![2, 5, 6, 8, 9, 12]),
        ("E7", vec![2, 6, 8, 10, 12, 14, 18]),
        ("E8", vec![2, 8, 12, 14, 18, 20, 24, 30]),
        ("F4", vec![2, 6, 8, 12]),
        ("H3", vec![2, 6, 10]),
        ("H4", vec![2, 12, 20, 30]),
        ("G2", vec![2, 6]),
        ("D5", vec![2, 4, 5, 6, 8]),
        ("I2(7)", vec![2, 7]),
    ] {
        assert_eq!(characteristic_degrees(&build(s)).unwrap(), d, "{s}");
    }
}

#[test]
fn degree_by_matrix_agrees_on_class_representatives() {
    for s in ["E6", "F4", "H4", "B4", "D5"] {
        let rs = build(s);
        for class in classes_by_orbit(&rs, &involutions_by_cubes(&rs)) {
            let u = Involution::from_minus_roots(&rs, class[0]);
            assert_eq!(degree_by_matrix(&rs, &u.element).unwrap(), u.degree, "{s}");
        }
    }
}

#[test]
fn reflection_pair_orders_follow_the_coxeter_matrix() {
    for s in ["A5", "B4", "D5", "E6", "F4", "G2", "H3", "H4", "I2(8)", "I2(9)", "A2xB3"] {
        let rs = build(s);
        for n in 3..=12 {
            assert!(pair_orders_match_m_set(&rs, n), "{s}, n = {n}");
        }
    }
}

#[test]
fn bn_maximal_cubes_by_invariant() {
    // A maximal cube of B_n with extremity -1 has invariant c, and the number
    // of such cubes equals the number of involutions of Sym_n with c
    // transpositions.
    for n in 2..=5 {
        let rs = build(&format!("B{n}"));
        let mut by_c: BTreeMap<usize, u128> = BTreeMap::new();
        for cube in maximal_cubes(&rs) {
            let (a, b, c) = bn_cube_invariant(&rs, &cube).unwrap();
            assert_eq!((a, b), (n, 0));
            *by_c.entry(c).or_default() += 1;
        }
        for (c, count) in by_c {
            assert_eq!(count, sym_involution_count(n, c), "B{n}, c = {c}");
        }
    }
}

#[test]
fn d_cubes_project_onto_a_cubes() {
    for n in [4, 6, 8] {
        let d = build(&format!("D{n}"));
        let a = build(&format!("A{}", n - 1));
        let targets: std::collections::HashSet<_> = maximal_cubes(&a).into_iter().collect();
        let images: std::collections::HashSet<_> =
            maximal_cubes(&d).iter().map(|c| d_to_a_projection(&d, &a, c).unwrap()).collect();
        assert_eq!(images, targets, "D{n}");
    }
}

#[test]
fn product_types_are_checked_factorwise() {
    let t: CoxeterType = "A2xB3".parse().unwrap();
    let rs = RootSystem::build(&t).unwrap();
    assert_eq!(involutions_by_cubes(&rs).len(), telephone(3) * signed_involutions(3));
}
