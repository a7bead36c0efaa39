//! Cube invariants specific to the hyperoctahedral and even-sign types.

use super::Cube;
use crate::coxgroup::{CoxeterType, RootSystem};
use crate::exactnum::QNum;
use crate::involutions::{bn_invariants, InvolutionError};

/// `(a, b, c)` for a cube of `B_n`: the invariants of its extremity, and
/// the number `c` of pairs `e_i ± e_j` in the base. The short roots of the
/// base account for the remaining `a − 2c` sign changes.
pub fn bn_cube_invariant(rs: &RootSystem, cube: &Cube) -> Result<(usize, usize, usize), InvolutionError> {
    if !matches!(rs.ty(), CoxeterType::B(_)) {
        return Err(InvolutionError::WrongType);
    }
    let u = cube.extremity(rs);
    let (a, b, _) = bn_invariants(rs, &u.element)?;
    let short_class = rs.root_class(*rs.simple().last().expect("nonempty"));
    let short = cube.base().iter().filter(|&&r| rs.root_class(r) == short_class).count();
    Ok((a, b, (a - short) / 2))
}

/// Number of involutions of degree `c` in `Sym_a`, as `C(a, 2c)·(2c − 1)!!`.
pub fn sym_involution_count(a: usize, c: usize) -> u128 {
    if 2 * c > a {
        return 0;
    }
    let mut binom: u128 = 1;
    for i in 0..2 * c {
        binom = binom * (a - i) as u128 / (i + 1) as u128;
    }
    let matchings: u128 = (1..c).map(|i| (2 * i + 1) as u128).product();
    binom * matchings
}

/// Basis positions where a root has nonzero coordinates.
fn support(rs: &RootSystem, r: usize) -> Vec<usize> {
    rs.root(r).expect("coordinates").iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
}

/// Sends each root `e_i ± e_j` of a `D_n` cube to the root `e_i − e_j` of
/// `A_{n−1}`, returning the image cube if it has the same rank.
pub fn d_to_a_projection(d: &RootSystem, a: &RootSystem, cube: &Cube) -> Option<Cube> {
    let mut base: Vec<usize> = Vec::new();
    for &r in cube.base() {
        let s = support(d, r);
        let [i, j] = s[..] else { return None };
        let target = (0..a.npos()).find(|&x| {
            let v = a.root(x).expect("coordinates");
            v.iter().enumerate().all(|(k, c)| {
                let want = if k == i {
                    QNum::one()
                } else if k == j {
                    -QNum::one()
                } else {
                    QNum::zero()
                };
                *c == want || *c == -&want
            })
        })?;
        if !base.contains(&target) {
            base.push(target);
        }
    }
    let image = Cube::new(a, base).ok()?;
    (image.rank() * 2 == cube.rank()).then_some(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubes::{cubes_with_extremity, maximal_cubes};

    fn build(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn involution_counts_in_symmetric_group() {
        assert_eq!(sym_involution_count(4, 1), 6);
        assert_eq!(sym_involution_count(4, 2), 3);
        assert_eq!(sym_involution_count(6, 0), 1);
        assert_eq!(sym_involution_count(3, 2), 0);
    }

    #[test]
    fn b4_minus_one_cubes_by_invariant() {
        let rs = build("B4");
        let mut by_c = [0u128; 3];
        for c in maximal_cubes(&rs) {
            let (a, b, k) = bn_cube_invariant(&rs, &c).unwrap();
            assert_eq!((a, b), (4, 0));
            by_c[k] += 1;
        }
        assert_eq!(by_c, [1, 6, 3]);
        assert_eq!(cubes_with_extremity(&rs, &rs.longest_element()), 10);
    }

    #[test]
    fn d6_maximal_cubes_project_onto_a5() {
        let (d, a) = (build("D6"), build("A5"));
        let images: std::collections::HashSet<Cube> =
            maximal_cubes(&d).iter().map(|c| d_to_a_projection(&d, &a, c).unwrap()).collect();
        assert_eq!(images.len(), 15);
        assert_eq!(maximal_cubes(&a).len(), 15);
    }
}
