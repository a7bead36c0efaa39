//! Involutions: degree, orthogonal bases, maximality, adjoints, conjugacy
//! classes, h-polynomials, centralizers, and characteristic degrees.
//!
//! An involution `u` is determined by `N(u)`, the set of positive roots it
//! negates: those roots span the (−1)-eigenspace, and `u` is the identity on
//! its orthogonal complement. Most routines therefore work with `N(u)` as a
//! [`RootSet`].

mod centralizer;
mod classes;
mod degrees;
mod hpoly;

pub use centralizer::{centralizer_of_maximal, MaximalCentralizer};
pub use classes::{
    bn_invariants, class_key, class_table, classes_by_orbit, involutions_by_group, orbit_of, ClassRow,
    FactorTag, InvClassKey,
};
pub use degrees::{characteristic_degrees, DegreeError};
pub use hpoly::{h1_rank, h_polynomial, h_polynomial_formula, h_polynomial_from_classes, HMethod, HPolynomial};

use serde::Serialize;
use thiserror::Error;

use crate::coxgroup::{GroupElement, RootSet, RootSystem, RootSystemError};
use crate::exactnum::MatrixQ;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("element is not an involution")]
    NotInvolution,
    #[error("involution is not maximal")]
    NotMaximal,
    #[error("operation requires a B_n or D_n factor")]
    WrongType,
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Involution {
    #[serde(skip)]
    pub element: GroupElement,
    pub degree: usize,
    #[serde(skip)]
    pub minus_roots: RootSet,
}

impl Involution {
    pub fn new(rs: &RootSystem, element: GroupElement) -> Result<Involution, InvolutionError> {
        let degree = degree(rs, &element)?;
        let minus_roots = element.negated_roots();
        Ok(Involution { element, degree, minus_roots })
    }

    /// Rebuilds the involution with the given negated-root set.
    pub fn from_minus_roots(rs: &RootSystem, minus_roots: RootSet) -> Involution {
        let base = greedy_base(rs, &minus_roots);
        let element = product_of_reflections(rs, &base);
        debug_assert_eq!(element.negated_roots(), minus_roots);
        Involution { element, degree: base.len(), minus_roots }
    }
}

/// Lowest-index-first maximal orthogonal subset of `set`. When `set = N(u)`
/// this is an orthogonal base of `u`.
pub(crate) fn greedy_base(rs: &RootSystem, set: &RootSet) -> Vec<usize> {
    let mut rest = *set;
    let mut base = Vec::new();
    while let Some(a) = rest.first() {
        base.push(a);
        rest = rest.intersection(rs.orthogonal(a));
    }
    base
}

pub fn product_of_reflections(rs: &RootSystem, roots: &[usize]) -> GroupElement {
    roots.iter().fold(rs.identity(), |acc, &r| acc.compose(rs.reflection(r)))
}

/// Multiplicity of the eigenvalue −1, read off as the size of an orthogonal
/// base of the negated roots.
pub fn degree(rs: &RootSystem, u: &GroupElement) -> Result<usize, InvolutionError> {
    if !u.is_involution() {
        return Err(InvolutionError::NotInvolution);
    }
    Ok(greedy_base(rs, &u.negated_roots()).len())
}

/// Degree as `dim V − dim ker(M − I)` from the exact matrix of `u`.
pub fn degree_by_matrix(rs: &RootSystem, u: &GroupElement) -> Result<usize, RootSystemError> {
    let m = rs.element_matrix(u)?;
    let n = rs.ambient_dim();
    Ok(n - m.sub(&MatrixQ::identity(n)).kernel().len())
}

/// Pairwise orthogonal roots whose reflections multiply to `u`, lowest
/// indices first.
pub fn orthogonal_product_base(rs: &RootSystem, u: &GroupElement) -> Result<Vec<usize>, InvolutionError> {
    if !u.is_involution() {
        return Err(InvolutionError::NotInvolution);
    }
    Ok(greedy_base(rs, &u.negated_roots()))
}

/// Maximum degree of an involution, computed as the degree of the longest
/// element.
pub fn reduced_rank(rs: &RootSystem) -> usize {
    greedy_base(rs, &rs.longest_element().negated_roots()).len()
}

pub fn is_maximal(rs: &RootSystem, u: &GroupElement) -> Result<bool, InvolutionError> {
    Ok(degree(rs, u)? == rs.ty().reduced_rank())
}

/// No root lies in the (+1)-eigenspace.
pub fn is_regular(u: &GroupElement) -> Result<bool, InvolutionError> {
    if !u.is_involution() {
        return Err(InvolutionError::NotInvolution);
    }
    Ok(u.fixed_roots().is_empty())
}

/// Pairwise orthogonal roots, fixed by `u`, whose reflections extend `u` to a
/// maximal involution: repeatedly take the lowest root fixed by the current
/// product.
pub fn extend_to_maximal(rs: &RootSystem, u: &GroupElement) -> Result<Vec<usize>, InvolutionError> {
    if !u.is_involution() {
        return Err(InvolutionError::NotInvolution);
    }
    Ok(greedy_base(rs, &u.fixed_roots()))
}

/// An involution adjoint to `u`: the product of [`extend_to_maximal`].
pub fn adjoint(rs: &RootSystem, u: &GroupElement) -> Result<Involution, InvolutionError> {
    let ext = extend_to_maximal(rs, u)?;
    Involution::new(rs, product_of_reflections(rs, &ext))
}

/// Checks the three adjointness conditions for `v` against `u`.
pub fn is_adjoint(rs: &RootSystem, u: &GroupElement, v: &GroupElement) -> Result<bool, InvolutionError> {
    if !u.commutes_with(v) {
        return Ok(false);
    }
    let uv = u.compose(v);
    let d = degree(rs, &uv)?;
    Ok(degree(rs, u)? + degree(rs, v)? == d && d == rs.ty().reduced_rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn degrees_of_basic_elements() {
        let rs = build("E8");
        assert_eq!(degree(&rs, &rs.identity()).unwrap(), 0);
        assert_eq!(degree(&rs, rs.reflection(17)).unwrap(), 1);
        assert_eq!(degree(&rs, &rs.longest_element()).unwrap(), 8);
        assert!(degree(&rs, &rs.coxeter_element()).is_err());
    }

    #[test]
    fn matrix_route_agrees() {
        let rs = build("D5");
        let w0 = rs.longest_element();
        assert_eq!(degree(&rs, &w0).unwrap(), 4);
        assert_eq!(degree_by_matrix(&rs, &w0).unwrap(), 4);
        let u = rs.reflection(3).compose(rs.reflection(rs.orthogonal(3).first().unwrap()));
        assert_eq!(degree_by_matrix(&rs, &u).unwrap(), 2);
    }

    #[test]
    fn reduced_ranks_match_closed_form() {
        for s in ["A1", "A4", "A5", "B3", "D5", "D6", "E6", "E7", "F4", "G2", "H3", "I2(5)", "I2(8)", "A2xI2(7)"] {
            let rs = build(s);
            assert_eq!(reduced_rank(&rs), rs.ty().reduced_rank(), "{s}");
        }
    }

    #[test]
    fn minus_one_in_b2_has_short_base() {
        let rs = build("B2");
        let base = orthogonal_product_base(&rs, &rs.longest_element()).unwrap();
        assert_eq!(base.len(), 2);
        assert!(rs.is_orthogonal(base[0], base[1]));
    }

    #[test]
    fn extension_reaches_maximal() {
        let rs = build("E7");
        let s = rs.reflection(0).clone();
        let ext = extend_to_maximal(&rs, &s).unwrap();
        assert_eq!(ext.len(), 6);
        let v = adjoint(&rs, &s).unwrap();
        assert!(is_adjoint(&rs, &s, &v.element).unwrap());
        let rs = build("A3");
        assert_eq!(extend_to_maximal(&rs, &rs.identity()).unwrap().len(), 2);
        let w0 = rs.longest_element();
        assert!(extend_to_maximal(&rs, &w0).unwrap().is_empty());
        assert!(is_regular(&w0).unwrap() && is_maximal(&rs, &w0).unwrap());
    }
}
