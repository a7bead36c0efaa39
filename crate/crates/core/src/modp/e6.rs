//! `V₅ = R/3P` for E6 with its symmetric form, and the map `W(E6) → SO₅(F₃)`.

use std::collections::HashSet;

use super::{require, LatticeQuotient, ModpError, Sublattice};
use crate::coxgroup::{
    enumerate_group, fixator_subgroup, reflection_subgroup, subsystem_type, CoxeterType, GroupElement, RootSystem,
    DEFAULT_LIMIT,
};
use crate::exactnum::MatrixFp;

/// Outcome of mapping every element of `W(E6)` to `det(g)·g₅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E6Orthogonal {
    pub dim: usize,
    pub elements: usize,
    pub distinct_images: usize,
    pub det_failures: usize,
    pub form_failures: usize,
    /// Failures of `φ(g s) = φ(g) φ(s)` over all `g` and simple `s`.
    pub multiplicative_failures: usize,
    /// The form is non-degenerate.
    pub nondegenerate: bool,
}

impl E6Orthogonal {
    pub fn passed(&self) -> bool {
        self.distinct_images == self.elements
            && self.det_failures == 0
            && self.form_failures == 0
            && self.multiplicative_failures == 0
            && self.nondegenerate
    }
}

/// `det(g)·g₅`, with `g₅` the matrix of `g` on `V₅`.
pub fn twisted_matrix(q: &LatticeQuotient, g: &GroupElement) -> MatrixFp {
    let m = q.element_matrix(g);
    if g.det() < 0 {
        m.scale(2)
    } else {
        m
    }
}

pub fn e6_so5(rs: &RootSystem) -> Result<E6Orthogonal, ModpError> {
    require(rs, CoxeterType::E6)?;
    let q = LatticeQuotient::new(rs, 3, Sublattice::Weights);
    let els = enumerate_group(rs, DEFAULT_LIMIT)
        .into_elements()
        .ok_or_else(|| ModpError::Check("E6 is enumerable".into()))?;
    let simple: Vec<MatrixFp> = rs.simple_reflections().iter().map(|s| twisted_matrix(&q, s)).collect();
    let mut keys = HashSet::new();
    let mut rep = E6Orthogonal {
        dim: q.dim(),
        elements: els.len(),
        distinct_images: 0,
        det_failures: 0,
        form_failures: 0,
        multiplicative_failures: 0,
        nondegenerate: q.gram.determinant() != 0,
    };
    for g in &els {
        let m = twisted_matrix(&q, g);
        rep.det_failures += usize::from(m.determinant() != 1);
        rep.form_failures += usize::from(!q.preserves_form(&m));
        for (i, s) in rs.simple_reflections().iter().enumerate() {
            rep.multiplicative_failures += usize::from(twisted_matrix(&q, &g.compose(s)) != m.mul(&simple[i]));
        }
        keys.insert(m.key());
    }
    rep.distinct_images = keys.len();
    Ok(rep)
}

/// Order and type of the fixator of the first fundamental weight.
pub fn omega1_fixator_order(rs: &RootSystem) -> Result<(usize, CoxeterType), ModpError> {
    require(rs, CoxeterType::E6)?;
    let w = rs.fundamental_weights().ok_or_else(|| ModpError::Check("no coordinates".into()))?;
    let roots = fixator_subgroup(rs, &w[..1]).ok_or_else(|| ModpError::Check("no coordinates".into()))?;
    let ty = subsystem_type(rs, &roots).map_err(|e| ModpError::Check(e.to_string()))?;
    Ok((reflection_subgroup(rs, &roots).len(), ty))
}
