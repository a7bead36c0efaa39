//! Finite Coxeter groups: types, root systems, and elements acting on roots.

mod classify;
mod element;
mod enumerate;
mod ops;
mod rootset;
mod rootsys;
mod types;

pub use classify::{
    classify_coxeter_matrix, coxeter_matrix_of, reflection_closure, subsystem_simple_roots, subsystem_type,
    ClassifyError,
};
pub use element::{DihedralElement, GroupElement};
pub use enumerate::{closure, enumerate_group, subgroup_order, Enumeration, DEFAULT_LIMIT};
pub use ops::{
    centralizer_of_reflection, fixator_subgroup, fixes_vector, preserves_inner_products, random_element,
    reflection_pair_orders, reflection_subgroup, reflections_conjugate, root_pairings, verify_reflection_centralizer,
    pair_orders_match_m_set, OrderDivisibility, ReflectionCentralizer,
};
pub use rootset::{RootSet, MAX_POSITIVE_ROOTS};
pub use rootsys::{FactorInfo, RootSystem, RootSystemError, RootSystemExport};
pub use types::{CoxeterType, TypeError};
