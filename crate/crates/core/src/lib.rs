//! Exact construction of the finite Coxeter groups, with their involutions,
//! cubes (abelian reflection subgroups), mod-p lattice models, and the
//! quaternionic construction of the rank-4 groups.

pub mod coxgroup;
pub mod cubes;
pub mod exactnum;
pub mod involutions;
pub mod modp;
pub mod quaternion;
pub mod report;
pub mod verify;
