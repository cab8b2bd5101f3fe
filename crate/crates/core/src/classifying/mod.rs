//! Bredon cohomology of equivariant classifying spaces `B_G Π` with
//! coefficients in the rational Burnside functor.
//!
//! Rationally the cohomology splits over subgroup levels: level `m`
//! contributes the Weyl-eigenspaces of `H^*((B_G Π)^{C_{2^m}})`. The
//! fixed-point spaces are disjoint unions indexed by homomorphisms
//! `C_{2^m} → Π`, described in [`fixed_point_data`].

mod assemble;
mod bgs1;
mod collapse;
mod fixed_points;
mod torus;

pub use assemble::{gm_assemble, gm_sum_rule_holds, kunneth_degree, level_eigendata};
pub use bgs1::{
    bgs1_presentation, bsigma2_consistency, Bgs1Presentation, Bsigma2Report, CompletionIdentity, DimDiff,
    Idempotent, RingGenerator,
};
pub use collapse::{collapse, collapse_expand, CollapsePresentation, CollapseRecord};
pub use fixed_points::{
    bu_series, compositions, fixed_point_data, Component, FixedPointDiagram, LevelData, Space, WeylDescriptor,
};
pub use torus::{sym_invariants_series, torus_check_su2, torus_check_u, LevelComparison, Su2Report, TorusUReport, WeylModel};
