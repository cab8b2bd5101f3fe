//! Rational splitting of Bredon cohomology over subgroup levels.

use super::fixed_points::FixedPointDiagram;
use crate::error::Result;
use crate::graded::GradedTable;
use crate::mackey::{LevelEigen, MackeyClass};
use crate::rolattice::VirtualRep;
use crate::stems;

/// Per-level Weyl eigendata of `H^degree(X^{C_{2^h}})`.
pub fn level_eigendata(diag: &FixedPointDiagram, degree: usize) -> Vec<LevelEigen> {
    diag.levels.iter().map(|l| l.weyl.eigendata(&l.components, degree)).collect()
}

/// `H^*_G(X)` as a graded Mackey class, up to the diagram's degree bound.
/// Level `m` contributes `M_m^+` for every Weyl invariant and `M_m^-` for
/// every sign eigenvector of `H^*(X^{C_{2^m}})`.
pub fn gm_assemble(diag: &FixedPointDiagram) -> Result<GradedTable> {
    let mut table = GradedTable::new(diag.n);
    for k in 0..=diag.max_degree {
        let class = MackeyClass::classify(diag.n, &level_eigendata(diag, k))?;
        table.add(k as i64, &class);
    }
    Ok(table)
}

/// `levelDim(H^k, h) = Σ_{m ≤ h} (invariants + sign part below the top)`.
pub fn gm_sum_rule_holds(diag: &FixedPointDiagram, table: &GradedTable) -> bool {
    let n = diag.n;
    (0..=diag.max_degree).all(|k| {
        let eigen = level_eigendata(diag, k);
        let class = table.get(k as i64);
        (0..=n).all(|h| {
            let expect: u64 = eigen[..=h].iter().map(|e| e.plus + if h < n { e.minus } else { 0 }).sum();
            class.level_dim(h) == expect
        })
    })
}

/// The `RO(G)`-graded group `H^V_G(X) = ⊕_k H^k_G(X) ⊠ H^{V-k}_G(pt)`,
/// with `H^W_G(pt) = H^G_{-W}`.
pub fn kunneth_degree(table: &GradedTable, v: &VirtualRep) -> MackeyClass {
    let n = table.n();
    let mut out = MackeyClass::zero(n);
    for (k, class) in table.iter() {
        let w = &VirtualRep::trivial(n, k) - v;
        out = out.sum(&class.box_product(&stems::stem_at(&w)));
    }
    out
}
