//! Reduced homology of representation spheres from fixed-point data.
//!
//! For an actual representation `W`, the geometric fixed points of `S^W`
//! at `C_{2^h}` form the sphere `S^{W^{C_{2^h}}}`, on which the Weyl
//! generator acts with the determinant sign of its action on
//! `W^{C_{2^h}}`. Each level therefore contributes a one-dimensional
//! `±`-module in degree `dim W^{C_{2^h}}`, and the Mackey class is read off
//! through [`MackeyClass::classify`]. Virtual spheres are assembled by
//! Künneth and duality: `S^{W⁺ - W⁻} = S^{W⁺} ∧ D(S^{W⁻})`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::graded::GradedTable;
use crate::mackey::{LevelEigen, MackeyClass, Sign};
use crate::rolattice::VirtualRep;

fn effective_sphere(w: &VirtualRep) -> Result<GradedTable> {
    debug_assert!(w.is_effective());
    let n = w.n();
    let mut by_degree: BTreeMap<i64, Vec<LevelEigen>> = BTreeMap::new();
    for h in 0..=n {
        let slot = &mut by_degree.entry(w.fixed_dim(h)).or_insert_with(|| vec![LevelEigen::default(); n + 1])[h];
        match w.fixed_sign(h) {
            Sign::Plus => slot.plus += 1,
            Sign::Minus => slot.minus += 1,
        }
    }
    let mut table = GradedTable::new(n);
    for (deg, eigen) in by_degree {
        table.add(deg, &MackeyClass::classify(n, &eigen)?);
    }
    Ok(table)
}

/// Integer-graded reduced homology `H̃_*^G(S^V)` as Mackey classes.
pub fn sphere_homology(v: &VirtualRep) -> Result<GradedTable> {
    if v.is_effective() {
        return effective_sphere(v);
    }
    let plus = effective_sphere(&v.positive_part())?;
    let minus = effective_sphere(&v.negative_part())?;
    Ok(plus.box_product(&minus.dual()))
}

/// `H^G_V = H̃_0^G(S^{-V})`.
pub fn stem_at_oracle(v: &VirtualRep) -> Result<MackeyClass> {
    Ok(sphere_homology(&-v)?.get(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(n: usize, s: &str) -> MackeyClass {
        MackeyClass::parse(n, s).unwrap()
    }

    #[test]
    fn sign_sphere() {
        let t = sphere_homology(&VirtualRep::sigma(2)).unwrap();
        assert_eq!(t.get(0), class(2, "M2"));
        assert_eq!(t.get(1), class(2, "M0- + M1-"));
        assert_eq!(t.degrees().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn rotation_spheres() {
        let n = 3;
        let t = sphere_homology(&VirtualRep::lambda(n, 1)).unwrap();
        assert_eq!(t.get(0), class(n, "M2 + M3"));
        assert_eq!(t.get(2), class(n, "M0 + M1"));
        let t = sphere_homology(&VirtualRep::sigma(n).scale(2)).unwrap();
        assert_eq!(t.get(0), class(n, "M3"));
        assert_eq!(t.get(2), class(n, "M0 + M1 + M2"));
    }

    #[test]
    fn oracle_stems() {
        let n = 3;
        for k in 0..n - 1 {
            let v = (&VirtualRep::trivial(n, 2) - &VirtualRep::lambda(n, k)).scale(2);
            let expect = MackeyClass::from_summands(
                n,
                (0..=k).map(|i| (crate::mackey::SimpleSummand { i, sign: Sign::Plus }, 1)),
            );
            assert_eq!(stem_at_oracle(&v).unwrap(), expect);
        }
        assert_eq!(stem_at_oracle(&VirtualRep::zero(n)).unwrap(), MackeyClass::burnside(n));
        // |u_{l0} a_sigma| = 2 - l0 - sigma: the factors live in disjoint sectors.
        let v = VirtualRep::from_coords(2, &[2, -1, -1]).unwrap();
        assert!(stem_at_oracle(&v).unwrap().is_zero());
        // u_{l0} a_{l1} = 0, but a_{l0} u_{l1} lives in the same degree.
        let v = VirtualRep::from_coords(n, &[2, 0, -1, -1]).unwrap();
        assert_eq!(stem_at_oracle(&v).unwrap(), class(n, "M1"));
    }
}
