//! The invariant suite behind `ratmackey selftest`.

use std::fmt;

use crate::burnside::{idempotents, BurnsideElement, GroupLevel};
use crate::classifying::{
    bgs1_presentation, bsigma2_consistency, collapse, fixed_point_data, gm_assemble, torus_check_su2, torus_check_u,
    Space, WeylModel,
};
use crate::compare::{compare_methods, StemMethods};
use crate::error::Result;
use crate::mackey::{MackeyClass, Sign, SimpleSummand};
use crate::rolattice::VirtualRep;
use crate::scalar;
use crate::series::Poly;
use crate::stems::{self, decode, fixed_point_rings, point_presentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Informational; never fails the run.
    Note,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Note => "NOTE",
        };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.name)
        } else {
            write!(f, "{tag} {}: {}", self.name, self.detail)
        }
    }
}

fn check(name: &str, body: impl FnOnce() -> Result<std::result::Result<(), String>>) -> Check {
    let (status, detail) = match body() {
        Ok(Ok(())) => (Status::Pass, String::new()),
        Ok(Err(why)) => (Status::Fail, why),
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    Check { name: name.into(), status, detail }
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn burnside_checks(max_n: usize) -> Result<std::result::Result<(), String>> {
    for n in 1..=max_n {
        for i in 0..=n {
            let lv = GroupLevel::new(n, i)?;
            let basis: Vec<_> = (0..=i).map(|j| BurnsideElement::orbit(lv, j)).collect();
            for a in &basis {
                for b in &basis {
                    let ab = a.mul(b)?;
                    let pointwise: Vec<_> = a.marks().iter().zip(b.marks()).map(|(x, y)| x * y).collect();
                    if ab.marks() != pointwise {
                        return Ok(Err(format!("marks not multiplicative at {lv}")));
                    }
                }
                if i < n {
                    let up = GroupLevel::new(n, i + 1)?;
                    for j in 0..=i + 1 {
                        let c = BurnsideElement::orbit(up, j);
                        if a.mul(&c.res(i)?)?.tr()? != a.tr()?.mul(&c)? {
                            return Ok(Err(format!("Frobenius reciprocity fails at {lv}")));
                        }
                    }
                }
            }
            let es = idempotents(lv);
            let sum = es.iter().try_fold(BurnsideElement::zero(lv), |acc, e| acc.try_add(e))?;
            if sum != BurnsideElement::one(lv) {
                return Ok(Err(format!("idempotents at {lv} do not sum to 1")));
            }
            for (h, e) in es.iter().enumerate() {
                for (k, f) in es.iter().enumerate() {
                    let want = if h == k { e.clone() } else { BurnsideElement::zero(lv) };
                    if e.mul(f)? != want {
                        return Ok(Err(format!("idempotents {h},{k} at {lv} not orthogonal")));
                    }
                }
            }
            if i >= 1 && !BurnsideElement::y(lv).res(i - 1)?.is_zero() {
                return Ok(Err(format!("Res(y) is nonzero at {lv}")));
            }
        }
    }
    Ok(Ok(()))
}

/// Runs every check; `quick` shrinks the parameter ranges.
pub fn run_all(quick: bool) -> Vec<Check> {
    let stem_n = if quick { 2 } else { 3 };
    let mut out = Vec::new();

    out.push(check("burnside ring identities, n <= 4", || burnside_checks(4)));

    out.push(check("mackey classify inverts eigendata", || {
        let n = 3;
        for v in VirtualRep::degree_box(n, 1) {
            let c = stems::stem_at(&v);
            if MackeyClass::classify(n, &c.eigendata())? != c {
                return Ok(Err(format!("round trip fails for the stem at {v}")));
            }
        }
        Ok(Ok(()))
    }));

    for n in 1..=stem_n {
        out.push(check(&format!("stems three-way agreement, n={n}, box 3"), || {
            let r = compare_methods(n, 3, &StemMethods::default());
            Ok(ensure(r.is_empty(), || r.to_text()))
        }));
    }

    for n in 1..=stem_n {
        let collisions = VirtualRep::degree_box(n, 3).filter(|v| !decode(v).is_unique()).count();
        out.push(Check {
            name: format!("tuple uniqueness audit, n={n}, box 3"),
            status: Status::Note,
            detail: format!("{collisions} degree(s) with more than one tuple; stems sum over them"),
        });
    }

    out.push(check("sign and rotation sphere tables, n <= 4", || {
        for n in 1..=4 {
            let t = stems::sphere_homology(&VirtualRep::sigma(n))?;
            let sign_part = MackeyClass::from_summands(
                n,
                (0..n).map(|i| (SimpleSummand { i, sign: Sign::Minus }, 1)),
            );
            if t.get(1) != sign_part || t.get(0) != MackeyClass::simple(n, n, Sign::Plus)? {
                return Ok(Err(format!("S^sigma wrong at n={n}")));
            }
        }
        Ok(Ok(()))
    }));

    out.push(check("point presentation generator count 2n(n+1)", || {
        Ok(ensure((1..=6).all(|n| point_presentation(n).generator_count() == 2 * n * (n + 1)), || "count differs".into()))
    }));

    out.push(check(&format!("fixed-point rings match M_n and M_0 multiplicities, n <= {stem_n}"), || {
        for n in 1..=stem_n {
            let bad = fixed_point_rings(n, 3).mismatches(stems::stem_at);
            if !bad.is_empty() {
                return Ok(Err(format!("n={n}: {} mismatching degree(s), first {}", bad.len(), bad[0])));
            }
        }
        Ok(Ok(()))
    }));

    out.push(check("BS1 fixed points equal the presentation, n <= 3, degree 20", || {
        for n in 1..=3 {
            let gm = gm_assemble(&fixed_point_data(Space::BS1, n, 20)?)?;
            let p = bgs1_presentation(n)?;
            if gm != p.table(20) {
                return Ok(Err(format!("tables differ at n={n}")));
            }
            if !p.unit_decomposes || p.completions.iter().any(|c| !c.is_marks_idempotent) {
                return Ok(Err(format!("completion identity fails at n={n}")));
            }
        }
        Ok(Ok(()))
    }));

    let max_m = if quick { 2 } else { 3 };
    out.push(check(&format!("U(m) maximal torus, n,m <= {max_m}, degree 20"), || {
        for n in 1..=max_m {
            for m in 1..=max_m {
                let r = torus_check_u(n, m, 20)?;
                if !r.passes() {
                    return Ok(Err(r.to_text()));
                }
            }
        }
        Ok(Ok(()))
    }));

    out.push(check("SU(2) torus comparison holds exactly at n=1, n <= 6", || {
        for n in 1..=6 {
            let r = torus_check_su2(n, WeylModel::Paper)?;
            if r.holds != (n == 1) || r.lhs != (1 << (n - 1)) + 1 || r.rhs != 1 << n {
                return Ok(Err(format!("n={n}: {}", r.to_text())));
            }
        }
        Ok(Ok(()))
    }));

    out.push(check("idempotent collapse round trip, s <= 8", || {
        for s in 1..=8 {
            let c = collapse(s);
            for b in 0..=s {
                let mut v = vec![scalar::int(0); s + 1];
                v[b] = scalar::int(1);
                if c.from_poly(&c.to_poly(&v)) != v {
                    return Ok(Err(format!("s={s} basis vector {b}")));
                }
            }
        }
        let e1 = Poly::new(vec![scalar::int(0), scalar::int(2), scalar::int(-1)]);
        Ok(ensure(collapse(2).idempotents[1] == e1, || "e_1 != 2e - e^2 at s=2".into()))
    }));

    out.push(check("B Sigma_2 report runs", || {
        let a = bsigma2_consistency(1, 8)?;
        let b = bsigma2_consistency(2, 8)?;
        Ok(ensure(
            a.diff.is_empty() && b.fixed_points.get(0).level_dim(2) == 5 && b.quotient.get(0).level_dim(2) == 7,
            || "unexpected B Sigma_2 dimensions".into(),
        ))
    }));

    out
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        let checks = run_all(true);
        for c in &checks {
            println!("{c}");
        }
        assert!(all_passed(&checks));
        assert!(checks.iter().any(|c| c.status == Status::Note));
    }
}
