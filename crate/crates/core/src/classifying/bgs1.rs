//! The ring presentation of `H^*_G(B_G S^1)` and the `B_G Σ_2` comparison.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use super::assemble::gm_assemble;
use super::fixed_points::{fixed_point_data, Space};
use crate::burnside::{idempotents, BurnsideElement, GroupLevel};
use crate::error::Result;
use crate::graded::GradedTable;
use crate::mackey::{MackeyClass, Sign, SimpleSummand};
use crate::rolattice::VirtualRep;
use crate::scalar::{self, pow2};
use crate::stems;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingGenerator {
    pub name: String,
    pub degree: i64,
}

/// One of the orthogonal idempotents `u_{m,j}`, `1 ≤ j ≤ 2^m`. The last
/// one at each `m` (and the single one at `m = 0`) is not a generator:
/// it is defined by the completion identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Idempotent {
    pub m: usize,
    pub j: usize,
    pub name: String,
    pub generator: bool,
}

impl Idempotent {
    /// `Res^{2^n}_{2^{m-1}}(u_{m,j}) = 0` while `Res_{2^m}` is not, and the
    /// Weyl group acts trivially: `u_{m,j}·Q[w]` is a copy of `M_m`.
    pub fn summand(&self) -> SimpleSummand {
        SimpleSummand { i: self.m, sign: Sign::Plus }
    }
}

/// `Σ_{j=1}^{2^m} u_{m,j} = Tr_{2^m}^{2^n}(y_m) / 2^{n-m}`, checked in the
/// Burnside ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletionIdentity {
    pub m: usize,
    pub text: String,
    /// The right-hand side as an element of `A_Q(C_{2^n})`.
    pub element: String,
    /// It is the primitive idempotent with marks `δ_{h,m}`.
    pub is_marks_idempotent: bool,
    /// Whether dividing by `2^m` instead would also give an idempotent.
    pub divisor_2m_idempotent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bgs1Presentation {
    pub n: usize,
    pub generators: Vec<RingGenerator>,
    pub idempotents: Vec<Idempotent>,
    pub relations: Vec<String>,
    pub completions: Vec<CompletionIdentity>,
    /// The completions sum to `1`.
    pub unit_decomposes: bool,
}

fn completion(n: usize, m: usize) -> Result<(CompletionIdentity, BurnsideElement)> {
    let tr = BurnsideElement::y(GroupLevel::new(n, m)?).tr_to(n)?;
    let e = tr.scale(&(scalar::int(1) / pow2((n - m) as u32)));
    let alt = tr.scale(&(scalar::int(1) / pow2(m as u32)));
    let top = GroupLevel::top(n)?;
    let lhs = match m {
        0 => "u_{0,1}".to_string(),
        1 => "u_{1,1} + u_{1,2}".to_string(),
        _ => format!("u_{{{m},1}} + ... + u_{{{m},{}}}", 1usize << m),
    };
    let id = CompletionIdentity {
        m,
        text: format!("{lhs} = Tr_{{2^{m}}}^{{2^{n}}}(y_{m}) / 2^{}", n - m),
        element: e.to_text(),
        is_marks_idempotent: e == idempotents(top)[m] && e.mul(&e)? == e,
        divisor_2m_idempotent: alt.mul(&alt)? == alt,
    };
    Ok((id, e))
}

pub fn bgs1_presentation(n: usize) -> Result<Bgs1Presentation> {
    let mut generators = vec![RingGenerator { name: "w".into(), degree: 2 }];
    let mut idems = Vec::new();
    for m in 0..=n {
        for j in 1..=1usize << m {
            let generator = j < 1 << m;
            let name = format!("u_{{{m},{j}}}");
            if generator {
                generators.push(RingGenerator { name: name.clone(), degree: 0 });
            }
            idems.push(Idempotent { m, j, name, generator });
        }
    }
    let mut relations = vec!["u_{m,j} u_{m',j'} = delta_{mm'} delta_{jj'} u_{m,j}".to_string()];
    for u in idems.iter().filter(|u| u.generator) {
        relations.push(format!("Res^{{2^{n}}}_{{2^{}}}({}) = 0", u.m - 1, u.name));
    }
    let mut completions = Vec::new();
    let mut total = BurnsideElement::zero(GroupLevel::top(n)?);
    for m in 0..=n {
        let (id, e) = completion(n, m)?;
        relations.push(id.text.clone());
        completions.push(id);
        total = total.try_add(&e)?;
    }
    Ok(Bgs1Presentation {
        n,
        generators,
        idempotents: idems,
        relations,
        completions,
        unit_decomposes: total == BurnsideElement::one(GroupLevel::top(n)?),
    })
}

/// A basis element `w^d · u_{m,j}` of the presented ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Monomial {
    power: i64,
    idem: usize,
}

impl Bgs1Presentation {
    pub fn u_generator_count(&self) -> usize {
        self.generators.len() - 1
    }

    fn basis(&self, degree: i64) -> Vec<Monomial> {
        if degree < 0 || degree % 2 != 0 {
            return Vec::new();
        }
        (0..self.idempotents.len()).map(|idem| Monomial { power: degree / 2, idem }).collect()
    }

    fn class_of(&self, monomials: impl IntoIterator<Item = Monomial>) -> MackeyClass {
        MackeyClass::from_summands(self.n, monomials.into_iter().map(|b| (self.idempotents[b.idem].summand(), 1)))
    }

    /// The graded Mackey class spanned by the monomial basis.
    pub fn table(&self, max_degree: usize) -> GradedTable {
        let mut t = GradedTable::new(self.n);
        for k in 0..=max_degree as i64 {
            t.add(k, &self.class_of(self.basis(k)));
        }
        t
    }

    /// Degreewise quotient by the ideal generated by `w`. Multiplication by
    /// `w` sends `w^d u_{m,j}` to `w^{d+1} u_{m,j}`, so its image is a sum
    /// of whole summands and already closed under transfer.
    pub fn quotient_by_w(&self, max_degree: usize) -> GradedTable {
        let mut t = GradedTable::new(self.n);
        for k in 0..=max_degree as i64 {
            let image: BTreeSet<Monomial> =
                self.basis(k - 2).into_iter().map(|b| Monomial { power: b.power + 1, ..b }).collect();
            t.add(k, &self.class_of(self.basis(k).into_iter().filter(|b| !image.contains(b))));
        }
        t
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "generators ({}):", self.generators.len());
        for g in &self.generators {
            let _ = writeln!(out, "  {} |{}| = {}", g.name, g.name, g.degree);
        }
        let _ = writeln!(out, "relations:");
        for r in &self.relations {
            let _ = writeln!(out, "  {r}");
        }
        let _ = writeln!(out, "completion checks in A_Q(C_{}):", 1usize << self.n);
        for c in &self.completions {
            let _ = writeln!(
                out,
                "  m={}: {} idempotent={}",
                c.m,
                c.element,
                if c.is_marks_idempotent { "yes" } else { "NO" }
            );
        }
        let _ = writeln!(out, "unit decomposes: {}", if self.unit_decomposes { "yes" } else { "NO" });
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimDiff {
    pub degree: usize,
    pub level: usize,
    pub fixed_points: u64,
    pub quotient: u64,
}

/// The two computations of `H^*_G(B_G Σ_2)` side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bsigma2Report {
    pub n: usize,
    pub max_degree: usize,
    /// Assembled from the fixed points.
    pub fixed_points: GradedTable,
    /// `H^*_G(B_G S^1)/(w)`.
    pub quotient: GradedTable,
    pub diff: Vec<DimDiff>,
    /// Integer-degree stems of a point vanish away from 0 over the
    /// degree range, so the integer-graded quotient is the whole story.
    pub point_stems_concentrated: bool,
}

impl Bsigma2Report {
    pub fn dims(table: &GradedTable, degree: usize) -> Vec<u64> {
        table.get(degree as i64).level_dims()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "B_G Sigma_2, n={}, degrees 0..={}", self.n, self.max_degree);
        let _ = writeln!(out, "{:>6}  {:<24} S^1 quotient by w (dims)", "degree", "fixed points (dims)");
        let fmt = |v: Vec<u64>| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
        for k in 0..=self.max_degree {
            let _ = writeln!(out, "{:>6}  {:<24} {}", k, fmt(Self::dims(&self.fixed_points, k)), fmt(Self::dims(&self.quotient, k)));
        }
        let _ = writeln!(out, "fixed points degree 0: {}", self.fixed_points.get(0));
        let _ = writeln!(out, "quotient degree 0: {}", self.quotient.get(0));
        if self.diff.is_empty() {
            let _ = writeln!(out, "diff: empty");
        } else {
            let _ = writeln!(out, "diff: {} entries", self.diff.len());
            for d in &self.diff {
                let _ = writeln!(
                    out,
                    "  degree {} level {}: fixed points {} vs quotient {}",
                    d.degree, d.level, d.fixed_points, d.quotient
                );
            }
        }
        let _ = writeln!(out, "note: both computations are reported; no verdict on which is intended");
        out
    }
}

pub fn bsigma2_consistency(n: usize, max_degree: usize) -> Result<Bsigma2Report> {
    let fixed_points = gm_assemble(&fixed_point_data(Space::BSigma2, n, max_degree)?)?;
    let quotient = bgs1_presentation(n)?.quotient_by_w(max_degree);
    let mut diff = Vec::new();
    for k in 0..=max_degree {
        let a = Bsigma2Report::dims(&fixed_points, k);
        let b = Bsigma2Report::dims(&quotient, k);
        for h in 0..=n {
            if a[h] != b[h] {
                diff.push(DimDiff { degree: k, level: h, fixed_points: a[h], quotient: b[h] });
            }
        }
    }
    let point_stems_concentrated =
        (1..=max_degree as i64).all(|k| [k, -k].iter().all(|&d| stems::stem_at(&VirtualRep::trivial(n, d)).is_zero()));
    Ok(Bsigma2Report { n, max_degree, fixed_points, quotient, diff, point_stems_concentrated })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_has_a_single_u() {
        let p = bgs1_presentation(1).unwrap();
        let names: Vec<_> = p.generators.iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["w", "u_{1,1}"]);
        assert!(p.unit_decomposes);
    }

    #[test]
    fn generator_counts() {
        for n in 1..=6 {
            let p = bgs1_presentation(n).unwrap();
            let by_range: usize = (1..=n).map(|m| (1 << m) - 1).sum();
            assert_eq!(p.u_generator_count(), by_range);
            assert_eq!(p.u_generator_count(), (1 << (n + 1)) - n - 2);
        }
    }

    #[test]
    fn completion_divisor() {
        for n in 1..=5 {
            let p = bgs1_presentation(n).unwrap();
            assert!(p.unit_decomposes);
            for c in &p.completions {
                assert!(c.is_marks_idempotent, "n={n} m={}", c.m);
                assert_eq!(c.divisor_2m_idempotent, 2 * c.m == n);
            }
        }
    }

    #[test]
    fn table_and_quotient() {
        let p = bgs1_presentation(2).unwrap();
        let t = p.table(6);
        assert_eq!(t.get(4), MackeyClass::parse(2, "M0 + 2*M1 + 4*M2").unwrap());
        let q = p.quotient_by_w(6);
        assert_eq!(q.get(0).level_dim(2), 7);
        assert_eq!(q.degrees().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn bsigma2_reports() {
        let r = bsigma2_consistency(1, 8).unwrap();
        assert!(r.diff.is_empty());
        assert_eq!(Bsigma2Report::dims(&r.fixed_points, 0), vec![1, 3]);
        let r = bsigma2_consistency(2, 8).unwrap();
        assert_eq!(r.fixed_points.get(0).level_dim(2), 5);
        assert_eq!(r.quotient.get(0).level_dim(2), 7);
        assert!(r.point_stems_concentrated);
        assert!(r.diff.iter().all(|d| d.degree == 0));
    }
}
