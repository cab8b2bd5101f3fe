//! Generators of the point ring and the fixed-point rings derived from it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::sector::SectorMonomial;
use crate::mackey::{MackeyClass, Sign, SimpleSummand};
use crate::rolattice::VirtualRep;

/// One presentation generator `y_i·γ^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedGenerator {
    pub name: String,
    /// The orbit level `C_{2^i}` the generator lives at; also its sector.
    pub level: usize,
    pub degree: VirtualRep,
    pub spans: SimpleSummand,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorFamily {
    pub title: String,
    /// Pairs `(y_i γ, y_i / γ)`.
    pub pairs: Vec<(PresentedGenerator, PresentedGenerator)>,
}

/// Generators of `H^G_★` as a Green functor, grouped into four families,
/// with the implicit relations `(y_i γ)(y_i / γ) = y_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointPresentation {
    pub n: usize,
    pub families: Vec<GeneratorFamily>,
}

impl PointPresentation {
    pub fn generator_count(&self) -> usize {
        self.families.iter().map(|f| 2 * f.pairs.len()).sum()
    }

    pub fn generators(&self) -> impl Iterator<Item = &PresentedGenerator> {
        self.families.iter().flat_map(|f| f.pairs.iter().flat_map(|(a, b)| [a, b]))
    }

    pub fn relations(&self) -> Vec<String> {
        self.families
            .iter()
            .flat_map(|f| f.pairs.iter())
            .map(|(g, inv)| format!("({}) * ({}) = y{}", g.name, inv.name, g.level))
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (idx, fam) in self.families.iter().enumerate() {
            let _ = writeln!(out, "family {}: {}", idx + 1, fam.title);
            if fam.pairs.is_empty() {
                let _ = writeln!(out, "  (empty)");
            }
            for (g, inv) in &fam.pairs {
                for x in [g, inv] {
                    let _ = writeln!(out, "  {:<28} level {}  degree {:<16} spans {}", x.name, x.level, x.degree.to_text(), x.spans);
                }
            }
        }
        let _ = writeln!(out, "generators: {}", self.generator_count());
        let _ = writeln!(out, "implicit relations:");
        for r in self.relations() {
            let _ = writeln!(out, "  {r}");
        }
        let _ = writeln!(out, "note: orientation classes are normalized so that y_i*Res(u) is the sector monomial (scalar choice)");
        out
    }
}

fn pair(n: usize, sector: usize, slot: usize, label: &str) -> (PresentedGenerator, PresentedGenerator) {
    let make = |e: i64| {
        let mut exps = vec![0; n];
        exps[slot] = e;
        let m = SectorMonomial::new(n, sector, exps).expect("valid sector monomial");
        let name = if e > 0 { format!("y{sector}*Res({label})") } else { format!("y{sector}/Res({label})") };
        PresentedGenerator {
            name,
            level: sector,
            degree: m.degree(),
            spans: SimpleSummand { i: sector, sign: m.sign() },
        }
    };
    (make(1), make(-1))
}

/// The four generator families for `C_{2^n}`.
pub fn point_presentation(n: usize) -> PointPresentation {
    assert!(n >= 1, "the presentation needs n >= 1");
    let sigma = n - 1;
    let orientation_sigma = GeneratorFamily {
        title: "y_i Res(u_sigma)^(±1), 0 <= i < n, spanning M_i^-".into(),
        pairs: (0..n).map(|i| pair(n, i, sigma, "u_sigma")).collect(),
    };
    let orientation_lambda = GeneratorFamily {
        title: "y_i Res(u_lk)^(±1), 0 <= i <= k <= n-2, spanning M_i".into(),
        pairs: (0..n.saturating_sub(1))
            .flat_map(|k| (0..=k).map(move |i| pair(n, i, k, &format!("u_l{k}"))))
            .collect(),
    };
    let euler_lambda = GeneratorFamily {
        title: "y_i Res(a_lk)^(±1), k < i <= n, 0 <= k <= n-2, spanning M_i".into(),
        pairs: (0..n.saturating_sub(1))
            .flat_map(|k| (k + 1..=n).map(move |i| pair(n, i, k, &format!("a_l{k}"))))
            .collect(),
    };
    let euler_sigma = GeneratorFamily {
        title: "a_sigma and y_n/a_sigma, spanning M_n".into(),
        pairs: vec![pair(n, n, sigma, "a_sigma")],
    };
    PointPresentation { n, families: vec![orientation_sigma, orientation_lambda, euler_lambda, euler_sigma] }
}

/// Graded dimensions of the geometric fixed points
/// `Q[a_sigma^±, a_lk^±]` and the homotopy fixed points
/// `Q[u_2sigma^±, u_lk^±]`, enumerated from their monomials over a
/// coordinate box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointTables {
    pub n: usize,
    pub bound: i64,
    pub geometric: BTreeMap<VirtualRep, u64>,
    pub homotopy: BTreeMap<VirtualRep, u64>,
}

impl FixedPointTables {
    pub fn geometric_dim(&self, v: &VirtualRep) -> u64 {
        self.geometric.get(v).copied().unwrap_or(0)
    }

    pub fn homotopy_dim(&self, v: &VirtualRep) -> u64 {
        self.homotopy.get(v).copied().unwrap_or(0)
    }

    /// Degrees where the tables disagree with the multiplicities of `M_n`
    /// and `M_0^+` in `stem`.
    pub fn mismatches(&self, stem: impl Fn(&VirtualRep) -> MackeyClass) -> Vec<VirtualRep> {
        let n = self.n;
        VirtualRep::degree_box(n, self.bound)
            .filter(|v| {
                let c = stem(v);
                c.multiplicity(n, Sign::Plus) != self.geometric_dim(v)
                    || c.multiplicity(0, Sign::Plus) != self.homotopy_dim(v)
            })
            .collect()
    }
}

fn in_box(v: &VirtualRep, bound: i64) -> bool {
    v.coords().iter().all(|x| x.abs() <= bound)
}

fn exponent_vectors(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |e| {
                    let mut p = prefix.clone();
                    p.push(e);
                    p
                })
            })
            .collect();
    }
    out
}

pub fn fixed_point_rings(n: usize, bound: i64) -> FixedPointTables {
    assert!(n >= 1);
    let mut geometric = BTreeMap::new();
    let mut homotopy = BTreeMap::new();
    let lambdas = n - 1;
    for exps in exponent_vectors(n, -bound, bound) {
        // a_sigma^{e_sigma} ∏ a_lk^{e_k}
        let mut v = VirtualRep::sigma(n).scale(-exps[lambdas]);
        for (k, &e) in exps[..lambdas].iter().enumerate() {
            v = &v - &VirtualRep::lambda(n, k).scale(e);
        }
        if in_box(&v, bound) {
            *geometric.entry(v).or_insert(0) += 1;
        }
        // u_2sigma^{e_sigma} ∏ u_lk^{e_k}
        let u2 = &VirtualRep::trivial(n, 2) - &VirtualRep::sigma(n).scale(2);
        let mut v = u2.scale(exps[lambdas]);
        for (k, &e) in exps[..lambdas].iter().enumerate() {
            v = &v + &(&VirtualRep::trivial(n, 2) - &VirtualRep::lambda(n, k)).scale(e);
        }
        if in_box(&v, bound) {
            *homotopy.entry(v).or_insert(0) += 1;
        }
    }
    FixedPointTables { n, bound, geometric, homotopy }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rolattice::parse_degree;
    use crate::stems::stem_at_sector;

    #[test]
    fn c2_presentation() {
        let p = point_presentation(1);
        assert_eq!(p.families[0].pairs.len(), 1);
        assert!(p.families[1].pairs.is_empty());
        assert!(p.families[2].pairs.is_empty());
        assert_eq!(p.families[3].pairs.len(), 1);
        let (u, _) = &p.families[0].pairs[0];
        assert_eq!(u.spans, SimpleSummand { i: 0, sign: Sign::Minus });
        assert_eq!(u.degree, parse_degree(1, "1 - sigma").unwrap());
        let (a, inv) = &p.families[3].pairs[0];
        assert_eq!(a.degree, parse_degree(1, "-sigma").unwrap());
        assert_eq!(inv.name, "y1/Res(a_sigma)");
    }

    #[test]
    fn c4_lambda_families() {
        let p = point_presentation(2);
        let levels = |f: &GeneratorFamily| f.pairs.iter().map(|(g, _)| g.level).collect::<Vec<_>>();
        assert_eq!(levels(&p.families[1]), vec![0]);
        assert_eq!(levels(&p.families[2]), vec![1, 2]);
    }

    #[test]
    fn generator_counts() {
        for n in 1..7 {
            let count = point_presentation(n).generator_count();
            assert_eq!(count, 2 * (n + (n - 1) * (n + 1)) + 2);
            assert_eq!(count, 2 * n * (n + 1));
        }
    }

    #[test]
    fn generators_are_nonzero_in_their_sector() {
        for n in 1..5 {
            for g in point_presentation(n).generators() {
                assert_eq!(stem_at_sector(&g.degree).multiplicity(g.spans.i, g.spans.sign), 1, "{}", g.name);
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        let n = 3;
        let t = fixed_point_rings(n, 3);
        for k in 0..n - 1 {
            let v = &VirtualRep::trivial(n, 2) - &VirtualRep::lambda(n, k);
            assert_eq!(t.homotopy_dim(&v), 1);
        }
        assert!(t.homotopy.keys().all(|v| v.d() % 2 == 0));
        assert!(t.geometric.keys().all(|v| v.d() == 0));
        assert_eq!(t.geometric_dim(&parse_degree(n, "-sigma + l1").unwrap()), 1);
    }
}
