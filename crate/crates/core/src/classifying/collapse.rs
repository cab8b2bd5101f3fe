//! Orthogonal idempotents `e_1, ..., e_s` versus a single generator `e`.
//!
//! `Q[e_1..e_s]/(e_i e_j = δ_ij e_i) ≅ Q[e]/(e(e-1)...(e-s))` with
//! `e = Σ i·e_i` and `e_i = f_i(e)/f_i(i)`, `f_i(x) = x(x-1)...(x-s)/(x-i)`.

use num_traits::Zero;
use serde::Serialize;

use crate::scalar::{self, Rational};
use crate::series::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapsePresentation {
    pub s: usize,
    /// `e(e-1)...(e-s)`.
    pub relation: Poly,
    /// `e_i` as a polynomial in `e`, for `i = 1..=s` (index 0 unused).
    pub idempotents: Vec<Poly>,
}

impl CollapsePresentation {
    /// `c_0 + Σ c_i e_i` as a reduced polynomial in `e`.
    pub fn to_poly(&self, coords: &[Rational]) -> Poly {
        assert_eq!(coords.len(), self.s + 1, "expected coordinates on 1, e_1, ..., e_s");
        let mut p = Poly::constant(coords[0].clone());
        for i in 1..=self.s {
            p = p.add(&self.idempotents[i].scale(&coords[i]));
        }
        self.reduce(&p)
    }

    /// Coordinates of `f(e)` on `1, e_1, ..., e_s`.
    pub fn from_poly(&self, f: &Poly) -> Vec<Rational> {
        collapse_expand(f, self.s)
    }

    pub fn reduce(&self, f: &Poly) -> Poly {
        f.div_rem(&self.relation).1
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("Q[e_1..e_{s}]/(e_i e_j = delta_ij e_i) = Q[e]/({})\n", self.relation.to_text("e"), s = self.s);
        for i in 1..=self.s {
            out.push_str(&format!("e_{i} = {}\n", self.idempotents[i].to_text("e")));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollapseRecord {
    pub s: usize,
    pub relation: String,
    pub idempotents: Vec<String>,
}

impl CollapsePresentation {
    pub fn to_record(&self) -> CollapseRecord {
        CollapseRecord {
            s: self.s,
            relation: self.relation.to_text("e"),
            idempotents: self.idempotents[1..].iter().map(|p| p.to_text("e")).collect(),
        }
    }
}

pub fn collapse(s: usize) -> CollapsePresentation {
    assert!(s >= 1, "collapse needs s >= 1");
    let roots: Vec<Rational> = (0..=s as i64).map(scalar::int).collect();
    let relation = Poly::from_roots(&roots);
    let mut idempotents = vec![Poly::zero()];
    for i in 1..=s {
        let (f, rem) = relation.div_rem(&Poly::linear_root(&roots[i]));
        debug_assert!(rem.is_zero());
        let fi = f.eval(&roots[i]);
        idempotents.push(f.scale(&(scalar::int(1) / fi)));
    }
    CollapsePresentation { s, relation, idempotents }
}

/// `f(e) = f(0) + Σ_i (f(i) - f(0)) e_i`.
pub fn collapse_expand(f: &Poly, s: usize) -> Vec<Rational> {
    let f0 = f.eval(&Rational::zero());
    let mut out = vec![f0.clone()];
    for i in 1..=s as i64 {
        out.push(f.eval(&scalar::int(i)) - &f0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| scalar::int(x)).collect()
    }

    #[test]
    fn worked_cases() {
        let c = collapse(2);
        assert_eq!(c.idempotents[1], Poly::new(ints(&[0, 2, -1])));
        let c1 = collapse(1);
        assert_eq!(c1.idempotents[1], Poly::x());
        assert_eq!(c1.relation, Poly::new(ints(&[0, -1, 1])));
        let sq = Poly::x().pow(2);
        assert_eq!(collapse_expand(&sq, 2), ints(&[0, 1, 4]));
    }

    #[test]
    fn round_trips() {
        for s in 1..=8 {
            let c = collapse(s);
            for b in 0..=s {
                let mut v = vec![Rational::zero(); s + 1];
                v[b] = scalar::int(1);
                assert_eq!(c.from_poly(&c.to_poly(&v)), v);
            }
            for k in 0..=s + 3 {
                let f = Poly::x().pow(k as u32);
                assert_eq!(c.to_poly(&c.from_poly(&f)), c.reduce(&f));
            }
        }
    }

    #[test]
    fn idempotents_are_orthogonal() {
        let c = collapse(4);
        for i in 1..=4 {
            for j in 1..=4 {
                let p = c.reduce(&c.idempotents[i].mul(&c.idempotents[j]));
                let expect = if i == j { c.idempotents[i].clone() } else { Poly::zero() };
                assert_eq!(p, expect);
            }
        }
    }
}
