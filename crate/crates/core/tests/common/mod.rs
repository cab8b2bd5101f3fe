//! Independent models shared by the integration tests.
#![allow(dead_code)]

use ratmackey::burnside::{BurnsideElement, GroupLevel};
use ratmackey::rolattice::{Irreducible, RawRep, VirtualRep};
use ratmackey::scalar;

/// A finite `C_{2^i}`-set: `act[x]` is the generator applied to `x`.
#[derive(Debug, Clone)]
pub struct GSet {
    pub n: usize,
    pub i: usize,
    pub act: Vec<usize>,
}

impl GSet {
    pub fn orbit(n: usize, i: usize, j: usize) -> GSet {
        let size = 1usize << (i - j);
        GSet { n, i, act: (0..size).map(|x| (x + 1) % size).collect() }
    }

    pub fn disjoint(&self, other: &GSet) -> GSet {
        let off = self.act.len();
        let mut act = self.act.clone();
        act.extend(other.act.iter().map(|x| x + off));
        GSet { n: self.n, i: self.i, act }
    }

    pub fn product(&self, other: &GSet) -> GSet {
        let m = other.act.len();
        let act = (0..self.act.len() * m).map(|p| self.act[p / m] * m + other.act[p % m]).collect();
        GSet { n: self.n, i: self.i, act }
    }

    fn power(&self, x: usize, e: usize) -> usize {
        (0..e).fold(x, |y, _| self.act[y])
    }

    /// Restriction to `C_{2^{i-1}}`, generated by the square.
    pub fn res(&self) -> GSet {
        GSet { n: self.n, i: self.i - 1, act: (0..self.act.len()).map(|x| self.power(x, 2)).collect() }
    }

    /// `C_{2^{i+1}} ×_{C_{2^i}} X` on `X × {0, 1}`; the new generator squares
    /// to the old one.
    pub fn induce(&self) -> GSet {
        let k = self.act.len();
        let mut act = vec![0; 2 * k];
        for x in 0..k {
            act[x] = x + k;
            act[x + k] = self.act[x];
        }
        GSet { n: self.n, i: self.i + 1, act }
    }

    /// Number of points fixed by `C_{2^h}`.
    pub fn marks(&self) -> Vec<i64> {
        (0..=self.i)
            .map(|h| {
                let e = 1usize << (self.i - h);
                (0..self.act.len()).filter(|&x| self.power(x, e) == x).count() as i64
            })
            .collect()
    }

    /// The orbit decomposition as a Burnside element.
    pub fn class(&self) -> BurnsideElement {
        let lv = GroupLevel::new(self.n, self.i).unwrap();
        let mut seen = vec![false; self.act.len()];
        let mut out = BurnsideElement::zero(lv);
        for start in 0..self.act.len() {
            if seen[start] {
                continue;
            }
            let mut size = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                size += 1;
                x = self.act[x];
            }
            let j = self.i - size.trailing_zeros() as usize;
            out = out.try_add(&BurnsideElement::orbit(lv, j)).unwrap();
        }
        out
    }
}

/// Reduced coordinates at level `h` computed from the exponents of the
/// complexification: `1 ↦ {0}`, `sigma ↦ {2^{n-1}}`, `lam(s,m) ↦ {±sm}`.
pub fn restrict_by_characters(raw: &RawRep, h: usize) -> VirtualRep {
    let n = raw.n;
    let modulus = 1i64 << n;
    let mut exps: Vec<(i64, i64)> = Vec::new();
    for &(irr, mult) in &raw.terms {
        match irr {
            Irreducible::Triv => exps.push((0, mult)),
            Irreducible::Sigma => exps.push((modulus / 2, mult)),
            Irreducible::Lambda { s, m } => {
                let e = (s as i64 * m as i64).rem_euclid(modulus);
                exps.push((e, mult));
                exps.push(((-e).rem_euclid(modulus), mult));
            }
        }
    }
    let sub = 1i64 << h;
    let (mut d, mut s) = (0, 0);
    let mut halves = vec![0i64; h.saturating_sub(1)];
    for (e, mult) in exps {
        let e = e.rem_euclid(sub);
        if e == 0 {
            d += mult;
        } else if 2 * e == sub {
            s += mult;
        } else {
            halves[e.trailing_zeros() as usize] += mult;
        }
    }
    assert!(halves.iter().all(|x| x % 2 == 0));
    VirtualRep::new(h, d, s, halves.iter().map(|x| x / 2).collect()).unwrap()
}

pub fn q(v: i64) -> scalar::Rational {
    scalar::int(v)
}
