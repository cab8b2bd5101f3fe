//! The reduced lattice of virtual real `C_{2^n}`-representations.
//!
//! Every irreducible real representation is `1`, the sign representation
//! `sigma`, or a rotation plane `lam(s, m)` (rotation by `2π·s·m/2^n`).
//! Up to 2-local equivalence of representation spheres, `lam(s, 2^k)` may be
//! replaced by `l_k = lam(1, 2^k)`, and `l_{n-1} = 2·sigma`, `l_n = 2`, so a
//! degree is a vector `(d; s; c_0..c_{n-2})` over `{1, sigma, l_0..l_{n-2}}`.

mod parse;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mackey::Sign;

pub use parse::parse_degree;

/// A virtual representation in reduced coordinates.
///
/// `n = 0` is the trivial group: only `d` is meaningful and `s` is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VirtualRep {
    n: usize,
    d: i64,
    s: i64,
    c: Vec<i64>,
}

impl VirtualRep {
    pub fn new(n: usize, d: i64, s: i64, c: Vec<i64>) -> Result<Self> {
        if c.len() != n.saturating_sub(1) {
            return Err(Error::MalformedRep(format!(
                "expected {} lambda coordinates for n = {n}, got {}",
                n.saturating_sub(1),
                c.len()
            )));
        }
        if n == 0 && s != 0 {
            return Err(Error::MalformedRep("the trivial group has no sign representation".into()));
        }
        Ok(VirtualRep { n, d, s, c })
    }

    pub fn zero(n: usize) -> Self {
        VirtualRep { n, d: 0, s: 0, c: vec![0; n.saturating_sub(1)] }
    }

    /// `d` copies of the trivial representation.
    pub fn trivial(n: usize, d: i64) -> Self {
        VirtualRep { d, ..Self::zero(n) }
    }

    pub fn sigma(n: usize) -> Self {
        assert!(n >= 1, "the trivial group has no sign representation");
        VirtualRep { s: 1, ..Self::zero(n) }
    }

    /// `l_k = lam(1, 2^k)` for `0 <= k <= n-2`.
    pub fn lambda(n: usize, k: usize) -> Self {
        assert!(k + 2 <= n, "l_{k} is not a reduced basis vector for n = {n}");
        let mut v = Self::zero(n);
        v.c[k] = 1;
        v
    }

    /// Builds from the coordinate vector `[d, s, c_0, ..., c_{n-2}]`.
    pub fn from_coords(n: usize, coords: &[i64]) -> Result<Self> {
        if n == 0 {
            return match coords {
                [d] => Ok(Self::trivial(0, *d)),
                _ => Err(Error::MalformedRep("the trivial group has one coordinate".into())),
            };
        }
        if coords.len() != n + 1 {
            return Err(Error::MalformedRep(format!("expected {} coordinates, got {}", n + 1, coords.len())));
        }
        Self::new(n, coords[0], coords[1], coords[2..].to_vec())
    }

    pub fn coords(&self) -> Vec<i64> {
        if self.n == 0 {
            return vec![self.d];
        }
        let mut v = vec![self.d, self.s];
        v.extend_from_slice(&self.c);
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn c(&self) -> &[i64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0 && self.s == 0 && self.c.iter().all(|&x| x == 0)
    }

    /// The non-trivial part `V - d`.
    pub fn without_trivial(&self) -> Self {
        VirtualRep { d: 0, ..self.clone() }
    }

    pub fn scale(&self, k: i64) -> Self {
        VirtualRep { n: self.n, d: k * self.d, s: k * self.s, c: self.c.iter().map(|x| k * x).collect() }
    }

    /// Coordinatewise positive part; `V = V⁺ - V⁻` with both effective.
    pub fn positive_part(&self) -> Self {
        VirtualRep {
            n: self.n,
            d: self.d.max(0),
            s: self.s.max(0),
            c: self.c.iter().map(|&x| x.max(0)).collect(),
        }
    }

    pub fn negative_part(&self) -> Self {
        (-self).positive_part()
    }

    pub fn is_effective(&self) -> bool {
        self.d >= 0 && self.s >= 0 && self.c.iter().all(|&x| x >= 0)
    }

    /// Restriction to the subgroup `C_{2^h}`, expressed in that subgroup's
    /// reduced basis.
    pub fn restrict(&self, h: usize) -> Result<Self> {
        if h > self.n {
            return Err(Error::LevelOutOfRange(format!("cannot restrict to level {h} > n = {}", self.n)));
        }
        if h == self.n {
            return Ok(self.clone());
        }
        // sigma is trivial on every proper subgroup.
        let mut out = Self::trivial(h, self.d + self.s);
        for (k, &ck) in self.c.iter().enumerate() {
            if k + 2 <= h {
                out.c[k] += ck;
            } else if k + 1 == h {
                out.s += 2 * ck;
            } else {
                out.d += 2 * ck;
            }
        }
        Ok(out)
    }

    /// `dim V^{C_{2^h}}`; may be negative for virtual `V`.
    pub fn fixed_dim(&self, h: usize) -> i64 {
        let sigma = if h < self.n { self.s } else { 0 };
        let lambdas: i64 = self.c.iter().enumerate().filter(|(k, _)| h <= *k).map(|(_, &ck)| 2 * ck).sum();
        self.d + sigma + lambdas
    }

    /// Determinant sign of the Weyl generator on `V^{C_{2^h}}`.
    ///
    /// Rotation planes contribute `+1`; each fixed copy of `sigma`
    /// contributes `-1`.
    pub fn fixed_sign(&self, h: usize) -> Sign {
        if h < self.n {
            Sign::from_parity(self.s.rem_euclid(2) == 1)
        } else {
            Sign::Plus
        }
    }

    /// Text form in the degree grammar, e.g. `2 - l0` or `1 - sigma`.
    pub fn to_text(&self) -> String {
        let mut terms: Vec<(i64, String)> = Vec::new();
        if self.d != 0 {
            terms.push((self.d, String::new()));
        }
        if self.s != 0 {
            terms.push((self.s, "sigma".into()));
        }
        for (k, &ck) in self.c.iter().enumerate() {
            if ck != 0 {
                terms.push((ck, format!("l{k}")));
            }
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (coef, name)) in terms.iter().enumerate() {
            let mag = coef.unsigned_abs();
            let body = match (name.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => name.clone(),
                (false, _) => format!("{mag}*{name}"),
            };
            match (idx, *coef < 0) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }

    /// Every degree with all coordinates in `[-bound, bound]`, in
    /// lexicographic coordinate order.
    pub fn degree_box(n: usize, bound: i64) -> impl Iterator<Item = VirtualRep> {
        let dims = if n == 0 { 1 } else { n + 1 };
        let width = (2 * bound + 1) as u64;
        let total = width.pow(dims as u32);
        (0..total).map(move |mut idx| {
            let mut coords = vec![0; dims];
            for slot in coords.iter_mut().rev() {
                *slot = (idx % width) as i64 - bound;
                idx /= width;
            }
            VirtualRep::from_coords(n, &coords).expect("box coordinates have the right shape")
        })
    }

    fn check_same_group(&self, other: &Self) {
        assert_eq!(self.n, other.n, "combining representations of different groups");
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &VirtualRep {
    type Output = VirtualRep;
    fn add(self, rhs: &VirtualRep) -> VirtualRep {
        self.check_same_group(rhs);
        VirtualRep {
            n: self.n,
            d: self.d + rhs.d,
            s: self.s + rhs.s,
            c: self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &VirtualRep {
    type Output = VirtualRep;
    fn sub(self, rhs: &VirtualRep) -> VirtualRep {
        self + &(-rhs)
    }
}

impl Neg for &VirtualRep {
    type Output = VirtualRep;
    fn neg(self) -> VirtualRep {
        self.scale(-1)
    }
}

impl Add for VirtualRep {
    type Output = VirtualRep;
    fn add(self, rhs: VirtualRep) -> VirtualRep {
        &self + &rhs
    }
}

impl Sub for VirtualRep {
    type Output = VirtualRep;
    fn sub(self, rhs: VirtualRep) -> VirtualRep {
        &self - &rhs
    }
}

impl Neg for VirtualRep {
    type Output = VirtualRep;
    fn neg(self) -> VirtualRep {
        self.scale(-1)
    }
}

/// A named irreducible real representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Irreducible {
    Triv,
    Sigma,
    /// Rotation by `2π·s·m/2^n`, `m` a power of two and `s` odd.
    Lambda { s: u64, m: u64 },
}

impl Irreducible {
    /// Checks the `lam(s, m)` constraints for the group `C_{2^n}`.
    ///
    /// `m = 2^k` with `k <= n`; `s` odd with `s < 2^(n-k)`, except that the
    /// folded planes `lam(1, 2^(n-1)) = 2·sigma` and `lam(1, 2^n) = 2` are
    /// accepted with `s = 1`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let Irreducible::Lambda { s, m } = *self else {
            if *self == Irreducible::Sigma && n == 0 {
                return Err(Error::MalformedRep("the trivial group has no sign representation".into()));
            }
            return Ok(());
        };
        if m == 0 || !m.is_power_of_two() {
            return Err(Error::MalformedRep(format!("lam({s},{m}): m must be a power of two")));
        }
        let k = m.trailing_zeros() as usize;
        if k > n {
            return Err(Error::MalformedRep(format!("lam({s},{m}): m exceeds 2^{n}")));
        }
        if s % 2 == 0 {
            return Err(Error::MalformedRep(format!("lam({s},{m}): s must be odd")));
        }
        let bound = if k + 1 >= n { 2 } else { 1u64 << (n - k) };
        if s >= bound {
            return Err(Error::MalformedRep(format!("lam({s},{m}): s must be below {bound}")));
        }
        Ok(())
    }
}

/// A formal integer combination of named irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRep {
    pub n: usize,
    pub terms: Vec<(Irreducible, i64)>,
}

impl RawRep {
    pub fn new(n: usize) -> Self {
        RawRep { n, terms: Vec::new() }
    }

    pub fn with(mut self, irr: Irreducible, mult: i64) -> Self {
        self.terms.push((irr, mult));
        self
    }
}

/// Canonical reduced coordinates of a raw representation.
pub fn reduce(raw: &RawRep) -> Result<VirtualRep> {
    let n = raw.n;
    let mut v = VirtualRep::zero(n);
    for &(irr, mult) in &raw.terms {
        irr.validate(n)?;
        match irr {
            Irreducible::Triv => v.d += mult,
            Irreducible::Sigma => v.s += mult,
            Irreducible::Lambda { m, .. } => {
                let k = m.trailing_zeros() as usize;
                if k + 2 <= n {
                    v.c[k] += mult;
                } else if k + 1 == n {
                    v.s += 2 * mult;
                } else {
                    v.d += 2 * mult;
                }
            }
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        let v = reduce(&RawRep::new(3).with(Irreducible::Lambda { s: 3, m: 1 }, 1)).unwrap();
        assert_eq!(v, VirtualRep::lambda(3, 0));
        for n in 1..6 {
            let half = reduce(&RawRep::new(n).with(Irreducible::Lambda { s: 1, m: 1 << (n - 1) }, 1)).unwrap();
            assert_eq!(half, VirtualRep::sigma(n).scale(2));
            let full = reduce(&RawRep::new(n).with(Irreducible::Lambda { s: 1, m: 1 << n }, 1)).unwrap();
            assert_eq!(full, VirtualRep::trivial(n, 2));
        }
    }

    #[test]
    fn malformed_lambdas() {
        for (s, m) in [(2, 1), (1, 3), (9, 1), (1, 16), (3, 4)] {
            let raw = RawRep::new(3).with(Irreducible::Lambda { s, m }, 1);
            assert!(matches!(reduce(&raw), Err(Error::MalformedRep(_))), "lam({s},{m})");
        }
    }

    #[test]
    fn restrict_examples() {
        for n in 1..6 {
            let v = &VirtualRep::trivial(n, 1) - &VirtualRep::sigma(n);
            assert!(v.restrict(n - 1).unwrap().is_zero());
            assert_eq!(v.restrict(n).unwrap(), v);
        }
        let l0 = VirtualRep::lambda(2, 0);
        assert_eq!(l0.restrict(1).unwrap(), VirtualRep::sigma(1).scale(2));
        assert_eq!(l0.restrict(0).unwrap(), VirtualRep::trivial(0, 2));
    }

    #[test]
    fn fixed_point_examples() {
        let s = VirtualRep::sigma(2);
        assert_eq!((0..=2).map(|h| s.fixed_dim(h)).collect::<Vec<_>>(), vec![1, 1, 0]);
        assert_eq!(s.fixed_sign(0), Sign::Minus);
        assert_eq!(s.fixed_sign(1), Sign::Minus);
        for n in 2..6 {
            for k in 0..n - 1 {
                let l = VirtualRep::lambda(n, k);
                for h in 0..=n {
                    assert_eq!(l.fixed_dim(h), if h <= k { 2 } else { 0 });
                    assert_eq!(l.fixed_sign(h), Sign::Plus);
                }
            }
        }
        let z = VirtualRep::zero(3);
        assert!((0..=3).all(|h| z.fixed_dim(h) == 0 && z.fixed_sign(h) == Sign::Plus));
    }

    #[test]
    fn text_form() {
        let v = VirtualRep::from_coords(3, &[2, -1, 0, -3]).unwrap();
        assert_eq!(v.to_text(), "2 - sigma - 3*l1");
        assert_eq!(parse_degree(3, &v.to_text()).unwrap(), v);
        assert_eq!(VirtualRep::zero(2).to_text(), "0");
        assert_eq!((-VirtualRep::lambda(2, 0)).to_text(), "-l0");
    }

    #[test]
    fn degree_box_enumeration() {
        let all: Vec<_> = VirtualRep::degree_box(2, 1).collect();
        assert_eq!(all.len(), 27);
        assert_eq!(all[0].coords(), vec![-1, -1, -1]);
        assert_eq!(all[26].coords(), vec![1, 1, 1]);
        assert!(all.windows(2).all(|w| w[0].coords() < w[1].coords()));
    }

    #[test]
    fn n_one_has_no_lambdas() {
        let v = VirtualRep::from_coords(1, &[1, -1]).unwrap();
        assert!(v.c().is_empty());
        assert_eq!(v.restrict(0).unwrap(), VirtualRep::trivial(0, 0));
    }
}
