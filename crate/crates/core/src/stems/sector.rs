//! The point ring `H^G_★` as a sum of sectors.
//!
//! Sector `i` is the `M_i`-isotypic part. Its generators are invertible:
//!
//! * for `i < n`: `u_sigma`, `u_{l_k}` for `k >= i`, and `a_{l_k}` for `k < i`;
//! * for `i = n`: `a_sigma` and every `a_{l_k}`.
//!
//! Each sector therefore has exactly `n` generators with linearly
//! independent degrees, so its graded pieces have rank at most one and a
//! monomial is determined by its sector and degree.
//!
//! An element at level `h` is a rational combination of the canonical
//! generators `Tr_i^h(y_i · m)` for sectors `i <= h`. Orientation scalars
//! are normalized so that `y_i · Res(u) = y_i · m` for every generator `u`;
//! with that choice restriction multiplies by `2` per level, transfer keeps
//! the generator chain, and products at level `h` pick up `2^(h-i)`.
//! Sign summands `M_i^-` vanish at the top level.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::burnside::{BurnsideElement, GroupLevel};
use crate::error::{Error, Result};
use crate::mackey::{MackeyClass, Sign, SimpleSummand};
use crate::rolattice::VirtualRep;
use crate::scalar::{self, pow2, Rational};

/// Whether sector `i` has a nonzero piece in degree `v`, and its sign.
pub fn sector_sign(v: &VirtualRep, i: usize) -> Option<Sign> {
    let n = v.n();
    assert!(i <= n, "sector {i} out of range for n = {n}");
    if i == n {
        return (v.d() == 0).then_some(Sign::Plus);
    }
    let lam: i64 = v.c()[i.min(v.c().len())..].iter().sum();
    (v.d() == -2 * lam - v.s()).then(|| Sign::from_parity(v.s().rem_euclid(2) == 1))
}

/// Stems read off sector membership.
pub fn stem_at_sector(v: &VirtualRep) -> MackeyClass {
    let n = v.n();
    MackeyClass::from_summands(
        n,
        (0..=n).filter_map(|i| sector_sign(v, i).map(|sign| (SimpleSummand { i, sign }, 1))),
    )
}

/// A Laurent monomial in the generators of one sector.
///
/// `exps[p]` for `p <= n-2` is the exponent of `u_{l_p}` (when `p >= i`) or
/// `a_{l_p}` (when `p < i`); `exps[n-1]` is the exponent of `u_sigma`
/// (`i < n`) or `a_sigma` (`i = n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SectorMonomial {
    n: usize,
    sector: usize,
    exps: Vec<i64>,
}

impl SectorMonomial {
    pub fn new(n: usize, sector: usize, exps: Vec<i64>) -> Result<Self> {
        if sector > n {
            return Err(Error::LevelOutOfRange(format!("sector {sector} > n = {n}")));
        }
        if exps.len() != n {
            return Err(Error::InvalidArgument(format!("sector monomials need {n} exponents")));
        }
        Ok(SectorMonomial { n, sector, exps })
    }

    /// The unique monomial of sector `i` in degree `v`, if any.
    pub fn from_degree(v: &VirtualRep, sector: usize) -> Option<Self> {
        let n = v.n();
        sector_sign(v, sector)?;
        let mut exps: Vec<i64> = v.c().iter().map(|&c| -c).collect();
        if n > 0 {
            exps.push(-v.s());
        }
        let m = SectorMonomial { n, sector, exps };
        debug_assert_eq!(m.degree(), *v);
        Some(m)
    }

    pub fn sector(&self) -> usize {
        self.sector
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    pub fn sign(&self) -> Sign {
        if self.sector == self.n {
            Sign::Plus
        } else {
            Sign::from_parity(self.exps[self.n - 1].rem_euclid(2) == 1)
        }
    }

    fn is_orientation(&self, p: usize) -> bool {
        self.sector < self.n && (p + 1 == self.n || p >= self.sector)
    }

    fn generator_name(&self, p: usize) -> String {
        let kind = if self.is_orientation(p) { "u" } else { "a" };
        if p + 1 == self.n {
            format!("{kind}_sigma")
        } else {
            format!("{kind}_l{p}")
        }
    }

    /// Degree from `|u_sigma| = 1 - sigma`, `|u_{l_k}| = 2 - l_k`,
    /// `|a_{l_k}| = -l_k`, `|a_sigma| = -sigma`.
    pub fn degree(&self) -> VirtualRep {
        let n = self.n;
        let mut v = VirtualRep::zero(n);
        for (p, &e) in self.exps.iter().enumerate() {
            let gen = if p + 1 == n {
                let base = -VirtualRep::sigma(n);
                if self.is_orientation(p) {
                    &base + &VirtualRep::trivial(n, 1)
                } else {
                    base
                }
            } else {
                let base = -VirtualRep::lambda(n, p);
                if self.is_orientation(p) {
                    &base + &VirtualRep::trivial(n, 2)
                } else {
                    base
                }
            };
            v = &v + &gen.scale(e);
        }
        v
    }

    pub fn mul(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.n, other.n);
        (self.sector == other.sector).then(|| SectorMonomial {
            n: self.n,
            sector: self.sector,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut parts = vec![format!("y{}", self.sector)];
        for (p, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.generator_name(p)),
                _ => parts.push(format!("{}^{}", self.generator_name(p), e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for SectorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A homogeneous element of `H^G_★(G/C_{2^h})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorElement {
    level: usize,
    degree: VirtualRep,
    /// Coefficient of `Tr_i^h(y_i · m_i)` keyed by sector `i`.
    terms: BTreeMap<usize, Rational>,
}

impl SectorElement {
    pub fn zero(level: usize, degree: VirtualRep) -> Result<Self> {
        if level > degree.n() {
            return Err(Error::LevelOutOfRange(format!("level {level} > n = {}", degree.n())));
        }
        Ok(SectorElement { level, degree, terms: BTreeMap::new() })
    }

    fn exists(&self, sector: usize) -> bool {
        let n = self.degree.n();
        match sector_sign(&self.degree, sector) {
            None => false,
            Some(Sign::Minus) => self.level < n && sector <= self.level,
            Some(Sign::Plus) => sector <= self.level,
        }
    }

    fn normalized(mut self) -> Self {
        let keep: Vec<usize> = self.terms.keys().copied().filter(|&i| self.exists(i)).collect();
        self.terms.retain(|i, c| keep.contains(i) && !c.is_zero());
        self
    }

    /// The canonical generator `Tr_i^h(y_i · m)` for the monomial of
    /// sector `i` in degree `degree`; zero when that piece vanishes at
    /// level `h`.
    pub fn basis(level: usize, degree: VirtualRep, sector: usize) -> Result<Self> {
        let mut e = Self::zero(level, degree)?;
        if sector > level {
            return Err(Error::LevelOutOfRange(format!("sector {sector} does not reach level {level}")));
        }
        e.terms.insert(sector, Rational::one());
        Ok(e.normalized())
    }

    /// The class `x` in degree `degree` at level `h` with `y_i · Res_i(x)`
    /// equal to the sector-`i` monomial for every sector it meets.
    pub fn global(level: usize, degree: VirtualRep) -> Result<Self> {
        let mut e = Self::zero(level, degree)?;
        for i in 0..=level {
            e.terms.insert(i, Rational::one() / pow2((level - i) as u32));
        }
        Ok(e.normalized())
    }

    pub fn one(n: usize, level: usize) -> Result<Self> {
        Self::global(level, VirtualRep::zero(n))
    }

    /// `y_i` at level `i`.
    pub fn y(n: usize, i: usize) -> Result<Self> {
        Self::basis(i, VirtualRep::zero(n), i)
    }

    /// `u_sigma`, living at level `n - 1`.
    pub fn u_sigma(n: usize) -> Result<Self> {
        Self::global(n - 1, &VirtualRep::trivial(n, 1) - &VirtualRep::sigma(n))
    }

    /// `u_{2σ}` at the top level; restricts to `u_sigma²`.
    pub fn u_2sigma(n: usize) -> Result<Self> {
        Self::global(n, (&VirtualRep::trivial(n, 1) - &VirtualRep::sigma(n)).scale(2))
    }

    pub fn a_sigma(n: usize) -> Result<Self> {
        Self::global(n, -VirtualRep::sigma(n))
    }

    pub fn u_lambda(n: usize, k: usize) -> Result<Self> {
        Self::global(n, &VirtualRep::trivial(n, 2) - &VirtualRep::lambda(n, k))
    }

    pub fn a_lambda(n: usize, k: usize) -> Result<Self> {
        Self::global(n, -VirtualRep::lambda(n, k))
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn degree(&self) -> &VirtualRep {
        &self.degree
    }

    pub fn n(&self) -> usize {
        self.degree.n()
    }

    pub fn coeff(&self, sector: usize) -> Rational {
        self.terms.get(&sector).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(monomial, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (SectorMonomial, &Rational)> + '_ {
        self.terms.iter().map(|(&i, c)| {
            (SectorMonomial::from_degree(&self.degree, i).expect("stored sectors are nonzero"), c)
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut e = self.clone();
        for v in e.terms.values_mut() {
            *v *= c;
        }
        e.normalized()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(format!("levels {} and {}", self.level, other.level)));
        }
        if self.degree != other.degree {
            return Err(Error::Inhomogeneous(format!(
                "cannot add degree {} to degree {}",
                self.degree, other.degree
            )));
        }
        let mut e = self.clone();
        for (&i, c) in &other.terms {
            *e.terms.entry(i).or_insert_with(Rational::zero) += c;
        }
        Ok(e.normalized())
    }

    /// Sectorwise product; different sectors annihilate.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::LevelMismatch("elements over different groups".into()));
        }
        if self.level != other.level {
            return Err(Error::LevelMismatch(format!("levels {} and {}", self.level, other.level)));
        }
        let mut e = Self::zero(self.level, &self.degree + &other.degree)?;
        for (&i, a) in &self.terms {
            if let Some(b) = other.terms.get(&i) {
                e.terms.insert(i, a * b * pow2((self.level - i) as u32));
            }
        }
        Ok(e.normalized())
    }

    /// Restriction to level `target`.
    pub fn res(&self, target: usize) -> Result<Self> {
        if target > self.level {
            return Err(Error::LevelOutOfRange(format!("cannot restrict from {} to {target}", self.level)));
        }
        let mut e = Self::zero(target, self.degree.clone())?;
        for (&i, c) in &self.terms {
            if i <= target {
                e.terms.insert(i, c * pow2((self.level - target) as u32));
            }
        }
        Ok(e.normalized())
    }

    /// Transfer one level up. Sign summands transfer to zero at the top.
    pub fn tr(&self) -> Result<Self> {
        if self.level >= self.n() {
            return Err(Error::LevelOutOfRange("no transfer above the top level".into()));
        }
        let mut e = Self::zero(self.level + 1, self.degree.clone())?;
        e.terms = self.terms.clone();
        Ok(e.normalized())
    }

    /// The Burnside element of a degree-zero class, via
    /// `Tr_i^h(y_i) ∈ A_Q(C_{2^h})`.
    pub fn to_burnside(&self) -> Result<BurnsideElement> {
        if !self.degree.is_zero() {
            return Err(Error::InvalidArgument(format!("degree {} is not zero", self.degree)));
        }
        let n = self.n();
        let mut out = BurnsideElement::zero(GroupLevel::new(n, self.level)?);
        for (&i, c) in &self.terms {
            let y = BurnsideElement::y(GroupLevel::new(n, i)?);
            out = out.try_add(&y.tr_to(self.level)?.scale(c))?;
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms()
            .map(|(m, c)| {
                let i = m.sector();
                let body =
                    if i == self.level { m.to_text() } else { format!("Tr[{}->{}]({})", i, self.level, m) };
                if c.is_one() {
                    body
                } else {
                    format!("{}*{}", scalar::format(c), body)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for SectorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
