//! Rational Burnside rings of the subgroups `C_{2^i}` of `C_{2^n}`.
//!
//! An element at level `i` is a rational combination of the orbit classes
//! `x[i,j] = [C_{2^i}/C_{2^j}]` for `j < i` together with the unit
//! `[C_{2^i}/C_{2^i}]`. Coefficients are stored in the fixed basis order
//! `(1, x[i,0], ..., x[i,i-1])`.
//!
//! Products follow `x[i,j] * x[i,k] = 2^(i - max(j,k)) x[i, min(j,k)]`; the
//! unit behaves like `x[i,i]` in that rule. Restriction and the primitive
//! idempotents are defined through the marks homomorphism.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{self, pow2, Rational};

/// A subgroup `C_{2^i}` of the ambient group `C_{2^n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupLevel {
    pub n: usize,
    pub i: usize,
}

impl GroupLevel {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::LevelOutOfRange("ambient exponent n must be at least 1".into()));
        }
        if i > n {
            return Err(Error::LevelOutOfRange(format!("subgroup exponent {i} exceeds n = {n}")));
        }
        Ok(GroupLevel { n, i })
    }

    pub fn top(n: usize) -> Result<Self> {
        Self::new(n, n)
    }

    /// Rank of the Burnside ring at this level.
    pub fn rank(&self) -> usize {
        self.i + 1
    }
}

impl fmt::Display for GroupLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{{2^{}}} in C_{{2^{}}}", self.i, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    level: GroupLevel,
    coeffs: Vec<Rational>,
}

// Position of the orbit `x[i,j]` (with `j == i` standing for the unit) in the
// coefficient vector.
fn slot(i: usize, j: usize) -> usize {
    if j == i {
        0
    } else {
        j + 1
    }
}

impl BurnsideElement {
    pub fn new(level: GroupLevel, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != level.rank() {
            return Err(Error::InvalidArgument(format!(
                "level {} needs {} coefficients, got {}",
                level.i,
                level.rank(),
                coeffs.len()
            )));
        }
        Ok(BurnsideElement { level, coeffs })
    }

    pub fn zero(level: GroupLevel) -> Self {
        BurnsideElement { level, coeffs: vec![Rational::zero(); level.rank()] }
    }

    pub fn one(level: GroupLevel) -> Self {
        Self::orbit(level, level.i)
    }

    /// The orbit class `[C_{2^i}/C_{2^j}]`; `j == i` gives the unit.
    pub fn orbit(level: GroupLevel, j: usize) -> Self {
        assert!(j <= level.i, "orbit index {j} above level {}", level.i);
        let mut e = Self::zero(level);
        e.coeffs[slot(level.i, j)] = Rational::one();
        e
    }

    /// `y_i = 1 - x[i,i-1]/2` for `i >= 1`, and `y_0 = 1`.
    pub fn y(level: GroupLevel) -> Self {
        let one = Self::one(level);
        if level.i == 0 {
            return one;
        }
        one - Self::orbit(level, level.i - 1).scale(&scalar::frac(1, 2))
    }

    pub fn level(&self) -> GroupLevel {
        self.level
    }

    /// Coefficients in basis order `(1, x[i,0], ..., x[i,i-1])`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x[i,j]`, with `j == i` the unit coefficient.
    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[slot(self.level.i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BurnsideElement { level: self.level, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    fn check_level(&self, other: &Self) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(format!("{} vs {}", self.level, other.level)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        Ok(BurnsideElement {
            level: self.level,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Product from the orbit multiplication rule.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        let i = self.level.i;
        let mut out = Self::zero(self.level);
        for j in 0..=i {
            let a = self.coeff(j);
            if a.is_zero() {
                continue;
            }
            for k in 0..=i {
                let b = other.coeff(k);
                if b.is_zero() {
                    continue;
                }
                let factor = pow2((i - j.max(k)) as u32);
                out.coeffs[slot(i, j.min(k))] += a * b * factor;
            }
        }
        Ok(out)
    }

    /// Fixed-point counts `|X^{C_{2^h}}|` for `h = 0..=i`, extended linearly.
    pub fn marks(&self) -> Vec<Rational> {
        let i = self.level.i;
        (0..=i)
            .map(|h| {
                (h..=i).fold(Rational::zero(), |acc, j| acc + self.coeff(j) * pow2((i - j) as u32))
            })
            .collect()
    }

    /// Inverse of [`marks`](Self::marks); the marks matrix is triangular.
    pub fn from_marks(level: GroupLevel, marks: &[Rational]) -> Result<Self> {
        let i = level.i;
        if marks.len() != i + 1 {
            return Err(Error::InvalidArgument(format!(
                "level {i} needs {} marks, got {}",
                i + 1,
                marks.len()
            )));
        }
        let mut e = Self::zero(level);
        for h in (0..=i).rev() {
            let above = ((h + 1)..=i)
                .fold(Rational::zero(), |acc, j| acc + e.coeff(j) * pow2((i - j) as u32));
            e.coeffs[slot(i, h)] = (&marks[h] - above) / pow2((i - h) as u32);
        }
        Ok(e)
    }

    /// Restriction to `C_{2^target}`: truncation of the marks vector.
    pub fn res(&self, target: usize) -> Result<Self> {
        if target > self.level.i {
            return Err(Error::LevelOutOfRange(format!(
                "cannot restrict from level {} up to level {target}",
                self.level.i
            )));
        }
        let marks = self.marks();
        Self::from_marks(GroupLevel { n: self.level.n, i: target }, &marks[..=target])
    }

    /// Transfer one level up: `x[i,j] -> x[i+1,j]` and `1 -> x[i+1,i]`.
    pub fn tr(&self) -> Result<Self> {
        let GroupLevel { n, i } = self.level;
        if i >= n {
            return Err(Error::LevelOutOfRange(format!("no transfer above the top level {n}")));
        }
        let up = GroupLevel { n, i: i + 1 };
        let mut out = Self::zero(up);
        for j in 0..=i {
            out.coeffs[slot(i + 1, j)] += self.coeff(j);
        }
        Ok(out)
    }

    /// Iterated transfer up to level `target`.
    pub fn tr_to(&self, target: usize) -> Result<Self> {
        let mut e = self.clone();
        while e.level.i < target {
            e = e.tr()?;
        }
        if e.level.i != target {
            return Err(Error::LevelOutOfRange(format!(
                "cannot transfer from level {} down to {target}",
                self.level.i
            )));
        }
        Ok(e)
    }

    /// Canonical text form, e.g. `1 + -1/2*x[2,1]`.
    pub fn to_text(&self) -> String {
        let i = self.level.i;
        let mut terms = Vec::new();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = if idx == 0 { "1".to_string() } else { format!("x[{},{}]", i, idx - 1) };
            terms.push(format!("{}*{}", scalar::format(c), name));
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn to_record(&self) -> BurnsideRecord {
        BurnsideRecord { level: self.level, coeffs: self.coeffs.iter().map(scalar::format).collect() }
    }

    pub fn from_record(rec: &BurnsideRecord) -> Result<Self> {
        GroupLevel::new(rec.level.n, rec.level.i)?;
        let coeffs = rec
            .coeffs
            .iter()
            .map(|s| {
                scalar::parse(s).ok_or_else(|| Error::InvalidArgument(format!("bad rational `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rec.level, coeffs)
    }
}

/// Machine-readable form `{level, coeffs[]}` with rationals as `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurnsideRecord {
    pub level: GroupLevel,
    pub coeffs: Vec<String>,
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for BurnsideElement {
    type Output = BurnsideElement;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("adding Burnside elements of different levels")
    }
}

impl Sub for BurnsideElement {
    type Output = BurnsideElement;
    fn sub(self, rhs: Self) -> Self {
        self.try_add(&-rhs).expect("subtracting Burnside elements of different levels")
    }
}

impl Neg for BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> Self {
        BurnsideElement { level: self.level, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

/// The `i + 1` primitive idempotents of `A_Q(C_{2^i})`, indexed by `h`.
///
/// The `h`-th idempotent has marks vector `δ_h` and equals
/// `Tr_h^i(y_h) / 2^(i-h)`; the last one is `y_i`.
pub fn idempotents(level: GroupLevel) -> Vec<BurnsideElement> {
    (0..=level.i)
        .map(|h| {
            let marks: Vec<Rational> =
                (0..=level.i).map(|k| if k == h { Rational::one() } else { Rational::zero() }).collect();
            BurnsideElement::from_marks(level, &marks).expect("marks vector has the right length")
        })
        .collect()
}
