//! Semisimple rational `C_{2^n}`-Mackey functors.
//!
//! A rational Mackey functor is determined by the sequence of Weyl-group
//! modules `M(G/C_{2^i}) / Im(Tr)`. Restricted to modules built from the
//! trivial and sign characters, this is a multiset of simple summands
//! `M_i^+` (`0 <= i <= n`) and `M_i^-` (`0 <= i < n`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn from_i64(v: i64) -> Sign {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// One simple summand `M_i^{sign}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleSummand {
    pub i: usize,
    pub sign: Sign,
}

impl SimpleSummand {
    pub fn new(n: usize, i: usize, sign: Sign) -> Result<Self> {
        if i > n {
            return Err(Error::LevelOutOfRange(format!("M_{i} needs i <= n = {n}")));
        }
        if sign == Sign::Minus && i == n {
            return Err(Error::LevelOutOfRange(format!("M_{n}^- does not exist (trivial Weyl group)")));
        }
        Ok(SimpleSummand { i, sign })
    }

    /// Dimension of the value at `G/C_{2^h}`.
    pub fn level_dim(&self, n: usize, h: usize) -> u64 {
        match self.sign {
            Sign::Plus => (h >= self.i) as u64,
            Sign::Minus => (self.i <= h && h < n) as u64,
        }
    }
}

impl fmt::Display for SimpleSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "M{}", self.i),
            Sign::Minus => write!(f, "M{}-", self.i),
        }
    }
}

/// Eigenspace dimensions of the Weyl generator on `M(G/C_{2^h}) / Im(Tr)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelEigen {
    pub plus: u64,
    pub minus: u64,
    pub other: u64,
}

impl LevelEigen {
    pub fn new(plus: u64, minus: u64, other: u64) -> Self {
        LevelEigen { plus, minus, other }
    }
}

/// The isomorphism class of a rational Mackey functor: a multiset of simple
/// summands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MackeyClass {
    n: usize,
    entries: BTreeMap<SimpleSummand, u64>,
}

impl MackeyClass {
    pub fn zero(n: usize) -> Self {
        MackeyClass { n, entries: BTreeMap::new() }
    }

    pub fn simple(n: usize, i: usize, sign: Sign) -> Result<Self> {
        let s = SimpleSummand::new(n, i, sign)?;
        let mut c = Self::zero(n);
        c.entries.insert(s, 1);
        Ok(c)
    }

    /// The class of the Burnside functor, `M_0 + ... + M_n`; the unit for
    /// the box product.
    pub fn burnside(n: usize) -> Self {
        Self::from_summands(n, (0..=n).map(|i| (SimpleSummand { i, sign: Sign::Plus }, 1)))
    }

    pub fn from_summands(n: usize, it: impl IntoIterator<Item = (SimpleSummand, u64)>) -> Self {
        let mut c = Self::zero(n);
        for (s, m) in it {
            c.add_summand(s, m);
        }
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_summand(&mut self, s: SimpleSummand, mult: u64) {
        assert!(
            s.i <= self.n && !(s.sign == Sign::Minus && s.i == self.n),
            "summand {s} does not exist for n = {}",
            self.n
        );
        if mult > 0 {
            *self.entries.entry(s).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, i: usize, sign: Sign) -> u64 {
        self.entries.get(&SimpleSummand { i, sign }).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (SimpleSummand, u64)> + '_ {
        self.entries.iter().map(|(s, m)| (*s, *m))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of simple summands, counted with multiplicity.
    pub fn rank(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "adding Mackey classes over different groups");
        let mut c = self.clone();
        for (s, m) in other.entries() {
            c.add_summand(s, m);
        }
        c
    }

    pub fn scaled(&self, k: u64) -> Self {
        Self::from_summands(self.n, self.entries().map(|(s, m)| (s, m * k)))
    }

    /// Multiset difference; `None` when `other` is not contained in `self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut c = self.clone();
        for (s, m) in other.entries() {
            let have = c.entries.get_mut(&s)?;
            *have = have.checked_sub(m)?;
            if *have == 0 {
                c.entries.remove(&s);
            }
        }
        Some(c)
    }

    /// Box product: same-index summands multiply signs, different indices
    /// annihilate.
    pub fn box_product(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "box product of Mackey classes over different groups");
        let mut c = Self::zero(self.n);
        for (a, ma) in self.entries() {
            for (b, mb) in other.entries() {
                if a.i == b.i {
                    c.add_summand(SimpleSummand { i: a.i, sign: a.sign * b.sign }, ma * mb);
                }
            }
        }
        c
    }

    /// Every simple summand is self-dual.
    pub fn dual(&self) -> Self {
        self.clone()
    }

    /// Dimension of the value at `G/C_{2^h}`.
    pub fn level_dim(&self, h: usize) -> u64 {
        self.entries().map(|(s, m)| m * s.level_dim(self.n, h)).sum()
    }

    pub fn level_dims(&self) -> Vec<u64> {
        (0..=self.n).map(|h| self.level_dim(h)).collect()
    }

    /// Weyl eigendata of this class, one entry per level `h = 0..=n`.
    pub fn eigendata(&self) -> Vec<LevelEigen> {
        (0..=self.n)
            .map(|h| LevelEigen {
                plus: self.multiplicity(h, Sign::Plus),
                minus: self.multiplicity(h, Sign::Minus),
                other: 0,
            })
            .collect()
    }

    /// Reads off the class from per-level Weyl eigendata.
    ///
    /// Any dimension outside the `±1` eigenspaces is rejected: the class
    /// type only carries the trivial and sign characters.
    pub fn classify(n: usize, eigendata: &[LevelEigen]) -> Result<Self> {
        if eigendata.len() != n + 1 {
            return Err(Error::InvalidEigendata(format!(
                "expected {} levels of eigendata, got {}",
                n + 1,
                eigendata.len()
            )));
        }
        let mut c = Self::zero(n);
        for (h, e) in eigendata.iter().enumerate() {
            if e.other != 0 {
                return Err(Error::NonSignIsotypic { level: h, other: e.other });
            }
            if h == n && e.minus != 0 {
                return Err(Error::InvalidEigendata(format!(
                    "the top level has trivial Weyl group but a -1 eigenspace of dimension {}",
                    e.minus
                )));
            }
            c.add_summand(SimpleSummand { i: h, sign: Sign::Plus }, e.plus);
            if e.minus > 0 {
                c.add_summand(SimpleSummand { i: h, sign: Sign::Minus }, e.minus);
            }
        }
        Ok(c)
    }

    /// Sorted text form such as `M0- + M1-` or `M0 + 2*M2`; zero prints `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.entries()
            .map(|(s, m)| if m == 1 { s.to_string() } else { format!("{m}*{s}") })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses the text form produced by [`to_text`](Self::to_text).
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut c = Self::zero(n);
        if text == "0" {
            return Ok(c);
        }
        for term in text.split('+') {
            let term = term.trim();
            let (mult, body) = match term.split_once('*') {
                Some((m, b)) => (
                    m.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::InvalidArgument(format!("bad multiplicity in `{term}`")))?,
                    b.trim(),
                ),
                None => (1, term),
            };
            let body = body
                .strip_prefix('M')
                .ok_or_else(|| Error::InvalidArgument(format!("bad summand `{term}`")))?;
            let (digits, sign) = match body.strip_suffix('-') {
                Some(d) => (d, Sign::Minus),
                None => (body, Sign::Plus),
            };
            let i = digits
                .parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("bad summand index in `{term}`")))?;
            c.add_summand(SimpleSummand::new(n, i, sign)?, mult);
        }
        Ok(c)
    }

    pub fn to_record(&self) -> MackeyRecord {
        MackeyRecord {
            n: self.n,
            entries: self.entries().map(|(s, mult)| MackeyEntry { i: s.i, sign: s.sign, mult }).collect(),
        }
    }

    pub fn from_record(rec: &MackeyRecord) -> Result<Self> {
        let mut c = Self::zero(rec.n);
        for e in &rec.entries {
            c.add_summand(SimpleSummand::new(rec.n, e.i, e.sign)?, e.mult);
        }
        Ok(c)
    }
}

impl fmt::Display for MackeyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MackeyEntry {
    pub i: usize,
    pub sign: Sign,
    pub mult: u64,
}

/// Machine-readable form `{n, entries: [{i, sign, mult}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MackeyRecord {
    pub n: usize,
    pub entries: Vec<MackeyEntry>,
}
