//! Truncated power series and dense polynomials over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{self, Rational};

/// A power series in `t` truncated after degree `max_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(max_degree: usize) -> Self {
        PowerSeries { coeffs: vec![Rational::zero(); max_degree + 1] }
    }

    pub fn one(max_degree: usize) -> Self {
        Self::constant(Rational::one(), max_degree)
    }

    pub fn constant(c: Rational, max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        s.coeffs[0] = c;
        s
    }

    /// `1 / (1 - t^step)`.
    pub fn geometric(step: usize, max_degree: usize) -> Self {
        assert!(step > 0, "geometric series needs a positive step");
        let mut s = Self::zero(max_degree);
        for k in (0..=max_degree).step_by(step) {
            s.coeffs[k] = Rational::one();
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>, max_degree: usize) -> Self {
        coeffs.resize(max_degree + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], max_degree: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| scalar::int(c)).collect(), max_degree)
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.max_degree(), other.max_degree(), "series truncated at different degrees");
        PowerSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.max_degree(), other.max_degree(), "series truncated at different degrees");
        let d = self.max_degree();
        let mut out = Self::zero(d);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// `P(t^r)`.
    pub fn substitute_power(&self, r: usize) -> Self {
        assert!(r > 0);
        let d = self.max_degree();
        let mut out = Self::zero(d);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * r > d {
                break;
            }
            out.coeffs[k * r] = c.clone();
        }
        out
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a PowerSeries>, max_degree: usize) -> Self {
        items.into_iter().fold(Self::zero(max_degree), |acc, s| acc.add(s))
    }

    pub fn product<'a>(items: impl IntoIterator<Item = &'a PowerSeries>, max_degree: usize) -> Self {
        items.into_iter().fold(Self::one(max_degree), |acc, s| acc.mul(s))
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => scalar::format(c),
                1 => format!("{}*t", scalar::format(c)),
                _ => format!("{}*t^{}", scalar::format(c), k),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", terms.join(" + "))?;
        }
        write!(f, " + O(t^{})", self.max_degree() + 1)
    }
}

/// A dense univariate polynomial; `coeffs[k]` is the coefficient of `x^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `x - a`.
    pub fn linear_root(a: &Rational) -> Self {
        Self::new(vec![-a.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    /// `∏ (x - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots.into_iter().fold(Self::constant(Rational::one()), |acc, r| acc.mul(&Self::linear_root(r)))
    }

    /// Quotient and remainder of division by `divisor`.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len().saturating_sub(dd);
        let mut quot = vec![Rational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// The unique polynomial of degree `< points.len()` through the points.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut out = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::constant(Rational::one());
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&Self::linear_root(xj));
                    denom *= xi - xj;
                }
            }
            out = out.add(&basis.scale(&(yi / denom)));
        }
        out
    }

    /// Text form in the variable `var`, highest degree first.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let term = match (k, c.is_one(), *c == -Rational::one()) {
                (0, _, _) => scalar::format(c),
                (_, true, _) => mono,
                (_, _, true) => format!("-{mono}"),
                _ => format!("{}*{mono}", scalar::format(c)),
            };
            terms.push(term);
        }
        terms.join(" + ").replace("+ -", "- ")
    }
}
