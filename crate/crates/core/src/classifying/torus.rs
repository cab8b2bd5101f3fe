//! Symmetric-power invariants and the maximal-torus comparisons.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::fixed_points::{fixed_point_data, Component, Space, WeylDescriptor};
use crate::error::{Error, Result};
use crate::mackey::Sign;
use crate::scalar;
use crate::series::PowerSeries;

/// Poincaré series of `(V^{⊗m})^{Σ_m}` where `V` has series
/// `Σ components`. Everything is assumed concentrated in even degrees,
/// so `Σ_m` acts by plain permutation and the answer is the `s^m`
/// coefficient of `exp(Σ_r s^r P(t^r)/r)`, via Newton's identity
/// `m·h_m = Σ_{r=1}^m P(t^r) h_{m-r}`.
pub fn sym_invariants_series(components: &[PowerSeries], m: usize, max_degree: usize) -> PowerSeries {
    let p = PowerSeries::sum(components, max_degree);
    let powers: Vec<PowerSeries> = (1..=m).map(|r| p.substitute_power(r)).collect();
    let mut h = vec![PowerSeries::one(max_degree)];
    for k in 1..=m {
        let mut acc = PowerSeries::zero(max_degree);
        for r in 1..=k {
            acc = acc.add(&powers[r - 1].mul(&h[k - r]));
        }
        h.push(acc.scale(&scalar::frac(1, k as i64)));
    }
    h.swap_remove(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelComparison {
    pub level: usize,
    /// Composition sum from the fixed points of `B_G U(m)`.
    pub lhs: Vec<String>,
    /// Symmetric invariants of the torus fixed points.
    pub rhs: Vec<String>,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusUReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub levels: Vec<LevelComparison>,
}

impl TorusUReport {
    pub fn passes(&self) -> bool {
        self.levels.iter().all(|l| l.equal)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("U({}) maximal torus check, n={}, degrees 0..={}\n", self.m, self.n, self.max_degree);
        for l in &self.levels {
            out.push_str(&format!(
                "  level {}: fixed points [{}] torus invariants [{}] {}\n",
                l.level,
                l.lhs.join(" "),
                l.rhs.join(" "),
                if l.equal { "equal" } else { "DIFFER" }
            ));
        }
        out.push_str(&format!("verdict={}\n", if self.passes() { "HOLDS" } else { "FAILS" }));
        out
    }
}

fn show(s: &PowerSeries) -> Vec<String> {
    s.coeffs().iter().map(scalar::format).collect()
}

/// Compares `H^*(B_G U(m)^{C_{2^h}})` with `(H^*(B_G U(1)^{C_{2^h}})^{⊗m})^{Σ_m}`
/// at every level.
pub fn torus_check_u(n: usize, m: usize, max_degree: usize) -> Result<TorusUReport> {
    let bu = fixed_point_data(Space::BU(m), n, max_degree)?;
    let bs1 = fixed_point_data(Space::BS1, n, max_degree)?;
    let levels = (0..=n)
        .map(|h| {
            let lhs = bu.level(h).total_series(max_degree);
            let comps: Vec<PowerSeries> = bs1.level(h).components.iter().map(|c| c.series.clone()).collect();
            let rhs = sym_invariants_series(&comps, m, max_degree);
            LevelComparison { level: h, equal: lhs == rhs, lhs: show(&lhs), rhs: show(&rhs) }
        })
        .collect();
    Ok(TorusUReport { n, m, max_degree, levels })
}

/// How the Weyl group of `SU(2)` acts on the torus fixed points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeylModel {
    /// Trivially on `H^0`.
    Paper,
    /// By permuting components, `V_i ↦ V_{-i}`.
    Permutation,
}

impl FromStr for WeylModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(WeylModel::Paper),
            "permutation" => Ok(WeylModel::Permutation),
            _ => Err(Error::InvalidArgument(format!("unknown Weyl model '{s}' (expected paper|permutation)"))),
        }
    }
}

impl fmt::Display for WeylModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeylModel::Paper => "paper",
            WeylModel::Permutation => "permutation",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Su2Report {
    pub n: usize,
    pub weyl: WeylModel,
    /// `dim H^0(B_G SU(2)^G)`.
    pub lhs: u64,
    /// `dim H^0(B_G U(1)^G)^{C_2}`.
    pub rhs: u64,
    pub holds: bool,
}

impl Su2Report {
    pub fn to_text(&self) -> String {
        format!("lhs={} rhs={} verdict={}", self.lhs, self.rhs, if self.holds { "HOLDS" } else { "FAILS" })
    }
}

fn negation_action(components: &[Component]) -> WeylDescriptor {
    let k = components.len();
    WeylDescriptor { order: 2, permutation: (0..k).map(|i| (k - i) % k).collect(), characters: vec![Sign::Plus; k] }
}

/// Degree-zero comparison for `SU(2)` and its maximal torus at the top
/// level, both sides counted from the fixed-point components.
pub fn torus_check_su2(n: usize, weyl: WeylModel) -> Result<Su2Report> {
    if n == 0 {
        return Err(Error::InvalidArgument("torus-check needs n >= 1".into()));
    }
    let su2 = fixed_point_data(Space::BSU2, n, 0)?;
    let lhs = su2.level(n).components.iter().map(|c| super::fixed_points::coefficient(&c.series, 0)).sum();
    let torus = fixed_point_data(Space::BS1, n, 0)?;
    let comps = &torus.level(n).components;
    let action = match weyl {
        WeylModel::Paper => WeylDescriptor::trivial(2, comps.len()),
        WeylModel::Permutation => negation_action(comps),
    };
    action.validate(comps)?;
    let rhs = action.invariant_dim(comps, 0);
    Ok(Su2Report { n, weyl, lhs, rhs, holds: lhs == rhs })
}
