//! Fixed-point data of the equivariant classifying spaces.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mackey::{LevelEigen, Sign};
use crate::scalar::{self, Rational};
use crate::series::PowerSeries;

/// The spaces with built-in fixed-point descriptions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    BS1,
    BSigma2,
    BU(usize),
    BSU2,
    /// `B_G U(1)^m`.
    Torus(usize),
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::BS1 => f.write_str("BS1"),
            Space::BSigma2 => f.write_str("BSigma2"),
            Space::BU(m) => write!(f, "BU({m})"),
            Space::BSU2 => f.write_str("BSU2"),
            Space::Torus(m) => write!(f, "Torus({m})"),
        }
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let arg = |prefix: &str| -> Option<usize> {
            t.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?.parse().ok()
        };
        match t.as_str() {
            "BS1" => return Ok(Space::BS1),
            "BSigma2" => return Ok(Space::BSigma2),
            "BSU2" => return Ok(Space::BSU2),
            _ => {}
        }
        if let Some(m) = arg("BU").filter(|&m| m >= 1) {
            return Ok(Space::BU(m));
        }
        if let Some(m) = arg("Torus").filter(|&m| m >= 1) {
            return Ok(Space::Torus(m));
        }
        Err(Error::UnknownSpace(s.to_string()))
    }
}

/// One path component of a fixed-point space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub label: String,
    pub series: PowerSeries,
}

/// Action of a cyclic group of order `order` on the components: the
/// generator sends component `c` to `permutation[c]`, multiplying
/// cohomology by `characters[c]` in every degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylDescriptor {
    pub order: u64,
    pub permutation: Vec<usize>,
    pub characters: Vec<Sign>,
}

impl WeylDescriptor {
    pub fn trivial(order: u64, components: usize) -> Self {
        WeylDescriptor { order, permutation: (0..components).collect(), characters: vec![Sign::Plus; components] }
    }

    /// Cycles of the permutation, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.permutation.len()];
        let mut out = Vec::new();
        for start in 0..self.permutation.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                cyc.push(c);
                c = self.permutation[c];
            }
            out.push(cyc);
        }
        out
    }

    pub fn validate(&self, components: &[Component]) -> Result<()> {
        let k = components.len();
        if self.order == 0 {
            return Err(Error::InvalidWeylAction("group order must be positive".into()));
        }
        if self.permutation.len() != k || self.characters.len() != k {
            return Err(Error::InvalidWeylAction(format!(
                "descriptor covers {} components, diagram has {k}",
                self.permutation.len()
            )));
        }
        let mut hit = vec![false; k];
        for &p in &self.permutation {
            if p >= k || hit[p] {
                return Err(Error::InvalidWeylAction("component map is not a permutation".into()));
            }
            hit[p] = true;
        }
        for cyc in self.cycles() {
            let len = cyc.len() as u64;
            if !self.order.is_multiple_of(len) {
                return Err(Error::InvalidWeylAction(format!(
                    "cycle of length {len} in a group of order {}",
                    self.order
                )));
            }
            let eps = self.cycle_sign(&cyc);
            if eps == Sign::Minus && (self.order / len) % 2 == 1 {
                return Err(Error::InvalidWeylAction(format!(
                    "generator^{} acts by -1 on component {}",
                    self.order, cyc[0]
                )));
            }
            if cyc.iter().any(|&c| components[c].series != components[cyc[0]].series) {
                return Err(Error::InvalidWeylAction("permuted components have different cohomology".into()));
            }
        }
        Ok(())
    }

    fn cycle_sign(&self, cyc: &[usize]) -> Sign {
        cyc.iter().fold(Sign::Plus, |acc, &c| acc * self.characters[c])
    }

    /// Trivial, sign and other isotypic dimensions of the cohomology in
    /// `degree`. A cycle of length `L` with monodromy `ε` spans the
    /// eigenvalues `λ` with `λ^L = ε`, one dimension each.
    pub fn eigendata(&self, components: &[Component], degree: usize) -> LevelEigen {
        let mut e = LevelEigen::default();
        for cyc in self.cycles() {
            let dim = coefficient(&components[cyc[0]].series, degree);
            if dim == 0 {
                continue;
            }
            let len = cyc.len() as u64;
            let eps = self.cycle_sign(&cyc);
            let plus = u64::from(eps == Sign::Plus);
            let minus = u64::from(if len.is_multiple_of(2) { eps == Sign::Plus } else { eps == Sign::Minus });
            e.plus += dim * plus;
            e.minus += dim * minus;
            e.other += dim * (len - plus - minus);
        }
        e
    }

    /// Dimension of the invariants in `degree`.
    pub fn invariant_dim(&self, components: &[Component], degree: usize) -> u64 {
        self.eigendata(components, degree).plus
    }
}

pub(crate) fn coefficient(s: &PowerSeries, degree: usize) -> u64 {
    let c = s.coeff(degree);
    scalar::to_i64(&c).and_then(|v| u64::try_from(v).ok()).expect("Poincaré coefficients are natural numbers")
}

/// The `C_{2^h}`-fixed points, with the action of `C_{2^n}/C_{2^h}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelData {
    pub level: usize,
    pub components: Vec<Component>,
    pub weyl: WeylDescriptor,
}

impl LevelData {
    pub fn total_series(&self, max_degree: usize) -> PowerSeries {
        PowerSeries::sum(self.components.iter().map(|c| &c.series), max_degree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointDiagram {
    pub space: Space,
    pub n: usize,
    pub max_degree: usize,
    pub levels: Vec<LevelData>,
}

impl FixedPointDiagram {
    pub fn new(space: Space, n: usize, max_degree: usize, levels: Vec<LevelData>) -> Result<Self> {
        if levels.len() != n + 1 {
            return Err(Error::InvalidArgument(format!("expected {} levels, got {}", n + 1, levels.len())));
        }
        for (h, l) in levels.iter().enumerate() {
            if l.level != h {
                return Err(Error::InvalidArgument(format!("level {} stored at position {h}", l.level)));
            }
            if l.weyl.order != 1u64 << (n - h) {
                return Err(Error::InvalidWeylAction(format!(
                    "Weyl group at level {h} has order {}, expected {}",
                    l.weyl.order,
                    1u64 << (n - h)
                )));
            }
            for c in &l.components {
                if c.series.max_degree() != max_degree {
                    return Err(Error::InvalidArgument(format!("component {} has the wrong truncation", c.label)));
                }
                if c.series.coeffs().iter().any(|q| !q.is_integer() || *q < Rational::zero()) {
                    return Err(Error::InvalidArgument(format!(
                        "component {} has a non-natural Poincaré coefficient",
                        c.label
                    )));
                }
            }
            l.weyl.validate(&l.components)?;
        }
        Ok(FixedPointDiagram { space, n, max_degree, levels })
    }

    pub fn level(&self, h: usize) -> &LevelData {
        &self.levels[h]
    }
}

/// All `(k_1, ..., k_parts)` of naturals summing to `total`, in
/// lexicographically decreasing order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=rest).rev() {
            prefix.push(k);
            go(rest - k, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// `H^*(BU(k))`: `∏_{r=1}^{k} 1/(1 - t^{2r})`.
pub fn bu_series(k: usize, max_degree: usize) -> PowerSeries {
    (1..=k).fold(PowerSeries::one(max_degree), |acc, r| acc.mul(&PowerSeries::geometric(2 * r, max_degree)))
}

fn point(max_degree: usize) -> PowerSeries {
    PowerSeries::constant(Rational::one(), max_degree)
}

fn level_components(space: Space, h: usize, max_degree: usize) -> Vec<Component> {
    let chars = 1usize << h;
    let comp = |label: String, series: PowerSeries| Component { label, series };
    match space {
        Space::BS1 => (0..chars).map(|i| comp(format!("V{i}"), PowerSeries::geometric(2, max_degree))).collect(),
        Space::BU(m) => compositions(m, chars)
            .into_iter()
            .map(|k| {
                let series = PowerSeries::product(&k.iter().map(|&ki| bu_series(ki, max_degree)).collect::<Vec<_>>(), max_degree);
                let label = k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                comp(format!("({label})"), series)
            })
            .collect(),
        Space::Torus(m) => {
            let series = (0..m).fold(PowerSeries::one(max_degree), |acc, _| acc.mul(&PowerSeries::geometric(2, max_degree)));
            compositions_of_labels(chars, m).into_iter().map(|l| comp(l, series.clone())).collect()
        }
        Space::BSU2 => {
            if h == 0 {
                return vec![comp("V0".into(), bu_series_su2(max_degree))];
            }
            // self-conjugate characters have centralizer SU(2), the rest pair up
            let mut out = vec![
                comp("V0".into(), bu_series_su2(max_degree)),
                comp(format!("V{}", chars / 2), bu_series_su2(max_degree)),
            ];
            for i in 1..chars / 2 {
                out.push(comp(format!("V{i}+V{}", chars - i), PowerSeries::geometric(2, max_degree)));
            }
            out
        }
        Space::BSigma2 => {
            let mut out = vec![comp("triv".into(), point(max_degree))];
            if h >= 1 {
                out.push(comp("sign".into(), point(max_degree)));
            }
            out
        }
    }
}

fn bu_series_su2(max_degree: usize) -> PowerSeries {
    PowerSeries::geometric(4, max_degree)
}

/// Labels `V{i_1}⊗...⊗V{i_m}` for all `m`-tuples of characters.
fn compositions_of_labels(chars: usize, m: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for slot in 0..m {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..chars).map(move |i| if slot == 0 { format!("V{i}") } else { format!("{p}xV{i}") })
            })
            .collect();
    }
    out
}

/// Fixed-point components of `space` at every level `h = 0..=n`, with
/// Poincaré series truncated at `max_degree`. Weyl groups act trivially
/// on cohomology: the generator acts on each component through a
/// rotation.
pub fn fixed_point_data(space: Space, n: usize, max_degree: usize) -> Result<FixedPointDiagram> {
    match space {
        Space::BU(0) | Space::Torus(0) => return Err(Error::InvalidArgument("m must be at least 1".into())),
        _ => {}
    }
    let levels = (0..=n)
        .map(|h| {
            let components = level_components(space, h, max_degree);
            let weyl = WeylDescriptor::trivial(1u64 << (n - h), components.len());
            LevelData { level: h, components, weyl }
        })
        .collect();
    FixedPointDiagram::new(space, n, max_degree, levels)
}
