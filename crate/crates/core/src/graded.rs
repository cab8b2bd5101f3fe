//! Integer-graded families of Mackey classes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::mackey::MackeyClass;
use crate::scalar;
use crate::series::PowerSeries;

/// Degree → Mackey class. Missing degrees are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedTable {
    n: usize,
    entries: BTreeMap<i64, MackeyClass>,
}

impl GradedTable {
    pub fn new(n: usize) -> Self {
        GradedTable { n, entries: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `class` into degree `deg`.
    pub fn add(&mut self, deg: i64, class: &MackeyClass) {
        if class.is_zero() {
            return;
        }
        let slot = self.entries.entry(deg).or_insert_with(|| MackeyClass::zero(self.n));
        *slot = slot.sum(class);
    }

    pub fn get(&self, deg: i64) -> MackeyClass {
        self.entries.get(&deg).cloned().unwrap_or_else(|| MackeyClass::zero(self.n))
    }

    /// Nonzero degrees in increasing order.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &MackeyClass)> {
        self.entries.iter().map(|(d, c)| (*d, c))
    }

    /// Graded box product; degrees add.
    pub fn box_product(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::new(self.n);
        for (da, a) in self.iter() {
            for (db, b) in other.iter() {
                out.add(da + db, &a.box_product(b));
            }
        }
        out
    }

    /// Dual table: every summand is self-dual and degrees negate.
    pub fn dual(&self) -> Self {
        let mut out = Self::new(self.n);
        for (d, c) in self.iter() {
            out.add(-d, &c.dual());
        }
        out
    }

    /// The table with a single copy of `class` in degree 0.
    pub fn concentrated(n: usize, deg: i64, class: &MackeyClass) -> Self {
        let mut t = Self::new(n);
        t.add(deg, class);
        t
    }

    /// Dimension at level `h` as a series in `t`, over degrees `0..=max_degree`.
    pub fn poincare_series(&self, h: usize, max_degree: usize) -> PowerSeries {
        let coeffs = (0..=max_degree).map(|d| scalar::int(self.get(d as i64).level_dim(h) as i64)).collect();
        PowerSeries::from_coeffs(coeffs, max_degree)
    }

    /// One record per (degree, level) over degrees `lo..=hi`.
    pub fn records(&self, lo: i64, hi: i64) -> Vec<TableRecord> {
        let mut out = Vec::new();
        for deg in lo..=hi {
            let c = self.get(deg);
            for h in 0..=self.n {
                out.push(TableRecord {
                    degree: deg,
                    level: h,
                    dim: c.level_dim(h),
                    mackey_class: c.to_text(),
                });
            }
        }
        out
    }
}

/// Row of the machine-readable table output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub degree: i64,
    pub level: usize,
    pub dim: u64,
    pub mackey_class: String,
}
