//! Three-way comparison of the stem computations over a box of degrees.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::mackey::MackeyClass;
use crate::rolattice::VirtualRep;
use crate::stems;

type StemFn<'a> = Box<dyn Fn(&VirtualRep) -> Result<MackeyClass> + 'a>;

/// The three routes being compared. Tests swap in corrupted variants.
pub struct StemMethods<'a> {
    pub closed: StemFn<'a>,
    pub sector: StemFn<'a>,
    pub oracle: StemFn<'a>,
}

impl Default for StemMethods<'_> {
    fn default() -> Self {
        StemMethods {
            closed: Box::new(|v| Ok(stems::stem_at(v))),
            sector: Box::new(|v| Ok(stems::stem_at_sector(v))),
            oracle: Box::new(stems::stem_at_oracle),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub degree: String,
    pub closed: String,
    pub sector: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub n: usize,
    pub bound: i64,
    pub checked: usize,
    pub disagreements: Vec<Disagreement>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "compared {} degrees for n={} in [-{b},{b}]^{}: {} disagreement(s)\n",
            self.checked,
            self.n,
            self.n + 1,
            self.disagreements.len(),
            b = self.bound
        );
        for d in &self.disagreements {
            let _ = writeln!(out, "  {}: closed={} sector={} oracle={}", d.degree, d.closed, d.sector, d.oracle);
        }
        out
    }
}

fn show(r: &Result<MackeyClass>) -> String {
    match r {
        Ok(c) => c.to_text(),
        Err(e) => format!("error({e})"),
    }
}

/// Runs all three methods on every degree in `[-bound, bound]^{n+1}`.
pub fn compare_methods(n: usize, bound: i64, methods: &StemMethods<'_>) -> DiffReport {
    let mut report = DiffReport { n, bound, checked: 0, disagreements: Vec::new() };
    for v in VirtualRep::degree_box(n, bound) {
        report.checked += 1;
        let a = (methods.closed)(&v);
        let b = (methods.sector)(&v);
        let c = (methods.oracle)(&v);
        let agree = matches!((&a, &b, &c), (Ok(x), Ok(y), Ok(z)) if x == y && y == z);
        if !agree {
            report.disagreements.push(Disagreement {
                degree: v.to_text(),
                closed: show(&a),
                sector: show(&b),
                oracle: show(&c),
            });
        }
    }
    report
}
