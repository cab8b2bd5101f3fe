//! Closed-form stems from integer tuples.
//!
//! A tuple `t = (j_0..j_{n-1}, j'_0..j'_{n-1})` names the degree
//!
//! ```text
//! V_t = Σ_{k<=n-2} (j_k (2 - l_k) - j'_k l_k) + j_{n-1} (1 - sigma) - j'_{n-1} sigma
//! ```
//!
//! and, when every nonzero `j'` sits strictly left of every nonzero `j`
//! (`k'(t) < k(t)`), contributes `⊕_{k'(t) < i <= k(t)} M_i^±` with sign
//! given by the parity of `j_{n-1}`.
//!
//! Decoding a degree enumerates the cut between the `j'` and `j` supports:
//! each position's total `j_p + j'_p` is forced by the coordinates, so a
//! cut determines the tuple, and only the trivial-coordinate equation
//! remains to be checked.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mackey::{MackeyClass, Sign, SimpleSummand};
use crate::rolattice::VirtualRep;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tuple2n {
    /// Orientation exponents; position `n-1` is the sigma slot.
    pub j: Vec<i64>,
    /// Euler exponents; position `n-1` is the sigma slot.
    pub jp: Vec<i64>,
}

impl Tuple2n {
    pub fn new(j: Vec<i64>, jp: Vec<i64>) -> Self {
        assert_eq!(j.len(), jp.len(), "tuple halves must have equal length");
        Tuple2n { j, jp }
    }

    pub fn n(&self) -> usize {
        self.j.len()
    }

    /// `min{k : j_k != 0}`, or `n` when all `j` vanish.
    pub fn k(&self) -> i64 {
        self.j.iter().position(|&x| x != 0).map_or(self.n() as i64, |p| p as i64)
    }

    /// `max{k : j'_k != 0}`, or `-1` when all `j'` vanish.
    pub fn k_prime(&self) -> i64 {
        self.jp.iter().rposition(|&x| x != 0).map_or(-1, |p| p as i64)
    }

    /// Membership in the index set `T`.
    pub fn is_admissible(&self) -> bool {
        self.k_prime() < self.k()
    }

    pub fn sign(&self) -> Sign {
        match self.j.last() {
            Some(&x) => Sign::from_parity(x.rem_euclid(2) == 1),
            None => Sign::Plus,
        }
    }

    pub fn degree(&self) -> VirtualRep {
        let n = self.n();
        if n == 0 {
            return VirtualRep::zero(0);
        }
        let mut c = vec![0; n - 1];
        let mut d = 0;
        for k in 0..n - 1 {
            d += 2 * self.j[k];
            c[k] = -(self.j[k] + self.jp[k]);
        }
        d += self.j[n - 1];
        let s = -(self.j[n - 1] + self.jp[n - 1]);
        VirtualRep::new(n, d, s, c).expect("tuple degree has the right shape")
    }

    /// `⊕_{k'(t) < i <= k(t)} M_i^±`.
    pub fn summands(&self) -> MackeyClass {
        let n = self.n();
        let sign = self.sign();
        let lo = self.k_prime() + 1;
        let hi = self.k();
        MackeyClass::from_summands(
            n,
            (lo..=hi).map(|i| (SimpleSummand::new(n, i as usize, sign).expect("admissible tuple"), 1)),
        )
    }
}

impl fmt::Display for Tuple2n {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "(j=[{}]; j'=[{}])", join(&self.j), join(&self.jp))
    }
}

/// All admissible tuples naming a degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemDecoding {
    pub degree: VirtualRep,
    pub tuples: Vec<Tuple2n>,
}

impl StemDecoding {
    pub fn is_unique(&self) -> bool {
        self.tuples.len() <= 1
    }

    /// Direct sum of the contributions of every decoded tuple.
    pub fn class(&self) -> MackeyClass {
        self.tuples.iter().fold(MackeyClass::zero(self.degree.n()), |acc, t| acc.sum(&t.summands()))
    }
}

/// Cut enumeration: positions `< cut` carry `j'`, positions `>= cut`
/// carry `j`.
pub fn decode(v: &VirtualRep) -> StemDecoding {
    let n = v.n();
    let total = |p: usize| if p + 1 == n { v.s() } else { v.c()[p] };
    let mut tuples: Vec<Tuple2n> = Vec::new();
    for cut in 0..=n {
        let mut j = vec![0; n];
        let mut jp = vec![0; n];
        for p in 0..n {
            if p < cut {
                jp[p] = -total(p);
            } else {
                j[p] = -total(p);
            }
        }
        let t = Tuple2n::new(j, jp);
        debug_assert!(t.is_admissible());
        if t.degree() == *v && !tuples.contains(&t) {
            tuples.push(t);
        }
    }
    tuples.sort();
    StemDecoding { degree: v.clone(), tuples }
}

/// The stem at `v` from the tuple formula, summed over every admissible
/// tuple with `V_t = v`.
pub fn stem_at(v: &VirtualRep) -> MackeyClass {
    decode(v).class()
}

/// As [`stem_at`], but fails when more than one admissible tuple names the
/// degree.
pub fn stem_at_strict(v: &VirtualRep) -> Result<MackeyClass> {
    let dec = decode(v);
    if !dec.is_unique() {
        return Err(Error::TupleCollision { degree: v.to_text(), count: dec.tuples.len() });
    }
    Ok(dec.class())
}
