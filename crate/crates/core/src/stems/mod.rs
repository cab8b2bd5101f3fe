//! `RO(G)`-graded rational stable stems of `C_{2^n}`.
//!
//! Three independent routes compute the Mackey class in a degree `V`:
//!
//! * [`stem_at`]: the closed tuple formula, decoded by cut enumeration;
//! * [`stem_at_sector`]: membership in the sector lattices of the point ring;
//! * [`stem_at_oracle`]: Künneth assembly of representation-sphere homology
//!   from fixed-point dimensions and Weyl signs.

mod oracle;
mod presentation;
mod sector;
mod tuple;

pub use oracle::{sphere_homology, stem_at_oracle};
pub use presentation::{
    fixed_point_rings, point_presentation, FixedPointTables, GeneratorFamily, PointPresentation,
    PresentedGenerator,
};
pub use sector::{sector_sign, stem_at_sector, SectorElement, SectorMonomial};
pub use tuple::{decode, stem_at, stem_at_strict, StemDecoding, Tuple2n};

use serde::{Deserialize, Serialize};

/// Selects one of the three stem computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StemMethod {
    Closed,
    Sector,
    Oracle,
}

impl std::str::FromStr for StemMethod {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "closed" => Ok(StemMethod::Closed),
            "sector" => Ok(StemMethod::Sector),
            "oracle" => Ok(StemMethod::Oracle),
            other => Err(crate::Error::InvalidArgument(format!("unknown stem method `{other}`"))),
        }
    }
}

/// The stem at `v` computed by `method`.
pub fn stem_by(method: StemMethod, v: &crate::rolattice::VirtualRep) -> crate::Result<crate::mackey::MackeyClass> {
    match method {
        StemMethod::Closed => Ok(stem_at(v)),
        StemMethod::Sector => Ok(stem_at_sector(v)),
        StemMethod::Oracle => stem_at_oracle(v),
    }
}
