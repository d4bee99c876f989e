//! Common result type and dispatch for the two shifting operators.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::GenericConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Exterior,
    Symmetric,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::Exterior, Variant::Symmetric];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Exterior => "exterior",
            Variant::Symmetric => "symmetric",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ext" | "exterior" => Ok(Variant::Exterior),
            "sym" | "symmetric" => Ok(Variant::Symmetric),
            other => Err(Error::BadParameters(format!("unknown variant {other:?}"))),
        }
    }
}

/// A shifted complex with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftResult {
    pub shifted: SimplicialComplex,
    pub variant: Variant,
    pub prime: u64,
    pub seeds: [u64; 2],
    pub stable: bool,
}

/// `Δ(K)` for the chosen variant, under the two-seed protocol.
pub fn shift(k: &SimplicialComplex, variant: Variant, cfg: &GenericConfig) -> Result<ShiftResult> {
    match variant {
        Variant::Exterior => crate::exterior::exterior_shift(k, cfg),
        Variant::Symmetric => crate::symmetric::symmetric_shift(k, cfg),
    }
}

/// Convenience: only the shifted complex.
pub fn shifted(k: &SimplicialComplex, variant: Variant, cfg: &GenericConfig) -> Result<SimplicialComplex> {
    shift(k, variant, cfg).map(|r| r.shifted)
}

/// Assembles accepted faces into a complex, checking inclusion closure.
pub(crate) fn assemble(n: u32, levels: &[Vec<Face>]) -> Result<SimplicialComplex> {
    let all: std::collections::HashSet<Face> = levels.iter().flatten().copied().collect();
    for &s in &all {
        for t in s.facets_of_boundary() {
            if !t.is_empty() && !all.contains(&t) {
                return Err(Error::ClosureViolation(t));
            }
        }
    }
    Ok(SimplicialComplex::from_faces(n, all))
}
