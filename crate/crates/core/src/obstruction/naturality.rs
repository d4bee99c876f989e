//! Naturality of Smith classes under admissible contractions.

use std::collections::HashMap;

use serde::Serialize;

use super::chain_map::{contraction_chain_map, Coefficients, ContractionChainMap};
use super::join::{smith_class_in, DeletedJoin, JoinFace};
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::linalg::solve_f2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NaturalityReport {
    pub m: usize,
    pub u: u32,
    pub v: u32,
    /// The induced map `K'_* → K_*` commutes with the boundary in degrees `≤ m`.
    pub join_chain_map: bool,
    /// The pullback of `Sm^m(K)` is a symmetric cochain.
    pub pullback_symmetric: bool,
    /// The pullback and `Sm^m(K')` differ by a symmetric coboundary.
    pub differs_by_coboundary: bool,
    pub source_vanishes: bool,
    pub target_vanishes: bool,
}

impl NaturalityReport {
    pub fn holds(&self) -> bool {
        self.join_chain_map && self.pullback_symmetric && self.differs_by_coboundary
    }
}

/// `Φ(S¹ ⊎ T²) = Σ A¹ ⊎ B²` over the terms `A` of `φ(S)` and `B` of `φ(T)`
/// that stay disjoint, over `F_2`.
fn join_image(phi: &ContractionChainMap, f: JoinFace) -> Vec<JoinFace> {
    let mut out = Vec::new();
    for &(a, _) in phi.image(f.0) {
        for &(b, _) in phi.image(f.1) {
            if a.is_disjoint(b) {
                out.push((a, b));
            }
        }
    }
    out
}

fn odd_terms(terms: impl IntoIterator<Item = JoinFace>) -> Vec<JoinFace> {
    let mut count: HashMap<JoinFace, u32> = HashMap::new();
    for t in terms {
        *count.entry(t).or_default() += 1;
    }
    let mut out: Vec<JoinFace> = count.into_iter().filter(|(_, c)| c % 2 == 1).map(|(t, _)| t).collect();
    out.sort();
    out
}

fn join_map_commutes(phi: &ContractionChainMap, source: &DeletedJoin, top: i32) -> bool {
    (0..=top).all(|q| {
        source.faces(q).iter().all(|&f| {
            let lhs = odd_terms(join_image(phi, f).into_iter().flat_map(DeletedJoin::facets_of));
            let rhs = odd_terms(DeletedJoin::facets_of(f).flat_map(|g| join_image(phi, g)));
            lhs == rhs
        })
    })
}

/// Compares `φ^* Sm^m(K)` with `Sm^m(K')` for the admissible contraction `u ↦ v`.
pub fn smith_naturality(k: &SimplicialComplex, u: u32, v: u32, m: usize) -> Result<NaturalityReport> {
    let phi = contraction_chain_map(k, u, v, Coefficients::Z2)?;
    let big = DeletedJoin::new(k);
    let small = DeletedJoin::new(&phi.source);
    let sm_big = smith_class_in(&big, m)?;
    let sm_small = smith_class_in(&small, m)?;
    let value = |f: JoinFace| {
        join_image(&phi, f)
            .into_iter()
            .filter_map(|g| big.orbit_of(g))
            .fold(false, |acc, o| acc ^ sm_big.cochain.values[o])
    };
    let q = m as i32;
    let pullback: Vec<bool> = small.orbits(q).iter().map(|&f| value(f)).collect();
    let pullback_symmetric = small.orbits(q).iter().zip(&pullback).all(|(&(s, t), &x)| value((t, s)) == x);
    let diff: Vec<bool> = pullback.iter().zip(&sm_small.cochain.values).map(|(a, b)| a ^ b).collect();
    let rows = small.symmetric_coboundary(q - 1);
    let differs_by_coboundary = solve_f2(&rows, small.orbits(q - 1).len(), &diff).is_some();
    Ok(NaturalityReport {
        m,
        u,
        v,
        join_chain_map: join_map_commutes(&phi, &small, q),
        pullback_symmetric,
        differs_by_coboundary,
        source_vanishes: sm_big.vanishes,
        target_vanishes: sm_small.vanishes,
    })
}
