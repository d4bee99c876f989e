//! Strongly edge decomposable complexes.

use std::collections::HashMap;

use serde::Serialize;

use super::iso::{invariant_hash, is_isomorphic};
use super::{contract_unchecked, satisfies_link_condition};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// How a complex decomposes: either the boundary of a simplex, or an edge
/// satisfying the Link Condition whose link and contraction decompose.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SedTrace {
    SimplexBoundary { vertices: Vec<u32> },
    Contract { u: u32, v: u32, link: Box<SedTrace>, contraction: Box<SedTrace> },
}

impl SedTrace {
    /// Number of edge contractions recorded along the contraction spine.
    pub fn depth(&self) -> usize {
        match self {
            SedTrace::SimplexBoundary { .. } => 0,
            SedTrace::Contract { contraction, .. } => 1 + contraction.depth(),
        }
    }
}

fn is_simplex_boundary(k: &SimplicialComplex) -> bool {
    let d = k.dim();
    d == -1 || (k.num_vertices() as i32 == d + 2 && k.facets().len() as i32 == d + 2 && k.is_pure())
}

struct Sed {
    budget: u64,
    calls: u64,
    failures: HashMap<u64, Vec<SimplicialComplex>>,
}

impl Sed {
    fn known_failure(&self, k: &SimplicialComplex, hash: u64) -> bool {
        self.failures.get(&hash).is_some_and(|b| b.iter().any(|c| is_isomorphic(c, k)))
    }

    fn decompose(&mut self, k: &SimplicialComplex) -> Result<Option<SedTrace>> {
        if is_simplex_boundary(k) {
            return Ok(Some(SedTrace::SimplexBoundary { vertices: k.vertices() }));
        }
        if !k.is_pure() {
            return Ok(None);
        }
        let hash = invariant_hash(k);
        if self.known_failure(k, hash) {
            return Ok(None);
        }
        self.calls += 1;
        if self.calls > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        for &e in k.edges() {
            let (u, v) = (e.max().expect("edge"), e.min().expect("edge"));
            if !satisfies_link_condition(k, u, v)? {
                continue;
            }
            let Some(link) = self.decompose(&k.link_unchecked(e))? else { continue };
            let Some(contraction) = self.decompose(&contract_unchecked(k, u, v))? else { continue };
            return Ok(Some(SedTrace::Contract { u, v, link: Box::new(link), contraction: Box::new(contraction) }));
        }
        self.failures.entry(hash).or_default().push(k.clone());
        Ok(None)
    }
}

/// A decomposition trace if `K` is strongly edge decomposable, `None` if the
/// search proved it is not. `K` must be pure.
pub fn is_strongly_edge_decomposable(k: &SimplicialComplex, budget: u64) -> Result<Option<SedTrace>> {
    if !k.is_pure() {
        return Err(Error::BadParameters("strong edge decomposability needs a pure complex".into()));
    }
    Sed { budget, calls: 0, failures: HashMap::new() }.decompose(k)
}
