//! Minor search over facet deletions and admissible contractions, and a
//! graph-specialized clique-minor search over connected vertex partitions.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::iso::{find_isomorphism, invariant_hash};
use super::{contract_unchecked, is_admissible};
use crate::complex::SimplicialComplex;
use crate::construct::complete_graph;
use crate::error::{Error, Result};
use crate::face::Face;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum MinorStep {
    /// Remove one facet, keeping its proper faces.
    DeleteFacet { facet: Vec<u32> },
    /// Identify `u` with `v` (an admissible contraction).
    Contract { u: u32, v: u32 },
}

/// A replayable certificate for `H < K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub steps: Vec<MinorStep>,
    /// Final vertex bijection onto the labels of `H`, as `(from, to)` pairs.
    pub relabel: Vec<(u32, u32)>,
    pub start_hash: u64,
    pub end_hash: u64,
}

impl MinorWitness {
    /// Applies the steps to `k`, checking each one, then the relabelling.
    pub fn replay(&self, k: &SimplicialComplex, n: u32) -> Result<SimplicialComplex> {
        let mut cur = k.clone();
        for step in &self.steps {
            cur = match step {
                MinorStep::DeleteFacet { facet } => {
                    let f = Face::from_vertices(facet.iter().copied());
                    if !cur.facets().contains(&f) {
                        return Err(Error::NotAFacet(f));
                    }
                    cur.filter(|s| s != f)
                }
                MinorStep::Contract { u, v } => {
                    if !is_admissible(&cur, *u, *v)? {
                        return Err(Error::NotAdmissible { u: *u, v: *v });
                    }
                    contract_unchecked(&cur, *u, *v)
                }
            };
        }
        let map: HashMap<u32, u32> = self.relabel.iter().copied().collect();
        let ground = n.max(cur.n());
        Ok(cur.map_vertices(ground, |v| map.get(&v).copied().unwrap_or(v)).with_ground(n.max(1)))
    }

    /// Whether replaying from `k` reproduces `h` and both hashes match.
    pub fn verify(&self, h: &SimplicialComplex, k: &SimplicialComplex) -> Result<bool> {
        Ok(self.start_hash == invariant_hash(k) && self.end_hash == invariant_hash(h) && self.replay(k, h.n())? == *h)
    }
}

fn dominates(big: &[u64], small: &[u64]) -> bool {
    small.len() <= big.len() && small.iter().zip(big).all(|(s, b)| s <= b)
}

/// Steps taken and the final relabelling onto the target.
type Found = (Vec<MinorStep>, Vec<(u32, u32)>);

struct MinorSearch<'a> {
    target: &'a SimplicialComplex,
    target_f: Vec<u64>,
    target_hash: u64,
    budget: u64,
    expanded: u64,
    seen: HashMap<u64, Vec<SimplicialComplex>>,
}

impl MinorSearch<'_> {
    fn visit(&mut self, cur: &SimplicialComplex) -> Result<Option<Found>> {
        let f = cur.face_counts();
        if !dominates(&f, &self.target_f) {
            return Ok(None);
        }
        let hash = invariant_hash(cur);
        let bucket = self.seen.entry(hash).or_default();
        if bucket.iter().any(|c| find_isomorphism(c, cur).is_some()) {
            return Ok(None);
        }
        bucket.push(cur.clone());
        if hash == self.target_hash && f == self.target_f {
            if let Some(iso) = find_isomorphism(cur, self.target) {
                return Ok(Some((Vec::new(), iso)));
            }
        }
        self.expanded += 1;
        if self.expanded > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        let verts = cur.vertices();
        if verts.len() > self.target.num_vertices() {
            for (i, &a) in verts.iter().enumerate() {
                for &b in &verts[i + 1..] {
                    if !is_admissible(cur, b, a)? {
                        continue;
                    }
                    let next = contract_unchecked(cur, b, a);
                    if let Some((mut steps, iso)) = self.visit(&next)? {
                        steps.insert(0, MinorStep::Contract { u: b, v: a });
                        return Ok(Some((steps, iso)));
                    }
                }
            }
        }
        for &facet in cur.facets() {
            if facet.is_empty() {
                continue;
            }
            let next = cur.filter(|s| s != facet);
            if let Some((mut steps, iso)) = self.visit(&next)? {
                steps.insert(0, MinorStep::DeleteFacet { facet: facet.to_vec() });
                return Ok(Some((steps, iso)));
            }
        }
        Ok(None)
    }
}

/// Searches for a sequence of facet deletions and admissible contractions
/// turning `K` into a copy of `H`. `Ok(None)` means the search space was
/// exhausted; running out of `budget` expansions is an error.
pub fn is_minor(h: &SimplicialComplex, k: &SimplicialComplex, budget: u64) -> Result<Option<MinorWitness>> {
    let mut search = MinorSearch {
        target: h,
        target_f: h.face_counts(),
        target_hash: invariant_hash(h),
        budget,
        expanded: 0,
        seen: HashMap::new(),
    };
    Ok(search.visit(k)?.map(|(steps, relabel)| MinorWitness {
        steps,
        relabel,
        start_hash: invariant_hash(k),
        end_hash: search.target_hash,
    }))
}

fn block_adjacent(g: &SimplicialComplex, a: u64, b: u64) -> bool {
    g.edges().iter().any(|e| {
        let bits = e.bits();
        let (x, y) = (bits & a, bits & b);
        x != 0 && y != 0 && x != bits && y != bits
    })
}

/// An `r`-clique in the quotient graph on `blocks`, by backtracking.
fn clique_in(adj: &[Vec<bool>], r: usize) -> Option<Vec<usize>> {
    fn grow(adj: &[Vec<bool>], r: usize, chosen: &mut Vec<usize>, from: usize) -> bool {
        if chosen.len() == r {
            return true;
        }
        for i in from..adj.len() {
            if chosen.iter().all(|&c| adj[c][i]) {
                chosen.push(i);
                if grow(adj, r, chosen, i + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    grow(adj, r, &mut chosen, 0).then_some(chosen)
}

/// Turns branch sets of a `K_r` model into contraction and deletion steps.
fn clique_witness(g: &SimplicialComplex, branch: &[u64]) -> MinorWitness {
    let mut steps = Vec::new();
    let mut cur = g.clone();
    let mut reps = Vec::new();
    for &block in branch {
        let set = Face::from_bits(block);
        let rep = set.min().expect("nonempty block");
        reps.push(rep);
        let mut merged = Face::singleton(rep);
        while merged != set {
            let w = set
                .minus(merged)
                .iter()
                .find(|&w| cur.contains(Face::from_vertices([w, rep])))
                .expect("connected block");
            steps.push(MinorStep::Contract { u: w, v: rep });
            cur = contract_unchecked(&cur, w, rep);
            merged = merged.with(w);
        }
    }
    let keep = Face::from_vertices(reps.iter().copied());
    for &facet in cur.facets().iter().filter(|f| !f.is_subset(keep) && f.len() == 2) {
        steps.push(MinorStep::DeleteFacet { facet: facet.to_vec() });
    }
    for v in cur.vertices().into_iter().filter(|&v| !keep.contains(v)) {
        steps.push(MinorStep::DeleteFacet { facet: vec![v] });
    }
    let relabel = reps.iter().enumerate().map(|(i, &v)| (v, i as u32 + 1)).collect();
    MinorWitness {
        steps,
        relabel,
        start_hash: invariant_hash(g),
        end_hash: invariant_hash(&complete_graph(branch.len() as u32)),
    }
}

/// Searches for a `K_r` minor of the graph `G` by contracting edges between
/// connected branch sets. Exhaustive unless the budget runs out.
pub fn has_clique_minor(g: &SimplicialComplex, r: u32, budget: u64) -> Result<Option<MinorWitness>> {
    if g.dim() > 1 {
        return Err(Error::BadParameters(format!("expected a graph, got dimension {}", g.dim())));
    }
    if !(2..=7).contains(&r) {
        return Err(Error::BadParameters(format!("clique size {r} outside 2..=7")));
    }
    let r = r as usize;
    let need_edges = r * (r - 1) / 2;
    let start: Vec<u64> = g.vertices().into_iter().map(|v| Face::singleton(v).bits()).collect();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut stack = vec![start];
    let mut expanded = 0u64;
    while let Some(blocks) = stack.pop() {
        if blocks.len() < r || !seen.insert(blocks.clone()) {
            continue;
        }
        let m = blocks.len();
        let mut adj = vec![vec![false; m]; m];
        let mut edges = 0;
        for i in 0..m {
            for j in i + 1..m {
                if block_adjacent(g, blocks[i], blocks[j]) {
                    adj[i][j] = true;
                    adj[j][i] = true;
                    edges += 1;
                }
            }
        }
        if edges < need_edges {
            continue;
        }
        if let Some(clique) = clique_in(&adj, r) {
            let branch: Vec<u64> = clique.iter().map(|&i| blocks[i]).collect();
            return Ok(Some(clique_witness(g, &branch)));
        }
        expanded += 1;
        if expanded > budget {
            return Err(Error::BudgetExhausted(budget));
        }
        if m == r {
            continue;
        }
        for i in 0..m {
            for j in i + 1..m {
                if adj[i][j] {
                    let mut next: Vec<u64> =
                        blocks.iter().enumerate().filter(|&(x, _)| x != i && x != j).map(|(_, &b)| b).collect();
                    next.push(blocks[i] | blocks[j]);
                    next.sort_unstable();
                    if !seen.contains(&next) {
                        stack.push(next);
                    }
                }
            }
        }
    }
    Ok(None)
}
