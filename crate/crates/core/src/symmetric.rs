//! Symmetric algebraic shifting through generic initial monomials of the
//! face ring `k[K]`.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{stable_generic_run, EchelonBasis, Fp, GenericConfig, GenericMatrixSource};
use crate::shift::{assemble, ShiftResult, Variant};

/// Smallest prime accepted for symmetric shifting, which needs
/// characteristic zero and is emulated by a large prime.
pub const MIN_SYMMETRIC_PRIME: u64 = 1000;

const NIBBLE: u32 = 4;
const MAX_VARS: u32 = 32;
const MAX_DEGREE: usize = 15;

/// A monomial `y_{i_1} ... y_{i_r}` stored as its nondecreasing index list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `y_a^p y_b^q` as an index list.
    pub fn power_product(a: u32, p: usize, b: u32, q: usize) -> Self {
        let mut v = vec![a; p];
        v.extend(std::iter::repeat_n(b, q));
        v.sort_unstable();
        Monomial(v)
    }

    /// `S(m) = {i_1 - r + 1, i_2 - r + 2, ..., i_r}` when `r ≤ i_1`.
    pub fn squeeze(&self) -> Option<Face> {
        let r = self.0.len() as u32;
        if self.0.first().is_some_and(|&i| i < r) {
            return None;
        }
        Some(self.0.iter().enumerate().map(|(j, &i)| i + j as u32 + 1 - r).collect())
    }
}

/// Generic initial monomials per degree and the squeezed faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GinResult {
    /// `per_degree[d]` lists `GIN_d` in `<_L` order.
    pub per_degree: Vec<Vec<Monomial>>,
    pub gin: Vec<Monomial>,
    pub shifted: SimplicialComplex,
}

impl GinResult {
    pub fn contains(&self, m: &Monomial) -> bool {
        self.per_degree.get(m.degree()).is_some_and(|lv| lv.binary_search(m).is_ok())
    }
}

/// Monomials `x^b` with `supp(b) ∈ K`, by degree, plus multiplication links.
struct FaceRingBasis {
    levels: Vec<Vec<u128>>,
    // ups[d][i] = (v, index of levels[d][i] * x_v in levels[d+1])
    ups: Vec<Vec<Vec<(u32, usize)>>>,
}

fn support(key: u128, m: u32) -> Face {
    (1..=m).filter(|&v| (key >> ((v - 1) * NIBBLE)) & 0xF != 0).collect()
}

impl FaceRingBasis {
    fn new(k: &SimplicialComplex, m: u32, top: usize) -> Self {
        let mut levels: Vec<Vec<u128>> = vec![vec![0]];
        let mut ups = Vec::new();
        for d in 0..top {
            let mut next: Vec<u128> = Vec::new();
            for &key in &levels[d] {
                let supp = support(key, m);
                for v in 1..=m {
                    if k.contains(supp.with(v)) {
                        next.push(key + (1u128 << ((v - 1) * NIBBLE)));
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            let pos: HashMap<u128, usize> = next.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let links = levels[d]
                .iter()
                .map(|&key| {
                    let supp = support(key, m);
                    (1..=m)
                        .filter(|&v| k.contains(supp.with(v)))
                        .map(|v| (v, pos[&(key + (1u128 << ((v - 1) * NIBBLE)))]))
                        .collect()
                })
                .collect();
            ups.push(links);
            levels.push(next);
        }
        FaceRingBasis { levels, ups }
    }

    fn multiply(&self, field: Fp, d: usize, poly: &[u64], coeffs: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.levels[d + 1].len()];
        for (i, &c) in poly.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(v, target) in &self.ups[d][i] {
                out[target] = field.add(out[target], field.mul(c, coeffs[v as usize - 1]));
            }
        }
        out
    }
}

struct Scan<'a> {
    field: Fp,
    source: &'a GenericMatrixSource,
    basis: &'a FaceRingBasis,
    m: u32,
    echelons: Vec<EchelonBasis>,
    accepted: Vec<Vec<Monomial>>,
}

impl Scan<'_> {
    fn full(&self, d: usize) -> bool {
        self.echelons[d].rank() == self.basis.levels[d].len()
    }

    fn visit(&mut self, prefix: &mut Vec<u32>, poly: &[u64]) {
        let d = prefix.len();
        let top = self.basis.levels.len() - 1;
        if d == top {
            return;
        }
        let start = prefix.last().copied().unwrap_or(1);
        for r in start..=self.m {
            if (d + 1..=top).all(|s| self.full(s)) {
                return;
            }
            let next = self.basis.multiply(self.field, d, poly, self.source.row(r));
            if next.iter().all(|&x| x == 0) {
                continue;
            }
            prefix.push(r);
            if !self.full(d + 1) && self.echelons[d + 1].insert(next.clone()) {
                self.accepted[d + 1].push(Monomial(prefix.clone()));
            }
            self.visit(prefix, &next);
            prefix.pop();
        }
    }
}

/// `GIN(K)` for one matrix, together with the squeezed complex. `k` must be
/// compact (vertices `1..=m`, `m` the size of the source).
fn gin_once(k: &SimplicialComplex, source: &GenericMatrixSource, ground: u32) -> Result<GinResult> {
    let m = source.n() as u32;
    let top = (k.dim() + 1) as usize;
    if m > MAX_VARS || top > MAX_DEGREE {
        return Err(Error::BadParameters(format!(
            "symmetric shifting supports at most {MAX_VARS} vertices and dimension {}",
            MAX_DEGREE - 1
        )));
    }
    let basis = FaceRingBasis::new(k, m, top);
    let field = source.field();
    let mut scan = Scan {
        field,
        source,
        basis: &basis,
        m,
        echelons: basis.levels.iter().map(|lv| EchelonBasis::new(field, lv.len())).collect(),
        accepted: vec![Vec::new(); top + 1],
    };
    scan.accepted[0].push(Monomial(vec![]));
    scan.visit(&mut Vec::new(), &[1]);
    for d in 1..=top {
        if scan.accepted[d].len() != basis.levels[d].len() {
            return Err(Error::Disagreement(format!(
                "GIN in degree {d} has {} monomials but k[K] has dimension {}",
                scan.accepted[d].len(),
                basis.levels[d].len()
            )));
        }
    }
    let gin: Vec<Monomial> = scan.accepted.iter().flatten().filter(|mono| mono.squeeze().is_some()).cloned().collect();
    let mut levels: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
    for mono in &gin {
        levels[mono.degree()].push(mono.squeeze().expect("filtered"));
    }
    let shifted = assemble(ground, &levels)?;
    if shifted.face_counts() != k.face_counts() {
        return Err(Error::NonGeneric(format!("squeezed faces have f-vector {:?}", shifted.face_counts())));
    }
    Ok(GinResult { per_degree: scan.accepted, gin, shifted })
}

fn check_prime(cfg: &GenericConfig) -> Result<Fp> {
    let field = cfg.field()?;
    if cfg.prime < MIN_SYMMETRIC_PRIME {
        return Err(Error::PrimeTooSmall { p: cfg.prime, min: MIN_SYMMETRIC_PRIME, what: "symmetric shifting" });
    }
    Ok(field)
}

/// `GIN(K)` from a single seed, on the compacted vertex labels.
pub fn gin_once_seeded(k: &SimplicialComplex, field: Fp, seed: u64) -> Result<GinResult> {
    let (compact, _) = k.compact();
    let m = compact.n();
    let source = GenericMatrixSource::new(field, seed, m.max(1) as usize);
    gin_once(&compact, &source, k.n().max(m))
}

/// `GIN(K)` certified by two seeds. Vertex labels are compacted to `1..=m`
/// first, so variable indices refer to that order.
pub fn gin(k: &SimplicialComplex, cfg: &GenericConfig) -> Result<GinResult> {
    let field = check_prime(cfg)?;
    Ok(stable_generic_run(cfg, |seed| gin_once_seeded(k, field, seed))?.value)
}

/// `Δˢ(K)`, certified by agreement of two independent seeds.
pub fn symmetric_shift(k: &SimplicialComplex, cfg: &GenericConfig) -> Result<ShiftResult> {
    let field = check_prime(cfg)?;
    let run = stable_generic_run(cfg, |seed| gin_once_seeded(k, field, seed).map(|g| g.shifted))?;
    Ok(ShiftResult {
        shifted: run.value,
        variant: Variant::Symmetric,
        prime: cfg.prime,
        seeds: run.seeds,
        stable: true,
    })
}
