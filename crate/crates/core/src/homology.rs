//! Simplicial chain complexes over `F_p`, reduced Betti numbers and the
//! Reisner-style Cohen-Macaulay tests.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{Fp, PrimeFieldMatrix};

/// Reduced chain complex `C_{-1} ← C_0 ← C_1 ← ...` with the augmentation.
#[derive(Debug, Clone)]
pub struct ChainComplexFp {
    field: Fp,
    /// `bases[k]` lists the faces of size `k` (dimension `k - 1`) in `<_L` order.
    bases: Vec<Vec<Face>>,
    /// `boundaries[k]` maps size-`k` chains to size-`(k-1)` chains, `k ≥ 1`;
    /// `boundaries[0]` is an empty placeholder.
    boundaries: Vec<PrimeFieldMatrix>,
}

/// `(-1)^{#{t ∈ F : t < v}}`, the sign of removing `v` from `F`.
pub(crate) fn removal_sign(face: Face, v: u32) -> bool {
    face.count_below(v) % 2 == 1
}

impl ChainComplexFp {
    pub fn new(k: &SimplicialComplex, field: Fp) -> Self {
        let top = (k.dim() + 1) as usize;
        let bases: Vec<Vec<Face>> = (0..=top).map(|s| k.faces_of_size(s).to_vec()).collect();
        let mut boundaries = vec![PrimeFieldMatrix::zeros(field, 0, 0)];
        for s in 1..=top {
            let mut m = PrimeFieldMatrix::zeros(field, bases[s - 1].len(), bases[s].len());
            for (c, &f) in bases[s].iter().enumerate() {
                for v in f.iter() {
                    let r = bases[s - 1].binary_search_by(|x| x.lex_cmp(f.without(v))).expect("closed");
                    m.set(r, c, field.sign(removal_sign(f, v)));
                }
            }
            boundaries.push(m);
        }
        ChainComplexFp { field, bases, boundaries }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    /// Faces of size `k`.
    pub fn basis(&self, k: usize) -> &[Face] {
        self.bases.get(k).map_or(&[], |b| b.as_slice())
    }

    /// Boundary from size `k` to size `k - 1` (`k ≥ 1`).
    pub fn boundary(&self, k: usize) -> Option<&PrimeFieldMatrix> {
        if k == 0 {
            None
        } else {
            self.boundaries.get(k)
        }
    }

    /// Largest face size present.
    pub fn top(&self) -> usize {
        self.bases.len() - 1
    }

    /// Whether every composite `∂_{k-1} ∘ ∂_k` vanishes.
    pub fn boundary_squares_vanish(&self) -> bool {
        (2..=self.top()).all(|k| self.boundaries[k - 1].mul(&self.boundaries[k]).expect("shapes").is_zero())
    }
}

/// Reduced Betti numbers: `minus_one` is `β̃_{-1}` and `values[i]` is `β̃_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub minus_one: u64,
    pub values: Vec<u64>,
}

impl BettiVector {
    /// Reduced Euler characteristic `Σ (-1)^i β̃_i` from `i = -1`.
    pub fn euler(&self) -> i64 {
        let tail: i64 =
            self.values.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        tail - self.minus_one as i64
    }

    pub fn is_zero(&self) -> bool {
        self.minus_one == 0 && self.values.iter().all(|&b| b == 0)
    }

    fn trimmed(minus_one: u64, mut values: Vec<u64>, len: usize) -> Self {
        values.resize(len, 0);
        BettiVector { minus_one, values }
    }
}

/// Reduced Betti numbers of `K` over `F_p`.
pub fn betti(k: &SimplicialComplex, p: u64) -> Result<BettiVector> {
    let field = Fp::new(p)?;
    Ok(betti_over(k, field))
}

pub(crate) fn betti_over(k: &SimplicialComplex, field: Fp) -> BettiVector {
    let cc = ChainComplexFp::new(k, field);
    let top = cc.top();
    let ranks: Vec<usize> =
        (0..=top + 1).map(|s| if s == 0 || s > top { 0 } else { cc.boundaries[s].rank() }).collect();
    // size s holds dimension s - 1: β̃_{s-1} = |C_s| - rank ∂_s - rank ∂_{s+1}.
    let b = |s: usize| (cc.bases[s].len() - ranks[s] - ranks[s + 1]) as u64;
    BettiVector::trimmed(b(0), (1..=top).map(b).collect(), top)
}

/// `β_i = |{S ∈ Δ_i : S ∪ {1} ∉ Δ}|` for a shifted complex.
pub fn shifted_betti(delta: &SimplicialComplex) -> Result<BettiVector> {
    if !delta.is_shifted() {
        return Err(Error::NotShifted);
    }
    let top = (delta.dim() + 1) as usize;
    let count = |s: usize| delta.faces_of_size(s).iter().filter(|f| !delta.contains(f.with(1))).count() as u64;
    Ok(BettiVector::trimmed(count(0), (1..=top).map(count).collect(), top))
}

/// `β̃_i = 0` for every `-1 ≤ i < dim`.
fn acyclic_below(k: &SimplicialComplex, field: Fp, dim: i32) -> bool {
    if dim < 0 {
        return true;
    }
    let b = betti_over(k, field);
    b.minus_one == 0 && b.values.iter().take(dim as usize).all(|&x| x == 0)
}

/// Reisner: `K` is pure and `β̃_i(lk(T, K)) = 0` for every face `T` and
/// every `i < dim lk(T, K)`.
pub fn is_cohen_macaulay(k: &SimplicialComplex, p: u64) -> Result<bool> {
    let field = Fp::new(p)?;
    Ok(cm_over(k, field))
}

fn cm_over(k: &SimplicialComplex, field: Fp) -> bool {
    if !k.is_pure() {
        return false;
    }
    k.faces().all(|t| {
        let lk = k.link_unchecked(t);
        acyclic_below(&lk, field, lk.dim())
    })
}

/// Doubly Cohen-Macaulay: CM and every vertex deletion is CM of the same dimension.
pub fn is_2cm(k: &SimplicialComplex, p: u64) -> Result<bool> {
    let field = Fp::new(p)?;
    if !cm_over(k, field) {
        return Ok(false);
    }
    Ok(k.vertices().into_iter().all(|v| {
        let del = k.delete_vertex(v);
        del.dim() == k.dim() && cm_over(&del, field)
    }))
}
