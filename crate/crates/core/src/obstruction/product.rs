//! The deleted product `K_×` and the integer Van Kampen cocycle.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::solve_integer;

/// A cell `S × T` of the deleted product.
pub type ProductCell = (Face, Face);

fn parity(x: usize) -> i64 {
    if x.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `K_× = {S × T : S, T ∈ K ∖ {∅}, S ∩ T = ∅}`, cells of dimension `dim S + dim T`.
#[derive(Debug, Clone)]
pub struct DeletedProduct {
    cells: Vec<Vec<ProductCell>>,
    index: HashMap<ProductCell, usize>,
}

impl DeletedProduct {
    pub fn new(k: &SimplicialComplex) -> Self {
        let faces: Vec<Face> = k.faces().filter(|f| !f.is_empty()).collect();
        let mut cells: Vec<Vec<ProductCell>> = Vec::new();
        for &s in &faces {
            for &t in &faces {
                if s.is_disjoint(t) {
                    let dim = (s.dim() + t.dim()) as usize;
                    if cells.len() <= dim {
                        cells.resize(dim + 1, Vec::new());
                    }
                    cells[dim].push((s, t));
                }
            }
        }
        let mut index = HashMap::new();
        for level in &mut cells {
            level.sort_by_key(|&(s, t)| (s.len(), s, t));
            for (i, &c) in level.iter().enumerate() {
                index.insert(c, i);
            }
        }
        DeletedProduct { cells, index }
    }

    pub fn dim(&self) -> i32 {
        self.cells.len() as i32 - 1
    }

    pub fn cells(&self, q: i32) -> &[ProductCell] {
        if q < 0 {
            return &[];
        }
        self.cells.get(q as usize).map_or(&[], |l| l.as_slice())
    }

    pub fn index(&self, c: ProductCell) -> Option<usize> {
        self.index.get(&c).copied()
    }

    /// Number of vertices `{i} × {j}`.
    pub fn num_vertices(&self) -> usize {
        self.cells(0).len()
    }

    /// `∂(S × T) = ∂S × T + (-1)^{dim S} S × ∂T`, vertices in natural order.
    pub fn boundary(c: ProductCell) -> Vec<(ProductCell, i64)> {
        let (s, t) = c;
        let mut out = Vec::new();
        if s.len() >= 2 {
            out.extend(s.iter().enumerate().map(|(i, x)| ((s.without(x), t), parity(i))));
        }
        if t.len() >= 2 {
            let sign = parity(s.dim() as usize);
            out.extend(t.iter().enumerate().map(|(j, y)| ((s, t.without(y)), sign * parity(j))));
        }
        out
    }

    /// `τ(S × T) = (-1)^{dim S · dim T} T × S`.
    pub fn swap(c: ProductCell) -> (ProductCell, i64) {
        ((c.1, c.0), parity((c.0.dim() * c.1.dim()) as usize))
    }

    /// `(δx)(C)` for an integer cochain indexed by the cells of dimension `q`.
    pub fn coboundary(&self, q: i32, x: &[i64]) -> Vec<i64> {
        self.cells(q + 1)
            .iter()
            .map(|&c| Self::boundary(c).into_iter().map(|(g, sign)| sign * x[self.index[&g]]).sum())
            .collect()
    }
}

/// `first` and `second` alternate starting with `first`: `a_0 < b_0 < a_1 < ...`,
/// where `|first| = |second|` or `|first| = |second| + 1`.
fn interleaves(first: Face, second: Face) -> bool {
    if first.len() != second.len() && first.len() != second.len() + 1 {
        return false;
    }
    let mut merged: Vec<(u32, bool)> =
        first.iter().map(|x| (x, true)).chain(second.iter().map(|y| (y, false))).collect();
    merged.sort_unstable();
    merged.iter().enumerate().all(|(i, &(_, from_first))| from_first == (i % 2 == 0))
}

/// `+1` when `M` is even (symmetric cochains), `-1` when odd (antisymmetric).
fn symmetry(m: usize) -> i64 {
    parity(m)
}

/// The Van Kampen cochain `o^M` on the `M`-cells of `K_×`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanKampenCocycle {
    pub m: usize,
    /// One value per `M`-cell, in the order of [`DeletedProduct::cells`].
    pub values: Vec<i64>,
}

fn elementary(c: ProductCell, m: usize) -> i64 {
    let (s, t) = c;
    let base = |s: Face, t: Face| {
        let shape = if m.is_multiple_of(2) { s.len() == t.len() } else { t.len() == s.len() + 1 };
        shape && if m.is_multiple_of(2) { interleaves(s, t) } else { interleaves(t, s) }
    };
    if base(s, t) {
        1
    } else if base(t, s) {
        symmetry(m) * DeletedProduct::swap((t, s)).1
    } else {
        0
    }
}

/// Builds `o^M`: `1` on the alternating cells (`s_0 < t_0 < ...` for even
/// `M`, `t_0 < s_0 < ...` for odd `M`), extended by the (anti)symmetry.
pub fn van_kampen_cocycle(k: &SimplicialComplex, m: usize) -> Result<VanKampenCocycle> {
    if m == 0 {
        return Err(Error::BadParameters("the Van Kampen cocycle needs M ≥ 1".into()));
    }
    let product = DeletedProduct::new(k);
    Ok(cocycle_on(&product, m))
}

fn cocycle_on(product: &DeletedProduct, m: usize) -> VanKampenCocycle {
    VanKampenCocycle { m, values: product.cells(m as i32).iter().map(|&c| elementary(c, m)).collect() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanKampenReport {
    pub m: usize,
    pub vanishes: bool,
    pub cells: usize,
    /// The cochain subcomplex the solve ran in.
    pub convention: &'static str,
}

/// Whether `o^M = δx` for an integer `(M-1)`-cochain `x` of the same
/// symmetry type (symmetric for even `M`, antisymmetric for odd `M`).
pub fn vk_vanishes_z(k: &SimplicialComplex, m: usize) -> Result<VanKampenReport> {
    if m == 0 {
        return Err(Error::BadParameters("the Van Kampen cocycle needs M ≥ 1".into()));
    }
    let product = DeletedProduct::new(k);
    let o = cocycle_on(&product, m);
    if product.coboundary(m as i32, &o.values).iter().any(|&x| x != 0) {
        return Err(Error::Disagreement(format!("o^{m} is not a cocycle")));
    }
    let eps = symmetry(m);
    // One unknown per τ-orbit of (M-1)-cells; the partner carries ε·(-1)^{dim S dim T}.
    let lower = product.cells(m as i32 - 1);
    let mut orbit: HashMap<ProductCell, (usize, i64)> = HashMap::new();
    let mut unknowns = 0;
    for &c in lower {
        if orbit.contains_key(&c) {
            continue;
        }
        let (partner, sign) = DeletedProduct::swap(c);
        orbit.insert(c, (unknowns, 1));
        orbit.insert(partner, (unknowns, eps * sign));
        unknowns += 1;
    }
    let rows: Vec<Vec<BigInt>> = product
        .cells(m as i32)
        .iter()
        .map(|&c| {
            let mut row = vec![0i64; unknowns];
            for (g, sign) in DeletedProduct::boundary(c) {
                let (id, s) = orbit[&g];
                row[id] += sign * s;
            }
            row.into_iter().map(BigInt::from).collect()
        })
        .collect();
    let rhs: Vec<BigInt> = o.values.iter().map(|&x| BigInt::from(x)).collect();
    let vanishes = if rows.is_empty() { true } else { solve_integer(&rows, unknowns, &rhs)?.is_some() };
    Ok(VanKampenReport {
        m,
        vanishes,
        cells: rows.len(),
        convention: if m.is_multiple_of(2) { "symmetric cochains" } else { "antisymmetric cochains" },
    })
}
