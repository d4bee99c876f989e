//! Exterior algebraic shifting and hyperconnectivity.
//!
//! Rows of the compound matrix are the wedge products `f_R = f_{r_1} ∧ ... ∧
//! f_{r_k}` expanded in the basis `{e_T : T ∈ K}` of the exterior face ring.
//! Since `(e_S : S ∉ K)` is an ideal, `f_R` can be built one factor at a time
//! with non-faces dropped, and a depth-first walk over `R` in lexicographic
//! order shares every prefix. The entry at `e_T` equals the minor
//! `det A[R, T]`.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{stable_generic_run, EchelonBasis, Fp, GenericConfig, GenericMatrixSource, PrimeFieldMatrix};
use crate::shift::{assemble, ShiftResult, Variant};

/// Faces of a complex grouped by size with reverse lookup.
pub(crate) struct FaceIndex {
    pub levels: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl FaceIndex {
    pub fn new(k: &SimplicialComplex) -> Self {
        let levels: Vec<Vec<Face>> = (0..=(k.dim() + 1) as usize).map(|s| k.faces_of_size(s).to_vec()).collect();
        let index = levels.iter().map(|lv| lv.iter().enumerate().map(|(i, &f)| (f, i)).collect()).collect();
        FaceIndex { levels, index }
    }

    pub fn len(&self, size: usize) -> usize {
        self.levels.get(size).map_or(0, Vec::len)
    }

    pub fn get(&self, size: usize, f: Face) -> Option<usize> {
        self.index.get(size)?.get(&f).copied()
    }
}

/// For each face `T` of size `j`: the triples `(v, idx(T ∪ v), sign)` with
/// `e_T ∧ e_v = ± e_{T ∪ v}` and `T ∪ v ∈ K`.
pub(crate) struct WedgeTable {
    ups: Vec<Vec<Vec<(u32, usize, bool)>>>,
}

impl WedgeTable {
    pub fn new(idx: &FaceIndex, m: u32) -> Self {
        let top = idx.levels.len();
        let ups = (0..top)
            .map(|j| {
                idx.levels[j]
                    .iter()
                    .map(|&t| {
                        (1..=m)
                            .filter(|&v| !t.contains(v))
                            .filter_map(|v| {
                                let target = idx.get(j + 1, t.with(v))?;
                                let negative = (t.len() - t.count_below(v)) % 2 == 1;
                                Some((v, target, negative))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        WedgeTable { ups }
    }

    /// `w ∧ (Σ_v coeffs[v-1] e_v)` for `w` supported on faces of size `j`.
    pub fn wedge(&self, field: Fp, j: usize, w: &[u64], coeffs: &[u64], out_len: usize) -> Vec<u64> {
        let mut out = vec![0u64; out_len];
        for (t, &c) in w.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(v, target, negative) in &self.ups[j][t] {
                let term = field.mul(c, coeffs[v as usize - 1]);
                out[target] = if negative { field.sub(out[target], term) } else { field.add(out[target], term) };
            }
        }
        out
    }
}

struct Scan<'a> {
    field: Fp,
    source: &'a GenericMatrixSource,
    idx: &'a FaceIndex,
    table: &'a WedgeTable,
    m: u32,
    bases: Vec<EchelonBasis>,
    accepted: Vec<Vec<Face>>,
}

impl Scan<'_> {
    fn full(&self, size: usize) -> bool {
        self.bases[size].rank() == self.idx.len(size)
    }

    fn visit(&mut self, prefix: Face, w: &[u64]) {
        let j = prefix.len();
        let top = self.idx.levels.len() - 1;
        if j == top {
            return;
        }
        let start = prefix.max().unwrap_or(0) + 1;
        for r in start..=self.m {
            if (j + 1..=top).all(|s| self.full(s)) {
                return;
            }
            let next = self.table.wedge(self.field, j, w, self.source.row(r), self.idx.len(j + 1));
            if next.iter().all(|&x| x == 0) {
                continue;
            }
            let face = prefix.with(r);
            if !self.full(j + 1) && self.bases[j + 1].insert(next.clone()) {
                self.accepted[j + 1].push(face);
            }
            self.visit(face, &next);
        }
    }
}

/// Greedy lexicographic basis selection for one matrix. `k` must live on
/// `1..=m` where `m` is the size of the source.
pub(crate) fn exterior_levels(k: &SimplicialComplex, source: &GenericMatrixSource) -> Result<Vec<Vec<Face>>> {
    let m = source.n() as u32;
    let idx = FaceIndex::new(k);
    let table = WedgeTable::new(&idx, m);
    let field = source.field();
    let top = idx.levels.len();
    let mut scan = Scan {
        field,
        source,
        idx: &idx,
        table: &table,
        m,
        bases: (0..top).map(|s| EchelonBasis::new(field, idx.len(s))).collect(),
        accepted: vec![Vec::new(); top],
    };
    scan.accepted[0].push(Face::EMPTY);
    scan.visit(Face::EMPTY, &[1]);
    for s in 1..top {
        if scan.accepted[s].len() != idx.len(s) {
            return Err(Error::Disagreement(format!(
                "exterior scan accepted {} of {} faces of size {s}",
                scan.accepted[s].len(),
                idx.len(s)
            )));
        }
    }
    Ok(scan.accepted)
}

/// `Δᵉ_A(K)` for the single matrix drawn from `seed`.
pub fn exterior_shift_once(k: &SimplicialComplex, field: Fp, seed: u64) -> Result<SimplicialComplex> {
    let (compact, _) = k.compact();
    let m = compact.n();
    if m == 0 {
        return Ok(SimplicialComplex::void(k.n()));
    }
    let source = GenericMatrixSource::new(field, seed, m as usize);
    let levels = exterior_levels(&compact, &source)?;
    assemble(k.n().max(m), &levels)
}

/// `Δᵉ(K)`, certified by agreement of two independent seeds.
pub fn exterior_shift(k: &SimplicialComplex, cfg: &GenericConfig) -> Result<ShiftResult> {
    let field = cfg.field()?;
    let run = stable_generic_run(cfg, |seed| exterior_shift_once(k, field, seed))?;
    Ok(ShiftResult { shifted: run.value, variant: Variant::Exterior, prime: cfg.prime, seeds: run.seeds, stable: true })
}

/// Columns of the map `x ↦ (f_1⌊x, ..., f_d⌊x)` on the given edges, as a
/// `(d·n) × |E|` matrix (stored column-major as rows of the transpose).
fn hyper_columns(source: &GenericMatrixSource, n: u32, d: u32, edges: &[Face]) -> PrimeFieldMatrix {
    let field = source.field();
    let cols: Vec<Vec<u64>> = edges
        .iter()
        .map(|&e| {
            let v = e.min().expect("edge");
            let u = e.max().expect("edge");
            let mut col = vec![0u64; (d * n) as usize];
            for i in 1..=d {
                // e_{vu} contracted by f_i: α_{iu} on e_v and -α_{iv} on e_u.
                col[((v - 1) * d + i - 1) as usize] = source.alpha(i, u);
                col[((u - 1) * d + i - 1) as usize] = field.neg(source.alpha(i, v));
            }
            col
        })
        .collect();
    PrimeFieldMatrix::from_rows(field, (d * n) as usize, &cols).expect("uniform width")
}

/// Ranks `(rank(G), rank(K_V))` of the hyperconnectivity map for one seed.
fn hyper_ranks(g: &SimplicialComplex, d: u32, field: Fp, seed: u64) -> (usize, usize) {
    let (compact, _) = g.compact();
    let n = compact.n();
    let source = GenericMatrixSource::new(field, seed, n.max(d) as usize);
    let complete: Vec<Face> = crate::face::k_subsets(n, 2).collect();
    let rg = hyper_columns(&source, n, d, compact.edges()).rank();
    let rk = hyper_columns(&source, n, d, &complete).rank();
    (rg, rk)
}

fn require_graph(g: &SimplicialComplex) -> Result<()> {
    if g.dim() > 1 {
        return Err(Error::BadParameters(format!("expected a graph, got dimension {}", g.dim())));
    }
    Ok(())
}

/// Hyperconnectivity read off `Δᵉ(G)` on `n = |V(G)|` vertices.
pub fn hyper_from_shift(shifted: &SimplicialComplex, n: u32, d: u32) -> (bool, bool) {
    let f = |a: u32, b: u32| Face::from_vertices([a, b]);
    let hyperconnected = if n <= 1 {
        true
    } else if n <= d {
        shifted.contains(f(n - 1, n))
    } else {
        shifted.contains(f(d, n))
    };
    let acyclic = d + 2 > n || !shifted.contains(f(d + 1, d + 2));
    (hyperconnected, acyclic)
}

/// `(d-hyperconnected, d-acyclic)` computed by both oracles, which must agree.
pub fn hyperconnectivity(g: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<(bool, bool)> {
    require_graph(g)?;
    if d == 0 {
        return Err(Error::BadParameters("d must be positive".into()));
    }
    let field = cfg.field()?;
    let ranks = stable_generic_run(cfg, |seed| Ok(hyper_ranks(g, d, field, seed)))?.value;
    let direct = (ranks.0 == ranks.1, ranks.0 == g.edges().len());
    let shifted = exterior_shift(g, cfg)?.shifted;
    let via_shift = hyper_from_shift(&shifted, g.num_vertices() as u32, d);
    if direct != via_shift {
        return Err(Error::Disagreement(format!(
            "hyperconnectivity of {g} in dimension {d}: rank test {direct:?}, shifting {via_shift:?}"
        )));
    }
    Ok(direct)
}

pub fn is_d_hyperconnected(g: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<bool> {
    hyperconnectivity(g, d, cfg).map(|r| r.0)
}

pub fn is_d_acyclic(g: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<bool> {
    hyperconnectivity(g, d, cfg).map(|r| r.1)
}
