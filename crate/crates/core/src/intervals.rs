//! Interval statistics `I_S^i ∩ Δ` and `D(S)` of shifted complexes, with
//! the kernel-dimension oracle that computes the same counts from `K`.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{k_subsets, Face};
use crate::linalg::{minor_det, stable_generic_run, EchelonBasis, Fp, GenericConfig, GenericMatrixSource};

fn require_shifted(delta: &SimplicialComplex) -> Result<()> {
    if delta.is_shifted() {
        Ok(())
    } else {
        Err(Error::NotShifted)
    }
}

/// `{T ∈ Δ : |T| = |S| + i, init_{|S|}(T) = S}`, in `<_L` order.
///
/// `init_0(T) = ∅`, so `S = ∅` selects every face of size `i`.
pub fn interval_faces(delta: &SimplicialComplex, s: Face, i: usize) -> Result<Vec<Face>> {
    require_shifted(delta)?;
    Ok(delta.faces_of_size(s.len() + i).iter().copied().filter(|t| t.init(s.len()) == s).collect())
}

/// `D(S) = |I¹_{init_{|S|-1}(S)} ∩ Δ|` counted inside `[n]`.
pub fn d_value(delta: &SimplicialComplex, s: Face, n: u32) -> Result<usize> {
    require_shifted(delta)?;
    if s.is_empty() {
        return Err(Error::BadParameters("D(S) needs a nonempty S".into()));
    }
    Ok(d_unchecked(delta, s, n))
}

fn d_unchecked(delta: &SimplicialComplex, s: Face, n: u32) -> usize {
    let a = s.init(s.len() - 1);
    let lo = a.max().unwrap_or(0) + 1;
    (lo..=n).filter(|&x| delta.contains(a.with(x))).count()
}

/// The gap `s_{j+1} - s_j` between the two largest elements (`s_0 = 0`).
fn top_gap(s: Face) -> i64 {
    let v = s.to_vec();
    let last = v[v.len() - 1] as i64;
    let prev = if v.len() >= 2 { v[v.len() - 2] as i64 } else { 0 };
    last - prev
}

/// Membership predicted from `D`: `S ∈ Δ ⇔ s_{j+1} - s_j ≤ D(S)`.
pub fn member_by_d(delta: &SimplicialComplex, s: Face, n: u32) -> Result<bool> {
    Ok(top_gap(s) <= d_value(delta, s, n)? as i64)
}

/// Checks the `D` membership criterion for every nonempty `S ⊆ [n]` with
/// `|S| ≤ dim Δ + 2`, returning the first counterexample.
pub fn membership_counterexample(delta: &SimplicialComplex, n: u32) -> Result<Option<Face>> {
    require_shifted(delta)?;
    let top = (delta.dim() + 2).max(1) as usize;
    for size in 1..=top.min(n as usize) {
        for s in k_subsets(n, size) {
            if (top_gap(s) <= d_unchecked(delta, s, n) as i64) != delta.contains(s) {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Membership of `T` in the shifting of a union, predicted from the
/// shifted parts: `t_{j+1} - t_j ≤ Σ c_k · D_{Δ_k}(T)`.
///
/// Disjoint unions use weights `(1, 1)`; a union over a simplex adds the
/// complete complex on `|σ|` vertices with weight `-1`.
pub fn predicted_union_member(parts: &[(&SimplicialComplex, i64)], t: Face, n: u32) -> Result<bool> {
    let mut bound = 0i64;
    for &(delta, c) in parts {
        bound += c * d_value(delta, t, n)? as i64;
    }
    Ok(top_gap(t) <= bound)
}

/// The complex on `[n]` whose faces satisfy [`predicted_union_member`].
pub fn predicted_union(parts: &[(&SimplicialComplex, i64)], n: u32) -> Result<SimplicialComplex> {
    let top = parts.iter().map(|(d, _)| d.dim() + 1).max().unwrap_or(0).max(0) as usize + 1;
    let mut faces = Vec::new();
    for size in 1..=top.min(n as usize) {
        for t in k_subsets(n, size) {
            if predicted_union_member(parts, t, n)? {
                faces.push(t);
            }
        }
    }
    Ok(SimplicialComplex::from_faces(n, faces))
}

/// Shuffle sign of `e_F = ±e_Q ∧ e_G` for `F = Q ⊔ G`.
fn shuffle_negative(q: Face, g: Face) -> bool {
    q.iter().map(|x| g.count_below(x)).sum::<usize>() % 2 == 1
}

/// Ranks of the stacked interior products `f_R⌊ : ∧^{s+i}(K) → ∧^i` over
/// `R <_L S` and over `R ≤_L S`.
fn kernel_ranks(k: &SimplicialComplex, s: Face, i: usize, source: &GenericMatrixSource) -> (usize, usize) {
    let field = source.field();
    let m = k.n();
    let ground = source.n() as u32;
    let cols = k.faces_of_size(s.len() + i);
    let targets: Vec<Face> = k_subsets(m, i).collect();
    let a = source.matrix();
    let mut basis = EchelonBasis::new(field, cols.len());
    let mut before = 0;
    for r in k_subsets(ground, s.len()) {
        if r.lex_cmp(s).is_gt() {
            break;
        }
        if r == s {
            before = basis.rank();
        }
        let rows: Vec<usize> = r.iter().map(|x| x as usize - 1).collect();
        for &g in &targets {
            let row: Vec<u64> = cols
                .iter()
                .map(|&f| {
                    if !g.is_subset(f) {
                        return 0;
                    }
                    let q = f.minus(g);
                    let qc: Vec<usize> = q.iter().map(|x| x as usize - 1).collect();
                    let det = minor_det(a, &rows, &qc).expect("square minor");
                    if shuffle_negative(q, g) {
                        field.neg(det)
                    } else {
                        det
                    }
                })
                .collect();
            basis.insert(row);
        }
    }
    (before, basis.rank())
}

/// `dim ∩_{R<_L S} Ker f_R⌊ − dim ∩_{R≤_L S} Ker f_R⌊` on `∧^{|S|+i}(K)`,
/// which equals `|I_S^i ∩ Δᵉ(K)|`. Labels of `K` are compacted first.
pub fn kernel_interval_count(k: &SimplicialComplex, s: Face, i: usize, cfg: &GenericConfig) -> Result<usize> {
    if i == 0 {
        return Err(Error::BadParameters("interval index i must be positive".into()));
    }
    let (compact, _) = k.compact();
    if s.len() + i > (compact.dim() + 1).max(0) as usize {
        return Ok(0);
    }
    let field: Fp = cfg.field()?;
    let ground = compact.n().max(s.max().unwrap_or(0)).max(1);
    let run = stable_generic_run(cfg, |seed| {
        let source = GenericMatrixSource::new(field, seed, ground as usize);
        let (before, through) = kernel_ranks(&compact, s, i, &source);
        Ok(through - before)
    })?;
    Ok(run.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::exterior::exterior_shift;
    use crate::face::k_subsets;

    fn f(v: &[u32]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    fn cfg() -> GenericConfig {
        GenericConfig::default()
    }

    #[test]
    fn complete_complex_d_values() {
        let m = 6;
        let full = complete_complex(m);
        for size in 1..=m as usize {
            for s in k_subsets(m, size) {
                let head = s.init(size - 1);
                let d = d_value(&full, s, m).unwrap();
                assert_eq!(d, (m - head.max().unwrap_or(0)) as usize);
                if head == Face::range(1, size as u32 - 1) {
                    assert_eq!(d, m as usize - size + 1);
                }
            }
        }
    }

    #[test]
    fn not_shifted_is_rejected() {
        assert_eq!(d_value(&cycle(4), f(&[1, 2]), 4), Err(Error::NotShifted));
        assert_eq!(interval_faces(&cycle(4), f(&[1]), 1), Err(Error::NotShifted));
    }

    #[test]
    fn membership_on_stacked_sphere() {
        let delta = exterior_shift(&stacked_sphere(3, 6).unwrap(), &cfg()).unwrap().shifted;
        assert_eq!(membership_counterexample(&delta, 6).unwrap(), None);
        assert_eq!(membership_counterexample(&delta, 9).unwrap(), None);
        assert!(interval_faces(&delta, f(&[4, 5]), 1).unwrap().is_empty());
    }

    #[test]
    fn kernel_counts_match_intervals() {
        for k in [boundary_simplex(3), cycle(4)] {
            let delta = exterior_shift(&k, &cfg()).unwrap().shifted;
            let (n, top) = (k.n(), (k.dim() + 1) as usize);
            for size in 0..=top {
                for s in k_subsets(n, size) {
                    for i in 1..=top - size {
                        let expect = interval_faces(&delta, s, i).unwrap().len();
                        assert_eq!(kernel_interval_count(&k, s, i, &cfg()).unwrap(), expect, "S={s} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn empty_prefix_counts_faces() {
        let k = octahedron();
        for i in 1..=3 {
            assert_eq!(kernel_interval_count(&k, Face::EMPTY, i, &cfg()).unwrap() as u64, k.face_counts()[i]);
        }
        assert_eq!(kernel_interval_count(&SimplicialComplex::void(3), Face::EMPTY, 1, &cfg()).unwrap(), 0);
    }
}
