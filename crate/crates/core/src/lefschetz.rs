//! Lefschetz certificates and rigidity read off symmetric shifting.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::construct::t_set;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::GenericConfig;
use crate::symmetric::{gin, symmetric_shift, Monomial};

/// HL holds iff no `y_{d+1}^{d-2k-1} y_{d+2}^{k+1}` lies in `GIN(K)`.
///
/// The answer is cross-checked against the face form: `Δˢ(K)` contains none
/// of the forbidden sets `T_{d-k}`, i.e. `Δˢ(K) ⊆ Δ(d)`.
pub fn is_hl_certificate(k: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<bool> {
    if !k.is_pure() || k.dim() != d as i32 - 1 {
        return Err(Error::BadParameters(format!("expected a pure complex of dimension {}", d as i32 - 1)));
    }
    let g = gin(k, cfg)?;
    let by_gin = (0..=(d.saturating_sub(1)) / 2)
        .filter(|&kk| d > 2 * kk)
        .map(|kk| Monomial::power_product(d + 1, (d - 2 * kk - 1) as usize, d + 2, (kk + 1) as usize))
        .all(|m| !g.contains(&m));
    let by_faces = (0..=d / 2).all(|kk| !g.shifted.contains(t_set(d, kk).expect("k in range")));
    if by_gin != by_faces {
        return Err(Error::Disagreement(format!("HL certificate: monomials say {by_gin}, faces say {by_faces}")));
    }
    Ok(by_gin)
}

/// First violated weak-Lefschetz shifting condition on `Δˢ(K)`, if any:
/// (1) `S ∈ Δ, |S| = k ⇒ [d-k] ∪ S ∈ Δ`;
/// (2) `S ∈ Δ, |S| = k < ⌊d/2⌋ ⇒ {d-k+1} ∪ S ∈ Δ`.
pub fn wl_violation(shifted: &SimplicialComplex, d: u32) -> Option<String> {
    for s in shifted.faces() {
        let k = s.len() as u32;
        if k <= d {
            let t = Face::range(1, d - k).union(s);
            if !shifted.contains(t) {
                return Some(format!("condition (1): {s} in the shifted complex but {t} is not"));
            }
        }
        if k < d / 2 {
            let t = s.with(d - k + 1);
            if !shifted.contains(t) {
                return Some(format!("condition (2): {s} in the shifted complex but {t} is not"));
            }
        }
    }
    None
}

pub fn is_wl_certificate(k: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<bool> {
    let shifted = symmetric_shift(k, cfg)?.shifted;
    Ok(wl_violation(&shifted, d).is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RigidityVerdict {
    pub rigid: bool,
    pub stress_free: bool,
}

/// Rigidity read off `Δ(G)` for a graph on `n` vertices: rigid iff
/// `{d, n} ∈ Δ` and stress free iff `{d+1, d+2} ∉ Δ`. For `n ≤ d` the
/// graph is rigid iff complete, i.e. iff `{n-1, n} ∈ Δ`.
pub fn rigidity_from_shift(shifted: &SimplicialComplex, n: u32, d: u32) -> RigidityVerdict {
    let (rigid, stress_free) = crate::exterior::hyper_from_shift(shifted, n, d);
    RigidityVerdict { rigid, stress_free }
}

/// Generic `d`-rigidity and `d`-stress freeness of a graph via `Δˢ(G)`.
pub fn rigidity_links(g: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<RigidityVerdict> {
    if g.dim() > 1 {
        return Err(Error::BadParameters(format!("expected a graph, got dimension {}", g.dim())));
    }
    let shifted = symmetric_shift(g, cfg)?.shifted;
    Ok(rigidity_from_shift(&shifted, g.num_vertices() as u32, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    fn cfg() -> GenericConfig {
        GenericConfig::default()
    }

    #[test]
    fn hl_examples() {
        for d in 2..=4 {
            assert!(is_hl_certificate(&boundary_simplex(d), d, &cfg()).unwrap());
        }
        assert!(is_hl_certificate(&stacked_sphere(3, 6).unwrap(), 3, &cfg()).unwrap());
        assert!(is_hl_certificate(&octahedron(), 3, &cfg()).unwrap());
        assert!(is_hl_certificate(&cycle(5), 3, &cfg()).is_err());
    }

    #[test]
    fn hl_fails_for_non_spheres() {
        // Two triangles sharing a vertex: Δˢ contains {2,4}.
        let bowtie = SimplicialComplex::from_facets(5, [[1, 2], [2, 3], [1, 3], [3, 4], [4, 5], [3, 5]]).unwrap();
        assert!(!is_hl_certificate(&bowtie, 2, &cfg()).unwrap());
    }

    #[test]
    fn wl_examples() {
        assert!(is_wl_certificate(&octahedron(), 3, &cfg()).unwrap());
        assert!(is_wl_certificate(&boundary_simplex(3), 3, &cfg()).unwrap());
        let impure = SimplicialComplex::from_facets(4, [vec![1, 2, 3], vec![3, 4]]).unwrap();
        let shifted = symmetric_shift(&impure, &cfg()).unwrap().shifted;
        assert!(wl_violation(&shifted, 3).is_some());
    }

    #[test]
    fn rigidity_examples() {
        let oct = rigidity_links(&octahedron_graph(), 3, &cfg()).unwrap();
        assert_eq!(oct, RigidityVerdict { rigid: true, stress_free: true });
        let k5 = symmetric_shift(&complete_graph(5), &cfg()).unwrap().shifted;
        assert!(k5.contains(Face::from_vertices([3, 5])));
        assert!(k5.contains(Face::from_vertices([4, 5])));
        let edge = rigidity_links(&complete_graph(2), 1, &cfg()).unwrap();
        assert!(edge.rigid && edge.stress_free);
    }
}
