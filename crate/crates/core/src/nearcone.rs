//! Near cones, their shifting decomposition and the Sarkaria chain maps.

use crate::complex::SimplicialComplex;
use crate::construct::{cone, join, point};
use crate::error::{Error, Result};
use crate::exterior::exterior_shift;
use crate::face::Face;
use crate::homology::removal_sign;
use crate::linalg::{Fp, GenericConfig, PrimeFieldMatrix};

/// `K` is a near cone w.r.t. `v` if `j ∈ S ∈ K` implies `(S \ j) ∪ v ∈ K`.
pub fn is_near_cone(k: &SimplicialComplex, v: u32) -> bool {
    k.faces().all(|s| s.iter().all(|j| k.contains(s.without(j).with(v))))
}

fn require_near_cone(k: &SimplicialComplex, v: u32) -> Result<()> {
    if !k.vertex_set().contains(v) {
        return Err(Error::VertexMissing(v));
    }
    if !is_near_cone(k, v) {
        return Err(Error::NotNearCone(v));
    }
    Ok(())
}

/// `j * (L + j)`: every face of `L` moved up by `j`, then joined with `{j}`.
fn apex_shifted(l: &SimplicialComplex, j: u32) -> Vec<Face> {
    l.faces().map(|t| t.shift_up(j).with(j)).collect()
}

/// Checks `Δᵉ(K) = (1 * (Δᵉ(lk(v, K)) + 1)) ∪ {S ∈ Δᵉ(K) : 1 ∉ S}`.
pub fn near_cone_decomposition_check(k: &SimplicialComplex, v: u32, cfg: &GenericConfig) -> Result<bool> {
    i_near_cone_decomposition_check(k, &[v], cfg)
}

/// Checks the decomposition of an `i`-near cone with removal sequence
/// `vs = (v_1, ..., v_i)`: the faces of `Δᵉ(K)` with minimum `j` are
/// exactly `j * (Δᵉ(lk(v_j, K(j-1))) + j)`, where `K(j) = ast(v_j, K(j-1))`.
pub fn i_near_cone_decomposition_check(k: &SimplicialComplex, vs: &[u32], cfg: &GenericConfig) -> Result<bool> {
    let delta = exterior_shift(k, cfg)?.shifted;
    let mut current = k.clone();
    for (idx, &v) in vs.iter().enumerate() {
        require_near_cone(&current, v)?;
        let j = idx as u32 + 1;
        let lk = current.link_unchecked(Face::singleton(v));
        let lk_shift = exterior_shift(&lk, cfg)?.shifted;
        let mut predicted = apex_shifted(&lk_shift, j);
        let mut actual: Vec<Face> = delta.faces().filter(|&s| s.min() == Some(j)).collect();
        predicted.sort();
        actual.sort();
        if predicted != actual {
            return Ok(false);
        }
        current = current.delete_vertex(v);
    }
    Ok(true)
}

/// Linear maps between the exterior face spaces `∧^k K`, one block per size `k`.
#[derive(Debug, Clone)]
pub struct GradedMap {
    pub field: Fp,
    pub bases: Vec<Vec<Face>>,
    /// `blocks[k]` acts on size-`k` faces; its codomain is size `k` for
    /// degree-preserving maps and size `k - 1` for contraction operators.
    pub blocks: Vec<PrimeFieldMatrix>,
}

fn bases(k: &SimplicialComplex) -> Vec<Vec<Face>> {
    (0..=(k.dim() + 1) as usize).map(|s| k.faces_of_size(s).to_vec()).collect()
}

fn index_of(basis: &[Face], f: Face) -> usize {
    basis.binary_search_by(|x| x.lex_cmp(f)).expect("face in basis")
}

/// The contraction `w⌊ e_S = Σ_{j∈S} (-1)^{sgn(j,S)} w_j e_{S \ j}` with
/// `w = Σ w_j e_j` (weights indexed by vertex, 1-based).
pub fn contraction_operator(k: &SimplicialComplex, field: Fp, weights: &[u64]) -> GradedMap {
    let bases = bases(k);
    let mut blocks = vec![PrimeFieldMatrix::zeros(field, 0, bases[0].len())];
    for s in 1..bases.len() {
        let mut m = PrimeFieldMatrix::zeros(field, bases[s - 1].len(), bases[s].len());
        for (c, &f) in bases[s].iter().enumerate() {
            for j in f.iter() {
                let w = weights.get(j as usize - 1).copied().unwrap_or(0);
                let entry = if removal_sign(f, j) { field.neg(w) } else { w };
                let r = index_of(&bases[s - 1], f.without(j));
                m.set(r, c, field.add(m.get(r, c), entry));
            }
        }
        blocks.push(m);
    }
    GradedMap { field, bases, blocks }
}

/// Weights `(1, ..., 1)` on the ground set, giving `e⌊`.
pub fn all_ones(k: &SimplicialComplex) -> Vec<u64> {
    vec![1; k.n() as usize]
}

/// Weights of the single vector `e_v`.
pub fn unit(k: &SimplicialComplex, v: u32) -> Vec<u64> {
    let mut w = vec![0; k.n() as usize];
    w[v as usize - 1] = 1;
    w
}

/// `U(e_S) = e_S − Σ_{i∈S} (-1)^{sgn(i,S)} e_{v ∪ S \ i}` for `v ∉ S`, and
/// `U(e_S) = e_S` otherwise. `K` must be a near cone w.r.t. `v`.
pub fn sarkaria_u(k: &SimplicialComplex, v: u32, field: Fp) -> Result<GradedMap> {
    require_near_cone(k, v)?;
    let bases = bases(k);
    let blocks = bases
        .iter()
        .map(|basis| {
            let mut m = PrimeFieldMatrix::identity(field, basis.len());
            for (c, &s) in basis.iter().enumerate() {
                if s.contains(v) {
                    continue;
                }
                for i in s.iter() {
                    let r = index_of(basis, s.without(i).with(v));
                    let term = if removal_sign(s, i) { 1 } else { field.neg(1) };
                    m.set(r, c, field.add(m.get(r, c), term));
                }
            }
            m
        })
        .collect();
    Ok(GradedMap { field, bases, blocks })
}

/// `D(e_S) = (∏_{i∈S} α_i)^{-1} e_S`; every weight on a vertex must be nonzero.
pub fn sarkaria_d(k: &SimplicialComplex, alpha: &[u64], field: Fp) -> Result<GradedMap> {
    for v in k.vertices() {
        if alpha.get(v as usize - 1).is_none_or(|&a| a % field.p() == 0) {
            return Err(Error::ZeroWeight(v));
        }
    }
    let bases = bases(k);
    let blocks = bases
        .iter()
        .map(|basis| {
            let mut m = PrimeFieldMatrix::zeros(field, basis.len(), basis.len());
            for (c, &s) in basis.iter().enumerate() {
                let prod = s.iter().fold(1, |acc, i| field.mul(acc, alpha[i as usize - 1]));
                m.set(c, c, field.inv(prod));
            }
            m
        })
        .collect();
    Ok(GradedMap { field, bases, blocks })
}

/// Whether `left ∘ before = after ∘ right` holds for every size, where
/// `before`/`after` are contraction operators and `left`/`right` are
/// degree-preserving maps.
pub fn intertwines(left: &GradedMap, before: &GradedMap, after: &GradedMap, right: &GradedMap) -> bool {
    (1..left.blocks.len()).all(|s| {
        let lhs = left.blocks[s - 1].mul(&before.blocks[s]).expect("shapes");
        let rhs = after.blocks[s].mul(&right.blocks[s]).expect("shapes");
        lhs == rhs
    })
}

/// Verifies that `U` and `D` are invertible chain maps
/// `(∧K, e_v⌊) → (∧K, e⌊) → (∧K, f⌊)` with `f = Σ α_i e_i`.
pub fn sarkaria_identities(k: &SimplicialComplex, v: u32, alpha: &[u64], field: Fp) -> Result<bool> {
    let u = sarkaria_u(k, v, field)?;
    let d = sarkaria_d(k, alpha, field)?;
    let ev = contraction_operator(k, field, &unit(k, v));
    let e = contraction_operator(k, field, &all_ones(k));
    let f = contraction_operator(k, field, alpha);
    let invertible = |g: &GradedMap| g.blocks.iter().all(|b| b.rank() == b.rows());
    Ok(intertwines(&u, &ev, &e, &u) && intertwines(&d, &e, &f, &d) && invertible(&u) && invertible(&d))
}

/// `Δᵉ(cone K) = cone(Δᵉ(K))` for one complex.
pub fn cone_commutes(k: &SimplicialComplex, cfg: &GenericConfig) -> Result<bool> {
    let lhs = exterior_shift(&cone(k), cfg)?.shifted;
    let inner = exterior_shift(k, cfg)?.shifted;
    let rhs = join(&point(), &inner);
    Ok(lhs.facets() == rhs.facets())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::generators::{random_complex, random_near_cone};
    use crate::linalg::DEFAULT_PRIME;

    fn cfg() -> GenericConfig {
        GenericConfig::default()
    }

    #[test]
    fn cones_are_near_cones() {
        let c = cone(&cycle(5));
        assert!(is_near_cone(&c, 1));
        assert!(!is_near_cone(&cycle(5), 1));
        assert!(near_cone_decomposition_check(&c, 1, &cfg()).unwrap());
        assert_eq!(near_cone_decomposition_check(&cycle(5), 1, &cfg()), Err(Error::NotNearCone(1)));
    }

    #[test]
    fn u_fixes_faces_through_v() {
        let field = Fp::new(DEFAULT_PRIME).unwrap();
        let k = cone(&boundary_simplex(2));
        let u = sarkaria_u(&k, 1, field).unwrap();
        for (s, basis) in u.bases.iter().enumerate() {
            for (c, f) in basis.iter().enumerate() {
                if f.contains(1) {
                    let col: Vec<u64> = (0..basis.len()).map(|r| u.blocks[s].get(r, c)).collect();
                    let expect: Vec<u64> = (0..basis.len()).map(|r| (r == c) as u64).collect();
                    assert_eq!(col, expect);
                }
            }
        }
    }

    #[test]
    fn d_is_identity_for_unit_weights() {
        let field = Fp::new(DEFAULT_PRIME).unwrap();
        let k = cone(&boundary_simplex(2));
        let d = sarkaria_d(&k, &all_ones(&k), field).unwrap();
        assert!(d.blocks.iter().all(|b| *b == PrimeFieldMatrix::identity(field, b.rows())));
        assert_eq!(sarkaria_d(&k, &[1, 0, 2, 3], field).err(), Some(Error::ZeroWeight(2)));
    }

    #[test]
    fn chain_map_identities_on_cone() {
        let field = Fp::new(DEFAULT_PRIME).unwrap();
        let k = cone(&boundary_simplex(2));
        assert!(sarkaria_identities(&k, 1, &[3, 5, 7, 11], field).unwrap());
        let near = random_near_cone(4, 6, 4);
        assert!(sarkaria_identities(&near, 1, &[2, 3, 4, 5, 6, 7], field).unwrap());
    }

    #[test]
    fn random_near_cones_decompose() {
        for seed in 0..5 {
            let k = random_near_cone(seed, 7, 4);
            assert!(near_cone_decomposition_check(&k, 1, &cfg()).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn shifted_complexes_are_full_near_cones() {
        let delta = exterior_shift(&octahedron(), &cfg()).unwrap().shifted;
        let vs: Vec<u32> = (1..=6).collect();
        assert!(i_near_cone_decomposition_check(&delta, &vs, &cfg()).unwrap());
    }

    #[test]
    fn cone_and_idempotence() {
        for seed in 0..4 {
            let k = random_complex(seed, 6, 3, 0.5);
            assert!(cone_commutes(&k, &cfg()).unwrap());
            let d = exterior_shift(&k, &cfg()).unwrap().shifted;
            assert_eq!(exterior_shift(&d, &cfg()).unwrap().shifted, d);
        }
    }
}
