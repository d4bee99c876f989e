//! Contractions, admissibility and the Link Condition, minor search and
//! strongly edge decomposable spheres.

mod iso;
mod search;
mod sed;

pub use iso::{find_isomorphism, invariant_hash, is_isomorphic};
pub use search::{has_clique_minor, is_minor, MinorStep, MinorWitness};
pub use sed::{is_strongly_edge_decomposable, SedTrace};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

fn require_pair(k: &SimplicialComplex, u: u32, v: u32) -> Result<()> {
    for w in [u, v] {
        if !k.vertex_set().contains(w) {
            return Err(Error::VertexMissing(w));
        }
    }
    if u == v {
        return Err(Error::BadParameters(format!("cannot identify vertex {u} with itself")));
    }
    Ok(())
}

/// `K' = {T : u ∉ T ∈ K} ∪ {(T \ u) ∪ v : u ∈ T ∈ K}`, on the same ground set.
pub fn contract(k: &SimplicialComplex, u: u32, v: u32) -> Result<SimplicialComplex> {
    require_pair(k, u, v)?;
    Ok(contract_unchecked(k, u, v))
}

pub(crate) fn contract_unchecked(k: &SimplicialComplex, u: u32, v: u32) -> SimplicialComplex {
    k.map_vertices(k.n(), |w| if w == u { v } else { w })
}

/// `lk(u) ∩ lk(v)` restricted to dimension `≤ top`, compared with `lk({u,v})`.
/// A non-edge has the empty family as its link, which only the
/// `(-2)`-skeleton matches.
fn links_agree(k: &SimplicialComplex, u: u32, v: u32, top: Option<i32>) -> bool {
    let uv = Face::from_vertices([u, v]);
    let lu = k.link_unchecked(Face::singleton(u));
    let lv = k.link_unchecked(Face::singleton(v));
    let meet = lu.intersection(&lv);
    let keep = |f: Face| top.is_none_or(|t| f.dim() <= t);
    if !k.contains(uv) {
        return meet.faces().all(|f| !keep(f));
    }
    let luv = k.link_unchecked(uv);
    let agree = meet.faces().filter(|&f| keep(f)).all(|f| luv.contains(f));
    agree
}

/// `(lk(u) ∩ lk(v))_{dim K − 2} = lk({u,v})`: the contraction `u ↦ v`
/// creates no new face of dimension `≤ dim K`.
pub fn is_admissible(k: &SimplicialComplex, u: u32, v: u32) -> Result<bool> {
    require_pair(k, u, v)?;
    Ok(links_agree(k, u, v, Some(k.dim() - 2)))
}

/// The local variant restricting to dimension `min(dim lk u, dim lk v) − 1`.
pub fn is_admissible_weak(k: &SimplicialComplex, u: u32, v: u32) -> Result<bool> {
    require_pair(k, u, v)?;
    let du = k.link_unchecked(Face::singleton(u)).dim();
    let dv = k.link_unchecked(Face::singleton(v)).dim();
    Ok(links_agree(k, u, v, Some(du.min(dv) - 1)))
}

/// Missing-face form of admissibility: no missing face of dimension
/// `≤ dim K` contains `{u, v}`.
pub fn is_admissible_by_missing_faces(k: &SimplicialComplex, u: u32, v: u32) -> Result<bool> {
    require_pair(k, u, v)?;
    let uv = Face::from_vertices([u, v]);
    Ok(!k.missing_faces().into_iter().any(|m| uv.is_subset(m) && m.dim() <= k.dim()))
}

/// The Link Condition `lk(u) ∩ lk(v) = lk({u, v})`.
pub fn satisfies_link_condition(k: &SimplicialComplex, u: u32, v: u32) -> Result<bool> {
    require_pair(k, u, v)?;
    Ok(links_agree(k, u, v, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::generators::{random_2_sphere, random_complex};
    use crate::vectors::h_vector;
    use proptest::prelude::*;

    fn f(v: &[u32]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    #[test]
    fn contraction_examples() {
        let c4 = cycle(4);
        let t = contract(&c4, 2, 1).unwrap();
        assert_eq!(t.facets(), complete_graph(4).delete_vertex(2).facets());
        let edge = complete_graph(2);
        assert_eq!(contract(&edge, 1, 2).unwrap().facets(), &[f(&[2])]);
        assert_eq!(contract(&c4, 1, 1), Err(Error::BadParameters("cannot identify vertex 1 with itself".into())));
        assert_eq!(contract(&c4, 5, 1).err(), Some(Error::VertexMissing(5)));
    }

    #[test]
    fn admissibility_examples() {
        let c4 = cycle(4);
        assert!(is_admissible(&c4, 1, 2).unwrap());
        assert!(satisfies_link_condition(&c4, 1, 2).unwrap());
        let oct = octahedron();
        assert!(satisfies_link_condition(&oct, 1, 2).unwrap());
        let meet = oct.link(f(&[1])).unwrap().intersection(&oct.link(f(&[2])).unwrap());
        assert_eq!(meet, oct.link(f(&[1, 2])).unwrap());
        assert!(!is_admissible(&oct, 1, 4).unwrap());
        assert!(!is_admissible_by_missing_faces(&oct, 1, 4).unwrap());
        // {1,2,3} is a missing triangle of a 2-dimensional complex.
        let k = SimplicialComplex::from_facets(4, [vec![1, 2], vec![1, 3], vec![2, 3, 4]]).unwrap();
        assert!(!is_admissible(&k, 1, 2).unwrap());
        assert!(is_admissible(&cycle(3), 1, 2).unwrap());
    }

    #[test]
    fn example_contraction_yields_h3() {
        let k = h3_minor_example();
        assert!(is_admissible(&k, 8, 7).unwrap());
        assert_eq!(contract(&k, 8, 7).unwrap(), h_d_skeleton(3));
    }

    #[test]
    fn contraction_never_grows_f() {
        for seed in 0..20 {
            let k = random_complex(seed, 7, 4, 0.5);
            let vs = k.vertices();
            if vs.len() < 2 {
                continue;
            }
            let kc = contract(&k, vs[0], vs[1]).unwrap();
            let (a, b) = (k.face_counts(), kc.face_counts());
            assert!(b.iter().zip(&a).all(|(x, y)| x <= y));
        }
    }

    #[test]
    fn h_contraction_identity_on_spheres() {
        for seed in 0..10 {
            let k = random_2_sphere(seed, 8);
            for e in k.edges().to_vec() {
                let (u, v) = (e.min().unwrap(), e.max().unwrap());
                if !satisfies_link_condition(&k, u, v).unwrap() {
                    continue;
                }
                let h = h_vector(&k).0;
                let hc = h_vector(&contract(&k, u, v).unwrap()).0;
                let hl = h_vector(&k.link(e).unwrap()).0;
                for i in 0..h.len() {
                    let shifted = if i >= 1 { hl.get(i - 1).copied().unwrap_or(0) } else { 0 };
                    assert_eq!(h[i], hc[i] + shifted, "seed {seed} edge {e}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn admissibility_formulations_agree(seed in 0u64..400, a in 1u32..=7, b in 1u32..=7) {
            let k = random_complex(seed, 7, 4, 0.5);
            prop_assume!(a != b && k.vertex_set().contains(a) && k.vertex_set().contains(b));
            prop_assert_eq!(is_admissible(&k, a, b).unwrap(), is_admissible_by_missing_faces(&k, a, b).unwrap());
            if satisfies_link_condition(&k, a, b).unwrap() {
                prop_assert!(is_admissible(&k, a, b).unwrap());
            }
        }
    }
}
