//! Constructions: joins, cones, sums, subdivisions and named families.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{k_subsets, Face};

/// The full simplex on `1..=m`.
pub fn complete_complex(m: u32) -> SimplicialComplex {
    SimplicialComplex::from_faces(m, [Face::range(1, m)])
}

/// `∂σ^d`: all proper subsets of `1..=d+1`.
pub fn boundary_simplex(d: u32) -> SimplicialComplex {
    SimplicialComplex::from_faces(d + 1, k_subsets(d + 1, d as usize))
}

pub fn point() -> SimplicialComplex {
    complete_complex(1)
}

/// `m` isolated vertices.
pub fn points(m: u32) -> SimplicialComplex {
    SimplicialComplex::from_faces(m, k_subsets(m, 1))
}

pub fn complete_graph(m: u32) -> SimplicialComplex {
    SimplicialComplex::from_faces(m, k_subsets(m, 2).chain(k_subsets(m, 1)))
}

/// `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: u32, b: u32) -> SimplicialComplex {
    let edges = (1..=a).flat_map(|i| (a + 1..=a + b).map(move |j| Face::from_vertices([i, j])));
    SimplicialComplex::from_faces(a + b, edges.chain(k_subsets(a + b, 1)))
}

/// The cycle `1-2-...-m-1` (`m ≥ 3`).
pub fn cycle(m: u32) -> SimplicialComplex {
    let edges = (1..=m).map(|i| Face::from_vertices([i, i % m + 1]));
    SimplicialComplex::from_faces(m, edges)
}

/// The octahedron boundary `{1,4} * {2,5} * {3,6}`.
pub fn octahedron() -> SimplicialComplex {
    let mut facets = Vec::new();
    for a in [1, 4] {
        for b in [2, 5] {
            for c in [3, 6] {
                facets.push(Face::from_vertices([a, b, c]));
            }
        }
    }
    SimplicialComplex::from_faces(6, facets)
}

/// The 1-skeleton of the octahedron.
pub fn octahedron_graph() -> SimplicialComplex {
    octahedron().skeleton(1)
}

/// The Petersen graph: outer cycle `1..5`, inner pentagram `6..10`.
pub fn petersen() -> SimplicialComplex {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i + 1, (i + 1) % 5 + 1));
        edges.push((i + 1, i + 6));
        edges.push((i + 6, (i + 2) % 5 + 6));
    }
    SimplicialComplex::graph(10, &edges).expect("valid labels")
}

/// Two disjoint edges `{1,2}` and `{3,4}`.
pub fn two_disjoint_edges() -> SimplicialComplex {
    SimplicialComplex::from_faces(4, [Face::from_vertices([1, 2]), Face::from_vertices([3, 4])])
}

/// `K * L`, with `L` relabelled onto `n_K+1..=n_K+n_L`.
pub fn join(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    let shifted = l.shift_labels(k.n());
    let mut gens = Vec::with_capacity(k.facets().len() * shifted.facets().len());
    for &a in k.facets() {
        for &b in shifted.facets() {
            gens.push(a.union(b));
        }
    }
    SimplicialComplex::from_faces(k.n() + l.n(), gens)
}

/// Cone with apex `1`; the base is relabelled by `+1`.
pub fn cone(k: &SimplicialComplex) -> SimplicialComplex {
    join(&point(), k)
}

/// Suspension with apexes `1` and `2`; the base is relabelled by `+2`.
pub fn suspension(k: &SimplicialComplex) -> SimplicialComplex {
    join(&points(2), k)
}

/// `K ⊔ L`, with `L` relabelled onto `n_K+1..=n_K+n_L`.
pub fn disjoint_union(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    let shifted = l.shift_labels(k.n());
    let gens = k.facets().iter().chain(shifted.facets()).copied();
    SimplicialComplex::from_faces(k.n() + l.n(), gens)
}

/// `H(d)`: all subsets of `1..=2d+1` with at most `d` elements.
pub fn h_d_skeleton(d: u32) -> SimplicialComplex {
    SimplicialComplex::from_faces(2 * d + 1, k_subsets(2 * d + 1, d as usize))
}

/// Gale evenness for the cyclic polytope on `1 < ... < n`: every maximal run
/// of consecutive elements avoiding both `1` and `n` has even length.
pub fn is_gale_even(s: Face, n: u32) -> bool {
    let mut run = 0u32;
    let mut touches_end = false;
    for v in 1..=n + 1 {
        if v <= n && s.contains(v) {
            run += 1;
            touches_end |= v == 1 || v == n;
        } else {
            if run % 2 == 1 && !touches_end {
                return false;
            }
            run = 0;
            touches_end = false;
        }
    }
    true
}

/// Boundary of the cyclic `d`-polytope with `n` vertices.
pub fn cyclic_boundary(d: u32, n: u32) -> Result<SimplicialComplex> {
    if d < 2 || n < d + 1 {
        return Err(Error::BadParameters(format!("cyclic_boundary needs d >= 2 and n >= d+1, got d={d}, n={n}")));
    }
    let facets = k_subsets(n, d as usize).filter(|&s| is_gale_even(s, n));
    Ok(SimplicialComplex::from_faces(n, facets))
}

/// `T_{d-k} = {k+2, ..., d-k} ∪ {d-k+2, ..., d+2}` for `0 ≤ k ≤ ⌊d/2⌋`.
pub fn t_set(d: u32, k: u32) -> Result<Face> {
    if k > d / 2 {
        return Err(Error::BadParameters(format!("t_set needs k <= d/2, got d={d}, k={k}")));
    }
    Ok(Face::range(k + 2, d - k).union(Face::range(d - k + 2, d + 2)))
}

/// The upper-bound complex `Δ(d,n)`: generated by the `d`-subsets `S` of
/// `1..=n` with `k ∉ S ⇒ [k+1, d-k+2] ⊆ S` for every `k ≥ 1`.
pub fn ubt_complex(d: u32, n: u32) -> Result<SimplicialComplex> {
    if d < 1 || n < d + 1 {
        return Err(Error::BadParameters(format!("ubt_complex needs n >= d+1 >= 2, got d={d}, n={n}")));
    }
    let facets = k_subsets(n, d as usize)
        .filter(|&s| (1..=n).all(|k| s.contains(k) || Face::range(k + 1, (d + 2).saturating_sub(k)).is_subset(s)));
    Ok(SimplicialComplex::from_faces(n, facets))
}

/// `(K ∪ L') ∖ {σ}` where `L'` is `L` with `σ_L` glued onto `σ_K`.
///
/// `matching` lists pairs `(vertex of σ_L, vertex of σ_K)`. The remaining
/// vertices of `L` are relabelled onto `n_K+1, n_K+2, ...` in order.
pub fn connected_sum(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    sigma_k: Face,
    sigma_l: Face,
    matching: &[(u32, u32)],
) -> Result<SimplicialComplex> {
    for (c, s) in [(k, sigma_k), (l, sigma_l)] {
        if !c.facets().contains(&s) {
            return Err(Error::NotAFacet(s));
        }
    }
    if sigma_k.len() != sigma_l.len() || matching.len() != sigma_k.len() {
        return Err(Error::SizeMismatch(format!(
            "facets {sigma_k} and {sigma_l} with a matching of {} pairs",
            matching.len()
        )));
    }
    let mut map: HashMap<u32, u32> = HashMap::new();
    let mut image = Face::EMPTY;
    for &(a, b) in matching {
        if !sigma_l.contains(a) || !sigma_k.contains(b) || image.contains(b) || map.contains_key(&a) {
            return Err(Error::BadParameters(format!(
                "matching {matching:?} is not a bijection {sigma_l} -> {sigma_k}"
            )));
        }
        map.insert(a, b);
        image = image.with(b);
    }
    let mut next = k.n();
    for v in l.vertices() {
        map.entry(v).or_insert_with(|| {
            next += 1;
            next
        });
    }
    if next > crate::face::MAX_VERTEX {
        return Err(Error::TooManyVertices(next));
    }
    let glued = l.map_vertices(next, |v| map[&v]);
    let union = k.with_ground(next).union(&glued);
    Ok(union.filter(|s| s != sigma_k))
}

/// `(K ∖ st(T)) ∪ (v_T * ∂T * lk(T))` with the new vertex `v_T = n+1`.
pub fn stellar_subdivision(k: &SimplicialComplex, t: Face) -> Result<SimplicialComplex> {
    if t.is_empty() || !k.contains(t) {
        return Err(Error::FaceNotInComplex(t));
    }
    let v = k.n() + 1;
    if v > crate::face::MAX_VERTEX {
        return Err(Error::TooManyVertices(v));
    }
    let link = k.link_unchecked(t);
    let mut gens: Vec<Face> = k.faces().filter(|s| !t.is_subset(*s)).collect();
    for &l in link.facets() {
        for b in t.facets_of_boundary() {
            gens.push(l.union(b).with(v));
        }
    }
    Ok(SimplicialComplex::from_faces(v, gens))
}

/// The stacked `(d-1)`-sphere `S(d,n)`: start from `∂σ^d` and repeatedly
/// subdivide the most recently created facet, where the facets created in one
/// step are taken in lexicographic order.
pub fn stacked_sphere(d: u32, n: u32) -> Result<SimplicialComplex> {
    if d < 1 || n < d + 1 {
        return Err(Error::BadParameters(format!("stacked_sphere needs n >= d+1 >= 2, got d={d}, n={n}")));
    }
    let mut k = boundary_simplex(d);
    let mut last = Face::range(2, d + 1);
    for v in d + 2..=n {
        k = stellar_subdivision(&k, last)?;
        last = last.without(last.min().expect("nonempty facet")).with(v);
    }
    Ok(k)
}

/// The shifted complex on `1..=n` generated by `generators` under `≤_P`
/// (componentwise order of sorted sets of equal size) and inclusion.
pub fn shifted_span(n: u32, generators: &[Face]) -> SimplicialComplex {
    let gens =
        generators.iter().flat_map(|&g| k_subsets(n, g.len()).filter(move |t| t.le_product(g))).collect::<Vec<_>>();
    SimplicialComplex::from_faces(n, gens)
}

/// All triangles on `1..=7` except `127, 137, 237`, plus `128, 138, 238,
/// 178, 278, 378`. Contracting `8 ↦ 7` is admissible and gives `H(3)`.
pub fn h3_minor_example() -> SimplicialComplex {
    let removed = [[1, 2, 7], [1, 3, 7], [2, 3, 7]].map(Face::from_vertices);
    let mut gens: Vec<Face> = k_subsets(7, 3).filter(|t| !removed.contains(t)).collect();
    for t in [[1, 2, 8], [1, 3, 8], [2, 3, 8], [1, 7, 8], [2, 7, 8], [3, 7, 8]] {
        gens.push(Face::from_vertices(t));
    }
    SimplicialComplex::from_faces(8, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vectors::{f_vector, h_vector};

    fn f(v: &[u32]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    #[test]
    fn joins_and_cones() {
        assert_eq!(join(&points(2), &points(2)), cycle(4).map_vertices(4, |v| [0, 1, 3, 2, 4][v as usize]));
        assert_eq!(cone(&SimplicialComplex::void(0)), point());
        let s0 = boundary_simplex(1);
        assert_eq!(join(&s0, &s0).face_counts(), vec![1, 4, 4]);
    }

    #[test]
    fn named_families() {
        assert_eq!(boundary_simplex(3).face_counts(), vec![1, 4, 6, 4]);
        assert_eq!(complete_bipartite(3, 3).edges().len(), 9);
        assert_eq!(h_d_skeleton(1), points(3));
        assert_eq!(h_d_skeleton(2), complete_graph(5));
        assert_eq!(h_d_skeleton(3).face_counts(), vec![1, 7, 21, 35]);
        assert_eq!(petersen().edges().len(), 15);
        assert!((1..=10).all(|v| petersen().degree(v) == 3));
    }

    #[test]
    fn cyclic_polytopes() {
        assert_eq!(cyclic_boundary(3, 6).unwrap().face_counts(), vec![1, 6, 12, 8]);
        assert_eq!(cyclic_boundary(2, 5).unwrap(), cycle(5));
        assert_eq!(cyclic_boundary(3, 4).unwrap(), boundary_simplex(3));
        assert!(cyclic_boundary(1, 4).is_err());
    }

    #[test]
    fn upper_bound_complex() {
        assert_eq!(t_set(2, 0).unwrap(), f(&[2, 4]));
        assert_eq!(t_set(2, 1).unwrap(), f(&[3, 4]));
        assert!(t_set(2, 2).is_err());
        let u = ubt_complex(2, 6).unwrap();
        let mut expected: Vec<Face> = (2..=6).map(|j| f(&[1, j])).collect();
        expected.push(f(&[2, 3]));
        assert_eq!(u, SimplicialComplex::from_faces(6, expected));
    }

    #[test]
    fn ubt_avoids_t_sets_and_is_maximal() {
        for (d, n) in [(2u32, 6u32), (3, 7), (4, 8)] {
            let u = ubt_complex(d, n).unwrap();
            let ts: Vec<Face> = (0..=d / 2).map(|k| t_set(d, k).unwrap()).collect();
            assert!(ts.iter().all(|t| !u.contains(*t)));
            if d <= 3 {
                for s in k_subsets(n, d as usize) {
                    if !u.contains(s) {
                        assert!(ts.iter().any(|t| t.is_subset(s) || shifted_below(*t, s)));
                    }
                }
            }
        }
    }

    // Adding a non-facet `S` to a shifted complex forces every `<_P`-smaller
    // set in, so maximality means some forbidden set lies below a subset of `S`.
    fn shifted_below(t: Face, s: Face) -> bool {
        s.subsets().any(|sub| sub.len() == t.len() && t.le_product(sub))
    }

    #[test]
    fn connected_sums() {
        let a = boundary_simplex(3);
        let sigma = f(&[2, 3, 4]);
        let sum = connected_sum(&a, &a, sigma, sigma, &[(2, 2), (3, 3), (4, 4)]).unwrap();
        assert_eq!(sum, stacked_sphere(3, 5).unwrap());
        assert_eq!(h_vector(&sum).0, vec![1, 2, 2, 1]);
        assert_eq!(sum.num_vertices(), 5);
        assert!(connected_sum(&a, &a, f(&[1, 2]), sigma, &[]).is_err());
        assert!(connected_sum(&a, &a, sigma, sigma, &[(2, 2), (3, 2), (4, 4)]).is_err());
    }

    #[test]
    fn stellar_subdivisions() {
        let tri = boundary_simplex(2);
        let sub = stellar_subdivision(&tri, f(&[1, 2])).unwrap();
        assert_eq!(sub.edges(), &[f(&[1, 3]), f(&[1, 4]), f(&[2, 3]), f(&[2, 4])]);
        let tet = boundary_simplex(3);
        let s = stellar_subdivision(&tet, f(&[2, 3, 4])).unwrap();
        assert_eq!(s, stacked_sphere(3, 5).unwrap());
        assert_eq!(s.num_vertices(), 5);
    }

    #[test]
    fn stacked_spheres() {
        assert_eq!(stacked_sphere(3, 4).unwrap(), boundary_simplex(3));
        assert_eq!(f_vector(&stacked_sphere(3, 6).unwrap()).0, vec![1, 6, 12, 8]);
        for n in 5..=9 {
            let s = stacked_sphere(3, n).unwrap();
            assert_eq!(s.faces_of_size(3).len() as u32, 2 * n - 4);
            assert_eq!(s.faces_of_size(2).len() as u32, 3 * n - 6);
        }
        assert!(stacked_sphere(3, 3).is_err());
    }
}
