//! Seeded random families used by tests, benchmarks and the verify harness.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::construct::{boundary_simplex, stellar_subdivision};
use crate::face::Face;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_face<R: Rng>(rng: &mut R, n: u32, size: usize) -> Face {
    let mut vs: Vec<u32> = (1..=n).collect();
    vs.shuffle(rng);
    vs.into_iter().take(size).collect()
}

/// A complex on `1..=n` generated by random faces of size `1..=max_size`.
/// Each generator size is drawn uniformly and `density` controls how many
/// generators are drawn relative to `n`.
pub fn random_complex(seed: u64, n: u32, max_size: usize, density: f64) -> SimplicialComplex {
    let mut r = rng(seed);
    let count = 1 + (density * n as f64 * r.gen_range(0.5..1.5)).round() as usize;
    let gens: Vec<Face> = (0..count)
        .map(|_| {
            let size = r.gen_range(1..=max_size.min(n as usize));
            random_face(&mut r, n, size)
        })
        .collect();
    SimplicialComplex::from_faces(n, gens)
}

/// A pure complex with `count` random facets of size `size`.
pub fn random_pure_complex(seed: u64, n: u32, size: usize, count: usize) -> SimplicialComplex {
    let mut r = rng(seed);
    let gens: Vec<Face> = (0..count.max(1)).map(|_| random_face(&mut r, n, size)).collect();
    SimplicialComplex::from_faces(n, gens)
}

/// Erdős–Rényi graph `G(n, p)` containing every vertex of `1..=n`.
pub fn random_graph(seed: u64, n: u32, p: f64) -> SimplicialComplex {
    let mut r = rng(seed);
    let mut gens: Vec<Face> = (1..=n).map(Face::singleton).collect();
    for a in 1..=n {
        for b in a + 1..=n {
            if r.gen_bool(p) {
                gens.push(Face::from_vertices([a, b]));
            }
        }
    }
    SimplicialComplex::from_faces(n, gens)
}

/// A random triangulated 2-sphere on `n ≥ 4` vertices: stacked subdivisions
/// of random facets followed by random edge flips.
pub fn random_2_sphere(seed: u64, n: u32) -> SimplicialComplex {
    assert!(n >= 4);
    let mut r = rng(seed);
    let mut k = boundary_simplex(3);
    while (k.num_vertices() as u32) < n {
        let facets = k.facets();
        let t = facets[r.gen_range(0..facets.len())];
        k = stellar_subdivision(&k, t).expect("facet of the complex");
    }
    for _ in 0..2 * n {
        let edges = k.edges();
        let e = edges[r.gen_range(0..edges.len())];
        if let Some(flipped) = flip_edge(&k, e) {
            k = flipped;
        }
    }
    k
}

/// Replaces the two triangles on edge `ab` by the two on the opposite edge
/// `cd`, when `cd` is not already an edge.
pub fn flip_edge(k: &SimplicialComplex, e: Face) -> Option<SimplicialComplex> {
    let link = k.link(e).ok()?;
    let opposite: Vec<Face> = link.faces_of_size(1).to_vec();
    if opposite.len() != 2 {
        return None;
    }
    let cd = opposite[0].union(opposite[1]);
    if k.contains(cd) {
        return None;
    }
    let mut gens: Vec<Face> = k.facets().iter().copied().filter(|f| !e.is_subset(*f)).collect();
    for v in e.iter() {
        gens.push(cd.with(v));
    }
    Some(SimplicialComplex::from_faces(k.n(), gens))
}

/// The graph of a random planar triangulation on `n` vertices.
pub fn random_planar_triangulation(seed: u64, n: u32) -> SimplicialComplex {
    random_2_sphere(seed, n).skeleton(1)
}

/// A near cone with respect to vertex `1`: a random complex on `2..=n`
/// (plus possibly `1`) together with `{1} ∪ S ∖ j` for all `j ∈ S ∈ K`.
pub fn random_near_cone(seed: u64, n: u32, max_size: usize) -> SimplicialComplex {
    let base = random_complex(seed, n, max_size, 0.6);
    let mut gens: Vec<Face> = base.faces().collect();
    for s in base.faces() {
        for j in s.iter() {
            gens.push(s.without(j).with(1));
        }
    }
    SimplicialComplex::from_faces(n, gens)
}
