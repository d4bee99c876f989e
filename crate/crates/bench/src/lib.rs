//! Named workloads shared by the benchmarks in `benches/`.

use shiftlab::construct::{complete_bipartite, cyclic_boundary, h_d_skeleton, octahedron, stacked_sphere};
use shiftlab::generators::{random_2_sphere, random_complex, random_graph};
use shiftlab::SimplicialComplex;

/// Complexes for the shifting benchmarks, smallest first.
pub fn shifting_workloads() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("k33", complete_bipartite(3, 3)),
        ("octahedron", octahedron()),
        ("stacked_3_8", stacked_sphere(3, 8).expect("valid parameters")),
        ("random_8", random_complex(1, 8, 4, 0.8)),
        ("sphere_10", random_2_sphere(3, 10)),
        ("cyclic_4_8", cyclic_boundary(4, 8).expect("valid parameters")),
    ]
}

/// Graphs for rigidity and minor searches.
pub fn graph_workloads() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("gnp_8", random_graph(2, 8, 0.5)),
        ("gnp_10", random_graph(5, 10, 0.5)),
        ("sphere_graph_10", random_2_sphere(4, 10).skeleton(1)),
    ]
}

/// Complexes for the obstruction benchmarks with the degree to test.
pub fn obstruction_workloads() -> Vec<(&'static str, SimplicialComplex, usize)> {
    vec![("h2", h_d_skeleton(2), 3), ("h3", h_d_skeleton(3), 5)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_well_formed() {
        assert!(shifting_workloads().iter().all(|(_, k)| k.dim() >= 1));
        assert!(graph_workloads().iter().all(|(_, g)| g.dim() == 1));
        assert!(obstruction_workloads().iter().all(|(_, k, m)| *m as i32 <= 2 * k.dim() + 2));
    }
}
