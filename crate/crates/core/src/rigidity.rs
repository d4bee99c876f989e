//! Generic rigidity of graphs through the rigidity matrix over `F_p`.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{k_subsets, Face};
use crate::lefschetz::{rigidity_links, RigidityVerdict};
use crate::linalg::{stable_generic_run, Fp, GenericConfig, GenericMatrixSource, PrimeFieldMatrix};

/// The `dn × |E|` rigidity matrix of a seeded embedding `f(v) = (α_{1v}, ..., α_{dv})`.
#[derive(Debug, Clone)]
pub struct RigidityMatrix {
    pub d: u32,
    pub n: u32,
    pub edges: Vec<Face>,
    /// Stored as one row per edge (the transpose of the matrix).
    pub columns: PrimeFieldMatrix,
}

impl RigidityMatrix {
    /// Built on vertices `1..=n` from the first `d` rows of `source`.
    pub fn new(source: &GenericMatrixSource, n: u32, d: u32, edges: &[Face]) -> Self {
        let field = source.field();
        let width = (d * n) as usize;
        let cols: Vec<Vec<u64>> = edges
            .iter()
            .map(|&e| {
                let (v, u) = (e.min().expect("edge"), e.max().expect("edge"));
                let mut col = vec![0u64; width];
                for i in 1..=d {
                    let diff = field.sub(source.alpha(i, v), source.alpha(i, u));
                    col[((v - 1) * d + i - 1) as usize] = diff;
                    col[((u - 1) * d + i - 1) as usize] = field.neg(diff);
                }
                col
            })
            .collect();
        let columns = PrimeFieldMatrix::from_rows(field, width, &cols).expect("uniform width");
        RigidityMatrix { d, n, edges: edges.to_vec(), columns }
    }

    pub fn rank(&self) -> usize {
        self.columns.rank()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RigidityRanks {
    pub rank: usize,
    pub complete_rank: usize,
    pub edges: usize,
}

impl RigidityRanks {
    pub fn rigid(&self) -> bool {
        self.rank == self.complete_rank
    }

    pub fn stress_free(&self) -> bool {
        self.rank == self.edges
    }

    pub fn stress_space_dim(&self) -> usize {
        self.edges - self.rank
    }
}

fn require_graph(g: &SimplicialComplex, d: u32) -> Result<()> {
    if g.dim() > 1 {
        return Err(Error::BadParameters(format!("expected a graph, got dimension {}", g.dim())));
    }
    if d == 0 {
        return Err(Error::BadParameters("d must be positive".into()));
    }
    Ok(())
}

fn ranks_once(g: &SimplicialComplex, d: u32, field: Fp, seed: u64) -> RigidityRanks {
    let (compact, _) = g.compact();
    let n = compact.n();
    let source = GenericMatrixSource::new(field, seed, n.max(d).max(1) as usize);
    let complete: Vec<Face> = k_subsets(n, 2).collect();
    RigidityRanks {
        rank: RigidityMatrix::new(&source, n, d, compact.edges()).rank(),
        complete_rank: RigidityMatrix::new(&source, n, d, &complete).rank(),
        edges: compact.edges().len(),
    }
}

/// Ranks of `Rig(G, f)` and `Rig(K_V, f)` for the same generic embedding.
pub fn rigidity_ranks(g: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<RigidityRanks> {
    require_graph(g, d)?;
    let field = cfg.field()?;
    Ok(stable_generic_run(cfg, |seed| Ok(ranks_once(g, d, field, seed)))?.value)
}

pub fn rigidity_rank(g: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<usize> {
    rigidity_ranks(g, d, cfg).map(|r| r.rank)
}

pub fn is_generically_rigid(g: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<bool> {
    rigidity_ranks(g, d, cfg).map(|r| r.rigid())
}

pub fn is_stress_free(g: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<bool> {
    rigidity_ranks(g, d, cfg).map(|r| r.stress_free())
}

pub fn stress_space_dim(g: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<usize> {
    rigidity_ranks(g, d, cfg).map(|r| r.stress_space_dim())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeeReport {
    pub d: u32,
    pub ranks: RigidityRanks,
    pub by_matrix: RigidityVerdict,
    pub by_shifting: RigidityVerdict,
}

/// Runs the rank oracle and the `Δˢ` membership oracle; any disagreement is an error.
pub fn lee_crosscheck(g: &SimplicialComplex, d: u32, cfg: &GenericConfig) -> Result<LeeReport> {
    let ranks = rigidity_ranks(g, d, cfg)?;
    let by_matrix = RigidityVerdict { rigid: ranks.rigid(), stress_free: ranks.stress_free() };
    let by_shifting = rigidity_links(g, d, cfg)?;
    if by_matrix != by_shifting {
        return Err(Error::Disagreement(format!(
            "rigidity of {g} in dimension {d}: matrix {by_matrix:?}, shifting {by_shifting:?}"
        )));
    }
    Ok(LeeReport { d, ranks, by_matrix, by_shifting })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::generators::{random_graph, random_planar_triangulation};

    fn cfg() -> GenericConfig {
        GenericConfig::default()
    }

    #[test]
    fn complete_graph_ranks() {
        assert_eq!(rigidity_rank(&complete_graph(6), 3, &cfg()).unwrap(), 12);
        assert_eq!(rigidity_rank(&complete_graph(3), 3, &cfg()).unwrap(), 3);
        assert_eq!(stress_space_dim(&complete_graph(5), 3, &cfg()).unwrap(), 1);
    }

    #[test]
    fn octahedron_is_isostatic() {
        let g = octahedron_graph();
        assert!(is_generically_rigid(&g, 3, &cfg()).unwrap());
        assert!(is_stress_free(&g, 3, &cfg()).unwrap());
        let report = lee_crosscheck(&g, 3, &cfg()).unwrap();
        assert_eq!(report.by_matrix, RigidityVerdict { rigid: true, stress_free: true });
    }

    #[test]
    fn lee_examples() {
        let k5 = lee_crosscheck(&complete_graph(5), 3, &cfg()).unwrap();
        assert!(k5.by_matrix.rigid && !k5.by_matrix.stress_free);
        let empty = SimplicialComplex::graph(2, &[]).unwrap();
        let r = lee_crosscheck(&empty, 1, &cfg()).unwrap();
        assert_eq!(r.by_matrix, RigidityVerdict { rigid: false, stress_free: true });
    }

    #[test]
    fn isostatic_count() {
        for seed in 0..6 {
            let g = random_planar_triangulation(seed, 8);
            let r = rigidity_ranks(&g, 3, &cfg()).unwrap();
            assert!(r.rigid() && r.stress_free());
            assert_eq!(r.edges, 3 * 8 - 6);
        }
    }

    #[test]
    fn gluing_along_d_vertices_stays_rigid() {
        // Two copies of K_4 sharing a triangle, and two copies of K_5 sharing three vertices.
        let a = complete_graph(4);
        let b = complete_graph(4).map_vertices(5, |v| if v == 4 { 5 } else { v });
        assert!(is_generically_rigid(&a.union(&b), 3, &cfg()).unwrap());
        let c = complete_graph(5).map_vertices(7, |v| if v > 3 { v + 2 } else { v });
        assert!(is_generically_rigid(&complete_graph(5).with_ground(7).union(&c), 3, &cfg()).unwrap());
    }

    #[test]
    fn random_graphs_agree() {
        for seed in 0..10 {
            let g = random_graph(seed, 7, 0.5);
            for d in 2..=3 {
                lee_crosscheck(&g, d, &cfg()).unwrap();
            }
        }
    }
}
