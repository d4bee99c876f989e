//! The injective chain map `C(K') → C(K)` induced by an admissible
//! contraction `K → K'` identifying `u` with `v`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{Fp, PrimeFieldMatrix, DEFAULT_PRIME};
use crate::minors::{contract, is_admissible};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coefficients {
    Z2,
    Z,
}

/// `φ(F) = F` for `F ∈ K`, otherwise `Σ sgn(w,F) (F \ w) ∪ u` over the
/// `w ∈ F` whose replacement lands in `K`. Faces are oriented by the vertex
/// order `u, v, 1, 2, ...` (the rest in natural order).
#[derive(Debug, Clone)]
pub struct ContractionChainMap {
    pub u: u32,
    pub v: u32,
    pub coefficients: Coefficients,
    pub source: SimplicialComplex,
    pub target: SimplicialComplex,
    images: HashMap<Face, Vec<(Face, i64)>>,
}

struct Orientation {
    u: u32,
    v: u32,
}

impl Orientation {
    fn rank(&self, x: u32) -> u64 {
        if x == self.u {
            0
        } else if x == self.v {
            1
        } else {
            x as u64 + 1
        }
    }

    /// `(-1)^{#{y ∈ F : y before x}}`.
    fn sign(&self, f: Face, x: u32) -> i64 {
        let before = f.iter().filter(|&y| self.rank(y) < self.rank(x)).count();
        if before % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn boundary(&self, f: Face) -> Vec<(Face, i64)> {
        if f.is_empty() {
            return Vec::new();
        }
        f.iter().map(|x| (f.without(x), self.sign(f, x))).collect()
    }
}

fn reduce(coefficients: Coefficients, chain: HashMap<Face, i64>) -> Vec<(Face, i64)> {
    let mut out: Vec<(Face, i64)> = chain
        .into_iter()
        .map(|(f, c)| (f, if coefficients == Coefficients::Z2 { c.rem_euclid(2) } else { c }))
        .filter(|&(_, c)| c != 0)
        .collect();
    out.sort();
    out
}

impl ContractionChainMap {
    /// `φ(F)` for a face `F` of the contracted complex.
    pub fn image(&self, f: Face) -> &[(Face, i64)] {
        self.images.get(&f).map_or(&[], |v| v.as_slice())
    }

    fn apply(&self, chain: &[(Face, i64)]) -> Vec<(Face, i64)> {
        let mut acc: HashMap<Face, i64> = HashMap::new();
        for &(f, c) in chain {
            for &(g, d) in self.image(f) {
                *acc.entry(g).or_default() += c * d;
            }
        }
        reduce(self.coefficients, acc)
    }

    /// Whether `∂φ = φ∂` on every face.
    pub fn commutes_with_boundary(&self) -> bool {
        let orient = Orientation { u: self.u, v: self.v };
        self.source.faces().all(|f| {
            let mut lhs: HashMap<Face, i64> = HashMap::new();
            for &(g, c) in self.image(f) {
                for (h, d) in orient.boundary(g) {
                    *lhs.entry(h).or_default() += c * d;
                }
            }
            reduce(self.coefficients, lhs) == self.apply(&orient.boundary(f))
        })
    }

    /// Dense matrix of `φ` on faces of size `s`, rows indexed by the target faces.
    pub fn matrix(&self, s: usize) -> (Vec<Face>, Vec<Face>, Vec<Vec<i64>>) {
        let cols = self.source.faces_of_size(s).to_vec();
        let rows = self.target.faces_of_size(s).to_vec();
        let index: HashMap<Face, usize> = rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        for (c, &f) in cols.iter().enumerate() {
            for &(g, x) in self.image(f) {
                m[index[&g]][c] = x;
            }
        }
        (rows, cols, m)
    }

    /// Injectivity by rank in every size, over `F_2` for `Z_2` coefficients
    /// and over a large prime for integers (full rank there implies full rank over `Q`).
    pub fn is_injective(&self) -> bool {
        let p = if self.coefficients == Coefficients::Z2 { 2 } else { DEFAULT_PRIME };
        let field = Fp::new(p).expect("prime");
        (0..=(self.source.dim() + 1) as usize).all(|s| {
            let (rows, cols, m) = self.matrix(s);
            let reduced: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
            let mat = PrimeFieldMatrix::from_rows(field, cols.len(), &reduced).expect("uniform rows");
            rows.len() >= cols.len() && mat.rank() == cols.len()
        })
    }
}

/// Builds and verifies the chain map of the admissible contraction `u ↦ v`.
pub fn contraction_chain_map(
    k: &SimplicialComplex,
    u: u32,
    v: u32,
    coefficients: Coefficients,
) -> Result<ContractionChainMap> {
    if !is_admissible(k, u, v)? {
        return Err(Error::NotAdmissible { u, v });
    }
    let target_of = contract(k, u, v)?;
    let orient = Orientation { u, v };
    let mut images = HashMap::new();
    for f in target_of.faces() {
        let image = if k.contains(f) {
            vec![(f, 1)]
        } else {
            let mut acc: HashMap<Face, i64> = HashMap::new();
            for w in f.iter() {
                let g = f.without(w).with(u);
                if k.contains(g) {
                    *acc.entry(g).or_default() += orient.sign(f, w);
                }
            }
            reduce(coefficients, acc)
        };
        images.insert(f, image);
    }
    let map = ContractionChainMap { u, v, coefficients, source: target_of, target: k.clone(), images };
    if !map.commutes_with_boundary() {
        return Err(Error::Disagreement(format!("contraction {u}->{v} does not induce a chain map")));
    }
    if !map.is_injective() {
        return Err(Error::Disagreement(format!("contraction {u}->{v} induces a non-injective chain map")));
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::generators::random_2_sphere;
    use crate::minors::satisfies_link_condition;

    #[test]
    fn identity_on_old_faces() {
        let c4 = cycle(4);
        for coeff in [Coefficients::Z2, Coefficients::Z] {
            let phi = contraction_chain_map(&c4, 2, 1, coeff).unwrap();
            for f in phi.source.faces().filter(|&f| c4.contains(f)) {
                assert_eq!(phi.image(f), &[(f, 1)]);
            }
            // {1,3} is new: it comes back as the path ±{1,2} ± {2,3}.
            let new = Face::from_vertices([1, 3]);
            let terms: Vec<Face> = phi.image(new).iter().map(|t| t.0).collect();
            assert_eq!(terms, vec![Face::from_vertices([1, 2]), Face::from_vertices([2, 3])]);
        }
    }

    #[test]
    fn example_contraction_is_injective() {
        let k = h3_minor_example();
        for coeff in [Coefficients::Z2, Coefficients::Z] {
            let phi = contraction_chain_map(&k, 8, 7, coeff).unwrap();
            assert!(phi.is_injective());
            assert_eq!(phi.source, h_d_skeleton(3));
        }
    }

    #[test]
    fn rejects_inadmissible_contractions() {
        assert_eq!(
            contraction_chain_map(&octahedron(), 1, 4, Coefficients::Z).err(),
            Some(Error::NotAdmissible { u: 1, v: 4 })
        );
    }

    #[test]
    fn link_condition_edges_on_spheres() {
        for seed in 0..6 {
            let s = random_2_sphere(seed, 8);
            for e in s.edges().to_vec() {
                let (a, b) = (e.min().unwrap(), e.max().unwrap());
                if satisfies_link_condition(&s, b, a).unwrap() {
                    contraction_chain_map(&s, b, a, Coefficients::Z).unwrap();
                }
            }
        }
    }
}
