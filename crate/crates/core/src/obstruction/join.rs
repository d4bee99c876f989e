//! The deleted join `K_*` and Smith classes over `F_2`.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{solve_f2, BitRow};

/// A face `S¹ ⊎ T²` of the deleted join.
pub type JoinFace = (Face, Face);

fn key(f: &JoinFace) -> (usize, Face, Face) {
    (f.0.len(), f.0, f.1)
}

/// Orbit representative: the smaller of `(S,T)` and `(T,S)` under `(|S|, S, T)`.
pub fn representative(f: JoinFace) -> JoinFace {
    let swapped = (f.1, f.0);
    if key(&swapped) < key(&f) {
        swapped
    } else {
        f
    }
}

/// `K_* = {S¹ ⊎ T² : S, T ∈ K, S ∩ T = ∅}` with the swap `τ`.
#[derive(Debug, Clone)]
pub struct DeletedJoin {
    base: SimplicialComplex,
    /// `levels[s]` holds the faces with `|S| + |T| = s`, sorted by `(|S|, S, T)`.
    levels: Vec<Vec<JoinFace>>,
    /// `orbits[s]` lists one representative per `τ`-orbit at level `s ≥ 1`.
    orbits: Vec<Vec<JoinFace>>,
    orbit_of: HashMap<JoinFace, usize>,
}

impl DeletedJoin {
    pub fn new(k: &SimplicialComplex) -> Self {
        let faces: Vec<Face> = k.faces().collect();
        let top = 2 * faces.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut levels = vec![Vec::new(); top + 1];
        for &s in &faces {
            for &t in &faces {
                if s.is_disjoint(t) {
                    levels[s.len() + t.len()].push((s, t));
                }
            }
        }
        while levels.len() > 1 && levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        let mut orbits = vec![Vec::new(); levels.len()];
        let mut orbit_of = HashMap::new();
        for (size, level) in levels.iter_mut().enumerate() {
            level.sort_by_key(key);
            if size == 0 {
                continue;
            }
            for &f in level.iter() {
                assert!(f.0 != f.1, "τ fixes only the empty face");
                if representative(f) == f {
                    orbit_of.insert(f, orbits[size].len());
                    orbits[size].push(f);
                }
            }
            for &f in level.iter() {
                let id = orbit_of[&representative(f)];
                orbit_of.insert(f, id);
            }
        }
        DeletedJoin { base: k.clone(), levels, orbits, orbit_of }
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    /// `dim K_*`.
    pub fn dim(&self) -> i32 {
        self.levels.len() as i32 - 2
    }

    /// Faces of dimension `q` (`q ≥ -1`).
    pub fn faces(&self, q: i32) -> &[JoinFace] {
        self.levels.get((q + 1) as usize).map_or(&[], |l| l.as_slice())
    }

    /// Orbit representatives in dimension `q ≥ 0`.
    pub fn orbits(&self, q: i32) -> &[JoinFace] {
        self.orbits.get((q + 1) as usize).map_or(&[], |l| l.as_slice())
    }

    pub fn orbit_of(&self, f: JoinFace) -> Option<usize> {
        self.orbit_of.get(&f).copied()
    }

    /// Codimension-one faces of a join face.
    pub fn facets_of(f: JoinFace) -> impl Iterator<Item = JoinFace> {
        let (s, t) = f;
        s.iter().map(move |x| (s.without(x), t)).chain(t.iter().map(move |y| (s, t.without(y))))
    }

    /// Symmetric coboundary `C_S^q → C_S^{q+1}` as bit rows indexed by
    /// the orbits in dimension `q + 1`.
    pub fn symmetric_coboundary(&self, q: i32) -> Vec<BitRow> {
        let cols = self.orbits(q).len();
        self.orbits(q + 1)
            .iter()
            .map(|&f| {
                let mut row = BitRow::zeros(cols);
                for g in Self::facets_of(f) {
                    if let Some(o) = self.orbit_of(g) {
                        row.flip(o);
                    }
                }
                row
            })
            .collect()
    }

    /// `δc` for a symmetric `q`-cochain given by orbit values.
    pub fn coboundary(&self, q: i32, c: &[bool]) -> Vec<bool> {
        self.orbits(q + 1)
            .iter()
            .map(|&f| Self::facets_of(f).filter_map(|g| self.orbit_of(g)).fold(false, |acc, o| acc ^ c[o]))
            .collect()
    }
}

/// A symmetric cochain over `F_2`, one value per `τ`-orbit in `degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricCochainZ2 {
    pub degree: usize,
    pub values: Vec<bool>,
}

impl SymmetricCochainZ2 {
    pub fn support(&self) -> usize {
        self.values.iter().filter(|&&b| b).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithClass {
    pub m: usize,
    pub cochain: SymmetricCochainZ2,
    pub vanishes: bool,
    /// A symmetric `(m-1)`-cochain `x` with `δx = Sm^m`, when one exists.
    pub certificate: Option<SymmetricCochainZ2>,
}

/// `Sm^m(1_{K_*})` and whether it is a symmetric coboundary.
pub fn smith_class(k: &SimplicialComplex, m: usize) -> Result<SmithClass> {
    smith_class_in(&DeletedJoin::new(k), m)
}

pub fn smith_class_in(join: &DeletedJoin, m: usize) -> Result<SmithClass> {
    if m == 0 {
        return Err(Error::BadParameters("Smith classes start at degree 1".into()));
    }
    if m as i32 > join.dim() + 1 {
        return Err(Error::DimensionExhausted { m, bound: join.dim() });
    }
    let mut z = vec![true; join.orbits(0).len()];
    for q in 0..m as i32 {
        // Lift to the representatives, then take the ordinary coboundary.
        let next: Vec<bool> = join
            .orbits(q + 1)
            .iter()
            .map(|&f| {
                DeletedJoin::facets_of(f)
                    .filter(|&g| representative(g) == g)
                    .filter_map(|g| join.orbit_of(g))
                    .fold(false, |acc, o| acc ^ z[o])
            })
            .collect();
        if join.coboundary(q + 1, &next).iter().any(|&b| b) {
            return Err(Error::Disagreement(format!("Smith iterate in degree {} is not a cocycle", q + 1)));
        }
        z = next;
    }
    let rows = join.symmetric_coboundary(m as i32 - 1);
    let x = solve_f2(&rows, join.orbits(m as i32 - 1).len(), &z);
    Ok(SmithClass {
        m,
        cochain: SymmetricCochainZ2 { degree: m, values: z },
        vanishes: x.is_some(),
        certificate: x.map(|values| SymmetricCochainZ2 { degree: m - 1, values }),
    })
}

/// Restricts a symmetric cochain on `K_*` to the deleted join of a subcomplex.
pub fn restrict(from: &DeletedJoin, to: &DeletedJoin, c: &SymmetricCochainZ2) -> SymmetricCochainZ2 {
    let values = to.orbits(c.degree as i32).iter().map(|&f| from.orbit_of(f).is_some_and(|o| c.values[o])).collect();
    SymmetricCochainZ2 { degree: c.degree, values }
}
