//! The canonical simplicial complex type and its basic queries.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTEX};

/// A finite simplicial complex on the ground set `1..=n`.
///
/// The full face family (including the empty face) is materialized at
/// construction, grouped by size and sorted in lexicographic order, so
/// enumeration queries are slices. Equality and hashing look only at the
/// facet set, so complexes with the same faces but different declared ground
/// sets compare equal.
#[derive(Clone)]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<Face>,
    by_size: Vec<Vec<Face>>,
    members: HashSet<Face>,
}

/// Outcome of comparing two complexes in the lexicographic order on complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexOrder {
    KFirst,
    LFirst,
    Equal,
}

impl SimplicialComplex {
    /// Validated constructor from vertex lists.
    pub fn from_facets<I, F>(n: u32, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[u32]>,
    {
        if n > MAX_VERTEX {
            return Err(Error::TooManyVertices(n));
        }
        let mut faces = Vec::new();
        for facet in facets {
            let vs = facet.as_ref();
            if let Some(&v) = vs.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let face = Face::from_vertices(vs.iter().copied());
            if face.len() != vs.len() {
                return Err(Error::UnsortableFace(vs.to_vec()));
            }
            faces.push(face);
        }
        Ok(Self::from_faces(n, faces))
    }

    /// Builds the complex generated by `faces`. Panics if a vertex exceeds `n`.
    pub fn from_faces<I: IntoIterator<Item = Face>>(n: u32, faces: I) -> Self {
        assert!(n <= MAX_VERTEX, "ground set too large");
        let ground = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        let mut generators: Vec<Face> = faces.into_iter().collect();
        for g in &generators {
            assert!(g.bits() & !ground == 0, "face {g} outside ground set 1..={n}");
        }
        generators.sort_unstable_by(|a, b| b.cmp(a));
        generators.dedup();

        let mut members: HashSet<Face> = HashSet::new();
        members.insert(Face::EMPTY);
        let mut facets = Vec::new();
        for g in generators {
            if members.contains(&g) {
                continue;
            }
            facets.push(g);
            let mut stack = vec![g];
            while let Some(f) = stack.pop() {
                if members.insert(f) {
                    stack.extend(f.facets_of_boundary().filter(|s| !members.contains(s)));
                }
            }
        }
        if facets.is_empty() {
            facets.push(Face::EMPTY);
        }
        facets.sort_unstable();

        let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut by_size = vec![Vec::new(); top + 1];
        for &f in &members {
            by_size[f.len()].push(f);
        }
        for level in &mut by_size {
            level.sort_unstable();
        }
        SimplicialComplex { n, facets, by_size, members }
    }

    /// The complex `{∅}` on the ground set `1..=n`.
    pub fn void(n: u32) -> Self {
        Self::from_faces(n, [])
    }

    /// A graph on `1..=n`: every vertex plus the given edges.
    pub fn graph(n: u32, edges: &[(u32, u32)]) -> Result<Self> {
        let mut facets: Vec<Vec<u32>> = (1..=n).map(|v| vec![v]).collect();
        facets.extend(edges.iter().map(|&(a, b)| vec![a, b]));
        Self::from_facets(n, facets)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<u32>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }

    /// `max |F| - 1`; the complex `{∅}` has dimension `-1`.
    pub fn dim(&self) -> i32 {
        self.by_size.len() as i32 - 2
    }

    pub fn contains(&self, face: Face) -> bool {
        self.members.contains(&face)
    }

    /// Faces with exactly `k` vertices, in lexicographic order.
    pub fn faces_of_size(&self, k: usize) -> &[Face] {
        self.by_size.get(k).map_or(&[], |v| v.as_slice())
    }

    /// Faces of dimension `i` (size `i + 1`).
    pub fn faces_of_dim(&self, i: i32) -> &[Face] {
        if i < -1 {
            return &[];
        }
        self.faces_of_size((i + 1) as usize)
    }

    /// All faces ordered by size, then lexicographically.
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.by_size.iter().flatten().copied()
    }

    pub fn num_faces(&self) -> usize {
        self.members.len()
    }

    /// Union of all faces.
    pub fn vertex_set(&self) -> Face {
        self.faces_of_size(1).iter().fold(Face::EMPTY, |acc, &f| acc.union(f))
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.vertex_set().to_vec()
    }

    pub fn num_vertices(&self) -> usize {
        self.faces_of_size(1).len()
    }

    pub fn edges(&self) -> &[Face] {
        self.faces_of_size(2)
    }

    pub fn neighbors(&self, v: u32) -> Face {
        self.edges().iter().filter(|e| e.contains(v)).fold(Face::EMPTY, |acc, e| acc.union(e.without(v)))
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    pub fn is_pure(&self) -> bool {
        let top = self.by_size.len() - 1;
        self.facets.iter().all(|f| f.len() == top)
    }

    /// Number of faces of each size `0..=dim+1` (the f-vector shifted by one).
    pub fn face_counts(&self) -> Vec<u64> {
        self.by_size.iter().map(|v| v.len() as u64).collect()
    }

    fn require(&self, face: Face) -> Result<()> {
        if self.contains(face) {
            Ok(())
        } else {
            Err(Error::FaceNotInComplex(face))
        }
    }

    /// `lk(F) = {T ∈ K : T ∩ F = ∅, T ∪ F ∈ K}`, keeping original labels.
    pub fn link(&self, face: Face) -> Result<Self> {
        self.require(face)?;
        Ok(self.link_unchecked(face))
    }

    pub(crate) fn link_unchecked(&self, face: Face) -> Self {
        let gens = self.facets.iter().filter(|f| face.is_subset(**f)).map(|f| f.minus(face));
        Self::from_faces(self.n, gens)
    }

    /// Faces containing `face` together with all their subsets.
    pub fn closed_star(&self, face: Face) -> Result<Self> {
        self.require(face)?;
        let gens = self.facets.iter().copied().filter(|f| face.is_subset(*f));
        Ok(Self::from_faces(self.n, gens))
    }

    /// Faces that do not contain `face`.
    pub fn antistar(&self, face: Face) -> Result<Self> {
        self.require(face)?;
        Ok(self.filter(|s| !face.is_subset(s)))
    }

    /// `K ∖ v`: faces avoiding vertex `v`.
    pub fn delete_vertex(&self, v: u32) -> Self {
        self.filter(|s| !s.contains(v))
    }

    /// Subcomplex of faces contained in `vertices`.
    pub fn induced(&self, vertices: Face) -> Self {
        self.filter(|s| s.is_subset(vertices))
    }

    /// Faces satisfying a predicate that must be closed under taking subsets.
    pub fn filter<P: Fn(Face) -> bool>(&self, keep: P) -> Self {
        Self::from_faces(self.n, self.faces().filter(|&s| keep(s)))
    }

    /// `j`-skeleton: faces of dimension at most `j`.
    pub fn skeleton(&self, j: i32) -> Self {
        self.filter(|s| s.dim() <= j)
    }

    /// Applies a vertex map (which need not be injective) and recanonicalizes.
    pub fn map_vertices<M: Fn(u32) -> u32>(&self, n: u32, map: M) -> Self {
        let gens = self.facets.iter().map(|f| f.iter().map(&map).collect::<Face>());
        Self::from_faces(n, gens)
    }

    /// Every label increased by `k`; the ground set grows to `n + k`.
    pub fn shift_labels(&self, k: u32) -> Self {
        Self::from_faces(self.n + k, self.facets.iter().map(|f| f.shift_up(k)))
    }

    /// Relabels the vertices onto `1..=m` preserving their order. Returns the
    /// compacted complex and the original label of each new vertex.
    pub fn compact(&self) -> (Self, Vec<u32>) {
        let old = self.vertices();
        let mut new_of = vec![0u32; MAX_VERTEX as usize + 1];
        for (i, &v) in old.iter().enumerate() {
            new_of[v as usize] = i as u32 + 1;
        }
        let m = old.len() as u32;
        (self.map_vertices(m, |v| new_of[v as usize]), old)
    }

    /// Same complex with a new ground set size, which must cover all vertices.
    pub fn with_ground(&self, n: u32) -> Self {
        Self::from_faces(n, self.facets.iter().copied())
    }

    /// True iff `i < j`, `j ∈ S ∈ K` imply `(S ∖ j) ∪ i ∈ K`.
    pub fn is_shifted(&self) -> bool {
        self.faces().all(|s| s.iter().all(|j| (1..j).all(|i| s.contains(i) || self.contains(s.without(j).with(i)))))
    }

    /// Lexicographic order on complexes: for each size in increasing order,
    /// the first face of the symmetric difference decides.
    pub fn lex_compare(&self, other: &Self) -> ComplexOrder {
        let top = self.by_size.len().max(other.by_size.len());
        for k in 0..top {
            let a: BTreeSet<Face> = self.faces_of_size(k).iter().copied().collect();
            let b: BTreeSet<Face> = other.faces_of_size(k).iter().copied().collect();
            let first = a.symmetric_difference(&b).min().copied();
            if let Some(f) = first {
                return if a.contains(&f) { ComplexOrder::KFirst } else { ComplexOrder::LFirst };
            }
        }
        ComplexOrder::Equal
    }

    /// Faces of `self` that are not faces of `other`, ordered by size then lex.
    pub fn difference(&self, other: &Self) -> Vec<Face> {
        self.faces().filter(|f| !other.contains(*f)).collect()
    }

    /// Maximal faces of `self ∖ other` (useful for reporting differences).
    pub fn minimal_difference(&self, other: &Self) -> Vec<Face> {
        let diff = self.difference(other);
        diff.iter().copied().filter(|f| !diff.iter().any(|g| g != f && g.is_subset(*f))).collect()
    }

    /// Union of two complexes on the larger ground set.
    pub fn union(&self, other: &Self) -> Self {
        let gens = self.facets.iter().chain(other.facets.iter()).copied();
        Self::from_faces(self.n.max(other.n), gens)
    }

    /// Intersection of two complexes.
    pub fn intersection(&self, other: &Self) -> Self {
        Self::from_faces(self.n.max(other.n), self.faces().filter(|f| other.contains(*f)))
    }

    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.facets.iter().all(|f| other.contains(*f))
    }

    /// Minimal non-faces on the vertex set of the complex.
    pub fn missing_faces(&self) -> Vec<Face> {
        let verts = self.vertices();
        let mut out = Vec::new();
        for k in 1..=self.by_size.len() {
            for f in crate::face::k_subsets(verts.len() as u32, k) {
                let s: Face = f.iter().map(|i| verts[i as usize - 1]).collect();
                if !self.contains(s) && s.facets_of_boundary().all(|t| self.contains(t)) {
                    out.push(s);
                }
            }
        }
        out
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl Hash for SimplicialComplex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.facets.hash(state);
    }
}

impl PartialOrd for SimplicialComplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SimplicialComplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.facets.cmp(&other.facets)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K(n={}; ", self.n)?;
        for (i, face) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{face}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    n: u32,
    facets: Vec<Vec<u32>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let facets = if self.dim() < 0 { vec![] } else { self.facet_lists() };
        Wire { n: self.n, facets }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        SimplicialComplex::from_facets(wire.n, wire.facets).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(v: &[u32]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    #[test]
    fn canonical_construction() {
        let k = SimplicialComplex::from_facets(3, [[1, 2], [2, 3], [1, 3]]).unwrap();
        assert_eq!(k.facets(), &[f(&[1, 2]), f(&[1, 3]), f(&[2, 3])]);
        assert_eq!(k.face_counts(), vec![1, 3, 3]);

        let k = SimplicialComplex::from_facets(4, [vec![1, 2, 3], vec![1, 2]]).unwrap();
        assert_eq!(k.facets(), &[f(&[1, 2, 3])]);

        let k = SimplicialComplex::from_facets(3, [Vec::<u32>::new()]).unwrap();
        assert_eq!(k.face_counts(), vec![1]);
        assert_eq!(k.dim(), -1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(SimplicialComplex::from_facets(3, [[1, 4]]), Err(Error::VertexOutOfRange { vertex: 4, n: 3 }));
        assert_eq!(SimplicialComplex::from_facets(3, [[1, 1]]), Err(Error::UnsortableFace(vec![1, 1])));
    }

    #[test]
    fn link_star_antistar() {
        let sphere = SimplicialComplex::from_faces(4, crate::face::k_subsets(4, 3));
        let lk = sphere.link(f(&[1])).unwrap();
        assert_eq!(lk.facets(), &[f(&[2, 3]), f(&[2, 4]), f(&[3, 4])]);

        let c4 = SimplicialComplex::graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let path = c4.antistar(f(&[1])).unwrap();
        assert_eq!(path.facets(), &[f(&[2, 3]), f(&[3, 4])]);
        assert!(c4.link(f(&[1, 3])).is_err());

        let oct = crate::construct::octahedron();
        let star = oct.closed_star(f(&[1])).unwrap();
        assert_eq!(star.face_counts(), vec![1, 5, 8, 4]);
    }

    #[test]
    fn shiftedness() {
        let tri = SimplicialComplex::from_faces(3, crate::face::k_subsets(3, 2));
        assert!(tri.is_shifted());
        let c4 = SimplicialComplex::graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(!c4.is_shifted());
    }

    #[test]
    fn lex_comparison() {
        let a = SimplicialComplex::from_facets(3, [[1, 2]]).unwrap();
        let b = SimplicialComplex::from_facets(3, [[1, 3]]).unwrap();
        assert_eq!(a.lex_compare(&a), ComplexOrder::Equal);
        assert_eq!(a.lex_compare(&b), ComplexOrder::KFirst);
        assert_eq!(b.lex_compare(&a), ComplexOrder::LFirst);
    }

    #[test]
    fn json_round_trip() {
        let k = crate::construct::octahedron();
        let s = serde_json::to_string(&k).unwrap();
        let back: SimplicialComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(k, back);
        assert_eq!(back.n(), 6);
    }

    proptest! {
        #[test]
        fn closed_under_inclusion(seed in any::<u64>()) {
            let k = crate::generators::random_complex(seed, 7, 5, 0.5);
            for s in k.faces() {
                for t in s.subsets() {
                    prop_assert!(k.contains(t));
                }
            }
            for f in k.facets() {
                prop_assert!(!k.facets().iter().any(|g| g != f && f.is_subset(*g)));
            }
        }
    }
}
