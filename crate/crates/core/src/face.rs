//! Faces as bitsets over the vertex labels `1..=64`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex label a [`Face`] can hold.
pub const MAX_VERTEX: u32 = 64;

/// A finite set of vertices, stored as a bitmask (bit `v - 1` for vertex `v`).
///
/// `Ord` sorts first by size and then by the lexicographic order on equal
/// sized sets: `S < T` iff `min(S △ T) ∈ S`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a face from vertex labels. Panics on labels outside `1..=64`;
    /// use [`crate::SimplicialComplex::from_facets`] for validated input.
    pub fn from_vertices<I: IntoIterator<Item = u32>>(vertices: I) -> Self {
        let mut bits = 0u64;
        for v in vertices {
            assert!((1..=MAX_VERTEX).contains(&v), "vertex {v} out of range");
            bits |= 1 << (v - 1);
        }
        Face(bits)
    }

    pub fn singleton(v: u32) -> Self {
        Face::from_vertices([v])
    }

    /// The interval `{lo, lo+1, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: u32, hi: u32) -> Self {
        if lo > hi {
            return Face::EMPTY;
        }
        Face::from_vertices(lo.max(1)..=hi)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension `|F| - 1`.
    pub fn dim(self) -> i32 {
        self.len() as i32 - 1
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_VERTEX).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: u32) -> Face {
        self.union(Face::singleton(v))
    }

    pub fn without(self, v: u32) -> Face {
        self.minus(Face::singleton(v))
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Number of elements of the face smaller than `v`.
    pub fn count_below(self, v: u32) -> usize {
        if v <= 1 {
            return 0;
        }
        let mask = if v > 64 { u64::MAX } else { (1u64 << (v - 1)) - 1 };
        (self.0 & mask).count_ones() as usize
    }

    /// `init_j`: the `j` smallest elements.
    pub fn init(self, j: usize) -> Face {
        Face::from_vertices(self.iter().take(j))
    }

    /// Every vertex shifted by `+k` (`T + k`).
    pub fn shift_up(self, k: u32) -> Face {
        assert!(self.max().unwrap_or(0) + k <= MAX_VERTEX);
        Face(self.0 << k)
    }

    /// Every vertex shifted by `-k`; all vertices must exceed `k`.
    pub fn shift_down(self, k: u32) -> Face {
        assert!(self.min().is_none_or(|m| m > k));
        Face(self.0 >> k)
    }

    /// Lexicographic comparison of equal-size sets: `Less` iff
    /// `min(self △ other) ∈ self`.
    pub fn lex_cmp(self, other: Face) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            Ordering::Equal
        } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Product partial order on equal-size sets: `s_j <= t_j` for all `j`.
    pub fn le_product(self, other: Face) -> bool {
        self.len() == other.len() && self.iter().zip(other.iter()).all(|(s, t)| s <= t)
    }

    /// All subsets of this face (including the empty set and itself).
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut sub = Some(full);
        std::iter::from_fn(move || {
            let cur = sub?;
            sub = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(Face(cur))
        })
    }

    /// Subsets obtained by removing exactly one vertex.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = Face> {
        self.iter().map(move |v| self.without(v))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.lex_cmp(*other))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<u32> for Face {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        Face::from_vertices(iter)
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let vs = Vec::<u32>::deserialize(deserializer)?;
        if let Some(bad) = vs.iter().find(|v| !(1..=MAX_VERTEX).contains(*v)) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(Face::from_vertices(vs))
    }
}

pub struct FaceIter(u64);

impl Iterator for FaceIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for FaceIter {}

/// All `k`-subsets of `{1..=n}` in lexicographic order.
pub fn k_subsets(n: u32, k: usize) -> KSubsets {
    KSubsets { n, current: (k as u32 <= n).then(|| (1..=k as u32).collect()) }
}

pub struct KSubsets {
    n: u32,
    current: Option<Vec<u32>>,
}

impl Iterator for KSubsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.current.as_mut()?;
        let out = Face::from_vertices(cur.iter().copied());
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - (k - 1 - i) as u32 {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
