//! Isomorphism invariants by iterated color refinement, with an exact
//! backtracking check to resolve collisions.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashSet};
use std::hash::{Hash, Hasher};

use crate::complex::SimplicialComplex;
use crate::face::Face;

fn hash_of<T: Hash>(x: &T) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

/// Refined vertex colors, indexed by vertex label.
fn colors(k: &SimplicialComplex) -> BTreeMap<u32, u64> {
    let verts = k.vertices();
    let mut color: BTreeMap<u32, u64> = verts
        .iter()
        .map(|&v| {
            let star: Vec<usize> = k.facets().iter().filter(|f| f.contains(v)).map(|f| f.len()).collect();
            let mut star = star;
            star.sort_unstable();
            (v, hash_of(&star))
        })
        .collect();
    let mut classes = color.values().collect::<HashSet<_>>().len();
    for _ in 0..verts.len() {
        let next: BTreeMap<u32, u64> = verts
            .iter()
            .map(|&v| {
                let mut around: Vec<Vec<u64>> = k
                    .facets()
                    .iter()
                    .filter(|f| f.contains(v))
                    .map(|f| {
                        let mut c: Vec<u64> = f.without(v).iter().map(|w| color[&w]).collect();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                around.sort_unstable();
                (v, hash_of(&(color[&v], around)))
            })
            .collect();
        let refined = next.values().collect::<HashSet<_>>().len();
        color = next;
        if refined == classes {
            break;
        }
        classes = refined;
    }
    color
}

/// A relabelling-invariant hash of `K` (vertex labels and ground set ignored).
pub fn invariant_hash(k: &SimplicialComplex) -> u64 {
    let color = colors(k);
    let mut facets: Vec<Vec<u64>> = k
        .facets()
        .iter()
        .map(|f| {
            let mut c: Vec<u64> = f.iter().map(|v| color[&v]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    facets.sort_unstable();
    hash_of(&(color.len(), facets))
}

/// A bijection `V(a) → V(b)` carrying the faces of `a` onto those of `b`,
/// as `(vertex of a, vertex of b)` pairs.
pub fn find_isomorphism(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Vec<(u32, u32)>> {
    if a.face_counts() != b.face_counts() || a.facets().len() != b.facets().len() {
        return None;
    }
    let (ca, cb) = (colors(a), colors(b));
    let mut sa: Vec<u64> = ca.values().copied().collect();
    let mut sb: Vec<u64> = cb.values().copied().collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let class_size = |c: u64| sa.iter().filter(|&&x| x == c).count();
    let mut order: Vec<u32> = a.vertices();
    order.sort_by_key(|v| (class_size(ca[v]), *v));
    let mut map: BTreeMap<u32, u32> = BTreeMap::new();
    let mut used: HashSet<u32> = HashSet::new();
    if extend(a, b, &ca, &cb, &order, &mut map, &mut used) {
        Some(map.into_iter().collect())
    } else {
        None
    }
}

fn extend(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    ca: &BTreeMap<u32, u64>,
    cb: &BTreeMap<u32, u64>,
    order: &[u32],
    map: &mut BTreeMap<u32, u32>,
    used: &mut HashSet<u32>,
) -> bool {
    let Some(&v) = order.get(map.len()) else {
        return a.facets().iter().all(|f| b.contains(f.iter().map(|x| map[&x]).collect()));
    };
    for (&w, &c) in cb {
        if c != ca[&v] || used.contains(&w) {
            continue;
        }
        let consistent = map
            .iter()
            .all(|(&x, &y)| a.contains(Face::from_vertices([v, x])) == b.contains(Face::from_vertices([w, y])));
        if !consistent {
            continue;
        }
        map.insert(v, w);
        used.insert(w);
        if extend(a, b, ca, cb, order, map, used) {
            return true;
        }
        map.remove(&v);
        used.remove(&w);
    }
    false
}

pub fn is_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::generators::random_complex;

    #[test]
    fn relabelled_copies_are_isomorphic() {
        for seed in 0..20 {
            let k = random_complex(seed, 7, 3, 0.5);
            let perm = [0, 3, 7, 1, 6, 2, 5, 4];
            let l = k.map_vertices(7, |v| perm[v as usize]);
            assert_eq!(invariant_hash(&k), invariant_hash(&l));
            let iso = find_isomorphism(&k, &l).expect("isomorphic");
            let mapped = k.map_vertices(7, |v| iso.iter().find(|p| p.0 == v).unwrap().1);
            assert_eq!(mapped, l);
        }
    }

    #[test]
    fn distinct_complexes_are_told_apart() {
        assert!(!is_isomorphic(&cycle(6), &disjoint_union(&cycle(3), &cycle(3))));
        assert!(!is_isomorphic(&octahedron(), &boundary_simplex(3)));
        assert!(is_isomorphic(&complete_bipartite(3, 3), &complete_bipartite(3, 3).map_vertices(6, |v| 7 - v)));
    }
}
