//! Shifting of unions and joins, as checkable predicates.

use crate::complex::SimplicialComplex;
use crate::construct::{complete_complex, join};
use crate::error::{Error, Result};
use crate::face::k_subsets;
use crate::intervals::{interval_faces, predicted_union};
use crate::linalg::GenericConfig;
use crate::shift::{shifted, Variant};

/// Faces of the top size `dim + 1` avoiding `1..=i`.
pub fn top_faces_avoiding(delta: &SimplicialComplex, i: u32) -> usize {
    let top = (delta.dim() + 1).max(0) as usize;
    delta.faces_of_size(top).iter().filter(|&&s| s.min().is_none_or(|m| m > i)).count()
}

/// Per `i ∈ 0..=n`, the top-face counts of `Δᵉ(K * L)`, `Δᵉ(K)` and `Δᵉ(L)`.
pub fn join_top_face_counts(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    cfg: &GenericConfig,
) -> Result<Vec<[usize; 3]>> {
    let dj = shifted(&join(k, l), Variant::Exterior, cfg)?;
    let dk = shifted(k, Variant::Exterior, cfg)?;
    let dl = shifted(l, Variant::Exterior, cfg)?;
    Ok((0..=dj.n())
        .map(|i| [top_faces_avoiding(&dj, i), top_faces_avoiding(&dk, i), top_faces_avoiding(&dl, i)])
        .collect())
}

/// The join count is the product of the factor counts for every `i`.
pub fn join_max_faces_check(k: &SimplicialComplex, l: &SimplicialComplex, cfg: &GenericConfig) -> Result<bool> {
    Ok(join_top_face_counts(k, l, cfg)?.iter().all(|[j, a, b]| *j == a * b))
}

/// `|σ|` when `K ∩ L` is the full simplex on `σ` (`0` for `{∅}`).
fn simplex_intersection(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<u32> {
    let meet = k.intersection(l);
    match meet.facets() {
        [] => Ok(0),
        [sigma] => Ok(sigma.len() as u32),
        _ => Err(Error::BadParameters(format!("K ∩ L = {meet} is not a simplex"))),
    }
}

/// `Δ(K ∪ L)` equals the complex predicted by `D_K + D_L - D_σ` when
/// `K ∩ L` is a simplex `σ`. `K` and `L` share one ground set.
pub fn union_over_simplex_check(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    variant: Variant,
    cfg: &GenericConfig,
) -> Result<bool> {
    let s = simplex_intersection(k, l)?;
    let (union, _) = k.union(l).compact();
    let n = union.n();
    let actual = shifted(&union, variant, cfg)?;
    let dk = shifted(k, variant, cfg)?;
    let dl = shifted(l, variant, cfg)?;
    let sigma = complete_complex(s);
    let predicted = predicted_union(&[(&dk, 1), (&dl, 1), (&sigma, -1)], n)?;
    Ok(actual == predicted)
}

/// `|I_A^j ∩ Δᵉ(K ∪ L)| = |I_A^j ∩ Δᵉ(K)| + |I_A^j ∩ Δᵉ(L)|` for all
/// `A ⊆ [n]` at `j = dim(K ∩ L) + 2`. Returns the first failing `A`.
pub fn additive_formula_counterexample(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    cfg: &GenericConfig,
) -> Result<Option<crate::face::Face>> {
    let union = k.union(l);
    let j = (k.intersection(l).dim() + 2) as usize;
    let du = shifted(&union, Variant::Exterior, cfg)?;
    let dk = shifted(k, Variant::Exterior, cfg)?;
    let dl = shifted(l, Variant::Exterior, cfg)?;
    let n = union.num_vertices() as u32;
    let top = (union.dim() + 1).max(0) as usize;
    for size in 0..=top.saturating_sub(j) {
        for a in k_subsets(n, size) {
            let count = |d: &SimplicialComplex| interval_faces(d, a, j).map(|v| v.len());
            if count(&du)? != count(&dk)? + count(&dl)? {
                return Ok(Some(a));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::face::Face;
    use crate::generators::random_complex;
    use proptest::prelude::*;

    fn cfg() -> GenericConfig {
        GenericConfig::default()
    }

    /// `K` on `1..=a` and `L` on `1..=s ∪ a+1..`, both containing `{1..s}`.
    fn glued(seed: u64, a: u32, b: u32, s: u32) -> (SimplicialComplex, SimplicialComplex) {
        let sigma = Face::range(1, s);
        let k0 = random_complex(seed, a, 3, 0.5);
        let l0 = random_complex(seed ^ 0xABCD, b, 3, 0.5);
        let n = a + b - s;
        let k = SimplicialComplex::from_faces(n, k0.facets().iter().copied().chain([sigma]));
        let l = SimplicialComplex::from_faces(b, l0.facets().iter().copied().chain([sigma])).map_vertices(n, |v| {
            if v <= s {
                v
            } else {
                v + a - s
            }
        });
        (k, l)
    }

    #[test]
    fn top_face_counts() {
        let tri = boundary_simplex(2);
        assert_eq!(top_faces_avoiding(&tri, 0), 3);
        assert_eq!(top_faces_avoiding(&tri, 1), 1);
        assert_eq!(top_faces_avoiding(&tri, 2), 0);
    }

    #[test]
    fn join_of_point_sets() {
        // Three points each: the join is K3,3.
        let counts = join_top_face_counts(&points(3), &points(3), &cfg()).unwrap();
        assert_eq!(counts[0], [9, 3, 3]);
        assert_eq!(counts[1], [4, 2, 2]);
        assert!(counts.iter().all(|[j, a, b]| *j == a * b));
    }

    #[test]
    fn stacked_sphere_as_a_gluing() {
        // S(3,5) is two tetrahedra glued along a triangle, minus that triangle.
        let a = complete_complex(4);
        let b = SimplicialComplex::from_faces(5, [Face::from_vertices([2, 3, 4, 5])]);
        for v in Variant::BOTH {
            assert!(union_over_simplex_check(&a.with_ground(5), &b, v, &cfg()).unwrap());
        }
    }

    #[test]
    fn rejects_non_simplex_intersections() {
        let c = cycle(4);
        let l = SimplicialComplex::from_faces(4, [Face::from_vertices([1, 3])]).union(&points(4));
        assert!(union_over_simplex_check(&c, &l, Variant::Exterior, &cfg()).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn unions_over_simplices(seed in any::<u64>(), s in 0u32..=2) {
            let (k, l) = glued(seed, 5, 4, s);
            for v in Variant::BOTH {
                prop_assert!(union_over_simplex_check(&k, &l, v, &cfg()).unwrap());
            }
        }

        #[test]
        fn additive_formula(seed in any::<u64>(), s in 0u32..=2) {
            let (k, l) = glued(seed, 5, 4, s);
            prop_assert_eq!(additive_formula_counterexample(&k, &l, &cfg()).unwrap(), None);
        }

        #[test]
        fn additive_formula_on_overlapping_unions(a in any::<u64>(), b in any::<u64>()) {
            let k = random_complex(a, 5, 3, 0.6).with_ground(7);
            let l = random_complex(b, 5, 3, 0.6).shift_labels(2);
            prop_assert_eq!(additive_formula_counterexample(&k, &l, &cfg()).unwrap(), None);
        }

        #[test]
        fn joins_multiply_top_faces(a in any::<u64>(), b in any::<u64>()) {
            let k = random_complex(a, 4, 2, 0.6);
            let l = random_complex(b, 3, 2, 0.6);
            prop_assert!(join_max_faces_check(&k, &l, &cfg()).unwrap());
        }
    }
}
