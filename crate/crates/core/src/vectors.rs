//! f-, h- and g-vectors, and the Kruskal-Katona and Macaulay functions.

use serde::Serialize;

use crate::complex::SimplicialComplex;

/// `(f_{-1}, f_0, ..., f_{dim})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<u64>);

/// `(h_0, ..., h_d)` with `d = dim + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HVector(pub Vec<i64>);

/// `(g_0, ..., g_{⌊d/2⌋})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GVector(pub Vec<i64>);

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

fn signed_binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 {
        return 0;
    }
    binomial(n as u64, k as u64) as i64
}

pub fn f_vector(k: &SimplicialComplex) -> FVector {
    FVector(k.face_counts())
}

/// `h_k = Σ_{i ≤ k} (-1)^{k-i} C(d-i, k-i) f_{i-1}`.
pub fn h_from_f(f: &FVector) -> HVector {
    let d = f.0.len() as i64 - 1;
    let h = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * signed_binomial(d - i, k - i) * f.0[i as usize] as i64
                })
                .sum()
        })
        .collect();
    HVector(h)
}

pub fn h_vector(k: &SimplicialComplex) -> HVector {
    h_from_f(&f_vector(k))
}

pub fn g_from_h(h: &HVector) -> GVector {
    let d = h.0.len() - 1;
    let mut g = vec![1];
    g.extend((1..=d / 2).map(|i| h.0[i] - h.0[i - 1]));
    GVector(g)
}

pub fn g_vector(k: &SimplicialComplex) -> GVector {
    g_from_h(&h_vector(k))
}

/// Cascade expansion `m = C(n_k,k) + C(n_{k-1},k-1) + ... + C(n_i,i)` with
/// `n_k > ... > n_i ≥ i ≥ 1`. Returns the pairs `(n_j, j)`.
pub fn cascade(mut m: u64, k: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut j = k;
    while m > 0 && j >= 1 {
        let mut n = j;
        while binomial(n + 1, j) <= m {
            n += 1;
        }
        m -= binomial(n, j);
        out.push((n, j));
        j -= 1;
    }
    out
}

/// Kruskal-Katona shadow `∂_k`: expand `m` in order `k+1` and lower every
/// bottom index. `∂_k(f_k)` bounds `f_{k-1}` from below.
pub fn kk_lower_shadow(m: u64, k: u64) -> u64 {
    cascade(m, k + 1).iter().map(|&(n, j)| binomial(n, j - 1)).sum()
}

/// Macaulay function `∂^k`: expand `m` in order `k+1` and lower both indices.
pub fn macaulay_lower(m: u64, k: u64) -> u64 {
    cascade(m, k + 1).iter().map(|&(n, j)| binomial(n - 1, j - 1)).sum()
}

/// `f` ultimately vanishes (trivially, being finite), `f_{-1} = 1` and
/// `∂_k(f_k) ≤ f_{k-1}` for all `k ≥ 0`.
pub fn satisfies_kk(f: &FVector) -> bool {
    f.0.first() == Some(&1) && (1..f.0.len()).all(|i| kk_lower_shadow(f.0[i], i as u64 - 1) <= f.0[i - 1])
}

/// Macaulay's criterion for `(g_0, g_1, ...)` being the degree sequence of a
/// multicomplex: `g_0 = 1`, all entries nonnegative, and
/// `∂^k(g_{k+1}) ≤ g_k` for `k ≥ 0`.
pub fn is_m_sequence(seq: &[i64]) -> bool {
    seq.first() == Some(&1)
        && seq.iter().all(|&x| x >= 0)
        && (1..seq.len()).all(|i| macaulay_lower(seq[i] as u64, i as u64 - 1) <= seq[i - 1] as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use proptest::prelude::*;

    #[test]
    fn vectors_of_named_complexes() {
        let tet = boundary_simplex(3);
        assert_eq!(f_vector(&tet).0, vec![1, 4, 6, 4]);
        assert_eq!(h_vector(&tet).0, vec![1, 1, 1, 1]);
        let oct = octahedron();
        assert_eq!(f_vector(&oct).0, vec![1, 6, 12, 8]);
        assert_eq!(h_vector(&oct).0, vec![1, 3, 3, 1]);
        assert_eq!(g_vector(&oct).0, vec![1, 2]);
        assert_eq!(f_vector(&SimplicialComplex::void(0)).0, vec![1]);
    }

    #[test]
    fn shadows() {
        assert_eq!(cascade(4, 3), vec![(4, 3)]);
        assert_eq!(kk_lower_shadow(4, 2), 6);
        assert_eq!(macaulay_lower(0, 3), 0);
        assert_eq!(kk_lower_shadow(0, 1), 0);
        assert_eq!(macaulay_lower(4, 1), 3);
        assert!(is_m_sequence(&[1, 2]));
        assert!(is_m_sequence(&[1, 2, 3]));
        assert!(!is_m_sequence(&[1, 2, 4]));
        assert!(!is_m_sequence(&[2]));
        assert!(satisfies_kk(&f_vector(&boundary_simplex(3))));
        assert!(!satisfies_kk(&FVector(vec![1, 3, 4])));
    }

    // Brute-force oracle: greedily build an order ideal level by level.
    fn brute_m_sequence(seq: &[i64]) -> bool {
        fn monomials(vars: u32, deg: u32) -> Vec<Vec<u32>> {
            if deg == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for m in monomials(vars, deg - 1) {
                let start = m.last().copied().unwrap_or(0);
                for v in start..vars {
                    let mut n = m.clone();
                    n.push(v);
                    out.push(n);
                }
            }
            out
        }
        // Order ideals built from lex-last segments realize every M-sequence.
        if seq.first() != Some(&1) {
            return false;
        }
        let vars = seq.get(1).copied().unwrap_or(0) as u32;
        let mut prev: Vec<Vec<u32>> = vec![vec![]];
        for (deg, &want) in seq.iter().enumerate().skip(1) {
            let all = monomials(vars, deg as u32);
            let chosen: Vec<Vec<u32>> = all
                .into_iter()
                .rev()
                .filter(|m| {
                    (0..m.len()).all(|i| {
                        let mut d = m.clone();
                        d.remove(i);
                        prev.contains(&d)
                    })
                })
                .take(want as usize)
                .collect();
            if (chosen.len() as i64) < want {
                return false;
            }
            prev = chosen;
        }
        true
    }

    #[test]
    fn macaulay_matches_compressed_oracle() {
        for a in 0..=3 {
            for b in 0..=7 {
                for c in 0..=10 {
                    let s = [1, a, b, c];
                    assert_eq!(is_m_sequence(&s), brute_m_sequence(&s), "{s:?}");
                }
            }
        }
    }

    fn eval_h(h: &HVector, x: i64) -> i64 {
        let d = h.0.len() as u32 - 1;
        h.0.iter().enumerate().map(|(i, hi)| hi * x.pow(d - i as u32)).sum()
    }

    fn eval_f(f: &FVector, x: i64) -> i64 {
        let d = f.0.len() as u32 - 1;
        f.0.iter().enumerate().map(|(i, fi)| *fi as i64 * (x - 1).pow(d - i as u32)).sum()
    }

    #[test]
    fn dehn_sommerville_on_spheres() {
        let mut spheres = vec![boundary_simplex(2), boundary_simplex(4), octahedron()];
        spheres.push(cyclic_boundary(4, 8).unwrap());
        spheres.push(cyclic_boundary(3, 7).unwrap());
        spheres.push(stacked_sphere(3, 7).unwrap());
        spheres.push(stacked_sphere(4, 7).unwrap());
        for s in spheres {
            let h = h_vector(&s).0;
            let rev: Vec<i64> = h.iter().rev().copied().collect();
            assert_eq!(h, rev, "{s}");
        }
    }

    proptest! {
        #[test]
        fn h_polynomial_identity(seed in any::<u64>()) {
            let k = crate::generators::random_complex(seed, 7, 4, 0.5);
            let f = f_vector(&k);
            let h = h_from_f(&f);
            for x in 1..=3 {
                prop_assert_eq!(eval_h(&h, x), eval_f(&f, x));
            }
            prop_assert!(satisfies_kk(&f));
        }

        #[test]
        fn join_multiplies_f_polynomials(a in any::<u64>(), b in any::<u64>()) {
            let k = crate::generators::random_complex(a, 6, 3, 0.5);
            let l = crate::generators::random_complex(b, 6, 3, 0.5);
            let fk = f_vector(&k).0;
            let fl = f_vector(&l).0;
            let mut prod = vec![0u64; fk.len() + fl.len() - 1];
            for (i, x) in fk.iter().enumerate() {
                for (j, y) in fl.iter().enumerate() {
                    prod[i + j] += x * y;
                }
            }
            prop_assert_eq!(f_vector(&join(&k, &l)).0, prod);
        }

        #[test]
        fn stellar_at_facet_adds_boundary_h(seed in any::<u64>()) {
            let k = crate::generators::random_pure_complex(seed, 7, 3, 4);
            let facet = k.facets()[seed as usize % k.facets().len()];
            let sub = stellar_subdivision(&k, facet).unwrap();
            let hk = h_vector(&k).0;
            // Contracting the new vertex onto a vertex u of the facet undoes the
            // subdivision; the link of that edge is the boundary of facet ∖ u.
            let hb = h_vector(&boundary_simplex(facet.len() as u32 - 2)).0;
            let mut expected = hk.clone();
            for (i, x) in hb.iter().enumerate() {
                expected[i + 1] += x;
            }
            prop_assert_eq!(h_vector(&sub).0, expected);
        }
    }
}
