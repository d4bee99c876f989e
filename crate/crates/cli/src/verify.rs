//! Named checks run by `shiftlab verify`. Each is deterministic given the seed.

use std::time::Instant;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use shiftlab::construct::*;
use shiftlab::generators::{
    random_2_sphere, random_complex, random_graph, random_near_cone, random_planar_triangulation, random_pure_complex,
};
use shiftlab::lefschetz::is_hl_certificate;
use shiftlab::minors::{contract, has_clique_minor, is_admissible};
use shiftlab::nearcone::{
    cone_commutes, i_near_cone_decomposition_check, near_cone_decomposition_check, sarkaria_identities,
};
use shiftlab::obstruction::smith_class;
use shiftlab::rigidity::{is_stress_free, lee_crosscheck};
use shiftlab::shift::shifted;
use shiftlab::structure::{join_top_face_counts, union_over_simplex_check};
use shiftlab::vectors::{f_vector, g_vector, h_vector, is_m_sequence, satisfies_kk};
use shiftlab::{ComplexOrder, Face, GenericConfig, SimplicialComplex, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    All,
    DisjointUnion,
    ConeCommute,
    StackedSphere,
    CliqueSum,
    JoinMaxFaces,
    JoinCounterexample,
    #[value(name = "k33-gap")]
    K33Gap,
    UbtCyclic,
    Gluck,
    LeeEquivalence,
    NearCone,
    Sarkaria,
    MinorMainthm,
    SmithHd,
    HcontractIdentity,
    KkMacaulay,
}

impl Check {
    pub fn expand(self) -> Vec<Check> {
        if self == Check::All {
            Check::value_variants().iter().copied().filter(|&c| c != Check::All).collect()
        } else {
            vec![self]
        }
    }

    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Debug, Serialize)]
pub struct Line {
    pub check: String,
    pub seed: u64,
    pub prime: u64,
    pub pass: bool,
    pub elapsed_ms: u128,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn run(check: Check, seed: u64, cfg: &GenericConfig) -> Line {
    let start = Instant::now();
    let outcome = match check {
        Check::All => unreachable!("expanded by the caller"),
        Check::DisjointUnion => disjoint_union_check(seed, cfg),
        Check::ConeCommute => cone_commute(seed, cfg),
        Check::StackedSphere => stacked(cfg),
        Check::CliqueSum => clique_sum(seed, cfg),
        Check::JoinMaxFaces => join_max_faces(seed, cfg),
        Check::JoinCounterexample => join_counterexample(cfg),
        Check::K33Gap => k33_gap(cfg),
        Check::UbtCyclic => ubt_cyclic(cfg),
        Check::Gluck => gluck(seed, cfg),
        Check::LeeEquivalence => lee(seed, cfg),
        Check::NearCone => near_cone(seed, cfg),
        Check::Sarkaria => sarkaria(seed, cfg),
        Check::MinorMainthm => minor_mainthm(seed, cfg),
        Check::SmithHd => smith_hd(),
        Check::HcontractIdentity => hcontract(seed),
        Check::KkMacaulay => kk_macaulay(seed, cfg),
    };
    let (pass, details, error) = match outcome {
        Ok((pass, details)) => (pass, details, None),
        Err(e) => (false, Value::Null, Some(format!("{e:#}"))),
    };
    Line { check: check.name(), seed, prime: cfg.prime, pass, elapsed_ms: start.elapsed().as_millis(), details, error }
}

type Outcome = Result<(bool, Value)>;

fn f(v: &[u32]) -> Face {
    Face::from_vertices(v.iter().copied())
}

fn sub(seed: u64, i: u64) -> u64 {
    seed.wrapping_mul(1_000).wrapping_add(i)
}

fn disjoint_union_check(seed: u64, cfg: &GenericConfig) -> Outcome {
    let mut ok = true;
    for i in 0..5 {
        let k = random_complex(sub(seed, i), 4, 3, 0.6);
        let l = random_complex(sub(seed, i + 100), 4, 3, 0.6);
        for v in Variant::BOTH {
            let lhs = shifted(&disjoint_union(&k, &l), v, cfg)?;
            let inner = disjoint_union(&shifted(&k, v, cfg)?, &shifted(&l, v, cfg)?);
            ok &= lhs == shifted(&inner, v, cfg)?;
        }
    }
    Ok((ok, json!({ "pairs": 5, "variants": ["exterior", "symmetric"] })))
}

fn cone_commute(seed: u64, cfg: &GenericConfig) -> Outcome {
    let mut ok = true;
    for i in 0..5 {
        let k = random_complex(sub(seed, i), 6, 3, 0.6);
        ok &= cone_commutes(&k, cfg)?;
        let d = shifted(&k, Variant::Exterior, cfg)?;
        ok &= shifted(&d, Variant::Exterior, cfg)? == d;
    }
    Ok((ok, json!({ "complexes": 5, "checks": ["cone", "idempotence"] })))
}

fn stacked(cfg: &GenericConfig) -> Outcome {
    let mut results = Vec::new();
    for d in [3u32, 4] {
        for n in d + 2..=d + 4 {
            let s = stacked_sphere(d, n)?;
            let mut first: Vec<u32> = vec![1];
            first.extend(3..=d);
            first.push(n);
            let expected = shifted_span(n, &[f(&first), Face::range(2, d + 1)]);
            for v in Variant::BOTH {
                results.push(json!({ "d": d, "n": n, "variant": v, "ok": shifted(&s, v, cfg)? == expected }));
            }
        }
    }
    let ok = results.iter().all(|r| r["ok"] == true);
    Ok((ok, json!({ "gluing": "most recently created facet", "cases": results })))
}

/// `K` on `1..=a` and `L` on `1..=s ∪ a+1..`, meeting exactly in the simplex `1..=s`.
fn glued(seed: u64, a: u32, b: u32, s: u32) -> (SimplicialComplex, SimplicialComplex) {
    let sigma = Face::range(1, s);
    let n = a + b - s;
    let k = SimplicialComplex::from_faces(n, random_complex(seed, a, 3, 0.5).facets().iter().copied().chain([sigma]));
    let l = SimplicialComplex::from_faces(
        b,
        random_complex(seed ^ 0xABCD, b, 3, 0.5).facets().iter().copied().chain([sigma]),
    )
    .map_vertices(n, |v| if v <= s { v } else { v + a - s });
    (k, l)
}

fn clique_sum(seed: u64, cfg: &GenericConfig) -> Outcome {
    let mut ok = true;
    let mut cases = 0;
    for i in 0..4 {
        let s = (i % 3) as u32 + 1;
        let (k, l) = glued(sub(seed, i), 5, 4, s);
        for v in Variant::BOTH {
            ok &= union_over_simplex_check(&k, &l, v, cfg)?;
            cases += 1;
        }
    }
    Ok((ok, json!({ "gluings": cases })))
}

fn join_max_faces(seed: u64, cfg: &GenericConfig) -> Outcome {
    let mut cases = vec![(points(3), points(3))];
    for i in 0..4 {
        cases.push((random_pure_complex(sub(seed, i), 5, 2, 5), random_pure_complex(sub(seed, i + 50), 4, 2, 4)));
    }
    let mut ok = true;
    let mut counts = Vec::new();
    for (k, l) in &cases {
        let c = join_top_face_counts(k, l, cfg)?;
        ok &= c.iter().all(|[j, a, b]| *j == a * b);
        counts.push(c);
    }
    Ok((ok, json!({ "counts": counts })))
}

fn join_counterexample(cfg: &GenericConfig) -> Outcome {
    let b = two_disjoint_edges();
    let mut ok = true;
    let mut report = Vec::new();
    for v in Variant::BOTH {
        let lhs = shifted(&suspension(&b), v, cfg)?;
        let rhs = shifted(&suspension(&shifted(&b, v, cfg)?), v, cfg)?;
        let only_lhs = lhs.difference(&rhs);
        let only_rhs = rhs.difference(&lhs);
        let order = lhs.lex_compare(&rhs);
        ok &= only_lhs == vec![f(&[1, 2, 6])] && only_rhs == vec![f(&[1, 3, 4])] && order == ComplexOrder::KFirst;
        report.push(json!({
            "variant": v,
            "only_in_shift_of_suspension": only_lhs.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            "only_in_shift_of_suspended_shift": only_rhs.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            "order": order,
        }));
    }
    Ok((ok, json!({ "variants": report })))
}

fn k33_gap(cfg: &GenericConfig) -> Outcome {
    let k = complete_bipartite(3, 3);
    let e = shifted(&k, Variant::Exterior, cfg)?.contains(f(&[3, 4]));
    let s = shifted(&k, Variant::Symmetric, cfg)?.contains(f(&[3, 4]));
    Ok((e && !s, json!({ "face": [3, 4], "in_exterior": e, "in_symmetric": s })))
}

fn ubt_cyclic(cfg: &GenericConfig) -> Outcome {
    let mut cases = Vec::new();
    for (d, n) in [(2, 6), (3, 7), (4, 8)] {
        let c = cyclic_boundary(d, n)?;
        let u = ubt_complex(d, n)?;
        for v in Variant::BOTH {
            cases.push(json!({ "d": d, "n": n, "variant": v, "ok": shifted(&c, v, cfg)? == u }));
        }
    }
    Ok((cases.iter().all(|c| c["ok"] == true), json!({ "cases": cases })))
}

fn gluck(seed: u64, cfg: &GenericConfig) -> Outcome {
    let mut sizes = Vec::new();
    let mut ok = true;
    for i in 0..10 {
        let n = 4 + (sub(seed, i) % 7) as u32;
        let g = random_planar_triangulation(sub(seed, i), n);
        ok &= is_stress_free(&g, 3, cfg)?;
        sizes.push(n);
    }
    Ok((ok, json!({ "triangulations": sizes.len(), "vertices": sizes, "dim": 3 })))
}

fn lee(seed: u64, cfg: &GenericConfig) -> Outcome {
    for i in 0..10 {
        let g = random_graph(sub(seed, i), 5 + (i % 4) as u32, 0.5);
        for d in [2, 3] {
            lee_crosscheck(&g, d, cfg)?;
        }
    }
    Ok((true, json!({ "graphs": 10, "dims": [2, 3] })))
}

fn near_cone(seed: u64, cfg: &GenericConfig) -> Outcome {
    let mut ok = true;
    for i in 0..5 {
        let k = random_near_cone(sub(seed, i), 6, 3);
        ok &= near_cone_decomposition_check(&k, 1, cfg)?;
        // Shifted complexes are i-near cones for the sequence 1, 2, ...
        let d = shifted(&random_complex(sub(seed, i + 20), 6, 3, 0.6), Variant::Exterior, cfg)?;
        ok &= i_near_cone_decomposition_check(&d, &[1, 2], cfg)?;
    }
    Ok((ok, json!({ "near_cones": 5, "two_near_cones": 5 })))
}

fn sarkaria(seed: u64, cfg: &GenericConfig) -> Outcome {
    let field = cfg.field()?;
    let mut ok = true;
    let mut complexes = vec![cone(&boundary_simplex(2))];
    complexes.extend((0..3).map(|i| random_near_cone(sub(seed, i), 5, 3)));
    for (i, k) in complexes.iter().enumerate() {
        let alpha: Vec<u64> = (0..k.n() as u64).map(|j| 1 + (sub(seed, i as u64 + j) % (field.p() - 1))).collect();
        ok &= sarkaria_identities(k, 1, &alpha, field)?;
    }
    Ok((ok, json!({ "complexes": complexes.len() })))
}

fn minor_mainthm(seed: u64, cfg: &GenericConfig) -> Outcome {
    let mut instances = 0;
    let mut ok = true;
    for i in 0..10 {
        let n = 6 + (i % 5) as u32;
        let g = random_graph(sub(seed, i), n, 0.55);
        for v in Variant::BOTH {
            let d = shifted(&g, v, cfg)?;
            for r in 3..=6u32 {
                if d.contains(f(&[r - 1, r])) {
                    instances += 1;
                    ok &= has_clique_minor(&g, r, 50_000_000)?.is_some();
                }
            }
        }
    }
    Ok((ok, json!({ "graphs": 10, "shifted_edge_instances": instances })))
}

fn smith_hd() -> Outcome {
    let mut cases = Vec::new();
    for d in 1..=3u32 {
        let m = 2 * d as usize - 1;
        let s = smith_class(&h_d_skeleton(d), m)?;
        cases.push(json!({ "d": d, "m": m, "vanishes": s.vanishes }));
    }
    let k4 = smith_class(&complete_graph(4), 3)?.vanishes;
    let ok = cases.iter().all(|c| c["vanishes"] == false) && k4;
    Ok((ok, json!({ "skeleta": cases, "k4_degree3_vanishes": k4 })))
}

fn hcontract(seed: u64) -> Outcome {
    let mut contractions = 0;
    let mut ok = true;
    for i in 0..3 {
        let k = random_2_sphere(sub(seed, i), 8);
        for e in k.edges().to_vec() {
            let (u, v) = (e.max().unwrap_or(0), e.min().unwrap_or(0));
            if !is_admissible(&k, u, v)? {
                continue;
            }
            let h = h_vector(&k).0;
            let hc = h_vector(&contract(&k, u, v)?).0;
            let hl = h_vector(&k.link(e)?).0;
            ok &= (0..h.len()).all(|j| {
                let below = if j >= 1 { hl.get(j - 1).copied().unwrap_or(0) } else { 0 };
                h[j] == hc.get(j).copied().unwrap_or(0) + below
            });
            contractions += 1;
        }
    }
    Ok((ok, json!({ "spheres": 3, "contractions": contractions })))
}

fn kk_macaulay(seed: u64, cfg: &GenericConfig) -> Outcome {
    let mut ok = true;
    for i in 0..20 {
        let k = random_complex(sub(seed, i), 7, 4, 0.8);
        ok &= satisfies_kk(&f_vector(&k));
    }
    let mut spheres: Vec<SimplicialComplex> = (0..3).map(|i| random_2_sphere(sub(seed, i), 8)).collect();
    spheres.push(cyclic_boundary(4, 8)?);
    let mut certified = 0;
    for s in &spheres {
        if is_hl_certificate(s, (s.dim() + 1) as u32, cfg)? {
            certified += 1;
            ok &= is_m_sequence(&g_vector(s).0);
        }
    }
    Ok((ok && certified > 0, json!({ "f_vectors": 20, "hl_certified_spheres": certified })))
}
