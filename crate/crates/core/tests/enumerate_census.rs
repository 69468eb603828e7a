mod common;

use std::collections::HashSet;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ricci_core::curvature::graph_reports;
use ricci_core::enumerate::{
    canonical_code, census_with_classification, enumerate_codes, enumerate_regular, graph_from_code,
    CensusRequest, EnumerateError,
};
use ricci_core::graph::{emit_graph6, parse_graph6};
use ricci_core::{Graph, Rational};

fn shuffled(g: &Graph, rng: &mut impl Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    g.relabel(&perm)
}

fn req(n: usize, d: usize) -> CensusRequest {
    CensusRequest::new(n, d).unwrap()
}

/// (n, d, connected d-regular graphs up to isomorphism). The d ≥ 5 rows are
/// complements of 2-regular graphs, counted by partitions into parts ≥ 3.
const COUNTS: &[(usize, usize, usize)] = &[
    (3, 2, 1),
    (7, 2, 1),
    (4, 3, 1),
    (6, 3, 2),
    (8, 3, 5),
    (10, 3, 19),
    (5, 4, 1),
    (6, 4, 1),
    (7, 4, 2),
    (8, 4, 6),
    (9, 4, 16),
    (6, 5, 1),
    (8, 5, 3),
    (7, 6, 1),
    (8, 6, 1),
    (9, 6, 4),
    (9, 8, 1),
];

#[test]
fn counts_of_connected_regular_graphs() {
    for &(n, d, count) in COUNTS {
        assert_eq!(enumerate_regular(req(n, d)).len(), count, "({n},{d})");
    }
}

#[test]
fn census_classification_cells() {
    // (n, d, total, ric_positive)
    for (n, d, total, positive) in [
        (4, 3, 1, 1),
        (6, 3, 2, 2),
        (8, 3, 5, 2),
        (10, 3, 19, 1),
        (5, 4, 1, 1),
        (6, 4, 1, 1),
        (7, 4, 2, 2),
        (8, 4, 6, 6),
        (9, 4, 16, 15),
    ] {
        let t = census_with_classification(req(n, d)).unwrap();
        assert_eq!((t.total, t.ric_positive), (total, positive), "({n},{d})");
        assert_eq!(t.bone_idle, 0, "({n},{d})");
    }
}

#[test]
fn emitted_graphs_are_connected_regular_and_canonical() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for &(n, d, _) in COUNTS {
        let codes = enumerate_codes(req(n, d));
        let graphs = enumerate_regular(req(n, d));
        assert!(codes.windows(2).all(|w| w[0] < w[1]), "({n},{d}) not sorted or duplicated");
        for (g, &code) in graphs.iter().zip(&codes) {
            assert!(g.is_connected());
            assert_eq!(g.regular_degree(), Some(d));
            assert_eq!(canonical_code(g), code);
            assert_eq!(&graph_from_code(n, code), g);
            for _ in 0..3 {
                assert_eq!(canonical_code(&shuffled(g, &mut rng)), code);
            }
        }
    }
}

/// Invariant vector: degree sequence is fixed, so girth, triangles,
/// diameter and the sorted curvature multiset.
fn invariants(g: &Graph) -> (Option<usize>, usize, Option<usize>, Vec<(Rational, Rational)>) {
    let mut curv: Vec<_> = graph_reports(g)
        .unwrap()
        .into_iter()
        .map(|r| (r.kappa, r.kappa0))
        .collect();
    curv.sort();
    (g.girth(), g.triangle_count(), g.diameter(), curv)
}

#[test]
fn no_isomorphic_pairs_in_small_cells() {
    for (n, d) in [(6, 3), (8, 3), (7, 4), (8, 4), (8, 5), (9, 6)] {
        let graphs = enumerate_regular(req(n, d));
        let inv: Vec<_> = graphs.iter().map(invariants).collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                if inv[i] == inv[j] {
                    assert_ne!(
                        canonical_bruteforce(&graphs[i]),
                        canonical_bruteforce(&graphs[j]),
                        "({n},{d}) #{i} ~ #{j}"
                    );
                }
            }
        }
    }
}

#[test]
fn larger_cells_have_distinct_codes_and_invariants_spread() {
    for (n, d) in [(10, 3), (9, 4)] {
        let graphs = enumerate_regular(req(n, d));
        let codes: HashSet<_> = graphs.iter().map(canonical_code).collect();
        assert_eq!(codes.len(), graphs.len());
        let inv: HashSet<_> = graphs.iter().map(invariants).collect();
        assert!(inv.len() > 1);
    }
}

#[test]
fn census_graphs_roundtrip_through_graph6() {
    for &(n, d, _) in COUNTS {
        for g in enumerate_regular(req(n, d)) {
            let s = emit_graph6(&g).unwrap();
            assert_eq!(s, graph6_reference(&g));
            assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
        }
    }
}

#[test]
fn canonical_code_matches_bruteforce() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for i in 0..300 {
        let n = i % 8;
        let g = random_graph(n, [0.2, 0.5, 0.7][i % 3], &mut rng);
        assert_eq!(code_to_bits(canonical_code(&g), n), canonical_bruteforce(&g), "{g:?}");
    }
}

#[test]
fn request_validation() {
    assert!(matches!(CensusRequest::new(12, 3), Err(EnumerateError::OutOfSupportedRange { .. })));
    assert!(matches!(CensusRequest::new(10, 4), Err(EnumerateError::OutOfSupportedRange { .. })));
    assert!(matches!(CensusRequest::new(4, 0), Err(EnumerateError::OutOfSupportedRange { .. })));
    assert!(matches!(CensusRequest::new(7, 3), Err(EnumerateError::InvalidRequest { .. })));
    assert!(matches!(CensusRequest::new(4, 4), Err(EnumerateError::InvalidRequest { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_code_is_a_relabelling_invariant(
        n in 0usize..=9,
        seed in any::<u64>(),
        p in 0.1f64..0.9,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, p, &mut rng);
        let h = shuffled(&g, &mut rng);
        let code = canonical_code(&g);
        prop_assert_eq!(code, canonical_code(&h));
        let back = graph_from_code(n, code);
        prop_assert_eq!(canonical_code(&back), code);
        prop_assert_eq!(back.edge_count(), g.edge_count());
    }
}
