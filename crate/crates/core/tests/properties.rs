//! Module-invariant sweeps and randomized property tests: the exact
//! oracles against independent brute force, graph6 round-trips over the
//! full enumeration corpus, and spectral identities.

mod common;

use proptest::prelude::*;
use specon::corpus::{self, ExhaustiveFilter};
use specon::graph::{Graph, VertexSet};
use specon::graph6;
use specon::invariants::{self, Girth};
use specon::spectra;

/// Brute force vs the fast oracles over every labeled graph up to n = 6,
/// and (sharded) over every labeled graph on 7 vertices.
#[test]
fn oracles_match_brute_force_up_to_n6() {
    for n in 1..=6 {
        for g in corpus::enumerate_labeled(n, ExhaustiveFilter::default()).unwrap() {
            assert_oracles_match(&g);
        }
    }
}

#[test]
fn oracles_match_brute_force_n7() {
    let threads = std::thread::available_parallelism().map_or(1, |t| t.get());
    let total = corpus::edge_mask_count(7);
    let chunk = total.div_ceil(threads as u64 * 4);
    std::thread::scope(|scope| {
        let mut start = 0;
        while start < total {
            let end = (start + chunk).min(total);
            scope.spawn(move || {
                let graphs =
                    corpus::enumerate_labeled_range(7, ExhaustiveFilter::default(), start..end)
                        .unwrap();
                for g in graphs {
                    assert_oracles_match(&g);
                }
            });
            start = end;
        }
    });
}

fn assert_oracles_match(g: &Graph) {
    let girth = invariants::girth(g);
    let expected_girth = common::bf_girth(g);
    match (girth, expected_girth) {
        (Girth::Finite(a), Some(b)) => assert_eq!(a, b, "girth of {:?}", g),
        (Girth::Acyclic, None) => {}
        other => panic!("girth mismatch {other:?} for {g:?}"),
    }
    assert_eq!(
        invariants::clique_number(g),
        common::bf_clique_number(g),
        "clique number of {g:?}"
    );
    assert_eq!(
        invariants::edge_connectivity(g),
        common::bf_edge_connectivity(g),
        "edge connectivity of {g:?}"
    );
    assert_eq!(
        invariants::vertex_connectivity(g),
        common::bf_vertex_connectivity(g),
        "vertex connectivity of {g:?}"
    );
}

/// Witness contracts over every connected graph up to n = 6: the edge
/// witness side realizes the cut with both sides connected, and the vertex
/// witness cut disconnects the graph with the claimed smallest component.
#[test]
fn witnesses_valid_up_to_n6() {
    for n in 2..=6 {
        for g in corpus::enumerate_labeled(n, ExhaustiveFilter::connected()).unwrap() {
            let (kappa_prime, x) = invariants::edge_connectivity_witness(&g).unwrap();
            assert_eq!(kappa_prime, invariants::edge_connectivity(&g));
            assert_eq!(g.cut_degree(&x).unwrap(), kappa_prime);
            assert!(x.len() <= g.order() / 2 && !x.is_empty());
            let (inside, _) = g.induced_delete(&x.complement()).unwrap();
            let (outside, _) = g.induced_delete(&x).unwrap();
            assert!(inside.is_connected() && outside.is_connected());

            if !invariants::is_complete(&g) {
                let (kappa, s, comp) = invariants::vertex_connectivity_witness(&g).unwrap();
                assert_eq!(kappa, invariants::vertex_connectivity(&g));
                assert_eq!(s.len(), kappa);
                let (rest, _) = g.induced_delete(&s).unwrap();
                assert!(!rest.is_connected());
                assert!(!comp.is_empty() && comp.is_disjoint(&s));
            }
        }
    }
}

/// graph6 round-trip identity over the full enumeration corpus `n ≤ 7`.
#[test]
fn graph6_round_trip_full_sweep() {
    for n in 1..=6 {
        for g in corpus::enumerate_labeled(n, ExhaustiveFilter::default()).unwrap() {
            assert_eq!(graph6::parse(&graph6::write(&g)).unwrap(), g);
        }
    }
    let threads = std::thread::available_parallelism().map_or(1, |t| t.get());
    let total = corpus::edge_mask_count(7);
    let chunk = total.div_ceil(threads as u64);
    std::thread::scope(|scope| {
        let mut start = 0;
        while start < total {
            let end = (start + chunk).min(total);
            scope.spawn(move || {
                let graphs =
                    corpus::enumerate_labeled_range(7, ExhaustiveFilter::default(), start..end)
                        .unwrap();
                for g in graphs {
                    assert_eq!(graph6::parse(&graph6::write(&g)).unwrap(), g);
                }
            });
            start = end;
        }
    });
}

/// Laplacian identities over every graph on up to 6 vertices: the trace
/// equals twice the edge count, the spectrum is nonnegative with smallest
/// value ~0, the multiplicity of ~0 counts components, and the eigenvalue
/// transfer inequality `b·μ_{n−1} + λ₂(aD+bA) ≥ (a+b)δ` holds for the
/// three pencils exercised everywhere.
#[test]
fn laplacian_identities_up_to_n6() {
    for n in 2..=6 {
        for g in corpus::enumerate_labeled(n, ExhaustiveFilter::default()).unwrap() {
            assert_laplacian_identities(&g);
            let s = spectra::eigenvalues_sym(&spectra::laplacian(&g)).unwrap();
            let mu_n1 = s.values[n - 2];
            let delta = g.min_degree() as f64;
            for (a, b) in [(0.0, 1.0), (1.0, 1.0), (1.0, 2.0)] {
                let lambda2 = spectra::pencil_lambda2(&g, a, b).unwrap();
                assert!(
                    b * mu_n1 + lambda2 >= (a + b) * delta - 1e-7,
                    "transfer inequality for (a,b)=({a},{b}) on {g:?}"
                );
            }
        }
    }
}

/// The pure Laplacian identities extended over all graphs on 7 vertices.
#[test]
fn laplacian_identities_n7() {
    let threads = std::thread::available_parallelism().map_or(1, |t| t.get());
    let total = corpus::edge_mask_count(7);
    let chunk = total.div_ceil(threads as u64 * 4);
    std::thread::scope(|scope| {
        let mut start = 0;
        while start < total {
            let end = (start + chunk).min(total);
            scope.spawn(move || {
                let graphs =
                    corpus::enumerate_labeled_range(7, ExhaustiveFilter::default(), start..end)
                        .unwrap();
                for g in graphs {
                    assert_laplacian_identities(&g);
                }
            });
            start = end;
        }
    });
}

fn assert_laplacian_identities(g: &Graph) {
    let n = g.order();
    let s = spectra::eigenvalues_sym(&spectra::laplacian(g)).unwrap();
    let trace: f64 = s.values.iter().sum();
    assert!((trace - 2.0 * g.size() as f64).abs() < 1e-8);
    assert!(
        s.values[n - 1].abs() <= 1e-9,
        "smallest Laplacian eigenvalue of {g:?}"
    );
    assert!(s.values.iter().all(|&v| v > -1e-9));
    let zeros = s.values.iter().filter(|&&v| v < 1e-7).count();
    assert_eq!(zeros, g.components().len(), "zero multiplicity of {g:?}");
}

/// The cut quotient dominates the algebraic connectivity for every
/// admissible subset, exhaustively on all connected graphs up to n = 6
/// (the campaign covers n = 7; this pins the spectra-level API).
#[test]
fn cut_quotients_dominate_algebraic_connectivity() {
    for n in 2..=6 {
        for g in corpus::enumerate_labeled(n, ExhaustiveFilter::connected()).unwrap() {
            let mu = spectra::algebraic_connectivity(&g).unwrap();
            for mask in 1..(1u64 << n) - 1 {
                let x = VertexSet::from_members(
                    n,
                    &(0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>(),
                );
                let q = spectra::cut_quotient_bound(&g, &x).unwrap();
                assert!(q >= mu - 1e-7, "X={x:?} on {g:?}: {q} < {mu}");
            }
        }
    }
}

proptest! {
    /// Handshake and cut symmetry on random graphs beyond the enumeration
    /// sizes.
    #[test]
    fn handshake_and_cut_symmetry(n in 2usize..30, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = corpus::random_gnp(n, p, seed);
        let degree_sum: usize = (0..n).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.size());

        let mut x = VertexSet::empty(n);
        for v in 0..n {
            if (seed >> (v % 60)) & 1 == 1 {
                x.insert(v);
            }
        }
        if !x.is_empty() && x.len() < n {
            let y = x.complement();
            prop_assert_eq!(g.cut_degree(&x).unwrap(), g.cut_degree(&y).unwrap());
        }
    }

    /// graph6 round-trips on random graphs, including orders past the
    /// short form.
    #[test]
    fn graph6_round_trip_random(n in 1usize..80, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = corpus::random_gnp(n, p, seed);
        prop_assert_eq!(graph6::parse(&graph6::write(&g)).unwrap(), g);
    }

    /// The Whitney chain κ ≤ κ' ≤ δ on random graphs.
    #[test]
    fn whitney_chain_random(n in 2usize..16, p in 0.05f64..0.95, seed in any::<u64>()) {
        let g = corpus::random_gnp(n, p, seed);
        let kappa = invariants::vertex_connectivity(&g);
        let kappa_prime = invariants::edge_connectivity(&g);
        prop_assert!(kappa <= kappa_prime);
        prop_assert!(kappa_prime <= g.min_degree());
    }

    /// Spectrum sanity on random graphs: descending order, trace identity,
    /// tiny residual.
    #[test]
    fn spectrum_sane_random(n in 2usize..24, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = corpus::random_gnp(n, p, seed);
        let s = spectra::eigenvalues_sym(&spectra::laplacian(&g)).unwrap();
        prop_assert!(s.values.windows(2).all(|w| w[0] >= w[1]));
        let trace: f64 = s.values.iter().sum();
        prop_assert!((trace - 2.0 * g.size() as f64).abs() < 1e-7);
        prop_assert!(s.residual < 1e-8);
    }

    /// The eigenvalue transfer inequality `b·μ_{n−1} + λ₂(aD+bA) ≥ (a+b)δ`
    /// at random pencil parameters on random graphs.
    #[test]
    fn pencil_transfer_random(
        n in 2usize..14,
        p in 0.0f64..1.0,
        seed in any::<u64>(),
        a in -1.0f64..3.0,
        b in 0.1f64..3.0,
    ) {
        prop_assume!(a >= -b);
        let g = corpus::random_gnp(n, p, seed);
        let mu_n1 = spectra::algebraic_connectivity(&g).unwrap();
        let lambda2 = spectra::pencil_lambda2(&g, a, b).unwrap();
        let delta = g.min_degree() as f64;
        prop_assert!(b * mu_n1 + lambda2 >= (a + b) * delta - 1e-7);
    }

    /// The Fiedler quotient of arbitrary non-constant vectors dominates
    /// the algebraic connectivity on connected random graphs.
    #[test]
    fn fiedler_quotient_dominates(
        n in 2usize..12,
        p in 0.3f64..1.0,
        seed in any::<u64>(),
        raw in proptest::collection::vec(-100i32..100, 12),
    ) {
        let g = corpus::random_gnp(n, p, seed);
        if g.is_connected() {
            let x: Vec<f64> = raw.iter().take(n).map(|&v| v as f64).collect();
            if x.iter().any(|&v| v != x[0]) {
                let mu = spectra::algebraic_connectivity(&g).unwrap();
                let q = spectra::fiedler_quotient(&g, &x).unwrap();
                prop_assert!(q >= mu - 1e-7, "{q} < {mu}");
            }
        }
    }
}
