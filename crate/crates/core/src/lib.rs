//! Spectral certification of graph connectivity.
//!
//! This crate certifies lower bounds on the vertex-connectivity `κ(G)` and
//! edge-connectivity `κ'(G)` of simple graphs from eigenvalue conditions on
//! the Laplacian `L = D − A`, the adjacency matrix `A`, and the signless
//! Laplacian `Q = D + A`. The certified conditions are sufficient, never
//! necessary: a `NotCertified` verdict says nothing about the actual
//! connectivity.
//!
//! Alongside the certifier, the crate ships the exact machinery needed to
//! validate every certified condition empirically on small graphs:
//!
//! * [`graph`] — immutable simple graphs, vertex subsets, cut queries;
//! * [`graph6`] — bit-exact reader/writer for the graph6 exchange format;
//! * [`invariants`] — exact girth, clique number, and both connectivities
//!   (max-flow based), with cut witnesses;
//! * [`spectra`] — a dense cyclic-Jacobi eigensolver plus the spectral
//!   quantities and Rayleigh-quotient cut bounds the certifier consumes;
//! * [`bounds`] — the closed-form thresholds (Moore bound, clique-based
//!   thresholds, eigenvalue-ratio conditions, small-order rules);
//! * [`certify`] — per-graph certificates and threshold comparison reports;
//! * [`corpus`] — exhaustive labeled enumeration, seeded G(n,p), and named
//!   graph families;
//! * [`verify`] — the verification harness that sweeps corpora for
//!   counterexamples to every certified condition (expected: none).
//!
//! The crate is `no_std`-compatible (with `alloc`); enable the `libm`
//! feature instead of `std` for embedded builds.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("specon requires either the `std` feature or the `libm` feature");

extern crate alloc;

pub mod bounds;
pub mod certify;
pub mod corpus;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod spectra;
pub mod verify;

mod flow;

/// Symmetric slack used when testing a spectral hypothesis against its
/// threshold. A hypothesis `μ ≥ threshold` is deemed satisfied when
/// `μ ≥ threshold − EPS`; strict hypotheses that sit within `EPS` of their
/// threshold are flagged as razor edges by the verification harness rather
/// than trusted silently.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Float shims so the crate builds without `std` (where `f64::sqrt` and
/// `f64::abs` are unavailable).
pub(crate) mod math {
    #[cfg(feature = "std")]
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }

    #[cfg(all(not(feature = "std"), feature = "libm"))]
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }

    #[cfg(feature = "std")]
    #[inline]
    pub fn abs(x: f64) -> f64 {
        x.abs()
    }

    #[cfg(all(not(feature = "std"), feature = "libm"))]
    #[inline]
    pub fn abs(x: f64) -> f64 {
        libm::fabs(x)
    }
}
