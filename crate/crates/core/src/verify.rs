//! The empirical verification harness: sweeps corpora for counterexamples
//! to every certified condition and every supporting inequality
//! (expected: none).
//!
//! Each property check either passes silently or produces a counterexample
//! payload carrying the graph6 string, the witness sets, and both sides of
//! the violated inequality, so any failure reproduces by paste. Strict
//! hypotheses that sit within `ε` of their threshold are logged separately
//! as razor edges: numerically `>` and `=` are indistinguishable there,
//! and the conditions are strict for a reason.
//!
//! The harness is falsifiable by construction: the `mutated-vertex-girth`
//! property halves a valid threshold and must produce counterexamples on
//! any small corpus (a harness that cannot fail verifies nothing).

use crate::bounds::{self, ParamSet, Target, TheoremId};
use crate::certify::{self, RowOutcome, ALL_ROWS};
use crate::corpus::{CorpusError, CorpusSource, SplitMix64};
use crate::graph::{bits, Graph, VertexSet};
use crate::graph6;
use crate::invariants::{self, Girth};
use crate::spectra::{self, SpectralProfile};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Numerical slack for the lemma-level inequalities (the certification
/// slack [`crate::DEFAULT_EPS`] is separate and tighter).
pub const LEMMA_SLACK: f64 = 1e-7;

/// Verifiable properties. The mutated fixture is excluded from
/// [`Property::all`]; it exists to prove the harness can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Property {
    /// Subsets with small cut degree are large: `d(X) < δ ⇒ |X| ≥ φ(δ,r)`.
    SubsetSize,
    /// Component size bounds under a vertex cut with `|S| < δ`.
    ComponentSize,
    /// Girth-based component bound `|X| ≥ N(δ,g) − |S|`.
    GirthComponent,
    /// Edge-cut side bound: `d(X) < δ ⇒ |X| ≥ N(δ,g)`.
    EdgeCutSide,
    /// Both Rayleigh cut-quotient upper bounds on `μ_{n−1}`.
    FiedlerBounds,
    /// The chain `μ_{n−1} ≤ κ ≤ κ' ≤ δ`.
    FiedlerChain,
    /// The two disjoint-pair eigenvalue inequalities.
    HaemersPairs,
    /// Every certified condition against the exact oracles.
    TheoremSoundness,
    /// Deliberately falsified fixture: the vertex girth threshold halved.
    MutatedVertexGirth,
}

impl Property {
    pub fn id(self) -> &'static str {
        match self {
            Self::SubsetSize => "subset-size",
            Self::ComponentSize => "component-size",
            Self::GirthComponent => "girth-component",
            Self::EdgeCutSide => "edge-cut-side",
            Self::FiedlerBounds => "fiedler-bounds",
            Self::FiedlerChain => "fiedler-chain",
            Self::HaemersPairs => "haemers-pairs",
            Self::TheoremSoundness => "theorem-soundness",
            Self::MutatedVertexGirth => "mutated-vertex-girth",
        }
    }

    /// The real properties, i.e. everything except the mutated fixture.
    pub fn all() -> [Property; 8] {
        [
            Self::SubsetSize,
            Self::ComponentSize,
            Self::GirthComponent,
            Self::EdgeCutSide,
            Self::FiedlerBounds,
            Self::FiedlerChain,
            Self::HaemersPairs,
            Self::TheoremSoundness,
        ]
    }

    pub fn parse(text: &str) -> Option<Property> {
        Property::all()
            .into_iter()
            .chain([Self::MutatedVertexGirth])
            .find(|p| p.id() == text)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Enumeration ceilings. Exponential loops need explicit caps; these are
/// the safe defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Exhaustive cut enumeration up to this order.
    pub cut_cap: usize,
    /// Exhaustive disjoint-pair enumeration up to this order.
    pub pair_cap: usize,
    /// Exhaustive subset sweeps for the quotient bounds up to this order.
    pub subset_cap: usize,
    /// Sample count per graph above the exhaustive caps.
    pub samples: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            cut_cap: 12,
            pair_cap: 6,
            subset_cap: 7,
            samples: 1000,
        }
    }
}

/// Campaign configuration.
#[derive(Debug, Clone)]
pub struct CampaignConfig {
    /// Properties to check, deduplicated and kept sorted.
    pub properties: Vec<Property>,
    pub caps: Caps,
    /// Certification threshold slack.
    pub eps: f64,
    /// Seed for the sampled sweeps (combined with a per-graph content
    /// hash, so results do not depend on corpus partitioning).
    pub seed: u64,
}

impl CampaignConfig {
    pub fn new(mut properties: Vec<Property>, seed: u64) -> Self {
        properties.sort_unstable();
        properties.dedup();
        Self {
            properties,
            caps: Caps::default(),
            eps: crate::DEFAULT_EPS,
            seed,
        }
    }
}

/// A violated inequality, minus the graph identity (the campaign adds it).
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub theorem: Option<TheoremId>,
    pub k: Option<usize>,
    /// Human-readable witness: the sets involved and both sides.
    pub witness: String,
    pub lhs: f64,
    pub rhs: f64,
}

/// A strict hypothesis that sat within `ε` of its threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct RazorInfo {
    pub theorem: TheoremId,
    pub k: usize,
    pub lhs: f64,
    pub rhs: f64,
}

/// Result of one lemma check over one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    /// Number of inequality instances evaluated.
    pub checks: u64,
    pub violation: Option<Violation>,
}

impl CheckOutcome {
    fn clean(checks: u64) -> Self {
        Self {
            checks,
            violation: None,
        }
    }
}

/// Result of the soundness check over one graph.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SoundnessOutcome {
    pub checks: u64,
    pub counterexamples: Vec<Violation>,
    pub razor_edges: Vec<RazorInfo>,
}

/// A property violation found during a campaign.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub property: Property,
    pub graph6: String,
    pub theorem: Option<TheoremId>,
    pub k: Option<usize>,
    pub witness: String,
    pub lhs: f64,
    pub rhs: f64,
}

/// A razor edge found during a campaign.
#[derive(Debug, Clone, PartialEq)]
pub struct RazorEdge {
    pub property: Property,
    pub graph6: String,
    pub theorem: TheoremId,
    pub k: usize,
    pub lhs: f64,
    pub rhs: f64,
}

/// Summary of one verification campaign.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CampaignResult {
    pub graphs_checked: u64,
    /// Inequality instances evaluated, per property id.
    pub checks_run: BTreeMap<&'static str, u64>,
    pub counterexamples: Vec<Counterexample>,
    pub razor_edges: Vec<RazorEdge>,
    /// Wall-clock seconds, set by the driver; deliberately excluded from
    /// canonical serializations so identical runs stay byte-identical.
    pub elapsed_seconds: f64,
}

impl CampaignResult {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Deterministic order regardless of how the work was partitioned.
    fn normalize(&mut self) {
        self.counterexamples.sort_by(|a, b| {
            (
                a.property,
                &a.graph6,
                a.theorem.map(TheoremId::as_str),
                a.k,
                &a.witness,
            )
                .cmp(&(
                    b.property,
                    &b.graph6,
                    b.theorem.map(TheoremId::as_str),
                    b.k,
                    &b.witness,
                ))
        });
        self.razor_edges.sort_by(|a, b| {
            (a.property, &a.graph6, a.theorem.as_str(), a.k).cmp(&(
                b.property,
                &b.graph6,
                b.theorem.as_str(),
                b.k,
            ))
        });
    }

    /// Merges partial results from a partitioned run.
    pub fn merge(parts: Vec<CampaignResult>) -> CampaignResult {
        let mut out = CampaignResult::default();
        for part in parts {
            out.graphs_checked += part.graphs_checked;
            for (key, count) in part.checks_run {
                *out.checks_run.entry(key).or_insert(0) += count;
            }
            out.counterexamples.extend(part.counterexamples);
            out.razor_edges.extend(part.razor_edges);
            out.elapsed_seconds = out.elapsed_seconds.max(part.elapsed_seconds);
        }
        out.normalize();
        out
    }
}

/// Runs every configured property over the corpus, single-threaded.
/// Partition the source with [`CorpusSource::partition`] and merge with
/// [`CampaignResult::merge`] for parallel runs; the merged result is
/// identical to the serial one.
pub fn run_campaign(
    source: &CorpusSource,
    config: &CampaignConfig,
) -> Result<CampaignResult, CorpusError> {
    let graphs = source.iter()?;
    let mut result = CampaignResult::default();
    for property in &config.properties {
        result.checks_run.entry(property.id()).or_insert(0);
    }
    for g in graphs {
        result.graphs_checked += 1;
        check_graph(&g, config, &mut result);
    }
    result.normalize();
    Ok(result)
}

fn record(result: &mut CampaignResult, property: Property, graph6: String, outcome: CheckOutcome) {
    *result.checks_run.entry(property.id()).or_insert(0) += outcome.checks;
    if let Some(v) = outcome.violation {
        result.counterexamples.push(Counterexample {
            property,
            graph6,
            theorem: v.theorem,
            k: v.k,
            witness: v.witness,
            lhs: v.lhs,
            rhs: v.rhs,
        });
    }
}

fn check_graph(g: &Graph, config: &CampaignConfig, result: &mut CampaignResult) {
    let connected = g.is_connected();
    let min_degree = g.min_degree();
    let wants = |p: Property| config.properties.contains(&p);

    let mut g6_cache: Option<String> = None;
    macro_rules! g6 {
        () => {
            g6_cache.get_or_insert_with(|| graph6::write(g)).clone()
        };
    }

    let needs_omega = wants(Property::SubsetSize) || wants(Property::ComponentSize);
    let omega = if needs_omega {
        Some(invariants::clique_number(g))
    } else {
        None
    };
    let needs_mu = connected
        && g.order() >= 2
        && (wants(Property::FiedlerBounds)
            || wants(Property::FiedlerChain)
            || wants(Property::HaemersPairs));
    let l_extremes = if needs_mu {
        let s = spectra::eigenvalues_sym(&spectra::laplacian(g)).expect("Jacobi converges");
        Some((s.values[0], s.values[g.order() - 2]))
    } else {
        None
    };

    if wants(Property::SubsetSize) {
        let r = omega.unwrap().max(2);
        let outcome = check_subset_size_lemma(g, r, &config.caps);
        record(result, Property::SubsetSize, g6!(), outcome);
    }
    if wants(Property::ComponentSize) {
        let r = omega.unwrap().max(2);
        let outcome = check_component_size_lemma(g, r, &config.caps);
        record(result, Property::ComponentSize, g6!(), outcome);
    }
    if wants(Property::GirthComponent) && connected {
        let outcome = check_girth_component_lemma(g, &config.caps);
        record(result, Property::GirthComponent, g6!(), outcome);
    }
    if wants(Property::EdgeCutSide) && connected {
        let outcome = check_edge_cut_side_lemma(g, &config.caps);
        record(result, Property::EdgeCutSide, g6!(), outcome);
    }
    if connected && g.order() >= 2 {
        if wants(Property::FiedlerBounds) {
            let (_, mu) = l_extremes.unwrap();
            let seed = config.seed ^ fnv1a64(g6!().as_bytes());
            let outcome = check_fiedler_bounds(g, mu, &config.caps, seed);
            record(result, Property::FiedlerBounds, g6!(), outcome);
        }
        if wants(Property::FiedlerChain) {
            let (_, mu) = l_extremes.unwrap();
            let outcome = check_fiedler_chain(g, mu);
            record(result, Property::FiedlerChain, g6!(), outcome);
        }
        if wants(Property::HaemersPairs) {
            let (mu1, mu) = l_extremes.unwrap();
            let seed = config.seed ^ fnv1a64(g6!().as_bytes());
            let outcome = check_haemers_pair_bounds(g, mu1, mu, &config.caps, seed);
            record(result, Property::HaemersPairs, g6!(), outcome);
        }
    }
    if connected && min_degree >= 2 {
        if wants(Property::TheoremSoundness) {
            let outcome = check_theorem_soundness(g, config.eps);
            *result
                .checks_run
                .entry(Property::TheoremSoundness.id())
                .or_insert(0) += outcome.checks;
            for v in outcome.counterexamples {
                result.counterexamples.push(Counterexample {
                    property: Property::TheoremSoundness,
                    graph6: g6!(),
                    theorem: v.theorem,
                    k: v.k,
                    witness: v.witness,
                    lhs: v.lhs,
                    rhs: v.rhs,
                });
            }
            for r in outcome.razor_edges {
                result.razor_edges.push(RazorEdge {
                    property: Property::TheoremSoundness,
                    graph6: g6!(),
                    theorem: r.theorem,
                    k: r.k,
                    lhs: r.lhs,
                    rhs: r.rhs,
                });
            }
        }
        if wants(Property::MutatedVertexGirth) {
            let outcome = check_mutated_vertex_girth(g, config.eps);
            record(result, Property::MutatedVertexGirth, g6!(), outcome);
        }
    }
}

/// FNV-1a over the graph6 bytes; mixes the campaign seed with graph
/// identity so sampled sweeps are independent of corpus partitioning.
fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn set_from_mask(mask: u64) -> String {
    let members: Vec<String> = bits(mask).map(|v| format!("{v}")).collect();
    format!("{{{}}}", members.join(","))
}

/// `d(X) < δ ⇒ |X| ≥ φ(δ, r)` over all nonempty proper subsets, for any
/// graph with `ω(G) ≤ r` and `r ≥ 2`. Exhaustive up to `caps.cut_cap`,
/// skipped above.
pub fn check_subset_size_lemma(g: &Graph, r: usize, caps: &Caps) -> CheckOutcome {
    let n = g.order();
    let delta = g.min_degree();
    let (Some(rows), true) = (g.mask_rows(), n <= caps.cut_cap) else {
        return CheckOutcome::clean(0);
    };
    let phi = bounds::phi(delta.max(1), r).expect("r >= 2");
    let mut checks = 0;
    for mask in 1..(1u64 << n) - 1 {
        checks += 1;
        let d = mask_cut_degree(rows, mask);
        if d < delta {
            let size = mask.count_ones() as u64;
            if size < phi {
                return CheckOutcome {
                    checks,
                    violation: Some(Violation {
                        theorem: None,
                        k: None,
                        witness: format!(
                            "X={} with d(X)={d} < delta={delta} but |X|={size} < phi={phi}",
                            set_from_mask(mask)
                        ),
                        lhs: size as f64,
                        rhs: phi as f64,
                    }),
                };
            }
        }
    }
    CheckOutcome::clean(checks)
}

/// Clique-based component bounds under a vertex cut `S` with `|S| < δ`,
/// `δ ≥ 2`, `ω(G) ≤ r`: with `r ≥ 3`,
/// `|X| ≥ min{(r−1)(δ−|S|)/(r−2), rδ/(r−1)−|S|}`; the first branch is
/// forced when `|S| ≥ δ/(r−1)`, the second when `|S| < δ/(r−1)` (the only
/// branch stated for `r = 2`).
pub fn check_component_size_lemma(g: &Graph, r: usize, caps: &Caps) -> CheckOutcome {
    let n = g.order();
    let delta = g.min_degree();
    let (Some(rows), true) = (g.mask_rows(), n <= caps.cut_cap && delta >= 2) else {
        return CheckOutcome::clean(0);
    };
    let full = full_mask(n);
    let mut checks = 0;
    for s_mask in 1..(1u64 << n) - 1 {
        let s = s_mask.count_ones() as usize;
        if s >= delta {
            continue;
        }
        let comps = mask_components(rows, full & !s_mask);
        if comps.len() < 2 {
            continue;
        }
        for &x_mask in &comps {
            checks += 1;
            let x = x_mask.count_ones() as i64;
            let (ri, di, si) = (r as i64, delta as i64, s as i64);
            // branch A: |X|(r−2) ≥ (r−1)(δ−|S|); branch B: |X|(r−1) ≥ rδ − |S|(r−1)
            let a_holds = ri >= 3 && x * (ri - 2) >= (ri - 1) * (di - si);
            let b_holds = x * (ri - 1) >= ri * di - si * (ri - 1);
            let part_i_ok = ri < 3 || a_holds || b_holds;
            let part_ii_ok = !(ri >= 3 && si * (ri - 1) >= di) || a_holds;
            let part_iii_ok = !(si * (ri - 1) < di) || b_holds;
            if !(part_i_ok && part_ii_ok && part_iii_ok) {
                return CheckOutcome {
                    checks,
                    violation: Some(Violation {
                        theorem: None,
                        k: None,
                        witness: format!(
                            "S={} X={} |S|={s} |X|={x} r={r} delta={delta}",
                            set_from_mask(s_mask),
                            set_from_mask(x_mask)
                        ),
                        lhs: x as f64,
                        rhs: (ri * di) as f64 / (ri - 1) as f64 - si as f64,
                    }),
                };
            }
        }
    }
    CheckOutcome::clean(checks)
}

/// Girth-based component bound under a vertex cut `S` with `|S| < δ`:
/// `|X| ≥ N(δ,g) − |S|` for connected graphs with `δ ≥ 2`.
pub fn check_girth_component_lemma(g: &Graph, caps: &Caps) -> CheckOutcome {
    let n = g.order();
    let delta = g.min_degree();
    let (Some(rows), true) = (g.mask_rows(), n <= caps.cut_cap && delta >= 2) else {
        return CheckOutcome::clean(0);
    };
    let Girth::Finite(girth) = invariants::girth(g) else {
        return CheckOutcome::clean(0); // δ ≥ 2 forces a cycle; defensive
    };
    let big_n = bounds::moore_bound(delta, girth).expect("delta >= 2, girth >= 3") as i64;
    let full = full_mask(n);
    let mut checks = 0;
    for s_mask in 1..(1u64 << n) - 1 {
        let s = s_mask.count_ones() as usize;
        if s >= delta {
            continue;
        }
        let comps = mask_components(rows, full & !s_mask);
        if comps.len() < 2 {
            continue;
        }
        for &x_mask in &comps {
            checks += 1;
            let x = x_mask.count_ones() as i64;
            if x < big_n - s as i64 {
                return CheckOutcome {
                    checks,
                    violation: Some(Violation {
                        theorem: None,
                        k: None,
                        witness: format!(
                            "S={} X={} |X|={x} < N(delta,g)-|S|={}",
                            set_from_mask(s_mask),
                            set_from_mask(x_mask),
                            big_n - s as i64
                        ),
                        lhs: x as f64,
                        rhs: (big_n - s as i64) as f64,
                    }),
                };
            }
        }
    }
    CheckOutcome::clean(checks)
}

/// Edge-cut side bound for connected graphs with `δ ≥ 2`:
/// `d(X) < δ ⇒ |X| ≥ N(δ,g)`.
pub fn check_edge_cut_side_lemma(g: &Graph, caps: &Caps) -> CheckOutcome {
    let n = g.order();
    let delta = g.min_degree();
    let (Some(rows), true) = (g.mask_rows(), n <= caps.cut_cap && delta >= 2) else {
        return CheckOutcome::clean(0);
    };
    let Girth::Finite(girth) = invariants::girth(g) else {
        return CheckOutcome::clean(0);
    };
    let big_n = bounds::moore_bound(delta, girth).expect("delta >= 2, girth >= 3");
    let mut checks = 0;
    for mask in 1..(1u64 << n) - 1 {
        checks += 1;
        let d = mask_cut_degree(rows, mask);
        if d < delta && (mask.count_ones() as u64) < big_n {
            return CheckOutcome {
                checks,
                violation: Some(Violation {
                    theorem: None,
                    k: None,
                    witness: format!(
                        "X={} with d(X)={d} < delta={delta} but |X|={} < N={big_n}",
                        set_from_mask(mask),
                        mask.count_ones()
                    ),
                    lhs: mask.count_ones() as f64,
                    rhs: big_n as f64,
                }),
            };
        }
    }
    CheckOutcome::clean(checks)
}

/// Both Rayleigh cut-quotient bounds dominate `μ_{n−1}`:
/// `μ ≤ n·d(X)/(|X||Y|)` for every nonempty proper `X`, and
/// `μ ≤ n·d(S)/(n(n−|S|)−(|X|−|Y|)²)` for every vertex cut `S` with a
/// component `X`. Exhaustive up to `caps.subset_cap`, seeded sampling
/// above.
pub fn check_fiedler_bounds(g: &Graph, mu: f64, caps: &Caps, seed: u64) -> CheckOutcome {
    let n = g.order();
    let mut checks = 0;
    let floor = mu - LEMMA_SLACK;
    if n <= caps.subset_cap && g.mask_rows().is_some() {
        let rows = g.mask_rows().expect("checked above");
        let full = full_mask(n);
        for mask in 1..(1u64 << n) - 1 {
            checks += 1;
            let d = mask_cut_degree(rows, mask);
            let x = mask.count_ones() as f64;
            let quotient = n as f64 * d as f64 / (x * (n as f64 - x));
            if quotient < floor {
                return CheckOutcome {
                    checks,
                    violation: Some(Violation {
                        theorem: None,
                        k: None,
                        witness: format!(
                            "cut quotient for X={}: {quotient:?} < mu={mu:?}",
                            set_from_mask(mask)
                        ),
                        lhs: quotient,
                        rhs: mu,
                    }),
                };
            }
        }
        for s_mask in 1..(1u64 << n) - 1 {
            let comps = mask_components(rows, full & !s_mask);
            if comps.len() < 2 {
                continue;
            }
            let s = s_mask.count_ones() as f64;
            let ds = mask_cut_degree(rows, s_mask) as f64;
            for &x_mask in &comps {
                checks += 1;
                let x = x_mask.count_ones() as f64;
                let y = n as f64 - s - x;
                let quotient = n as f64 * ds / (n as f64 * (n as f64 - s) - (x - y) * (x - y));
                if quotient < floor {
                    return CheckOutcome {
                        checks,
                        violation: Some(Violation {
                            theorem: None,
                            k: None,
                            witness: format!(
                                "vertex-cut quotient for S={} X={}: {quotient:?} < mu={mu:?}",
                                set_from_mask(s_mask),
                                set_from_mask(x_mask)
                            ),
                            lhs: quotient,
                            rhs: mu,
                        }),
                    };
                }
            }
        }
        return CheckOutcome::clean(checks);
    }

    // Sampled sweep: random subsets X, with the induced cut S = N(X)∖X
    // exercising the vertex-cut quotient whenever the remainder is
    // nonempty.
    let mut rng = SplitMix64::new(seed);
    for _ in 0..caps.samples {
        checks += 1;
        let mut x = VertexSet::empty(n);
        for v in 0..n {
            if rng.next_u64() & 1 == 1 {
                x.insert(v);
            }
        }
        let size = x.len();
        if size == 0 || size == n {
            continue;
        }
        let quotient = spectra::cut_quotient_bound(g, &x).expect("X is proper");
        if quotient < floor {
            return CheckOutcome {
                checks,
                violation: Some(Violation {
                    theorem: None,
                    k: None,
                    witness: format!("sampled cut quotient for X={x:?}: {quotient:?} < mu={mu:?}"),
                    lhs: quotient,
                    rhs: mu,
                }),
            };
        }
        // boundary of X as the vertex cut
        let mut s = VertexSet::empty(n);
        for v in x.iter() {
            for &w in g.neighbors(v) {
                if !x.contains(w) {
                    s.insert(w);
                }
            }
        }
        let mut xs = x.clone();
        xs.union_with(&s);
        if xs.len() == n || s.is_empty() {
            continue;
        }
        let quotient = spectra::vertex_cut_quotient_bound(g, &s, &x)
            .expect("X is a component union of G - N(X)");
        if quotient < floor {
            return CheckOutcome {
                checks,
                violation: Some(Violation {
                    theorem: None,
                    k: None,
                    witness: format!(
                        "sampled vertex-cut quotient for S={s:?} X={x:?}: {quotient:?} < mu={mu:?}"
                    ),
                    lhs: quotient,
                    rhs: mu,
                }),
            };
        }
    }
    CheckOutcome::clean(checks)
}

/// `μ_{n−1} ≤ κ ≤ κ' ≤ δ` for connected graphs. Complete graphs are
/// exempt from the first link: `μ_{n−1}(K_n) = n` exceeds the
/// conventional `κ(K_n) = n − 1`, and the inequality is classically
/// stated for non-complete graphs.
pub fn check_fiedler_chain(g: &Graph, mu: f64) -> CheckOutcome {
    let kappa = invariants::vertex_connectivity(g);
    let kappa_prime = invariants::edge_connectivity(g);
    let delta = g.min_degree();
    let mu_ok = invariants::is_complete(g) || mu <= kappa as f64 + LEMMA_SLACK;
    let ok = mu_ok && kappa <= kappa_prime && kappa_prime <= delta;
    CheckOutcome {
        checks: 1,
        violation: (!ok).then(|| Violation {
            theorem: None,
            k: None,
            witness: format!("chain mu={mu:?} kappa={kappa} kappa'={kappa_prime} delta={delta}"),
            lhs: mu,
            rhs: kappa as f64,
        }),
    }
}

fn pair_violation(
    n: usize,
    x_size: usize,
    y_size: usize,
    haemers_rhs: f64,
    bh_rhs: f64,
    witness: &dyn Fn() -> String,
) -> Option<Violation> {
    let relaxed = |rhs: f64| rhs + LEMMA_SLACK * rhs.abs().max(1.0);
    let (xf, yf, nf) = (x_size as f64, y_size as f64, n as f64);
    let haemers_lhs = xf * yf / ((nf - xf) * (nf - yf));
    if haemers_lhs > relaxed(haemers_rhs) {
        return Some(Violation {
            theorem: None,
            k: None,
            witness: format!(
                "pair bound {}: {haemers_lhs:?} > {haemers_rhs:?}",
                witness()
            ),
            lhs: haemers_lhs,
            rhs: haemers_rhs,
        });
    }
    if x_size + y_size < n {
        let bh_lhs = xf * yf / (nf * (nf - xf - yf));
        if bh_lhs > relaxed(bh_rhs) {
            return Some(Violation {
                theorem: None,
                k: None,
                witness: format!(
                    "connected pair bound {}: {bh_lhs:?} > {bh_rhs:?}",
                    witness()
                ),
                lhs: bh_lhs,
                rhs: bh_rhs,
            });
        }
    }
    None
}

/// Both disjoint-pair inequalities for connected graphs: over pairs of
/// disjoint nonempty `X`, `Y` with no edges between them,
/// `|X||Y|/((n−|X|)(n−|Y|)) ≤ ((μ₁−μ)/(μ₁+μ))²` and, when `X∪Y ≠ V`,
/// `|X||Y|/(n(n−|X|−|Y|)) ≤ (μ₁−μ)²/(4μ₁μ)`. Exhaustive up to
/// `caps.pair_cap`, seeded sampling above.
pub fn check_haemers_pair_bounds(
    g: &Graph,
    mu1: f64,
    mu: f64,
    caps: &Caps,
    seed: u64,
) -> CheckOutcome {
    let n = g.order();
    if mu <= 0.0 {
        return CheckOutcome::clean(0); // disconnected; hypotheses empty
    }
    let haemers_rhs = {
        let ratio = (mu1 - mu) / (mu1 + mu);
        ratio * ratio
    };
    let bh_rhs = (mu1 - mu) * (mu1 - mu) / (4.0 * mu1 * mu);
    let mut checks = 0;

    if n <= caps.pair_cap && g.mask_rows().is_some() {
        let rows = g.mask_rows().expect("checked above");
        // trit per vertex: 0 = neither, 1 = X, 2 = Y
        let total = 3u32.pow(n as u32);
        for code in 0..total {
            let (mut x_mask, mut y_mask) = (0u64, 0u64);
            let mut c = code;
            for v in 0..n {
                match c % 3 {
                    1 => x_mask |= 1 << v,
                    2 => y_mask |= 1 << v,
                    _ => {}
                }
                c /= 3;
            }
            if x_mask == 0 || y_mask == 0 {
                continue;
            }
            if bits(x_mask).any(|v| rows[v] & y_mask != 0) {
                continue; // an edge joins X and Y
            }
            checks += 1;
            let witness = || format!("X={} Y={}", set_from_mask(x_mask), set_from_mask(y_mask));
            if let Some(v) = pair_violation(
                n,
                x_mask.count_ones() as usize,
                y_mask.count_ones() as usize,
                haemers_rhs,
                bh_rhs,
                &witness,
            ) {
                return CheckOutcome {
                    checks,
                    violation: Some(v),
                };
            }
        }
        return CheckOutcome::clean(checks);
    }

    let mut rng = SplitMix64::new(seed);
    for _ in 0..caps.samples {
        let mut x = VertexSet::empty(n);
        let mut y = VertexSet::empty(n);
        for v in 0..n {
            match rng.next_u64() % 3 {
                1 => x.insert(v),
                2 => y.insert(v),
                _ => {}
            }
        }
        if x.is_empty() || y.is_empty() {
            continue;
        }
        if x.iter()
            .any(|v| g.neighbors(v).iter().any(|&w| y.contains(w)))
        {
            continue;
        }
        checks += 1;
        let witness = || format!("X={x:?} Y={y:?}");
        if let Some(v) = pair_violation(n, x.len(), y.len(), haemers_rhs, bh_rhs, &witness) {
            return CheckOutcome {
                checks,
                violation: Some(v),
            };
        }
    }
    CheckOutcome::clean(checks)
}

/// Every condition row against the exact oracles: a row that fires must be
/// matched by the oracle connectivity (equality to δ for the small-order
/// rows, `≥ k` otherwise). Firing rows within `ε` of their threshold are
/// logged as razor edges instead of counterexamples; strict rows within
/// `ε` are logged as razor edges regardless.
pub fn check_theorem_soundness(g: &Graph, eps: f64) -> SoundnessOutcome {
    let mut out = SoundnessOutcome::default();
    let delta = g.min_degree();
    if delta < 2 || !g.is_connected() {
        return out;
    }
    let profile = SpectralProfile::compute(g).expect("Jacobi converges");
    let girth = invariants::girth(g);
    let omega = invariants::clique_number(g);
    let kappa = invariants::vertex_connectivity(g);
    let kappa_prime = invariants::edge_connectivity(g);

    for k in 2..=delta {
        let params = ParamSet::new(g.order(), delta, g.max_degree(), girth, omega, k)
            .expect("connected graph with delta >= 2");
        for id in ALL_ROWS {
            let row = certify::evaluate_row(id, &params, &profile, eps);
            out.checks += 1;
            let (fired, lhs, rhs, margin) = match row.outcome {
                RowOutcome::Fired {
                    threshold,
                    lhs,
                    margin,
                } => (true, lhs, threshold, margin),
                RowOutcome::NotFired {
                    threshold,
                    lhs,
                    margin,
                } => (false, lhs, threshold, margin),
                RowOutcome::Inapplicable(_) => continue,
            };
            let razor = margin.abs() <= eps;
            if row.strict && razor {
                out.razor_edges.push(RazorInfo {
                    theorem: id,
                    k,
                    lhs,
                    rhs,
                });
            }
            if !fired {
                continue;
            }
            let oracle = match id.target() {
                Target::Edge => kappa_prime,
                Target::Vertex => kappa,
            };
            let claim_holds = match id {
                // the small-order rows assert equality with δ
                TheoremId::SmallOrderEdge | TheoremId::SmallOrderVertex => oracle == delta,
                _ => oracle >= k,
            };
            if !claim_holds {
                if razor {
                    // numerically indistinguishable from a non-firing
                    // hypothesis; logged for review, not failed
                    if !row.strict {
                        out.razor_edges.push(RazorInfo {
                            theorem: id,
                            k,
                            lhs,
                            rhs,
                        });
                    }
                } else {
                    out.counterexamples.push(Violation {
                        theorem: Some(id),
                        k: Some(k),
                        witness: format!(
                            "{id} fired at k={k} (lhs={lhs:?}, threshold={rhs:?}) but oracle {}-connectivity is {oracle}",
                            id.target().as_str()
                        ),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    out
}

/// The falsified fixture: the vertex girth threshold halved. On any corpus
/// containing a graph with a cut vertex, `δ ≥ 2`, and a healthy Fiedler
/// value, this must produce counterexamples — proving the harness can
/// catch a broken condition.
pub fn check_mutated_vertex_girth(g: &Graph, eps: f64) -> CheckOutcome {
    let delta = g.min_degree();
    if delta < 2 || !g.is_connected() {
        return CheckOutcome::clean(0);
    }
    let mu = spectra::algebraic_connectivity(g).expect("connected, n >= 2");
    let girth = invariants::girth(g);
    let omega = invariants::clique_number(g);
    let kappa = invariants::vertex_connectivity(g);
    let mut checks = 0;
    for k in 2..=delta {
        let params = ParamSet::new(g.order(), delta, g.max_degree(), girth, omega, k)
            .expect("connected graph with delta >= 2");
        let threshold = bounds::vertex_girth_threshold(&params);
        let Some(value) = threshold.value.value() else {
            continue;
        };
        let mutated = 0.5 * value;
        checks += 1;
        if mu > mutated - eps && kappa < k {
            return CheckOutcome {
                checks,
                violation: Some(Violation {
                    theorem: Some(TheoremId::VertexGirth),
                    k: Some(k),
                    witness: format!(
                        "halved threshold fired: mu={mu:?} > {mutated:?} but kappa={kappa} < {k}"
                    ),
                    lhs: mu,
                    rhs: mutated,
                }),
            };
        }
    }
    CheckOutcome::clean(checks)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_cut_degree(rows: &[u64], mask: u64) -> usize {
    bits(mask)
        .map(|v| (rows[v] & !mask).count_ones() as usize)
        .sum()
}

/// Connected components of the induced subgraph on `alive`, as masks.
fn mask_components(rows: &[u64], mut alive: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while alive != 0 {
        let mut comp = alive & alive.wrapping_neg();
        loop {
            let mut grown = comp;
            for v in bits(comp) {
                grown |= rows[v] & alive;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        alive &= !comp;
    }
    out
}
