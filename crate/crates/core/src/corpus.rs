//! Graph sources for testing and verification: exhaustive labeled
//! enumeration, seeded random graphs, named families, and graph6 files.
//!
//! Everything here is deterministic. Random graphs come from SplitMix64
//! (documented below), never from a platform default generator, so corpora
//! reproduce bit-exactly across machines and languages.

use crate::graph::{Graph, GraphError};
use crate::graph6::{self, Graph6Error};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

/// Hard ceiling for exhaustive enumeration: 2^28 edge subsets at n = 8.
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;

/// Errors from corpus construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusError {
    /// Exhaustive enumeration is capped at `n ≤ 8`.
    TooLarge { n: usize },
    /// The family name is not recognized.
    UnknownFamily(String),
    /// Family or generator parameters are invalid.
    BadParams(&'static str),
    /// A graph6 line failed to parse.
    Graph6 { line: usize, source: Graph6Error },
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooLarge { n } => {
                write!(
                    f,
                    "exhaustive enumeration capped at n <= {MAX_EXHAUSTIVE_ORDER}, got {n}"
                )
            }
            Self::UnknownFamily(name) => write!(f, "unknown graph family '{name}'"),
            Self::BadParams(what) => write!(f, "bad corpus parameters: {what}"),
            Self::Graph6 { line, source } => write!(f, "graph6 line {line}: {source}"),
        }
    }
}

impl core::error::Error for CorpusError {}

/// SplitMix64, the fixed 64-bit generator used for every randomized
/// corpus. One step is
///
/// ```text
/// state += 0x9E3779B97F4A7C15
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// output = z ^ (z >> 31)
/// ```
///
/// Uniform doubles in `[0, 1)` take the top 53 bits: `(x >> 11) · 2⁻⁵³`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53-bit resolution.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }
}

/// The canonical pair order shared by edge masks, G(n,p) draws, and the
/// graph6 bit layout: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), …
pub fn pair_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |v| (0..v).map(move |u| (u, v)))
}

/// Number of labeled graphs on `n` vertices: `2^(n(n−1)/2)`.
pub fn edge_mask_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// Builds the graph whose edge set is the given bit mask over
/// [`pair_order`].
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    debug_assert!((1..=MAX_EXHAUSTIVE_ORDER).contains(&n));
    let mut rows = vec![0u64; n];
    for (bit, (u, v)) in pair_order(n).enumerate() {
        if mask >> bit & 1 == 1 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    Graph::from_masks(n, &rows)
}

/// Structural filters applied during exhaustive enumeration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExhaustiveFilter {
    pub connected: bool,
    pub min_degree: Option<usize>,
    pub min_girth: Option<usize>,
}

impl ExhaustiveFilter {
    pub fn connected() -> Self {
        Self {
            connected: true,
            ..Self::default()
        }
    }

    fn admits(&self, g: &Graph) -> bool {
        if let Some(d) = self.min_degree {
            if g.min_degree() < d {
                return false;
            }
        }
        if self.connected && !g.is_connected() {
            return false;
        }
        if let Some(want) = self.min_girth {
            // acyclic graphs pass every girth floor
            if !crate::invariants::girth(g).at_least(want) {
                return false;
            }
        }
        true
    }
}

/// Streams all labeled simple graphs on `n ≤ 8` vertices that pass the
/// filter, in increasing edge-mask order.
pub fn enumerate_labeled(n: usize, filter: ExhaustiveFilter) -> Result<LabeledGraphs, CorpusError> {
    enumerate_labeled_range(n, filter, 0..u64::MAX)
}

/// As [`enumerate_labeled`], restricted to an edge-mask range. Ranges
/// partition the stream for parallel consumption.
pub fn enumerate_labeled_range(
    n: usize,
    filter: ExhaustiveFilter,
    masks: Range<u64>,
) -> Result<LabeledGraphs, CorpusError> {
    if !(1..=MAX_EXHAUSTIVE_ORDER).contains(&n) {
        return Err(CorpusError::TooLarge { n });
    }
    let end = masks.end.min(edge_mask_count(n));
    Ok(LabeledGraphs {
        n,
        filter,
        next: masks.start,
        end,
    })
}

/// Iterator over filtered labeled graphs.
pub struct LabeledGraphs {
    n: usize,
    filter: ExhaustiveFilter,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let g = graph_from_mask(self.n, self.next);
            self.next += 1;
            if self.filter.admits(&g) {
                return Some(g);
            }
        }
        None
    }
}

/// A seeded Erdős–Rényi draw: each pair in [`pair_order`] is an edge
/// independently with probability `p`, consuming one SplitMix64 output per
/// pair. Panics unless `0 ≤ p ≤ 1` and `n ≥ 1`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    assert!(n >= 1, "G(n,p) needs at least one vertex");
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability must be in [0, 1]"
    );
    let mut rng = SplitMix64::new(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in pair_order(n) {
        if rng.next_f64() < p {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Graph::from_sorted_adj(n, adj)
}

/// Named graph families sitting at the bound boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `K_n`.
    Complete(usize),
    /// `C_n`, `n ≥ 3`.
    Cycle(usize),
    /// `P_n` on `n` vertices.
    Path(usize),
    /// `K_{a,b}`.
    CompleteBipartite(usize, usize),
    /// `K_{1,n−1}` on `n` vertices (center 0).
    Star(usize),
    /// The Petersen graph: 10 vertices, 3-regular, girth 5.
    Petersen,
    /// The Heawood graph: 14 vertices, 3-regular, girth 6.
    Heawood,
}

/// Parses `name` or `name:p1,p2` into a family.
pub fn parse_family(text: &str) -> Result<Family, CorpusError> {
    let (name, params) = match text.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (text, None),
    };
    let nums: Vec<usize> = match params {
        None => Vec::new(),
        Some(p) => p
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| CorpusError::BadParams("family parameters must be integers"))?,
    };
    let one = || -> Result<usize, CorpusError> {
        if nums.len() == 1 {
            Ok(nums[0])
        } else {
            Err(CorpusError::BadParams("family takes exactly one parameter"))
        }
    };
    match name {
        "complete" => Ok(Family::Complete(one()?)),
        "cycle" => Ok(Family::Cycle(one()?)),
        "path" => Ok(Family::Path(one()?)),
        "star" => Ok(Family::Star(one()?)),
        "complete_bipartite" => {
            if nums.len() == 2 {
                Ok(Family::CompleteBipartite(nums[0], nums[1]))
            } else {
                Err(CorpusError::BadParams(
                    "complete_bipartite takes two parameters",
                ))
            }
        }
        "petersen" if nums.is_empty() => Ok(Family::Petersen),
        "heawood" if nums.is_empty() => Ok(Family::Heawood),
        other => Err(CorpusError::UnknownFamily(String::from(other))),
    }
}

/// Builds a named family graph.
pub fn named(family: Family) -> Result<Graph, CorpusError> {
    let build = |n: usize, edges: Vec<(usize, usize)>| -> Result<Graph, CorpusError> {
        Graph::from_edges(n, &edges).map_err(|e| match e {
            GraphError::ZeroOrder => CorpusError::BadParams("order must be positive"),
            _ => CorpusError::BadParams("invalid construction"),
        })
    };
    match family {
        Family::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            build(n, edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(CorpusError::BadParams("cycle needs n >= 3"));
            }
            build(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
        }
        Family::Path(n) => build(n, (1..n).map(|i| (i - 1, i)).collect()),
        Family::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return Err(CorpusError::BadParams("both sides must be nonempty"));
            }
            let mut edges = Vec::new();
            for u in 0..a {
                for v in 0..b {
                    edges.push((u, a + v));
                }
            }
            build(a + b, edges)
        }
        Family::Star(n) => {
            if n < 2 {
                return Err(CorpusError::BadParams("star needs n >= 2"));
            }
            build(n, (1..n).map(|v| (0, v)).collect())
        }
        Family::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
                edges.push((i, i + 5));
            }
            build(10, edges)
        }
        Family::Heawood => {
            // LCF [5, −5]^7: a 14-cycle plus chords i → i+5 from even i.
            let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
            for i in (0..14).step_by(2) {
                edges.push((i, (i + 5) % 14));
            }
            build(14, edges)
        }
    }
}

/// A deterministic graph source for verification campaigns.
#[derive(Debug, Clone, PartialEq)]
pub enum CorpusSource {
    /// All labeled graphs on `n` vertices passing the filter.
    Exhaustive { n: usize, filter: ExhaustiveFilter },
    /// An edge-mask slice of the exhaustive stream (produced by
    /// [`CorpusSource::partition`]).
    ExhaustiveRange {
        n: usize,
        filter: ExhaustiveFilter,
        masks: Range<u64>,
    },
    /// `count` seeded G(n,p) samples; sample `i` uses seed `seed + i`.
    Gnp {
        n: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
    /// One named family graph.
    Named(Family),
    /// Pre-read graph6 lines (blank lines skipped).
    Graph6Lines(Vec<String>),
}

impl CorpusSource {
    /// Materializes the source as a graph iterator; parse and parameter
    /// errors surface here, before any checking starts.
    pub fn iter(&self) -> Result<CorpusIter, CorpusError> {
        match self {
            Self::Exhaustive { n, filter } => {
                Ok(CorpusIter::Labeled(enumerate_labeled(*n, *filter)?))
            }
            Self::ExhaustiveRange { n, filter, masks } => Ok(CorpusIter::Labeled(
                enumerate_labeled_range(*n, *filter, masks.clone())?,
            )),
            Self::Gnp { n, p, count, seed } => {
                if !(0.0..=1.0).contains(p) {
                    return Err(CorpusError::BadParams("edge probability must be in [0, 1]"));
                }
                if *n < 1 {
                    return Err(CorpusError::BadParams("G(n,p) needs at least one vertex"));
                }
                Ok(CorpusIter::Gnp {
                    n: *n,
                    p: *p,
                    remaining: *count,
                    seed: *seed,
                })
            }
            Self::Named(family) => Ok(CorpusIter::Once(Some(named(*family)?))),
            Self::Graph6Lines(lines) => {
                let mut graphs = Vec::new();
                for (i, line) in lines.iter().enumerate() {
                    let trimmed = line.trim();
                    if trimmed.is_empty() {
                        continue;
                    }
                    let g = graph6::parse(trimmed).map_err(|source| CorpusError::Graph6 {
                        line: i + 1,
                        source,
                    })?;
                    graphs.push(g);
                }
                graphs.reverse(); // popped from the back, preserving input order
                Ok(CorpusIter::List(graphs))
            }
        }
    }

    /// Splits the source into up to `parts` disjoint sources that together
    /// cover the same graphs in the same global order, for parallel
    /// consumption.
    pub fn partition(&self, parts: usize) -> Vec<CorpusSource> {
        let parts = parts.max(1);
        match self {
            Self::Exhaustive { n, filter } => {
                let total = edge_mask_count(*n);
                let chunk = total.div_ceil(parts as u64).max(1);
                (0..parts as u64)
                    .map(|i| (i * chunk, ((i + 1) * chunk).min(total)))
                    .filter(|(lo, hi)| lo < hi)
                    .map(|(lo, hi)| Self::ExhaustiveRange {
                        n: *n,
                        filter: *filter,
                        masks: lo..hi,
                    })
                    .collect()
            }
            Self::Gnp { n, p, count, seed } => {
                let chunk = count.div_ceil(parts).max(1);
                (0..parts)
                    .map(|i| (i * chunk, ((i + 1) * chunk).min(*count)))
                    .filter(|(lo, hi)| lo < hi)
                    .map(|(lo, hi)| Self::Gnp {
                        n: *n,
                        p: *p,
                        count: hi - lo,
                        seed: seed + lo as u64,
                    })
                    .collect()
            }
            other => vec![other.clone()],
        }
    }
}

/// Iterator over a corpus source.
pub enum CorpusIter {
    Labeled(LabeledGraphs),
    Gnp {
        n: usize,
        p: f64,
        remaining: usize,
        seed: u64,
    },
    Once(Option<Graph>),
    List(Vec<Graph>),
}

impl Iterator for CorpusIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            Self::Labeled(it) => it.next(),
            Self::Gnp {
                n,
                p,
                remaining,
                seed,
            } => {
                if *remaining == 0 {
                    return None;
                }
                let g = random_gnp(*n, *p, *seed);
                *seed += 1;
                *remaining -= 1;
                Some(g)
            }
            Self::Once(g) => g.take(),
            Self::List(graphs) => graphs.pop(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6;
    use crate::invariants;

    #[test]
    fn splitmix_reference_stream() {
        // Reference outputs computed independently from the published
        // SplitMix64 constants.
        let mut rng = SplitMix64::new(1234567);
        let got = [rng.next_u64(), rng.next_u64(), rng.next_u64()];
        assert_eq!(
            got,
            [
                6457827717110365317,
                3203168211198807973,
                9817491932198370423
            ]
        );
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 16294208416658607535);
    }

    #[test]
    fn enumerate_n3_connected() {
        let graphs: Vec<_> = enumerate_labeled(3, ExhaustiveFilter::connected())
            .unwrap()
            .collect();
        assert_eq!(graphs.len(), 4); // three labelings of P3 plus K3
    }

    #[test]
    fn enumerate_n4_connected_min_degree_2() {
        let filter = ExhaustiveFilter {
            connected: true,
            min_degree: Some(2),
            min_girth: None,
        };
        let graphs: Vec<_> = enumerate_labeled(4, filter).unwrap().collect();
        // 3 labelings of C4, 6 of the diamond, 1 of K4; the paw has a
        // degree-1 vertex and is excluded.
        assert_eq!(graphs.len(), 10);
    }

    #[test]
    fn enumerate_n1() {
        let graphs: Vec<_> = enumerate_labeled(1, ExhaustiveFilter::default())
            .unwrap()
            .collect();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].order(), 1);
    }

    #[test]
    fn enumeration_counts_are_powers_of_two() {
        for n in 1..=5 {
            let total = enumerate_labeled(n, ExhaustiveFilter::default())
                .unwrap()
                .count() as u64;
            assert_eq!(total, edge_mask_count(n));
        }
    }

    #[test]
    fn enumeration_rejects_large_orders() {
        assert!(matches!(
            enumerate_labeled(9, ExhaustiveFilter::default()),
            Err(CorpusError::TooLarge { n: 9 })
        ));
    }

    #[test]
    fn range_partition_covers_stream() {
        let filter = ExhaustiveFilter::connected();
        let all: Vec<_> = enumerate_labeled(4, filter)
            .unwrap()
            .map(|g| graph6::write(&g))
            .collect();
        let lo: Vec<_> = enumerate_labeled_range(4, filter, 0..32)
            .unwrap()
            .map(|g| graph6::write(&g))
            .collect();
        let hi: Vec<_> = enumerate_labeled_range(4, filter, 32..64)
            .unwrap()
            .map(|g| graph6::write(&g))
            .collect();
        assert_eq!(all, [lo, hi].concat());
    }

    #[test]
    fn gnp_extremes() {
        let empty = random_gnp(6, 0.0, 7);
        assert_eq!(empty.size(), 0);
        let complete = random_gnp(6, 1.0, 7);
        assert_eq!(complete.size(), 15);
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = random_gnp(20, 0.3, 42);
        let b = random_gnp(20, 0.3, 42);
        assert_eq!(graph6::write(&a), graph6::write(&b));
        let c = random_gnp(20, 0.3, 43);
        assert_ne!(graph6::write(&a), graph6::write(&c));
    }

    #[test]
    fn named_family_invariants() {
        let petersen = named(Family::Petersen).unwrap();
        assert_eq!(petersen.order(), 10);
        assert_eq!(petersen.size(), 15);
        assert_eq!((petersen.min_degree(), petersen.max_degree()), (3, 3));
        assert_eq!(invariants::girth(&petersen), invariants::Girth::Finite(5));
        assert!(petersen.is_connected());

        let heawood = named(Family::Heawood).unwrap();
        assert_eq!(heawood.order(), 14);
        assert_eq!((heawood.min_degree(), heawood.max_degree()), (3, 3));
        assert_eq!(invariants::girth(&heawood), invariants::Girth::Finite(6));
        assert_eq!(invariants::edge_connectivity(&heawood), 3);

        let k33 = named(Family::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(invariants::girth(&k33), invariants::Girth::Finite(4));
        assert_eq!(k33.min_degree(), 3);

        let star = named(Family::Star(6)).unwrap();
        assert_eq!(star.max_degree(), 5);
        assert_eq!(invariants::girth(&star), invariants::Girth::Acyclic);
    }

    #[test]
    fn family_parsing() {
        assert_eq!(parse_family("petersen").unwrap(), Family::Petersen);
        assert_eq!(parse_family("cycle:5").unwrap(), Family::Cycle(5));
        assert_eq!(
            parse_family("complete_bipartite:3,4").unwrap(),
            Family::CompleteBipartite(3, 4)
        );
        assert!(matches!(
            parse_family("hypercube"),
            Err(CorpusError::UnknownFamily(_))
        ));
        assert!(parse_family("cycle:2,3").is_err());
    }

    #[test]
    fn family_param_validation() {
        assert!(named(Family::Cycle(2)).is_err());
        assert!(named(Family::Star(1)).is_err());
        assert!(named(Family::CompleteBipartite(0, 3)).is_err());
    }

    #[test]
    fn corpus_source_round_trips_graph6_lines() {
        let lines = vec![String::from("C~"), String::new(), String::from("D?{")];
        let graphs: Vec<_> = CorpusSource::Graph6Lines(lines).iter().unwrap().collect();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].order(), 4);
        assert_eq!(graphs[1].order(), 5);
    }

    #[test]
    fn corpus_source_reports_parse_errors() {
        let lines = vec![String::from("C~"), String::from("!!bad")];
        assert!(matches!(
            CorpusSource::Graph6Lines(lines).iter(),
            Err(CorpusError::Graph6 { line: 2, .. })
        ));
    }

    #[test]
    fn partitions_are_seamless() {
        let source = CorpusSource::Gnp {
            n: 10,
            p: 0.4,
            count: 10,
            seed: 5,
        };
        let whole: Vec<_> = source.iter().unwrap().map(|g| graph6::write(&g)).collect();
        let mut pieces = Vec::new();
        for part in source.partition(3) {
            pieces.extend(part.iter().unwrap().map(|g| graph6::write(&g)));
        }
        assert_eq!(whole, pieces);

        let source = CorpusSource::Exhaustive {
            n: 4,
            filter: ExhaustiveFilter::connected(),
        };
        let whole: Vec<_> = source.iter().unwrap().map(|g| graph6::write(&g)).collect();
        let mut pieces = Vec::new();
        for part in source.partition(4) {
            pieces.extend(part.iter().unwrap().map(|g| graph6::write(&g)));
        }
        assert_eq!(whole, pieces);
    }
}
