//! Independent brute-force oracles and sweep helpers shared by the
//! integration suites.
//!
//! These deliberately avoid the library's algorithm choices: connectivity
//! by exhaustive subset enumeration instead of max-flow, girth by
//! edge-removal BFS instead of per-root cycle detection, cliques by subset
//! testing instead of branch-and-bound. They exist to cross-examine the
//! fast oracles, so they must stay independent.

// Each integration test binary compiles this module separately and uses
// its own subset of helpers.
#![allow(dead_code)]

use specon::corpus::CorpusSource;
use specon::graph::Graph;
use specon::verify::{CampaignConfig, CampaignResult};

/// Shortest-path length from `u` to `v` skipping the edge `(u, v)` itself,
/// using only the public adjacency API.
fn bfs_avoiding_edge(g: &Graph, from: usize, to: usize) -> Option<usize> {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    dist[from] = 0;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            return Some(dist[v]);
        }
        for &w in g.neighbors(v) {
            if v == from && w == to || v == to && w == from {
                continue;
            }
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Girth by trying every edge: remove it, measure the endpoint distance,
/// and close the cycle.
pub fn bf_girth(g: &Graph) -> Option<usize> {
    let mut best = None;
    for (u, v) in g.edges() {
        if let Some(d) = bfs_avoiding_edge(g, u, v) {
            let cycle = d + 1;
            best = Some(best.map_or(cycle, |b: usize| b.min(cycle)));
        }
    }
    best
}

/// Clique number by testing every vertex subset.
pub fn bf_clique_number(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20, "subset enumeration oracle");
    let mut best = usize::from(n > 0);
    for mask in 1u32..1 << n {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if members.len() <= best {
            continue;
        }
        let is_clique = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if is_clique {
            best = members.len();
        }
    }
    best
}

/// Whether the subgraph induced on the complement of `removed` is
/// connected (true when fewer than two vertices remain).
fn connected_without(g: &Graph, removed: u32) -> bool {
    let n = g.order();
    let alive: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    if alive.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![alive[0]];
    seen[alive[0]] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if removed >> w & 1 == 0 && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == alive.len()
}

/// Vertex connectivity as the smallest vertex set whose removal
/// disconnects the graph (n−1 for complete graphs).
pub fn bf_vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 16, "subset enumeration oracle");
    if g.size() == n * (n - 1) / 2 {
        return n.saturating_sub(1);
    }
    (0u32..1 << n)
        .filter(|&s| (n as u32 - s.count_ones()) >= 2 && !connected_without(g, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .expect("non-complete graphs have a vertex cut")
}

/// Edge connectivity as the minimum cut degree over all proper nonempty
/// subsets (0 for disconnected graphs and the one-vertex graph).
pub fn bf_edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20, "subset enumeration oracle");
    if n == 1 || !connected_without(g, 0) {
        return 0;
    }
    (1u32..(1 << n) - 1)
        .map(|mask| {
            (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .map(|v| {
                    g.neighbors(v)
                        .iter()
                        .filter(|&&w| mask >> w & 1 == 0)
                        .count()
                })
                .sum::<usize>()
        })
        .min()
        .expect("n >= 2")
}

/// Runs a campaign across all available cores and merges deterministically.
pub fn run_sharded(source: &CorpusSource, config: &CampaignConfig) -> CampaignResult {
    let threads = std::thread::available_parallelism().map_or(1, |t| t.get());
    let parts = source.partition(threads * 2);
    let results: Vec<CampaignResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = parts
            .iter()
            .map(|part| {
                scope.spawn(move || {
                    specon::verify::run_campaign(part, config).expect("valid corpus")
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("no panics"))
            .collect()
    });
    CampaignResult::merge(results)
}
