//! Exact structural invariants: girth, clique number, and both
//! connectivities, with cut witnesses.
//!
//! These are the ground-truth oracles every spectral condition in this
//! crate is checked against, so they are deliberately exact and exhaustive
//! rather than approximate: per-vertex BFS for the girth, Bron–Kerbosch
//! with pivoting for the clique number, and unit-capacity max-flow for the
//! connectivities.

use crate::flow::FlowNetwork;
use crate::graph::{bits, Graph, VertexSet};
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from connectivity witness extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantError {
    /// The operation requires a connected graph.
    Disconnected,
    /// Complete graphs have no vertex cut.
    CompleteGraph,
    /// The operation requires at least two vertices.
    TooSmall,
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Disconnected => write!(f, "graph is disconnected"),
            Self::CompleteGraph => write!(f, "complete graph has no vertex cut"),
            Self::TooSmall => write!(f, "graph has too few vertices"),
        }
    }
}

impl core::error::Error for InvariantError {}

/// Girth of a graph: the length of a shortest cycle, or `Acyclic` for
/// forests. Forests are never given a sentinel integer; every predicate
/// requiring a finite girth treats `Acyclic` as "hypothesis not
/// applicable".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    /// The cycle length, if the graph has one.
    pub fn finite(self) -> Option<usize> {
        match self {
            Self::Finite(g) => Some(g),
            Self::Acyclic => None,
        }
    }

    /// Whether the girth is at least `g` (acyclic graphs qualify for
    /// every bound).
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Self::Finite(v) => v >= g,
            Self::Acyclic => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(g) => write!(f, "{g}"),
            Self::Acyclic => write!(f, "acyclic"),
        }
    }
}

/// Length of a shortest cycle via BFS from every vertex.
///
/// From each root, a non-tree edge `{u, w}` seen during BFS witnesses a
/// cycle of length at most `dist(u) + dist(w) + 1`; the minimum over all
/// roots is exact because a root on a shortest cycle attains its length.
pub fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            if 2 * dist[v] + 1 >= best {
                continue; // any cycle through v from here is no shorter
            }
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if w != parent[v] {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

/// Maximum clique size ω(G); 1 for edgeless graphs.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    if let Some(rows) = g.mask_rows() {
        let mut best = 1;
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        bron_kerbosch64(rows, 0, full, 0, &mut best);
        return best;
    }
    // Word-set variant for graphs beyond 64 vertices.
    let words = n.div_ceil(64);
    let adj: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut row = vec![0u64; words];
            for &w in g.neighbors(v) {
                row[w / 64] |= 1 << (w % 64);
            }
            row
        })
        .collect();
    let mut p = vec![u64::MAX; words];
    let spare = n % 64;
    if spare != 0 {
        p[words - 1] = (1u64 << spare) - 1;
    }
    let mut best = 1;
    bron_kerbosch_words(&adj, 0, p, vec![0u64; words], &mut best);
    best
}

/// Bron–Kerbosch with pivoting over single-word bitsets.
fn bron_kerbosch64(adj: &[u64], r: usize, mut p: u64, mut x: u64, best: &mut usize) {
    if p == 0 {
        if x == 0 {
            *best = (*best).max(r);
        }
        return;
    }
    if r + p.count_ones() as usize <= *best {
        return;
    }
    let mut pivot = 0;
    let mut pivot_score = usize::MAX;
    for u in bits(p | x) {
        let score = (p & !adj[u]).count_ones() as usize;
        if pivot_score == usize::MAX || score < pivot_score {
            pivot = u;
            pivot_score = score;
        }
    }
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let vb = 1u64 << v;
        bron_kerbosch64(adj, r + 1, p & adj[v], x & adj[v], best);
        p &= !vb;
        x |= vb;
        cand &= !vb;
    }
}

fn bron_kerbosch_words(adj: &[Vec<u64>], r: usize, p: Vec<u64>, x: Vec<u64>, best: &mut usize) {
    let count = |s: &[u64]| s.iter().map(|w| w.count_ones() as usize).sum::<usize>();
    if count(&p) == 0 {
        if count(&x) == 0 {
            *best = (*best).max(r);
        }
        return;
    }
    if r + count(&p) <= *best {
        return;
    }
    let members = |s: &[u64]| {
        s.iter()
            .enumerate()
            .flat_map(|(i, &w)| bits(w).map(move |b| i * 64 + b))
            .collect::<Vec<_>>()
    };
    let mut pivot = usize::MAX;
    let mut pivot_score = usize::MAX;
    for u in members(&p).into_iter().chain(members(&x)) {
        let score = p
            .iter()
            .zip(&adj[u])
            .map(|(&pw, &aw)| (pw & !aw).count_ones() as usize)
            .sum::<usize>();
        if score < pivot_score {
            pivot = u;
            pivot_score = score;
        }
    }
    let mut p = p;
    let mut x = x;
    let cand: Vec<usize> = members(&p)
        .into_iter()
        .filter(|&v| adj[pivot][v / 64] & (1 << (v % 64)) == 0)
        .collect();
    for v in cand {
        let next_p: Vec<u64> = p.iter().zip(&adj[v]).map(|(&a, &b)| a & b).collect();
        let next_x: Vec<u64> = x.iter().zip(&adj[v]).map(|(&a, &b)| a & b).collect();
        bron_kerbosch_words(adj, r + 1, next_p, next_x, best);
        p[v / 64] &= !(1 << (v % 64));
        x[v / 64] |= 1 << (v % 64);
    }
}

/// Whether the graph is complete.
pub fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.size() == n * (n - 1) / 2
}

fn edge_flow_network(g: &Graph) -> FlowNetwork {
    let mut net = FlowNetwork::new(g.order());
    for (u, v) in g.edges() {
        net.add_arc_pair(u, v, 1, 1);
    }
    net
}

/// Edge-connectivity κ'(G): the size of a minimum edge cut, computed as
/// the minimum over `v ≠ 0` of the unit-capacity max flow from 0 to `v`.
/// Disconnected graphs (and the one-vertex graph) return 0.
pub fn edge_connectivity(g: &Graph) -> usize {
    match min_edge_cut(g) {
        Some((k, _)) => k,
        None => 0,
    }
}

/// Edge-connectivity together with one side `X` of a minimum edge cut,
/// chosen with `|X| ≤ n/2`. Both `G[X]` and its complement are connected
/// (every side of a global minimum edge cut is).
pub fn edge_connectivity_witness(g: &Graph) -> Result<(usize, VertexSet), InvariantError> {
    if g.order() < 2 {
        return Err(InvariantError::TooSmall);
    }
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    Ok(min_edge_cut(g).expect("connected graph with n >= 2 has an edge cut"))
}

fn min_edge_cut(g: &Graph) -> Option<(usize, VertexSet)> {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return None;
    }
    let mut net = edge_flow_network(g);
    let mut best = i32::MAX;
    let mut best_target = 1;
    for t in 1..n {
        net.reset();
        let f = net.max_flow(0, t, best);
        if f < best {
            best = f;
            best_target = t;
        }
    }
    net.reset();
    net.max_flow(0, best_target, i32::MAX);
    let reach = net.residual_reachable(0);
    let mut x = VertexSet::empty(n);
    for (v, &r) in reach.iter().enumerate() {
        if r {
            x.insert(v);
        }
    }
    if x.len() > n / 2 {
        x = x.complement();
    }
    Some((best as usize, x))
}

/// Vertex-split flow network: vertex `v` becomes `v_in = v` and
/// `v_out = n + v` joined by a unit arc; each edge contributes
/// effectively-unbounded arcs between the split halves.
fn vertex_flow_network(g: &Graph) -> FlowNetwork {
    let n = g.order();
    let inf = n as i32;
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.add_arc_pair(v, n + v, 1, 0);
    }
    for (u, v) in g.edges() {
        net.add_arc_pair(n + u, v, inf, 0);
        net.add_arc_pair(n + v, u, inf, 0);
    }
    net
}

/// Vertex-connectivity κ(G): `n − 1` for complete graphs, 0 for
/// disconnected ones, and otherwise the minimum over non-adjacent pairs
/// `(s, t)` of internally vertex-disjoint s–t paths (max flow on the
/// vertex-split digraph).
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 {
        return 0;
    }
    if is_complete(g) {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    min_vertex_cut(g).0
}

/// A minimum vertex cut `S` together with the smallest component `X` of
/// `G − S` (ties broken toward the component with the smallest vertex).
pub fn vertex_connectivity_witness(
    g: &Graph,
) -> Result<(usize, VertexSet, VertexSet), InvariantError> {
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    if is_complete(g) {
        return Err(InvariantError::CompleteGraph);
    }
    let (kappa, s) = min_vertex_cut(g);
    let (rest, old_of_new) = g.induced_delete(&s).expect("cut is proper");
    let comps = rest.components();
    let mut smallest: Option<VertexSet> = None;
    for comp in &comps {
        let mut orig = VertexSet::empty(g.order());
        for v in comp.iter() {
            orig.insert(old_of_new[v]);
        }
        let better = match &smallest {
            None => true,
            Some(cur) => (orig.len(), orig.first()) < (cur.len(), cur.first()),
        };
        if better {
            smallest = Some(orig);
        }
    }
    Ok((
        kappa,
        s,
        smallest.expect("cut leaves at least one component"),
    ))
}

fn min_vertex_cut(g: &Graph) -> (usize, VertexSet) {
    let n = g.order();
    let mut net = vertex_flow_network(g);
    let mut best = (n - 1) as i32;
    let mut best_pair = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            net.reset();
            let f = net.max_flow(n + s, t, best);
            if f < best || best_pair.is_none() {
                best = f;
                best_pair = Some((s, t));
            }
        }
    }
    let (s, t) = best_pair.expect("non-complete graph has a non-adjacent pair");
    net.reset();
    net.max_flow(n + s, t, i32::MAX);
    let reach = net.residual_reachable(n + s);
    let mut cut = VertexSet::empty(n);
    for v in 0..n {
        if reach[v] && !reach[n + v] {
            cut.insert(v);
        }
    }
    debug_assert_eq!(cut.len(), best as usize);
    (best as usize, cut)
}

/// Turán's edge bound: whether `|E| ≤ ⌊(r−1)·n²/(2r)⌋`. Callers must
/// ensure `ω(G) ≤ r`; the bound is vacuous otherwise.
pub fn turan_edge_bound_holds(g: &Graph, r: usize) -> bool {
    assert!(r >= 1, "Turán bound needs r >= 1");
    let n = g.order() as u128;
    let r = r as u128;
    (g.size() as u128) <= (r - 1) * n * n / (2 * r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 2) % 5));
            e.push((i, i + 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn girth_of_cycles_and_trees() {
        assert_eq!(girth(&c5()), Girth::Finite(5));
        assert_eq!(girth(&p3()), Girth::Acyclic);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(girth(&star), Girth::Acyclic);
        assert_eq!(girth(&k4()), Girth::Finite(3));
        assert_eq!(girth(&petersen()), Girth::Finite(5));
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&k4()), 4);
        assert_eq!(clique_number(&c5()), 2);
        assert_eq!(clique_number(&petersen()), 2);
        let edgeless = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(clique_number(&edgeless), 1);
    }

    #[test]
    fn clique_number_beyond_64_vertices() {
        // A 70-vertex graph: K5 on {0..4} plus a path through the rest.
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        for v in 4..69 {
            edges.push((v, v + 1));
        }
        let g = Graph::from_edges(70, &edges).unwrap();
        assert_eq!(clique_number(&g), 5);
    }

    #[test]
    fn edge_connectivity_values() {
        assert_eq!(edge_connectivity(&k4()), 3);
        assert_eq!(edge_connectivity(&p3()), 1);
        assert_eq!(edge_connectivity(&petersen()), 3);
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(edge_connectivity(&disconnected), 0);
        let single = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(edge_connectivity(&single), 0);
    }

    #[test]
    fn edge_witness_contract() {
        for g in [p3(), c5(), petersen(), k4()] {
            let (k, x) = edge_connectivity_witness(&g).unwrap();
            assert_eq!(k, edge_connectivity(&g));
            assert_eq!(g.cut_degree(&x).unwrap(), k);
            assert!(x.len() <= g.order() / 2);
            assert!(!x.is_empty());
            // both sides induce connected subgraphs
            let (side, _) = g.induced_delete(&x.complement()).unwrap();
            assert!(side.is_connected());
            let (other, _) = g.induced_delete(&x).unwrap();
            assert!(other.is_connected());
        }
    }

    #[test]
    fn edge_witness_on_p3_is_an_endpoint() {
        let (k, x) = edge_connectivity_witness(&p3()).unwrap();
        assert_eq!(k, 1);
        assert_eq!(x.len(), 1);
        assert_ne!(x.first(), Some(1)); // the middle vertex is not a side
    }

    #[test]
    fn vertex_connectivity_values() {
        assert_eq!(vertex_connectivity(&k4()), 3);
        assert_eq!(vertex_connectivity(&c5()), 2);
        assert_eq!(vertex_connectivity(&petersen()), 3);
        assert_eq!(vertex_connectivity(&p3()), 1);
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&disconnected), 0);
    }

    #[test]
    fn vertex_witness_p3() {
        let (k, s, x) = vertex_connectivity_witness(&p3()).unwrap();
        assert_eq!(k, 1);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(x.len(), 1);
    }

    #[test]
    fn vertex_witness_two_triangles() {
        // two triangles sharing vertex 2
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let (k, s, x) = vertex_connectivity_witness(&g).unwrap();
        assert_eq!(k, 1);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![2]);
        assert_eq!(x.len(), 2);
    }

    #[test]
    fn vertex_witness_petersen() {
        let g = petersen();
        let (k, s, x) = vertex_connectivity_witness(&g).unwrap();
        assert_eq!(k, 3);
        assert_eq!(s.len(), 3);
        let (rest, _) = g.induced_delete(&s).unwrap();
        assert!(!rest.is_connected());
        assert!(!x.is_empty() && x.len() <= 3);
    }

    #[test]
    fn vertex_witness_rejects_complete_graphs() {
        assert!(matches!(
            vertex_connectivity_witness(&k4()),
            Err(InvariantError::CompleteGraph)
        ));
    }

    #[test]
    fn whitney_chain_on_samples() {
        for g in [p3(), c5(), k4(), petersen()] {
            let kappa = vertex_connectivity(&g);
            let kappa_prime = edge_connectivity(&g);
            assert!(kappa <= kappa_prime && kappa_prime <= g.min_degree());
        }
    }

    #[test]
    fn turan_bound_examples() {
        assert!(turan_edge_bound_holds(&c5(), 2)); // 5 <= 6
        assert!(turan_edge_bound_holds(&k4(), 4)); // 6 <= 6, tight
    }
}
