//! Immutable simple undirected graphs and vertex subsets.
//!
//! Vertices are dense integers `0..n`; any external labels belong to I/O
//! layers. Graphs are immutable after construction, so they can be shared
//! freely across threads and invariants can be cached by callers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from graph construction and subset queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge `(v, v)` was supplied; simple graphs have no self-loops.
    SelfLoop(usize),
    /// An edge endpoint is not a vertex of the graph.
    OutOfRange { vertex: usize, order: usize },
    /// Graphs must have at least one vertex.
    ZeroOrder,
    /// The subset must be a nonempty proper subset of the vertex set.
    EmptyOrFull,
    /// Deleting every vertex leaves no graph.
    FullDeletion,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Self::OutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            Self::ZeroOrder => write!(f, "graph must have at least one vertex"),
            Self::EmptyOrFull => write!(f, "subset must be nonempty and proper"),
            Self::FullDeletion => write!(f, "cannot delete every vertex"),
        }
    }
}

impl core::error::Error for GraphError {}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as sorted neighbor lists; for graphs on at most 64
/// vertices a bitmask row per vertex is kept alongside for fast subset
/// arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    masks: Vec<u64>, // one word per vertex; empty when n > 64
}

impl Graph {
    /// Builds a simple graph from an edge list. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroOrder);
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_adj(n, adj))
    }

    /// Internal constructor from already-sorted, deduplicated, symmetric
    /// adjacency lists.
    pub(crate) fn from_sorted_adj(n: usize, adj: Vec<Vec<usize>>) -> Self {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let masks = if n <= 64 {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |acc, &v| acc | (1 << v)))
                .collect()
        } else {
            Vec::new()
        };
        Self { n, m, adj, masks }
    }

    /// Builds a graph on `n ≤ 64` vertices from one adjacency bitmask row
    /// per vertex. Rows must be symmetric and loop-free.
    pub(crate) fn from_masks(n: usize, masks: &[u64]) -> Self {
        debug_assert!(n <= 64 && masks.len() == n);
        let adj: Vec<Vec<usize>> = masks.iter().map(|&row| bits(row).collect()).collect();
        let m = masks
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2;
        Self {
            n,
            m,
            adj,
            masks: masks.to_vec(),
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    /// Degree of vertex `v`. Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Minimum degree δ(G).
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Maximum degree Δ(G).
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Whether `u` and `v` are adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if !self.masks.is_empty() {
            self.masks[u] & (1 << v) != 0
        } else {
            self.adj[u].binary_search(&v).is_ok()
        }
    }

    /// Iterates over edges as pairs `(u, v)` with `u < v`, in column order
    /// (sorted by `(v, u)`), matching the graph6 bit layout.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| {
            self.adj[v]
                .iter()
                .take_while(move |&&u| u < v)
                .map(move |&u| (u, v))
        })
    }

    /// Adjacency bitmask rows, available when `n ≤ 64`.
    pub(crate) fn mask_rows(&self) -> Option<&[u64]> {
        if self.masks.is_empty() {
            None
        } else {
            Some(&self.masks)
        }
    }

    /// Number of edges with exactly one endpoint in `X`, i.e. `d(X)`.
    pub fn cut_degree(&self, x: &VertexSet) -> Result<usize, GraphError> {
        assert_eq!(x.capacity(), self.n, "subset built for a different order");
        let size = x.len();
        if size == 0 || size == self.n {
            return Err(GraphError::EmptyOrFull);
        }
        if let Some(rows) = self.mask_rows() {
            let xm = x.words[0];
            let mut count = 0usize;
            for v in bits(xm) {
                count += (rows[v] & !xm).count_ones() as usize;
            }
            return Ok(count);
        }
        let mut count = 0usize;
        for v in x.iter() {
            for &w in &self.adj[v] {
                if !x.contains(w) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Whether the graph is connected. A one-vertex graph is connected.
    pub fn is_connected(&self) -> bool {
        if !self.masks.is_empty() {
            // allocation-free closure over the first vertex
            let full = if self.n == 64 {
                u64::MAX
            } else {
                (1u64 << self.n) - 1
            };
            let mut reached = 1u64;
            loop {
                let mut grown = reached;
                for v in bits(reached) {
                    grown |= self.masks[v];
                }
                if grown == reached {
                    return reached == full;
                }
                reached = grown;
            }
        }
        self.components().len() == 1
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        let mut queue = Vec::with_capacity(self.n);
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            comp.insert(start);
            seen.insert(start);
            queue.clear();
            queue.push(start);
            while let Some(v) = queue.pop() {
                for &w in &self.adj[v] {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        queue.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Deletes the vertices in `S`, returning the induced subgraph on the
    /// remaining vertices (relabeled contiguously) together with the map
    /// from new labels back to original ones.
    pub fn induced_delete(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        assert_eq!(s.capacity(), self.n, "subset built for a different order");
        if s.len() == self.n {
            return Err(GraphError::FullDeletion);
        }
        let mut old_of_new = Vec::with_capacity(self.n - s.len());
        let mut new_of_old = vec![usize::MAX; self.n];
        for (v, slot) in new_of_old.iter_mut().enumerate() {
            if !s.contains(v) {
                *slot = old_of_new.len();
                old_of_new.push(v);
            }
        }
        let adj = old_of_new
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| !s.contains(w))
                    .map(|&w| new_of_old[w])
                    .collect::<Vec<_>>()
            })
            .collect();
        Ok((Graph::from_sorted_adj(old_of_new.len(), adj), old_of_new))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.n, self.m)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Iterates over the set bits of a word.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if word == 0 {
            return None;
        }
        let v = word.trailing_zeros() as usize;
        word &= word - 1;
        Some(v)
    })
}

/// A subset of the vertices `0..n` of some graph, stored as a bitset.
///
/// One machine word suffices for every graph this crate enumerates
/// exhaustively; larger graphs spill into additional words transparently.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty subset of `0..n`.
    pub fn empty(n: usize) -> Self {
        Self {
            nbits: n,
            words: vec![0; n.div_ceil(64).max(1)],
        }
    }

    /// The full vertex set `0..n`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in 0..s.words.len() {
            s.words[w] = u64::MAX;
        }
        s.trim();
        s
    }

    /// A subset from explicit members. Panics if a member is `≥ n`.
    pub fn from_members(n: usize, members: &[usize]) -> Self {
        let mut s = Self::empty(n);
        for &v in members {
            s.insert(v);
        }
        s
    }

    /// A single-word subset of `0..n` (requires `n ≤ 64`).
    #[cfg(test)]
    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64);
        Self {
            nbits: n,
            words: vec![mask],
        }
    }

    /// The vertex-count context this subset was built for.
    pub fn capacity(&self) -> usize {
        self.nbits
    }

    /// Adds vertex `v`. Panics if `v ≥ n`.
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.nbits,
            "vertex {v} out of range for order {}",
            self.nbits
        );
        self.words[v / 64] |= 1 << (v % 64);
    }

    /// Removes vertex `v` if present.
    pub fn remove(&mut self, v: usize) {
        if v < self.nbits {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    /// Whether vertex `v` is a member.
    pub fn contains(&self, v: usize) -> bool {
        v < self.nbits && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Whether the subset is empty.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| bits(w).map(move |b| i * 64 + b))
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// The complement within `0..n`.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.trim();
        out
    }

    /// Whether `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    /// Whether the two subsets share no member.
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & b == 0)
    }

    /// In-place union.
    pub fn union_with(&mut self, other: &Self) {
        for (a, &b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Clears bits beyond `nbits`.
    fn trim(&mut self) {
        let used = self.nbits % 64;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
        if self.nbits == 0 {
            for w in &mut self.words {
                *w = 0;
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    pub(crate) fn petersen_edges() -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5)); // outer cycle
            e.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
            e.push((i, i + 5)); // spokes
        }
        e
    }

    #[test]
    fn path_degrees() {
        let g = path3();
        assert_eq!((g.degree(0), g.degree(1), g.degree(2)), (1, 2, 1));
        assert_eq!((g.min_degree(), g.max_degree()), (1, 2));
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn complete_graph_degrees() {
        let g = k4();
        assert_eq!(g.min_degree(), 3);
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn petersen_is_cubic() {
        let g = Graph::from_edges(10, &petersen_edges()).unwrap();
        assert_eq!(g.size(), 15);
        assert_eq!((g.min_degree(), g.max_degree()), (3, 3));
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 5)]),
            Err(GraphError::OutOfRange {
                vertex: 5,
                order: 2
            })
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn cut_degree_star_and_cycle() {
        let g = k4();
        let x = VertexSet::from_members(4, &[0]);
        assert_eq!(g.cut_degree(&x).unwrap(), 3);

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let x = VertexSet::from_members(5, &[0, 1]);
        assert_eq!(c5.cut_degree(&x).unwrap(), 2);
    }

    #[test]
    fn cut_degree_petersen_outer_cycle() {
        let g = Graph::from_edges(10, &petersen_edges()).unwrap();
        let outer = VertexSet::from_members(10, &[0, 1, 2, 3, 4]);
        assert_eq!(g.cut_degree(&outer).unwrap(), 5);
    }

    #[test]
    fn cut_degree_rejects_empty_and_full() {
        let g = k4();
        assert_eq!(
            g.cut_degree(&VertexSet::empty(4)),
            Err(GraphError::EmptyOrFull)
        );
        assert_eq!(
            g.cut_degree(&VertexSet::full(4)),
            Err(GraphError::EmptyOrFull)
        );
    }

    #[test]
    fn connectivity_queries() {
        assert!(k4().is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.components().len(), 2);
        let petersen = Graph::from_edges(10, &petersen_edges()).unwrap();
        assert!(petersen.is_connected());
    }

    #[test]
    fn induced_delete_k4_gives_k3() {
        let g = k4();
        let (h, map) = g.induced_delete(&VertexSet::from_members(4, &[0])).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.size(), 3);
        assert_eq!(map, vec![1, 2, 3]);
    }

    #[test]
    fn induced_delete_c5_gives_p4() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (h, _) = c5
            .induced_delete(&VertexSet::from_members(5, &[0]))
            .unwrap();
        assert_eq!((h.order(), h.size()), (4, 3));
        assert_eq!((h.min_degree(), h.max_degree()), (1, 2));
        assert!(h.is_connected());
    }

    #[test]
    fn induced_delete_petersen_closed_neighborhood() {
        let g = Graph::from_edges(10, &petersen_edges()).unwrap();
        // closed neighborhood of vertex 0: itself plus 1, 4, 5
        let s = VertexSet::from_members(10, &[0, 1, 4, 5]);
        let (h, _) = g.induced_delete(&s).unwrap();
        assert_eq!(h.order(), 6);
        assert!(h.is_connected());
    }

    #[test]
    fn induced_delete_rejects_everything() {
        let g = path3();
        assert!(matches!(
            g.induced_delete(&VertexSet::full(3)),
            Err(GraphError::FullDeletion)
        ));
    }

    #[test]
    fn handshake_on_small_graphs() {
        for g in [
            path3(),
            k4(),
            Graph::from_edges(10, &petersen_edges()).unwrap(),
        ] {
            let total: usize = (0..g.order()).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.size());
        }
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(70);
        s.insert(0);
        s.insert(65);
        assert!(s.contains(65) && !s.contains(64));
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 65]);
        let c = s.complement();
        assert_eq!(c.len(), 68);
        assert!(s.is_disjoint(&c));
        s.remove(65);
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn cut_degree_symmetry() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        for mask in 1..(1u64 << 6) - 1 {
            let x = VertexSet::from_mask(6, mask);
            let y = x.complement();
            assert_eq!(g.cut_degree(&x).unwrap(), g.cut_degree(&y).unwrap());
        }
    }
}
