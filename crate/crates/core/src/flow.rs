//! Minimal augmenting-path max-flow used by the exact connectivity oracles.
//!
//! Arcs are stored in pairs: arc `2i` and its reverse `2i + 1`. Unit
//! capacities bound the number of augmentations by the answer, which never
//! exceeds the graph order here, so shortest-path (BFS) augmentation is
//! plenty fast at the intended sizes.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

pub(crate) struct FlowNetwork {
    nodes: usize,
    head: Vec<Vec<u32>>, // arc ids leaving each node
    to: Vec<u32>,
    cap: Vec<i32>,  // residual capacities, mutated by max_flow
    base: Vec<i32>, // original capacities, restored by reset
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        Self {
            nodes,
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            base: Vec::new(),
        }
    }

    /// Adds the arc `u → v` with capacity `cap_fwd` and its reverse with
    /// capacity `cap_rev`.
    pub fn add_arc_pair(&mut self, u: usize, v: usize, cap_fwd: i32, cap_rev: i32) {
        let id = self.to.len() as u32;
        self.head[u].push(id);
        self.head[v].push(id + 1);
        self.to.push(v as u32);
        self.to.push(u as u32);
        self.cap.push(cap_fwd);
        self.cap.push(cap_rev);
        self.base.push(cap_fwd);
        self.base.push(cap_rev);
    }

    /// Restores all residual capacities to their original values.
    pub fn reset(&mut self) {
        self.cap.copy_from_slice(&self.base);
    }

    /// Max flow from `s` to `t`, aborting early once `limit` units have
    /// been pushed (callers taking a minimum over many pairs never need
    /// more).
    pub fn max_flow(&mut self, s: usize, t: usize, limit: i32) -> i32 {
        let mut flow = 0;
        let mut parent_arc = vec![u32::MAX; self.nodes];
        let mut queue = VecDeque::new();
        while flow < limit {
            parent_arc.iter_mut().for_each(|p| *p = u32::MAX);
            queue.clear();
            queue.push_back(s);
            parent_arc[s] = u32::MAX - 1; // mark visited
            let mut reached = false;
            'bfs: while let Some(v) = queue.pop_front() {
                for &arc in &self.head[v] {
                    let w = self.to[arc as usize] as usize;
                    if self.cap[arc as usize] > 0 && parent_arc[w] == u32::MAX {
                        parent_arc[w] = arc;
                        if w == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !reached {
                break;
            }
            // bottleneck along the path
            let mut bottleneck = i32::MAX;
            let mut v = t;
            while v != s {
                let arc = parent_arc[v] as usize;
                bottleneck = bottleneck.min(self.cap[arc]);
                v = self.to[arc ^ 1] as usize;
            }
            let mut v = t;
            while v != s {
                let arc = parent_arc[v] as usize;
                self.cap[arc] -= bottleneck;
                self.cap[arc ^ 1] += bottleneck;
                v = self.to[arc ^ 1] as usize;
            }
            flow += bottleneck;
        }
        flow
    }

    /// Nodes reachable from `s` along arcs with positive residual capacity.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &arc in &self.head[v] {
                let w = self.to[arc as usize] as usize;
                if self.cap[arc as usize] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}
