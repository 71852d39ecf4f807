//! Bitmask graphs on at most 64 vertices for the solver's inner loop.

use crate::game::Goal;

/// Adjacency bitmasks; `adj[v]` has bit `w` set when `vw` is an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitGraph {
    pub adj: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 64, "bit graphs hold at most 64 vertices");
        BitGraph { adj: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn union(&self, other: &BitGraph) -> BitGraph {
        BitGraph {
            adj: self.adj.iter().zip(&other.adj).map(|(a, b)| a | b).collect(),
        }
    }

    /// Vertices with at least one neighbor.
    fn touched(&self) -> u64 {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .fold(0, |m, (v, _)| m | 1 << v)
    }

    /// Size of the largest component among touched vertices (0 if edgeless).
    pub fn largest_component(&self) -> usize {
        let mut left = self.touched();
        let mut best = 0;
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= !comp;
            best = best.max(comp.count_ones() as usize);
        }
        best
    }

    /// Whether a matching of size `r` exists, by branching on the lowest
    /// vertex that still has a neighbor.
    pub fn has_matching(&self, r: usize) -> bool {
        let alive = self.touched();
        self.matching_from(alive, r)
    }

    fn matching_from(&self, alive: u64, r: usize) -> bool {
        if r == 0 {
            return true;
        }
        let mut candidates = alive;
        loop {
            if candidates == 0 || (candidates.count_ones() as usize) < 2 * r {
                return false;
            }
            let v = candidates.trailing_zeros() as usize;
            let nbrs = self.adj[v] & alive;
            candidates &= !(1 << v);
            if nbrs == 0 {
                continue;
            }
            let rest = alive & !(1 << v);
            let mut ws = nbrs;
            while ws != 0 {
                let w = ws.trailing_zeros() as usize;
                ws &= ws - 1;
                if self.matching_from(rest & !(1 << w), r - 1) {
                    return true;
                }
            }
            // v unmatched
            return self.matching_from(rest, r);
        }
    }

    pub fn has_goal(&self, goal: Goal) -> bool {
        match goal {
            Goal::Matching { r } => self.has_matching(r),
            Goal::Tree { k } => self.largest_component() >= k,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detection::{max_matching, SimpleGraph};
    use crate::game::Edge;

    #[test]
    fn agrees_with_the_general_detectors() {
        let n = 7;
        let all: Vec<Edge> = Edge::all(n).collect();
        let mut seed = 12345u64;
        for _ in 0..500 {
            let mut bg = BitGraph::new(n);
            let mut sg = SimpleGraph::new(n);
            for &e in &all {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if (seed >> 33) % 3 == 0 {
                    bg.add(e.u(), e.v());
                    sg.add_edge(e);
                }
            }
            let m = max_matching(&sg).len();
            for r in 0..=4 {
                assert_eq!(bg.has_matching(r), m >= r);
            }
            assert_eq!(bg.largest_component(), sg.largest_component().len());
        }
    }
}
