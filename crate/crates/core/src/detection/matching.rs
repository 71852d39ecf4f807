//! Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use super::SimpleGraph;
use crate::game::Edge;

const NONE: usize = usize::MAX;

struct Blossom<'g> {
    g: &'g SimpleGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g SimpleGraph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grow an alternating tree from `root`; returns the free vertex that ends
    /// an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// A maximum matching of `g`, as edges sorted lexicographically.
pub fn max_matching(g: &SimpleGraph) -> Vec<Edge> {
    let mut b = Blossom::new(g);
    // greedy start, then augment from each exposed vertex
    for e in g.edges() {
        if b.mate[e.u()] == NONE && b.mate[e.v()] == NONE {
            b.mate[e.u()] = e.v();
            b.mate[e.v()] = e.u();
        }
    }
    for root in 0..g.n() {
        if b.mate[root] == NONE && !g.neighbors(root).is_empty() {
            if let Some(end) = b.find_path(root) {
                b.augment(end);
            }
        }
    }
    let mut out: Vec<Edge> = (0..g.n())
        .filter(|&u| b.mate[u] != NONE && u < b.mate[u])
        .map(|u| Edge::of(u, b.mate[u]))
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, es: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::from_edges(n, es.iter().map(|&(a, b)| Edge::of(a, b)))
    }

    #[test]
    fn small_cases() {
        assert_eq!(max_matching(&graph(3, &[(0, 1), (1, 2), (0, 2)])).len(), 1);
        assert_eq!(
            max_matching(&graph(4, &[(0, 1), (1, 2), (2, 3)])),
            vec![Edge::of(0, 1), Edge::of(2, 3)]
        );
        assert!(max_matching(&graph(4, &[])).is_empty());
    }

    #[test]
    fn odd_cycle_with_pendant_needs_blossom() {
        // 5-cycle 0..4 plus pendant 5 hanging off 0 and 6 off 2
        let g = graph(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 6)],
        );
        assert_eq!(max_matching(&g).len(), 3);
        // Petersen graph has a perfect matching
        let outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        let spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)];
        let inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)];
        let all: Vec<_> = outer.iter().chain(&spokes).chain(&inner).copied().collect();
        assert_eq!(max_matching(&graph(10, &all)).len(), 5);
    }
}
