//! Monochromatic structure detection and closed-form quantities.

mod formulas;
mod matching;
mod six_cover;

use std::collections::{BTreeSet, VecDeque};

pub use formulas::{
    k_of, lg, matching_coefficient, matching_cornering_lower_bound, matching_query_bound, q_bound,
    ramsey_matching_number, tree3_lower_bound, tree_ramsey, trivial_online_value,
};
pub use matching::max_matching;
pub use six_cover::{six_cover_witness, SixCover};

use crate::builder::GoodForest;
use crate::error::{Error, Result};
use crate::game::{Color, Edge, GameState, Goal, TargetSpec};

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: BTreeSet<Edge>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![Vec::new(); n],
            edges: BTreeSet::new(),
        }
    }

    /// Duplicate edges are ignored.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut g = SimpleGraph::new(n);
        for e in edges {
            g.add_edge(e);
        }
        g
    }

    /// Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, e: Edge) -> bool {
        assert!(e.v() < self.n, "edge {e} outside a graph on {} vertices", self.n);
        if !self.edges.insert(e) {
            return false;
        }
        self.adj[e.u()].push(e.v());
        self.adj[e.v()].push(e.u());
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Component label per vertex (the smallest vertex of its component).
    pub fn component_labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = s;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = s;
                        stack.push(y);
                    }
                }
            }
        }
        label
    }

    /// Components spanned by edges, each sorted, ordered by smallest vertex.
    /// Vertices without edges are not components here.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let label = self.component_labels();
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            if !self.adj[v].is_empty() {
                groups[label[v]].push(v);
            }
        }
        groups.into_iter().filter(|g| !g.is_empty()).collect()
    }

    /// A largest component; ties go to the one with the smallest vertex.
    pub fn largest_component(&self) -> Vec<usize> {
        let mut best: Vec<usize> = Vec::new();
        for c in self.components() {
            if c.len() > best.len() {
                best = c;
            }
        }
        best
    }

    /// Breadth-first spanning tree of the component of `root`, neighbors
    /// visited in increasing order.
    pub fn bfs_tree(&self, root: usize) -> Vec<Edge> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        let mut nbrs = Vec::new();
        while let Some(x) = queue.pop_front() {
            nbrs.clear();
            nbrs.extend_from_slice(&self.adj[x]);
            nbrs.sort_unstable();
            for &y in &nbrs {
                if !seen[y] {
                    seen[y] = true;
                    out.push(Edge::of(x, y));
                    queue.push_back(y);
                }
            }
        }
        out
    }
}

/// Vertex set of a largest component of the exposed color-`c` graph (empty if
/// color `c` has no exposed edges).
pub fn largest_mono_component(state: &GameState, c: Color) -> Vec<usize> {
    state.color_graph(c).largest_component()
}

/// A copy of `goal` inside `g`: `r` disjoint edges, or a spanning tree of a
/// component with at least `k` vertices.
pub fn graph_find_goal(g: &SimpleGraph, goal: Goal) -> Option<Vec<Edge>> {
    match goal {
        Goal::Matching { r } => {
            let m = max_matching(g);
            (m.len() >= r).then(|| m[..r].to_vec())
        }
        Goal::Tree { k } => {
            let comp = g.largest_component();
            (comp.len() >= k).then(|| g.bfs_tree(comp[0]))
        }
    }
}

pub fn find_mono_target(state: &GameState, c: Color, goal: Goal) -> Option<Vec<Edge>> {
    graph_find_goal(&state.color_graph(c), goal)
}

/// Check that `edges` by themselves realize `goal`.
pub fn verify_structure(edges: &[Edge], goal: Goal) -> std::result::Result<(), String> {
    let distinct: BTreeSet<Edge> = edges.iter().copied().collect();
    if distinct.len() != edges.len() {
        return Err("repeated edge".into());
    }
    let vertices: BTreeSet<usize> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
    match goal {
        Goal::Matching { r } => {
            if vertices.len() != 2 * edges.len() {
                return Err("edges are not pairwise disjoint".into());
            }
            if edges.len() < r {
                return Err(format!("{} disjoint edges, need {r}", edges.len()));
            }
        }
        Goal::Tree { k } => {
            if edges.len() + 1 != vertices.len() {
                return Err(format!(
                    "{} edges on {} vertices is not a tree",
                    edges.len(),
                    vertices.len()
                ));
            }
            let index: Vec<usize> = vertices.iter().copied().collect();
            let pos = |x: usize| index.binary_search(&x).unwrap();
            let mut dsu = Dsu::new(index.len());
            for e in edges {
                if !dsu.union(pos(e.u()), pos(e.v())) {
                    return Err("edges contain a cycle".into());
                }
            }
            if vertices.len() < k {
                return Err(format!("tree on {} vertices, need {k}", vertices.len()));
            }
        }
    }
    Ok(())
}

/// Pull a monochromatic matching out of a good forest.
///
/// Properly colored means each color class of `F` is itself a matching, so
/// the answer is the whole class of the lowest color `i` with `m_i >= r_i`.
pub fn good_forest_matching(f: &GoodForest, targets: &TargetSpec) -> Result<(Color, Vec<Edge>)> {
    let rs = targets
        .matching_sizes()
        .ok_or_else(|| Error::Precondition("targets must all be matchings".into()))?;
    if rs.len() != f.t() {
        return Err(Error::TargetMismatch {
            t: f.t(),
            got: rs.len(),
        });
    }
    f.validate()?;
    let need = rs.iter().max().copied().unwrap_or(0) + rs.iter().map(|r| r - 1).sum::<usize>();
    let covered = f.vertex_count();
    if covered < need {
        return Err(Error::Precondition(format!(
            "forest covers {covered} vertices, extraction needs {need}"
        )));
    }
    let mut by_color: Vec<Vec<Edge>> = vec![Vec::new(); f.t()];
    for (e, c) in f.edges() {
        by_color[c.slot()].push(e);
    }
    let common = *f
        .common_colors()
        .iter()
        .next()
        .ok_or_else(|| Error::Invariant("good forest without a common color".into()))?;
    let total: usize = by_color.iter().map(Vec::len).sum();
    if by_color[common.slot()].len() + total < covered {
        return Err(Error::Invariant(format!(
            "pigeonhole count fails: m_c + e(F) = {} < |V(F)| = {covered}",
            by_color[common.slot()].len() + total
        )));
    }
    for (slot, (class, r)) in by_color.into_iter().zip(&rs).enumerate() {
        if class.len() >= *r {
            let mut class = class;
            class.sort_unstable();
            return Ok((Color::new(slot + 1), class));
        }
    }
    Err(Error::Invariant(
        "good forest large enough but no color class reaches its target".into(),
    ))
}

/// Minimal union-find used for cycle checks.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
