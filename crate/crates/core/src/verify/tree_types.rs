//! Unlabeled trees and their proper edge colorings.

use std::collections::BTreeSet;

use rand::Rng;

use crate::game::{Color, Edge};

/// One representative of every isomorphism type of tree on `k >= 2`
/// vertices, labeled `0..k`.
pub fn tree_types(k: usize) -> Vec<Vec<Edge>> {
    assert!(k >= 2, "trees need at least two vertices");
    let mut layer: Vec<Vec<Edge>> = vec![vec![Edge::of(0, 1)]];
    for size in 3..=k {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for tree in &layer {
            for parent in 0..size - 1 {
                let mut grown = tree.clone();
                grown.push(Edge::of(parent, size - 1));
                if seen.insert(tree_code(size, &grown)) {
                    next.push(grown);
                }
            }
        }
        layer = next;
    }
    layer
}

fn adjacency(k: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); k];
    for e in edges {
        adj[e.u()].push(e.v());
        adj[e.v()].push(e.u());
    }
    adj
}

/// Isomorphism invariant of a tree: the smallest rooted code over its centers.
pub fn tree_code(k: usize, edges: &[Edge]) -> String {
    let adj = adjacency(k, edges);
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..k).filter(|&v| degree[v] <= 1).collect();
    let mut left = k;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in &adj[leaf] {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(&adj, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Edges in an order where every edge after the first touches an earlier one.
fn grown_order(k: usize, edges: &[Edge]) -> Vec<Edge> {
    let adj = adjacency(k, edges);
    let mut order = Vec::new();
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                order.push(Edge::of(v, w));
                stack.push(w);
            }
        }
    }
    order
}

fn allowed(colored: &[(Edge, Color)], e: Edge, colors: usize) -> Vec<Color> {
    Color::all(colors)
        .filter(|&c| !colored.iter().any(|&(f, d)| d == c && f.shares_vertex(e)))
        .collect()
}

/// Every proper coloring of the tree with colors `1..=colors`.
pub fn proper_colorings(k: usize, edges: &[Edge], colors: usize) -> Vec<Vec<(Edge, Color)>> {
    fn go(
        order: &[Edge],
        colors: usize,
        acc: &mut Vec<(Edge, Color)>,
        out: &mut Vec<Vec<(Edge, Color)>>,
    ) {
        let Some((&e, rest)) = order.split_first() else {
            out.push(acc.clone());
            return;
        };
        for c in allowed(acc, e, colors) {
            acc.push((e, c));
            go(rest, colors, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(&grown_order(k, edges), colors, &mut Vec::new(), &mut out);
    out
}

/// A proper coloring drawn edge by edge, uniformly among the allowed colors.
/// `None` when the maximum degree exceeds `colors`.
pub fn random_proper_coloring(
    k: usize,
    edges: &[Edge],
    colors: usize,
    rng: &mut impl Rng,
) -> Option<Vec<(Edge, Color)>> {
    let mut acc = Vec::new();
    for e in grown_order(k, edges) {
        let options = allowed(&acc, e, colors);
        if options.is_empty() {
            return None;
        }
        acc.push((e, options[rng.gen_range(0..options.len())]));
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;

    use super::*;

    #[test]
    fn counts_of_unlabeled_trees() {
        let known = [1, 1, 2, 3, 6, 11, 23, 47];
        for (k, &want) in (2..=9).zip(&known) {
            assert_eq!(tree_types(k).len(), want, "k = {k}");
        }
    }

    #[test]
    fn codes_ignore_labels() {
        let a = [Edge::of(0, 1), Edge::of(1, 2), Edge::of(2, 3)];
        let b = [Edge::of(2, 0), Edge::of(0, 3), Edge::of(3, 1)];
        let star = [Edge::of(0, 1), Edge::of(0, 2), Edge::of(0, 3)];
        assert_eq!(tree_code(4, &a), tree_code(4, &b));
        assert_ne!(tree_code(4, &a), tree_code(4, &star));
    }

    #[test]
    fn coloring_counts() {
        // a path with m edges has c (c-1)^(m-1) proper colorings
        let path: Vec<Edge> = (0..4).map(|i| Edge::of(i, i + 1)).collect();
        assert_eq!(proper_colorings(5, &path, 4).len(), 4 * 27);
        // a star with 3 edges: falling factorial
        let star = [Edge::of(0, 1), Edge::of(0, 2), Edge::of(0, 3)];
        assert_eq!(proper_colorings(4, &star, 4).len(), 24);
        assert_eq!(proper_colorings(4, &star, 2).len(), 0);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        assert!(random_proper_coloring(4, &star, 2, &mut rng).is_none());
        assert!(random_proper_coloring(4, &star, 3, &mut rng).is_some());
    }
}
