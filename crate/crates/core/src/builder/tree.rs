use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::detection::Dsu;
use crate::error::{Error, Result};
use crate::game::{Color, Edge};

/// A tree of exposed, colored edges with its diameter and center cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredTree {
    // neighbor lists sorted by neighbor index
    adj: BTreeMap<usize, Vec<(usize, Color)>>,
    diameter: usize,
    center: usize,
}

impl ColoredTree {
    pub fn from_edges(edges: &[(Edge, Color)]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::Precondition("a tree needs at least one edge".into()));
        }
        let mut adj: BTreeMap<usize, Vec<(usize, Color)>> = BTreeMap::new();
        for &(e, c) in edges {
            adj.entry(e.u()).or_default().push((e.v(), c));
            adj.entry(e.v()).or_default().push((e.u(), c));
        }
        if adj.len() != edges.len() + 1 {
            return Err(Error::Precondition(format!(
                "{} edges on {} vertices is not a tree",
                edges.len(),
                adj.len()
            )));
        }
        let index: Vec<usize> = adj.keys().copied().collect();
        let pos = |x: usize| index.binary_search(&x).unwrap();
        let mut dsu = Dsu::new(index.len());
        for &(e, _) in edges {
            if !dsu.union(pos(e.u()), pos(e.v())) {
                return Err(Error::Precondition(format!("edge {e} closes a cycle")));
            }
        }
        for list in adj.values_mut() {
            list.sort_unstable();
        }
        let mut tree = ColoredTree {
            adj,
            diameter: 0,
            center: 0,
        };
        let all: BTreeSet<usize> = tree.vertices().collect();
        let (diameter, center) = tree.diameter_and_center(&all);
        tree.diameter = diameter;
        tree.center = center;
        Ok(tree)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, Color)] {
        self.adj.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn edges(&self) -> Vec<(Edge, Color)> {
        self.adj
            .iter()
            .flat_map(|(&u, list)| {
                list.iter()
                    .filter(move |(w, _)| u < *w)
                    .map(move |&(w, c)| (Edge::of(u, w), c))
            })
            .collect()
    }

    pub fn edge_color(&self, e: Edge) -> Option<Color> {
        self.neighbors(e.u())
            .iter()
            .find(|(w, _)| *w == e.v())
            .map(|&(_, c)| c)
    }

    pub fn colors(&self) -> BTreeSet<Color> {
        self.adj.values().flatten().map(|&(_, c)| c).collect()
    }

    pub fn is_properly_colored(&self) -> bool {
        self.adj.values().all(|list| {
            let cs: BTreeSet<Color> = list.iter().map(|&(_, c)| c).collect();
            cs.len() == list.len()
        })
    }

    /// The neighbor of `v` joined by an edge of color `c`, if any.
    pub fn neighbor_by_color(&self, v: usize, c: Color) -> Option<usize> {
        self.neighbors(v)
            .iter()
            .find(|&&(_, col)| col == c)
            .map(|&(w, _)| w)
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    /// Lowest-index vertex whose eccentricity is at most `ceil(diam / 2)`.
    pub fn center(&self) -> usize {
        self.center
    }

    pub fn is_path(&self) -> bool {
        self.diameter == self.edge_count()
    }

    pub fn is_star(&self) -> bool {
        self.edge_count() >= 2 && self.diameter == 2
    }

    /// Distances from `from` inside the subtree induced by `within`.
    pub(crate) fn distances(&self, from: usize, within: &BTreeSet<usize>) -> BTreeMap<usize, usize> {
        let mut dist = BTreeMap::from([(from, 0)]);
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for &(y, _) in self.neighbors(x) {
                if within.contains(&y) && !dist.contains_key(&y) {
                    dist.insert(y, d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Diameter and lowest-index center of the subtree induced by `within`.
    pub(crate) fn diameter_and_center(&self, within: &BTreeSet<usize>) -> (usize, usize) {
        let ecc: Vec<(usize, usize)> = within
            .iter()
            .map(|&v| (v, self.distances(v, within).values().copied().max().unwrap_or(0)))
            .collect();
        let diameter = ecc.iter().map(|&(_, e)| e).max().unwrap_or(0);
        let radius_cap = diameter.div_ceil(2);
        let center = ecc
            .iter()
            .find(|&&(_, e)| e <= radius_cap)
            .map(|&(v, _)| v)
            .expect("every tree has a center");
        (diameter, center)
    }

    pub(crate) fn degree_within(&self, v: usize, within: &BTreeSet<usize>) -> usize {
        self.neighbors(v)
            .iter()
            .filter(|(w, _)| within.contains(w))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(edges: &[(usize, usize, usize)]) -> Result<ColoredTree> {
        ColoredTree::from_edges(
            &edges
                .iter()
                .map(|&(a, b, c)| (Edge::of(a, b), Color::new(c)))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn shape_and_center() {
        let p = t(&[(0, 1, 1), (1, 2, 2), (2, 3, 1)]).unwrap();
        assert_eq!(p.diameter(), 3);
        assert_eq!(p.center(), 1);
        assert!(p.is_path());
        assert!(p.is_properly_colored());
        assert_eq!(p.colors().len(), 2);

        let star = t(&[(5, 0, 1), (5, 1, 2), (5, 2, 3)]).unwrap();
        assert_eq!(star.center(), 5);
        assert!(star.is_star());
        assert_eq!(star.neighbor_by_color(5, Color::new(2)), Some(1));

        let single = t(&[(4, 2, 1)]).unwrap();
        assert_eq!((single.diameter(), single.center()), (1, 2));
    }

    #[test]
    fn rejects_non_trees() {
        assert!(t(&[]).is_err());
        assert!(t(&[(0, 1, 1), (2, 3, 1)]).is_err());
        assert!(t(&[(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1)]).is_err());
        assert!(!t(&[(0, 1, 1), (1, 2, 1)]).unwrap().is_properly_colored());
    }
}
