use std::collections::BTreeSet;

use super::ColoredTree;
use crate::detection::q_bound;
use crate::error::{Error, Result};
use crate::game::{Color, Edge};

/// One tree of a [`GoodForest`] together with the queries spent on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestComponent {
    pub id: usize,
    pub tree: ColoredTree,
    pub queries: usize,
}

impl ForestComponent {
    /// `(e(T), |chi(T)|)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.tree.edge_count(), self.tree.colors().len())
    }
}

/// Properly colored, vertex-disjoint trees sharing at least one color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodForest {
    t: usize,
    comps: Vec<ForestComponent>,
    next_id: usize,
}

impl GoodForest {
    pub fn new(t: usize) -> Self {
        GoodForest {
            t,
            comps: Vec::new(),
            next_id: 0,
        }
    }

    /// Build a forest from trees, numbering them in order. Fails unless the
    /// result is a good forest.
    pub fn from_trees(t: usize, trees: Vec<ColoredTree>) -> Result<Self> {
        let mut f = GoodForest::new(t);
        for tree in trees {
            f.push(tree, 0);
        }
        f.validate()?;
        Ok(f)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Components in creation order.
    pub fn components(&self) -> &[ForestComponent] {
        &self.comps
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.comps.iter().map(|c| c.tree.vertex_count()).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.comps.iter().map(|c| c.tree.edge_count()).sum()
    }

    pub fn edges(&self) -> Vec<(Edge, Color)> {
        self.comps.iter().flat_map(|c| c.tree.edges()).collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.comps.iter().any(|c| c.tree.contains(v))
    }

    /// Colors present in every component; every color when the forest is empty.
    pub fn common_colors(&self) -> BTreeSet<Color> {
        self.comps
            .iter()
            .fold(Color::all(self.t).collect(), |acc: BTreeSet<Color>, c| {
                acc.intersection(&c.tree.colors()).copied().collect()
            })
    }

    /// Total queries charged to components.
    pub fn charged_queries(&self) -> usize {
        self.comps.iter().map(|c| c.queries).sum()
    }

    pub(crate) fn push(&mut self, tree: ColoredTree, queries: usize) -> usize {
        let id = self.next_id;
        self.next_id += 1;
        self.comps.push(ForestComponent { id, tree, queries });
        id
    }

    pub(crate) fn component_mut(&mut self, id: usize) -> Option<&mut ForestComponent> {
        self.comps.iter_mut().find(|c| c.id == id)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for comp in &self.comps {
            let tree = &comp.tree;
            if !tree.is_properly_colored() {
                return Err(Error::Precondition(format!(
                    "component {} is not properly colored",
                    comp.id
                )));
            }
            if let Some(c) = tree.colors().into_iter().find(|c| c.index() > self.t) {
                return Err(Error::ColorOutOfRange {
                    color: c.index(),
                    t: self.t,
                });
            }
            for v in tree.vertices() {
                if !seen.insert(v) {
                    return Err(Error::Precondition(format!(
                        "vertex {v} lies in two components"
                    )));
                }
            }
        }
        if !self.comps.is_empty() && self.common_colors().is_empty() {
            return Err(Error::Precondition("no color is common to all components".into()));
        }
        Ok(())
    }

    /// Check the per-component accounting: each `q(T) <= q(e(T), |chi(T)|)`
    /// and each shape is one the extension process can produce.
    pub fn check_accounting(&self) -> Result<()> {
        for comp in &self.comps {
            let (m, k) = comp.shape();
            if !shape_allowed(m, k) {
                return Err(Error::Invariant(format!(
                    "component {} has shape (m, k) = ({m}, {k})",
                    comp.id
                )));
            }
            let bound = q_bound(m, k)?;
            if comp.queries as f64 > bound + 1e-9 {
                return Err(Error::Invariant(format!(
                    "component {} used {} queries, q({m}, {k}) = {bound:.3}",
                    comp.id, comp.queries
                )));
            }
        }
        Ok(())
    }
}

/// `(1,1)`, `(2,2)`, `(3,3)`, or `4 <= k <= m <= 2k - 3`.
pub fn shape_allowed(m: usize, k: usize) -> bool {
    matches!((m, k), (1, 1) | (2, 2) | (3, 3)) || (4 <= k && k <= m && m + 3 <= 2 * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(edges: &[(usize, usize, usize)]) -> ColoredTree {
        ColoredTree::from_edges(
            &edges
                .iter()
                .map(|&(a, b, c)| (Edge::of(a, b), Color::new(c)))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn common_colors_and_validation() {
        let empty = GoodForest::new(3);
        assert_eq!(empty.common_colors().len(), 3);
        assert!(empty.validate().is_ok());

        let f = GoodForest::from_trees(
            3,
            vec![tree(&[(0, 1, 1), (1, 2, 2)]), tree(&[(3, 4, 2)])],
        )
        .unwrap();
        assert_eq!(f.common_colors(), BTreeSet::from([Color::new(2)]));
        assert_eq!(f.vertex_count(), 5);
        assert_eq!(f.edge_count(), 3);

        assert!(GoodForest::from_trees(2, vec![tree(&[(0, 1, 1)]), tree(&[(2, 3, 2)])]).is_err());
        assert!(GoodForest::from_trees(2, vec![tree(&[(0, 1, 1)]), tree(&[(1, 3, 1)])]).is_err());
    }

    #[test]
    fn shapes() {
        for ok in [(1, 1), (2, 2), (3, 3), (4, 4), (5, 4), (7, 5)] {
            assert!(shape_allowed(ok.0, ok.1), "{ok:?}");
        }
        for bad in [(2, 1), (3, 2), (6, 4), (4, 3), (2, 3)] {
            assert!(!shape_allowed(bad.0, bad.1), "{bad:?}");
        }
    }
}
