use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::game::{Color, Edge, GameState, Painter};

/// First `n - 2` new queries get color 1, the next `n - 2` color 2, and
/// everything after that color 1. On two vertices the single query gets color 2.
#[derive(Debug, Clone, Copy)]
pub struct Tree2Adversary {
    n: usize,
}

impl Tree2Adversary {
    pub fn new(n: usize) -> Self {
        Tree2Adversary { n }
    }
}

impl Painter for Tree2Adversary {
    fn name(&self) -> String {
        "tree2-adv".into()
    }

    fn color_of(&mut self, _edge: Edge, view: &GameState) -> Color {
        let k = view.queries() + 1;
        let stage = self.n.saturating_sub(2);
        if k > stage && k <= (2 * stage).max(self.n - 1) {
            Color::new(2)
        } else {
            Color::new(1)
        }
    }
}

/// Four near-equal contiguous clusters with the cross edges colored by a
/// proper 3-edge-coloring of `K_4` and every inside edge colored 1.
///
/// Colors are numbered r = 1, b = 2, g = 3: `V1V2, V3V4` get r, `V1V3, V2V4`
/// get b, `V1V4, V2V3` get g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlownK4 {
    cluster: Vec<usize>,
    sizes: [usize; 4],
}

impl BlownK4 {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("need n >= 3, got {n}")));
        }
        let sizes: [usize; 4] = std::array::from_fn(|i| n / 4 + usize::from(i < n % 4));
        let cluster = (0..4)
            .flat_map(|i| std::iter::repeat(i).take(sizes[i]))
            .collect();
        Ok(BlownK4 { cluster, sizes })
    }

    pub fn n(&self) -> usize {
        self.cluster.len()
    }

    /// 0-based cluster of `v`.
    pub fn cluster_of(&self, v: usize) -> usize {
        self.cluster[v]
    }

    pub fn sizes(&self) -> [usize; 4] {
        self.sizes
    }

    pub fn is_cross(&self, e: Edge) -> bool {
        self.cluster[e.u()] != self.cluster[e.v()]
    }

    /// Number of edges between different clusters.
    pub fn cross_edges(&self) -> usize {
        let s = self.sizes;
        (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| s[i] * s[j]))
            .sum()
    }

    pub fn color(&self, e: Edge) -> Color {
        let (a, b) = (self.cluster[e.u()], self.cluster[e.v()]);
        let pair = (a.min(b), a.max(b));
        Color::new(match pair {
            (0, 1) | (2, 3) => 1,
            (0, 2) | (1, 3) => 2,
            (0, 3) | (1, 2) => 3,
            _ => 1,
        })
    }

    pub fn coloring(&self) -> Coloring {
        Coloring::from_fn(self.n(), 3, |e| self.color(e)).expect("colors are in range")
    }
}

pub fn blown_k4_coloring(n: usize) -> Result<Coloring> {
    Ok(BlownK4::new(n)?.coloring())
}

/// Answers the blown-up `K_4` coloring, except that the last unexposed cross
/// edge gets the smallest color different from its planned one.
#[derive(Debug, Clone)]
pub struct Tree3Adversary {
    base: BlownK4,
    // cross edges exposed so far, counted from the board on first use
    cross_seen: Option<usize>,
}

impl Tree3Adversary {
    pub fn new(n: usize) -> Self {
        Tree3Adversary {
            base: BlownK4::new(n.max(3)).expect("n >= 3"),
            cross_seen: None,
        }
    }

    pub fn base(&self) -> &BlownK4 {
        &self.base
    }
}

impl Painter for Tree3Adversary {
    fn name(&self) -> String {
        "tree3-adv".into()
    }

    fn color_of(&mut self, edge: Edge, view: &GameState) -> Color {
        let base = &self.base;
        let seen = self
            .cross_seen
            .get_or_insert_with(|| view.exposed().filter(|&(e, _)| base.is_cross(e)).count());
        let planned = base.color(edge);
        if !base.is_cross(edge) {
            return planned;
        }
        *seen += 1;
        if *seen == base.cross_edges() {
            Color::all(3).find(|&c| c != planned).expect("three colors")
        } else {
            planned
        }
    }
}
