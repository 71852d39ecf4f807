use super::bits::BitGraph;
use crate::detection::{graph_find_goal, SimpleGraph};
use crate::error::{Error, Result};
use crate::game::{edge_count, Color, Edge, GameState, TargetSpec};

/// A partial coloring of `E(K_n)`: for each edge index, 0 when unexposed,
/// else the color index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolverState {
    n: usize,
    t: usize,
    targets: TargetSpec,
    colors: Vec<u8>,
}

impl SolverState {
    pub fn empty(n: usize, targets: TargetSpec) -> Self {
        SolverState {
            n,
            t: targets.len(),
            targets,
            colors: vec![0; edge_count(n)],
        }
    }

    pub fn from_game(state: &GameState) -> Result<Self> {
        let mut s = SolverState::empty(state.n(), state.targets().clone());
        for (e, c) in state.exposed() {
            s.set(e, Some(c));
        }
        Ok(s)
    }

    /// Build from `(edge, color)` pairs.
    pub fn from_exposed(
        n: usize,
        targets: TargetSpec,
        exposed: impl IntoIterator<Item = (Edge, Color)>,
    ) -> Result<Self> {
        let mut s = SolverState::empty(n, targets);
        for (e, c) in exposed {
            if e.v() >= n {
                return Err(Error::VertexOutOfRange { vertex: e.v(), n });
            }
            Color::checked(c.index(), s.t)?;
            if s.color(e).is_some() {
                return Err(Error::DuplicateEdge(e.u(), e.v()));
            }
            s.set(e, Some(c));
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn targets(&self) -> &TargetSpec {
        &self.targets
    }

    pub fn raw(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, e: Edge) -> Option<Color> {
        match self.colors[e.index(self.n)] {
            0 => None,
            c => Some(Color::new(c as usize)),
        }
    }

    pub fn set(&mut self, e: Edge, c: Option<Color>) {
        self.colors[e.index(self.n)] = c.map_or(0, |c| c.index() as u8);
    }

    pub fn queries(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).count()
    }

    pub fn unexposed(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.n;
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(move |(i, _)| Edge::from_index(n, i))
    }

    pub fn unexposed_count(&self) -> usize {
        self.colors.len() - self.queries()
    }

    /// Exact encoding in base `t + 1`, edge index 0 most significant.
    /// Requires `(t + 1)^E` to fit in a `u64`.
    pub fn code(&self) -> u64 {
        encode(&self.colors, self.t)
    }

    /// Exposed edges of color `c`, plus every unexposed edge when `with_unexposed`.
    pub fn class_graph(&self, c: Color, with_unexposed: bool) -> SimpleGraph {
        let want = c.index() as u8;
        SimpleGraph::from_edges(
            self.n,
            self.colors
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == want || (with_unexposed && x == 0))
                .map(|(i, _)| Edge::from_index(self.n, i)),
        )
    }

    pub fn class_bits(&self, c: Color, with_unexposed: bool) -> BitGraph {
        let want = c.index() as u8;
        let mut g = BitGraph::new(self.n);
        for (i, &x) in self.colors.iter().enumerate() {
            if x == want || (with_unexposed && x == 0) {
                let e = Edge::from_index(self.n, i);
                g.add(e.u(), e.v());
            }
        }
        g
    }

    /// Whether color `c`'s goal appears in its exposed class (optionally
    /// together with all unexposed edges).
    pub fn class_has_goal(&self, c: Color, with_unexposed: bool) -> bool {
        let goal = self.targets.goal(c);
        if self.n <= 64 {
            self.class_bits(c, with_unexposed).has_goal(goal)
        } else {
            graph_find_goal(&self.class_graph(c, with_unexposed), goal).is_some()
        }
    }
}

pub(crate) fn encode(colors: &[u8], t: usize) -> u64 {
    let base = t as u64 + 1;
    colors
        .iter()
        .fold(0u64, |acc, &c| acc.wrapping_mul(base).wrapping_add(c as u64))
}
