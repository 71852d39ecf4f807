use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::Coloring;
use crate::error::Result;
use crate::game::{Color, Edge, GameState, Painter};

/// Answers every query from a stored complete coloring.
#[derive(Debug, Clone)]
pub struct FixedPainter {
    coloring: Coloring,
    name: String,
}

impl FixedPainter {
    pub fn new(coloring: Coloring) -> Self {
        FixedPainter {
            coloring,
            name: "fixed".into(),
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }
}

impl Painter for FixedPainter {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn color_of(&mut self, edge: Edge, _view: &GameState) -> Color {
        self.coloring.color(edge)
    }
}

/// Uniformly random colors from a seeded ChaCha stream.
#[derive(Debug, Clone)]
pub struct RandomPainter {
    t: usize,
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomPainter {
    pub fn new(t: usize, seed: u64) -> Self {
        RandomPainter {
            t,
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Painter for RandomPainter {
    fn name(&self) -> String {
        format!("random:{}", self.seed)
    }

    fn seed(&self) -> Option<u64> {
        Some(self.seed)
    }

    fn color_of(&mut self, _edge: Edge, _view: &GameState) -> Color {
        Color::new(self.rng.gen_range(1..=self.t))
    }
}

/// Replays a fixed reply sequence, answering color 1 once it runs out and
/// recording the replies it actually gave.
#[derive(Debug, Clone, Default)]
pub struct ScriptedPainter {
    replies: Vec<Color>,
    pos: usize,
}

impl ScriptedPainter {
    pub fn new(replies: Vec<Color>) -> Self {
        ScriptedPainter { replies, pos: 0 }
    }

    /// Replies given so far.
    pub fn given(&self) -> &[Color] {
        &self.replies[..self.pos]
    }
}

impl Painter for ScriptedPainter {
    fn name(&self) -> String {
        "scripted".into()
    }

    fn color_of(&mut self, _edge: Edge, _view: &GameState) -> Color {
        if self.pos == self.replies.len() {
            self.replies.push(Color::new(1));
        }
        let c = self.replies[self.pos];
        self.pos += 1;
        c
    }
}

/// Run `game` once for every sequence of painter replies in `[t]`, in
/// lexicographic order. Each run receives a fresh [`ScriptedPainter`]; the
/// branching is over the replies the run actually consumed. Returns the
/// number of runs.
pub fn explore_replies<F>(t: usize, mut game: F) -> Result<usize>
where
    F: FnMut(&mut ScriptedPainter) -> Result<()>,
{
    let mut script: Vec<Color> = Vec::new();
    let mut runs = 0;
    loop {
        let mut painter = ScriptedPainter::new(script.clone());
        game(&mut painter)?;
        runs += 1;
        script = painter.given().to_vec();
        while script.last().is_some_and(|c| c.index() == t) {
            script.pop();
        }
        match script.last_mut() {
            Some(c) => *c = Color::new(c.index() + 1),
            None => return Ok(runs),
        }
    }
}
