//! Two-color spanning tree builder: a star, then grow the two color
//! components against each other.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::game::{Builder, Color, Session, WinCertificate};

#[derive(Debug, Default, Clone, Copy)]
pub struct Tree2Builder;

impl Builder for Tree2Builder {
    fn name(&self) -> String {
        "tree2".into()
    }

    fn play(&mut self, session: &mut Session<'_>) -> Result<WinCertificate> {
        let state = session.state();
        let n = state.n();
        if state.t() != 2 {
            return Err(Error::Precondition(format!(
                "the two-color tree strategy needs t = 2, got {}",
                state.t()
            )));
        }
        if state.targets().uniform_tree() != Some(n) {
            return Err(Error::Precondition(format!(
                "the two-color tree strategy targets spanning trees (k = {n}) in both colors"
            )));
        }
        let start = state.queries();
        let hub = 0;
        // sizes of the two color components through the hub, and the
        // vertices lying in exactly one of them
        let mut size = [1usize; 2];
        let mut only: [BTreeSet<usize>; 2] = Default::default();
        session.set_tag(Some("star".into()));
        for u in 1..n {
            let c = session.query_pair(hub, u)?;
            size[c.slot()] += 1;
            only[c.slot()].insert(u);
        }
        session.set_tag(Some("grow".into()));
        loop {
            if let Some(i) = (0..2).find(|&i| size[i] == n) {
                let color = Color::new(i + 1);
                let edges = session.state().color_graph(color).bfs_tree(hub);
                session.set_tag(None);
                let used = session.state().queries() - start;
                if used > 2 * n - 3 {
                    return Err(Error::Invariant(format!(
                        "{used} queries exceed 2n - 3 = {}",
                        2 * n - 3
                    )));
                }
                return Ok(WinCertificate::FoundCopy { color, edges });
            }
            let (Some(&x), Some(&y)) = (only[0].first(), only[1].first()) else {
                return Err(Error::Invariant(
                    "components cover the board but neither spans it".into(),
                ));
            };
            let before = size[0] + size[1];
            let c = session.query_pair(x, y)?;
            // the endpoint outside color c's component joins it
            let joined = if c.index() == 1 { y } else { x };
            only[2 - c.index()].remove(&joined);
            size[c.slot()] += 1;
            if size[0] + size[1] != before + 1 {
                return Err(Error::Invariant(format!(
                    "potential went from {before} to {}",
                    size[0] + size[1]
                )));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{run_game, EngineConfig, GameState, TargetSpec, Variant};
    use crate::painter::{RandomPainter, Tree2Adversary};

    fn board(n: usize) -> GameState {
        GameState::new_game(n, 2, TargetSpec::trees(2, n).unwrap(), Variant::Classic).unwrap()
    }

    #[test]
    fn adversary_forces_the_exact_count() {
        for n in 2..30 {
            let out = run_game(
                &mut Tree2Builder,
                &mut Tree2Adversary::new(n),
                board(n),
                &EngineConfig::default(),
            )
            .unwrap();
            assert_eq!(out.queries(), 2 * n - 3, "n = {n}");
            assert_eq!(out.certificate.structure_size(), n);
        }
    }

    #[test]
    fn random_painters_stay_within_bound() {
        for seed in 0..50 {
            let out = run_game(
                &mut Tree2Builder,
                &mut RandomPainter::new(2, seed),
                board(20),
                &EngineConfig::default(),
            )
            .unwrap();
            assert!(out.queries() <= 37);
        }
    }

    #[test]
    fn rejects_three_colors() {
        let state = GameState::new_game(4, 3, TargetSpec::trees(3, 4).unwrap(), Variant::Locating)
            .unwrap();
        let mut p = RandomPainter::new(3, 0);
        let mut s = Session::new(state, &mut p);
        assert!(Tree2Builder.play(&mut s).is_err());
    }
}
