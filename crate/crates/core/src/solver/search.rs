//! Iterative-deepening minimax over Builder's edge choices and Painter's
//! colors, with a transposition table.

use std::collections::HashMap;

use serde::Serialize;

use super::bits::BitGraph;
use super::canon::canonical_key;
use super::completion::{cornered, excluded};
use super::state::SolverState;
use crate::error::{Error, Result};
use crate::game::{edge_count, Color, Edge, Goal, TargetSpec, Variant};

#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Memoize on relabeling-invariant keys.
    pub canonical: bool,
    /// Refuse instances with more than `2^max_log2_states` partial colorings.
    pub max_log2_states: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            canonical: false,
            max_log2_states: 26.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolverResult {
    pub value: usize,
    /// `None` when Builder has already won before any query.
    pub optimal_first_move: Option<Edge>,
    pub nodes_explored: u64,
    pub cache_hits: u64,
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    // deepest budget known to lose, -1 if none
    fail_upto: i32,
    // smallest budget known to win
    win_at: Option<u32>,
}

struct Search {
    n: usize,
    t: usize,
    goals: Vec<Goal>,
    variant: Variant,
    canonical: bool,
    state: SolverState,
    // exposed class of each color, and the unexposed edges
    class: Vec<BitGraph>,
    free: BitGraph,
    memo: HashMap<u64, Entry>,
    nodes: u64,
    hits: u64,
}

/// `log2` of the number of partial colorings, `E lg(t + 1)`.
pub fn log2_states(n: usize, t: usize) -> f64 {
    edge_count(n) as f64 * ((t + 1) as f64).log2()
}

/// Exact worst-case number of queries Builder needs from the empty board.
pub fn solve_value(
    n: usize,
    t: usize,
    targets: &TargetSpec,
    variant: Variant,
    config: &SolverConfig,
) -> Result<SolverResult> {
    if n < 2 {
        return Err(Error::BoardTooSmall(n));
    }
    if t < 2 {
        return Err(Error::TooFewColors(t));
    }
    if targets.len() != t {
        return Err(Error::TargetMismatch {
            t,
            got: targets.len(),
        });
    }
    if variant == Variant::Classic {
        match targets.ramsey_number() {
            Some(r) if n >= r => {}
            Some(r) => return Err(Error::BelowRamsey { n, ramsey: r }),
            None => {
                return Err(Error::Precondition(
                    "the classic game is only solved when R(targets) is known".into(),
                ))
            }
        }
    }
    let size = log2_states(n, t);
    if size > config.max_log2_states || size >= 63.0 || n > 64 {
        return Err(Error::Intractable(format!(
            "(t+1)^C(n,2) = {}^{} ≈ 2^{size:.1} partial colorings exceeds the limit 2^{}",
            t + 1,
            edge_count(n),
            config.max_log2_states
        )));
    }
    let mut search = Search {
        n,
        t,
        goals: targets.goals().to_vec(),
        variant,
        canonical: config.canonical,
        state: SolverState::empty(n, targets.clone()),
        class: vec![BitGraph::new(n); t],
        free: {
            let mut g = BitGraph::new(n);
            for e in Edge::all(n) {
                g.add(e.u(), e.v());
            }
            g
        },
        memo: HashMap::new(),
        nodes: 0,
        hits: 0,
    };
    for depth in 0..=edge_count(n) {
        if let Some(first) = search.win_within(depth, true) {
            return Ok(SolverResult {
                value: depth,
                optimal_first_move: first,
                nodes_explored: search.nodes,
                cache_hits: search.hits,
            });
        }
    }
    Err(Error::Invariant(
        "Builder cannot win even after exposing every edge".into(),
    ))
}

impl Search {
    fn won(&self) -> bool {
        let flags: Vec<(bool, bool)> = (0..self.t)
            .map(|i| {
                let now = self.class[i].has_goal(self.goals[i]);
                let later = now || self.class[i].union(&self.free).has_goal(self.goals[i]);
                (now, later)
            })
            .collect();
        match self.variant {
            Variant::Classic => flags.iter().any(|f| f.0),
            Variant::Locating => flags.iter().any(|f| f.0) || excluded(&flags),
            Variant::Cornering => (0..self.t).any(|c| cornered(&flags, c)),
        }
    }

    fn set(&mut self, e: Edge, c: usize) {
        self.free.remove(e.u(), e.v());
        self.class[c].add(e.u(), e.v());
        self.state.set(e, Some(Color::new(c + 1)));
    }

    fn unset(&mut self, e: Edge, c: usize) {
        self.class[c].remove(e.u(), e.v());
        self.free.add(e.u(), e.v());
        self.state.set(e, None);
    }

    /// Unexposed edges, those touching the largest monochromatic structure first.
    fn ordered_moves(&self) -> Vec<Edge> {
        let mut reach = vec![0usize; self.n];
        for g in &self.class {
            for (v, r) in reach.iter_mut().enumerate() {
                let mut comp = 1u64 << v;
                let mut frontier = comp;
                while frontier != 0 {
                    let x = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    let fresh = g.adj[x] & !comp;
                    comp |= fresh;
                    frontier |= fresh;
                }
                *r = (*r).max(comp.count_ones() as usize);
            }
        }
        let mut moves: Vec<Edge> = self.state.unexposed().collect();
        moves.sort_by_key(|e| std::cmp::Reverse(reach[e.u()].max(reach[e.v()])));
        moves
    }

    /// Whether Builder wins within `depth` more queries. At the root, returns
    /// the winning first move (`Some(None)` when already won).
    fn win_within(&mut self, depth: usize, root: bool) -> Option<Option<Edge>> {
        let key = canonical_key(&self.state, self.canonical);
        let known = self.memo.get(&key).copied();
        if let Some(entry) = known {
            if !root {
                if entry.win_at.is_some_and(|w| w as usize <= depth) {
                    self.hits += 1;
                    return Some(None);
                }
                if entry.fail_upto >= depth as i32 {
                    self.hits += 1;
                    return None;
                }
            }
        }
        self.nodes += 1;
        // a stored failure means the board itself is not yet a win
        let checked_loss = known.is_some_and(|e| e.fail_upto >= 0);
        if !checked_loss && self.won() {
            self.memo.insert(key, Entry { fail_upto: -1, win_at: Some(0) });
            return Some(None);
        }
        if depth == 0 {
            self.record_fail(key, 0);
            return None;
        }
        for e in self.ordered_moves() {
            let mut all = true;
            for c in 0..self.t {
                self.set(e, c);
                let ok = self.win_within(depth - 1, false).is_some();
                self.unset(e, c);
                if !ok {
                    all = false;
                    break;
                }
            }
            if all {
                let entry = self.memo.entry(key).or_insert(Entry { fail_upto: -1, win_at: None });
                entry.win_at = Some(entry.win_at.map_or(depth as u32, |w| w.min(depth as u32)));
                return Some(Some(e));
            }
        }
        self.record_fail(key, depth);
        None
    }

    fn record_fail(&mut self, key: u64, depth: usize) {
        let entry = self.memo.entry(key).or_insert(Entry { fail_upto: -1, win_at: None });
        entry.fail_upto = entry.fail_upto.max(depth as i32);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(n: usize, targets: TargetSpec, variant: Variant, canonical: bool) -> usize {
        let t = targets.len();
        solve_value(
            n,
            t,
            &targets,
            variant,
            &SolverConfig {
                canonical,
                ..SolverConfig::default()
            },
        )
        .unwrap()
        .value
    }

    #[test]
    fn spanning_trees_in_two_colors() {
        for n in 2..=4 {
            assert_eq!(
                solve(n, TargetSpec::trees(2, n).unwrap(), Variant::Classic, false),
                2 * n - 3
            );
        }
    }

    #[test]
    fn locating_two_matchings_on_four_vertices() {
        let m = TargetSpec::matchings(&[2, 2]).unwrap();
        assert_eq!(solve(4, m.clone(), Variant::Locating, false), 6);
        assert_eq!(solve(4, m, Variant::Locating, true), 6);
    }

    #[test]
    fn refusals() {
        let m = TargetSpec::matchings(&[2, 2]).unwrap();
        assert!(matches!(
            solve_value(4, 2, &m, Variant::Classic, &SolverConfig::default()),
            Err(Error::BelowRamsey { .. })
        ));
        let t3 = TargetSpec::trees(3, 5).unwrap();
        assert!(matches!(
            solve_value(20, 3, &t3, Variant::Cornering, &SolverConfig::default()),
            Err(Error::Intractable(_))
        ));
    }
}
