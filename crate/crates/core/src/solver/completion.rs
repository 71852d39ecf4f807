//! Completion-based win conditions for the locating and cornering games.
//!
//! Every goal family is closed under adding edges, so "some completion puts a
//! copy in color `i`" is the same as "`C_i` plus all unexposed edges contains
//! a copy". The functions here use that shortcut; [`enumerate_completions`]
//! is the literal definition and is used to cross-check it.

use super::bits::BitGraph;
pub use super::state::SolverState as Snapshot;
use super::state::SolverState;
use crate::error::{Error, Result};
use crate::game::{Color, Edge, TargetSpec, Variant, WinCertificate};

fn check_threshold(s: &SolverState, threshold: usize) -> Result<()> {
    let unexposed = s.unexposed_count();
    if unexposed > threshold {
        return Err(Error::ThresholdExceeded {
            unexposed,
            threshold,
        });
    }
    Ok(())
}

fn check_targets(s: &SolverState, targets: &TargetSpec) -> Result<()> {
    if targets != s.targets() {
        return Err(Error::Precondition(
            "targets differ from the ones the state was built with".into(),
        ));
    }
    Ok(())
}

/// Per color: does the exposed class contain the goal, and does it with
/// every unexposed edge added.
pub(crate) fn class_flags(s: &SolverState) -> Vec<(bool, bool)> {
    Color::all(s.t())
        .map(|c| {
            let now = s.class_has_goal(c, false);
            (now, now || s.class_has_goal(c, true))
        })
        .collect()
}

/// The cornering test on precomputed flags: color `c` is cornered when its
/// exposed class already has the goal, or no other color can get one.
pub(crate) fn cornered(flags: &[(bool, bool)], c: usize) -> bool {
    flags[c].0 || flags.iter().enumerate().all(|(j, f)| j == c || !f.1)
}

pub(crate) fn excluded(flags: &[(bool, bool)]) -> bool {
    flags.iter().all(|f| !f.1)
}

impl SolverState {
    /// Some completion contains some goal in its color.
    pub fn any_completion_has_target(&self, threshold: usize) -> Result<bool> {
        check_threshold(self, threshold)?;
        Ok(!excluded(&class_flags(self)))
    }

    /// Some valid completion (one containing at least one goal) has no copy
    /// of color `c`'s goal in color `c`.
    pub fn valid_completion_avoiding(&self, c: Color, threshold: usize) -> Result<bool> {
        check_threshold(self, threshold)?;
        Color::checked(c.index(), self.t())?;
        Ok(!cornered(&class_flags(self), c.slot()))
    }
}

/// With `c` absent: `want = true` asks whether some completion contains some
/// goal; `want = false` asks whether no completion contains any goal. With
/// `c` present: whether some valid completion contains (`want = true`) or
/// avoids (`want = false`) color `c`'s goal in color `c`.
pub fn has_completion_with_target(
    s: &SolverState,
    targets: &TargetSpec,
    c: Option<Color>,
    want: bool,
    threshold: usize,
) -> Result<bool> {
    check_threshold(s, threshold)?;
    check_targets(s, targets)?;
    let flags = class_flags(s);
    Ok(match c {
        None if want => !excluded(&flags),
        None => excluded(&flags),
        Some(c) => {
            Color::checked(c.index(), s.t())?;
            if want {
                flags[c.slot()].1
            } else {
                !cornered(&flags, c.slot())
            }
        }
    })
}

/// Same question as [`has_completion_with_target`], answered by walking all
/// `t^U` completions in reflected Gray-code order. Needs `n <= 64`.
pub fn has_completion_with_target_enumerated(
    s: &SolverState,
    targets: &TargetSpec,
    c: Option<Color>,
    want: bool,
    threshold: usize,
) -> Result<bool> {
    check_threshold(s, threshold)?;
    check_targets(s, targets)?;
    if let Some(c) = c {
        Color::checked(c.index(), s.t())?;
    }
    let mut found = false;
    enumerate_completions(s, |has| {
        let valid = has.iter().any(|&h| h);
        let hit = match c {
            None => valid,
            Some(c) if want => has[c.slot()],
            Some(c) => valid && !has[c.slot()],
        };
        found |= hit;
        !found
    })?;
    Ok(match c {
        None if !want => !found,
        _ => found,
    })
}

/// Visit every completion of `s`, passing for each color whether its class
/// contains its goal. Consecutive completions differ in one edge, so only the
/// two affected colors are rechecked. The visitor returns `false` to stop.
pub fn enumerate_completions(s: &SolverState, mut visit: impl FnMut(&[bool]) -> bool) -> Result<()> {
    let n = s.n();
    if n > 64 {
        return Err(Error::Intractable(format!(
            "completion enumeration needs n <= 64, got {n}"
        )));
    }
    let t = s.t();
    let free: Vec<Edge> = s.unexposed().collect();
    let mut classes: Vec<BitGraph> = Color::all(t).map(|c| s.class_bits(c, false)).collect();
    let goals: Vec<_> = Color::all(t).map(|c| s.targets().goal(c)).collect();
    // every free edge starts in color 1
    for e in &free {
        classes[0].add(e.u(), e.v());
    }
    let mut has: Vec<bool> = (0..t).map(|i| classes[i].has_goal(goals[i])).collect();
    if !visit(&has) {
        return Ok(());
    }
    let mut digit = vec![0usize; free.len()];
    let mut up = vec![true; free.len()];
    loop {
        let mut j = 0;
        while j < free.len() && ((up[j] && digit[j] + 1 == t) || (!up[j] && digit[j] == 0)) {
            up[j] = !up[j];
            j += 1;
        }
        if j == free.len() {
            return Ok(());
        }
        let old = digit[j];
        let new = if up[j] { old + 1 } else { old - 1 };
        digit[j] = new;
        let e = free[j];
        classes[old].remove(e.u(), e.v());
        classes[new].add(e.u(), e.v());
        has[old] = classes[old].has_goal(goals[old]);
        has[new] = classes[new].has_goal(goals[new]);
        if !visit(&has) {
            return Ok(());
        }
    }
}

/// Decide whether Builder has already won from `s` under `variant`.
///
/// Classic: a copy among the exposed edges. Locating: that, or no completion
/// contains any goal. Cornering: the smallest color every valid completion
/// must use for its goal (vacuously color 1 if there is no valid completion).
pub fn win_check(
    s: &SolverState,
    targets: &TargetSpec,
    variant: Variant,
    threshold: usize,
) -> Result<Option<WinCertificate>> {
    check_targets(s, targets)?;
    if variant != Variant::Classic {
        check_threshold(s, threshold)?;
    }
    Ok(win_check_unchecked(s, variant))
}

pub(crate) fn win_check_unchecked(s: &SolverState, variant: Variant) -> Option<WinCertificate> {
    let found = || {
        Color::all(s.t()).find_map(|c| {
            let g = s.class_graph(c, false);
            crate::detection::graph_find_goal(&g, s.targets().goal(c))
                .map(|edges| WinCertificate::FoundCopy { color: c, edges })
        })
    };
    match variant {
        Variant::Classic => found(),
        Variant::Locating => {
            found().or_else(|| excluded(&class_flags(s)).then_some(WinCertificate::Exclusion))
        }
        Variant::Cornering => {
            let flags = class_flags(s);
            (0..s.t())
                .find(|&c| cornered(&flags, c))
                .map(|c| WinCertificate::CorneredColor(Color::new(c + 1)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m22() -> TargetSpec {
        TargetSpec::matchings(&[2, 2]).unwrap()
    }

    #[test]
    fn shortcut_matches_enumeration_on_random_states() {
        let mut seed = 99u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) as usize
        };
        for (n, targets) in [
            (4, m22()),
            (5, m22()),
            (5, TargetSpec::trees(2, 4).unwrap()),
            (4, TargetSpec::trees(3, 3).unwrap()),
            (5, TargetSpec::new(vec![crate::game::Goal::Matching { r: 2 }, crate::game::Goal::Tree { k: 4 }]).unwrap()),
        ] {
            let t = targets.len();
            for _ in 0..150 {
                let mut s = SolverState::empty(n, targets.clone());
                for e in Edge::all(n) {
                    if next() % 2 == 0 {
                        s.set(e, Some(Color::new(next() % t + 1)));
                    }
                }
                let mut cs = vec![None];
                cs.extend(Color::all(t).map(Some));
                for c in cs {
                    for want in [true, false] {
                        assert_eq!(
                            has_completion_with_target(&s, &targets, c, want, 25).unwrap(),
                            has_completion_with_target_enumerated(&s, &targets, c, want, 25).unwrap(),
                            "n={n} c={c:?} want={want} state={:?}",
                            s.raw()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        let full = SolverState::from_exposed(
            4,
            m22(),
            Edge::all(4).map(|e| (e, Color::new(if e == Edge::of(0, 1) || e == Edge::of(2, 3) { 1 } else { 2 }))),
        )
        .unwrap();
        assert!(has_completion_with_target(&full, &m22(), None, true, 25).unwrap());

        let empty5 = SolverState::empty(5, m22());
        assert!(!has_completion_with_target(&empty5, &m22(), None, false, 25).unwrap());

        let k3 = SolverState::empty(3, m22());
        assert!(has_completion_with_target(&k3, &m22(), None, false, 25).unwrap());

        let big = SolverState::empty(8, m22());
        assert!(matches!(
            has_completion_with_target(&big, &m22(), None, true, 25),
            Err(Error::ThresholdExceeded { .. })
        ));
    }

    #[test]
    fn win_conditions() {
        let none = SolverState::from_exposed(
            4,
            m22(),
            Edge::all(4).map(|e| (e, Color::new(if e.u() == 0 { 1 } else { 2 }))),
        )
        .unwrap();
        // color 1 is a star, color 2 a triangle: no 2-matching anywhere
        assert_eq!(
            win_check(&none, &m22(), Variant::Locating, 25).unwrap(),
            Some(WinCertificate::Exclusion)
        );

        let red = SolverState::from_exposed(
            4,
            m22(),
            [(Edge::of(0, 1), Color::new(1)), (Edge::of(2, 3), Color::new(1))],
        )
        .unwrap();
        assert_eq!(
            win_check(&red, &m22(), Variant::Cornering, 25).unwrap(),
            Some(WinCertificate::CorneredColor(Color::new(1)))
        );

        // a red triangle on {0,1,2}: the free edges form a star at 3, so
        // only red can still carry a 2-matching
        let inside = SolverState::from_exposed(
            4,
            m22(),
            [(0, 1), (0, 2), (1, 2)].map(|(a, b)| (Edge::of(a, b), Color::new(1))),
        )
        .unwrap();
        assert_eq!(
            win_check(&inside, &m22(), Variant::Cornering, 25).unwrap(),
            Some(WinCertificate::CorneredColor(Color::new(1)))
        );
        assert!(!has_completion_with_target_enumerated(&inside, &m22(), Some(Color::new(1)), false, 25)
            .unwrap());
    }
}
