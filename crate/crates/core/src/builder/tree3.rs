//! Three-color tree builder: a star, three component extensions, and a
//! six-set cover of the board.

use std::collections::BTreeSet;

use super::comp_extend;
use crate::detection::{k_of, six_cover_witness, SixCover};
use crate::error::{Error, Result};
use crate::game::{Builder, Color, GameState, Session, WinCertificate};

const RED: usize = 1;
const BLUE: usize = 2;
const GREEN: usize = 3;

/// Color roles of the three extension calls: `(r, g, b)`, `(g, b, r)`, `(b, r, g)`.
const ROLES: [[usize; 3]; 3] = [[RED, GREEN, BLUE], [GREEN, BLUE, RED], [BLUE, RED, GREEN]];

/// The three-color tree strategy. After a game, `cover` holds the six
/// starred sets `R1*, R2*, G1*, G2*, B1*, B2*`.
#[derive(Debug, Default, Clone)]
pub struct Tree3Builder {
    pub cover: Option<SixCover>,
}

impl Tree3Builder {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Builder for Tree3Builder {
    fn name(&self) -> String {
        "tree3".into()
    }

    fn play(&mut self, session: &mut Session<'_>) -> Result<WinCertificate> {
        let state = session.state();
        let n = state.n();
        if state.t() != 3 {
            return Err(Error::Precondition(format!(
                "the three-color tree strategy needs t = 3, got {}",
                state.t()
            )));
        }
        if n < 3 {
            return Err(Error::Precondition(format!("need n >= 3, got {n}")));
        }
        let k = k_of(n)?;
        if state.targets().uniform_tree() != Some(k) {
            return Err(Error::Precondition(format!(
                "the three-color tree strategy targets trees on k(n) = {k} vertices in every color"
            )));
        }
        let start = state.queries();
        let hub = 0;
        let mut classes: [BTreeSet<usize>; 3] = Default::default();
        session.set_tag(Some("star".into()));
        for u in 1..n {
            let c = session.query_pair(hub, u)?;
            classes[c.slot()].insert(u);
        }

        // pieces[c][j] is the part of class c found by the j-th extension call
        let mut pieces: [[BTreeSet<usize>; 3]; 3] = Default::default();
        for (call, roles) in ROLES.into_iter().enumerate() {
            let roles = roles.map(Color::new);
            session.set_tag(Some(format!("extend:{}", call + 1)));
            let out = comp_extend(
                session,
                &classes[roles[0].slot()],
                &classes[roles[1].slot()],
                roles,
            )?
            .triple;
            pieces[roles[0].slot()][0] = out.x1;
            pieces[roles[1].slot()][1] = out.x2;
            pieces[roles[2].slot()][2] = out.x3;
        }
        session.set_tag(None);

        let starred: Vec<[BTreeSet<usize>; 2]> = (0..3)
            .map(|c| starred_pair(session.state(), Color::new(c + 1), hub, &classes[c], &pieces[c]))
            .collect::<Result<_>>()?;
        for (c, [a, b]) in starred.iter().enumerate() {
            if let Some(x) = a.intersection(b).next() {
                return Err(Error::Invariant(format!(
                    "starred sets of color {} share vertex {x}",
                    c + 1
                )));
            }
        }
        let [r, g, b] = [RED, GREEN, BLUE].map(|c| starred[c - 1].clone());
        let cover = SixCover::new([
            r[0].clone(),
            r[1].clone(),
            g[0].clone(),
            g[1].clone(),
            b[0].clone(),
            b[1].clone(),
        ]);
        let index = six_cover_witness(&cover, n).map_err(|e| Error::Invariant(e.to_string()))?;
        let color = Color::new([RED, GREEN, BLUE][(index - 1) / 2]);
        let witness = &cover.sets[index - 1];
        let g = session.state().color_graph(color);
        let edges = g.bfs_tree(*witness.first().expect("witness set is nonempty"));
        self.cover = Some(cover);

        let used = session.state().queries() - start;
        if used > 5 * (n - 1) {
            return Err(Error::Invariant(format!(
                "{used} queries exceed 5(n - 1) = {}",
                5 * (n - 1)
            )));
        }
        Ok(WinCertificate::FoundCopy { color, edges })
    }
}

/// `(C1*, C2*)` for one color: the union of the three pieces when they sit in
/// one component, else the first two pieces against the third. The hub joins
/// the first set only when its star class in this color is nonempty, since
/// otherwise it need not touch the component at all.
fn starred_pair(
    state: &GameState,
    c: Color,
    hub: usize,
    class: &BTreeSet<usize>,
    pieces: &[BTreeSet<usize>; 3],
) -> Result<[BTreeSet<usize>; 2]> {
    let labels = state.color_graph(c).component_labels();
    let same = |set: &BTreeSet<usize>| {
        set.iter()
            .map(|&v| labels[v])
            .collect::<BTreeSet<_>>()
            .len()
            <= 1
    };
    let all: BTreeSet<usize> = pieces.iter().flatten().copied().collect();
    let (mut first, second) = if same(&all) {
        (all, BTreeSet::new())
    } else {
        (
            pieces[0].union(&pieces[1]).copied().collect(),
            pieces[2].clone(),
        )
    };
    if !class.is_empty() {
        first.insert(hub);
    }
    for set in [&first, &second] {
        if !same(set) {
            return Err(Error::Invariant(format!(
                "a starred set of color {c} spans two components"
            )));
        }
    }
    Ok([first, second])
}
