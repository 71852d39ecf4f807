//! Board state, query mechanics and the Builder/Painter contracts.
//!
//! Vertices are 0-based, colors are 1-based. An edge becomes *exposed* the
//! first time Builder asks for it; asking again is answered from the cache
//! and does not count as a query.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::detection::{self, SimpleGraph};
use crate::error::{Error, Result};
use crate::solver::completion;
use crate::transcript::{Move, ResultKind, ResultRecord, Transcript};

/// Unordered pair of distinct vertices, stored with the smaller endpoint first.
/// Serialized as `[u, v]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "(usize, usize)", try_from = "(usize, usize)")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::Loop(a)),
        }
    }

    /// Panicking constructor for call sites where `a != b` is structural.
    pub fn of(a: usize, b: usize) -> Self {
        Edge::new(a, b).expect("edge endpoints must differ")
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn contains(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`; `x` must be an endpoint.
    pub fn other(self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }

    pub fn shares_vertex(self, other: Edge) -> bool {
        self.contains(other.u) || self.contains(other.v)
    }

    /// Position of this edge in the lexicographic order of all edges of `K_n`.
    pub fn index(self, n: usize) -> usize {
        self.u * (2 * n - self.u - 1) / 2 + (self.v - self.u - 1)
    }

    pub fn from_index(n: usize, mut index: usize) -> Edge {
        let mut u = 0;
        loop {
            let row = n - u - 1;
            if index < row {
                return Edge {
                    u,
                    v: u + 1 + index,
                };
            }
            index -= row;
            u += 1;
        }
    }

    /// All edges of `K_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Edge> {
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| Edge { u, v }))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.u, self.v)
    }
}

pub fn edge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.u, e.v)
    }
}

impl TryFrom<(usize, usize)> for Edge {
    type Error = Error;

    fn try_from((a, b): (usize, usize)) -> Result<Self> {
        Edge::new(a, b)
    }
}

/// A 1-based color index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(u8);

impl Color {
    pub fn new(index: usize) -> Self {
        assert!((1..=255).contains(&index), "color index {index} out of range");
        Color(index as u8)
    }

    pub fn checked(index: usize, t: usize) -> Result<Self> {
        if index == 0 || index > t || index > 255 {
            return Err(Error::ColorOutOfRange { color: index, t });
        }
        Ok(Color(index as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Zero-based slot, handy for per-color arrays.
    pub fn slot(self) -> usize {
        self.0 as usize - 1
    }

    pub fn all(t: usize) -> impl Iterator<Item = Color> {
        (1..=t).map(Color::new)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// What Builder must find in one color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Goal {
    /// `r` pairwise disjoint edges.
    Matching { r: usize },
    /// Any tree on `k` vertices, i.e. a connected piece spanning at least `k` vertices.
    Tree { k: usize },
}

impl Goal {
    fn validate(self) -> Result<()> {
        match self {
            Goal::Matching { r } if r == 0 => {
                Err(Error::InvalidGoal("matching size must be positive".into()))
            }
            Goal::Tree { k } if k < 2 => Err(Error::InvalidGoal(format!(
                "tree order must be at least 2, got {k}"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Goal::Matching { r } => write!(f, "{r}K2"),
            Goal::Tree { k } => write!(f, "T{k}"),
        }
    }
}

/// One goal per color, color `i` at position `i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TargetSpec(Vec<Goal>);

impl TargetSpec {
    pub fn new(goals: Vec<Goal>) -> Result<Self> {
        for g in &goals {
            g.validate()?;
        }
        Ok(TargetSpec(goals))
    }

    pub fn matchings(rs: &[usize]) -> Result<Self> {
        Self::new(rs.iter().map(|&r| Goal::Matching { r }).collect())
    }

    pub fn trees(t: usize, k: usize) -> Result<Self> {
        Self::new(vec![Goal::Tree { k }; t])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn goal(&self, c: Color) -> Goal {
        self.0[c.slot()]
    }

    pub fn goals(&self) -> &[Goal] {
        &self.0
    }

    /// The matching sizes, if every goal is a matching.
    pub fn matching_sizes(&self) -> Option<Vec<usize>> {
        self.0
            .iter()
            .map(|g| match g {
                Goal::Matching { r } => Some(*r),
                Goal::Tree { .. } => None,
            })
            .collect()
    }

    /// The common tree order, if every goal is the same tree family.
    pub fn uniform_tree(&self) -> Option<usize> {
        let first = match self.0.first()? {
            Goal::Tree { k } => *k,
            Goal::Matching { .. } => return None,
        };
        self.0
            .iter()
            .all(|g| *g == Goal::Tree { k: first })
            .then_some(first)
    }

    /// The classical Ramsey number of the target families, when a closed form is known.
    pub fn ramsey_number(&self) -> Option<usize> {
        if self.0.len() < 2 {
            return None;
        }
        if let Some(rs) = self.matching_sizes() {
            return detection::ramsey_matching_number(&rs).ok();
        }
        let k = self.uniform_tree()?;
        detection::tree_ramsey(self.0.len(), k).ok()
    }
}

impl fmt::Display for TargetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Classic,
    Locating,
    Cornering,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Classic => "classic",
            Variant::Locating => "locating",
            Variant::Cornering => "cornering",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classic" => Ok(Variant::Classic),
            "locating" => Ok(Variant::Locating),
            "cornering" => Ok(Variant::Cornering),
            other => Err(Error::Malformed(format!("unknown variant {other:?}"))),
        }
    }
}

/// How Builder claims the game is over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WinCertificate {
    /// A monochromatic copy of the color's goal among the exposed edges.
    FoundCopy { color: Color, edges: Vec<Edge> },
    /// No completion of the exposed coloring contains any goal (locating game).
    Exclusion,
    /// Every valid completion contains the goal in this color (cornering game).
    CorneredColor(Color),
}

impl WinCertificate {
    pub fn color(&self) -> Option<Color> {
        match self {
            WinCertificate::FoundCopy { color, .. } | WinCertificate::CorneredColor(color) => {
                Some(*color)
            }
            WinCertificate::Exclusion => None,
        }
    }

    /// Number of vertices touched by a found copy.
    pub fn structure_size(&self) -> usize {
        match self {
            WinCertificate::FoundCopy { edges, .. } => {
                let mut vs: Vec<usize> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
                vs.sort_unstable();
                vs.dedup();
                vs.len()
            }
            _ => 0,
        }
    }
}

/// The board: exposed edges, their colors, and the move history.
#[derive(Debug, Clone)]
pub struct GameState {
    n: usize,
    t: usize,
    targets: TargetSpec,
    variant: Variant,
    exposure: HashMap<Edge, Color>,
    // color slot -> vertex -> neighbors, in exposure order
    color_adj: Vec<Vec<Vec<usize>>>,
    raw_asks: usize,
    cached_asks: usize,
    transcript: Transcript,
    tag: Option<String>,
}

impl GameState {
    pub fn new_game(n: usize, t: usize, targets: TargetSpec, variant: Variant) -> Result<Self> {
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
        if t > 255 {
            return Err(Error::ColorOutOfRange { color: t, t: 255 });
        }
        if variant == Variant::Classic {
            if let Some(ramsey) = targets.ramsey_number() {
                if n < ramsey {
                    return Err(Error::BelowRamsey { n, ramsey });
                }
            }
        }
        Ok(GameState {
            n,
            t,
            transcript: Transcript::empty(n, t, variant, targets.clone()),
            targets,
            variant,
            exposure: HashMap::new(),
            color_adj: vec![vec![Vec::new(); n]; t],
            raw_asks: 0,
            cached_asks: 0,
            tag: None,
        })
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

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Number of distinct exposed edges.
    pub fn queries(&self) -> usize {
        self.exposure.len()
    }

    /// Every ask, including cached re-asks.
    pub fn raw_asks(&self) -> usize {
        self.raw_asks
    }

    /// Asks answered from the cache.
    pub fn cached_asks(&self) -> usize {
        self.cached_asks
    }

    pub fn total_edges(&self) -> usize {
        edge_count(self.n)
    }

    pub fn unexposed_count(&self) -> usize {
        self.total_edges() - self.queries()
    }

    pub fn color(&self, e: Edge) -> Option<Color> {
        self.exposure.get(&e).copied()
    }

    pub fn is_exposed(&self, e: Edge) -> bool {
        self.exposure.contains_key(&e)
    }

    /// Neighbors of `v` along exposed edges of color `c`.
    pub fn neighbors(&self, c: Color, v: usize) -> &[usize] {
        &self.color_adj[c.slot()][v]
    }

    /// Exposed edges in move order.
    pub fn exposed(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.transcript
            .moves
            .iter()
            .map(|m| (Edge::of(m.u, m.v), Color::new(m.c)))
    }

    pub fn color_graph(&self, c: Color) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for (u, nbrs) in self.color_adj[c.slot()].iter().enumerate() {
            for &w in nbrs {
                if u < w {
                    g.add_edge(Edge::of(u, w));
                }
            }
        }
        g
    }

    pub fn transcript(&self) -> &Transcript {
        &self.transcript
    }

    pub fn edge(&self, a: usize, b: usize) -> Result<Edge> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        Edge::new(a, b)
    }

    fn check_vertex(&self, x: usize) -> Result<()> {
        if x >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Tag attached to subsequent new exposures in the transcript.
    pub fn set_tag(&mut self, tag: Option<String>) {
        self.tag = tag;
    }

    /// Overwrite the tag of an already exposed edge.
    pub fn retag(&mut self, e: Edge, tag: Option<String>) {
        if let Some(m) = self
            .transcript
            .moves
            .iter_mut()
            .find(|m| m.u == e.u() && m.v == e.v())
        {
            m.tag = tag;
        }
    }

    /// Ask for the color of `e`. Exposed edges are answered from the cache
    /// without consulting the painter and without counting as a query.
    pub fn query(&mut self, e: Edge, painter: &mut dyn Painter) -> Result<Color> {
        self.check_vertex(e.v())?;
        self.raw_asks += 1;
        if let Some(c) = self.color(e) {
            self.cached_asks += 1;
            return Ok(c);
        }
        let c = painter.color_of(e, self);
        let c = Color::checked(c.index(), self.t)?;
        self.record(e, c);
        Ok(c)
    }

    /// Expose `e` with a known color, bypassing any painter (used for replay and setup).
    pub fn expose(&mut self, e: Edge, c: Color) -> Result<()> {
        self.check_vertex(e.v())?;
        let c = Color::checked(c.index(), self.t)?;
        if self.is_exposed(e) {
            return Err(Error::DuplicateEdge(e.u(), e.v()));
        }
        self.record(e, c);
        Ok(())
    }

    fn record(&mut self, e: Edge, c: Color) {
        self.exposure.insert(e, c);
        let adj = &mut self.color_adj[c.slot()];
        adj[e.u()].push(e.v());
        adj[e.v()].push(e.u());
        self.transcript.moves.push(Move {
            u: e.u(),
            v: e.v(),
            c: c.index(),
            tag: self.tag.clone(),
        });
    }

    pub(crate) fn transcript_mut(&mut self) -> &mut Transcript {
        &mut self.transcript
    }
}

/// Painter contract: answer the color of a not yet exposed edge.
///
/// The engine never asks about the same edge twice, so adaptive painters
/// need no consistency bookkeeping of their own.
pub trait Painter {
    fn name(&self) -> String;

    fn seed(&self) -> Option<u64> {
        None
    }

    fn color_of(&mut self, edge: Edge, view: &GameState) -> Color;
}

impl<P: Painter + ?Sized> Painter for &mut P {
    fn name(&self) -> String {
        (**self).name()
    }

    fn seed(&self) -> Option<u64> {
        (**self).seed()
    }

    fn color_of(&mut self, edge: Edge, view: &GameState) -> Color {
        (**self).color_of(edge, view)
    }
}

/// One step of a step-wise builder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuilderMove {
    Query(Edge),
    Declare(WinCertificate),
}

/// Step-wise Builder contract: look at the board, then either query or declare.
pub trait StepBuilder {
    fn name(&self) -> String;

    fn next_move(&mut self, view: &GameState) -> BuilderMove;
}

/// Driver-style Builder: issues queries through the session and returns the
/// certificate it wants to declare. The engine verifies it afterwards.
pub trait Builder {
    fn name(&self) -> String;

    fn play(&mut self, session: &mut Session<'_>) -> Result<WinCertificate>;
}

/// Adapts a [`StepBuilder`] to the driver-style [`Builder`] contract.
pub struct Stepwise<S>(pub S);

impl<S: StepBuilder> Builder for Stepwise<S> {
    fn name(&self) -> String {
        self.0.name()
    }

    fn play(&mut self, session: &mut Session<'_>) -> Result<WinCertificate> {
        loop {
            match self.0.next_move(session.state()) {
                BuilderMove::Query(e) => {
                    session.query(e)?;
                }
                BuilderMove::Declare(cert) => return Ok(cert),
            }
        }
    }
}

/// A game in progress: the board plus the painter answering for it.
pub struct Session<'p> {
    state: GameState,
    painter: &'p mut dyn Painter,
    patience: usize,
}

impl<'p> Session<'p> {
    pub fn new(state: GameState, painter: &'p mut dyn Painter) -> Self {
        let patience = state.total_edges() + 1;
        Session {
            state,
            painter,
            patience,
        }
    }

    pub fn with_patience(mut self, patience: usize) -> Self {
        self.patience = patience;
        self
    }

    pub fn state(&self) -> &GameState {
        &self.state
    }

    pub fn into_state(self) -> GameState {
        self.state
    }

    pub fn query(&mut self, e: Edge) -> Result<Color> {
        let c = self.state.query(e, self.painter)?;
        let redundant = self.state.cached_asks();
        if redundant > self.patience {
            return Err(Error::PatienceExceeded(redundant));
        }
        Ok(c)
    }

    /// Query `(a, b)`, validating the endpoints.
    pub fn query_pair(&mut self, a: usize, b: usize) -> Result<Color> {
        let e = self.state.edge(a, b)?;
        self.query(e)
    }

    pub fn set_tag(&mut self, tag: Option<String>) {
        self.state.set_tag(tag);
    }

    pub fn retag(&mut self, e: Edge, tag: Option<String>) {
        self.state.retag(e, tag);
    }
}

/// Knobs for [`run_game`].
#[derive(Debug, Clone, Copy)]
pub struct EngineConfig {
    /// Completion-based certificates are only checked with at most this many unexposed edges.
    pub completion_threshold: usize,
    /// Redundant re-queries tolerated before the builder is declared broken.
    /// `None` means `C(n,2) + 1`.
    pub patience: Option<usize>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            completion_threshold: 25,
            patience: None,
        }
    }
}

/// Result of a finished game.
#[derive(Debug, Clone)]
pub struct GameOutcome {
    pub certificate: WinCertificate,
    pub state: GameState,
}

impl GameOutcome {
    pub fn queries(&self) -> usize {
        self.state.queries()
    }

    pub fn transcript(&self) -> &Transcript {
        self.state.transcript()
    }
}

/// Play `builder` against `painter` from `state` until Builder declares, then
/// verify the declaration. An unverifiable declaration is an error.
pub fn run_game(
    builder: &mut dyn Builder,
    painter: &mut dyn Painter,
    state: GameState,
    config: &EngineConfig,
) -> Result<GameOutcome> {
    let builder_name = builder.name();
    let painter_name = painter.name();
    let seed = painter.seed();
    let mut session = Session::new(state, painter);
    if let Some(p) = config.patience {
        session = session.with_patience(p);
    }
    let certificate = builder.play(&mut session)?;
    let mut state = session.into_state();
    verify_certificate(&state, &certificate, config.completion_threshold)?;
    let queries = state.queries();
    let tr = state.transcript_mut();
    tr.builder = builder_name;
    tr.painter = painter_name;
    tr.seed = seed;
    tr.result = Some(ResultRecord::from_certificate(&certificate, queries));
    Ok(GameOutcome { certificate, state })
}

/// Re-check a declaration against the exposed board.
pub fn verify_certificate(state: &GameState, cert: &WinCertificate, threshold: usize) -> Result<()> {
    match cert {
        WinCertificate::FoundCopy { color, edges } => {
            let color = Color::checked(color.index(), state.t())
                .map_err(|e| Error::InvalidCertificate(e.to_string()))?;
            for e in edges {
                if e.v() >= state.n() {
                    return Err(Error::InvalidCertificate(format!("edge {e} is off the board")));
                }
                match state.color(*e) {
                    Some(c) if c == color => {}
                    Some(c) => {
                        return Err(Error::InvalidCertificate(format!(
                            "edge {e} has color {c}, not {color}"
                        )))
                    }
                    None => {
                        return Err(Error::InvalidCertificate(format!("edge {e} is not exposed")))
                    }
                }
            }
            detection::verify_structure(edges, state.targets().goal(color))
                .map_err(Error::InvalidCertificate)
        }
        WinCertificate::Exclusion => {
            if state.variant() != Variant::Locating {
                return Err(Error::InvalidCertificate(format!(
                    "exclusion is not a win in the {} game",
                    state.variant()
                )));
            }
            let snapshot = completion::Snapshot::from_game(state)?;
            if snapshot.any_completion_has_target(threshold)? {
                return Err(Error::InvalidCertificate(
                    "some completion contains a target".into(),
                ));
            }
            Ok(())
        }
        WinCertificate::CorneredColor(c) => {
            if state.variant() != Variant::Cornering {
                return Err(Error::InvalidCertificate(format!(
                    "cornering is not a win in the {} game",
                    state.variant()
                )));
            }
            let c = Color::checked(c.index(), state.t())
                .map_err(|e| Error::InvalidCertificate(e.to_string()))?;
            let snapshot = completion::Snapshot::from_game(state)?;
            if snapshot.valid_completion_avoiding(c, threshold)? {
                return Err(Error::InvalidCertificate(format!(
                    "a valid completion avoids the target in color {c}"
                )));
            }
            Ok(())
        }
    }
}

/// The lowest color whose exposed edges already contain its goal.
pub fn check_win_classic(state: &GameState) -> Option<WinCertificate> {
    Color::all(state.t()).find_map(|c| {
        detection::find_mono_target(state, c, state.targets().goal(c))
            .map(|edges| WinCertificate::FoundCopy { color: c, edges })
    })
}

impl ResultRecord {
    pub fn from_certificate(cert: &WinCertificate, queries: usize) -> Self {
        match cert {
            WinCertificate::FoundCopy { color, edges } => ResultRecord {
                kind: ResultKind::Found,
                color: Some(color.index()),
                edges: Some(edges.iter().map(|e| [e.u(), e.v()]).collect()),
                queries,
            },
            WinCertificate::Exclusion => ResultRecord {
                kind: ResultKind::Exclusion,
                color: None,
                edges: None,
                queries,
            },
            WinCertificate::CorneredColor(c) => ResultRecord {
                kind: ResultKind::Cornered,
                color: Some(c.index()),
                edges: None,
                queries,
            },
        }
    }
}
