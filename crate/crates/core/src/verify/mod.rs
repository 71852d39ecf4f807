//! Invariant suites run by `verify` on the command line and by the
//! acceptance tests.

mod tree_types;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use tree_types::{proper_colorings, random_proper_coloring, tree_code, tree_types};

use crate::builder::{comp_extend, grow_good_forest, tree_extend, ColoredTree};
use crate::detection::{
    k_of, matching_query_bound, max_matching, q_bound, ramsey_matching_number, SimpleGraph,
};
use crate::error::{Error, Result};
use crate::game::{edge_count, Color, Edge, GameState, Session, TargetSpec, Variant};
use crate::painter::{
    explore_replies, matching_partition_coloring, BlownK4, PartitionColoring, RandomPainter,
};
use crate::solver::{
    enumerate_completions, has_completion_with_target, solve_value, BitGraph, SolverConfig,
    SolverState,
};

pub const SUITES: [&str; 5] = ["treeextend", "compextend", "forest", "colorings", "solver-cross"];

const KEPT_MESSAGES: usize = 10;

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: u64,
    pub failures: u64,
    /// The first few failure descriptions.
    pub messages: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.into(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures += 1;
        if self.messages.len() < KEPT_MESSAGES {
            self.messages.push(msg);
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        self.failures += other.failures;
        for m in other.messages {
            if self.messages.len() < KEPT_MESSAGES {
                self.messages.push(m);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Run one suite by name, or every suite for `"all"`.
pub fn run_suite(name: &str) -> Result<Vec<SuiteReport>> {
    let one = |s: &str| -> SuiteReport {
        match s {
            "treeextend" => tree_extend_suite(&TreeExtendConfig::default()).report,
            "compextend" => comp_extend_suite(),
            "forest" => forest_suite(),
            "colorings" => colorings_suite(&ColoringsConfig::default()),
            _ => solver_cross_suite(),
        }
    };
    match name {
        "all" => Ok(SUITES.iter().map(|s| one(s)).collect()),
        s if SUITES.contains(&s) => Ok(vec![one(s)]),
        _ => Err(Error::Malformed(format!(
            "unknown suite `{name}`; expected one of {}, all",
            SUITES.join(", ")
        ))),
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TreeExtendConfig {
    pub max_vertices: usize,
    /// Trees up to this many vertices get every proper coloring.
    pub exhaustive_up_to: usize,
    pub samples_per_tree: usize,
    /// Colors available to the tree; Painter has one more.
    pub colors: usize,
    pub seed: u64,
}

impl Default for TreeExtendConfig {
    fn default() -> Self {
        TreeExtendConfig {
            max_vertices: 8,
            exhaustive_up_to: 5,
            samples_per_tree: 500,
            colors: 4,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct TreeExtendOutcome {
    pub report: SuiteReport,
    pub trees: usize,
    pub colorings: usize,
    pub paths: usize,
    pub max_new_queries: usize,
    /// Runs violating the literal small-tree shape statement.
    pub literal_shape_violations: usize,
    pub literal_shape_example: Option<String>,
}

/// Every tree type, proper colorings (all or sampled), and every Painter
/// reply path through the extension.
pub fn tree_extend_suite(cfg: &TreeExtendConfig) -> TreeExtendOutcome {
    let mut jobs: Vec<(usize, Vec<(Edge, Color)>)> = Vec::new();
    let mut trees = 0;
    for k in 2..=cfg.max_vertices {
        for (i, shape) in tree_types(k).into_iter().enumerate() {
            trees += 1;
            if k <= cfg.exhaustive_up_to {
                jobs.extend(proper_colorings(k, &shape, cfg.colors).into_iter().map(|c| (k, c)));
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ ((k as u64) << 32) ^ i as u64);
                for _ in 0..cfg.samples_per_tree {
                    match random_proper_coloring(k, &shape, cfg.colors, &mut rng) {
                        Some(c) => jobs.push((k, c)),
                        None => break,
                    }
                }
            }
        }
    }
    let colorings = jobs.len();
    let t = cfg.colors + 1;
    let parts: Vec<TreeExtendOutcome> = jobs
        .par_iter()
        .map(|(k, coloring)| extend_all_replies(*k, coloring, t))
        .collect();
    let mut out = TreeExtendOutcome {
        report: SuiteReport::new("treeextend"),
        trees,
        colorings,
        ..Default::default()
    };
    for p in parts {
        out.report.absorb(p.report);
        out.paths += p.paths;
        out.max_new_queries = out.max_new_queries.max(p.max_new_queries);
        out.literal_shape_violations += p.literal_shape_violations;
        if out.literal_shape_example.is_none() {
            out.literal_shape_example = p.literal_shape_example;
        }
    }
    out.report.notes.push(format!(
        "{trees} tree types, {colorings} colorings, {} reply paths, at most {} new queries",
        out.paths, out.max_new_queries
    ));
    out.report.notes.push(format!(
        "literal small-tree shape statement: {} violating runs{}",
        out.literal_shape_violations,
        out.literal_shape_example
            .as_ref()
            .map(|e| format!(", e.g. {e}"))
            .unwrap_or_default()
    ));
    out
}

fn extend_all_replies(k: usize, coloring: &[(Edge, Color)], t: usize) -> TreeExtendOutcome {
    let mut out = TreeExtendOutcome::default();
    let used: BTreeSet<Color> = coloring.iter().map(|&(_, c)| c).collect();
    let c = Color::all(t).find(|c| !used.contains(c)).expect("one color is free");
    let (x, y) = (k, k + 1);
    let xy = Edge::of(x, y);
    let tree = match ColoredTree::from_edges(coloring) {
        Ok(tree) => tree,
        Err(e) => {
            out.report.fail(format!("bad tree {coloring:?}: {e}"));
            return out;
        }
    };
    let diam = diameter(k, coloring);
    let budget = 1 + ((diam.saturating_sub(1)).max(1) as f64).log2().floor() as usize;
    let explored = explore_replies(t, |painter| {
        let mut state = GameState::new_game(k + 2, t, TargetSpec::trees(t, 2)?, Variant::Locating)?;
        for &(e, col) in coloring {
            state.expose(e, col)?;
        }
        state.expose(xy, c)?;
        let before = state.queries();
        let mut session = Session::new(state, painter);
        let ext = tree_extend(&mut session, &tree, xy);
        let state = session.into_state();
        out.paths += 1;
        let ext = match ext {
            Ok(ext) => ext,
            Err(e) => {
                out.report.fail(format!("{coloring:?} + {xy}: {e}"));
                return Ok(());
            }
        };
        let new = state.queries() - before;
        out.max_new_queries = out.max_new_queries.max(new);
        let problems = extension_problems(k, coloring, (xy, c), &ext.tree.edges(), &state);
        out.report.check(problems.is_empty() && new <= budget, || {
            format!("{coloring:?} + {xy}: {problems:?}, {new} new queries, budget {budget}")
        });
        if !literal_shape_holds(coloring.len(), &ext.tree.edges()) {
            out.literal_shape_violations += 1;
            if out.literal_shape_example.is_none() {
                out.literal_shape_example = Some(format!(
                    "{} + {xy} colored {c} -> {}",
                    describe(coloring),
                    describe(&ext.tree.edges())
                ));
            }
        }
        Ok(())
    });
    if let Err(e) = explored {
        out.report.fail(format!("setup failed: {e}"));
    }
    out
}

fn describe(edges: &[(Edge, Color)]) -> String {
    edges
        .iter()
        .map(|(e, c)| format!("{}{}:{}", e.u(), e.v(), c))
        .collect::<Vec<_>>()
        .join(" ")
}

fn diameter(k: usize, edges: &[(Edge, Color)]) -> usize {
    let g = SimpleGraph::from_edges(k, edges.iter().map(|&(e, _)| e));
    (0..k)
        .map(|s| {
            let mut dist = vec![usize::MAX; k];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in g.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            dist.into_iter().max().unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

/// Items (1)-(4) of the extension, checked from scratch.
fn extension_problems(
    k: usize,
    before: &[(Edge, Color)],
    xy: (Edge, Color),
    after: &[(Edge, Color)],
    state: &GameState,
) -> Vec<&'static str> {
    let mut problems = Vec::new();
    let vertices: BTreeSet<usize> = after.iter().flat_map(|(e, _)| [e.u(), e.v()]).collect();
    if vertices.iter().any(|&v| v > k + 1) {
        problems.push("vertex outside V(T) + {x, y}");
    }
    if after.len() != before.len() + 1 && after.len() != before.len() + 2 {
        problems.push("edge count");
    }
    let g = SimpleGraph::from_edges(k + 2, after.iter().map(|&(e, _)| e));
    let spanned = g.components().into_iter().filter(|c| c.len() > 1).count();
    if spanned != 1 || after.len() + 1 != vertices.len() {
        problems.push("not a tree");
    }
    let colors: BTreeSet<Color> = after.iter().map(|&(_, c)| c).collect();
    if !before.iter().all(|(_, c)| colors.contains(c)) || !colors.contains(&xy.1) {
        problems.push("lost a color");
    }
    for (i, &(e, c)) in after.iter().enumerate() {
        if after[i + 1..].iter().any(|&(f, d)| d == c && e.shares_vertex(f)) {
            problems.push("not proper");
        }
        if state.color(e) != Some(c) {
            problems.push("edge not exposed in its color");
        }
    }
    problems
}

/// One edge becomes a 2-path in two colors or a 3-path in three; two edges
/// become four colors or a 3-star in three.
fn literal_shape_holds(m: usize, after: &[(Edge, Color)]) -> bool {
    let colors: BTreeSet<Color> = after.iter().map(|&(_, c)| c).collect();
    let mut degree = std::collections::BTreeMap::new();
    for (e, _) in after {
        *degree.entry(e.u()).or_insert(0) += 1;
        *degree.entry(e.v()).or_insert(0) += 1;
    }
    let max_degree = degree.values().copied().max().unwrap_or(0);
    let is_path = max_degree <= 2;
    let is_star = max_degree == after.len();
    match m {
        1 => (colors.len() == 2 && after.len() == 2 && is_path) || (colors.len() == 3 && after.len() == 3 && is_path),
        2 => colors.len() >= 4 || (colors.len() == 3 && after.len() == 3 && is_star),
        _ => true,
    }
}

fn in_one_component(labels: &[usize], set: &BTreeSet<usize>) -> bool {
    set.iter().map(|&v| labels[v]).collect::<BTreeSet<_>>().len() <= 1
}

/// Component extension from every small input shape, against every reply
/// path, plus random larger inputs.
pub fn comp_extend_suite() -> SuiteReport {
    let mut report = SuiteReport::new("compextend");
    let perms: [[usize; 3]; 6] = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
    let mut shapes = Vec::new();
    for a in 0..=3 {
        for b in 0..=3 {
            for overlap in 0..=a.min(b).min(1) {
                shapes.push((a, b, overlap));
            }
        }
    }
    let mut paths = 0;
    for &(a, b, overlap) in &shapes {
        for roles in perms {
            let exhaustive = a + b <= 4;
            let mut run = |painter: &mut dyn crate::game::Painter| -> Result<()> {
                let (v1, v2, state) = comp_setup(a, b, overlap, roles)?;
                let roles = roles.map(Color::new);
                let mut session = Session::new(state, painter);
                let before = session.state().queries();
                let out = comp_extend(&mut session, &v1, &v2, roles);
                let state = session.into_state();
                paths += 1;
                match out {
                    Ok(ext) => {
                        let used = state.queries() - before;
                        let problems = comp_problems(&state, &v1, &v2, roles, &ext.triple);
                        report.check(problems.is_empty() && used <= 2 * (v1.len() + v2.len()), || {
                            format!("{v1:?} {v2:?} roles {roles:?}: {problems:?}, {used} queries")
                        });
                    }
                    Err(e) => report.fail(format!("{v1:?} {v2:?} roles {roles:?}: {e}")),
                }
                Ok(())
            };
            let result = if exhaustive {
                explore_replies(3, |p| run(p)).map(|_| ())
            } else {
                (0..200).try_for_each(|seed| run(&mut RandomPainter::new(3, seed)))
            };
            if let Err(e) = result {
                report.fail(format!("setup ({a}, {b}, {overlap}): {e}"));
            }
        }
    }
    report.notes.push(format!("{} input shapes, {paths} runs", shapes.len() * perms.len()));
    report
}

/// `V1 = {0..a}` hung from hub `h1` in the first role color, `V2` the next
/// `b` vertices (sharing vertex 0 when `overlap == 1`) hung from `h2`.
fn comp_setup(
    a: usize,
    b: usize,
    overlap: usize,
    roles: [usize; 3],
) -> Result<(BTreeSet<usize>, BTreeSet<usize>, GameState)> {
    let v1: BTreeSet<usize> = (0..a).collect();
    let mut v2: BTreeSet<usize> = (a..a + b - overlap).collect();
    if overlap == 1 {
        v2.insert(0);
    }
    let base = a + b - overlap;
    let (h1, h2) = (base, base + 1);
    let mut state = GameState::new_game(base + 2, 3, TargetSpec::trees(3, 2)?, Variant::Locating)?;
    for &v in &v1 {
        state.expose(Edge::of(v, h1), Color::new(roles[0]))?;
    }
    for &v in &v2 {
        state.expose(Edge::of(v, h2), Color::new(roles[1]))?;
    }
    Ok((v1, v2, state))
}

fn comp_problems(
    state: &GameState,
    v1: &BTreeSet<usize>,
    v2: &BTreeSet<usize>,
    roles: [Color; 3],
    out: &crate::builder::CompTriple,
) -> Vec<&'static str> {
    let mut problems = Vec::new();
    let union: BTreeSet<usize> = v1.union(v2).copied().collect();
    for (set, c) in [&out.x1, &out.x2, &out.x3].into_iter().zip(roles) {
        if !set.is_subset(&union) {
            problems.push("output leaves V1 + V2");
        }
        if !in_one_component(&state.color_graph(c).component_labels(), set) {
            problems.push("output set spans two components");
        }
    }
    if !v1.is_subset(&out.x1) || !v2.is_subset(&out.x2) {
        problems.push("input not kept");
    }
    let mut leftover = v1.difference(&out.x2).chain(v2.difference(&out.x1));
    if out.x1 != union && out.x2 != union && !leftover.all(|v| out.x3.contains(v)) {
        problems.push("no termination condition holds");
    }
    problems
}

/// Good-forest growth: every reply path for two colors on small boards,
/// random painters for three and four colors.
pub fn forest_suite() -> SuiteReport {
    let mut report = SuiteReport::new("forest");
    let check_forest = |state: GameState, painter: &mut dyn crate::game::Painter, report: &mut SuiteReport| {
        let (n, t) = (state.n(), state.t());
        let mut session = Session::new(state, painter);
        match grow_good_forest(&mut session) {
            Ok(forest) => {
                let used = session.state().queries();
                let mut problems: Vec<String> = Vec::new();
                if forest.vertex_count() + 1 < n {
                    problems.push(format!("{} of {n} vertices covered", forest.vertex_count()));
                }
                for comp in forest.components() {
                    let (m, k) = comp.shape();
                    if q_bound(m, k).map_or(true, |q| comp.queries as f64 > q + 1e-9) {
                        problems.push(format!("component ({m}, {k}) charged {}", comp.queries));
                    }
                }
                if forest.charged_queries() != used {
                    problems.push("charges do not add up".into());
                }
                if matching_query_bound(t, n).map_or(true, |b| used > b) {
                    problems.push(format!("{used} queries over the bound"));
                }
                report.check(problems.is_empty(), || format!("t = {t}, n = {n}: {problems:?}"));
            }
            Err(e) => report.fail(format!("t = {t}, n = {n}: {e}")),
        }
    };
    let board = |n: usize, t: usize| {
        GameState::new_game(n, t, TargetSpec::trees(t, 2).expect("valid"), Variant::Locating)
            .expect("valid board")
    };
    for n in 2..=10 {
        let r = explore_replies(2, |p| {
            check_forest(board(n, 2), p, &mut report);
            Ok(())
        });
        if let Err(e) = r {
            report.fail(format!("n = {n}: {e}"));
        }
    }
    for t in [3, 4] {
        for n in 2..=30 {
            for seed in 0..50 {
                check_forest(board(n, t), &mut RandomPainter::new(t, seed), &mut report);
            }
        }
    }
    report
}

#[derive(Debug, Clone, Copy)]
pub struct ColoringsConfig {
    pub max_t: usize,
    pub max_r: usize,
    pub component_n: usize,
    pub recolor_n: usize,
}

impl Default for ColoringsConfig {
    fn default() -> Self {
        ColoringsConfig {
            max_t: 5,
            max_r: 6,
            component_n: 200,
            recolor_n: 50,
        }
    }
}

/// The two extremal colorings, checked with the matching and component oracles.
pub fn colorings_suite(cfg: &ColoringsConfig) -> SuiteReport {
    let mut report = SuiteReport::new("colorings");
    for t in 2..=cfg.max_t {
        for r in 2..=cfg.max_r {
            report.absorb(partition_checks(t, r));
        }
    }
    let parts: Vec<SuiteReport> = (3..=cfg.component_n.max(cfg.recolor_n))
        .into_par_iter()
        .map(|n| blown_k4_checks(n, n <= cfg.component_n, n <= cfg.recolor_n))
        .collect();
    for p in parts {
        report.absorb(p);
    }
    report
}

fn partition_checks(t: usize, r: usize) -> SuiteReport {
    let mut report = SuiteReport::new("partition");
    let (coloring, part) = match (matching_partition_coloring(t, r), PartitionColoring::matching(t, r)) {
        (Ok(c), Ok(p)) => (c, p),
        (Err(e), _) | (_, Err(e)) => {
            report.fail(format!("t = {t}, r = {r}: {e}"));
            return report;
        }
    };
    let n = coloring.n();
    report.check(ramsey_matching_number(&vec![r; t]).is_ok_and(|big| big == n + 1), || {
        format!("t = {t}, r = {r}: partition has {n} vertices")
    });
    for c in Color::all(t) {
        let size = max_matching(&coloring.color_graph(c)).len();
        report.check(size < r, || format!("t = {t}, r = {r}: color {c} has a {size}-matching"));
    }
    for e in Edge::all(n) {
        let flip = if part.inside_first(e) { Color::new(2) } else { Color::new(1) };
        let recolored = coloring.recolored(e, flip);
        let size = max_matching(&recolored.color_graph(flip)).len();
        report.check(size >= r, || {
            format!("t = {t}, r = {r}: flipping {e} to {flip} leaves a {size}-matching")
        });
    }
    report
}

fn blown_k4_checks(n: usize, components: bool, recolors: bool) -> SuiteReport {
    let mut report = SuiteReport::new("blown-k4");
    let (base, k) = match (BlownK4::new(n), k_of(n)) {
        (Ok(b), Ok(k)) => (b, k),
        (Err(e), _) | (_, Err(e)) => {
            report.fail(format!("n = {n}: {e}"));
            return report;
        }
    };
    let coloring = base.coloring();
    if components {
        for c in Color::all(3) {
            let big = coloring.color_graph(c).largest_component().len();
            report.check(big <= k, || format!("n = {n}: color {c} has a component of {big} > k(n) = {k}"));
        }
    }
    if recolors {
        for e in Edge::all(n).filter(|&e| base.is_cross(e)) {
            for c in Color::all(3).filter(|&c| c != coloring.color(e)) {
                let big = coloring.recolored(e, c).color_graph(c).largest_component().len();
                report.check(big == n, || format!("n = {n}: recoloring {e} to {c} spans {big}"));
            }
        }
    }
    report
}

/// An instance the exact solver handles quickly.
#[derive(Debug, Clone)]
pub struct SolverInstance {
    pub n: usize,
    pub targets: TargetSpec,
    pub variant: Variant,
}

impl SolverInstance {
    pub fn t(&self) -> usize {
        self.targets.len()
    }

    pub fn label(&self) -> String {
        format!("n = {}, {} {:?}", self.n, self.targets, self.variant)
    }
}

/// The small instances shared by the cross-checks.
pub fn solver_instances() -> Vec<SolverInstance> {
    let mut out = Vec::new();
    let mut add = |n: usize, targets: TargetSpec, variants: &[Variant]| {
        for &variant in variants {
            let below = targets.ramsey_number().is_none_or(|r| n < r);
            if variant == Variant::Classic && below {
                continue;
            }
            out.push(SolverInstance {
                n,
                targets: targets.clone(),
                variant,
            });
        }
    };
    let all = [Variant::Classic, Variant::Locating, Variant::Cornering];
    let m = |rs: &[usize]| TargetSpec::matchings(rs).expect("valid");
    let tr = |t: usize, k: usize| TargetSpec::trees(t, k).expect("valid");
    for n in 2..=5 {
        add(n, tr(2, n), &all);
    }
    add(4, tr(2, 3), &all);
    add(5, tr(2, 3), &all);
    add(3, m(&[1, 2]), &all);
    add(4, m(&[1, 2]), &all);
    add(4, m(&[2, 2]), &all);
    add(5, m(&[2, 2]), &all);
    add(3, tr(3, 3), &all);
    add(4, tr(3, 3), &all);
    add(4, m(&[1, 1, 2]), &all);
    out
}

/// Solver values with and without canonical keys, the variant relations,
/// and the completion and matching oracles.
pub fn solver_cross_suite() -> SuiteReport {
    let mut report = SuiteReport::new("solver-cross");
    let instances = solver_instances();
    let solved: Vec<(SolverInstance, Result<(usize, usize)>)> = instances
        .into_par_iter()
        .map(|inst| {
            let run = |canonical| {
                solve_value(
                    inst.n,
                    inst.t(),
                    &inst.targets,
                    inst.variant,
                    &SolverConfig {
                        canonical,
                        ..SolverConfig::default()
                    },
                )
                .map(|r| r.value)
            };
            let pair = run(false).and_then(|a| Ok((a, run(true)?)));
            (inst, pair)
        })
        .collect();
    let value = |n: usize, targets: &TargetSpec, v: Variant| {
        solved.iter().find_map(|(i, r)| {
            (i.n == n && &i.targets == targets && i.variant == v)
                .then(|| r.as_ref().ok().map(|p| p.0))
                .flatten()
        })
    };
    for (inst, result) in &solved {
        match result {
            Ok((plain, canon)) => {
                report.check(plain == canon, || {
                    format!("{}: {plain} plain vs {canon} canonical", inst.label())
                });
                report.check(*plain <= edge_count(inst.n), || format!("{}: value {plain}", inst.label()));
            }
            Err(e) => report.fail(format!("{}: {e}", inst.label())),
        }
        if inst.variant == Variant::Locating {
            let loc = value(inst.n, &inst.targets, Variant::Locating);
            let cor = value(inst.n, &inst.targets, Variant::Cornering);
            if let (Some(loc), Some(cor)) = (loc, cor) {
                report.check(cor <= loc, || format!("{}: cornering {cor} > locating {loc}", inst.label()));
                if inst.targets.ramsey_number().is_some_and(|r| inst.n >= r) {
                    report.check(cor == loc, || {
                        format!("{}: cornering {cor} != locating {loc}", inst.label())
                    });
                }
            }
        }
    }
    report.notes.push(format!("{} solver instances", solved.len()));
    report.absorb(matching_oracle_checks(10, 0));
    report.absorb(completion_oracle_checks(300, 0));
    report
}

/// `max_matching` and `BitGraph::has_matching` against subset enumeration on
/// every graph with at most `max_edges` edges on up to six vertices, plus
/// random larger ones.
pub fn matching_oracle_checks(max_edges: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("matching-oracle");
    let mut graphs: Vec<(usize, Vec<Edge>)> = Vec::new();
    for n in 2..=5 {
        let all: Vec<Edge> = Edge::all(n).collect();
        for mask in 0u32..(1 << all.len()) {
            if mask.count_ones() as usize <= max_edges {
                graphs.push((n, (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..3000 {
        use rand::seq::SliceRandom;
        use rand::Rng;
        let n = rng.gen_range(6..=12);
        let mut all: Vec<Edge> = Edge::all(n).collect();
        all.shuffle(&mut rng);
        let m = rng.gen_range(0..=max_edges.min(all.len()));
        graphs.push((n, all[..m].to_vec()));
    }
    for (n, edges) in graphs {
        let want = brute_matching(&edges);
        let g = SimpleGraph::from_edges(n, edges.iter().copied());
        let got = max_matching(&g);
        let disjoint = got.iter().enumerate().all(|(i, e)| got[i + 1..].iter().all(|f| !e.shares_vertex(*f)));
        report.check(got.len() == want && disjoint && got.iter().all(|e| g.has_edge(*e)), || {
            format!("{edges:?}: matching of {} vs {want}", got.len())
        });
        let mut bits = BitGraph::new(n);
        for e in &edges {
            bits.add(e.u(), e.v());
        }
        for r in 1..=want + 1 {
            report.check(bits.has_matching(r) == (r <= want), || format!("{edges:?}: bit test at r = {r}"));
        }
    }
    report
}

fn brute_matching(edges: &[Edge]) -> usize {
    let mut best = 0;
    for mask in 0u32..(1 << edges.len()) {
        let chosen: Vec<Edge> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let ok = chosen.iter().enumerate().all(|(i, e)| chosen[i + 1..].iter().all(|f| !e.shares_vertex(*f)));
        if ok {
            best = best.max(chosen.len());
        }
    }
    best
}

/// The monotone completion shortcut against walking every completion, on
/// random partial colorings.
pub fn completion_oracle_checks(cases: usize, seed: u64) -> SuiteReport {
    use rand::Rng;
    let mut report = SuiteReport::new("completion-oracle");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let families = [
        TargetSpec::matchings(&[2, 2]).expect("valid"),
        TargetSpec::matchings(&[1, 2, 2]).expect("valid"),
        TargetSpec::trees(2, 4).expect("valid"),
        TargetSpec::trees(3, 3).expect("valid"),
    ];
    for case in 0..cases {
        let targets = families[case % families.len()].clone();
        let t = targets.len();
        let n = rng.gen_range(3..=5);
        let mut s = SolverState::empty(n, targets.clone());
        for e in Edge::all(n) {
            if rng.gen_bool(0.6) {
                s.set(e, Some(Color::new(rng.gen_range(1..=t))));
            }
        }
        if s.unexposed_count() > 8 {
            continue;
        }
        let mut any = false;
        let mut per_color = vec![false; t];
        let walked = enumerate_completions(&s, |has| {
            any |= has.iter().any(|&h| h);
            for (slot, &h) in per_color.iter_mut().zip(has) {
                *slot |= h;
            }
            true
        });
        if let Err(e) = walked {
            report.fail(format!("enumeration failed: {e}"));
            continue;
        }
        for c in Color::all(t) {
            let fast = has_completion_with_target(&s, &targets, Some(c), true, 25);
            report.check(fast.as_ref().is_ok_and(|&f| f == per_color[c.slot()]), || {
                format!("n = {n}, {targets}, color {c}: shortcut {fast:?} vs walk {}", per_color[c.slot()])
            });
        }
        let fast = has_completion_with_target(&s, &targets, None, true, 25);
        report.check(fast.as_ref().is_ok_and(|&f| f == any), || {
            format!("n = {n}, {targets}: shortcut {fast:?} vs walk {any}")
        });
    }
    report
}
