use std::collections::BTreeSet;

use online_ramsey::builder::{
    comp_extend, ColoredTree, GoodForest, MatchingBuilder, Tree2Builder, Tree3Builder,
};
use online_ramsey::detection::{
    good_forest_matching, k_of, largest_mono_component, matching_coefficient,
    matching_cornering_lower_bound, max_matching, q_bound, ramsey_matching_number,
    six_cover_witness, tree3_lower_bound, tree_ramsey, trivial_online_value, SimpleGraph, SixCover,
};
use online_ramsey::game::check_win_classic;
use online_ramsey::painter::{
    blown_k4_coloring, explore_replies, matching_partition_coloring, FixedPainter,
    MatchingAdversary, RandomPainter, ScriptedPainter, Tree2Adversary, Tree3Adversary,
};
use online_ramsey::solver::{
    canonical_key, has_completion_with_target, solve_value, win_check, SolverConfig, SolverState,
};
use online_ramsey::{
    run_game, Color, Coloring, Edge, EngineConfig, Error, GameState, Goal, Painter, Session,
    TargetSpec, Transcript, Variant, WinCertificate,
};

fn c(i: usize) -> Color {
    Color::new(i)
}

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

fn matchings(n: usize, rs: &[usize], variant: Variant) -> GameState {
    GameState::new_game(n, rs.len(), TargetSpec::matchings(rs).unwrap(), variant).unwrap()
}

fn trees(n: usize, t: usize, k: usize, variant: Variant) -> GameState {
    GameState::new_game(n, t, TargetSpec::trees(t, k).unwrap(), variant).unwrap()
}

fn board_with(n: usize, targets: TargetSpec, exposed: &[(usize, usize, usize)]) -> GameState {
    let mut s = GameState::new_game(n, targets.len(), targets, Variant::Locating).unwrap();
    for &(a, b, col) in exposed {
        s.expose(Edge::of(a, b), c(col)).unwrap();
    }
    s
}

#[test]
fn new_game_boards() {
    let s = matchings(5, &[2, 2], Variant::Classic);
    assert_eq!(s.unexposed_count(), 10);
    assert_eq!(s.queries(), 0);
    let s = trees(4, 3, 3, Variant::Cornering);
    assert_eq!(s.unexposed_count(), 6);
    assert!(GameState::new_game(1, 2, TargetSpec::matchings(&[1, 1]).unwrap(), Variant::Locating).is_err());
}

#[test]
fn queries_are_permanent() {
    let mut s = trees(4, 3, 2, Variant::Locating);
    let mut p = ScriptedPainter::new(vec![c(2), c(1)]);
    assert_eq!(s.query(Edge::of(0, 1), &mut p).unwrap(), c(2));
    assert_eq!(s.queries(), 1);
    assert_eq!(s.query(Edge::of(0, 1), &mut p).unwrap(), c(2));
    assert_eq!(s.queries(), 1);
    assert!(matches!(
        s.expose(Edge::of(2, 3), c(5)),
        Err(Error::ColorOutOfRange { color: 5, t: 3 })
    ));
}

#[test]
fn classic_wins_are_detected() {
    let targets = TargetSpec::new(vec![Goal::Matching { r: 2 }, Goal::Tree { k: 3 }]).unwrap();
    let s = board_with(4, targets.clone(), &[(0, 1, 1), (2, 3, 1)]);
    match check_win_classic(&s) {
        Some(WinCertificate::FoundCopy { color, edges }) => {
            assert_eq!(color, c(1));
            assert_eq!(set(&edges.iter().map(|e| e.index(4)).collect::<Vec<_>>()).len(), 2);
            assert!(!edges[0].shares_vertex(edges[1]));
        }
        other => panic!("expected a found copy, got {other:?}"),
    }
    let s = board_with(4, TargetSpec::trees(2, 3).unwrap(), &[(0, 1, 2), (1, 2, 2)]);
    match check_win_classic(&s) {
        Some(WinCertificate::FoundCopy { color, mut edges }) => {
            edges.sort();
            assert_eq!(color, c(2));
            assert_eq!(edges, vec![Edge::of(0, 1), Edge::of(1, 2)]);
        }
        other => panic!("expected a found copy, got {other:?}"),
    }
    assert!(check_win_classic(&board_with(4, targets, &[])).is_none());
}

#[test]
fn transcript_documents_reject_bad_moves() {
    let doc = |u: usize, v: usize, col: usize| {
        format!(
            r#"{{"n":4,"t":2,"variant":"classic","targets":[{{"kind":"matching","r":2}},{{"kind":"matching","r":2}}],
            "builder":"b","painter":"p","seed":null,"moves":[{{"u":{u},"v":{v},"c":{col},"tag":null}}],"result":null}}"#
        )
    };
    let ok = Transcript::decode(&doc(0, 1, 1)).unwrap();
    assert_eq!(Transcript::decode(&ok.encode()).unwrap(), ok);
    assert!(Transcript::decode(&doc(3, 3, 1)).is_err());
    assert!(Transcript::decode(&doc(0, 1, 0)).is_err());
}

#[test]
fn matching_builder_games() {
    let out = run_game(
        &mut MatchingBuilder::new(),
        &mut RandomPainter::new(2, 3),
        matchings(5, &[2, 2], Variant::Classic),
        &EngineConfig::default(),
    )
    .unwrap();
    assert!(out.queries() <= 5);
    match &out.certificate {
        WinCertificate::FoundCopy { edges, .. } => {
            assert_eq!(edges.len(), 2);
            assert!(!edges[0].shares_vertex(edges[1]));
        }
        other => panic!("unexpected certificate {other:?}"),
    }

    let mut worst = 0;
    let runs = explore_replies(2, |p| {
        let out = run_game(
            &mut MatchingBuilder::new(),
            p,
            matchings(5, &[2, 2], Variant::Classic),
            &EngineConfig::default(),
        )?;
        worst = worst.max(out.queries());
        Ok(())
    })
    .unwrap();
    assert!(runs > 1);
    assert!(worst <= 4, "worst case {worst}");

    for seed in 0..200 {
        let out = run_game(
            &mut MatchingBuilder::new(),
            &mut RandomPainter::new(3, seed),
            matchings(6, &[2, 2, 2], Variant::Classic),
            &EngineConfig::default(),
        )
        .unwrap();
        assert!(out.queries() <= 7);
    }

    let out = run_game(
        &mut MatchingBuilder::new(),
        &mut RandomPainter::new(2, 0),
        matchings(2, &[1, 1], Variant::Classic),
        &EngineConfig::default(),
    )
    .unwrap();
    assert_eq!(out.queries(), 1);
}

#[test]
fn tree2_builder_games() {
    let out = run_game(
        &mut Tree2Builder,
        &mut Tree2Adversary::new(6),
        trees(6, 2, 6, Variant::Classic),
        &EngineConfig::default(),
    )
    .unwrap();
    assert_eq!(out.queries(), 9);
    assert_eq!(out.certificate.structure_size(), 6);

    let out = run_game(
        &mut Tree2Builder,
        &mut RandomPainter::new(2, 0),
        trees(2, 2, 2, Variant::Classic),
        &EngineConfig::default(),
    )
    .unwrap();
    assert_eq!(out.queries(), 1);

    let mut worst = 0;
    explore_replies(2, |p| {
        let out = run_game(&mut Tree2Builder, p, trees(4, 2, 4, Variant::Classic), &EngineConfig::default())?;
        assert_eq!(out.certificate.structure_size(), 4);
        worst = worst.max(out.queries());
        Ok(())
    })
    .unwrap();
    assert_eq!(worst, 5);

    let out = run_game(
        &mut Tree2Builder,
        &mut Tree2Adversary::new(4),
        trees(4, 2, 4, Variant::Classic),
        &EngineConfig::default(),
    )
    .unwrap();
    assert_eq!(out.queries(), 5);
}

#[test]
fn tree3_builder_games() {
    let out = run_game(
        &mut Tree3Builder::new(),
        &mut RandomPainter::new(3, 1),
        trees(3, 3, 2, Variant::Classic),
        &EngineConfig::default(),
    )
    .unwrap();
    assert!(out.queries() <= 10);
    assert!(out.certificate.structure_size() >= 2);

    explore_replies(3, |p| {
        let out = run_game(&mut Tree3Builder::new(), p, trees(4, 3, 2, Variant::Classic), &EngineConfig::default())?;
        assert!(out.queries() <= 15);
        assert!(out.certificate.structure_size() >= 2);
        Ok(())
    })
    .unwrap();

    let out = run_game(
        &mut Tree3Builder::new(),
        &mut Tree3Adversary::new(100),
        trees(100, 3, 50, Variant::Classic),
        &EngineConfig::default(),
    )
    .unwrap();
    assert!(out.queries() <= 495);
    assert!(out.certificate.structure_size() >= 50);
}

#[test]
fn comp_extend_single_vertices() {
    let roles = [c(1), c(2), c(3)];
    for (reply, want) in [
        (1, (set(&[0, 1]), set(&[1]), set(&[]))),
        (3, (set(&[0]), set(&[1]), set(&[0, 1]))),
    ] {
        let mut p = ScriptedPainter::new(vec![c(reply)]);
        let mut s = Session::new(trees(2, 3, 2, Variant::Locating), &mut p);
        let ext = comp_extend(&mut s, &set(&[0]), &set(&[1]), roles).unwrap();
        assert_eq!((ext.triple.x1, ext.triple.x2, ext.triple.x3), want);
        assert_eq!(ext.new_queries, 1);
    }
    let mut p = ScriptedPainter::new(vec![]);
    let mut s = Session::new(trees(3, 3, 2, Variant::Locating), &mut p);
    let ext = comp_extend(&mut s, &set(&[]), &set(&[]), roles).unwrap();
    assert!(ext.triple.x1.is_empty() && ext.triple.x2.is_empty() && ext.triple.x3.is_empty());
    assert_eq!(ext.new_queries, 0);
}

#[test]
fn max_matchings() {
    let g = SimpleGraph::from_edges(3, [Edge::of(0, 1), Edge::of(1, 2), Edge::of(0, 2)]);
    assert_eq!(max_matching(&g).len(), 1);
    let g = SimpleGraph::from_edges(4, [Edge::of(0, 1), Edge::of(1, 2), Edge::of(2, 3)]);
    let mut m = max_matching(&g);
    m.sort();
    assert_eq!(m, vec![Edge::of(0, 1), Edge::of(2, 3)]);
    assert!(max_matching(&SimpleGraph::new(5)).is_empty());
}

#[test]
fn largest_components() {
    let s = board_with(6, TargetSpec::trees(2, 3).unwrap(), &[(0, 1, 1), (1, 2, 1), (3, 4, 1)]);
    let mut comp = largest_mono_component(&s, c(1));
    comp.sort();
    assert_eq!(comp, vec![0, 1, 2]);
    assert!(largest_mono_component(&s, c(2)).is_empty());
    let star: Vec<_> = (1..6).map(|v| (0, v, 1)).collect();
    let s = board_with(6, TargetSpec::trees(2, 3).unwrap(), &star);
    assert_eq!(largest_mono_component(&s, c(1)).len(), 6);
}

#[test]
fn closed_forms() {
    assert_eq!(ramsey_matching_number(&[2, 2]).unwrap(), 5);
    assert_eq!(ramsey_matching_number(&[1, 1]).unwrap(), 2);
    assert_eq!(ramsey_matching_number(&[2, 2, 2]).unwrap(), 6);
    assert!(ramsey_matching_number(&[3]).is_err());

    assert_eq!(k_of(6).unwrap(), 4);
    assert_eq!(k_of(5).unwrap(), 3);
    assert_eq!(k_of(8).unwrap(), 4);
    assert!(k_of(2).is_err());

    assert_eq!(tree_ramsey(2, 7).unwrap(), 7);
    assert_eq!(tree_ramsey(3, 4).unwrap(), 6);
    assert_eq!(tree_ramsey(3, 5).unwrap(), 9);

    assert_eq!(trivial_online_value(2, 3), 3);
    assert_eq!(trivial_online_value(5, 1), 1);
    assert_eq!(trivial_online_value(4, 2), 4);

    assert_eq!(q_bound(1, 1).unwrap(), 1.0);
    assert_eq!(q_bound(2, 2).unwrap(), 3.0);
    assert_eq!(q_bound(4, 4).unwrap(), 8.0);
    assert!(q_bound(1, 2).is_err());

    assert_eq!(matching_coefficient(2).unwrap(), 1.0);
    assert_eq!(matching_coefficient(3).unwrap(), 1.25);
    assert_eq!(matching_coefficient(4).unwrap(), 1.6);

    assert_eq!(matching_cornering_lower_bound(2, 4).unwrap(), 3);
    assert_eq!(matching_cornering_lower_bound(3, 5).unwrap(), 9);
    assert_eq!(matching_cornering_lower_bound(4, 6).unwrap(), 15);
    assert!(matching_cornering_lower_bound(2, 5).is_err());

    assert_eq!(tree3_lower_bound(4).unwrap(), 6);
    assert_eq!(tree3_lower_bound(8).unwrap(), 24);
    assert_eq!(tree3_lower_bound(3).unwrap(), 0);
}

#[test]
fn six_cover_cases() {
    let all: Vec<usize> = (0..5).collect();
    let cov = SixCover::from_slices([&[], &[], &all, &[], &[], &[]]);
    assert_eq!(six_cover_witness(&cov, 5).unwrap(), 3);

    let cov = SixCover::from_slices([&[0, 1], &[2, 3], &[0, 2], &[1, 3], &[0, 3], &[1, 2]]);
    assert_eq!(six_cover_witness(&cov, 4).unwrap(), 1);

    let cov = SixCover::from_slices([&[0, 1, 2], &[2, 3], &[0, 1, 2, 3], &[], &[], &[]]);
    assert!(matches!(six_cover_witness(&cov, 4), Err(Error::NotDisjoint(2))));
}

#[test]
fn good_forest_cases() {
    let targets = TargetSpec::matchings(&[2, 2]).unwrap();
    let single = |a, b| ColoredTree::from_edges(&[(Edge::of(a, b), c(1))]).unwrap();
    let f = GoodForest::from_trees(2, vec![single(0, 1), single(2, 3)]).unwrap();
    let (color, mut edges) = good_forest_matching(&f, &targets).unwrap();
    edges.sort();
    assert_eq!(color, c(1));
    assert_eq!(edges, vec![Edge::of(0, 1), Edge::of(2, 3)]);

    let improper = ColoredTree::from_edges(&[(Edge::of(0, 1), c(1)), (Edge::of(1, 2), c(1))]).unwrap();
    assert!(GoodForest::from_trees(2, vec![improper]).is_err());
    let small = GoodForest::from_trees(2, vec![single(0, 1)]).unwrap();
    assert!(good_forest_matching(&small, &targets).is_err());
}

#[test]
fn fixed_and_partition_colorings() {
    let s = trees(4, 2, 3, Variant::Locating);
    let mut all_one = FixedPainter::new(Coloring::from_fn(4, 2, |_| c(1)).unwrap());
    assert_eq!(all_one.color_of(Edge::of(2, 3), &s), c(1));

    let chi = matching_partition_coloring(2, 2).unwrap();
    assert_eq!(chi.n(), 4);
    assert_eq!(chi.color(Edge::of(0, 1)), c(1));
    assert_eq!(chi.color(Edge::of(0, 3)), c(2));
    assert!(matches!(
        Coloring::from_json(r#"{"n":3,"t":2,"edges":[{"u":0,"v":1,"c":1}]}"#),
        Err(Error::IncompleteColoring(..))
    ));

    let chi = matching_partition_coloring(3, 2).unwrap();
    assert_eq!(chi.n(), 5);
    for col in 1..=3 {
        assert!(max_matching(&chi.color_graph(c(col))).len() <= 1);
    }
    let chi = matching_partition_coloring(2, 3).unwrap();
    assert_eq!(chi.n(), 7);
    assert_eq!(max_matching(&chi.color_graph(c(1))).len(), 2);
}

fn play_order(painter: &mut dyn Painter, state: &mut GameState, order: &[Edge]) {
    for &e in order {
        state.query(e, painter).unwrap();
    }
}

#[test]
fn matching_adversary_last_edge() {
    let targets = TargetSpec::matchings(&[2, 2]).unwrap();
    let last_inside = [(0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 1)];
    let last_across = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 3)];
    for (order, want) in [(last_inside, 2), (last_across, 1)] {
        let order: Vec<Edge> = order.iter().map(|&(a, b)| Edge::of(a, b)).collect();
        let mut adv = MatchingAdversary::new(2, 2, Variant::Cornering).unwrap();
        let mut s = GameState::new_game(4, 2, targets.clone(), Variant::Cornering).unwrap();
        play_order(&mut adv, &mut s, &order);
        assert_eq!(s.color(order[5]), Some(c(want)));
        assert!(online_ramsey::detection::find_mono_target(&s, c(want), Goal::Matching { r: 2 }).is_some());
    }

    let chi = matching_partition_coloring(2, 3).unwrap();
    let mut adv = MatchingAdversary::new(2, 3, Variant::Locating).unwrap();
    let s = matchings(7, &[3, 3], Variant::Locating);
    for e in Edge::all(7) {
        assert_eq!(adv.color_of(e, &s), chi.color(e));
    }
}

#[test]
fn tree_adversaries() {
    let mut adv = Tree2Adversary::new(4);
    let mut s = trees(4, 2, 4, Variant::Classic);
    let order: Vec<Edge> = Edge::all(4).collect();
    play_order(&mut adv, &mut s, &order[..5]);
    assert_eq!(s.color(order[2]), Some(c(2)));
    assert_eq!(s.color(order[4]), Some(c(1)));

    let mut adv = Tree2Adversary::new(2);
    let mut s = trees(2, 2, 2, Variant::Classic);
    play_order(&mut adv, &mut s, &[Edge::of(0, 1)]);
    assert_eq!(s.color(Edge::of(0, 1)), Some(c(2)));

    let chi = blown_k4_coloring(8).unwrap();
    assert_eq!(chi.color(Edge::of(0, 2)), c(1));
    assert_eq!(chi.color(Edge::of(2, 4)), c(3));
    for col in 1..=3 {
        assert!(chi.color_graph(c(col)).largest_component().len() <= k_of(8).unwrap());
    }
    assert_eq!(chi.color_graph(c(1)).largest_component().len(), 4);

    let mut adv = Tree3Adversary::new(8);
    let mut s = trees(8, 3, 5, Variant::Cornering);
    let order: Vec<Edge> = Edge::all(8).collect();
    play_order(&mut adv, &mut s, &order);
    let base = adv.base().clone();
    let last_cross = *order.iter().rev().find(|&&e| base.is_cross(e)).unwrap();
    for &e in &order {
        if !base.is_cross(e) {
            assert_eq!(s.color(e), Some(c(1)));
        } else if e != last_cross {
            assert_eq!(s.color(e), Some(base.color(e)));
        }
    }
    let planned = base.color(last_cross);
    let got = s.color(last_cross).unwrap();
    assert_eq!(got.index(), if planned.index() == 1 { 2 } else { 1 });
    assert_eq!(largest_mono_component(&s, got).len(), 8);
}

#[test]
fn completion_and_win_checks() {
    let chi = matching_partition_coloring(2, 2).unwrap();
    let targets = TargetSpec::matchings(&[2, 2]).unwrap();

    let full = SolverState::from_exposed(
        4,
        targets.clone(),
        Edge::all(4).map(|e| (e, if e == Edge::of(0, 1) || e == Edge::of(2, 3) { c(1) } else { c(2) })),
    )
    .unwrap();
    assert!(has_completion_with_target(&full, &targets, None, true, 25).unwrap());

    let empty5 = SolverState::empty(5, targets.clone());
    assert!(!has_completion_with_target(&empty5, &targets, None, false, 25).unwrap());
    let empty3 = SolverState::empty(3, targets.clone());
    assert!(has_completion_with_target(&empty3, &targets, None, false, 25).unwrap());

    let full_chi = SolverState::from_exposed(4, targets.clone(), Edge::all(4).map(|e| (e, chi.color(e)))).unwrap();
    assert!(matches!(
        win_check(&full_chi, &targets, Variant::Locating, 25).unwrap(),
        Some(WinCertificate::Exclusion)
    ));

    let red = SolverState::from_exposed(4, targets.clone(), [(Edge::of(0, 1), c(1)), (Edge::of(2, 3), c(1))]).unwrap();
    assert!(matches!(
        win_check(&red, &targets, Variant::Cornering, 25).unwrap(),
        Some(WinCertificate::CorneredColor(col)) if col == c(1)
    ));

    let inside = SolverState::from_exposed(
        4,
        targets.clone(),
        [(0, 1), (0, 2), (1, 2)].map(|(a, b)| (Edge::of(a, b), c(1))),
    )
    .unwrap();
    // the unexposed edges form a star at 3, so color 2 can never hold 2K2
    assert!(matches!(
        win_check(&inside, &targets, Variant::Cornering, 25).unwrap(),
        Some(WinCertificate::CorneredColor(col)) if col == c(1)
    ));
}

#[test]
fn solver_values() {
    let cfg = SolverConfig::default();
    let v = solve_value(3, 2, &TargetSpec::trees(2, 3).unwrap(), Variant::Classic, &cfg).unwrap();
    assert_eq!(v.value, 3);
    let m22 = TargetSpec::matchings(&[2, 2]).unwrap();
    let v = solve_value(4, 2, &m22, Variant::Locating, &cfg).unwrap();
    assert_eq!(v.value, 6);
    let v = solve_value(5, 2, &m22, Variant::Classic, &cfg).unwrap();
    assert!((3..=4).contains(&v.value), "value {}", v.value);
    assert!(matches!(
        solve_value(20, 3, &TargetSpec::trees(3, 10).unwrap(), Variant::Classic, &cfg),
        Err(Error::Intractable(_))
    ));
}

#[test]
fn canonical_keys() {
    let targets = TargetSpec::matchings(&[2, 2]).unwrap();
    let a = SolverState::from_exposed(5, targets.clone(), [(Edge::of(0, 1), c(1))]).unwrap();
    let b = SolverState::from_exposed(5, targets.clone(), [(Edge::of(0, 3), c(1))]).unwrap();
    assert_eq!(canonical_key(&a, true), canonical_key(&b, true));
    let two = SolverState::from_exposed(5, targets.clone(), [(Edge::of(0, 1), c(1)), (Edge::of(2, 3), c(1))]).unwrap();
    assert_ne!(canonical_key(&a, true), canonical_key(&two, true));
    assert_ne!(canonical_key(&a, false), canonical_key(&two, false));
    let e1 = SolverState::empty(5, targets.clone());
    let e2 = SolverState::empty(5, targets);
    assert_eq!(canonical_key(&e1, true), canonical_key(&e2, true));
}
