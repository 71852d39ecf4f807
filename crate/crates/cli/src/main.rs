use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use online_ramsey::builder::builder_by_name;
use online_ramsey::detection::{
    k_of, matching_coefficient, matching_cornering_lower_bound, matching_query_bound,
    ramsey_matching_number, tree3_lower_bound, tree_ramsey, trivial_online_value,
};
use online_ramsey::painter::{
    FixedPainter, MatchingAdversary, PartitionColoring, RandomPainter, Tree2Adversary,
    Tree3Adversary,
};
use online_ramsey::solver::{solve_value, SolverConfig};
use online_ramsey::verify::run_suite;
use online_ramsey::{
    run_game, Coloring, EngineConfig, Error, GameOutcome, GameState, Painter, TargetSpec, Variant,
};

const CSV_HEADER: [&str; 11] = [
    "n",
    "t",
    "variant",
    "builder",
    "painter",
    "seed",
    "queries",
    "bound",
    "within_bound",
    "structure_color",
    "structure_size",
];

#[derive(Parser)]
#[command(name = "online-ramsey", version, about = "Restricted online Ramsey games on K_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Play one game and write its transcript.
    Play(PlayArgs),
    /// Compute an exact game value on a small board.
    Solve(SolveArgs),
    /// Play a grid of games and emit one CSV row per game.
    Sweep(SweepArgs),
    /// Run an invariant suite.
    Verify {
        /// treeextend, compextend, forest, colorings, solver-cross or all
        suite: String,
    },
    /// Print the closed-form quantities for a board.
    Formulas(FormulaArgs),
}

#[derive(Args, Clone)]
struct GameArgs {
    #[arg(long)]
    t: usize,
    /// `matching:r1,r2,...` or `tree` (order chosen by t and variant) or `tree:k`
    #[arg(long)]
    target: Option<String>,
    #[arg(long, default_value = "classic", value_parser = parse_variant)]
    variant: Variant,
    #[arg(long)]
    builder: String,
    /// Unexposed-edge limit for completion-based certificates.
    #[arg(long, default_value_t = 25)]
    threshold: usize,
}

#[derive(Args)]
struct PlayArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    game: GameArgs,
    /// random[:SEED], fixed:FILE, match-adv:locating|cornering, tree2-adv, tree3-adv
    #[arg(long, default_value = "random")]
    painter: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the transcript JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    target: String,
    #[arg(long, default_value = "classic", value_parser = parse_variant)]
    variant: Variant,
    /// Memoize on relabeling-invariant keys.
    #[arg(long, num_args = 0..=1, default_value_t = false, default_missing_value = "true")]
    canonical: bool,
    /// Refuse boards with more than 2^this partial colorings.
    #[arg(long, default_value_t = 26.0)]
    max_log2_states: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// start:stop[:step], stop inclusive
    #[arg(long)]
    n_range: String,
    #[command(flatten)]
    game: GameArgs,
    /// Painter names, comma separated; `random` takes one seed per repetition.
    #[arg(long, value_delimiter = ',', default_value = "random")]
    painter: Vec<String>,
    /// First seed for `random` painters.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Games per (n, random painter).
    #[arg(long, default_value_t = 1)]
    reps: u64,
    /// Output path; defaults to stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct FormulaArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    target: Option<String>,
    #[arg(long, default_value = "classic", value_parser = parse_variant)]
    variant: Variant,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    match s {
        "classic" => Ok(Variant::Classic),
        "locating" => Ok(Variant::Locating),
        "cornering" => Ok(Variant::Cornering),
        _ => Err(format!("unknown variant {s:?}; expected classic, locating or cornering")),
    }
}

/// Expand the target grammar for a board.
fn parse_targets(text: &str, n: usize, t: usize, variant: Variant) -> anyhow::Result<TargetSpec> {
    let spec = if let Some(list) = text.strip_prefix("matching:") {
        let rs = list
            .split(',')
            .map(|r| r.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| format!("bad matching sizes {list:?}"))?;
        if rs.len() != t {
            return Err(Error::TargetMismatch { t, got: rs.len() }.into());
        }
        TargetSpec::matchings(&rs)?
    } else if let Some(k) = text.strip_prefix("tree:") {
        let k = k.parse().with_context(|| format!("bad tree order {k:?}"))?;
        TargetSpec::trees(t, k)?
    } else if text == "tree" {
        let k = match (t, variant) {
            (2, _) => n,
            (3, Variant::Classic) => k_of(n)?,
            (3, _) => k_of(n)? + 1,
            _ => bail!(Error::Precondition(format!(
                "`tree` expands only for t = 2 or 3, got {t}"
            ))),
        };
        TargetSpec::trees(t, k)?
    } else {
        bail!(Error::Malformed(format!(
            "unknown target {text:?}; expected matching:r1,..,rt, tree or tree:k"
        )));
    };
    Ok(spec)
}

fn default_target(builder: &str) -> anyhow::Result<&'static str> {
    match builder {
        "tree2" | "tree3" => Ok("tree"),
        _ => Err(Error::Malformed(format!("builder {builder:?} needs --target")).into()),
    }
}

fn make_painter(
    name: &str,
    n: usize,
    targets: &TargetSpec,
    seed: u64,
) -> anyhow::Result<Box<dyn Painter + Send>> {
    let t = targets.len();
    let (kind, arg) = match name.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (name, None),
    };
    Ok(match (kind, arg) {
        ("random", None) => Box::new(RandomPainter::new(t, seed)),
        ("random", Some(s)) => {
            let s = s.parse().with_context(|| format!("bad seed {s:?}"))?;
            Box::new(RandomPainter::new(t, s))
        }
        ("fixed", Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            let coloring = Coloring::from_json(&text)?;
            if coloring.n() != n || coloring.t() != t {
                bail!(Error::Precondition(format!(
                    "coloring in {path} is for n = {}, t = {}, board is n = {n}, t = {t}",
                    coloring.n(),
                    coloring.t()
                )));
            }
            Box::new(FixedPainter::new(coloring).named(name))
        }
        ("match-adv", Some(v)) => {
            let v = parse_variant(v).map_err(|e| anyhow!(Error::Malformed(e)))?;
            let rs = targets.matching_sizes().ok_or_else(|| {
                Error::Precondition("match-adv needs matching targets".into())
            })?;
            let partition = PartitionColoring::for_matchings(&rs, Some(n))?;
            Box::new(MatchingAdversary::from_partition(partition, v))
        }
        ("tree2-adv", None) => Box::new(Tree2Adversary::new(n)),
        ("tree3-adv", None) => Box::new(Tree3Adversary::new(n)),
        _ => bail!(Error::Malformed(format!(
            "unknown painter {name:?}; expected random[:SEED], fixed:FILE, \
             match-adv:locating|cornering, tree2-adv or tree3-adv"
        ))),
    })
}

/// The query bound a strategy promises on this board.
fn strategy_bound(builder: &str, n: usize, t: usize) -> anyhow::Result<usize> {
    Ok(match builder {
        "matching" => matching_query_bound(t, n)?,
        "tree2" => 2 * n - 3,
        "tree3" => 5 * (n - 1),
        other => bail!(Error::Malformed(format!("no bound known for builder {other:?}"))),
    })
}

struct Played {
    outcome: GameOutcome,
    bound: usize,
}

fn play_one(
    n: usize,
    game: &GameArgs,
    painter_name: &str,
    seed: u64,
) -> anyhow::Result<Played> {
    let target = match &game.target {
        Some(t) => t.clone(),
        None => default_target(&game.builder)?.to_string(),
    };
    let targets = parse_targets(&target, n, game.t, game.variant)?;
    let mut builder = builder_by_name(&game.builder)?;
    let mut painter = make_painter(painter_name, n, &targets, seed)?;
    let state = GameState::new_game(n, game.t, targets, game.variant)?;
    let config = EngineConfig {
        completion_threshold: game.threshold,
        ..EngineConfig::default()
    };
    let outcome = run_game(builder.as_mut(), painter.as_mut(), state, &config)?;
    Ok(Played {
        outcome,
        bound: strategy_bound(&game.builder, n, game.t)?,
    })
}

fn cmd_play(args: PlayArgs) -> anyhow::Result<ExitCode> {
    let played = play_one(args.n, &args.game, &args.painter, args.seed)?;
    let out = &played.outcome;
    if let Some(path) = &args.out {
        fs::write(path, out.transcript().encode_pretty())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let queries = out.queries();
    let within = queries <= played.bound;
    let color = out
        .certificate
        .color()
        .map_or_else(|| "-".to_string(), |c| c.to_string());
    println!(
        "winner color {color}, structure size {}, queries {queries}, bound {}, within bound: {}",
        out.certificate.structure_size(),
        played.bound,
        if within { "yes" } else { "no" }
    );
    Ok(if within { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_solve(args: SolveArgs) -> anyhow::Result<ExitCode> {
    let targets = parse_targets(&args.target, args.n, args.t, args.variant)?;
    let config = SolverConfig {
        canonical: args.canonical,
        max_log2_states: args.max_log2_states,
    };
    let start = Instant::now();
    let result = solve_value(args.n, args.t, &targets, args.variant, &config)?;
    let doc = json!({
        "instance": { "n": args.n, "t": args.t, "targets": targets },
        "variant": args.variant,
        "value": result.value,
        "optimal_first_move": result.optimal_first_move,
        "nodes": result.nodes_explored,
        "cache_hits": result.cache_hits,
        "seconds": start.elapsed().as_secs_f64(),
    });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(ExitCode::SUCCESS)
}

fn parse_range(text: &str) -> anyhow::Result<Vec<usize>> {
    let parts: Vec<&str> = text.split(':').collect();
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| anyhow!(Error::Malformed(format!("bad number {s:?} in range {text:?}"))))
    };
    let (start, stop, step) = match parts.as_slice() {
        [a, b] => (num(a)?, num(b)?, 1),
        [a, b, c] => (num(a)?, num(b)?, num(c)?),
        _ => bail!(Error::Malformed(format!("range {text:?} is not start:stop[:step]"))),
    };
    if step == 0 || start > stop {
        bail!(Error::Malformed(format!("range {text:?} is empty")));
    }
    Ok((start..=stop).step_by(step).collect())
}

fn cmd_sweep(args: SweepArgs) -> anyhow::Result<ExitCode> {
    let ns = parse_range(&args.n_range)?;
    if args.painter.is_empty() || args.reps == 0 {
        bail!(Error::Malformed("sweep needs at least one painter and one repetition".into()));
    }
    let mut cells: Vec<(usize, String, Option<u64>)> = Vec::new();
    for &n in &ns {
        for p in &args.painter {
            if p == "random" {
                for s in args.seed..args.seed + args.reps {
                    cells.push((n, p.clone(), Some(s)));
                }
            } else {
                let seed = p.strip_prefix("random:").and_then(|s| s.parse().ok());
                cells.push((n, p.clone(), seed));
            }
        }
    }
    let rows: Vec<anyhow::Result<Vec<String>>> = cells
        .par_iter()
        .map(|(n, painter, seed)| {
            let played = play_one(*n, &args.game, painter, seed.unwrap_or(0))
                .with_context(|| format!("n = {n}, painter {painter}"))?;
            let out = &played.outcome;
            let queries = out.queries();
            let painter_label = match (painter.as_str(), seed) {
                ("random", Some(s)) => format!("random:{s}"),
                _ => painter.clone(),
            };
            Ok(vec![
                n.to_string(),
                args.game.t.to_string(),
                format!("{:?}", args.game.variant).to_lowercase(),
                args.game.builder.clone(),
                painter_label,
                seed.map(|s| s.to_string()).unwrap_or_default(),
                queries.to_string(),
                played.bound.to_string(),
                (queries <= played.bound).to_string(),
                out.certificate.color().map(|c| c.to_string()).unwrap_or_default(),
                out.certificate.structure_size().to_string(),
            ])
        })
        .collect();
    let sink: Box<dyn std::io::Write> = match &args.csv {
        Some(path) => Box::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        ),
        None => Box::new(std::io::stdout()),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(CSV_HEADER)?;
    let mut all_within = true;
    for row in rows {
        let row = row?;
        all_within &= row[8] == "true";
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(if all_within { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_verify(suite: &str) -> anyhow::Result<ExitCode> {
    let reports = run_suite(suite)?;
    let mut ok = true;
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        println!("{status} {}: {} checks, {} failures", r.suite, r.cases, r.failures);
        for note in &r.notes {
            println!("  {note}");
        }
        for m in &r.messages {
            println!("  failure: {m}");
        }
        ok &= r.passed();
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_formulas(args: FormulaArgs) -> anyhow::Result<ExitCode> {
    let (n, t) = (args.n, args.t);
    let ok = |r: online_ramsey::Result<usize>| r.ok();
    let mut doc = json!({
        "n": n,
        "t": t,
        "k_n": ok(k_of(n)),
        "tree_ramsey_spanning": ok(tree_ramsey(t, n)),
        "matching_coefficient": matching_coefficient(t).ok(),
        "matching_query_bound": ok(matching_query_bound(t, n)),
        "matching_cornering_lower_bound": ok(matching_cornering_lower_bound(t, n)),
        "tree2_value": (t == 2 && n >= 2).then(|| 2 * n - 3),
        "tree3_upper_bound": (t == 3 && n >= 3).then(|| 5 * (n - 1)),
        "tree3_cornering_lower_bound": ok(tree3_lower_bound(n)).filter(|_| t == 3),
    });
    if let Some(target) = &args.target {
        let targets = parse_targets(target, n, t, args.variant)?;
        doc["targets"] = json!(targets);
        doc["ramsey_number"] = json!(targets.ramsey_number());
        if let Some(rs) = targets.matching_sizes() {
            doc["ramsey_matching_number"] = json!(ramsey_matching_number(&rs).ok());
            if rs.iter().all(|&r| r == rs[0]) {
                doc["trivial_online_value"] = json!(trivial_online_value(t, rs[0]));
            }
        }
    }
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(ExitCode::SUCCESS)
}

/// Usage errors exit with 2, everything else that goes wrong with 1.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::BoardTooSmall(_)
            | Error::TooFewColors(_)
            | Error::TargetMismatch { .. }
            | Error::InvalidGoal(_)
            | Error::VertexOutOfRange { .. }
            | Error::ColorOutOfRange { .. }
            | Error::BelowRamsey { .. }
            | Error::Precondition(_)
            | Error::Intractable(_)
            | Error::Malformed(_),
        ) => 2,
        Some(_) => 1,
        None => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Play(a) => cmd_play(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify { suite } => cmd_verify(&suite),
        Command::Formulas(a) => cmd_formulas(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
