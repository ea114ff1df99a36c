//! Command-line front end. Exit codes: 0 success, 1 data or domain error,
//! 2 usage error. Diagnostics go to stderr; reports go to stdout unless
//! `--out` is given. No environment variables are consulted, so identical
//! invocations on identical files produce byte-identical output.

use std::fs::{self, File};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use pairscore_core::{
    aggregate_total, assess_group, rank_groups, session_percentage, BandScheme, BoardField,
    Direction, EventRecord, GroupAssessment, MatchpointAward, Percentage,
};

use crate::chart::{render_bar_chart, render_centroid_plot};
use crate::ingest::{
    parse_bands, parse_boards, parse_events, parse_results, write_results, ResultsRow,
};
use crate::report::{decimal_string, Report};

#[derive(Parser)]
#[command(
    name = "pairscore",
    version,
    about = "Assess and rank groups of bridge pairs from their percentage scores"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Assess each group in a results file and rank the groups
    Assess(AssessArgs),
    /// Rank groups only: the assessment limited to its ranking output
    Compare(AssessArgs),
    /// Score raw board results into matchpoints and session percentages
    Score(ScoreArgs),
    /// Build the multi-event total scoring table
    Aggregate(AggregateArgs),
    /// Render the membership bar charts and the centroid plot
    Plot(PlotArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AssessArgs {
    /// Results file: CSV with header `group,pair_id,percentage`
    results: PathBuf,
    /// Band scheme config; the built-in matchpoint bands when absent
    #[arg(long)]
    bands: Option<PathBuf>,
    /// Decimal places for derived figures
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(0..=12))]
    precision: u8,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ScoreArgs {
    /// Board results file: CSV with header `board,pair_id,direction,score_ns`
    boards: PathBuf,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct AggregateArgs {
    /// Event records file: CSV with header `player,event,percentage`
    events: PathBuf,
    /// Events in the tournament
    #[arg(long, default_value_t = 6)]
    total_events: u32,
    /// Minimum events played to be included
    #[arg(long, default_value_t = 5)]
    min_events: u32,
    /// Decimal places for totals
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(0..=12))]
    precision: u8,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct PlotArgs {
    /// Results file: CSV with header `group,pair_id,percentage`
    results: PathBuf,
    /// Band scheme config; the built-in matchpoint bands when absent
    #[arg(long)]
    bands: Option<PathBuf>,
    /// Write one membership bar chart per group to this SVG path
    #[arg(long)]
    bars: Option<PathBuf>,
    /// Write the centroid plot of all groups to this SVG path
    #[arg(long)]
    centroids: Option<PathBuf>,
}

enum CommandError {
    Usage(String),
    Failed(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for CommandError {
    fn from(error: E) -> Self {
        CommandError::Failed(error.into())
    }
}

/// Parses the command line, runs the command, and returns the process exit
/// code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(error) => {
            let code = if error.use_stderr() { 2 } else { 0 };
            let _ = error.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Assess(args) => cmd_assess(&args, false),
        Command::Compare(args) => cmd_assess(&args, true),
        Command::Score(args) => cmd_score(&args),
        Command::Aggregate(args) => cmd_aggregate(&args),
        Command::Plot(args) => cmd_plot(&args),
    };
    match result {
        Ok(()) => 0,
        Err(CommandError::Usage(message)) => {
            eprintln!("usage error: {message}");
            2
        }
        Err(CommandError::Failed(error)) => {
            eprintln!("error: {error:#}");
            1
        }
    }
}

fn open(path: &Path) -> anyhow::Result<File> {
    File::open(path).with_context(|| format!("cannot open {}", path.display()))
}

fn label(path: &Path) -> String {
    path.display().to_string()
}

fn load_scheme(bands: Option<&PathBuf>) -> anyhow::Result<BandScheme> {
    match bands {
        None => Ok(BandScheme::default()),
        Some(path) => Ok(parse_bands(&label(path), open(path)?)?),
    }
}

/// Groups result rows by their `group` column, first-appearance order.
fn group_scores(rows: &[ResultsRow]) -> Vec<(String, Vec<Percentage>)> {
    let mut groups: Vec<(String, Vec<Percentage>)> = Vec::new();
    for row in rows {
        match groups.iter_mut().find(|(id, _)| *id == row.group) {
            Some((_, scores)) => scores.push(row.percentage),
            None => groups.push((row.group.clone(), vec![row.percentage])),
        }
    }
    groups
}

fn load_assessments(
    results: &Path,
    bands: Option<&PathBuf>,
) -> anyhow::Result<Vec<GroupAssessment>> {
    let rows = parse_results(&label(results), open(results)?)?;
    if rows.is_empty() {
        bail!("{}: no data rows", results.display());
    }
    let scheme = load_scheme(bands)?;
    group_scores(&rows)
        .iter()
        .map(|(id, scores)| Ok(assess_group(id, scores, &scheme)?))
        .collect()
}

fn emit(out: Option<&PathBuf>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{content}");
            io::stdout().flush().context("cannot write to stdout")
        }
    }
}

fn json_text(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

fn cmd_assess(args: &AssessArgs, ranking_only: bool) -> Result<(), CommandError> {
    let assessments = load_assessments(&args.results, args.bands.as_ref())?;
    let outcome = rank_groups(&assessments).map_err(anyhow::Error::from)?;
    let report = Report::build(assessments, outcome);
    let precision = usize::from(args.precision);
    let content = match (args.output.format, ranking_only) {
        (Format::Json, false) => json_text(&report.to_json(precision)),
        (Format::Json, true) => json_text(&report.ranking_json()),
        (Format::Text, false) => report.to_text(precision),
        (Format::Text, true) => report.ranking_text(),
    };
    emit(args.output.out.as_ref(), &content)?;
    Ok(())
}

fn session_rows(fields: &[(BoardField, Vec<MatchpointAward>)]) -> Vec<ResultsRow> {
    let mut rows = Vec::new();
    for direction in [Direction::NS, Direction::EW] {
        let mut pairs: Vec<&str> = Vec::new();
        for (field, _) in fields.iter().filter(|(f, _)| f.direction == direction) {
            for entry in &field.entries {
                if !pairs.contains(&entry.pair_id.as_str()) {
                    pairs.push(&entry.pair_id);
                }
            }
        }
        pairs.sort_unstable();
        for pair in pairs {
            let awards: Vec<MatchpointAward> = fields
                .iter()
                .filter(|(f, _)| f.direction == direction)
                .flat_map(|(_, awards)| awards.iter())
                .filter(|a| a.pair_id == pair)
                .cloned()
                .collect();
            match session_percentage(&awards) {
                Ok(percentage) => rows.push(ResultsRow {
                    group: direction.as_str().to_string(),
                    pair_id: pair.to_string(),
                    percentage,
                }),
                Err(_) => eprintln!(
                    "note: pair {pair} ({direction}) has no scorable boards and is excluded"
                ),
            }
        }
    }
    rows
}

fn cmd_score(args: &ScoreArgs) -> Result<(), CommandError> {
    let results = parse_boards(&label(&args.boards), open(&args.boards)?)?;
    let fields: Vec<(BoardField, Vec<MatchpointAward>)> = BoardField::partition(&results)
        .into_iter()
        .map(|field| {
            let awards = field.matchpoints();
            (field, awards)
        })
        .collect();
    let sessions = session_rows(&fields);
    if sessions.is_empty() {
        return Err(anyhow::anyhow!("no scorable boards in {}", args.boards.display()).into());
    }

    let content = match args.output.format {
        Format::Text => {
            // session percentages in the exact `assess` input format
            let mut bytes = Vec::new();
            write_results(&mut bytes, &sessions).context("serialize sessions")?;
            String::from_utf8(bytes).expect("csv output is utf-8")
        }
        Format::Json => {
            let awards: Vec<serde_json::Value> = fields
                .iter()
                .flat_map(|(field, awards)| {
                    awards.iter().map(move |award| {
                        json!({
                            "board": field.board_id,
                            "direction": field.direction.as_str(),
                            "pair_id": award.pair_id,
                            "matchpoints": award.matchpoints,
                            "max_matchpoints": award.max_matchpoints,
                            "percentage": award.percentage.map(Percentage::as_f64),
                        })
                    })
                })
                .collect();
            let sessions: Vec<serde_json::Value> = sessions
                .iter()
                .map(|row| {
                    json!({
                        "group": row.group,
                        "pair_id": row.pair_id,
                        "percentage": row.percentage.as_f64(),
                    })
                })
                .collect();
            json_text(&json!({ "awards": awards, "sessions": sessions }))
        }
    };
    emit(args.output.out.as_ref(), &content)?;
    Ok(())
}

fn cmd_aggregate(args: &AggregateArgs) -> Result<(), CommandError> {
    if args.min_events > args.total_events {
        return Err(CommandError::Usage(format!(
            "--min-events {} exceeds --total-events {}",
            args.min_events, args.total_events
        )));
    }
    let records = parse_events(&label(&args.events), open(&args.events)?, args.total_events)?;

    let mut players: Vec<&str> = Vec::new();
    for record in &records {
        if !players.contains(&record.player_id.as_str()) {
            players.push(&record.player_id);
        }
    }

    struct Included {
        player: String,
        events: usize,
        total: num_rational::Rational64,
    }
    struct Excluded {
        player: String,
        events: usize,
        reason: String,
    }
    let mut included: Vec<Included> = Vec::new();
    let mut excluded: Vec<Excluded> = Vec::new();
    for player in players {
        let mine: Vec<EventRecord> = records
            .iter()
            .filter(|r| r.player_id == player)
            .cloned()
            .collect();
        match aggregate_total(&mine, args.total_events, args.min_events)
            .map_err(anyhow::Error::from)?
        {
            Some(total) => included.push(Included {
                player: player.to_string(),
                events: mine.len(),
                total,
            }),
            None => excluded.push(Excluded {
                player: player.to_string(),
                events: mine.len(),
                reason: format!(
                    "played {} of {} events (minimum {})",
                    mine.len(),
                    args.total_events,
                    args.min_events
                ),
            }),
        }
    }

    let precision = usize::from(args.precision);
    let content = match args.output.format {
        Format::Text => {
            let mut out = String::new();
            let width = included
                .iter()
                .map(|i| i.player.len())
                .chain(excluded.iter().map(|e| e.player.len()))
                .chain(["player".len()])
                .max()
                .unwrap_or(6);
            out.push_str(&format!("{:width$}  events  total\n", "player"));
            for entry in &included {
                out.push_str(&format!(
                    "{:width$}  {:>6}  {}\n",
                    entry.player,
                    entry.events,
                    decimal_string(entry.total, precision),
                ));
            }
            if !excluded.is_empty() {
                out.push_str("\nexcluded:\n");
                for entry in &excluded {
                    out.push_str(&format!("{}: {}\n", entry.player, entry.reason));
                }
            }
            out
        }
        Format::Json => json_text(&json!({
            "included": included
                .iter()
                .map(|entry| {
                    json!({
                        "player": entry.player,
                        "events": entry.events,
                        "total": decimal_string(entry.total, precision)
                            .parse::<f64>()
                            .expect("fixed-point decimal"),
                    })
                })
                .collect::<Vec<_>>(),
            "excluded": excluded
                .iter()
                .map(|entry| {
                    json!({
                        "player": entry.player,
                        "events": entry.events,
                        "reason": entry.reason,
                    })
                })
                .collect::<Vec<_>>(),
        })),
    };
    emit(args.output.out.as_ref(), &content)?;
    Ok(())
}

/// `charts.svg` plus group `C1` becomes `charts-C1.svg`.
fn path_for_group(path: &Path, group: &str) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("chart");
    let name = match path.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{stem}-{group}.{ext}"),
        None => format!("{stem}-{group}"),
    };
    path.with_file_name(name)
}

fn cmd_plot(args: &PlotArgs) -> Result<(), CommandError> {
    if args.bars.is_none() && args.centroids.is_none() {
        return Err(CommandError::Usage(
            "pass --bars <path> and/or --centroids <path>".to_string(),
        ));
    }
    let assessments = load_assessments(&args.results, args.bands.as_ref())?;

    if let Some(path) = &args.bars {
        if let [only] = assessments.as_slice() {
            fs::write(path, render_bar_chart(&only.membership))
                .with_context(|| format!("cannot write {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        } else {
            for assessment in &assessments {
                let target = path_for_group(path, &assessment.group_id);
                fs::write(&target, render_bar_chart(&assessment.membership))
                    .with_context(|| format!("cannot write {}", target.display()))?;
                eprintln!("wrote {}", target.display());
            }
        }
    }

    if let Some(path) = &args.centroids {
        let points: Vec<(String, pairscore_core::Centroid)> = assessments
            .iter()
            .map(|a| (a.group_id.clone(), a.centroid))
            .collect();
        let svg = render_centroid_plot(&points).map_err(anyhow::Error::from)?;
        fs::write(path, svg).with_context(|| format!("cannot write {}", path.display()))?;
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}
