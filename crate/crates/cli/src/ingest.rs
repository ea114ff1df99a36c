//! CSV input formats with strict validation.
//!
//! All files are UTF-8, comma-separated, first line an exact case-sensitive
//! header, `\n` or `\r\n` line endings, fields unquoted unless they contain
//! commas. Percentages are decimal text with at most two fraction digits.
//! Parsing never panics: every malformed input yields a [`ParseFailure`]
//! with the 1-based line it was found on.

use std::fmt;
use std::io;

use pairscore_core::{Band, BandScheme, BoardResult, Direction, EventRecord, Label, Percentage};

/// Where and why an input file was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFailure {
    pub file: String,
    /// 1-based line number; whole-file problems point at the header line.
    pub line: u64,
    pub reason: String,
}

impl ParseFailure {
    fn new(file: &str, line: u64, reason: impl Into<String>) -> Self {
        ParseFailure {
            file: file.to_string(),
            line: line.max(1),
            reason: reason.into(),
        }
    }
}

impl fmt::Display for ParseFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.file, self.line, self.reason)
    }
}

impl std::error::Error for ParseFailure {}

/// One line of an assessment input file: a group, a pair within it, and the
/// pair's percentage score.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultsRow {
    pub group: String,
    pub pair_id: String,
    pub percentage: Percentage,
}

struct Rows<R: io::Read> {
    file: String,
    reader: csv::Reader<R>,
}

impl<R: io::Read> Rows<R> {
    fn open(file: &str, input: R, header: &[&str]) -> Result<Self, ParseFailure> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(input);
        let found = reader
            .headers()
            .map_err(|e| csv_failure(file, &e))?
            .clone();
        if found.iter().ne(header.iter().copied()) {
            return Err(ParseFailure::new(
                file,
                1,
                format!(
                    "expected header {:?}, found {:?}",
                    header.join(","),
                    found.iter().collect::<Vec<_>>().join(",")
                ),
            ));
        }
        Ok(Rows {
            file: file.to_string(),
            reader,
        })
    }

    fn fail(&self, line: u64, reason: impl Into<String>) -> ParseFailure {
        ParseFailure::new(&self.file, line, reason)
    }

    /// (line, fields) for each data record.
    fn records(&mut self) -> Result<Vec<(u64, csv::StringRecord)>, ParseFailure> {
        let file = self.file.clone();
        self.reader
            .records()
            .map(|record| {
                let record = record.map_err(|e| csv_failure(&file, &e))?;
                let line = record.position().map(|p| p.line()).unwrap_or(1);
                Ok((line, record))
            })
            .collect()
    }
}

fn csv_failure(file: &str, error: &csv::Error) -> ParseFailure {
    let line = match error.kind() {
        csv::ErrorKind::Utf8 { pos, .. } => pos.as_ref().map(|p| p.line()).unwrap_or(1),
        csv::ErrorKind::UnequalLengths { pos, .. } => {
            pos.as_ref().map(|p| p.line()).unwrap_or(1)
        }
        _ => 1,
    };
    ParseFailure::new(file, line, error.to_string())
}

fn parse_percentage(rows: &Rows<impl io::Read>, line: u64, text: &str) -> Result<Percentage, ParseFailure> {
    text.parse::<Percentage>()
        .map_err(|e| rows.fail(line, e.to_string()))
}

fn require_nonempty(
    rows: &Rows<impl io::Read>,
    line: u64,
    name: &str,
    value: &str,
) -> Result<String, ParseFailure> {
    if value.is_empty() {
        Err(rows.fail(line, format!("{name} must not be empty")))
    } else {
        Ok(value.to_string())
    }
}

/// Reads a `group,pair_id,percentage` file. Duplicate `(group, pair_id)`
/// keys are rejected.
pub fn parse_results(file: &str, input: impl io::Read) -> Result<Vec<ResultsRow>, ParseFailure> {
    let mut rows = Rows::open(file, input, &["group", "pair_id", "percentage"])?;
    let mut out: Vec<ResultsRow> = Vec::new();
    for (line, record) in rows.records()? {
        let group = require_nonempty(&rows, line, "group", &record[0])?;
        let pair_id = require_nonempty(&rows, line, "pair_id", &record[1])?;
        if out.iter().any(|r| r.group == group && r.pair_id == pair_id) {
            return Err(rows.fail(line, format!("duplicate pair {pair_id:?} in group {group:?}")));
        }
        let percentage = parse_percentage(&rows, line, &record[2])?;
        out.push(ResultsRow {
            group,
            pair_id,
            percentage,
        });
    }
    Ok(out)
}

/// Reads a `board,pair_id,direction,score_ns` file. Direction tokens are
/// exactly `NS` / `EW`; duplicate `(board, pair_id, direction)` keys are
/// rejected.
pub fn parse_boards(file: &str, input: impl io::Read) -> Result<Vec<BoardResult>, ParseFailure> {
    let mut rows = Rows::open(file, input, &["board", "pair_id", "direction", "score_ns"])?;
    let mut out: Vec<BoardResult> = Vec::new();
    for (line, record) in rows.records()? {
        let board_id = require_nonempty(&rows, line, "board", &record[0])?;
        let pair_id = require_nonempty(&rows, line, "pair_id", &record[1])?;
        let direction: Direction = record[2]
            .parse()
            .map_err(|()| rows.fail(line, format!("direction must be NS or EW, found {:?}", &record[2])))?;
        let score_ns: i64 = record[3]
            .parse()
            .map_err(|_| rows.fail(line, format!("score_ns must be an integer, found {:?}", &record[3])))?;
        if out
            .iter()
            .any(|r| r.board_id == board_id && r.pair_id == pair_id && r.direction == direction)
        {
            return Err(rows.fail(
                line,
                format!("duplicate result for board {board_id:?}, pair {pair_id:?}, {direction}"),
            ));
        }
        out.push(BoardResult {
            board_id,
            pair_id,
            direction,
            score_ns,
        });
    }
    Ok(out)
}

/// Reads a `player,event,percentage` file with event numbers in
/// `1..=total_events`. Duplicate `(player, event)` keys are rejected.
pub fn parse_events(
    file: &str,
    input: impl io::Read,
    total_events: u32,
) -> Result<Vec<EventRecord>, ParseFailure> {
    let mut rows = Rows::open(file, input, &["player", "event", "percentage"])?;
    let mut out: Vec<EventRecord> = Vec::new();
    for (line, record) in rows.records()? {
        let player_id = require_nonempty(&rows, line, "player", &record[0])?;
        let event_index: u32 = record[1]
            .parse()
            .ok()
            .filter(|&e| e >= 1 && e <= total_events)
            .ok_or_else(|| {
                rows.fail(
                    line,
                    format!("event must be in 1..={total_events}, found {:?}", &record[1]),
                )
            })?;
        if out
            .iter()
            .any(|r| r.player_id == player_id && r.event_index == event_index)
        {
            return Err(rows.fail(
                line,
                format!("duplicate record for player {player_id:?}, event {event_index}"),
            ));
        }
        let percentage = parse_percentage(&rows, line, &record[2])?;
        out.push(EventRecord {
            player_id,
            event_index,
            percentage,
        });
    }
    Ok(out)
}

/// Reads a `label,lower,lower_inclusive,upper,upper_inclusive` band config —
/// one row per label, booleans exactly `true` / `false` — and validates the
/// partition invariant. Partition failures name the offending boundary.
pub fn parse_bands(file: &str, input: impl io::Read) -> Result<BandScheme, ParseFailure> {
    let mut rows = Rows::open(
        file,
        input,
        &["label", "lower", "lower_inclusive", "upper", "upper_inclusive"],
    )?;
    let mut bands: Vec<Band> = Vec::new();
    let mut last_line = 1;
    for (line, record) in rows.records()? {
        last_line = line;
        let label: Label = record[0]
            .parse()
            .map_err(|_| rows.fail(line, format!("label must be one of A,B,C,D,F, found {:?}", &record[0])))?;
        if bands.iter().any(|b| b.label == label) {
            return Err(rows.fail(line, format!("duplicate band for label {label}")));
        }
        let boolean = |field: usize| -> Result<bool, ParseFailure> {
            match &record[field] {
                "true" => Ok(true),
                "false" => Ok(false),
                other => Err(rows.fail(line, format!("expected true or false, found {other:?}"))),
            }
        };
        bands.push(Band {
            label,
            lower: parse_percentage(&rows, line, &record[1])?,
            lower_inclusive: boolean(2)?,
            upper: parse_percentage(&rows, line, &record[3])?,
            upper_inclusive: boolean(4)?,
        });
    }
    let bands: [Band; 5] = bands.try_into().map_err(|bands: Vec<Band>| {
        rows.fail(
            last_line,
            format!("expected exactly 5 bands, found {}", bands.len()),
        )
    })?;
    BandScheme::new(bands).map_err(|e| rows.fail(1, e.to_string()))
}

/// Writes rows back in the exact `parse_results` format.
pub fn write_results(out: &mut impl io::Write, rows: &[ResultsRow]) -> io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["group", "pair_id", "percentage"])?;
    for row in rows {
        writer.write_record([
            row.group.as_str(),
            row.pair_id.as_str(),
            &row.percentage.to_string(),
        ])?;
    }
    writer.flush()
}

/// Writes board results back in the exact `parse_boards` format.
pub fn write_boards(out: &mut impl io::Write, results: &[BoardResult]) -> io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["board", "pair_id", "direction", "score_ns"])?;
    for result in results {
        writer.write_record([
            result.board_id.as_str(),
            result.pair_id.as_str(),
            result.direction.as_str(),
            &result.score_ns.to_string(),
        ])?;
    }
    writer.flush()
}

/// Writes event records back in the exact `parse_events` format.
pub fn write_events(out: &mut impl io::Write, records: &[EventRecord]) -> io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["player", "event", "percentage"])?;
    for record in records {
        writer.write_record([
            record.player_id.as_str(),
            &record.event_index.to_string(),
            &record.percentage.to_string(),
        ])?;
    }
    writer.flush()
}

/// Writes a band scheme back in the exact `parse_bands` format.
pub fn write_bands(out: &mut impl io::Write, scheme: &BandScheme) -> io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["label", "lower", "lower_inclusive", "upper", "upper_inclusive"])?;
    for band in scheme.bands() {
        writer.write_record([
            band.label.as_str(),
            &band.lower.to_string(),
            &band.lower_inclusive.to_string(),
            &band.upper.to_string(),
            &band.upper_inclusive.to_string(),
        ])?;
    }
    writer.flush()
}
