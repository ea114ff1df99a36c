//! Duplicate-bridge matchpoint scoring: two matchpoints per pair beaten on a
//! board, one per pair tied.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::percent::Percentage;

/// Seating side of a pair on a board. NS and EW form separate comparison
/// pools per board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    NS,
    EW,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::NS => "NS",
            Direction::EW => "EW",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Direction {
    type Err = ();

    fn from_str(text: &str) -> Result<Self, ()> {
        match text {
            "NS" => Ok(Direction::NS),
            "EW" => Ok(Direction::EW),
            _ => Err(()),
        }
    }
}

/// One raw table result: the bridge score of a board from the NS point of
/// view, attributed to the pair that sat in `direction`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoardResult {
    pub board_id: String,
    pub pair_id: String,
    pub direction: Direction,
    pub score_ns: i64,
}

/// A pair's entry in a comparison pool.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldEntry {
    pub pair_id: String,
    /// Score oriented to the owning pair: NS keeps `score_ns`, EW negates it.
    pub comparable_score: i64,
}

/// The comparison pool of one board and one direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoardField {
    pub board_id: String,
    pub direction: Direction,
    pub entries: Vec<FieldEntry>,
}

impl BoardField {
    /// Splits raw results into per-(board, direction) pools, negating EW
    /// scores so that higher is always better for the owning pair. Fields
    /// come back sorted by board id then direction; entries keep input order.
    pub fn partition(results: &[BoardResult]) -> Vec<BoardField> {
        let mut fields: Vec<BoardField> = Vec::new();
        for result in results {
            let comparable_score = match result.direction {
                Direction::NS => result.score_ns,
                Direction::EW => -result.score_ns,
            };
            let entry = FieldEntry {
                pair_id: result.pair_id.clone(),
                comparable_score,
            };
            match fields
                .iter_mut()
                .find(|f| f.board_id == result.board_id && f.direction == result.direction)
            {
                Some(field) => field.entries.push(entry),
                None => fields.push(BoardField {
                    board_id: result.board_id.clone(),
                    direction: result.direction,
                    entries: alloc::vec![entry],
                }),
            }
        }
        fields.sort_by(|a, b| (&a.board_id, a.direction).cmp(&(&b.board_id, b.direction)));
        fields
    }

    /// Awards matchpoints over this pool: `2 × |worse| + 1 × |equal|`
    /// (excluding self) out of a maximum of `2(n − 1)`. Awards come back in
    /// entry order and always sum to `n(n − 1)`.
    ///
    /// A single-entry field carries no comparison information; its award has
    /// `max_matchpoints = 0` and no percentage.
    pub fn matchpoints(&self) -> Vec<MatchpointAward> {
        let n = self.entries.len();
        let max = if n > 1 { 2 * (n as u32 - 1) } else { 0 };
        let mut sorted: Vec<usize> = (0..n).collect();
        sorted.sort_by_key(|&i| self.entries[i].comparable_score);

        let mut matchpoints = alloc::vec![0u32; n];
        let mut start = 0;
        while start < n {
            let score = self.entries[sorted[start]].comparable_score;
            let mut end = start;
            while end < n && self.entries[sorted[end]].comparable_score == score {
                end += 1;
            }
            // `start` entries scored worse, `end - start - 1` tied
            let award = 2 * start as u32 + (end - start - 1) as u32;
            for &index in &sorted[start..end] {
                matchpoints[index] = award;
            }
            start = end;
        }

        self.entries
            .iter()
            .zip(matchpoints)
            .map(|(entry, mp)| MatchpointAward {
                pair_id: entry.pair_id.clone(),
                matchpoints: mp,
                max_matchpoints: max,
                percentage: if max > 0 {
                    Some(ratio_as_percentage(u64::from(mp), u64::from(max)))
                } else {
                    None
                },
            })
            .collect()
    }
}

/// Matchpoints one pair earned on one board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchpointAward {
    pub pair_id: String,
    pub matchpoints: u32,
    /// `2(n − 1)` for a field of size `n`; zero marks a board with nothing
    /// to compare against.
    pub max_matchpoints: u32,
    /// `matchpoints / max_matchpoints` to the nearest hundredth; absent on
    /// no-comparison boards.
    pub percentage: Option<Percentage>,
}

impl MatchpointAward {
    pub fn has_comparison(&self) -> bool {
        self.max_matchpoints > 0
    }
}

/// Nearest-hundredth percentage of `num / den`, halves rounding up.
fn ratio_as_percentage(num: u64, den: u64) -> Percentage {
    debug_assert!(den > 0 && num <= den);
    let hundredths = (num * 10_000 * 2 + den) / (2 * den);
    Percentage::from_hundredths(hundredths as u32).expect("ratio <= 1")
}

/// Total matchpoints over total possible, as a percentage, for one pair's
/// awards across a session. Boards without comparison information are
/// excluded; a session with none is an error.
pub fn session_percentage(awards: &[MatchpointAward]) -> Result<Percentage, Error> {
    let mut earned: u64 = 0;
    let mut possible: u64 = 0;
    for award in awards.iter().filter(|a| a.has_comparison()) {
        earned += u64::from(award.matchpoints);
        possible += u64::from(award.max_matchpoints);
    }
    if possible == 0 {
        return Err(Error::NoScorableBoards);
    }
    Ok(ratio_as_percentage(earned, possible))
}
