//! Multi-event total scoring: the mean of a player's event percentages,
//! dropping the single worst score when every event was played, and
//! excluding players below the participation minimum.

use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Rational64;

use crate::error::Error;
use crate::percent::Percentage;

/// One player's percentage in one event of a multi-event tournament.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventRecord {
    pub player_id: String,
    /// 1-based event number.
    pub event_index: u32,
    pub percentage: Percentage,
}

/// Total score for one player's records, in percent, exact.
///
/// * fewer than `min_events` events played: `Ok(None)` — the player is not
///   included in the total scoring table;
/// * all `total_events` played: the single worst score is dropped (exactly
///   one instance, even with duplicated minima) and the rest averaged;
/// * otherwise: the mean of all played events.
pub fn aggregate_total(
    records: &[EventRecord],
    total_events: u32,
    min_events: u32,
) -> Result<Option<Rational64>, Error> {
    let mut seen: Vec<u32> = Vec::with_capacity(records.len());
    for record in records {
        if record.event_index == 0 || record.event_index > total_events {
            return Err(Error::EventOutOfRange {
                event: record.event_index,
                total_events,
            });
        }
        if seen.contains(&record.event_index) {
            return Err(Error::DuplicateEvent {
                event: record.event_index,
            });
        }
        seen.push(record.event_index);
    }

    let played = records.len() as u32;
    if played < min_events || played == 0 {
        return Ok(None);
    }

    let mut sum: i64 = records
        .iter()
        .map(|r| i64::from(r.percentage.hundredths()))
        .sum();
    let mut count = i64::from(played);
    if played == total_events {
        let worst = records
            .iter()
            .map(|r| i64::from(r.percentage.hundredths()))
            .min()
            .expect("non-empty");
        sum -= worst;
        count -= 1;
    }
    Ok(Some(Rational64::new(sum, 100 * count)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn records(scores: &[&str]) -> Vec<EventRecord> {
        scores
            .iter()
            .enumerate()
            .map(|(i, s)| EventRecord {
                player_id: String::from("M1"),
                event_index: i as u32 + 1,
                percentage: s.parse().unwrap(),
            })
            .collect()
    }

    #[test]
    fn full_participation_drops_worst() {
        let total = aggregate_total(&records(&["60", "55", "50", "45", "40", "58"]), 6, 5)
            .unwrap()
            .unwrap();
        assert_eq!(total, Rational64::new(268, 5)); // 53.6
    }

    #[test]
    fn five_of_six_uses_all_scores() {
        let total = aggregate_total(&records(&["50", "50", "50", "50", "50"]), 6, 5)
            .unwrap()
            .unwrap();
        assert_eq!(total, Rational64::from_integer(50));
    }

    #[test]
    fn below_minimum_is_excluded() {
        assert_eq!(
            aggregate_total(&records(&["62.5", "48", "55", "51"]), 6, 5).unwrap(),
            None
        );
        assert_eq!(aggregate_total(&[], 6, 5).unwrap(), None);
    }

    #[test]
    fn duplicated_minimum_drops_one_instance() {
        let total = aggregate_total(&records(&["40", "40", "50", "50", "50", "50"]), 6, 5)
            .unwrap()
            .unwrap();
        // one 40 stays in: (40 + 4 * 50) / 5
        assert_eq!(total, Rational64::new(240, 5));
    }

    #[test]
    fn duplicate_event_index_is_rejected() {
        let mut rs = records(&["57.22", "50"]);
        rs[1].event_index = rs[0].event_index;
        assert_eq!(
            aggregate_total(&rs, 6, 1),
            Err(Error::DuplicateEvent { event: 1 })
        );
    }

    #[test]
    fn event_index_out_of_range_is_rejected() {
        let mut rs = records(&["57.22"]);
        rs[0].event_index = 7;
        let err = aggregate_total(&rs, 6, 5).unwrap_err();
        assert_eq!(format!("{err}"), "event 7 outside 1..=6");
    }
}
