//! Assessment reports: ranking summary as JSON or an aligned text table.

use num_rational::Rational64;
use num_traits::Signed;
use serde_json::{json, Value};

use pairscore_core::{ComparisonOutcome, GroupAssessment, Label};

/// Everything a finished assessment run reports: the per-group figures, the
/// weighted (centroid) ranking, the mean-percentage ranking, and whether the
/// two disagree.
#[derive(Debug, Clone)]
pub struct Report {
    pub assessments: Vec<GroupAssessment>,
    pub outcome: ComparisonOutcome,
    /// Tie classes by mean percentage, best first.
    pub mean_ranking: Vec<Vec<String>>,
    /// True iff the weighted and mean rankings differ as ordered partitions.
    pub divergence: bool,
}

impl Report {
    pub fn build(assessments: Vec<GroupAssessment>, outcome: ComparisonOutcome) -> Report {
        let mean_ranking = rank_by_mean(&assessments);
        let divergence = outcome.classes != mean_ranking;
        Report {
            assessments,
            outcome,
            mean_ranking,
            divergence,
        }
    }

    pub fn to_json(&self, precision: usize) -> Value {
        let groups: Vec<Value> = self
            .assessments
            .iter()
            .map(|a| {
                let membership = a.membership.values();
                json!({
                    "group": a.group_id,
                    "counts": {
                        "F": a.counts.count(Label::F),
                        "D": a.counts.count(Label::D),
                        "C": a.counts.count(Label::C),
                        "B": a.counts.count(Label::B),
                        "A": a.counts.count(Label::A),
                        "total": a.counts.n(),
                    },
                    "membership": {
                        "fractions": membership.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "decimals": membership
                            .iter()
                            .map(|v| decimal_value(*v, precision))
                            .collect::<Vec<_>>(),
                    },
                    "x_c": {
                        "fraction": a.centroid.x().to_string(),
                        "decimal": decimal_value(a.centroid.x(), precision),
                    },
                    "y_c": {
                        "fraction": a.centroid.y().to_string(),
                        "decimal": decimal_value(a.centroid.y(), precision),
                    },
                    "mean": {
                        "fraction": a.mean.to_string(),
                        "decimal": decimal_value(a.mean, precision),
                    },
                })
            })
            .collect();
        json!({
            "groups": groups,
            "weighted_ranking": self.outcome.classes,
            "mean_ranking": self.mean_ranking,
            "divergence": self.divergence,
        })
    }

    /// Ranking-only view, for the `compare` subcommand.
    pub fn ranking_json(&self) -> Value {
        json!({
            "weighted_ranking": self.outcome.classes,
            "weighted_rules": self.outcome.rules.iter().map(|r| r.token()).collect::<Vec<_>>(),
            "mean_ranking": self.mean_ranking,
            "divergence": self.divergence,
        })
    }

    pub fn to_text(&self, precision: usize) -> String {
        let header = ["group", "n", "A", "B", "C", "D", "F", "x_c", "y_c", "mean"];
        let rows: Vec<[String; 10]> = self
            .assessments
            .iter()
            .map(|a| {
                [
                    a.group_id.clone(),
                    a.counts.n().to_string(),
                    a.counts.count(Label::A).to_string(),
                    a.counts.count(Label::B).to_string(),
                    a.counts.count(Label::C).to_string(),
                    a.counts.count(Label::D).to_string(),
                    a.counts.count(Label::F).to_string(),
                    decimal_string(a.centroid.x(), precision),
                    decimal_string(a.centroid.y(), precision),
                    decimal_string(a.mean, precision),
                ]
            })
            .collect();
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row.iter()) {
                *w = (*w).max(cell.len());
            }
        }
        let format_row = |cells: &[String]| -> String {
            let mut line = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                if i + 1 < cells.len() {
                    for _ in cell.len()..widths[i] {
                        line.push(' ');
                    }
                }
            }
            line
        };

        let mut out = String::new();
        out.push_str(&format_row(&header.map(String::from)));
        out.push('\n');
        for row in &rows {
            out.push_str(&format_row(row));
            out.push('\n');
        }
        out.push('\n');
        out.push_str(&self.ranking_text());
        out
    }

    /// The ranking lines alone, for the `compare` subcommand.
    pub fn ranking_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "weighted ranking: {}\n",
            format_ranking(&self.outcome.classes)
        ));
        out.push_str(&format!(
            "mean ranking:     {}\n",
            format_ranking(&self.mean_ranking)
        ));
        out.push_str(if self.divergence {
            "rankings diverge\n"
        } else {
            "rankings agree\n"
        });
        out
    }
}

/// Tie classes by exact mean percentage, best first, input order within ties.
fn rank_by_mean(assessments: &[GroupAssessment]) -> Vec<Vec<String>> {
    let mut order: Vec<usize> = (0..assessments.len()).collect();
    order.sort_by(|&i, &j| assessments[j].mean.cmp(&assessments[i].mean));
    let mut classes: Vec<Vec<String>> = Vec::new();
    let mut last_mean: Option<Rational64> = None;
    for index in order {
        let a = &assessments[index];
        if last_mean == Some(a.mean) {
            classes.last_mut().expect("non-empty").push(a.group_id.clone());
        } else {
            classes.push(vec![a.group_id.clone()]);
            last_mean = Some(a.mean);
        }
    }
    classes
}

/// `1. C2  2. C1`, ties sharing a competition rank: `1. a, b  3. c`.
fn format_ranking(classes: &[Vec<String>]) -> String {
    let mut parts = Vec::new();
    let mut position = 1;
    for class in classes {
        parts.push(format!("{position}. {}", class.join(", ")));
        position += class.len();
    }
    parts.join("  ")
}

/// Fixed-point decimal text of an exact rational, halves rounding away from
/// zero. `decimal_string(41/18, 3)` is `"2.278"`.
pub fn decimal_string(value: Rational64, places: usize) -> String {
    let scale = 10i128.pow(places as u32);
    let num = i128::from(*value.numer());
    let den = i128::from(*value.denom());
    let negative = value.is_negative();
    let (num, den) = (num.abs(), den.abs());
    let scaled = (num * scale * 2 + den) / (2 * den);
    let sign = if negative && scaled != 0 { "-" } else { "" };
    if places == 0 {
        format!("{sign}{scaled}")
    } else {
        format!(
            "{sign}{}.{:0places$}",
            scaled / scale,
            scaled % scale,
            places = places
        )
    }
}

/// The same rounded decimal as a JSON number (trailing zeros dropped by the
/// number representation).
fn decimal_value(value: Rational64, places: usize) -> Value {
    let text = decimal_string(value, places);
    Value::from(text.parse::<f64>().expect("fixed-point decimal"))
}
