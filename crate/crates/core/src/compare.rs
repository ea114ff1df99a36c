//! The centroid comparison criterion and its n-ary ranking extension.

use alloc::vec::Vec;
use alloc::{string::String, vec};
use core::cmp::Ordering;

use num_rational::Rational64;

use crate::error::Error;
use crate::group::{Centroid, GroupAssessment};

/// Tolerance for deciding that two `x_c` values coincide when exact equality
/// does not already hold (centroids derived from counts compare exactly; the
/// tolerance only matters for data that arrived through decimals).
pub const XC_EPSILON: f64 = 1e-9;

/// Which branch of the criterion decided an adjacent pair in the ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// The group with the higher `x_c` performs better.
    HigherXc,
    /// Same `x_c`, at or above the midpoint 5/2: higher `y_c` wins
    /// (closer to the ideal vertex).
    HigherYcHighXc,
    /// Same `x_c`, below the midpoint: lower `y_c` wins
    /// (farther from the worst vertex).
    LowerYcLowXc,
    /// Both coordinates equal.
    ExactTie,
}

impl Rule {
    pub fn token(self) -> &'static str {
        match self {
            Rule::HigherXc => "higher_xc",
            Rule::HigherYcHighXc => "higher_yc_at_xc_ge_2.5",
            Rule::LowerYcLowXc => "lower_yc_at_xc_lt_2.5",
            Rule::ExactTie => "exact_tie",
        }
    }
}

/// A ranking of groups: tie classes best first, plus the rule that separated
/// each adjacent pair of classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonOutcome {
    /// Tie classes, best first. Groups inside a class tied exactly and keep
    /// their input order.
    pub classes: Vec<Vec<String>>,
    /// `rules[i]` separated `classes[i]` from `classes[i + 1]`.
    pub rules: Vec<Rule>,
}

impl ComparisonOutcome {
    /// The sole best group, if the top class is a singleton.
    pub fn winner(&self) -> Option<&str> {
        match self.classes.first() {
            Some(class) if class.len() == 1 && self.classes.len() > 1 => {
                Some(class[0].as_str())
            }
            _ => None,
        }
    }

    /// For a two-group comparison: the rule that decided it.
    pub fn pairwise_rule(&self) -> Rule {
        self.rules.first().copied().unwrap_or(Rule::ExactTie)
    }
}

fn xc_coincide(a: &Centroid, b: &Centroid) -> bool {
    a.x() == b.x() || (a.x_f64() - b.x_f64()).abs() < XC_EPSILON
}

/// Pairwise criterion on centroids: (how `a` ranks against `b`, rule fired).
fn decide(a: &Centroid, b: &Centroid) -> (Ordering, Rule) {
    if !xc_coincide(a, b) {
        return (a.x().cmp(&b.x()), Rule::HigherXc);
    }
    if a.y() == b.y() {
        return (Ordering::Equal, Rule::ExactTie);
    }
    let midpoint = Rational64::new(5, 2);
    if a.x().max(b.x()) >= midpoint {
        (a.y().cmp(&b.y()), Rule::HigherYcHighXc)
    } else {
        (b.y().cmp(&a.y()), Rule::LowerYcLowXc)
    }
}

/// Compares two groups under the centroid criterion.
pub fn compare(a: &GroupAssessment, b: &GroupAssessment) -> ComparisonOutcome {
    let (ordering, rule) = decide(&a.centroid, &b.centroid);
    match ordering {
        Ordering::Greater => ComparisonOutcome {
            classes: vec![vec![a.group_id.clone()], vec![b.group_id.clone()]],
            rules: vec![rule],
        },
        Ordering::Less => ComparisonOutcome {
            classes: vec![vec![b.group_id.clone()], vec![a.group_id.clone()]],
            rules: vec![rule],
        },
        Ordering::Equal => ComparisonOutcome {
            classes: vec![vec![a.group_id.clone(), b.group_id.clone()]],
            rules: Vec::new(),
        },
    }
}

/// Ranks any number of groups; pairwise-consistent with [`compare`] and
/// stable on input order within exact ties.
pub fn rank_groups(groups: &[GroupAssessment]) -> Result<ComparisonOutcome, Error> {
    if groups.is_empty() {
        return Err(Error::EmptyGroup);
    }
    let mut order: Vec<usize> = (0..groups.len()).collect();
    order.sort_by(|&i, &j| decide(&groups[j].centroid, &groups[i].centroid).0);

    let mut classes: Vec<Vec<String>> = Vec::new();
    let mut rules: Vec<Rule> = Vec::new();
    let mut class_head = order[0];
    classes.push(vec![groups[class_head].group_id.clone()]);
    for &index in &order[1..] {
        let (ordering, rule) = decide(&groups[class_head].centroid, &groups[index].centroid);
        if ordering == Ordering::Equal {
            classes.last_mut().expect("non-empty").push(groups[index].group_id.clone());
        } else {
            rules.push(rule);
            classes.push(vec![groups[index].group_id.clone()]);
            class_head = index;
        }
    }
    Ok(ComparisonOutcome { classes, rules })
}
