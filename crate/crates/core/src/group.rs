//! Group assessments: centroid of the membership bar graph plus the mean
//! percentage baseline.

use alloc::format;
use alloc::string::{String, ToString};
use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::bands::BandScheme;
use crate::error::Error;
use crate::membership::{LabelCounts, MembershipVector};
use crate::percent::Percentage;

/// Centre of gravity `(x_c, y_c)` of a membership bar graph, kept as exact
/// fractions.
///
/// Every membership vector lands in the rectangle
/// `[1/2, 9/2] × [1/10, 1/2]`: the worst case `(1,0,0,0,0)` sits at
/// `(1/2, 1/2)`, the uniform vector at `(5/2, 1/10)` (the unique `y_c`
/// minimum), and the ideal case `(0,0,0,0,1)` at `(9/2, 1/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Centroid {
    x: Rational64,
    y: Rational64,
}

impl Centroid {
    /// Validated constructor for externally supplied coordinates.
    pub fn new(x: Rational64, y: Rational64) -> Result<Self, Error> {
        if x < Rational64::new(1, 2) || x > Rational64::new(9, 2) {
            return Err(Error::InvalidCentroid(format!(
                "x_c = {x} outside [1/2, 9/2]"
            )));
        }
        if y < Rational64::new(1, 10) || y > Rational64::new(1, 2) {
            return Err(Error::InvalidCentroid(format!(
                "y_c = {y} outside [1/10, 1/2]"
            )));
        }
        Ok(Centroid { x, y })
    }

    pub(crate) fn from_fractions(x: Rational64, y: Rational64) -> Self {
        debug_assert!(Centroid::new(x, y).is_ok(), "centroid out of bounds");
        Centroid { x, y }
    }

    pub fn x(&self) -> Rational64 {
        self.x
    }

    pub fn y(&self) -> Rational64 {
        self.y
    }

    pub fn x_f64(&self) -> f64 {
        self.x.to_f64().expect("x_c fits an f64")
    }

    pub fn y_f64(&self) -> f64 {
        self.y.to_f64().expect("y_c fits an f64")
    }
}

/// Everything the pipeline derives for one group. Counts, membership,
/// centroid and mean stay mutually consistent because they are only built
/// together by [`assess_group`].
#[derive(Debug, Clone, PartialEq)]
pub struct GroupAssessment {
    pub group_id: String,
    pub counts: LabelCounts,
    pub membership: MembershipVector,
    pub centroid: Centroid,
    /// Arithmetic mean of the raw scores, in percent, exact.
    pub mean: Rational64,
}

impl GroupAssessment {
    pub fn mean_f64(&self) -> f64 {
        self.mean.to_f64().expect("mean fits an f64")
    }
}

/// Exact arithmetic mean of the scores, in percent.
pub fn mean_percentage(scores: &[Percentage]) -> Result<Rational64, Error> {
    if scores.is_empty() {
        return Err(Error::EmptyGroup);
    }
    let sum: i64 = scores.iter().map(|p| i64::from(p.hundredths())).sum();
    Ok(Rational64::new(sum, 100 * scores.len() as i64))
}

/// Runs the whole per-group pipeline: classify, count, build the membership
/// vector, defuzzify to the centroid, and take the mean baseline.
pub fn assess_group(
    group_id: &str,
    scores: &[Percentage],
    scheme: &BandScheme,
) -> Result<GroupAssessment, Error> {
    let counts = LabelCounts::from_scores(scores, scheme)?;
    let membership = counts.membership();
    Ok(GroupAssessment {
        group_id: group_id.to_string(),
        counts,
        membership,
        centroid: membership.centroid(),
        mean: mean_percentage(scores)?,
    })
}
