//! Linguistic performance labels and the percentage bands that assign them.

use alloc::format;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::percent::Percentage;

/// One of the five linguistic labels, ordered worst to best.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// Unsatisfactory
    F,
    /// Mediocre
    D,
    /// Good
    C,
    /// Very good
    B,
    /// Excellent
    A,
}

impl Label {
    /// Worst to best.
    pub const ALL: [Label; 5] = [Label::F, Label::D, Label::C, Label::B, Label::A];

    /// 1 for `F` up to 5 for `A`; the bar-graph interval of rank `r`
    /// is `[r-1, r)`.
    pub fn rank(self) -> u8 {
        match self {
            Label::F => 1,
            Label::D => 2,
            Label::C => 3,
            Label::B => 4,
            Label::A => 5,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::F => "F",
            Label::D => "D",
            Label::C => "C",
            Label::B => "B",
            Label::A => "A",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        match text {
            "F" => Ok(Label::F),
            "D" => Ok(Label::D),
            "C" => Ok(Label::C),
            "B" => Ok(Label::B),
            "A" => Ok(Label::A),
            other => Err(Error::InvalidScheme(format!("unknown label {other:?}"))),
        }
    }
}

/// One percentage interval and the label it assigns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Band {
    pub label: Label,
    pub lower: Percentage,
    pub lower_inclusive: bool,
    pub upper: Percentage,
    pub upper_inclusive: bool,
}

impl Band {
    pub fn contains(&self, p: Percentage) -> bool {
        let above = p > self.lower || (self.lower_inclusive && p == self.lower);
        let below = p < self.upper || (self.upper_inclusive && p == self.upper);
        above && below
    }
}

/// Five bands that partition `[0, 100]`: every percentage maps to exactly one
/// label, and label rank increases with the interval position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandScheme {
    bands: [Band; 5],
}

impl BandScheme {
    /// Validates the partition invariant by scanning every representable
    /// percentage (integer hundredths make the check exhaustive and exact).
    pub fn new(bands: [Band; 5]) -> Result<Self, Error> {
        for label in Label::ALL {
            if !bands.iter().any(|b| b.label == label) {
                return Err(Error::InvalidScheme(format!("label {label} is missing")));
            }
        }
        let scheme = BandScheme { bands };
        let mut previous_rank = 0u8;
        for hundredths in 0..=Percentage::MAX.hundredths() {
            let p = Percentage::from_hundredths(hundredths).expect("in range");
            let mut matched: Option<Label> = None;
            for band in &scheme.bands {
                if band.contains(p) {
                    if matched.is_some() {
                        return Err(Error::InvalidScheme(format!(
                            "{p} is covered by more than one band"
                        )));
                    }
                    matched = Some(band.label);
                }
            }
            let label = matched
                .ok_or_else(|| Error::InvalidScheme(format!("{p} is not covered by any band")))?;
            if label.rank() < previous_rank {
                return Err(Error::InvalidScheme(format!(
                    "label rank decreases at {p}: bands are not ordered worst to best"
                )));
            }
            previous_rank = label.rank();
        }
        Ok(scheme)
    }

    pub fn bands(&self) -> &[Band; 5] {
        &self.bands
    }

    /// The unique label whose interval contains `p`; total because the
    /// partition invariant was checked at construction.
    pub fn classify(&self, p: Percentage) -> Label {
        self.bands
            .iter()
            .find(|band| band.contains(p))
            .expect("bands partition the percentage range")
            .label
    }
}

impl Default for BandScheme {
    /// The matchpoint scheme: A if p > 65, B if 55 < p <= 65, C if
    /// 48 < p <= 55, D if 40 <= p <= 48, F if p < 40.
    fn default() -> Self {
        let pct = |h: u32| Percentage::from_hundredths(h).expect("in range");
        let band = |label, lower, li, upper, ui| Band {
            label,
            lower: pct(lower),
            lower_inclusive: li,
            upper: pct(upper),
            upper_inclusive: ui,
        };
        BandScheme::new([
            band(Label::F, 0, true, 4_000, false),
            band(Label::D, 4_000, true, 4_800, true),
            band(Label::C, 4_800, false, 5_500, true),
            band(Label::B, 5_500, false, 6_500, true),
            band(Label::A, 6_500, false, 10_000, true),
        ])
        .expect("default scheme is a partition")
    }
}
