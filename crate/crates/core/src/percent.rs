//! Exact percentage scores.

use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// A score in `[0, 100]` percent, stored as integer hundredths so that band
/// boundaries classify exactly and never depend on floating point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Percentage(u32);

impl Percentage {
    /// 0.00%
    pub const ZERO: Percentage = Percentage(0);
    /// 100.00%
    pub const MAX: Percentage = Percentage(10_000);

    /// Builds a percentage from integer hundredths (`6267` is 62.67%).
    pub fn from_hundredths(hundredths: u32) -> Result<Self, Error> {
        if hundredths > Self::MAX.0 {
            return Err(Error::InvalidPercentage(format!(
                "{}.{:02} exceeds 100",
                hundredths / 100,
                hundredths % 100
            )));
        }
        Ok(Percentage(hundredths))
    }

    pub fn hundredths(self) -> u32 {
        self.0
    }

    /// Decimal view; exact for every representable value.
    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 100.0
    }
}

impl FromStr for Percentage {
    type Err = Error;

    /// Parses decimal text with at most two fraction digits, e.g. `"62.67"`,
    /// `"46"`, `"50.1"`. Anything else is rejected so that the hundredths
    /// representation stays exact.
    fn from_str(text: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidPercentage(text.to_string());
        let (whole, frac) = match text.split_once('.') {
            Some((w, f)) => (w, Some(f)),
            None => (text, None),
        };
        if whole.is_empty() || !whole.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if whole.len() > 5 {
            // longer than "10000": out of range regardless of digits
            return Err(bad());
        }
        let mut value: u32 = whole.parse().map_err(|_| bad())?;
        value = value.checked_mul(100).ok_or_else(bad)?;
        if let Some(frac) = frac {
            if frac.is_empty() || frac.len() > 2 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let mut frac_value: u32 = frac.parse().map_err(|_| bad())?;
            if frac.len() == 1 {
                frac_value *= 10;
            }
            value += frac_value;
        }
        Percentage::from_hundredths(value).map_err(|_| bad())
    }
}

impl fmt::Display for Percentage {
    /// Formats the shortest decimal text that parses back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0 / 100;
        let frac = self.0 % 100;
        if frac == 0 {
            write!(f, "{whole}")
        } else if frac.is_multiple_of(10) {
            write!(f, "{whole}.{}", frac / 10)
        } else {
            write!(f, "{whole}.{frac:02}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_two_fraction_digits() {
        assert_eq!("62.67".parse::<Percentage>().unwrap().hundredths(), 6267);
        assert_eq!("46".parse::<Percentage>().unwrap().hundredths(), 4600);
        assert_eq!("50.1".parse::<Percentage>().unwrap().hundredths(), 5010);
        assert_eq!("0".parse::<Percentage>().unwrap(), Percentage::ZERO);
        assert_eq!("100.00".parse::<Percentage>().unwrap(), Percentage::MAX);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!("101.0".parse::<Percentage>().is_err());
        assert!("100.01".parse::<Percentage>().is_err());
        assert!(Percentage::from_hundredths(10_001).is_err());
    }

    #[test]
    fn rejects_malformed_text() {
        for text in ["", ".", "46.", ".5", "62.675", "-1", "+5", "4 6", "1e2", "46,5"] {
            assert!(text.parse::<Percentage>().is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        for h in [0, 1, 10, 100, 4600, 5010, 6267, 9999, 10_000] {
            let p = Percentage::from_hundredths(h).unwrap();
            assert_eq!(p.to_string().parse::<Percentage>().unwrap(), p);
        }
        assert_eq!(Percentage::from_hundredths(4600).unwrap().to_string(), "46");
        assert_eq!(
            Percentage::from_hundredths(5010).unwrap().to_string(),
            "50.1"
        );
        assert_eq!(
            Percentage::from_hundredths(6267).unwrap().to_string(),
            "62.67"
        );
    }
}
