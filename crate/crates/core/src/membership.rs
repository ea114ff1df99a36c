//! Label counts and the fuzzy membership vector they induce.

use alloc::format;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Signed;

use crate::bands::{BandScheme, Label};
use crate::error::Error;
use crate::group::Centroid;
use crate::percent::Percentage;

/// Largest supported common denominator (and so largest group size). Keeps
/// every downstream product, including the squared terms of `y_c`, inside
/// `i64`.
pub const DENOMINATOR_LIMIT: i64 = 1_000_000_000;

/// How many group members fell in each label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelCounts {
    counts: [u32; 5], // indexed worst to best: F, D, C, B, A
}

impl LabelCounts {
    /// Counts ordered worst to best. At least one member is required; the
    /// formulas are well defined from a single member up.
    pub fn new(n_f: u32, n_d: u32, n_c: u32, n_b: u32, n_a: u32) -> Result<Self, Error> {
        let counts = [n_f, n_d, n_c, n_b, n_a];
        let n: u64 = counts.iter().map(|&c| u64::from(c)).sum();
        if n == 0 {
            return Err(Error::EmptyGroup);
        }
        if n > DENOMINATOR_LIMIT as u64 {
            return Err(Error::GroupTooLarge);
        }
        Ok(LabelCounts { counts })
    }

    /// Classifies every score and tallies the labels.
    pub fn from_scores(scores: &[Percentage], scheme: &BandScheme) -> Result<Self, Error> {
        if scores.is_empty() {
            return Err(Error::EmptyGroup);
        }
        let mut counts = [0u32; 5];
        for &score in scores {
            counts[scheme.classify(score).rank() as usize - 1] += 1;
        }
        LabelCounts::new(counts[0], counts[1], counts[2], counts[3], counts[4])
    }

    pub fn count(&self, label: Label) -> u32 {
        self.counts[label.rank() as usize - 1]
    }

    /// Group size.
    pub fn n(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    /// The frequency vector `m(x) = n_x / n`.
    pub fn membership(&self) -> MembershipVector {
        let nums = self.counts.map(i64::from);
        MembershipVector::from_parts(nums, self.n() as i64)
    }
}

/// A group as a fuzzy subset of the five labels: one frequency per label,
/// worst to best, summing to exactly 1.
///
/// Stored over a single common denominator in lowest terms, so equality is
/// structural and all arithmetic stays exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MembershipVector {
    nums: [i64; 5],
    den: i64,
}

impl MembershipVector {
    /// Builds a vector from five exact fractions, worst label first.
    /// Each value must lie in `[0, 1]` and the five must sum to exactly 1.
    pub fn new(values: [Rational64; 5]) -> Result<Self, Error> {
        let mut den: i64 = 1;
        for (index, value) in values.iter().enumerate() {
            if value.is_negative() || *value > Rational64::from_integer(1) {
                return Err(Error::InvalidMembership(format!(
                    "component {} = {value} is outside [0, 1]",
                    index + 1
                )));
            }
            let lcm = (i128::from(den) / i128::from(den.gcd(value.denom())))
                * i128::from(*value.denom());
            if lcm > i128::from(DENOMINATOR_LIMIT) {
                return Err(Error::InvalidMembership(format!(
                    "common denominator exceeds {DENOMINATOR_LIMIT}"
                )));
            }
            den = lcm as i64;
        }
        let nums = values.map(|v| v.numer() * (den / v.denom()));
        let sum: i64 = nums.iter().sum();
        if sum != den {
            return Err(Error::InvalidMembership(format!(
                "components sum to {}, expected 1",
                Rational64::new(sum, den)
            )));
        }
        Ok(Self::from_parts(nums, den))
    }

    fn from_parts(nums: [i64; 5], den: i64) -> Self {
        debug_assert!(den >= 1 && nums.iter().sum::<i64>() == den);
        let g = nums.iter().fold(den, |g, &n| g.gcd(&n));
        MembershipVector {
            nums: nums.map(|n| n / g),
            den: den / g,
        }
    }

    /// The five frequencies, worst label first, in lowest terms.
    pub fn values(&self) -> [Rational64; 5] {
        self.nums.map(|n| Rational64::new(n, self.den))
    }

    pub fn value(&self, label: Label) -> Rational64 {
        Rational64::new(self.nums[label.rank() as usize - 1], self.den)
    }

    pub fn is_uniform(&self) -> bool {
        self.nums.iter().all(|&n| n * 5 == self.den)
    }

    /// Centre of gravity of the five-bar graph of this vector:
    /// `x_c = (1/2) Σ (2i−1) y_i` and `y_c = (1/2) Σ y_i²`.
    pub fn centroid(&self) -> Centroid {
        let weighted: i64 = self
            .nums
            .iter()
            .enumerate()
            .map(|(i, &n)| (2 * i as i64 + 1) * n)
            .sum();
        let squares: i64 = self.nums.iter().map(|&n| n * n).sum();
        Centroid::from_fractions(
            Rational64::new(weighted, 2 * self.den),
            Rational64::new(squares, 2 * self.den * self.den),
        )
    }
}
