//! Core primitives for assessing the collective performance of groups of
//! duplicate-bridge pairs or players.
//!
//! A group's individual percentage scores are classified into the five
//! linguistic labels `F < D < C < B < A` by a configurable band scheme. The
//! label frequencies form a fuzzy membership vector over the labels, which is
//! reduced to the centre of gravity of its bar graph. Groups are then ranked
//! by the centroid comparison criterion (`higher x_c` wins; at equal `x_c`
//! the tie is broken on `y_c`, in opposite directions on either side of the
//! midpoint), alongside a plain mean-percentage baseline.
//!
//! The crate also scores raw duplicate-bridge board results into matchpoints
//! and session percentages, and applies the best-(E−1)-of-E multi-event
//! total-scoring rule.
//!
//! All membership and centroid arithmetic is exact rational; floating point
//! only appears in read-only decimal views. The crate is `no_std` (with
//! `alloc`) and every type is immutable after construction.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod aggregate;
pub mod bands;
pub mod compare;
pub mod group;
pub mod matchpoints;
pub mod membership;
pub mod percent;

pub use aggregate::{aggregate_total, EventRecord};
pub use bands::{Band, BandScheme, Label};
pub use compare::{compare, rank_groups, ComparisonOutcome, Rule, XC_EPSILON};
pub use error::Error;
pub use group::{assess_group, mean_percentage, Centroid, GroupAssessment};
pub use matchpoints::{
    session_percentage, BoardField, BoardResult, Direction, FieldEntry, MatchpointAward,
};
pub use membership::{LabelCounts, MembershipVector};
pub use percent::Percentage;

pub use num_rational::Rational64;
