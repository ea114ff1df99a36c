use alloc::string::String;
use core::fmt;

/// Errors produced by the assessment and scoring primitives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A group operation received no members.
    EmptyGroup,
    /// A percentage was out of range or not decimal text with at most two
    /// fraction digits.
    InvalidPercentage(String),
    /// A band scheme does not partition the percentage range.
    InvalidScheme(String),
    /// A membership vector failed validation.
    InvalidMembership(String),
    /// A centroid coordinate was outside its admissible rectangle.
    InvalidCentroid(String),
    /// No board in the session carried comparison information.
    NoScorableBoards,
    /// Two event records for one player share an event index.
    DuplicateEvent { event: u32 },
    /// An event index was outside `1..=total_events`.
    EventOutOfRange { event: u32, total_events: u32 },
    /// The group exceeds the supported member count.
    GroupTooLarge,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGroup => write!(f, "empty group"),
            Error::InvalidPercentage(reason) => write!(f, "invalid percentage: {reason}"),
            Error::InvalidScheme(reason) => write!(f, "invalid band scheme: {reason}"),
            Error::InvalidMembership(reason) => write!(f, "invalid membership vector: {reason}"),
            Error::InvalidCentroid(reason) => write!(f, "invalid centroid: {reason}"),
            Error::NoScorableBoards => write!(f, "no scorable boards"),
            Error::DuplicateEvent { event } => {
                write!(f, "duplicate record for event {event}")
            }
            Error::EventOutOfRange {
                event,
                total_events,
            } => write!(f, "event {event} outside 1..={total_events}"),
            Error::GroupTooLarge => write!(f, "group exceeds the supported member count"),
        }
    }
}

impl core::error::Error for Error {}
