//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by cliff construction, poset analysis and algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffError {
    /// A range-map specification string could not be parsed.
    #[error("invalid range map spec `{input}`: {reason}")]
    BadRangeMapSpec { input: String, reason: String },

    /// A periodic tail needs at least one letter.
    #[error("periodic tail must contain at least one letter")]
    EmptyPeriod,

    /// The scan horizon is too small for the given presentation.
    #[error("horizon {given} too small, need at least {needed}")]
    HorizonTooSmall { given: usize, needed: usize },

    /// Positions into a range map are 1-based.
    #[error("position must be at least 1")]
    ZeroPosition,

    /// A letter exceeds its range-map bound.
    #[error("letter {letter} at position {position} exceeds bound {bound}")]
    LetterOutOfRange {
        position: usize,
        letter: u32,
        bound: u32,
    },

    /// A word could not be parsed.
    #[error("invalid word `{input}`: {reason}")]
    BadWord { input: String, reason: String },

    /// Two words were expected to have the same size.
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    /// An element does not belong to the subset an operation was asked about.
    #[error("word `{word}` is not a member of the subset")]
    NotAMember { word: String },

    /// Enumeration was asked for more elements than the configured cap.
    #[error("size guard exceeded: more than {limit} elements")]
    SizeGuardExceeded { limit: usize },

    /// The greedy letter search of a monotone projection got stuck.
    #[error("no admissible letter at position {position} (want {direction} from {letter})")]
    NoAdmissibleLetter {
        position: usize,
        letter: u32,
        direction: &'static str,
    },

    /// A word is outside the image of the elevation map.
    #[error("word is not in the elevation image (failed at position {position})")]
    NotInElevationImage { position: usize },

    /// An operation needed a poset whose covers change a single letter.
    #[error("subset is not straight at size {n}")]
    NotStraight { n: usize },

    /// An operation needed an increasing range map.
    #[error("range map is not increasing")]
    NotIncreasing,

    /// An operation needed a valley-free range map.
    #[error("range map is not valley-free")]
    NotValleyFree,

    /// Contraction-by-doubling verification failed.
    #[error("doubling verification failed at step {step}: {reason}")]
    DoublingFailed { step: usize, reason: String },

    /// A precondition of the contraction chain does not hold.
    #[error("contraction precondition failed: {reason}")]
    ContractionPrecondition { reason: String },

    /// A word is not a member of the stated wing family.
    #[error("word `{word}` is not in the required wing family: {reason}")]
    NotAWingMember { word: String, reason: String },

    /// A permutation was expected.
    #[error("not a permutation of 1..=n: {reason}")]
    BadPermutation { reason: String },

    /// A basis element index or label was malformed.
    #[error("invalid element expression `{input}`: {reason}")]
    BadElement { input: String, reason: String },

    /// Two elements were combined across different ambient algebras.
    #[error("elements live in different ambient algebras")]
    AmbientMismatch,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, CliffError>;
