//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not invertible: leading coefficient is zero")]
    NotInvertible,

    #[error("class {class} has rank {found}, table has rank {expected}")]
    RankMismatch {
        class: String,
        expected: usize,
        found: usize,
    },

    #[error("the zero class is not allowed in invariant tables")]
    ZeroClass,

    #[error("degree cap {cap} exceeded by class {class} (degree {degree})")]
    DegreeCapExceeded {
        class: String,
        degree: u64,
        cap: u64,
    },

    #[error("genus cap {cap} exceeded by entry at genus {genus}")]
    GenusCapExceeded { genus: u32, cap: u32 },

    #[error("duplicate entry for class {class} at genus {genus}")]
    DuplicateEntry { class: String, genus: u32 },

    #[error("degree functional weights must all be positive")]
    NonPositiveWeight,

    #[error("not pure dimension one: slope must be positive")]
    NotPureDimensionOne,

    #[error("nonstandard A4 local form required")]
    MissingA4Override,

    #[error("unknown contraction case {0:?}")]
    UnknownCase(String),

    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: u64, min: u64, max: u64 },

    #[error("multiplicity list has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("cannot parse {0:?} as an exact rational")]
    BadRational(String),

    #[error("invalid table file: {0}")]
    BadTableFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
