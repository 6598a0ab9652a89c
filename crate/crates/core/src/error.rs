use thiserror::Error;

/// Errors raised by the semigroup, ideal, search and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),

    #[error("gcd of the generators is {0}, the complement would be infinite")]
    GcdNotOne(i64),

    #[error("input too large: {0}")]
    InputTooLarge(String),

    #[error("{0} is not a positive member of the semigroup")]
    NotAMember(i64),

    #[error("gap set is not the complement of a numerical semigroup: {0}")]
    NotASemigroup(String),

    #[error("ideals belong to different semigroups")]
    OwnerMismatch,

    #[error("semigroup is not far-flung Gorenstein")]
    NotFfg,

    #[error("operation is undefined for the full monoid of nonnegative integers")]
    FullMonoid,

    #[error("semigroup does not have minimal multiplicity")]
    NotMinimalMultiplicity,

    #[error("relative ideal is not reflexive")]
    NotReflexive,

    #[error("bad family parameters: {0}")]
    BadParameters(String),

    #[error("r = {0} is outside the tabulated range 1..=25")]
    OutOfTable(usize),

    #[error("node budget of {budget} exhausted; best lower bound {lower_bound}")]
    BudgetExceeded {
        budget: u64,
        lower_bound: i64,
        witness: Vec<i64>,
    },

    #[error("genus {requested} exceeds the enumeration ceiling {ceiling}")]
    CeilingExceeded { requested: u32, ceiling: u32 },
}

impl Error {
    /// Stable machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::NonPositiveGenerator(_) => "NonPositiveGenerator",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::InputTooLarge(_) => "InputTooLarge",
            Error::NotAMember(_) => "NotAMember",
            Error::NotASemigroup(_) => "NotASemigroup",
            Error::OwnerMismatch => "OwnerMismatch",
            Error::NotFfg => "NotFFG",
            Error::FullMonoid => "FullMonoid",
            Error::NotMinimalMultiplicity => "NotMinimalMultiplicity",
            Error::NotReflexive => "NotReflexive",
            Error::BadParameters(_) => "BadParameters",
            Error::OutOfTable(_) => "OutOfTable",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::CeilingExceeded { .. } => "CeilingExceeded",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
