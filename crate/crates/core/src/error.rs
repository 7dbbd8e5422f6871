use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("variable mismatch between polynomial rings")]
    VariableMismatch,

    #[error("quotient is not finite dimensional: no pure power of `{variable}` among leading terms")]
    NotFiniteDimensional { variable: String },

    #[error("quotient is not local: multiplication by `{variable}` is not nilpotent")]
    NotLocal { variable: String },

    #[error("the ideal is the whole ring")]
    UnitIdeal,

    #[error("ideal generator `{0}` is a unit; use the free module of rank one instead")]
    UnitGenerator(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("algebra mismatch: modules live over different algebras")]
    AlgebraMismatch,

    #[error("map is not R-linear (fails to commute with `{variable}`)")]
    NotLinear { variable: String },

    #[error("dimension budget exceeded: {what} needs {needed} > budget {budget}")]
    BudgetExceeded { what: String, needed: usize, budget: usize },

    #[error("inconsistent verdicts for {predicate}: {detail}")]
    Inconsistent { predicate: String, detail: String },

    #[error("invalid input: {0}")]
    Input(String),
}
