use thiserror::Error;

use crate::number::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberError {
    #[error("malformed number `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("`{0}` must be non-negative")]
    Negative(String),
}

/// Violations of the atom constraints `rate ≥ 0`, `price ≤ 0`, `bound ≥ −price`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtomError {
    #[error("negative rate {0}")]
    NegativeRate(Rational),
    #[error("positive price {0}")]
    PositivePrice(Rational),
    #[error("bound {bound} < -price (price {price})")]
    BoundBelowPrice { bound: Rational, price: Rational },
}

/// Errors raised while reading a model description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: {source}")]
    Number {
        line: usize,
        column: usize,
        source: NumberError,
    },
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("missing initial state")]
    MissingInitial,
    #[error("multiple initial states: `{0}` and `{1}`")]
    MultipleInitial(String, String),
    #[error("transition {src} -> {dst}: positive price {price}")]
    PositivePrice {
        src: String,
        dst: String,
        price: Rational,
    },
    #[error("transition {src} -> {dst}: bound < -price (bound {bound}, price {price})")]
    BoundBelowPrice {
        src: String,
        dst: String,
        bound: Rational,
        price: Rational,
    },
    #[error("state `{state}`: negative rate {rate}")]
    NegativeRate { state: String, rate: Rational },
    #[error("transition references undeclared state `{0}`")]
    UndeclaredState(String),
}

impl ModelError {
    /// Stable machine-readable code, one per error kind.
    pub fn code(&self) -> &'static str {
        match self {
            ModelError::Syntax { .. } => "E-SYNTAX",
            ModelError::Number { .. } => "E-NUMBER",
            ModelError::DuplicateState(_) => "E-DUP-STATE",
            ModelError::MissingInitial => "E-NO-INITIAL",
            ModelError::MultipleInitial(..) => "E-MULTI-INITIAL",
            ModelError::PositivePrice { .. } => "E-POS-PRICE",
            ModelError::BoundBelowPrice { .. } => "E-BOUND",
            ModelError::NegativeRate { .. } => "E-NEG-RATE",
            ModelError::UndeclaredState(_) => "E-UNDECLARED",
        }
    }
}
