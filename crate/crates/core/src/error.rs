use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("substituting zero into a negative power of {0}")]
    SubstituteZeroIntoNegativePower(String),
    #[error("coefficient has a pole at Q = 1")]
    PoleAtQ1,
    #[error("unknown algebra {0}")]
    UnknownAlgebra(String),
    #[error("unknown representation {0}")]
    UnknownRepresentation(String),
    #[error("unbound generator {0}")]
    UnboundGenerator(String),
    #[error("no inverse available for {0}")]
    NoInverseAvailable(String),
    #[error("operator result is not a Laurent polynomial")]
    NonPolynomialResult,
    #[error("rewrite budget exhausted after {0} steps")]
    BudgetExhausted(usize),
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("zero denominator in q-Pochhammer symbol")]
    ZeroDenominatorPochhammer,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
