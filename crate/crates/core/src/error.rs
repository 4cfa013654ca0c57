use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator {den} vanishes under the assignment")]
    Pole { den: String },
    #[error("parameter `{0}` is not assigned")]
    Unassigned(String),
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("normal form exceeded {steps} rewrite steps at word {word}")]
    StepBound { steps: usize, word: String },
    #[error("relation `{relation}` cannot be oriented: {reason}")]
    Orientation { relation: String, reason: String },
    #[error("not confluent: {0}")]
    NotConfluent(String),
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("degree bound {bound} is below the element degree {degree}")]
    DegreeBound { bound: usize, degree: usize },
    #[error("generator `{0}` is not in the morphism source")]
    OutsideSource(String),
    #[error("element is not horizontal: {0}")]
    NotHorizontal(String),
    #[error("expected an element of degree {expected}, found degree {found}")]
    Degree { expected: usize, found: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
