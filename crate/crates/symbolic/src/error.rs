use thiserror::Error;

/// Failure while reading an expression. Positions are byte offsets into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown identifier {name:?} at {position}")]
    UnknownIdentifier { name: String, position: usize },
    #[error("invalid exponent at {position}: {message}")]
    BadExponent { position: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("chart mismatch: {0}")]
    ChartMismatch(String),
    #[error("total degree {degree} exceeds bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at the evaluation point")]
    Pole,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
