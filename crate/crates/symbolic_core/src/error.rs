//! Error type shared by the symbolic layer.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("division by an identically zero expression")]
    ZeroDenominator,
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("binding `{0}` sends a denominator to zero")]
    PoleAtBinding(String),
    #[error("parameter `{0}` cannot be bound to a rational number")]
    NotBindable(String),
    #[error("divergent limit: positive power {power} of `{param}` survives")]
    DivergentContraction { param: String, power: u16 },
    #[error("expression still depends on `{0}`")]
    UnboundParameter(String),
    #[error("cannot parse `{0}` as a rational number")]
    BadNumber(String),
    #[error("cannot parse `{0}` as a parameter expression")]
    BadExpression(String),
}
