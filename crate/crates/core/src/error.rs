use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("mu must be non-negative (got mu{index} = {value})")]
    NegativeMu { index: usize, value: String },

    #[error("gamma ratio Γ({a})/Γ({b}) is not rational: difference is not a non-negative integer")]
    NonIntegerGammaDifference { a: String, b: String },

    #[error("not divisible by x{axis}")]
    NotDivisible { axis: usize },

    #[error("input polynomial involves x{axis}")]
    InvolvesVariable { axis: usize },

    #[error("input polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("exact linear system is singular: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, Error>;
