use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters GP({n},{k}): need n >= 3 and 1 <= k < n/2")]
    InvalidParams { n: i64, k: i64 },

    #[error("index {j} out of range [0, {n}]")]
    OutOfRange { j: i64, n: usize },

    #[error("GP({n},{k}) is outside the closed-form coverage")]
    NotGuaranteed { n: usize, k: usize },

    /// No (or more than one) theorem subcase matched. This is a defect in the
    /// case table, never a recoverable condition.
    #[error("case dispatch for GP({n},{k}) matched {matched} subcases")]
    InternalCaseGap { n: usize, k: usize, matched: usize },

    #[error("W-sets need two distinct vertices")]
    SameVertex,

    #[error("ell = {ell} is outside [1, {diameter}]")]
    EllOutOfRange { ell: usize, diameter: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
