use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("constant term is not a unit")]
    NonUnit,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element not invertible modulo {p}")]
    NonInvertible { p: u64 },
    #[error("wild characteristic: p = {p} is incompatible with multiplicity k = {k}")]
    WildCharacteristic { p: u64, k: u64 },
    #[error("wild ramification: profile violates tameness in characteristic {p}")]
    WildRamification { p: u64 },
    #[error("unsupported dimension d = {d}")]
    BadDimension { d: u32 },
    #[error("{0} is not an odd prime")]
    BadPrime(u64),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("inconsistent resolution: {0}")]
    InconsistentResolution(String),
    #[error("non-integer genus: ramification parity fails")]
    NonIntegerGenus,
    #[error("enumeration budget exceeded: {0} tuples")]
    BudgetExceeded(u128),
    #[error("fiber point (0:0) is not a point of the projective line")]
    ZeroFiberPoint,
}

pub type Result<T> = std::result::Result<T, Error>;
