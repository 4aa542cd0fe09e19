use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} outside supported range 1..=16")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} has degree {found}, expected {expected}")]
    DegreeMismatch { modulus: u32, expected: u32, found: u32 },
    #[error("modulus {0:#x} has zero constant term")]
    ZeroConstantTerm(u32),
    #[error("modulus {0:#x} is reducible over F_2")]
    ReducibleModulus(u32),
    #[error("element {bits:#x} is not reduced for degree {m}")]
    ElementOutOfRange { bits: u32, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("modulus exponent mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("length {len} outside supported range 1..={max}")]
    LengthOutOfRange { len: usize, max: usize },
    #[error("truncation offset {delta} must be below length {len}")]
    InvalidOffset { delta: usize, len: usize },
    #[error("linear system is inconsistent at row {0}")]
    InconsistentSystem(usize),
    #[error("no value assigned to free coordinate b{0}")]
    MissingAssignment(usize),
    #[error("coordinate b{0} is not free in this space")]
    UnknownCoordinate(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("stream of {count} codes exceeds cap {cap}")]
    SizeOverflow { count: String, cap: u64 },
    #[error("{0} codes have no case-table dual; convert to case form first")]
    UnsupportedFamily(&'static str),
    #[error("{what} needs {needed} entries, cap is {cap}")]
    CapExceeded { what: &'static str, needed: String, cap: u64 },
    #[error("expanded code has q^{found} words, table predicts q^{expected}")]
    CardinalityMismatch { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
