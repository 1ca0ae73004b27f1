use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Rank outside the range allowed for the family (A: n ≥ 1, D: n ≥ 3).
    InvalidRank { family: char, n: usize },
    /// The repetition parameter must be at least 1.
    InvalidRepetition(u64),
    /// Operation needs a square matrix.
    NotSquare { rows: usize, cols: usize },
    /// Operand shapes do not fit together.
    DimensionMismatch { expected: usize, found: usize },
    /// Matrix is not invertible over the integers.
    NotUnimodular,
    /// No power `Φ^h = ±I` was found up to the given bound.
    NoCoxeterPeriod { bound: u64 },
    /// The glide does not act consistently on `ZΔ`.
    InconsistentGlide(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank { family, n } => {
                let min = if *family == 'D' { 3 } else { 1 };
                write!(f, "type {family} needs n >= {min}, got n = {n}")
            }
            Error::InvalidRepetition(p) => write!(f, "p must be >= 1, got {p}"),
            Error::NotSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotUnimodular => f.write_str("matrix is not unimodular"),
            Error::NoCoxeterPeriod { bound } => {
                write!(
                    f,
                    "no h <= {bound} with Phi^h = +-I (Coxeter convention bug?)"
                )
            }
            Error::InconsistentGlide(what) => write!(f, "inconsistent glide: {what}"),
        }
    }
}

impl core::error::Error for Error {}
