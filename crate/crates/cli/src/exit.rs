use minplus_core::Error;

/// Process exit statuses; the table is repeated in `--help`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success,
    Internal,
    Usage,
    Io,
    BadToken,
    RaggedRows,
    Empty,
    DimensionMismatch,
    NotSquare,
    Overflow,
    TooLarge,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        match self {
            Self::Success => 0,
            Self::Internal => 1,
            Self::Usage => 2,
            Self::Io => 3,
            Self::BadToken => 4,
            Self::RaggedRows => 5,
            Self::Empty => 6,
            Self::DimensionMismatch => 7,
            Self::NotSquare => 8,
            Self::Overflow => 9,
            Self::TooLarge => 10,
        }
    }
}

impl From<&Error> for ExitCode {
    fn from(err: &Error) -> Self {
        match err {
            Error::DimensionMismatch { .. } => Self::DimensionMismatch,
            Error::NotSquare { .. } => Self::NotSquare,
            Error::Overflow { .. } => Self::Overflow,
            Error::TooLarge { .. } => Self::TooLarge,
            Error::RaggedRows { .. } => Self::RaggedRows,
            Error::BadToken { .. } | Error::Json(_) => Self::BadToken,
            Error::Empty => Self::Empty,
            Error::InvalidPermutation(_) => Self::Internal,
        }
    }
}
