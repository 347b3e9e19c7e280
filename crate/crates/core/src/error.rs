use thiserror::Error;

/// Errors produced by the library.
///
/// Every variant maps to a stable machine-readable code (see [`Error::code`])
/// which the command-line front end prints on its diagnostic stream.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("element is not hyperbolic")]
    NotHyperbolic,
    #[error("element is not a member of {0}")]
    NotMember(String),
    #[error("inputs are conjugate")]
    ConjugateInputs,
    #[error("element is a proper power (multiplicity {0})")]
    NotPrimitive(u64),
    #[error("odd number of self-crossing double cosets ({0})")]
    OddCosetCount(usize),
    #[error("no stabilization up to exponent {0}")]
    NoStabilization(u64),
    #[error("axes do not cross")]
    AxesDoNotCross,
    #[error("conjugacy of non-hyperbolic elements is not supported in proper subgroups")]
    UnsupportedClassKind,
    #[error("determinant is not 1")]
    BadDeterminant,
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::NotHyperbolic => "NotHyperbolic",
            Error::NotMember(_) => "NotMember",
            Error::ConjugateInputs => "ConjugateInputs",
            Error::NotPrimitive(_) => "NotPrimitive",
            Error::OddCosetCount(_) => "OddCosetCount",
            Error::NoStabilization(_) => "NoStabilization",
            Error::AxesDoNotCross => "AxesDoNotCross",
            Error::UnsupportedClassKind => "UnsupportedClassKind",
            Error::BadDeterminant => "BadDeterminant",
        }
    }

    /// Parse-level errors, as opposed to domain errors.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::BadDeterminant)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
