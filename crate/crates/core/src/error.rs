use thiserror::Error;

/// Failures while scoring a single text pair.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScoreError {
    #[error("text has no tokens")]
    ZeroLengthText,
    #[error("neither text has any tokens")]
    EmptyPair,
    #[error("n-gram lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("candidate has fewer than {n} tokens")]
    NoCandidateGrams { n: usize },
    #[error("invalid n-gram length {0}")]
    InvalidGramLength(usize),
    #[error("lexicon unavailable: {0}")]
    LexiconUnavailable(String),
}

impl ScoreError {
    /// Stable variant name used in machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            ScoreError::ZeroLengthText => "ZeroLengthText",
            ScoreError::EmptyPair => "EmptyPair",
            ScoreError::LengthMismatch(..) => "LengthMismatch",
            ScoreError::NoCandidateGrams { .. } => "NoCandidateGrams",
            ScoreError::InvalidGramLength(_) => "InvalidGramLength",
            ScoreError::LexiconUnavailable(_) => "LexiconUnavailable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("invalid configuration: {0}")]
pub struct ConfigError(pub String);
