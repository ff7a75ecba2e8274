use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    Empty,
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("value {value} is out of range for degree {degree}")]
    OutOfRange { value: usize, degree: usize },
    #[error("duplicate value {0}")]
    Duplicate(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("permutation {0} is odd")]
    OddPermutation(String),
    #[error("degree {degree} is too small (need at least {min})")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("q = {q} is out of range for degree {degree}")]
    QOutOfRange { q: usize, degree: usize },
    #[error("generator index {index} is out of range for degree {degree}")]
    GeneratorOutOfRange { index: usize, degree: usize },
    #[error("invalid factor: {0}")]
    InvalidFactor(String),
    #[error("letter {0} already occurs in the word")]
    LetterInWord(usize),
    #[error("word is not in the image of gamma_{0}")]
    NotInImage(usize),
    #[error("invalid dashed pattern: {0}")]
    InvalidPattern(String),
    #[error("degree {degree} exceeds the enumeration cap {cap}")]
    ResourceCap { degree: usize, cap: usize },
    /// A mathematical invariant the construction guarantees did not hold.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
