use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("words belong to different alphabets")]
    AlphabetMismatch,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("relator {index} reduces to the empty word")]
    EmptyRelator { index: usize },

    #[error("unknown presentation family `{0}`")]
    UnknownFamily(String),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("generator name collision: `{0}`")]
    NameCollision(String),

    #[error("no weight given for generator `{0}`")]
    MissingWeight(String),

    #[error("weights do not define a homomorphism: relator {index} ({relator}) has weight sum {sum}")]
    NotAHomomorphism { index: usize, relator: String, sum: i64 },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("no endomorphism assigned to generator `{0}`")]
    MissingAssignment(String),

    #[error("relator {relator} uses `{generator}^-1` but no inverse endomorphism was supplied")]
    MissingInverse { generator: String, relator: usize },

    #[error("invalid bracket selection: {0}")]
    InvalidAlpha(String),

    #[error("x-basis of size {n} exceeds the alternating-sum bound {max}")]
    TooManyGenerators { n: usize, max: usize },

    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),

    #[error("invalid automorphism spec `{0}`")]
    AutomSpec(String),
}
