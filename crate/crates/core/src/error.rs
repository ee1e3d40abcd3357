use thiserror::Error;

use crate::words::Letter;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GsError {
    #[error("alphabet must contain at least one generator")]
    EmptyAlphabet,
    #[error("invalid generator name {0:?}")]
    InvalidSymbol(String),
    #[error("generator {0:?} declared twice")]
    DuplicateSymbol(String),
    #[error("letter {letter} is outside an alphabet of {size} generators")]
    AlphabetMismatch { letter: Letter, size: usize },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("the empty word has no Lyndon–Shirshov structure")]
    EmptyWord,
    #[error("word is not an associative Lyndon–Shirshov word")]
    NotAlsw,
    #[error("polynomial is not a Lie element: {0}")]
    NotLie(String),
    #[error("leading word {lead} is not below the composition word {w}")]
    NotBelow { lead: String, w: String },
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("no relations to complete")]
    EmptyInput,
    #[error("relation of degree {degree} exceeds the degree cap {cap}")]
    DegreeExceedsCap { degree: usize, cap: usize },
    #[error("reduction exceeded {0} rewrite steps")]
    StepLimit(u64),
    #[error("completion is not a Gröbner–Shirshov basis (status: {0})")]
    Incomplete(String),
    #[error("basis contains a rule that is neither binomial nor monomial: {0}")]
    NonBinomial(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),
    #[error("coefficient {0} has no image in the coefficient field")]
    Coefficient(String),
    #[error("invalid structure table: {0}")]
    StructureTable(String),
}
