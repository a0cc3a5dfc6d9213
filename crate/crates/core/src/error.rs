use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// Words and chains are carried in rendered form so that errors stay
/// independent of the alphabet they came from.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnickError {
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid rule {lhs}: {reason}")]
    InvalidRule { lhs: String, reason: String },

    #[error("rewrite system is not reduced: `{inner}` occurs inside `{outer}`")]
    NotReduced { outer: String, inner: String },

    #[error("augmentation does not respect rule {lhs}")]
    InvalidAugmentation { lhs: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph document: {0}")]
    GraphParse(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("`{chain}` is not a {degree}-chain")]
    MalformedElement { degree: i32, chain: String },

    #[error("element of degree {degree} is not a cycle; its image is {image}")]
    NotInKernel { degree: i32, image: String },

    #[error("splitting in degree {degree} stalled at `{word}`: leading word did not decrease")]
    NonTerminating { degree: i32, word: String },

    #[error("splitting in degree {degree}: leading word `{word}` has no chain factorization")]
    NoChainFactor { degree: i32, word: String },

    #[error("word of length {length} exceeds the degree cap {max_deg}; raise max_deg")]
    TruncationExceeded { max_deg: usize, length: usize },

    #[error("differential for {degree}-chains not built yet")]
    NotBuilt { degree: i32 },

    #[error("fast differential disagrees with the elimination engine on `{chain}`")]
    ConditionViolated { chain: String },

    #[error("closed-form differential of `{chain}` disagrees: formula {formula}, engine {engine}")]
    FormulaMismatch {
        chain: String,
        formula: String,
        engine: String,
    },

    #[error("contracting homotopy fails on {}", chains.join(", "))]
    HomotopyFailure { chains: Vec<String> },
}

pub type Result<T> = std::result::Result<T, AnickError>;
