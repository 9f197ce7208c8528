use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex label {0} is out of range (labels are 1..=64)")]
    LabelOutOfRange(u32),
    #[error("vertex {vertex} is not in the ground set")]
    NotInGround { vertex: u32 },
    #[error("the relative set of a dual must be nonempty")]
    EmptyRelativeSet,
    #[error("vertex {vertex} of the complex lies outside the relative set")]
    OutsideRelativeSet { vertex: u32 },
    #[error("ground sets overlap at vertex {vertex}")]
    OverlappingGrounds { vertex: u32 },
    #[error("sigma and omega share vertex {vertex}")]
    NotDisjoint { vertex: u32 },
    #[error("block mismatch: {0}")]
    BlockMismatch(String),
    #[error("complexes live on different ground sets")]
    GroundMismatch,
    #[error("face {face} of the subcomplex is not a face of the ambient complex")]
    NotASubcomplex { face: String },
    #[error("torsion in degree {degree} is outside the free-coefficient formula")]
    TorsionUnderIntegers { degree: i32 },
    #[error("factor {0} is the void complex")]
    VoidFactor(usize),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("subspace is not contained in the ambient space")]
    NotASubset,
    #[error("omega must be nonempty")]
    EmptyOmega,
    #[error("sphere pair parameter (r={r}, q={q}) violates 0 <= q <= r")]
    SphereParams { r: i64, q: i64 },
    #[error("expected {expected} parameter pairs, got {got}")]
    ParamCount { expected: usize, got: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
