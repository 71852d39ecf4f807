use thiserror::Error;

/// Everything that can go wrong while setting up, playing, verifying or
/// solving a game.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("board needs at least 2 vertices, got {0}")]
    BoardTooSmall(usize),
    #[error("need at least 2 colors, got {0}")]
    TooFewColors(usize),
    #[error("target list has {got} goals but the board has {t} colors")]
    TargetMismatch { t: usize, got: usize },
    #[error("invalid goal: {0}")]
    InvalidGoal(String),
    #[error("({0}, {0}) is a loop, not an edge")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a board on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("color {color} outside 1..={t}")]
    ColorOutOfRange { color: usize, t: usize },
    #[error("classic game needs n >= {ramsey}, got n = {n}")]
    BelowRamsey { n: usize, ramsey: usize },
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("builder re-queried exposed edges {0} times, exceeding its patience")]
    PatienceExceeded(usize),
    #[error("{unexposed} unexposed edges exceed the completion threshold of {threshold}")]
    ThresholdExceeded { unexposed: usize, threshold: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("six-cover hypothesis fails: pair ({0}, {1}) lies in no set")]
    CoverageViolated(usize, usize),
    #[error("six-cover hypothesis fails: U1 and U2 share vertex {0}")]
    NotDisjoint(usize),
    #[error("instance is intractable: {0}")]
    Intractable(String),
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("edge ({0}, {1}) appears twice")]
    DuplicateEdge(usize, usize),
    #[error("coloring is missing edge ({0}, {1})")]
    IncompleteColoring(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
