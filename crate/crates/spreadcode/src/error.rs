use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate. Dimension mismatches between
/// operands of the core linear algebra are treated as programming errors and
/// panic instead; this enum covers invalid *input data* (tokens, files,
/// spreads, codes) and failed searches.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty tuple token")]
    EmptyToken,

    #[error("token {token:?}: character {ch:?} is not valid in ambient dimension {ambient}")]
    BadTokenChar { token: String, ch: char, ambient: u8 },

    #[error("token {token:?} denotes the zero vector, which is not a projective point")]
    ZeroTuple { token: String },

    #[error("tuple notation is only defined for ambient dimension <= 9, got {0}")]
    TupleAmbientTooLarge(u8),

    #[error("subspace dimension {k} out of range for ambient dimension {n}")]
    DimOutOfRange { n: u8, k: usize },

    #[error("points {a}, {b}, {c} are not the nonzero points of a line ({a} + {b} != {c})")]
    PointsNotClosed { a: String, b: String, c: String },

    #[error("expected a {expected}-dimensional subspace, got dimension {got}")]
    WrongDimension { expected: usize, got: usize },

    #[error("not a partial spread: lines {pairs:?} intersect nontrivially (indices, intersection dim)")]
    SpreadOverlap { pairs: Vec<(usize, usize, usize)> },

    #[error("spread has {0} lines, need exactly 9")]
    NotSize9(usize),

    #[error("spread is not maximal: it extends by {witness}")]
    NotMaximal { witness: String },

    #[error("lines {lines:?} do not form a regulus: {reason}")]
    NotARegulus { lines: Vec<String>, reason: String },

    #[error("regulus line {0} is not a member of the spread")]
    RegulusNotInSpread(String),

    #[error("spread matches no known pattern; pairwise regulus intersections: {details}")]
    PatternUnmatched { details: String },

    #[error("code is empty")]
    EmptyCode,

    #[error("duplicate codeword {0}")]
    DuplicateCodeword(String),

    #[error("minimum distance needs at least two codewords")]
    TooFewCodewords,

    #[error("operation requires ambient dimension 5, got {0}")]
    AmbientNotFive(u8),

    #[error("code is not an optimal doubled code (size 18, nine lines, nine planes): {0}")]
    NotDoubledOptimal(String),

    #[error("nothing to repair: code has no conflicts")]
    NoConflicts,

    #[error("refusing to repair a code with {0} conflicts (exactly one is required)")]
    MultipleConflicts(usize),

    #[error("repair targets of dimension {0} are not supported")]
    UnsupportedRepairTarget(usize),

    #[error("linear map is singular")]
    SingularMap,

    #[error("linear map images disagree with ambient dimension {ambient} (got {got} images)")]
    BadMapImages { ambient: u8, got: usize },

    #[error("no valid augmentation context exists for the lifted codebook")]
    ContextSearchExhausted,

    #[error("shortening produced wrong counts: {got_planes} planes inside the hyperplane (want 8), {got_lines} codewords through the point (want 8); offenders: {details}")]
    ShortenCountMismatch { got_planes: usize, got_lines: usize, details: String },

    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("{file}:{line}: {msg}")]
    Parse { file: String, line: usize, msg: String },

    #[error("unknown catalog entry {name:?}; available: {}", available.join(", "))]
    UnknownCatalogEntry { name: String, available: Vec<String> },

    #[error("cannot serialize a subspace of dimension {0} in the spread/code text format")]
    UnserializableDimension(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
