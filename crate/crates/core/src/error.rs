//! Error type shared by the whole crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A denominator factor `1/(1 - t^w)` needs `w >= 1`.
    #[error("nonpositive weight in series denominator")]
    NonpositiveWeight,

    /// A numerator factor `(1 - t^d)` needs `d >= 1`.
    #[error("relation degree must be >= 1")]
    ZeroRelationDegree,

    /// A coefficient beyond the truncation was requested. Callers must
    /// re-expand to at least `needed`; the answer is never silently 0.
    #[error(
        "truncation exceeded: coefficient {needed} requested, series truncated at {truncation}"
    )]
    TruncationExceeded { needed: i64, truncation: usize },

    /// A presentation must have at least one generator.
    #[error("empty weight list")]
    EmptyWeights,

    /// A presentation of positive dimension needs more generators than relations.
    #[error(
        "presentation has {weights} weights but {relations} relations; dimension would be <= 0"
    )]
    TooManyRelations { weights: usize, relations: usize },

    /// Chart combinatorics are defined for homogeneous elements of positive degree.
    #[error("chart generator degree must be >= 1")]
    ZeroGeneratorDegree,

    /// Pfaffian degree lists come from skew matrices of odd size.
    #[error("Pfaffian degree list must have odd length, got {0}")]
    EvenPfaffianDegrees(usize),

    #[error(
        "Pfaffian degree constraint violated: sum of degrees is {sum}, expected n*N = {expected}"
    )]
    PfaffianDegreeConstraint { sum: i64, expected: i64 },

    #[error("resolution shift negative: N - d_j = {0} < 0")]
    NegativeResolutionShift(i64),

    /// A verdict or count was requested whose formula depends on a
    /// hypothesis the caller did not assert.
    #[error("hypothesis not asserted: {0}")]
    HypothesisNotAsserted(&'static str),

    #[error("m = {m} is not a positive multiple of m0 = {m0}")]
    NotMultipleOfM0 { m: u64, m0: u64 },

    /// Dimension-valued queries need `A_0 = C`, i.e. every weight positive.
    #[error("graded pieces are not finite-dimensional: weight-0 variables present")]
    WeightZeroVariables,

    /// Log plurigenera need `A_0 = C`. The one decided weight-0 case is an
    /// empty divisor with isolated singularities, where the log Kodaira
    /// dimension is -infinity and every log plurigenus vanishes.
    #[error(
        "A_0 is not the base field (weight-0 variables present); log plurigenera are \
         defined here only for all-positive weights — with an empty divisor and isolated \
         singularities the log Kodaira dimension is -infinity"
    )]
    PositiveDimensionalVertex,

    /// Graded scans and plurigenera are implemented for a free dualizing
    /// module, i.e. `m0 = 1`.
    #[error("operation requires m0 = 1, got m0 = {0}")]
    ShiftNotFree(u64),

    /// A negative coefficient proves the relation degrees cannot come from a
    /// regular sequence, so graded-piece dimensions read off the series are
    /// meaningless.
    #[error(
        "negative Hilbert coefficient at degree {0}: relation degrees are not a regular sequence"
    )]
    NegativeCoefficient(usize),

    #[error("plurigenera formulas require dim V >= 2, got {0}")]
    DimensionTooSmall(u64),

    /// The auto-resolved or requested truncation would be absurdly large.
    #[error("requested truncation {0} exceeds the supported maximum {max}", max = Error::MAX_TRUNCATION)]
    TruncationTooLarge(u64),

    /// Invalid job document (parse or validation failure).
    #[error("invalid job: {0}")]
    InvalidJob(String),

    /// An error that occurred inside a named pipeline step.
    #[error("{op}: {source}")]
    InOperation {
        op: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Hard cap on series length.
    pub const MAX_TRUNCATION: u64 = 1 << 28;

    /// Wrap the error with the name of the operation that produced it.
    pub fn in_op(self, op: &'static str) -> Self {
        Error::InOperation {
            op,
            source: Box::new(self),
        }
    }

    /// True when the error means "a hypothesis is missing", as opposed to a
    /// malformed input or an arithmetic contract violation.
    pub fn is_hypothesis_gap(&self) -> bool {
        match self {
            Error::HypothesisNotAsserted(_) => true,
            Error::InOperation { source, .. } => source.is_hypothesis_gap(),
            _ => false,
        }
    }
}
