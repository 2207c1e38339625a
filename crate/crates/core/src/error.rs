use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by a series whose known coefficients are all zero")]
    DivisionByZeroSeries,

    #[error("quotient is not representable up to degree 0 (known only through degree {top})")]
    TruncationUnderflow { top: i64 },

    #[error("coefficient of x^{degree} is beyond the truncation order {trunc_order}")]
    UnknownCoefficient { degree: i64, trunc_order: i64 },

    #[error("series known only through x^{achieved}, x^{requested} was requested; raise the guard terms")]
    GuardInsufficient { requested: i64, achieved: i64 },

    #[error("sample points do not lie on a polynomial of degree <= {max_degree}")]
    DegreeExceeded { max_degree: usize },

    #[error("interpolation needs {needed} distinct points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("interpolation abscissae are not pairwise distinct")]
    RepeatedAbscissa,

    #[error("({n}, {m}) is not a torus knot: gcd(|n|, |m|) must be 1 and both nonzero")]
    NotAKnot { n: i64, m: i64 },

    #[error("invalid group instance: {0}")]
    InvalidGroup(String),

    #[error("the (lambda t - 1) factor could not be cancelled for n = {n}")]
    CancellationFailure { n: i64 },

    #[error("bracket [{p};1] vanishes identically for N = {big_n}")]
    SingularBracket { p: i64, big_n: i64 },

    #[error("C2 = 0 in group factor {factor}")]
    ZeroCasimirDivision { factor: usize },

    #[error("order {order}: rank {rank} is below the {unknowns} unknowns")]
    RankDeficient { order: u8, rank: usize, unknowns: usize },

    #[error("order {order}: overdetermined system is inconsistent")]
    Inconsistent { order: u8 },

    #[error("ansatz mismatch: {0}")]
    AnsatzMismatch(String),

    #[error("unsupported request: {0}")]
    Unsupported(String),
}
