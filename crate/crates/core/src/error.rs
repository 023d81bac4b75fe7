use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("divisor must be monic")]
    NonMonicDivisor,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("every cyclotomic polynomial divides the zero polynomial")]
    ZeroPolynomial,

    #[error("jump {jump} is outside 1..={max} for circulant order {n}")]
    JumpOutOfRange { jump: usize, n: usize, max: usize },
    #[error("jump {0} is repeated")]
    DuplicateJump(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} appears twice")]
    MultiEdge(usize, usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("unknown named graph `{0}`")]
    UnknownGraph(String),
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
    #[error("order {0} is outside the supported graph6 range 0..=258047")]
    Graph6Order(usize),

    #[error("order {order} exceeds the direct-route limit {limit}; use the polynomial route")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("factor graph is not a certified nut graph: {0}")]
    FactorNotNut(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} is below ell = {ell}")]
    PrimeBelowEll { p: u64, ell: u64 },
}
