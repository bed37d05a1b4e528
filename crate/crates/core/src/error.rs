use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph size {0} exceeds the supported ceiling of {1} vertices")]
    TooManyVertices(usize, usize),
    #[error("vertex {0} is not a vertex of a graph on {1} vertices")]
    NoSuchVertex(usize, usize),
    #[error("{{{0},{1}}} is not an edge")]
    NoSuchEdge(usize, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("zero ideal has no Betti table: the graph has no edges")]
    Edgeless,
    #[error("the unit ideal has no Stanley-Reisner complex")]
    UnitIdeal,
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("computation budget exceeded: {0}")]
    Budget(String),
    #[error("A_n undetermined: pairs with r = n - 1 = {0} are not covered by the closed form")]
    Undetermined(u32),
    #[error("({0}, {1}) is not realizable per the closed form for n = {2}")]
    NotRealizable(u32, u32, usize),
    #[error("connected graphs on {0} vertices have proj dim >= {1}, requested {2}")]
    ContradictsConnectedBound(usize, u32, u32),
    #[error("construction {rule} claims {claimed} but the engine computes {computed}")]
    CertificateMismatch {
        rule: String,
        claimed: String,
        computed: String,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
