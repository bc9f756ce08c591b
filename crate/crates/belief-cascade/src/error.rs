use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Library-wide error type.
///
/// `exit_code` groups the variants into the process exit classes used by the
/// command-line front end: 2 for configuration problems, 3 for numerical
/// failures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("probability {0} is outside the open interval (0, 1)")]
    InvalidProbability(f64),

    #[error("cost {0} must be positive and finite")]
    InvalidCost(f64),

    #[error("noise standard deviation {0} must be positive and finite")]
    InvalidSigma(f64),

    #[error("a cascade needs at least one agent")]
    NoAgents,

    #[error("decision history has {got} entries but agent {agent_index} expects {expected}")]
    HistoryLength {
        agent_index: usize,
        expected: usize,
        got: usize,
    },

    #[error("{n} agents exceeds the exact-enumeration bound of {max}; use the sampler instead")]
    TooManyAgents { n: usize, max: usize },

    #[error("joint belief search supports at most {max} agents, got {n}")]
    JointSearchTooLarge { n: usize, max: usize },

    #[error("stationarity identity is degenerate: the follower's conditional error probabilities coincide")]
    DegenerateStationarity,

    #[error("belief refinement did not converge within {0} rounds")]
    NoConvergence(usize),

    #[error("grids must be nonempty, of matching length, and inside (0, 1)")]
    GridShape,

    #[error("invalid decision bit {0}; expected 0 or 1")]
    InvalidBit(u8),

    #[error("at least one sample is required")]
    NoSamples,

    #[error("cannot read config {path}: {source}")]
    ConfigIo {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("config {path} is invalid at line {line}, column {column}: {message}")]
    ConfigParse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("cannot write {path}: {source}")]
    OutputIo {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code for the CLI: 2 for config/input errors, 3 for
    /// numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DegenerateStationarity | Error::NoConvergence(_) => 3,
            _ => 2,
        }
    }
}
