use crate::rootsys::{PositiveRoot, RootSystemKind};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {n} is out of range for type {kind} (minimum {min})")]
    RankOutOfRange {
        kind: RootSystemKind,
        n: usize,
        min: usize,
    },

    #[error("root {root} is not a positive root of {kind}_{n}")]
    InvalidRoot {
        kind: RootSystemKind,
        n: usize,
        root: PositiveRoot,
    },

    #[error("cannot parse root {0:?}")]
    RootSyntax(String),

    #[error("cannot parse rational {0:?}")]
    RationalSyntax(String),

    #[error("unknown root system kind {0:?}")]
    KindSyntax(String),

    #[error("functionals live in different root systems")]
    SystemMismatch,

    #[error("operation requires a type A root system, got type {0}")]
    WrongKind(RootSystemKind),

    #[error("the scalar c of an elementary orbit must be nonzero")]
    ZeroScalar,

    #[error("basic map values must be nonzero (root {0})")]
    ZeroBasicValue(PositiveRoot),

    #[error("root set is not a basic subset")]
    NotBasic,

    #[error("basic map domain does not match the basic subset")]
    BasicMapDomain,

    #[error("singular assignment is missing root {0}")]
    MissingVariable(PositiveRoot),

    #[error("singular assignment has non-singular root {0}")]
    ExtraVariable(PositiveRoot),

    #[error("functional does not lie in the elementary orbit of {0}")]
    NotInOrbit(PositiveRoot),

    #[error("decomposition could not be verified: {0}")]
    DecompositionUnverified(String),

    #[error("no sign convention survives for type {kind}")]
    NoConvention { kind: RootSystemKind },

    #[error("sign convention for type {kind} is ambiguous: {survivors:?} all survive")]
    AmbiguousConvention {
        kind: RootSystemKind,
        survivors: Vec<String>,
    },

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("malformed document: {0}")]
    Schema(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
