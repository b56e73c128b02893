use thiserror::Error;

use crate::hexcore::{DirectionClass, LatticeVertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} and {1} are not adjacent on the hexagonal lattice")]
    InvalidEdge(LatticeVertex, LatticeVertex),

    #[error("vertex id {0} is out of range")]
    InvalidVertex(usize),

    #[error("vertex set is not connected")]
    NotConnected,

    #[error("hexagon set is empty")]
    EmptyHexSet,

    #[error("hexagons do not form a connected system")]
    DisconnectedHexes,

    #[error("hexagon set encloses a hole")]
    HasHoles,

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    /// A component of `G - E_i` that is neither a path nor a cycle.
    #[error(
        "component containing vertex {vertex} of G - {direction} is neither a path nor a cycle"
    )]
    MalformedComponent {
        direction: DirectionClass,
        vertex: usize,
    },

    #[error("closed formula unavailable: {0}")]
    FormulaUnavailable(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph JSON: {0}")]
    Json(String),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidEdge(..) => "InvalidEdge",
            Error::InvalidVertex(_) => "InvalidVertex",
            Error::NotConnected => "NotConnected",
            Error::EmptyHexSet => "EmptyHexSet",
            Error::DisconnectedHexes => "DisconnectedHexes",
            Error::HasHoles => "HasHoles",
            Error::ParamOutOfRange(_) => "ParamOutOfRange",
            Error::MalformedComponent { .. } => "MalformedComponent",
            Error::FormulaUnavailable(_) => "FormulaUnavailable",
            Error::Validation(_) => "Validation",
            Error::Parse { .. } => "Parse",
            Error::Json(_) => "Json",
        }
    }
}
