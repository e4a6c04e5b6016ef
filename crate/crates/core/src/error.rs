use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("EmptyGraph: the input defines no vertices")]
    EmptyGraph,
    #[error("SelfLoop: vertex `{0}` is adjacent to itself")]
    SelfLoop(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("InvalidOrdering: {0}")]
    InvalidOrdering(String),
    #[error("DisconnectedGraph: the input graph is not connected")]
    DisconnectedGraph,
    #[error("ComplementDisconnected: the complement of the input graph is not connected")]
    ComplementDisconnected,
    #[error("NotChordal: the neighborhood chosen at position {position} is not a clique")]
    NotChordal { position: usize },
    #[error("ComplementNotChordal: the complement neighborhood chosen at position {position} is not a clique")]
    ComplementNotChordal { position: usize },
    #[error("NotAPeo: the higher neighborhood of position {position} is not a clique")]
    NotAPeo { position: usize },
    #[error("NotMCComp: position {position} starts a clique equal to an existing node")]
    NotMCComp { position: usize },
    #[error("NonDclStructure: labeling structure `{0}` does not detect new cliques with labels")]
    NonDclStructure(String),
    #[error("InclusionConditionViolated: labeling structure `{0}` fails the inclusion condition")]
    InclusionConditionViolated(String),
    #[error("NotComplementReversing: labeling structure `{0}` is not complement-reversing")]
    NotComplementReversing(String),
    #[error("ScriptConflict: scripted vertex `{vertex}` is not an admissible choice at position {position}")]
    ScriptConflict { position: usize, vertex: String },
    #[error("InvalidScript: {0}")]
    InvalidScript(String),
    #[error("InputMismatch: {0}")]
    InputMismatch(String),
    #[error("OracleLimit: brute-force oracle supports at most {limit} vertices, got {n}")]
    OracleLimit { n: usize, limit: usize },
    #[error("BoundTooLarge: property checks support n_max <= {limit}, got {n_max}")]
    BoundTooLarge { n_max: usize, limit: usize },
}
