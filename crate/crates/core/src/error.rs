use thiserror::Error;

/// Errors produced by constructors and decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("duplicate label `{0}` in universe")]
    DuplicateLabel(String),
    #[error("invalid label `{0}`: labels must be nonempty and free of whitespace")]
    InvalidLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("operands belong to different universes")]
    UniverseMismatch,
    #[error("relation is not symmetric: ({x}, {y}) holds but ({y}, {x}) does not")]
    NotSymmetric { x: String, y: String },
    #[error("relation is not transitive: ({x}, {y}) and ({y}, {z}) hold but ({x}, {z}) does not")]
    NotTransitive { x: String, y: String, z: String },
    #[error("relation is not antisymmetric: ({x}, {y}) and ({y}, {x}) hold for distinct elements")]
    NotAntisymmetric { x: String, y: String },
    #[error("covering member {0} is empty")]
    EmptyMember(usize),
    #[error("family does not cover the universe: `{0}` is in no member")]
    NotACovering(String),
    #[error("duplicate family member at position {0}")]
    DuplicateMember(usize),
    #[error("block enumeration exceeded the cap of {cap} blocks")]
    BlockCapExceeded { cap: usize },
    #[error("search over {space} candidate subfamilies exceeds the limit of {limit}")]
    SearchCapExceeded { space: u128, limit: u128 },
    #[error("universe of size {n} exceeds the brute-force bound of {max}")]
    UniverseTooLarge { n: usize, max: usize },
    #[error("family is not a lattice: {0}")]
    NotALattice(String),
    #[error("lattice must have at least one nonzero element")]
    TrivialLattice,
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("set lattice carries no orthocomplement map")]
    MissingOrthocomplement,
    #[error("tolerance is not induced by an irredundant covering")]
    NotIrredundantlyInduced,
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
