use thiserror::Error;

/// Errors raised by the cube-complex toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("complex has no vertices")]
    Empty,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge references unknown vertex `{0}`")]
    UnknownEndpoint(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("graph is disconnected (`{0}` unreachable from `{1}`)")]
    Disconnected(String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("no unique median for ({0}, {1}, {2})")]
    NotMedian(String, String, String),
    #[error("path is not a geodesic")]
    NotGeodesic,
    #[error("theta relation is not transitive; input is not a median graph")]
    ThetaNotTransitive,
    #[error("hyperplane index {0} out of range")]
    UnknownHyperplane(usize),
    #[error("cube index {0} out of range")]
    UnknownCube(usize),
    #[error("hyperplanes are not pairwise crossing")]
    NotPairwiseCrossing,
    #[error("irreducibility needs at least two hyperplanes")]
    TooFewHyperplanes,
    #[error("vertex set is not convex")]
    NotConvex,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("hyperplanes {0} and {1} are not parallel")]
    NotParallel(usize, usize),
    #[error("hyperplanes {0} and {1} are not strongly separated")]
    NotStronglySeparated(usize, usize),
    #[error("hyperplanes {0} and {1} are not über-separated")]
    NotUberSeparated(usize, usize),
    #[error("map is not injective")]
    NotInjective,
    #[error("map does not preserve adjacency at ({0}, {1})")]
    NotAdjacencyPreserving(String, String),
    #[error("automorphism domain too small: {0}")]
    DomainTooSmall(String),
    #[error("halfspaces are not nested")]
    NotNested,
    #[error("group closure exceeded bound {0}")]
    Overflow(usize),
    #[error("automorphism is not total; group operations need full automorphisms")]
    PartialAutomorphism,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("Coxeter label {0} must be at least 2")]
    BadLabel(u32),
    #[error("Coxeter graph is not of FC type (failing clique {0:?})")]
    NotFcType(Vec<String>),
    #[error("no normal-form oracle for this Coxeter graph")]
    NoOracle,
    #[error("bad generator parameters: {0}")]
    BadParameters(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
