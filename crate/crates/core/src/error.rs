use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("cannot parse cyclotomic `{0}`")]
    Parse(String),

    #[error("non-invertible series")]
    NonInvertibleSeries,
    #[error("cube root undefined in series ring")]
    CubeRootUndefined,
    #[error("outside upper half-plane")]
    OutsideUpperHalfPlane,
    #[error("invalid Eisenstein weight {0}: need an even weight >= 4")]
    InvalidWeight(i64),
    #[error("invalid truncation order {0}")]
    InvalidOrder(i64),

    #[error("group too large or infinite (more than {cap} elements)")]
    GroupTooLarge { cap: usize },
    #[error("unknown group name `{0}`")]
    UnknownGroup(String),
    #[error("elements do not form a subgroup of the ambient group")]
    NotASubgroup,
    #[error("group has no defining two-dimensional representation")]
    NoDefiningRepresentation,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("character table computation failed: {0}")]
    CharacterTable(String),

    #[error("defining row is not a character: a[{i}][{j}] = {value}")]
    NotACharacter { i: usize, j: usize, value: String },
    #[error("not an affine ADE diagram")]
    NotAffineAde,
    #[error("not a finite root system (closure exceeded {cap} roots)")]
    InfiniteRootSystem { cap: usize },
    #[error("simple roots are linearly dependent")]
    DependentRoots,
    #[error("reflection coefficient 2(a,b)/(a,a) = {0} is not an integer")]
    NonIntegralReflection(String),
    #[error("inadmissible angle between simple roots {i} and {j}: cos^2 = {cos2}")]
    InadmissibleAngle { i: usize, j: usize, cos2: String },

    #[error("irrep data, line {line}: {reason}")]
    IrrepData { line: usize, reason: String },
    #[error("search bounds too large (max irreps {max_irreps}, max multiplicity {max_mult}); use at most 10 for each")]
    SearchBounds { max_irreps: usize, max_mult: u32 },
    #[error("irrep index {0} out of range")]
    IrrepIndex(usize),

    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
