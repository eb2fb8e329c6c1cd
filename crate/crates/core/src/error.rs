use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("the zero vector spans no ray")]
    ZeroVector,
    #[error("vectors are linearly dependent or repeated")]
    Dependent,
    #[error("vectors do not extend to a lattice basis (invariant factors {0:?})")]
    NotExtendable(Vec<i64>),
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    #[error("integer overflow converting {0} to a machine integer")]
    Overflow(String),
    #[error("cone is not strongly convex")]
    NotStronglyConvex,
    #[error("ray indices {0:?} do not span a face")]
    NotAFace(Vec<usize>),
    #[error("ray index {index} out of range for {count} rays")]
    RayIndex { index: usize, count: usize },
    #[error("face is not regular")]
    FaceNotRegular,
    #[error("{e:?} is not a Demazure root for ray {ray}")]
    NotDemazureRoot { e: Vec<i64>, ray: usize },
    #[error("collection is not compatible with the face: {0}")]
    NotCompatible(String),
    #[error("exponent {0:?} lies outside the semigroup")]
    OutsideSemigroup(Vec<i64>),
    #[error("lattice-point search box exceeded: bound {bound}, required {required}")]
    SearchBoxExceeded { bound: i64, required: i64 },
    #[error("division by zero evaluating a negative power")]
    DivisionByZero,
    #[error("missing value for coordinate {0}")]
    MissingValue(usize),
    #[error("collection is not active: the characters χ_r are linearly dependent, but the automorphism description needs them independent")]
    Inactive,
    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("{0}")]
    Input(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// Stable name of the variant, used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::ZeroVector => "zero_vector",
            Error::Dependent => "dependent",
            Error::NotExtendable(_) => "not_extendable",
            Error::NotUnimodular(_) => "not_unimodular",
            Error::Overflow(_) => "overflow",
            Error::NotStronglyConvex => "not_strongly_convex",
            Error::NotAFace(_) => "not_a_face",
            Error::RayIndex { .. } => "ray_index",
            Error::FaceNotRegular => "face_not_regular",
            Error::NotDemazureRoot { .. } => "not_demazure_root",
            Error::NotCompatible(_) => "not_compatible",
            Error::OutsideSemigroup(_) => "outside_semigroup",
            Error::SearchBoxExceeded { .. } => "search_box_exceeded",
            Error::DivisionByZero => "division_by_zero",
            Error::MissingValue(_) => "missing_value",
            Error::Inactive => "inactive",
            Error::InvalidRootDatum(_) => "invalid_root_datum",
            Error::InvalidCone(_) => "invalid_cone",
            Error::Input(_) => "input",
            Error::Internal(_) => "internal",
        }
    }
}
