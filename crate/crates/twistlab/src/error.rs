use alloc::string::String;
use core::fmt;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidCartanType { family: char, rank: usize },
    NodeOutOfRange { node: usize, rank: usize },
    LengthMismatch { expected: usize, found: usize },
    NotDominant,
    NotMinuscule { node: usize },
    NotAPositiveRoot,
    UnsupportedFolding { family: char, rank: usize, order: u32 },
    NotInLattice,
    NoHighestWeightElement,
    PathsDependent { weight: String },
    NotInSpan { weight: String },
    ZeroVector,
    NotHighestWeight,
    NotNilpotent { bound: usize },
    NotTwistedLoopElement,
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidCartanType { family, rank } => write!(f, "invalid Cartan type {family}{rank}"),
            Error::NodeOutOfRange { node, rank } => write!(f, "node {node} out of range 1..={rank}"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, found {found}")
            }
            Error::NotDominant => f.write_str("weight is not dominant"),
            Error::NotMinuscule { node } => write!(f, "node {node} is not minuscule"),
            Error::NotAPositiveRoot => f.write_str("not a positive root"),
            Error::UnsupportedFolding { family, rank, order } => {
                write!(f, "no standard automorphism of order {order} on {family}{rank}")
            }
            Error::NotInLattice => f.write_str("coordinates do not lie in the coinvariant lattice"),
            Error::NoHighestWeightElement => f.write_str("no highest-weight element of the requested weight"),
            Error::PathsDependent { weight } => write!(f, "path vectors of weight {weight} are linearly dependent"),
            Error::NotInSpan { weight } => write!(f, "vector of weight {weight} is not in the span of the basis"),
            Error::ZeroVector => f.write_str("zero vector"),
            Error::NotHighestWeight => f.write_str("vector is not a highest-weight vector"),
            Error::NotNilpotent { bound } => write!(f, "operator not nilpotent on vector within {bound} steps"),
            Error::NotTwistedLoopElement => f.write_str("element is not fixed by the twisted loop automorphism"),
            Error::Invalid(s) => f.write_str(s),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
