//! Crate-wide error type. Every variant names the violated precondition;
//! [`Error::module`] reports the originating subsystem.

use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    // field
    NotPrime(u64),
    ReducibleModulus,
    DegreeMismatch { expected: usize, got: usize },
    DivisionByZero,
    FieldMismatch,
    InvalidSubfieldDegree { d: usize, m: usize },
    // curve
    PointNotOnCurve,
    FieldTooLarge { order: u128, cap: u128 },
    SingularCurve,
    CurveMismatch,
    // function
    ZeroFunction,
    UnsupportedPlace,
    PoleAtPoint,
    // riemann_roch
    InvalidDegree(i64),
    CharThreeUnsupported,
    DegenerateDenominator,
    UnsupportedPoint,
    NoSolution,
    DuplicatePoints,
    BadOrbitPoint,
    OrbitCollision,
    UnsupportedOrder(usize),
    InsufficientPoints { needed: usize, got: usize },
    EmptyBasis,
    // code
    RaggedRows,
    BadBlockLength { ell: usize, n: usize },
    CodeTooLarge,
    // families
    SupportOverlap,
    DegreeOutOfRange,
    NotInvariant,
    ExclusionViolated,
    FunctionInSpace,
    ExponentCaseViolated,
    // distinguisher
    HypothesisViolated,
    NonIntegralBound { twice_value: i128 },
    SideConditionViolated,
}

impl Error {
    /// Name of the subsystem the error originates from.
    pub fn module(&self) -> &'static str {
        use Error::*;
        match self {
            NotPrime(_) | ReducibleModulus | DegreeMismatch { .. } | DivisionByZero
            | FieldMismatch | InvalidSubfieldDegree { .. } => "field",
            PointNotOnCurve | FieldTooLarge { .. } | SingularCurve | CurveMismatch => "curve",
            ZeroFunction | UnsupportedPlace | PoleAtPoint => "function",
            InvalidDegree(_) | CharThreeUnsupported | DegenerateDenominator | UnsupportedPoint
            | NoSolution | DuplicatePoints | BadOrbitPoint | OrbitCollision
            | UnsupportedOrder(_) | InsufficientPoints { .. } | EmptyBasis => "riemann_roch",
            RaggedRows | BadBlockLength { .. } | CodeTooLarge => "code",
            SupportOverlap | DegreeOutOfRange | NotInvariant | ExclusionViolated
            | FunctionInSpace | ExponentCaseViolated => "families",
            HypothesisViolated | NonIntegralBound { .. } | SideConditionViolated => {
                "distinguisher"
            }
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        write!(f, "[{}] ", self.module())?;
        match self {
            NotPrime(p) => write!(f, "{p} is not prime"),
            ReducibleModulus => write!(f, "modulus polynomial is reducible"),
            DegreeMismatch { expected, got } => {
                write!(f, "degree mismatch: expected {expected}, got {got}")
            }
            DivisionByZero => write!(f, "division by zero"),
            FieldMismatch => write!(f, "operands belong to different fields"),
            InvalidSubfieldDegree { d, m } => {
                write!(f, "subfield degree {d} does not divide extension degree {m}")
            }
            PointNotOnCurve => write!(f, "point does not satisfy the curve equation"),
            FieldTooLarge { order, cap } => {
                write!(f, "field order {order} exceeds enumeration cap {cap}")
            }
            SingularCurve => write!(f, "curve is singular (zero discriminant)"),
            CurveMismatch => write!(f, "operands belong to different curves"),
            ZeroFunction => write!(f, "valuation of the zero function is undefined"),
            UnsupportedPlace => {
                write!(f, "denominator has an irreducible factor of degree > 1 (closed place)")
            }
            PoleAtPoint => write!(f, "function has a pole at the evaluation point"),
            InvalidDegree(k) => write!(f, "divisor degree {k} is out of range (need >= 1)"),
            CharThreeUnsupported => {
                write!(f, "Taylor recurrence is unavailable in characteristic 3; use solve")
            }
            DegenerateDenominator => {
                write!(f, "Taylor coefficient denominator vanishes at this point")
            }
            UnsupportedPoint => write!(f, "point violates the construction preconditions"),
            NoSolution => write!(f, "linear system for the numerator is inconsistent"),
            DuplicatePoints => write!(f, "divisor points must be pairwise distinct"),
            BadOrbitPoint => {
                write!(f, "orbit representative lies in the excluded point set")
            }
            OrbitCollision => write!(f, "orbits are not pairwise disjoint"),
            UnsupportedOrder(l) => write!(f, "automorphism order {l} is not supported here"),
            InsufficientPoints { needed, got } => {
                write!(f, "need at least {needed} evaluation points, got {got}")
            }
            EmptyBasis => write!(f, "divisor has degree 0: the space is trivial"),
            RaggedRows => write!(f, "matrix rows have inconsistent lengths"),
            BadBlockLength { ell, n } => {
                write!(f, "block length {ell} does not divide code length {n}")
            }
            CodeTooLarge => write!(f, "code exceeds the exhaustive-enumeration cap"),
            SupportOverlap => write!(f, "divisor supports are not disjoint"),
            DegreeOutOfRange => write!(f, "divisor degree out of the valid range for this code"),
            NotInvariant => write!(f, "divisor is not invariant under the automorphism"),
            ExclusionViolated => {
                write!(f, "orbit representative lies in the excluded point set")
            }
            FunctionInSpace => {
                write!(f, "scaling function already lies in the Riemann-Roch space")
            }
            ExponentCaseViolated => {
                write!(f, "multiplier exponents violate the quasi-cyclic case split")
            }
            HypothesisViolated => write!(f, "bound hypothesis s > g_ab violated"),
            NonIntegralBound { twice_value } => {
                write!(f, "bound is not an integer (twice the value is {twice_value})")
            }
            SideConditionViolated => {
                write!(f, "one-point bound side condition on s_inf violated")
            }
        }
    }
}

#[cfg(any(test, feature = "std"))]
impl std::error::Error for Error {}
