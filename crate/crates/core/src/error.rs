//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus mismatch: operands live over F_{0} and F_{1}")]
    DistinctField(String, String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("invalid modulus polynomial: {0}")]
    InvalidModulus(String),

    #[error("polynomial is not squarefree over F_{0}; handle ramified primes separately")]
    NotSquarefree(String),

    #[error(
        "prime {p} divides the defining-polynomial discriminant; use conductor data or exclude it"
    )]
    RamifiedOrIndex { p: u64 },

    #[error("prime {p} divides the conductor {m}; conductor primes ramify")]
    RamifiedConductor { p: u64, m: u64 },

    #[error("factors of the defining polynomial mod {p} have unequal degrees {degrees:?}; the field is not Galois over Q")]
    NotGalois { p: u64, degrees: Vec<usize> },

    #[error("{0:?} is not a subgroup of (Z/{1}Z)*")]
    InvalidSubgroup(Vec<u64>, u64),

    #[error("prime {p} divides the level {level}")]
    LevelPrime { p: u64, level: u64 },

    #[error("missing Hecke eigenvalue a({p}) for {label} (table bound {bound})")]
    InsufficientData { label: String, p: u64, bound: u64 },

    #[error("cannot coerce {0} into the coefficient field defined by {1}")]
    FieldCoercion(String, String),

    #[error("value is not rational: {0}")]
    NotRational(String),

    #[error("denominator of {value} is divisible by {p}; reduction is undefined")]
    NonIntegral { value: String, p: u64 },

    #[error("factor index {index} out of range: defining polynomial has {count} irreducible factors mod {p}")]
    FactorIndex { index: usize, count: usize, p: u64 },

    #[error("no unit root: form is not ordinary at {p}")]
    NoUnitRoot { p: u64 },

    #[error("double root mod {p}: cannot separate the two Hecke roots")]
    SupersingularAmbiguity { p: u64 },

    #[error("no specialization at weight {weight} in the family")]
    MissingSpecialization { weight: u32 },

    #[error("weight mismatch: candidate {label} has weight {got}, expected {want}")]
    WeightMismatch { label: String, got: u32, want: u32 },

    #[error("no embedding of the coefficient field into the Hecke field of {label}: {reason}")]
    NoEmbedding { label: String, reason: String },

    #[error("index {0} is not smooth with respect to the supplied Euler factors")]
    NonSmoothIndex(u64),

    #[error("duplicate Euler factor at prime {0}")]
    DuplicatePrime(u64),

    #[error("twisted product has a residual cyclotomic part: {0}")]
    CyclotomicResidue(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("data source failure: {0}")]
    DataSource(String),

    #[error("failed to parse {context}: {message}")]
    Parse { context: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Coarse classification used by callers that map errors to process exit codes.
    pub fn is_data_source(&self) -> bool {
        matches!(self, Error::DataSource(_) | Error::Parse { .. })
    }

    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_)
                | Error::NotPrime(_)
                | Error::InvalidSubgroup(_, _)
                | Error::FactorIndex { .. }
                | Error::MissingSpecialization { .. }
        )
    }
}
