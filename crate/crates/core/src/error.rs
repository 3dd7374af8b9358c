use thiserror::Error;

/// Errors raised while constructing or enumerating groups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("a group needs at least one generator")]
    NoGenerators,

    #[error("generators are of mixed kinds: {first} and {other}")]
    KindMismatch { first: String, other: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field of order {p}^{k} exceeds 2^16")]
    SizeOverflow { p: u64, k: u32 },

    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("unsupported classical family `{0}`")]
    UnsupportedFamily(String),

    #[error("{group}: closure order {found} differs from the order formula {expected}")]
    OrderMismatch {
        group: String,
        expected: u64,
        found: u64,
    },

    #[error("no pair of odd primes with distinct element counts: {0}")]
    NoWitness(String),
}
