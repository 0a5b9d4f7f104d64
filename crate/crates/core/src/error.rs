use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("mismatched primes {0} and {1}")]
    PrimeMismatch(u64, u64),
    #[error("{what}: expected a {}x{} matrix, found {}x{}", expected.0, expected.1, found.0, found.1)]
    Dimension { what: String, expected: (usize, usize), found: (usize, usize) },
    #[error("{0} is not a well-defined homomorphism")]
    IllDefined(String),
    #[error("action is not a well-defined automorphism of order dividing {0}")]
    InvalidAction(u64),
    #[error("Mackey functor axioms violated: {0}")]
    AxiomViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
