use thiserror::Error;

/// Errors raised by the field, ring, code and bound routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    BadModulus(u32),
    #[error("no default modulus for GF({p}^{s}); pass an explicit modulus")]
    UnsupportedField { p: u32, s: u32 },
    #[error("element does not belong to the field")]
    FieldMismatch,
    #[error("operands live in different skew polynomial rings")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero element has no multiplicative order")]
    ZeroOrder,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial is not invariant (Rf != fR)")]
    NotInvariant,
    #[error("constant coefficient of the modulus is zero")]
    ZeroConstantTerm,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("map is not additive")]
    NotAdditive,
    #[error("generator polynomial does not right-divide the modulus")]
    NotRightDivisor,
    #[error("degenerate code: {0}")]
    DegenerateCode(String),
    #[error("enumeration budget exceeded: need {needed}, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
