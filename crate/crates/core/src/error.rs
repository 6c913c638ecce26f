use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An enumeration would exceed the configured degree cap.
    #[error("degree {degree} exceeds the configured maximum {max}")]
    BoundExceeded { degree: usize, max: usize },
    /// A bialgebra description failed one of its laws.
    #[error("invalid bialgebra: {0}")]
    InvalidBialgebra(String),
}
