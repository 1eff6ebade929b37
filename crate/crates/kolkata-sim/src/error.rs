use thiserror::Error;

/// Error type shared by every module in this crate.
///
/// The three variants map onto the three failure classes the tools
/// distinguish: values outside an operation's domain, inputs that exceed a
/// deliberate cost guard, and data that violates a structural invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The input is structurally valid but larger than a hard cost guard
    /// (factorial-sized expansions, dense determinants).
    #[error("capacity error: {0}")]
    Capacity(String),
    /// A value that should satisfy a structural invariant does not
    /// (e.g. a measurement record with duplicate momenta).
    #[error("integrity error: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
