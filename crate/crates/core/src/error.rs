use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the operation's domain (even time index, negative order, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An internal identity that must hold did not (indicates an upstream bug).
    #[error("consistency violation: {0}")]
    Consistency(String),

    /// A recursion step was requested before the entries it depends on.
    #[error("missing dependency: {0}")]
    MissingDependency(String),

    /// A conjectured structural property failed on a computed case.
    #[error("conjecture counterexample: {0}")]
    Counterexample(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
