//! Error type shared by the engine.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum EngineError {
    /// Inputs live over different rings or ambient free modules.
    #[error("ambient mismatch: {0}")]
    Mismatch(String),

    /// Colon or saturation by the zero polynomial.
    #[error("colon by zero polynomial")]
    ZeroDivisorArgument,

    /// An operation that requires a nonzero module was handed the zero module.
    #[error("operation undefined for the zero module")]
    ZeroModule,

    /// A caller-side precondition was violated (e.g. restricting to a
    /// subring before the last variable was added to the submodule).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two independent random coordinate changes kept disagreeing.
    #[error("generic initial module unstable after retries (seeds tried: {seeds:?})")]
    GenericityFailure { seeds: Vec<u64> },

    /// A mathematical identity that must hold by theorem failed; this is
    /// an engine bug, never a property of the input.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
