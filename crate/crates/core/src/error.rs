//! The single error type shared by every module of the crate.

use thiserror::Error;

/// Every failure the engine can report.
///
/// Variants are deliberately specific: most of them signal that an input
/// violated a precondition, while a few ([`Error::NotDivisible`],
/// [`Error::ScheduleMismatch`], [`Error::NonIntegral`]) can only arise when a
/// mathematical invariant the engine relies on has been broken.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An arrow starts and ends at the same vertex.
    #[error("loop at vertex {0}")]
    Loop(usize),
    /// The quiver contains an oriented cycle.
    #[error("oriented cycle through vertex {0}")]
    Cycle(usize),
    /// The underlying graph is not connected.
    #[error("quiver is not connected")]
    Disconnected,
    /// Fewer than two vertices.
    #[error("quiver needs at least two vertices, got {0}")]
    TooSmall(usize),
    /// A vertex, level or position is out of range.
    #[error("index out of range: {0}")]
    Index(String),
    /// A vertex ordering is not adapted to the translation quiver.
    #[error("ordering is not adapted: {0}")]
    NotAdapted(String),
    /// A word is not reduced.
    #[error("word is not reduced: {0}")]
    NotReduced(String),
    /// The level vector violates successor-closedness along some arrow.
    #[error("terminal constraint violated: {0}")]
    TerminalConstraint(String),
    /// A requested translate does not exist (finite type ran out of room).
    #[error("translate does not exist: {0}")]
    DynkinOverflow(String),
    /// A quiver has a 2-cycle where an exchange matrix needs none.
    #[error("2-cycle between {0} and {1}")]
    TwoCycle(usize, usize),
    /// Attempted to mutate a frozen vertex.
    #[error("vertex {0} is frozen")]
    FrozenMutation(usize),
    /// Two polynomials live in rings with different numbers of variables.
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    /// An exact division left a remainder.
    #[error("not divisible: {0}")]
    NotDivisible(String),
    /// A non-unit was substituted into a variable carrying a negative exponent.
    #[error("cannot substitute a non-unit for variable {0} with negative exponent")]
    NegativeExponentSubstitution(usize),
    /// Two arrow sums tie in size but give different answers.
    #[error("ambiguous mutation at vertex {0}")]
    Ambiguity(usize),
    /// A step of a mutation schedule did not behave as predicted.
    #[error("schedule mismatch: {0}")]
    ScheduleMismatch(String),
    /// A divided power left a non-integral coefficient.
    #[error("non-integral coefficient: {0}")]
    NonIntegral(String),
    /// A module presented by slots and arrows is not valid.
    #[error("invalid thin module: {0}")]
    NotThin(String),
    /// Matrix or key shapes are inconsistent.
    #[error("shape error: {0}")]
    Shape(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
