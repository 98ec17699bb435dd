use thiserror::Error;

/// Unified error type for the whole crate.
///
/// Oracle scans are exponential in the ground-set size, so every operation
/// that would touch all subsets is gated by a scan limit and fails with
/// [`Error::ScanTooLarge`] instead of silently burning time.  Enumeration of
/// solution sets is gated the same way through [`Error::BudgetExceeded`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation needs to scan all subsets of an `n`-element ground set
    /// and `n` exceeds the configured scan limit.
    #[error("ground set has {n} elements but subset scans are limited to {limit}; raise the scan limit to force the scan")]
    ScanTooLarge { n: usize, limit: usize },

    /// An enumeration would have to visit more points than the caller's
    /// budget allows.
    #[error("enumeration budget exceeded: {needed} candidate points, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    /// A greedy prefix evaluates to minus infinity, so no vector can satisfy
    /// the corresponding constraints with the requested order.
    #[error("greedy prefix with mask {mask:#b} has value -inf; the instance has no member respecting this order")]
    InfeasiblePrefix { mask: u64 },

    /// A vector has the wrong number of components for the ground set.
    #[error("vector has {got} components but the ground set has {want}")]
    DimensionMismatch { want: usize, got: usize },

    /// A sequence of element indices is not a permutation of the ground set.
    #[error("index sequence is not a permutation of the ground set")]
    NotPermutation,

    /// An exchange was requested with identical source and target.
    #[error("exchange endpoints must differ (both are element {index})")]
    SameElement { index: usize },

    /// A k-largest-sum query with k outside `1..=n`.
    #[error("k must be between 1 and {n}, got {k}")]
    BadK { k: usize, n: usize },

    /// A vector expected to lie in the M-convex set does not.
    #[error("vector is not a member of the instance's integer base-polyhedron")]
    NotMember,

    /// A vector expected to be decreasingly minimal is not.
    #[error("vector is a member but not decreasingly minimal")]
    NotDecMin,

    /// A separable objective is not discretely convex at some point.
    #[error("objective for element {index} is not convex at argument {at}")]
    NonConvexPhi { index: usize, at: i64 },

    /// A separable objective was evaluated outside its tabulated range.
    #[error("objective for element {index} has no tabulated value at argument {at}")]
    PhiRange { index: usize, at: i64 },

    /// Automatic enumeration bounds do not exist because the set of members
    /// is unbounded in some coordinate.
    #[error("cannot derive finite enumeration bounds for element {index}; supply explicit bounds")]
    UnboundedBounds { index: usize },

    /// A graph instance contains a self-loop, which no orientation model
    /// accepts.
    #[error("graph has a self-loop at node {node:?}")]
    SelfLoop { node: String },

    /// A matroid description violates a matroid axiom.
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    /// An instance violates a structural requirement (bad ground set, oracle
    /// axioms, empty neighborhoods, and similar).
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// An instance file or vector literal could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}
