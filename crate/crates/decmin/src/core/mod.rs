//! Ground sets, subsets as bitmasks, extended integers, integer vectors, and
//! the supermodular oracle type with its base-polyhedron primitives.

mod ext_int;
mod ground;
mod instance;
mod ops;
mod subset;
mod vector;

pub use ext_int::ExtInt;
pub use ground::GroundSet;
pub use instance::{Source, SupermodularInstance, DEFAULT_SCAN_LIMIT, MEMO_LIMIT};
pub use subset::Subset;
pub use vector::IntVector;

/// Ceiling of `a / b` for integers, `b > 0`.
pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

/// Floor of `a / b` for integers, `b > 0`.
pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}
