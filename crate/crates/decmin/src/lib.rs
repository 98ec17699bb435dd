//! Egalitarian (decreasingly minimal) optimization over the integer points of
//! integral base-polyhedra.
//!
//! A ground set `S` and an integer-valued supermodular set function `p` with
//! `p(empty) = 0` and `p(S)` finite define the base-polyhedron
//!
//! ```text
//! B'(p) = { x : x(S) = p(S),  x(X) >= p(X) for every X subset of S }
//! ```
//!
//! whose integer points form an M-convex set.  This crate computes and
//! certifies the *decreasingly minimal* (dec-min) members of that set: the
//! vectors whose largest component is as small as possible, within that the
//! second largest, and so on.  Around that single optimization problem it
//! provides:
//!
//! * [`core`] — ground sets, subset bitmasks, oracles, membership tests with
//!   violation witnesses, greedy vertices, the linear (Lovász) extension,
//!   tight-set machinery, restriction and contraction;
//! * [`solver`] — the decreasing preorder, 1-tightening local search, and
//!   chain certificates of optimality;
//! * [`canonical`] — the essential value-sequence, peak sets, and the
//!   canonical chain/partition that every dec-min element induces;
//! * [`matroid`] — the matroidal description of the full dec-min set,
//!   value-fixed elements, and cheapest dec-min elements by matroid greedy;
//! * [`duality`] — square-sum and difference-sum objectives, a local
//!   optimality test for separable convex objectives, and exact integer
//!   min-max certificates for the minimum square-sum;
//! * [`instances`] — graph orientation, bipartite semi-matching, and matroid
//!   base-packing front ends, plus the JSON instance format;
//! * [`reference`] — small-scale brute-force enumeration used to cross-check
//!   every other module.
//!
//! The oracle backend is an exhaustive subset scan, deliberately so: the crate
//! targets desk-scale instances (up to 20 elements) where every answer can be
//! certified, not large-scale production solving.
//!
//! # Example
//!
//! ```
//! use decmin::core::{GroundSet, IntVector};
//! use decmin::instances::MultiGraph;
//! use decmin::{canonical, duality, instances, solver};
//!
//! // Distribute the in-degrees of a small multigraph as evenly as possible.
//! let g = MultiGraph::parse(&["a", "b", "c"], &[("a", "b"), ("a", "c"), ("b", "c"), ("b", "c")])?;
//! let inst = instances::orientation_instance(&g);
//! let (_orientation, indeg) = instances::decmin_orientation(&g)?;
//! assert!(solver::is_dec_min(&inst, &indeg)?.is_dec_min());
//!
//! // The canonical decomposition and the dual certificate agree exactly.
//! let dec = canonical::canonical_decomposition(&inst)?;
//! let pi = duality::canonical_dual(&dec);
//! assert_eq!(duality::dual_value(&inst, &pi)?, duality::square_sum(&indeg));
//! # Ok::<(), decmin::Error>(())
//! ```

pub mod canonical;
pub mod core;
pub mod duality;
mod error;
pub mod guide;
pub mod instances;
pub mod matroid;
pub mod reference;
pub mod solver;

pub use error::Error;
