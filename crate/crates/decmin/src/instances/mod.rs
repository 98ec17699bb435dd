//! Concrete oracle families: graph orientations, bipartite load
//! balancing, matroid k-bases, and a JSON interchange format.
//!
//! Each constructor returns a [`SupermodularInstance`](crate::core::SupermodularInstance)
//! whose members are the combinatorial objects of interest encoded as
//! integer vectors:
//!
//! * [`orientation_instance`]: in-degree vectors of the orientations of a
//!   multigraph, via `p(X) =` number of edges with both ends in `X`;
//! * [`semimatching_instance`]: load vectors of assignments of right-side
//!   nodes to adjacent left-side nodes, via `p(X) =` number of right nodes
//!   whose whole neighborhood lies in `X`;
//! * [`kbases_instance`]: sums of `k` matroid bases, via the box-truncated
//!   rank difference `k (r(S) − r(S−X))`.
//!
//! [`decmin_orientation`] and [`orientation_from_indegrees`] translate
//! between members and orientations, so the abstract solver output can be
//! realized as an actual orientation of the graph.

mod bipartite;
mod format;
mod graph;
mod matroids;

pub use bipartite::{semimatching_instance, BipartiteGraph};
pub use format::{parse_instance, vector_from_named, ParsedInstance};
pub use graph::{
    decmin_orientation, orientation_from_indegrees, orientation_instance, MultiGraph, Orientation,
};
pub use matroids::{kbases_instance, truncate_to_box, ExplicitMatroid};
