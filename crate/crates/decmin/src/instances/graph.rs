//! Multigraphs, orientations, and the in-degree oracle.

use crate::core::{ExtInt, GroundSet, IntVector, Source, Subset, SupermodularInstance};
use crate::solver::candidate_pairs;
use crate::Error;

/// An undirected multigraph on at most 64 named nodes.
///
/// Parallel edges are allowed, self-loops are not.  Edges keep their input
/// order; every derived object (orientations, instances) is deterministic
/// in that order.
#[derive(Clone, Debug)]
pub struct MultiGraph {
    nodes: GroundSet,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    /// Builds a multigraph from a node set and endpoint index pairs.
    pub fn new(nodes: GroundSet, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        for &(u, v) in &edges {
            if u >= nodes.n() || v >= nodes.n() {
                return Err(Error::InvalidInstance(format!(
                    "edge endpoint {} out of range for {} nodes",
                    u.max(v),
                    nodes.n()
                )));
            }
            if u == v {
                return Err(Error::SelfLoop { node: nodes.name(u).to_string() });
            }
        }
        Ok(MultiGraph { nodes, edges })
    }

    /// Builds a multigraph from node names and endpoint name pairs.
    pub fn parse(names: &[&str], edges: &[(&str, &str)]) -> Result<Self, Error> {
        let nodes = GroundSet::new(names.iter().copied())?;
        let resolve = |name: &str| {
            nodes.index_of(name).ok_or_else(|| {
                Error::InvalidInstance(format!("unknown node {name:?} in edge list"))
            })
        };
        let edges = edges
            .iter()
            .map(|&(u, v)| Ok((resolve(u)?, resolve(v)?)))
            .collect::<Result<_, Error>>()?;
        Self::new(nodes, edges)
    }

    /// The node set.
    pub fn nodes(&self) -> &GroundSet {
        &self.nodes
    }

    /// Number of nodes.
    pub fn n(&self) -> usize {
        self.nodes.n()
    }

    /// The edges as endpoint index pairs, in input order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of edges, counting multiplicities.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degree of a node, counting parallel edges.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Number of edges with both endpoints in `x`.
    pub fn induced_edges(&self, x: Subset) -> i64 {
        self.edges
            .iter()
            .filter(|&&(a, b)| x.contains(a) && x.contains(b))
            .count() as i64
    }

    /// The orientation with every edge directed toward its
    /// lexicographically larger endpoint.
    fn initial_orientation(&self) -> Orientation {
        let heads = self
            .edges
            .iter()
            .map(|&(u, v)| if self.nodes.name(u) > self.nodes.name(v) { u } else { v })
            .collect();
        Orientation { graph: self.clone(), heads }
    }
}

/// The in-degree oracle of a multigraph: `p(X)` counts the edges induced
/// by `X`.
///
/// Its members are exactly the in-degree vectors of orientations of the
/// graph, so a dec-min member is an egalitarian orientation.
pub fn orientation_instance(g: &MultiGraph) -> SupermodularInstance {
    let graph = g.clone();
    SupermodularInstance::from_fn(g.nodes().clone(), Source::GraphInduced, move |x| {
        ExtInt::Finite(graph.induced_edges(x))
    })
    .expect("induced-edge counts are supermodular with p(empty) = 0")
}

/// An orientation of a multigraph: each edge is assigned a head endpoint.
#[derive(Clone, Debug)]
pub struct Orientation {
    graph: MultiGraph,
    heads: Vec<usize>,
}

impl Orientation {
    /// The underlying graph.
    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    /// The arcs as `(tail, head)` index pairs, one per edge in input order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges
            .iter()
            .zip(&self.heads)
            .map(|(&(u, v), &h)| if h == u { (v, u) } else { (u, v) })
            .collect()
    }

    /// The in-degree vector.
    pub fn indegrees(&self) -> IntVector {
        let mut indeg = vec![0i64; self.graph.n()];
        for &h in &self.heads {
            indeg[h] += 1;
        }
        IntVector::new(indeg)
    }

    /// Out-neighbors of `v` as `(edge index, target)` pairs sorted by
    /// `(target, edge index)`.
    fn out_arcs(&self, v: usize) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .arcs()
            .into_iter()
            .enumerate()
            .filter(|&(_, (tail, _))| tail == v)
            .map(|(e, (_, head))| (e, head))
            .collect();
        out.sort_unstable_by_key(|&(e, head)| (head, e));
        out
    }

    /// Breadth-first search from `s` following the arcs, with smallest-index
    /// tie-breaks.  Returns per-node discovery arcs, and the visit order.
    fn bfs(&self, s: usize) -> (Vec<Option<usize>>, Vec<usize>) {
        let n = self.graph.n();
        let mut via = vec![None; n];
        let mut seen = vec![false; n];
        let mut order = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        seen[s] = true;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for (e, head) in self.out_arcs(v) {
                if !seen[head] {
                    seen[head] = true;
                    via[head] = Some(e);
                    queue.push_back(head);
                }
            }
        }
        (via, order)
    }

    /// Reverses the discovery path ending at `t`, walking `via` links back
    /// to the search root.
    fn reverse_path_to(&mut self, via: &[Option<usize>], t: usize) {
        let mut v = t;
        while let Some(e) = via[v] {
            let (u, w) = self.graph.edges[e];
            let tail = if self.heads[e] == u { w } else { u };
            self.heads[e] = tail;
            v = tail;
        }
    }
}

/// Computes an egalitarian orientation and its in-degree vector.
///
/// Starting from the orientation toward lexicographically larger endpoints,
/// repeatedly picks node pairs `(s, t)` with `indeg(t) >= indeg(s) + 2`,
/// ordered by descending gap, then smallest `t`, then smallest `s`, and
/// reverses a breadth-first dipath from `s` to `t` when one exists.  When
/// no such pair admits a dipath, the in-degree vector is dec-min.
pub fn decmin_orientation(g: &MultiGraph) -> Result<(Orientation, IntVector), Error> {
    let mut orientation = g.initial_orientation();
    'outer: loop {
        let indeg = orientation.indegrees();
        for (s, t) in candidate_pairs(&indeg) {
            let (via, _) = orientation.bfs(s);
            if via[t].is_some() {
                orientation.reverse_path_to(&via, t);
                continue 'outer;
            }
        }
        let indeg = orientation.indegrees();
        return Ok((orientation, indeg));
    }
}

/// Realizes a prescribed in-degree vector as an orientation.
///
/// Fails with [`Error::NotMember`] when no orientation has these
/// in-degrees.  Otherwise, repeatedly reverses a breadth-first dipath from
/// the smallest node below its target to the first reached node above its
/// target.
pub fn orientation_from_indegrees(g: &MultiGraph, m: &IntVector) -> Result<Orientation, Error> {
    let inst = orientation_instance(g);
    if !inst.is_member(m)? {
        return Err(Error::NotMember);
    }
    let mut orientation = g.initial_orientation();
    loop {
        let indeg = orientation.indegrees();
        let Some(s) = (0..g.n()).find(|&v| indeg.get(v) < m.get(v)) else {
            return Ok(orientation);
        };
        let (via, order) = orientation.bfs(s);
        let t = order
            .iter()
            .copied()
            .find(|&v| indeg.get(v) > m.get(v))
            .expect("a surplus node is reachable from every deficit node");
        orientation.reverse_path_to(&via, t);
    }
}
