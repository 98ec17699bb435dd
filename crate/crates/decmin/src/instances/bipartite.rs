//! Bipartite load balancing: assign each right-side node to one neighbor.

use crate::core::{ExtInt, GroundSet, Source, Subset, SupermodularInstance};
use crate::Error;

/// A bipartite graph whose left side is the ground set.
///
/// Each right-side node carries a nonempty neighborhood on the left.  An
/// assignment sends every right node to one of its neighbors; the load of
/// a left node is the number of right nodes assigned to it.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    left: GroundSet,
    right_names: Vec<String>,
    adj: Vec<Subset>,
}

impl BipartiteGraph {
    /// Builds a bipartite graph from left names and per-right-node
    /// neighbor lists, in order.
    pub fn parse(left: &[&str], adjacency: &[(&str, &[&str])]) -> Result<Self, Error> {
        let left = GroundSet::new(left.iter().copied())?;
        let mut right_names = Vec::new();
        let mut adj = Vec::new();
        for &(t, neighbors) in adjacency {
            if right_names.iter().any(|r| r == t) {
                return Err(Error::InvalidInstance(format!("duplicate right node {t:?}")));
            }
            if neighbors.is_empty() {
                return Err(Error::InvalidInstance(format!(
                    "right node {t:?} has no neighbors"
                )));
            }
            let mut set = Subset::EMPTY;
            for &s in neighbors {
                let i = left.index_of(s).ok_or_else(|| {
                    Error::InvalidInstance(format!("unknown left node {s:?} for {t:?}"))
                })?;
                set = set.with(i);
            }
            right_names.push(t.to_string());
            adj.push(set);
        }
        Ok(BipartiteGraph { left, right_names, adj })
    }

    /// The left node set (the ground set of the induced oracle).
    pub fn ground(&self) -> &GroundSet {
        &self.left
    }

    /// Number of right-side nodes.
    pub fn right_count(&self) -> usize {
        self.adj.len()
    }

    /// Name of the `j`-th right node.
    pub fn right_name(&self, j: usize) -> &str {
        &self.right_names[j]
    }

    /// Neighborhood of the `j`-th right node.
    pub fn neighbors(&self, j: usize) -> Subset {
        self.adj[j]
    }

    /// Degree of a left node: the number of right nodes adjacent to it.
    pub fn left_degree(&self, i: usize) -> usize {
        self.adj.iter().filter(|set| set.contains(i)).count()
    }
}

/// The load oracle of a bipartite graph: `p(X)` counts the right nodes
/// whose whole neighborhood lies in `X`.
///
/// Its members are exactly the load vectors of assignments, so a dec-min
/// member is an egalitarian semi-matching.
pub fn semimatching_instance(g: &BipartiteGraph) -> SupermodularInstance {
    let adj = g.adj.clone();
    SupermodularInstance::from_fn(g.left.clone(), Source::Bipartite, move |x| {
        ExtInt::Finite(adj.iter().filter(|set| set.is_subset_of(x)).count() as i64)
    })
    .expect("neighborhood-cover counts are supermodular with p(empty) = 0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::IntVector;
    use crate::solver;

    fn claw() -> BipartiteGraph {
        // three tasks: t1 only on a, t2 on a or b, t3 on b or c
        BipartiteGraph::parse(
            &["a", "b", "c"],
            &[("t1", &["a"]), ("t2", &["a", "b"]), ("t3", &["b", "c"])],
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        let empty = BipartiteGraph::parse(&["a"], &[("t", &[])]);
        assert!(matches!(empty.unwrap_err(), Error::InvalidInstance(_)));
        let dup = BipartiteGraph::parse(&["a"], &[("t", &["a"]), ("t", &["a"])]);
        assert!(matches!(dup.unwrap_err(), Error::InvalidInstance(_)));
        let unknown = BipartiteGraph::parse(&["a"], &[("t", &["b"])]);
        assert!(matches!(unknown.unwrap_err(), Error::InvalidInstance(_)));
    }

    #[test]
    fn load_oracle_counts_covered_neighborhoods() {
        let g = claw();
        assert_eq!(g.left_degree(0), 2);
        assert_eq!(g.left_degree(1), 2);
        let p = semimatching_instance(&g);
        assert_eq!(p.eval_p(Subset::from_mask(0b001)), ExtInt::Finite(1)); // {a} covers t1
        assert_eq!(p.eval_p(Subset::from_mask(0b011)), ExtInt::Finite(2)); // plus t2
        assert_eq!(p.eval_p(p.full()), ExtInt::Finite(3));
        // loads (1,1,1): t1 -> a, t2 -> b, t3 -> c
        assert!(p.is_member(&IntVector::from([1, 1, 1])).unwrap());
        // loads (2,1,0): t2 -> a, t3 -> b
        assert!(p.is_member(&IntVector::from([2, 1, 0])).unwrap());
        // t1 admits no assignment giving a load zero
        assert!(!p.is_member(&IntVector::from([0, 2, 1])).unwrap());
        let start = p.greedy_vertex(&[0, 1, 2]).unwrap();
        let balanced = solver::find_dec_min(&p, &start).unwrap();
        assert_eq!(balanced.values(), &[1, 1, 1]);
    }
}
