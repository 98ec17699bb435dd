//! Shared fixtures and random-instance generators for the decmin test
//! suites.
//!
//! The fixture constructors return the small worked instances the
//! integration tests pin down exactly; [`corpus`] produces a seeded,
//! reproducible stream of random instances across all supported families
//! for property suites.

use decmin::core::{ExtInt, GroundSet, IntVector, Source, SupermodularInstance};
use decmin::duality::PhiTable;
use decmin::instances::{
    kbases_instance, orientation_instance, semimatching_instance, BipartiteGraph,
    ExplicitMatroid, MultiGraph,
};
use rand::prelude::*;

pub use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

/// Triangle on `a, b, c` with a doubled `b-c` edge.
///
/// Its in-degree oracle has exactly ten members; the dec-min ones are the
/// three permutations of `(2, 1, 1)`.
pub fn triangle_with_parallel() -> MultiGraph {
    MultiGraph::parse(&["a", "b", "c"], &[("a", "b"), ("a", "c"), ("b", "c"), ("b", "c")])
        .unwrap()
}

/// Four-cycle on `a, b, c, d` with the `a-b` edge multiplied five-fold.
///
/// The heavy pair `{a, b}` splits off as the first canonical block.
pub fn heavy_four_cycle() -> MultiGraph {
    MultiGraph::parse(
        &["a", "b", "c", "d"],
        &[
            ("a", "b"),
            ("a", "b"),
            ("a", "b"),
            ("a", "b"),
            ("a", "b"),
            ("b", "c"),
            ("c", "d"),
            ("d", "a"),
        ],
    )
    .unwrap()
}

/// Two four-fold bundles `a-b` and `c-d`, bridged through `x` and `y`.
///
/// All in-degrees balance to 2, yet the uniform member has a rich lattice
/// of tight sets: both bundles, their union, and its extensions by `x` or
/// `y`.
pub fn bridged_bundles() -> MultiGraph {
    MultiGraph::parse(
        &["a", "b", "c", "d", "x", "y"],
        &[
            ("a", "b"),
            ("a", "b"),
            ("a", "b"),
            ("a", "b"),
            ("c", "d"),
            ("c", "d"),
            ("c", "d"),
            ("c", "d"),
            ("a", "x"),
            ("c", "x"),
            ("b", "y"),
            ("d", "y"),
        ],
    )
    .unwrap()
}

/// An explicit table whose M-convex set is exactly four points:
/// `(2,3,3,1)`, `(3,3,3,0)`, `(2,2,4,1)`, `(3,2,4,0)`.
///
/// The dec-min element `(2,3,3,1)` is unique, and the square-sums of the
/// four points are pairwise distinct.
pub fn four_point_table() -> SupermodularInstance {
    let ground = GroundSet::new(["e1", "e2", "e3", "e4"]).unwrap();
    // p(X) = min over the four points of the component sum on X
    let points = four_point_members();
    SupermodularInstance::from_fn(ground, Source::Explicit, move |x| {
        ExtInt::Finite(points.iter().map(|z| z.sum_on(x)).min().unwrap())
    })
    .unwrap()
}

/// The members of [`four_point_table`], in ascending lexicographic order.
pub fn four_point_members() -> Vec<IntVector> {
    vec![
        IntVector::from([2, 2, 4, 1]),
        IntVector::from([2, 3, 3, 1]),
        IntVector::from([3, 2, 4, 0]),
        IntVector::from([3, 3, 3, 0]),
    ]
}

/// A two-point set on which dec-min and square-sum minimization disagree:
/// `(3,3,3,0)` is the unique dec-min point, `(2,2,4,1)` the unique
/// square-sum minimizer.
///
/// No M-convex set can contain exactly these two points; the pair shows
/// that the equivalence of the two objectives genuinely needs
/// M-convexity.
pub fn decmin_vs_sqsum_pair() -> (IntVector, IntVector) {
    (IntVector::from([3, 3, 3, 0]), IntVector::from([2, 2, 4, 1]))
}

/// A two-point set arising as the intersection of two M-convex sets, on
/// which dec-min and inc-max split: `(1,-1,1,1)` is the unique dec-min
/// point while `(2,0,0,0)` is the unique inc-max point.
pub fn decmin_vs_incmax_pair() -> (IntVector, IntVector) {
    (IntVector::from([1, -1, 1, 1]), IntVector::from([2, 0, 0, 0]))
}

/// The reflected oracle: members of the result are exactly the negated
/// members of `inst`.
///
/// Uses `p'(X) = p(S − X) − p(S)`, so inc-max questions about `inst`
/// become dec-min questions about the reflection.
pub fn negated_instance(inst: &SupermodularInstance) -> SupermodularInstance {
    let delegate = inst.clone();
    let full = inst.full();
    let total = inst.eval_p(full).finite().expect("p(S) is finite");
    SupermodularInstance::from_fn(inst.ground().clone(), Source::Custom, move |x| {
        delegate.eval_p(full - x) + (-total)
    })
    .expect("reflection preserves supermodularity")
}

/// One random instance family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// In-degree oracle of a random multigraph.
    Graph,
    /// Explicit table: random graph oracle plus a random modular shift.
    ShiftedTable,
    /// Load oracle of a random bipartite graph.
    Bipartite,
    /// k-bases oracle of a random graphic matroid, k at most 3.
    KBases,
}

/// A labeled random instance.
pub struct CorpusEntry {
    /// Family tag plus index, e.g. `"graph-7"`, for failure messages.
    pub label: String,
    /// Which generator produced it.
    pub family: Family,
    /// The instance; ground sets have at most six elements.
    pub instance: SupermodularInstance,
}

const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

fn random_graph(rng: &mut ChaCha8Rng) -> MultiGraph {
    let n = rng.gen_range(2..=6);
    let m = rng.gen_range(1..=10);
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let v = (u + rng.gen_range(1..n)) % n;
            (u, v)
        })
        .collect();
    let nodes = GroundSet::new(NAMES[..n].iter().copied()).unwrap();
    MultiGraph::new(nodes, edges).unwrap()
}

fn graph_entry(rng: &mut ChaCha8Rng) -> SupermodularInstance {
    orientation_instance(&random_graph(rng))
}

fn shifted_table_entry(rng: &mut ChaCha8Rng) -> SupermodularInstance {
    let g = random_graph(rng);
    let shift: Vec<i64> = (0..g.n()).map(|_| rng.gen_range(-3..=3)).collect();
    let base = orientation_instance(&g);
    let table: Vec<ExtInt> = base
        .table()
        .unwrap()
        .into_iter()
        .enumerate()
        .map(|(mask, v)| {
            let w: i64 = (0..g.n()).filter(|i| mask >> i & 1 == 1).map(|i| shift[i]).sum();
            v + w
        })
        .collect();
    SupermodularInstance::from_table(base.ground().clone(), table).unwrap()
}

fn bipartite_entry(rng: &mut ChaCha8Rng) -> SupermodularInstance {
    let n = rng.gen_range(2..=5);
    let t_count = rng.gen_range(1..=6);
    let rows: Vec<(String, Vec<&str>)> = (0..t_count)
        .map(|j| {
            let size = rng.gen_range(1..=n);
            let mut picks: Vec<usize> = (0..n).collect();
            picks.shuffle(rng);
            picks.truncate(size);
            picks.sort_unstable();
            (format!("t{j}"), picks.into_iter().map(|i| NAMES[i]).collect())
        })
        .collect();
    let rows_view: Vec<(&str, &[&str])> =
        rows.iter().map(|(t, ns)| (t.as_str(), ns.as_slice())).collect();
    let g = BipartiteGraph::parse(&NAMES[..n], &rows_view).unwrap();
    semimatching_instance(&g)
}

fn kbases_entry(rng: &mut ChaCha8Rng) -> SupermodularInstance {
    loop {
        let node_count = rng.gen_range(2..=4);
        let edge_count = rng.gen_range(1..=5);
        let node_names = ["p", "q", "r", "s"];
        let edges: Vec<(&str, &str)> = (0..edge_count)
            .map(|_| {
                let u = rng.gen_range(0..node_count);
                let v = (u + rng.gen_range(1..node_count)) % node_count;
                (node_names[u], node_names[v])
            })
            .collect();
        let matroid = ExplicitMatroid::graphic(&node_names[..node_count], &edges).unwrap();
        if matroid.rank() == 0 {
            continue; // every edge subset empty: regenerate
        }
        let k = rng.gen_range(1..=3);
        return kbases_instance(&matroid, k).unwrap();
    }
}

/// Generates `count` reproducible random instances, cycling through the
/// four families.
pub fn corpus(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let (family, instance) = match i % 4 {
                0 => (Family::Graph, graph_entry(&mut rng)),
                1 => (Family::ShiftedTable, shifted_table_entry(&mut rng)),
                2 => (Family::Bipartite, bipartite_entry(&mut rng)),
                _ => (Family::KBases, kbases_entry(&mut rng)),
            };
            let tag = match family {
                Family::Graph => "graph",
                Family::ShiftedTable => "table",
                Family::Bipartite => "bipartite",
                Family::KBases => "kbases",
            };
            CorpusEntry { label: format!("{tag}-{i}"), family, instance }
        })
        .collect()
}

/// A uniform random vector with entries in `lo ..= hi`.
pub fn random_vector(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> IntVector {
    IntVector::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

/// A random convex value table on `lo ..= hi`, built from nonnegative
/// second differences.
pub fn random_convex_phi(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> PhiTable {
    let len = (hi - lo + 1) as usize;
    let mut values = Vec::with_capacity(len);
    let mut value = rng.gen_range(-5..=5);
    let mut slope = rng.gen_range(-4..=4);
    for _ in 0..len {
        values.push(value);
        value += slope;
        slope += rng.gen_range(0..=3);
    }
    PhiTable::from_fn(lo, hi, |k| values[(k - lo) as usize])
}

/// Random element costs in `[-2, 2)`, rounded to tenths so cost
/// comparisons stay exact.
pub fn random_costs(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| f64::from(rng.gen_range(-20..20)) / 10.0).collect()
}

/// A random member of the instance, reached from a greedy vertex by a
/// seeded walk of feasible exchanges.
pub fn random_member(
    inst: &SupermodularInstance,
    rng: &mut ChaCha8Rng,
    steps: usize,
) -> IntVector {
    let n = inst.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut m = inst.greedy_vertex(&order).expect("corpus oracles are finite");
    for _ in 0..steps {
        let s = rng.gen_range(0..n);
        let t = rng.gen_range(0..n);
        if s != t && inst.exchange_feasible(&m, s, t).unwrap() {
            m = m.unit_exchange(s, t);
        }
    }
    m
}
