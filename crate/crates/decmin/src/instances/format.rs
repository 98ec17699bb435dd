//! JSON interchange format for instances.
//!
//! Every file is one JSON object whose `"kind"` field selects the family:
//!
//! ```json
//! {"kind": "explicit", "names": ["a", "b"], "p": {"": 0, "a,b": 3}}
//! {"kind": "orientation", "nodes": ["a", "b"], "edges": [["a", "b"], ["a", "b"]]}
//! {"kind": "bipartite", "S": ["a", "b"], "T": ["t"], "adj": {"t": ["a", "b"]}}
//! {"kind": "k_bases", "k": 2, "matroid": {"type": "graphic", "nodes": ["x", "y"],
//!                                         "edges": [["x", "y"]]}}
//! ```
//!
//! Explicit tables list `p` on comma-joined subset keys; subsets not
//! listed are minus infinity, the empty key may be omitted (it must map to
//! zero if present), and the full ground set must be present and finite.
//! Matroids come either as a graph (`"type": "graphic"`) or as an explicit
//! basis list (`"type": "bases"`, with `"ground"` and `"bases"` arrays).
//!
//! Malformed JSON or an unknown shape surfaces as [`Error::Parse`];
//! well-formed input describing a broken object (duplicate names, empty
//! neighborhoods, a non-supermodular table, ...) surfaces as a semantic
//! error such as [`Error::InvalidInstance`].

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::core::{ExtInt, GroundSet, Subset, SupermodularInstance};
use crate::Error;

use super::{
    kbases_instance, orientation_instance, semimatching_instance, BipartiteGraph,
    ExplicitMatroid, MultiGraph,
};

/// Largest ground set accepted for explicit value tables.
const MAX_EXPLICIT_N: usize = 20;

/// Largest ground set audited exhaustively for supermodularity at parse
/// time.
const AUDIT_LIMIT: usize = 12;

#[derive(Deserialize)]
#[serde(tag = "kind")]
enum RawInstance {
    #[serde(rename = "explicit")]
    Explicit { names: Vec<String>, p: BTreeMap<String, i64> },
    #[serde(rename = "orientation")]
    Orientation { nodes: Vec<String>, edges: Vec<(String, String)> },
    #[serde(rename = "bipartite")]
    Bipartite {
        #[serde(rename = "S")]
        left: Vec<String>,
        #[serde(rename = "T")]
        right: Vec<String>,
        adj: BTreeMap<String, Vec<String>>,
    },
    #[serde(rename = "k_bases")]
    KBases { k: i64, matroid: RawMatroid },
}

#[derive(Deserialize)]
#[serde(tag = "type")]
enum RawMatroid {
    #[serde(rename = "graphic")]
    Graphic { nodes: Vec<String>, edges: Vec<(String, String)> },
    #[serde(rename = "bases")]
    Bases { ground: Vec<String>, bases: Vec<Vec<String>> },
}

/// A parsed instance file: the oracle plus the concrete object it came
/// from, so callers can translate members back (orientations, matroids).
#[derive(Clone, Debug)]
pub enum ParsedInstance {
    /// An explicit value table.
    Explicit(SupermodularInstance),
    /// An in-degree oracle with its multigraph.
    Orientation(MultiGraph, SupermodularInstance),
    /// A load oracle with its bipartite graph.
    Bipartite(BipartiteGraph, SupermodularInstance),
    /// A k-bases oracle with its matroid and `k`.
    KBases(ExplicitMatroid, i64, SupermodularInstance),
}

impl ParsedInstance {
    /// The oracle, whatever the family.
    pub fn instance(&self) -> &SupermodularInstance {
        match self {
            ParsedInstance::Explicit(inst) => inst,
            ParsedInstance::Orientation(_, inst) => inst,
            ParsedInstance::Bipartite(_, inst) => inst,
            ParsedInstance::KBases(_, _, inst) => inst,
        }
    }

    /// The `"kind"` tag this instance was parsed from.
    pub fn kind(&self) -> &'static str {
        match self {
            ParsedInstance::Explicit(..) => "explicit",
            ParsedInstance::Orientation(..) => "orientation",
            ParsedInstance::Bipartite(..) => "bipartite",
            ParsedInstance::KBases(..) => "k_bases",
        }
    }
}

/// Parses an instance file.
pub fn parse_instance(text: &str) -> Result<ParsedInstance, Error> {
    let raw: RawInstance =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match raw {
        RawInstance::Explicit { names, p } => parse_explicit(&names, &p),
        RawInstance::Orientation { nodes, edges } => {
            let g = parse_graph(&nodes, &edges)?;
            let inst = orientation_instance(&g);
            Ok(ParsedInstance::Orientation(g, inst))
        }
        RawInstance::Bipartite { left, right, adj } => {
            let g = parse_bipartite(&left, &right, &adj)?;
            let inst = semimatching_instance(&g);
            Ok(ParsedInstance::Bipartite(g, inst))
        }
        RawInstance::KBases { k, matroid } => {
            let m = match matroid {
                RawMatroid::Graphic { nodes, edges } => {
                    let nodes: Vec<&str> = nodes.iter().map(String::as_str).collect();
                    let edges: Vec<(&str, &str)> =
                        edges.iter().map(|(u, v)| (u.as_str(), v.as_str())).collect();
                    ExplicitMatroid::graphic(&nodes, &edges)?
                }
                RawMatroid::Bases { ground, bases } => parse_basis_list(&ground, &bases)?,
            };
            let inst = kbases_instance(&m, k)?;
            Ok(ParsedInstance::KBases(m, k, inst))
        }
    }
}

fn parse_graph(nodes: &[String], edges: &[(String, String)]) -> Result<MultiGraph, Error> {
    let nodes: Vec<&str> = nodes.iter().map(String::as_str).collect();
    let edges: Vec<(&str, &str)> = edges.iter().map(|(u, v)| (u.as_str(), v.as_str())).collect();
    MultiGraph::parse(&nodes, &edges)
}

fn parse_explicit(names: &[String], p: &BTreeMap<String, i64>) -> Result<ParsedInstance, Error> {
    let ground = GroundSet::new(names.iter().map(String::as_str))?;
    let n = ground.n();
    if n > MAX_EXPLICIT_N {
        return Err(Error::InvalidInstance(format!(
            "explicit tables support at most {MAX_EXPLICIT_N} elements, got {n}"
        )));
    }
    let mut table = vec![ExtInt::NegInf; 1 << n];
    let mut given = vec![false; 1 << n];
    for (key, &value) in p {
        let subset = parse_subset_key(&ground, key)?;
        let idx = subset.mask() as usize;
        if given[idx] {
            return Err(Error::InvalidInstance(format!(
                "subset {} is listed twice",
                ground.format_subset(subset)
            )));
        }
        given[idx] = true;
        table[idx] = ExtInt::Finite(value);
    }
    if !given[0] {
        table[0] = ExtInt::Finite(0);
    }
    let inst = SupermodularInstance::from_table(ground.clone(), table)?;
    if n <= AUDIT_LIMIT {
        if let Some((x, y)) = inst.supermodularity_witness()? {
            return Err(Error::InvalidInstance(format!(
                "table is not supermodular at {} and {}",
                ground.format_subset(x),
                ground.format_subset(y)
            )));
        }
    }
    Ok(ParsedInstance::Explicit(inst))
}

fn parse_subset_key(ground: &GroundSet, key: &str) -> Result<Subset, Error> {
    let mut subset = Subset::EMPTY;
    if key.is_empty() {
        return Ok(subset);
    }
    for name in key.split(',') {
        let i = ground.index_of(name).ok_or_else(|| {
            Error::InvalidInstance(format!("unknown element {name:?} in key {key:?}"))
        })?;
        if subset.contains(i) {
            return Err(Error::InvalidInstance(format!(
                "element {name:?} repeats in key {key:?}"
            )));
        }
        subset = subset.with(i);
    }
    Ok(subset)
}

fn parse_bipartite(
    left: &[String],
    right: &[String],
    adj: &BTreeMap<String, Vec<String>>,
) -> Result<BipartiteGraph, Error> {
    for t in adj.keys() {
        if !right.contains(t) {
            return Err(Error::InvalidInstance(format!(
                "adjacency lists unknown right node {t:?}"
            )));
        }
    }
    let left_view: Vec<&str> = left.iter().map(String::as_str).collect();
    let rows: Vec<(&str, Vec<&str>)> = right
        .iter()
        .map(|t| {
            let neighbors = adj.get(t).ok_or_else(|| {
                Error::InvalidInstance(format!("right node {t:?} has no adjacency entry"))
            })?;
            Ok((t.as_str(), neighbors.iter().map(String::as_str).collect()))
        })
        .collect::<Result<_, Error>>()?;
    let rows_view: Vec<(&str, &[&str])> =
        rows.iter().map(|(t, ns)| (*t, ns.as_slice())).collect();
    BipartiteGraph::parse(&left_view, &rows_view)
}

fn parse_basis_list(ground: &[String], bases: &[Vec<String>]) -> Result<ExplicitMatroid, Error> {
    let ground = GroundSet::new(ground.iter().map(String::as_str))?;
    let sets = bases
        .iter()
        .map(|names| {
            let mut b = Subset::EMPTY;
            for name in names {
                let i = ground.index_of(name).ok_or_else(|| {
                    Error::InvalidInstance(format!("unknown element {name:?} in basis list"))
                })?;
                if b.contains(i) {
                    return Err(Error::InvalidInstance(format!(
                        "element {name:?} repeats in a basis"
                    )));
                }
                b = b.with(i);
            }
            Ok(b)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    ExplicitMatroid::new(ground, sets)
}

/// Reads a name-keyed map into ground-set order.
///
/// The map must mention every element exactly once and nothing else.
pub fn vector_from_named<T: Copy>(
    ground: &GroundSet,
    map: &BTreeMap<String, T>,
) -> Result<Vec<T>, Error> {
    for name in map.keys() {
        if ground.index_of(name).is_none() {
            return Err(Error::InvalidInstance(format!("unknown element {name:?}")));
        }
    }
    ground
        .names()
        .iter()
        .map(|name| {
            map.get(name).copied().ok_or_else(|| {
                Error::InvalidInstance(format!("missing value for element {name:?}"))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let explicit = parse_instance(
            r#"{"kind": "explicit", "names": ["a", "b"], "p": {"a": 1, "a,b": 3}}"#,
        )
        .unwrap();
        assert_eq!(explicit.kind(), "explicit");
        let inst = explicit.instance();
        assert_eq!(inst.eval_p(Subset::from_mask(0b01)), ExtInt::Finite(1));
        assert_eq!(inst.eval_p(Subset::from_mask(0b10)), ExtInt::NegInf);

        let orient = parse_instance(
            r#"{"kind": "orientation", "nodes": ["a", "b"], "edges": [["a", "b"], ["a", "b"]]}"#,
        )
        .unwrap();
        assert_eq!(orient.kind(), "orientation");
        assert_eq!(orient.instance().eval_p(Subset::from_mask(0b11)), ExtInt::Finite(2));

        let bip = parse_instance(
            r#"{"kind": "bipartite", "S": ["a", "b"], "T": ["t", "u"],
                "adj": {"t": ["a"], "u": ["a", "b"]}}"#,
        )
        .unwrap();
        assert_eq!(bip.kind(), "bipartite");
        assert_eq!(bip.instance().eval_p(Subset::from_mask(0b01)), ExtInt::Finite(1));

        let kb = parse_instance(
            r#"{"kind": "k_bases", "k": 2,
                "matroid": {"type": "graphic", "nodes": ["x", "y", "z"],
                            "edges": [["x", "y"], ["y", "z"], ["x", "z"]]}}"#,
        )
        .unwrap();
        assert_eq!(kb.kind(), "k_bases");
        assert_eq!(kb.instance().eval_p(kb.instance().full()), ExtInt::Finite(4));

        let listed = parse_instance(
            r#"{"kind": "k_bases", "k": 1,
                "matroid": {"type": "bases", "ground": ["e", "f"],
                            "bases": [["e"], ["f"]]}}"#,
        )
        .unwrap();
        assert_eq!(listed.instance().eval_p(listed.instance().full()), ExtInt::Finite(1));
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(parse_instance("{oops").unwrap_err(), Error::Parse(_)));
        assert!(matches!(
            parse_instance(r#"{"kind": "mystery"}"#).unwrap_err(),
            Error::Parse(_)
        ));
        assert!(matches!(
            parse_instance(r#"{"kind": "explicit", "names": ["a"]}"#).unwrap_err(),
            Error::Parse(_)
        ));
    }

    #[test]
    fn semantic_errors_are_invalid_instances() {
        // nonzero empty set
        let bad_empty = parse_instance(
            r#"{"kind": "explicit", "names": ["a"], "p": {"": 1, "a": 1}}"#,
        );
        assert!(matches!(bad_empty.unwrap_err(), Error::InvalidInstance(_)));
        // missing full-set value
        let no_full = parse_instance(r#"{"kind": "explicit", "names": ["a"], "p": {}}"#);
        assert!(matches!(no_full.unwrap_err(), Error::InvalidInstance(_)));
        // submodular table
        let submod = parse_instance(
            r#"{"kind": "explicit", "names": ["a", "b"],
                "p": {"a": 1, "b": 1, "a,b": 1}}"#,
        );
        assert!(matches!(submod.unwrap_err(), Error::InvalidInstance(_)));
        // duplicate subset under reordered keys
        let dup = parse_instance(
            r#"{"kind": "explicit", "names": ["a", "b"],
                "p": {"a,b": 3, "b,a": 3}}"#,
        );
        assert!(matches!(dup.unwrap_err(), Error::InvalidInstance(_)));
        // self-loop
        let loopy = parse_instance(
            r#"{"kind": "orientation", "nodes": ["a"], "edges": [["a", "a"]]}"#,
        );
        assert!(matches!(loopy.unwrap_err(), Error::SelfLoop { .. }));
        // right node missing from adjacency
        let missing = parse_instance(
            r#"{"kind": "bipartite", "S": ["a"], "T": ["t"], "adj": {}}"#,
        );
        assert!(matches!(missing.unwrap_err(), Error::InvalidInstance(_)));
        // k must be positive
        let bad_k = parse_instance(
            r#"{"kind": "k_bases", "k": 0,
                "matroid": {"type": "bases", "ground": ["e"], "bases": [["e"]]}}"#,
        );
        assert!(matches!(bad_k.unwrap_err(), Error::InvalidInstance(_)));
    }

    #[test]
    fn named_vectors_must_cover_the_ground_set() {
        let ground = GroundSet::new(["a", "b"]).unwrap();
        let mut map = BTreeMap::new();
        map.insert("a".to_string(), 1i64);
        assert!(vector_from_named(&ground, &map).is_err());
        map.insert("b".to_string(), 2i64);
        assert_eq!(vector_from_named(&ground, &map).unwrap(), vec![1, 2]);
        map.insert("z".to_string(), 9i64);
        assert!(vector_from_named(&ground, &map).is_err());
    }
}
