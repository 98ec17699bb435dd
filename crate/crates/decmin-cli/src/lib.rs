//! Command implementations for the `decmin` binary.
//!
//! Each `cmd_*` function loads an instance file, runs the corresponding
//! library pipeline, and returns a serializable document.  The binary in
//! `main.rs` is a thin argument-parsing shell around these.
//!
//! Exit-code contract: `0` success, `2` unreadable or malformed input,
//! `3` semantic failure (non-member vectors, invalid instances, incomplete
//! cost files), `4` resource guards (scan limits, enumeration budgets).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use decmin::canonical::{canonical_decomposition, decomposition_from_decmin};
use decmin::core::{GroundSet, IntVector, Subset, SupermodularInstance};
use decmin::duality;
use decmin::instances::{decmin_orientation, parse_instance, vector_from_named, ParsedInstance};
use decmin::matroid::DecMinMatroid;
use decmin::reference::{enumerate_members, EnumerationBudget};
use decmin::solver::{self, DecMinWitness};
use decmin::Error;

/// A command failure carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl CliError {
    fn semantic(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: 3 }
    }

    fn parse(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: 2 }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::ScanTooLarge { .. } | Error::BudgetExceeded { .. } => 4,
            _ => 3,
        };
        CliError { message: e.to_string(), code }
    }
}

/// Identity block of every document: content digest and ground set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceInfo {
    pub digest: String,
    pub kind: String,
    pub n: usize,
    pub names: Vec<String>,
}

/// Chain, partition, and per-block data of the canonical decomposition.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub chain: Vec<Vec<String>>,
    pub partition: Vec<Vec<String>>,
    pub betas: Vec<i64>,
    pub r: Vec<i64>,
    pub fixed: Vec<Vec<String>>,
}

/// Shape of the dec-min set viewed as a translated matroid family.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatroidDoc {
    pub block_ranks: Vec<i64>,
    pub dec_min_count: u128,
}

/// The canonical dual vector and its quality relative to the solution.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DualDoc {
    pub pi: BTreeMap<String, i64>,
    pub dual_value: i64,
    pub is_odd: bool,
    pub o1: bool,
    pub o2: bool,
}

/// Re-derived checks on the emitted solution.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationDoc {
    pub is_member: bool,
    pub is_dec_min: bool,
    pub canonical_agrees: bool,
    pub dual_gap_zero: bool,
}

/// Full output of `solve`: one dec-min element with all certificates.
///
/// Serialized field order is fixed and documented in the guide.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub instance: InstanceInfo,
    pub dec_min: BTreeMap<String, i64>,
    pub square_sum: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<String>>,
    pub decomposition: DecompositionDoc,
    pub matroid: MatroidDoc,
    pub dual: DualDoc,
    pub verification: VerificationDoc,
}

/// Output of `cheapest`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheapestDocument {
    pub instance: InstanceInfo,
    pub vector: BTreeMap<String, i64>,
    pub cost: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

/// Dual block of a `verify` run, present when a dual vector was supplied.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyDualDoc {
    pub pi: BTreeMap<String, i64>,
    pub primal_value: i64,
    pub dual_value: i64,
    pub gap: i64,
    pub o1: bool,
    pub o2: bool,
}

/// Output of `verify` on a member vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub instance: InstanceInfo,
    pub vector: BTreeMap<String, i64>,
    pub is_member: bool,
    pub is_dec_min: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub improving_pair: Option<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<VerifyDualDoc>,
}

fn fnv1a64(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

fn subset_names(ground: &GroundSet, x: Subset) -> Vec<String> {
    x.iter().map(|i| ground.name(i).to_string()).collect()
}

fn named_map(ground: &GroundSet, v: &IntVector) -> BTreeMap<String, i64> {
    ground
        .names()
        .iter()
        .cloned()
        .zip(v.iter().copied())
        .collect()
}

struct Loaded {
    info_kind: String,
    digest: String,
    parsed: ParsedInstance,
    instance: SupermodularInstance,
}

impl Loaded {
    fn info(&self) -> InstanceInfo {
        InstanceInfo {
            digest: self.digest.clone(),
            kind: self.info_kind.clone(),
            n: self.instance.n(),
            names: self.instance.ground().names().to_vec(),
        }
    }
}

fn load(path: &Path, scan_limit: usize) -> Result<Loaded, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::parse(format!("{} is not UTF-8", path.display())))?;
    let parsed = parse_instance(&text)?;
    let instance = parsed.instance().with_scan_limit(scan_limit);
    Ok(Loaded {
        info_kind: parsed.kind().to_string(),
        digest: fnv1a64(&bytes),
        parsed,
        instance,
    })
}

/// One member reached by the greedy vertex rule: repeatedly extend the
/// prefix by the smallest element keeping `p` finite.
fn bootstrap_member(inst: &SupermodularInstance) -> Result<IntVector, Error> {
    let n = inst.n();
    let mut order = Vec::with_capacity(n);
    let mut prefix = Subset::EMPTY;
    for _ in 0..n {
        let next = (0..n)
            .find(|&s| !prefix.contains(s) && inst.eval_p(prefix.with(s)).is_finite());
        match next {
            Some(s) => {
                prefix = prefix.with(s);
                order.push(s);
            }
            None => return Err(Error::InfeasiblePrefix { mask: prefix.mask() }),
        }
    }
    inst.greedy_vertex(&order)
}

/// Solves an instance file end to end: one dec-min element, the canonical
/// decomposition, the matroid summary, the canonical dual, and re-derived
/// verification verdicts.
pub fn cmd_solve(path: &Path, scan_limit: usize) -> Result<CertificateDocument, CliError> {
    let loaded = load(path, scan_limit)?;
    let inst = &loaded.instance;
    let ground = inst.ground().clone();

    let (m, orientation) = match &loaded.parsed {
        ParsedInstance::Orientation(g, _) => {
            let (o, indeg) = decmin_orientation(g)?;
            let arcs = o
                .arcs()
                .into_iter()
                .map(|(tail, head)| format!("{}->{}", ground.name(tail), ground.name(head)))
                .collect();
            (indeg, Some(arcs))
        }
        _ => {
            let start = bootstrap_member(inst)?;
            (solver::find_dec_min(inst, &start)?, None)
        }
    };

    let d = canonical_decomposition(inst)?;
    let matroid = DecMinMatroid::new(d.clone());
    let fixed: Vec<Subset> = (0..d.q()).map(|i| matroid.value_fixed(i)).collect();
    let cert = duality::certificate(inst, &d, &m)?;

    let is_dec_min = solver::is_dec_min(inst, &m)?.is_dec_min();
    let canonical_agrees = decomposition_from_decmin(inst, &m)? == d;
    let square = duality::square_sum(&m);

    Ok(CertificateDocument {
        instance: loaded.info(),
        dec_min: named_map(&ground, &m),
        square_sum: square,
        orientation,
        decomposition: DecompositionDoc {
            chain: d.chain().iter().map(|&c| subset_names(&ground, c)).collect(),
            partition: d.partition().iter().map(|&b| subset_names(&ground, b)).collect(),
            betas: d.betas().to_vec(),
            r: d.rs().to_vec(),
            fixed: fixed.iter().map(|&f| subset_names(&ground, f)).collect(),
        },
        matroid: MatroidDoc {
            block_ranks: d.rs().to_vec(),
            dec_min_count: matroid.count_dec_min(),
        },
        dual: DualDoc {
            pi: named_map(&ground, &cert.pi),
            dual_value: cert.dual_value,
            is_odd: cert.is_odd,
            o1: cert.o1_holds,
            o2: cert.o2_holds,
        },
        verification: VerificationDoc {
            is_member: true,
            is_dec_min,
            canonical_agrees,
            dual_gap_zero: cert.dual_value == square,
        },
    })
}

/// Enumerates all members inside the bounds, one compact JSON object per
/// line, in ascending lexicographic order.
pub fn cmd_enumerate(
    path: &Path,
    bounds: Option<(i64, i64)>,
    max_points: Option<u64>,
    scan_limit: usize,
) -> Result<Vec<String>, CliError> {
    let loaded = load(path, scan_limit)?;
    let inst = &loaded.instance;
    let mut budget = match bounds {
        Some((lo, hi)) => EnumerationBudget::uniform(inst.n(), lo, hi),
        None => EnumerationBudget::auto(inst)?,
    };
    if let Some(cap) = max_points {
        budget = budget.with_max_points(cap);
    }
    let members = enumerate_members(inst, &budget)?;
    let ground = inst.ground();
    members
        .iter()
        .map(|m| {
            serde_json::to_string(&named_map(ground, m))
                .map_err(|e| CliError { message: e.to_string(), code: 3 })
        })
        .collect()
}

/// Minimizes a linear cost over the dec-min set by the matroid greedy
/// rule; optionally cross-checks against brute-force enumeration.
pub fn cmd_cheapest(
    path: &Path,
    costs_path: &Path,
    verify: bool,
    bounds: Option<(i64, i64)>,
    scan_limit: usize,
) -> Result<CheapestDocument, CliError> {
    let loaded = load(path, scan_limit)?;
    let inst = &loaded.instance;
    let ground = inst.ground().clone();

    let cost_text = std::fs::read_to_string(costs_path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", costs_path.display())))?;
    let cost_map: BTreeMap<String, f64> = serde_json::from_str(&cost_text)
        .map_err(|e| CliError::parse(format!("bad cost file: {e}")))?;
    let costs = vector_from_named(&ground, &cost_map)?;

    let d = canonical_decomposition(inst)?;
    let matroid = DecMinMatroid::new(d);
    let best = matroid.cheapest_dec_min(&costs)?;
    let total = |v: &IntVector| -> f64 {
        v.iter().zip(&costs).map(|(&m, &c)| c * m as f64).sum()
    };
    let cost = total(&best);

    let verified = if verify {
        let budget = match bounds {
            Some((lo, hi)) => EnumerationBudget::uniform(inst.n(), lo, hi),
            None => EnumerationBudget::auto(inst)?,
        };
        let optimum = decmin::reference::brute_dec_min(inst, &budget)?
            .iter()
            .map(total)
            .fold(f64::INFINITY, f64::min);
        Some((cost - optimum).abs() < 1e-9)
    } else {
        None
    };

    Ok(CheapestDocument {
        instance: loaded.info(),
        vector: named_map(&ground, &best),
        cost,
        verified,
    })
}

/// Where `verify` takes its vectors from.
pub enum VectorSource {
    /// Comma-separated values in ground-set order.
    Inline(String),
    /// A `solve --json` document; reads its `dec_min` and `dual.pi`.
    FromSolve(String),
}

/// Checks a vector against an instance: membership (exit 3 with the
/// violated constraint when it fails), the dec-min property with its
/// chain or improving-pair witness, and optionally a dual vector's
/// optimality criteria and duality gap.
pub fn cmd_verify(
    path: &Path,
    source: VectorSource,
    pi_flag: Option<String>,
    scan_limit: usize,
) -> Result<VerifyDocument, CliError> {
    let loaded = load(path, scan_limit)?;
    let inst = &loaded.instance;
    let ground = inst.ground().clone();

    let (m, pi) = match source {
        VectorSource::Inline(text) => (parse_int_vector(&text, inst.n())?, None),
        VectorSource::FromSolve(doc_text) => {
            let doc: CertificateDocument = serde_json::from_str(&doc_text)
                .map_err(|e| CliError::parse(format!("bad solve document: {e}")))?;
            let m = IntVector::new(vector_from_named(&ground, &doc.dec_min)?);
            let pi = IntVector::new(vector_from_named(&ground, &doc.dual.pi)?);
            (m, Some(pi))
        }
    };
    let pi = match pi_flag {
        Some(text) => Some(parse_int_vector(&text, inst.n())?),
        None => pi,
    };

    if let Some(x) = inst.membership_witness(&m)? {
        let message = if x == inst.full() {
            format!(
                "not a member: component sum {} differs from p(S) = {}",
                m.total(),
                inst.eval_p(x)
            )
        } else {
            format!(
                "not a member: sum over {} is {}, below p = {}",
                ground.format_subset(x),
                m.sum_on(x),
                inst.eval_p(x)
            )
        };
        return Err(CliError::semantic(message));
    }

    let witness = solver::is_dec_min(inst, &m)?;
    let (is_dec_min, chain, improving_pair) = match &witness {
        DecMinWitness::DecMin { chain } => (
            true,
            Some(chain.iter().map(|&c| subset_names(&ground, c)).collect()),
            None,
        ),
        DecMinWitness::NotDecMin { s, t } => (
            false,
            None,
            Some((ground.name(*s).to_string(), ground.name(*t).to_string())),
        ),
    };

    let dual = match pi {
        None => None,
        Some(pi) => {
            let (o1, o2) = duality::check_optimality_criteria(inst, &m, &pi)?;
            let dual_value = duality::dual_value(inst, &pi)?;
            let primal_value = duality::square_sum(&m);
            Some(VerifyDualDoc {
                pi: named_map(&ground, &pi),
                primal_value,
                dual_value,
                gap: primal_value - dual_value,
                o1,
                o2,
            })
        }
    };

    Ok(VerifyDocument {
        instance: loaded.info(),
        vector: named_map(&ground, &m),
        is_member: true,
        is_dec_min,
        chain,
        improving_pair,
        dual,
    })
}

fn parse_int_vector(text: &str, n: usize) -> Result<IntVector, CliError> {
    let values = text
        .split(',')
        .map(|part| part.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::parse(format!("bad vector {text:?}: {e}")))?;
    if values.len() != n {
        return Err(CliError::semantic(format!(
            "vector has {} entries, instance has {n}",
            values.len()
        )));
    }
    Ok(IntVector::new(values))
}

/// Parses a `lo,hi` bounds flag.
pub fn parse_bounds(text: &str) -> Result<(i64, i64), CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::parse(format!("bounds must be lo,hi; got {text:?}")));
    }
    let lo = parts[0].trim().parse::<i64>();
    let hi = parts[1].trim().parse::<i64>();
    match (lo, hi) {
        (Ok(lo), Ok(hi)) => Ok((lo, hi)),
        _ => Err(CliError::parse(format!("bounds must be lo,hi; got {text:?}"))),
    }
}

/// Pretty JSON with a trailing newline; byte-stable for a fixed document.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}

fn write_named_line(out: &mut String, label: &str, map: &BTreeMap<String, i64>, names: &[String]) {
    let _ = write!(out, "{label}:");
    for name in names {
        let _ = write!(out, " {name}={}", map[name]);
    }
    out.push('\n');
}

fn write_blocks_line(out: &mut String, label: &str, blocks: &[Vec<String>]) {
    let _ = write!(out, "{label}:");
    for block in blocks {
        let _ = write!(out, " {{{}}}", block.join(","));
    }
    out.push('\n');
}

/// Human-readable rendering of a solve document.
pub fn render_solve(doc: &CertificateDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "instance: kind={} n={} digest={}",
        doc.instance.kind, doc.instance.n, doc.instance.digest
    );
    write_named_line(&mut out, "dec-min", &doc.dec_min, &doc.instance.names);
    let _ = writeln!(out, "square-sum: {}", doc.square_sum);
    if let Some(arcs) = &doc.orientation {
        let _ = writeln!(out, "orientation: {}", arcs.join(" "));
    }
    write_blocks_line(&mut out, "chain", &doc.decomposition.chain);
    write_blocks_line(&mut out, "partition", &doc.decomposition.partition);
    let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "betas: {}", join(&doc.decomposition.betas));
    let _ = writeln!(out, "block-r: {}", join(&doc.decomposition.r));
    write_blocks_line(&mut out, "value-fixed", &doc.decomposition.fixed);
    let _ = writeln!(out, "dec-min-count: {}", doc.matroid.dec_min_count);
    write_named_line(&mut out, "dual pi", &doc.dual.pi, &doc.instance.names);
    let _ = writeln!(
        out,
        "dual-value: {} odd={} o1={} o2={}",
        doc.dual.dual_value, doc.dual.is_odd, doc.dual.o1, doc.dual.o2
    );
    let v = &doc.verification;
    let _ = writeln!(
        out,
        "verified: member={} dec-min={} canonical={} gap-zero={}",
        v.is_member, v.is_dec_min, v.canonical_agrees, v.dual_gap_zero
    );
    out
}

/// Human-readable rendering of a cheapest document.
pub fn render_cheapest(doc: &CheapestDocument) -> String {
    let mut out = String::new();
    write_named_line(&mut out, "cheapest dec-min", &doc.vector, &doc.instance.names);
    let _ = writeln!(out, "cost: {}", doc.cost);
    if let Some(ok) = doc.verified {
        let _ = writeln!(out, "brute-force check: {}", if ok { "pass" } else { "FAIL" });
    }
    out
}

/// Human-readable rendering of a verify document.
pub fn render_verify(doc: &VerifyDocument) -> String {
    let mut out = String::new();
    write_named_line(&mut out, "vector", &doc.vector, &doc.instance.names);
    let _ = writeln!(out, "member: {}", doc.is_member);
    let _ = writeln!(out, "dec-min: {}", doc.is_dec_min);
    if let Some(chain) = &doc.chain {
        write_blocks_line(&mut out, "chain", chain);
    }
    if let Some((s, t)) = &doc.improving_pair {
        let _ = writeln!(out, "improving pair: take from {t}, give to {s}");
    }
    if let Some(dual) = &doc.dual {
        let _ = writeln!(
            out,
            "dual: value={} primal={} gap={} o1={} o2={}",
            dual.dual_value, dual.primal_value, dual.gap, dual.o1, dual.o2
        );
    }
    out
}
