use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::core::{ExtInt, GroundSet, Subset};
use crate::Error;

/// Default cap on the ground-set size for operations that scan all subsets.
///
/// At the default of 20 a full scan touches about a million subsets, which is
/// instantaneous; every doubling of the ground set doubles nothing and
/// squares everything, so the cap is a guard rail rather than a tuning knob.
pub const DEFAULT_SCAN_LIMIT: usize = 20;

/// Ground-set size up to which oracle values are memoized as a full table.
pub const MEMO_LIMIT: usize = 16;

/// Where an instance's oracle came from.  Purely informational.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Source {
    /// Values supplied directly as a table.
    Explicit,
    /// In-degree bounds induced by an undirected multigraph.
    GraphInduced,
    /// Neighborhood counts of a bipartite graph.
    Bipartite,
    /// Box-truncated sums of matroid rank functions.
    KBases,
    /// Restriction of another instance to a subset.
    Restricted,
    /// Contraction of another instance by a subset.
    Contracted,
    /// Anything else.
    Custom,
}

/// An integer supermodular set function `p` presented as an oracle, together
/// with its ground set.
///
/// The function must satisfy `p(empty) = 0` and `p(S)` finite; other subsets
/// may evaluate to [`ExtInt::NegInf`], which makes their lower-bound
/// constraint vacuous.  Supermodularity itself
/// (`p(X) + p(Y) <= p(X ∩ Y) + p(X ∪ Y)` whenever the left side is finite)
/// is the caller's responsibility; [`SupermodularInstance::supermodularity_witness`]
/// checks it exhaustively on small ground sets and is run by the instance
/// parsers.
///
/// The instance represents the integral base-polyhedron
/// `B'(p) = { x : x(S) = p(S), x(X) >= p(X) }`, whose integer points form an
/// M-convex set.  All higher-level algorithms in this crate consume this type.
///
/// Cloning is cheap (the oracle is shared).  For ground sets of at most
/// [`MEMO_LIMIT`] elements the full value table is computed once on first use
/// and cached, so repeated scans cost a table lookup per subset.
#[derive(Clone)]
pub struct SupermodularInstance {
    inner: Arc<Inner>,
    scan_limit: usize,
}

struct Inner {
    ground: GroundSet,
    source: Source,
    eval: Box<dyn Fn(Subset) -> ExtInt + Send + Sync>,
    memo: OnceLock<Box<[ExtInt]>>,
}

impl SupermodularInstance {
    /// Wraps an oracle closure.
    ///
    /// Checks `p(empty) = 0` and `p(S)` finite, and rejects otherwise with
    /// [`Error::InvalidInstance`].
    pub fn from_fn<F>(ground: GroundSet, source: Source, eval: F) -> Result<Self, Error>
    where
        F: Fn(Subset) -> ExtInt + Send + Sync + 'static,
    {
        if eval(Subset::EMPTY) != ExtInt::Finite(0) {
            return Err(Error::InvalidInstance(format!(
                "p(empty) must be 0, got {}",
                eval(Subset::EMPTY)
            )));
        }
        if !eval(ground.full()).is_finite() {
            return Err(Error::InvalidInstance("p(S) must be finite".into()));
        }
        Ok(SupermodularInstance {
            inner: Arc::new(Inner {
                ground,
                source,
                eval: Box::new(eval),
                memo: OnceLock::new(),
            }),
            scan_limit: DEFAULT_SCAN_LIMIT,
        })
    }

    /// Builds an instance from a full value table indexed by subset mask.
    ///
    /// `table.len()` must equal `2^n` for the `n`-element ground set.
    pub fn from_table(ground: GroundSet, table: Vec<ExtInt>) -> Result<Self, Error> {
        let n = ground.n();
        if n > 30 || table.len() != 1usize << n {
            return Err(Error::InvalidInstance(format!(
                "value table has {} entries, expected 2^{n}",
                table.len()
            )));
        }
        let table: Arc<[ExtInt]> = table.into();
        Self::from_fn(ground, Source::Explicit, move |x| table[x.mask() as usize])
    }

    /// The ground set.
    pub fn ground(&self) -> &GroundSet {
        &self.inner.ground
    }

    /// Number of ground-set elements.
    pub fn n(&self) -> usize {
        self.inner.ground.n()
    }

    /// The oracle's provenance tag.
    pub fn source(&self) -> Source {
        self.inner.source
    }

    /// The current scan limit.
    pub fn scan_limit(&self) -> usize {
        self.scan_limit
    }

    /// Returns the same instance with a different scan limit.
    ///
    /// The oracle and its memo table stay shared with `self`.
    pub fn with_scan_limit(&self, limit: usize) -> Self {
        SupermodularInstance { inner: Arc::clone(&self.inner), scan_limit: limit }
    }

    /// Rewraps the oracle under a different provenance tag.
    pub(crate) fn retag(&self, source: Source) -> Self {
        let delegate = self.clone();
        Self::from_fn(self.ground().clone(), source, move |x| delegate.eval_p(x))
            .expect("retagging a valid instance")
            .with_scan_limit(self.scan_limit)
    }

    /// Evaluates `p(X)`.
    pub fn eval_p(&self, x: Subset) -> ExtInt {
        let n = self.n();
        if n <= MEMO_LIMIT {
            let table = self.inner.memo.get_or_init(|| {
                (0..1u64 << n)
                    .map(|mask| (self.inner.eval)(Subset::from_mask(mask)))
                    .collect()
            });
            table[x.mask() as usize]
        } else {
            (self.inner.eval)(x)
        }
    }

    /// Evaluates the complementary function `b(X) = p(S) - p(S - X)`.
    ///
    /// `b` is submodular when `p` is supermodular and bounds members from
    /// above: `x(X) <= b(X)` for every member `x`.  When `p(S - X)` is minus
    /// infinity the complementary value is unbounded, reported as `None`.
    pub fn complement_b(&self, x: Subset) -> Option<i64> {
        let p_s = self.eval_p(self.full()).expect_finite("p(S)");
        match self.eval_p(self.full() - x) {
            ExtInt::Finite(v) => Some(p_s - v),
            ExtInt::NegInf => None,
        }
    }

    /// The full ground set as a subset.
    pub fn full(&self) -> Subset {
        self.inner.ground.full()
    }

    /// Errors out when the ground set is too large for a full subset scan.
    pub(crate) fn ensure_scannable(&self) -> Result<(), Error> {
        let n = self.n();
        if n > self.scan_limit {
            Err(Error::ScanTooLarge { n, limit: self.scan_limit })
        } else {
            Ok(())
        }
    }

    /// All oracle values as a table indexed by subset mask.
    ///
    /// Gated by the scan limit.
    pub fn table(&self) -> Result<Vec<ExtInt>, Error> {
        self.ensure_scannable()?;
        Ok((0..1u64 << self.n())
            .map(|mask| self.eval_p(Subset::from_mask(mask)))
            .collect())
    }

    /// Searches exhaustively for a violation of supermodularity.
    ///
    /// Returns a pair `(X, Y)` with `p(X) + p(Y) > p(X ∩ Y) + p(X ∪ Y)` if
    /// one exists.  Pairs whose left side contains minus infinity cannot
    /// violate anything and are skipped.  Gated by the scan limit; quadratic
    /// in the number of subsets, so meant for small instances and tests.
    pub fn supermodularity_witness(&self) -> Result<Option<(Subset, Subset)>, Error> {
        self.ensure_scannable()?;
        let size = 1u64 << self.n();
        for xm in 0..size {
            let x = Subset::from_mask(xm);
            let px = match self.eval_p(x) {
                ExtInt::Finite(v) => v,
                ExtInt::NegInf => continue,
            };
            for ym in xm + 1..size {
                let y = Subset::from_mask(ym);
                let py = match self.eval_p(y) {
                    ExtInt::Finite(v) => v,
                    ExtInt::NegInf => continue,
                };
                if ExtInt::Finite(px + py) > self.eval_p(x & y) + self.eval_p(x | y) {
                    return Ok(Some((x, y)));
                }
            }
        }
        Ok(None)
    }
}

impl fmt::Debug for SupermodularInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SupermodularInstance")
            .field("ground", &self.inner.ground.names())
            .field("source", &self.inner.source)
            .field("scan_limit", &self.scan_limit)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cardinality_instance() -> SupermodularInstance {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        SupermodularInstance::from_fn(g, Source::Custom, |x| ExtInt::Finite(x.card() as i64))
            .unwrap()
    }

    #[test]
    fn constructor_validates_endpoints() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let bad_empty =
            SupermodularInstance::from_fn(g.clone(), Source::Custom, |_| ExtInt::Finite(1));
        assert!(matches!(bad_empty, Err(Error::InvalidInstance(_))));
        let bad_full = SupermodularInstance::from_fn(g, Source::Custom, |x| {
            if x.is_empty() {
                ExtInt::Finite(0)
            } else {
                ExtInt::NegInf
            }
        });
        assert!(matches!(bad_full, Err(Error::InvalidInstance(_))));
    }

    #[test]
    fn complement_of_cardinality() {
        let inst = cardinality_instance();
        assert_eq!(inst.complement_b(Subset::EMPTY), Some(0));
        assert_eq!(inst.complement_b(Subset::singleton(1)), Some(1));
        assert_eq!(inst.complement_b(inst.full()), Some(3));
    }

    #[test]
    fn complement_of_missing_value_is_unbounded() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let inst = SupermodularInstance::from_fn(g, Source::Custom, |x| match x.mask() {
            0b00 => ExtInt::Finite(0),
            0b11 => ExtInt::Finite(2),
            _ => ExtInt::NegInf,
        })
        .unwrap();
        assert_eq!(inst.complement_b(Subset::singleton(0)), None);
        assert_eq!(inst.complement_b(inst.full()), Some(2));
    }

    #[test]
    fn scan_limit_gates_table() {
        let inst = cardinality_instance().with_scan_limit(2);
        assert_eq!(
            inst.table(),
            Err(Error::ScanTooLarge { n: 3, limit: 2 })
        );
        assert_eq!(inst.with_scan_limit(3).table().unwrap().len(), 8);
    }

    #[test]
    fn supermodularity_audit() {
        // cardinality is modular, hence supermodular
        assert_eq!(cardinality_instance().supermodularity_witness().unwrap(), None);

        // max(|X| choose 2, ...) style counterexample: strictly submodular
        let g = GroundSet::new(["a", "b"]).unwrap();
        let sub = SupermodularInstance::from_fn(g, Source::Custom, |x| match x.mask() {
            0b00 => ExtInt::Finite(0),
            0b11 => ExtInt::Finite(1),
            _ => ExtInt::Finite(1),
        })
        .unwrap();
        let witness = sub.supermodularity_witness().unwrap();
        assert_eq!(
            witness,
            Some((Subset::singleton(0), Subset::singleton(1)))
        );
    }
}
