//! Separable convex objectives over the M-convex set, and exact min-max
//! certificates for the minimum square-sum.
//!
//! Dec-min members minimize far more than the lexicographic objective: they
//! are exactly the minimizers of the square-sum `W(z) = Σ z(s)²`, of the
//! pairwise difference-sum, and of `Σ φ(z(s))` for every symmetric strictly
//! convex `φ`.  For general per-element convex functions,
//! [`groenevelt_check`] decides global optimality by a purely local exchange
//! test.
//!
//! The square-sum optimum has an integer dual: for any integer vector `π`,
//!
//! ```text
//! dual(π)  =  p̂(π) − Σ_s ⌊π(s)/2⌋ ⌈π(s)/2⌉  <=  W(m)     for every member m,
//! ```
//!
//! with equality for the *canonical dual* `π*(s) = 2β_i − 1` on block `S_i`
//! ([`canonical_dual`]).  Equality of a concrete pair `(m, π)` is
//! characterized by two checkable criteria ([`check_optimality_criteria`]),
//! and the full set of optimal duals by three per-block conditions
//! ([`is_dual_optimal`]).

use crate::canonical::CanonicalDecomposition;
use crate::core::{ceil_div, floor_div, ExtInt, IntVector, Subset, SupermodularInstance};
use crate::Error;

/// The square-sum `W(z) = Σ z(s)²`.
pub fn square_sum(z: &IntVector) -> i64 {
    z.iter().map(|&v| v * v).sum()
}

/// The difference-sum `Δ(z) = Σ_{s≠t} |z(s) − z(t)|` over ordered pairs,
/// so each unordered pair counts twice.
pub fn difference_sum(z: &IntVector) -> i64 {
    let mut total = 0;
    for (i, &a) in z.iter().enumerate() {
        for &b in z.values()[..i].iter() {
            total += 2 * (a - b).abs();
        }
    }
    total
}

/// A univariate discrete convex function given by a value table on an
/// integer interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiTable {
    lo: i64,
    values: Vec<i64>,
}

impl PhiTable {
    /// Builds a table for arguments `lo..=hi` from a closure.
    pub fn from_fn(lo: i64, hi: i64, f: impl Fn(i64) -> i64) -> Self {
        PhiTable { lo, values: (lo..=hi).map(f).collect() }
    }

    /// Smallest tabulated argument.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Largest tabulated argument.
    pub fn hi(&self) -> i64 {
        self.lo + self.values.len() as i64 - 1
    }

    /// The value at `k`, if tabulated.
    pub fn value(&self, k: i64) -> Option<i64> {
        if k < self.lo {
            return None;
        }
        self.values.get((k - self.lo) as usize).copied()
    }

    /// The interior argument at which convexity first fails, if any.
    fn convexity_violation(&self) -> Option<i64> {
        (1..self.values.len().saturating_sub(1)).find_map(|j| {
            if 2 * self.values[j] > self.values[j - 1] + self.values[j + 1] {
                Some(self.lo + j as i64)
            } else {
                None
            }
        })
    }
}

/// Local optimality test for a separable convex objective `Σ φ_s(z(s))`.
///
/// Returns true exactly when every feasible exchange fails to improve:
/// `φ_s(m(s)+1) + φ_t(m(t)−1) >= φ_s(m(s)) + φ_t(m(t))` for all pairs with
/// `m + χ_s − χ_t` in the M-convex set.  For discrete convex `φ_s` this
/// local condition is equivalent to global minimality of the objective over
/// the whole set.
///
/// Each table must be convex ([`Error::NonConvexPhi`]) and cover
/// `m(s) − 1 ..= m(s) + 1` ([`Error::PhiRange`]); `m` must be a member.
pub fn groenevelt_check(
    inst: &SupermodularInstance,
    m: &IntVector,
    phis: &[PhiTable],
) -> Result<bool, Error> {
    let n = inst.n();
    if phis.len() != n {
        return Err(Error::DimensionMismatch { want: n, got: phis.len() });
    }
    if !inst.is_member(m)? {
        return Err(Error::NotMember);
    }
    for (i, phi) in phis.iter().enumerate() {
        if let Some(at) = phi.convexity_violation() {
            return Err(Error::NonConvexPhi { index: i, at });
        }
    }
    let phi_at = |i: usize, k: i64| {
        phis[i].value(k).ok_or(Error::PhiRange { index: i, at: k })
    };
    for s in 0..n {
        for t in 0..n {
            if s == t || !inst.exchange_feasible(m, s, t)? {
                continue;
            }
            let lhs = phi_at(s, m.get(s) + 1)? + phi_at(t, m.get(t) - 1)?;
            let rhs = phi_at(s, m.get(s))? + phi_at(t, m.get(t))?;
            if lhs < rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The dual objective `p̂(π) − Σ_s ⌊π(s)/2⌋ ⌈π(s)/2⌉`.
///
/// Weak duality: this value is at most `W(m)` for every member `m`, whatever
/// integer `π` is supplied.  Fails with [`Error::InfeasiblePrefix`] when the
/// linear extension does (the dual value would be `-inf`).
pub fn dual_value(inst: &SupermodularInstance, pi: &IntVector) -> Result<i64, Error> {
    let extension = inst.lovasz_extension(pi)?;
    let penalty: i64 = pi.iter().map(|&v| floor_div(v, 2) * ceil_div(v, 2)).sum();
    Ok(extension - penalty)
}

/// The two equality criteria tying a member `m` to a dual vector `π`.
///
/// * `o1`: `2m(s) − 1 <= π(s) <= 2m(s) + 1` for every element (equivalently,
///   `m(s)` is one of `⌊π(s)/2⌋`, `⌈π(s)/2⌉`);
/// * `o2`: every threshold set `{ s : π(s) >= α }` over the distinct values
///   `α` of `π` is tight for `m`.
///
/// Both hold exactly when `W(m) = dual_value(π)`, which certifies `m` as a
/// square-sum minimizer and `π` as a dual optimum simultaneously.
pub fn check_optimality_criteria(
    inst: &SupermodularInstance,
    m: &IntVector,
    pi: &IntVector,
) -> Result<(bool, bool), Error> {
    inst.check_dim(pi)?;
    if !inst.is_member(m)? {
        return Err(Error::NotMember);
    }
    let o1 = (0..inst.n()).all(|s| {
        let v = pi.get(s);
        2 * m.get(s) - 1 <= v && v <= 2 * m.get(s) + 1
    });

    let mut levels: Vec<i64> = pi.values().to_vec();
    levels.sort_unstable_by(|a, b| b.cmp(a));
    levels.dedup();
    let o2 = levels.iter().all(|&alpha| {
        let level = Subset::from_indices((0..inst.n()).filter(|&i| pi.get(i) >= alpha));
        inst.is_tight(m, level)
    });
    Ok((o1, o2))
}

/// The canonical dual `π*`: `2β_i − 1` on every block `S_i`.
///
/// All components are odd; `dual_value(π*)` equals the minimum square-sum,
/// and `π*` is the componentwise smallest dual optimum.
pub fn canonical_dual(d: &CanonicalDecomposition) -> IntVector {
    let mut pi = vec![0i64; d.ground().n()];
    for (block, &beta) in d.partition().iter().zip(d.betas()) {
        for s in block.iter() {
            pi[s] = 2 * beta - 1;
        }
    }
    IntVector::new(pi)
}

/// Membership test for the full set of optimal dual vectors.
///
/// `π` is a dual optimum exactly when, for every block `i` with value-fixed
/// set `F_i`:
///
/// 1. `π(s) = 2β_i − 1` on `S_i − F_i`;
/// 2. `2β_i − 1 <= π(s) <= 2β_i + 1` on `F_i`;
/// 3. `π(s) >= π(t)` for every arc `st` of the block digraph on `F_i`,
///    where `st` is an arc when every `X ⊆ S_i` with `β_i |X| = p_i(X)`
///    that contains `t` also contains `s`.
///
/// With `F_i` empty, conditions 2 and 3 are vacuous.  The optimal set is
/// closed under componentwise min and max, and [`canonical_dual`] is its
/// smallest element.
pub fn is_dual_optimal(
    inst: &SupermodularInstance,
    d: &CanonicalDecomposition,
    fixed: &[Subset],
    pi: &IntVector,
) -> Result<bool, Error> {
    inst.check_dim(pi)?;
    if fixed.len() != d.q() {
        return Err(Error::DimensionMismatch { want: d.q(), got: fixed.len() });
    }
    for i in 0..d.q() {
        let block = d.partition()[i];
        let beta = d.betas()[i];
        let f_i = fixed[i];
        for s in (block - f_i).iter() {
            if pi.get(s) != 2 * beta - 1 {
                return Ok(false);
            }
        }
        for s in f_i.iter() {
            if pi.get(s) < 2 * beta - 1 || pi.get(s) > 2 * beta + 1 {
                return Ok(false);
            }
        }
        if f_i.is_empty() {
            continue;
        }

        // collect the tight family members inside F_i once per block
        let p_i = &d.block_instances()[i];
        let elems: Vec<usize> = block.iter().collect();
        let f_local = Subset::from_indices(
            (0..elems.len()).filter(|&j| f_i.contains(elems[j])),
        );
        let family: Vec<Subset> = f_local
            .subsets()
            .filter(|&x| p_i.eval_p(x) == ExtInt::Finite(beta * x.card() as i64))
            .collect();

        for (js, &s) in elems.iter().enumerate() {
            if !f_i.contains(s) {
                continue;
            }
            for (jt, &t) in elems.iter().enumerate() {
                if jt == js || !f_i.contains(t) {
                    continue;
                }
                let separated = family
                    .iter()
                    .any(|x| x.contains(jt) && !x.contains(js));
                if !separated && pi.get(s) < pi.get(t) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A dual vector together with its value and, relative to a supplied
/// member, the two equality criteria.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCertificate {
    /// The dual vector.
    pub pi: IntVector,
    /// `p̂(π)` minus the rounding penalty.
    pub dual_value: i64,
    /// Whether every component of `pi` is odd.
    pub is_odd: bool,
    /// Criterion 1 relative to the supplied member.
    pub o1_holds: bool,
    /// Criterion 2 relative to the supplied member.
    pub o2_holds: bool,
}

/// Builds the canonical dual certificate for a member `m`.
///
/// When `m` is dec-min the certificate is exact: both criteria hold and the
/// dual value equals `W(m)`.
pub fn certificate(
    inst: &SupermodularInstance,
    d: &CanonicalDecomposition,
    m: &IntVector,
) -> Result<DualCertificate, Error> {
    let pi = canonical_dual(d);
    let value = dual_value(inst, &pi)?;
    let (o1, o2) = check_optimality_criteria(inst, m, &pi)?;
    Ok(DualCertificate {
        is_odd: pi.iter().all(|&v| v.rem_euclid(2) == 1),
        pi,
        dual_value: value,
        o1_holds: o1,
        o2_holds: o2,
    })
}
