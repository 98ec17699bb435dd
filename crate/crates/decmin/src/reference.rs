//! Brute-force baselines: enumerate an M-convex set inside an integer box
//! and take optima by direct comparison.
//!
//! Everything here is deliberately naive.  The fast paths elsewhere in the
//! crate are validated against these enumerations on small instances, so
//! this module avoids sharing any clever machinery with them: candidates
//! come from a full grid scan, and each one is admitted by a complete
//! membership check.

use crate::core::{IntVector, Subset, SupermodularInstance};
use crate::solver::{dec_compare, inc_compare};
use crate::{duality, Error};

/// Integer box and point budget for a grid enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    lo: Vec<i64>,
    hi: Vec<i64>,
    max_points: u64,
}

impl EnumerationBudget {
    /// Default cap on the number of grid points visited.
    pub const DEFAULT_MAX_POINTS: u64 = 1_000_000;

    /// A budget with per-element bounds `lo(s) ..= hi(s)`.
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self, Error> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch { want: lo.len(), got: hi.len() });
        }
        Ok(EnumerationBudget { lo, hi, max_points: Self::DEFAULT_MAX_POINTS })
    }

    /// A budget with the same bounds `lo ..= hi` for every element.
    pub fn uniform(n: usize, lo: i64, hi: i64) -> Self {
        EnumerationBudget {
            lo: vec![lo; n],
            hi: vec![hi; n],
            max_points: Self::DEFAULT_MAX_POINTS,
        }
    }

    /// Bounds derived from the oracle itself: `p({s})` from below and
    /// `p(S) − p(S − s)` from above.
    ///
    /// Every member lies in this box.  For the graph, bipartite, and
    /// k-bases families it reduces to the natural `[0, degree]` or
    /// `[0, k]` ranges.  Fails with [`Error::UnboundedBounds`] when either
    /// bound is infinite, as happens for explicit tables with missing
    /// singleton or co-singleton values; callers must then supply bounds
    /// themselves.
    pub fn auto(inst: &SupermodularInstance) -> Result<Self, Error> {
        let n = inst.n();
        let mut lo = Vec::with_capacity(n);
        let mut hi = Vec::with_capacity(n);
        for s in 0..n {
            let single = Subset::singleton(s);
            let below = inst
                .eval_p(single)
                .finite()
                .ok_or(Error::UnboundedBounds { index: s })?;
            let above =
                inst.complement_b(single).ok_or(Error::UnboundedBounds { index: s })?;
            lo.push(below);
            hi.push(above);
        }
        Ok(EnumerationBudget { lo, hi, max_points: Self::DEFAULT_MAX_POINTS })
    }

    /// Replaces the point cap.
    pub fn with_max_points(mut self, max_points: u64) -> Self {
        self.max_points = max_points;
        self
    }

    /// Lower bounds, per element.
    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    /// Upper bounds, per element.
    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    fn grid_points(&self) -> u128 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&l, &h)| if h < l { 0u128 } else { (h - l + 1) as u128 })
            .product()
    }
}

/// Lists every member of the M-convex set inside the budget box, in
/// ascending lexicographic order.
///
/// Each grid point is admitted by a full membership check, nothing
/// smarter.  Fails with [`Error::BudgetExceeded`] when the box holds more
/// points than the budget allows.
pub fn enumerate_members(
    inst: &SupermodularInstance,
    budget: &EnumerationBudget,
) -> Result<Vec<IntVector>, Error> {
    let n = inst.n();
    if budget.lo.len() != n {
        return Err(Error::DimensionMismatch { want: n, got: budget.lo.len() });
    }
    let needed = budget.grid_points();
    if needed > budget.max_points as u128 {
        return Err(Error::BudgetExceeded { needed, budget: budget.max_points });
    }
    let mut members = Vec::new();
    if needed == 0 {
        return Ok(members);
    }
    let mut current = budget.lo.clone();
    loop {
        let candidate = IntVector::new(current.clone());
        if inst.is_member(&candidate)? {
            members.push(candidate);
        }
        // odometer: step the last coordinate, carrying leftward
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(members);
            }
            pos -= 1;
            if current[pos] < budget.hi[pos] {
                current[pos] += 1;
                break;
            }
            current[pos] = budget.lo[pos];
        }
    }
}

/// All dec-min members inside the budget box, by direct comparison.
pub fn brute_dec_min(
    inst: &SupermodularInstance,
    budget: &EnumerationBudget,
) -> Result<Vec<IntVector>, Error> {
    let mut best: Vec<IntVector> = Vec::new();
    for m in enumerate_members(inst, budget)? {
        match best.first() {
            None => best.push(m),
            Some(leader) => match dec_compare(&m, leader)? {
                std::cmp::Ordering::Less => {
                    best.clear();
                    best.push(m);
                }
                std::cmp::Ordering::Equal => best.push(m),
                std::cmp::Ordering::Greater => {}
            },
        }
    }
    Ok(best)
}

/// All inc-max members inside the budget box, by direct comparison.
pub fn brute_inc_max(
    inst: &SupermodularInstance,
    budget: &EnumerationBudget,
) -> Result<Vec<IntVector>, Error> {
    let mut best: Vec<IntVector> = Vec::new();
    for m in enumerate_members(inst, budget)? {
        match best.first() {
            None => best.push(m),
            Some(leader) => match inc_compare(&m, leader)? {
                std::cmp::Ordering::Greater => {
                    best.clear();
                    best.push(m);
                }
                std::cmp::Ordering::Equal => best.push(m),
                std::cmp::Ordering::Less => {}
            },
        }
    }
    Ok(best)
}

/// The minimum square-sum over the box and all members attaining it.
pub fn brute_min_sqsum(
    inst: &SupermodularInstance,
    budget: &EnumerationBudget,
) -> Result<(i64, Vec<IntVector>), Error> {
    let mut best_value = i64::MAX;
    let mut best: Vec<IntVector> = Vec::new();
    for m in enumerate_members(inst, budget)? {
        let w = duality::square_sum(&m);
        if w < best_value {
            best_value = w;
            best.clear();
        }
        if w == best_value {
            best.push(m);
        }
    }
    Ok((best_value, best))
}

/// Maximizes the dual objective over all odd vectors in `[lo, hi]^n`.
///
/// Returns the best value and its lexicographically first maximizer.
/// Vectors whose dual value is minus infinity are skipped.  The grid has
/// `(number of odd values)^n` points and must fit in `max_points`.
pub fn brute_dual_max(
    inst: &SupermodularInstance,
    lo: i64,
    hi: i64,
    max_points: u64,
) -> Result<(i64, IntVector), Error> {
    let n = inst.n();
    let first_odd = if lo.rem_euclid(2) == 1 { lo } else { lo + 1 };
    if first_odd > hi {
        return Err(Error::InvalidInstance(format!(
            "no odd values in {lo}..={hi}"
        )));
    }
    let count = ((hi - first_odd) / 2 + 1) as u128;
    let needed = count.pow(n as u32);
    if needed > max_points as u128 {
        return Err(Error::BudgetExceeded { needed, budget: max_points });
    }
    let mut best: Option<(i64, IntVector)> = None;
    let mut current = vec![first_odd; n];
    loop {
        let pi = IntVector::new(current.clone());
        match duality::dual_value(inst, &pi) {
            Ok(value) => {
                if best.as_ref().map_or(true, |(b, _)| value > *b) {
                    best = Some((value, pi));
                }
            }
            Err(Error::InfeasiblePrefix { .. }) => {}
            Err(e) => return Err(e),
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                let (value, pi) =
                    best.expect("a uniform odd vector always has a finite dual value");
                return Ok((value, pi));
            }
            pos -= 1;
            if current[pos] + 2 <= hi {
                current[pos] += 2;
                break;
            }
            current[pos] = first_odd;
        }
    }
}
