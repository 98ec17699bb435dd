//! The canonical chain, partition, and essential value-sequence of an
//! M-convex set.
//!
//! Every dec-min member of an M-convex set carries the same multiset of
//! values, and those values are organized by a structure that depends only on
//! the instance: a chain `C_1 ⊂ ... ⊂ C_q = S` (the *canonical chain*), the
//! partition into difference blocks `S_i = C_i − C_{i−1}`, and a strictly
//! decreasing *essential value-sequence* `β_1 > ... > β_q`.  On block `S_i`
//! every dec-min member takes only the values `β_i` and `β_i − 1`, with
//! exactly `r_i` components equal to `β_i`.
//!
//! The module builds this decomposition two independent ways — bottom-up
//! from the oracle by iterated peak sets ([`canonical_decomposition`]), and
//! top-down from any single dec-min member
//! ([`decomposition_from_decmin`]) — and the two agree on every instance.
//! [`verify_decmin_via_canonical`] then turns the decomposition into a fast
//! membership test for the set of dec-min elements.

use crate::core::{ceil_div, ExtInt, GroundSet, IntVector, Subset, SupermodularInstance};
use crate::solver;
use crate::Error;
use std::fmt;

/// The canonical chain/partition of an instance, with its value-sequence.
///
/// Instances of this type are produced by [`canonical_decomposition`] and
/// [`decomposition_from_decmin`]; the two constructions yield equal values.
/// Equality ignores the attached block instances (they are oracle wrappers
/// without a meaningful equality of their own).
#[derive(Clone, Debug)]
pub struct CanonicalDecomposition {
    ground: GroundSet,
    chain: Vec<Subset>,
    partition: Vec<Subset>,
    betas: Vec<i64>,
    rs: Vec<i64>,
    block_instances: Vec<SupermodularInstance>,
}

impl CanonicalDecomposition {
    /// Number of blocks `q`.
    pub fn q(&self) -> usize {
        self.chain.len()
    }

    /// The ground set the decomposition lives on.
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// The canonical chain `C_1 ⊂ ... ⊂ C_q = S`.
    pub fn chain(&self) -> &[Subset] {
        &self.chain
    }

    /// The canonical partition `S_1, ..., S_q` with `S_i = C_i − C_{i−1}`.
    pub fn partition(&self) -> &[Subset] {
        &self.partition
    }

    /// The essential value-sequence `β_1 > ... > β_q`.
    pub fn betas(&self) -> &[i64] {
        &self.betas
    }

    /// Per block, the exact number `r_i` of components equal to `β_i` in
    /// every dec-min member.
    pub fn rs(&self) -> &[i64] {
        &self.rs
    }

    /// Per block, the instance `p_i`: the contraction of `p` by `C_{i−1}`
    /// restricted to `S_i`.
    pub fn block_instances(&self) -> &[SupermodularInstance] {
        &self.block_instances
    }

    /// The index of the block containing element `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.partition
            .iter()
            .position(|s| s.contains(i))
            .expect("partition covers the ground set")
    }

    /// The unique vector all of whose components sit at the block floor
    /// `β_i − 1`.
    ///
    /// Every dec-min member is this floor plus the indicator of a block-wise
    /// basis set.
    pub fn floor_vector(&self) -> IntVector {
        let mut v = vec![0i64; self.ground.n()];
        for (block, &beta) in self.partition.iter().zip(&self.betas) {
            for i in block.iter() {
                v[i] = beta - 1;
            }
        }
        IntVector::new(v)
    }
}

impl PartialEq for CanonicalDecomposition {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground
            && self.chain == other.chain
            && self.partition == other.partition
            && self.betas == other.betas
            && self.rs == other.rs
    }
}

impl Eq for CanonicalDecomposition {}

impl fmt::Display for CanonicalDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.q() {
            if i > 0 {
                write!(f, "  ")?;
            }
            write!(
                f,
                "S{}={} beta={} r={}",
                i + 1,
                self.ground.format_subset(self.partition[i]),
                self.betas[i],
                self.rs[i]
            )?;
        }
        Ok(())
    }
}

/// The largest block value `β_1 = max { ⌈p(X)/|X|⌉ : X nonempty }`.
///
/// Subsets with `p(X) = -inf` impose nothing and are skipped; the maximum
/// exists because `p(S)` is finite.  This is the value that the largest
/// component of a member must reach, and some member attains it.
pub fn beta_first(inst: &SupermodularInstance) -> Result<i64, Error> {
    inst.ensure_scannable()?;
    let mut best: Option<i64> = None;
    for mask in 1..1u64 << inst.n() {
        let x = Subset::from_mask(mask);
        if let ExtInt::Finite(v) = inst.eval_p(x) {
            let ratio = ceil_div(v, x.card() as i64);
            best = Some(best.map_or(ratio, |b| b.max(ratio)));
        }
    }
    Ok(best.expect("p(S) is finite"))
}

/// The peak set `S_1` and the count `r_1`.
///
/// With `h_1(X) = p(X) − (β_1 − 1)|X|`, the maximizers of `h_1` are closed
/// under union and intersection; `S_1` is the unique smallest one (the
/// intersection of them all) and `r_1 = max h_1 >= 1` is the number of
/// `β_1`-valued components every dec-min member has.
pub fn peak_set(inst: &SupermodularInstance) -> Result<(Subset, i64), Error> {
    let beta1 = beta_first(inst)?;
    let mut best = i64::MIN;
    let mut smallest = Subset::EMPTY;
    for mask in 1..1u64 << inst.n() {
        let x = Subset::from_mask(mask);
        if let ExtInt::Finite(v) = inst.eval_p(x) {
            let h = v - (beta1 - 1) * x.card() as i64;
            if h > best {
                best = h;
                smallest = x;
            } else if h == best {
                smallest = smallest & x;
            }
        }
    }
    debug_assert!(best >= 1, "the beta_first maximizer already has h >= 1");
    debug_assert_eq!(
        ExtInt::Finite(best + (beta1 - 1) * smallest.card() as i64),
        inst.eval_p(smallest),
        "maximizers are closed under intersection"
    );
    Ok((smallest, best))
}

/// Builds the canonical decomposition bottom-up from the oracle.
///
/// Iteratively: take the peak set of the current instance, record it as the
/// next block, contract it away, and continue on the rest.  The β value of
/// each round strictly decreases.
pub fn canonical_decomposition(
    inst: &SupermodularInstance,
) -> Result<CanonicalDecomposition, Error> {
    inst.ensure_scannable()?;
    let full = inst.full();
    let mut c_prev = Subset::EMPTY;
    let mut chain = Vec::new();
    let mut partition = Vec::new();
    let mut betas: Vec<i64> = Vec::new();
    let mut rs = Vec::new();
    let mut block_instances = Vec::new();

    while c_prev != full {
        let reduced = if c_prev.is_empty() { inst.clone() } else { inst.contract(c_prev)? };
        let beta = beta_first(&reduced)?;
        let (local_peak, r) = peak_set(&reduced)?;
        if let Some(&prev) = betas.last() {
            debug_assert!(beta < prev, "block values strictly decrease");
        }

        // lift the peak from the contracted ground back to original indices
        let elems: Vec<usize> = (full - c_prev).iter().collect();
        let s_i = Subset::from_indices(local_peak.iter().map(|i| elems[i]));

        block_instances.push(reduced.restrict(local_peak)?);
        c_prev = c_prev | s_i;
        chain.push(c_prev);
        partition.push(s_i);
        betas.push(beta);
        rs.push(r);
    }

    Ok(CanonicalDecomposition {
        ground: inst.ground().clone(),
        chain,
        partition,
        betas,
        rs,
        block_instances,
    })
}

/// Recovers the canonical decomposition from a single dec-min member.
///
/// Round `i` reads off `β_i` as the largest value outside `C_{i−1}` and
/// takes `C_i` as the smallest tight set containing every element of value
/// at least `β_i`.  The result does not depend on which dec-min member is
/// supplied and equals [`canonical_decomposition`].
///
/// Fails with [`Error::NotMember`] / [`Error::NotDecMin`] when `m` is not a
/// dec-min member.
pub fn decomposition_from_decmin(
    inst: &SupermodularInstance,
    m: &IntVector,
) -> Result<CanonicalDecomposition, Error> {
    if !inst.is_member(m)? {
        return Err(Error::NotMember);
    }
    if solver::tightening_step_unchecked(inst, m)?.is_some() {
        return Err(Error::NotDecMin);
    }

    let full = inst.full();
    let mut c_prev = Subset::EMPTY;
    let mut chain = Vec::new();
    let mut partition = Vec::new();
    let mut betas = Vec::new();
    let mut rs = Vec::new();
    let mut block_instances = Vec::new();

    while c_prev != full {
        let beta = (full - c_prev)
            .iter()
            .map(|i| m.get(i))
            .max()
            .expect("the remainder is nonempty");
        // elements of earlier blocks all have values >= beta, so this set
        // contains C_{i-1} as well
        let high = Subset::from_indices((0..inst.n()).filter(|&i| m.get(i) >= beta));
        let c_i = inst.smallest_tight_set(m, high)?;
        let s_i = c_i - c_prev;
        debug_assert!(c_prev.is_subset_of(c_i) && !s_i.is_empty());

        let reduced = if c_prev.is_empty() { inst.clone() } else { inst.contract(c_prev)? };
        let elems: Vec<usize> = (full - c_prev).iter().collect();
        let local = Subset::from_indices(
            s_i.iter().map(|i| elems.iter().position(|&e| e == i).expect("s_i avoids c_prev")),
        );
        block_instances.push(reduced.restrict(local)?);

        rs.push(s_i.iter().filter(|&i| m.get(i) == beta).count() as i64);
        betas.push(beta);
        c_prev = c_i;
        chain.push(c_i);
        partition.push(s_i);
    }

    Ok(CanonicalDecomposition {
        ground: inst.ground().clone(),
        chain,
        partition,
        betas,
        rs,
        block_instances,
    })
}

/// Tests whether `m` is a dec-min member, using a precomputed decomposition.
///
/// `m` qualifies exactly when it is a member, every chain set `C_i` is tight
/// for it, and on each block `S_i` it only takes the values `β_i` and
/// `β_i − 1`.  The membership check cannot be dropped: the other two
/// conditions fix the value multiset but not which elements may carry the
/// larger value, and some of those assignments can leave the M-convex set.
pub fn verify_decmin_via_canonical(
    inst: &SupermodularInstance,
    d: &CanonicalDecomposition,
    m: &IntVector,
) -> Result<bool, Error> {
    if !inst.is_member(m)? {
        return Ok(false);
    }
    for i in 0..d.q() {
        if !inst.is_tight(m, d.chain[i]) {
            return Ok(false);
        }
        let beta = d.betas[i];
        if d.partition[i].iter().any(|s| m.get(s) != beta && m.get(s) != beta - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::Source;

    /// p(X) = |X|^2 - |X|: one block, beta = n, peak = S.
    fn quadratic(n: usize) -> SupermodularInstance {
        let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let g = GroundSet::new(names).unwrap();
        SupermodularInstance::from_fn(g, Source::Custom, |x| {
            let k = x.card() as i64;
            ExtInt::Finite(k * k - k)
        })
        .unwrap()
    }

    #[test]
    fn quadratic_has_one_block() {
        let inst = quadratic(4);
        // ratios (k^2-k)/k = k-1 peak at X = S
        assert_eq!(beta_first(&inst).unwrap(), 3);
        let (s1, r1) = peak_set(&inst).unwrap();
        assert_eq!(s1, inst.full());
        assert_eq!(r1, 4);
        let d = canonical_decomposition(&inst).unwrap();
        assert_eq!(d.q(), 1);
        assert_eq!(d.betas(), &[3]);
        assert_eq!(d.rs(), &[4]);
        assert_eq!(d.floor_vector().values(), &[2, 2, 2, 2]);
        // the uniform vector is dec-min
        let m = IntVector::from([3, 3, 3, 3]);
        let from_m = decomposition_from_decmin(&inst, &m).unwrap();
        assert_eq!(d, from_m);
        assert!(verify_decmin_via_canonical(&inst, &d, &m).unwrap());
    }

    #[test]
    fn two_level_star() {
        // hub gets weight 3, leaves 1: p singleton hub 3, leaves 0, pairwise sums
        let g = GroundSet::new(["hub", "u", "v"]).unwrap();
        let inst = SupermodularInstance::from_fn(g, Source::Custom, |x| {
            let mut v = 0;
            if x.contains(0) {
                v += 3;
            }
            if x.card() == 3 {
                v += 2;
            }
            ExtInt::Finite(v)
        })
        .unwrap();
        let d = canonical_decomposition(&inst).unwrap();
        assert_eq!(d.betas(), &[3, 1]);
        assert_eq!(d.partition(), &[Subset::singleton(0), Subset::from_mask(0b110)]);
        assert_eq!(d.rs(), &[1, 2]);
        assert_eq!(d.block_of(0), 0);
        assert_eq!(d.block_of(2), 1);
        let m = IntVector::from([3, 1, 1]);
        assert_eq!(decomposition_from_decmin(&inst, &m).unwrap(), d);
        assert!(verify_decmin_via_canonical(&inst, &d, &m).unwrap());
        assert!(!verify_decmin_via_canonical(&inst, &d, &IntVector::from([2, 2, 1])).unwrap());
    }

    #[test]
    fn non_decmin_member_is_rejected() {
        let inst = quadratic(3);
        // (3,2,1) is a member but admits the step s=2, t=0
        let err = decomposition_from_decmin(&inst, &IntVector::from([3, 2, 1])).unwrap_err();
        assert_eq!(err, Error::NotDecMin);
        // wrong total: not a member at all
        let err = decomposition_from_decmin(&inst, &IntVector::from([4, 2, 1])).unwrap_err();
        assert_eq!(err, Error::NotMember);
    }
}
