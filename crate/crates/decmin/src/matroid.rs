//! The matroidal structure of the set of dec-min members.
//!
//! Once the canonical decomposition is known, the dec-min members are exactly
//! the vectors `χ_L + Δ*` where `Δ*` sits at the block floors (`β_i − 1` on
//! block `S_i`) and `L` picks, independently per block, an `r_i`-element set
//! satisfying the covering constraints
//!
//! ```text
//! |L ∩ X|  >=  p_i(X) − (β_i − 1)|X|      for every X ⊆ S_i.
//! ```
//!
//! Those sets are the bases of a loopless matroid on `S_i`, so the whole
//! dec-min set is a product of matroids shifted by `Δ*`.  That structure
//! yields cheap answers to questions that look expensive: enumerating all
//! dec-min members, finding the elements whose value never varies (the
//! co-loops, [`DecMinMatroid::value_fixed`]), and minimizing a linear cost
//! over the dec-min set by running the matroid greedy algorithm per block
//! ([`DecMinMatroid::cheapest_dec_min`]).

use crate::canonical::CanonicalDecomposition;
use crate::core::{ExtInt, IntVector, Subset};
use crate::Error;
use std::sync::OnceLock;

/// Budget for [`DecMinMatroid::enumerate_dec_min`]: the product of per-block
/// basis counts must not exceed this.
pub const ENUMERATION_BUDGET: u64 = 100_000;

/// Basis oracles for the dec-min set of one instance, derived from its
/// canonical decomposition.
#[derive(Clone, Debug)]
pub struct DecMinMatroid {
    decomposition: CanonicalDecomposition,
    delta_star: IntVector,
    fixed: Vec<Subset>,
    bases: Vec<OnceLock<Vec<Subset>>>,
}

impl DecMinMatroid {
    /// Derives the matroid structure from a canonical decomposition.
    pub fn new(decomposition: CanonicalDecomposition) -> Self {
        let delta_star = decomposition.floor_vector();
        let fixed = (0..decomposition.q()).map(|i| compute_value_fixed(&decomposition, i)).collect();
        let bases = (0..decomposition.q()).map(|_| OnceLock::new()).collect();
        DecMinMatroid { decomposition, delta_star, fixed, bases }
    }

    /// The underlying decomposition.
    pub fn decomposition(&self) -> &CanonicalDecomposition {
        &self.decomposition
    }

    /// The floor vector `Δ*` with `Δ*(s) = β_i − 1` on block `S_i`.
    pub fn delta_star(&self) -> &IntVector {
        &self.delta_star
    }

    /// Number of blocks.
    pub fn q(&self) -> usize {
        self.decomposition.q()
    }

    /// Whether `l` is a basis of the block-`i` matroid.
    ///
    /// True exactly when `l ⊆ S_i`, `|l| = r_i`, and the covering
    /// constraints `|l ∩ X| >= p_i(X) − (β_i−1)|X|` hold for every
    /// `X ⊆ S_i`.  Subsets with `p_i(X) = -inf` impose nothing.
    pub fn is_base_block(&self, i: usize, l: Subset) -> bool {
        let block = self.decomposition.partition()[i];
        l.is_subset_of(block)
            && l.card() as i64 == self.decomposition.rs()[i]
            && self.covering_ok(i, l)
    }

    /// The covering constraints alone, for `l ⊆ S_i` of any size.
    fn covering_ok(&self, i: usize, l: Subset) -> bool {
        let block = self.decomposition.partition()[i];
        let beta = self.decomposition.betas()[i];
        let p_i = &self.decomposition.block_instances()[i];
        let elems: Vec<usize> = block.iter().collect();
        for local in Subset::full(elems.len()).subsets() {
            let x = Subset::from_indices(local.iter().map(|j| elems[j]));
            if let ExtInt::Finite(v) = p_i.eval_p(local) {
                let demand = v - (beta - 1) * x.card() as i64;
                if ((l & x).card() as i64) < demand {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `l ⊆ S_i` extends to some basis of the block-`i` matroid.
    ///
    /// Bounded search: scans the `r_i`-element supersets of `l` within `S_i`
    /// for one satisfying the covering constraints.
    pub fn is_independent_block(&self, i: usize, l: Subset) -> bool {
        let block = self.decomposition.partition()[i];
        let r = self.decomposition.rs()[i];
        if !l.is_subset_of(block) || l.card() as i64 > r {
            return false;
        }
        for extra in (block - l).subsets() {
            let cand = l | extra;
            if cand.card() as i64 == r && self.covering_ok(i, cand) {
                return true;
            }
        }
        false
    }

    /// All bases of the block-`i` matroid, as subsets of the original
    /// ground set, ascending by bitmask.  Computed once and cached.
    pub fn block_bases(&self, i: usize) -> &[Subset] {
        self.bases[i].get_or_init(|| {
            let block = self.decomposition.partition()[i];
            let r = self.decomposition.rs()[i];
            block
                .subsets()
                .filter(|l| l.card() as i64 == r && self.covering_ok(i, *l))
                .collect()
        })
    }

    /// The value-fixed set `F_i`: the elements of `S_i` whose value is
    /// `β_i` in every dec-min member; equivalently the co-loops of the
    /// block matroid.
    ///
    /// Computed as the union of all `X ⊆ S_i` with `β_i |X| = p_i(X)`.
    pub fn value_fixed(&self, i: usize) -> Subset {
        self.fixed[i]
    }

    /// The union of all blocks' value-fixed sets.
    pub fn value_fixed_all(&self) -> Subset {
        self.fixed.iter().fold(Subset::EMPTY, |acc, &f| acc | f)
    }

    /// Every dec-min member of the instance: one basis choice per block,
    /// added to the floor vector.  Sorted lexicographically.
    ///
    /// Fails with [`Error::BudgetExceeded`] when the product of basis
    /// counts exceeds [`ENUMERATION_BUDGET`].
    pub fn enumerate_dec_min(&self) -> Result<Vec<IntVector>, Error> {
        self.enumerate_dec_min_with_budget(ENUMERATION_BUDGET)
    }

    /// As [`DecMinMatroid::enumerate_dec_min`] with a caller-chosen budget.
    pub fn enumerate_dec_min_with_budget(&self, budget: u64) -> Result<Vec<IntVector>, Error> {
        let mut needed: u128 = 1;
        for i in 0..self.q() {
            needed = needed.saturating_mul(self.block_bases(i).len() as u128);
            if needed > budget as u128 {
                return Err(Error::BudgetExceeded { needed, budget });
            }
        }
        if needed == 0 {
            // only reachable through a non-supermodular oracle
            return Ok(Vec::new());
        }
        let mut out = Vec::with_capacity(needed as usize);
        let mut picks = vec![0usize; self.q()];
        loop {
            let mut chosen = Subset::EMPTY;
            for (i, &k) in picks.iter().enumerate() {
                chosen = chosen | self.block_bases(i)[k];
            }
            let mut v = self.delta_star.clone();
            for e in chosen.iter() {
                v.set(e, v.get(e) + 1);
            }
            out.push(v);
            // odometer over per-block basis lists
            let mut i = 0;
            loop {
                if i == self.q() {
                    out.sort_unstable();
                    return Ok(out);
                }
                picks[i] += 1;
                if picks[i] < self.block_bases(i).len() {
                    break;
                }
                picks[i] = 0;
                i += 1;
            }
        }
    }

    /// Number of dec-min members, without materializing them.
    pub fn count_dec_min(&self) -> u128 {
        (0..self.q()).map(|i| self.block_bases(i).len() as u128).product()
    }

    /// The cheapest dec-min member for a per-element cost vector.
    ///
    /// Runs the matroid greedy algorithm per block: elements sorted by
    /// ascending cost, ties by ascending index, greedily kept when the
    /// partial set still extends to a basis.  The result minimizes
    /// `Σ cost(s) · m(s)` over all dec-min members; ties resolve to the
    /// lexicographically smallest basis in each block.  Costs must be
    /// finite.
    pub fn cheapest_dec_min(&self, cost: &[f64]) -> Result<IntVector, Error> {
        let n = self.decomposition.ground().n();
        if cost.len() != n {
            return Err(Error::DimensionMismatch { want: n, got: cost.len() });
        }
        if let Some(i) = cost.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidInstance(format!(
                "cost for element {:?} is not finite",
                self.decomposition.ground().name(i)
            )));
        }
        let mut m = self.delta_star.clone();
        for i in 0..self.q() {
            let block = self.decomposition.partition()[i];
            let r = self.decomposition.rs()[i];
            let mut order: Vec<usize> = block.iter().collect();
            order.sort_by(|&a, &b| {
                cost[a].partial_cmp(&cost[b]).expect("finite costs").then(a.cmp(&b))
            });
            let mut l = Subset::EMPTY;
            for &e in &order {
                if (l.card() as i64) == r {
                    break;
                }
                if self.is_independent_block(i, l.with(e)) {
                    l = l.with(e);
                }
            }
            debug_assert!(self.is_base_block(i, l), "greedy reaches a basis");
            for e in l.iter() {
                m.set(e, m.get(e) + 1);
            }
        }
        Ok(m)
    }
}

/// Union of all `X ⊆ S_i` with `β_i |X| = p_i(X)`.
fn compute_value_fixed(d: &CanonicalDecomposition, i: usize) -> Subset {
    let block = d.partition()[i];
    let beta = d.betas()[i];
    let p_i = &d.block_instances()[i];
    let elems: Vec<usize> = block.iter().collect();
    let mut fixed = Subset::EMPTY;
    for local in Subset::full(elems.len()).subsets() {
        if local.is_empty() {
            continue;
        }
        if p_i.eval_p(local) == ExtInt::Finite(beta * local.card() as i64) {
            fixed = fixed | Subset::from_indices(local.iter().map(|j| elems[j]));
        }
    }
    fixed
}
