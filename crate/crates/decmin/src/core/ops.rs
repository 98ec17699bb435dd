use crate::core::{ExtInt, GroundSet, IntVector, Subset, SupermodularInstance};
use crate::core::instance::Source;
use crate::Error;

/// Maps a subset over a compressed ground set back to parent indices.
fn embed(elems: &[usize], local: Subset) -> Subset {
    Subset::from_indices(local.iter().map(|i| elems[i]))
}

/// Sum of the components of `v` over `x`, where `None` marks an infinite
/// component that makes the sum infinite as well.
fn sum_finite(v: &[Option<i64>], x: Subset) -> Option<i64> {
    let mut total = 0i64;
    for i in x.iter() {
        total += v[i]?;
    }
    Some(total)
}

impl SupermodularInstance {
    pub(crate) fn check_dim(&self, v: &IntVector) -> Result<(), Error> {
        if v.len() == self.n() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { want: self.n(), got: v.len() })
        }
    }

    /// Whether `x` is tight for `m`, that is `m(x) = p(x)`.
    ///
    /// Subsets with `p(x) = -inf` are never tight.
    pub fn is_tight(&self, m: &IntVector, x: Subset) -> bool {
        ExtInt::Finite(m.sum_on(x)) == self.eval_p(x)
    }

    /// Checks membership of `z` in the integer base-polyhedron and returns a
    /// violated subset if there is one.
    ///
    /// `None` means `z` is a member.  `Some(S)` flags a wrong total
    /// (`z(S) != p(S)`); any other `Some(X)` is the smallest-mask subset with
    /// `z(X) < p(X)`.  Scans all subsets, so it is gated by the scan limit.
    pub fn membership_witness(&self, z: &IntVector) -> Result<Option<Subset>, Error> {
        self.check_dim(z)?;
        self.ensure_scannable()?;
        let full = self.full();
        if ExtInt::Finite(z.total()) != self.eval_p(full) {
            return Ok(Some(full));
        }
        for mask in 1..1u64 << self.n() {
            let x = Subset::from_mask(mask);
            if ExtInt::Finite(z.sum_on(x)) < self.eval_p(x) {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }

    /// Whether `z` lies in the M-convex set described by the instance.
    pub fn is_member(&self, z: &IntVector) -> Result<bool, Error> {
        Ok(self.membership_witness(z)?.is_none())
    }

    /// The greedy vertex for an element order `s_1, ..., s_n`: component
    /// `m(s_j) = p(I_j) - p(I_{j-1})` for the prefix sets
    /// `I_j = {s_1, ..., s_j}`.
    ///
    /// The result is always a member.  Fails with
    /// [`Error::InfeasiblePrefix`] when some prefix evaluates to `-inf`, and
    /// with [`Error::NotPermutation`] when `order` is not a permutation of
    /// `0..n`.
    pub fn greedy_vertex(&self, order: &[usize]) -> Result<IntVector, Error> {
        let n = self.n();
        if order.len() != n {
            return Err(Error::NotPermutation);
        }
        let mut prefix = Subset::EMPTY;
        let mut m = vec![0i64; n];
        let mut prev = 0i64;
        for &s in order {
            if s >= n || prefix.contains(s) {
                return Err(Error::NotPermutation);
            }
            prefix = prefix.with(s);
            match self.eval_p(prefix) {
                ExtInt::Finite(v) => {
                    m[s] = v - prev;
                    prev = v;
                }
                ExtInt::NegInf => {
                    return Err(Error::InfeasiblePrefix { mask: prefix.mask() })
                }
            }
        }
        Ok(IntVector::new(m))
    }

    /// The linear extension `p̂(π)`, evaluated over the strict threshold
    /// sets of `π`.
    ///
    /// With distinct values `α_1 > ... > α_k` of `π` and level sets
    /// `L_i = { s : π(s) >= α_i }`,
    ///
    /// ```text
    /// p̂(π) = Σ_{i<k} p(L_i)(α_i − α_{i+1}) + p(S)·α_k
    /// ```
    ///
    /// which is independent of how ties are ordered.  For every member `z`
    /// and every integer `π` the bound `π·z >= p̂(π)` holds.  Fails with
    /// [`Error::InfeasiblePrefix`] when a level set with positive coefficient
    /// evaluates to `-inf` (the extension value would be `-inf`).
    pub fn lovasz_extension(&self, pi: &IntVector) -> Result<i64, Error> {
        self.check_dim(pi)?;
        let mut levels: Vec<i64> = pi.values().to_vec();
        levels.sort_unstable_by(|a, b| b.cmp(a));
        levels.dedup();
        let n = self.n();
        let mut total = 0i64;
        for (k, &alpha) in levels.iter().enumerate() {
            if k + 1 < levels.len() {
                let level = Subset::from_indices((0..n).filter(|&i| pi[i] >= alpha));
                match self.eval_p(level) {
                    ExtInt::Finite(v) => total += v * (alpha - levels[k + 1]),
                    ExtInt::NegInf => {
                        return Err(Error::InfeasiblePrefix { mask: level.mask() })
                    }
                }
            } else {
                total += self.eval_p(self.full()).expect_finite("p(S)") * alpha;
            }
        }
        Ok(total)
    }

    /// Whether the exchanged vector `m + χ_s − χ_t` is still a member.
    ///
    /// Assumes `m` is a member (not re-validated here).  The exchange is
    /// blocked exactly by a tight set containing `t` and avoiding `s`, so the
    /// scan covers those subsets only.
    pub fn exchange_feasible(&self, m: &IntVector, s: usize, t: usize) -> Result<bool, Error> {
        self.check_dim(m)?;
        if s == t {
            return Err(Error::SameElement { index: s });
        }
        self.ensure_scannable()?;
        let others = self.full().without(s).without(t);
        for sub in others.subsets() {
            let x = sub.with(t);
            if self.is_tight(m, x) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The smallest tight set for the member `m` that contains `z`.
    ///
    /// Tight sets are closed under union and intersection, so the
    /// intersection of all tight supersets of `z` is itself tight and is the
    /// unique smallest one.  The ground set is always tight, so the result
    /// exists; `z` empty yields the empty set.  Assumes `m` is a member.
    pub fn smallest_tight_set(&self, m: &IntVector, z: Subset) -> Result<Subset, Error> {
        self.check_dim(m)?;
        self.ensure_scannable()?;
        let mut acc = self.full();
        for mask in 0..1u64 << self.n() {
            let x = Subset::from_mask(mask);
            if z.is_subset_of(x) && self.is_tight(m, x) {
                acc = acc & x;
            }
        }
        Ok(acc)
    }

    /// The restriction of the instance to the nonempty subset `z`.
    ///
    /// Elements keep their relative order: local index `i` of the result is
    /// the `i`-th smallest member of `z`.  Requires `p(z)` finite.
    pub fn restrict(&self, z: Subset) -> Result<SupermodularInstance, Error> {
        if !self.eval_p(z).is_finite() {
            return Err(Error::InfeasiblePrefix { mask: z.mask() });
        }
        let names: Vec<String> = z.iter().map(|i| self.ground().name(i).to_string()).collect();
        let sub_ground = GroundSet::new(names)?;
        let elems: Vec<usize> = z.iter().collect();
        let parent = self.clone();
        let limit = self.scan_limit();
        Ok(SupermodularInstance::from_fn(sub_ground, Source::Restricted, move |x| {
            parent.eval_p(embed(&elems, x))
        })?
        .with_scan_limit(limit))
    }

    /// The contraction of the instance by `z`: the instance on ground set
    /// `S - z` with `p'(X) = p(X ∪ z) - p(z)`.
    ///
    /// Contractions compose: contracting by `Z1` and then by (the image of)
    /// `Z2` equals contracting by `Z1 ∪ Z2` once.  Elements keep their
    /// relative order, as in [`SupermodularInstance::restrict`].  Requires
    /// `p(z)` finite and `z` a proper subset.
    pub fn contract(&self, z: Subset) -> Result<SupermodularInstance, Error> {
        let pz = match self.eval_p(z) {
            ExtInt::Finite(v) => v,
            ExtInt::NegInf => return Err(Error::InfeasiblePrefix { mask: z.mask() }),
        };
        let rest = self.full() - z;
        let names: Vec<String> =
            rest.iter().map(|i| self.ground().name(i).to_string()).collect();
        let sub_ground = GroundSet::new(names)?;
        let elems: Vec<usize> = rest.iter().collect();
        let parent = self.clone();
        let limit = self.scan_limit();
        Ok(SupermodularInstance::from_fn(sub_ground, Source::Contracted, move |x| {
            parent.eval_p(embed(&elems, x).union(z)) - pz
        })?
        .with_scan_limit(limit))
    }

    /// Whether the base-polyhedron meets the integer box `[f, g]`.
    ///
    /// `f` bounds from below with `None` meaning `-inf`; `g` bounds from
    /// above with `None` meaning `+inf`.  The intersection is nonempty
    /// exactly when `p(X) <= g(X)` and `f(X) <= b(X)` for every subset `X`,
    /// where sums with an infinite component impose nothing.
    pub fn box_intersect_feasible(
        &self,
        f: &[Option<i64>],
        g: &[Option<i64>],
    ) -> Result<bool, Error> {
        let n = self.n();
        if f.len() != n {
            return Err(Error::DimensionMismatch { want: n, got: f.len() });
        }
        if g.len() != n {
            return Err(Error::DimensionMismatch { want: n, got: g.len() });
        }
        for i in 0..n {
            if let (Some(lo), Some(hi)) = (f[i], g[i]) {
                if lo > hi {
                    return Err(Error::InvalidInstance(format!(
                        "box bounds cross at element {:?}: {lo} > {hi}",
                        self.ground().name(i)
                    )));
                }
            }
        }
        self.ensure_scannable()?;
        let full = self.full();
        let p_s = self.eval_p(full).expect_finite("p(S)");
        for mask in 1..1u64 << n {
            let x = Subset::from_mask(mask);
            if let Some(gsum) = sum_finite(g, x) {
                if self.eval_p(x) > ExtInt::Finite(gsum) {
                    return Ok(false);
                }
            }
            if let Some(fsum) = sum_finite(f, x) {
                // f(X) <= b(X) rearranged as p(S-X) + f(X) <= p(S)
                if self.eval_p(full - x) + fsum > ExtInt::Finite(p_s) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
