//! Set-composition weights and z-block labeling counts: the
//! combinatorial expansion of C_n that mirrors the monomial structure
//! of the determinant polynomials from random algebraic geometry.
//!
//! A z-block of width w and bulk b is a two-row diagram of w boxes per
//! row overlapping in b shared columns; a labeling puts an independent
//! permutation of {1..w} in each row. Shared columns pair a top value
//! with a bottom value, and chains of such pairs that close up form
//! cycles. Counting labelings by their cycle profile is what the
//! weighted sums below do.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, elem_sym_all, expect_integer, factorial, subset_masks};
use crate::classical::require_min;
use crate::{Error, Result};

/// Default enumeration cap for [`bombieri_cn`]: the composition count
/// C(2n-4, n-2) is about 2.7 million at n = 14.
pub const BOMBIERI_GUARD: usize = 14;

/// A 2-composition (I, J) of {1, .., 2n-2} with |I| = |J| = n-1,
/// 1 in I and 2n-2 in J, tagged with h = |I intersect (J-1)|, the
/// number of runs of consecutive elements in I.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Composition {
    n: usize,
    i_mask: u64,
    h: usize,
}

impl Composition {
    fn from_i_mask(n: usize, i_mask: u64) -> Self {
        // i in I sits directly left of an element of J exactly when
        // i+1 is missing from I; 2n-2 is never in I, so no edge case.
        let h = (i_mask & !(i_mask >> 1)).count_ones() as usize;
        Composition { n, i_mask, h }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask of I; bit i-1 stands for element i.
    pub fn i_mask(&self) -> u64 {
        self.i_mask
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn i_elements(&self) -> Vec<usize> {
        (1..=2 * self.n - 2)
            .filter(|i| self.i_mask >> (i - 1) & 1 == 1)
            .collect()
    }

    pub fn j_elements(&self) -> Vec<usize> {
        (1..=2 * self.n - 2)
            .filter(|i| self.i_mask >> (i - 1) & 1 == 0)
            .collect()
    }

    /// prod_{i in I} (2n-2-i) * prod_{j in J} (j-1), exact.
    fn weight(&self) -> BigInt {
        let top = 2 * self.n - 2;
        let mut small: u128 = 1;
        let mut big: Option<BigInt> = None;
        for e in 1..=top {
            let f = if self.i_mask >> (e - 1) & 1 == 1 {
                (top - e) as u128
            } else {
                (e - 1) as u128
            };
            match small.checked_mul(f) {
                Some(v) => small = v,
                None => {
                    let acc = big.take().unwrap_or_else(BigInt::one);
                    big = Some(acc * BigInt::from(small));
                    small = f;
                }
            }
        }
        let acc = big.unwrap_or_else(BigInt::one);
        acc * BigInt::from(small)
    }
}

/// Yields every h-special composition of {1, .., 2n-2} exactly once,
/// in increasing order of the I bitmask.
pub fn enumerate_h_special(
    n: usize,
    h: usize,
) -> Result<impl Iterator<Item = Composition>> {
    require_min("enumerate_h_special", n, 2)?;
    check_h("enumerate_h_special", n, h)?;
    Ok(all_compositions(n).filter(move |c| c.h == h))
}

fn check_h(op: &'static str, n: usize, h: usize) -> Result<()> {
    if h < 1 || h > n - 1 {
        return Err(Error::domain(
            op,
            format!("h must satisfy 1 <= h <= n-1, got n={n}, h={h}"),
        ));
    }
    Ok(())
}

/// All balanced compositions with 1 in I and 2n-2 in J, every h mixed
/// together. I is {1} plus an (n-2)-subset of {2, .., 2n-3}.
fn all_compositions(n: usize) -> impl Iterator<Item = Composition> {
    subset_masks(2 * n as u32 - 4, n as u32 - 2)
        .map(move |inner| Composition::from_i_mask(n, 1 | inner << 1))
}

/// Composition weight factor W_{n,h}: the normalized sum of the double
/// products over all h-special compositions.
pub fn w_factor(n: usize, h: usize) -> Result<BigRational> {
    require_min("w_factor", n, 2)?;
    check_h("w_factor", n, h)?;
    let mut sum = BigInt::zero();
    for c in all_compositions(n) {
        if c.h == h {
            sum += c.weight();
        }
    }
    Ok(BigRational::new(sum, factorial(n) * factorial(n - 1)))
}

/// Two-row diagram of `width` boxes per row sharing `bulk` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZBlock {
    width: usize,
    bulk: usize,
}

impl ZBlock {
    pub fn new(width: usize, bulk: usize) -> Result<Self> {
        if bulk > width {
            return Err(Error::domain(
                "ZBlock::new",
                format!("bulk {bulk} exceeds width {width}"),
            ));
        }
        Ok(ZBlock { width, bulk })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn bulk(&self) -> usize {
        self.bulk
    }
}

/// Cycle profile: entry k-1 counts the k-cycles of a labeling.
/// Trailing zero entries are allowed and meaningless.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleProfile(Vec<usize>);

impl CycleProfile {
    pub fn new(counts: Vec<usize>) -> Self {
        CycleProfile(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Total number of cycles.
    pub fn cycle_count(&self) -> usize {
        self.0.iter().sum()
    }

    /// Bulk columns consumed: sum of k * lambda_k.
    pub fn columns_used(&self) -> usize {
        self.0.iter().enumerate().map(|(i, c)| (i + 1) * c).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl std::fmt::Display for CycleProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Number of labelings of the block realizing exactly the given cycle
/// profile. Cycles are placed by choosing columns, values and one of
/// the (k-1)! cyclic pairings per k-cycle; cycles of equal size are
/// unordered; the cycle-free remainder is counted by the recursive
/// zero-profile rule.
pub fn zblock_length(block: ZBlock, profile: &CycleProfile) -> Result<BigInt> {
    let used = profile.columns_used();
    if used > block.bulk {
        return Err(Error::domain(
            "zblock_length",
            format!(
                "profile {profile} needs {used} bulk columns, block has {}",
                block.bulk
            ),
        ));
    }
    Ok(profile_count(block.width, block.bulk, profile.counts()))
}

fn profile_count(width: usize, bulk: usize, counts: &[usize]) -> BigInt {
    let mut factor = BigInt::one();
    let mut w = width;
    let mut b = bulk;
    for (idx, &count) in counts.iter().enumerate() {
        let k = idx + 1;
        if count == 0 {
            continue;
        }
        for _ in 0..count {
            factor *= binomial(b, k as i64) * binomial(w, k as i64);
            factor *= factorial(k) * factorial(k - 1);
            b -= k;
            w -= k;
        }
        // Same-size cycles carry no order.
        factor /= factorial(count);
    }
    factor * zero_profile_length(w, b)
}

// Memo for the cycle-free labeling counts, keyed by (width, bulk).
static ZERO_LENGTHS: Mutex<BTreeMap<(usize, usize), BigInt>> = Mutex::new(BTreeMap::new());

/// Labelings of a (width, bulk) block with no cycles at all: width!^2
/// minus every labeling that has some. Returns 0 when cycles are
/// unavoidable, e.g. whenever bulk equals a positive width.
fn zero_profile_length(width: usize, bulk: usize) -> BigInt {
    if bulk == 0 {
        let f = factorial(width);
        return &f * &f;
    }
    if let Some(v) = ZERO_LENGTHS.lock().unwrap().get(&(width, bulk)) {
        return v.clone();
    }
    let f = factorial(width);
    let mut total = &f * &f;
    for counts in profiles_with_budget(bulk) {
        if counts.iter().all(|&c| c == 0) {
            continue;
        }
        total -= profile_count(width, bulk, &counts);
    }
    ZERO_LENGTHS
        .lock()
        .unwrap()
        .insert((width, bulk), total.clone());
    total
}

/// All tuples (lambda_1, .., lambda_bulk) with sum k*lambda_k <= bulk,
/// emitted in ascending colexicographic order (largest cycle size is
/// the most significant position).
fn profiles_with_budget(bulk: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; bulk];
    fn descend(k: usize, budget: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(current.clone());
            return;
        }
        for count in 0..=budget / k {
            current[k - 1] = count;
            descend(k - 1, budget - k * count, current, out);
        }
        current[k - 1] = 0;
    }
    if bulk == 0 {
        out.push(Vec::new());
    } else {
        descend(bulk, bulk, &mut current, &mut out);
    }
    out
}

/// The cycle profiles the block can actually realize, i.e. those with
/// at least one labeling, in deterministic colexicographic order.
pub fn feasible_profiles(block: ZBlock) -> Vec<CycleProfile> {
    profiles_with_budget(block.bulk)
        .into_iter()
        .filter(|counts| !profile_count(block.width, block.bulk, counts).is_zero())
        .map(CycleProfile::new)
        .collect()
}

/// Closed form of the 2^|lambda|-weighted sum of all lengths of the
/// block of width n-1 and bulk h: n!(n-1)!/(n-h).
pub fn weighted_length_sum(n: usize, h: usize) -> Result<BigInt> {
    require_min("weighted_length_sum", n, 2)?;
    check_h("weighted_length_sum", n, h)?;
    Ok(factorial(n) * factorial(n - 1) / BigInt::from(n - h))
}

/// Same sum by explicit enumeration over every feasible profile; the
/// exponential-cost oracle counterpart of [`weighted_length_sum`].
pub fn weighted_length_sum_enumerated(n: usize, h: usize) -> Result<BigInt> {
    require_min("weighted_length_sum_enumerated", n, 2)?;
    check_h("weighted_length_sum_enumerated", n, h)?;
    let width = n - 1;
    let mut total = BigInt::zero();
    for counts in profiles_with_budget(h) {
        let cycles: usize = counts.iter().sum();
        total += profile_count(width, h, &counts) << cycles;
    }
    Ok(total)
}

/// C_n as the weighted sum over compositions and z-block labelings:
/// sum_h W_{n,h} * n!(n-1)!/(n-h). A single pass over the C(2n-4, n-2)
/// balanced compositions collects every W_{n,h} at once.
pub fn bombieri_cn(n: usize, max_n_guard: usize) -> Result<BigInt> {
    require_min("bombieri_cn", n, 2)?;
    if n > max_n_guard {
        return Err(Error::capacity(
            "bombieri_cn",
            format!(
                "n={n} exceeds the guard {max_n_guard}; the enumeration visits \
                 C(2n-4, n-2) = {} compositions and grows binomially",
                binomial(2 * n - 4, (n - 2) as i64)
            ),
        ));
    }
    let mut per_h: Vec<BigInt> = vec![BigInt::zero(); n];
    for c in all_compositions(n) {
        per_h[c.h] += c.weight();
    }
    // The n!(n-1)! normalization of W_{n,h} cancels against the closed
    // form of the weighted length sum, leaving sum_h S_h / (n-h).
    let mut total = BigRational::zero();
    for (h, s) in per_h.into_iter().enumerate().skip(1) {
        total += BigRational::new(s, BigInt::from(n - h));
    }
    expect_integer("bombieri_cn", total)
}

/// Both sides of the composition-weight sum identity: the enumerated
/// sum of all W_{n,h} on the left, the elementary-symmetric closed
/// form over G = {1 - (2n-3)/k : k = 1..2n-4} on the right.
pub fn w_sum_identity(n: usize) -> Result<(BigRational, BigRational)> {
    require_min("w_sum_identity", n, 3)?;
    let mut sum = BigInt::zero();
    for c in all_compositions(n) {
        sum += c.weight();
    }
    let lhs = BigRational::new(sum, factorial(n) * factorial(n - 1));

    let d = 2 * n - 3;
    let g: Vec<BigRational> = (1..=2 * n - 4)
        .map(|k| BigRational::new(BigInt::from(k as i64 - d as i64), BigInt::from(k)))
        .collect();
    let e = elem_sym_all(&g);
    let scale = BigRational::new(
        BigInt::from(d) * BigInt::from(d) * factorial(2 * n - 4),
        factorial(n) * factorial(n - 1),
    );
    let sign = if n.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let rhs = scale * sign * &e[n - 2];
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{is_odd, ratio};
    use crate::schubert::schubert_cn;
    use itertools::Itertools;

    fn block(w: usize, b: usize) -> ZBlock {
        ZBlock::new(w, b).unwrap()
    }

    fn profile(counts: &[usize]) -> CycleProfile {
        CycleProfile::new(counts.to_vec())
    }

    #[test]
    fn composition_enumeration_small() {
        let only: Vec<_> = enumerate_h_special(2, 1).unwrap().collect();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].i_elements(), vec![1]);
        assert_eq!(only[0].j_elements(), vec![2]);

        let n3h1: Vec<_> = enumerate_h_special(3, 1).unwrap().collect();
        assert_eq!(n3h1.len(), 1);
        assert_eq!(n3h1[0].i_elements(), vec![1, 2]);
        assert_eq!(n3h1[0].j_elements(), vec![3, 4]);

        let n4h2: Vec<_> = enumerate_h_special(4, 2).unwrap().collect();
        let i_sets: Vec<Vec<usize>> = n4h2.iter().map(|c| c.i_elements()).collect();
        assert_eq!(
            i_sets,
            vec![
                vec![1, 2, 4],
                vec![1, 3, 4],
                vec![1, 2, 5],
                vec![1, 4, 5],
            ]
        );

        assert!(enumerate_h_special(4, 0).is_err());
        assert!(enumerate_h_special(4, 4).is_err());
    }

    #[test]
    fn composition_h_equals_run_count() {
        // h counts the maximal runs of consecutive elements of I.
        for n in 2..=8 {
            for h in 1..=n - 1 {
                for c in enumerate_h_special(n, h).unwrap() {
                    let elems = c.i_elements();
                    let runs = 1 + elems.windows(2).filter(|w| w[1] != w[0] + 1).count();
                    assert_eq!(runs, h, "n={n} I={elems:?}");
                }
            }
        }
    }

    #[test]
    fn composition_counts_sum_to_binomial() {
        for n in 2..=12usize {
            let total: usize = (1..=n - 1)
                .map(|h| enumerate_h_special(n, h).unwrap().count())
                .sum();
            assert_eq!(
                BigInt::from(total),
                binomial(2 * n - 4, (n - 2) as i64),
                "n={n}"
            );
        }
    }

    #[test]
    fn w_factor_known_values() {
        assert_eq!(w_factor(2, 1).unwrap(), ratio(1, 2));
        assert_eq!(w_factor(3, 1).unwrap(), ratio(3, 1));
        assert_eq!(w_factor(3, 2).unwrap(), ratio(3, 4));
        assert_eq!(w_factor(4, 1).unwrap(), ratio(25, 1));
        assert_eq!(w_factor(4, 2).unwrap(), ratio(725, 36));
        assert_eq!(w_factor(4, 3).unwrap(), ratio(25, 16));
        assert!(w_factor(4, 0).is_err());
    }

    #[test]
    fn zblock_lengths_worked_examples() {
        // Width 3, bulk 0: unconstrained labelings.
        assert_eq!(
            zblock_length(block(3, 0), &profile(&[])).unwrap(),
            BigInt::from(36)
        );
        // The width 10, bulk 7 example with one cycle of each size 1..3.
        assert_eq!(
            zblock_length(block(10, 7), &profile(&[1, 1, 1])).unwrap(),
            BigInt::from(54867456000u64)
        );
        // Width 2 blocks.
        assert_eq!(zblock_length(block(2, 1), &profile(&[1])).unwrap(), BigInt::from(2));
        assert_eq!(zblock_length(block(2, 1), &profile(&[0])).unwrap(), BigInt::from(2));
        assert_eq!(zblock_length(block(2, 2), &profile(&[2, 0])).unwrap(), BigInt::from(2));
        assert_eq!(zblock_length(block(2, 2), &profile(&[0, 1])).unwrap(), BigInt::from(2));
        // The nine width-3 lengths.
        assert_eq!(zblock_length(block(3, 1), &profile(&[1])).unwrap(), BigInt::from(12));
        assert_eq!(zblock_length(block(3, 1), &profile(&[0])).unwrap(), BigInt::from(24));
        assert_eq!(zblock_length(block(3, 2), &profile(&[0, 1])).unwrap(), BigInt::from(6));
        assert_eq!(zblock_length(block(3, 2), &profile(&[2, 0])).unwrap(), BigInt::from(6));
        assert_eq!(zblock_length(block(3, 2), &profile(&[1, 0])).unwrap(), BigInt::from(12));
        assert_eq!(zblock_length(block(3, 2), &profile(&[0, 0])).unwrap(), BigInt::from(12));
        assert_eq!(
            zblock_length(block(3, 3), &profile(&[0, 0, 1])).unwrap(),
            BigInt::from(12)
        );
        assert_eq!(
            zblock_length(block(3, 3), &profile(&[1, 1, 0])).unwrap(),
            BigInt::from(18)
        );
        assert_eq!(
            zblock_length(block(3, 3), &profile(&[3, 0, 0])).unwrap(),
            BigInt::from(6)
        );
        // Full-bulk blocks cannot avoid cycles.
        assert_eq!(
            zblock_length(block(3, 3), &profile(&[0, 0, 0])).unwrap(),
            BigInt::zero()
        );
        // Infeasible profile.
        assert!(zblock_length(block(3, 2), &profile(&[0, 0, 1])).is_err());
    }

    #[test]
    fn feasible_profile_sets() {
        let p = |counts: &[&[usize]]| -> Vec<CycleProfile> {
            counts.iter().map(|c| profile(c)).collect()
        };
        assert_eq!(
            feasible_profiles(block(2, 1)),
            p(&[&[0], &[1]])
        );
        assert_eq!(
            feasible_profiles(block(3, 2)),
            p(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1]])
        );
        assert_eq!(
            feasible_profiles(block(3, 3)),
            p(&[&[3, 0, 0], &[1, 1, 0], &[0, 0, 1]])
        );
        assert_eq!(feasible_profiles(block(3, 0)), p(&[&[]]));
    }

    /// Brute-force oracle: classify all (w!)^2 labelings by following
    /// the bulk value chains, entirely independent of the recursion.
    fn lengths_by_labeling(width: usize, bulk: usize) -> BTreeMap<Vec<usize>, u64> {
        let mut out: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        let perms: Vec<Vec<usize>> = (0..width).permutations(width).collect();
        if width == 0 {
            out.insert(Vec::new(), 1);
            return out;
        }
        for top in &perms {
            for bottom in &perms {
                // Bulk column c carries top[c] over bottom[c] for the
                // first `bulk` positions; which positions align is a
                // relabeling and does not change the counts.
                let mut successor = vec![usize::MAX; width]; // by top value
                for c in 0..bulk {
                    successor[top[c]] = bottom[c];
                }
                let in_bulk_top: Vec<bool> =
                    (0..width).map(|v| successor[v] != usize::MAX).collect();
                let mut profile = vec![0usize; bulk];
                let mut visited = vec![false; width];
                for start in 0..width {
                    if !in_bulk_top[start] || visited[start] {
                        continue;
                    }
                    // Walk the chain start -> successor -> ... and see
                    // whether it returns to start without escaping.
                    let mut len = 0;
                    let mut v = start;
                    let closed = loop {
                        visited[v] = true;
                        len += 1;
                        let next = successor[v];
                        if next == start {
                            break true;
                        }
                        if !in_bulk_top[next] || visited[next] {
                            break false;
                        }
                        v = next;
                    };
                    if closed {
                        profile[len - 1] += 1;
                    }
                }
                *out.entry(profile).or_insert(0) += 1;
            }
        }
        out
    }

    #[test]
    fn lengths_match_brute_force_up_to_width_four() {
        for width in 0..=4usize {
            for bulk in 0..=width {
                let oracle = lengths_by_labeling(width, bulk);
                for counts in profiles_with_budget(bulk) {
                    let expected = oracle.get(&counts).copied().unwrap_or(0);
                    assert_eq!(
                        profile_count(width, bulk, &counts),
                        BigInt::from(expected),
                        "width={width} bulk={bulk} profile={counts:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn lengths_partition_all_labelings() {
        for width in 0..=5usize {
            for bulk in 0..=width {
                let mut total = BigInt::zero();
                for p in feasible_profiles(block(width, bulk)) {
                    total += zblock_length(block(width, bulk), &p).unwrap();
                }
                let f = factorial(width);
                assert_eq!(total, &f * &f, "width={width} bulk={bulk}");
            }
        }
    }

    #[test]
    fn weighted_sums_match_closed_form() {
        assert_eq!(weighted_length_sum(2, 1).unwrap(), BigInt::from(2));
        assert_eq!(weighted_length_sum(4, 1).unwrap(), BigInt::from(48));
        assert_eq!(weighted_length_sum(4, 3).unwrap(), BigInt::from(144));
        for n in 2..=6 {
            for h in 1..=n - 1 {
                assert_eq!(
                    weighted_length_sum_enumerated(n, h).unwrap(),
                    weighted_length_sum(n, h).unwrap(),
                    "n={n} h={h}"
                );
            }
        }
    }

    #[test]
    fn bombieri_reproduces_sequence() {
        assert_eq!(bombieri_cn(2, BOMBIERI_GUARD).unwrap(), BigInt::one());
        assert_eq!(bombieri_cn(3, BOMBIERI_GUARD).unwrap(), BigInt::from(27));
        assert_eq!(bombieri_cn(4, BOMBIERI_GUARD).unwrap(), BigInt::from(2875));
        for n in 2..=8 {
            let c = bombieri_cn(n, BOMBIERI_GUARD).unwrap();
            assert_eq!(c, schubert_cn(n).unwrap(), "n={n}");
            assert!(is_odd(&c), "n={n}");
        }
        let err = bombieri_cn(15, BOMBIERI_GUARD).unwrap_err();
        assert!(err.to_string().contains("compositions"));
    }

    #[test]
    fn worked_decomposition_for_cubic() {
        // W_{3,1} (2 L_(1) + L_(0)) + W_{3,2} (4 L_(2,0) + 2 L_(0,1))
        // = 3 * 6 + 3/4 * 12 = 27.
        let inner1 = weighted_length_sum_enumerated(3, 1).unwrap();
        let inner2 = weighted_length_sum_enumerated(3, 2).unwrap();
        assert_eq!(inner1, BigInt::from(6));
        assert_eq!(inner2, BigInt::from(12));
        let total = w_factor(3, 1).unwrap() * BigRational::from_integer(inner1)
            + w_factor(3, 2).unwrap() * BigRational::from_integer(inner2);
        assert_eq!(total, ratio(27, 1));
    }

    #[test]
    fn w_sum_identity_holds() {
        let (lhs, rhs) = w_sum_identity(3).unwrap();
        assert_eq!(lhs, ratio(15, 4));
        assert_eq!(rhs, ratio(15, 4));
        let (lhs, rhs) = w_sum_identity(4).unwrap();
        // 25 + 725/36 + 25/16 reduced.
        assert_eq!(lhs, ratio(6725, 144));
        assert_eq!(rhs, ratio(6725, 144));
        for n in 3..=9 {
            let (lhs, rhs) = w_sum_identity(n).unwrap();
            assert_eq!(lhs, rhs, "n={n}");
        }
        assert!(w_sum_identity(2).is_err());
    }

    #[test]
    fn zblock_rejects_bad_shape() {
        assert!(ZBlock::new(2, 3).is_err());
    }
}
