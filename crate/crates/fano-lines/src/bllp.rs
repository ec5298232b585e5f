//! End-to-end oracle for small n: expand the structured determinant
//! polynomial symbolically, take its squared Bombieri norm exactly,
//! and recover C_n through the random-matrix prefactor. Independent of
//! every combinatorial shortcut in the other modules.
//!
//! The matrix is (2n-2) x (2n-2) in variables x_{m,j} with vector
//! index m in 1..n-1 and component index j in 1..2n-3. Column k odd
//! puts x_{(k+1)/2, i} in row i except the last row; column k even
//! puts x_{k/2, i-1} in row i except the first. Each variable carries
//! an implicit weight eta_j = C(2n-4, j-1)^(1/2) determined by its
//! component index alone, so coefficients stay integers and the
//! eta^2 factor is reapplied per monomial when taking the norm.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, expect_integer, factorial, subset_masks};
use crate::{Error, Result};

/// Enumeration cap for [`expand_det`]: the pruned expansion still
/// visits C(2n-4, n-2) ((n-1)!)^2 terms.
pub const ORACLE_MAX_N: usize = 5;

/// Sparse homogeneous polynomial with integer coefficients, keyed by
/// exponent vectors over the x_{m,j} grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    n: usize,
    entries: BTreeMap<Vec<u8>, BigInt>,
}

impl MonomialMap {
    #[cfg(test)]
    pub(crate) fn from_parts(n: usize, entries: BTreeMap<Vec<u8>, BigInt>) -> Self {
        MonomialMap { n, entries }
    }

    /// The n this polynomial was expanded for.
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn monomial_count(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &BTreeMap<Vec<u8>, BigInt> {
        &self.entries
    }

    /// Position of x_{m,j} in an exponent vector (both indices 1-based).
    pub fn variable_index(n: usize, m: usize, j: usize) -> usize {
        debug_assert!((1..=n - 1).contains(&m) && (1..=2 * n - 3).contains(&j));
        (m - 1) * (2 * n - 3) + (j - 1)
    }

    /// Component index j of an exponent-vector position.
    fn component_of(n: usize, var_index: usize) -> usize {
        var_index % (2 * n - 3) + 1
    }
}

/// Expands det A_n(x) as a signed sum over permutations, pruned to the
/// assignments that survive the parity and corner constraints: rows
/// mapped to odd columns form a set I with 1 in I and 2n-2 outside,
/// always of size n-1.
pub fn expand_det(n: usize) -> Result<MonomialMap> {
    if !(2..=ORACLE_MAX_N).contains(&n) {
        return Err(Error::capacity(
            "expand_det",
            format!(
                "n must lie in 2..={ORACLE_MAX_N}, got {n}; the expansion walks \
                 C(2n-4, n-2) ((n-1)!)^2 signed permutation terms"
            ),
        ));
    }
    let size = 2 * n - 2;
    let odd_cols: Vec<usize> = (0..n - 1).map(|t| 2 * t + 1).collect();
    let even_cols: Vec<usize> = (0..n - 1).map(|t| 2 * t + 2).collect();
    let mut entries: BTreeMap<Vec<u8>, BigInt> = BTreeMap::new();

    for inner in subset_masks(size as u32 - 2, n as u32 - 2) {
        let i_mask: u64 = 1 | inner << 1;
        let rows_i: Vec<usize> = (1..=size).filter(|r| i_mask >> (r - 1) & 1 == 1).collect();
        let rows_j: Vec<usize> = (1..=size).filter(|r| i_mask >> (r - 1) & 1 == 0).collect();
        let mut sigma = vec![0usize; size];
        for odd_perm in odd_cols.iter().copied().permutations(n - 1) {
            for (r, c) in rows_i.iter().zip(&odd_perm) {
                sigma[r - 1] = *c;
            }
            for even_perm in even_cols.iter().copied().permutations(n - 1) {
                for (r, c) in rows_j.iter().zip(&even_perm) {
                    sigma[r - 1] = *c;
                }
                let mut exps = vec![0u8; (n - 1) * (2 * n - 3)];
                for (&r, &c) in rows_i.iter().zip(&odd_perm) {
                    exps[MonomialMap::variable_index(n, c.div_ceil(2), r)] += 1;
                }
                for (&r, &c) in rows_j.iter().zip(&even_perm) {
                    exps[MonomialMap::variable_index(n, c / 2, r - 1)] += 1;
                }
                let sign = permutation_sign(&sigma);
                let slot = entries.entry(exps).or_insert_with(BigInt::zero);
                if sign > 0 {
                    *slot += 1;
                } else {
                    *slot -= 1;
                }
            }
        }
    }
    entries.retain(|_, coeff| !coeff.is_zero());
    Ok(MonomialMap { n, entries })
}

fn permutation_sign(sigma: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Squared Bombieri norm: sum over monomials of coefficient^2 times
/// the eta^2 weight times (prod of exponent factorials) / (2n-2)!.
pub fn bombieri_norm_sq(p: &MonomialMap) -> BigRational {
    let n = p.n;
    let degree_fact = factorial(2 * n - 2);
    let mut total = BigRational::zero();
    for (exps, coeff) in &p.entries {
        let mut weight = coeff * coeff;
        let mut fact_prod = BigInt::one();
        for (var, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let j = MonomialMap::component_of(n, var);
            weight *= binomial(2 * n - 4, j as i64 - 1).pow(e as u32);
            fact_prod *= factorial(e as usize);
        }
        total += BigRational::new(weight * fact_prod, degree_fact.clone());
    }
    total
}

/// C_n through the random-matrix identity: prefactor times (2n-2)!
/// times the squared Bombieri norm of the expanded determinant.
pub fn bllp_cn(n: usize) -> Result<BigInt> {
    let p = expand_det(n)?;
    let norm_sq = bombieri_norm_sq(&p);
    let mut denom = factorial(n - 1) * factorial(n);
    for k in 0..=2 * n - 3 {
        denom *= binomial(2 * n - 3, k as i64);
    }
    let prefactor = BigRational::new(BigInt::from(2 * n - 3).pow(2 * n as u32 - 2), denom);
    let value = prefactor * BigRational::from_integer(factorial(2 * n - 2)) * norm_sq;
    expect_integer("bllp_cn", value)
}
