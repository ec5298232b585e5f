//! Exact arithmetic primitives shared by every formula in the crate:
//! factorials, binomial coefficients, unsigned Stirling numbers of the
//! first kind, Catalan numbers, elementary symmetric polynomials, and
//! coefficient extraction from products of linear factors.
//!
//! Everything here is computed over arbitrary-precision integers
//! ([`BigInt`]) and reduced rationals ([`BigRational`]); no floating
//! point is used anywhere.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// n! as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(n, k). Returns 0 when `k` is negative or
/// exceeds `n`, so sums over shifted indices need no boundary guards.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k as u64 {
        // Exact at every step: the running product of i+1 consecutive
        // integers is divisible by (i+1)!.
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

// Rows of the Stirling triangle, grown on demand. Row n holds
// [n 0], [n 1], ..., [n n].
static STIRLING_ROWS: Mutex<Vec<Vec<BigInt>>> = Mutex::new(Vec::new());

/// Unsigned Stirling number of the first kind: the number of
/// permutations of n elements with exactly m disjoint cycles.
///
/// Uses the triangular recurrence [n+1, m] = [n, m-1] + n * [n, m],
/// memoized across calls.
pub fn stirling1_unsigned(n: usize, m: usize) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    let mut rows = STIRLING_ROWS.lock().unwrap();
    if rows.is_empty() {
        rows.push(vec![BigInt::one()]);
    }
    while rows.len() <= n {
        let r = rows.len();
        let prev = &rows[r - 1];
        let mut row = vec![BigInt::zero(); r + 1];
        for j in 1..=r {
            let mut v = prev[j - 1].clone();
            if j < r {
                v += &prev[j] * (r as u64 - 1);
            }
            row[j] = v;
        }
        rows.push(row);
    }
    rows[n][m].clone()
}

/// Catalan number K_m = C(2m, m) / (m + 1), exact.
pub fn catalan(m: usize) -> BigInt {
    binomial(2 * m, m as i64) / BigInt::from(m as u64 + 1)
}

/// All elementary symmetric polynomials [e_0, e_1, ..., e_len] of the
/// given values, by the one-pass Horner-style update. The empty input
/// yields [1], the empty-product convention e_0 = 1.
pub fn elem_sym_all(values: &[BigRational]) -> Vec<BigRational> {
    let mut e = vec![BigRational::zero(); values.len() + 1];
    e[0] = BigRational::one();
    for (i, x) in values.iter().enumerate() {
        for t in (1..=i + 1).rev() {
            let add = &e[t - 1] * x;
            e[t] += add;
        }
    }
    e
}

/// Coefficient of x^power in the product of linear factors
/// (a_k + b_k x), by incremental convolution truncated at `power`.
/// Powers beyond the degree of the product are 0.
pub fn coeff_of_product(factors: &[(BigRational, BigRational)], power: usize) -> BigRational {
    if power > factors.len() {
        return BigRational::zero();
    }
    let mut coeffs = vec![BigRational::zero(); power + 1];
    coeffs[0] = BigRational::one();
    for (a, b) in factors {
        for t in (0..coeffs.len()).rev() {
            let mut c = &coeffs[t] * a;
            if t > 0 {
                c += &coeffs[t - 1] * b;
            }
            coeffs[t] = c;
        }
    }
    coeffs.swap_remove(power)
}

/// Shorthand for an exact rational from machine integers.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Demands that a reduced rational is an integer and unwraps it.
/// A non-integral value signals a bug in the caller's algebra.
pub(crate) fn expect_integer(op: &'static str, value: BigRational) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::defect(
            op,
            format!("expected an integer, got {value} after reduction"),
        ))
    }
}

/// Iterator over bitmasks of the subsets of {0, .., width-1} with
/// exactly `size` set bits, in increasing numeric order.
pub(crate) fn subset_masks(width: u32, size: u32) -> SubsetMasks {
    let next = if size > width {
        None
    } else if size == 0 {
        Some(0)
    } else {
        Some((1u64 << size) - 1)
    };
    SubsetMasks { next, width }
}

pub(crate) struct SubsetMasks {
    next: Option<u64>,
    width: u32,
}

impl Iterator for SubsetMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            // Gosper's hack: next mask with the same popcount.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            if r >= 1u64 << self.width {
                None
            } else {
                Some((((r ^ cur) >> 2) / c) | r)
            }
        };
        Some(cur)
    }
}

/// True when the integer is odd.
pub fn is_odd(x: &BigInt) -> bool {
    use num_integer::Integer;
    x.is_odd()
}

/// Sign helper: (-1)^k as an exact integer.
pub fn neg_one_pow(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// |x| for tests and bound checks.
pub fn abs(x: &BigInt) -> BigInt {
    x.abs()
}
