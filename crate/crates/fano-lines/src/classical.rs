//! Five published closed forms for C_n, the number of lines on a
//! generic hypersurface of degree 2n-3 in complex projective n-space.
//!
//! Each function is an independent code path sharing only the exact
//! arithmetic in [`crate::arith`]; agreement between them is the
//! crate's main correctness argument, exercised by `cargo test`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use num_traits::Zero;

use crate::arith::{
    binomial, catalan, coeff_of_product, elem_sym_all, expect_integer, factorial,
    stirling1_unsigned,
};
use crate::{Error, Result};

pub(crate) fn require_min(op: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::domain(op, format!("n must be at least {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// Van der Waerden / Zagier product form: the coefficient of x^(n-1)
/// in (1 - x) * prod_{k=0}^{2n-3} (2n-3-k + k x).
pub fn zagier_product_cn(n: usize) -> Result<BigInt> {
    require_min("zagier_product_cn", n, 2)?;
    let d = 2 * n - 3;
    let mut factors = Vec::with_capacity(d + 2);
    factors.push((BigRational::one(), -BigRational::one()));
    for k in 0..=d {
        factors.push((
            BigRational::from_integer(BigInt::from(d - k)),
            BigRational::from_integer(BigInt::from(k)),
        ));
    }
    expect_integer("zagier_product_cn", coeff_of_product(&factors, n - 1))
}

/// Zagier's alternating sum over unsigned Stirling numbers of the
/// first kind.
pub fn zagier_stirling_cn(n: usize) -> Result<BigInt> {
    require_min("zagier_stirling_cn", n, 2)?;
    let d = 2 * n - 3;
    let base = BigInt::from(d);
    let mut total = BigInt::zero();
    for m in 0..=n - 1 {
        let term = binomial(2 * n - 2 - m, (n - 1) as i64)
            * base.pow(m as u32 + 1)
            * stirling1_unsigned(d, m);
        if (n - 1 - m).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Libgober's form: (2n-3)(2n-3)! [e_{n-2}(L) - e_{n-3}(L)] over the
/// evaluation set L = {(2n-3-j)/j : j = 1..2n-4}.
pub fn libgober_cn(n: usize) -> Result<BigInt> {
    require_min("libgober_cn", n, 3)?;
    let d = 2 * n - 3;
    let values: Vec<BigRational> = (1..=2 * n - 4)
        .map(|j| BigRational::new(BigInt::from(d - j), BigInt::from(j)))
        .collect();
    let e = elem_sym_all(&values);
    let diff = &e[n - 2] - &e[n - 3];
    let scale = BigRational::from_integer(BigInt::from(d) * factorial(d));
    expect_integer("libgober_cn", scale * diff)
}

/// Dominici's form: (2n-3)^2 (2n-4)! [e_{n-2}(Y) - e_{n-1}(Y)] over
/// Y = {j/(2n-3-j) : j = 1..2n-4}.
pub fn dominici_cn(n: usize) -> Result<BigInt> {
    require_min("dominici_cn", n, 3)?;
    let d = 2 * n - 3;
    let values: Vec<BigRational> = (1..=2 * n - 4)
        .map(|j| BigRational::new(BigInt::from(j), BigInt::from(d - j)))
        .collect();
    let e = elem_sym_all(&values);
    let diff = &e[n - 2] - &e[n - 1];
    let scale = BigRational::from_integer(BigInt::from(d) * BigInt::from(d) * factorial(2 * n - 4));
    expect_integer("dominici_cn", scale * diff)
}

/// Harris' Catalan-weighted subset sum. The inner sum over subsets
/// I of {1..n-2} with |I| = n-2-k is the elementary symmetric
/// polynomial e_{n-2-k} of the factors (2n-3-2i)^2 / (i(2n-3-i)),
/// which keeps the evaluation polynomial instead of exponential.
/// The Catalan weight runs through k = n-2, whose empty subset
/// contributes e_0 = 1.
pub fn harris_cn(n: usize) -> Result<BigInt> {
    require_min("harris_cn", n, 3)?;
    let d = 2 * n - 3;
    let values: Vec<BigRational> = (1..=n - 2)
        .map(|i| {
            let num = BigInt::from(d - 2 * i) * BigInt::from(d - 2 * i);
            let den = BigInt::from(i) * BigInt::from(d - i);
            BigRational::new(num, den)
        })
        .collect();
    let e = elem_sym_all(&values);
    let mut sum = BigRational::zero();
    for k in 0..=n - 2 {
        sum += &e[n - 2 - k] * BigRational::from_integer(catalan(k));
    }
    let scale = BigRational::from_integer(BigInt::from(d) * factorial(d));
    expect_integer("harris_cn", scale * sum)
}
