//! Lines on a generic complete intersection of hypersurfaces of
//! degrees (d_1, .., d_k). The count is finite exactly when
//! sum (d_i + 1) = 2(N - 1) for the ambient projective dimension N,
//! which forces the sum to be even and in particular an even number
//! of even degrees.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, catalan, elem_sym_all};
use crate::{Error, Result};

/// Validated, canonically sorted degree tuple with its derived data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTuple {
    degrees: Vec<usize>,
    even_count: usize,
    ambient_dim: usize,
}

impl DegreeTuple {
    /// Degrees in ascending order.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn even_count(&self) -> usize {
        self.even_count
    }

    /// Dimension N of the ambient projective space.
    pub fn ambient_dimension(&self) -> usize {
        self.ambient_dim
    }
}

/// Checks the dimension constraint and returns the canonical tuple.
pub fn ci_dimension_check(degrees: &[usize]) -> Result<DegreeTuple> {
    if degrees.is_empty() {
        return Err(Error::domain(
            "ci_dimension_check",
            "at least one degree is required",
        ));
    }
    if degrees.contains(&0) {
        return Err(Error::domain(
            "ci_dimension_check",
            format!("degrees must be at least 1, got {degrees:?}"),
        ));
    }
    let sum: usize = degrees.iter().map(|&d| d + 1).sum();
    if !sum.is_multiple_of(2) {
        return Err(Error::DimensionMismatch {
            degrees: degrees.to_vec(),
            sum,
        });
    }
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let even_count = sorted.iter().filter(|&&d| d % 2 == 0).count();
    Ok(DegreeTuple {
        degrees: sorted,
        even_count,
        ambient_dim: 1 + sum / 2,
    })
}

/// Number of lines on the generic complete intersection with the given
/// degrees, exact and asserted positive.
pub fn ci_lines(tuple: &DegreeTuple) -> BigInt {
    lines_for_degree_order(&tuple.degrees, tuple.even_count)
}

/// Evaluates the nested sum in the given factor order. The result is
/// order-independent; `ci_lines` always passes the sorted tuple.
pub(crate) fn lines_for_degree_order(degrees: &[usize], even_count: usize) -> BigInt {
    // Per-factor prefactor d^(2D+2), with an extra d/2 for even d.
    let mut prefactor = BigInt::one();
    for &d in degrees {
        let half_deg = (d - 1) / 2;
        prefactor *= BigInt::from(d).pow(2 * half_deg as u32 + 2);
        if d % 2 == 0 {
            prefactor *= BigInt::from(d / 2);
        }
    }

    // Per-factor (t, m) weights d^(-2t) e_t(Xi) C(t,m) (-4)^(t-m),
    // where Xi(d) = {(d-j) j : j = 1..floor((d-1)/2)}.
    let mut weights: Vec<Vec<(usize, BigRational)>> = Vec::with_capacity(degrees.len());
    for &d in degrees {
        let half_deg = (d - 1) / 2;
        let xi: Vec<BigRational> = (1..=half_deg)
            .map(|j| BigRational::from_integer(BigInt::from((d - j) * j)))
            .collect();
        let e = elem_sym_all(&xi);
        let mut list = Vec::new();
        for t in 0..=half_deg {
            let scale = BigRational::new(BigInt::one(), BigInt::from(d).pow(2 * t as u32));
            for m in 0..=t {
                let w = &scale
                    * &e[t]
                    * BigRational::from_integer(
                        binomial(t, m as i64) * BigInt::from(-4).pow((t - m) as u32),
                    );
                list.push((m, w));
            }
        }
        weights.push(list);
    }

    // Odometer over the mixed-radix product of the (t, m) lists. The
    // Catalan index is the total even count halved plus all m_i.
    let base_m = even_count / 2;
    let mut idx = vec![0usize; degrees.len()];
    let mut sum = BigRational::zero();
    loop {
        let mut term = BigRational::one();
        let mut m_total = base_m;
        for (i, &j) in idx.iter().enumerate() {
            let (m, w) = &weights[i][j];
            term *= w;
            m_total += m;
        }
        sum += term * BigRational::from_integer(catalan(m_total));

        let mut pos = 0;
        loop {
            if pos == idx.len() {
                let total = BigRational::from_integer(prefactor) * sum;
                assert!(total.is_integer(), "line count must be integral");
                let out = total.to_integer();
                assert!(out.is_positive(), "line count must be positive");
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < weights[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// All valid sorted degree tuples of the given codimension with every
/// degree at most `max_degree`, each paired with its line count.
/// Tuples appear in lexicographic order; permutations of a tuple are
/// reported once.
pub fn ci_table(codim: usize, max_degree: usize) -> Vec<(Vec<usize>, BigInt)> {
    let mut out = Vec::new();
    let mut tuple = vec![0usize; codim];
    fn descend(
        pos: usize,
        min_degree: usize,
        max_degree: usize,
        tuple: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, BigInt)>,
    ) {
        if pos == tuple.len() {
            if let Ok(validated) = ci_dimension_check(tuple) {
                out.push((tuple.clone(), ci_lines(&validated)));
            }
            return;
        }
        for d in min_degree..=max_degree {
            tuple[pos] = d;
            descend(pos + 1, d, max_degree, tuple, out);
        }
    }
    if codim > 0 {
        descend(0, 1, max_degree, &mut tuple, &mut out);
    }
    out
}
