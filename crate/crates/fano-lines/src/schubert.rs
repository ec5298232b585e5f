//! The Schubert-calculus closed form for C_n, the lower-triangular
//! coefficient matrix it induces, the unbounded-order linear recursion
//! with variable coefficients, the inverse matrix and the generating
//! function of the inverted linear combinations, and the Pieri-lattice
//! path count realizing the Catalan intersection numbers.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{catalan, elem_sym_all, expect_integer, neg_one_pow};
use crate::classical::require_min;
use crate::{Error, Result};

/// Evaluation set {(2n-3-j) j / (2n-3)^2 : j = 1..n-2}; empty for n = 2.
fn gamma_set(n: usize) -> Vec<BigRational> {
    let d = 2 * n - 3;
    let dsq = BigInt::from(d) * BigInt::from(d);
    (1..=n.saturating_sub(2))
        .map(|j| BigRational::new(BigInt::from((d - j) * j), dsq.clone()))
        .collect()
}

/// Coefficient of x^t in the inverted series: (-1)^t (2t+1) K_t.
pub fn u_coefficient(t: usize) -> BigInt {
    neg_one_pow(t) * BigInt::from(2 * t + 1) * catalan(t)
}

/// C_n = (2n-3)^(2n-2) * sum_m e_m(Gamma) (-1)^m (2m+1) K_m, exact.
pub fn schubert_cn(n: usize) -> Result<BigInt> {
    require_min("schubert_cn", n, 2)?;
    let e = elem_sym_all(&gamma_set(n));
    let mut sum = BigRational::zero();
    for (m, em) in e.iter().enumerate() {
        sum += em * BigRational::from_integer(u_coefficient(m));
    }
    let scale = BigInt::from(2 * n - 3).pow(2 * n as u32 - 2);
    expect_integer("schubert_cn", BigRational::from_integer(scale) * sum)
}

/// Entry alpha_{n,k} = (2n-3)^(2n-2) e_k(Gamma_{n-2}), the matrix that
/// links the sequence (C_n) to the series coefficients u_k.
pub fn alpha_entry(n: usize, k: usize) -> Result<BigRational> {
    require_min("alpha_entry", n, 2)?;
    if k > n - 2 {
        return Err(Error::domain(
            "alpha_entry",
            format!("k must satisfy 0 <= k <= n-2, got n={n}, k={k}"),
        ));
    }
    let e = elem_sym_all(&gamma_set(n));
    let scale = BigInt::from(2 * n - 3).pow(2 * n as u32 - 2);
    Ok(BigRational::from_integer(scale) * &e[k])
}

/// An exact-rational lower-triangular matrix; row r holds entries for
/// columns 0..=r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriMatrix {
    rows: Vec<Vec<BigRational>>,
}

impl TriMatrix {
    /// Builds from explicit rows; row r must have exactly r+1 entries.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.len() != r + 1 {
                return Err(Error::domain(
                    "TriMatrix::from_rows",
                    format!("row {r} has {} entries, expected {}", row.len(), r + 1),
                ));
            }
        }
        Ok(TriMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.rows[r]
    }

    /// Entry (r, c); zero above the diagonal.
    pub fn entry(&self, r: usize, c: usize) -> BigRational {
        if c <= r {
            self.rows[r][c].clone()
        } else {
            BigRational::zero()
        }
    }

    /// Product of two lower-triangular matrices of equal size.
    pub fn mul(&self, other: &TriMatrix) -> Result<TriMatrix> {
        if self.size() != other.size() {
            return Err(Error::domain(
                "TriMatrix::mul",
                format!("size mismatch: {} vs {}", self.size(), other.size()),
            ));
        }
        let n = self.size();
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let mut row = Vec::with_capacity(r + 1);
            for c in 0..=r {
                let mut acc = BigRational::zero();
                for k in c..=r {
                    acc += &self.rows[r][k] * &other.rows[k][c];
                }
                row.push(acc);
            }
            rows.push(row);
        }
        Ok(TriMatrix { rows })
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(r, row)| {
            row.iter()
                .enumerate()
                .all(|(c, v)| if c == r { v.is_one() } else { v.is_zero() })
        })
    }

    /// Inverse by forward substitution. The diagonal must be nonzero.
    pub fn invert(&self) -> Result<TriMatrix> {
        let n = self.size();
        for r in 0..n {
            if self.rows[r][r].is_zero() {
                return Err(Error::defect(
                    "TriMatrix::invert",
                    format!("zero diagonal entry at row {r}"),
                ));
            }
        }
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut row = vec![BigRational::zero(); r + 1];
            row[r] = self.rows[r][r].recip();
            for c in (0..r).rev() {
                // sum_{k=c..r} inv[r][k] * a[k][c] = 0
                let mut acc = BigRational::zero();
                for k in c + 1..=r {
                    acc += &row[k] * &self.rows[k][c];
                }
                row[c] = -(acc / &self.rows[c][c]);
            }
            rows.push(row);
        }
        Ok(TriMatrix { rows })
    }
}

/// Upper-left size x size block of the alpha matrix, rows indexed by
/// n = 2, 3, ..., columns by k = 0, 1, ...
pub fn alpha_matrix(size: usize) -> TriMatrix {
    let rows = (0..size)
        .map(|r| {
            let n = r + 2;
            let scale = BigRational::from_integer(BigInt::from(2 * n - 3).pow(2 * n as u32 - 2));
            elem_sym_all(&gamma_set(n))
                .into_iter()
                .map(|e| &scale * e)
                .collect()
        })
        .collect();
    TriMatrix { rows }
}

/// Upper-left size x size block of the inverse matrix theta. The alpha
/// diagonal is provably nonzero, so this cannot fail.
pub fn theta_matrix(size: usize) -> TriMatrix {
    alpha_matrix(size)
        .invert()
        .expect("alpha diagonal is nonzero by construction")
}

// Recursion coefficient rows, grown on demand. Slot i holds the row
// for n = i + 3: coefficients B_{n,k} for k = 2..=n-1.
static B_ROWS: Mutex<Vec<Vec<BigRational>>> = Mutex::new(Vec::new());

/// Diagonal-normalized column entry alpha_{n,j} / alpha_{j+2,j}.
fn alpha_ratio(alpha: &TriMatrix, n: usize, j: usize) -> BigRational {
    alpha.entry(n - 2, j) / alpha.entry(j, j)
}

fn b_rows_up_to(n: usize) -> Vec<Vec<BigRational>> {
    let mut rows = B_ROWS.lock().unwrap();
    if rows.len() + 3 <= n {
        let alpha = alpha_matrix(n - 1);
        while rows.len() + 3 <= n {
            let cur = rows.len() + 3;
            let mut row = Vec::with_capacity(cur - 2);
            for k in 2..cur {
                // B_{n,k} = alpha_{n,k-2} / alpha_{k,k-2}
                //   - sum_q alpha_{n,k-2+q} / alpha_{k+q,k-2+q} * B_{k+q,k}
                let mut b = alpha_ratio(&alpha, cur, k - 2);
                for q in 1..=cur - k - 1 {
                    let prior = &rows[k + q - 3][k - 2];
                    b -= alpha_ratio(&alpha, cur, k - 2 + q) * prior;
                }
                row.push(b);
            }
            rows.push(row);
        }
    }
    rows[..n - 2].to_vec()
}

/// Inhomogeneous term F_n = alpha_{n,n-2} (-1)^(n-2) (2n-3) K_{n-2}.
fn f_term(n: usize) -> Result<BigRational> {
    let a = alpha_entry(n, n - 2)?;
    Ok(a * BigRational::from_integer(
        neg_one_pow(n - 2) * BigInt::from(2 * n - 3) * catalan(n - 2),
    ))
}

/// Coefficients of the variable-coefficient linear recursion
/// C_n = sum_{k=2}^{n-1} B_{n,k} C_k + F_n. The returned vector is
/// indexed so that entry 0 is B_{n,2}.
pub fn recursion_coeffs(n: usize) -> Result<(Vec<BigRational>, BigRational)> {
    require_min("recursion_coeffs", n, 3)?;
    let rows = b_rows_up_to(n);
    Ok((rows[n - 3].clone(), f_term(n)?))
}

/// Evaluates the recursion bottom-up from C_2 = 1. The result of every
/// step must reduce to an integer; anything else is reported as a
/// defect rather than truncated.
pub fn cn_via_recursion(n: usize) -> Result<BigInt> {
    require_min("cn_via_recursion", n, 2)?;
    let mut values = vec![BigInt::one()]; // C_2
    if n >= 3 {
        let rows = b_rows_up_to(n);
        for cur in 3..=n {
            let row = &rows[cur - 3];
            let mut acc = f_term(cur)?;
            for (i, b) in row.iter().enumerate() {
                acc += b * BigRational::from_integer(values[i].clone());
            }
            values.push(expect_integer("cn_via_recursion", acc)?);
        }
    }
    Ok(values.pop().unwrap())
}

/// Applies theta to the sequence (C_{k+2}) and checks that the result
/// reproduces the series coefficients u_t term by term. Returns the
/// recovered coefficients.
pub fn z_series_check(terms: usize) -> Result<Vec<BigInt>> {
    if terms == 0 {
        return Err(Error::domain("z_series_check", "terms must be at least 1"));
    }
    let theta = theta_matrix(terms);
    let c: Vec<BigRational> = (0..terms)
        .map(|k| Ok(BigRational::from_integer(schubert_cn(k + 2)?)))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(terms);
    for t in 0..terms {
        let mut acc = BigRational::zero();
        for k in 0..=t {
            acc += theta.row(t)[k].clone() * &c[k];
        }
        let got = expect_integer("z_series_check", acc)?;
        let want = u_coefficient(t);
        if got != want {
            return Err(Error::defect(
                "z_series_check",
                format!("term {t}: recovered {got}, series says {want}"),
            ));
        }
        out.push(got);
    }
    Ok(out)
}

/// Number of multiplication paths from the class pair (n-1-m, n-1-m)
/// to the top pair (n-1, n-1) in the two-row Pieri lattice of the
/// Grassmannian of lines: states (a, b) with n-1 >= a >= b >= 0, one
/// step raises a or b by one while keeping a >= b. Equals K_m.
pub fn catalan_path_count(n: usize, m: usize) -> Result<BigInt> {
    require_min("catalan_path_count", n, 2)?;
    if m > n - 1 {
        return Err(Error::domain(
            "catalan_path_count",
            format!("m must satisfy 0 <= m <= n-1, got n={n}, m={m}"),
        ));
    }
    let top = n - 1;
    // paths[a][b] counts lattice paths from (a, b) up to (top, top).
    let mut paths = vec![vec![BigInt::zero(); top + 1]; top + 1];
    paths[top][top] = BigInt::one();
    for a in (0..=top).rev() {
        for b in (0..=a).rev() {
            if a == top && b == top {
                continue;
            }
            let mut acc = BigInt::zero();
            if a < top {
                acc += &paths[a + 1][b];
            }
            if b < a {
                acc += &paths[a][b + 1];
            }
            paths[a][b] = acc;
        }
    }
    Ok(paths[top - m][top - m].clone())
}
