//! Cross-validation machinery: a common dispatch over every method
//! that computes C_n, plus the invariant suites the command line
//! surface runs. All checks are exact except the asymptotic bound,
//! which compares logarithms of exact integers with a fixed 1e-9
//! slack.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::arith::is_odd;
use crate::bllp::{bllp_cn, ORACLE_MAX_N};
use crate::classical::{dominici_cn, harris_cn, libgober_cn, zagier_product_cn, zagier_stirling_cn};
use crate::schubert::{cn_via_recursion, schubert_cn, z_series_check};
use crate::zblock::{
    bombieri_cn, w_sum_identity, weighted_length_sum, weighted_length_sum_enumerated,
    BOMBIERI_GUARD,
};
use crate::Result;

/// Slack allowed when comparing logarithms in the asymptotic bound.
pub const LOG_SLACK: f64 = 1e-9;

/// Every path that computes C_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ZagierProduct,
    ZagierStirling,
    Libgober,
    Dominici,
    Harris,
    Schubert,
    Recursion,
    Bombieri,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::ZagierProduct,
        Method::ZagierStirling,
        Method::Libgober,
        Method::Dominici,
        Method::Harris,
        Method::Schubert,
        Method::Recursion,
        Method::Bombieri,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::ZagierProduct => "zagier-product",
            Method::ZagierStirling => "zagier-stirling",
            Method::Libgober => "libgober",
            Method::Dominici => "dominici",
            Method::Harris => "harris",
            Method::Schubert => "schubert",
            Method::Recursion => "recursion",
            Method::Bombieri => "bombieri",
            Method::Oracle => "oracle",
        }
    }

    /// Smallest n the method accepts.
    pub fn min_n(self) -> usize {
        match self {
            Method::Libgober | Method::Dominici | Method::Harris => 3,
            _ => 2,
        }
    }

    /// Enumeration cap, if the method has one.
    pub fn max_n(self) -> Option<usize> {
        match self {
            Method::Bombieri => Some(BOMBIERI_GUARD),
            Method::Oracle => Some(ORACLE_MAX_N),
            _ => None,
        }
    }

    pub fn applies_to(self, n: usize) -> bool {
        n >= self.min_n() && self.max_n().is_none_or(|cap| n <= cap)
    }

    pub fn compute(self, n: usize) -> Result<BigInt> {
        match self {
            Method::ZagierProduct => zagier_product_cn(n),
            Method::ZagierStirling => zagier_stirling_cn(n),
            Method::Libgober => libgober_cn(n),
            Method::Dominici => dominici_cn(n),
            Method::Harris => harris_cn(n),
            Method::Schubert => schubert_cn(n),
            Method::Recursion => cn_via_recursion(n),
            Method::Bombieri => bombieri_cn(n, BOMBIERI_GUARD),
            Method::Oracle => bllp_cn(n),
        }
    }
}

/// ln of a positive big integer, accurate to well below the slack.
fn ln_bigint(x: &BigInt) -> f64 {
    debug_assert!(x.is_positive());
    let bits = x.bits();
    if bits <= 52 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 52;
    let top: BigInt = x >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// The elementary product bound: C_n <= (2n-2)^(n-1) (2n-3)^(n-2),
/// checked on logarithms with [`LOG_SLACK`].
pub fn asymptotic_bound_holds(n: usize) -> Result<bool> {
    let c = schubert_cn(n)?;
    let lhs = ln_bigint(&c);
    let rhs =
        (n as f64 - 1.0) * ((2 * n - 2) as f64).ln() + (n as f64 - 2.0) * ((2 * n - 3) as f64).ln();
    Ok(lhs <= rhs + LOG_SLACK)
}

/// Parity of C_n through two unrelated closed forms.
pub fn parity_holds(n: usize) -> Result<bool> {
    Ok(is_odd(&schubert_cn(n)?) && is_odd(&zagier_stirling_cn(n)?))
}

/// Outcome of one verification suite.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub detail: String,
    pub passed: bool,
}

impl SuiteOutcome {
    fn pass(name: &'static str, detail: String) -> Self {
        SuiteOutcome { name, detail, passed: true }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        SuiteOutcome { name, detail, passed: false }
    }
}

/// Values of every method applicable at n, in declaration order.
pub fn cross_method_values(n: usize) -> Result<Vec<(&'static str, BigInt)>> {
    Method::ALL
        .iter()
        .filter(|m| m.applies_to(n))
        .map(|m| Ok((m.name(), m.compute(n)?)))
        .collect()
}

fn check_cross_methods(n: usize) -> Option<String> {
    match cross_method_values(n) {
        Ok(values) => {
            let (first_name, first) = &values[0];
            for (name, value) in &values[1..] {
                if value != first {
                    return Some(format!(
                        "n={n}: {name} gives {value}, {first_name} gives {first}"
                    ));
                }
            }
            None
        }
        Err(e) => Some(format!("n={n}: {e}")),
    }
}

/// Runs every suite up to `max_n`; `threads` workers share the
/// per-n cross-method checks.
pub fn verify_all(max_n: usize, threads: usize) -> Vec<SuiteOutcome> {
    let mut out = Vec::new();

    let ns: Vec<usize> = (2..=max_n).collect();
    let failures = parallel_collect(&ns, threads, check_cross_methods);
    out.push(match failures.into_iter().flatten().next() {
        None => SuiteOutcome::pass("cross-method agreement", format!("n=2..{max_n}")),
        Some(msg) => SuiteOutcome::fail("cross-method agreement", msg),
    });

    out.push(run_range("parity", 2, max_n, |n| match parity_holds(n) {
        Ok(true) => None,
        Ok(false) => Some(format!("n={n}: C_n is even")),
        Err(e) => Some(format!("n={n}: {e}")),
    }));

    out.push(run_range("asymptotic bound", 2, max_n, |n| {
        match asymptotic_bound_holds(n) {
            Ok(true) => None,
            Ok(false) => Some(format!("n={n}: log C_n exceeds the product bound")),
            Err(e) => Some(format!("n={n}: {e}")),
        }
    }));

    let wls_cap = max_n.min(9);
    out.push(run_range("weighted length sums", 2, wls_cap, |n| {
        for h in 1..=n - 1 {
            match (weighted_length_sum_enumerated(n, h), weighted_length_sum(n, h)) {
                (Ok(enumerated), Ok(closed)) if enumerated == closed => {}
                (Ok(enumerated), Ok(closed)) => {
                    return Some(format!(
                        "n={n} h={h}: enumeration gives {enumerated}, closed form {closed}"
                    ))
                }
                (Err(e), _) | (_, Err(e)) => return Some(format!("n={n} h={h}: {e}")),
            }
        }
        None
    }));

    let w_cap = max_n.min(12);
    out.push(run_range("composition weight sum", 3, w_cap, |n| {
        match w_sum_identity(n) {
            Ok((lhs, rhs)) if lhs == rhs => None,
            Ok((lhs, rhs)) => Some(format!("n={n}: enumerated {lhs}, closed form {rhs}")),
            Err(e) => Some(format!("n={n}: {e}")),
        }
    }));

    let terms = max_n.min(12);
    out.push(match z_series_check(terms) {
        Ok(_) => SuiteOutcome::pass("series inversion", format!("{terms} terms")),
        Err(e) => SuiteOutcome::fail("series inversion", e.to_string()),
    });

    out
}

fn run_range(
    name: &'static str,
    lo: usize,
    hi: usize,
    check: impl Fn(usize) -> Option<String>,
) -> SuiteOutcome {
    for n in lo..=hi {
        if let Some(msg) = check(n) {
            return SuiteOutcome::fail(name, msg);
        }
    }
    SuiteOutcome::pass(name, format!("n={lo}..{hi}"))
}

/// Applies `work` to every item on a small scoped worker pool and
/// returns the results in input order.
fn parallel_collect<T, F>(items: &[usize], threads: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let workers = threads.max(1).min(items.len().max(1));
    let slots: Vec<Mutex<Option<T>>> = items.iter().map(|_| Mutex::new(None)).collect();
    let cursor = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = cursor.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let result = work(items[i]);
                *slots[i].lock().unwrap() = Some(result);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().expect("worker filled every slot"))
        .collect()
}
