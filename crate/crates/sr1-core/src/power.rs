//! Leading singular triple via warm-started power iteration.
//!
//! The deflation loop re-estimates the top singular vector of a matrix that
//! changed in a single column, so the previous vector is an excellent
//! starting guess and the iteration typically needs only a handful of steps.

use crate::error::Error;
use crate::matrix::{vec_norm, ComplexMatrix};
use crate::Complex64;
use alloc::vec::Vec;
#[allow(unused_imports)] // inherent f64 methods take over with std; libm backs no_std
use num_traits::Float;

/// Leading singular value with unit left and right singular vectors.
///
/// The returned factors satisfy `A v = sigma u` exactly by construction and
/// `||A* u - sigma v|| <= tol * sigma` at the requested tolerance, so
/// `sigma = u* A v` holds to rounding.
#[derive(Debug, Clone)]
pub struct SingularTriple {
    pub sigma: f64,
    pub u: Vec<Complex64>,
    pub v: Vec<Complex64>,
}

/// Result of the raw iteration, before the convergence policy is applied.
pub(crate) struct PowerOutcome {
    pub triple: SingularTriple,
    #[allow(dead_code)] // diagnostic, read by tests
    pub iterations: usize,
    pub converged: bool,
}

/// Computes the leading singular triple of `a`.
///
/// `warm_start` is a guess for the left singular vector (length M). Without
/// one the iteration starts from the column of `a` with the largest norm,
/// which makes the result deterministic. Returns
/// [`Error::NoConvergence`] carrying the best iterate if `max_iter` steps do
/// not reach `tol`, and [`Error::ZeroMatrix`] for an all-zero input.
pub fn leading_singular_triple(
    a: &ComplexMatrix,
    warm_start: Option<&[Complex64]>,
    tol: f64,
    max_iter: usize,
) -> Result<SingularTriple, Error> {
    let outcome = power_iterate(a, warm_start, tol, max_iter)?;
    if outcome.converged {
        Ok(outcome.triple)
    } else {
        Err(Error::NoConvergence {
            best: outcome.triple,
        })
    }
}

/// Spectral norm of `a` at the default tolerance, accepting the best iterate
/// when the gap is too small for full convergence.
pub fn spectral_norm(a: &ComplexMatrix) -> Result<f64, Error> {
    Ok(power_iterate(a, None, 1e-10, 1000)?.triple.sigma)
}

pub(crate) fn power_iterate(
    a: &ComplexMatrix,
    warm_start: Option<&[Complex64]>,
    tol: f64,
    max_iter: usize,
) -> Result<PowerOutcome, Error> {
    if a.frobenius_norm_sqr() == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    let m = a.rows();

    let mut u = match warm_start {
        Some(w) => {
            if w.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: w.len(),
                });
            }
            let n = vec_norm(w);
            if n > 0.0 {
                w.iter().map(|z| z / n).collect()
            } else {
                default_start(a)
            }
        }
        None => default_start(a),
    };

    // v from the start vector; restart from the default column if the warm
    // start happens to be orthogonal to the range.
    let mut w = a.conj_transpose_mul_vec(&u).expect("length checked");
    if vec_norm(&w) == 0.0 {
        u = default_start(a);
        w = a.conj_transpose_mul_vec(&u).expect("length checked");
    }
    normalize(&mut w);
    let mut v = w;

    let mut sigma = 0.0;
    let mut iterations = 0;
    for iter in 1..=max_iter {
        iterations = iter;
        let z = a.mul_vec(&v).expect("length checked");
        let s = vec_norm(&z);
        if s == 0.0 {
            break;
        }
        sigma = s;
        u = z;
        for x in u.iter_mut() {
            *x /= sigma;
        }
        let w = a.conj_transpose_mul_vec(&u).expect("length checked");
        let mut residual_sq = 0.0;
        for (wk, vk) in w.iter().zip(v.iter()) {
            residual_sq += (wk - vk * sigma).norm_sqr();
        }
        if residual_sq.sqrt() <= tol * sigma {
            return Ok(PowerOutcome {
                triple: SingularTriple { sigma, u, v },
                iterations,
                converged: true,
            });
        }
        let mut next_v = w;
        normalize(&mut next_v);
        v = next_v;
    }

    Ok(PowerOutcome {
        triple: SingularTriple { sigma, u, v },
        iterations,
        converged: false,
    })
}

fn default_start(a: &ComplexMatrix) -> Vec<Complex64> {
    let mut best = 0;
    let mut best_norm = f64::NEG_INFINITY;
    for k in 0..a.cols() {
        let n: f64 = a.col(k).iter().map(|z| z.norm_sqr()).sum();
        if n > best_norm {
            best_norm = n;
            best = k;
        }
    }
    let mut start: Vec<Complex64> = a.col(best).into();
    normalize(&mut start);
    start
}

fn normalize(v: &mut [Complex64]) {
    let n = vec_norm(v);
    if n > 0.0 {
        for x in v.iter_mut() {
            *x /= n;
        }
    }
}
