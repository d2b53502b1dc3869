//! Fast products with shifted rank-1 matrices.
//!
//! A shifted rank-1 matrix factors into a circular convolution with `u`
//! applied to a vector of per-shift-bin weights, so the product costs one
//! FFT pair (O(M log M + N)) instead of the dense O(MN). Sums of terms share
//! a single inverse transform by accumulating spectra.

use crate::decompose::{Component, Decomposition};
use crate::error::Error;
use crate::fft::Fft;
use crate::Complex64;
use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)] // inherent f64 methods take over with std; libm backs no_std
use num_traits::Float;

/// Per-shift-bin accumulated weights: applying `S_lambda(sigma u v*)` to `x`
/// first collapses `x` onto the M shift bins (`t[lambda_j] += sigma
/// conj(v_j) x_j`), then circularly convolves the bins with `u`.
#[derive(Debug, Clone)]
pub struct SparseActivation {
    weights: Vec<Complex64>,
}

impl SparseActivation {
    /// Accumulates the activation of `x` against a component. Aggregation
    /// runs in ascending column order so results are deterministic.
    pub fn from_component(c: &Component, x: &[Complex64]) -> Result<Self, Error> {
        if x.len() != c.cols() {
            return Err(Error::DimensionMismatch {
                expected: c.cols(),
                found: x.len(),
            });
        }
        let mut weights = vec![Complex64::new(0.0, 0.0); c.rows()];
        for (j, xj) in x.iter().enumerate() {
            weights[c.shifts().get(j)] += c.v()[j].conj() * xj * c.sigma();
        }
        Ok(SparseActivation { weights })
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// `S_lambda(sigma u v*) x` via FFT convolution in O(M log M + N).
pub fn component_matvec(c: &Component, x: &[Complex64]) -> Result<Vec<Complex64>, Error> {
    let plan = Fft::new(c.rows());
    let spectrum = component_spectrum(c, x, &plan)?;
    Ok(finish_spectrum(spectrum, &plan))
}

/// Product with a sum of components. All terms accumulate in the Fourier
/// domain and share one inverse transform.
pub fn decomposition_matvec(d: &Decomposition, x: &[Complex64]) -> Result<Vec<Complex64>, Error> {
    if x.len() != d.cols() {
        return Err(Error::DimensionMismatch {
            expected: d.cols(),
            found: x.len(),
        });
    }
    let plan = Fft::new(d.rows());
    let mut acc = vec![Complex64::new(0.0, 0.0); d.rows()];
    for c in d.components() {
        let spectrum = component_spectrum(c, x, &plan)?;
        for (a, s) in acc.iter_mut().zip(spectrum.iter()) {
            *a += *s;
        }
    }
    Ok(finish_spectrum(acc, &plan))
}

/// Adjoint product `(S_lambda(sigma u v*))* y`: entry j is
/// `sigma v_j <shift(u, lambda_j), y>`, evaluated through one
/// cross-correlation FFT in O(M log M + N).
pub fn component_rmatvec(c: &Component, y: &[Complex64]) -> Result<Vec<Complex64>, Error> {
    let m = c.rows();
    if y.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: y.len(),
        });
    }
    let plan = Fft::new(m);
    let mut u_hat: Vec<Complex64> = c.u().into();
    plan.forward(&mut u_hat);
    let mut corr: Vec<Complex64> = y.into();
    plan.forward(&mut corr);
    for (z, uh) in corr.iter_mut().zip(u_hat.iter()) {
        *z *= uh.conj();
    }
    plan.inverse(&mut corr);
    // corr[s] * sqrt(M) = <shift(u, s), y>
    let scale = (m as f64).sqrt();
    Ok((0..c.cols())
        .map(|j| c.v()[j] * corr[c.shifts().get(j)] * scale * c.sigma())
        .collect())
}

fn component_spectrum(
    c: &Component,
    x: &[Complex64],
    plan: &Fft,
) -> Result<Vec<Complex64>, Error> {
    let activation = SparseActivation::from_component(c, x)?;
    let mut t_hat = activation.weights;
    plan.forward(&mut t_hat);
    let mut u_hat: Vec<Complex64> = c.u().into();
    plan.forward(&mut u_hat);
    for (t, u) in t_hat.iter_mut().zip(u_hat.iter()) {
        *t *= u;
    }
    Ok(t_hat)
}

fn finish_spectrum(mut spectrum: Vec<Complex64>, plan: &Fft) -> Vec<Complex64> {
    // unitary convolution theorem: F(u conv t) = sqrt(M) u_hat t_hat
    let scale = (spectrum.len() as f64).sqrt();
    for z in spectrum.iter_mut() {
        *z *= scale;
    }
    plan.inverse(&mut spectrum);
    spectrum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{canonicalize_component, Decomposition};
    use crate::matrix::{vec_dot, vec_norm_sqr};
    use crate::shift::{shift_vec, ShiftVector};

    fn lcg(state: &mut u64) -> f64 {
        *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((*state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
    }

    fn random_unit(len: usize, seed: u64) -> Vec<Complex64> {
        let mut s = seed.wrapping_add(0xbeef);
        let mut v: Vec<Complex64> = (0..len)
            .map(|_| Complex64::new(lcg(&mut s), lcg(&mut s)))
            .collect();
        let n = vec_norm_sqr(&v).sqrt();
        for z in v.iter_mut() {
            *z /= n;
        }
        v
    }

    fn random_component(m: usize, n: usize, sigma: f64, seed: u64) -> Component {
        let u = random_unit(m, seed);
        let v = random_unit(n, seed + 1);
        let mut s = seed + 2;
        let shifts: Vec<i64> = (0..n).map(|_| (lcg(&mut s).abs() * m as f64) as i64).collect();
        let shifts = ShiftVector::new(&shifts, m).unwrap();
        canonicalize_component(sigma, &u, &v, &shifts).unwrap()
    }

    fn random_vec(len: usize, seed: u64) -> Vec<Complex64> {
        let mut s = seed.wrapping_add(0xf00d);
        (0..len).map(|_| Complex64::new(lcg(&mut s), lcg(&mut s))).collect()
    }

    #[test]
    fn basis_vector_selects_one_shifted_column() {
        let m = 8;
        let n = 5;
        let c = random_component(m, n, 1.7, 40);
        for j in 0..n {
            let mut x = vec![Complex64::new(0.0, 0.0); n];
            x[j] = Complex64::new(1.0, 0.0);
            let got = component_matvec(&c, &x).unwrap();
            let shifted = shift_vec(c.u(), c.shifts().get(j));
            let w = c.v()[j].conj() * c.sigma();
            for (g, s) in got.iter().zip(shifted.iter()) {
                assert!((g - s * w).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn identity_written_as_shifted_rank_one() {
        let n = 16;
        let mut u = vec![Complex64::new(0.0, 0.0); n];
        u[0] = Complex64::new(1.0, 0.0);
        let v = vec![Complex64::new(1.0 / (n as f64).sqrt(), 0.0); n];
        let shifts: Vec<i64> = (0..n as i64).collect();
        let c = canonicalize_component(
            (n as f64).sqrt(),
            &u,
            &v,
            &ShiftVector::new(&shifts, n).unwrap(),
        )
        .unwrap();
        let x = random_vec(n, 50);
        let got = component_matvec(&c, &x).unwrap();
        for (g, xj) in got.iter().zip(x.iter()) {
            assert!((g - xj).norm() < 1e-12);
        }
    }

    #[test]
    fn matches_dense_product() {
        for (m, n, seed) in [(16, 16, 60u64), (64, 64, 61), (33, 17, 62)] {
            let c = random_component(m, n, 2.2, seed);
            let x = random_vec(n, seed + 10);
            let fast = component_matvec(&c, &x).unwrap();
            let dense = c.to_matrix().mul_vec(&x).unwrap();
            let scale = vec_norm_sqr(&dense).sqrt().max(1.0);
            for (f, d) in fast.iter().zip(dense.iter()) {
                assert!((f - d).norm() < 1e-10 * scale);
            }
        }
    }

    #[test]
    fn decomposition_matvec_empty_and_duplicate() {
        let m = 6;
        let n = 4;
        let d0 = Decomposition::new(m, n, vec![], vec![1.0]).unwrap();
        let x = random_vec(n, 70);
        let zero = decomposition_matvec(&d0, &x).unwrap();
        assert!(zero.iter().all(|z| z.norm() == 0.0));

        let c = random_component(m, n, 1.0, 71);
        let single = component_matvec(&c, &x).unwrap();
        let d2 = Decomposition::new(m, n, vec![c.clone(), c], vec![1.0, 0.5, 0.25]).unwrap();
        let doubled = decomposition_matvec(&d2, &x).unwrap();
        for (two, one) in doubled.iter().zip(single.iter()) {
            assert!((two - one * 2.0).norm() < 1e-12);
        }
    }

    #[test]
    fn decomposition_matches_dense_reconstruction() {
        let m = 32;
        let n = 24;
        let comps: Vec<Component> = (0..6)
            .map(|i| random_component(m, n, 1.0 / (i as f64 + 1.0), 100 + i as u64 * 7))
            .collect();
        let history = vec![1.0; comps.len() + 1];
        let d = Decomposition::new(m, n, comps, history).unwrap();
        let x = random_vec(n, 200);
        let fast = decomposition_matvec(&d, &x).unwrap();
        let dense = crate::decompose::reconstruct(&d).mul_vec(&x).unwrap();
        let scale = vec_norm_sqr(&dense).sqrt().max(1.0);
        for (f, g) in fast.iter().zip(dense.iter()) {
            assert!((f - g).norm() < 1e-10 * scale);
        }
    }

    #[test]
    fn rmatvec_matches_dense_adjoint() {
        let m = 24;
        let n = 10;
        let c = random_component(m, n, 1.4, 300);
        let y = random_vec(m, 301);
        let fast = component_rmatvec(&c, &y).unwrap();
        let dense = c.to_matrix().conj_transpose_mul_vec(&y).unwrap();
        let scale = vec_norm_sqr(&dense).sqrt().max(1.0);
        for (f, d) in fast.iter().zip(dense.iter()) {
            assert!((f - d).norm() < 1e-10 * scale);
        }
    }

    #[test]
    fn rmatvec_aligned_correlation() {
        let m = 12;
        let n = 6;
        let c = random_component(m, n, 1.0, 310);
        let j = 3;
        let y = shift_vec(c.u(), c.shifts().get(j));
        let out = component_rmatvec(&c, &y).unwrap();
        // <shift(u, lambda_j), y> = ||u||^2 = 1 at the aligned column
        let expected = c.v()[j] * c.sigma();
        assert!((out[j] - expected).norm() < 1e-10);
    }

    #[test]
    fn rmatvec_without_shift_reduces_to_rank_one_adjoint() {
        let m = 9;
        let n = 5;
        let u = random_unit(m, 320);
        let v = random_unit(n, 321);
        let c = canonicalize_component(1.3, &u, &v, &ShiftVector::zero(n, m)).unwrap();
        let y = random_vec(m, 322);
        let out = component_rmatvec(&c, &y).unwrap();
        let inner = vec_dot(c.u(), &y);
        for (o, vj) in out.iter().zip(c.v().iter()) {
            assert!((o - vj * inner * c.sigma()).norm() < 1e-12);
        }
    }

    #[test]
    fn adjoint_consistency() {
        let m = 20;
        let n = 14;
        let c = random_component(m, n, 0.9, 330);
        let x = random_vec(n, 331);
        let y = random_vec(m, 332);
        let lhs = vec_dot(&component_matvec(&c, &x).unwrap(), &y);
        let rhs = vec_dot(&x, &component_rmatvec(&c, &y).unwrap());
        assert!((lhs - rhs).norm() < 1e-10 * lhs.norm().max(1.0));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let c = random_component(6, 4, 1.0, 400);
        assert!(component_matvec(&c, &random_vec(5, 1)).is_err());
        assert!(component_rmatvec(&c, &random_vec(4, 1)).is_err());
    }
}
