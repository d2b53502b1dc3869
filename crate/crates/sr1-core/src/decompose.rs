//! Greedy decomposition into shifted rank-1 components.
//!
//! Each step estimates the shifts that maximize the spectral norm of the
//! de-shifted residual, extracts the leading rank-1 term there, subtracts
//! the shifted term from the data and repeats. Because the extracted term
//! is an (approximate) leading singular triple, each step removes sigma^2
//! of squared Frobenius energy.

use crate::error::Error;
use crate::estimator::{estimate_shifts, EstimatorTrace};
use crate::matrix::{vec_norm, ComplexMatrix};
use crate::power::power_iterate;
use crate::shift::{inverse_shift, shift_columns, shift_vec, ShiftVector};
use crate::Complex64;
use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)] // inherent f64 methods take over with std; libm backs no_std
use num_traits::Float;

/// Sigma below this fraction of the input norm is treated as noise and
/// stops the deflation loop.
const DEGENERATE_SIGMA_FACTOR: f64 = 1e-14;

/// Toggles for the estimator stages, mainly for ablation runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StageToggles {
    pub start_guess: bool,
    pub amplitude: bool,
    pub plain: bool,
}

impl Default for StageToggles {
    fn default() -> Self {
        StageToggles {
            start_guess: true,
            amplitude: true,
            plain: true,
        }
    }
}

/// Solver parameters for decomposition and shift estimation.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Maximum number of components L.
    pub max_components: usize,
    /// Early-stopping threshold on the residual norm, relative to the
    /// Frobenius norm of the input. Must lie in [0, 1).
    pub residual_threshold: f64,
    /// Power-iteration tolerance on the singular-pair residual.
    pub power_tol: f64,
    /// Power-iteration step cap.
    pub power_cap: usize,
    /// Move cap per improvement stage, as a multiple of the column count.
    pub local_move_cap_factor: usize,
    pub stages: StageToggles,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_components: 10,
            residual_threshold: 0.0,
            power_tol: 1e-10,
            power_cap: 1000,
            local_move_cap_factor: 10,
            stages: StageToggles::default(),
        }
    }
}

impl SolverConfig {
    pub fn with_components(max_components: usize) -> Self {
        SolverConfig {
            max_components,
            ..SolverConfig::default()
        }
    }
}

/// One shifted rank-1 term `S_lambda(sigma u v*)` in canonical form:
/// unit-norm factors, shifts reduced with first entry zero, and the largest
/// entry of `u` rotated to the nonnegative real axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    sigma: f64,
    u: Vec<Complex64>,
    v: Vec<Complex64>,
    shifts: ShiftVector,
}

impl Component {
    /// Validates dimensions and unit norms without re-canonicalizing, so a
    /// stored component reloads without rounding drift.
    pub fn new(
        sigma: f64,
        u: Vec<Complex64>,
        v: Vec<Complex64>,
        shifts: ShiftVector,
    ) -> Result<Self, Error> {
        if u.is_empty() || v.is_empty() {
            return Err(Error::DegenerateInput);
        }
        if shifts.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                found: shifts.len(),
            });
        }
        if shifts.modulus() != u.len() {
            return Err(Error::DimensionMismatch {
                expected: u.len(),
                found: shifts.modulus(),
            });
        }
        if !sigma.is_finite() || sigma < 0.0 {
            return Err(Error::NonFinite);
        }
        // loose gate: catches corrupted files, not rounding
        if (vec_norm(&u) - 1.0).abs() > 1e-6 || (vec_norm(&v) - 1.0).abs() > 1e-6 {
            return Err(Error::DegenerateInput);
        }
        Ok(Component { sigma, u, v, shifts })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn u(&self) -> &[Complex64] {
        &self.u
    }

    pub fn v(&self) -> &[Complex64] {
        &self.v
    }

    pub fn shifts(&self) -> &ShiftVector {
        &self.shifts
    }

    pub fn rows(&self) -> usize {
        self.u.len()
    }

    pub fn cols(&self) -> usize {
        self.v.len()
    }

    /// Dense materialization `S_lambda(sigma u v*)`.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let m = self.rows();
        let n = self.cols();
        let mut out = ComplexMatrix::zeros(m, n).expect("component dims are positive");
        for k in 0..n {
            let shifted = shift_vec(&self.u, self.shifts.get(k));
            let weight = self.v[k].conj() * self.sigma;
            let col = out.col_mut(k);
            for (c, s) in col.iter_mut().zip(shifted.iter()) {
                *c = s * weight;
            }
        }
        out
    }
}

/// Ordered sum of shifted rank-1 components plus the residual-norm history
/// of the greedy loop (length: number of components + 1, starting at the
/// Frobenius norm of the input).
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    rows: usize,
    cols: usize,
    components: Vec<Component>,
    residual_history: Vec<f64>,
}

impl Decomposition {
    pub fn new(
        rows: usize,
        cols: usize,
        components: Vec<Component>,
        residual_history: Vec<f64>,
    ) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimensions { rows, cols });
        }
        for c in &components {
            if c.rows() != rows || c.cols() != cols {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.rows(),
                });
            }
        }
        if residual_history.len() != components.len() + 1 {
            return Err(Error::DataLength {
                expected: components.len() + 1,
                found: residual_history.len(),
            });
        }
        if !residual_history.iter().all(|h| h.is_finite() && *h >= 0.0) {
            return Err(Error::NonFinite);
        }
        Ok(Decomposition {
            rows,
            cols,
            components,
            residual_history,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn residual_history(&self) -> &[f64] {
        &self.residual_history
    }

    /// Final residual norm relative to the input norm.
    pub fn relative_residual(&self) -> f64 {
        let first = self.residual_history[0];
        if first == 0.0 {
            0.0
        } else {
            self.residual_history[self.residual_history.len() - 1] / first
        }
    }
}

/// Decomposition together with the estimator traces of every extraction.
#[derive(Debug, Clone)]
pub struct TracedDecomposition {
    pub decomposition: Decomposition,
    /// One trace list per extracted component.
    pub extraction_traces: Vec<Vec<EstimatorTrace>>,
}

/// Puts an arbitrary parameterization of a shifted rank-1 term into
/// canonical form. The represented matrix is unchanged: the global-shift
/// ambiguity is resolved by rotating the first shift to zero, magnitudes
/// are folded into sigma, and the joint phase is fixed through the largest
/// entry of `u`.
pub fn canonicalize_component(
    sigma: f64,
    u: &[Complex64],
    v: &[Complex64],
    shifts: &ShiftVector,
) -> Result<Component, Error> {
    if u.is_empty() || v.is_empty() || shifts.len() != v.len() || shifts.modulus() != u.len() {
        return Err(Error::DimensionMismatch {
            expected: v.len(),
            found: shifts.len(),
        });
    }
    if !sigma.is_finite() {
        return Err(Error::NonFinite);
    }
    let u_norm = vec_norm(u);
    let v_norm = vec_norm(v);
    if sigma == 0.0 || u_norm == 0.0 || v_norm == 0.0 {
        return Err(Error::DegenerateInput);
    }

    // S_lambda(u v*) = S_{lambda - m 1}(S^m(u) v*), pick m = lambda_1
    let m0 = shifts.get(0);
    let canon_shifts = shifts.offset(m0);
    let mut cu = shift_vec(u, m0);

    // fold magnitudes (and the sign of sigma) into the scalar
    let canon_sigma = sigma.abs() * u_norm * v_norm;
    let u_scale = sigma.signum() / u_norm;
    for z in cu.iter_mut() {
        *z *= u_scale;
    }
    let mut cv: Vec<Complex64> = v.iter().map(|z| z / v_norm).collect();

    // joint phase: rotate so the largest-modulus entry of u is real >= 0
    let mut idx = 0;
    let mut best = f64::NEG_INFINITY;
    for (j, z) in cu.iter().enumerate() {
        let n = z.norm();
        if n > best {
            best = n;
            idx = j;
        }
    }
    let pivot = cu[idx];
    let pn = pivot.norm();
    if pn > 0.0 {
        let rot = (pivot / pn).conj();
        for z in cu.iter_mut() {
            *z *= rot;
        }
        for z in cv.iter_mut() {
            *z *= rot;
        }
    }

    Ok(Component {
        sigma: canon_sigma,
        u: cu,
        v: cv,
        shifts: canon_shifts,
    })
}

/// Extracts one shifted rank-1 component: estimate shifts, take the leading
/// singular triple of the de-shifted matrix, subtract. The energy identity
/// `||residual||_F^2 = ||a||_F^2 - sigma^2` holds to rounding because
/// `sigma = u* (S_{-lambda} a) v` is exact for the returned triple.
pub fn extract_component(
    a: &ComplexMatrix,
    cfg: &SolverConfig,
) -> Result<(Component, ComplexMatrix), Error> {
    let (component, residual, _) = extract_component_traced(a, cfg)?;
    Ok((component, residual))
}

pub(crate) fn extract_component_traced(
    a: &ComplexMatrix,
    cfg: &SolverConfig,
) -> Result<(Component, ComplexMatrix, Vec<EstimatorTrace>), Error> {
    if a.frobenius_norm_sqr() == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    let estimate = estimate_shifts(a, cfg)?;
    let deshifted = shift_columns(a, &inverse_shift(&estimate.shifts))?;
    // best iterate is acceptable on a cap hit; sigma = u* W v still holds
    let triple = power_iterate(&deshifted, None, cfg.power_tol, cfg.power_cap)?.triple;
    let component = canonicalize_component(triple.sigma, &triple.u, &triple.v, &estimate.shifts)?;
    let mut residual = a.clone();
    residual
        .sub_assign(&component.to_matrix())
        .expect("component matches input dims");
    Ok((component, residual, estimate.traces))
}

/// Greedy loop: extract up to `max_components` components, stopping early
/// once the relative residual drops to the configured threshold or an
/// extraction becomes degenerate.
pub fn decompose(a: &ComplexMatrix, cfg: &SolverConfig) -> Result<Decomposition, Error> {
    Ok(decompose_traced(a, cfg)?.decomposition)
}

/// [`decompose`] with per-extraction estimator traces, for benchmarking and
/// stage-ratio reporting.
pub fn decompose_traced(
    a: &ComplexMatrix,
    cfg: &SolverConfig,
) -> Result<TracedDecomposition, Error> {
    let input_norm = a.frobenius_norm();
    if input_norm == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    let mut components = Vec::new();
    let mut traces = Vec::new();
    let mut history = vec![input_norm];
    let mut current = a.clone();

    for _ in 0..cfg.max_components {
        let residual_norm = history[history.len() - 1];
        if residual_norm <= cfg.residual_threshold * input_norm {
            break;
        }
        if current.frobenius_norm_sqr() == 0.0 {
            break;
        }
        let (component, residual, step_traces) = extract_component_traced(&current, cfg)?;
        if component.sigma() < DEGENERATE_SIGMA_FACTOR * input_norm {
            break;
        }
        current = residual;
        history.push(current.frobenius_norm());
        components.push(component);
        traces.push(step_traces);
    }

    let decomposition = Decomposition::new(a.rows(), a.cols(), components, history)?;
    Ok(TracedDecomposition {
        decomposition,
        extraction_traces: traces,
    })
}

/// Sums the shifted rank-1 terms back into a dense matrix. An empty
/// decomposition reconstructs to zero.
pub fn reconstruct(d: &Decomposition) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(d.rows(), d.cols()).expect("validated dims");
    for c in d.components() {
        let m = c.to_matrix();
        for (o, x) in out.data_mut().iter_mut().zip(m.data().iter()) {
            *o += *x;
        }
    }
    out
}
