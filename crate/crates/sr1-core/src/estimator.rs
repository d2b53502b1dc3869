//! Shift estimation: approximately maximize the spectral norm of the
//! de-shifted matrix over all shift vectors.
//!
//! Finding the exact maximizer is combinatorial (M^N candidates), so the
//! estimator works in the Fourier domain in three stages:
//!
//! 1. a starting guess from the per-column cross-correlation of each column
//!    with the inverse transform of its own magnitude spectrum,
//! 2. a greedy single-column improvement loop in which the current left
//!    singular vector is first projected onto the amplitude profile of the
//!    relaxed optimum (the leading singular vector of the entrywise
//!    magnitude spectrum), pulling the iterate toward the relaxation bound,
//! 3. the same loop without the projection, which is monotone in the
//!    objective and terminates in a single-column local maximum.
//!
//! All stage work happens on the transformed matrix: a column shift is a
//! unit-modulus phase multiplication, and one improvement step costs one
//! warm-started power iteration plus N inverse FFTs.

use crate::decompose::SolverConfig;
use crate::error::Error;
use crate::fft::{fft_columns, Fft};
use crate::matrix::ComplexMatrix;
use crate::power::power_iterate;
use crate::shift::{unit_roots, ShiftVector};
use crate::Complex64;
use alloc::vec;
use alloc::vec::Vec;

/// Pipeline stage that produced a trace entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    /// Objective of the raw input (zero shifts).
    Input,
    /// After the correlation-based starting guess.
    StartGuess,
    /// After the amplitude-projected improvement loop.
    GlobalStage,
    /// After the plain improvement loop.
    LocalStage,
}

/// Objective bookkeeping for one estimator stage.
///
/// `iterations` counts accepted single-column moves; `ratio` is the
/// objective divided by the relaxation upper bound, so it lies in (0, 1]
/// up to rounding. `hit_cap` flags a stage that stopped on its move cap
/// rather than at a fixed point.
#[derive(Debug, Clone)]
pub struct EstimatorTrace {
    pub stage: Stage,
    pub objective: f64,
    pub ratio: f64,
    pub iterations: usize,
    pub hit_cap: bool,
}

/// Improvement-loop variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptimizeMode {
    /// Monotone greedy loop; terminates in a local maximum.
    Plain,
    /// Projects the singular vector amplitudes onto the relaxed optimum
    /// before each correlation. Not guaranteed monotone, so the move cap is
    /// load-bearing; the caller follows up with a plain stage.
    AmplitudeProjected,
}

/// Nonnegative cross-correlation energies: entry (s, k) is proportional to
/// the squared correlation of the probe vector with column k shifted back
/// by s.
#[derive(Debug, Clone)]
pub struct CorrelationMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl CorrelationMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, shift: usize, col: usize) -> f64 {
        self.data[col * self.rows + shift]
    }

    pub fn column(&self, col: usize) -> &[f64] {
        &self.data[col * self.rows..(col + 1) * self.rows]
    }
}

/// Value and left singular vector of the relaxed problem in which arbitrary
/// unit-modulus phases replace genuine shifts. The value is the spectral
/// norm of the entrywise magnitude spectrum; no shift can beat it.
#[derive(Debug, Clone)]
pub struct RelaxationBound {
    pub value: f64,
    /// Entrywise nonnegative leading left singular vector of the magnitude
    /// spectrum, used for the amplitude projection.
    pub u_opt: Vec<f64>,
}

/// Result of the full shift-estimation pipeline.
#[derive(Debug, Clone)]
pub struct ShiftEstimate {
    pub shifts: ShiftVector,
    /// Achieved spectral norm of the de-shifted matrix; never below the
    /// unshifted spectral norm.
    pub objective: f64,
    /// Relaxation bound for the instance.
    pub upper_bound: f64,
    /// One trace per executed stage, in execution order. A second
    /// local-stage trace is appended when the zero-shift fallback engages.
    pub traces: Vec<EstimatorTrace>,
}

/// Correlation energies `|F^-1(conj(u_hat) (.) A_hat)|^2` of a Fourier-domain
/// probe vector against every column.
pub fn correlation_matrix(
    u_hat: &[Complex64],
    a_hat: &ComplexMatrix,
) -> Result<CorrelationMatrix, Error> {
    let m = a_hat.rows();
    if u_hat.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: u_hat.len(),
        });
    }
    let plan = Fft::new(m);
    let mut data = vec![0.0; m * a_hat.cols()];
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    for k in 0..a_hat.cols() {
        correlate_column(u_hat, a_hat.col(k), &plan, &mut buf);
        for (out, z) in data[k * m..(k + 1) * m].iter_mut().zip(buf.iter()) {
            *out = z.norm_sqr();
        }
    }
    Ok(CorrelationMatrix {
        rows: m,
        cols: a_hat.cols(),
        data,
    })
}

fn correlate_column(
    u_hat: &[Complex64],
    col_hat: &[Complex64],
    plan: &Fft,
    buf: &mut [Complex64],
) {
    for ((b, u), a) in buf.iter_mut().zip(u_hat.iter()).zip(col_hat.iter()) {
        *b = u.conj() * a;
    }
    plan.inverse(buf);
}

/// Relaxation bound of a Fourier-domain matrix: spectral norm of its
/// entrywise absolute value, with the corresponding left singular vector.
pub fn upper_bound(a_hat: &ComplexMatrix) -> Result<RelaxationBound, Error> {
    let abs = a_hat.abs_entries();
    let outcome = power_iterate(&abs, None, 1e-10, 1000)?;
    let u_opt = outcome.triple.u.iter().map(|z| z.norm()).collect();
    Ok(RelaxationBound {
        value: outcome.triple.sigma,
        u_opt,
    })
}

/// Starting guess: for each column, the lag maximizing the correlation of
/// the column with the inverse transform of its magnitude spectrum. Ties go
/// to the smallest lag.
pub fn starting_guess(a_hat: &ComplexMatrix) -> Result<ShiftVector, Error> {
    if a_hat.frobenius_norm_sqr() == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    let m = a_hat.rows();
    let plan = Fft::new(m);
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    let mut shifts = Vec::with_capacity(a_hat.cols());
    for k in 0..a_hat.cols() {
        let col = a_hat.col(k);
        for (b, a) in buf.iter_mut().zip(col.iter()) {
            *b = Complex64::new(a.norm(), 0.0) * a;
        }
        plan.inverse(&mut buf);
        let mut best_s = 0;
        let mut best = f64::NEG_INFINITY;
        for (s, z) in buf.iter().enumerate() {
            let v = z.norm_sqr();
            if v > best {
                best = v;
                best_s = s;
            }
        }
        shifts.push(best_s as i64);
    }
    ShiftVector::new(&shifts, m)
}

/// Runs one improvement loop from the given shifts and returns the final
/// shifts with the stage trace. A capped run is reported through
/// `hit_cap` on the trace, with the current shifts still returned.
pub fn local_optimize(
    a: &ComplexMatrix,
    start: &ShiftVector,
    mode: OptimizeMode,
    cfg: &SolverConfig,
) -> Result<(ShiftVector, EstimatorTrace), Error> {
    let mut engine = Engine::new(a, start.clone(), cfg)?;
    let stage = match mode {
        OptimizeMode::Plain => Stage::LocalStage,
        OptimizeMode::AmplitudeProjected => Stage::GlobalStage,
    };
    let trace = engine.run_stage(mode, stage);
    Ok((engine.lambda, trace))
}

/// Full pipeline: starting guess, amplitude-projected stage, plain stage,
/// then a zero-shift fallback. If the pipeline lands below the unshifted
/// objective, the estimator restarts the plain loop from zero shifts so the
/// result is both at least the unshifted spectral norm and single-column
/// locally maximal.
pub fn estimate_shifts(a: &ComplexMatrix, cfg: &SolverConfig) -> Result<ShiftEstimate, Error> {
    let zero = ShiftVector::zero(a.cols(), a.rows());
    let mut engine = Engine::new(a, zero.clone(), cfg)?;
    let mut traces = Vec::with_capacity(4);

    let unshifted = engine.sigma;
    traces.push(engine.trace(Stage::Input, 0, false));

    if cfg.stages.start_guess {
        let guess = engine.starting_guess()?;
        engine.set_lambda(guess);
        engine.refresh_u();
    }
    traces.push(engine.trace(Stage::StartGuess, 0, false));

    if cfg.stages.amplitude {
        traces.push(engine.run_stage(OptimizeMode::AmplitudeProjected, Stage::GlobalStage));
    }
    if cfg.stages.plain {
        traces.push(engine.run_stage(OptimizeMode::Plain, Stage::LocalStage));
    }

    if engine.sigma < unshifted {
        engine.set_lambda(zero);
        engine.refresh_u();
        if cfg.stages.plain {
            traces.push(engine.run_stage(OptimizeMode::Plain, Stage::LocalStage));
        }
    }

    Ok(ShiftEstimate {
        objective: engine.sigma,
        upper_bound: engine.bound.value,
        shifts: engine.lambda,
        traces,
    })
}

/// Fourier-domain state shared by the estimator stages.
struct Engine {
    m: usize,
    n: usize,
    plan: Fft,
    /// exp(+2 pi i t / M); index arithmetic is reduced mod M so repeated
    /// phase updates stay exact.
    plus_roots: Vec<Complex64>,
    /// Transform of the input, never mutated.
    a_hat: ComplexMatrix,
    fro_sq: f64,
    bound: RelaxationBound,
    lambda: ShiftVector,
    /// Transform of the de-shifted matrix at the current shifts.
    w_hat: ComplexMatrix,
    u_hat: Vec<Complex64>,
    sigma: f64,
    power_tol: f64,
    power_cap: usize,
    move_cap: usize,
    scratch: Vec<Complex64>,
}

impl Engine {
    fn new(a: &ComplexMatrix, lambda: ShiftVector, cfg: &SolverConfig) -> Result<Self, Error> {
        if lambda.len() != a.cols() || lambda.modulus() != a.rows() {
            return Err(Error::DimensionMismatch {
                expected: a.cols(),
                found: lambda.len(),
            });
        }
        let fro_sq = a.frobenius_norm_sqr();
        if fro_sq == 0.0 {
            return Err(Error::ZeroMatrix);
        }
        let a_hat = fft_columns(a);
        let bound = upper_bound(&a_hat)?;
        let m = a.rows();
        let mut engine = Engine {
            m,
            n: a.cols(),
            plan: Fft::new(m),
            plus_roots: unit_roots(m, 1.0),
            w_hat: a_hat.clone(),
            a_hat,
            fro_sq,
            bound,
            lambda,
            u_hat: Vec::new(),
            sigma: 0.0,
            power_tol: cfg.power_tol,
            power_cap: cfg.power_cap,
            move_cap: cfg.local_move_cap_factor.max(1) * a.cols(),
            scratch: vec![Complex64::new(0.0, 0.0); m],
        };
        engine.rebuild_w();
        engine.refresh_u();
        Ok(engine)
    }

    /// De-shifting by lambda multiplies frequency j of column k by
    /// exp(+2 pi i j lambda_k / M).
    fn rebuild_w(&mut self) {
        self.w_hat = self.a_hat.clone();
        for k in 0..self.n {
            let s = self.lambda.get(k);
            if s == 0 {
                continue;
            }
            let col = self.w_hat.col_mut(k);
            for (j, entry) in col.iter_mut().enumerate() {
                *entry *= self.plus_roots[(j * s) % self.m];
            }
        }
    }

    fn set_lambda(&mut self, lambda: ShiftVector) {
        self.lambda = lambda;
        self.rebuild_w();
    }

    fn refresh_u(&mut self) {
        let warm = if self.u_hat.is_empty() {
            None
        } else {
            Some(self.u_hat.as_slice())
        };
        // Accept the best iterate on a cap hit; the stages only need a good
        // direction, and the final objective is re-evaluated the same way on
        // every path.
        let outcome = power_iterate(&self.w_hat, warm, self.power_tol, self.power_cap)
            .expect("w_hat has the norm of the nonzero input");
        self.u_hat = outcome.triple.u;
        self.sigma = outcome.triple.sigma;
    }

    fn trace(&self, stage: Stage, iterations: usize, hit_cap: bool) -> EstimatorTrace {
        EstimatorTrace {
            stage,
            objective: self.sigma,
            ratio: self.sigma / self.bound.value,
            iterations,
            hit_cap,
        }
    }

    /// Greedy single-column improvement loop. Every accepted move bumps one
    /// shift entry and phase-rotates one column of the workspace; the move
    /// is chosen as the entry maximizing the correlation gain over the
    /// current zero-lag baseline, with ties broken toward the smallest lag,
    /// then the smallest column.
    fn run_stage(&mut self, mode: OptimizeMode, stage: Stage) -> EstimatorTrace {
        let improve_tol = 1e-12 * self.fro_sq;
        let mut moves = 0;
        let mut hit_cap = false;
        loop {
            let probe;
            let u_used: &[Complex64] = match mode {
                OptimizeMode::Plain => &self.u_hat,
                OptimizeMode::AmplitudeProjected => {
                    probe = project_amplitude(&self.u_hat, &self.bound.u_opt);
                    &probe
                }
            };
            let Some((k, s, gain)) = best_move(
                u_used,
                &self.w_hat,
                &self.plan,
                &mut self.scratch,
            ) else {
                break;
            };
            if gain <= improve_tol {
                break;
            }
            if moves >= self.move_cap {
                hit_cap = true;
                break;
            }
            self.apply_move(k, s);
            moves += 1;
            self.refresh_u();
        }
        self.trace(stage, moves, hit_cap)
    }

    fn apply_move(&mut self, k: usize, s: usize) {
        self.lambda.bump(k, s);
        let col = self.w_hat.col_mut(k);
        for (j, entry) in col.iter_mut().enumerate() {
            *entry *= self.plus_roots[(j * s) % self.m];
        }
    }

    fn starting_guess(&self) -> Result<ShiftVector, Error> {
        starting_guess(&self.a_hat)
    }
}

/// Best single-column move: maximize `B[s][k] - B[0][k]` over columns and
/// lags. Returns None when the matrix has no columns.
fn best_move(
    u_hat: &[Complex64],
    w_hat: &ComplexMatrix,
    plan: &Fft,
    buf: &mut [Complex64],
) -> Option<(usize, usize, f64)> {
    let mut best: Option<(f64, usize, usize)> = None;
    for k in 0..w_hat.cols() {
        correlate_column(u_hat, w_hat.col(k), plan, buf);
        let baseline = buf[0].norm_sqr();
        let mut col_best_s = 0;
        let mut col_best = f64::NEG_INFINITY;
        for (s, z) in buf.iter().enumerate() {
            let v = z.norm_sqr() - baseline;
            if v > col_best {
                col_best = v;
                col_best_s = s;
            }
        }
        let candidate = (col_best, col_best_s, k);
        best = match best {
            None => Some(candidate),
            Some(current) => {
                // larger gain wins; ties prefer smaller lag, then column
                let better = candidate.0 > current.0
                    || (candidate.0 == current.0 && candidate.1 < current.1);
                Some(if better { candidate } else { current })
            }
        };
    }
    best.map(|(gain, s, k)| (k, s, gain))
}

/// Replaces the amplitude profile of the probe by the relaxed optimum while
/// keeping the phases; the phase of a zero entry is taken as 1.
fn project_amplitude(u_hat: &[Complex64], u_opt: &[f64]) -> Vec<Complex64> {
    u_hat
        .iter()
        .zip(u_opt.iter())
        .map(|(z, &amp)| {
            let n = z.norm();
            if n == 0.0 {
                Complex64::new(amp, 0.0)
            } else {
                z * (amp / n)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fft::ifft_columns;
    use crate::shift::{shift_columns, shift_vec};
    use alloc::vec;

    fn lcg(state: &mut u64) -> f64 {
        *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((*state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
    }

    fn random_matrix(m: usize, n: usize, seed: u64) -> ComplexMatrix {
        let mut s = seed.wrapping_add(0xabcdef);
        ComplexMatrix::from_fn(m, n, |_, _| Complex64::new(lcg(&mut s), lcg(&mut s))).unwrap()
    }

    fn random_unit(len: usize, seed: u64) -> Vec<Complex64> {
        let mut s = seed.wrapping_add(0x5555);
        let mut v: Vec<Complex64> = (0..len)
            .map(|_| Complex64::new(lcg(&mut s), lcg(&mut s)))
            .collect();
        let n = crate::matrix::vec_norm_sqr(&v).sqrt();
        for z in v.iter_mut() {
            *z /= n;
        }
        v
    }

    #[test]
    fn correlation_of_impulse_peaks_at_zero_lag() {
        let m = 4;
        let mut e1 = vec![Complex64::new(0.0, 0.0); m];
        e1[0] = Complex64::new(1.0, 0.0);
        let a = ComplexMatrix::new(m, 1, e1).unwrap();
        let a_hat = fft_columns(&a);
        let b = correlation_matrix(a_hat.col(0), &a_hat).unwrap();
        let c = b.get(0, 0);
        assert!(c > 0.0);
        for s in 1..m {
            assert!(b.get(s, 0) < 1e-12 * c);
        }
    }

    #[test]
    fn correlation_of_zero_matrix_is_zero() {
        let m = 4;
        let u = vec![Complex64::new(0.5, 0.0); m];
        let a = ComplexMatrix::zeros(m, 2).unwrap();
        let b = correlation_matrix(&u, &a).unwrap();
        for k in 0..2 {
            for s in 0..m {
                assert_eq!(b.get(s, k), 0.0);
            }
        }
    }

    #[test]
    fn correlation_matches_direct_cross_correlation() {
        let m = 8;
        let n = 3;
        let a = random_matrix(m, n, 31);
        let u = random_unit(m, 32);
        let a_hat = fft_columns(&a);
        let u_mat = ComplexMatrix::new(m, 1, u.clone()).unwrap();
        let u_hat = fft_columns(&u_mat);
        let b = correlation_matrix(u_hat.col(0), &a_hat).unwrap();
        // direct oracle: B[s][k] = |<u, back-shift(a^k, s)>|^2 / M
        for k in 0..n {
            for s in 0..m {
                let back = shift_vec(a.col(k), m - s); // back-shift by s
                let inner = crate::matrix::vec_dot(&u, &back);
                let want = inner.norm_sqr() / m as f64;
                let got = b.get(s, k);
                assert!(
                    (got - want).abs() <= 1e-10 * want.max(1e-30),
                    "mismatch at s={s} k={k}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn upper_bound_single_entry() {
        let mut a = ComplexMatrix::zeros(4, 3).unwrap();
        a.set(2, 1, Complex64::new(-3.0, 4.0));
        let b = upper_bound(&a).unwrap();
        assert!((b.value - 5.0).abs() < 1e-10);
    }

    #[test]
    fn upper_bound_rank_one() {
        let m = 6;
        let n = 4;
        let u = random_unit(m, 1);
        let v = random_unit(n, 2);
        let a_hat = ComplexMatrix::from_fn(m, n, |j, k| u[j] * v[k].conj()).unwrap();
        let b = upper_bound(&a_hat).unwrap();
        assert!((b.value - 1.0).abs() < 1e-9);
        for (amp, z) in b.u_opt.iter().zip(u.iter()) {
            assert!((amp - z.norm()).abs() < 1e-8);
        }
    }

    #[test]
    fn starting_guess_zero_for_impulse_outer_product() {
        let m = 8;
        let n = 4;
        let mut u = vec![Complex64::new(0.0, 0.0); m];
        u[0] = Complex64::new(1.0, 0.0);
        let v = random_unit(n, 9);
        let a = ComplexMatrix::from_fn(m, n, |j, k| u[j] * v[k].conj()).unwrap();
        let guess = starting_guess(&fft_columns(&a)).unwrap();
        assert_eq!(guess.entries(), &[0, 0, 0, 0]);
    }

    #[test]
    fn starting_guess_tie_break_on_zero_columns() {
        let m = 4;
        let mut a = ComplexMatrix::zeros(m, 3).unwrap();
        a.set(0, 1, Complex64::new(2.0, 0.0));
        let guess = starting_guess(&fft_columns(&a)).unwrap();
        // zero columns break the all-equal tie toward the smallest lag; the
        // nonzero column's peak already sits at row zero
        assert_eq!(guess.entries(), &[0, 0, 0]);

        // an off-origin impulse is aligned back to row zero
        let mut b = ComplexMatrix::zeros(m, 1).unwrap();
        b.set(1, 0, Complex64::new(2.0, 0.0));
        let guess = starting_guess(&fft_columns(&b)).unwrap();
        assert_eq!(guess.entries(), &[1]);
    }

    #[test]
    fn local_optimize_identical_columns_stops_immediately() {
        let m = 6;
        let n = 4;
        let u = random_unit(m, 3);
        let a = ComplexMatrix::from_fn(m, n, |j, _| u[j]).unwrap();
        let cfg = SolverConfig::default();
        let (shifts, trace) = local_optimize(
            &a,
            &ShiftVector::zero(n, m),
            OptimizeMode::Plain,
            &cfg,
        )
        .unwrap();
        assert_eq!(shifts.entries(), &[0, 0, 0, 0]);
        assert_eq!(trace.iterations, 0);
        assert!(!trace.hit_cap);
    }

    #[test]
    fn local_optimize_at_global_optimum_makes_no_move() {
        let m = 8;
        let n = 5;
        let u = random_unit(m, 4);
        let v = random_unit(n, 5);
        let rank1 = ComplexMatrix::from_fn(m, n, |j, k| u[j] * v[k].conj() * 2.0).unwrap();
        let truth = ShiftVector::new(&[1, 7, 3, 0, 5], m).unwrap();
        let a = shift_columns(&rank1, &truth).unwrap();
        let cfg = SolverConfig::default();
        let (shifts, trace) = local_optimize(&a, &truth, OptimizeMode::Plain, &cfg).unwrap();
        assert_eq!(shifts.entries(), truth.entries());
        assert_eq!(trace.iterations, 0);
        assert!((trace.objective - 2.0).abs() < 1e-8);
    }

    #[test]
    fn estimate_rank_one_reaches_relaxation_bound() {
        let m = 8;
        let n = 6;
        let u = random_unit(m, 6);
        let v = random_unit(n, 7);
        let a = ComplexMatrix::from_fn(m, n, |j, k| u[j] * v[k].conj()).unwrap();
        let est = estimate_shifts(&a, &SolverConfig::default()).unwrap();
        assert!((est.objective / est.upper_bound - 1.0).abs() < 1e-8);
        assert!(est.objective >= 1.0 - 1e-9);
    }

    #[test]
    fn estimate_never_below_unshifted_objective() {
        for seed in 0..10u64 {
            let a = random_matrix(5, 4, 100 + seed);
            let est = estimate_shifts(&a, &SolverConfig::default()).unwrap();
            let unshifted = crate::power::spectral_norm(&a).unwrap();
            assert!(
                est.objective >= unshifted - 1e-9 * a.frobenius_norm(),
                "seed {seed}: {} < {}",
                est.objective,
                unshifted
            );
            assert!(est.objective <= est.upper_bound + 1e-9 * a.frobenius_norm());
        }
    }

    #[test]
    fn amplitude_projection_keeps_phases() {
        let u = vec![
            Complex64::new(0.0, 2.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ];
        let amps = vec![3.0, 5.0, 7.0];
        let p = project_amplitude(&u, &amps);
        assert!((p[0] - Complex64::new(0.0, 3.0)).norm() < 1e-14);
        assert!((p[1] - Complex64::new(5.0, 0.0)).norm() < 1e-14);
        assert!((p[2] - Complex64::new(-7.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn ifft_of_fft_is_identity_for_probe_roundtrip() {
        // guards the Fourier conventions the estimator relies on
        let a = random_matrix(12, 2, 77);
        let round = ifft_columns(&fft_columns(&a));
        for (x, y) in round.data().iter().zip(a.data().iter()) {
            assert!((x - y).norm() < 1e-12);
        }
    }
}
