//! Shifted rank-1 approximation of complex matrices.
//!
//! A shifted rank-1 matrix is an outer product `u v*` whose k-th column has
//! been circularly rotated by an integer shift `lambda_k`. Sums of such terms
//! model data in which one waveform appears in every column at a different
//! offset (seismic traces, ultrasonic scans, frames-as-columns video). This
//! crate provides:
//!
//! - the circular column-shift operators and their Fourier-domain phase
//!   representation ([`shift`]),
//! - column-wise unitary FFTs for arbitrary lengths ([`fft`]),
//! - a warm-started power iteration for leading singular triples ([`power`]),
//! - the shift estimator that approximately maximizes the spectral norm of
//!   the de-shifted matrix ([`estimator`]),
//! - the greedy decomposition loop and component canonicalization
//!   ([`decompose`]),
//! - fast matrix-vector products with decompositions via FFT convolution
//!   ([`matvec`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature enables native float intrinsics.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod decompose;
pub mod error;
pub mod estimator;
pub mod fft;
pub mod matrix;
pub mod matvec;
pub mod power;
pub mod shift;

pub use decompose::{
    canonicalize_component, decompose, decompose_traced, extract_component, reconstruct,
    Component, Decomposition, SolverConfig, StageToggles, TracedDecomposition,
};
pub use error::Error;
pub use estimator::{
    correlation_matrix, estimate_shifts, local_optimize, starting_guess, upper_bound,
    CorrelationMatrix, EstimatorTrace, OptimizeMode, RelaxationBound, ShiftEstimate, Stage,
};
pub use fft::{fft_columns, ifft_columns, Fft};
pub use matrix::ComplexMatrix;
pub use matvec::{component_matvec, component_rmatvec, decomposition_matvec, SparseActivation};
pub use power::{leading_singular_triple, spectral_norm, SingularTriple};
pub use shift::{
    apply_shift_fourier, compose_shifts, inverse_shift, phase_matrix, shift_columns, shift_vec,
    PhaseMatrix, ShiftVector,
};

/// Complex scalar used throughout the crate.
pub type Complex64 = num_complex::Complex<f64>;
