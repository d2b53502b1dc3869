//! Circular column-shift operators and their Fourier-domain representation.
//!
//! The forward shift moves row j to row j+1 (wrapping at M), one shift amount
//! per column. Shifting is a pure index permutation, so it is exact and
//! preserves the Frobenius norm. In the Fourier domain a shift by `s` becomes
//! multiplication of the transformed column by `exp(-2 pi i j s / M)` over
//! frequency index j.

use crate::error::Error;
use crate::matrix::ComplexMatrix;
use crate::Complex64;
use alloc::vec::Vec;
use core::f64::consts::PI;

/// One circular shift per column, stored reduced modulo the row count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftVector {
    shifts: Vec<usize>,
    modulus: usize,
}

impl ShiftVector {
    /// Builds a shift vector from arbitrary integers, reducing each entry
    /// into `{0, ..., modulus - 1}` eagerly.
    pub fn new(shifts: &[i64], modulus: usize) -> Result<Self, Error> {
        if modulus == 0 {
            return Err(Error::InvalidDimensions { rows: 0, cols: shifts.len() });
        }
        let m = modulus as i64;
        Ok(Self {
            shifts: shifts.iter().map(|&s| s.rem_euclid(m) as usize).collect(),
            modulus,
        })
    }

    /// All-zero shifts for `len` columns.
    pub fn zero(len: usize, modulus: usize) -> Self {
        Self {
            shifts: alloc::vec![0; len],
            modulus,
        }
    }

    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    /// The row count M that entries are reduced against.
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    #[inline]
    pub fn get(&self, k: usize) -> usize {
        self.shifts[k]
    }

    pub fn entries(&self) -> &[usize] {
        &self.shifts
    }

    /// Adds `delta` to entry `k`, reducing modulo M.
    pub fn bump(&mut self, k: usize, delta: usize) {
        self.shifts[k] = (self.shifts[k] + delta) % self.modulus;
    }

    /// Subtracts a constant from every entry modulo M (the global-shift
    /// ambiguity used during canonicalization).
    pub fn offset(&self, amount: usize) -> Self {
        let m = self.modulus;
        Self {
            shifts: self
                .shifts
                .iter()
                .map(|&s| (s + m - amount % m) % m)
                .collect(),
            modulus: m,
        }
    }

    /// Number of distinct shift values present.
    pub fn distinct_count(&self) -> usize {
        let mut seen: Vec<usize> = self.shifts.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Applies the shift operator: column k of the result is column k of `a`
/// circularly forward-shifted by `shifts[k]`. Exact (no arithmetic).
pub fn shift_columns(a: &ComplexMatrix, shifts: &ShiftVector) -> Result<ComplexMatrix, Error> {
    check_compatible(a, shifts)?;
    let m = a.rows();
    let mut out = a.clone();
    for k in 0..a.cols() {
        let s = shifts.get(k);
        if s == 0 {
            continue;
        }
        let src = a.col(k);
        let dst = out.col_mut(k);
        // entry j of the output comes from entry (j - s) mod M of the input
        dst[s..m].copy_from_slice(&src[..m - s]);
        dst[..s].copy_from_slice(&src[m - s..]);
    }
    Ok(out)
}

/// Circularly forward-shifts a single vector by `s`.
pub fn shift_vec(u: &[Complex64], s: usize) -> Vec<Complex64> {
    let m = u.len();
    let s = s % m.max(1);
    let mut out = Vec::with_capacity(m);
    out.extend_from_slice(&u[m - s..]);
    out.extend_from_slice(&u[..m - s]);
    out
}

/// The shifts undoing `shifts`: entrywise negation modulo M.
pub fn inverse_shift(shifts: &ShiftVector) -> ShiftVector {
    let m = shifts.modulus();
    ShiftVector {
        shifts: shifts.entries().iter().map(|&s| (m - s) % m).collect(),
        modulus: m,
    }
}

/// Entrywise sum modulo M; applying `rhs` then `lhs` equals applying the
/// composition.
pub fn compose_shifts(lhs: &ShiftVector, rhs: &ShiftVector) -> Result<ShiftVector, Error> {
    if lhs.len() != rhs.len() {
        return Err(Error::DimensionMismatch {
            expected: lhs.len(),
            found: rhs.len(),
        });
    }
    if lhs.modulus() != rhs.modulus() {
        return Err(Error::DimensionMismatch {
            expected: lhs.modulus(),
            found: rhs.modulus(),
        });
    }
    let m = lhs.modulus();
    Ok(ShiftVector {
        shifts: lhs
            .entries()
            .iter()
            .zip(rhs.entries().iter())
            .map(|(&a, &b)| (a + b) % m)
            .collect(),
        modulus: m,
    })
}

/// Unit-modulus matrix with entries `exp(-2 pi i j s_k / M)` for frequency
/// index j in `0..M`.
#[derive(Debug, Clone)]
pub struct PhaseMatrix(ComplexMatrix);

impl PhaseMatrix {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }
}

/// Phase matrix implementing the shifts as a Hadamard product in the
/// Fourier domain.
pub fn phase_matrix(shifts: &ShiftVector) -> PhaseMatrix {
    let m = shifts.modulus();
    let roots = unit_roots(m, -1.0);
    let mut out = ComplexMatrix::zeros(m, shifts.len()).expect("positive dims");
    for k in 0..shifts.len() {
        let s = shifts.get(k);
        let col = out.col_mut(k);
        for (j, entry) in col.iter_mut().enumerate() {
            *entry = roots[(j * s) % m];
        }
    }
    PhaseMatrix(out)
}

/// Shifts a matrix that is already in the Fourier domain:
/// `fft_columns(shift_columns(a, s)) == apply_shift_fourier(fft_columns(a), s)`.
pub fn apply_shift_fourier(
    a_hat: &ComplexMatrix,
    shifts: &ShiftVector,
) -> Result<ComplexMatrix, Error> {
    check_compatible(a_hat, shifts)?;
    let m = a_hat.rows();
    let roots = unit_roots(m, -1.0);
    let mut out = a_hat.clone();
    for k in 0..out.cols() {
        let s = shifts.get(k);
        if s == 0 {
            continue;
        }
        let col = out.col_mut(k);
        for (j, entry) in col.iter_mut().enumerate() {
            *entry *= roots[(j * s) % m];
        }
    }
    Ok(out)
}

/// Table of `exp(sign * 2 pi i t / m)` for t in `0..m`. Index arithmetic is
/// done modulo m by the callers, so repeated phase updates stay exact.
pub(crate) fn unit_roots(m: usize, sign: f64) -> Vec<Complex64> {
    (0..m)
        .map(|t| Complex64::from_polar(1.0, sign * 2.0 * PI * t as f64 / m as f64))
        .collect()
}

fn check_compatible(a: &ComplexMatrix, shifts: &ShiftVector) -> Result<(), Error> {
    if shifts.len() != a.cols() {
        return Err(Error::DimensionMismatch {
            expected: a.cols(),
            found: shifts.len(),
        });
    }
    if shifts.modulus() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: shifts.modulus(),
        });
    }
    Ok(())
}
