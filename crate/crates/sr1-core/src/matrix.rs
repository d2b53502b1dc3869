//! Dense complex matrices with column-major storage.
//!
//! Everything in this crate operates column by column (shifts, FFTs,
//! correlations), so columns are kept contiguous.

use crate::error::Error;
use crate::Complex64;
use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)] // inherent f64 methods take over with std; libm backs no_std
use num_traits::Float;

/// Dense `M x N` complex matrix, column-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Creates a matrix from column-major entries. Dimensions must be
    /// positive, the buffer length must be `rows * cols` and all entries
    /// finite.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimensions { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::DataLength {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if !data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimensions { rows, cols });
        }
        Ok(Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        })
    }

    /// Builds a matrix columnwise from a function of (row, col).
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Complex64,
    ) -> Result<Self, Error> {
        let mut m = Self::zeros(rows, cols)?;
        for k in 0..cols {
            let col = m.col_mut(k);
            for (j, entry) in col.iter_mut().enumerate() {
                *entry = f(j, k);
            }
        }
        Ok(m)
    }

    /// Builds a matrix from real entries (imaginary parts zero).
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self, Error> {
        let complex: Vec<Complex64> = data.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::new(rows, cols, complex)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Column-major entry access.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[col * self.rows + row]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[col * self.rows + row] = value;
    }

    /// Contiguous k-th column.
    #[inline]
    pub fn col(&self, k: usize) -> &[Complex64] {
        &self.data[k * self.rows..(k + 1) * self.rows]
    }

    #[inline]
    pub fn col_mut(&mut self, k: usize) -> &mut [Complex64] {
        &mut self.data[k * self.rows..(k + 1) * self.rows]
    }

    /// Full column-major entry slice.
    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm_sqr().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.frobenius_norm_sqr() == 0.0
    }

    /// Entrywise absolute value, promoted back to a complex matrix.
    pub fn abs_entries(&self) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|z| Complex64::new(z.norm(), 0.0))
                .collect(),
        }
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// In-place subtraction `self -= other`.
    pub fn sub_assign(&mut self, other: &ComplexMatrix) -> Result<(), Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a -= *b;
        }
        Ok(())
    }

    /// `self * v` for a length-N vector.
    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for (k, &vk) in v.iter().enumerate() {
            let col = self.col(k);
            for (o, &c) in out.iter_mut().zip(col.iter()) {
                *o += c * vk;
            }
        }
        Ok(out)
    }

    /// `self* * u` (conjugate transpose times vector) for a length-M vector.
    pub fn conj_transpose_mul_vec(&self, u: &[Complex64]) -> Result<Vec<Complex64>, Error> {
        if u.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: u.len(),
            });
        }
        let mut out = Vec::with_capacity(self.cols);
        for k in 0..self.cols {
            out.push(vec_dot(self.col(k), u));
        }
        Ok(out)
    }
}

/// Inner product `<a, b> = a* b`, conjugate-linear in the first argument.
pub(crate) fn vec_dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x.conj() * y;
    }
    acc
}

pub(crate) fn vec_norm_sqr(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum()
}

pub(crate) fn vec_norm(a: &[Complex64]) -> f64 {
    vec_norm_sqr(a).sqrt()
}
