//! Column-wise unitary discrete Fourier transforms.
//!
//! Both directions carry the `1/sqrt(M)` factor, so the transform is unitary:
//! Frobenius norm and all singular values are preserved. Power-of-two lengths
//! use an iterative radix-2 kernel; every other length goes through the
//! Bluestein chirp transform, which pads to a power of two internally and
//! keeps the O(M log M) bound for arbitrary (including prime) M.

use crate::matrix::ComplexMatrix;
use crate::Complex64;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
#[allow(unused_imports)] // inherent f64 methods take over with std; libm backs no_std
use num_traits::Float;

/// Precomputed transform plan for one length.
#[derive(Debug, Clone)]
pub struct Fft {
    len: usize,
    scale: f64,
    kind: Kind,
}

#[derive(Debug, Clone)]
enum Kind {
    Identity,
    Radix2(Radix2),
    Bluestein {
        inner: Radix2,
        padded: usize,
        /// chirp[t] = exp(-i pi t^2 / len)
        chirp: Vec<Complex64>,
        /// Forward FFT (unscaled) of the circularly embedded chirp kernel.
        kernel_hat: Vec<Complex64>,
    },
}

#[derive(Debug, Clone)]
struct Radix2 {
    len: usize,
    /// exp(-2 pi i k / len) for k < len/2.
    twiddles: Vec<Complex64>,
    /// Bit-reversal permutation.
    perm: Vec<u32>,
}

impl Radix2 {
    fn new(len: usize) -> Self {
        debug_assert!(len.is_power_of_two() && len >= 2);
        let twiddles = (0..len / 2)
            .map(|k| Complex64::from_polar(1.0, -2.0 * PI * k as f64 / len as f64))
            .collect();
        let bits = len.trailing_zeros();
        let perm = (0..len as u32)
            .map(|i| i.reverse_bits() >> (32 - bits))
            .collect();
        Radix2 { len, twiddles, perm }
    }

    /// Unscaled DFT with kernel exp(-2 pi i jt / len).
    fn forward(&self, buf: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.len);
        for (i, &j) in self.perm.iter().enumerate() {
            let j = j as usize;
            if i < j {
                buf.swap(i, j);
            }
        }
        let n = self.len;
        let mut span = 2;
        while span <= n {
            let half = span / 2;
            let step = n / span;
            let mut start = 0;
            while start < n {
                for i in 0..half {
                    let w = self.twiddles[i * step];
                    let a = buf[start + i];
                    let b = buf[start + i + half] * w;
                    buf[start + i] = a + b;
                    buf[start + i + half] = a - b;
                }
                start += span;
            }
            span *= 2;
        }
    }
}

impl Fft {
    /// Builds a plan for transforms of the given length (>= 1).
    pub fn new(len: usize) -> Self {
        let scale = 1.0 / (len as f64).sqrt();
        let kind = if len <= 1 {
            Kind::Identity
        } else if len.is_power_of_two() {
            Kind::Radix2(Radix2::new(len))
        } else {
            let padded = (2 * len - 1).next_power_of_two();
            let inner = Radix2::new(padded);
            // Reduce t^2 mod 2*len before taking the angle so the chirp is
            // exact for any t (t^2 stays well below 2^53 for supported sizes).
            let two_len = 2 * len as u64;
            let chirp: Vec<Complex64> = (0..len as u64)
                .map(|t| {
                    let q = (t * t) % two_len;
                    Complex64::from_polar(1.0, -PI * q as f64 / len as f64)
                })
                .collect();
            let mut kernel = vec![Complex64::new(0.0, 0.0); padded];
            kernel[0] = chirp[0].conj();
            for t in 1..len {
                let v = chirp[t].conj();
                kernel[t] = v;
                kernel[padded - t] = v;
            }
            inner.forward(&mut kernel);
            Kind::Bluestein {
                inner,
                padded,
                chirp,
                kernel_hat: kernel,
            }
        };
        Fft { len, scale, kind }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn raw_forward(&self, buf: &mut [Complex64]) {
        match &self.kind {
            Kind::Identity => {}
            Kind::Radix2(plan) => plan.forward(buf),
            Kind::Bluestein {
                inner,
                padded,
                chirp,
                kernel_hat,
            } => {
                let n = self.len;
                let mut work = vec![Complex64::new(0.0, 0.0); *padded];
                for t in 0..n {
                    work[t] = buf[t] * chirp[t];
                }
                inner.forward(&mut work);
                for (w, k) in work.iter_mut().zip(kernel_hat.iter()) {
                    *w *= k;
                }
                // Unscaled inverse of the padded transform via conjugation.
                for w in work.iter_mut() {
                    *w = w.conj();
                }
                inner.forward(&mut work);
                let inv_p = 1.0 / *padded as f64;
                for (j, out) in buf.iter_mut().enumerate() {
                    *out = work[j].conj() * inv_p * chirp[j];
                }
            }
        }
    }

    /// Unitary forward transform, in place.
    pub fn forward(&self, buf: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.len);
        self.raw_forward(buf);
        for z in buf.iter_mut() {
            *z *= self.scale;
        }
    }

    /// Unitary inverse transform, in place.
    pub fn inverse(&self, buf: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.len);
        for z in buf.iter_mut() {
            *z = z.conj();
        }
        self.raw_forward(buf);
        for z in buf.iter_mut() {
            *z = z.conj() * self.scale;
        }
    }
}

/// Unitary DFT of every column.
pub fn fft_columns(a: &ComplexMatrix) -> ComplexMatrix {
    let plan = Fft::new(a.rows());
    transform_columns(a, |col| plan.forward(col))
}

/// Unitary inverse DFT of every column; `ifft_columns(fft_columns(a)) == a`
/// up to rounding.
pub fn ifft_columns(a: &ComplexMatrix) -> ComplexMatrix {
    let plan = Fft::new(a.rows());
    transform_columns(a, |col| plan.inverse(col))
}

fn transform_columns(
    a: &ComplexMatrix,
    mut f: impl FnMut(&mut [Complex64]),
) -> ComplexMatrix {
    let mut out = a.clone();
    for k in 0..out.cols() {
        f(out.col_mut(k));
    }
    out
}
