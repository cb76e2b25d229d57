//! Exact integer convolution on top of a real-input f64 FFT.
//!
//! Results are rounded to integers only when an a-priori error bound and a
//! per-entry check both confirm the rounding is safe; otherwise the caller
//! falls back to the schoolbook product.

use std::cell::RefCell;
use std::sync::Arc;

use realfft::num_complex::Complex64;
use realfft::{ComplexToReal, RealFftPlanner, RealToComplex};

use crate::error::{Error, Result};

/// Below this many terms on the short side the schoolbook product is faster.
const NAIVE_CUTOFF: usize = 32;
/// Largest a-priori rounding error accepted before falling back.
const MAX_ROUNDING_ERROR: f64 = 0.125;
/// Largest observed distance to the nearest integer accepted per entry.
const MAX_FRACTION: f64 = 0.25;

thread_local! {
    static PLANNER: RefCell<RealFftPlanner<f64>> = RefCell::new(RealFftPlanner::new());
}

/// Forward/inverse real transforms of one power-of-two size, with reusable
/// scratch space.
pub(crate) struct RealTransform {
    size: usize,
    forward: Arc<dyn RealToComplex<f64>>,
    inverse: Arc<dyn ComplexToReal<f64>>,
    input: Vec<f64>,
    scratch: Vec<Complex64>,
}

impl RealTransform {
    /// A transform large enough for a linear convolution of `out_len` terms.
    pub(crate) fn for_output(out_len: usize) -> Self {
        let size = out_len.next_power_of_two().max(2);
        let (forward, inverse) = PLANNER.with(|p| {
            let mut p = p.borrow_mut();
            (p.plan_fft_forward(size), p.plan_fft_inverse(size))
        });
        let scratch_len = forward.get_scratch_len().max(inverse.get_scratch_len());
        RealTransform {
            size,
            input: forward.make_input_vec(),
            scratch: vec![Complex64::default(); scratch_len],
            forward,
            inverse,
        }
    }

    /// Length of a spectrum.
    pub(crate) fn spectrum_len(&self) -> usize {
        self.size / 2 + 1
    }

    /// Spectrum of `values`, zero-padded to the transform size.
    pub(crate) fn spectrum(&mut self, values: impl IntoIterator<Item = f64>) -> Vec<Complex64> {
        self.input.iter_mut().for_each(|v| *v = 0.0);
        for (slot, v) in self.input.iter_mut().zip(values) {
            *slot = v;
        }
        let mut output = self.forward.make_output_vec();
        self.forward
            .process_with_scratch(&mut self.input, &mut output, &mut self.scratch)
            .expect("buffer sizes come from the plan");
        output
    }

    /// Spectrum of the 0/1 sequence with ones at `positions`.
    pub(crate) fn indicator_spectrum(&mut self, positions: impl IntoIterator<Item = usize>) -> Vec<Complex64> {
        self.input.iter_mut().for_each(|v| *v = 0.0);
        for i in positions {
            self.input[i] = 1.0;
        }
        let mut output = self.forward.make_output_vec();
        self.forward
            .process_with_scratch(&mut self.input, &mut output, &mut self.scratch)
            .expect("buffer sizes come from the plan");
        output
    }

    /// Inverse transform, normalized, truncated to `out_len` entries.
    pub(crate) fn invert(&mut self, mut spectrum: Vec<Complex64>, out_len: usize) -> Vec<f64> {
        // Products of real-signal spectra are real at DC and Nyquist up to
        // rounding; the inverse plan insists on exact zeros there.
        spectrum[0].im = 0.0;
        if let Some(last) = spectrum.last_mut() {
            last.im = 0.0;
        }
        let mut output = self.inverse.make_output_vec();
        self.inverse
            .process_with_scratch(&mut spectrum, &mut output, &mut self.scratch)
            .expect("buffer sizes come from the plan");
        let scale = 1.0 / self.size as f64;
        output.truncate(out_len);
        output.iter_mut().for_each(|v| *v *= scale);
        output
    }

    /// A-priori bound on the rounding error of a convolution whose inputs have
    /// the given combined squared 2-norm product.
    pub(crate) fn error_bound(&self, norm_product: f64) -> f64 {
        let log = (self.size as f64).log2().max(1.0);
        8.0 * log * f64::EPSILON * norm_product
    }
}

/// Rounds every entry, or `None` if some entry is not within `MAX_FRACTION`
/// of an integer.
pub(crate) fn round_checked(values: &[f64]) -> Option<Vec<i64>> {
    values
        .iter()
        .map(|&v| {
            let r = v.round();
            ((v - r).abs() <= MAX_FRACTION).then_some(r as i64)
        })
        .collect()
}

fn norm(v: &[i64]) -> f64 {
    v.iter().map(|&x| (x as f64) * (x as f64)).sum::<f64>().sqrt()
}

/// Schoolbook convolution with 128-bit accumulation.
pub fn conv_naive(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut acc = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += x as i128 * y as i128;
        }
    }
    acc.into_iter()
        .map(|v| i64::try_from(v).map_err(|_| Error::PrecisionBound))
        .collect()
}

/// Full linear convolution `c[t] = sum_i a[i] * b[t - i]`, exact.
pub fn conv_int(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    const EXACT_F64: i64 = 1 << 52;
    let fits = |v: &[i64]| v.iter().all(|x| x.unsigned_abs() < EXACT_F64 as u64);
    if a.len().min(b.len()) <= NAIVE_CUTOFF || !fits(a) || !fits(b) {
        return conv_naive(a, b);
    }
    let out_len = a.len() + b.len() - 1;
    let mut plan = RealTransform::for_output(out_len);
    if plan.error_bound(norm(a) * norm(b)) > MAX_ROUNDING_ERROR {
        return conv_naive(a, b);
    }
    let fa = plan.spectrum(a.iter().map(|&x| x as f64));
    let fb = plan.spectrum(b.iter().map(|&x| x as f64));
    let product = fa.iter().zip(&fb).map(|(x, y)| x * y).collect();
    match round_checked(&plan.invert(product, out_len)) {
        Some(c) => Ok(c),
        None => conv_naive(a, b),
    }
}
