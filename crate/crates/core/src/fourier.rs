//! Periodic functions, their trigonometric coefficients, partial sums and
//! the Dirichlet kernel.
//!
//! Series follow the convention f(x) ≈ a0/2 + Σ_{j≥1} (a_j cos jx + b_j sin jx),
//! so the zeroth partial sum is a0/2.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::sync::Arc;

use rustfft::{num_complex::Complex, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Below this |t| the Dirichlet kernel is summed as 1/2 + Σ cos jt.
pub const KERNEL_SMALL_T: f64 = 1e-3;

/// A 2π-periodic real function together with a display label.
#[derive(Clone)]
pub struct PeriodicFunction {
    label: String,
    evaluator: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl PeriodicFunction {
    pub fn new<F>(label: impl Into<String>, evaluator: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            evaluator: Arc::new(evaluator),
        }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(format!("constant({c})"), move |_| c)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        (self.evaluator)(x)
    }
}

impl fmt::Debug for PeriodicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PeriodicFunction")
            .field("label", &self.label)
            .finish()
    }
}

/// Finite Fourier coefficient table of degree `degree()`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrigSeries {
    pub a0: f64,
    pub cosines: Vec<f64>,
    pub sines: Vec<f64>,
}

impl TrigSeries {
    pub fn new(a0: f64, cosines: Vec<f64>, sines: Vec<f64>) -> Result<Self> {
        if cosines.len() != sines.len() {
            return Err(Error::Precondition(format!(
                "cosine and sine tables differ in length ({} vs {})",
                cosines.len(),
                sines.len()
            )));
        }
        Ok(Self { a0, cosines, sines })
    }

    /// Series of degree `degree` with every coefficient zero.
    pub fn zeros(degree: usize) -> Self {
        Self {
            a0: 0.0,
            cosines: vec![0.0; degree],
            sines: vec![0.0; degree],
        }
    }

    pub fn degree(&self) -> usize {
        self.cosines.len()
    }

    /// Coefficients (a_j, b_j) for 1 ≤ j ≤ degree.
    pub fn coefficient(&self, j: usize) -> (f64, f64) {
        (self.cosines[j - 1], self.sines[j - 1])
    }

    /// S_k(f; x).
    pub fn partial_sum(&self, k: usize, x: f64) -> Result<f64> {
        if k > self.degree() {
            return Err(Error::OutOfRange(format!(
                "partial sum of order {k} requested from a series of degree {}",
                self.degree()
            )));
        }
        let mut acc = 0.5 * self.a0;
        for (j, (c, s)) in Harmonics::new(x).take(k).enumerate() {
            acc += self.cosines[j] * c + self.sines[j] * s;
        }
        Ok(acc)
    }

    /// Evaluates the full series, i.e. S_N(x).
    pub fn eval(&self, x: f64) -> f64 {
        self.partial_sum(self.degree(), x)
            .expect("full degree is in range")
    }
}

/// Iterator over (cos jx, sin jx) for j = 1, 2, … using the rotation
/// recurrence, reseeded from libm every 32 steps to bound drift.
#[derive(Debug, Clone)]
pub struct Harmonics {
    x: f64,
    j: usize,
    cos_x: f64,
    sin_x: f64,
    cos_j: f64,
    sin_j: f64,
}

impl Harmonics {
    pub fn new(x: f64) -> Self {
        let (s, c) = x.sin_cos();
        Self {
            x,
            j: 0,
            cos_x: c,
            sin_x: s,
            cos_j: 1.0,
            sin_j: 0.0,
        }
    }
}

impl Iterator for Harmonics {
    type Item = (f64, f64);

    fn next(&mut self) -> Option<(f64, f64)> {
        self.j += 1;
        if self.j.is_multiple_of(32) {
            let (s, c) = (self.j as f64 * self.x).sin_cos();
            self.cos_j = c;
            self.sin_j = s;
        } else {
            let c = self.cos_j * self.cos_x - self.sin_j * self.sin_x;
            let s = self.sin_j * self.cos_x + self.cos_j * self.sin_x;
            self.cos_j = c;
            self.sin_j = s;
        }
        Some((self.cos_j, self.sin_j))
    }
}

/// Coefficients of degree `degree` from `samples` uniform samples on [0, 2π).
///
/// Requires `samples ≥ 4·degree + 4`. Exact (to rounding) for trigonometric
/// polynomials of degree ≤ degree.
pub fn fourier_coefficients(
    f: &PeriodicFunction,
    degree: usize,
    samples: usize,
) -> Result<TrigSeries> {
    if degree == 0 {
        return Err(Error::Precondition("degree must be positive".into()));
    }
    if samples < 4 * degree + 4 {
        return Err(Error::Precondition(format!(
            "{samples} samples are too few for degree {degree}; need at least {}",
            4 * degree + 4
        )));
    }
    let mut buf: Vec<Complex<f64>> = (0..samples)
        .map(|m| Complex::new(f.eval(TAU * m as f64 / samples as f64), 0.0))
        .collect();
    FftPlanner::new()
        .plan_fft_forward(samples)
        .process(&mut buf);
    let scale = 2.0 / samples as f64;
    let a0 = scale * buf[0].re;
    let cosines = (1..=degree).map(|j| scale * buf[j].re).collect();
    let sines = (1..=degree).map(|j| -scale * buf[j].im).collect();
    Ok(TrigSeries { a0, cosines, sines })
}

/// S_k(f; x) for the series `s`.
pub fn partial_sum(s: &TrigSeries, k: usize, x: f64) -> Result<f64> {
    s.partial_sum(k, x)
}

/// Dirichlet kernel D_k(t) = sin((k + 1/2)t) / (2 sin(t/2)), extended
/// continuously by D_k(0) = k + 1/2 and evaluated for any real t.
pub fn dirichlet_kernel(k: usize, t: f64) -> f64 {
    let t = reduce_to_half_period(t).abs();
    if t < KERNEL_SMALL_T {
        dirichlet_cosine_sum(k, t)
    } else {
        ((k as f64 + 0.5) * t).sin() / (2.0 * (0.5 * t).sin())
    }
}

/// The cosine-sum form 1/2 + Σ_{j=1}^{k} cos jt.
pub fn dirichlet_cosine_sum(k: usize, t: f64) -> f64 {
    0.5 + (1..=k).map(|j| (j as f64 * t).cos()).sum::<f64>()
}

/// Maps t into [-π, π).
pub fn reduce_to_half_period(t: f64) -> f64 {
    if (-PI..PI).contains(&t) {
        t
    } else {
        (t + PI).rem_euclid(TAU) - PI
    }
}

/// ψ_x(t) = ½ (f(x + t) + f(x − t) − 2 f(x)).
pub fn psi(f: &PeriodicFunction, x: f64, t: f64) -> f64 {
    0.5 * (f.eval(x + t) + f.eval(x - t) - 2.0 * f.eval(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn coefficients_of_cosine() {
        let f = PeriodicFunction::new("cos", f64::cos);
        let s = fourier_coefficients(&f, 4, 64).unwrap();
        assert!(close(s.a0, 0.0, 1e-12));
        assert!(close(s.cosines[0], 1.0, 1e-12));
        for j in 1..4 {
            assert!(close(s.cosines[j], 0.0, 1e-12));
        }
        assert!(s.sines.iter().all(|b| b.abs() < 1e-12));
    }

    #[test]
    fn coefficients_of_constant() {
        let s = fourier_coefficients(&PeriodicFunction::constant(3.5), 2, 16).unwrap();
        assert!(close(s.a0, 7.0, 1e-12));
        assert!(s.cosines.iter().chain(&s.sines).all(|c| c.abs() < 1e-12));
    }

    #[test]
    fn too_few_samples_is_rejected() {
        let f = PeriodicFunction::new("sin", f64::sin);
        assert!(matches!(
            fourier_coefficients(&f, 4, 19),
            Err(Error::Precondition(_))
        ));
        assert!(fourier_coefficients(&f, 4, 20).is_ok());
        assert!(fourier_coefficients(&f, 0, 64).is_err());
    }

    #[test]
    fn partial_sum_conventions() {
        let s = TrigSeries::new(0.0, vec![1.0, 0.0], vec![0.0, 0.0]).unwrap();
        assert_eq!(s.partial_sum(0, 1.234).unwrap(), 0.0);
        assert!(close(s.partial_sum(1, 0.0).unwrap(), 1.0, 1e-15));
        assert!(close(s.partial_sum(2, 0.0).unwrap(), 1.0, 1e-15));
        assert!(matches!(s.partial_sum(3, 0.0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn triangle_partial_sum_at_zero() {
        // π/2 − (4/π) cos x, first two terms of the triangle wave
        let s = TrigSeries::new(PI, vec![-4.0 / PI], vec![0.0]).unwrap();
        assert!(close(
            s.partial_sum(1, 0.0).unwrap(),
            PI / 2.0 - 4.0 / PI,
            1e-15
        ));
    }

    #[test]
    fn dirichlet_special_values() {
        for &t in &[1e-9, 1e-4, 0.3, 2.0, PI] {
            assert!(close(dirichlet_kernel(0, t), 0.5, 1e-15));
        }
        assert!(close(dirichlet_kernel(3, 0.0), 3.5, 1e-15));
        assert!(close(dirichlet_kernel(3, 1e-12), 3.5, 1e-12));
        assert!(close(dirichlet_kernel(5, PI / 2.0), 0.5, 1e-14));
    }

    #[test]
    fn dirichlet_is_even_and_periodic() {
        for &t in &[0.1, 1.0, 3.0] {
            let d = dirichlet_kernel(7, t);
            assert!(close(dirichlet_kernel(7, -t), d, 1e-13));
            assert!(close(dirichlet_kernel(7, t + TAU), d, 1e-12));
        }
    }

    #[test]
    fn dirichlet_forms_agree_across_threshold() {
        for k in [1usize, 10, 100, 512] {
            for &t in &[0.999e-3, 1.0e-3, 1.001e-3] {
                let a = dirichlet_kernel(k, t);
                let b = dirichlet_cosine_sum(k, t);
                assert!(close(a, b, 1e-10), "k={k} t={t}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn psi_examples() {
        let c = PeriodicFunction::constant(2.0);
        assert_eq!(psi(&c, 0.3, 1.1), 0.0);
        let cos = PeriodicFunction::new("cos", f64::cos);
        let sin = PeriodicFunction::new("sin", f64::sin);
        for &t in &[0.0, 0.2, 1.5, 3.0] {
            assert!(close(psi(&cos, 0.0, t), t.cos() - 1.0, 1e-15));
            assert!(close(psi(&sin, PI / 2.0, t), t.cos() - 1.0, 1e-15));
        }
    }

    #[test]
    fn harmonics_track_libm() {
        let x = 0.7312;
        for (j, (c, s)) in Harmonics::new(x).take(4096).enumerate() {
            let arg = (j + 1) as f64 * x;
            assert!(
                close(c, arg.cos(), 1e-12) && close(s, arg.sin(), 1e-12),
                "j={}",
                j + 1
            );
        }
    }
}
