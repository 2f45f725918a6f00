//! Lower-triangular summability matrices, the A-transform of partial sums,
//! the summability kernel K_n(t) and sup-norm error measurement.

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::{dirichlet_kernel, Harmonics, PeriodicFunction, TrigSeries, KERNEL_SMALL_T};

/// Default number of grid points for [`sup_error`].
pub const DEFAULT_SUP_GRID: usize = 4096;

/// Rows a_{n,0..=n} of a lower-triangular matrix. Entries with k > n are zero.
///
/// Construction only checks the triangular shape; sign and normalisation are
/// the business of the condition checkers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummabilityMatrix {
    label: String,
    rows: Vec<Vec<f64>>,
}

impl SummabilityMatrix {
    pub fn from_rows(label: impl Into<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Parse {
                    row: n,
                    message: format!(
                        "row {n} must contain {} entries, found {}",
                        n + 1,
                        row.len()
                    ),
                });
            }
            if let Some(k) = row.iter().position(|v| !v.is_finite()) {
                return Err(Error::Parse {
                    row: n,
                    message: format!("entry {k} is not finite"),
                });
            }
        }
        Ok(Self {
            label: label.into(),
            rows,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Index of the last stored row.
    pub fn max_row(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> Result<&[f64]> {
        self.rows.get(n).map(Vec::as_slice).ok_or_else(|| {
            Error::OutOfRange(format!(
                "row {n} requested, matrix has {} rows",
                self.rows.len()
            ))
        })
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.rows.iter().map(Vec::as_slice)
    }

    /// a_{n,k}, zero above the diagonal.
    pub fn entry(&self, n: usize, k: usize) -> f64 {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .copied()
            .unwrap_or(0.0)
    }

    pub fn has_negative_entries(&self) -> bool {
        self.rows.iter().flatten().any(|&v| v < 0.0)
    }

    /// Matrix with every entry mapped through `f(k, a_{n,k})`.
    pub fn map_entries(&self, label: impl Into<String>, f: impl Fn(usize, f64) -> f64) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().enumerate().map(|(k, &v)| f(k, v)).collect())
            .collect();
        Self {
            label: label.into(),
            rows,
        }
    }
}

/// Nonnegative weights p_0, p_1, … with cumulative sums P_n = Σ_{k≤n} p_k > 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightSequence {
    label: String,
    p: Vec<f64>,
    cumulative: Vec<f64>,
}

impl WeightSequence {
    pub fn new(label: impl Into<String>, p: Vec<f64>) -> Result<Self> {
        if let Some(k) = p.iter().position(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::Domain(format!(
                "weight p_{k} = {} is not a nonnegative number",
                p[k]
            )));
        }
        let mut cumulative = Vec::with_capacity(p.len());
        let mut acc = 0.0;
        for (n, &v) in p.iter().enumerate() {
            acc += v;
            if acc <= 0.0 {
                return Err(Error::Domain(format!("cumulative weight P_{n} is zero")));
            }
            cumulative.push(acc);
        }
        Ok(Self {
            label: label.into(),
            p,
            cumulative,
        })
    }

    /// p_k = 1.
    pub fn ones(len: usize) -> Self {
        Self::new("ones", vec![1.0; len]).expect("unit weights are valid")
    }

    /// p_k = k + 1.
    pub fn linear(len: usize) -> Self {
        Self::new("linear", (0..len).map(|k| (k + 1) as f64).collect())
            .expect("linear weights are valid")
    }

    /// p_k = r^k.
    pub fn geometric(r: f64, len: usize) -> Result<Self> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::Domain(format!(
                "geometric ratio must be positive, got {r}"
            )));
        }
        Self::new(
            format!("geometric:{r}"),
            (0..len).map(|k| r.powi(k as i32)).collect(),
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn p(&self, k: usize) -> f64 {
        self.p[k]
    }

    pub fn cumulative(&self, n: usize) -> f64 {
        self.cumulative[n]
    }

    fn require(&self, max_row: usize) -> Result<()> {
        if self.p.len() <= max_row {
            return Err(Error::OutOfRange(format!(
                "{} weights cannot fill {} rows",
                self.p.len(),
                max_row + 1
            )));
        }
        Ok(())
    }
}

/// (C,1) means: a_{n,k} = 1/(n+1).
pub fn cesaro_matrix(max_row: usize) -> SummabilityMatrix {
    let rows = (0..=max_row)
        .map(|n| vec![1.0 / (n + 1) as f64; n + 1])
        .collect();
    SummabilityMatrix {
        label: "cesaro".into(),
        rows,
    }
}

/// Nörlund means: a_{n,k} = p_{n−k} / P_n.
pub fn norlund_matrix(p: &WeightSequence, max_row: usize) -> Result<SummabilityMatrix> {
    p.require(max_row)?;
    let rows = (0..=max_row)
        .map(|n| {
            let total = p.cumulative(n);
            (0..=n).map(|k| p.p(n - k) / total).collect()
        })
        .collect();
    Ok(SummabilityMatrix {
        label: format!("norlund:{}", p.label()),
        rows,
    })
}

/// Riesz means: a_{n,k} = p_k / P_n.
pub fn riesz_matrix(p: &WeightSequence, max_row: usize) -> Result<SummabilityMatrix> {
    p.require(max_row)?;
    let rows = (0..=max_row)
        .map(|n| {
            let total = p.cumulative(n);
            (0..=n).map(|k| p.p(k) / total).collect()
        })
        .collect();
    Ok(SummabilityMatrix {
        label: format!("riesz:{}", p.label()),
        rows,
    })
}

/// Tail sums λ_{n,j} = Σ_{k=j}^{n} a_{n,k} and head sums Σ_{r=0}^{m} a_{n,r} of one row.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulativeWeights {
    lambda: Vec<f64>,
    head: Vec<f64>,
}

impl CumulativeWeights {
    pub fn from_row(row: &[f64]) -> Self {
        let mut lambda = vec![0.0; row.len()];
        let mut acc = 0.0;
        for k in (0..row.len()).rev() {
            acc += row[k];
            lambda[k] = acc;
        }
        let head = row
            .iter()
            .scan(0.0, |s, &v| {
                *s += v;
                Some(*s)
            })
            .collect();
        Self { lambda, head }
    }

    /// λ_{n,j}; zero for j > n.
    pub fn lambda(&self, j: usize) -> f64 {
        self.lambda.get(j).copied().unwrap_or(0.0)
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambda
    }

    /// Σ_{r=0}^{min(m, n)} a_{n,r}.
    pub fn head_sum(&self, m: usize) -> f64 {
        match self.head.len() {
            0 => 0.0,
            len => self.head[m.min(len - 1)],
        }
    }
}

pub fn cumulative_weights(a: &SummabilityMatrix, n: usize) -> Result<CumulativeWeights> {
    Ok(CumulativeWeights::from_row(a.row(n)?))
}

fn check_dims(a: &SummabilityMatrix, s: &TrigSeries, n: usize) -> Result<()> {
    if n > a.max_row() || a.num_rows() == 0 {
        return Err(Error::OutOfRange(format!(
            "row {n} exceeds the matrix's last row {}",
            a.max_row()
        )));
    }
    if n > s.degree() {
        return Err(Error::OutOfRange(format!(
            "row {n} exceeds the series degree {}",
            s.degree()
        )));
    }
    Ok(())
}

/// T_{n,A}(f; x) in coefficient space:
/// (a0/2) λ_{n,0} + Σ_{j=1}^{n} λ_{n,j} (a_j cos jx + b_j sin jx).
pub fn transform(a: &SummabilityMatrix, s: &TrigSeries, n: usize, x: f64) -> Result<f64> {
    check_dims(a, s, n)?;
    let weights = cumulative_weights(a, n)?;
    Ok(transform_with(&weights, s, x))
}

/// Coefficient-space transform with precomputed tail sums.
pub fn transform_with(weights: &CumulativeWeights, s: &TrigSeries, x: f64) -> f64 {
    let lambda = weights.lambdas();
    let mut acc = 0.5 * s.a0 * weights.lambda(0);
    for (j, (c, sn)) in Harmonics::new(x)
        .take(lambda.len().saturating_sub(1))
        .enumerate()
    {
        acc += lambda[j + 1] * (s.cosines[j] * c + s.sines[j] * sn);
    }
    acc
}

/// T_{n,A}(f; x) as the literal weighted sum Σ_k a_{n,k} S_k(f; x).
pub fn transform_direct(a: &SummabilityMatrix, s: &TrigSeries, n: usize, x: f64) -> Result<f64> {
    check_dims(a, s, n)?;
    let row = a.row(n)?;
    let mut partial = 0.5 * s.a0;
    let mut acc = row[0] * partial;
    for (k, &weight) in row.iter().enumerate().skip(1) {
        let (ak, bk) = s.coefficient(k);
        let arg = k as f64 * x;
        partial += ak * arg.cos() + bk * arg.sin();
        acc += weight * partial;
    }
    Ok(acc)
}

/// K_n(t) = Σ_k a_{n,k} D_k(t), signed.
pub fn kernel(a: &SummabilityMatrix, n: usize, t: f64) -> Result<f64> {
    let row = a.row(n)?;
    Ok(kernel_row(row, t))
}

/// K_n(t) for an explicit row. Small |t| uses the tail-sum form
/// λ_0/2 + Σ_j λ_j cos jt, which avoids the 0/0 of the sine quotient.
pub fn kernel_row(row: &[f64], t: f64) -> f64 {
    let t = crate::fourier::reduce_to_half_period(t).abs();
    if t < KERNEL_SMALL_T {
        let w = CumulativeWeights::from_row(row);
        let lam = w.lambdas();
        let mut acc = 0.5 * lam[0];
        for (j, &l) in lam.iter().enumerate().skip(1) {
            acc += l * (j as f64 * t).cos();
        }
        acc
    } else {
        let num: f64 = row
            .iter()
            .enumerate()
            .map(|(k, &a)| a * ((k as f64 + 0.5) * t).sin())
            .sum();
        num / (2.0 * (0.5 * t).sin())
    }
}

/// Σ_k a_{n,k} D_k(t) evaluated term by term; slow reference for tests.
pub fn kernel_reference(row: &[f64], t: f64) -> f64 {
    row.iter()
        .enumerate()
        .map(|(k, &a)| a * dirichlet_kernel(k, t))
        .sum()
}

/// Estimate of ‖T_{n,A}(f) − f‖_∞.
///
/// Scans `grid_size` uniform points of [0, 2π), then refines the best grid
/// point by golden-section search on its two neighbouring cells. The result
/// never exceeds the true sup-norm.
pub fn sup_error(
    a: &SummabilityMatrix,
    f: &PeriodicFunction,
    s: &TrigSeries,
    n: usize,
    grid_size: usize,
) -> Result<f64> {
    if grid_size < 256 {
        return Err(Error::Precondition(format!(
            "grid_size must be at least 256, got {grid_size}"
        )));
    }
    check_dims(a, s, n)?;
    let weights = cumulative_weights(a, n)?;
    let err = |x: f64| (transform_with(&weights, s, x) - f.eval(x)).abs();
    let h = TAU / grid_size as f64;
    let (best_i, best) = (0..grid_size)
        .into_par_iter()
        .map(|i| (i, err(h * i as f64)))
        .reduce(
            || (0, f64::NEG_INFINITY),
            |p, q| {
                if q.1 > p.1 || (q.1 == p.1 && q.0 < p.0) {
                    q
                } else {
                    p
                }
            },
        );
    let centre = h * best_i as f64;
    let refined = golden_section_max(&err, centre - h, centre + h, 60);
    Ok(best.max(refined))
}

/// Maximum of `g` on [lo, hi] by golden-section search (assumes local unimodality).
pub fn golden_section_max<G: Fn(f64) -> f64>(g: &G, lo: f64, hi: f64, iterations: usize) -> f64 {
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (lo, hi);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut gc, mut gd) = (g(c), g(d));
    let mut best = gc.max(gd);
    for _ in 0..iterations {
        if gc > gd {
            b = d;
            d = c;
            gd = gc;
            c = b - ratio * (b - a);
            gc = g(c);
            best = best.max(gc);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + ratio * (b - a);
            gd = g(d);
            best = best.max(gd);
        }
    }
    best
}
