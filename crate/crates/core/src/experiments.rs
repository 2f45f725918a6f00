//! Numerical checks of the weighted Dirichlet-sum bound, the two kernel
//! bounds, and the sup-norm approximation bounds for matrix means.
//!
//! Bound expressions are evaluated with implicit constant 1; what is tested
//! is that error/bound ratios stay bounded as n grows.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conditions::{
    beta_head_constant, beta_rest_constant, check_row_stochastic, ConditionReport, UniformityPolicy,
};
use crate::error::{Error, Result};
use crate::fourier::{dirichlet_kernel, PeriodicFunction, TrigSeries};
use crate::moduli::{
    check_condition_13, check_condition_14, log_grid, MediateFunction, ModulusProfile, Trend,
};
use crate::summability::{
    cumulative_weights, kernel_row, riesz_matrix, sup_error, SummabilityMatrix, WeightSequence,
};

/// Octaves in the Weierstrass-type exemplars (frequencies 1, 2, …, 4096).
pub const WEIERSTRASS_OCTAVES: u32 = 12;

/// Rows below this many smallest n are left out of the log-log fit.
pub const FIT_SKIP: usize = 2;

/// Errors at or below this level count as exact reproduction.
pub const EXACT_ERROR: f64 = 1e-12;

/// A test function with its coefficient table and modulus of continuity.
#[derive(Debug, Clone)]
pub struct Exemplar {
    pub name: String,
    pub function: PeriodicFunction,
    pub series: TrigSeries,
    pub profile: ModulusProfile,
    /// Hölder exponent when the function is Lip(α).
    pub alpha: Option<f64>,
}

/// Names accepted by [`exemplar`].
pub const EXEMPLAR_NAMES: [&str; 6] = [
    "constant",
    "cos",
    "triangle",
    "weierstrass-0.25",
    "weierstrass-0.5",
    "weierstrass-0.75",
];

/// The exemplar corpus with coefficient tables of the given degree. Partial
/// sums S_k are exact for k ≤ degree.
pub fn exemplar_functions(degree: usize) -> Vec<Exemplar> {
    EXEMPLAR_NAMES
        .iter()
        .map(|n| exemplar(n, degree).expect("known exemplar"))
        .collect()
}

pub fn exemplar(name: &str, degree: usize) -> Result<Exemplar> {
    let ex = match name {
        "constant" => {
            let mut series = TrigSeries::zeros(degree);
            series.a0 = 2.0;
            Exemplar {
                name: name.into(),
                function: PeriodicFunction::constant(1.0),
                series,
                profile: ModulusProfile::Zero,
                alpha: None,
            }
        }
        "cos" => {
            let mut series = TrigSeries::zeros(degree);
            if degree > 0 {
                series.cosines[0] = 1.0;
            }
            let deltas = log_grid(1e-6, PI, 64);
            let values = deltas.iter().map(|d| 2.0 * (0.5 * d).sin()).collect();
            Exemplar {
                name: name.into(),
                function: PeriodicFunction::new("cos", f64::cos),
                series,
                profile: ModulusProfile::tabulated(deltas, values)?,
                alpha: Some(1.0),
            }
        }
        "triangle" => {
            let mut series = TrigSeries::zeros(degree);
            series.a0 = PI;
            for j in (1..=degree).step_by(2) {
                series.cosines[j - 1] = -4.0 / (PI * (j * j) as f64);
            }
            Exemplar {
                name: name.into(),
                function: PeriodicFunction::new("triangle", |x: f64| {
                    ((x + PI).rem_euclid(2.0 * PI) - PI).abs()
                }),
                series,
                profile: ModulusProfile::power(1.0)?,
                alpha: Some(1.0),
            }
        }
        _ => {
            let alpha: f64 = name
                .strip_prefix("weierstrass-")
                .and_then(|a| a.parse().ok())
                .filter(|a| *a > 0.0 && *a < 1.0)
                .ok_or_else(|| Error::Config(format!("unknown exemplar '{name}'")))?;
            let amps: Vec<(f64, f64)> = (0..=WEIERSTRASS_OCTAVES)
                .map(|k| (2f64.powi(k as i32), 2f64.powf(-(k as f64) * alpha)))
                .collect();
            let mut series = TrigSeries::zeros(degree);
            for &(freq, amp) in &amps {
                let j = freq as usize;
                if j <= degree {
                    series.cosines[j - 1] = amp;
                }
            }
            Exemplar {
                name: name.into(),
                function: PeriodicFunction::new(name.to_string(), move |x: f64| {
                    amps.iter().map(|&(freq, amp)| amp * (freq * x).cos()).sum()
                }),
                series,
                profile: ModulusProfile::power(alpha)?,
                alpha: Some(alpha),
            }
        }
    };
    Ok(ex)
}

/// Worst normalized value of a kernel bound over an index set and a t grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelBoundReport {
    pub bound: String,
    pub beta: f64,
    pub max_normalized: f64,
    /// (index, t) attaining `max_normalized`.
    pub worst_case: Option<(usize, f64)>,
    /// Per index: max over t of the normalized value.
    pub per_index: Vec<(usize, f64)>,
    pub doubling_ok: bool,
    /// Whether the matrix satisfies the row condition the bound assumes;
    /// None for bounds that assume nothing about a matrix.
    pub hypothesis_verified: Option<bool>,
    /// (index, t) pairs skipped because the normalizer vanished.
    pub flagged: Vec<(usize, f64)>,
}

/// Per index: (t, normalized value) pairs, None where the normalizer vanished.
type KernelSamples = Vec<(usize, Vec<(f64, Option<f64>)>)>;

fn finish_kernel_report(
    bound: &str,
    beta: f64,
    per_point: KernelSamples,
    hypothesis_verified: Option<bool>,
) -> KernelBoundReport {
    let mut per_index = Vec::new();
    let mut flagged = Vec::new();
    let mut worst = None;
    let mut max_normalized = 0.0;
    for (idx, values) in per_point {
        let mut row_max: f64 = 0.0;
        for (t, v) in values {
            match v {
                Some(v) => {
                    if v > row_max {
                        row_max = v;
                    }
                    if worst.is_none() || v > max_normalized {
                        max_normalized = v;
                        worst = Some((idx, t));
                    }
                }
                None => flagged.push((idx, t)),
            }
        }
        per_index.push((idx, row_max));
    }
    let doubling_ok = UniformityPolicy::default().doubling_ok(&per_index);
    KernelBoundReport {
        bound: bound.into(),
        beta,
        max_normalized,
        worst_case: worst,
        per_index,
        doubling_ok,
        hypothesis_verified,
        flagged,
    }
}

fn check_t_grid(t_grid: &[f64]) -> Result<()> {
    match t_grid.iter().find(|&&t| !(t > 0.0 && t <= PI)) {
        Some(t) => Err(Error::Domain(format!("t = {t} outside (0, π]"))),
        None => Ok(()),
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta.is_finite() && beta >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("beta must be ≥ 0, got {beta}")))
    }
}

/// Uniform grid of `count` points t_i = iπ/count, i = 1..=count.
pub fn uniform_t_grid(count: usize) -> Vec<f64> {
    (1..=count).map(|i| PI * i as f64 / count as f64).collect()
}

/// max over (m, t) of |Σ_{j≤m} (j+1)^β D_j(t)| · t² / (π² (m+1)^β).
pub fn lemma8_check(beta: f64, m_list: &[usize], t_grid: &[f64]) -> Result<KernelBoundReport> {
    check_beta(beta)?;
    check_t_grid(t_grid)?;
    let mut ms = m_list.to_vec();
    ms.sort_unstable();
    ms.dedup();
    let Some(&m_max) = ms.last() else {
        return Ok(finish_kernel_report("lemma8", beta, Vec::new(), None));
    };
    // columns[t][i] = normalized value at ms[i]
    let columns: Vec<Vec<f64>> = t_grid
        .par_iter()
        .map(|&t| {
            let mut out = Vec::with_capacity(ms.len());
            let mut next = 0;
            let mut sum = 0.0;
            for j in 0..=m_max {
                sum += ((j + 1) as f64).powf(beta) * dirichlet_kernel(j, t);
                if ms[next] == j {
                    out.push(sum.abs() * t * t / (PI * PI * ((j + 1) as f64).powf(beta)));
                    next += 1;
                    if next == ms.len() {
                        break;
                    }
                }
            }
            out
        })
        .collect();
    let per_point = ms
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            (
                m,
                t_grid
                    .iter()
                    .zip(&columns)
                    .map(|(&t, col)| (t, Some(col[i])))
                    .collect(),
            )
        })
        .collect();
    Ok(finish_kernel_report("lemma8", beta, per_point, None))
}

fn kernel_scan(
    a: &SummabilityMatrix,
    n_list: &[usize],
    t_grid: &[f64],
    normalized: impl Fn(&[f64], f64, f64) -> Option<f64> + Sync,
) -> Result<KernelSamples> {
    check_t_grid(t_grid)?;
    n_list
        .iter()
        .map(|&n| {
            let row = a.row(n)?;
            let values = t_grid
                .par_iter()
                .map(|&t| (t, normalized(row, t, kernel_row(row, t).abs())))
                .collect();
            Ok((n, values))
        })
        .collect()
}

/// max over (n, t) of |K_n(t)| · t / A_{n,τ} with τ = ⌊π/t⌋ and
/// A_{n,τ} = Σ_{r ≤ min(τ, n)} a_{n,r}.
pub fn lemma9_rest_check(
    a: &SummabilityMatrix,
    beta: f64,
    n_list: &[usize],
    t_grid: &[f64],
) -> Result<KernelBoundReport> {
    check_beta(beta)?;
    let hypothesis = beta_rest_constant(a, beta)?.holds_uniformly;
    let per_point = kernel_scan(a, n_list, t_grid, |row, t, k| {
        let tau = (PI / t).floor() as usize;
        let head = crate::summability::CumulativeWeights::from_row(row).head_sum(tau);
        (head > 0.0).then(|| k * t / head)
    })?;
    Ok(finish_kernel_report(
        "lemma9-rest",
        beta,
        per_point,
        Some(hypothesis),
    ))
}

/// max over (n, t) of |K_n(t)| · t² / a_{n,n}.
pub fn lemma9_head_check(
    a: &SummabilityMatrix,
    beta: f64,
    n_list: &[usize],
    t_grid: &[f64],
) -> Result<KernelBoundReport> {
    check_beta(beta)?;
    let hypothesis = beta_head_constant(a, beta)?.holds_uniformly;
    let per_point = kernel_scan(a, n_list, t_grid, |row, t, k| {
        let diag = row[row.len() - 1];
        (diag > 0.0).then(|| k * t * t / diag)
    })?;
    Ok(finish_kernel_report(
        "lemma9-head",
        beta,
        per_point,
        Some(hypothesis),
    ))
}

/// The sup-norm bounds. T11 has two forms, with and without ∫_0^t H = O(tH(t)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theorem {
    T10,
    T11a,
    T11b,
    T12,
    T13,
}

impl Theorem {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T10" => Ok(Self::T10),
            "T11" | "T11A" => Ok(Self::T11a),
            "T11B" => Ok(Self::T11b),
            "T12" => Ok(Self::T12),
            "T13" => Ok(Self::T13),
            _ => Err(Error::Config(format!(
                "unknown theorem id '{s}' (expected T10, T11a, T11b, T12, T13)"
            ))),
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            Self::T10 => "T10",
            Self::T11a => "T11a",
            Self::T11b => "T11b",
            Self::T12 => "T12",
            Self::T13 => "T13",
        }
    }

    /// True for the bounds assuming the head condition, false for the rest condition.
    pub fn uses_head_condition(&self) -> bool {
        matches!(self, Self::T10 | Self::T11a | Self::T11b)
    }

    /// Whether the bound assumes ∫_0^t H(u) du = O(t·H(t)).
    pub fn needs_condition_14(&self) -> bool {
        matches!(self, Self::T10 | Self::T11b | Self::T13)
    }
}

/// Bound expression of `theorem` at row n, implicit constant 1.
pub fn theorem_bound(
    theorem: Theorem,
    a: &SummabilityMatrix,
    w: &ModulusProfile,
    h: &MediateFunction,
    n: usize,
) -> Result<f64> {
    let row = a.row(n)?;
    let diag = row[n];
    let positive = |v: f64, what: &str| {
        if v > 0.0 {
            Ok(v)
        } else {
            Err(Error::Degenerate(format!("{what} = {v} at row {n}")))
        }
    };
    let step = PI / (n + 1) as f64;
    match theorem {
        Theorem::T10 => {
            let d = positive(diag, "a_{n,n}")?;
            Ok(d * h.eval(d)?)
        }
        Theorem::T11a => Ok(w.omega(step) + diag * h.eval(step)?),
        Theorem::T11b => Ok(positive(diag, "a_{n,n}")? * h.eval(step)?),
        Theorem::T12 => {
            let weights = cumulative_weights(a, n)?;
            let tail: f64 = (1..=n)
                .map(|v| w.omega(PI / v as f64) / v as f64 * weights.head_sum(v))
                .sum();
            Ok(w.omega(step) + tail)
        }
        Theorem::T13 => {
            let first = positive(row[0], "a_{n,0}")?;
            Ok(first * h.eval(first)?)
        }
    }
}

/// Outcome of checking a theorem's hypotheses on a concrete matrix and H.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub row_stochastic: bool,
    pub row_condition: ConditionReport,
    pub condition_13_max: f64,
    pub condition_13_bounded: bool,
    pub condition_14_max: Option<f64>,
    pub condition_14_bounded: Option<bool>,
    pub verified: bool,
}

/// Grid on which the two mediate-function conditions are probed, from 1 down toward zero.
pub fn hypothesis_probe_grid() -> Vec<f64> {
    log_grid(1e-6, 1.0, 25)
}

pub fn check_hypotheses(
    theorem: Theorem,
    a: &SummabilityMatrix,
    beta: f64,
    w: &ModulusProfile,
    h: &MediateFunction,
) -> Result<HypothesisReport> {
    let policy = UniformityPolicy::default();
    let row_stochastic = check_row_stochastic(a, 1e-10).holds_uniformly;
    let row_condition = if theorem.uses_head_condition() {
        beta_head_constant(a, beta)?
    } else {
        beta_rest_constant(a, beta)?
    };
    let grid = hypothesis_probe_grid();
    let c13 = check_condition_13(w, h, &grid)?;
    let c13_ok = c13.is_ok() && c13.max_ratio <= policy.max_constant && c13.trend == Trend::Bounded;
    let (c14_max, c14_ok) = if theorem.needs_condition_14() {
        let c14 = check_condition_14(h, &grid)?;
        let ok = c14.is_ok() && c14.max_ratio <= policy.max_constant && c14.trend == Trend::Bounded;
        (Some(c14.max_ratio), Some(ok))
    } else {
        (None, None)
    };
    let verified =
        row_stochastic && row_condition.holds_uniformly && c13_ok && c14_ok.unwrap_or(true);
    Ok(HypothesisReport {
        row_stochastic,
        row_condition,
        condition_13_max: c13.max_ratio,
        condition_13_bounded: c13_ok,
        condition_14_max: c14_max,
        condition_14_bounded: c14_ok,
        verified,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub n: usize,
    pub sup_error: f64,
    pub bound: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentMetadata {
    pub matrix: String,
    pub function: String,
    pub omega: String,
    pub mediate: String,
    pub beta: f64,
    pub grid_size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment_id: String,
    pub rows: Vec<ExperimentRow>,
    /// Least-squares slope of log sup_error against log n.
    pub fitted_slope: Option<f64>,
    pub slope_stderr: Option<f64>,
    pub metadata: ExperimentMetadata,
    pub hypotheses_verified: bool,
    pub flags: Vec<String>,
}

impl ExperimentReport {
    pub fn ratios(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.ratio).collect()
    }

    /// Largest ratio divided by the largest of the first `lead` ratios.
    pub fn ratio_growth(&self, lead: usize) -> f64 {
        let r = self.ratios();
        let head = r.iter().take(lead).copied().fold(0.0, f64::max);
        r.iter().copied().fold(0.0, f64::max) / head
    }
}

/// Ordinary least-squares line through (x, y).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// Standard error of the slope; None with fewer than three points.
    pub slope_stderr: Option<f64>,
}

pub fn least_squares(points: &[(f64, f64)]) -> Option<LineFit> {
    let k = points.len();
    if k < 2 {
        return None;
    }
    let kf = k as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / kf;
    let my = points.iter().map(|p| p.1).sum::<f64>() / kf;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let slope_stderr = (k > 2).then(|| {
        let ssr: f64 = points
            .iter()
            .map(|p| (p.1 - intercept - slope * p.0).powi(2))
            .sum();
        (ssr / (kf - 2.0) / sxx).sqrt()
    });
    Some(LineFit {
        slope,
        intercept,
        slope_stderr,
    })
}

/// Fits log error against log n, skipping the [`FIT_SKIP`] smallest n.
pub fn fit_rate(rows: &[ExperimentRow]) -> Option<LineFit> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .skip(FIT_SKIP)
        .filter(|r| r.sup_error > 0.0)
        .map(|r| ((r.n as f64).ln(), r.sup_error.ln()))
        .collect();
    least_squares(&pts)
}

fn check_n_list(n_list: &[usize]) -> Result<()> {
    if n_list.is_empty() {
        return Err(Error::Precondition("n list is empty".into()));
    }
    if n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Precondition(
            "n list must be strictly increasing".into(),
        ));
    }
    Ok(())
}

fn assemble(
    experiment_id: String,
    metadata: ExperimentMetadata,
    rows: Vec<ExperimentRow>,
    hypotheses_verified: bool,
) -> ExperimentReport {
    let mut flags = Vec::new();
    if !hypotheses_verified {
        flags.push("hypotheses-unverified".to_string());
    }
    let exact = rows.iter().all(|r| r.sup_error <= EXACT_ERROR);
    let fit = if exact {
        flags.push("exact".to_string());
        None
    } else {
        fit_rate(&rows)
    };
    ExperimentReport {
        experiment_id,
        rows,
        fitted_slope: fit.map(|f| f.slope),
        slope_stderr: fit.and_then(|f| f.slope_stderr),
        metadata,
        hypotheses_verified,
        flags,
    }
}

/// Everything a theorem experiment needs besides the n list.
#[derive(Debug, Clone)]
pub struct ExperimentSetup<'a> {
    pub theorem: Theorem,
    pub matrix: &'a SummabilityMatrix,
    pub function: &'a PeriodicFunction,
    pub series: &'a TrigSeries,
    pub omega: &'a ModulusProfile,
    pub mediate: &'a MediateFunction,
    pub beta: f64,
}

/// Sup-norm error against the theorem's bound for each n, plus a rate fit.
pub fn run_experiment(
    setup: &ExperimentSetup<'_>,
    n_list: &[usize],
    grid_size: usize,
) -> Result<ExperimentReport> {
    check_n_list(n_list)?;
    check_beta(setup.beta)?;
    let hyp = check_hypotheses(
        setup.theorem,
        setup.matrix,
        setup.beta,
        setup.omega,
        setup.mediate,
    )?;
    let rows = n_list
        .iter()
        .map(|&n| {
            let sup = sup_error(setup.matrix, setup.function, setup.series, n, grid_size)?;
            let bound = theorem_bound(setup.theorem, setup.matrix, setup.omega, setup.mediate, n)?;
            if bound.is_nan() || bound <= 0.0 {
                return Err(Error::Degenerate(format!(
                    "{} bound vanishes at n = {n}",
                    setup.theorem.id()
                )));
            }
            Ok(ExperimentRow {
                n,
                sup_error: sup,
                bound,
                ratio: sup / bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let metadata = ExperimentMetadata {
        matrix: setup.matrix.label().to_string(),
        function: setup.function.label().to_string(),
        omega: setup.omega.label(),
        mediate: setup.mediate.label(),
        beta: setup.beta,
        grid_size,
    };
    Ok(assemble(
        setup.theorem.id().to_string(),
        metadata,
        rows,
        hyp.verified,
    ))
}

/// Riesz-mean errors for a Lip(α) function against (p_n/P_n)^α, or
/// (p_n/P_n)·log(πP_n/p_n) when α = 1.
pub fn corollary43_table(
    p: &WeightSequence,
    alpha: f64,
    beta: f64,
    function: &PeriodicFunction,
    series: &TrigSeries,
    n_list: &[usize],
    grid_size: usize,
) -> Result<ExperimentReport> {
    check_n_list(n_list)?;
    check_beta(beta)?;
    let omega = ModulusProfile::power(alpha)?;
    let max_n = *n_list.last().expect("nonempty");
    let a = riesz_matrix(p, max_n)?;
    let hyp = beta_head_constant(&a, beta)?.holds_uniformly
        && check_row_stochastic(&a, 1e-10).holds_uniformly;
    let rows = n_list
        .iter()
        .map(|&n| {
            let q = p.p(n) / p.cumulative(n);
            if q <= 0.0 {
                return Err(Error::Degenerate(format!(
                    "p_{n} = 0 makes the bound vanish"
                )));
            }
            let bound = if alpha < 1.0 {
                q.powf(alpha)
            } else {
                q * (PI / q).ln()
            };
            let sup = sup_error(&a, function, series, n, grid_size)?;
            Ok(ExperimentRow {
                n,
                sup_error: sup,
                bound,
                ratio: sup / bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let metadata = ExperimentMetadata {
        matrix: a.label().to_string(),
        function: function.label().to_string(),
        omega: omega.label(),
        mediate: MediateFunction::LeadingTerm { alpha }.label(),
        beta,
        grid_size,
    };
    Ok(assemble("corollary43".into(), metadata, rows, hyp))
}

/// 16, 32, …, up to `max` inclusive.
pub fn doubling_range(start: usize, max: usize) -> Vec<usize> {
    std::iter::successors(Some(start), |&n| n.checked_mul(2))
        .take_while(|&n| n <= max)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::canonical_mediate;
    use crate::summability::{cesaro_matrix, norlund_matrix};

    #[test]
    fn exemplar_series_match_functions() {
        for ex in exemplar_functions(4096) {
            for &x in &[0.0, 0.3, 1.7, 4.0] {
                let err = (ex.series.eval(x) - ex.function.eval(x)).abs();
                // the triangle series is truncated, every other exemplar is a polynomial
                let tol = if ex.name == "triangle" { 1e-3 } else { 1e-12 };
                assert!(err < tol, "{} at {x}: {err}", ex.name);
            }
        }
        assert!(exemplar("weierstrass-1.5", 8).is_err());
        assert!(exemplar("sawtooth", 8).is_err());
    }

    #[test]
    fn weighted_kernel_sum_small_cases() {
        let r = lemma8_check(0.0, &[0], &[PI]).unwrap();
        assert!((r.max_normalized - 0.5).abs() < 1e-15);
        let r = lemma8_check(1.0, &[0, 5, 40], &uniform_t_grid(256)).unwrap();
        assert!(r.max_normalized <= 1.0 + 1e-9);
        assert_eq!(r.per_index.len(), 3);
        assert!(lemma8_check(-0.5, &[1], &[1.0]).is_err());
        assert!(lemma8_check(0.0, &[1], &[0.0]).is_err());
    }

    #[test]
    fn kernel_bounds_single_row() {
        let a = SummabilityMatrix::from_rows("one", vec![vec![1.0]]).unwrap();
        let grid = uniform_t_grid(64);
        let rest = lemma9_rest_check(&a, 0.0, &[0], &grid).unwrap();
        assert!((rest.max_normalized - PI / 2.0).abs() < 1e-12);
        let head = lemma9_head_check(&a, 0.0, &[0], &grid).unwrap();
        assert!((head.max_normalized - PI * PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn theorem_bounds_for_cesaro() {
        let a = cesaro_matrix(64);
        let w = ModulusProfile::power(0.5).unwrap();
        let h = canonical_mediate(&w);
        for n in [1usize, 8, 64] {
            let d = 1.0 / (n + 1) as f64;
            let t10 = theorem_bound(Theorem::T10, &a, &w, &h, n).unwrap();
            assert!((t10 - d * 2.0 * (d.powf(-0.5) - PI.powf(-0.5))).abs() < 1e-14);
            let t12 = theorem_bound(Theorem::T12, &a, &w, &h, n).unwrap();
            let expected: f64 = (1..=n)
                .map(|v| (PI / v as f64).sqrt() / v as f64 * ((v + 1).min(n + 1) as f64) * d)
                .sum::<f64>()
                + (PI * d).sqrt();
            assert!((t12 - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_bounds() {
        let rows = (0..4)
            .map(|n| {
                let mut r = vec![0.0; n + 1];
                r[n] = 1.0;
                r
            })
            .collect();
        let id = SummabilityMatrix::from_rows("identity", rows).unwrap();
        let w = ModulusProfile::power(1.0).unwrap();
        let h = canonical_mediate(&w);
        assert!(matches!(
            theorem_bound(Theorem::T13, &id, &w, &h, 3),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn least_squares_recovers_line() {
        let pts: Vec<(f64, f64)> = (0..10).map(|i| (i as f64, 3.0 - 0.5 * i as f64)).collect();
        let fit = least_squares(&pts).unwrap();
        assert!((fit.slope + 0.5).abs() < 1e-14 && (fit.intercept - 3.0).abs() < 1e-13);
        assert!(fit.slope_stderr.unwrap() < 1e-12);
        assert!(least_squares(&pts[..1]).is_none());
    }

    #[test]
    fn constant_function_is_exact() {
        let ex = exemplar("constant", 64).unwrap();
        let a = norlund_matrix(&WeightSequence::linear(65), 64).unwrap();
        let w = ModulusProfile::power(1.0).unwrap();
        let h = canonical_mediate(&w);
        let setup = ExperimentSetup {
            theorem: Theorem::T12,
            matrix: &a,
            function: &ex.function,
            series: &ex.series,
            omega: &w,
            mediate: &h,
            beta: 0.0,
        };
        let r = run_experiment(&setup, &[4, 8, 16, 32, 64], 256).unwrap();
        assert!(r.rows.iter().all(|row| row.sup_error <= 1e-12));
        assert!(r.flags.contains(&"exact".to_string()));
        assert!(r.fitted_slope.is_none());
        assert!(run_experiment(&setup, &[8, 4], 256).is_err());
    }

    #[test]
    fn doubling_range_is_inclusive() {
        assert_eq!(doubling_range(16, 256), vec![16, 32, 64, 128, 256]);
        assert_eq!(doubling_range(3, 20), vec![3, 6, 12]);
    }
}
