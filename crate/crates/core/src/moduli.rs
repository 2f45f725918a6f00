//! Modulus of continuity, mediate functions H(u), and the integral-ratio
//! checks tying them together.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::PeriodicFunction;
use crate::quadrature;

/// Lower cut-off for integrals that start at zero; the piece below it is
/// integrated in closed form from the profile's small-scale power law.
pub const INTEGRAL_FLOOR: f64 = 1e-8;

/// Relative tolerance of the adaptive quadrature backing H and the ratios.
pub const QUAD_REL_TOL: f64 = 1e-10;

const GEOMETRIC_RATIO: f64 = 2.0;

/// Number of shifts h ∈ [−δ, δ] tried by [`modulus_of_continuity`].
pub const MODULUS_SHIFTS: usize = 33;

/// sup over |h| ≤ δ of |f(x + h) − f(x)|, estimated on `grid_size` uniform
/// points x ∈ [0, 2π) and 33 equispaced shifts including ±δ.
pub fn modulus_of_continuity(f: &PeriodicFunction, delta: f64, grid_size: usize) -> Result<f64> {
    if grid_size < 1024 {
        return Err(Error::Precondition(format!(
            "grid_size must be at least 1024, got {grid_size}"
        )));
    }
    if !(delta > 0.0 && delta <= PI) {
        return Err(Error::Domain(format!(
            "delta must lie in (0, π], got {delta}"
        )));
    }
    let step = TAU / grid_size as f64;
    let half = (MODULUS_SHIFTS / 2) as f64;
    let best = (0..grid_size)
        .into_par_iter()
        .map(|i| {
            let x = step * i as f64;
            let fx = f.eval(x);
            (0..MODULUS_SHIFTS)
                .map(|j| {
                    let h = delta * (j as f64 - half) / half;
                    (f.eval(x + h) - fx).abs()
                })
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    Ok(best)
}

/// Smallest and largest value of ω(δ)/δ^α over `deltas`.
pub fn holder_band(
    f: &PeriodicFunction,
    alpha: f64,
    deltas: &[f64],
    grid_size: usize,
) -> Result<(f64, f64)> {
    let mut lo = f64::INFINITY;
    let mut hi: f64 = 0.0;
    for &d in deltas {
        let r = modulus_of_continuity(f, d, grid_size)? / d.powf(alpha);
        lo = lo.min(r);
        hi = hi.max(r);
    }
    Ok((lo, hi))
}

/// A modulus of continuity ω(δ), either δ^α or tabulated on increasing δ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModulusProfile {
    Zero,
    ClosedFormAlpha { alpha: f64 },
    Tabulated { deltas: Vec<f64>, values: Vec<f64> },
}

impl ModulusProfile {
    pub fn power(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Domain(format!(
                "alpha must lie in (0, 1], got {alpha}"
            )));
        }
        Ok(Self::ClosedFormAlpha { alpha })
    }

    /// Tabulated profile; values are replaced by their running maximum so
    /// the table is nondecreasing.
    pub fn tabulated(deltas: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if deltas.len() < 2 || deltas.len() != values.len() {
            return Err(Error::Precondition(
                "a tabulated modulus needs at least two (δ, ω) pairs".into(),
            ));
        }
        if deltas[0] <= 0.0 || deltas.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Precondition(
                "table abscissae must be positive and increasing".into(),
            ));
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::Precondition(
                "table values must be finite and nonnegative".into(),
            ));
        }
        let values = values
            .iter()
            .scan(0.0f64, |m, &v| {
                *m = m.max(v);
                Some(*m)
            })
            .collect();
        Ok(Self::Tabulated { deltas, values })
    }

    /// Samples ω(δ, f) on `count` log-spaced points of [delta_min, π].
    pub fn from_function(
        f: &PeriodicFunction,
        delta_min: f64,
        count: usize,
        grid_size: usize,
    ) -> Result<Self> {
        let deltas = log_grid(delta_min, PI, count);
        let values = deltas
            .iter()
            .map(|&d| modulus_of_continuity(f, d, grid_size))
            .collect::<Result<Vec<_>>>()?;
        Self::tabulated(deltas, values)
    }

    pub fn label(&self) -> String {
        match self {
            Self::Zero => "zero".into(),
            Self::ClosedFormAlpha { alpha } => format!("delta^{alpha}"),
            Self::Tabulated { deltas, .. } => {
                format!("tabulated[{} points from {:.3e}]", deltas.len(), deltas[0])
            }
        }
    }

    pub fn omega(&self, delta: f64) -> f64 {
        match self {
            Self::Zero => 0.0,
            Self::ClosedFormAlpha { alpha } => delta.powf(*alpha),
            Self::Tabulated { deltas, values } => {
                if delta <= deltas[0] {
                    let (c, s) = self.small_scale_law();
                    return c * delta.powf(s);
                }
                let last = deltas.len() - 1;
                if delta >= deltas[last] {
                    return values[last];
                }
                let i = deltas.partition_point(|&d| d <= delta) - 1;
                let (d0, d1, v0, v1) = (deltas[i], deltas[i + 1], values[i], values[i + 1]);
                if v0 > 0.0 && v1 > 0.0 {
                    let s = (v1 / v0).ln() / (d1 / d0).ln();
                    v0 * (delta / d0).powf(s)
                } else {
                    v0 + (v1 - v0) * (delta - d0) / (d1 - d0)
                }
            }
        }
    }

    /// (c, s) with ω(t) ≈ c·t^s near zero. For tables the exponent comes
    /// from the first segment, clamped to [0, 1].
    pub fn small_scale_law(&self) -> (f64, f64) {
        match self {
            Self::Zero => (0.0, 1.0),
            Self::ClosedFormAlpha { alpha } => (1.0, *alpha),
            Self::Tabulated { deltas, values } => {
                let (d0, d1, v0, v1) = (deltas[0], deltas[1], values[0], values[1]);
                if v0 <= 0.0 {
                    return (0.0, 1.0);
                }
                let s = ((v1 / v0).ln() / (d1 / d0).ln()).clamp(0.0, 1.0);
                (v0 / d0.powf(s), s)
            }
        }
    }

    fn nodes(&self) -> &[f64] {
        match self {
            Self::Tabulated { deltas, .. } => deltas,
            _ => &[],
        }
    }

    /// ∫_a^b t^{−p} ω(t) dt in closed form when the profile allows it.
    pub fn closed_moment(&self, p: i32, a: f64, b: f64) -> Option<f64> {
        match self {
            Self::Zero => Some(0.0),
            Self::ClosedFormAlpha { alpha } => Some(power_moment(1.0, *alpha, p, a, b)),
            Self::Tabulated { .. } => None,
        }
    }

    /// ∫_a^b t^{−p} ω(t) dt, closed form when available, quadrature otherwise.
    pub fn moment(&self, p: i32, a: f64, b: f64) -> f64 {
        self.closed_moment(p, a, b)
            .unwrap_or_else(|| self.moment_quadrature(p, a, b))
    }

    /// ∫_a^b t^{−p} ω(t) dt by quadrature. Below [`INTEGRAL_FLOOR`] the
    /// small-scale law is integrated exactly; above it panels are graded
    /// geometrically and split at table nodes.
    pub fn moment_quadrature(&self, p: i32, a: f64, b: f64) -> f64 {
        if b <= a {
            return 0.0;
        }
        let mut total = 0.0;
        let mut lo = a;
        if a < INTEGRAL_FLOOR {
            let hi = INTEGRAL_FLOOR.min(b);
            let (c, s) = self.small_scale_law();
            total += power_moment(c, s, p, a, hi);
            lo = hi;
        }
        if lo >= b {
            return total;
        }
        let integrand = |t: f64| self.omega(t) * t.powi(-p);
        let mut breaks = vec![lo];
        let mut x = lo * GEOMETRIC_RATIO;
        while x < b {
            breaks.push(x);
            x *= GEOMETRIC_RATIO;
        }
        breaks.extend(self.nodes().iter().copied().filter(|&d| d > lo && d < b));
        breaks.push(b);
        breaks.sort_by(f64::total_cmp);
        breaks.dedup();
        total
            + breaks
                .windows(2)
                .map(|w| quadrature::adaptive(&integrand, w[0], w[1], QUAD_REL_TOL))
                .sum::<f64>()
    }
}

/// ∫_a^b c·t^{s−p} dt.
fn power_moment(c: f64, s: f64, p: i32, a: f64, b: f64) -> f64 {
    if c == 0.0 {
        return 0.0;
    }
    let e = s - p as f64 + 1.0;
    if e.abs() < 1e-15 {
        c * (b / a).ln()
    } else {
        c * (b.powf(e) - a.powf(e)) / e
    }
}

pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    assert!(count >= 2 && lo > 0.0 && hi > lo);
    let (l0, l1) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| {
            if i + 1 == count {
                hi
            } else {
                (l0 + (l1 - l0) * i as f64 / (count - 1) as f64).exp()
            }
        })
        .collect()
}

/// A mediate function H(u) ≥ 0 on (0, π].
#[derive(Clone)]
pub enum MediateFunction {
    /// H(u) = ∫_u^π t^{−2} ω(t) dt, closed form for δ^α profiles.
    Canonical(ModulusProfile),
    /// The same integral, always by quadrature.
    QuadratureBacked(ModulusProfile),
    /// u^{α−1} for α < 1, log(π/u) for α = 1.
    LeadingTerm { alpha: f64 },
    Scaled {
        inner: Box<MediateFunction>,
        factor: f64,
    },
    Custom {
        label: String,
        eval: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    },
}

impl fmt::Debug for MediateFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// H(u) := ∫_u^π t^{−2} ω(t) dt.
pub fn canonical_mediate(w: &ModulusProfile) -> MediateFunction {
    MediateFunction::Canonical(w.clone())
}

impl MediateFunction {
    pub fn leading_term(alpha: f64) -> Result<Self> {
        ModulusProfile::power(alpha)?;
        Ok(Self::LeadingTerm { alpha })
    }

    pub fn custom<F: Fn(f64) -> f64 + Send + Sync + 'static>(
        label: impl Into<String>,
        eval: F,
    ) -> Self {
        Self::Custom {
            label: label.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn scaled(self, factor: f64) -> Self {
        Self::Scaled {
            inner: Box::new(self),
            factor,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::Canonical(w) => format!("canonical({})", w.label()),
            Self::QuadratureBacked(w) => format!("quadrature({})", w.label()),
            Self::LeadingTerm { alpha } if *alpha == 1.0 => "log(pi/u)".into(),
            Self::LeadingTerm { alpha } => format!("u^({alpha}-1)"),
            Self::Scaled { inner, factor } => format!("{factor}*{}", inner.label()),
            Self::Custom { label, .. } => label.clone(),
        }
    }

    pub fn eval(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u <= PI) {
            return Err(Error::Domain(format!(
                "H is defined on (0, π], evaluated at {u}"
            )));
        }
        Ok(self.eval_unchecked(u))
    }

    fn eval_unchecked(&self, u: f64) -> f64 {
        match self {
            Self::Canonical(w) => w.moment(2, u, PI),
            Self::QuadratureBacked(w) => w.moment_quadrature(2, u, PI),
            Self::LeadingTerm { alpha } => {
                if *alpha == 1.0 {
                    (PI / u).ln()
                } else {
                    u.powf(alpha - 1.0)
                }
            }
            Self::Scaled { inner, factor } => factor * inner.eval_unchecked(u),
            Self::Custom { eval, .. } => eval(u),
        }
    }

    /// ∫_0^t H(u) du.
    ///
    /// For H(u) = ∫_u^π t^{−2}ω exchanging the order of integration gives
    /// ∫_0^t ω(s)/s ds + t·H(t). Custom functions are integrated by quadrature
    /// from [`INTEGRAL_FLOOR`], with the piece below it taken as a rectangle.
    pub fn integral_from_zero(&self, t: f64) -> Result<f64> {
        let h_t = self.eval(t)?;
        Ok(match self {
            Self::Canonical(w) => w.moment(1, 0.0, t) + t * h_t,
            Self::QuadratureBacked(w) => w.moment_quadrature(1, 0.0, t) + t * h_t,
            Self::LeadingTerm { alpha } => {
                if *alpha == 1.0 {
                    t * (PI / t).ln() + t
                } else {
                    t.powf(*alpha) / alpha
                }
            }
            Self::Scaled { inner, factor } => factor * inner.integral_from_zero(t)?,
            Self::Custom { eval, .. } => {
                if t <= INTEGRAL_FLOOR {
                    t * h_t
                } else {
                    INTEGRAL_FLOOR * eval(INTEGRAL_FLOOR)
                        + quadrature::geometric(
                            &|u: f64| eval(u),
                            INTEGRAL_FLOOR,
                            t,
                            GEOMETRIC_RATIO,
                            QUAD_REL_TOL,
                        )
                }
            }
        })
    }

    /// True when H is nonnegative and nonincreasing on `grid` (sorted internally).
    pub fn is_nonincreasing_on(&self, grid: &[f64]) -> Result<bool> {
        let mut g = grid.to_vec();
        g.sort_by(f64::total_cmp);
        let vals = g
            .iter()
            .map(|&u| self.eval(u))
            .collect::<Result<Vec<_>>>()?;
        Ok(vals.iter().all(|&v| v >= 0.0)
            && vals
                .windows(2)
                .all(|w| w[1] <= w[0] * (1.0 + 1e-12) + 1e-15))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Trend {
    Bounded,
    Increasing,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioEntry {
    pub argument: f64,
    pub numerator: f64,
    pub denominator: f64,
    pub ratio: f64,
}

/// Ratios numerator/denominator over a grid, with the worst case and the
/// trend as the argument moves toward zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub entries: Vec<RatioEntry>,
    pub max_ratio: f64,
    pub argmax: Option<f64>,
    /// Grid points where the denominator vanished under a nonzero numerator.
    pub failures: Vec<f64>,
    pub trend: Trend,
}

impl RatioReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Sorts entries from the largest argument to the smallest.
    fn build(mut raw: Vec<(f64, f64, f64)>) -> Self {
        raw.sort_by(|a, b| b.0.total_cmp(&a.0));
        let mut entries = Vec::new();
        let mut failures = Vec::new();
        for (arg, num, den) in raw {
            if den > 0.0 {
                entries.push(RatioEntry {
                    argument: arg,
                    numerator: num,
                    denominator: den,
                    ratio: num / den,
                });
            } else if num != 0.0 {
                failures.push(arg);
            } else {
                entries.push(RatioEntry {
                    argument: arg,
                    numerator: num,
                    denominator: den,
                    ratio: 0.0,
                });
            }
        }
        let (argmax, max_ratio) = entries.iter().fold((None, 0.0f64), |(a, m), e| {
            if a.is_none() || e.ratio > m {
                (Some(e.argument), e.ratio)
            } else {
                (a, m)
            }
        });
        let ratios: Vec<f64> = entries.iter().map(|e| e.ratio).collect();
        let increasing = ratios.len() >= 2
            && ratios.windows(2).all(|w| w[1] >= w[0])
            && ratios[ratios.len() - 1] > 1.05 * ratios[0];
        Self {
            entries,
            max_ratio,
            argmax,
            failures,
            trend: if increasing {
                Trend::Increasing
            } else {
                Trend::Bounded
            },
        }
    }
}

fn check_grid(grid: &[f64]) -> Result<()> {
    match grid.iter().find(|&&u| !(u > 0.0 && u <= PI)) {
        Some(u) => Err(Error::Domain(format!("grid point {u} outside (0, π]"))),
        None => Ok(()),
    }
}

/// max over u of ∫_u^π t^{−2}ω(t)dt / H(u).
pub fn check_condition_13(
    w: &ModulusProfile,
    h: &MediateFunction,
    u_grid: &[f64],
) -> Result<RatioReport> {
    check_grid(u_grid)?;
    let raw = u_grid
        .iter()
        .map(|&u| Ok((u, w.moment(2, u, PI), h.eval(u)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatioReport::build(raw))
}

/// max over t of ∫_0^t H(u)du / (t·H(t)).
pub fn check_condition_14(h: &MediateFunction, t_grid: &[f64]) -> Result<RatioReport> {
    check_grid(t_grid)?;
    let raw = t_grid
        .iter()
        .map(|&t| Ok((t, h.integral_from_zero(t)?, t * h.eval(t)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatioReport::build(raw))
}

/// max over v of ∫_0^v t^{−1}ω(t)dt / (v·H(v)).
pub fn lemma7_ratio(
    w: &ModulusProfile,
    h: &MediateFunction,
    v_grid: &[f64],
) -> Result<RatioReport> {
    check_grid(v_grid)?;
    let raw = v_grid
        .iter()
        .map(|&v| Ok((v, w.moment(1, 0.0, v), v * h.eval(v)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatioReport::build(raw))
}

/// max over m of ∫_0^{π/m} ω(t)dt / (m^{−2}·H(π/m)); entries carry π/m as argument.
pub fn lemma6_ratio(
    w: &ModulusProfile,
    h: &MediateFunction,
    m_list: &[usize],
) -> Result<RatioReport> {
    if m_list.contains(&0) {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let raw = m_list
        .iter()
        .map(|&m| {
            let v = PI / m as f64;
            let mf = m as f64;
            Ok((v, w.moment(0, 0.0, v), h.eval(v)? / (mf * mf)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RatioReport::build(raw))
}
