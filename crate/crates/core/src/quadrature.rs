//! Gauss–Legendre quadrature on fixed, adaptive and geometrically graded panels.

use std::sync::OnceLock;

/// Nodes and weights of an `order`-point Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "Gauss-Legendre order must be positive");
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let n = order as f64;
        for i in 0..order.div_ceil(2) {
            // Tricomi initial guess, refined by Newton on P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(order, x);
                dp = d;
                let step = p / d;
                x -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(order, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let n = n as f64;
    let dp = n * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Shared 20-point rule used by the adaptive integrators.
pub fn gl20() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(20))
}

/// Composite rule: `panels` equal panels on [a, b].
pub fn composite<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    panels: usize,
    rule: &GaussLegendre,
) -> f64 {
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|i| {
            let lo = a + h * i as f64;
            let hi = if i + 1 == panels { b } else { lo + h };
            rule.integrate(f, lo, hi)
        })
        .sum()
}

/// Integrates over consecutive breakpoints, subdividing each gap into
/// pieces no wider than `max_width`.
pub fn over_breakpoints<F: Fn(f64) -> f64>(
    f: &F,
    breakpoints: &[f64],
    max_width: f64,
    rule: &GaussLegendre,
) -> f64 {
    breakpoints
        .windows(2)
        .map(|w| {
            let (lo, hi) = (w[0], w[1]);
            let pieces = (((hi - lo) / max_width).ceil() as usize).max(1);
            composite(f, lo, hi, pieces, rule)
        })
        .sum()
}

/// Adaptive bisection driven by the difference between one panel and its two halves.
pub fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64) -> f64 {
    let rule = gl20();
    let whole = rule.integrate(f, a, b);
    adaptive_step(f, a, b, whole, rel_tol, 0.0, 48, rule)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    rel_tol: f64,
    abs_floor: f64,
    depth: usize,
    rule: &GaussLegendre,
) -> f64 {
    let mid = 0.5 * (a + b);
    let left = rule.integrate(f, a, mid);
    let right = rule.integrate(f, mid, b);
    let refined = left + right;
    let err = (refined - whole).abs();
    if depth == 0 || err <= rel_tol * refined.abs() || err <= abs_floor {
        return refined;
    }
    let floor = abs_floor.max(1e-300);
    adaptive_step(f, a, mid, left, rel_tol, floor * 0.5, depth - 1, rule)
        + adaptive_step(f, mid, b, right, rel_tol, floor * 0.5, depth - 1, rule)
}

/// Integral over [a, b] with 0 < a < b, on panels graded geometrically by
/// `ratio` from the left endpoint, each panel integrated adaptively.
///
/// Geometric grading keeps the relative error uniform for integrands such as
/// t^{-p} ω(t) that change by decades near the left endpoint.
pub fn geometric<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, ratio: f64, rel_tol: f64) -> f64 {
    assert!(a > 0.0 && b >= a && ratio > 1.0);
    let mut total = 0.0;
    let mut lo = a;
    while lo < b {
        let hi = (lo * ratio).min(b);
        total += adaptive(f, lo, hi, rel_tol);
        lo = hi;
    }
    total
}
