//! Row-sequence conditions on summability matrices and their measured constants.
//!
//! Every O(a_{n,m}) or K·a_{n,m} condition is reported as the smallest
//! constant that realises it row by row, the (n, m) index attaining the
//! overall maximum, and a uniformity verdict: the overall constant stays
//! under a threshold and the per-row constants pass a doubling test.
//!
//! Sums that run to infinity stop at k = n: a_{n,k} = 0 beyond the diagonal,
//! so the k = n term reduces to a_{n,n} and the truncation is exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::summability::SummabilityMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConditionId {
    RowStochastic,
    NonDecreasing,
    NonIncreasing,
    #[serde(rename = "HBVS")]
    Hbvs,
    #[serde(rename = "RBVS")]
    Rbvs,
    BetaHead,
    BetaRest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    NonDecreasing,
    NonIncreasing,
}

/// Index (n, m) into a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub n: usize,
    pub m: usize,
}

/// Thresholds turning measured constants into a "holds uniformly" verdict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformityPolicy {
    pub max_constant: f64,
    pub growth_factor: f64,
    pub growth_offset: f64,
    /// Smallest n entering the doubling comparison c(2n) vs c(n).
    pub min_doubling_index: usize,
}

impl Default for UniformityPolicy {
    fn default() -> Self {
        Self {
            max_constant: 100.0,
            growth_factor: 1.1,
            growth_offset: 0.1,
            min_doubling_index: 4,
        }
    }
}

impl UniformityPolicy {
    /// c(2n) ≤ growth_factor · c(n) + growth_offset for every dyadic pair
    /// n, 2n with n ≥ min_doubling_index present in `values`.
    pub fn doubling_ok(&self, values: &[(usize, f64)]) -> bool {
        values
            .iter()
            .filter(|(n, _)| *n >= self.min_doubling_index && *n > 0)
            .all(|&(n, c)| match values.iter().find(|(m, _)| *m == 2 * n) {
                Some(&(_, c2)) => c2 <= self.growth_factor * c + self.growth_offset,
                None => true,
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition_id: ConditionId,
    pub beta: f64,
    /// Per row n: the best constant for that row (a deviation or violation
    /// size for the row-stochastic and monotonicity checks).
    pub per_row_constant: Vec<f64>,
    pub witness: Option<Witness>,
    pub overall_constant: f64,
    pub holds_uniformly: bool,
    /// First (n, m) per row where a_{n,m} ≤ 0 faces a nonzero left-hand side.
    pub zero_denominators: Vec<Witness>,
    pub doubling_ok: bool,
}

impl ConditionReport {
    fn from_rows(
        condition_id: ConditionId,
        beta: f64,
        scans: Vec<RowScan>,
        policy: &UniformityPolicy,
    ) -> Self {
        let per_row_constant: Vec<f64> = scans.iter().map(|s| s.constant).collect();
        let mut witness = None;
        let mut overall = 0.0;
        for (n, s) in scans.iter().enumerate() {
            if let Some(m) = s.argmax {
                if witness.is_none() || s.constant > overall {
                    overall = s.constant;
                    witness = Some(Witness { n, m });
                }
            }
        }
        let zero_denominators: Vec<Witness> = scans
            .iter()
            .enumerate()
            .filter_map(|(n, s)| s.zero_denominator.map(|m| Witness { n, m }))
            .collect();
        let indexed: Vec<(usize, f64)> = per_row_constant.iter().copied().enumerate().collect();
        let doubling_ok = policy.doubling_ok(&indexed);
        let holds_uniformly =
            zero_denominators.is_empty() && overall <= policy.max_constant && doubling_ok;
        if witness.is_none() {
            witness = zero_denominators.first().copied();
        }
        Self {
            condition_id,
            beta,
            per_row_constant,
            witness,
            overall_constant: overall,
            holds_uniformly,
            zero_denominators,
            doubling_ok,
        }
    }

    /// Per-row constant, or None when the row hit a zero denominator.
    pub fn finite_row_constant(&self, n: usize) -> Option<f64> {
        if self.zero_denominators.iter().any(|w| w.n == n) {
            None
        } else {
            self.per_row_constant.get(n).copied()
        }
    }
}

/// Result of scanning one row for sup_m LHS(m) / a_{n,m}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowScan {
    pub constant: f64,
    pub argmax: Option<usize>,
    pub zero_denominator: Option<usize>,
}

impl RowScan {
    fn new() -> Self {
        Self {
            constant: 0.0,
            argmax: None,
            zero_denominator: None,
        }
    }

    fn observe(&mut self, m: usize, lhs: f64, denom: f64) {
        if denom > 0.0 {
            let r = lhs / denom;
            if self.argmax.is_none() || r > self.constant {
                self.constant = r;
                self.argmax = Some(m);
            }
        } else if lhs != 0.0 && self.zero_denominator.is_none() {
            self.zero_denominator = Some(m);
        }
    }
}

fn reject_zero_rows(a: &SummabilityMatrix) -> Result<()> {
    match a.rows().position(|r| r.iter().all(|&v| v == 0.0)) {
        Some(row) => Err(Error::DegenerateRow { row }),
        None => Ok(()),
    }
}

/// Entries ≥ −tol and |row sum − 1| ≤ tol in every row.
pub fn check_row_stochastic(a: &SummabilityMatrix, tol: f64) -> ConditionReport {
    let mut per_row = Vec::with_capacity(a.num_rows());
    let mut witness = None;
    let mut worst = 0.0;
    for (n, row) in a.rows().enumerate() {
        let (kmin, min) =
            row.iter()
                .copied()
                .enumerate()
                .fold(
                    (0, f64::INFINITY),
                    |acc, (k, v)| if v < acc.1 { (k, v) } else { acc },
                );
        let sum_dev = (row.iter().sum::<f64>() - 1.0).abs();
        let neg = (-min).max(0.0);
        let dev = sum_dev.max(neg);
        if witness.is_none() || dev > worst {
            worst = dev;
            witness = Some(Witness {
                n,
                m: if neg > sum_dev { kmin } else { 0 },
            });
        }
        per_row.push(dev);
    }
    let holds = worst <= tol;
    ConditionReport {
        condition_id: ConditionId::RowStochastic,
        beta: 0.0,
        per_row_constant: per_row,
        witness,
        overall_constant: worst,
        holds_uniformly: holds,
        zero_denominators: Vec::new(),
        doubling_ok: true,
    }
}

/// a_{n,k} ≤ a_{n,k+1} (or ≥) for every adjacent pair, with zero tolerance.
/// The witness is the first violation in row-major order.
pub fn check_monotone(a: &SummabilityMatrix, direction: Direction) -> ConditionReport {
    let mut per_row = Vec::with_capacity(a.num_rows());
    let mut witness = None;
    for (n, row) in a.rows().enumerate() {
        let mut worst: f64 = 0.0;
        for (k, pair) in row.windows(2).enumerate() {
            let violation = match direction {
                Direction::NonDecreasing => pair[0] - pair[1],
                Direction::NonIncreasing => pair[1] - pair[0],
            };
            if violation > 0.0 {
                worst = worst.max(violation);
                if witness.is_none() {
                    witness = Some(Witness { n, m: k });
                }
            }
        }
        per_row.push(worst);
    }
    let overall = per_row.iter().copied().fold(0.0, f64::max);
    ConditionReport {
        condition_id: match direction {
            Direction::NonDecreasing => ConditionId::NonDecreasing,
            Direction::NonIncreasing => ConditionId::NonIncreasing,
        },
        beta: 0.0,
        per_row_constant: per_row,
        witness,
        overall_constant: overall,
        holds_uniformly: witness.is_none(),
        zero_denominators: Vec::new(),
        doubling_ok: true,
    }
}

/// sup over 1 ≤ m ≤ n of Σ_{k<m} |a_k − a_{k+1}| / a_m for one row.
pub fn hbvs_scan(row: &[f64]) -> RowScan {
    let mut scan = RowScan::new();
    let mut lhs = 0.0;
    for m in 1..row.len() {
        lhs += (row[m - 1] - row[m]).abs();
        scan.observe(m, lhs, row[m]);
    }
    scan
}

/// sup over 0 ≤ m ≤ min(m_max, len−1) of Σ_{k≥m} |a_k − a_{k+1}| / a_m, with
/// a_k = 0 past the end of `row`.
pub fn rbvs_scan(row: &[f64], m_max: usize) -> RowScan {
    let mut scan = RowScan::new();
    let mut lhs = 0.0;
    for m in (0..row.len()).rev() {
        let next = row.get(m + 1).copied().unwrap_or(0.0);
        lhs += (row[m] - next).abs();
        if m <= m_max {
            scan.observe(m, lhs, row[m]);
        }
    }
    scan
}

#[inline]
fn weight(k: usize, beta: f64) -> f64 {
    ((k + 1) as f64).powf(beta)
}

/// Weighted term (k+1)^β |a_k/(k+1)^β − a_{k+1}/(k+2)^β|.
#[inline]
fn weighted_term(ak: f64, ak1: f64, k: usize, beta: f64) -> f64 {
    let wk = weight(k, beta);
    wk * (ak / wk - ak1 / weight(k + 1, beta)).abs()
}

/// Head scan of the β-weighted condition for one row.
pub fn beta_head_scan(row: &[f64], beta: f64) -> RowScan {
    let mut scan = RowScan::new();
    let mut lhs = 0.0;
    for m in 1..row.len() {
        lhs += weighted_term(row[m - 1], row[m], m - 1, beta);
        scan.observe(m, lhs, row[m]);
    }
    scan
}

/// Rest scan of the β-weighted condition for one row (zeros past the end).
pub fn beta_rest_scan(row: &[f64], beta: f64, m_max: usize) -> RowScan {
    let mut scan = RowScan::new();
    let mut lhs = 0.0;
    for m in (0..row.len()).rev() {
        let next = row.get(m + 1).copied().unwrap_or(0.0);
        lhs += weighted_term(row[m], next, m, beta);
        if m <= m_max {
            scan.observe(m, lhs, row[m]);
        }
    }
    scan
}

fn check_beta(beta: f64) -> Result<()> {
    if beta.is_finite() && beta >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("beta must be ≥ 0, got {beta}")))
    }
}

pub fn hbvs_constant(a: &SummabilityMatrix) -> Result<ConditionReport> {
    hbvs_constant_with(a, &UniformityPolicy::default())
}

pub fn hbvs_constant_with(
    a: &SummabilityMatrix,
    policy: &UniformityPolicy,
) -> Result<ConditionReport> {
    reject_zero_rows(a)?;
    let scans = a.rows().map(hbvs_scan).collect();
    Ok(ConditionReport::from_rows(
        ConditionId::Hbvs,
        0.0,
        scans,
        policy,
    ))
}

pub fn rbvs_constant(a: &SummabilityMatrix) -> Result<ConditionReport> {
    rbvs_constant_with(a, &UniformityPolicy::default())
}

pub fn rbvs_constant_with(
    a: &SummabilityMatrix,
    policy: &UniformityPolicy,
) -> Result<ConditionReport> {
    reject_zero_rows(a)?;
    let scans = a.rows().map(|r| rbvs_scan(r, r.len() - 1)).collect();
    Ok(ConditionReport::from_rows(
        ConditionId::Rbvs,
        0.0,
        scans,
        policy,
    ))
}

pub fn beta_head_constant(a: &SummabilityMatrix, beta: f64) -> Result<ConditionReport> {
    beta_head_constant_with(a, beta, &UniformityPolicy::default())
}

pub fn beta_head_constant_with(
    a: &SummabilityMatrix,
    beta: f64,
    policy: &UniformityPolicy,
) -> Result<ConditionReport> {
    check_beta(beta)?;
    reject_zero_rows(a)?;
    let scans = a.rows().map(|r| beta_head_scan(r, beta)).collect();
    Ok(ConditionReport::from_rows(
        ConditionId::BetaHead,
        beta,
        scans,
        policy,
    ))
}

pub fn beta_rest_constant(a: &SummabilityMatrix, beta: f64) -> Result<ConditionReport> {
    beta_rest_constant_with(a, beta, &UniformityPolicy::default())
}

pub fn beta_rest_constant_with(
    a: &SummabilityMatrix,
    beta: f64,
    policy: &UniformityPolicy,
) -> Result<ConditionReport> {
    check_beta(beta)?;
    reject_zero_rows(a)?;
    let scans = a
        .rows()
        .map(|r| beta_rest_scan(r, beta, r.len() - 1))
        .collect();
    Ok(ConditionReport::from_rows(
        ConditionId::BetaRest,
        beta,
        scans,
        policy,
    ))
}

/// One audited implication between a sequence-class membership and a
/// β-weighted condition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImplicationClaim {
    pub claim: String,
    pub antecedent_constant: f64,
    pub antecedent_holds: bool,
    pub consequent_constant: f64,
    pub consequent_holds: bool,
    /// Largest per-row ratio consequent / antecedent.
    pub observed_factor: f64,
    pub verified: bool,
}

/// Checks, row by row, the two implications linking the derived sequence
/// c_k = (k+1)^{−β} a_{n,k} with the β-weighted conditions:
/// HBVS of c bounds the head condition, and the rest condition bounds RBVS of c.
/// Each consequent constant must stay below the antecedent one up to rounding.
pub fn implication_audit(a: &SummabilityMatrix, beta: f64) -> Result<Vec<ImplicationClaim>> {
    check_beta(beta)?;
    let derived = a.map_entries(format!("{}/(k+1)^{beta}", a.label()), |k, v| {
        v / weight(k, beta)
    });
    let derived_hbvs = hbvs_constant(&derived)?;
    let head = beta_head_constant(a, beta)?;
    let rest = beta_rest_constant(a, beta)?;
    let derived_rbvs = rbvs_constant(&derived)?;
    Ok(vec![
        audit(
            format!("(k+1)^-{beta} a_nk in HBVS => beta-head condition"),
            &derived_hbvs,
            &head,
        ),
        audit(
            format!("beta-rest condition => (k+1)^-{beta} a_nk in RBVS"),
            &rest,
            &derived_rbvs,
        ),
    ])
}

fn audit(
    claim: String,
    antecedent: &ConditionReport,
    consequent: &ConditionReport,
) -> ImplicationClaim {
    let mut factor: f64 = 0.0;
    let mut verified = true;
    for n in 0..antecedent.per_row_constant.len() {
        let Some(k_ante) = antecedent.finite_row_constant(n) else {
            continue;
        };
        let Some(k_cons) = consequent.finite_row_constant(n) else {
            verified = false;
            continue;
        };
        if k_cons > k_ante * (1.0 + 1e-12) + 1e-14 {
            verified = false;
        }
        if k_ante > 0.0 {
            factor = factor.max(k_cons / k_ante);
        }
    }
    ImplicationClaim {
        claim,
        antecedent_constant: antecedent.overall_constant,
        antecedent_holds: antecedent.holds_uniformly,
        consequent_constant: consequent.overall_constant,
        consequent_holds: consequent.holds_uniformly,
        observed_factor: factor,
        verified,
    }
}

/// Per-row data for the two inequalities max_l a_{n,l} ≤ (1 + K)·a_{n,n} and
/// 1/(n+1) ≤ (1 + K)·a_{n,n}, where K is the row's head-condition constant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagonalDominanceRow {
    pub n: usize,
    pub head_constant: f64,
    pub max_entry: f64,
    pub diagonal: f64,
    pub max_entry_ok: bool,
    pub inverse_length_ok: bool,
}

/// Evaluates both inequalities on every row with a finite head constant.
pub fn diagonal_dominance(a: &SummabilityMatrix, beta: f64) -> Result<Vec<DiagonalDominanceRow>> {
    let head = beta_head_constant(a, beta)?;
    Ok(a.rows()
        .enumerate()
        .filter_map(|(n, row)| {
            let k = head.finite_row_constant(n)?;
            let diagonal = row[n];
            let max_entry = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let bound = (1.0 + k) * diagonal + 1e-12;
            Some(DiagonalDominanceRow {
                n,
                head_constant: k,
                max_entry,
                diagonal,
                max_entry_ok: max_entry <= bound,
                inverse_length_ok: 1.0 / (n + 1) as f64 <= bound,
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::summability::{cesaro_matrix, norlund_matrix, riesz_matrix, WeightSequence};

    fn single(row: Vec<f64>) -> SummabilityMatrix {
        let n = row.len() - 1;
        let mut rows: Vec<Vec<f64>> = (0..n).map(|i| vec![1.0 / (i + 1) as f64; i + 1]).collect();
        rows.push(row);
        SummabilityMatrix::from_rows("t", rows).unwrap()
    }

    #[test]
    fn row_stochastic_examples() {
        let r = check_row_stochastic(&cesaro_matrix(20), 1e-12);
        assert!(r.holds_uniformly);
        assert!(r.overall_constant < 1e-14);
        let bad = SummabilityMatrix::from_rows("bad", vec![vec![1.0], vec![0.5, 0.6]]).unwrap();
        let r = check_row_stochastic(&bad, 1e-12);
        assert!(!r.holds_uniformly);
        assert!((r.overall_constant - 0.1).abs() < 1e-12);
        assert_eq!(r.witness, Some(Witness { n: 1, m: 0 }));
        let nor = norlund_matrix(&WeightSequence::geometric(0.7, 30).unwrap(), 29).unwrap();
        assert!(check_row_stochastic(&nor, 1e-12).holds_uniformly);
    }

    #[test]
    fn monotone_examples() {
        let c = cesaro_matrix(10);
        assert!(check_monotone(&c, Direction::NonDecreasing).holds_uniformly);
        assert!(check_monotone(&c, Direction::NonIncreasing).holds_uniformly);
        let p = WeightSequence::linear(11);
        let rie = riesz_matrix(&p, 10).unwrap();
        let nor = norlund_matrix(&p, 10).unwrap();
        assert!(check_monotone(&rie, Direction::NonDecreasing).holds_uniformly);
        assert!(check_monotone(&nor, Direction::NonIncreasing).holds_uniformly);
        let r = check_monotone(&rie, Direction::NonIncreasing);
        assert!(!r.holds_uniformly);
        assert_eq!(r.witness, Some(Witness { n: 1, m: 0 }));
    }

    #[test]
    fn hbvs_examples() {
        assert_eq!(
            hbvs_constant(&cesaro_matrix(12)).unwrap().overall_constant,
            0.0
        );
        let r = hbvs_constant(&single(vec![1.0 / 6.0, 2.0 / 6.0, 3.0 / 6.0])).unwrap();
        assert!((r.per_row_constant[2] - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(r.witness, Some(Witness { n: 2, m: 2 }));
    }

    #[test]
    fn rbvs_examples() {
        let r = rbvs_constant(&cesaro_matrix(12)).unwrap();
        assert!(r.per_row_constant.iter().all(|&c| (c - 1.0).abs() < 1e-12));
        let r = rbvs_constant(&single(vec![3.0 / 6.0, 2.0 / 6.0, 1.0 / 6.0])).unwrap();
        let scan = rbvs_scan(&[3.0 / 6.0, 2.0 / 6.0, 1.0 / 6.0], 0);
        assert_eq!(scan.argmax, Some(0));
        assert!((scan.constant - 1.0).abs() < 1e-15);
        assert!(r.per_row_constant[2] <= 1.0 + 1e-15);
    }

    #[test]
    fn cesaro_beta_one_head_grows_like_harmonic() {
        let r = beta_head_constant(&cesaro_matrix(64), 1.0).unwrap();
        for n in 1..=64usize {
            let expected: f64 = (0..n).map(|k| 1.0 / (k + 2) as f64).sum();
            assert!((r.per_row_constant[n] - expected).abs() < 1e-12, "n={n}");
        }
        assert!(!r.holds_uniformly);
        assert!(!r.doubling_ok);
    }

    #[test]
    fn single_entry_row_is_trivial() {
        let a = SummabilityMatrix::from_rows("one", vec![vec![1.0]]).unwrap();
        let r = beta_head_constant(&a, 2.0).unwrap();
        assert_eq!(r.overall_constant, 0.0);
        assert!(r.witness.is_none());
        let r = beta_rest_constant(&a, 2.0).unwrap();
        assert!((r.overall_constant - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rest_ratio_at_diagonal_is_one() {
        let p = WeightSequence::geometric(1.3, 40).unwrap();
        let a = norlund_matrix(&p, 39).unwrap();
        for beta in [0.0, 0.5, 3.0] {
            for row in a.rows() {
                let n = row.len() - 1;
                let only_last = beta_rest_scan(&row[n..], beta, 0);
                assert!((only_last.constant - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn identity_rows_hit_zero_denominators() {
        let rows = (0..5)
            .map(|n| {
                let mut r = vec![0.0; n + 1];
                r[n] = 1.0;
                r
            })
            .collect();
        let a = SummabilityMatrix::from_rows("identity", rows).unwrap();
        let r = beta_rest_constant(&a, 1.0).unwrap();
        assert!(!r.holds_uniformly);
        assert_eq!(r.zero_denominators.first(), Some(&Witness { n: 1, m: 0 }));
        // head sums vanish until the diagonal, where the ratio is 1
        assert!(hbvs_constant(&a).unwrap().zero_denominators.is_empty());
    }

    #[test]
    fn zero_row_is_an_error() {
        let a = SummabilityMatrix::from_rows("z", vec![vec![1.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(
            hbvs_constant(&a).unwrap_err(),
            Error::DegenerateRow { row: 1 }
        );
        assert!(beta_rest_constant(&cesaro_matrix(3), -1.0).is_err());
    }

    #[test]
    fn implication_audit_examples() {
        for claim in implication_audit(&cesaro_matrix(50), 0.0).unwrap() {
            assert!(claim.verified);
            assert!(
                (claim.observed_factor - 1.0).abs() < 1e-12 || claim.antecedent_constant == 0.0
            );
        }
        let claims = implication_audit(&cesaro_matrix(64), 1.0).unwrap();
        assert!(!claims[0].antecedent_holds);
        assert!(claims.iter().all(|c| c.verified));
        // derived sequence 1/((k+1)(n+1)) has head ratio m at index m
        let derived = cesaro_matrix(64).map_entries("d", |k, v| v / (k + 1) as f64);
        let h = hbvs_constant(&derived).unwrap();
        assert!((h.per_row_constant[64] - 64.0).abs() < 1e-9);
    }

    #[test]
    fn geometric_norlund_audit() {
        let a = norlund_matrix(&WeightSequence::geometric(0.5, 65).unwrap(), 64).unwrap();
        let claims = implication_audit(&a, 0.0).unwrap();
        assert!(claims.iter().all(|c| c.verified));
        // rows increase in k, so RBVS picks up a_{n,n} over the small a_{n,0}
        let rest = rbvs_constant(&a).unwrap();
        assert!(!rest.holds_uniformly);
        assert!(hbvs_constant(&a).unwrap().overall_constant <= 1.0 + 1e-12);
    }

    #[test]
    fn doubling_policy() {
        let p = UniformityPolicy::default();
        assert!(p.doubling_ok(&[(4, 1.0), (8, 1.2), (16, 1.4)]));
        assert!(!p.doubling_ok(&[(4, 1.0), (8, 1.3)]));
        // pairs below the minimum index are ignored
        assert!(p.doubling_ok(&[(1, 0.5), (2, 0.667)]));
    }

    #[test]
    fn diagonal_dominance_on_riesz() {
        let a = riesz_matrix(&WeightSequence::linear(33), 32).unwrap();
        for row in diagonal_dominance(&a, 0.5).unwrap() {
            assert!(row.max_entry_ok && row.inverse_length_ok, "{row:?}");
        }
    }
}
