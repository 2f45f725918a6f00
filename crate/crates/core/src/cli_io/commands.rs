use std::fmt;

use super::config::{CommandName, MatrixSpec, RunConfig, WeightSpec};
use super::files::{matrix_from_file, parse_weights};
use super::report::{write_report, ExemplarInfo, Report};
use crate::conditions::{
    beta_head_constant, beta_rest_constant, check_monotone, check_row_stochastic, hbvs_constant,
    rbvs_constant, Direction,
};
use crate::error::{Error, Result};
use crate::experiments::{
    check_hypotheses, corollary43_table, exemplar, exemplar_functions, lemma8_check,
    lemma9_head_check, lemma9_rest_check, run_experiment, uniform_t_grid, ExperimentSetup,
};
use crate::moduli::{canonical_mediate, ModulusProfile};
use crate::summability::{
    cesaro_matrix, norlund_matrix, riesz_matrix, SummabilityMatrix, WeightSequence,
};

pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_HYPOTHESIS: i32 = 4;

/// Tolerance for the row-sum check reported by `check-matrix`.
const ROW_SUM_TOL: f64 = 1e-12;

/// A failed run: exit status and a one-line diagnostic.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Io(_)) {
            EXIT_IO
        } else {
            EXIT_CONFIG
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn weights(spec: &WeightSpec, len: usize) -> Result<WeightSequence> {
    match spec {
        WeightSpec::Ones => Ok(WeightSequence::ones(len)),
        WeightSpec::Linear => Ok(WeightSequence::linear(len)),
        WeightSpec::Geometric(r) => WeightSequence::geometric(*r, len),
        WeightSpec::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            parse_weights(&format!("file:{}", path.display()), &text)
        }
    }
}

fn build_matrix(spec: &MatrixSpec, max_row: usize) -> Result<SummabilityMatrix> {
    match spec {
        MatrixSpec::Cesaro => Ok(cesaro_matrix(max_row)),
        MatrixSpec::Norlund(w) => norlund_matrix(&weights(w, max_row + 1)?, max_row),
        MatrixSpec::Riesz(w) => riesz_matrix(&weights(w, max_row + 1)?, max_row),
        MatrixSpec::File(path) => {
            let file = matrix_from_file(path)?;
            for w in &file.warnings {
                eprintln!("warning: {w}");
            }
            if file.matrix.max_row() < max_row {
                return Err(Error::Config(format!(
                    "{} has {} rows, row {max_row} requested",
                    path.display(),
                    file.matrix.num_rows()
                )));
            }
            Ok(file.matrix)
        }
    }
}

fn hypothesis_failure(what: &str) -> Failure {
    Failure {
        code: EXIT_HYPOTHESIS,
        message: format!("hypothesis check failed: {what}"),
    }
}

/// Runs one command and writes its report.
pub fn execute(config: &RunConfig) -> std::result::Result<(), Failure> {
    let report = match config.command {
        CommandName::ListExemplars => Report::Exemplars(
            exemplar_functions(1)
                .into_iter()
                .map(|e| ExemplarInfo {
                    name: e.name,
                    alpha: e.alpha,
                    omega: e.profile.label(),
                })
                .collect(),
        ),
        CommandName::CheckMatrix => {
            let a = build_matrix(&config.matrix, config.max_n())?;
            Report::Conditions(vec![
                check_row_stochastic(&a, ROW_SUM_TOL),
                check_monotone(&a, Direction::NonDecreasing),
                check_monotone(&a, Direction::NonIncreasing),
                hbvs_constant(&a)?,
                rbvs_constant(&a)?,
                beta_head_constant(&a, config.beta)?,
                beta_rest_constant(&a, config.beta)?,
            ])
        }
        CommandName::KernelBounds => {
            let a = build_matrix(&config.matrix, config.max_n())?;
            let grid = uniform_t_grid(config.t_grid_size);
            let reports = vec![
                lemma8_check(config.beta, &config.n_list, &grid)?,
                lemma9_head_check(&a, config.beta, &config.n_list, &grid)?,
                lemma9_rest_check(&a, config.beta, &config.n_list, &grid)?,
            ];
            if config.strict {
                if let Some(r) = reports
                    .iter()
                    .find(|r| r.hypothesis_verified == Some(false))
                {
                    return Err(hypothesis_failure(&format!(
                        "{} row condition does not hold for {}",
                        r.bound,
                        a.label()
                    )));
                }
            }
            Report::Kernel(reports)
        }
        CommandName::Theorem => {
            let max_n = config.max_n();
            let a = build_matrix(&config.matrix, max_n)?;
            let ex = exemplar(&config.effective_function(), max_n)?;
            let omega = match (config.alpha, &config.function) {
                (None, Some(_)) => ex.profile.clone(),
                _ => ModulusProfile::power(config.effective_alpha())?,
            };
            let h = canonical_mediate(&omega);
            if config.strict {
                let hyp = check_hypotheses(config.theorem, &a, config.beta, &omega, &h)?;
                if !hyp.verified {
                    return Err(hypothesis_failure(&format!(
                        "{} on {}",
                        config.theorem.id(),
                        a.label()
                    )));
                }
            }
            let setup = ExperimentSetup {
                theorem: config.theorem,
                matrix: &a,
                function: &ex.function,
                series: &ex.series,
                omega: &omega,
                mediate: &h,
                beta: config.beta,
            };
            Report::Experiment(run_experiment(&setup, &config.n_list, config.grid_size)?)
        }
        CommandName::RateTable => {
            let max_n = config.max_n();
            let p = weights(&config.weights, max_n + 1)?;
            let ex = exemplar(&config.effective_function(), max_n)?;
            let alpha = config.effective_alpha();
            let report = corollary43_table(
                &p,
                alpha,
                config.beta,
                &ex.function,
                &ex.series,
                &config.n_list,
                config.grid_size,
            )?;
            if config.strict && !report.hypotheses_verified {
                return Err(hypothesis_failure(&format!(
                    "weighted head condition for riesz:{}",
                    p.label()
                )));
            }
            Report::Experiment(report)
        }
    };
    write_report(&report, config.format, config.output.as_deref())?;
    Ok(())
}
