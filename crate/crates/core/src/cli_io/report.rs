use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::config::Format;
use crate::conditions::ConditionReport;
use crate::error::{Error, Result};
use crate::experiments::{ExperimentReport, KernelBoundReport};

/// One line of `list-exemplars` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExemplarInfo {
    pub name: String,
    pub alpha: Option<f64>,
    pub omega: String,
}

/// Anything a command can emit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Report {
    Experiment(ExperimentReport),
    Conditions(Vec<ConditionReport>),
    Kernel(Vec<KernelBoundReport>),
    Exemplars(Vec<ExemplarInfo>),
}

/// Decimal rendering with 12 significant digits.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return "0.00000000000e0".into();
    }
    format!("{v:.11e}")
}

fn opt(v: Option<f64>) -> String {
    v.map(format_number).unwrap_or_default()
}

/// Tabular CSV rendering: header line plus one line per record, '\n' endings.
pub trait CsvTable {
    fn header(&self) -> &'static str;
    fn records(&self) -> Vec<String>;

    fn to_csv(&self) -> String {
        let mut out = String::from(self.header());
        out.push('\n');
        for r in self.records() {
            out.push_str(&r);
            out.push('\n');
        }
        out
    }
}

impl CsvTable for ExperimentReport {
    fn header(&self) -> &'static str {
        "n,sup_error,bound,ratio"
    }

    fn records(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| {
                format!(
                    "{},{},{},{}",
                    r.n,
                    format_number(r.sup_error),
                    format_number(r.bound),
                    format_number(r.ratio)
                )
            })
            .collect()
    }
}

impl CsvTable for [ConditionReport] {
    fn header(&self) -> &'static str {
        "condition,beta,overall_constant,witness_n,witness_m,holds_uniformly,doubling_ok,zero_denominators"
    }

    fn records(&self) -> Vec<String> {
        self.iter()
            .map(|r| {
                let id = serde_json::to_value(r.condition_id)
                    .ok()
                    .and_then(|v| v.as_str().map(String::from))
                    .unwrap_or_default();
                let (wn, wm) = r
                    .witness
                    .map(|w| (w.n.to_string(), w.m.to_string()))
                    .unwrap_or_default();
                format!(
                    "{id},{},{},{wn},{wm},{},{},{}",
                    format_number(r.beta),
                    format_number(r.overall_constant),
                    r.holds_uniformly,
                    r.doubling_ok,
                    r.zero_denominators.len()
                )
            })
            .collect()
    }
}

impl CsvTable for [KernelBoundReport] {
    fn header(&self) -> &'static str {
        "bound,beta,index,max_normalized"
    }

    fn records(&self) -> Vec<String> {
        self.iter()
            .flat_map(|r| {
                r.per_index.iter().map(move |(i, v)| {
                    format!(
                        "{},{},{i},{}",
                        r.bound,
                        format_number(r.beta),
                        format_number(*v)
                    )
                })
            })
            .collect()
    }
}

impl CsvTable for [ExemplarInfo] {
    fn header(&self) -> &'static str {
        "name,alpha,omega"
    }

    fn records(&self) -> Vec<String> {
        self.iter()
            .map(|e| format!("{},{},{}", e.name, opt(e.alpha), e.omega))
            .collect()
    }
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Csv => match self {
                Self::Experiment(r) => r.to_csv(),
                Self::Conditions(r) => r.as_slice().to_csv(),
                Self::Kernel(r) => r.as_slice().to_csv(),
                Self::Exemplars(r) => r.as_slice().to_csv(),
            },
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
                s.push('\n');
                s
            }
        })
    }
}

/// Writes the rendered report to `path`, or to stdout when `path` is None.
pub fn write_report(report: &Report, format: Format, path: Option<&Path>) -> Result<()> {
    let text = report.render(format)?;
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Error::Io(e.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{ExperimentMetadata, ExperimentRow};

    fn sample() -> ExperimentReport {
        ExperimentReport {
            experiment_id: "T10".into(),
            rows: (0..3)
                .map(|i| ExperimentRow {
                    n: 16 << i,
                    sup_error: 0.1 / (i + 1) as f64,
                    bound: 0.3,
                    ratio: 1.0 / 3.0,
                })
                .collect(),
            fitted_slope: Some(-0.5),
            slope_stderr: None,
            metadata: ExperimentMetadata {
                matrix: "cesaro".into(),
                function: "f".into(),
                omega: "delta^0.5".into(),
                mediate: "h".into(),
                beta: 0.0,
                grid_size: 4096,
            },
            hypotheses_verified: true,
            flags: vec![],
        }
    }

    #[test]
    fn experiment_csv_shape() {
        let csv = Report::Experiment(sample()).render(Format::Csv).unwrap();
        let lines: Vec<&str> = csv.split_terminator('\n').collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "n,sup_error,bound,ratio");
        assert_eq!(
            lines[1],
            "16,1.00000000000e-1,3.00000000000e-1,3.33333333333e-1"
        );
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn json_round_trip() {
        let r = Report::Experiment(sample());
        let text = r.render(Format::Json).unwrap();
        let back: ExperimentReport = serde_json::from_str(&text).unwrap();
        assert_eq!(Report::Experiment(back), r);
        assert_eq!(text, r.render(Format::Json).unwrap());
    }

    #[test]
    fn number_format_has_twelve_digits() {
        assert_eq!(format_number(std::f64::consts::PI), "3.14159265359e0");
        assert_eq!(format_number(-2.5e-7), "-2.50000000000e-7");
    }

    #[test]
    fn unwritable_path_is_io_error() {
        let r = Report::Exemplars(vec![]);
        let err =
            write_report(&r, Format::Csv, Some(Path::new("/nonexistent-dir/x.csv"))).unwrap_err();
        assert!(matches!(err, Error::Io(_)));
    }
}
