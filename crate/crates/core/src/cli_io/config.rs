use std::fs;
use std::path::PathBuf;

use clap::Parser;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::experiments::{exemplar, Theorem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandName {
    CheckMatrix,
    KernelBounds,
    Theorem,
    RateTable,
    ListExemplars,
}

impl CommandName {
    fn parse(s: &str) -> Result<Self> {
        match s {
            "check-matrix" => Ok(Self::CheckMatrix),
            "kernel-bounds" => Ok(Self::KernelBounds),
            "theorem" => Ok(Self::Theorem),
            "rate-table" => Ok(Self::RateTable),
            "list-exemplars" => Ok(Self::ListExemplars),
            _ => Err(Error::Config(format!(
                "unknown command '{s}' (expected check-matrix, kernel-bounds, theorem, rate-table, list-exemplars)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum WeightSpec {
    Ones,
    Linear,
    Geometric(f64),
    File(PathBuf),
}

impl WeightSpec {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "ones" => Ok(Self::Ones),
            "linear" => Ok(Self::Linear),
            _ => {
                if let Some(r) = s.strip_prefix("geometric:") {
                    let r: f64 = r
                        .parse()
                        .map_err(|_| Error::Config(format!("bad geometric ratio '{r}'")))?;
                    if !(r.is_finite() && r > 0.0) {
                        return Err(Error::Config("geometric ratio must be > 0".into()));
                    }
                    Ok(Self::Geometric(r))
                } else if let Some(p) = s.strip_prefix("file:") {
                    Ok(Self::File(PathBuf::from(p)))
                } else {
                    Err(Error::Config(format!(
                        "unknown weights '{s}' (expected ones, linear, geometric:<r>, file:<path>)"
                    )))
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MatrixSpec {
    Cesaro,
    Norlund(WeightSpec),
    Riesz(WeightSpec),
    File(PathBuf),
}

impl MatrixSpec {
    pub fn parse(s: &str) -> Result<Self> {
        if s == "cesaro" {
            Ok(Self::Cesaro)
        } else if let Some(w) = s.strip_prefix("norlund:") {
            Ok(Self::Norlund(WeightSpec::parse(w)?))
        } else if let Some(w) = s.strip_prefix("riesz:") {
            Ok(Self::Riesz(WeightSpec::parse(w)?))
        } else if let Some(p) = s.strip_prefix("file:") {
            Ok(Self::File(PathBuf::from(p)))
        } else {
            Err(Error::Config(format!(
                "unknown matrix '{s}' (expected cesaro, norlund:<weights>, riesz:<weights>, file:<path>)"
            )))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Fully validated run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandName,
    pub matrix: MatrixSpec,
    pub weights: WeightSpec,
    /// Exemplar name; None picks the default for `alpha`.
    pub function: Option<String>,
    /// Hölder exponent; None when not given.
    pub alpha: Option<f64>,
    pub beta: f64,
    pub n_list: Vec<usize>,
    pub grid_size: usize,
    pub t_grid_size: usize,
    pub theorem: Theorem,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub strict: bool,
}

impl RunConfig {
    /// Hölder exponent in effect: the flag, else the exemplar's, else 1/2.
    pub fn effective_alpha(&self) -> f64 {
        self.alpha
            .or_else(|| {
                self.function
                    .as_deref()
                    .and_then(|f| exemplar(f, 1).ok())
                    .and_then(|e| e.alpha)
            })
            .unwrap_or(0.5)
    }

    /// Exemplar name in effect.
    pub fn effective_function(&self) -> String {
        match &self.function {
            Some(f) => f.clone(),
            None => {
                let a = self.effective_alpha();
                if a >= 1.0 {
                    "triangle".into()
                } else {
                    format!("weierstrass-{a}")
                }
            }
        }
    }

    pub fn max_n(&self) -> usize {
        self.n_list.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Parser, Debug, Default)]
#[command(
    name = "summalab",
    about = "Matrix summability of Fourier series: conditions, kernel bounds, rates"
)]
struct Cli {
    /// check-matrix | kernel-bounds | theorem | rate-table | list-exemplars
    command: String,
    /// TOML file with default values for any of the flags below
    #[arg(long)]
    config: Option<PathBuf>,
    /// cesaro | norlund:<weights> | riesz:<weights> | file:<path>
    #[arg(long)]
    matrix: Option<String>,
    /// ones | linear | geometric:<r> | file:<path> (rate-table)
    #[arg(long)]
    weights: Option<String>,
    /// Exemplar name (see list-exemplars)
    #[arg(long)]
    function: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// N, a list N1,N2,…, or a doubling range A..BxK
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    grid_size: Option<usize>,
    #[arg(long)]
    t_grid_size: Option<usize>,
    /// Theorem id: T10, T11a, T11b, T12, T13
    #[arg(long)]
    id: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// csv | json
    #[arg(long)]
    format: Option<String>,
    /// Exit with status 4 instead of running when hypotheses fail
    #[arg(long)]
    strict: bool,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    matrix: Option<String>,
    weights: Option<String>,
    function: Option<String>,
    alpha: Option<f64>,
    beta: Option<f64>,
    n: Option<String>,
    grid_size: Option<usize>,
    t_grid_size: Option<usize>,
    id: Option<String>,
    output: Option<PathBuf>,
    format: Option<String>,
    strict: Option<bool>,
}

/// Parses `N`, `N1,N2,…`, `A..B` (step 1) or `A..BxK` (multiply by K).
pub fn parse_n_list(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::Config(format!("bad n specification '{s}'"));
    let list = if let Some((lo, rest)) = s.split_once("..") {
        let (hi, factor) = match rest.split_once('x') {
            Some((hi, k)) => (hi, Some(k.parse::<usize>().map_err(|_| bad())?)),
            None => (rest, None),
        };
        let lo: usize = lo.parse().map_err(|_| bad())?;
        let hi: usize = hi.parse().map_err(|_| bad())?;
        if hi < lo {
            return Err(bad());
        }
        match factor {
            Some(k) if k < 2 || lo == 0 => {
                return Err(Error::Config(
                    "doubling ranges need a factor ≥ 2 and a start ≥ 1".into(),
                ))
            }
            Some(k) => std::iter::successors(Some(lo), |&n| n.checked_mul(k))
                .take_while(|&n| n <= hi)
                .collect(),
            None => (lo..=hi).collect(),
        }
    } else {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?
    };
    if list.is_empty() {
        return Err(bad());
    }
    if list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Config("n values must be strictly increasing".into()));
    }
    Ok(list)
}

/// Parses argv (program name first). Flags override values from `--config`.
pub fn parse_config<I, T>(args: I) -> Result<RunConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| {
        let rendered = e.to_string();
        Error::Config(
            rendered
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ")
                .to_string(),
        )
    })?;
    let file = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            toml::from_str::<FileConfig>(&text)
                .map_err(|e| Error::Config(e.message().to_string()))?
        }
        None => FileConfig::default(),
    };
    let command = CommandName::parse(&cli.command)?;

    let matrix = MatrixSpec::parse(
        cli.matrix
            .as_deref()
            .or(file.matrix.as_deref())
            .unwrap_or("cesaro"),
    )?;
    let weights = WeightSpec::parse(
        cli.weights
            .as_deref()
            .or(file.weights.as_deref())
            .unwrap_or("ones"),
    )?;
    let function = cli.function.or(file.function);
    if let Some(f) = &function {
        exemplar(f, 1)
            .map_err(|_| Error::Config(format!("unknown function '{f}' (see list-exemplars)")))?;
    }
    let alpha = cli.alpha.or(file.alpha);
    if let Some(a) = alpha {
        if !(a > 0.0 && a <= 1.0) {
            return Err(Error::Config("alpha must lie in (0, 1]".into()));
        }
    }
    let beta = cli.beta.or(file.beta).unwrap_or(0.0);
    if !(beta.is_finite() && beta >= 0.0) {
        return Err(Error::Config("beta must be ≥ 0".into()));
    }
    let default_n = match command {
        CommandName::CheckMatrix => "64",
        _ => "16..1024x2",
    };
    let n_list = parse_n_list(cli.n.as_deref().or(file.n.as_deref()).unwrap_or(default_n))?;
    let grid_size = cli
        .grid_size
        .or(file.grid_size)
        .unwrap_or(crate::summability::DEFAULT_SUP_GRID);
    if grid_size < 256 {
        return Err(Error::Config("grid-size must be at least 256".into()));
    }
    let t_grid_size = cli.t_grid_size.or(file.t_grid_size).unwrap_or(2048);
    if t_grid_size == 0 {
        return Err(Error::Config("t-grid-size must be positive".into()));
    }
    let theorem = Theorem::parse(cli.id.as_deref().or(file.id.as_deref()).unwrap_or("T10"))?;
    let format = match cli
        .format
        .as_deref()
        .or(file.format.as_deref())
        .unwrap_or("json")
    {
        "csv" => Format::Csv,
        "json" => Format::Json,
        other => {
            return Err(Error::Config(format!(
                "unknown format '{other}' (expected csv or json)"
            )))
        }
    };
    Ok(RunConfig {
        command,
        matrix,
        weights,
        function,
        alpha,
        beta,
        n_list,
        grid_size,
        t_grid_size,
        theorem,
        output: cli.output.or(file.output),
        format,
        strict: cli.strict || file.strict.unwrap_or(false),
    })
}
