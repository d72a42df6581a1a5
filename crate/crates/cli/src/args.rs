use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use zalpha_core::exactnum::{parse_rational, to_f64};
use zalpha_core::quad::QuadConfig;

use crate::eval::RouteArg;

#[derive(Debug, Parser)]
#[command(name = "zalpha", version, about = "Evaluate and cross-check the products z_alpha(u)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate log z_alpha(u) by one route or by all of them.
    Eval(EvalArgs),
    /// Re-derive the golden constants and compare.
    Constants(ConstantsArgs),
    /// Route-agreement checks over a (d, u) grid.
    Crosscheck(CrosscheckArgs),
    /// Shifted r-Stirling numbers at r = 1 - u.
    Stirling(StirlingArgs),
    /// Hurwitz zeta and its s-derivative.
    Zeta(ZetaArgs),
    /// Named closed-form examples.
    Examples(ExamplesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// A real number written as a decimal, an integer or a fraction `p/q`.
pub fn parse_real(text: &str) -> Result<f64, String> {
    if let Some(q) = parse_rational(text) {
        return Ok(to_f64(&q));
    }
    match text.trim().parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(format!("`{text}` is not a finite real number")),
    }
}

/// `a..b` (inclusive) or a comma-separated list of nonnegative integers.
pub fn parse_grid_d(text: &str) -> Result<Vec<u32>, String> {
    let bad = || format!("malformed d grid `{text}`: expected `a..b` or `d1,d2,...`");
    let text = text.trim();
    let values = if let Some((a, b)) = text.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        let b: u32 = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        (a..=b).collect()
    } else {
        text.split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(values)
}

/// Comma-separated list of reals, fractions allowed.
pub fn parse_grid_u(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(|p| parse_real(p).map_err(|e| format!("malformed u grid `{text}`: {e}")))
        .collect()
}

#[derive(Debug, Clone, Args)]
pub struct QuadArgs {
    /// Deepest quadrature refinement level.
    #[arg(long)]
    pub level_max: Option<u32>,
    /// Absolute quadrature tolerance.
    #[arg(long)]
    pub abs_tol: Option<f64>,
    /// Width near x = 1 inside which integrands switch to their series form.
    #[arg(long)]
    pub edge_guard: Option<f64>,
}

impl QuadArgs {
    pub fn config(&self) -> QuadConfig {
        let mut cfg = QuadConfig::default();
        if let Some(v) = self.level_max {
            cfg.level_max = v;
        }
        if let Some(v) = self.abs_tol {
            cfg.abs_tol = v;
        }
        if let Some(v) = self.edge_guard {
            cfg.edge_guard = v;
        }
        cfg
    }
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
#[command(group(ArgGroup::new("order").required(true).args(["d", "alpha"])))]
pub struct EvalArgs {
    /// Integer order d >= 0.
    #[arg(long)]
    pub d: Option<u32>,
    /// Real order alpha.
    #[arg(long, value_parser = parse_real)]
    pub alpha: Option<f64>,
    #[arg(long, default_value = "1", value_parser = parse_real)]
    pub u: f64,
    #[arg(long, value_enum, default_value = "all")]
    pub route: RouteArg,
    /// Largest accepted pairwise deviation between routes.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    /// Terms of the direct series.
    #[arg(long, default_value_t = 2000)]
    pub max_terms: u64,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    /// Record wall time per route (excluded by default for reproducible output).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    /// Golden CSV to compare against instead of the built-in table.
    #[arg(long)]
    pub golden: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    #[arg(long, default_value = "0..5", value_parser = parse_grid_d)]
    pub grid_d: ::std::vec::Vec<u32>,
    #[arg(long, default_value = "0.5,1,2", value_parser = parse_grid_u)]
    pub grid_u: ::std::vec::Vec<f64>,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, default_value_t = 2000)]
    pub max_terms: u64,
    /// Evaluate cells concurrently; output order is unchanged.
    #[arg(long)]
    pub parallel: bool,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct StirlingArgs {
    #[arg(long)]
    pub n: usize,
    /// Single entry index; the whole row when omitted.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value = "1")]
    pub u: String,
    /// Exact rational arithmetic, printed as p/q.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ZetaArgs {
    #[arg(long, value_parser = parse_real)]
    pub s: f64,
    #[arg(long, default_value = "1", value_parser = parse_real)]
    pub u: f64,
    /// Also print the s-derivative.
    #[arg(long)]
    pub deriv: bool,
}

#[derive(Debug, Args)]
pub struct ExamplesArgs {
    /// One of z1_half, z1_third, combo_u2 or z1_u(<u>); all fixed examples when omitted.
    pub name: Option<String>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}
