use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use tubegeo::ConvexBasis;

#[derive(Debug, Parser)]
#[command(
    name = "tubegeo",
    version,
    about = "Experiments on tube domains and harmonic maps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kobayashi-Royden metric of the ball tube at the origin.
    Kappa(KappaArgs),
    /// Boundary of the planar indicatrix section.
    Indicatrix(IndicatrixArgs),
    /// Complex geodesics of a tube domain.
    Geodesic(GeodesicArgs),
    /// Schwarz-lemma tests for a pair of Wirtinger derivatives.
    Schwarz(SchwarzArgs),
    /// Bivalence experiment on the harmonic extension of geodesic boundary data.
    Bivalence(BivalenceArgs),
}

#[derive(Debug, Args)]
pub struct KappaArgs {
    /// Real part of the tangent vector, `x1,x2`.
    #[arg(long = "X", value_parser = real_pair, allow_hyphen_values = true)]
    pub x: [f64; 2],
    /// Imaginary part of the tangent vector, `y1,y2`.
    #[arg(long = "Y", value_parser = real_pair, allow_hyphen_values = true)]
    pub y: [f64; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct IndicatrixArgs {
    /// Number of samples, at least 2.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeodesicAction {
    Classify,
    Trace,
    Extend,
}

#[derive(Debug, Args)]
pub struct GeodesicInput {
    /// `re1,im1,re2,im2`.
    #[arg(long, value_parser = complex_pair, allow_hyphen_values = true)]
    pub a: [f64; 4],
    /// `b1,b2`.
    #[arg(long, value_parser = real_pair, allow_hyphen_values = true)]
    pub b: [f64; 2],
    /// `ball` or `ellipse:p,q`.
    #[arg(long, default_value = "ball", value_parser = basis)]
    pub basis: ConvexBasis,
}

#[derive(Debug, Args)]
pub struct GeodesicArgs {
    pub action: GeodesicAction,
    #[command(flatten)]
    pub geodesic: GeodesicInput,
    /// Evaluation point `re,im` for `extend`.
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub lambda: Option<Complex64>,
    /// Quadrature nodes for `extend`.
    #[arg(long, default_value_t = 4096)]
    pub grid: usize,
    /// Output file for `trace`; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SchwarzArgs {
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub d: Complex64,
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub dbar: Complex64,
}

#[derive(Debug, Args)]
pub struct BivalenceArgs {
    #[command(flatten)]
    pub geodesic: GeodesicInput,
    /// Grid resolution, at least 128.
    #[arg(long, default_value_t = 512, value_parser = clap::value_parser!(u64).range(128..))]
    pub resolution: u64,
    /// Boundary samples, a power of two.
    #[arg(long, default_value_t = 1024)]
    pub boundary_grid: usize,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn reals<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated numbers"));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("`{part}` is not a finite number"))?;
    }
    Ok(out)
}

fn real_pair(s: &str) -> Result<[f64; 2], String> {
    reals::<2>(s)
}

fn complex_pair(s: &str) -> Result<[f64; 4], String> {
    reals::<4>(s)
}

fn complex(s: &str) -> Result<Complex64, String> {
    let [re, im] = reals::<2>(s)?;
    Ok(Complex64::new(re, im))
}

fn basis(s: &str) -> Result<ConvexBasis, String> {
    s.parse().map_err(|e: tubegeo::Error| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs() {
        assert_eq!(real_pair("1,-2.5").unwrap(), [1.0, -2.5]);
        assert_eq!(complex_pair("1, 0, 0, 1").unwrap(), [1.0, 0.0, 0.0, 1.0]);
        assert!(real_pair("1").is_err());
        assert!(real_pair("1,x").is_err());
        assert!(real_pair("1,inf").is_err());
        assert!(complex_pair("1,2,3").is_err());
    }
}
