//! `tubegeo`: reproducible experiments from the command line.
//!
//! Scalar reports go to stdout as `key=value` lines; tables and reports go
//! to `--out` or stdout. Floats are printed in shortest round-trip form, so
//! identical flags give byte-identical output. Exit code 2 signals any
//! usage, parse, domain or I/O error.

mod args;

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use tubegeo::geodesic::{boundary_samples, classify, extend_poisson};
use tubegeo::harmonic::{bivalence_experiment, BoundaryMap};
use tubegeo::kobayashi::{
    indicatrix_samples, kappa_ball_origin, schwarz_admissible, schwarz_necessary,
    schwarz_sufficient, TangentVector,
};
use tubegeo::{GeodesicKind, GeodesicParams};

use args::{
    BivalenceArgs, Cli, Command, Format, GeodesicAction, GeodesicArgs, IndicatrixArgs, KappaArgs,
    SchwarzArgs,
};

/// Angles written by `geodesic trace`.
const TRACE_ANGLES: usize = 512;

type CliResult = Result<(), String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Kappa(a) => run_kappa(a),
        Command::Indicatrix(a) => run_indicatrix(a),
        Command::Geodesic(a) => run_geodesic(a),
        Command::Schwarz(a) => run_schwarz(a),
        Command::Bivalence(a) => run_bivalence(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn params(input: &args::GeodesicInput) -> Result<GeodesicParams, String> {
    GeodesicParams::from_parts(input.a, input.b).map_err(|e| e.to_string())
}

fn run_kappa(args: KappaArgs) -> CliResult {
    let k = kappa_ball_origin(&TangentVector::new(args.x, args.y)).map_err(|e| e.to_string())?;
    println!(
        "r={}\ntheta={}\nalpha={}\nbeta={}",
        k.r, k.theta, k.alpha, k.beta
    );
    Ok(())
}

fn run_indicatrix(args: IndicatrixArgs) -> CliResult {
    let samples = indicatrix_samples(args.n as usize).map_err(|e| e.to_string())?;
    let text = match args.format {
        Format::Csv => {
            let mut s = String::from("theta,x,y\n");
            for p in &samples {
                let _ = writeln!(s, "{},{},{}", p.theta, p.x, p.y);
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&samples).map_err(|e| e.to_string())?;
            s.push('\n');
            s
        }
    };
    emit(args.out.as_deref(), &text)
}

fn run_geodesic(args: GeodesicArgs) -> CliResult {
    let p = params(&args.geodesic)?;
    let basis = args.geodesic.basis;
    match args.action {
        GeodesicAction::Classify => {
            let class = classify(&p).map_err(|e| e.to_string())?;
            let angles: Vec<String> = class.singular_angles.iter().map(f64::to_string).collect();
            println!("class={}\nsingular_angles={}", class.kind, angles.join(","));
            Ok(())
        }
        GeodesicAction::Trace => {
            let (phase, samples) = boundary_samples(&p, &basis, TRACE_ANGLES);
            let mut s = String::from("t,x1,x2\n");
            for (j, x) in samples.iter().enumerate() {
                let t = phase + TAU * j as f64 / TRACE_ANGLES as f64;
                let _ = writeln!(s, "{t},{},{}", x[0], x[1]);
            }
            emit(args.out.as_deref(), &s)
        }
        GeodesicAction::Extend => {
            let lambda = args.lambda.ok_or("extend needs --lambda re,im")?;
            let f = extend_poisson(&p, &basis, lambda, args.grid).map_err(|e| e.to_string())?;
            println!(
                "re1={}\nim1={}\nre2={}\nim2={}",
                f[0].re, f[0].im, f[1].re, f[1].im
            );
            Ok(())
        }
    }
}

fn run_schwarz(args: SchwarzArgs) -> CliResult {
    let (d, dbar) = (args.d, args.dbar);
    println!(
        "sufficient={}\nadmissible={}\nnecessary={}",
        schwarz_sufficient(d, dbar),
        schwarz_admissible(d, dbar),
        schwarz_necessary(d, dbar)
    );
    Ok(())
}

fn run_bivalence(args: BivalenceArgs) -> CliResult {
    let p = params(&args.geodesic)?;
    let kind = classify(&p).map_err(|e| e.to_string())?.kind;
    if kind != GeodesicKind::FoldedArc {
        eprintln!("warning: boundary data is {kind}, not FoldedArc; the bivalence hypotheses fail");
    }
    let bmap = BoundaryMap::from_geodesic(&p, &args.geodesic.basis, args.boundary_grid)
        .map_err(|e| e.to_string())?;
    let report =
        bivalence_experiment(&bmap, args.resolution as usize).map_err(|e| e.to_string())?;
    let mut text = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    text.push('\n');
    emit(args.out.as_deref(), &text)
}
