use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use stabcat::harness::inputs::{parse_window, resolve_algebra, resolve_module};
use stabcat::harness::{
    load, search_hh, search_module, verify_adjunction_diagrams, verify_duality_axioms, verify_theorem1,
    verify_theorem2_all, DiagramReport, HarnessError, DEFAULT_WINDOW, ENGINE_VERSION,
};
use stabcat::modules::{CoverMode, Module};
use stabcat::tate::{hat_ext, regular_bimodule, Towers};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "stabcat", version, about = "Tate cohomology, transfers and duality checks over finite fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Diagram {
    Thm1,
    Thm2,
    Duality,
    Adjunction,
}

#[derive(Clone, Copy, ValueEnum)]
enum Covers {
    Minimal,
    Free,
}

impl From<Covers> for CoverMode {
    fn from(c: Covers) -> Self {
        match c {
            Covers::Minimal => CoverMode::Minimal,
            Covers::Free => CoverMode::Free,
        }
    }
}

#[derive(clap::Args)]
struct Common {
    /// Degree window `a..b`
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    degrees: Option<(i32, i32)>,
    /// Largest allowed syzygy dimension at the ends of the window
    #[arg(long, default_value_t = 400)]
    dim_cap: usize,
    #[arg(long, value_enum, default_value = "minimal")]
    covers: Covers,
    /// Write the JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate an algebra definition
    Validate {
        algebra: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimensions of Tate Ext between two modules
    Ext {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        module_u: String,
        #[arg(long)]
        module_v: String,
        #[command(flatten)]
        common: Common,
    },
    /// Dimensions of Tate-Hochschild cohomology
    Hh {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check a family of diagrams on a fixture
    Verify {
        #[arg(value_enum)]
        diagram: Diagram,
        /// Registry name or fixture file
        #[arg(long)]
        fixture: String,
        /// Accept diagrams that commute up to a unit scalar
        #[arg(long)]
        allow_scalar: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Witnesses for nonzero products in negative degrees
    SearchNegative {
        #[arg(long)]
        algebra: String,
        /// Module mode (`k`, `regular` or a file); Hochschild mode if absent
        #[arg(long)]
        module: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn write_out<T: Serialize>(out: &Option<PathBuf>, value: &T) -> Result<(), HarnessError> {
    if let Some(p) = out {
        let text = serde_json::to_string_pretty(value).map_err(|e| HarnessError::Io(e.to_string()))?;
        std::fs::write(p, text + "\n").map_err(|e| HarnessError::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn check_cap(tower_base: &Arc<Module>, mode: CoverMode, window: (i32, i32), cap: usize) -> Result<(), HarnessError> {
    let t = Towers::new(mode).of(tower_base);
    for n in [window.0, window.1] {
        let d = t.omega(n).dim();
        if d > cap {
            return Err(HarnessError::Malformed(format!("syzygy in degree {n} has dimension {d}, above the cap {cap}")));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, HarnessError> {
    match cli.cmd {
        Cmd::Validate { algebra, out } => {
            let a = resolve_algebra(&algebra)?;
            println!("ok {} dim {} over GF({})", a.name(), a.dim(), a.p());
            write_out(&out, &json!({"algebra": a.name(), "dim": a.dim(), "char": a.p(), "valid": true, "engine_version": ENGINE_VERSION}))?;
            Ok(true)
        }
        Cmd::Ext { algebra, module_u, module_v, common } => {
            let a = resolve_algebra(&algebra)?;
            let (u, v) = (resolve_module(&module_u, &a)?, resolve_module(&module_v, &a)?);
            let window = common.degrees.unwrap_or(DEFAULT_WINDOW);
            let mode = common.covers.into();
            check_cap(&u, mode, window, common.dim_cap)?;
            let t = Towers::new(mode).of(&u);
            let degrees: Vec<_> = (window.0..=window.1).map(|n| json!({"n": n, "dim": hat_ext(&t, &v, n).dim()})).collect();
            for d in &degrees {
                println!("Ext^{}: {}", d["n"], d["dim"]);
            }
            write_out(&common.out, &json!({"algebra": a.name(), "u": module_u, "v": module_v, "degrees": degrees, "engine_version": ENGINE_VERSION}))?;
            Ok(true)
        }
        Cmd::Hh { algebra, common } => {
            let a = resolve_algebra(&algebra)?;
            let window = common.degrees.unwrap_or(DEFAULT_WINDOW);
            let mode = common.covers.into();
            let r = regular_bimodule(&a);
            check_cap(&r, mode, window, common.dim_cap)?;
            let t = Towers::new(mode).of(&r);
            let degrees: Vec<_> = (window.0..=window.1).map(|n| json!({"n": n, "dim": hat_ext(&t, &r, n).dim()})).collect();
            for d in &degrees {
                println!("HH^{}: {}", d["n"], d["dim"]);
            }
            write_out(&common.out, &json!({"algebra": a.name(), "degrees": degrees, "engine_version": ENGINE_VERSION}))?;
            Ok(true)
        }
        Cmd::Verify { diagram, fixture, allow_scalar, common } => {
            let fx = load(&fixture)?;
            let window = common.degrees.unwrap_or(fx.window);
            let mode = common.covers.into();
            for alg in [&fx.a, &fx.b] {
                check_cap(&regular_bimodule(alg), mode, window, common.dim_cap)?;
            }
            let reports: Vec<DiagramReport> = match diagram {
                Diagram::Thm1 => verify_theorem1(&fx, window, mode)?,
                Diagram::Thm2 => verify_theorem2_all(&fx, window, mode)?,
                Diagram::Duality => verify_duality_axioms(&fx, window, mode)?,
                Diagram::Adjunction => verify_adjunction_diagrams(&fx, window, mode)?,
            }
            .into_iter()
            .map(|r| r.with_policy(allow_scalar))
            .collect();
            for r in &reports {
                let flag = if r.has_scalar() { " (up to scalar)" } else { "" };
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                println!("{verdict} {} {}{flag} [{} degrees, {} ms]", r.fixture, r.diagram, r.degrees.len(), r.elapsed_ms);
            }
            write_out(&common.out, &reports)?;
            Ok(reports.iter().all(|r| r.pass))
        }
        Cmd::SearchNegative { algebra, module, common } => {
            let a = resolve_algebra(&algebra)?;
            let window = common.degrees.unwrap_or((DEFAULT_WINDOW.0, -1));
            let mode = common.covers.into();
            let report = match &module {
                Some(m) => {
                    let u = resolve_module(m, &a)?;
                    check_cap(&u, mode, window, common.dim_cap)?;
                    search_module(&u, window, mode)?
                }
                None => {
                    check_cap(&regular_bimodule(&a), mode, window, common.dim_cap)?;
                    search_hh(&a, window, mode)?
                }
            };
            for w in &report.witnesses {
                println!("degree {}: class {} witnessed by {} (pairing {})", w.degree, w.zeta, w.eta, w.pairing);
            }
            for (d, i) in &report.unwitnessed {
                println!("degree {d}: class {i} has no witness");
            }
            for f in &report.findings {
                println!("HH^{} . HH^{} != 0: {} nonzero basis products, span {}", f.m, f.n, f.nonzero_pairs.len(), f.span);
            }
            write_out(&common.out, &report)?;
            Ok(report.pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
