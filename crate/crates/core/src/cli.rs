//! Command-line interface. Exit codes: 0 success, 1 verification failure,
//! 2 input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::c1_check::c1_residual;
use crate::analysis::kernel::kernel_rank_oracle;
use crate::analysis::mass::{default_order, mass_report};
use crate::c1_basis::{build_full_basis, dimension_for, standard_c0_basis, Basis};
use crate::coeff_matrices::assemble_blocks;
use crate::error::{Error, Result};
use crate::gluing::{compute_gluing, GluingData, TwoPatchGeometry};
use crate::io::{parse_geometry, sample_function, samples_csv, write_basis, write_matrices, write_samples};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Verification threshold of `verify` for gradient jumps.
pub const VERIFY_C1_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "asg1", version, about = "C1 isogeometric spaces over two-patch AS-G1 geometries")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    #[value(name = "V0")]
    V0,
    #[value(name = "V1")]
    V1,
}

#[derive(Debug, clap::Args)]
pub struct Input {
    /// Geometry file (JSON).
    pub file: PathBuf,
    /// Refine to N uniform inner breakpoints.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// AS-G1 verdict and gluing data.
    Check(Input),
    /// Dimension report.
    Dim(Input),
    /// Write the C1 basis coefficient grids.
    Basis {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the coefficient blocks A1, A2, A3 as triplet CSV.
    Matrices {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: PathBuf,
    },
    /// Plot data (patch, u, v, x, y, value) of one basis function.
    Sample {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        function: usize,
        #[arg(long, default_value_t = 21)]
        grid: usize,
        /// Output CSV file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Condition number of the diagonally scaled mass matrix.
    Condition {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        space: SpaceArg,
        /// Gauss points per direction and element (default 2p).
        #[arg(long)]
        order: Option<usize>,
    },
    /// C1 residual and kernel-dimension checks.
    Verify(Input),
}

fn load(input: &Input) -> Result<(TwoPatchGeometry, GluingData)> {
    let parsed = parse_geometry(&input.file)?;
    parsed.refined(input.k)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::MembershipViolation(_) => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

fn c1_basis(input: &Input) -> Result<(TwoPatchGeometry, GluingData, Basis)> {
    let (g, gluing) = load(input)?;
    let basis = build_full_basis(&g, &gluing)?;
    Ok((g, gluing, basis))
}

fn print_gluing(out: &mut dyn Write, g: &GluingData) -> std::io::Result<()> {
    writeln!(out, "alpha_L(v) = {}", g.alpha_l)?;
    writeln!(out, "alpha_R(v) = {}", g.alpha_r)?;
    writeln!(out, "beta(v) = {}", g.beta)?;
    writeln!(out, "beta_L(v) = {}", g.beta_l)?;
    writeln!(out, "beta_R(v) = {}", g.beta_r)?;
    writeln!(out, "d_alpha = {}", g.d_alpha)?;
    writeln!(out, "z_beta = {}", g.z_beta)?;
    writeln!(out, "beta_is_zero = {}", g.beta_is_zero)
}

fn check(input: &Input, out: &mut dyn Write) -> Result<i32> {
    let parsed = parse_geometry(&input.file)?;
    let geometry = match input.k {
        None => parsed.geometry.clone(),
        Some(_) => parsed.refined(input.k)?.0,
    };
    let reg = geometry.verify_regularity(4)?;
    let computed = compute_gluing(&geometry);
    let w = |e: std::io::Error| Error::Io(e.to_string());
    writeln!(out, "regular = {} (min |det J|: L {:e}, R {:e})", !reg.flagged, reg.min_abs_det_l, reg.min_abs_det_r)
        .map_err(w)?;
    match computed {
        Ok(g) => {
            let g = match &parsed.gluing {
                Some(supplied) => supplied.reclassify(geometry.space().breakpoints()),
                None => g,
            };
            writeln!(out, "AS-G1 = true").map_err(w)?;
            writeln!(out, "gluing = {}", if parsed.gluing.is_some() { "supplied" } else { "computed" }).map_err(w)?;
            print_gluing(out, &g).map_err(w)?;
            writeln!(out, "residual = {:e}", g.residual(&geometry, 200)?).map_err(w)?;
            Ok(if reg.flagged { EXIT_VERIFY } else { EXIT_OK })
        }
        Err(Error::NotAsG1(reason)) => {
            writeln!(out, "AS-G1 = false ({reason})").map_err(w)?;
            Ok(EXIT_VERIFY)
        }
        Err(e) => Err(e),
    }
}

fn dim(input: &Input, out: &mut dyn Write) -> Result<i32> {
    let (g, gluing) = load(input)?;
    let d = dimension_for(g.space(), &gluing)?;
    let w = |e: std::io::Error| Error::Io(e.to_string());
    let fields: [(&str, String); 14] = [
        ("p", d.p.to_string()),
        ("r", d.r.to_string()),
        ("k", d.k.to_string()),
        ("d_alpha", d.d_alpha.to_string()),
        ("z_beta", d.z_beta.to_string()),
        ("beta_is_zero", d.beta_is_zero.to_string()),
        ("n", d.n.to_string()),
        ("n_tilde", d.n_tilde.to_string()),
        ("n_bar", d.n_bar.to_string()),
        ("dim_V1_1", d.dim_v1_1.to_string()),
        ("dim_V1_2", d.dim_v1_2.to_string()),
        ("dim_Gamma0", d.dim_gamma0.to_string()),
        ("dim_Gamma1", d.dim_gamma1.to_string()),
        ("dim_V1", d.dim_v1.to_string()),
    ];
    for (name, value) in fields {
        writeln!(out, "{name} = {value}").map_err(w)?;
    }
    Ok(EXIT_OK)
}

fn condition(input: &Input, space: SpaceArg, order: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let (g, gluing) = load(input)?;
    let order = order.unwrap_or_else(|| default_order(&g));
    let (basis, label) = match space {
        SpaceArg::V1 => (build_full_basis(&g, &gluing)?, "V1"),
        SpaceArg::V0 => (standard_c0_basis(g.space()), "V0"),
    };
    let rep = mass_report(&g, &basis, label, order)?;
    writeln!(out, "space = {}\ndim = {}\norder = {}\nkappa = {:.6}", rep.label, rep.dim, rep.order, rep.kappa)
        .map_err(|e| Error::Io(e.to_string()))?;
    Ok(EXIT_OK)
}

fn verify(input: &Input, out: &mut dyn Write) -> Result<i32> {
    let (g, gluing, basis) = c1_basis(input)?;
    let w = |e: std::io::Error| Error::Io(e.to_string());
    let c1 = c1_residual(&g, &basis)?;
    let kernel = kernel_rank_oracle(g.space(), &gluing)?;
    let dims = dimension_for(g.space(), &gluing)?;
    let checks = [
        ("c1_residual", c1.max_jump < VERIFY_C1_TOL, format!("{:e} (< {VERIFY_C1_TOL:e})", c1.max_jump)),
        ("kernel_dimension", kernel.matches(), format!("numeric {} vs formula {}", kernel.nullity, kernel.expected)),
        ("basis_size", basis.len() == dims.dim_v1, format!("{} vs formula {}", basis.len(), dims.dim_v1)),
    ];
    let mut ok = true;
    for (name, pass, detail) in checks {
        ok &= pass;
        writeln!(out, "{} {name}: {detail}", if pass { "PASS" } else { "FAIL" }).map_err(w)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let w = |e: std::io::Error| Error::Io(e.to_string());
    match &cli.command {
        Command::Check(input) => check(input, out),
        Command::Dim(input) => dim(input, out),
        Command::Basis { input, out: dir } => {
            let (_, _, basis) = c1_basis(input)?;
            write_basis(dir, &basis)?;
            writeln!(out, "wrote {} functions to {}", basis.len(), dir.display()).map_err(w)?;
            Ok(EXIT_OK)
        }
        Command::Matrices { input, out: dir } => {
            let (g, gluing) = load(input)?;
            let m = assemble_blocks(&gluing, g.space())?;
            write_matrices(dir, &m)?;
            writeln!(out, "wrote coefficient blocks ({:?}) to {}", m.case, dir.display()).map_err(w)?;
            Ok(EXIT_OK)
        }
        Command::Sample { input, function, grid, out: path } => {
            let (g, _, basis) = c1_basis(input)?;
            let f = basis.functions.get(*function).ok_or_else(|| {
                Error::InvalidParameters(format!("function index {function} out of range 0..{}", basis.len()))
            })?;
            let rows = sample_function(&g, f, *grid)?;
            match path {
                Some(p) => write_samples(p, &rows)?,
                None => out.write_all(samples_csv(&rows).as_bytes()).map_err(w)?,
            }
            Ok(EXIT_OK)
        }
        Command::Condition { input, space, order } => condition(input, *space, *order, out),
        Command::Verify(input) => verify(input, out),
    }
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
