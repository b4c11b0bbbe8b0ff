//! Argument definitions and dispatch.

use clap::{Args, Parser, Subcommand};
use cotan_core::charlib::Engine;
use cotan_core::theorems::{
    tilting_weight_envelope_check, verify_kempf_dominance, verify_linkage_uniqueness, verify_weighteq, Theorem,
    DEFAULT_MODULE_CAP,
};
use cotan_core::{NodeSet, RootSystem, RootSystemSpec};

use crate::args::{parse_spec, Coords, Indices, SweepSystems};
use crate::commands::{self, PredictArgs};
use crate::error::CliError;
use crate::render::{render, OutputFormat};
use crate::reports::CharacterMethod;
use crate::sweep::{run_sweep, Check, SweepOptions};

#[derive(Debug, Parser)]
#[command(name = "cotan", version, about = "Exact character computations for twisted cotangent bundles of flag varieties")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TypeArg {
    /// Cartan type, e.g. A2, B3, G2.
    #[arg(long = "type", value_parser = parse_spec)]
    pub ty: RootSystemSpec,
}

#[derive(Debug, Args)]
pub struct JArg {
    /// Comma-separated 1-based simple indices; "" for the empty set.
    #[arg(long = "J", default_value = "")]
    pub j: Indices,
}

#[derive(Debug, Args)]
pub struct GammaArg {
    /// Twist γ in fundamental coordinates.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub gamma: Coords,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan data and positive roots.
    Roots {
        #[command(flatten)]
        ty: TypeArg,
    },
    /// The Weyl group, or one element given by --w.
    Weyl {
        #[command(flatten)]
        ty: TypeArg,
        /// 1-based word in the simple reflections.
        #[arg(long)]
        w: Option<Indices>,
        /// Weight to act on (with --w).
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<Coords>,
    },
    /// Minimal coset representatives ^J W and the adapted reduced word of w0.
    Coset {
        #[command(flatten)]
        ty: TypeArg,
        #[command(flatten)]
        j: JArg,
    },
    /// q-analog of Kostant's partition function over the roots of u_J.
    Kostant {
        #[command(flatten)]
        ty: TypeArg,
        #[command(flatten)]
        j: JArg,
        /// Simple-root coordinates of μ.
        #[arg(long, allow_hyphen_values = true)]
        mu: Coords,
    },
    /// Character of H^0(λ), or of the Levi module H^0_J(λ) with --J.
    Character {
        #[command(flatten)]
        ty: TypeArg,
        /// Levi nodes; defaults to the whole of Δ.
        #[arg(long = "J")]
        j: Option<Indices>,
        /// Highest weight.
        #[arg(long, visible_alias = "sigma", allow_hyphen_values = true)]
        lambda: Coords,
        #[arg(long, value_enum, default_value_t = MethodArg::Kostant)]
        method: MethodArg,
    },
    /// Euler characteristic of ind_{P_J}^G S^n(u_J^*) ⊗ γ in H^0-multiplicities.
    Induce {
        #[command(flatten)]
        ty: TypeArg,
        #[command(flatten)]
        j: JArg,
        #[command(flatten)]
        gamma: GammaArg,
        /// Single degree.
        #[arg(long, conflicts_with = "upto")]
        n: Option<usize>,
        /// All degrees 0..=D.
        #[arg(long)]
        upto: Option<usize>,
    },
    /// Graded multiplicity [ind S^•(u_J^*) ⊗ γ : H^0(σ)]_q, or the table up to a degree.
    Multiplicity {
        #[command(flatten)]
        ty: TypeArg,
        #[command(flatten)]
        j: JArg,
        #[command(flatten)]
        gamma: GammaArg,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "upto")]
        sigma: Option<Coords>,
        #[arg(long)]
        upto: Option<usize>,
        /// Keep negative coefficients instead of failing.
        #[arg(long)]
        allow_negative: bool,
    },
    /// Poincaré series of ind_{P_J}^G S^•(u_J^*) ⊗ γ by symmetric degree.
    Series {
        #[command(flatten)]
        ty: TypeArg,
        #[command(flatten)]
        j: JArg,
        #[command(flatten)]
        gamma: GammaArg,
        #[arg(long, default_value_t = 6)]
        upto: usize,
    },
    /// Predicted cohomology from one of the realization theorems.
    Predict {
        /// 3.3, 4.2, 5.1, 7.1, 7.3 or 7.4.
        #[arg(long, value_parser = parse_theorem)]
        thm: Theorem,
        #[command(flatten)]
        ty: TypeArg,
        /// ℓ (quantum) or p (Frobenius).
        #[arg(long = "l")]
        ell: i64,
        #[command(flatten)]
        j: JArg,
        #[command(flatten)]
        gamma: GammaArg,
        #[arg(long, default_value = "")]
        w: Indices,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 10)]
        upto: usize,
    },
    /// Brute-force checks of the weight combinatorics in the proofs.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Richardson orbit of a type A parabolic and its coordinate ring series.
    Orbit {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        j: JArg,
        #[arg(long, default_value_t = 6)]
        upto: usize,
    },
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
pub enum MethodArg {
    Kostant,
    Freudenthal,
}

#[derive(Debug, Args)]
pub struct VerifyTarget {
    #[command(flatten)]
    pub ty: TypeArg,
    #[arg(long = "l")]
    pub ell: i64,
    #[command(flatten)]
    pub j: JArg,
    #[arg(long, default_value = "")]
    pub w: Indices,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Solutions of ε_J + ℓν = μ + y·0 + σ.
    Weighteq {
        #[command(flatten)]
        target: VerifyTarget,
        /// Largest dim H^0(ε_J) searched.
        #[arg(long, default_value_t = DEFAULT_MODULE_CAP)]
        cap: i64,
    },
    /// ε_J + μ + ℓγ ∈ X⁺ for the weights μ of H^0_J(−w_{0,J}(w·0)).
    Kempf {
        #[command(flatten)]
        target: VerifyTarget,
        #[command(flatten)]
        gamma: GammaArg,
    },
    /// Uniqueness of linkage classes among y·0 + ℓν.
    Linkage {
        #[command(flatten)]
        target: VerifyTarget,
        #[arg(long, default_value_t = 3)]
        nu_bound: i64,
    },
    /// Dominance of the tilting weight envelope shifted by ℓγ.
    Envelope {
        #[command(flatten)]
        target: VerifyTarget,
        #[command(flatten)]
        gamma: GammaArg,
    },
    /// All J and w ∈ ^J W for a list of TYPE[:ℓ] (ℓ defaults to 2h+1).
    Sweep {
        #[arg(long)]
        systems: SweepSystems,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "weighteq,kempf")]
        checks: Vec<Check>,
        #[arg(long)]
        identity_only: bool,
        #[arg(long, default_value_t = 3)]
        nu_bound: i64,
        #[arg(long, default_value_t = DEFAULT_MODULE_CAP)]
        cap: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: cotan_core::Error| e.to_string())
}

struct Target {
    engine: Engine,
    j: NodeSet,
}

fn engine(spec: RootSystemSpec) -> Result<Engine, CliError> {
    Ok(Engine::new(spec)?)
}

fn target(ty: &TypeArg, j: &JArg) -> Result<Target, CliError> {
    let engine = engine(ty.ty)?;
    let j = j.j.nodes(engine.rank(), "--J")?;
    Ok(Target { engine, j })
}

/// Runs a parsed command and returns the rendered output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Roots { ty } => render(&commands::roots(ty.ty)?, fmt),
        Command::Weyl { ty, w, lambda } => match w {
            None => {
                if lambda.is_some() {
                    return Err(CliError::usage("--lambda", "requires --w"));
                }
                render(&commands::weyl_group(ty.ty)?, fmt)
            }
            Some(word) => {
                let rs = RootSystem::build(ty.ty)?;
                let w = word.element(&rs, "--w")?;
                let lambda = lambda.as_ref().map(|l| l.weight(rs.rank(), "--lambda")).transpose()?;
                render(&commands::weyl_element(&rs, &w, lambda)?, fmt)
            }
        },
        Command::Coset { ty, j } => {
            let rs = RootSystem::build(ty.ty)?;
            let j = j.j.nodes(rs.rank(), "--J")?;
            render(&commands::coset(&rs, j)?, fmt)
        }
        Command::Kostant { ty, j, mu } => {
            let rs = RootSystem::build(ty.ty)?;
            let j = j.j.nodes(rs.rank(), "--J")?;
            let mu = mu.root(rs.rank(), "--mu")?;
            render(&commands::kostant(&rs, j, &mu)?, fmt)
        }
        Command::Character { ty, j, lambda, method } => {
            let engine = engine(ty.ty)?;
            let j = match j {
                Some(j) => j.nodes(engine.rank(), "--J")?,
                None => engine.full_nodes(),
            };
            let lambda = lambda.weight(engine.rank(), "--lambda")?;
            let method = match method {
                MethodArg::Kostant => CharacterMethod::Kostant,
                MethodArg::Freudenthal => CharacterMethod::Freudenthal,
            };
            render(&commands::character(&engine, &lambda, j, method)?, fmt)
        }
        Command::Induce { ty, j, gamma, n, upto } => {
            let t = target(ty, j)?;
            let gamma = gamma.gamma.weight(t.engine.rank(), "--gamma")?;
            let degrees: Vec<usize> = match (n, upto) {
                (Some(n), _) => vec![*n],
                (None, Some(d)) => (0..=*d).collect(),
                (None, None) => return Err(CliError::usage("--n", "one of --n or --upto is required")),
            };
            render(&commands::induce(&t.engine, t.j, &gamma, degrees)?, fmt)
        }
        Command::Multiplicity { ty, j, gamma, sigma, upto, allow_negative } => {
            let t = target(ty, j)?;
            let gamma = gamma.gamma.weight(t.engine.rank(), "--gamma")?;
            let checked = !allow_negative;
            let report = match (sigma, upto) {
                (Some(s), _) => {
                    let sigma = s.weight(t.engine.rank(), "--sigma")?;
                    commands::multiplicity(&t.engine, t.j, &gamma, &sigma, checked)?
                }
                (None, Some(d)) => commands::multiplicity_table(&t.engine, t.j, &gamma, *d, checked)?,
                (None, None) => return Err(CliError::usage("--sigma", "one of --sigma or --upto is required")),
            };
            render(&report, fmt)
        }
        Command::Series { ty, j, gamma, upto } => {
            let t = target(ty, j)?;
            let gamma = gamma.gamma.weight(t.engine.rank(), "--gamma")?;
            render(&commands::series(&t.engine, t.j, &gamma, *upto)?, fmt)
        }
        Command::Predict { thm, ty, ell, j, gamma, w, t, upto } => {
            let tg = target(ty, j)?;
            let rs = tg.engine.root_system();
            let args = PredictArgs {
                theorem: *thm,
                ell: *ell,
                j: tg.j,
                gamma: gamma.gamma.weight(rs.rank(), "--gamma")?,
                w: w.element(rs, "--w")?,
                t: *t,
                up_to: *upto,
            };
            render(&commands::predict(&tg.engine, args)?, fmt)
        }
        Command::Verify { check } => run_verify(check, fmt),
        Command::Orbit { n, j, upto } => {
            if *n == 0 {
                return Err(CliError::usage("--n", "must be positive"));
            }
            let j = j.j.nodes(n - 1, "--J")?;
            render(&commands::orbit(*n, j, *upto)?, fmt)
        }
    }
}

fn run_verify(check: &VerifyCommand, fmt: OutputFormat) -> Result<String, CliError> {
    let resolve = |t: &VerifyTarget| -> Result<(Target, cotan_core::WeylElement), CliError> {
        let tg = target(&t.ty, &t.j)?;
        let w = t.w.element(tg.engine.root_system(), "--w")?;
        Ok((tg, w))
    };
    match check {
        VerifyCommand::Weighteq { target, cap } => {
            let (t, w) = resolve(target)?;
            render(&verify_weighteq(&t.engine, target.ell, t.j, &w, *cap)?, fmt)
        }
        VerifyCommand::Kempf { target, gamma } => {
            let (t, w) = resolve(target)?;
            let gamma = gamma.gamma.weight(t.engine.rank(), "--gamma")?;
            render(&verify_kempf_dominance(&t.engine, target.ell, t.j, &w, &gamma)?, fmt)
        }
        VerifyCommand::Linkage { target, nu_bound } => {
            let (t, w) = resolve(target)?;
            render(&verify_linkage_uniqueness(&t.engine, target.ell, t.j, &w, *nu_bound)?, fmt)
        }
        VerifyCommand::Envelope { target, gamma } => {
            let (t, w) = resolve(target)?;
            let gamma = gamma.gamma.weight(t.engine.rank(), "--gamma")?;
            render(&tilting_weight_envelope_check(&t.engine, target.ell, t.j, &w, &gamma)?, fmt)
        }
        VerifyCommand::Sweep { systems, checks, identity_only, nu_bound, cap, jobs } => {
            if *jobs == 0 {
                return Err(CliError::usage("--jobs", "must be at least 1"));
            }
            let mut checks = checks.clone();
            checks.sort();
            checks.dedup();
            let opts = SweepOptions {
                systems: systems.0.clone(),
                checks,
                identity_only: *identity_only,
                nu_bound: *nu_bound,
                cap: *cap,
                jobs: *jobs,
            };
            render(&run_sweep(&opts)?, fmt)
        }
    }
}
