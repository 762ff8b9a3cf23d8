mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exphilbert::series::{dim_irrep, exp_series_operator, taylor_dimension};
use exphilbert::{analyze, DominantWeight, DynkinFamily, DynkinType, Error, Identity, RootSystem};

use output::{OutputDocument, Request};

/// Exact Hilbert data of projective orbits X_λ ⊂ P(L(λ)).
#[derive(Parser, Debug)]
#[command(name = "exphilbert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, degree, dim L(λ), p(x), Hilbert polynomial and series.
    Analyze {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Table of dim L(nλ) for n = 0..=n-max.
    Series {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 10)]
        n_max: u64,
    },
    /// Cartan matrix, symmetrizers and positive roots.
    Roots {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Check a combinatorial identity, or `all` of them.
    Verify {
        /// binomial, 4.3, 4.4, 4.5, stirling-recursion, rho or all
        identity: String,
        #[arg(long)]
        n_max: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct SystemArgs {
    #[arg(long = "type", value_name = "A..G", value_parser = parse_family)]
    family: DynkinFamily,
    #[arg(long)]
    rank: usize,
    /// Permit E7 and E8, whose computations are noticeably larger.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args, Debug)]
struct WeightArgs {
    /// Coordinates of λ in the fundamental weights, e.g. 1,0.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    weight: Vec<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn parse_family(s: &str) -> Result<DynkinFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    /// Bad request; exit 2.
    Input(String),
    /// A broken internal invariant; exit 3.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

impl SystemArgs {
    fn build(&self, large_is_expensive: bool) -> Result<RootSystem, Failure> {
        let ty = DynkinType::new(self.family, self.rank)?;
        if large_is_expensive && self.family == DynkinFamily::E && self.rank >= 7 && !self.allow_large {
            return Err(Failure::Input(format!("{ty} is large; pass --allow-large to compute it")));
        }
        Ok(RootSystem::new(ty))
    }

    fn request(&self) -> Request {
        Request {
            family: Some(self.family.to_string()),
            rank: Some(self.rank),
            ..Request::default()
        }
    }
}

fn weight(system: &RootSystem, args: &WeightArgs) -> Result<DominantWeight, Failure> {
    let lambda = DominantWeight::new(args.weight.clone());
    system.check_weight(&lambda)?;
    Ok(lambda)
}

/// Returns the document and whether every check in it passed.
fn run(command: &Command) -> Result<(OutputDocument, bool), Failure> {
    match command {
        Command::Analyze { system: s, weight: w } => {
            let system = s.build(true)?;
            let lambda = weight(&system, w)?;
            let data = analyze(&system, &lambda)?;
            let mut doc = OutputDocument::new("analyze", Request {
                weight: Some(w.weight.clone()),
                ..s.request()
            });
            doc.analysis = Some(output::analysis(&data, &system.c_values(&lambda)?));
            Ok((doc, true))
        }
        Command::Series { system: s, weight: w, n_max } => {
            let system = s.build(true)?;
            let lambda = weight(&system, w)?;
            let p = exp_series_operator(&system, &lambda)?;
            let mut dims = Vec::new();
            for n in 0..=*n_max {
                let taylor = taylor_dimension(&p, n)?;
                let weyl = dim_irrep(&system, &lambda, n)?;
                if taylor != weyl {
                    return Err(Failure::Internal(format!(
                        "series coefficient {taylor} disagrees with dim L({n}λ) = {weyl}"
                    )));
                }
                dims.push(taylor);
            }
            let mut doc = OutputDocument::new("series", Request {
                weight: Some(w.weight.clone()),
                n_max: Some(*n_max as usize),
                ..s.request()
            });
            doc.series = Some(output::series(p.polynomial(), &dims));
            Ok((doc, true))
        }
        Command::Roots { system: s } => {
            let system = s.build(false)?;
            let mut doc = OutputDocument::new("roots", s.request());
            doc.roots = Some(output::roots(&system));
            Ok((doc, true))
        }
        Command::Verify { identity, n_max } => {
            let reports = if identity == "all" {
                if n_max.is_some() {
                    return Err(Failure::Input("--n-max applies to a single identity, not `all`".into()));
                }
                exphilbert::identities::verify_all()
            } else {
                let id: Identity = identity.parse().map_err(Failure::Input)?;
                vec![id.run(*n_max)]
            };
            let ok = reports.iter().all(|r| r.verified());
            let mut doc = OutputDocument::new("verify", Request {
                identity: Some(identity.clone()),
                n_max: *n_max,
                ..Request::default()
            });
            doc.verification = Some(reports.iter().map(output::report).collect());
            Ok((doc, ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((doc, ok)) => {
            match cli.format {
                Format::Json => println!("{}", doc.to_json()),
                Format::Text => print!("{}", doc.to_text()),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
