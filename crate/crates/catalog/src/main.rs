use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use catalog::commands::{
    canonicalize_cw_command, enumerate_command, parse_direction, reduce_command, susy_command, verify_command,
};
use catalog::expr::{eval, Bindings};
use catalog::{CatalogError, Envelope, Overrides, Perturbation};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Verify supergravity backgrounds and reproduce the classification of
/// parallelisable type II backgrounds, in exact arithmetic.
#[derive(Parser)]
#[command(name = "catalog", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Field equations and maximal-supersymmetry conditions of builtin
    /// backgrounds (`all` for every one) or background files.
    Verify {
        #[arg(required = true)]
        targets: Vec<String>,
        #[command(flatten)]
        params: ParamArgs,
        /// `Aij=<scalar>` (1-based), `swap-radii` or `nonclosed-H`.
        #[arg(long = "perturb")]
        perturb: Vec<String>,
    },
    /// Ten-dimensional parallelisable products and their dilatons.
    Enumerate {
        /// Also print the elementary factors and the supersymmetry counts.
        #[arg(long)]
        tables: bool,
    },
    /// Killing spinors of a product such as "CW6(A) x E^4", or of a builtin.
    Susy {
        target: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Canonical eigenvalues of a Cahen-Wallach matrix read from a file.
    CanonicalizeCw { matrix: PathBuf },
    /// Kaluza-Klein reduction along a spacelike direction.
    Reduce {
        target: String,
        /// Comma-separated components, e.g. `0,0,0,0,1,0`.
        #[arg(long, allow_hyphen_values = true)]
        along: String,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// The curvature parameter `R`.
    #[arg(long = "r", allow_hyphen_values = true)]
    r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Any other parameter, as `name=<scalar>`.
    #[arg(long = "set")]
    set: Vec<String>,
}

impl ParamArgs {
    fn overrides(&self, perturb: &[String]) -> Result<Overrides, CatalogError> {
        let mut params = Bindings::new();
        let empty = Bindings::new();
        for (name, v) in [("mu", &self.mu), ("R", &self.r), ("alpha", &self.alpha), ("beta", &self.beta)] {
            if let Some(v) = v {
                params.insert(name.to_string(), eval(v, &empty)?);
            }
        }
        for s in &self.set {
            let (k, v) = s.split_once('=').ok_or_else(|| CatalogError::Malformed(format!("expected name=value, got `{s}`")))?;
            params.insert(k.trim().to_string(), eval(v, &empty)?);
        }
        let perturbations = perturb.iter().map(|p| p.parse::<Perturbation>()).collect::<Result<_, _>>()?;
        Ok(Overrides { params, perturbations })
    }
}

fn run(cli: &Cli) -> Result<(Envelope, String), CatalogError> {
    Ok(match &cli.command {
        Command::Verify { targets, params, perturb } => {
            (verify_command(targets, &params.overrides(perturb)?)?, format!("verify-{}", targets.join("-")))
        }
        Command::Enumerate { tables } => (enumerate_command(*tables)?, "enumerate".into()),
        Command::Susy { target, params } => (susy_command(target, &params.overrides(&[])?)?, format!("susy-{target}")),
        Command::CanonicalizeCw { matrix } => {
            let text = std::fs::read_to_string(matrix).map_err(|e| CatalogError::Malformed(format!("{}: {e}", matrix.display())))?;
            (canonicalize_cw_command(&text)?, "canonicalize-cw".into())
        }
        Command::Reduce { target, along, params } => {
            (reduce_command(target, &parse_direction(along)?, &params.overrides(&[])?)?, format!("reduce-{target}"))
        }
    })
}

fn file_stem(name: &str) -> String {
    name.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '.' { c } else { '_' }).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (env, name) = match run(&cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let json = serde_json::to_string_pretty(&env).expect("reports serialize");
    let text = match cli.format {
        Format::Text => env.to_text(),
        Format::Json => format!("{json}\n"),
    };
    // a closed downstream pipe is not an error of ours
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if let Ok(dir) = std::env::var("CATALOG_REPORT_DIR") {
        let path = PathBuf::from(dir).join(format!("{}.json", file_stem(&name)));
        if let Err(e) = std::fs::create_dir_all(path.parent().expect("joined path")).and_then(|()| std::fs::write(&path, &json)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if env.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
