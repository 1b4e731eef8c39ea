use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hopfad::groups::Group;
use hopfad::hopf::parse_hsc;
use hopfad::Field;
use hopfad_cli::builtin;
use hopfad_cli::commands::{self, FamilySpec};
use hopfad_cli::report::{Check, Report};

const USAGE_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "hopfad", version, about = "Exact checks on the adjoint representation of Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Orbit budget in dimensions.
    #[arg(long, global = true, env = "HOPFAD_BUDGET", default_value_t = 200)]
    budget: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Hopf axioms and adjoint-action identities of a finite-dimensional algebra.
    Verify {
        /// A structure-constant file (.hsc).
        file: Option<PathBuf>,
        /// sweedler, taft:N, small-quantum:N, group:<group> or dual:<builtin>.
        #[arg(long)]
        builtin: Option<String>,
        #[arg(long)]
        field: Option<String>,
        /// Random cases per identity.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Local finiteness of the adjoint action on quantum sl2.
    Adfin {
        /// uq-sl2 or uq-sl2-quotient:N.
        #[arg(long, default_value = "uq-sl2-quotient:3")]
        algebra: String,
        /// ratfunc, cyclotomic:N or fp:P,ROOT.
        #[arg(long)]
        field: Option<String>,
        /// Largest |b| of the probed monomials F^a K^b E^c.
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
    /// FC-center of a group against orbits in its adjoint module.
    Fc {
        /// dinf, heis, free2, z, perm:<cycles>,…, prod:<a>,<b> or a small group name.
        group: String,
        /// Largest word length of the probed elements.
        #[arg(long, visible_alias = "window", default_value_t = 4)]
        length: usize,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Product filtration of a family of left coideal subalgebras.
    Dietzmann {
        /// Family description (.json).
        file: PathBuf,
    },
    /// Locally finite part of a tensor product of kZ-modules.
    Tensorfin {
        /// Summands of V joined by '+': regular, trivial, sign, char:<scalar>.
        #[arg(long, default_value = "regular+trivial")]
        v: String,
        #[arg(long, default_value = "regular+sign")]
        w: String,
        /// Regular-summand keys per factor.
        #[arg(long, default_value_t = 40)]
        window: usize,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Random combinations checked besides the pure tensors.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn run(cli: &Cli) -> Result<Vec<Check>, String> {
    let e = |e: hopfad::Error| e.to_string();
    match &cli.command {
        Command::Verify {
            file,
            builtin,
            field,
            samples,
        } => {
            let field = field.as_deref().map(builtin::parse_field).transpose().map_err(e)?;
            let h = match (file, builtin) {
                (Some(path), None) => {
                    let text = std::fs::read_to_string(path).map_err(|err| format!("{}: {err}", path.display()))?;
                    parse_hsc(&text).map_err(|err| format!("{}: {err}", path.display()))?
                }
                (None, Some(name)) => builtin::algebra(name, field.as_ref()).map_err(e)?,
                _ => return Err("give exactly one of a file or --builtin".into()),
            };
            commands::verify(&h, cli.seed, *samples).map_err(e)
        }
        Command::Adfin {
            algebra,
            field,
            window,
        } => {
            let alg = builtin::presented(algebra, field.as_deref()).map_err(e)?;
            commands::adfin(&alg, *window, cli.budget).map_err(e)
        }
        Command::Fc { group, length, field } => {
            let g = Group::parse(group).map_err(e)?;
            let f = builtin::parse_field(field).map_err(e)?;
            commands::fc(&g, *length, cli.budget, &f).map_err(e)
        }
        Command::Dietzmann { file } => {
            let text = std::fs::read_to_string(file).map_err(|err| format!("{}: {err}", file.display()))?;
            let spec: FamilySpec =
                serde_json::from_str(&text).map_err(|err| format!("{}: {err}", file.display()))?;
            commands::dietzmann(&spec, cli.budget).map_err(e)
        }
        Command::Tensorfin {
            v,
            w,
            window,
            field,
            samples,
        } => {
            let f: Field = builtin::parse_field(field).map_err(e)?;
            let v = builtin::kz_module(v, &f).map_err(e)?;
            let w = builtin::kz_module(w, &f).map_err(e)?;
            commands::tensorfin(&v, &w, *window, cli.budget, cli.seed, *samples).map_err(e)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(err) => {
            let code = if err.use_stderr() { USAGE_ERROR } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let checks = match run(&cli) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let report = Report::new(std::env::args().collect(), checks);
    let text = if cli.json {
        report.to_json() + "\n"
    } else {
        report.to_table()
    };
    // a closed pipe (e.g. `| head`) is not an error
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::from(report.exit_code())
}
