use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use evoalg::classify;
use evoalg::corpus::{self, CorpusParams};
use evoalg::enumerate::{Budget, DEFAULT_MAX_SUBSPACES};
use evoalg::format;
use evoalg::frattini;
use evoalg::report::{self, AnalyzeOptions};
use evoalg::verify::{self, VerifyConfig};
use evoalg::{Error, FieldSpec};

#[derive(Parser)]
#[command(name = "evoalg", version, about = "Structural invariants of evolution algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and print a JSON report.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Maximum number of subspaces any enumeration may visit.
        #[arg(long, default_value_t = DEFAULT_MAX_SUBSPACES)]
        budget: u64,
        /// Include per-section wall-clock times.
        #[arg(long)]
        timings: bool,
    },
    /// Maximal subalgebras, Frattini subalgebra and ideal (prime field only).
    Frattini {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_SUBSPACES)]
        budget: u64,
    },
    /// Write the subalgebra lattice as DOT and report dual atomisticity.
    Lattice {
        file: PathBuf,
        #[arg(long)]
        dot: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_SUBSPACES)]
        budget: u64,
    },
    /// Almost abelian classification.
    Classify { file: PathBuf },
    /// Write a named example algebra as JSON.
    Examples {
        /// One of the names printed by `evoalg examples list`.
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Comma-separated parameters for `ek`, e.g. `1,-1,0`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambdas: Vec<String>,
        /// Odd prime; rationals when omitted.
        #[arg(long)]
        field: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check theorem-level properties on seeded random algebras over F_p.
    /// Structure matrices are uniform over F_p.
    Verify {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        field: u64,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_SUBSPACES)]
        budget: u64,
    },
}

enum Failure {
    Input(String),
    Budget(String),
    Property,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            file,
            out,
            budget,
            timings,
        } => {
            let e = format::read_algebra(&file)?;
            let opts = AnalyzeOptions {
                budget: Budget::new(budget),
                timings,
            };
            let r = report::analyze(&e, &opts)?;
            emit(&r.to_json(), out.as_deref())
        }
        Command::Frattini { file, budget } => {
            let e = format::read_algebra(&file)?;
            let data = frattini::frattini(&e, &Budget::new(budget))?;
            println!("field: {}", e.field());
            println!("maximal subalgebras: {}", data.maximal.len());
            for m in &data.maximal {
                println!("  {}", m.pretty());
            }
            println!("F(E) = {}", data.f.pretty());
            println!("phi(E) = {}", data.phi.pretty());
            println!("phi-free: {}", data.phi.is_zero());
            Ok(())
        }
        Command::Lattice { file, dot, budget } => {
            let e = format::read_algebra(&file)?;
            let l = frattini::subalgebra_lattice(&e, &Budget::new(budget))?;
            emit(&frattini::lattice_to_dot(&l), Some(&dot))?;
            let bad = l.non_atomistic_nodes();
            println!("subalgebras: {}", l.nodes.len());
            println!("maximal: {}", l.maximal.len());
            println!("dually atomistic: {}", bad.is_empty());
            for s in bad {
                println!("  not an intersection of maximals: {}", s.pretty());
            }
            Ok(())
        }
        Command::Classify { file } => {
            let e = format::read_algebra(&file)?;
            let v = classify::almost_abelian_classify(&e);
            println!("kind: {}", report::kind_name(&v.kind));
            if let classify::AlmostAbelian::AlmostBasicAbelian { basis, .. } = &v.kind {
                let rows: Vec<String> = basis.row_vectors().iter().map(|r| r.pretty()).collect();
                println!("normal form basis: {}", rows.join(", "));
            }
            if let Some(h) = &v.abelian_ideal {
                println!("abelian ideal of codimension one: {}", h.pretty());
            }
            let show = |b: Option<bool>| b.map_or("unknown".to_string(), |b| b.to_string());
            println!("dually atomistic: {}", show(classify::dually_atomistic_structural(&e)));
            println!("phi-free: {}", show(v.phi_free));
            Ok(())
        }
        Command::Examples {
            name,
            n,
            k,
            m,
            lambdas,
            field,
            out,
        } => {
            if name == "list" {
                for n in corpus::NAMES {
                    println!("{n}");
                }
                return Ok(());
            }
            let field = match field {
                Some(p) => FieldSpec::prime(p)?,
                None => FieldSpec::rational(),
            };
            let params = CorpusParams { n, k, m, lambdas };
            let e = corpus::by_name(&name, field, &params)?;
            emit(&format::algebra_to_json(&e), out.as_deref())
        }
        Command::Verify {
            dim,
            field,
            samples,
            seed,
            budget,
        } => {
            let config = VerifyConfig {
                dim,
                field: FieldSpec::prime(field)?,
                samples,
                seed,
                budget: Budget::new(budget),
            };
            let r = verify::run(&config)?;
            print!("{r}");
            if r.passed() {
                Ok(())
            } else {
                Err(Failure::Property)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Property) => ExitCode::from(3),
    }
}
