use std::fs;
use std::num::NonZeroU64;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cubecalc::{
    limits_from_env, mc_estimate, parse_dimacs, parse_poly, serialize_poly, write_dimacs, Body,
    ParseError, PolyDocument,
};
use cubecalc_core::sat::{
    compile_derivative_instance, compile_integration_instance, decide, default_gadgets,
    reduce_3sat_to_33sat, verify_gadgets, CnfFormula, Evidence, Route,
};
use cubecalc_core::{
    derivative_at_origin_oracle, expand_prodmulti, expand_prodsum, integrate_cwide,
    integrate_prodsum, multilinear_coefficient, width_of, ErrorKind, Limits,
};

#[derive(Parser)]
#[command(
    name = "cubecalc",
    version,
    about = "Exact unit-cube integrals and multilinear coefficients of product polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the seven gadget integrals.
    VerifyGadgets,
    /// Integrate a polynomial document over the unit cube.
    Integrate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = IntMethod::Dp)]
        method: IntMethod,
        /// Width for `cwide`; defaults to the product's own width.
        #[arg(long)]
        c: Option<usize>,
    },
    /// Coefficient of x0*x1*...*x(n-1), i.e. the mixed derivative at the origin.
    Derivative {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = DerivMethod::Prune)]
        method: DerivMethod,
    },
    /// Rewrite a 3-CNF so each variable occurs at most twice positive and once negative.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Turn a (3,3) CNF into a polynomial document.
    Compile {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        scale: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decide satisfiability of a 3-CNF.
    Decide {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Via::Integration)]
        via: Via,
    },
    /// Monte-Carlo estimate of the integral of a polynomial document.
    Estimate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = NonZeroU64::new(100_000).unwrap())]
        samples: NonZeroU64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IntMethod {
    Dp,
    Expand,
    Cwide,
}

#[derive(Clone, Copy, ValueEnum)]
enum DerivMethod {
    Prune,
    Expand,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Integration,
    Derivative,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Integration,
    Derivative,
    Truthtable,
}

enum Failure {
    Io(String),
    Usage(String),
    Check(String),
    Parse(ParseError),
    Core(cubecalc_core::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Check(_) => 4,
            Failure::Parse(_) => 3,
            Failure::Core(e) => match e.kind() {
                ErrorKind::Precondition => 4,
                ErrorKind::Resource => 5,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(m) | Failure::Usage(m) | Failure::Check(m) => m.clone(),
            Failure::Parse(e) => format!("parse error: {e}"),
            Failure::Core(e) => match e.kind() {
                ErrorKind::Precondition => format!("precondition failed: {e}"),
                ErrorKind::Resource => format!("resource limit: {e}"),
            },
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<cubecalc_core::Error> for Failure {
    fn from(e: cubecalc_core::Error) -> Self {
        Failure::Core(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_doc(path: &Path) -> Result<PolyDocument, Failure> {
    Ok(parse_poly(&read(path)?)?)
}

fn read_cnf(path: &Path) -> Result<CnfFormula, Failure> {
    Ok(parse_dimacs(&read(path)?)?)
}

fn run(cmd: Command, limits: &Limits) -> Result<(), Failure> {
    match cmd {
        Command::VerifyGadgets => {
            let report = verify_gadgets(&default_gadgets());
            for c in &report.checks {
                let verdict = if c.pass { "ok" } else { "FAILED" };
                println!("{} = {} {verdict}", c.name, c.value);
            }
            if !report.all_pass() {
                return Err(Failure::Check("gadget check failed".into()));
            }
        }
        Command::Integrate { input, method, c } => {
            let doc = read_doc(&input)?;
            let value = match (method, &doc.body) {
                (IntMethod::Dp, Body::ProdSum(p)) => integrate_prodsum(p, limits)?,
                (IntMethod::Dp, Body::ProdMulti(_)) => {
                    return Err(Failure::Usage(
                        "--method dp needs a prodsum document".into(),
                    ))
                }
                (IntMethod::Expand, Body::ProdSum(p)) => {
                    expand_prodsum(p, limits)?.integrate01_all()
                }
                (IntMethod::Expand, Body::ProdMulti(p)) => {
                    expand_prodmulti(p, limits)?.integrate01_all()
                }
                (IntMethod::Cwide, _) => {
                    let p = doc.to_prodmulti();
                    let c = c.unwrap_or_else(|| width_of(&p));
                    integrate_cwide(&p, c, limits)?
                }
            };
            println!("{value}");
        }
        Command::Derivative { input, method } => {
            let doc = read_doc(&input)?;
            let p = doc.to_prodmulti();
            let vars = doc.vars();
            let value = match method {
                DerivMethod::Prune => multilinear_coefficient(&p, &vars, limits)?,
                DerivMethod::Expand => derivative_at_origin_oracle(&p, &vars, limits)?,
            };
            println!("{value}");
        }
        Command::Reduce { input, out } => {
            let f = read_cnf(&input)?;
            let g = reduce_3sat_to_33sat(&f)?;
            write(&out, &write_dimacs(&g))?;
            println!("{} variables, {} clauses", g.num_vars(), g.clauses().len());
        }
        Command::Compile {
            target,
            input,
            scale,
            out,
        } => {
            let f = read_cnf(&input)?;
            let doc = match target {
                Target::Integration => {
                    let p = compile_integration_instance(&f, &default_gadgets(), scale)?;
                    PolyDocument::from_prodsum(p).with_num_vars(f.num_vars())
                }
                Target::Derivative => {
                    let inst = compile_derivative_instance(&f, scale)?;
                    PolyDocument::from_prodmulti(inst.product).with_num_vars(inst.vars.len())
                }
            };
            write(&out, &serialize_poly(&doc))?;
            println!(
                "{} factors over {} variables",
                factor_count(&doc),
                doc.num_vars
            );
        }
        Command::Decide { input, via } => {
            let f = read_cnf(&input)?;
            let route = match via {
                Via::Integration => Route::Integration,
                Via::Derivative => Route::Derivative,
                Via::Truthtable => Route::TruthTable,
            };
            let d = decide(&f, route, limits)?;
            println!("{}", if d.satisfiable { "sat" } else { "unsat" });
            match d.evidence {
                Evidence::Simplification => println!("decided by simplification"),
                Evidence::Integral(v) => println!("integral = {v}"),
                Evidence::Coefficient(v) => println!("coefficient = {v}"),
                Evidence::TruthTable => println!("decided by truth table"),
            }
        }
        Command::Estimate {
            input,
            samples,
            seed,
        } => {
            let doc = read_doc(&input)?;
            let e = mc_estimate(&doc, samples, seed);
            println!("mean = {:.10}", e.mean);
            println!("stderr = {:.10}", e.std_error);
            println!(
                "samples = {} seed = {} rng = {}",
                e.samples,
                e.seed,
                e.algorithm()
            );
        }
    }
    Ok(())
}

fn factor_count(doc: &PolyDocument) -> usize {
    match &doc.body {
        Body::ProdSum(p) => p.factors().len(),
        Body::ProdMulti(p) => p.factors().len(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = limits_from_env()
        .map_err(Failure::Usage)
        .and_then(|limits| run(cli.command, &limits));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("cubecalc: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
