use clap::{Args, Parser, Subcommand};
use pga_cli::commands::{
    cmd_eval, cmd_exp, cmd_log, cmd_simulate, cmd_table, parse_signature, Operand,
};
use pga_cli::CliError;
use std::path::PathBuf;
use std::process::ExitCode;

/// Plane-based geometric algebra calculator and rigid-body simulator.
#[derive(Parser)]
#[command(name = "pga", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Cayley table of a signature.
    Table {
        #[arg(long, default_value = "2,0,1", value_name = "P,N,Z")]
        signature: String,
    },
    /// Evaluate an expression over basis blades.
    Eval {
        expr: String,
        #[arg(long, default_value = "3,0,1", value_name = "P,N,Z")]
        signature: String,
    },
    /// Integrate a scene file and write the trajectory as CSV.
    Simulate {
        scene: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        stride: usize,
    },
    /// Exponential of a bivector.
    Exp(Operands),
    /// Logarithm of a rotor.
    Log {
        #[command(flatten)]
        operands: Operands,
        /// Also print the residual of exp(log g) against g.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Args)]
struct Operands {
    /// Coefficient list: bivector e01,e02,e03,e12,e31,e23 (or E0,E1,E2 in the
    /// plane) for exp; rotor 1,e01,e02,e03,e12,e31,e23,I (or 1,E0,E1,E2) for log.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "expr")]
    coeffs: Option<Vec<f64>>,
    /// The operand as an expression instead.
    #[arg(required_unless_present = "coeffs")]
    expr: Option<String>,
    #[arg(long, default_value = "3,0,1", value_name = "P,N,Z")]
    signature: String,
}

fn operand(o: &Operands) -> Result<Operand<'_>, CliError> {
    match (&o.coeffs, &o.expr) {
        (Some(c), _) => Ok(Operand::Coeffs(c)),
        (None, Some(e)) => Ok(Operand::Expr(e, parse_signature(&o.signature)?)),
        (None, None) => Err(CliError::Usage("give --coeffs or an expression".into())),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Table { signature } => print!("{}", cmd_table(parse_signature(&signature)?)),
        Cmd::Eval { expr, signature } => {
            println!("{}", cmd_eval(&expr, parse_signature(&signature)?)?)
        }
        Cmd::Simulate { scene, out, stride } => {
            let rows = cmd_simulate(&scene, &out, stride)?;
            eprintln!("wrote {rows} rows to {}", out.display());
        }
        Cmd::Exp(o) => println!("{}", cmd_exp(operand(&o)?)?),
        Cmd::Log { operands, check } => println!("{}", cmd_log(operand(&operands)?, check)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
