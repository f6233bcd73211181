//! Text-producing command bodies; `main` only parses arguments and prints.

use crate::error::CliError;
use crate::expr::evaluate;
use crate::scene::{simulate, SceneConfig};
use pga_core::versor::{exp_bivector, log_rotor};
use pga_core::{Algebra, Multivector, Signature};
use std::path::Path;

pub fn parse_signature(s: &str) -> Result<Signature, CliError> {
    s.parse::<Signature>()
        .map_err(|e| CliError::Usage(e.to_string()))
}

/// Cayley table, rows are left factors, columns padded to a common width.
pub fn cmd_table(sig: Signature) -> String {
    let alg = Algebra::get(sig);
    let names: Vec<&str> = alg.blades().iter().map(|b| b.name.as_str()).collect();
    let table = alg.cayley_table();
    let cells: Vec<Vec<String>> = table
        .iter()
        .map(|row| row.iter().map(|&c| alg.cell_text(c)).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .chain(names.iter().map(|n| n.len()))
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    let line = |first: &str, rest: &mut dyn Iterator<Item = &str>| {
        let mut s = format!("{first:>width$} |");
        for c in rest {
            s.push_str(&format!(" {c:>width$}"));
        }
        s.trim_end().to_string() + "\n"
    };
    out.push_str(&line("", &mut names.iter().copied()));
    out.push_str(&"-".repeat((width + 1) * (names.len() + 1) + 1));
    out.push('\n');
    for (name, row) in names.iter().zip(&cells) {
        out.push_str(&line(name, &mut row.iter().map(String::as_str)));
    }
    out
}

pub fn cmd_eval(expr: &str, sig: Signature) -> Result<String, CliError> {
    Ok(evaluate(expr, Algebra::get(sig))?.to_string())
}

/// Blade names accepted by `--coeffs` for `exp`, keyed by list length.
fn bivector_blades(n: usize) -> Option<(&'static Algebra, &'static [&'static str])> {
    match n {
        3 => Some((Algebra::pga2(), &["E0", "E1", "E2"])),
        6 => Some((Algebra::pga3(), &["e01", "e02", "e03", "e12", "e31", "e23"])),
        _ => None,
    }
}

/// Blade names accepted by `--coeffs` for `log`, keyed by list length.
fn rotor_blades(n: usize) -> Option<(&'static Algebra, &'static [&'static str])> {
    match n {
        4 => Some((Algebra::pga2(), &["1", "E0", "E1", "E2"])),
        8 => Some((
            Algebra::pga3(),
            &["1", "e01", "e02", "e03", "e12", "e31", "e23", "I"],
        )),
        _ => None,
    }
}

fn from_named(alg: &'static Algebra, names: &[&str], c: &[f64]) -> Multivector {
    let mut m = Multivector::zero_in(alg);
    for (name, &x) in names.iter().zip(c) {
        m.set(alg.index_of(name).expect("known blade"), x);
    }
    m
}

/// Operand of `exp`/`log`: a coefficient list or an expression.
pub enum Operand<'a> {
    Coeffs(&'a [f64]),
    Expr(&'a str, Signature),
}

pub fn cmd_exp(arg: Operand) -> Result<String, CliError> {
    let b = match arg {
        Operand::Coeffs(c) => {
            let (alg, names) = bivector_blades(c.len()).ok_or_else(|| {
                CliError::Usage(format!(
                    "exp takes 3 (plane) or 6 (space) bivector coefficients, got {}",
                    c.len()
                ))
            })?;
            from_named(alg, names, c)
        }
        Operand::Expr(e, sig) => evaluate(e, Algebra::get(sig))?,
    };
    Ok(exp_bivector(&b)?.to_string())
}

/// `log g`; with `check`, a second line gives the residual of `exp(log g)` against `±g/‖g‖`.
pub fn cmd_log(arg: Operand, check: bool) -> Result<String, CliError> {
    let g = match arg {
        Operand::Coeffs(c) => {
            let (alg, names) = rotor_blades(c.len()).ok_or_else(|| {
                CliError::Usage(format!(
                    "log takes 4 (plane) or 8 (space) rotor coefficients, got {}",
                    c.len()
                ))
            })?;
            from_named(alg, names, c)
        }
        Operand::Expr(e, sig) => evaluate(e, Algebra::get(sig))?,
    };
    let l = log_rotor(&g)?;
    let mut out = l.to_string();
    if check {
        let gn = pga_core::versor::normalize_rotor(&g)?;
        let back = exp_bivector(&l)?;
        let r = back.max_abs_diff(&gn).min(back.max_abs_diff(&-&gn));
        out.push_str(&format!("\nresidual {r:e}"));
    }
    Ok(out)
}

/// Run a scene file; returns the number of rows written.
pub fn cmd_simulate(scene: &Path, out: &Path, stride: usize) -> Result<usize, CliError> {
    let text = std::fs::read_to_string(scene)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", scene.display())))?;
    let scene = SceneConfig::from_json(&text)?;
    let file = std::fs::File::create(out)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", out.display())))?;
    simulate(&scene, stride, std::io::BufWriter::new(file))
}
