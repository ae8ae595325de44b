//! The `n4lp` command line.
//!
//! Exit codes: 0 on success, 1 on domain or usage errors, 2 when a property
//! check fails or the two stable-model pipelines disagree. Errors are
//! reported on stderr as one line `error: <kind>: <message>`.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::check::{self, CheckConfig, Suite};
use crate::enumerate::RandomProgramBounds;
use crate::herbrand::{ground, GroundProgram};
use crate::models::{self, formula_base, formula_models, render_atom_sets, SearchLimits, SimpReading};
use crate::parser::{parse_formula, parse_formula_set, parse_program};
use crate::report::{render_table, ModelReport, Style};
use crate::semantics::{evaluate, is_model, Interpretation, VariableAssignment};
use crate::syntax::Program;
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "n4lp", version, about = "Evaluate N⁴ formulas, enumerate N⁴ Herbrand models and compute stable models")]
pub struct Cli {
    /// Largest Herbrand base (in atoms) for 3ⁿ model sweeps; 2ⁿ stable sweeps allow max(this, 20)
    #[arg(long, global = true, default_value_t = 12)]
    pub max_atoms: usize,
    /// Term depth bound for programs with function symbols (results are then approximate)
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Render ¬ as ~ in tables
    #[arg(long, global = true)]
    pub ascii: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula in an interpretation given as JSON
    Eval {
        formula: String,
        interpretation: String,
        /// Universally close the formula instead of the existential reading of free variables
        #[arg(long)]
        closed: bool,
    },
    /// Tabulate the N⁴ Herbrand interpretations satisfying a formula set (text or .n4f file)
    Table {
        formulas: String,
        #[arg(long, value_enum, default_value_t = StyleArg::Paper)]
        style: StyleArg,
    },
    /// Enumerate and classify the N⁴ Herbrand models of a program
    Models {
        program: String,
        #[command(flatten)]
        filter: FilterArgs,
        #[arg(long, value_enum, default_value_t = StyleArg::Paper)]
        style: StyleArg,
    },
    /// Compute stable models by the reduct and/or as complete minimal N⁴ models
    Stable {
        program: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Run the built-in property suite
    Check {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Depth bound of the exhaustive formula sweep
        #[arg(long, default_value_t = 4)]
        formula_depth: usize,
        #[arg(long, default_value_t = 100_000)]
        random_formulas: usize,
        #[arg(long, default_value_t = 6)]
        random_formula_depth: usize,
        #[arg(long, default_value_t = 10_000)]
        random_programs: usize,
        /// Atom bound of random programs
        #[arg(long, default_value_t = 6)]
        program_atoms: usize,
        #[arg(long, value_enum, default_value_t = SimpReadingArg::Dneg)]
        simp_reading: SimpReadingArg,
    },
    /// Print the ground instances of a program
    Ground { program: String },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct FilterArgs {
    /// All models (default)
    #[arg(long)]
    all: bool,
    /// Only ⊆-minimal models
    #[arg(long)]
    minimal: bool,
    /// Only complete minimal models (the stable models)
    #[arg(long)]
    complete_minimal: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StyleArg {
    Paper,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Gl,
    N4,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SuiteArg {
    Valuation,
    Herbrand,
    Stable,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SimpReadingArg {
    Dneg,
    Plain,
}

impl From<StyleArg> for Style {
    fn from(s: StyleArg) -> Self {
        match s {
            StyleArg::Paper => Style::Paper,
            StyleArg::Json => Style::Json,
            StyleArg::Csv => Style::Csv,
        }
    }
}

fn read(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_string(), source })
}

fn load_program(path: &str) -> Result<(String, Program), Error> {
    let text = read(path)?;
    let program = parse_program(&text)?;
    Ok((text, program))
}

fn program_notes(p: &Program, g: &GroundProgram, depth: Option<usize>) -> Vec<String> {
    let mut notes = Vec::new();
    if p.signature.default_constant_injected && !p.signature.is_propositional() {
        notes.push(format!("no constant in the program; default constant {} added", crate::syntax::DEFAULT_CONSTANT));
    }
    if g.base().is_approximate() {
        notes.push(format!("approximate universe: terms of depth at most {}", depth.unwrap_or(0)));
    }
    notes
}

struct Context {
    limits: SearchLimits,
    depth: Option<usize>,
    ascii: bool,
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(err, "error: usage: {first}");
            return 1;
        }
    };
    let ctx = Context { limits: SearchLimits::with_max_atoms(cli.max_atoms), depth: cli.depth, ascii: cli.ascii };
    match execute(&ctx, &cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let message = e.to_string().replace('\n', " ");
            let _ = writeln!(err, "error: {}: {message}", e.kind());
            1
        }
    }
}

fn execute(ctx: &Context, command: &Command, out: &mut dyn Write) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::Io { path: "<stdout>".into(), source: e };
    match command {
        Command::Eval { formula, interpretation, closed } => {
            let f = parse_formula(formula)?;
            let i = Interpretation::from_json_str(&read(interpretation)?)?;
            let value = if *closed || !f.free_variables().is_empty() {
                let f = if *closed { f.universal_closure() } else { f };
                is_model(&i, &f)?
            } else {
                evaluate(&i, &VariableAssignment::new(), &f)?.is_true()
            };
            writeln!(out, "{value}").map_err(io)?;
            Ok(0)
        }
        Command::Table { formulas, style } => {
            let text = if Path::new(formulas).is_file() { read(formulas)? } else { formulas.clone() };
            let set = parse_formula_set(&text)?;
            let base = formula_base(&set)?;
            let models = formula_models(&base, &set, &ctx.limits)?;
            let report = ModelReport::new(&models, text.trim());
            write!(out, "{}", render_table(&report, (*style).into(), ctx.ascii)).map_err(io)?;
            Ok(0)
        }
        Command::Models { program, filter, style } => {
            let (text, p) = load_program(program)?;
            let g = ground(&p, ctx.depth)?;
            let all = models::all_models(&g, &ctx.limits)?;
            let shown = if filter.minimal {
                all.minimal()
            } else if filter.complete_minimal {
                all.complete_minimal()
            } else {
                all
            };
            let mut report = ModelReport::new(&shown, text.trim());
            report.notes = program_notes(&p, &g, ctx.depth);
            write!(out, "{}", render_table(&report, (*style).into(), ctx.ascii)).map_err(io)?;
            Ok(0)
        }
        Command::Stable { program, method } => {
            let (_, p) = load_program(program)?;
            let g = ground(&p, ctx.depth)?;
            let mut parts = Vec::new();
            let mut results = Vec::new();
            if *method != Method::N4 {
                let gl = models::stable_models_gl(&g, &ctx.limits)?;
                parts.push(format!("gl: {}", render_atom_sets(g.base(), &gl)));
                results.push(gl);
            }
            if *method != Method::Gl {
                let n4 = models::stable_models_n4(&g, &ctx.limits)?;
                parts.push(format!("n4: {}", render_atom_sets(g.base(), &n4)));
                results.push(n4);
            }
            let mut code = 0;
            if *method == Method::Both {
                let agree = results[0] == results[1];
                parts.push(if agree { "AGREE" } else { "DISAGREE" }.to_string());
                code = if agree { 0 } else { 2 };
            }
            writeln!(out, "{}", parts.join(" | ")).map_err(io)?;
            for note in program_notes(&p, &g, ctx.depth) {
                writeln!(out, "note: {note}").map_err(io)?;
            }
            Ok(code)
        }
        Command::Check {
            suite,
            seed,
            formula_depth,
            random_formulas,
            random_formula_depth,
            random_programs,
            program_atoms,
            simp_reading,
        } => {
            if *program_atoms == 0 {
                return Err(Error::Usage("--program-atoms must be at least 1".into()));
            }
            let cfg = CheckConfig {
                seed: *seed,
                formula_depth: *formula_depth,
                random_formulas: *random_formulas,
                random_formula_depth: *random_formula_depth,
                random_programs: *random_programs,
                program_bounds: RandomProgramBounds { max_atoms: *program_atoms, ..RandomProgramBounds::default() },
                simp_reading: match simp_reading {
                    SimpReadingArg::Dneg => SimpReading::Dneg,
                    SimpReadingArg::Plain => SimpReading::Plain,
                },
                limits: ctx.limits,
            };
            let suite = match suite {
                SuiteArg::Valuation => Suite::Valuation,
                SuiteArg::Herbrand => Suite::Herbrand,
                SuiteArg::Stable => Suite::Stable,
                SuiteArg::All => Suite::All,
            };
            let outcomes = check::run(suite, &cfg);
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            for o in &outcomes {
                writeln!(out, "{o}").map_err(io)?;
            }
            writeln!(out, "{} passed, {failed} failed (seed {seed})", outcomes.len() - failed).map_err(io)?;
            Ok(if failed == 0 { 0 } else { 2 })
        }
        Command::Ground { program } => {
            let (_, p) = load_program(program)?;
            let g = ground(&p, ctx.depth)?;
            for note in program_notes(&p, &g, ctx.depth) {
                writeln!(out, "% {note}").map_err(io)?;
            }
            let text = g.to_string();
            if !text.is_empty() {
                writeln!(out, "{text}").map_err(io)?;
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("n4lp").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_one_on_a_single_line() {
        let (code, _, err) = run_args(&["frobnicate"]);
        assert_eq!(code, 1);
        assert_eq!(err.lines().count(), 1);
        assert!(err.starts_with("error: usage: "));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("stable"));
    }

    #[test]
    fn table_from_text() {
        let (code, out, _) = run_args(&["table", "~p -> p", "--style", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "p,¬p,¬²p,¬³p,minimal,complete\ntrue,false,true,false,false,true\nfalse,true,true,false,true,false\n");
    }

    #[test]
    fn missing_file_is_an_io_error() {
        let (code, _, err) = run_args(&["models", "/nonexistent/x.lp"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: io: /nonexistent/x.lp"));
    }
}
