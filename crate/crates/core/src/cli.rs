//! Command-line front end shared by the `fracadm` binary and the tests.
//!
//! Exit codes: 0 on success, 1 for usage or parse errors, 2 for numeric or
//! domain failures.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::adm::{solve, ProblemSpec, SolutionSeries};
use crate::error::Error;
use crate::grid::GridSpec;
use crate::numfmt::{format_sig, ROUND_TRIP_DIGITS};
use crate::parse::parse_series;
use crate::problems::{
    builtin_problem, exact_solution, make_table_with, recovered_depth, truncation_scan,
    ExampleId, TableReport, TABLE_ORDERS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERIC: i32 = 2;

pub const CSV_HEADER: [&str; 7] = ["y", "x", "alpha", "beta", "approx", "exact", "abs_error"];

#[derive(Debug, Parser)]
#[command(
    name = "fracadm",
    version,
    about = "Adomian decomposition series for D_y^a u + u D_x^b u = g(x)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one problem and evaluate the truncated series on a grid.
    Solve(Opts),
    /// Reproduce a reference table for the three standard (alpha, beta) pairs.
    Table(Opts),
    /// Compare truncation depths 1..=terms against a reference table.
    Scan(Opts),
    /// Print every component u_k and the partial sum.
    DumpSeries(Opts),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Tsv,
}

#[derive(Debug, Args)]
struct Opts {
    /// Built-in problem 1..4.
    #[arg(long, conflicts_with_all = ["ic", "g"])]
    example: Option<u32>,
    /// Initial condition u(x, 0), e.g. "1 + x".
    #[arg(long)]
    ic: Option<String>,
    /// Forcing g(x); defaults to 0.
    #[arg(long = "g")]
    g: Option<String>,
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Number of series components N.
    #[arg(long, default_value_t = 6)]
    terms: usize,
    /// "x=a:b:step;y=v1,v2,..."; defaults to the reference-table grid.
    #[arg(long)]
    grid: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the truncated series instead of grid values.
    #[arg(long)]
    dump_series: bool,
    /// Significant digits for printed floats.
    #[arg(long)]
    digits: Option<usize>,
}

impl Opts {
    fn sep(&self) -> &'static str {
        match self.format {
            Format::Csv => ",",
            Format::Tsv => "\t",
        }
    }

    fn digits(&self) -> usize {
        self.digits.unwrap_or(ROUND_TRIP_DIGITS)
    }

    fn grid(&self) -> Result<GridSpec, Failure> {
        match &self.grid {
            Some(text) => Ok(GridSpec::parse(text)?),
            None => Ok(GridSpec::default()),
        }
    }

    fn example(&self) -> Result<Option<ExampleId>, Failure> {
        self.example.map(ExampleId::new).transpose().map_err(Into::into)
    }

    fn require_example(&self, what: &str) -> Result<ExampleId, Failure> {
        self.example()?
            .ok_or_else(|| Failure::usage(format!("{what} requires --example")))
    }

    fn problem(&self) -> Result<(ProblemSpec, Option<ExampleId>), Failure> {
        if let Some(id) = self.example()? {
            return Ok((builtin_problem(id, self.alpha, self.beta, self.terms)?, Some(id)));
        }
        let Some(ic) = &self.ic else {
            return Err(Failure::usage("give --example N or --ic EXPR [--g EXPR]"));
        };
        let ic = parse_series(ic).map_err(|e| Failure::usage(format!("--ic: {e}")))?;
        let forcing = match &self.g {
            Some(g) => parse_series(g).map_err(|e| Failure::usage(format!("--g: {e}")))?,
            None => crate::series::FracSeries::zero(),
        };
        Ok((ProblemSpec::new(self.alpha, self.beta, ic, forcing, self.terms)?, None))
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidProblem(_) | Error::UnknownExample(_) => EXIT_USAGE,
            _ => EXIT_NUMERIC,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn opt_cell(v: Option<f64>, digits: usize) -> String {
    v.map(|v| format_sig(v, digits)).unwrap_or_default()
}

fn header(sep: &str) -> String {
    CSV_HEADER.join(sep) + "\n"
}

/// Renders a table report with the `y,x,alpha,beta,approx,exact,abs_error`
/// schema. Cells of fractional columns leave `exact` and `abs_error` empty.
pub fn render_table(report: &TableReport, sep: &str, digits: usize) -> String {
    let mut out = header(sep);
    for c in &report.cells {
        let fields = [
            format_sig(c.y, digits),
            format_sig(c.x, digits),
            format_sig(c.alpha, digits),
            format_sig(c.beta, digits),
            format_sig(c.approx, digits),
            opt_cell(c.exact, digits),
            opt_cell(c.abs_error, digits),
        ];
        out.push_str(&fields.join(sep));
        out.push('\n');
    }
    out
}

fn render_solution(
    sol: &SolutionSeries,
    example: Option<ExampleId>,
    grid: &GridSpec,
    sep: &str,
    digits: usize,
) -> Result<String, Failure> {
    let p = sol.problem();
    let exact_known = example.filter(|_| p.alpha == 1.0 && p.beta == 1.0);
    let mut out = header(sep);
    for (x, y) in grid.points() {
        let approx = sol.evaluate(x, y)?;
        let exact = exact_known.map(|id| exact_solution(id, x, y)).transpose()?;
        let fields = [
            format_sig(y, digits),
            format_sig(x, digits),
            format_sig(p.alpha, digits),
            format_sig(p.beta, digits),
            format_sig(approx, digits),
            opt_cell(exact, digits),
            opt_cell(exact.map(|e| (e - approx).abs()), digits),
        ];
        out.push_str(&fields.join(sep));
        out.push('\n');
    }
    Ok(out)
}

fn execute(command: &Command, log: &mut dyn Write) -> Result<(String, Option<PathBuf>), Failure> {
    let (opts, text) = match command {
        Command::Solve(o) => {
            let (problem, example) = o.problem()?;
            let sol = solve(&problem)?;
            let text = if o.dump_series {
                format!("{}\n", sol.truncated())
            } else {
                render_solution(&sol, example, &o.grid()?, o.sep(), o.digits())?
            };
            (o, text)
        }
        Command::DumpSeries(o) => {
            let (problem, _) = o.problem()?;
            let sol = solve(&problem)?;
            let mut text = String::new();
            for (k, u) in sol.components().iter().enumerate() {
                text.push_str(&format!("u_{k} = {u}\n"));
            }
            text.push_str(&format!("Phi_{} = {}\n", problem.n_terms, sol.truncated()));
            (o, text)
        }
        Command::Table(o) => {
            let id = o.require_example("table")?;
            if o.terms == 0 {
                return Err(Failure::usage("--terms must be at least 1"));
            }
            let grid = o.grid()?;
            let report =
                make_table_with(id, o.terms, &TABLE_ORDERS, &grid.x_points, &grid.y_points)?;
            (o, render_table(&report, o.sep(), o.digits()))
        }
        Command::Scan(o) => {
            let id = o.require_example("scan")?;
            if o.terms == 0 {
                return Err(Failure::usage("--terms must be at least 1"));
            }
            let rows = truncation_scan(id, o.terms);
            let sep = o.sep();
            let d = o.digits();
            let mut text = [
                "n",
                "error_column_deviation",
                "unit_approx_deviation",
                "fractional_deviation",
                "max_rel_deviation",
            ]
            .join(sep)
                + "\n";
            for r in &rows {
                let fields = [
                    r.n.to_string(),
                    format_sig(r.error_column_deviation, d),
                    format_sig(r.unit_approx_deviation, d),
                    opt_cell(r.fractional_deviation, d),
                    format_sig(r.max_rel_deviation, d),
                ];
                text.push_str(&fields.join(sep));
                text.push('\n');
            }
            if let Some(n) = recovered_depth(&rows) {
                let _ = writeln!(log, "recovered depth for example {id}: N = {n}");
            }
            (o, text)
        }
    };
    Ok((text, opts.out.clone()))
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };

    match execute(&cli.command, stderr) {
        Ok((text, None)) => match stdout.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_NUMERIC
            }
        },
        Ok((text, Some(path))) => match std::fs::write(&path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                EXIT_NUMERIC
            }
        },
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
