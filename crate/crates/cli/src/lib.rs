//! Argument handling and subcommands for the `sigma` binary.
//!
//! Exit codes: 0 on success (or every statement PASS), 1 when `verify` finds
//! a counterexample, 2 on usage or input errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use sigma_core::sigma::{brute_cap_from_env, sigma_bruteforce_capped};
use sigma_core::verify::{
    enumerate_connected, verify_statement, CheckOptions, GraphCorpus, Statement,
    VerificationReport, MAX_BUILTIN_ORDER,
};
use sigma_core::{
    io::graph6_lines, is_good_graph, parse_edge_list, sigma1_recursive, sigma0_recursive,
    to_graph6, Family, Graph, MemoTable,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "sigma", version, about = "Count k-nearly independent vertex subsets and verify σ1 bounds")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print σ_k for each input graph.
    Sigma {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
        method: MethodChoice,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Print the per-edge goodness report for each input graph.
    Good {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Print graphs as graph6: one family member, or every connected graph of an order.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// All connected graphs of this order, up to isomorphism (1..=8).
        #[arg(long)]
        connected: Option<usize>,
    },
    /// Run statement checkers over exhaustive corpora and print reports.
    Verify {
        /// Statement id, or `all`.
        #[arg(long, default_value = "all")]
        statement: String,
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// External corpus (graph6, one graph per line) instead of the built-in generator.
        #[arg(long)]
        graph6: Option<PathBuf>,
        /// Worker threads, 0 for one per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Fraction of graphs re-checked by brute force.
        #[arg(long, default_value_t = 0.01)]
        audit: f64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// graph6 file, one graph per line.
    #[arg(long)]
    pub graph6: Option<PathBuf>,
    /// Edge-list file: `n` on the first line, then `u v` per line.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Named family: path, cycle, complete, star, bipartite, k4-e.
    #[arg(long)]
    pub family: Option<String>,
    #[command(flatten)]
    pub family_params: FamilyParams,
}

#[derive(Args, Debug)]
pub struct FamilyParams {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: Option<String>,
    #[command(flatten)]
    pub params: FamilyParams,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Auto,
    Brute,
    Recursive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Records,
}

/// Failure that maps to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, UsageError>;

fn build_family(name: &str, p: &FamilyParams) -> Result<Graph> {
    let params: Vec<usize> = match name.to_ascii_lowercase().as_str() {
        "bipartite" | "kbip" | "complete-bipartite" => match (p.r, p.s) {
            (Some(r), Some(s)) => vec![r, s],
            _ => return Err(UsageError("bipartite needs --r and --s".into())),
        },
        "k4-e" | "k4e" | "k4-minus-e" => vec![],
        _ => match p.n {
            Some(n) => vec![n],
            None => return Err(UsageError(format!("family {name} needs --n"))),
        },
    };
    Ok(Family::from_name(name, &params)?.build()?)
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

/// Feeds each input graph to `f`, streaming graph6 files line by line.
fn for_each_input<F>(input: &InputArgs, mut f: F) -> Result<()>
where
    F: FnMut(&Graph) -> Result<()>,
{
    let given = [input.graph6.is_some(), input.edges.is_some(), input.family.is_some()];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(UsageError("give exactly one of --graph6, --edges, --family".into()));
    }
    if let Some(path) = &input.graph6 {
        for (line, parsed) in graph6_lines(open(path)?) {
            let g = parsed.map_err(|e| UsageError(format!("{}:{line}: {e}", path.display())))?;
            f(&g)?;
        }
        Ok(())
    } else if let Some(path) = &input.edges {
        let mut text = String::new();
        for line in open(path)?.lines() {
            text.push_str(&line?);
            text.push('\n');
        }
        let g = parse_edge_list(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        f(&g)
    } else if let Some(name) = &input.family {
        f(&build_family(name, &input.family_params)?)
    } else {
        Err(UsageError("no input given".into()))
    }
}

fn sigma_value(g: &Graph, k: usize, method: MethodChoice) -> Result<(u64, &'static str)> {
    let recursive = match method {
        MethodChoice::Auto => k <= 1,
        MethodChoice::Recursive if k > 1 => {
            return Err(UsageError(format!("no recursion for k = {k}; use --method brute")))
        }
        MethodChoice::Recursive => true,
        MethodChoice::Brute => false,
    };
    if recursive {
        let mut memo = MemoTable::new();
        let count = if k == 0 {
            sigma0_recursive(g, &mut memo)?
        } else {
            sigma1_recursive(g, &mut memo)?
        };
        Ok((count.value, "recursive"))
    } else {
        Ok((sigma_bruteforce_capped(g, k, brute_cap_from_env())?.value, "brute"))
    }
}

fn cmd_sigma(k: usize, method: MethodChoice, input: &InputArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    for_each_input(input, |g| {
        let (value, used) = sigma_value(g, k, method)?;
        match format {
            Format::Human => writeln!(out, "{value}")?,
            Format::Records => writeln!(
                out,
                "graph6={}\tk={k}\tvalue={value}\tmethod={used}",
                to_graph6(g)?
            )?,
        }
        Ok(())
    })
}

fn cmd_good(input: &InputArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    for_each_input(input, |g| {
        let report = is_good_graph(g);
        match format {
            Format::Human => writeln!(out, "{}\n{report}", to_graph6(g)?)?,
            Format::Records => {
                let bad: Vec<String> = report
                    .bad_edges()
                    .map(|((u, v), w)| format!("{u}-{v}:{w}"))
                    .collect();
                writeln!(
                    out,
                    "graph6={}\tgood={}\tedges={}\tbad_edges={}",
                    to_graph6(g)?,
                    report.is_good_graph,
                    report.edges.len(),
                    bad.join(",")
                )?
            }
        }
        Ok(())
    })
}

fn cmd_gen(family: &FamilyArgs, connected: Option<usize>, out: &mut dyn Write) -> Result<()> {
    match (connected, &family.family) {
        (Some(_), Some(_)) => return Err(UsageError("--connected and --family are exclusive".into())),
        (Some(n), None) => {
            for g in enumerate_connected(n)?.iter() {
                writeln!(out, "{}", to_graph6(g)?)?;
            }
        }
        (None, Some(name)) => writeln!(out, "{}", to_graph6(&build_family(name, &family.params)?)?)?,
        (None, None) => return Err(UsageError("gen needs --family or --connected".into())),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    statement: &str,
    min_n: Option<usize>,
    max_n: usize,
    graph6: Option<&Path>,
    workers: usize,
    audit: f64,
    format: Format,
    out: &mut dyn Write,
) -> Result<bool> {
    let statements: Vec<Statement> = if statement == "all" {
        Statement::ALL.to_vec()
    } else {
        vec![statement.parse().map_err(UsageError)?]
    };
    if !(0.0..=1.0).contains(&audit) {
        return Err(UsageError("--audit must lie in [0, 1]".into()));
    }
    let opts = CheckOptions {
        workers,
        audit_fraction: audit,
    };
    let lowest = min_n.unwrap_or(1);
    if lowest > max_n {
        return Err(UsageError(format!("empty order range {lowest}..{max_n}")));
    }
    let corpora: Vec<GraphCorpus> = match graph6 {
        Some(path) => GraphCorpus::from_graph6_reader(open(path)?)
            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?
            .into_iter()
            .filter(|c| (lowest..=max_n).contains(&c.order()))
            .collect(),
        None => {
            if max_n > MAX_BUILTIN_ORDER {
                return Err(UsageError(format!(
                    "built-in corpora stop at n = {MAX_BUILTIN_ORDER}; pass --graph6 for larger orders"
                )));
            }
            (lowest.max(1)..=max_n)
                .map(enumerate_connected)
                .collect::<std::result::Result<_, _>>()?
        }
    };
    let mut all_pass = true;
    for st in statements {
        let start = min_n.unwrap_or(st.min_order());
        let mut merged: Option<VerificationReport> = None;
        for corpus in corpora.iter().filter(|c| c.order() >= start) {
            let r = verify_statement(st, corpus, &opts)?;
            match &mut merged {
                None => merged = Some(r),
                Some(m) => m.merge(r),
            }
        }
        let Some(report) = merged else {
            return Err(UsageError(format!("no graphs of order {start}..={max_n} for {st}")));
        };
        all_pass &= report.passed();
        match format {
            Format::Human => write!(out, "{report}")?,
            Format::Records => writeln!(out, "{}", report.to_record())?,
        }
    }
    Ok(all_pass)
}

/// Parses `args` (including the program name) and runs the subcommand,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match &config.command {
        Command::Sigma { k, method, input, format } => {
            cmd_sigma(*k, *method, input, *format, out).map(|_| true)
        }
        Command::Good { input, format } => cmd_good(input, *format, out).map(|_| true),
        Command::Gen { family, connected } => cmd_gen(family, *connected, out).map(|_| true),
        Command::Verify {
            statement,
            min_n,
            max_n,
            graph6,
            workers,
            audit,
            format,
        } => cmd_verify(
            statement,
            *min_n,
            *max_n,
            graph6.as_deref(),
            *workers,
            *audit,
            *format,
            out,
        ),
    };
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_COUNTEREXAMPLE,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// [`run`] against the process's standard streams.
pub fn main_with_std_io() -> i32 {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr();
    let code = run(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    code
}
