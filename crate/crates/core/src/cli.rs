//! Command-line driver.
//!
//! Exit status is `0` on success, `1` on a domain, parse or I/O error (one
//! line on stderr, prefixed with the error kind) and `2` on a usage error.
//! Output is compact JSON by default or an aligned text table with
//! `--format table`; every command is deterministic.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, MatrixJson};
use crate::moduli::{self, ModuliInstance, DEFAULT_PAIR_CAP};
use crate::monodromy::{self, BlockInput};
use crate::partition::{self, Partition};
use crate::reduced::ProductRingElem;
use crate::strata::{self, ComponentComplex, ProductFactor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "nilstrat", version, about = "Dominance lattice, Jordan types and monodromy strata")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dominance-lattice operations on partitions.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Jordan matrices, Jordan types and unipotent logarithms.
    #[command(subcommand)]
    Jordan(JordanCmd),
    /// Jordan-type calculus for monodromy operators.
    #[command(subcommand)]
    Monodromy(MonodromyCmd),
    /// Queries on component complexes.
    #[command(subcommand)]
    Strat(StratCmd),
    /// Finite-field points of `Φ Σ Φ⁻¹ = Σ^q`.
    #[command(subcommand)]
    Moduli(ModuliCmd),
    /// Regular complements in `Z^k`.
    #[command(subcommand)]
    Reduced(ReducedCmd),
}

#[derive(Debug, Args)]
pub struct TwoPartitions {
    /// JSON array, e.g. "[3,1]".
    #[arg(long)]
    pub mu: String,
    #[arg(long)]
    pub nu: String,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Read the JSON input from this file (`-` for standard input).
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum PartitionCmd {
    /// Conjugate (transposed) partition.
    Conjugate {
        #[arg(long)]
        mu: String,
    },
    /// Prints `true` iff mu ≤ nu in dominance order.
    Dominates(TwoPartitions),
    /// Greatest lower bound of mu and nu.
    Meet(TwoPartitions),
    /// Least upper bound of mu and nu.
    Join(TwoPartitions),
    /// Minimum of a set of partitions, or `null` when there is none.
    Min {
        /// JSON array of partitions, e.g. "[[3],[2,1]]".
        #[arg(long, conflicts_with = "file")]
        set: Option<String>,
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Subcommand)]
pub enum JordanCmd {
    /// Nilpotent Jordan matrix of a partition.
    Matrix {
        #[arg(long)]
        mu: String,
    },
    /// Jordan type of a nilpotent matrix.
    Type {
        /// Matrix JSON inline.
        #[arg(long, conflicts_with = "file")]
        matrix: Option<String>,
        #[command(flatten)]
        source: Source,
    },
    /// Logarithm of a unipotent rational matrix.
    Log {
        #[arg(long, conflicts_with = "file")]
        matrix: Option<String>,
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Subcommand)]
pub enum MonodromyCmd {
    /// Jordan type of N_alpha ⊗ 1 + 1 ⊗ N_beta.
    Tensor {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// Jordan type of a direct sum.
    Dsum {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// Jordan type of `mult` induced copies.
    Induce {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        mult: usize,
    },
    /// Total type of a list of `{spec, alpha}` blocks.
    Total {
        #[arg(long, conflicts_with = "file")]
        blocks: Option<String>,
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Args)]
pub struct ComplexArg {
    /// Complex JSON file (`-` for standard input).
    #[arg(long)]
    pub complex: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum StratCmd {
    /// Points whose incident labels do not attain their meet.
    Validate(ComplexArg),
    /// Components with label ≤ mu.
    Stratum {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long)]
        mu: String,
    },
    /// Type of a point.
    Mu {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long)]
        point: String,
    },
    /// Incident component carrying the point's type.
    MinimalLift {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long)]
        point: String,
    },
    /// Whether the point lies on a component with label ≤ mu.
    Closure {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long)]
        point: String,
        #[arg(long)]
        mu: String,
    },
    /// Product of complexes from a JSON array of `{complex, spec}`.
    Product {
        /// Input JSON file (`-` for standard input).
        #[arg(long)]
        input: PathBuf,
        /// Maximum number of tuple components or points.
        #[arg(long, default_value_t = strata::DEFAULT_PRODUCT_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub p: u64,
    /// Candidate-pair cap (default 2^24).
    #[arg(long)]
    pub cap: Option<u128>,
}

#[derive(Debug, Subcommand)]
pub enum ModuliCmd {
    /// All solution pairs (Φ, Σ).
    Enumerate(InstanceArgs),
    /// Solution counts bucketed by the Jordan type of Σ^a - I.
    Stratify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        a: u64,
    },
    /// Orbits of solutions under simultaneous conjugation.
    Orbits(InstanceArgs),
}

#[derive(Debug, Subcommand)]
pub enum ReducedCmd {
    /// s with r·s = 0 and r + s regular.
    Complement {
        /// JSON integer array.
        #[arg(long, conflicts_with = "file")]
        r: Option<String>,
        #[command(flatten)]
        source: Source,
    },
}

/// Aligned text table.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table { headers: headers.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    fn single(header: &str, value: impl Into<String>) -> Self {
        let mut t = Table::new([header]);
        t.rows.push(vec![value.into()]);
        t
    }

    fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(Into::into).collect());
    }

    /// Columns separated by two spaces, left-aligned, trailing space trimmed.
    pub fn render(&self) -> String {
        let ncols = self.headers.len();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, cell) in cells.iter().enumerate().take(ncols) {
                if i > 0 {
                    s.push_str("  ");
                }
                s.push_str(cell);
                if i + 1 < ncols {
                    s.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count()));
                }
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(&self.headers);
        out.push_str(&line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()));
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }
}

/// A command result in both output forms.
struct Rendered {
    json: String,
    table: Table,
}

fn partition_arg(s: &str) -> Result<Partition> {
    s.parse()
}

fn partition_out(p: &Partition) -> Rendered {
    Rendered { json: p.to_string(), table: Table::single("partition", p.to_string()) }
}

fn bool_out(b: bool) -> Rendered {
    Rendered { json: b.to_string(), table: Table::single("result", b.to_string()) }
}

fn matrix_rows_compact(m: &ExactMatrix) -> String {
    serde_json::to_string(&MatrixJson::from(m).entries).expect("serializable")
}

fn matrix_out(m: &ExactMatrix) -> Rendered {
    let j = MatrixJson::from(m);
    let mut table = Table::new((0..m.cols()).map(|c| c.to_string()));
    for row in &j.entries {
        table.push(row.iter().map(|v| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }));
    }
    Rendered { json: m.to_json_string(), table }
}

fn read_path(path: &PathBuf, stdin: &mut dyn Read) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Error::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

/// Inline argument, else `--file`, else standard input.
fn read_source(inline: Option<String>, source: &Source, stdin: &mut dyn Read) -> Result<String> {
    match (inline, &source.file) {
        (Some(s), _) => Ok(s),
        (None, Some(path)) => read_path(path, stdin),
        (None, None) => read_path(&PathBuf::from("-"), stdin),
    }
}

fn load_complex(arg: &ComplexArg, stdin: &mut dyn Read) -> Result<ComponentComplex> {
    ComponentComplex::from_json_str(&read_path(&arg.complex, stdin)?)
}

fn instance(args: &InstanceArgs, a: Option<u64>, warnings: &mut Vec<String>) -> Result<ModuliInstance> {
    let mut inst = ModuliInstance::new(args.q, args.r, args.p)?;
    if let Some(a) = a {
        inst = inst.with_a(a)?;
    }
    if let Some(cap) = args.cap {
        if cap > DEFAULT_PAIR_CAP {
            warnings.push(format!("warning: candidate cap raised to {cap} (default {DEFAULT_PAIR_CAP})"));
        }
        inst = inst.with_cap(cap);
    }
    Ok(inst)
}

fn pair_json(pair: &moduli::MatrixPair) -> Value {
    json!({
        "phi": MatrixJson::from(&pair.phi).entries,
        "sigma": MatrixJson::from(&pair.sigma).entries,
    })
}

fn execute(cli: Cli, stdin: &mut dyn Read, warnings: &mut Vec<String>) -> Result<Rendered> {
    match cli.command {
        Command::Partition(cmd) => match cmd {
            PartitionCmd::Conjugate { mu } => Ok(partition_out(&partition_arg(&mu)?.conjugate())),
            PartitionCmd::Dominates(a) => {
                Ok(bool_out(partition::dominates(&partition_arg(&a.mu)?, &partition_arg(&a.nu)?)?))
            }
            PartitionCmd::Meet(a) => Ok(partition_out(&partition_arg(&a.mu)?.meet(&partition_arg(&a.nu)?)?)),
            PartitionCmd::Join(a) => Ok(partition_out(&partition_arg(&a.mu)?.join(&partition_arg(&a.nu)?)?)),
            PartitionCmd::Min { set, source } => {
                let text = read_source(set, &source, stdin)?;
                let raw: Vec<Vec<i64>> = serde_json::from_str(&text)?;
                let members = raw.into_iter().map(Partition::new).collect::<Result<Vec<_>>>()?;
                Ok(match partition::min_element(&members)? {
                    Some(m) => Rendered { json: m.to_string(), table: Table::single("minimum", m.to_string()) },
                    None => Rendered { json: "null".into(), table: Table::single("minimum", "none") },
                })
            }
        },
        Command::Jordan(cmd) => match cmd {
            JordanCmd::Matrix { mu } => Ok(matrix_out(&partition_arg(&mu)?.jordan_matrix())),
            JordanCmd::Type { matrix, source } => {
                let m = ExactMatrix::from_json_str(&read_source(matrix, &source, stdin)?)?;
                Ok(partition_out(&m.jordan_type()?))
            }
            JordanCmd::Log { matrix, source } => {
                let m = ExactMatrix::from_json_str(&read_source(matrix, &source, stdin)?)?;
                Ok(matrix_out(&m.unipotent_log()?))
            }
        },
        Command::Monodromy(cmd) => match cmd {
            MonodromyCmd::Tensor { alpha, beta } => {
                Ok(partition_out(&monodromy::tensor_type(&partition_arg(&alpha)?, &partition_arg(&beta)?)?))
            }
            MonodromyCmd::Dsum { alpha, beta } => {
                Ok(partition_out(&monodromy::direct_sum_type(&partition_arg(&alpha)?, &partition_arg(&beta)?)))
            }
            MonodromyCmd::Induce { alpha, mult } => {
                Ok(partition_out(&monodromy::induced_type(&partition_arg(&alpha)?, mult)?))
            }
            MonodromyCmd::Total { blocks, source } => {
                let inputs: Vec<BlockInput> = serde_json::from_str(&read_source(blocks, &source, stdin)?)?;
                Ok(partition_out(&monodromy::total_type_of(&inputs)?))
            }
        },
        Command::Strat(cmd) => match cmd {
            StratCmd::Validate(arg) => {
                let c = load_complex(&arg, stdin)?;
                let violations = c.validate();
                let mut table = Table::new(["point", "unattained meet"]);
                for v in &violations {
                    table.push([v.point.clone(), v.meet.to_string()]);
                }
                let json = json!({ "valid": violations.is_empty(), "violations": violations }).to_string();
                Ok(Rendered { json, table })
            }
            StratCmd::Stratum { complex, mu } => {
                let c = load_complex(&complex, stdin)?;
                let ids = c.stratum(&partition_arg(&mu)?)?;
                let mut table = Table::new(["component"]);
                for id in &ids {
                    table.push([id.clone()]);
                }
                Ok(Rendered { json: serde_json::to_string(&ids)?, table })
            }
            StratCmd::Mu { complex, point } => Ok(partition_out(&load_complex(&complex, stdin)?.mu_of_point(&point)?)),
            StratCmd::MinimalLift { complex, point } => {
                let id = load_complex(&complex, stdin)?.minimal_lift(&point)?;
                Ok(Rendered { json: Value::String(id.clone()).to_string(), table: Table::single("component", id) })
            }
            StratCmd::Closure { complex, point, mu } => {
                Ok(bool_out(load_complex(&complex, stdin)?.closure_test(&point, &partition_arg(&mu)?)?))
            }
            StratCmd::Product { input, cap } => {
                let factors: Vec<ProductFactor> = serde_json::from_str(&read_path(&input, stdin)?)?;
                let prod = strata::product_complex_with_cap(&factors, cap)?;
                let mut table = Table::new(["kind", "id", "data"]);
                for (id, label) in prod.components() {
                    table.push(["component".to_string(), id.clone(), label.to_string()]);
                }
                for (id, incident) in prod.points() {
                    let list: Vec<&str> = incident.iter().map(String::as_str).collect();
                    table.push(["point".to_string(), id.clone(), list.join(" ")]);
                }
                Ok(Rendered { json: prod.to_json_string(), table })
            }
        },
        Command::Moduli(cmd) => match cmd {
            ModuliCmd::Enumerate(args) => {
                let inst = instance(&args, None, warnings)?;
                let pairs = moduli::enumerate_pairs(&inst)?;
                let mut table = Table::new(["#", "phi", "sigma"]);
                for (i, pr) in pairs.iter().enumerate() {
                    table.push([i.to_string(), matrix_rows_compact(&pr.phi), matrix_rows_compact(&pr.sigma)]);
                }
                let json = json!({
                    "q": inst.q, "r": inst.r, "p": inst.p,
                    "total": pairs.len(),
                    "pairs": pairs.iter().map(pair_json).collect::<Vec<_>>(),
                })
                .to_string();
                Ok(Rendered { json, table })
            }
            ModuliCmd::Stratify { instance: args, a } => {
                let inst = instance(&args, Some(a), warnings)?;
                let s = moduli::sigma_stratify(&inst)?;
                let mut table = Table::new(["bucket", "count"]);
                for (k, v) in &s.buckets {
                    table.push([k.to_string(), v.to_string()]);
                }
                table.push(["residual".to_string(), s.residual.to_string()]);
                table.push(["total".to_string(), s.total.to_string()]);
                Ok(Rendered { json: s.to_json_string(), table })
            }
            ModuliCmd::Orbits(args) => {
                let inst = instance(&args, None, warnings)?;
                let orbits = moduli::orbits(&inst)?;
                let mut table = Table::new(["#", "phi", "sigma", "size"]);
                for (i, (pr, size)) in orbits.iter().enumerate() {
                    table.push([
                        i.to_string(),
                        matrix_rows_compact(&pr.phi),
                        matrix_rows_compact(&pr.sigma),
                        size.to_string(),
                    ]);
                }
                let reps: Vec<Value> = orbits
                    .iter()
                    .map(|(pr, size)| {
                        let mut v = pair_json(pr);
                        v["size"] = json!(size);
                        v
                    })
                    .collect();
                let json = json!({ "orbits": orbits.len(), "representatives": reps }).to_string();
                Ok(Rendered { json, table })
            }
        },
        Command::Reduced(ReducedCmd::Complement { r, source }) => {
            let elem = ProductRingElem::from_json_str(&read_source(r, &source, stdin)?)?;
            let s = elem.regular_complement();
            let mut table = Table::new(["s"]);
            for c in s.coords() {
                table.push([c.to_string()]);
            }
            Ok(Rendered { json: s.to_json_string(), table })
        }
    }
}

/// Runs one invocation against the given streams and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let format = cli.format;
    let mut warnings = Vec::new();
    let result = execute(cli, stdin, &mut warnings);
    for w in &warnings {
        let _ = writeln!(stderr, "{w}");
    }
    match result {
        Ok(r) => {
            let text = match format {
                Format::Json => r.json + "\n",
                Format::Table => r.table.render(),
            };
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            1
        }
    }
}

/// [`run`] wired to the process streams.
pub fn main_with_std_io<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut std::io::stdin().lock(), &mut stdout.lock(), &mut stderr.lock())
}
