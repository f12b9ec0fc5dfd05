//! The `decomp` command line.
//!
//! Exit codes: 0 success, 2 usage or input error, 3 verification mismatch,
//! 4 inconclusive sampling.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use decomp_core::engine::{pgl_transport, ClassInfo, ClassPoset, GLDecompDatum, HasseDiagram, MAX_CLOSURE_N};
use decomp_core::partition::{partitions_of, Partition};
use decomp_core::root_datum::{
    build_gl, build_pgl, build_sl, is_stabiliser_type, load_root_datum, Characteristic, LeviDescriptor,
    RootDatum,
};
use decomp_core::verify::{verify_closure, verify_induction};
use decomp_core::{engine, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

/// Environment variable consulted when `--seed` is absent.
pub const SEED_ENV: &str = "DECOMP_SEED";

/// Largest n accepted by `verify induction`.
pub const MAX_INDUCTION_N: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "decomp", version, about = "Decomposition classes of reductive Lie algebras")]
pub struct Cli {
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Gl,
    Pgl,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuiltinArg {
    Gl,
    Sl,
    Pgl,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableOrJson {
    Table,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DotOrJson {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate decomposition classes with dimensions and levels.
    Classes {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: TableOrJson,
    },
    /// Hasse diagram of the closure order.
    Hasse {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: DotOrJson,
    },
    /// Level sets, sheets, isolated classes and sheet nilpotent orbits.
    Sheets {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: TableOrJson,
    },
    /// Induce orbits from a Levi: blocks "size:part.part,…", optional eigenvalue tags.
    Induce {
        #[arg(long)]
        blocks: String,
        #[arg(long)]
        tags: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: TableOrJson,
    },
    /// Stabiliser-type verdicts for Levi subgroups.
    Stabtype {
        #[arg(long, value_enum, conflicts_with = "datum", required_unless_present = "datum", requires = "n")]
        builtin: Option<BuiltinArg>,
        #[arg(long)]
        n: Option<usize>,
        /// Root-datum file (LABEL/RANK/ROOTS/COROOTS format).
        #[arg(long, requires = "levi")]
        datum: Option<std::path::PathBuf>,
        #[arg(long)]
        p: u64,
        /// Block sizes ("2,1") for builtins, root indices ("0,1") for --datum.
        #[arg(long)]
        levi: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: TableOrJson,
    },
    /// Cross-check the engine against the matrix oracle.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Small explicit models.
    Micro {
        #[command(subcommand)]
        model: MicroCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// closure_leq against the orbit-closure oracle on all ordered pairs.
    Closure {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Induction formula against sampled induced orbits, plus property runs.
    Induction {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum MicroCommand {
    /// Centraliser and stabiliser dimensions in 𝔭𝔤𝔩₂ over F_{p^k}.
    Pgl2 {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stdout: String, stderr: impl Into<String>) -> Self {
        Outcome { code, stdout, stderr: stderr.into() }
    }
}

fn error_outcome(e: Error) -> Outcome {
    let code = match e {
        Error::Inconclusive { .. } => EXIT_INCONCLUSIVE,
        _ => EXIT_USAGE,
    };
    Outcome::fail(code, String::new(), format!("error: {e}\n"))
}

/// Parses and executes a command line (`args[0]` is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text) } else { Outcome::fail(code, String::new(), text) };
        }
    };
    let env_seed = std::env::var(SEED_ENV).ok();
    let outcome = execute(&cli.command, env_seed.as_deref());
    match (&cli.output, outcome.code) {
        (Some(path), _) if !outcome.stdout.is_empty() => match std::fs::write(path, &outcome.stdout) {
            Ok(()) => Outcome { stdout: String::new(), ..outcome },
            Err(e) => Outcome::fail(EXIT_USAGE, String::new(), format!("error: cannot write {}: {e}\n", path.display())),
        },
        _ => outcome,
    }
}

fn resolve_seed(flag: Option<u64>, env: Option<&str>) -> Result<u64, Outcome> {
    match (flag, env) {
        (Some(s), _) => Ok(s),
        (None, Some(v)) => v.trim().parse().map_err(|_| {
            Outcome::fail(EXIT_USAGE, String::new(), format!("error: {SEED_ENV}={v:?} is not an integer\n"))
        }),
        (None, None) => Ok(0),
    }
}

fn check_closure_bound(n: usize) -> Result<(), Outcome> {
    if n == 0 {
        return Err(Outcome::fail(EXIT_USAGE, String::new(), "error: --n must be at least 1\n"));
    }
    if n > MAX_CLOSURE_N {
        return Err(Outcome::fail(
            EXIT_USAGE,
            String::new(),
            format!("error: n = {n} exceeds the closure-order tractability bound (n <= {MAX_CLOSURE_N})\n"),
        ));
    }
    Ok(())
}

pub fn execute(command: &Command, env_seed: Option<&str>) -> Outcome {
    let result = match command {
        Command::Classes { group, n, format } => classes(*group, *n, *format),
        Command::Hasse { group, n, format } => hasse(*group, *n, *format),
        Command::Sheets { group, n, format } => sheets(*group, *n, *format),
        Command::Induce { blocks, tags, format } => induce(blocks, tags.as_deref(), *format),
        Command::Stabtype { builtin, n, datum, p, levi, format } => {
            stabtype(*builtin, *n, datum.as_deref(), *p, levi.as_deref(), *format)
        }
        Command::Verify { what } => match what {
            VerifyCommand::Closure { n, seed } => {
                resolve_seed(*seed, env_seed).and_then(|s| verify_closure_cmd(*n, s))
            }
            VerifyCommand::Induction { n, seed } => {
                resolve_seed(*seed, env_seed).and_then(|s| verify_induction_cmd(*n, s))
            }
        },
        Command::Micro { model: MicroCommand::Pgl2 { p, k } } => micro_pgl2(*p, *k),
    };
    result.unwrap_or_else(|o| o)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn diagram(group: GroupArg, n: usize) -> Result<(ClassPoset, HasseDiagram), Outcome> {
    check_closure_bound(n)?;
    let poset = ClassPoset::build(n);
    let gl = poset.hasse();
    let d = match group {
        GroupArg::Gl => gl,
        GroupArg::Pgl => pgl_transport(&gl).map_err(error_outcome)?,
    };
    Ok((poset, d))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn class_table(nodes: &[ClassInfo]) -> String {
    let width = nodes.iter().map(|c| c.datum.label().len()).max().unwrap_or(0).max(6);
    let mut out = String::new();
    writeln!(out, "{:<width$}  {:>4}  {:>5}  {:<11}  {:<8}  sheet_nilpotent", "blocks", "dim", "level", "sheet_dense", "isolated")
        .unwrap();
    for c in nodes {
        let nil = c.sheet_nilpotent.as_ref().map(Partition::to_string).unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "{:<width$}  {:>4}  {:>5}  {:<11}  {:<8}  {nil}",
            c.datum.label(),
            c.dim,
            c.level,
            yes_no(c.is_sheet_dense),
            yes_no(c.is_isolated)
        )
        .unwrap();
    }
    out
}

fn classes(group: GroupArg, n: usize, format: TableOrJson) -> Result<Outcome, Outcome> {
    let (_, d) = diagram(group, n)?;
    Ok(Outcome::ok(match format {
        TableOrJson::Json => json(&d.nodes),
        TableOrJson::Table => format!("# {}{}: {} classes\n{}", d.group, d.n, d.nodes.len(), class_table(&d.nodes)),
    }))
}

fn hasse(group: GroupArg, n: usize, format: DotOrJson) -> Result<Outcome, Outcome> {
    let (_, d) = diagram(group, n)?;
    Ok(Outcome::ok(match format {
        DotOrJson::Dot => d.to_dot(),
        DotOrJson::Json => json(&d),
    }))
}

#[derive(Serialize)]
struct LevelOut<'a> {
    level: usize,
    sheets: usize,
    classes: Vec<&'a ClassInfo>,
}

fn sheets(group: GroupArg, n: usize, format: TableOrJson) -> Result<Outcome, Outcome> {
    let (_, d) = diagram(group, n)?;
    let mut levels: std::collections::BTreeMap<usize, Vec<&ClassInfo>> = Default::default();
    for c in &d.nodes {
        levels.entry(c.level).or_default().push(c);
    }
    let rows: Vec<LevelOut> = levels
        .into_iter()
        .map(|(level, classes)| LevelOut { level, sheets: classes.iter().filter(|c| c.is_sheet_dense).count(), classes })
        .collect();
    Ok(Outcome::ok(match format {
        TableOrJson::Json => json(&rows),
        TableOrJson::Table => {
            let total: usize = rows.iter().map(|r| r.sheets).sum();
            let mut out = format!("# {}{}: {} level sets, {} sheets\n", d.group, d.n, rows.len(), total);
            for r in &rows {
                writeln!(out, "level {}: {} classes, {} sheet(s)", r.level, r.classes.len(), r.sheets).unwrap();
                for c in r.classes.iter().filter(|c| c.is_sheet_dense) {
                    let nil = c.sheet_nilpotent.as_ref().map(Partition::to_string).unwrap_or_default();
                    let iso = if c.is_isolated { "  isolated" } else { "" };
                    writeln!(out, "  sheet {}  dim {}  nilpotent {nil}{iso}", c.datum.label(), c.dim).unwrap();
                }
            }
            out
        }
    }))
}

fn usage(msg: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_USAGE, String::new(), format!("error: {msg}\n"))
}

/// `"2:1.1,1:1"` → `[(2, (1,1)), (1, (1))]`.
pub fn parse_blocks(text: &str) -> Result<Vec<(usize, Partition)>, String> {
    text.split(',')
        .map(|block| {
            let (size, parts) =
                block.trim().split_once(':').ok_or_else(|| format!("block {block:?} is not size:parts"))?;
            let size: usize = size.trim().parse().map_err(|_| format!("bad block size {size:?}"))?;
            let parts = parts
                .split('.')
                .map(|x| x.trim().parse::<usize>().map_err(|_| format!("bad part {x:?}")))
                .collect::<Result<Vec<_>, _>>()?;
            let p = Partition::new(parts).map_err(|e| e.to_string())?;
            if p.size() != size {
                return Err(format!("block {block:?}: partition has size {}, not {size}", p.size()));
            }
            Ok((size, p))
        })
        .collect()
}

#[derive(Serialize)]
struct InducedOut {
    tag: String,
    partition: Partition,
}

fn induce(blocks: &str, tags: Option<&str>, format: TableOrJson) -> Result<Outcome, Outcome> {
    let parsed = parse_blocks(blocks).map_err(usage)?;
    let tags: Vec<String> = match tags {
        Some(t) => t.split(',').map(|s| s.trim().to_string()).collect(),
        None => vec!["a".to_string(); parsed.len()],
    };
    if tags.len() != parsed.len() || tags.iter().any(String::is_empty) {
        return Err(usage(format!("{} tags given for {} blocks", tags.len(), parsed.len())));
    }
    let labelled: Vec<(String, Partition)> = tags.into_iter().zip(parsed.into_iter().map(|(_, p)| p)).collect();
    let induced = engine::induce_orbit(&labelled).map_err(error_outcome)?;
    Ok(Outcome::ok(match format {
        TableOrJson::Json => {
            json(&induced.into_iter().map(|(tag, partition)| InducedOut { tag, partition }).collect::<Vec<_>>())
        }
        TableOrJson::Table => induced.iter().map(|(t, p)| format!("{t}: {p}\n")).collect(),
    }))
}

#[derive(Serialize)]
struct StabtypeOut {
    levi: String,
    label: String,
    stabiliser_type: bool,
}

fn parse_list(s: &str) -> Result<Vec<usize>, Outcome> {
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| usage(format!("bad integer {x:?}")))).collect()
}

fn stabtype(
    builtin: Option<BuiltinArg>,
    n: Option<usize>,
    datum_path: Option<&std::path::Path>,
    p: u64,
    levi: Option<&str>,
    format: TableOrJson,
) -> Result<Outcome, Outcome> {
    let ch = Characteristic::new(p).map_err(error_outcome)?;
    let mut rows = Vec::new();
    if let Some(path) = datum_path {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        let datum = load_root_datum(&text).map_err(error_outcome)?;
        let indices = parse_list(levi.expect("clap enforces --levi with --datum"))?;
        let l = LeviDescriptor::from_indices(&datum, indices.iter().copied()).map_err(error_outcome)?;
        let set: Vec<String> = l.root_indices().iter().map(usize::to_string).collect();
        rows.push(StabtypeOut {
            levi: format!("{{{}}}", set.join(",")),
            label: datum.label().to_string(),
            stabiliser_type: is_stabiliser_type(&datum, ch, &l),
        });
    } else {
        let n = n.expect("clap enforces --n with --builtin");
        let datum: RootDatum = match builtin.expect("clap enforces --builtin or --datum") {
            BuiltinArg::Gl => build_gl(n),
            BuiltinArg::Sl => build_sl(n),
            BuiltinArg::Pgl => build_pgl(n),
        }
        .map_err(error_outcome)?;
        let shapes: Vec<Vec<usize>> = match levi {
            Some(s) => vec![parse_list(s)?],
            None => partitions_of(n).into_iter().rev().map(Vec::from).collect(),
        };
        for shape in shapes {
            let l = LeviDescriptor::type_a(&datum, &shape).map_err(error_outcome)?;
            let label = if shape.iter().all(|&b| b == 1) {
                "torus"
            } else if shape.len() == 1 {
                "G"
            } else {
                "L"
            };
            let parts: Vec<String> = shape.iter().map(usize::to_string).collect();
            rows.push(StabtypeOut {
                levi: format!("({})", parts.join(",")),
                label: label.to_string(),
                stabiliser_type: is_stabiliser_type(&datum, ch, &l),
            });
        }
    }
    Ok(Outcome::ok(match format {
        TableOrJson::Json => json(&rows),
        TableOrJson::Table => rows
            .iter()
            .map(|r| {
                let verdict = if r.stabiliser_type { "stabiliser-type" } else { "NOT stabiliser-type" };
                format!("{} {}: {verdict}\n", r.label, r.levi)
            })
            .collect(),
    }))
}

fn verify_closure_cmd(n: usize, seed: u64) -> Result<Outcome, Outcome> {
    check_closure_bound(n)?;
    let report = verify_closure(n, seed).map_err(error_outcome)?;
    let mut out = format!(
        "verify closure: n={} seed={seed} classes={} pairs={} relations={} mismatches={}\n",
        n,
        report.classes,
        report.pairs,
        report.relations,
        report.mismatches.len()
    );
    for m in &report.mismatches {
        writeln!(out, "MISMATCH {} <= {}: engine={} oracle={}", m.lower, m.upper, m.engine, m.oracle).unwrap();
    }
    if report.ok() {
        Ok(Outcome::ok(out))
    } else {
        Err(Outcome::fail(EXIT_MISMATCH, out, "error: closure order disagrees with the oracle\n"))
    }
}

fn verify_induction_cmd(n: usize, seed: u64) -> Result<Outcome, Outcome> {
    if n == 0 || n > MAX_INDUCTION_N {
        return Err(usage(format!("verify induction supports 1 <= n <= {MAX_INDUCTION_N}, got {n}")));
    }
    let report = verify_induction(n, seed).map_err(error_outcome)?;
    let mut out = format!(
        "verify induction: n={} seed={seed} tuples={} oracle_mismatches={} dimension_law_violations={} transitivity_violations={}\n",
        n,
        report.tuples,
        report.oracle_mismatches.len(),
        report.dimension_law_violations,
        report.transitivity_violations
    );
    for m in &report.oracle_mismatches {
        let parts: Vec<String> = m.parts.iter().map(Partition::to_string).collect();
        let oracle = m.oracle.as_ref().map(Partition::to_string).unwrap_or_else(|| "-".into());
        writeln!(out, "MISMATCH induce[{}]: formula={} oracle={oracle}", parts.join(","), m.formula).unwrap();
    }
    if report.ok() {
        Ok(Outcome::ok(out))
    } else {
        Err(Outcome::fail(EXIT_MISMATCH, out, "error: induction checks failed\n"))
    }
}

fn micro_pgl2(p: u64, k: usize) -> Result<Outcome, Outcome> {
    let report = decomp_core::oracle::pgl2_micro(p, k).map_err(error_outcome)?;
    let s = &report.summary;
    let consistent = if report.control {
        s.all_dimensions_agree
    } else {
        (s.centraliser_zero, s.centraliser_e11, s.centraliser_e12, s.stabiliser_e12) == (3, 1, 2, 1)
            && s.centraliser_level_1_nonempty
            && !s.centraliser_level_1_has_nilpotent
    };
    let out = json(&report);
    if consistent {
        Ok(Outcome::ok(out))
    } else {
        Err(Outcome::fail(EXIT_MISMATCH, out, "error: micro-model expectations not met\n"))
    }
}

/// Canonical datum helper for callers parsing `--blocks` into a class.
pub fn parse_datum(text: &str) -> Result<GLDecompDatum, String> {
    GLDecompDatum::new(parse_blocks(text)?).map_err(|e| e.to_string())
}
