use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use nrt_core::group::{DEFAULT_CLOSURE_CAP, DEFAULT_SUBGROUP_SWEEP_CAP};
use nrt_core::transversal::{enumerate_nrts, non_left_transversal_witness, DEFAULT_NRT_CAP};
use nrt_core::verifier::{sweep, verify_pair, AnalyzeOptions, SweepOptions};
use nrt_core::{builtin_catalog, CosetSpace, Group, GroupId, Perm, Subgroup};

/// Normalized right transversals of subgroups of finite groups.
#[derive(Parser, Debug)]
#[command(name = "nrt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in groups with their orders.
    Catalog,
    /// Analyze every NRT of one subgroup and run all checks.
    Analyze(PairArgs),
    /// Print every NRT of one subgroup as JSON lines.
    Enumerate(PairArgs),
    /// Print an NRT that is not a left transversal.
    Witness(PairArgs),
    /// Analyze every subgroup of every catalog group up to an order.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Named group (`sym:N`, `alt:N`, `cyc:N`, `dih:N`, `q8`), or generators in
    /// cycle notation when `--degree` is given.
    #[arg(long)]
    group: Option<String>,
    /// Text file holding the order and then the multiplication table.
    #[arg(long)]
    table_file: Option<PathBuf>,
    /// Degree for `--group` generators, e.g. `--group "(1 2); (1 2 3)" --degree 3`.
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
    closure_cap: usize,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Subgroup generators in 1-based cycle notation, separated by `;` or `,`.
    #[arg(long)]
    subgroup_gens: Option<String>,
    /// Subgroup element indices (0-based), separated by commas or spaces.
    #[arg(long)]
    subgroup_elems: Option<String>,
    #[arg(long, default_value_t = DEFAULT_NRT_CAP)]
    nrt_cap: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Stop once every "all NRTs" flag is known to be false.
    #[arg(long)]
    early_exit: bool,
    #[arg(long)]
    pretty: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, default_value_t = 24)]
    max_order: usize,
    #[arg(long, default_value_t = DEFAULT_NRT_CAP)]
    nrt_cap: u64,
    #[arg(long, default_value_t = DEFAULT_SUBGROUP_SWEEP_CAP)]
    subgroup_cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    early_exit: bool,
    /// Run pairs one at a time instead of on the thread pool.
    #[arg(long)]
    single_threaded: bool,
}

fn load_group(args: &GroupArgs) -> Result<Group> {
    match (&args.group, &args.table_file) {
        (Some(_), Some(_)) => bail!("give either --group or --table-file, not both"),
        (None, None) => bail!("a group is required: --group or --table-file"),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            Ok(Group::parse_table_text(&text)?.with_name(name))
        }
        (Some(spec), None) => match args.degree {
            Some(degree) => {
                let gens = Perm::parse_list(spec, degree)?;
                Ok(Group::from_generators(degree, &gens, args.closure_cap)?.with_name(format!("<{spec}>")))
            }
            None => Ok(spec.parse::<GroupId>()?.build()?),
        },
    }
}

fn load_subgroup(g: &Group, args: &PairArgs) -> Result<Subgroup> {
    match (&args.subgroup_gens, &args.subgroup_elems) {
        (Some(_), Some(_)) => bail!("give either --subgroup-gens or --subgroup-elems, not both"),
        (None, None) => bail!("a subgroup is required: --subgroup-gens or --subgroup-elems"),
        (Some(gens), None) => Ok(g.subgroup_generated(&g.parse_elements(gens)?)?),
        (None, Some(list)) => {
            let elems = list
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().with_context(|| format!("bad element index `{t}`")))
                .collect::<Result<Vec<_>>>()?;
            Ok(Subgroup::from_elems(g, &elems)?)
        }
    }
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: serde::Serialize>(out: &mut dyn Write, value: &T, pretty: bool) -> Result<()> {
    if pretty {
        serde_json::to_writer_pretty(&mut *out, value)?;
    } else {
        serde_json::to_writer(&mut *out, value)?;
    }
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Catalog => {
            let mut out = io::stdout().lock();
            for id in builtin_catalog() {
                writeln!(out, "{id}\t{}", id.order())?;
            }
            Ok(true)
        }
        Command::Analyze(args) => {
            let g = load_group(&args.group)?;
            let space = CosetSpace::new(&g, load_subgroup(&g, &args)?);
            let opts = AnalyzeOptions { nrt_cap: args.nrt_cap, early_exit: args.early_exit };
            let result = verify_pair(&space, &opts)?;
            let mut out = output(&args.out)?;
            write_json(&mut *out, &result, args.pretty)?;
            out.flush()?;
            Ok(result.checks_passed)
        }
        Command::Enumerate(args) => {
            let g = load_group(&args.group)?;
            let space = CosetSpace::new(&g, load_subgroup(&g, &args)?);
            let mut out = output(&args.out)?;
            for (index, t) in enumerate_nrts(&space, args.nrt_cap)?.enumerate() {
                let record = t.record();
                let line = serde_json::json!({ "index": index, "reps": record.reps, "labels": record.labels });
                write_json(&mut *out, &line, args.pretty)?;
            }
            out.flush()?;
            Ok(true)
        }
        Command::Witness(args) => {
            let g = load_group(&args.group)?;
            let space = CosetSpace::new(&g, load_subgroup(&g, &args)?);
            let w = non_left_transversal_witness(&space)?;
            let (a, b) = w.left_coset_collision().context("witness is unexpectedly a left transversal")?;
            let value = serde_json::json!({
                "witness": w.record(),
                "sharedLeftCoset": {
                    "coset": space.left().coset_of(a),
                    "elements": [a, b],
                    "labels": [g.element_label(a), g.element_label(b)],
                },
            });
            let mut out = output(&args.out)?;
            write_json(&mut *out, &value, args.pretty)?;
            out.flush()?;
            Ok(true)
        }
        Command::Sweep(args) => {
            let catalog: Vec<Group> = builtin_catalog()
                .into_iter()
                .filter(|id| id.order() <= args.max_order)
                .map(GroupId::build)
                .collect::<Result<_, _>>()?;
            let opts = SweepOptions {
                max_order: args.max_order,
                nrt_cap: args.nrt_cap,
                subgroup_order_cap: args.subgroup_cap,
                early_exit: args.early_exit,
                parallel: !args.single_threaded,
            };
            let outcome = sweep(&catalog, &opts);
            let mut out = output(&args.out)?;
            for entry in &outcome.entries {
                write_json(&mut *out, entry, false)?;
            }
            out.flush()?;
            eprintln!("{}", serde_json::to_string(&outcome.summary)?);
            Ok(outcome.summary.passed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
