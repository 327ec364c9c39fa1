use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fusionkit::{
    build_report, check_saturation, classify_subgroups, default_catalog, dump_to_json, from_dump,
    is_constrained, is_slim, parse_group_json, report_to_json, sparseness, to_dump, Bounds,
    FusionSystem, GroupTable,
};

mod graph;

#[derive(Parser)]
#[command(name = "fusionkit", version, about = "Fusion systems on finite p-groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a fusion system and write its dump
    Build(SystemArgs),
    /// Print one property of a fusion system
    Check {
        #[arg(value_enum)]
        property: Property,
        #[command(flatten)]
        args: SystemArgs,
    },
    /// Run the theorem suite; exit 1 if a non-vacuous theorem fails
    Verify(SystemArgs),
    /// List the built-in group fixtures with their default primes
    Catalog {
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Emit the subgroup lattice with fusion edges as DOT
    Graph(SystemArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Property {
    Saturated,
    Sparse,
    ExtremelySparse,
    Constrained,
    Slim,
    EssentialRank,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
struct SystemArgs {
    /// Built-in group name (see `fusionkit catalog`)
    #[arg(long, conflicts_with = "file")]
    catalog: Option<String>,
    /// Group file: {"degree", "generators"} JSON, or a fusion-system dump
    #[arg(long)]
    file: Option<PathBuf>,
    /// The prime; required unless the file is a dump
    #[arg(short)]
    p: Option<u64>,
    /// Quantify sparseness over all closed sub-tables, not just saturated ones
    #[arg(long)]
    strict_sparse: bool,
    /// Cap on group orders and search sizes (overrides FUSIONKIT_MAX_ORDER)
    #[arg(long, value_name = "N")]
    max_order: Option<usize>,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Build(args) => {
            let bounds = bounds_of(&args);
            let (_, f) = load_system(&args, &bounds)?;
            require_format(args.format, &[None, Some(Format::Json)])?;
            let d = to_dump(&f)?;
            emit(args.out.as_deref(), &dump_to_json(&d))?;
            Ok(0)
        }
        Command::Check { property, args } => {
            let bounds = bounds_of(&args);
            let (_, f) = load_system(&args, &bounds)?;
            let value = check_value(property, &args, &f, &bounds)?;
            let text = match args.format {
                None => format!("{value}\n"),
                Some(Format::Json) => {
                    let name = property
                        .to_possible_value()
                        .expect("no skipped variants")
                        .get_name()
                        .to_owned();
                    format!("{}\n", json!({ "property": name, "value": value }))
                }
                Some(Format::Dot) => bail!("check has no dot output"),
            };
            emit(args.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Verify(args) => {
            let bounds = bounds_of(&args);
            let (name, f) = load_system(&args, &bounds)?;
            require_format(args.format, &[None, Some(Format::Json)])?;
            let report = build_report(&name, &f, &bounds)?;
            emit(args.out.as_deref(), &report_to_json(&report))?;
            let failed = report
                .theorems
                .iter()
                .any(|t| t.hypotheses_met && !t.conclusion_holds);
            Ok(if failed { 1 } else { 0 })
        }
        Command::Catalog { out, format } => {
            let entries = default_catalog();
            let text = match format {
                None => {
                    let mut s = String::new();
                    for (name, p) in &entries {
                        s.push_str(&format!("{name} {p}\n"));
                    }
                    s
                }
                Some(Format::Json) => {
                    let rows: Vec<_> = entries
                        .iter()
                        .map(|(name, p)| json!({ "name": name, "p": p }))
                        .collect();
                    format!("{}\n", serde_json::to_string_pretty(&rows)?)
                }
                Some(Format::Dot) => bail!("catalog has no dot output"),
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Graph(args) => {
            let bounds = bounds_of(&args);
            let (_, f) = load_system(&args, &bounds)?;
            require_format(args.format, &[None, Some(Format::Dot)])?;
            emit(args.out.as_deref(), &graph::dot_graph(&f, &bounds)?)?;
            Ok(0)
        }
    }
}

fn check_value(
    property: Property,
    args: &SystemArgs,
    f: &FusionSystem,
    bounds: &Bounds,
) -> Result<serde_json::Value> {
    Ok(match property {
        Property::Saturated => json!(check_saturation(f).saturated),
        Property::Sparse => {
            let s = sparseness(f, bounds)?;
            json!(if args.strict_sparse {
                s.strict_sparse
            } else {
                s.sparse
            })
        }
        Property::ExtremelySparse => {
            let s = sparseness(f, bounds)?;
            json!(if args.strict_sparse {
                s.strict_extremely_sparse
            } else {
                s.extremely_sparse
            })
        }
        Property::Constrained => json!(is_constrained(f, bounds)?.constrained),
        Property::Slim => json!(is_slim(&f.table, &f.base, f.p, bounds)?),
        Property::EssentialRank => json!(classify_subgroups(f, bounds)?.essential_rank),
    })
}

fn bounds_of(args: &SystemArgs) -> Bounds {
    let bounds = Bounds::from_env();
    match args.max_order {
        Some(n) => bounds.with_max_order(n),
        None => bounds,
    }
}

fn load_system(args: &SystemArgs, bounds: &Bounds) -> Result<(String, FusionSystem)> {
    match (&args.catalog, &args.file) {
        (Some(name), None) => {
            let p = required_prime(args)?;
            let g = fusionkit::catalog_table(name, bounds)?;
            let f = FusionSystem::from_group(&g, p, bounds)?;
            Ok((name.clone(), f))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "file".to_owned());
            let v: serde_json::Value =
                serde_json::from_str(&text).context("input is not JSON")?;
            if v.get("morphisms").is_some() {
                let f = from_dump(&text, bounds)?;
                if let Some(p) = args.p {
                    if p != f.p {
                        bail!("-p {p} disagrees with the dump's p = {}", f.p);
                    }
                }
                Ok((name, f))
            } else {
                let p = required_prime(args)?;
                let (degree, gens) = parse_group_json(&text)?;
                let g = GroupTable::closure(&gens, degree, bounds)?;
                let f = FusionSystem::from_group(&g, p, bounds)?;
                Ok((name, f))
            }
        }
        _ => bail!("exactly one of --catalog and --file must be given"),
    }
}

fn required_prime(args: &SystemArgs) -> Result<u64> {
    let p = match args.p {
        Some(p) => p,
        None => bail!("-p is required here"),
    };
    if !is_prime(p) {
        bail!("p = {p} is not prime");
    }
    Ok(p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn require_format(given: Option<Format>, allowed: &[Option<Format>]) -> Result<()> {
    if allowed.contains(&given) {
        Ok(())
    } else {
        bail!("unsupported --format for this command")
    }
}

fn emit(out: Option<&std::path::Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}
