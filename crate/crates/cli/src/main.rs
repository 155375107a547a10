use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use twotrans::bounds::{certify, closed_form, delta_upper_bound};
use twotrans::classes::has_p3;
use twotrans::generate;
use twotrans::oracle::DEFAULT_BUDGET;
use twotrans::partition::first_violation;
use twotrans::reduction::{
    bipartite_vertex_count, bipartite_vertex_count_stated, build_bipartite_gadget,
    build_chordal_gadget, Variant,
};
use twotrans::solve::{solve, Method};
use twotrans::{emit_graph6, parse_edge_list, parse_graph6, parse_partition, Graph};

#[derive(Parser)]
#[command(name = "twotrans", version, about = "Exact 2-transitivity of graphs")]
struct Cli {
    /// Graph file format; `auto` picks by extension (.g6 is graph6, anything else an edge list).
    #[arg(long, value_enum, global = true, default_value = "auto")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Auto,
    El,
    G6,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Tree,
    Split,
    Chain,
    Brute,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Tree => Method::Tree,
            MethodArg::Split => Method::Split,
            MethodArg::Chain => Method::Chain,
            MethodArg::Brute => Method::Brute,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Cmbt,
    NearCompleteBipartite,
    RandomTree,
    RandomSplit,
    RandomChain,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceVariant {
    Chordal,
    Bipartite,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Tr2 per component and overall.
    Solve {
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Print a maximum partition after the values.
        #[arg(long)]
        witness: bool,
        /// Write the witness here instead of stdout.
        #[arg(long, requires = "witness")]
        out: Option<PathBuf>,
        /// Node budget for the brute-force search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        file: PathBuf,
    },
    /// Check a partition file against a graph.
    Verify {
        file: PathBuf,
        partfile: PathBuf,
        /// Check plain transitivity (1-domination) instead.
        #[arg(long)]
        transitive: bool,
    },
    /// Emit a graph from a named family.
    ///
    /// Parameters: path/cycle/complete N; complete-bipartite A B; cmbt K;
    /// near-complete-bipartite T; random-tree/random-split/random-chain SEED N.
    Generate {
        #[arg(value_enum)]
        family: Family,
        params: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a hardness gadget graph from a source graph with an even edge count.
    Reduce {
        #[arg(value_enum)]
        variant: ReduceVariant,
        file: PathBuf,
        #[arg(long, default_value = "reduced.el")]
        out: PathBuf,
        #[arg(long, default_value = "reduced.handles")]
        handles: PathBuf,
    },
    /// Print the degree bound, the P3 flag and any closed form.
    Bounds { file: PathBuf },
    /// Check a claimed value and witness.
    Certify {
        file: PathBuf,
        partfile: PathBuf,
        k: usize,
    },
}

fn read_graph(path: &Path, format: Format) -> anyhow::Result<Graph> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let g6 = match format {
        Format::G6 => true,
        Format::El => false,
        Format::Auto => path.extension().is_some_and(|e| e == "g6"),
    };
    let g = if g6 {
        parse_graph6(&bytes)?
    } else {
        parse_edge_list(std::str::from_utf8(&bytes).context("edge list is not UTF-8")?)?
    };
    Ok(g)
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn param(params: &[u64], count: usize, usage: &str) -> anyhow::Result<Vec<usize>> {
    if params.len() != count {
        bail!("expected parameters: {usage}");
    }
    params
        .iter()
        .map(|&p| usize::try_from(p).map_err(|_| anyhow!("parameter {p} too large")))
        .collect()
}

fn generated(family: Family, params: &[u64]) -> anyhow::Result<Graph> {
    let seeded = |f: fn(u64, usize) -> twotrans::Result<Graph>| -> anyhow::Result<Graph> {
        if params.len() != 2 {
            bail!("expected parameters: SEED N");
        }
        let n = usize::try_from(params[1]).map_err(|_| anyhow!("N too large"))?;
        Ok(f(params[0], n)?)
    };
    Ok(match family {
        Family::Path => generate::path(param(params, 1, "N")?[0])?,
        Family::Cycle => generate::cycle(param(params, 1, "N")?[0])?,
        Family::Complete => generate::complete(param(params, 1, "N")?[0])?,
        Family::CompleteBipartite => {
            let p = param(params, 2, "A B")?;
            generate::complete_bipartite(p[0], p[1])?
        }
        Family::Cmbt => generate::generate_cmbt(param(params, 1, "K")?[0])?
            .graph()
            .clone(),
        Family::NearCompleteBipartite => {
            let r = generate::generate_near_complete_bipartite(param(params, 1, "T")?[0])?;
            if r.degenerate {
                eprintln!("note: degenerate instance, emitted as K_{{2,1}}");
            }
            r.graph
        }
        Family::RandomTree => seeded(generate::random_tree)?,
        Family::RandomSplit => seeded(generate::random_split)?,
        Family::RandomChain => seeded(generate::random_chain)?,
    })
}

/// Exit 1 for a rejected certificate, 2 for everything else.
enum Failure {
    Invalid,
    Usage(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<twotrans::Error> for Failure {
    fn from(e: twotrans::Error) -> Self {
        match e {
            twotrans::Error::Certificate(_) => {
                eprintln!("error: {e}");
                Failure::Invalid
            }
            e => Failure::Usage(e.into()),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Solve {
            method,
            witness,
            out,
            budget,
            file,
        } => {
            let g = read_graph(&file, format)?;
            let r = solve(&g, method.into(), budget)?;
            for (i, c) in r.components.iter().enumerate() {
                println!(
                    "component {i} vertices {} method {} tr2 {}",
                    c.vertices.len(),
                    c.method,
                    c.k
                );
            }
            println!("tr2 {}", r.tr2);
            if witness {
                emit(out.as_deref(), &r.witness.to_partition_file())?;
            }
        }
        Command::Verify {
            file,
            partfile,
            transitive,
        } => {
            let g = read_graph(&file, format)?;
            let text = fs::read_to_string(&partfile)
                .with_context(|| format!("reading {}", partfile.display()))?;
            let p = parse_partition(&text)?;
            let threshold = if transitive { 1 } else { 2 };
            match first_violation(&g, &p, threshold)? {
                None => println!("valid"),
                Some(v) => {
                    println!("invalid {} {} {}", v.i, v.j, v.vertex);
                    eprintln!("{v}");
                    return Err(Failure::Invalid);
                }
            }
        }
        Command::Generate {
            family,
            params,
            out,
        } => {
            let g = generated(family, &params)?;
            let g6 = match format {
                Format::G6 => true,
                Format::El => false,
                Format::Auto => out
                    .as_deref()
                    .and_then(Path::extension)
                    .is_some_and(|e| e == "g6"),
            };
            let text = if g6 {
                emit_graph6(&g)
            } else {
                g.to_edge_list()
            };
            emit(out.as_deref(), &text)?;
        }
        Command::Reduce {
            variant,
            file,
            out,
            handles,
        } => {
            let g = read_graph(&file, format)?;
            let r = match variant {
                ReduceVariant::Chordal => build_chordal_gadget(&g)?,
                ReduceVariant::Bipartite => build_bipartite_gadget(&g)?,
            };
            emit(Some(&out), &r.gprime.to_edge_list())?;
            emit(Some(&handles), &r.handle_map())?;
            println!("k {}", r.k);
            println!("vertices {}", r.gprime.n());
            println!("edges {}", r.gprime.m());
            if r.variant == Variant::Bipartite {
                let (n, m) = (g.n(), g.m());
                println!(
                    "note: stated vertex count 18m+18n+68 = {}, construction gives 20m+18n+68 = {}",
                    bipartite_vertex_count_stated(n, m),
                    bipartite_vertex_count(n, m)
                );
            }
        }
        Command::Bounds { file } => {
            let g = read_graph(&file, format)?;
            println!("delta_bound: {}", delta_upper_bound(&g));
            println!("has_p3: {}", has_p3(&g));
            match closed_form(&g) {
                Some(v) => println!("closed_form: {v}"),
                None => println!("closed_form: none"),
            }
        }
        Command::Certify { file, partfile, k } => {
            let g = read_graph(&file, format)?;
            let text = fs::read_to_string(&partfile)
                .with_context(|| format!("reading {}", partfile.display()))?;
            let p = parse_partition(&text)?;
            let report = certify(&g, k, &p);
            print!("{report}");
            if !report.pass {
                return Err(Failure::Invalid);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
