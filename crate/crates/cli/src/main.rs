//! `qhx`: multipath complexes, matching complexes, blow-ups and magnitude
//! homology from the command line.
//!
//! Stages communicate through the plain-text graph and complex formats, so
//! `qhx gen P 4 | qhx complex | qhx homology` works as a pipeline.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use qhx_core::blowup::{blow_up, dynamical_modules, verify_blowup_theorem, verify_module_join};
use qhx_core::complex::{matching_complex, multipath_complex};
use qhx_core::construct::underlying_graph;
use qhx_core::format::{parse_complex, parse_graph, render_table, write_graph, write_homology, write_magnitude};
use qhx_core::homology::homology;
use qhx_core::magnitude::{magnitude_cohomology, magnitude_homology};
use qhx_core::survey::torsion_survey_with;
use qhx_core::{Family, Kind, Quiver};

#[derive(Parser)]
#[command(name = "qhx", version, about = "Combinatorial topology of quivers and digraphs")]
struct Cli {
    /// Render tables with aligned columns instead of TSV.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a member of a standard family, e.g. `gen P 4` or `gen D 3 2`.
    Gen {
        family: String,
        params: Vec<usize>,
    },
    /// Print the genus of a graph.
    Genus {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print the multipath or matching complex of a graph.
    Complex {
        #[arg(long, value_enum, default_value_t = ComplexKind::Multipath)]
        kind: ComplexKind,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Integral homology of a complex as `degree betti torsion` rows.
    Homology {
        /// Reduced homology (the default).
        #[arg(long, conflicts_with = "unreduced")]
        reduced: bool,
        #[arg(long)]
        unreduced: bool,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Blow up every vertex; prints the result and its edge bijection.
    Blowup {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Split a connected digraph without oriented cycles into dynamical modules.
    Decompose {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Check a structural theorem; exits 2 if it is refuted.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Magnitude homology as `k l betti torsion` rows.
    Magnitude {
        #[arg(long)]
        max_length: usize,
        #[arg(long)]
        cohomology: bool,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Largest multipath-complex torsion exponent per genus, over all small
    /// connected digraphs.
    Survey {
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
        #[arg(long, default_value_t = 1)]
        max_genus: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexKind {
    Multipath,
    Matching,
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    /// Multipath complex equals the matching complex of the blow-up.
    Blowup,
    /// Multipath complex is the join over dynamical modules.
    Modules,
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_graph(path: &str) -> Result<Quiver> {
    Ok(parse_graph(&read_input(path)?)?)
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("QHX_THREADS") {
        let n: usize = v.parse().with_context(|| format!("QHX_THREADS must be a positive integer, got `{v}`"))?;
        if n == 0 {
            bail!("QHX_THREADS must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Gen { family, params } => {
            let g = Family::from_name(&family, &params)?.build()?;
            out.write_all(write_graph(&g).as_bytes())?;
        }
        Command::Genus { input } => {
            writeln!(out, "{}", read_graph(&input)?.genus())?;
        }
        Command::Complex { kind, input } => {
            let g = read_graph(&input)?;
            let c = match kind {
                ComplexKind::Multipath => multipath_complex(&g)?,
                // directed inputs are read through their underlying graph
                ComplexKind::Matching if g.kind() == Kind::Undirected => matching_complex(&g)?,
                ComplexKind::Matching => matching_complex(&underlying_graph(&g))?,
            };
            write!(out, "{c}")?;
        }
        Command::Homology { reduced: _, unreduced, input } => {
            let c = parse_complex(&read_input(&input)?)?;
            out.write_all(write_homology(&homology(&c, !unreduced), pretty).as_bytes())?;
        }
        Command::Blowup { input } => {
            write!(out, "{}", blow_up(&read_graph(&input)?)?)?;
        }
        Command::Decompose { input } => {
            let dec = dynamical_modules(&read_graph(&input)?)?;
            for (i, m) in dec.modules.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "# boundary: {}", m.boundary.join(" "))?;
                out.write_all(write_graph(&m.module).as_bytes())?;
            }
        }
        Command::Verify { claim, input } => {
            let g = read_graph(&input)?;
            let holds = match claim {
                Claim::Blowup => verify_blowup_theorem(&g)?,
                Claim::Modules => verify_module_join(&g)?,
            };
            writeln!(out, "{holds}")?;
            if !holds {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Magnitude { max_length, cohomology, input } => {
            let g = read_graph(&input)?;
            let table = if cohomology { magnitude_cohomology(&g, max_length)? } else { magnitude_homology(&g, max_length)? };
            out.write_all(write_magnitude(&table, pretty).as_bytes())?;
        }
        Command::Survey { max_vertices, max_edges, max_genus } => {
            let header = ["genus", "graphs", "max_exponent"];
            let cells = |r: &qhx_core::survey::SurveyRow| {
                vec![r.genus.to_string(), r.graphs.to_string(), r.max_exponent.to_string()]
            };
            if pretty {
                let rows = torsion_survey_with(max_vertices, max_edges, max_genus, |_| {})?;
                let rows: Vec<Vec<String>> = rows.iter().map(cells).collect();
                out.write_all(render_table(&header, &rows, true).as_bytes())?;
            } else {
                writeln!(out, "{}", header.join("\t"))?;
                out.flush()?;
                let mut failure = None;
                torsion_survey_with(max_vertices, max_edges, max_genus, |r| {
                    if failure.is_none() {
                        failure = writeln!(out, "{}", cells(r).join("\t")).and_then(|_| out.flush()).err();
                    }
                })?;
                if let Some(e) = failure {
                    return Err(e.into());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = configure_threads().and_then(|_| run(cli, &mut out));
    let flushed = out.flush();
    match result.and_then(|code| flushed.map(|_| code).map_err(Into::into)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qhx: {e:#}");
            ExitCode::from(1)
        }
    }
}
