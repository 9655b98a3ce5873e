use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use nearreg::constructions::{search_m12_signed_graph, SignedSearchOutcome, SIGNED_SEARCH_NODE_BOUND};
use nearreg::gpc::{gpc_assemble, GpcLayout};
use nearreg::verify::{self, error_exit_code, Report};

#[derive(Parser)]
#[command(name = "nearreg", version, about = "Exact verification of near-regular matroid constructions")]
struct Cli {
    /// Cap on worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural checklist for M12 = M[I A12].
    VerifyM12 {
        /// Matrix file to use in place of A12.
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Randomized pivot, determinant, minor and homomorphism laws.
    VerifyLaws {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        trials: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Builds the obstruction and writes matrix.json and certificates.json.
    BuildObstruction {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        report: Output,
    },
    /// Runs one check on matrix or matroid files.
    Check {
        kind: CheckKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Comma-separated element labels (rank).
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<String>>,
        /// Comma-separated element labels (modular).
        #[arg(long, value_delimiter = ',')]
        flat: Option<Vec<String>>,
        #[command(flatten)]
        out: Output,
    },
    /// Assembles the generalized parallel connection described by a layout file.
    GpcAssemble {
        layout: PathBuf,
        /// Output file for the matrix (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Searches for a signed graph whose frame matroid is M12.
    SignedGraphSearch {
        #[arg(long, default_value_t = SIGNED_SEARCH_NODE_BOUND)]
        node_bound: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Pmatrix,
    Iconn4,
    Modular,
    Iso,
    Rank,
}

#[derive(clap::Args)]
struct Output {
    /// Machine-readable report.
    #[arg(long)]
    json: bool,
    /// Include wall times in the report.
    #[arg(long)]
    timings: bool,
}

impl Output {
    fn emit(&self, report: &Report) -> u8 {
        if self.json {
            println!("{}", report.to_json(self.timings));
        } else {
            print!("{}", report.to_text(self.timings));
        }
        report.exit_code() as u8
    }
}

fn usage(message: &str) -> nearreg::Error {
    nearreg::Error::InvalidArgument(message.into())
}

fn run(cli: Cli) -> nearreg::Result<u8> {
    let start = Instant::now();
    let progress = move |msg: &str| eprintln!("[{:>7.1}s] {msg}", start.elapsed().as_secs_f64());
    match cli.command {
        Command::VerifyM12 { matrix, out } => {
            let a = matrix.as_ref().map(|p| verify::load_matrix(p)).transpose()?;
            let mut report = verify::verify_m12(a);
            if let Some(p) = &matrix {
                report.command = format!("{} --matrix {}", report.command, p.display());
            }
            Ok(out.emit(&report))
        }
        Command::VerifyLaws { seed, trials, out } => Ok(out.emit(&verify::verify_laws(seed, trials)?)),
        Command::BuildObstruction { n, out, report } => {
            Ok(report.emit(&verify::write_obstruction(n, &out, &progress)?))
        }
        Command::Check {
            kind,
            files,
            set,
            flat,
            out,
        } => {
            let paths: Vec<&std::path::Path> = files.iter().map(|p| p.as_path()).collect();
            let one = || match paths.as_slice() {
                [p] => Ok(*p),
                _ => Err(usage("this check takes exactly one file")),
            };
            let report = match kind {
                CheckKind::Pmatrix => verify::check_pmatrix(&paths)?,
                CheckKind::Iconn4 => verify::check_iconn4(&paths)?,
                CheckKind::Modular => verify::check_modular(one()?, flat.as_deref())?,
                CheckKind::Rank => verify::check_rank(one()?, set.as_deref())?,
                CheckKind::Iso => match paths.as_slice() {
                    [a, b] => verify::check_iso(a, b)?,
                    _ => return Err(usage("iso takes exactly two files")),
                },
            };
            Ok(out.emit(&report))
        }
        Command::GpcAssemble { layout, out } => {
            let a = gpc_assemble(&GpcLayout::load(&layout)?)?;
            match out {
                Some(path) => std::fs::write(path, a.to_json() + "\n")?,
                None => println!("{}", a.to_json()),
            }
            Ok(0)
        }
        Command::SignedGraphSearch { node_bound, json } => {
            progress("searching");
            let search = search_m12_signed_graph(node_bound)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&search).expect("search result serializes"));
            } else {
                println!("{} candidate vectors, {} search nodes", search.candidate_vectors, search.nodes);
                match &search.outcome {
                    SignedSearchOutcome::Found { graph, verified, .. } => {
                        for (u, v, label, sign) in &graph.edges {
                            println!("{label}: {u} {v} {sign:+}");
                        }
                        println!("frame matroid equals M12: {verified}");
                    }
                    SignedSearchOutcome::Exhausted { complete, node_bound } => {
                        println!("not found (search complete: {complete}, node bound {node_bound})");
                    }
                }
            }
            Ok(match search.outcome {
                SignedSearchOutcome::Found { verified: true, .. } => 0,
                _ => 1,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
