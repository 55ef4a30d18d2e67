//! Command-line front end.
//!
//! Exit codes for `witness`: 0 when a cycle or independent set was found,
//! 1 on unreadable input, 2 when the hypothesis fails, 3 on failure. Other
//! subcommands exit 0 on success and 1 on bad arguments or failed checks.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::checks::{self, Lemma, SuiteConfig};
use crate::generate;
use crate::graph::Graph;
use crate::io::{self, Format};
use crate::witness::{self, CertificateKind};

#[derive(Debug, Parser)]
#[command(name = "cycle-ramsey", version, about = "Cycle-versus-independent-set witnesses and lemma checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Graph6,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Graph6 => Format::Graph6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaArg {
    Chop,
    Collate,
    ErdosGallai,
    SawFind,
    Pr1,
    Super,
    Lux,
    Flat,
    SawCycles,
}

impl From<LemmaArg> for Lemma {
    fn from(l: LemmaArg) -> Lemma {
        match l {
            LemmaArg::Chop => Lemma::Chop,
            LemmaArg::Collate => Lemma::Collate,
            LemmaArg::ErdosGallai => Lemma::ErdosGallai,
            LemmaArg::SawFind => Lemma::SawFind,
            LemmaArg::Pr1 => Lemma::Pr1,
            LemmaArg::Super => Lemma::Super,
            LemmaArg::Lux => Lemma::Lux,
            LemmaArg::Flat => Lemma::Flat,
            LemmaArg::SawCycles => Lemma::SawCycles,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    CliqueUnionCross,
    SawTail,
    TwoConnectedRandom,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a cycle of order p+1 or an independent set of size r+1 in a
    /// graph of order pr+1.
    Witness {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: usize,
        /// Certificate file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Read p and r as the unshifted cycle order P = p+1 and clique
        /// order R = r+1.
        #[arg(long)]
        unshifted: bool,
    },
    /// Write r disjoint copies of K_p.
    Extremal {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a randomized lemma suite against the brute-force oracles.
    CheckLemma {
        #[arg(long, value_enum)]
        lemma: LemmaArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_n: Option<usize>,
        /// Shift a claimed interval bound by one to check that the harness
        /// notices.
        #[arg(long, hide = true)]
        mutate: bool,
    },
    /// Generate a seeded instance.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Clique sizes for clique-union-cross, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "13,14")]
        sizes: Vec<usize>,
        /// Number of cross edges for clique-union-cross.
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        d: usize,
        /// Edge probability among the other saw vertices.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (program name first) and runs the command; returns the exit
/// code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                1
            } else {
                0
            }
        }
    }
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Witness {
            input,
            p,
            r,
            out,
            unshifted,
        } => cmd_witness(&input, p, r, out.as_ref(), unshifted),
        Command::Extremal { p, r, format, out } => cmd_extremal(p, r, format.into(), out.as_ref()),
        Command::CheckLemma {
            lemma,
            trials,
            seed,
            max_n,
            mutate,
        } => {
            let lemma = Lemma::from(lemma);
            let cfg = SuiteConfig {
                trials,
                seed,
                max_n: max_n.unwrap_or(lemma.default_max_n()),
                mutate,
            };
            cmd_check_lemma(lemma, &cfg)
        }
        Command::Gen {
            kind,
            sizes,
            m,
            k,
            d,
            density,
            n,
            delta,
            seed,
            format,
            out,
        } => {
            let mut rng = generate::rng(seed);
            let g = match kind {
                GenKind::CliqueUnionCross => generate::clique_union_cross(&sizes, m, &mut rng),
                GenKind::SawTail => generate::saw_tail(k, d, density, &mut rng),
                GenKind::TwoConnectedRandom => generate::two_connected_random(n, delta, &mut rng),
            };
            match g {
                Ok(g) => emit(&io::write(&g, format.into()), out.as_ref()),
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> i32 {
    match out {
        Some(path) => match fs::write(path, text) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                1
            }
        },
        None => {
            print!("{text}");
            0
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    io::parse_any(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn cmd_witness(input: &PathBuf, p: usize, r: usize, out: Option<&PathBuf>, unshifted: bool) -> i32 {
    let g = match read_graph(input) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let (p, r) = if unshifted {
        match (p.checked_sub(1), r.checked_sub(1)) {
            (Some(p), Some(r)) => (p, r),
            _ => {
                eprintln!("error: unshifted orders must be at least 1");
                return 1;
            }
        }
    } else {
        (p, r)
    };
    let cert = witness::ramsey_witness(&g, p, r);
    let mut doc = cert.to_json();
    doc.push('\n');
    let written = emit(&doc, out);
    if written != 0 {
        return written;
    }
    if out.is_some() {
        println!("{:?}: {}", cert.kind, cert.explanation);
    }
    match cert.kind {
        CertificateKind::CycleFound | CertificateKind::IndependentSetFound => 0,
        CertificateKind::HypothesisViolated => 2,
        CertificateKind::Failure => 3,
    }
}

pub fn cmd_extremal(p: usize, r: usize, format: Format, out: Option<&PathBuf>) -> i32 {
    match witness::extremal_graph(p, r) {
        Ok(g) => emit(&io::write(&g, format), out),
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

pub fn cmd_check_lemma(lemma: Lemma, cfg: &SuiteConfig) -> i32 {
    let start = std::time::Instant::now();
    let report = checks::run_suite(lemma, cfg);
    println!(
        "{report} (seed {}, max_n {}, {:.2}s)",
        cfg.seed,
        cfg.max_n,
        start.elapsed().as_secs_f64()
    );
    i32::from(!report.ok())
}
