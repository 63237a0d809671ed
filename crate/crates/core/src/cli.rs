//! Command-line front end. [`run`] does all the work so it can be driven
//! from tests without spawning a process.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::certificate::{
    deserialize_certificate, serialize_certificate, verify_certificate, Certificate, Verdict,
};
use crate::coloring::chromatic_number;
use crate::graph::Graph;
use crate::graph6::{decode_graph6, encode_graph6};
use crate::oracle::oracle_witness;
use crate::sweep::{corpus_sweep, theorem_sweep, Method, SweepError, SweepOptions};
use crate::witness::{find_witness, WitnessError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONTRACT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(
    name = "chidelta",
    version,
    about = "Clique, high odd hole or C7-complement certificates for graphs with chi = Delta"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct GraphArg {
    /// graph6 string, or `-` to read one line from stdin
    #[arg(long)]
    graph: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find and verify a certificate
    Witness {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value = "proof")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the chromatic number and maximum degree
    Chi {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Check a certificate file against a graph
    Verify {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Check every connected graph up to a given order
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        /// Worker threads; defaults to $CHIDELTA_JOBS, then the CPU count
        #[arg(long)]
        jobs: Option<usize>,
        /// Read graph6 lines from a file instead of generating
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Permit order 9 (several minutes)
        #[arg(long)]
        allow_n9: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write the JSON report to this file
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Print graph6 for a generated graph
    Gen {
        /// Square of the cycle on this many vertices
        #[arg(long)]
        squared_cycle: usize,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

enum Failure {
    Usage(String),
    Io(String),
    Contract(String),
    Rejected(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Io(_) => EXIT_IO,
            Failure::Contract(_) => EXIT_CONTRACT,
            Failure::Rejected(_) => EXIT_FAILURE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Io(m) | Failure::Contract(m) | Failure::Rejected(m) => m,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> Outcome {
    match cmd {
        Command::Witness {
            graph,
            method,
            format,
        } => witness(&read_graph(&graph, io)?, method, format, io),
        Command::Chi { graph } => {
            let g = read_graph(&graph, io)?;
            let delta = g
                .max_degree()
                .map_err(|e| Failure::Contract(e.to_string()))?;
            writeln!(io.out, "chi {} delta {}", chromatic_number(&g), delta)?;
            Ok(())
        }
        Command::Verify { graph, certificate } => {
            let g = read_graph(&graph, io)?;
            let text = std::fs::read_to_string(&certificate)
                .map_err(|e| Failure::Io(format!("{}: {e}", certificate.display())))?;
            let cert = deserialize_certificate(&text).map_err(|e| Failure::Usage(e.to_string()))?;
            match verify_certificate(&g, &cert) {
                Verdict::Accept => {
                    writeln!(io.out, "accept")?;
                    Ok(())
                }
                Verdict::Reject(r) => {
                    writeln!(io.out, "reject: {r}")?;
                    Err(Failure::Rejected(r.to_string()))
                }
            }
        }
        Command::Sweep {
            max_n,
            min_n,
            method,
            jobs,
            corpus,
            allow_n9,
            format,
            json_out,
        } => {
            let report = match corpus {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    corpus_sweep(&text, method, jobs)
                }
                None => theorem_sweep(&SweepOptions {
                    min_n,
                    max_n,
                    method,
                    jobs,
                    allow_n9,
                }),
            };
            let report = report.map_err(|e| match e {
                SweepError::OrderRange { .. }
                | SweepError::OrderNineNotAllowed
                | SweepError::Corpus { .. } => Failure::Usage(e.to_string()),
                _ => Failure::Rejected(e.to_string()),
            })?;
            match format {
                Format::Text => write!(io.out, "{report}")?,
                Format::Json => writeln!(io.out, "{}", report.to_json())?,
            }
            if let Some(path) = json_out {
                std::fs::write(&path, report.to_json() + "\n")
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            if report.total_failures() > 0 {
                return Err(Failure::Rejected("sweep recorded failures".into()));
            }
            Ok(())
        }
        Command::Gen { squared_cycle } => {
            let g =
                Graph::cycle_power(squared_cycle, 2).map_err(|e| Failure::Usage(e.to_string()))?;
            let line = encode_graph6(&g).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(io.out, "{line}")?;
            Ok(())
        }
    }
}

fn read_graph(arg: &GraphArg, io: &mut Io) -> Result<Graph, Failure> {
    let line = if arg.graph == "-" {
        let mut s = String::new();
        io.stdin.read_to_string(&mut s)?;
        s.lines().next().unwrap_or("").to_string()
    } else {
        arg.graph.clone()
    };
    decode_graph6(line.trim()).map_err(|e| Failure::Usage(format!("bad graph6: {e}")))
}

fn oracle_certificate(g: &Graph) -> Result<Certificate, Failure> {
    if !g.is_connected() {
        return Err(Failure::Contract(WitnessError::Disconnected.to_string()));
    }
    oracle_witness(g).ok_or_else(|| Failure::Contract("graph has no certificate".into()))
}

fn witness(g: &Graph, method: Method, format: Format, io: &mut Io) -> Outcome {
    let proof = |g: &Graph| {
        find_witness(g).map_err(|e| {
            if e.is_contract() {
                Failure::Contract(e.to_string())
            } else {
                Failure::Rejected(e.to_string())
            }
        })
    };
    let certs: Vec<(&str, Certificate)> = match method {
        Method::Proof => vec![("proof", proof(g)?)],
        Method::Oracle => vec![("oracle", oracle_certificate(g)?)],
        Method::Both => vec![("proof", proof(g)?), ("oracle", oracle_certificate(g)?)],
    };
    for (_, c) in &certs {
        if let Verdict::Reject(r) = verify_certificate(g, c) {
            return Err(Failure::Rejected(format!(
                "certificate {c} failed verification: {r}"
            )));
        }
    }
    match format {
        Format::Json if certs.len() == 1 => {
            writeln!(io.out, "{}", serialize_certificate(&certs[0].1))?
        }
        Format::Json => {
            let obj: serde_json::Map<String, serde_json::Value> = certs
                .iter()
                .map(|(who, c)| {
                    (
                        who.to_string(),
                        serde_json::to_value(c).expect("serializable"),
                    )
                })
                .collect();
            writeln!(io.out, "{}", serde_json::Value::Object(obj))?
        }
        Format::Text => {
            for (who, c) in &certs {
                writeln!(io.out, "{who}: {c}")?;
            }
        }
    }
    if let Some((_, Certificate::C7Complement { .. })) = certs.first() {
        writeln!(io.err, "note: the graph is the complement of C7")?;
    }
    Ok(())
}
