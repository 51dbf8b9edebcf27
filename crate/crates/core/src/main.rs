use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use plane_decomp::decompose::{self, CaseBContext, DecomposeError, PrescribedSet};
use plane_decomp::io::{self as pio, AnyDecomposition, Document, Format, GraphDoc};
use plane_decomp::plane_graph::{Dart, EdgeId, PlaneGraph, VertexId};
use plane_decomp::sweep::{self, SweepConfig};
use plane_decomp::{classes, generators, verify};

// Writes to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = write!(io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        let _ = writeln!(io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "plane-decomp", version, about = "Tree, 2-regular and matching decompositions of plane subcubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Mode {
    #[value(name = "2d")]
    Two,
    #[value(name = "3d")]
    Three,
    #[value(name = "b2d")]
    Prescribed,
}

#[derive(Copy, Clone, ValueEnum)]
enum InFormat {
    G6,
    Rot,
}

#[derive(Copy, Clone, ValueEnum)]
enum OutFormat {
    Json,
    Dot,
}

#[derive(Copy, Clone, ValueEnum)]
enum OracleKind {
    B2d,
    Sep,
}

#[derive(clap::Args)]
struct Input {
    /// Graph file; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Input format; guessed from the text when absent.
    #[arg(long)]
    format: Option<InFormat>,
    /// Outer face, as a face id or as `edge,tail`.
    #[arg(long)]
    outer: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a graph and print the result.
    Decompose {
        #[arg(long, value_enum, default_value = "2d")]
        mode: Mode,
        #[command(flatten)]
        input: Input,
        /// Prescribed edges for b2d (in 2d mode a single edge selects the
        /// single-edge variant).
        #[arg(long, value_delimiter = ',')]
        prescribed: Vec<u32>,
        /// The vertex pair `v,w` of the cut case.
        #[arg(long, value_delimiter = ',')]
        ctx: Vec<u32>,
        #[arg(long, value_enum, default_value = "json")]
        out: OutFormat,
        /// Where to write the surgery log when an internal check fails.
        #[arg(long, default_value = "plane-decomp-replay.json")]
        replay: PathBuf,
    },
    /// Check a decomposition document written by `decompose`.
    Verify {
        #[arg(long)]
        decomposition: PathBuf,
    },
    /// Report class membership.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Print a generated graph in rotation format.
    Gen {
        name: String,
        #[arg(default_value = "")]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "rot")]
        format: InFormat,
    },
    /// Run an exhaustive oracle.
    Oracle {
        kind: OracleKind,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',')]
        prescribed: Vec<u32>,
    },
    /// Run the catalog checks.
    Sweep {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 12)]
        cubic_max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Precondition(serde_json::Value),
    Internal(String),
}

impl From<pio::IoError> for Failure {
    fn from(e: pio::IoError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_graph(input: &Input) -> Result<PlaneGraph, Failure> {
    let text = match &input.input {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
            s
        }
    };
    let format = input.format.map(|f| match f {
        InFormat::G6 => Format::Graph6,
        InFormat::Rot => Format::Rot,
    });
    let g = pio::parse_graph(&text, format)?;
    match &input.outer {
        None => Ok(g),
        Some(spec) => {
            let nums: Vec<u32> = spec
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| Failure::Usage(format!("bad --outer {spec:?}"))))
                .collect::<Result<_, _>>()?;
            let g = match nums.as_slice() {
                [f] => g.set_outer_face(*f as usize),
                [e, t] => g.set_outer_dart(Dart { edge: EdgeId(*e), tail: VertexId(*t) }),
                _ => return Err(Failure::Usage("--outer takes `face` or `edge,tail`".into())),
            };
            g.map(|g| g.detached()).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn decompose_error(g: &PlaneGraph, err: DecomposeError, replay: &PathBuf) -> Failure {
    match err {
        DecomposeError::InternalAssertion { message, log } => {
            let doc = json!({
                "schema": pio::SCHEMA,
                "message": message,
                "graph": GraphDoc::from_graph(g),
                "log": log,
            });
            let written = fs::write(replay, serde_json::to_string_pretty(&doc).unwrap());
            let where_ = match written {
                Ok(()) => format!("replay written to {}", replay.display()),
                Err(e) => format!("could not write replay file: {e}"),
            };
            Failure::Internal(format!("{message}; {where_}"))
        }
        DecomposeError::PreconditionViolated { reason, witness } => Failure::Precondition(json!({
            "schema": pio::SCHEMA,
            "error": "precondition_violated",
            "reason": reason,
            "witness": witness,
        })),
        other => Failure::Precondition(json!({
            "schema": pio::SCHEMA,
            "error": "precondition_violated",
            "reason": other.to_string(),
            "witness": null,
        })),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Decompose { mode, input, prescribed, ctx, out, replay } => {
            let g = read_graph(&input)?;
            let b: Vec<EdgeId> = prescribed.iter().map(|&e| EdgeId(e)).collect();
            let doc_d = match mode {
                Mode::Two => {
                    let d = match b.as_slice() {
                        [] => decompose::two_decompose(&g),
                        [e] => decompose::e_two_decompose(&g, *e),
                        _ => return Err(Failure::Usage("2d mode takes at most one prescribed edge".into())),
                    };
                    AnyDecomposition::Two(d.map_err(|e| decompose_error(&g, e, &replay))?)
                }
                Mode::Three => {
                    let d = decompose::three_decompose(&g).map_err(|e| decompose_error(&g, e, &replay))?;
                    AnyDecomposition::Three(d)
                }
                Mode::Prescribed => {
                    let ctx = match ctx.as_slice() {
                        [] => None,
                        [v, w] => Some(CaseBContext { v: VertexId(*v), w: VertexId(*w) }),
                        _ => return Err(Failure::Usage("--ctx takes `v,w`".into())),
                    };
                    let d = decompose::b_two_decompose(&g, &PrescribedSet::new(b.iter().copied()), ctx)
                        .map_err(|e| decompose_error(&g, e, &replay))?;
                    AnyDecomposition::Two(d)
                }
            };
            match out {
                OutFormat::Json => {
                    let mut doc = Document::new(&g, doc_d);
                    if !b.is_empty() {
                        doc.prescribed = Some(b);
                    }
                    outln!("{}", doc.to_json());
                }
                OutFormat::Dot => out!("{}", pio::emit_dot(&g, &doc_d)),
            }
            Ok(())
        }
        Command::Verify { decomposition } => {
            let text = fs::read_to_string(&decomposition)
                .map_err(|e| Failure::Usage(format!("{}: {e}", decomposition.display())))?;
            let doc = Document::from_json(&text)?;
            let g = doc.graph.to_graph()?;
            let b = doc.prescribed.as_ref().map(|p| p.iter().copied().collect());
            let rep = match &doc.decomposition {
                AnyDecomposition::Two(d) => verify::check_2d(&g, d, b.as_ref()),
                AnyDecomposition::Three(d) => verify::check_3d(&g, d),
            };
            outln!("{}", serde_json::to_string_pretty(&json!({"schema": pio::SCHEMA, "report": rep})).unwrap());
            if rep.ok {
                Ok(())
            } else {
                Err(Failure::Precondition(json!({"schema": pio::SCHEMA, "error": "invalid_decomposition"})))
            }
        }
        Command::Classify { input } => {
            let g = read_graph(&input)?;
            let rep = classes::classify(&g);
            outln!("{}", serde_json::to_string_pretty(&json!({"schema": pio::SCHEMA, "report": rep})).unwrap());
            Ok(())
        }
        Command::Gen { name, params, seed, format } => {
            let g = generators::by_name(&name, &params, seed).map_err(|e| Failure::Usage(e.to_string()))?;
            match format {
                InFormat::Rot => out!("{}", pio::emit_rot(&g)),
                InFormat::G6 => outln!("{}", pio::encode_graph6(&g)),
            }
            Ok(())
        }
        Command::Oracle { kind, input, prescribed } => {
            let g = read_graph(&input)?;
            let value = match kind {
                OracleKind::B2d => {
                    let b = prescribed.iter().map(|&e| EdgeId(e)).collect();
                    let d = verify::oracle_b2d(&g, &b).map_err(|e| Failure::Usage(e.to_string()))?;
                    json!({"schema": pio::SCHEMA, "exists": d.is_some(), "decomposition": d})
                }
                OracleKind::Sep => {
                    let z = verify::oracle_nonseparating_cycle(&g).map_err(|e| Failure::Usage(e.to_string()))?;
                    json!({"schema": pio::SCHEMA, "in_sep": z.is_none(), "nonseparating_cycle": z})
                }
            };
            outln!("{}", serde_json::to_string_pretty(&value).unwrap());
            Ok(())
        }
        Command::Sweep { max_n, cubic_max_n, seed } => {
            if max_n > 12 || cubic_max_n > 16 {
                return Err(Failure::Usage("sweep supports --max-n <= 12 and --cubic-max-n <= 16".into()));
            }
            let cfg = SweepConfig { max_n, cubic_max_n, seed, ..SweepConfig::default() };
            let reports = sweep::run_all(&cfg);
            for r in &reports {
                outln!("{}", r.line());
            }
            match reports.iter().filter(|r| !r.passed()).count() {
                0 => Ok(()),
                k => Err(Failure::Internal(format!("{k} criteria failed"))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Precondition(v)) => {
            outln!("{}", serde_json::to_string_pretty(&v).unwrap());
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}
