//! Command-line surface. Every report is deterministic for fixed inputs
//! and flags; only the trailing `time:` line varies between runs.
//!
//! Exit codes: 0 success, 2 input error, 3 resource cap or inconclusive,
//! 4 verification failure.

use clap::{Parser, Subcommand, ValueEnum};
use smis_core::engine::{self, EngineConfig, EngineError};
use smis_core::family::{self, FamilyId, FamilyOutcome};
use smis_core::gadget::{self, GadgetError};
use smis_core::graph::Graph;
use smis_core::oracle::{self, OracleError};
use smis_core::{edgelist, emit_graph6, parse_graph6};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "smis",
    version,
    about = "Smallest missing induced subgraph toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Auto,
    G6,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Find the smallest missing induced subgraph of the input graph.
    Smis {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        /// Stop the search at this order instead of the guaranteed cutoff.
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        /// Write per-order counter dumps ("k hex-code count" lines) here.
        #[arg(long)]
        counts_out: Option<PathBuf>,
    },
    /// Check a claimed witness: absent itself, all smaller graphs present.
    Verify {
        input: PathBuf,
        /// The witness graph in graph6.
        #[arg(long)]
        witness: String,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// Emit the all-but-clique gadget X_i as graph6 plus a label line.
    GenXi { i: usize },
    /// Clique number via the missing-subgraph reduction (or --direct).
    Clique {
        input: PathBuf,
        /// Use the branch-and-bound search instead of the reduction.
        #[arg(long)]
        direct: bool,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Smallest missing induced subgraph from a restricted family.
    Family {
        input: PathBuf,
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 7)]
        max_k: usize,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Build the 3-coloring-to-clique reduction graph.
    #[command(name = "reduce3col")]
    Reduce3col {
        input: PathBuf,
        #[arg(short = 't', long = "parts")]
        t: usize,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// Dump labeled subgraph counts at one order.
    Counts {
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        #[arg(long)]
        workers: Option<usize>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
    fn resource(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Code(_) => Failure::input(e.to_string()),
            _ => Failure::resource(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::resource(e.to_string())
    }
}

impl From<GadgetError> for Failure {
    fn from(e: GadgetError) -> Self {
        match e {
            GadgetError::BadPartCount { .. }
            | GadgetError::EmptyHost
            | GadgetError::IndexOutOfRange { .. }
            | GadgetError::BadLabels { .. } => Failure::input(e.to_string()),
            _ => Failure::resource(e.to_string()),
        }
    }
}

fn load_graph(path: &Path, format: Format) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let effective = match format {
        Format::Auto => {
            // An "n m" header cannot be graph6: digits are below the
            // graph6 byte range.
            let first = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            let ints = first.split_whitespace().count() == 2
                && first
                    .split_whitespace()
                    .all(|t| t.chars().all(|c| c.is_ascii_digit()));
            if ints {
                Format::Edges
            } else {
                Format::G6
            }
        }
        f => f,
    };
    match effective {
        Format::G6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Failure::input("empty graph6 input"))?;
            parse_graph6(line.as_bytes()).map_err(|e| Failure::input(e.to_string()))
        }
        Format::Edges => {
            edgelist::parse_edge_list_graph(&text).map_err(|e| Failure::input(e.to_string()))
        }
        Format::Auto => unreachable!("resolved above"),
    }
}

fn workers_or_default(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("SMIS_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

fn engine_config(workers: usize, max_order: Option<usize>) -> EngineConfig {
    EngineConfig {
        workers,
        max_order,
        ..EngineConfig::default()
    }
}

fn input_line(g: &Graph) -> String {
    format!("input: n={} m={}", g.vertex_count(), g.edge_count())
}

fn finish(started: Instant, body: &str) {
    print!("{body}");
    println!("time: {:.3}s", started.elapsed().as_secs_f64());
}

fn cmd_smis(
    input: PathBuf,
    format: Format,
    max_k: Option<usize>,
    workers: Option<usize>,
    counts_out: Option<PathBuf>,
) -> Result<(), Failure> {
    let started = Instant::now();
    let g = load_graph(&input, format)?;
    let workers = workers_or_default(workers);
    let cfg = engine_config(workers, max_k);
    let mut dump = counts_out.as_ref().map(|_| String::new());
    let result = engine::smis_with_observer(&g, &cfg, |table| {
        if let Some(buf) = dump.as_mut() {
            let mut bytes = Vec::new();
            engine::write_counts_dump(table, &mut bytes).expect("in-memory write");
            buf.push_str(std::str::from_utf8(&bytes).expect("ascii dump"));
        }
    })?;
    if let (Some(path), Some(buf)) = (counts_out, dump) {
        std::fs::write(&path, buf)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
    }
    let mut body = String::new();
    writeln!(body, "command: smis {}", input.display()).unwrap();
    writeln!(body, "{}", input_line(&g)).unwrap();
    writeln!(
        body,
        "k={} missing={} code=0x{:x} method={}",
        result.k,
        emit_graph6(&result.missing),
        result.code.bits(),
        result.method
    )
    .unwrap();
    writeln!(body, "workers: {workers}").unwrap();
    finish(started, &body);
    Ok(())
}

fn cmd_verify(input: PathBuf, witness: String, format: Format) -> Result<(), Failure> {
    let started = Instant::now();
    let g = load_graph(&input, format)?;
    let w = parse_graph6(witness.trim().as_bytes())
        .map_err(|e| Failure::input(format!("witness: {e}")))?;
    let k = w.vertex_count();
    if k == 0 {
        return Err(Failure::input("witness must have at least one vertex"));
    }
    let mut body = String::new();
    writeln!(
        body,
        "command: verify {} --witness {}",
        input.display(),
        witness.trim()
    )
    .unwrap();
    writeln!(body, "{}", input_line(&g)).unwrap();

    let absent = !oracle::is_induced_subgraph(&w, &g);
    writeln!(
        body,
        "witness-absent: {}",
        if absent { "PASS" } else { "FAIL" }
    )
    .unwrap();

    let mut smaller_ok = Some(true);
    if k == 1 {
        // Nothing below order 1; vacuously present.
    } else if k - 1 > oracle::ENUM_ORDER_CAP {
        smaller_ok = None;
    } else {
        for rep in oracle::enumerate_nonisomorphic(k - 1, |_| true)? {
            if !oracle::is_induced_subgraph(&rep, &g) {
                smaller_ok = Some(false);
                break;
            }
        }
    }
    match smaller_ok {
        Some(ok) => {
            writeln!(
                body,
                "smaller-all-present: {}",
                if ok { "PASS" } else { "FAIL" }
            )
            .unwrap();
            finish(started, &body);
            if absent && ok {
                Ok(())
            } else {
                Err(Failure {
                    code: 4,
                    message: "verification failed".into(),
                })
            }
        }
        None => {
            writeln!(
                body,
                "smaller-all-present: INCONCLUSIVE (order {} exceeds the enumeration cap {})",
                k - 1,
                oracle::ENUM_ORDER_CAP
            )
            .unwrap();
            finish(started, &body);
            Err(Failure::resource("verification inconclusive"))
        }
    }
}

fn cmd_gen_xi(i: usize) -> Result<(), Failure> {
    let x = gadget::build_xi(i)?;
    println!("{}", emit_graph6(&x.graph));
    let labels: Vec<String> = x.labels.iter().map(|l| l.to_string()).collect();
    println!("labels: {}", labels.join(" "));
    Ok(())
}

fn cmd_clique(
    input: PathBuf,
    direct: bool,
    format: Format,
    workers: Option<usize>,
) -> Result<(), Failure> {
    let started = Instant::now();
    let g = load_graph(&input, format)?;
    let workers = workers_or_default(workers);
    let mut body = String::new();
    writeln!(
        body,
        "command: clique {}{}",
        input.display(),
        if direct { " --direct" } else { "" }
    )
    .unwrap();
    writeln!(body, "{}", input_line(&g)).unwrap();
    let (omega, method) = if direct {
        (oracle::max_clique(&g)?, "direct")
    } else {
        let cfg = engine_config(workers, None);
        (gadget::clique_number_via_smis(&g, &cfg)?, "smis-reduction")
    };
    writeln!(body, "omega={omega} method={method}").unwrap();
    writeln!(body, "workers: {workers}").unwrap();
    finish(started, &body);
    Ok(())
}

fn cmd_family(
    input: PathBuf,
    family: String,
    max_k: usize,
    format: Format,
    workers: Option<usize>,
) -> Result<(), Failure> {
    let started = Instant::now();
    let g = load_graph(&input, format)?;
    let fam = FamilyId::parse(&family)
        .ok_or_else(|| Failure::input(format!("unknown family {family:?}")))?;
    let workers = workers_or_default(workers);
    let cfg = engine_config(workers, None);
    let mut body = String::new();
    writeln!(
        body,
        "command: family {} --family {fam} --max-k {max_k}",
        input.display()
    )
    .unwrap();
    writeln!(body, "{}", input_line(&g)).unwrap();
    match family::smallest_missing_in_family(&g, fam, max_k, &cfg).map_err(|e| match e {
        family::FamilyError::KmaxTooLarge { .. } => Failure::input(e.to_string()),
        family::FamilyError::Oracle(o) => o.into(),
        family::FamilyError::Engine(en) => en.into(),
    })? {
        FamilyOutcome::Found(r) => {
            writeln!(
                body,
                "k={} missing={} code=0x{:x} family={fam} method={}",
                r.k,
                emit_graph6(&r.missing),
                r.code.bits(),
                r.method
            )
            .unwrap();
            writeln!(body, "workers: {workers}").unwrap();
            finish(started, &body);
            Ok(())
        }
        FamilyOutcome::Inconclusive { kmax } => {
            writeln!(
                body,
                "inconclusive: every {fam} graph up to order {kmax} is present"
            )
            .unwrap();
            finish(started, &body);
            Err(Failure::resource(format!(
                "inconclusive at the order-{kmax} cap"
            )))
        }
    }
}

fn cmd_reduce3col(input: PathBuf, t: usize, format: Format) -> Result<(), Failure> {
    let started = Instant::now();
    let g = load_graph(&input, format)?;
    let red = gadget::reduce_3col_to_clique(&g, t)?;
    let sizes: Vec<String> = red.parts.iter().map(|r| r.len().to_string()).collect();
    let mut body = String::new();
    writeln!(body, "command: reduce3col {} -t {t}", input.display()).unwrap();
    writeln!(body, "{}", input_line(&g)).unwrap();
    writeln!(body, "parts: [{}]", sizes.join(", ")).unwrap();
    writeln!(
        body,
        "h: n={} m={}",
        red.h.vertex_count(),
        red.h.edge_count()
    )
    .unwrap();
    writeln!(body, "{}", emit_graph6(&red.h)).unwrap();
    writeln!(
        body,
        "t-clique: {}",
        if gadget::t_clique_exists(&red) {
            "yes"
        } else {
            "no"
        }
    )
    .unwrap();
    finish(started, &body);
    Ok(())
}

fn cmd_counts(
    input: PathBuf,
    k: usize,
    format: Format,
    workers: Option<usize>,
) -> Result<(), Failure> {
    let started = Instant::now();
    let g = load_graph(&input, format)?;
    let workers = workers_or_default(workers);
    let cfg = engine_config(workers, None);
    let table = engine::count_labeled(&g, k, &cfg)?;
    let mut body = String::new();
    writeln!(body, "command: counts {} -k {k}", input.display()).unwrap();
    writeln!(body, "{}", input_line(&g)).unwrap();
    let mut bytes = Vec::new();
    engine::write_counts_dump(&table, &mut bytes).expect("in-memory write");
    body.push_str(std::str::from_utf8(&bytes).expect("ascii dump"));
    writeln!(body, "workers: {workers}").unwrap();
    finish(started, &body);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Smis {
            input,
            format,
            max_k,
            workers,
            counts_out,
        } => cmd_smis(input, format, max_k, workers, counts_out),
        Command::Verify {
            input,
            witness,
            format,
        } => cmd_verify(input, witness, format),
        Command::GenXi { i } => cmd_gen_xi(i),
        Command::Clique {
            input,
            direct,
            format,
            workers,
        } => cmd_clique(input, direct, format, workers),
        Command::Family {
            input,
            family,
            max_k,
            format,
            workers,
        } => cmd_family(input, family, max_k, format, workers),
        Command::Reduce3col { input, t, format } => cmd_reduce3col(input, t, format),
        Command::Counts {
            input,
            k,
            format,
            workers,
        } => cmd_counts(input, k, format, workers),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
