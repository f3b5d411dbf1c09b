use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use tropline::barvinok_classes::{class_dimension, class_intersect, twelve_classes, ClassFace, ClassString};
use tropline::canonical_line::{canonical_line, LineTree};
use tropline::complex_gen::{build_complex, combinatorial_barvinok_filter, enumerate_facets, Variant};
use tropline::homology::reduced_homology;
use tropline::io::{parse_matrix, rational_to_json, ComplexFile};
use tropline::repro::{self, CheckStatus, Scope};
use tropline::shelling::{is_shelling, shelling_top_betti, ternary_complex};
use tropline::trop_core::{barvinok_rank_le2, tropical_rank_with_witness};
use tropline::{Error, Rational};

#[derive(Parser)]
#[command(name = "tropline", version, about = "Tropical rank, tropical lines and rank-two complexes")]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format; JSON unless the command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Tropical rank and Barvinok rank-two test of a matrix file.
    Rank { path: PathBuf },
    /// Canonical tropical line through the columns of a matrix file.
    Line { path: PathBuf },
    /// Generate T(d,n) or B(d,n).
    Complex(ComplexArgs),
    /// Face counts of a complex file.
    Fvector { path: PathBuf },
    /// Reduced integral homology of a complex file.
    Homology { path: PathBuf },
    /// Check the snake order on ternary strings.
    Shell {
        #[arg(long)]
        n: usize,
        /// Constant strings to leave out, e.g. 1,3.
        #[arg(long, value_delimiter = ',', default_values_t = [1u8, 2, 3])]
        remove: Vec<u8>,
    },
    /// Class strings of Barvinok rank-two configurations.
    Classes {
        #[command(subcommand)]
        action: ClassAction,
    },
    /// Recompute the reference values.
    Verify {
        #[arg(value_enum)]
        scope: ScopeArg,
    },
}

#[derive(Args)]
struct ComplexArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "T")]
    variant: Variant,
    /// Emit the simplicial refinement; otherwise list the maximal cones.
    #[arg(long)]
    refined: bool,
}

#[derive(Subcommand)]
enum ClassAction {
    /// Intersect two class strings.
    Intersect { s: String, t: String },
    /// List the twelve classes, with their valid strings of length `n`.
    List {
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    D3,
    D4,
    Barvinok,
    All,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Scope {
        match s {
            ScopeArg::D3 => Scope::D3,
            ScopeArg::D4 => Scope::D4,
            ScopeArg::Barvinok => Scope::Barvinok,
            ScopeArg::All => Scope::All,
        }
    }
}

#[derive(Serialize)]
struct CheckLine {
    name: String,
    passed: bool,
}

/// Everything written for one invocation. Timing goes to standard error so
/// that the report is identical across runs.
#[derive(Serialize)]
struct RunReport {
    command: Vec<String>,
    input_digest: String,
    results: Value,
    checks: Vec<CheckLine>,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::ShapeMismatch { .. } | Error::EmptyMatrix | Error::InvalidClassString(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Check(other.to_string()),
        }
    }
}

struct Output {
    report: RunReport,
    /// Alternative rendering for `--format csv` or `dot`.
    text: Option<String>,
}

fn digest(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

fn read(path: &Path) -> Result<(String, String), Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let d = digest(text.as_bytes());
    Ok((text, d))
}

fn check(name: &str, passed: bool) -> CheckLine {
    CheckLine { name: name.to_string(), passed }
}

fn line_json(line: &LineTree<Rational>) -> Value {
    let nodes: Vec<Value> =
        line.tree.nodes.iter().map(|p| Value::Array(p.coords().iter().map(rational_to_json).collect())).collect();
    let edges: Vec<Value> = line
        .tree
        .edges
        .iter()
        .map(|e| json!({ "from": e.a, "to": e.b, "slope": e.slope, "length": rational_to_json(&e.length) }))
        .collect();
    let rays: Vec<Value> =
        line.leaf_rays.iter().map(|&(node, dir)| json!({ "node": node, "direction": dir + 1 })).collect();
    json!({ "nodes": nodes, "edges": edges, "rays": rays, "points": line.tree.locations, "anchor": line.anchor })
}

fn run(cli: &Cli, echo: Vec<String>) -> Result<Output, Failure> {
    let mut text = None;
    // Data files are written as they are rather than wrapped in a report.
    let mut data = None;
    let (input_digest, results, checks) = match &cli.command {
        Command::Rank { path } => {
            let (raw, d) = read(path)?;
            let m = parse_matrix(&raw, &path.to_string_lossy())?;
            let (rank, minor) = tropical_rank_with_witness(&m);
            let barvinok = barvinok_rank_le2(&m);
            let results = json!({
                "rows": m.rows(),
                "cols": m.cols(),
                "tropical_rank": rank,
                "witness": { "rows": minor.rows, "cols": minor.cols },
                "barvinok_at_most_two": barvinok.at_most_two,
                "barvinok_witness": barvinok.witness,
            });
            if cli.format == Some(Format::Csv) {
                text = Some(format!("tropical_rank,barvinok_at_most_two\n{rank},{}\n", barvinok.at_most_two));
            }
            (d, results, vec![])
        }
        Command::Line { path } => {
            let (raw, d) = read(path)?;
            let m = parse_matrix(&raw, &path.to_string_lossy())?;
            let line = canonical_line(&m)?;
            let label = line.face_descriptor();
            if cli.format == Some(Format::Dot) {
                text = Some(line.to_dot());
            }
            let results = json!({ "label": label.to_string(), "face": label, "line": line_json(&line) });
            (d, results, vec![check("balanced", line.is_balanced())])
        }
        Command::Complex(a) => {
            let d = digest(format!("{} {} {}", a.d, a.n, a.variant).as_bytes());
            if a.refined {
                let gc = build_complex(a.d, a.n, a.variant)?;
                let file = ComplexFile::from_generated(&gc);
                let pure = gc.complex.purity_check(a.d + a.n - 4);
                let results = json!({ "vertices": file.vertices.len(), "facets": file.facets.len() });
                data = Some(serde_json::to_string(&file).expect("serializable") + "\n");
                (d, results, vec![check("pure", pure), check("barvinok filters agree", gc.filter_disagreements == 0)])
            } else {
                let mut cones = enumerate_facets(a.d, a.n, false)?;
                if a.variant == Variant::B {
                    cones.retain(combinatorial_barvinok_filter);
                }
                let labels: Vec<String> = cones.iter().map(ToString::to_string).collect();
                if cli.format == Some(Format::Csv) {
                    text = Some(labels.iter().map(|l| format!("{l}\n")).collect());
                }
                (d, json!({ "count": cones.len(), "cones": labels }), vec![])
            }
        }
        Command::Fvector { path } => {
            let (raw, d) = read(path)?;
            let k = ComplexFile::parse(&raw)?.to_complex()?;
            let f = k.f_vector();
            if cli.format == Some(Format::Csv) {
                text = Some(
                    std::iter::once("dim,faces\n".to_string())
                        .chain(f.iter().enumerate().map(|(i, c)| format!("{i},{c}\n")))
                        .collect(),
                );
            }
            (d, json!({ "f_vector": f, "reduced_euler_characteristic": k.euler_characteristic() }), vec![])
        }
        Command::Homology { path } => {
            let (raw, d) = read(path)?;
            let k = ComplexFile::parse(&raw)?.to_complex()?;
            let h = reduced_homology(&k);
            if cli.format == Some(Format::Csv) {
                let mut s = String::from("dim,betti,torsion\n");
                for g in &h.groups {
                    let t: Vec<String> = g.torsion.iter().map(ToString::to_string).collect();
                    s.push_str(&format!("{},{},{}\n", g.dim, g.betti, t.join(" ")));
                }
                text = Some(s);
            }
            (d, serde_json::to_value(&h).expect("serializable"), vec![])
        }
        Command::Shell { n, remove } => {
            if *n == 0 || remove.iter().any(|c| !(1..=3).contains(c)) {
                return Err(Failure::Usage("need n >= 1 and constants from 1, 2, 3".into()));
            }
            let (k, order) = ternary_complex(*n, remove);
            let report = is_shelling(&k, &order)?;
            let top = if report.valid { Some(shelling_top_betti(&k, &order)?) } else { None };
            let verdict = if report.valid { "PASS".to_string() } else { format!("FAIL {:?}", report.first_violation) };
            let results = json!({
                "n": n,
                "removed": remove,
                "result": verdict,
                "first_violation": report.first_violation,
                "homology_facets": top,
            });
            (digest(format!("{n} {remove:?}").as_bytes()), results, vec![check("shelling", report.valid)])
        }
        Command::Classes { action } => match action {
            ClassAction::Intersect { s, t } => {
                let (s, t): (ClassString, ClassString) = (s.parse()?, t.parse()?);
                let meet = class_intersect(&s, &t)?;
                let dim = match &meet {
                    ClassFace::Face(u) => Some(class_dimension(u)?),
                    ClassFace::Empty => None,
                };
                let results = json!({ "s": s, "t": t, "intersection": meet.to_string(), "dimension": dim });
                (digest(format!("{s} {t}").as_bytes()), results, vec![])
            }
            ClassAction::List { n } => {
                let strings: Option<Vec<ClassString>> = n.map(ClassString::enumerate_valid);
                let classes: Vec<Value> = twelve_classes()
                    .into_iter()
                    .map(|c| json!({ "class": c, "name": c.to_string(), "strings": strings }))
                    .collect();
                (digest(format!("{n:?}").as_bytes()), Value::Array(classes), vec![])
            }
        },
        Command::Verify { scope } => {
            let checks = repro::run((*scope).into())?;
            if cli.format.is_none() {
                text = Some(checks.iter().map(|c| format!("{c}\n")).collect());
            }
            let lines: Vec<CheckLine> = checks
                .iter()
                .filter(|c| c.status != CheckStatus::NotChecked)
                .map(|c| check(&c.name, c.passed()))
                .collect();
            (digest(echo.join(" ").as_bytes()), serde_json::to_value(&checks).expect("serializable"), lines)
        }
    };
    let report = RunReport { command: echo, input_digest, results, checks };
    if let (Some(body), None | Some(Format::Json)) = (&data, cli.format) {
        return Ok(Output { report, text: Some(body.clone()) });
    }
    let text = match cli.format {
        Some(Format::Json) => None,
        None => text,
        Some(_) if text.is_some() => text,
        Some(f) => {
            let name = f.to_possible_value().expect("not skipped").get_name().to_string();
            return Err(Failure::Usage(format!("{name} output is not available for this command")));
        }
    };
    Ok(Output { report, text })
}

fn emit(cli: &Cli, body: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes()).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = {
        // Global flags do not change results, so they are not echoed.
        let mut args = std::env::args().skip(1).peekable();
        let mut kept = Vec::new();
        while let Some(a) = args.next() {
            if ["--out", "--threads", "--format"].contains(&a.as_str()) {
                args.next();
            } else if !(a.starts_with("--out=") || a.starts_with("--threads=") || a.starts_with("--format=")) {
                kept.push(a);
            }
        }
        kept
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let started = Instant::now();
    let outcome = run(&cli, echo).and_then(|out| {
        let body = match &out.text {
            Some(t) => t.clone(),
            None => serde_json::to_string_pretty(&out.report).expect("serializable") + "\n",
        };
        emit(&cli, &body)?;
        Ok(out.report.checks.iter().all(|c| c.passed))
    });
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
