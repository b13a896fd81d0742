use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ultrametric::format::{export_tree_dot, parse_space, to_document_json, to_matrix_text};
use ultrametric::{
    ballean, build_representing_tree, classify, generate_space, hausdorff, kruskal_mst,
    msp_greedy, msp_tree_guided, multispectrum, set_distance, spectrum, verify_min_spanning_path,
    Error, GeneratorSpec, PointSet, RepresentingTree, UltrametricSpace, Weight,
};

#[derive(Parser)]
#[command(name = "um", version, about = "Finite ultrametric spaces")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Greedy,
    Tree,
}

#[derive(Subcommand)]
enum Command {
    /// Check the ultrametric axioms.
    Validate { file: PathBuf },
    /// Distinct distances, or pair counts per distance with --multi.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        multi: bool,
    },
    /// Representing tree (text, json or dot).
    Tree { file: PathBuf },
    /// All closed balls with their diameters.
    Balls { file: PathBuf },
    /// A minimum spanning path.
    Msp {
        file: PathBuf,
        /// Label of the first point; defaults to the first point.
        #[arg(long)]
        start: Option<String>,
        #[arg(long, value_enum, default_value_t = Algorithm::Greedy)]
        algorithm: Algorithm,
    },
    /// A minimum spanning tree (Kruskal).
    Mst { file: PathBuf },
    /// Class membership report.
    Classify { file: PathBuf },
    /// Hausdorff distance between two point sets.
    Hausdorff {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        b: Vec<String>,
    },
    /// Smallest distance between two point sets.
    Dist {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        b: Vec<String>,
    },
    /// Generate a random space.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated candidate distances; defaults to 1..=n.
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<String>>,
        #[arg(long, default_value_t = 3)]
        branching: usize,
    },
}

enum Failure {
    Usage(String),
    Data(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Data(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Data(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &PathBuf) -> Result<UltrametricSpace, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
    };
    Ok(parse_space(&text)?)
}

fn labels_of(space: &UltrametricSpace, set: &PointSet) -> Vec<String> {
    set.iter().map(|p| space.label(p).to_string()).collect()
}

fn json_out(value: Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&value).expect("json value serializes"))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let format = cli.format;
    if format == Format::Dot && !matches!(cli.command, Command::Tree { .. }) {
        return Err(Failure::Usage("--format dot is only available for `tree`".into()));
    }
    match &cli.command {
        Command::Validate { file } => {
            let space = load(file)?;
            let sp = spectrum(&space).len();
            Ok(match format {
                Format::Json => json_out(json!({"valid": true, "n": space.len(), "spectrum_size": sp})),
                _ => format!("ultrametric: OK (n={}, |Sp|={sp})\n", space.len()),
            })
        }
        Command::Spectrum { file, multi } => {
            let space = load(file)?;
            if *multi {
                let ms = multispectrum(&space);
                Ok(match format {
                    Format::Json => json_out(json!(ms
                        .pairs
                        .iter()
                        .map(|(w, k)| json!({"distance": w, "pairs": k}))
                        .collect::<Vec<_>>())),
                    _ => ms.pairs.iter().map(|(w, k)| format!("{w} {k}\n")).collect(),
                })
            } else {
                let sp = spectrum(&space);
                Ok(match format {
                    Format::Json => json_out(json!(sp.values())),
                    _ => format!("{}\n", join(sp.values())),
                })
            }
        }
        Command::Tree { file } => {
            let space = load(file)?;
            let tree = build_representing_tree(&space);
            Ok(match format {
                Format::Dot => export_tree_dot(&space, &tree),
                Format::Json => json_out(tree_json(&space, &tree)),
                Format::Text => tree_text(&space, &tree),
            })
        }
        Command::Balls { file } => {
            let space = load(file)?;
            let balls = ballean(&build_representing_tree(&space));
            Ok(match format {
                Format::Json => json_out(json!(balls
                    .balls
                    .iter()
                    .map(|b| json!({"points": labels_of(&space, &b.points), "diameter": b.diameter}))
                    .collect::<Vec<_>>())),
                _ => balls
                    .balls
                    .iter()
                    .map(|b| format!("{{{}}} {}\n", labels_of(&space, &b.points).join(","), b.diameter))
                    .collect(),
            })
        }
        Command::Msp {
            file,
            start,
            algorithm,
        } => {
            let space = load(file)?;
            let start = match start {
                Some(label) => space.index_of(label)?,
                None => 0,
            };
            let path = match algorithm {
                Algorithm::Greedy => msp_greedy(&space, start)?,
                Algorithm::Tree => msp_tree_guided(&space, &build_representing_tree(&space), start)?,
            };
            let order: Vec<&str> = path.order().iter().map(|&p| space.label(p)).collect();
            let minimal = verify_min_spanning_path(&space, &path)?;
            Ok(match format {
                Format::Json => json_out(json!({
                    "order": order,
                    "spectrum": path.spectrum().values(),
                    "total": path.total_weight(),
                    "minimal": minimal,
                })),
                _ => format!(
                    "path: {}\nweights: {}\ntotal: {}\n",
                    order.join(" "),
                    join(path.spectrum().values()),
                    path.total_weight()
                ),
            })
        }
        Command::Mst { file } => {
            let space = load(file)?;
            let mst = kruskal_mst(&space);
            Ok(match format {
                Format::Json => json_out(json!({
                    "edges": mst
                        .edges()
                        .iter()
                        .map(|e| json!([space.label(e.u), space.label(e.v), e.weight]))
                        .collect::<Vec<_>>(),
                    "total": mst.total_weight(),
                })),
                _ => {
                    let mut out: String = mst
                        .edges()
                        .iter()
                        .map(|e| format!("{} {} {}\n", space.label(e.u), space.label(e.v), e.weight))
                        .collect();
                    out.push_str(&format!("total: {}\n", mst.total_weight()));
                    out
                }
            })
        }
        Command::Classify { file } => {
            let space = load(file)?;
            let report = classify(&build_representing_tree(&space));
            Ok(match format {
                Format::Json => json_out(json!(report)),
                _ => format!(
                    "strictly_binary={}\ninjective={}\nU={}\nR={}\nall_msts_paths={}\n",
                    report.strictly_binary,
                    report.injective_labeling,
                    report.in_class_u,
                    report.in_class_r,
                    report.all_msts_are_paths
                ),
            })
        }
        Command::Hausdorff { file, a, b } => {
            let space = load(file)?;
            let (a, b) = (space.point_set(a)?, space.point_set(b)?);
            let tree = build_representing_tree(&space);
            let d = hausdorff(&space, &tree, &a, &b)?;
            Ok(weight_out(format, d))
        }
        Command::Dist { file, a, b } => {
            let space = load(file)?;
            let (a, b) = (space.point_set(a)?, space.point_set(b)?);
            Ok(weight_out(format, set_distance(&space, &a, &b)?))
        }
        Command::Gen {
            n,
            seed,
            labels,
            branching,
        } => {
            let mut spec = GeneratorSpec::new(*n, *seed);
            spec.branching = *branching;
            if let Some(labels) = labels {
                spec.label_pool = labels
                    .iter()
                    .map(|l| l.parse::<Weight>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| Failure::Usage(e.to_string()))?;
            }
            let space = generate_space(&spec).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(match format {
                Format::Json => format!("{}\n", to_document_json(&space)),
                _ => to_matrix_text(&space),
            })
        }
    }
}

fn join(values: &[Weight]) -> String {
    values.iter().map(Weight::to_string).collect::<Vec<_>>().join(" ")
}

fn weight_out(format: Format, w: Weight) -> String {
    match format {
        Format::Json => json_out(json!(w)),
        _ => format!("{w}\n"),
    }
}

fn tree_text(space: &UltrametricSpace, tree: &RepresentingTree) -> String {
    let mut out = String::new();
    for node in tree.nodes() {
        let indent = "  ".repeat(node.depth);
        if node.is_leaf() {
            out.push_str(&format!("{indent}{}\n", space.label(node.ball.first().expect("leaf"))));
        } else {
            out.push_str(&format!("{indent}{} {{{}}}\n", node.label, labels_of(space, &node.ball).join(",")));
        }
    }
    out
}

fn tree_json(space: &UltrametricSpace, tree: &RepresentingTree) -> Value {
    json!({
        "root": RepresentingTree::ROOT,
        "nodes": tree
            .nodes()
            .iter()
            .enumerate()
            .map(|(id, n)| json!({
                "id": id,
                "label": n.label,
                "ball": labels_of(space, &n.ball),
                "parent": n.parent,
                "children": n.children,
            }))
            .collect::<Vec<_>>(),
    })
}
