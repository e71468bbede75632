use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cubical::actions::{
    criterion_scan, group_closure, stabilizer_intersection, verify_automorphism, weak_acyl_scan,
    FiniteActingGroup, Object, WitnessKind,
};
use cubical::artin::{deligne_ball, BuiltinOracle, CoxeterGraph, NormalFormOracle};
use cubical::checkpoint::{build_checkpoint_system, verify_checkpoint_system, CheckpointSystem};
use cubical::cubes::CubeInventory;
use cubical::fixtures::{self, GeneratorKind, GeneratorSpec};
use cubical::format::{self, CheckpointFile};
use cubical::separation::Hops;
use cubical::{Arrangement, CubeComplex, Error, Halfspace, Result, Side};

/// Median-graph toolkit for cube complexes and the groups acting on them.
///
/// Exit codes: 0 = success or verdict true, 1 = verdict false or violations
/// found, 2 = input or usage error.
#[derive(Debug, Parser)]
#[command(name = "cubical", version)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    A,
    B,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::A => Side::A,
            SideArg::B => Side::B,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleArg {
    /// Pick from the graph: free reduction without edges, commutation forms
    /// when all labels are 2.
    Auto,
    Free,
    RightAngled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Grid,
    Tree,
    Path,
    Ncube,
    Staircase,
    Spiked,
    PentagonPlane,
    Line,
}

impl From<KindArg> for GeneratorKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Grid => GeneratorKind::Grid,
            KindArg::Tree => GeneratorKind::Tree,
            KindArg::Path => GeneratorKind::Path,
            KindArg::Ncube => GeneratorKind::Ncube,
            KindArg::Staircase => GeneratorKind::Staircase,
            KindArg::Spiked => GeneratorKind::Spiked,
            KindArg::PentagonPlane => GeneratorKind::PentagonPlane,
            KindArg::Line => GeneratorKind::Line,
        }
    }
}

#[derive(Debug, clap::Args)]
struct SystemArgs {
    /// Previously built checkpoint system (output of `checkpoints`).
    #[arg(long, conflicts_with_all = ["map", "hyperplane"])]
    system: Option<PathBuf>,
    /// Automorphism file for the mover.
    #[arg(long, requires = "hyperplane")]
    map: Option<PathBuf>,
    /// Hyperplane whose halfspace starts the nested chain.
    #[arg(long)]
    hyperplane: Option<usize>,
    #[arg(long, value_enum, default_value_t = SideArg::A)]
    side: SideArg,
    #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
    from: i64,
    #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
    to: i64,
    /// Error constant L, in hops.
    #[arg(long, default_value_t = 1)]
    error_constant: u32,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the graph is a median graph.
    Validate { complex: PathBuf },
    /// List hyperplanes with their edges and sides.
    Hyperplanes {
        complex: PathBuf,
        /// Also report the depth of both halfspaces.
        #[arg(long)]
        depth: bool,
    },
    /// Classify one hyperplane pair, or every pair.
    Classify {
        complex: PathBuf,
        #[arg(long, num_args = 2, value_names = ["H1", "H2"])]
        pair: Option<Vec<usize>>,
    },
    /// Crossing graph of the hyperplanes.
    Crossing {
        complex: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Bridge between two parallel hyperplanes.
    Bridge {
        complex: PathBuf,
        #[arg(long, num_args = 2, required = true, value_names = ["H1", "H2"])]
        pair: Vec<usize>,
    },
    /// Check the gate distance formula, or with --cut that every geodesic
    /// between the outer halfspaces meets the bridge.
    BridgeCheck {
        complex: PathBuf,
        #[arg(long, num_args = 2, required = true, value_names = ["H1", "H2"])]
        pair: Vec<usize>,
        #[arg(long)]
        cut: bool,
    },
    /// Sectors of a family of pairwise crossing hyperplanes.
    Sectors {
        complex: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        family: Vec<usize>,
    },
    /// Cubes contained in exactly one other cube.
    FreeFaces {
        complex: PathBuf,
        /// Drop faces touching non-interior vertices.
        #[arg(long)]
        interior_only: bool,
    },
    /// Whether the crossing graph is a join (reducible) or not.
    Irreducible { complex: PathBuf },
    /// Whether two maximal cubes separate a pair of hyperplanes. Cubes are
    /// indexed in the maximal-cube order: dimension descending, then vertex
    /// set.
    CubeSeparates {
        complex: PathBuf,
        #[arg(long, num_args = 1, required = true)]
        cube: Vec<usize>,
    },
    /// Build the checkpoint system of translates of a bridge.
    Checkpoints {
        complex: PathBuf,
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Verify a checkpoint system over all vertex pairs.
    VerifyCheckpoints {
        complex: PathBuf,
        #[command(flatten)]
        system: SystemArgs,
        /// Replace every translate by a single vertex first.
        #[arg(long)]
        sabotage: bool,
    },
    /// Elements stabilising two objects (`vertex:NAME`, `hyperplane:ID`,
    /// `cube:INDEX`).
    Stabilizers {
        complex: PathBuf,
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Scan for pairs meeting the stabiliser hypotheses; one witness per
    /// line.
    Criterion {
        complex: PathBuf,
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threshold: usize,
    },
    /// Largest number of elements fixing two points at distance >= L.
    WeakAcyl {
        complex: PathBuf,
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(short = 'L', long = "min-distance")]
        min_distance: u32,
    },
    /// FC-type check of a Coxeter graph.
    ArtinFc { coxeter: PathBuf },
    /// Truncated Deligne complex. The radius bounds the word length of
    /// coset representatives, not graph distance.
    ArtinDeligne {
        coxeter: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value_t = OracleArg::Auto)]
        oracle: OracleArg,
        /// Write coset and edge-label data here.
        #[arg(long)]
        sidecar: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Diameter, disjoint-link pair and hyperplane stabiliser labels.
    #[command(alias = "ruth")]
    DisjointLinks { coxeter: PathBuf },
    /// Generate a fixture complex.
    Gen {
        #[arg(value_enum)]
        kind: KindArg,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// DOT export: the crossing graph, or with --skeleton the 1-skeleton.
    ExportDot {
        complex: PathBuf,
        #[arg(long)]
        skeleton: bool,
    },
}

/// What a command produced.
enum Output {
    Report(Value),
    /// Already formatted output (DOT, complex files).
    Raw(String),
    /// One report per line.
    Lines(Vec<Value>),
}

struct Outcome {
    output: Output,
    ok: bool,
}

impl Outcome {
    fn report(v: Value, ok: bool) -> Self {
        Self {
            output: Output::Report(v),
            ok,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            match outcome.output {
                Output::Report(v) => match cli.format {
                    Format::Json => println!("{}", format::to_pretty(&v)),
                    Format::Text => print!("{}", format::to_text(&v)),
                },
                Output::Raw(s) => print!("{s}"),
                Output::Lines(vs) => {
                    for v in vs {
                        match cli.format {
                            Format::Json => println!("{}", serde_json::to_string(&v).expect("serializable")),
                            Format::Text => println!("{}", format::to_text(&v).trim_end().replace('\n', "; ")),
                        }
                    }
                }
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<CubeComplex> {
    format::parse_complex(&read(path)?)
}

fn load_coxeter(path: &Path) -> Result<CoxeterGraph> {
    format::parse_coxeter(&read(path)?)
}

fn load_group(complex: &CubeComplex, path: Option<&Path>) -> Result<FiniteActingGroup> {
    let Some(path) = path else {
        return Ok(FiniteActingGroup::trivial(complex));
    };
    let file = format::parse_group(&read(path)?)?;
    let gens = file
        .generators
        .iter()
        .map(|m| verify_automorphism(complex, m))
        .collect::<Result<Vec<_>>>()?;
    group_closure(complex, &gens, file.bound)
}

fn pair(p: &[usize]) -> (usize, usize) {
    (p[0], p[1])
}

fn parse_object(spec: &str, complex: &CubeComplex, arr: &Arrangement<'_>, cubes: &CubeInventory) -> Result<Object> {
    let bad = || Error::Format(format!("object `{spec}` must be vertex:NAME, hyperplane:ID or cube:INDEX"));
    let (kind, value) = spec.split_once(':').ok_or_else(bad)?;
    let index = || value.parse::<usize>().map_err(|_| bad());
    match kind {
        "vertex" => Ok(Object::Vertex(complex.vertex(value)?)),
        "hyperplane" => {
            let k = index()?;
            arr.get(k)?;
            Ok(Object::Hyperplane(k))
        }
        "cube" => {
            let i = index()?;
            let maximal = cubes.maximal();
            let cube = maximal.get(i).ok_or(Error::UnknownCube(i))?;
            Ok(Object::Cube(cube.vertices.clone()))
        }
        _ => Err(bad()),
    }
}

fn load_system(complex: &CubeComplex, arr: &Arrangement<'_>, args: &SystemArgs) -> Result<CheckpointSystem> {
    if let Some(path) = &args.system {
        return format::parse_checkpoints(&read(path)?)?.to_system(complex);
    }
    let (Some(map), Some(k)) = (&args.map, args.hyperplane) else {
        return Err(Error::Format("give --system, or --map with --hyperplane".into()));
    };
    let g = verify_automorphism(complex, &format::parse_automorphism(&read(map)?)?)?;
    build_checkpoint_system(arr, &g, Halfspace::new(k, args.side.into()), (args.from, args.to), args.error_constant)
}

fn system_value(complex: &CubeComplex, cs: &CheckpointSystem) -> Value {
    let mut v = serde_json::to_value(CheckpointFile::from_system(complex, cs)).expect("serializable");
    v["overlaps"] = json!(cs.overlaps);
    v
}

fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Validate { complex } => {
            let c = load_complex(complex)?;
            let verdict = c.is_median_graph();
            let witness = verdict.witness.as_ref().map(|w| {
                json!({
                    "triple": format::names(&c, &w.triple),
                    "median_count": w.median_count,
                })
            });
            Ok(Outcome::report(
                json!({
                    "median": verdict.is_median,
                    "vertices": c.vertex_count(),
                    "edges": c.edge_count(),
                    "diameter": c.diameter(),
                    "witness": witness,
                }),
                verdict.is_median,
            ))
        }
        Command::Hyperplanes { complex, depth } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let mut v = format::hyperplanes_value(&arr);
            if *depth {
                for (k, entry) in v.as_array_mut().expect("array").iter_mut().enumerate() {
                    entry["depth"] = serde_json::to_value(arr.halfspace_depth(k)?).expect("serializable");
                }
            }
            Ok(Outcome::report(v, true))
        }
        Command::Classify { complex, pair: p } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let v = match p {
                Some(p) => {
                    let (a, b) = pair(p);
                    let cls = arr.classify_pair(a, b)?;
                    let dist = arr.crossing_graph().distance(a, b);
                    json!({
                        "ids": [a, b],
                        "class": cls.class.as_str(),
                        "crossing_distance": dist,
                        "nesting": cls.nesting.map(|n| json!([
                            format::halfspace_value(n.first),
                            format::halfspace_value(n.second),
                        ])),
                    })
                }
                None => serde_json::to_value(arr.classification_report()).expect("serializable"),
            };
            Ok(Outcome::report(v, true))
        }
        Command::Crossing { complex, dot } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let g = arr.crossing_graph();
            if *dot {
                return Ok(Outcome {
                    output: Output::Raw(g.to_dot()),
                    ok: true,
                });
            }
            let distances: Vec<Vec<Hops>> = g.distances.clone();
            Ok(Outcome::report(
                json!({"nodes": arr.len(), "edges": g.edges(), "distances": distances}),
                true,
            ))
        }
        Command::Bridge { complex, pair: p } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let (a, b) = pair(p);
            Ok(Outcome::report(format::bridge_value(&c, &arr.bridge(a, b)?), true))
        }
        Command::BridgeCheck { complex, pair: p, cut } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let (a, b) = pair(p);
            let check = if *cut {
                arr.check_bridge_cut(a, b)?
            } else {
                arr.check_gate_formula(a, b)?
            };
            let ok = check.violations.is_empty();
            Ok(Outcome::report(format::bridge_check_value(&c, &check), ok))
        }
        Command::Sectors { complex, family } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            Ok(Outcome::report(format::sectors_value(&c, &arr.sectors(family)?), true))
        }
        Command::FreeFaces { complex, interior_only } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let inv = CubeInventory::new(&arr);
            let faces: Vec<Value> = inv
                .free_faces(&c)
                .iter()
                .filter(|f| !interior_only || !f.boundary_affected)
                .map(|f| format::free_face_value(&c, f))
                .collect();
            Ok(Outcome::report(json!({"count": faces.len(), "free_faces": faces}), true))
        }
        Command::Irreducible { complex } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let r = arr.irreducibility()?;
            Ok(Outcome::report(serde_json::to_value(&r).expect("serializable"), r.irreducible))
        }
        Command::CubeSeparates { complex, cube } => {
            if cube.len() != 2 {
                return Err(Error::Format("give --cube exactly twice".into()));
            }
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let inv = CubeInventory::new(&arr);
            let maximal = inv.maximal();
            let get = |i: usize| maximal.get(i).copied().ok_or(Error::UnknownCube(i));
            let (c1, c2) = (get(cube[0])?, get(cube[1])?);
            let witness = arr.cube_pair_separates(c1, c2);
            Ok(Outcome::report(
                json!({
                    "cubes": [format::cube_value(&c, c1), format::cube_value(&c, c2)],
                    "witness": witness,
                    "result": if witness.is_some() { "witness" } else { "no witness" },
                }),
                witness.is_some(),
            ))
        }
        Command::Checkpoints { complex, system } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let cs = load_system(&c, &arr, system)?;
            Ok(Outcome::report(system_value(&c, &cs), true))
        }
        Command::VerifyCheckpoints { complex, system, sabotage } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let mut cs = load_system(&c, &arr, system)?;
            if *sabotage {
                cs = cs.sabotaged(&c);
            }
            let report = verify_checkpoint_system(&c, &cs);
            let ok = report.violations.is_empty();
            Ok(Outcome::report(format::checkpoint_report_value(&c, &report), ok))
        }
        Command::Stabilizers { complex, group, a, b } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let inv = CubeInventory::new(&arr);
            let g = load_group(&c, group.as_deref())?;
            let oa = parse_object(a, &c, &arr, &inv)?;
            let ob = parse_object(b, &c, &arr, &inv)?;
            let r = stabilizer_intersection(&arr, &g, &oa, &ob);
            Ok(Outcome::report(
                json!({
                    "group_order": g.order(),
                    "order": r.order,
                    "elements": r.elements,
                    "is_subgroup": r.is_subgroup,
                }),
                true,
            ))
        }
        Command::Criterion { complex, group, threshold } => {
            let c = load_complex(complex)?;
            let arr = Arrangement::new(&c)?;
            let inv = CubeInventory::new(&arr);
            let g = load_group(&c, group.as_deref())?;
            let witnesses = criterion_scan(&arr, &inv, &g, *threshold);
            let ok = !witnesses.is_empty();
            let lines = witnesses
                .iter()
                .map(|w| {
                    json!({
                        "hypothesis_witness": match w.kind {
                            WitnessKind::HyperplanePair => "hyperplane_pair",
                            WitnessKind::MaximalCubePair => "maximal_cube_pair",
                        },
                        "pair": [w.pair.0, w.pair.1],
                        "stabiliser_order": w.stabiliser_order,
                        "separated": w.separated,
                    })
                })
                .collect();
            Ok(Outcome {
                output: Output::Lines(lines),
                ok,
            })
        }
        Command::WeakAcyl { complex, group, min_distance } => {
            let c = load_complex(complex)?;
            let g = load_group(&c, group.as_deref())?;
            let p = weak_acyl_scan(&c, &g, *min_distance);
            Ok(Outcome::report(
                json!({
                    "min_distance": p.min_distance,
                    "pairs_checked": p.pairs_checked,
                    "no_pairs": p.no_pairs,
                    "max_count": p.max_count,
                    "pair": p.pair.map(|(x, y)| [c.name(x), c.name(y)]),
                }),
                !p.no_pairs,
            ))
        }
        Command::ArtinFc { coxeter } => {
            let g = load_coxeter(coxeter)?;
            let r = g.fc_report();
            let ok = r.fc_type;
            Ok(Outcome::report(serde_json::to_value(r).expect("serializable"), ok))
        }
        Command::ArtinDeligne { coxeter, radius, oracle, sidecar, out } => {
            let g = load_coxeter(coxeter)?;
            let built;
            let chosen: Option<&dyn NormalFormOracle> = match oracle {
                OracleArg::Auto => None,
                OracleArg::Free => {
                    built = BuiltinOracle::Free.build(&g)?;
                    Some(&built)
                }
                OracleArg::RightAngled => {
                    built = BuiltinOracle::RightAngled.build(&g)?;
                    Some(&built)
                }
            };
            let ball = deligne_ball(&g, *radius, chosen)?;
            let text = format::complex_to_json(&ball.to_complex()?);
            if let Some(path) = sidecar {
                let v = serde_json::to_value(ball.sidecar()).expect("serializable");
                write(path, &format::to_pretty(&v))?;
            }
            emit(text, out.as_deref())
        }
        Command::DisjointLinks { coxeter } => {
            let g = load_coxeter(coxeter)?;
            let witness = g.disjoint_link_pair();
            let names = g.generators();
            let labels = witness.map(|(s, t)| {
                let (ls, lt) = (g.link(s), g.link(t));
                let common: Vec<&String> = ls.iter().filter(|x| lt.contains(x)).map(|&x| &names[x]).collect();
                json!({
                    names[s].clone(): g.names(&ls),
                    names[t].clone(): g.names(&lt),
                    "intersection": common,
                })
            });
            Ok(Outcome::report(
                json!({
                    "diameter": Hops(g.diameter()),
                    "fc_type": g.is_fc_type(),
                    "witness": witness.map(|(s, t)| [&names[s], &names[t]]),
                    "stabiliser_labels": labels,
                }),
                witness.is_some(),
            ))
        }
        Command::Gen { kind, params, seed, out } => {
            let spec = GeneratorSpec {
                kind: (*kind).into(),
                params: params.clone(),
                seed: *seed,
            };
            emit(format::complex_to_json(&fixtures::generate(&spec)?), out.as_deref())
        }
        Command::ExportDot { complex, skeleton } => {
            let c = load_complex(complex)?;
            let text = if *skeleton {
                format::skeleton_dot(&c)
            } else {
                Arrangement::new(&c)?.crossing_graph().to_dot()
            };
            Ok(Outcome {
                output: Output::Raw(text),
                ok: true,
            })
        }
    }
}

fn emit(mut text: String, out: Option<&Path>) -> Result<Outcome> {
    text.push('\n');
    match out {
        Some(path) => {
            write(path, &text)?;
            Ok(Outcome::report(json!({"written": path.display().to_string()}), true))
        }
        None => Ok(Outcome {
            output: Output::Raw(text),
            ok: true,
        }),
    }
}
