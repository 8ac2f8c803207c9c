//! Command-line surface for the exact polytope calculus: constructions,
//! Minkowski sums, polar duals, Nesterov rounding, face-lattice analysis,
//! the perfectly-centered checker, and the theorem verification suites.
//!
//! Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.

mod report;
mod suites;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::{Check, Format, Report, Status};
use sumdual::construct;
use sumdual::io::{load_polytope_file, save_polytope_file, to_off};
use sumdual::lattice::FaceLattice;
use sumdual::minkowski::{minkowski_sum, trivial_kface_bound, trivial_vertex_bound};
use sumdual::nesterov::{nesterov_round, perfectly_centered_witnesses};
use sumdual::polytope::convex_hull;
use sumdual::rational::parse_rational;
use sumdual::{Polytope, Rational, Vector};

#[derive(Parser)]
#[command(
    name = "sumdual",
    version,
    about = "Exact convex-polytope calculus: Minkowski sums, polar duals, face lattices, Nesterov rounding"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Include timings in report output (non-deterministic).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Records,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Records => Format::Records,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct a standard polytope and write it to a polytope file.
    Make {
        kind: MakeKind,
        /// Dimension, for kinds that need one.
        #[arg(long)]
        dim: Option<usize>,
        /// Rational parameters, comma separated (cyclic, polygon-halfcircle).
        #[arg(long, value_delimiter = ',')]
        t: Vec<String>,
        /// 1-based circle-plane axis for polygon-halfcircle.
        #[arg(long, default_value_t = 1)]
        axis: usize,
        /// Ambient dimension for polygon-halfcircle.
        #[arg(long)]
        ambient: Option<usize>,
        /// Segment start, comma separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        from: Option<String>,
        /// Segment end.
        #[arg(long, allow_hyphen_values = true)]
        to: Option<String>,
        /// Points as semicolon-separated rational tuples (from-points).
        #[arg(long, allow_hyphen_values = true)]
        coords: Option<String>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Minkowski sum of polytope files; prints f-vectors, bounds and the
    /// general-position flag.
    Sum {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Polar dual of a centered full-dimensional polytope.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Nesterov rounding P + P*, optionally iterated.
    Round {
        file: PathBuf,
        #[arg(short = 'n', long = "iterations", default_value_t = 1)]
        iterations: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// f-vector, Euler residual, and optional lattice / OFF export.
    Analyze {
        file: PathBuf,
        /// Print the face lattice to stdout in this format.
        #[arg(long, value_enum)]
        lattice: Option<LatticeFormat>,
        /// Write an OFF rendering (3-polytopes only).
        #[arg(long)]
        off: Option<PathBuf>,
    },
    /// Perfectly-centered test with per-face witnesses.
    CheckPc { file: PathBuf },
    /// Run a theorem verification suite.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        size: usize,
    },
    /// Trivial upper bounds from summand vertex counts.
    Bounds {
        /// Vertex counts of the summands, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        f0: Vec<u64>,
        /// Face dimension k; without it the vertex bound is printed.
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MakeKind {
    Cube,
    Cross,
    TetrahedronPc,
    Simplex,
    Cyclic,
    PolygonHalfcircle,
    Segment,
    FromPoints,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeFormat {
    Dot,
    Txt,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    RoundingLattice,
    SimplexFvector,
    CubeFvector,
    RepeatedRounding,
    VertexBound,
    #[value(name = "3d-relations")]
    Relations3d,
    FacetBounds,
    CyclicBounds,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.into();
    match run(cli.command, format, cli.timings) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, format: Format, timings: bool) -> sumdual::Result<u8> {
    match command {
        Command::Make {
            kind,
            dim,
            t,
            axis,
            ambient,
            from,
            to,
            coords,
            out,
        } => {
            let (name, polytope) = make_polytope(kind, dim, &t, axis, ambient, from, to, coords)?;
            save_polytope_file(&out, &name, &polytope)?;
            emit_summary(format, &name, &polytope, Some(&out));
            Ok(0)
        }
        Command::Sum { files, out } => {
            let mut summands = Vec::new();
            for f in &files {
                summands.push(load_polytope_file(f)?.1);
            }
            let summand_fvecs: Vec<Vec<u64>> = summands
                .iter()
                .map(|p| FaceLattice::build(p).f_vector())
                .collect();
            let f0: Vec<u64> = summands.iter().map(|p| p.vertex_count() as u64).collect();
            let ctx = minkowski_sum(summands)?;
            let lattice = FaceLattice::build(ctx.sum());
            let (general_position, violators) = ctx.relatively_in_general_position()?;
            let fv = lattice.f_vector();

            match format {
                Format::Text => {
                    for (i, f) in summand_fvecs.iter().enumerate() {
                        println!("summand[{i}] f = {f:?}");
                    }
                    println!("sum f = {fv:?}");
                    println!("euler residual = {}", lattice.euler_residual());
                    let vb = trivial_vertex_bound(&f0);
                    println!(
                        "vertex bound = {vb} attained = {}",
                        vb == ctx.sum().vertex_count().into()
                    );
                    for (k, &count) in fv.iter().enumerate() {
                        let bound = trivial_kface_bound(&f0, k);
                        println!(
                            "{k}-face bound = {bound} attained = {}",
                            bound == count.into()
                        );
                    }
                    println!("general position = {general_position}");
                    if !general_position {
                        println!("inexact facets = {violators:?}");
                    }
                }
                Format::Records => {
                    let vb = trivial_vertex_bound(&f0);
                    println!(
                        "{}",
                        serde_json::json!({
                            "summand_f_vectors": summand_fvecs,
                            "sum_f_vector": fv,
                            "euler_residual": lattice.euler_residual(),
                            "vertex_bound": vb.to_string(),
                            "vertex_bound_attained": vb == ctx.sum().vertex_count().into(),
                            "kface_bounds": (0..fv.len())
                                .map(|k| trivial_kface_bound(&f0, k).to_string())
                                .collect::<Vec<_>>(),
                            "general_position": general_position,
                        })
                    );
                }
            }
            if let Some(out) = out {
                save_polytope_file(&out, "sum", ctx.sum())?;
                if matches!(format, Format::Text) {
                    println!("wrote {}", out.display());
                }
            }
            Ok(0)
        }
        Command::Dual { file, out } => {
            let (name, p) = load_polytope_file(&file)?;
            let dual = p.polar_dual()?;
            let dual_name = format!("{name}-dual");
            save_polytope_file(&out, &dual_name, &dual)?;
            emit_summary(format, &dual_name, &dual, Some(&out));
            Ok(0)
        }
        Command::Round {
            file,
            iterations,
            out,
        } => {
            let (name, p) = load_polytope_file(&file)?;
            let mut current = p;
            for i in 1..=iterations {
                let ctx = nesterov_round(&current)?;
                current = ctx.sum().clone();
                if matches!(format, Format::Text) {
                    println!(
                        "round {i}: f = {:?}",
                        FaceLattice::build(&current).f_vector()
                    );
                }
            }
            let rounded_name = format!("{name}-round{iterations}");
            save_polytope_file(&out, &rounded_name, &current)?;
            emit_summary(format, &rounded_name, &current, Some(&out));
            Ok(0)
        }
        Command::Analyze { file, lattice, off } => {
            let (name, p) = load_polytope_file(&file)?;
            let l = FaceLattice::build(&p);
            match format {
                Format::Text => {
                    println!("name = {name}");
                    println!(
                        "ambient dim = {}, intrinsic dim = {}",
                        p.ambient_dim(),
                        p.intrinsic_dim()
                    );
                    println!(
                        "vertices = {}, facets = {}",
                        p.vertex_count(),
                        p.facet_count()
                    );
                    println!("f = {:?}", l.f_vector());
                    println!("euler residual = {}", l.euler_residual());
                }
                Format::Records => {
                    println!(
                        "{}",
                        serde_json::json!({
                            "name": name,
                            "ambient_dim": p.ambient_dim(),
                            "intrinsic_dim": p.intrinsic_dim(),
                            "f_vector": l.f_vector(),
                            "euler_residual": l.euler_residual(),
                        })
                    );
                }
            }
            match lattice {
                Some(LatticeFormat::Dot) => print!("{}", l.to_dot()),
                Some(LatticeFormat::Txt) => print!("{}", l.to_text()),
                None => {}
            }
            if let Some(off_path) = off {
                std::fs::write(&off_path, to_off(&p)?)?;
                if matches!(format, Format::Text) {
                    println!("wrote {}", off_path.display());
                }
            }
            Ok(0)
        }
        Command::CheckPc { file } => {
            let (name, p) = load_polytope_file(&file)?;
            let pc = perfectly_centered_witnesses(&p)?;
            let mut report = Report::new(format!("check-pc {name}"));
            for entry in &pc.entries {
                if let Some(reason) = entry.failure {
                    report.push(
                        Check::new(
                            format!(
                                "face dim {} verts {:?}",
                                entry.face_dim, entry.face_vertices
                            ),
                            Status::Fail,
                        )
                        .values("witness", reason),
                    );
                }
            }
            report.push(
                Check::new("perfectly centered", status_of(pc.overall)).values("true", pc.overall),
            );
            report.print(format, timings);
            Ok(report.exit_code())
        }
        Command::Verify {
            suite,
            dim,
            seed,
            size,
        } => {
            let knobs = suites::Knobs { dim, seed, size };
            let (label, checks) = match suite {
                Suite::RoundingLattice => ("rounding-lattice", suites::rounding_lattice(&knobs)?),
                Suite::SimplexFvector => ("simplex-fvector", suites::simplex_fvector(&knobs)?),
                Suite::CubeFvector => ("cube-fvector", suites::cube_fvector(&knobs)?),
                Suite::RepeatedRounding => {
                    ("repeated-rounding", suites::repeated_rounding(&knobs)?)
                }
                Suite::VertexBound => ("vertex-bound", suites::vertex_bound(&knobs)?),
                Suite::Relations3d => ("3d-relations", suites::relations_3d(&knobs)?),
                Suite::FacetBounds => ("facet-bounds", suites::facet_bounds(&knobs)?),
                Suite::CyclicBounds => ("cyclic-bounds", suites::cyclic_bounds(&knobs)?),
                Suite::All => ("all", suites::all(&knobs)?),
            };
            let mut report = Report::new(format!(
                "verify {label} --dim {dim} --seed {seed} --size {size}"
            ));
            report.extend(checks);
            report.print(format, timings);
            Ok(report.exit_code())
        }
        Command::Bounds { f0, k } => {
            let value = match k {
                Some(k) => trivial_kface_bound(&f0, k),
                None => trivial_vertex_bound(&f0),
            };
            match format {
                Format::Text => println!("{value}"),
                Format::Records => println!(
                    "{}",
                    serde_json::json!({ "f0": f0, "k": k, "bound": value.to_string() })
                ),
            }
            Ok(0)
        }
    }
}

fn status_of(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn emit_summary(format: Format, name: &str, p: &Polytope, out: Option<&Path>) {
    match format {
        Format::Text => {
            println!(
                "{name}: {} vertices, {} facets, dim {}/{}",
                p.vertex_count(),
                p.facet_count(),
                p.intrinsic_dim(),
                p.ambient_dim()
            );
            if let Some(out) = out {
                println!("wrote {}", out.display());
            }
        }
        Format::Records => {
            println!(
                "{}",
                serde_json::json!({
                    "name": name,
                    "vertices": p.vertex_count(),
                    "facets": p.facet_count(),
                    "intrinsic_dim": p.intrinsic_dim(),
                    "ambient_dim": p.ambient_dim(),
                    "file": out.map(|o| o.display().to_string()),
                })
            );
        }
    }
}

fn parse_rationals(items: &[String]) -> sumdual::Result<Vec<Rational>> {
    items.iter().map(|s| parse_rational(s)).collect()
}

fn parse_vector(text: &str) -> sumdual::Result<Vector> {
    let coords: sumdual::Result<Vec<Rational>> =
        text.split(',').map(|s| parse_rational(s.trim())).collect();
    Ok(Vector::new(coords?))
}

#[allow(clippy::too_many_arguments)]
fn make_polytope(
    kind: MakeKind,
    dim: Option<usize>,
    t: &[String],
    axis: usize,
    ambient: Option<usize>,
    from: Option<String>,
    to: Option<String>,
    coords: Option<String>,
) -> sumdual::Result<(String, Polytope)> {
    let need_dim =
        || dim.ok_or_else(|| sumdual::Error::InvalidConstruction("--dim is required".into()));
    match kind {
        MakeKind::Cube => {
            let d = need_dim()?;
            Ok((format!("cube-{d}"), construct::cube(d)?))
        }
        MakeKind::Cross => {
            let d = need_dim()?;
            Ok((format!("cross-{d}"), construct::cross_polytope(d)?))
        }
        MakeKind::TetrahedronPc => Ok(("tetrahedron-pc".into(), construct::tetrahedron_pc())),
        MakeKind::Simplex => {
            let d = need_dim()?;
            Ok((format!("simplex-{d}"), construct::simplex(d)?))
        }
        MakeKind::Cyclic => {
            let d = need_dim()?;
            let ts = parse_rationals(t)?;
            Ok((
                format!("cyclic-{d}-{}", ts.len()),
                construct::cyclic(d, &ts)?,
            ))
        }
        MakeKind::PolygonHalfcircle => {
            let amb = ambient.ok_or_else(|| {
                sumdual::Error::InvalidConstruction("--ambient is required".into())
            })?;
            if axis == 0 || axis >= amb {
                return Err(sumdual::Error::InvalidConstruction(format!(
                    "--axis must be between 1 and {}",
                    amb - 1
                )));
            }
            let ts = parse_rationals(t)?;
            Ok((
                format!("halfcircle-{}gon", ts.len()),
                construct::halfcircle_polygon(&ts, axis - 1, amb)?,
            ))
        }
        MakeKind::Segment => {
            let from = from
                .ok_or_else(|| sumdual::Error::InvalidConstruction("--from is required".into()))?;
            let to =
                to.ok_or_else(|| sumdual::Error::InvalidConstruction("--to is required".into()))?;
            let a = parse_vector(&from)?;
            let b = parse_vector(&to)?;
            Ok(("segment".into(), construct::segment(&a, &b)?))
        }
        MakeKind::FromPoints => {
            let coords = coords.ok_or_else(|| {
                sumdual::Error::InvalidConstruction("--coords is required".into())
            })?;
            let points: sumdual::Result<Vec<Vector>> =
                coords.split(';').map(|p| parse_vector(p.trim())).collect();
            let points = points?;
            let d = points
                .first()
                .map(|p| p.dim())
                .ok_or(sumdual::Error::EmptyInput)?;
            Ok(("points".into(), convex_hull(&points, d)?))
        }
    }
}
