//! Command-line front end: load or generate scenarios, run colorings,
//! simulations and brute-force verifiers, and emit machine-readable graphs
//! plus static SVG plots.
//!
//! Exit codes: 0 success / claim holds, 1 input error, 2 degenerate
//! geometry, 3 claim fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ramsey_curves::billiard::{self, Termination};
use ramsey_curves::coloring::{self, DegeneracyPolicy, EdgeColor};
use ramsey_curves::contour::{self, Contour, LabeledPoint, Point2, Vec2};
use ramsey_curves::io::{
    ArrangementFile, ContourFile, GraphFile, PointsFile, StartFile, TrajectoryFile, VerdictFile,
};
use ramsey_curves::ramsey::{self, MonochromaticClique};
use ramsey_curves::regions::{self, Arrangement};
use ramsey_curves::Error as CoreError;

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_DEGENERATE: u8 = 2;
const EXIT_CLAIM_FAILS: u8 = 3;

#[derive(Parser)]
#[command(name = "ramsey-curves", about = "Ramsey colorings on closed plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    Reject,
    Perturb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClaimArg {
    R33,
    Trans,
    Multipartite,
}

#[derive(Subcommand)]
enum Command {
    /// Sample points on a contour (or load them) and slope-color the chords.
    SlopeGraph {
        /// Contour file (JSON)
        #[arg(long)]
        contour: Option<PathBuf>,
        /// Comma-separated arc-length parameters in [0,1)
        #[arg(long)]
        params: Option<String>,
        /// Points file (JSON), alternative to --contour/--params
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "reject")]
        policy: PolicyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Simulate a billiard and slope-color its reflection points.
    Billiard {
        /// Boundary contour file (JSON)
        #[arg(long)]
        boundary: PathBuf,
        #[arg(long)]
        start_x: f64,
        #[arg(long)]
        start_y: f64,
        #[arg(long)]
        dir_x: f64,
        #[arg(long)]
        dir_y: f64,
        #[arg(long, default_value_t = 6)]
        bounces: usize,
        #[arg(long, value_enum, default_value = "reject")]
        policy: PolicyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Classify points into Jordan-curve regions and equality-color them.
    RegionsGraph {
        #[arg(long)]
        arrangement: PathBuf,
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Signed curvature along a contour (analytic or discrete).
    Curvature {
        #[arg(long)]
        contour: PathBuf,
        /// Comma-separated parameters (circle / parametric samples)
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a brute-force verifier and write a verdict file.
    Verify {
        #[arg(long, value_enum)]
        claim: ClaimArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_part: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw a scenario result and/or contours as a static SVG.
    Render {
        /// Scenario result file produced by slope-graph / billiard / regions-graph
        #[arg(long)]
        result: Option<PathBuf>,
        /// Contour file; may be repeated
        #[arg(long)]
        contour: Vec<PathBuf>,
        /// Arrangement file; its curves are all drawn
        #[arg(long)]
        arrangement: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Command failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Failure {
        let code = match e {
            CoreError::DegenerateSlope { .. }
            | CoreError::CoincidentPoints { .. }
            | CoreError::CornerHit { .. }
            | CoreError::Grazing { .. }
            | CoreError::OnBoundary { .. } => EXIT_DEGENERATE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::SlopeGraph {
            contour,
            params,
            points,
            policy,
            seed,
            out,
        } => cmd_slope_graph(contour, params, points, policy, seed, out),
        Command::Billiard {
            boundary,
            start_x,
            start_y,
            dir_x,
            dir_y,
            bounces,
            policy,
            seed,
            out,
        } => cmd_billiard(boundary, start_x, start_y, dir_x, dir_y, bounces, policy, seed, out),
        Command::RegionsGraph {
            arrangement,
            points,
            out,
        } => cmd_regions_graph(arrangement, points, out),
        Command::Curvature {
            contour,
            params,
            out,
        } => cmd_curvature(contour, params, out),
        Command::Verify {
            claim,
            n,
            max_part,
            out,
        } => cmd_verify(claim, n, max_part, out),
        Command::Render {
            result,
            contour,
            arrangement,
            out,
        } => cmd_render(result, contour, arrangement, out),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::input(format!("serialization: {e}")))?;
    fs::write(path, text + "\n").map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn parse_params(text: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| Failure::input(format!("parameter {s:?}: {e}")))
        })
        .collect()
}

fn policy_for(policy: PolicyArg, seed: u64) -> DegeneracyPolicy {
    match policy {
        PolicyArg::Reject => DegeneracyPolicy::Reject,
        PolicyArg::Perturb => DegeneracyPolicy::Perturb { seed },
    }
}

fn policy_name(policy: PolicyArg) -> &'static str {
    match policy {
        PolicyArg::Reject => "reject",
        PolicyArg::Perturb => "perturb",
    }
}

fn triangle_json(triangles: &[MonochromaticClique]) -> serde_json::Value {
    json!(triangles
        .iter()
        .map(|t| {
            json!({
                "vertices": t.vertices,
                "color": match t.color { EdgeColor::Red => "red", EdgeColor::Green => "green" },
            })
        })
        .collect::<Vec<_>>())
}

fn tolerance_json() -> serde_json::Value {
    use ramsey_curves::scalar::tol;
    json!({
        "eps_on": tol::eps_on::<f64>(),
        "eps_slope": tol::eps_slope::<f64>(),
        "eps_vert": tol::eps_vert::<f64>(),
        "eps_t": tol::eps_t::<f64>(),
        "eps_corner": tol::eps_corner::<f64>(),
        "eps_graze": tol::eps_graze::<f64>(),
        "eps_region": tol::eps_region::<f64>(),
        "jitter_magnitude": tol::jitter_magnitude::<f64>(),
    })
}

fn points_json(points: &[LabeledPoint<f64>]) -> serde_json::Value {
    json!(points
        .iter()
        .map(|p| [p.position.x, p.position.y])
        .collect::<Vec<_>>())
}

fn cmd_slope_graph(
    contour: Option<PathBuf>,
    params: Option<String>,
    points_file: Option<PathBuf>,
    policy: PolicyArg,
    seed: u64,
    out: PathBuf,
) -> Result<u8, Failure> {
    let (points, input_echo) = match (&contour, &params, &points_file) {
        (Some(contour_path), Some(params_text), None) => {
            let file: ContourFile = read_json(contour_path)?;
            let contour = file.to_contour()?;
            let params = parse_params(params_text)?;
            let points = contour::sample_points(&contour, &params)?;
            (
                points,
                json!({"contour": contour_path.display().to_string(), "params": params}),
            )
        }
        (None, None, Some(points_path)) => {
            let file: PointsFile = read_json(points_path)?;
            let points = file.to_labeled_points()?;
            (points, json!({"points": points_path.display().to_string()}))
        }
        _ => {
            return Err(Failure::input(
                "provide either --contour with --params, or --points",
            ))
        }
    };
    let graph = coloring::color_by_slope(&points, policy_for(policy, seed))?;
    let triangles = ramsey::find_monochromatic_triangles(&graph);
    let result = json!({
        "graph": GraphFile::from_slope_graph(&graph),
        "triangles": triangle_json(&triangles),
        "metadata": {
            "input": input_echo,
            "policy": policy_name(policy),
            "seed": seed,
            "tolerances": tolerance_json(),
            "points": points_json(&points),
        },
    });
    write_json(&out, &result)?;
    if points.len() >= 6 && triangles.is_empty() {
        return Ok(EXIT_CLAIM_FAILS);
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_billiard(
    boundary_path: PathBuf,
    start_x: f64,
    start_y: f64,
    dir_x: f64,
    dir_y: f64,
    bounces: usize,
    policy: PolicyArg,
    seed: u64,
    out: PathBuf,
) -> Result<u8, Failure> {
    let file: ContourFile = read_json(&boundary_path)?;
    let boundary = file.to_contour()?;
    let start = billiard::ParticleState::new(
        Point2::new(start_x, start_y),
        Vec2::new(dir_x, dir_y),
    )?;
    let trajectory = billiard::simulate(&boundary, &start, bounces)?;
    let trajectory_path = trajectory_path_for(&out);
    write_json(&trajectory_path, &TrajectoryFile::from_trajectory(&trajectory))?;
    if trajectory.termination != Termination::Completed {
        // partial trajectory recorded; no graph to build
        let result = json!({
            "graph": serde_json::Value::Null,
            "triangles": [],
            "metadata": {
                "input": {"boundary": boundary_path.display().to_string(),
                          "start": StartFile { position: [start_x, start_y], direction: [dir_x, dir_y] },
                          "bounces": bounces},
                "policy": policy_name(policy),
                "seed": seed,
                "tolerances": tolerance_json(),
                "points": points_json(&trajectory.reflections),
                "termination": TrajectoryFile::from_trajectory(&trajectory).termination,
            },
        });
        write_json(&out, &result)?;
        return Ok(EXIT_DEGENERATE);
    }
    let graph = billiard::reflections_to_graph(&trajectory, policy_for(policy, seed))?;
    let triangles = ramsey::find_monochromatic_triangles(&graph);
    let result = json!({
        "graph": GraphFile::from_slope_graph(&graph),
        "triangles": triangle_json(&triangles),
        "metadata": {
            "input": {"boundary": boundary_path.display().to_string(),
                      "start": StartFile { position: [start_x, start_y], direction: [dir_x, dir_y] },
                      "bounces": bounces},
            "policy": policy_name(policy),
            "seed": seed,
            "tolerances": tolerance_json(),
            "points": points_json(&trajectory.reflections),
            "termination": "completed",
        },
    });
    write_json(&out, &result)?;
    if trajectory.reflections.len() >= 6 && triangles.is_empty() {
        return Ok(EXIT_CLAIM_FAILS);
    }
    Ok(EXIT_OK)
}

fn trajectory_path_for(out: &Path) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("result");
    out.with_file_name(format!("{stem}.trajectory.json"))
}

fn cmd_regions_graph(
    arrangement_path: PathBuf,
    points_path: PathBuf,
    out: PathBuf,
) -> Result<u8, Failure> {
    let arr_file: ArrangementFile = read_json(&arrangement_path)?;
    let curves = arr_file
        .curves
        .iter()
        .map(|c| c.to_contour())
        .collect::<Result<Vec<_>, _>>()?;
    let arrangement = Arrangement::new(curves, arr_file.names.clone())?;
    let points = read_json::<PointsFile>(&points_path)?.to_labeled_points()?;
    let graph = regions::region_graph(&arrangement, &points)?;
    let triangles = ramsey::find_monochromatic_triangles(&graph);
    let result = json!({
        "graph": GraphFile::from_label_graph(&graph),
        "triangles": triangle_json(&triangles),
        "metadata": {
            "input": {"arrangement": arrangement_path.display().to_string(),
                      "points": points_path.display().to_string()},
            "tolerances": tolerance_json(),
            "points": points_json(&points),
        },
    });
    write_json(&out, &result)?;
    Ok(EXIT_OK)
}

fn cmd_curvature(
    contour_path: PathBuf,
    params: Option<String>,
    out: PathBuf,
) -> Result<u8, Failure> {
    let file: ContourFile = read_json(&contour_path)?;
    let contour = file.to_contour()?;
    let samples = match &contour {
        Contour::ClosedPolyline { vertices } => {
            let mut rows = Vec::with_capacity(vertices.len());
            for v in 0..vertices.len() {
                let kappa = contour::discrete_curvature(&contour, v)?;
                rows.push(json!({"vertex": v, "kappa": kappa}));
            }
            rows
        }
        _ => {
            let params = parse_params(
                params
                    .as_deref()
                    .ok_or_else(|| Failure::input("--params required for analytic contours"))?,
            )?;
            let mut rows = Vec::with_capacity(params.len());
            for t in params {
                let s = contour::signed_curvature_parametric(&contour, t)?;
                let p = s.position.expect("parametric sample has a position");
                rows.push(json!({"param": t, "kappa": s.kappa, "position": [p.x, p.y]}));
            }
            rows
        }
    };
    write_json(
        &out,
        &json!({
            "contour": contour_path.display().to_string(),
            "samples": samples,
        }),
    )?;
    Ok(EXIT_OK)
}

fn cmd_verify(claim: ClaimArg, n: usize, max_part: usize, out: PathBuf) -> Result<u8, Failure> {
    let verdict = match claim {
        ClaimArg::R33 => VerdictFile::from_r33(&ramsey::verify_r33(n)?),
        ClaimArg::Trans => VerdictFile::from_transitive(&ramsey::verify_transitive_ramsey(n)?),
        ClaimArg::Multipartite => {
            let holds = ramsey::verify_multipartite_red_triangle(n, max_part);
            VerdictFile {
                n,
                claim: "multipartite".into(),
                holds,
                counterexamples: 0,
                witness: None,
            }
        }
    };
    write_json(&out, &verdict)?;
    if verdict.holds {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_CLAIM_FAILS)
    }
}

fn cmd_render(
    result: Option<PathBuf>,
    contour_paths: Vec<PathBuf>,
    arrangement: Option<PathBuf>,
    out: PathBuf,
) -> Result<u8, Failure> {
    let mut contours: Vec<Contour<f64>> = Vec::new();
    for path in &contour_paths {
        contours.push(read_json::<ContourFile>(path)?.to_contour()?);
    }
    if let Some(path) = &arrangement {
        let file: ArrangementFile = read_json(path)?;
        for c in &file.curves {
            contours.push(c.to_contour()?);
        }
    }
    let scenario: Option<serde_json::Value> = match &result {
        Some(path) => Some(read_json(path)?),
        None => None,
    };
    if contours.is_empty() && scenario.is_none() {
        return Err(Failure::input("nothing to render: give --result, --contour or --arrangement"));
    }
    let svg = render_svg(&contours, scenario.as_ref())?;
    fs::write(&out, svg).map_err(|e| Failure::input(format!("{}: {e}", out.display())))?;
    Ok(EXIT_OK)
}

fn render_svg(
    contours: &[Contour<f64>],
    scenario: Option<&serde_json::Value>,
) -> Result<String, Failure> {
    let mut min = [f64::INFINITY; 2];
    let mut max = [f64::NEG_INFINITY; 2];
    let mut grow = |x: f64, y: f64| {
        min[0] = min[0].min(x);
        min[1] = min[1].min(y);
        max[0] = max[0].max(x);
        max[1] = max[1].max(y);
    };
    let mut contour_points: Vec<Vec<(f64, f64)>> = Vec::new();
    for c in contours {
        let pts: Vec<(f64, f64)> = match c.vertex_list() {
            Some(vs) => vs.iter().map(|p| (p.x, p.y)).collect(),
            None => (0..128)
                .map(|j| {
                    let p = c.point_at(j as f64 / 128.0).expect("param in range");
                    (p.x, p.y)
                })
                .collect(),
        };
        for &(x, y) in &pts {
            grow(x, y);
        }
        contour_points.push(pts);
    }
    let scenario_points: Vec<(f64, f64)> = scenario
        .and_then(|s| s.pointer("/metadata/points"))
        .and_then(|v| v.as_array())
        .map(|rows| {
            rows.iter()
                .filter_map(|r| {
                    let xy = r.as_array()?;
                    Some((xy.first()?.as_f64()?, xy.get(1)?.as_f64()?))
                })
                .collect()
        })
        .unwrap_or_default();
    for &(x, y) in &scenario_points {
        grow(x, y);
    }
    if !min[0].is_finite() {
        return Err(Failure::input("no drawable geometry"));
    }
    let pad = 0.1 * ((max[0] - min[0]).max(max[1] - min[1]).max(1.0));
    let (x0, y0) = (min[0] - pad, min[1] - pad);
    let (w, h) = (max[0] - min[0] + 2.0 * pad, max[1] - min[1] + 2.0 * pad);
    let stroke = (w.max(h)) / 200.0;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0} {y0} {w} {h}\">\n"
    ));
    // flip y so the drawing matches mathematical orientation
    svg.push_str(&format!(
        "<g transform=\"translate(0,{}) scale(1,-1)\">\n",
        2.0 * y0 + h
    ));
    for pts in &contour_points {
        let mut d = String::new();
        for (j, (x, y)) in pts.iter().enumerate() {
            d.push_str(if j == 0 { "M" } else { "L" });
            d.push_str(&format!("{x} {y} "));
        }
        d.push('Z');
        svg.push_str(&format!(
            "<path class=\"contour\" d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\"/>\n"
        ));
    }
    // edges and triangles from the scenario result
    if let Some(s) = scenario {
        if let Some(edges) = s.pointer("/graph/edges").and_then(|v| v.as_array()) {
            for e in edges {
                let (Some(i), Some(k)) = (
                    e.get("i").and_then(|v| v.as_u64()),
                    e.get("k").and_then(|v| v.as_u64()),
                ) else {
                    continue;
                };
                let color = e.get("color").and_then(|v| v.as_str()).unwrap_or("gray");
                let (Some(a), Some(b)) = (
                    scenario_points.get(i as usize - 1),
                    scenario_points.get(k as usize - 1),
                ) else {
                    continue;
                };
                svg.push_str(&format!(
                    "<line class=\"edge {color}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"{stroke}\"/>\n",
                    a.0, a.1, b.0, b.1
                ));
            }
        }
        if let Some(triangles) = s.get("triangles").and_then(|v| v.as_array()) {
            for t in triangles {
                let Some(vs) = t.get("vertices").and_then(|v| v.as_array()) else {
                    continue;
                };
                let color = t.get("color").and_then(|v| v.as_str()).unwrap_or("gray");
                let corners: Vec<&(f64, f64)> = vs
                    .iter()
                    .filter_map(|v| scenario_points.get(v.as_u64()? as usize - 1))
                    .collect();
                if corners.len() == 3 {
                    let pts = corners
                        .iter()
                        .map(|(x, y)| format!("{x},{y}"))
                        .collect::<Vec<_>>()
                        .join(" ");
                    svg.push_str(&format!(
                        "<polygon class=\"mono\" points=\"{pts}\" fill=\"{color}\" fill-opacity=\"0.15\" stroke=\"{color}\" stroke-width=\"{}\"/>\n",
                        2.0 * stroke
                    ));
                }
            }
        }
    }
    for (x, y) in &scenario_points {
        svg.push_str(&format!(
            "<circle class=\"vertex\" cx=\"{x}\" cy=\"{y}\" r=\"{}\"/>\n",
            2.0 * stroke
        ));
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}
