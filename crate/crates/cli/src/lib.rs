//! `kgeom` command-line front-end.
//!
//! Every subcommand reads a JSON object from stdin, calls into the `kgeom`
//! library and writes one result to stdout. Errors go to stderr as
//! `{"error": <name>, "detail": <text>}` with exit status 2 for invalid
//! arguments or input and 3 for failures reported by the library.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use kgeom::centers::{center_coords, to_barycentric, CenterId};
use kgeom::embedding::{homog_to_stereo, stereo_to_homog, PlanarPoint};
use kgeom::median_rotation::{median_point, rotation_center, SolverOptions};
use kgeom::{Curvature, GeomError, HomPoint};
use serde_json::Value;

mod input;
mod output;
mod svg;

use input::{Payload, Reference};
use output::{csv_text, fmt17, json_line, num, nums, object};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    UnknownCenter(String),
    Geom(GeomError),
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        CliError::Geom(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Geom(_) => EXIT_DOMAIN,
            _ => EXIT_INVALID,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "invalid_arguments",
            CliError::Input(_) => "invalid_input",
            CliError::UnknownCenter(_) => "unknown_center",
            CliError::Geom(e) => e.name(),
        }
    }

    fn report(&self) -> Value {
        let detail = match self {
            CliError::Usage(d) | CliError::Input(d) => d.clone(),
            CliError::UnknownCenter(id) => format!("no catalog center named {id:?}"),
            CliError::Geom(e) => e.to_string(),
        };
        object(vec![("error", Value::String(self.name().into())), ("detail", Value::String(detail))])
    }
}

#[derive(Debug, Parser)]
#[command(name = "kgeom", version, about = "Triangle centers and median points on surfaces of constant curvature")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Catalog centers of a triangle read from stdin
    Center(CenterArgs),
    /// List the catalog center ids
    ListCenters(FormatArg),
    /// Convert a point between planar, homogeneous and barycentric coordinates
    Convert(ConvertArgs),
    /// Median point of a point set read from stdin
    Median(Common),
    /// Planar center of rotation of a point set read from stdin
    Rotation(RotationArgs),
    /// Barycentric form of homogeneous coordinates
    Barycentric(BarycentricArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum Target {
    Planar,
    Homogeneous,
    Barycentric,
}

#[derive(Debug, Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct Common {
    /// Gaussian curvature of the surface
    #[arg(long, allow_hyphen_values = true)]
    curvature: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct CenterArgs {
    #[command(flatten)]
    common: Common,
    /// Center id; every catalog center when omitted
    #[arg(long, visible_alias = "center")]
    id: Option<String>,
    #[arg(long, value_enum, default_value = "homogeneous")]
    to: Target,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    to: Target,
    /// Use a catalog center as the point to convert
    #[arg(long, visible_alias = "id")]
    center: Option<String>,
}

#[derive(Debug, Args)]
struct RotationArgs {
    #[command(flatten)]
    common: Common,
    /// Starting point `x1,x2`; the median point by default
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    init: Option<PlanarPoint>,
    /// Residual tolerance per point
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Debug, Args)]
struct BarycentricArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, visible_alias = "center")]
    id: Option<String>,
}

fn parse_pair(s: &str) -> Result<PlanarPoint, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b] = parts.as_slice() else { return Err("expected x1,x2".into()) };
    let p = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    Ok(PlanarPoint::new(p(a)?, p(b)?))
}

fn curvature(c: &Common) -> Result<Curvature, CliError> {
    Curvature::new(c.curvature).map_err(|_| CliError::Usage(format!("curvature must be finite, got {}", c.curvature)))
}

fn center_id(s: &str) -> Result<CenterId, CliError> {
    s.parse().map_err(|_| CliError::UnknownCenter(s.to_string()))
}

fn planar(p: &PlanarPoint) -> Value {
    nums(&p.as_array())
}

fn only_json(f: Format, what: &str) -> Result<(), CliError> {
    if f == Format::Json {
        Ok(())
    } else {
        Err(CliError::Usage(format!("{what} only supports --format json")))
    }
}

/// Converts catalog coordinates to the requested target.
fn express(h: &HomPoint, to: Target, r: &Reference, k: Curvature) -> Result<Value, CliError> {
    Ok(match to {
        Target::Homogeneous => object(vec![("coords", nums(&h.normalize().components()))]),
        Target::Barycentric => object(vec![("coords", nums(&to_barycentric(h, &r.triangle)?.normalize().components()))]),
        Target::Planar => {
            let v = r.vertices("planar output")?;
            object(vec![("point", planar(&homog_to_stereo(h, &v, k)?))])
        }
    })
}

fn cmd_center(a: &CenterArgs, payload: &Payload) -> Result<String, CliError> {
    let k = curvature(&a.common)?;
    let r = payload.reference(k)?;
    let ids = match &a.id {
        Some(s) => vec![center_id(s)?],
        None => CenterId::ALL.to_vec(),
    };
    match a.common.format {
        Format::Json if a.id.is_some() => {
            let h = center_coords(&r.triangle, ids[0])?;
            Ok(json_line(&express(&h, a.to, &r, k)?))
        }
        Format::Json => {
            let mut entries = Vec::new();
            for id in ids {
                let mut m = serde_json::Map::new();
                m.insert("id".into(), Value::String(id.to_string()));
                match center_coords(&r.triangle, id).map_err(CliError::from).and_then(|h| express(&h, a.to, &r, k)) {
                    Ok(Value::Object(fields)) => m.extend(fields),
                    Ok(other) => unreachable!("express returned {other}"),
                    Err(e) => {
                        m.insert("error".into(), Value::String(e.name().into()));
                    }
                }
                entries.push(Value::Object(m));
            }
            Ok(json_line(&object(vec![("centers", Value::Array(entries))])))
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for id in ids {
                let Ok(h) = center_coords(&r.triangle, id) else { continue };
                let c = h.components();
                let p = r.vertices.and_then(|v| homog_to_stereo(&h, &v, k).ok());
                let (x1, x2) = p.map_or((String::new(), String::new()), |p| (fmt17(p.x1), fmt17(p.x2)));
                rows.push(vec![id.to_string(), x1, x2, fmt17(c[0]), fmt17(c[1]), fmt17(c[2])]);
            }
            Ok(csv_text(&["id", "x1", "x2", "c0", "c1", "c2"], &rows))
        }
        Format::Svg => {
            let v = r.vertices("svg output")?;
            let mut scene = svg::Scene::new(k, &v);
            scene.polygon(&v)?;
            for (p, label) in v.iter().zip(["A", "B", "C"]) {
                scene.dot(*p, label, "black");
            }
            for id in ids {
                let Ok(h) = center_coords(&r.triangle, id) else { continue };
                if let Ok(p) = homog_to_stereo(&h, &v, k) {
                    scene.dot(p, id.as_str(), "red");
                }
            }
            Ok(scene.render())
        }
    }
}

fn cmd_convert(a: &ConvertArgs, payload: &Payload) -> Result<String, CliError> {
    let k = curvature(&a.common)?;
    only_json(a.common.format, "convert")?;
    let r = payload.reference(k)?;
    let sources = [payload.point.is_some(), payload.coords.is_some(), a.center.is_some()];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(CliError::Input("give exactly one of \"point\", \"coords\" or --center".into()));
    }
    let h = if let Some(p) = payload.point {
        let p = PlanarPoint::from(p);
        if a.to == Target::Planar {
            return Ok(json_line(&object(vec![("point", planar(&p))])));
        }
        stereo_to_homog(&p, &r.vertices("planar input")?, k)?
    } else if let Some(id) = &a.center {
        center_coords(&r.triangle, center_id(id)?)?
    } else {
        payload.coords()?.expect("checked above")
    };
    Ok(json_line(&express(&h, a.to, &r, k)?))
}

fn cmd_barycentric(a: &BarycentricArgs, payload: &Payload) -> Result<String, CliError> {
    let k = curvature(&a.common)?;
    only_json(a.common.format, "barycentric")?;
    let r = payload.reference(k)?;
    let h = match (&a.id, payload.coords()?) {
        (Some(id), None) => center_coords(&r.triangle, center_id(id)?)?,
        (None, Some(h)) => h,
        _ => return Err(CliError::Input("give exactly one of \"coords\" or --id".into())),
    };
    Ok(json_line(&express(&h, Target::Barycentric, &r, k)?))
}

fn point_output(format: Format, k: Curvature, points: &[PlanarPoint], result: PlanarPoint, label: &str, extra: Vec<(&str, Value)>) -> String {
    match format {
        Format::Json => {
            let mut fields = vec![("point", planar(&result))];
            fields.extend(extra);
            json_line(&object(fields))
        }
        Format::Csv => csv_text(&["x1", "x2"], &[vec![fmt17(result.x1), fmt17(result.x2)]]),
        Format::Svg => {
            let mut anchor = points.to_vec();
            anchor.push(result);
            let mut scene = svg::Scene::new(k, &anchor);
            for p in points {
                scene.dot(*p, "", "black");
            }
            scene.dot(result, label, "red");
            scene.render()
        }
    }
}

fn cmd_median(a: &Common, payload: &Payload) -> Result<String, CliError> {
    let k = curvature(a)?;
    let ps = payload.point_set(k)?;
    let m = median_point(&ps)?;
    Ok(point_output(a.format, k, ps.points(), m, "median", vec![]))
}

fn cmd_rotation(a: &RotationArgs, payload: &Payload) -> Result<String, CliError> {
    let k = curvature(&a.common)?;
    let ps = payload.point_set(k)?;
    let mut opts = SolverOptions::default();
    if let Some(t) = a.tolerance {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Usage(format!("tolerance must be positive, got {t}")));
        }
        opts.tolerance = t;
    }
    let sol = rotation_center(&ps, a.init, &opts)?;
    let extra = vec![("iterations", Value::from(sol.iterations)), ("residual", num(sol.residual))];
    Ok(point_output(a.common.format, k, ps.points(), sol.point, "rotation", extra))
}

fn cmd_list(a: &FormatArg) -> Result<String, CliError> {
    let entry = |id: CenterId| {
        let n = id.catalog_number().map_or(Value::Null, Value::from);
        object(vec![("id", Value::String(id.to_string())), ("number", n)])
    };
    match a.format {
        Format::Json => Ok(json_line(&object(vec![("centers", Value::Array(CenterId::ALL.iter().map(|&id| entry(id)).collect()))]))),
        Format::Csv => {
            let rows: Vec<Vec<String>> = CenterId::ALL
                .iter()
                .map(|id| vec![id.to_string(), id.catalog_number().map_or(String::new(), |n| n.to_string())])
                .collect();
            Ok(csv_text(&["id", "number"], &rows))
        }
        Format::Svg => Err(CliError::Usage("list-centers does not support --format svg".into())),
    }
}

fn read_payload(stdin: &mut dyn Read) -> Result<Payload, CliError> {
    let mut text = String::new();
    stdin.read_to_string(&mut text).map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
    input::parse(&text)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    if let Command::ListCenters(a) = &cli.command {
        return cmd_list(a);
    }
    let payload = read_payload(stdin)?;
    match &cli.command {
        Command::Center(a) => cmd_center(a, &payload),
        Command::Convert(a) => cmd_convert(a, &payload),
        Command::Median(a) => cmd_median(a, &payload),
        Command::Rotation(a) => cmd_rotation(a, &payload),
        Command::Barycentric(a) => cmd_barycentric(a, &payload),
        Command::ListCenters(_) => unreachable!("handled above"),
    }
}

/// Runs one command line; returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let err = CliError::Usage(e.to_string().trim_end().to_string());
            let _ = stderr.write_all(json_line(&err.report()).as_bytes());
            return err.exit_code();
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = stderr.write_all(json_line(&e.report()).as_bytes());
            e.exit_code()
        }
    }
}
