use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lrefl::classify::{enumerate_l_reflexive, family_polygon, rp_counts, tmp_counts, ClassTable, CountRow, Family};
use lrefl::lattice::rat_string;
use lrefl::polygon::{boundary_count, parse_polygon, LatticePolygon};
use lrefl::toric::{dual, invariant_report, sectional_genus, wve2c_graph, InvariantReport};
use lrefl::Error;

#[derive(Parser)]
#[command(name = "lrefl", version, about = "Invariants and classification of l-reflexive lattice polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report of one polygon
    Analyze {
        #[command(flatten)]
        input: PolygonInput,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// All l-reflexive classes for one index
    Classify {
        #[arg(long)]
        ell: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Class counts per vertex number for every odd index up to a bound
    Tables {
        #[arg(long)]
        max_ell: i64,
        /// Count only classes with equal genus on both sides
        #[arg(long)]
        tmp: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Weighted cycle graph of a polygon
    Graph {
        #[command(flatten)]
        input: PolygonInput,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Member of a named family
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        ell: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PolygonInput {
    /// Vertices as "x1,y1;x2,y2;..." or a JSON object with "vertices"
    #[arg(long)]
    polygon: Option<String>,
    /// File holding the polygon text
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

/// Failure carrying the process exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotLdp(_) | Error::OriginNotInterior | Error::NonprimitiveGenerator(_) => 3,
            Error::NotLReflexive(_) => 4,
            Error::Parse(_) | Error::DegenerateHull | Error::RestrictionViolated(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

fn read_polygon(input: &PolygonInput) -> Result<LatticePolygon, Failure> {
    let text = match (&input.polygon, &input.input) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| usage(format!("PARSE_ERROR: cannot read {}: {e}", path.display())))?,
        (None, None) => return Err(usage("PARSE_ERROR: no polygon given".into())),
    };
    Ok(parse_polygon(&text)?)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("serializable");
    let mut s = serde_json::to_string_pretty(&value).expect("serializable");
    s.push('\n');
    s
}

fn unsupported(cmd: &str, f: Format) -> Failure {
    let name = match f {
        Format::Json => "json",
        Format::Text => "text",
        Format::Dot => "dot",
    };
    usage(format!("{cmd} does not support --format {name}"))
}

fn report_text(r: &InvariantReport) -> String {
    let mut s = String::new();
    let pts = |v: &[lrefl::lattice::Point2]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
    let _ = writeln!(s, "ell {}  nu {}", r.ell, r.nu);
    let _ = writeln!(s, "vertices       {}", pts(&r.vertices));
    let _ = writeln!(s, "dual vertices  {}", pts(&r.dual_vertices));
    let _ = writeln!(s, "boundary       {} + {} = {}", r.boundary_Q, r.boundary_Qstar, r.boundary_Q + r.boundary_Qstar);
    let _ = writeln!(s, "twice area     {} / {}", r.area2_Q, r.area2_Qstar);
    for (e, t) in r.edges.iter().zip(&r.triples) {
        let _ = writeln!(
            s,
            "cone {}{}  type ({},{})  socius {}  hj {:?}  r {}",
            e.from, e.to, e.cone.p, e.cone.q, e.cone.socius, e.hj, t.r
        );
    }
    let dual: Vec<String> = r.dual_cones.iter().map(|c| format!("({},{})", c.p, c.q)).collect();
    let _ = writeln!(s, "dual types     {}", dual.join(" "));
    let _ = writeln!(s, "e smooth       {} (dual {})", r.e_smooth, r.e_smooth_dual);
    let _ = writeln!(s, "K2 smooth      {} (dual {})", r.K2_smooth, r.K2_smooth_dual);
    let _ = writeln!(s, "K2 singular    {}", rat_string(&r.K2_singular));
    let _ = writeln!(s, "char diffs     {} {}", r.char_diff_Qstar, r.char_diff_Q);
    let _ = writeln!(s, "genus          {}  tmp {}", r.genus, r.tmp);
    let _ = writeln!(s, "cover          j={} k={}", r.cover.j, r.cover.k);
    for (name, check) in &r.identities_ok {
        let _ = writeln!(s, "check {name:<28} {}", serde_json::to_string(check).expect("serializable"));
    }
    s
}

fn classes_text(t: &ClassTable) -> String {
    let mut s = format!("ell {}: {} classes\n", t.ell, t.classes.len());
    for c in &t.classes {
        let v: Vec<String> = c.vertices.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(
            s,
            "nu {} boundary ({},{}) genus {} tmp {} j {} k {}  {}",
            c.nu, c.boundary[0], c.boundary[1], c.genus, c.tmp, c.cover.j, c.cover.k, v.join(" ")
        );
    }
    s
}

fn rows_text(rows: &[CountRow]) -> String {
    let mut s = String::from("ell   nu=3   nu=4   nu=5   nu=6  total  genus\n");
    for r in rows {
        let g = r.genus.map_or("-".to_string(), |g| g.to_string());
        let _ = writeln!(
            s,
            "{:<5} {:>5} {:>6} {:>6} {:>6} {:>6} {:>6}",
            r.ell, r.by_nu[0], r.by_nu[1], r.by_nu[2], r.by_nu[3], r.total, g
        );
    }
    s
}

fn positive(name: &str, v: i64) -> Result<i64, Failure> {
    if v < 1 {
        return Err(usage(format!("--{name} must be at least 1, got {v}")));
    }
    Ok(v)
}

/// Returns the output text and whether every check passed.
fn run(cmd: &Command) -> Result<(String, bool), Failure> {
    match cmd {
        Command::Analyze { input, format, .. } => {
            let q = read_polygon(input)?;
            let r = invariant_report(&q)?;
            let out = match format {
                Format::Json => to_json(&r),
                Format::Text => report_text(&r),
                f => return Err(unsupported("analyze", *f)),
            };
            Ok((out, r.all_ok()))
        }
        Command::Classify { ell, format, .. } => {
            let t = enumerate_l_reflexive(positive("ell", *ell)?);
            match format {
                Format::Json => Ok((to_json(&t), true)),
                Format::Text => Ok((classes_text(&t), true)),
                f => Err(unsupported("classify", *f)),
            }
        }
        Command::Tables { max_ell, tmp, format, .. } => {
            let m = positive("max-ell", *max_ell)?;
            let rows = if *tmp { tmp_counts(m) } else { rp_counts(m) };
            match format {
                Format::Json => Ok((to_json(&json!({ "rows": rows, "tmp": tmp })), true)),
                Format::Text => Ok((rows_text(&rows), true)),
                f => Err(unsupported("tables", *f)),
            }
        }
        Command::Graph { input, format, .. } => {
            let g = wve2c_graph(&read_polygon(input)?)?;
            match format {
                Format::Dot => Ok((g.to_dot(), true)),
                Format::Json => Ok((to_json(&g), true)),
                f => Err(unsupported("graph", *f)),
            }
        }
        Command::Family { name, ell, format, .. } => {
            let family: Family = name.parse()?;
            let q = family_polygon(family, *ell)?;
            let (genus, tmp) = sectional_genus(&q)?;
            let value: Value = json!({
                "boundary": [boundary_count(&q), boundary_count(&dual(&q)?)],
                "ell": ell,
                "family": family.to_string(),
                "genus": genus,
                "tmp": tmp,
                "vertices": q.vertices(),
            });
            match format {
                Format::Json => Ok((to_json(&value), true)),
                Format::Text => Ok((format!("{q}\n"), true)),
                f => Err(unsupported("family", *f)),
            }
        }
    }
}

fn output_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Analyze { output, .. }
        | Command::Classify { output, .. }
        | Command::Tables { output, .. }
        | Command::Graph { output, .. }
        | Command::Family { output, .. } => output.as_ref(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, ok) = match run(&cli.command) {
        Ok(v) => v,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    match output_path(&cli.command) {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: an identity check failed");
        ExitCode::from(1)
    }
}
