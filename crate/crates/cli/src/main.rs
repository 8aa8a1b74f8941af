//! `eqcoh`: batch front end for presentations, Hilbert data, fibers,
//! conjugators and moment graphs.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eqcoh::charts::ChartDescriptor;
use eqcoh::field::parse_rational;
use eqcoh::gkm::{collision_graph, is_gkm_class, localize_presentation};
use eqcoh::liealg::{solve_kostant_conjugator, solve_unipotent_conjugator, KostantSection, TorusElement};
use eqcoh::polyalg::{format_t_poly, HilbertSeries};
use eqcoh::zeroscheme::{
    build_report, components_over_regular, present, solve_fiber, zero_scheme_ideal, FamilyKind, MatrixFamily,
    ReportOptions, Strategy, ZeroSchemeIdeal,
};
use eqcoh::{Error, QMatrix, Rational};

#[derive(Parser)]
#[command(name = "eqcoh", version, about = "Equivariant cohomology rings as coordinate rings of zero schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Job {
    /// Variety: pn:N, gr:K,N, flag:N, flag:D1,..,Dm@N, bs:I1,..,Il@slN.
    #[arg(long)]
    variety: String,
    /// Family: borel:slN, kostant:slN, psl2-borel:N, psl2-kostant:N.
    #[arg(long)]
    group: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Print with v -> -v applied to the torus parameters.
    #[arg(long = "paper-sign")]
    flip_sign: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Eliminated presentation of the zero scheme.
    Present {
        #[command(flatten)]
        job: Job,
        #[arg(long, default_value = "auto")]
        strategy: String,
        /// Include the fixed-point components (torus families only).
        #[arg(long)]
        components: bool,
    },
    /// Hilbert series, numerator over the parameters, and rank.
    Hilbert {
        #[command(flatten)]
        job: Job,
    },
    /// Length of the fiber over a parameter value.
    Fiber {
        #[command(flatten)]
        job: Job,
        /// Comma-separated rational parameter values.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Also list the (rational) points of the fiber.
        #[arg(long)]
        points: bool,
    },
    /// Components of the zero scheme over the regular torus.
    Components {
        #[command(flatten)]
        job: Job,
    },
    /// Conjugator A(w) of e + w into the Kostant slice.
    KostantConj {
        /// Matrix size.
        #[arg(long)]
        n: usize,
        /// Torus coordinates v1,..,v_{n-1}.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Unipotent M_w with M_w w M_w^{-1} = e + w.
    UnifConj {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Moment graph from component collisions, with the edge check of every
    /// cell coordinate.
    Gkm {
        #[command(flatten)]
        job: Job,
    },
    /// Run the acceptance suite.
    Golden {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// A failure with its exit status, and any output produced before it.
struct Failure {
    code: u8,
    msg: String,
    output: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let usage = matches!(
            e,
            Error::Grammar { .. }
                | Error::Parse { .. }
                | Error::UnknownVariable(_)
                | Error::SizeMismatch { .. }
                | Error::BadRootIndex { .. }
                | Error::DuplicateVariable(_)
        );
        Failure { code: if usage { 1 } else { 2 }, msg: e.to_string(), output: None }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 1, msg: msg.into(), output: None }
}

fn assertion(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into(), output: None }
}

fn parse_values(s: &str) -> Result<Vec<Rational>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| parse_rational(x.trim()).ok_or_else(|| usage(format!("`{x}` is not a rational number"))))
        .collect()
}

fn load(job: &Job) -> Result<ZeroSchemeIdeal, Failure> {
    let chart = ChartDescriptor::parse(&job.variety)?;
    let family: MatrixFamily = job.group.parse()?;
    if chart.ambient() != family.n {
        return Err(usage(format!(
            "{} acts through sl{}, but {} is in sl{}",
            job.variety,
            chart.ambient(),
            job.group,
            family.n
        )));
    }
    if chart.is_bott_samelson() && family.kind != FamilyKind::BorelTorus {
        return Err(usage(format!("Bott-Samelson varieties take a borel:slN family, not {}", job.group)));
    }
    let ideal = zero_scheme_ideal(&chart, &family)?;
    ideal.homogeneity_report().map_err(|e| assertion(format!("homogeneity of the zero-scheme generators: {e}")))?;
    Ok(ideal)
}

fn matrix_json(m: &QMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(|c| json!(c.to_string())).collect())).collect())
}

fn emit(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("JSON values serialize"),
    }
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Present { job, strategy, components } => {
            let ideal = load(&job)?;
            let strategy: Strategy = strategy.parse()?;
            let report = build_report(&ideal, ReportOptions { strategy, flip_sign: job.flip_sign, components })?;
            let value = serde_json::to_value(&report).expect("reports serialize");
            Ok(emit(job.format, report.to_string(), value))
        }
        Command::Hilbert { job } => {
            let ideal = load(&job)?;
            let pres = present(&ideal, Strategy::Auto)?;
            let num = pres.hilbert_numerator()?;
            let weights: Vec<u32> = pres.params().iter().map(|&p| pres.ctx.weight(p)).collect();
            let hs = HilbertSeries::new(num.clone(), weights);
            let rank = pres.rank()?;
            let text = format!("series: {hs}\nnumerator: {}\nrank: {rank}", format_t_poly(&num));
            let value = json!({ "series": hs, "hilbert_numerator": num, "rank": rank });
            Ok(emit(job.format, text, value))
        }
        Command::Fiber { job, at, points } => {
            let ideal = load(&job)?;
            let values = parse_values(&at)?;
            let dim = ideal.fiber_dimension(&values)?;
            let mut text = format!("dim = {dim}");
            let mut value = json!({ "at": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(), "dim": dim });
            if points {
                let sol = solve_fiber(&ideal, &values)?;
                let pts: Vec<Value> = sol
                    .points
                    .iter()
                    .map(|p| Value::Object(p.iter().map(|(k, v)| (k.clone(), json!(v.to_string()))).collect()))
                    .collect();
                for p in &sol.points {
                    let parts: Vec<String> = p.iter().map(|(k, v)| format!("{k} = {v}")).collect();
                    text += &format!("\n  {}", parts.join(", "));
                }
                value["points"] = Value::Array(pts);
            }
            Ok(emit(job.format, text, value))
        }
        Command::Components { job } => {
            let ideal = load(&job)?;
            let comps = components_over_regular(&ideal)?;
            let mut lines = Vec::new();
            let mut arr = Vec::new();
            for c in &comps {
                let vals: Vec<(String, String)> = c
                    .values
                    .iter()
                    .map(|(k, p)| {
                        let p = if job.flip_sign { ideal.flip_sign(p) } else { p.clone() };
                        (k.clone(), p.to_string())
                    })
                    .collect();
                let label = c.label.as_ref().map(|l| l.iter().map(|i| i.to_string()).collect::<String>());
                let parts: Vec<String> = vals.iter().map(|(k, v)| format!("{k} = {v}")).collect();
                lines.push(match &label {
                    Some(l) => format!("[{l}] {}", parts.join(", ")),
                    None => parts.join(", "),
                });
                let mut obj = serde_json::Map::new();
                obj.insert("label".into(), json!(label));
                obj.insert("values".into(), Value::Object(vals.into_iter().map(|(k, v)| (k, json!(v))).collect()));
                arr.push(Value::Object(obj));
            }
            Ok(emit(job.format, lines.join("\n"), Value::Array(arr)))
        }
        Command::KostantConj { n, at, format } => {
            let w = torus(n, &at)?;
            let kc = solve_kostant_conjugator(&w, &KostantSection::new(n))?;
            let coords: Vec<String> = kc.coords.iter().map(|c| c.to_string()).collect();
            let names: Vec<String> = (2..=n).map(|k| format!("c{k}")).collect();
            let text = format!(
                "A = {}\nchi = {}\n{}",
                kc.a,
                kc.chi,
                names.iter().zip(&coords).map(|(n, c)| format!("{n} = {c}")).collect::<Vec<_>>().join(", ")
            );
            let value = json!({ "a": matrix_json(&kc.a), "chi": matrix_json(&kc.chi), "coords": coords });
            Ok(emit(format, text, value))
        }
        Command::UnifConj { n, at, format } => {
            let w = torus(n, &at)?;
            let m = solve_unipotent_conjugator(&w)?;
            Ok(emit(format, format!("M = {m}"), json!({ "m": matrix_json(&m) })))
        }
        Command::Gkm { job } => {
            let ideal = load(&job)?;
            let graph = collision_graph(&ideal)?;
            let mut lines = vec![format!("vertices: {}", graph.vertices.join(" "))];
            for e in &graph.edges {
                lines.push(format!("edge {} - {}: {}", graph.vertices[e.i], graph.vertices[e.j], e.form));
            }
            let mut checks = serde_json::Map::new();
            let mut all = true;
            for c in &ideal.chart.cell_coords {
                let (_, class) = localize_presentation(&ideal, c)?;
                let chk = is_gkm_class(&graph, &class)?;
                all &= chk.pass;
                let vals: Vec<String> = class.values.iter().map(|p| p.to_string()).collect();
                lines.push(format!("{c}: ({}) {}", vals.join(", "), if chk.pass { "ok" } else { "FAILS" }));
                checks.insert(c.clone(), json!({ "values": vals, "pass": chk.pass, "failing": chk.failing }));
            }
            let value = json!({ "graph": graph, "classes": checks });
            let out = emit(job.format, lines.join("\n"), value);
            if all {
                Ok(out)
            } else {
                Err(Failure { output: Some(out), ..assertion("edge congruences fail") })
            }
        }
        Command::Golden { format } => {
            let results = eqcoh::golden::run_all();
            let text = results.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            let value = Value::Array(
                results
                    .iter()
                    .map(|r| json!({ "id": r.id, "name": r.name, "pass": r.pass, "detail": r.detail }))
                    .collect(),
            );
            let out = emit(format, text, value);
            if results.iter().all(|r| r.pass) {
                Ok(out)
            } else {
                let failed = results.iter().filter(|r| !r.pass).count();
                Err(Failure { output: Some(out), ..assertion(format!("{failed} criteria failed")) })
            }
        }
    }
}

fn torus(n: usize, at: &str) -> Result<TorusElement<Rational>, Failure> {
    let v = parse_values(at)?;
    if n < 2 || v.len() != n - 1 {
        return Err(usage(format!(
            "need n >= 2 and n - 1 = {} torus coordinates, got {}",
            n.saturating_sub(1),
            v.len()
        )));
    }
    Ok(TorusElement::new(v)?)
}

/// Writes to stdout, ignoring a closed pipe.
fn print_out(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print_out(&out);
            ExitCode::SUCCESS
        }
        Err(Failure { code, msg, output }) => {
            if let Some(out) = output {
                print_out(&out);
            }
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
