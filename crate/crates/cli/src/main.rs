//! `lee` — command-line front end for the exact Lee-ball invariants, the
//! Q-polynomial expansions, and the non-existence certificates.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lee_core::criteria::{
    general_tiling_criterion, pk_condition, reproduce, residue_scan, zg_classify, zg_members,
    zhang_ge_condition, ReproCase, Verdict,
};
use lee_core::leeball::{
    delta3, enumerate_ball_capped, lee_ball_size, p1, polynomial_in_n, regularity_report,
    scaled_size_polynomial_in_e, Norm, PointSet, Quantity, DEFAULT_MAX_POINTS,
};
use lee_core::partitions::IntPartition;
use lee_core::qpoly::{lee_moment_sum, pk_lee, q_expansion};

#[derive(Parser)]
#[command(name = "lee", version, about = "Exact Lee-ball invariants and non-existence certificates")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on the number of enumerated points.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_POINTS)]
    max_points: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// The Lee ball size k(n,e).
    BallSize {
        #[arg(short)]
        n: i64,
        #[arg(short)]
        e: i64,
    },
    /// n!·k(n,e) as an integer polynomial in e.
    BallPolyE {
        #[arg(short)]
        n: u32,
    },
    /// A Lee-ball quantity as a scaled integer polynomial in n.
    PolyN {
        #[arg(short, value_parser = parse_quantity)]
        q: Quantity,
        #[arg(short)]
        e: u32,
    },
    /// The first moment p(n,e).
    P1 {
        #[arg(short)]
        n: i64,
        #[arg(short)]
        e: i64,
    },
    /// The k-th main coefficient p_k(n,e).
    Pk {
        #[arg(short)]
        k: u64,
        #[arg(short)]
        n: i64,
        #[arg(short)]
        e: i64,
    },
    /// The Lee-ball moment for an exponent partition j.
    Moment {
        #[arg(short)]
        n: i64,
        #[arg(short)]
        e: i64,
        /// Comma-separated non-increasing positive parts, e.g. 2,1.
        #[arg(short)]
        j: String,
    },
    /// Enumerate an ℓ_p ball, one point per line.
    Enumerate {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        e: u32,
        /// Norm exponent (1, 2, ...) or "inf".
        #[arg(long, default_value = "1", value_parser = parse_norm)]
        norm: Norm,
    },
    /// Power-sum expansion of the order-k Q-polynomial.
    Qpoly {
        #[arg(short)]
        k: u64,
        /// Use the Lee ball B^N(E).
        #[arg(long, num_args = 2, value_names = ["N", "E"], conflicts_with = "points")]
        lee: Option<Vec<u32>>,
        /// Read the point set from a file (one vector per line).
        #[arg(long)]
        points: Option<String>,
    },
    /// Zhang-Ge non-existence check at (n,e).
    ZgCheck {
        #[arg(short)]
        n: i64,
        #[arg(short)]
        e: i64,
    },
    /// All dimensions up to a bound satisfying the Zhang-Ge condition.
    ZgScan {
        #[arg(short)]
        e: i64,
        #[arg(long)]
        max: i64,
    },
    /// Classify the Zhang-Ge set of a radius as empty or infinite.
    Classify {
        #[arg(short)]
        e: u64,
    },
    /// The general p-condition at (n,e) for an odd prime p.
    PCondition {
        #[arg(short)]
        n: i64,
        #[arg(short)]
        e: i64,
        #[arg(short)]
        p: u64,
    },
    /// Lattice-tiling non-existence check for a point-set file.
    TilingCheck {
        #[arg(long)]
        points: String,
        #[arg(short)]
        p: u64,
    },
    /// Dimension residues modulo M satisfying the p-condition.
    Scan {
        #[arg(short)]
        e: i64,
        #[arg(short)]
        p: u64,
        #[arg(long)]
        modulus: u64,
    },
    /// The base-3 digit invariant of e.
    Delta3 {
        #[arg(short)]
        e: u64,
    },
    /// Re-run a tabulated computation and check every claim.
    Reproduce {
        /// prop5..prop8, lemma7, example5, prop16, prop17, or all.
        case: String,
    },
}

fn parse_quantity(s: &str) -> Result<Quantity, String> {
    match s {
        "k" => Ok(Quantity::K),
        "p1" => Ok(Quantity::P1),
        "p2" => Ok(Quantity::P2),
        other => Err(format!("expected k, p1 or p2, got {other:?}")),
    }
}

fn parse_norm(s: &str) -> Result<Norm, String> {
    if s == "inf" || s == "infinity" {
        return Ok(Norm::Inf);
    }
    match s.parse::<u32>() {
        Ok(p) if p >= 1 => Ok(Norm::L(p)),
        _ => Err(format!("expected a positive integer or \"inf\", got {s:?}")),
    }
}

#[derive(PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    ValueOnly,
}

impl Status {
    fn name(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ValueOnly => "value-only",
        }
    }
}

struct Outcome {
    command: &'static str,
    inputs: serde_json::Map<String, Value>,
    results: Value,
    text: String,
    status: Status,
}

fn verdict_status(v: Verdict) -> Status {
    match v {
        Verdict::NonExistence => Status::Pass,
        Verdict::Inconclusive => Status::Fail,
    }
}

fn load_points(path: &str) -> lee_core::Result<PointSet> {
    let text = fs::read_to_string(path)
        .map_err(|e| lee_core::Error::Parse(format!("{path}: {e}")))?;
    PointSet::from_lines(&text)
}

fn run(cli: &Cli) -> lee_core::Result<Outcome> {
    let mut inputs = serde_json::Map::new();
    Ok(match &cli.command {
        Command::BallSize { n, e } => {
            inputs.insert("n".into(), (*n).into());
            inputs.insert("e".into(), (*e).into());
            let v = lee_ball_size(*n, *e);
            Outcome {
                command: "ball-size",
                inputs,
                results: json!({ "value": v.to_string() }),
                text: v.to_string(),
                status: Status::ValueOnly,
            }
        }
        Command::BallPolyE { n } => {
            inputs.insert("n".into(), (*n).into());
            let poly = scaled_size_polynomial_in_e(*n);
            let scale = lee_core::exactarith::factorial(*n as u64);
            Outcome {
                command: "ball-poly-e",
                inputs,
                results: json!({ "scale": scale.to_string(), "coefficients": poly.to_json() }),
                text: format!("{scale}*k({n},e) = {poly}"),
                status: Status::ValueOnly,
            }
        }
        Command::PolyN { q, e } => {
            inputs.insert("q".into(), q.name().into());
            inputs.insert("e".into(), (*e).into());
            let (scale, poly) = polynomial_in_n(*q, *e)?;
            Outcome {
                command: "poly-n",
                inputs,
                results: json!({ "scale": scale.to_string(), "coefficients": poly.to_json() }),
                text: format!("{scale}*{}(n,{e}) = {poly}", q.name()),
                status: Status::ValueOnly,
            }
        }
        Command::P1 { n, e } => {
            inputs.insert("n".into(), (*n).into());
            inputs.insert("e".into(), (*e).into());
            let v = p1(*n, *e);
            Outcome {
                command: "p1",
                inputs,
                results: json!({ "value": v.to_string() }),
                text: v.to_string(),
                status: Status::ValueOnly,
            }
        }
        Command::Pk { k, n, e } => {
            inputs.insert("k".into(), (*k).into());
            inputs.insert("n".into(), (*n).into());
            inputs.insert("e".into(), (*e).into());
            let v = pk_lee(*k, *n, *e)?;
            Outcome {
                command: "pk",
                inputs,
                results: json!({ "value": v.to_string() }),
                text: v.to_string(),
                status: Status::ValueOnly,
            }
        }
        Command::Moment { n, e, j } => {
            inputs.insert("n".into(), (*n).into());
            inputs.insert("e".into(), (*e).into());
            inputs.insert("j".into(), j.clone().into());
            let part = IntPartition::parse(j)?;
            let v = lee_moment_sum(*n, *e, &part);
            Outcome {
                command: "moment",
                inputs,
                results: json!({ "value": v.to_string() }),
                text: v.to_string(),
                status: Status::ValueOnly,
            }
        }
        Command::Enumerate { n, e, norm } => {
            inputs.insert("n".into(), (*n).into());
            inputs.insert("e".into(), (*e).into());
            inputs.insert("norm".into(), norm.to_string().into());
            let set = enumerate_ball_capped(*n, *e, *norm, cli.max_points)?;
            Outcome {
                command: "enumerate",
                inputs,
                results: json!({
                    "dimension": set.dim(),
                    "count": set.len(),
                    "points": set.to_json(),
                }),
                text: set.to_lines().trim_end().to_string(),
                status: Status::ValueOnly,
            }
        }
        Command::Qpoly { k, lee, points } => {
            inputs.insert("k".into(), (*k).into());
            let set = match (lee, points) {
                (Some(ne), None) => {
                    inputs.insert("n".into(), ne[0].into());
                    inputs.insert("e".into(), ne[1].into());
                    enumerate_ball_capped(ne[0], ne[1], Norm::L(1), cli.max_points)?
                }
                (None, Some(path)) => {
                    inputs.insert("points".into(), path.clone().into());
                    load_points(path)?
                }
                _ => {
                    return Err(lee_core::Error::InvalidArgument(
                        "exactly one of --lee and --points is required".into(),
                    ))
                }
            };
            let q = q_expansion(*k, &set)?;
            Outcome {
                command: "qpoly",
                inputs,
                results: q.to_json(),
                text: q.to_text(),
                status: Status::ValueOnly,
            }
        }
        Command::ZgCheck { n, e } => {
            inputs.insert("n".into(), (*n).into());
            inputs.insert("e".into(), (*e).into());
            let cert = zhang_ge_condition(*n, *e);
            Outcome {
                command: "zg-check",
                inputs,
                results: cert.to_json(),
                text: cert.to_string(),
                status: verdict_status(cert.verdict),
            }
        }
        Command::ZgScan { e, max } => {
            inputs.insert("e".into(), (*e).into());
            inputs.insert("max".into(), (*max).into());
            let members = zg_members(*e, *max);
            let list: Vec<String> = members.iter().map(|n| n.to_string()).collect();
            Outcome {
                command: "zg-scan",
                inputs,
                results: json!({ "members": members }),
                text: format!("ZG({e}) up to {max}: {{{}}}", list.join(", ")),
                status: Status::ValueOnly,
            }
        }
        Command::Classify { e } => {
            inputs.insert("e".into(), (*e).into());
            let c = zg_classify(*e)?;
            Outcome {
                command: "classify",
                inputs,
                results: c.to_json(),
                text: c.to_string(),
                status: Status::ValueOnly,
            }
        }
        Command::PCondition { n, e, p } => {
            inputs.insert("n".into(), (*n).into());
            inputs.insert("e".into(), (*e).into());
            inputs.insert("p".into(), (*p).into());
            let cert = pk_condition(*n, *e, *p)?;
            Outcome {
                command: "p-condition",
                inputs,
                results: cert.to_json(),
                text: cert.to_string(),
                status: verdict_status(cert.verdict),
            }
        }
        Command::TilingCheck { points, p } => {
            inputs.insert("points".into(), points.clone().into());
            inputs.insert("p".into(), (*p).into());
            let set = load_points(points)?;
            let rep = regularity_report(&set);
            let cert = general_tiling_criterion(&set, *p)?;
            let mut results = cert.to_json();
            if let Value::Object(map) = &mut results {
                map.insert("e_regularity".into(), rep.e_regularity.into());
            }
            Outcome {
                command: "tiling-check",
                inputs,
                results,
                text: cert.to_string(),
                status: verdict_status(cert.verdict),
            }
        }
        Command::Scan { e, p, modulus } => {
            inputs.insert("e".into(), (*e).into());
            inputs.insert("p".into(), (*p).into());
            inputs.insert("modulus".into(), (*modulus).into());
            let hits = residue_scan(*e, *p, *modulus)?;
            let list: Vec<String> = hits.iter().map(|r| r.to_string()).collect();
            Outcome {
                command: "scan",
                inputs,
                results: json!({ "residues": hits.iter().collect::<Vec<_>>() }),
                text: format!("residues mod {modulus}: {{{}}}", list.join(", ")),
                status: Status::ValueOnly,
            }
        }
        Command::Delta3 { e } => {
            inputs.insert("e".into(), (*e).into());
            let d = delta3(*e)?;
            Outcome {
                command: "delta3",
                inputs,
                results: json!({ "value": d.to_string() }),
                text: format!("delta3({e}) = {d}"),
                status: Status::ValueOnly,
            }
        }
        Command::Reproduce { case } => {
            inputs.insert("case".into(), case.clone().into());
            let cases: Vec<ReproCase> = if case == "all" {
                ReproCase::ALL.to_vec()
            } else {
                vec![ReproCase::parse(case)?]
            };
            let reports: Vec<_> = cases.into_iter().map(reproduce).collect();
            let pass = reports.iter().all(|r| r.pass());
            let text: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
            Outcome {
                command: "reproduce",
                inputs,
                results: json!({
                    "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                }),
                text: text.join("\n"),
                status: if pass { Status::Pass } else { Status::Fail },
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(outcome) => {
            match cli.format {
                Format::Text => println!("{}", outcome.text),
                Format::Json => {
                    let mut report = serde_json::Map::new();
                    report.insert("command".into(), outcome.command.into());
                    report.insert("inputs".into(), Value::Object(outcome.inputs));
                    report.insert("results".into(), outcome.results);
                    report.insert("status".into(), outcome.status.name().into());
                    println!("{}", Value::Object(report));
                }
            }
            eprintln!("elapsed: {:?}", start.elapsed());
            if outcome.status == Status::Fail {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
