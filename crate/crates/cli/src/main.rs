//! Command-line surface: run any computation or verification and emit a
//! deterministic report, as JSON with `--json` or as plain text otherwise.
//!
//! Exit codes: 0 on success or a passing verification, 1 on a verification
//! failure, 2 on usage errors (including invalid domain inputs).

mod report;
mod verify;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_rational::Rational64;
use serde_json::{json, Value};

use report::{
    bigint_value, decomposition_value, lascoux_terms_value, qpoly_value, weight_value, Report,
    Verdict, SCHEMA_VERSION,
};
use window_calculus::bwb::{bwb, BwbResult, GrWeight};
use window_calculus::lascoux::{boundary_contributions, resolution_terms};
use window_calculus::rickard::{
    betti, cancellation_matching, copies_of_term, poincare_centered, term_catalog, BettiCopy,
};
use window_calculus::tensorcalc::{decompose_wedge_gl, lr_coefficients};
use window_calculus::weights::DominantWeight;
use window_calculus::windows::{magic_generators, window_interval, WindowSpec};

#[derive(Parser)]
#[command(
    name = "window-calculus",
    version,
    about = "Exact computations with weight windows, Schur calculus, and graded term catalogs"
)]
struct Cli {
    /// Emit the report as a single JSON object on stdout
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The width-N half-open weight window centered at a generic rational delta
    Window {
        #[arg(long = "N")]
        width: usize,
        /// Rational parameter, e.g. 1/4 or -3/2
        #[arg(long)]
        delta: String,
    },
    /// Dominant generators of a window, from --lo/--hi or --N/--delta
    Generators {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lo: Option<i64>,
        #[arg(long)]
        hi: Option<i64>,
        #[arg(long = "N")]
        width: Option<usize>,
        #[arg(long)]
        delta: Option<String>,
    },
    /// Littlewood-Richardson decomposition of a tensor product
    Lr {
        #[arg(long)]
        k: usize,
        /// Comma-separated weakly decreasing entries, e.g. 1,0 or 2,-1
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Irreducible decomposition of the r-th wedge power of gl(k)
    WedgeGl {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: u64,
    },
    /// Cohomology of a Schur bundle on the Grassmannian Gr(a, b)
    Bwb {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Weight on the quotient bundle (length b-a), comma-separated
        #[arg(long, default_value = "")]
        quot: String,
        /// Weight on the subbundle (length a), comma-separated
        #[arg(long, default_value = "")]
        sub: String,
    },
    /// Centered Poincare polynomial of Gr(m, n)
    Poincare {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Number of partitions with at most i-l rows, l columns, and r boxes
    Betti {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        l: usize,
        /// Without --r, the whole coefficient row is reported
        #[arg(long)]
        r: Option<u64>,
    },
    /// Graded term catalog for rank k
    RickardCatalog {
        #[arg(long)]
        k: usize,
    },
    /// Cancellation matching of the copies at index i
    RickardCancel {
        #[arg(long)]
        i: usize,
    },
    /// Terms of the rank-stratum resolution over the quasi-symmetric model
    Lascoux {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: usize,
    },
    /// Verify that Schur functors with window weights stay in the window
    /// after tensoring with every wedge power of gl(k)
    VerifyCorInv {
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        ambient: usize,
        #[arg(long, default_value_t = 4)]
        r_max: u64,
    },
    /// Verify the [0, k] box property of the stratum resolutions
    VerifyLemResolni {
        #[arg(long, default_value_t = 3)]
        k_max: usize,
    },
    /// Verify that the [0, k) generators satisfy the grade restriction rule
    /// and that gamma ranges match the weight-multiset brute force
    VerifyGradeRestriction {
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[arg(long, default_value_t = 3)]
        brute_force_k_max: usize,
    },
    /// Verify that every contracted pushforward weight lies in [0, N)
    VerifyEqLas {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long = "N", num_args = 1.., default_values_t = [4usize, 5])]
        ambients: Vec<usize>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Window { .. } => "window",
            Command::Generators { .. } => "generators",
            Command::Lr { .. } => "lr",
            Command::WedgeGl { .. } => "wedge-gl",
            Command::Bwb { .. } => "bwb",
            Command::Poincare { .. } => "poincare",
            Command::Betti { .. } => "betti",
            Command::RickardCatalog { .. } => "rickard-catalog",
            Command::RickardCancel { .. } => "rickard-cancel",
            Command::Lascoux { .. } => "lascoux",
            Command::VerifyCorInv { .. } => "verify-cor-inv",
            Command::VerifyLemResolni { .. } => "verify-lem-resolni",
            Command::VerifyGradeRestriction { .. } => "verify-grade-restriction",
            Command::VerifyEqLas { .. } => "verify-eq-las",
        }
    }
}

fn parse_weight(s: &str, rank: usize, what: &str) -> Result<DominantWeight, String> {
    let trimmed = s.trim();
    let entries: Vec<i64> = if trimmed.is_empty() {
        Vec::new()
    } else {
        trimmed
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|e| format!("{what}: {e}")))
            .collect::<Result<_, _>>()?
    };
    if entries.len() != rank {
        return Err(format!(
            "{what} has {} entries, expected {rank}",
            entries.len()
        ));
    }
    DominantWeight::new(entries).map_err(|e| format!("{what}: {e}"))
}

fn parse_delta(s: &str) -> Result<Rational64, String> {
    Rational64::from_str(s.trim()).map_err(|e| format!("delta: {e}"))
}

fn copy_value(c: &BettiCopy) -> Value {
    json!({
        "l": c.l,
        "lambda": c.lambda.parts(),
        "boxes": c.boxes,
        "degree": c.total_degree,
    })
}

fn window_value(w: &WindowSpec) -> Value {
    json!({
        "lo": w.lo(),
        "hi": w.hi(),
        "width": w.width(),
    })
}

/// Runs one command; returns (parameters, results, verdict) or a usage-level
/// error message.
fn run(command: &Command) -> Result<(BTreeMap<String, Value>, Value, Verdict), String> {
    let mut params = BTreeMap::new();
    match command {
        Command::Window { width, delta } => {
            params.insert("N".into(), json!(width));
            params.insert("delta".into(), json!(delta));
            let d = parse_delta(delta)?;
            let win = window_interval(*width, d).map_err(|e| e.to_string())?;
            Ok((params, window_value(&win), Verdict::NotApplicable))
        }
        Command::Generators {
            k,
            lo,
            hi,
            width,
            delta,
        } => {
            params.insert("k".into(), json!(k));
            let win = match (lo, hi, width, delta) {
                (Some(lo), Some(hi), None, None) => {
                    params.insert("lo".into(), json!(lo));
                    params.insert("hi".into(), json!(hi));
                    WindowSpec::from_bounds(*lo, *hi).map_err(|e| e.to_string())?
                }
                (None, None, Some(width), Some(delta)) => {
                    params.insert("N".into(), json!(width));
                    params.insert("delta".into(), json!(delta));
                    let d = parse_delta(delta)?;
                    window_interval(*width, d).map_err(|e| e.to_string())?
                }
                _ => {
                    return Err("pass either --lo and --hi, or --N and --delta".to_string())
                }
            };
            let gens = magic_generators(*k, &win);
            let list: Vec<Value> = gens.iter().map(weight_value).collect();
            Ok((
                params,
                json!({
                    "window": window_value(&win),
                    "count": gens.len(),
                    "generators": list,
                }),
                Verdict::NotApplicable,
            ))
        }
        Command::Lr { k, lambda, mu } => {
            params.insert("k".into(), json!(k));
            params.insert("lambda".into(), json!(lambda));
            params.insert("mu".into(), json!(mu));
            let lam = parse_weight(lambda, *k, "lambda")?;
            let m = parse_weight(mu, *k, "mu")?;
            let d = lr_coefficients(&lam, &m, *k).map_err(|e| e.to_string())?;
            Ok((
                params,
                json!({ "terms": decomposition_value(&d) }),
                Verdict::NotApplicable,
            ))
        }
        Command::WedgeGl { k, r } => {
            params.insert("k".into(), json!(k));
            params.insert("r".into(), json!(r));
            let d = decompose_wedge_gl(*r, *k).map_err(|e| e.to_string())?;
            Ok((
                params,
                json!({ "terms": decomposition_value(&d) }),
                Verdict::NotApplicable,
            ))
        }
        Command::Bwb { a, b, quot, sub } => {
            params.insert("a".into(), json!(a));
            params.insert("b".into(), json!(b));
            params.insert("quot".into(), json!(quot));
            params.insert("sub".into(), json!(sub));
            if a > b {
                return Err(format!("need a <= b, got a={a} b={b}"));
            }
            let q = parse_weight(quot, b - a, "quot")?;
            let s = parse_weight(sub, *a, "sub")?;
            let gw = GrWeight::new(*a, *b, q, s).map_err(|e| e.to_string())?;
            let results = match bwb(&gw) {
                BwbResult::Zero => json!({ "zero": true }),
                BwbResult::Cohomology { degree, weight } => json!({
                    "zero": false,
                    "degree": degree,
                    "weight": weight_value(&weight),
                }),
            };
            Ok((params, results, Verdict::NotApplicable))
        }
        Command::Poincare { m, n } => {
            params.insert("m".into(), json!(m));
            params.insert("n".into(), json!(n));
            let p = poincare_centered(*m, *n).map_err(|e| e.to_string())?;
            Ok((
                params,
                json!({ "coefficients": qpoly_value(&p) }),
                Verdict::NotApplicable,
            ))
        }
        Command::Betti { i, l, r } => {
            params.insert("i".into(), json!(i));
            params.insert("l".into(), json!(l));
            if l > i {
                return Err(format!("need l <= i, got l={l} i={i}"));
            }
            let results = match r {
                Some(r) => {
                    params.insert("r".into(), json!(r));
                    json!({ "betti": betti(*i, *l, *r) })
                }
                None => {
                    let top = (l * (i - l)) as u64;
                    let row: Vec<u64> = (0..=top).map(|r| betti(*i, *l, r)).collect();
                    json!({ "row": row })
                }
            };
            Ok((params, results, Verdict::NotApplicable))
        }
        Command::RickardCatalog { k } => {
            params.insert("k".into(), json!(k));
            let terms: Vec<Value> = term_catalog(*k)
                .iter()
                .map(|t| {
                    json!({
                        "i": t.i,
                        "internalShift": t.internal_shift,
                        "supportRankBound": t.support_rank_bound,
                    })
                })
                .collect();
            Ok((params, json!({ "terms": terms }), Verdict::NotApplicable))
        }
        Command::RickardCancel { i } => {
            params.insert("i".into(), json!(i));
            if *i == 0 {
                return Err("need i >= 1".to_string());
            }
            let matching = cancellation_matching(*i).map_err(|e| e.to_string())?;
            let total: usize = (0..*i)
                .map(|l| copies_of_term(*i, l).map(|c| c.len()).unwrap_or(0))
                .sum();
            let pairs: Vec<Value> = matching
                .pairs
                .iter()
                .map(|(a, b)| json!({ "from": copy_value(a), "to": copy_value(b) }))
                .collect();
            Ok((
                params,
                json!({
                    "copies": total,
                    "pairs": matching.pairs.len(),
                    "pairList": pairs,
                    "leftover": copy_value(&matching.leftover),
                    "leftoverSplitDegree": matching.leftover_split_degree,
                }),
                Verdict::NotApplicable,
            ))
        }
        Command::Lascoux { k, i } => {
            params.insert("k".into(), json!(k));
            params.insert("i".into(), json!(i));
            let terms = resolution_terms(*k, *i).map_err(|e| e.to_string())?;
            let boundary: Vec<Value> = boundary_contributions(&terms, "V'", *k as i64)
                .iter()
                .map(|(index, c)| {
                    json!({
                        "homologicalIndex": index,
                        "lambda": weight_value(&c.weights["V'"]),
                        "internalDegree": c.internal_degree,
                        "multiplicity": bigint_value(&c.multiplicity),
                    })
                })
                .collect();
            Ok((
                params,
                json!({
                    "terms": lascoux_terms_value(&terms),
                    "needsWindowResolution": boundary,
                }),
                Verdict::NotApplicable,
            ))
        }
        Command::VerifyCorInv { k, ambient, r_max } => {
            params.insert("k".into(), json!(k));
            params.insert("N".into(), json!(ambient));
            params.insert("rMax".into(), json!(r_max));
            let outcome = verify::verify_window_invariance(*k, *ambient, *r_max)?;
            let verdict = if outcome.pass { Verdict::Pass } else { Verdict::Fail };
            Ok((params, outcome.results, verdict))
        }
        Command::VerifyLemResolni { k_max } => {
            params.insert("kMax".into(), json!(k_max));
            let outcome = verify::verify_resolution_box(*k_max)?;
            let verdict = if outcome.pass { Verdict::Pass } else { Verdict::Fail };
            Ok((params, outcome.results, verdict))
        }
        Command::VerifyGradeRestriction {
            k_max,
            brute_force_k_max,
        } => {
            params.insert("kMax".into(), json!(k_max));
            params.insert("bruteForceKMax".into(), json!(brute_force_k_max));
            let outcome = verify::verify_grade_restriction(*k_max, *brute_force_k_max)?;
            let verdict = if outcome.pass { Verdict::Pass } else { Verdict::Fail };
            Ok((params, outcome.results, verdict))
        }
        Command::VerifyEqLas { k, ambients } => {
            params.insert("k".into(), json!(k));
            params.insert("N".into(), json!(ambients));
            let outcome = verify::verify_pushforward_window(*k, ambients)?;
            let verdict = if outcome.pass { Verdict::Pass } else { Verdict::Fail };
            Ok((params, outcome.results, verdict))
        }
    }
}

/// Plain-text rendering of a JSON value as indented key/value lines.
fn render_plain(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        render_plain(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{key}: {v}\n")),
                }
            }
        }
        Value::Array(items) => {
            if items.iter().all(|v| !v.is_object() && !v.is_array()) {
                let joined: Vec<String> = items.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("{pad}[{}]\n", joined.join(", ")));
            } else {
                for v in items {
                    out.push_str(&format!("{pad}-\n"));
                    render_plain(v, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{other}\n")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = verify::thread_cap() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let started = Instant::now();
    match run(&cli.command) {
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!(
                "run `window-calculus {} --help` for usage",
                cli.command.name()
            );
            ExitCode::from(2)
        }
        Ok((parameters, results, pass)) => {
            let report = Report {
                schema_version: SCHEMA_VERSION,
                command: cli.command.name().to_string(),
                parameters,
                results,
                pass,
                elapsed_ms: started.elapsed().as_millis(),
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            } else {
                let mut text = String::new();
                text.push_str(&format!("command: {}\n", report.command));
                if !report.parameters.is_empty() {
                    let args: Vec<String> = report
                        .parameters
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    text.push_str(&format!("parameters: {}\n", args.join(" ")));
                }
                render_plain(&report.results, 0, &mut text);
                let verdict = match report.pass {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "fail",
                    Verdict::NotApplicable => "n/a",
                };
                text.push_str(&format!("pass: {verdict} ({} ms)\n", report.elapsed_ms));
                print!("{text}");
            }
            match report.pass {
                Verdict::Fail => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
    }
}
