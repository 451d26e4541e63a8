//! Command-line front end. `run` returns the rendered output so the binary only maps
//! errors to exit codes.

use crate::alexander::{
    alexander_chebyshev, alexander_fukuhara, alexander_from_riley, alexander_minkus, alexander_sigma,
    q_recursion_check, QReport, SymLaurent,
};
use crate::apoly::{a_polynomial_eps, APolyOptions, APolyResult, Strategy};
use crate::error::RileyError;
use crate::exactalg::{JsonPoly, Var};
use crate::knotspec::{census, epsilon_from_fraction, parse_knot_arg, EpsilonSeq, KnotArg};
use crate::numcheck::{verify_knot, Tolerances};
use crate::rileycore::{identity_suite, riley_recursive, IdentityReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(name = "riley", about = "Riley, Alexander and A-polynomials of two-bridge knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,
    /// Worker threads for census and verification (0 = rayon default).
    #[arg(long, env = "RILEY_THREADS", default_value_t = 0, global = true)]
    pub threads: usize,
    /// Report wall time.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct KnotOpts {
    /// "alpha/beta" or a +/- string.
    #[arg(long)]
    pub knot: Option<String>,
    /// Epsilon sequence as a +/- string.
    #[arg(long, allow_hyphen_values = true)]
    pub eps: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Riley polynomial f and its companion g.
    Riley(KnotOpts),
    /// Alexander polynomial, checked across all formulas.
    Alex(KnotOpts),
    /// A-polynomial.
    Apoly {
        #[command(flatten)]
        knot: KnotOpts,
        #[arg(long, value_enum, default_value_t = Strategy::Prs)]
        strategy: Strategy,
        #[arg(long)]
        squarefree: bool,
    },
    /// Numeric matrix check of every Riley root at random M0.
    Verify {
        #[command(flatten)]
        knot: KnotOpts,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// A-polynomials of every census knot as a table.
    Census {
        #[arg(long, default_value_t = 15)]
        max_alpha: u64,
        #[arg(long, value_enum, default_value_t = Strategy::Prs)]
        strategy: Strategy,
    },
    /// Identity suite and Alexander prefix checks over the census, or for one knot.
    Identities {
        #[arg(long, default_value_t = 15)]
        max_alpha: u64,
        #[command(flatten)]
        knot: KnotOpts,
    },
}

/// Rendered output and whether every check passed.
pub struct RunOutput {
    pub text: String,
    pub ok: bool,
}

fn usage(e: RileyError) -> RileyError {
    match e {
        RileyError::Usage(_) => e,
        other => RileyError::Usage(other.to_string()),
    }
}

fn knot_of(k: &KnotOpts) -> Result<KnotArg, RileyError> {
    match (&k.knot, &k.eps) {
        (Some(s), None) => parse_knot_arg(s).map_err(usage),
        (None, Some(s)) => Ok(KnotArg { fraction: None, eps: EpsilonSeq::parse(s).map_err(usage)? }),
        _ => Err(RileyError::Usage("give exactly one of --knot and --eps".into())),
    }
}

fn label(k: &KnotArg) -> String {
    k.fraction.map_or_else(|| k.eps.to_string(), |f| f.to_string())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn json_rows(tag: &str, j: &JsonPoly) -> Vec<Vec<String>> {
    j.terms
        .iter()
        .map(|t| vec![tag.into(), t.l.to_string(), t.m.to_string(), t.lam.to_string(), t.coeff.clone()])
        .collect()
}

pub fn run(cli: &Cli) -> Result<RunOutput, RileyError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| RileyError::Usage(e.to_string()))?;
    pool.install(|| dispatch(cli))
}

fn dispatch(cli: &Cli) -> Result<RunOutput, RileyError> {
    let start = Instant::now();
    let mut out = match &cli.command {
        Command::Riley(k) => riley_cmd(&knot_of(k)?, cli.output),
        Command::Alex(k) => alex_cmd(&knot_of(k)?, cli.output),
        Command::Apoly { knot, strategy, squarefree } => {
            let opts = APolyOptions { strategy: *strategy, squarefree: *squarefree };
            apoly_cmd(&knot_of(knot)?, opts, cli.output)
        }
        Command::Verify { knot, samples, seed } => verify_cmd(&knot_of(knot)?, *samples, *seed, cli.output),
        Command::Census { max_alpha, strategy } => census_cmd(*max_alpha, *strategy, cli.output),
        Command::Identities { max_alpha, knot } => {
            let one = if knot.knot.is_some() || knot.eps.is_some() { Some(knot_of(knot)?) } else { None };
            identities_cmd(*max_alpha, one, cli.output)
        }
    }?;
    if cli.timing {
        eprintln!("time_ms {}", start.elapsed().as_millis());
    }
    if !out.text.ends_with('\n') {
        out.text.push('\n');
    }
    Ok(out)
}

fn riley_cmd(k: &KnotArg, output: Output) -> Result<RunOutput, RileyError> {
    let pair = riley_recursive(&k.eps);
    let (f, g) = (pair.f.convert(Var::LTilde), pair.g.convert(Var::LTilde));
    let text = match output {
        Output::Text => format!("knot {}\neps {}\nf = {}\ng = {}", label(k), k.eps, f, g),
        Output::Json => to_json(&json!({
            "knot": label(k), "eps": k.eps.to_string(), "f": f.to_json(), "g": g.to_json(),
        })),
        Output::Csv => {
            let mut rows = json_rows("f", &f.to_json());
            rows.extend(json_rows("g", &g.to_json()));
            csv_table(&["poly", "L", "M", "lam", "coeff"], rows)
        }
    };
    Ok(RunOutput { text, ok: true })
}

fn alex_cmd(k: &KnotArg, output: Output) -> Result<RunOutput, RileyError> {
    let e = &k.eps;
    let routes: Vec<(&str, SymLaurent)> = vec![
        ("riley", alexander_from_riley(&riley_recursive(e))),
        ("sigma", alexander_sigma(e)),
        ("minkus", alexander_minkus(e)),
        ("chebyshev", alexander_chebyshev(&e.half())),
        ("fukuhara", alexander_fukuhara(e)?),
    ];
    let delta = &routes[0].1;
    let agree = routes.iter().all(|(_, d)| d == delta);
    let text = match output {
        Output::Text => {
            let mut s = format!("knot {}\nDelta = {}", label(k), delta);
            for (name, d) in &routes {
                s.push_str(&format!("\n  {name:<9} {}", if d == delta { "agrees" } else { "DIFFERS" }));
            }
            s
        }
        Output::Json => {
            let t = delta.to_t().unwrap_or_else(|| delta.poly.clone());
            let terms: Vec<_> = t.terms().map(|(e, a)| json!({"t": e, "coeff": a.to_string()})).collect();
            let by_route: serde_json::Map<_, _> =
                routes.iter().map(|(n, d)| (n.to_string(), json!(d.to_string()))).collect();
            to_json(&json!({
                "knot": label(k), "eps": e.to_string(), "delta": delta.to_string(),
                "terms": terms, "routes": by_route, "routes_agree": agree,
            }))
        }
        Output::Csv => csv_table(&["route", "delta"], routes.iter().map(|(n, d)| vec![n.to_string(), d.to_string()])),
    };
    Ok(RunOutput { text, ok: agree })
}

fn apoly_cmd(k: &KnotArg, opts: APolyOptions, output: Output) -> Result<RunOutput, RileyError> {
    let t = Instant::now();
    let r = a_polynomial_eps(&k.eps, opts)?;
    let ms = t.elapsed().as_millis();
    let text = match output {
        Output::Text => apoly_text(k, &r),
        Output::Json => to_json(&json!({
            "knot": label(k),
            "eps": k.eps.to_string(),
            "raw": r.raw.to_json(),
            "normalized": r.normalized.to_json(),
            "squarefree": r.squarefree.as_ref().map(|s| s.to_json()),
            "multiplicities": r.multiplicities.factors.iter()
                .map(|(f, m)| json!({"factor": f.to_json(), "multiplicity": m})).collect::<Vec<_>>(),
            "unit": {
                "content": r.unit_report.content.to_string(),
                "L_shift": r.unit_report.l_shift,
                "M_shift": r.unit_report.m_shift,
            },
            "abelian_factor": r.abelian_factor,
            "ms": ms,
        })),
        Output::Csv => {
            let mut rows = json_rows("normalized", &r.normalized.to_json());
            if let Some(s) = &r.squarefree {
                rows.extend(json_rows("squarefree", &s.to_json()));
            }
            csv_table(&["poly", "L", "M", "lam", "coeff"], rows)
        }
    };
    Ok(RunOutput { text, ok: true })
}

fn apoly_text(k: &KnotArg, r: &APolyResult) -> String {
    let mut s = format!("knot {}\nA = {}", label(k), r.normalized);
    if let Some(sq) = &r.squarefree {
        s.push_str(&format!("\nsquarefree = {sq}"));
        for (f, m) in &r.multiplicities.factors {
            s.push_str(&format!("\n  ({f})^{m}"));
        }
    }
    let u = &r.unit_report;
    s.push_str(&format!("\nraw = {} * L^{} * M^{} * A", u.content, u.l_shift, u.m_shift));
    if r.abelian_factor {
        s.push_str("\nnote: L - 1 divides A");
    }
    s
}

fn verify_cmd(k: &KnotArg, samples: usize, seed: u64, output: Output) -> Result<RunOutput, RileyError> {
    let a = a_polynomial_eps(&k.eps, APolyOptions::default())?.normalized;
    let rep = verify_knot(&k.eps, Some(&a), samples, seed, Tolerances::default())?;
    let text = match output {
        Output::Json => to_json(&rep),
        Output::Text | Output::Csv => {
            let rows = rep.samples.iter().map(|s| {
                vec![
                    format!("{}", s.root.m0),
                    format!("{}", s.root.lam_tilde0),
                    format!("{:.3e}", s.root.residual),
                    format!("{:.3e}", s.representation.relation),
                    format!("{:.3e}", s.longitude.lower_left.max(s.longitude.via_g).max(s.longitude.via_witness)),
                    format!("{:.3e}", s.apoly.unwrap_or(0.0)),
                ]
            });
            let table = csv_table(&["M0", "lambda_tilde0", "root", "relation", "longitude", "apoly"], rows);
            if output == Output::Csv {
                table
            } else {
                format!("knot {}\n{}{}", label(k), table, if rep.passed { "PASS" } else { "FAIL" })
            }
        }
    };
    Ok(RunOutput { text, ok: rep.passed })
}

/// One census row: alpha, beta, sigma, deg_L, deg_M, normalized polynomial, wall time.
pub fn census_rows(max_alpha: u64, strategy: Strategy) -> Result<Vec<Vec<String>>, RileyError> {
    census(max_alpha)
        .par_iter()
        .map(|entry| {
            let eps = epsilon_from_fraction(entry.fraction);
            let t = Instant::now();
            let r = a_polynomial_eps(&eps, APolyOptions { strategy, squarefree: false })?;
            let ms = t.elapsed().as_millis();
            let d = |x: Option<usize>| x.map_or(String::new(), |v| v.to_string());
            Ok(vec![
                entry.fraction.alpha.to_string(),
                entry.fraction.beta.to_string(),
                eps.sigma().to_string(),
                d(r.normalized.deg_l()),
                d(r.normalized.deg_m()),
                r.normalized.to_string(),
                ms.to_string(),
            ])
        })
        .collect()
}

const CENSUS_HEADER: [&str; 7] = ["alpha", "beta", "sigma", "deg_L", "deg_M", "normalized", "ms"];

fn census_cmd(max_alpha: u64, strategy: Strategy, output: Output) -> Result<RunOutput, RileyError> {
    let rows = census_rows(max_alpha, strategy)?;
    let text = match output {
        Output::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| serde_json::Value::Object(CENSUS_HEADER.iter().zip(r).map(|(h, c)| (h.to_string(), json!(c))).collect()))
                .collect();
            to_json(&v)
        }
        Output::Text | Output::Csv => csv_table(&CENSUS_HEADER, rows),
    };
    Ok(RunOutput { text, ok: true })
}

/// Identity suite and prefix checks for one knot.
pub type KnotIdentities = (String, IdentityReport, QReport);

fn identities_cmd(max_alpha: u64, one: Option<KnotArg>, output: Output) -> Result<RunOutput, RileyError> {
    let knots: Vec<(String, EpsilonSeq)> = match one {
        Some(k) => vec![(label(&k), k.eps)],
        None => census(max_alpha)
            .into_iter()
            .map(|e| (e.fraction.to_string(), epsilon_from_fraction(e.fraction)))
            .collect(),
    };
    let reports: Vec<KnotIdentities> = knots
        .par_iter()
        .map(|(name, eps)| (name.clone(), identity_suite(eps), q_recursion_check(&eps.half())))
        .collect();
    Ok(render_identities(&reports, output))
}

/// Text output lists every failing check by knot and name; the run fails if any check does.
pub fn render_identities(reports: &[KnotIdentities], output: Output) -> RunOutput {
    let ok = reports.iter().all(|(_, i, q)| i.all_passed() && q.passed());
    let text = match output {
        Output::Json => to_json(
            &reports
                .iter()
                .map(|(n, i, q)| json!({"knot": n, "identities": i, "q_recursion": q}))
                .collect::<Vec<_>>(),
        ),
        Output::Text | Output::Csv => {
            let mut rows = Vec::new();
            for (n, i, q) in reports {
                for r in &i.results {
                    rows.push(vec![n.clone(), r.name.clone(), pass(r.passed), r.detail.clone()]);
                }
                for c in &q.checks {
                    rows.push(vec![n.clone(), format!("{} (n = {})", c.name, c.n), pass(c.passed), String::new()]);
                }
            }
            if output == Output::Csv {
                csv_table(&["knot", "check", "result", "detail"], rows)
            } else {
                let total = rows.len();
                let failed: Vec<_> = rows.iter().filter(|r| r[2] == "FAIL").collect();
                let mut s = format!("{} knots, {total} checks, {} failed", reports.len(), failed.len());
                for r in failed {
                    s.push_str(&format!("\nFAIL {}: {} {}", r[0], r[1], r[3]));
                }
                s
            }
        }
    };
    RunOutput { text, ok }
}

fn pass(b: bool) -> String {
    if b { "PASS" } else { "FAIL" }.into()
}

/// Exit status: 0 success, 1 computation failure or failed check, 2 usage error.
pub fn exit_code(r: &Result<RunOutput, RileyError>) -> i32 {
    match r {
        Ok(o) if o.ok => 0,
        Ok(_) => 1,
        Err(RileyError::Usage(_)) => 2,
        Err(_) => 1,
    }
}
