//! Command-line front end for the semigroup, staircase-ideal,
//! tangent-cone, resolution-lattice and hypersurface engines.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use srp_core::cone::{socle_entries, tangent_cone_cm};
use srp_core::hyper::HypersurfaceSpec;
use srp_core::ideal::{Monomial, RingModel, StaircaseIdeal, StaircaseRing};
use srp_core::lattice::DualGraph;
use srp_core::semigroup::NumericalSemigroup;
use srp_core::srp::{
    dao_power_table, med_check, ordinary_point_check, srp_threshold, srp_verdict, HoldsReason,
    SrpBounds, SrpRow, SrpVerdict, UnknownReason, WitnessKind,
};
use srplab::{parse_graph_json, parse_ideal_gens, parse_semigroup_gens, ratio_string};
use std::error::Error;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "srplab",
    version,
    about = "Exact invariants of semigroup rings, monomial ideals, resolution lattices and hypersurfaces"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Model {
    /// Power series in s over the semigroup weights (k[[s, t^H]]).
    Semigroup,
    /// Monomial shadow of a point divisor: same staircase, no
    /// integral-closure or multiplicity support.
    Point,
}

impl From<Model> for RingModel {
    fn from(m: Model) -> RingModel {
        match m {
            Model::Semigroup => RingModel::PowerSeries,
            Model::Point => RingModel::PointShadow,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Expect {
    /// Exit 1 unless every level holds.
    Holds,
    /// Exit 1 unless some level fails.
    Fails,
}

#[derive(Subcommand)]
enum Command {
    /// Generators, gaps and Apéry data of a numerical semigroup.
    Semigroup(SemigroupArgs),
    /// Depth of the tangent cone, graded slices and socle entries.
    Cone(ConeArgs),
    /// Invariants and closures of one monomial staircase ideal.
    Ideal(IdealArgs),
    /// Strong Rees property of powers of the maximal ideal.
    Srp(SrpArgs),
    /// Generator-count versus multiplicity gaps for powers of m.
    Dao(DaoArgs),
    /// Ordinary-point staircase checks for a given genus.
    Pgcheck(PgArgs),
    /// Resolution dual-graph analysis.
    Graph(GraphArgs),
    /// Hypersurface generator counts and correction constants.
    Hyper(HyperArgs),
    /// Run the bundled verification batteries.
    Papercheck,
}

#[derive(Args)]
struct SemigroupArgs {
    /// Comma-separated generators, e.g. 4,5,11.
    #[arg(long)]
    gens: String,
    /// Action to run (only `info` exists).
    #[arg(default_value = "info")]
    action: String,
    /// Also print ord(h) for h up to this bound.
    #[arg(long)]
    limit: Option<u64>,
}

#[derive(Args)]
struct ConeArgs {
    /// Comma-separated generators.
    #[arg(long)]
    gens: String,
    /// Scan bound for the depth test (default: wide heuristic).
    #[arg(long)]
    limit: Option<u64>,
    /// Report socle entries up to this degree.
    #[arg(long, default_value_t = 6)]
    max_degree: u64,
}

#[derive(Args)]
struct IdealArgs {
    /// Comma-separated semigroup generators.
    #[arg(long)]
    gens: String,
    /// Ideal generators, `;`-separated monomials (e.g. "s^2; t^8").
    #[arg(long, conflicts_with = "power")]
    monomials: Option<String>,
    /// Use m^POWER as the ideal.
    #[arg(long)]
    power: Option<u64>,
    /// Ring model.
    #[arg(long, value_enum, default_value_t = Model::Semigroup)]
    model: Model,
    /// Operations to run in order: mu, ll, ord, rr, ic, e, or
    /// `colon` followed by a second `;`-separated monomial list.
    /// With no operations the full report is printed.
    ops: Vec<String>,
}

#[derive(Args)]
struct SrpArgs {
    /// Comma-separated semigroup generators.
    #[arg(long)]
    gens: String,
    /// Single power of m to test.
    #[arg(long, conflicts_with = "max_power")]
    power: Option<u64>,
    /// Test all powers 1..=MAX_POWER with failure propagation.
    #[arg(long)]
    max_power: Option<u64>,
    /// Ring model.
    #[arg(long, value_enum, default_value_t = Model::Semigroup)]
    model: Model,
    /// Depth-scan bound override.
    #[arg(long)]
    cone_limit: Option<u64>,
    /// Monomial-scan box "a,h": caps on the s and t exponents.
    #[arg(long = "box")]
    scan_box: Option<String>,
    /// Exit 1 when the outcome differs from the expectation.
    #[arg(long, value_enum)]
    expect: Option<Expect>,
}

#[derive(Args)]
struct DaoArgs {
    /// Comma-separated semigroup generators.
    #[arg(long)]
    gens: String,
    /// Largest power of m to tabulate.
    #[arg(long, default_value_t = 5)]
    max_power: u64,
}

#[derive(Args)]
struct PgArgs {
    /// Genus of the curve behind the ordinary point.
    #[arg(long)]
    ordinary_genus: u64,
    /// Power range to verify.
    #[arg(long, default_value_t = 6)]
    max_power: u64,
}

#[derive(Args)]
struct GraphArgs {
    #[command(subcommand)]
    action: GraphAction,
}

#[derive(Subcommand)]
enum GraphAction {
    /// Validate a dual graph and report its cycle invariants.
    Analyze(GraphAnalyzeArgs),
}

#[derive(Args)]
struct GraphAnalyzeArgs {
    /// Path to the graph JSON file.
    file: String,
    /// Enumerate anti-nef cycles Z ≤ BOUND·M with their gaps.
    #[arg(long)]
    bound: Option<u64>,
    /// Also run the strict-maximum candidate search (needs --bound).
    #[arg(long, requires = "bound")]
    candidates: bool,
    /// Invariants of one anti-nef cycle, comma-separated coefficients.
    #[arg(long)]
    cycle: Option<String>,
    /// Correction constant for the generator-count lower bound on
    /// non-rational graphs.
    #[arg(long, default_value_t = 0)]
    constant: u64,
}

#[derive(Args)]
struct HyperArgs {
    /// Krull dimension of the hypersurface ring.
    #[arg(long)]
    dim: u32,
    /// Degree of the defining equation.
    #[arg(long)]
    deg: u64,
    /// Report μ, e and the constant at one power.
    #[arg(long, conflicts_with = "smax")]
    level: Option<u64>,
    /// Scan the constant over 1..=SMAX.
    #[arg(long)]
    smax: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(json_mode: bool, value: &Value, text: &str) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        println!("{text}");
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Box<dyn Error>> {
    match &cli.command {
        Command::Semigroup(a) => semigroup_cmd(cli.json, a),
        Command::Cone(a) => cone_cmd(cli.json, a),
        Command::Ideal(a) => ideal_cmd(cli.json, a),
        Command::Srp(a) => srp_cmd(cli.json, a),
        Command::Dao(a) => dao_cmd(cli.json, a),
        Command::Pgcheck(a) => pg_cmd(cli.json, a),
        Command::Graph(a) => match &a.action {
            GraphAction::Analyze(g) => graph_cmd(cli.json, g),
        },
        Command::Hyper(a) => hyper_cmd(cli.json, a),
        Command::Papercheck => papercheck_cmd(cli.json),
    }
}

fn semigroup_of(src: &str) -> Result<NumericalSemigroup, Box<dyn Error>> {
    Ok(NumericalSemigroup::new(&parse_semigroup_gens(src)?)?)
}

fn semigroup_cmd(json: bool, a: &SemigroupArgs) -> Result<ExitCode, Box<dyn Error>> {
    if a.action != "info" {
        return Err(format!("unknown action `{}` (expected `info`)", a.action).into());
    }
    let h = semigroup_of(&a.gens)?;
    let gaps = h.gaps();
    let apery = h.apery_set(h.multiplicity())?;
    let mut text = format!(
        "semigroup ⟨{}⟩\n  multiplicity      {}\n  embedding dim     {}\n  frobenius         {}\n  genus             {}\n  gaps              {:?}\n  apery (mod {})    {:?}",
        h.gens().iter().map(u64::to_string).collect::<Vec<_>>().join(", "),
        h.multiplicity(),
        h.embedding_dim(),
        h.frobenius(),
        h.genus(),
        gaps,
        h.multiplicity(),
        apery,
    );
    let mut ord_rows = Vec::new();
    if let Some(up) = a.limit {
        text.push_str("\n  h: ord(h)");
        for x in 0..=up {
            let o = h.ord(x);
            ord_rows.push(json!({ "h": x, "ord": o }));
            text.push_str(&format!(
                "\n  {x}: {}",
                o.map_or("-".into(), |v| v.to_string())
            ));
        }
    }
    let value = json!({
        "gens": h.gens(),
        "multiplicity": h.multiplicity(),
        "embedding-dim": h.embedding_dim(),
        "frobenius": h.frobenius(),
        "genus": h.genus(),
        "gaps": gaps,
        "apery": apery,
        "ord": if ord_rows.is_empty() { Value::Null } else { Value::Array(ord_rows) },
    });
    emit(json, &value, &text);
    Ok(ExitCode::SUCCESS)
}

fn cone_cmd(json: bool, a: &ConeArgs) -> Result<ExitCode, Box<dyn Error>> {
    let h = semigroup_of(&a.gens)?;
    let report = tangent_cone_cm(&h, a.limit)?;
    let entries = socle_entries(&h, a.max_degree);
    let depth_line = match report.first_violation {
        Some(v) => format!("depth obstruction at h = {v} (order jumps across {v} + {})", h.multiplicity()),
        None => format!("no depth obstruction up to h = {}", report.checked_up_to),
    };
    let text = format!(
        "tangent cone of ⟨{}⟩\n  {}\n  graded depth      {} (curve) / {} (surface model)\n  socle entries ≤ degree {}: {}",
        h.gens().iter().map(u64::to_string).collect::<Vec<_>>().join(", "),
        depth_line,
        report.graded_depth_curve,
        report.graded_depth_surface,
        a.max_degree,
        if entries.is_empty() {
            "none".to_string()
        } else {
            entries
                .iter()
                .map(|e| format!("(degree {}, t^{})", e.degree, e.elem))
                .collect::<Vec<_>>()
                .join(", ")
        },
    );
    let value = json!({
        "gens": h.gens(),
        "checked-up-to": report.checked_up_to,
        "first-violation": report.first_violation,
        "cm": report.is_cm(),
        "graded-depth-curve": report.graded_depth_curve,
        "graded-depth-surface": report.graded_depth_surface,
        "socle-scan-degree": a.max_degree,
        "socle-entries": entries.iter().map(|e| json!({ "degree": e.degree, "elem": e.elem })).collect::<Vec<_>>(),
    });
    emit(json, &value, &text);
    Ok(ExitCode::SUCCESS)
}

fn monomial_strings(gens: &[Monomial]) -> Vec<String> {
    gens.iter().map(|m| m.to_string()).collect()
}

fn ideal_cmd(json: bool, a: &IdealArgs) -> Result<ExitCode, Box<dyn Error>> {
    let h = semigroup_of(&a.gens)?;
    let ring = StaircaseRing::new(h, a.model.into());
    let ideal: StaircaseIdeal = match (&a.monomials, a.power) {
        (Some(src), None) => ring.ideal(&parse_ideal_gens(src)?)?,
        (None, Some(l)) => ring.power_of_max(l),
        (None, None) => return Err("give either --monomials or --power".into()),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    if !a.ops.is_empty() {
        return ideal_ops(json, &ring, &ideal, &a.ops);
    }
    let order = ideal.order(&ring)?;
    let m_primary = ideal.is_m_primary();
    let loewy = if m_primary {
        Some(ideal.loewy_length(&ring)?)
    } else {
        None
    };
    let m_full = ideal.is_m_full(&ring)?;
    let rr = ideal.ratliff_rush(&ring, 8)?;
    let rr_closed = rr.stabilized && rr.closure == ideal;
    let (ic_gens, multiplicity, ic_equal) = if ring.model() == RingModel::PowerSeries {
        let ic = ideal.integral_closure(&ring)?;
        let e = if m_primary {
            Some(ideal.multiplicity(&ring)?)
        } else {
            None
        };
        let equal = ic == ideal;
        (Some(monomial_strings(ic.gens())), e, Some(equal))
    } else {
        (None, None, None)
    };

    let text = format!(
        "ideal ({}) over ⟨{}⟩\n  μ                 {}\n  order             {}\n  m-primary         {}\n  loewy length      {}\n  m-full (via s)    {}\n  ratliff-rush      steps {}, stabilized {}, closed {}, certificate {:?}\n  rr closure        ({})\n  integral closure  {}\n  multiplicity      {}",
        monomial_strings(ideal.gens()).join("; "),
        ring.semigroup().gens().iter().map(u64::to_string).collect::<Vec<_>>().join(", "),
        ideal.mu(),
        order,
        m_primary,
        loewy.map_or("-".into(), |v| v.to_string()),
        m_full,
        rr.steps,
        rr.stabilized,
        rr_closed,
        rr.certificate,
        monomial_strings(rr.closure.gens()).join("; "),
        ic_gens.as_ref().map_or("unavailable in this model".to_string(), |g| format!("({})", g.join("; "))),
        multiplicity.map_or("-".into(), |v| v.to_string()),
    );
    let value = json!({
        "gens": monomial_strings(ideal.gens()),
        "semigroup": ring.semigroup().gens(),
        "mu": ideal.mu(),
        "order": order,
        "m-primary": m_primary,
        "loewy-length": loewy,
        "m-full": m_full,
        "ratliff-rush": {
            "steps": rr.steps,
            "stabilized": rr.stabilized,
            "closed": rr_closed,
            "certificate": format!("{:?}", rr.certificate),
            "closure": monomial_strings(rr.closure.gens()),
        },
        "integral-closure": ic_gens,
        "integrally-closed": ic_equal,
        "multiplicity": multiplicity,
    });
    emit(json, &value, &text);
    Ok(ExitCode::SUCCESS)
}

/// Runs each requested operation in order and prints one result per
/// operation. `colon` consumes the following token as a second ideal.
fn ideal_ops(
    json: bool,
    ring: &StaircaseRing,
    ideal: &StaircaseIdeal,
    ops: &[String],
) -> Result<ExitCode, Box<dyn Error>> {
    let mut results = Vec::new();
    let mut text = String::new();
    let mut push = |op: &str, value: Value, line: String| {
        results.push(json!({ "op": op, "value": value }));
        if !text.is_empty() {
            text.push('\n');
        }
        text.push_str(&line);
    };
    let mut it = ops.iter();
    while let Some(op) = it.next() {
        match op.as_str() {
            "mu" => push("mu", json!(ideal.mu()), format!("mu     {}", ideal.mu())),
            "ord" => {
                let v = ideal.order(ring)?;
                push("ord", json!(v), format!("ord    {v}"));
            }
            "ll" => {
                let v = ideal.loewy_length(ring)?;
                push("ll", json!(v), format!("ll     {v}"));
            }
            "e" => {
                let v = ideal.multiplicity(ring)?;
                push("e", json!(v), format!("e      {v}"));
            }
            "rr" => {
                let rr = ideal.ratliff_rush(ring, 8)?;
                let closed = rr.stabilized && rr.closure == *ideal;
                let gens = monomial_strings(rr.closure.gens());
                push(
                    "rr",
                    json!({
                        "steps": rr.steps,
                        "stabilized": rr.stabilized,
                        "closed": closed,
                        "certificate": format!("{:?}", rr.certificate),
                        "closure": gens,
                    }),
                    format!(
                        "rr     steps {}, stabilized {}, closed {}, closure ({})",
                        rr.steps,
                        rr.stabilized,
                        closed,
                        gens.join("; ")
                    ),
                );
            }
            "ic" => {
                let ic = ideal.integral_closure(ring)?;
                let gens = monomial_strings(ic.gens());
                push("ic", json!(gens), format!("ic     ({})", gens.join("; ")));
            }
            "colon" => {
                let arg = it
                    .next()
                    .ok_or("`colon` needs a `;`-separated monomial list after it")?;
                let other = ring.ideal(&parse_ideal_gens(arg)?)?;
                let quot = ideal.colon(ring, &other)?;
                let gens = monomial_strings(quot.gens());
                push("colon", json!(gens), format!("colon  ({})", gens.join("; ")));
            }
            other => {
                return Err(format!(
                    "unknown operation `{other}` (expected mu, ll, ord, rr, ic, e, colon)"
                )
                .into())
            }
        }
    }
    let value = json!({
        "gens": monomial_strings(ideal.gens()),
        "semigroup": ring.semigroup().gens(),
        "results": results,
    });
    emit(json, &value, &text);
    Ok(ExitCode::SUCCESS)
}

fn describe_verdict(v: &SrpVerdict) -> String {
    match v {
        SrpVerdict::Holds(HoldsReason::ConeCmCertified { checked_up_to }) => {
            format!("HOLDS (depth certificate up to {checked_up_to})")
        }
        SrpVerdict::Holds(HoldsReason::SocleGap { scanned_degree }) => {
            format!("HOLDS (no socle entry through degree {scanned_degree})")
        }
        SrpVerdict::Fails(w) => {
            let kind = match w.kind {
                WitnessKind::SocleJump { elem, entry_degree } => {
                    format!("socle jump at t^{elem}, degree {entry_degree}")
                }
                WitnessKind::MonomialScan => "monomial scan".to_string(),
                WitnessKind::Lifted { from_level } => {
                    format!("lifted from level {from_level}")
                }
            };
            format!(
                "FAILS ({kind}; adds {}; μ = {} ≥ {})",
                w.added
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                w.mu_witness,
                w.mu_power
            )
        }
        SrpVerdict::Unknown(UnknownReason::ScanExhausted { candidates_tried }) => {
            format!("UNKNOWN (scan exhausted after {candidates_tried} candidates)")
        }
    }
}

fn verdict_value(row: &SrpRow) -> Value {
    let (status, reason, witness) = match &row.verdict {
        SrpVerdict::Holds(r) => (
            "holds",
            match r {
                HoldsReason::ConeCmCertified { checked_up_to } => {
                    json!({ "kind": "cone-cm-certified", "checked-up-to": checked_up_to })
                }
                HoldsReason::SocleGap { scanned_degree } => {
                    json!({ "kind": "socle-gap", "scanned-degree": scanned_degree })
                }
            },
            Value::Null,
        ),
        SrpVerdict::Fails(w) => (
            "fails",
            Value::Null,
            json!({
                "kind": match w.kind {
                    WitnessKind::SocleJump { .. } => "socle-jump",
                    WitnessKind::MonomialScan => "monomial-scan",
                    WitnessKind::Lifted { .. } => "lifted",
                },
                "detail": match w.kind {
                    WitnessKind::SocleJump { elem, entry_degree } =>
                        json!({ "elem": elem, "entry-degree": entry_degree }),
                    WitnessKind::MonomialScan => Value::Null,
                    WitnessKind::Lifted { from_level } => json!({ "from-level": from_level }),
                },
                "added": w.added.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "mu-witness": w.mu_witness,
                "mu-power": w.mu_power,
            }),
        ),
        SrpVerdict::Unknown(UnknownReason::ScanExhausted { candidates_tried }) => (
            "unknown",
            json!({ "kind": "scan-exhausted", "candidates-tried": candidates_tried }),
            Value::Null,
        ),
    };
    json!({
        "level": row.level,
        "status": status,
        "reason": reason,
        "witness": witness,
        "mu-power": row.mu_power,
        "rr-closed": row.rr_closed,
    })
}

fn srp_cmd(json: bool, a: &SrpArgs) -> Result<ExitCode, Box<dyn Error>> {
    let h = semigroup_of(&a.gens)?;
    let ring = StaircaseRing::new(h, a.model.into());
    let (scan_max_a, scan_max_h) = match &a.scan_box {
        None => (None, None),
        Some(src) => {
            let parts: Vec<&str> = src.split(',').map(str::trim).collect();
            match parts.as_slice() {
                [x, y] => (
                    Some(x.parse::<u64>().map_err(|e| format!("bad box: {e}"))?),
                    Some(y.parse::<u64>().map_err(|e| format!("bad box: {e}"))?),
                ),
                _ => return Err("bad box: expected two comma-separated caps `a,h`".into()),
            }
        }
    };
    let bounds = SrpBounds {
        cone_limit: a.cone_limit,
        scan_max_a,
        scan_max_h,
    };
    let (rows, summary) = match (a.power, a.max_power) {
        (Some(l), None) => (vec![srp_verdict(&ring, l, &bounds)?], Value::Null),
        (None, Some(top)) => {
            let report = srp_threshold(&ring, top, &bounds)?;
            let summary = json!({
                "holds-through": report.holds_through,
                "first-failure": report.first_failure,
                "cone-certified": report.cone_certified,
            });
            (report.rows, summary)
        }
        _ => return Err("give exactly one of --power or --max-power".into()),
    };

    let mut text = format!(
        "strong Rees property over ⟨{}⟩",
        ring.semigroup()
            .gens()
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    for row in &rows {
        text.push_str(&format!(
            "\n  level {:>2}: {} [μ(m^ℓ) = {}, rr-closed {}]",
            row.level,
            describe_verdict(&row.verdict),
            row.mu_power,
            row.rr_closed
        ));
    }
    if let Value::Object(map) = &summary {
        text.push_str(&format!(
            "\n  holds through {}, first failure {}",
            map["holds-through"],
            map["first-failure"]
        ));
    }
    let value = json!({
        "gens": ring.semigroup().gens(),
        "rows": rows.iter().map(verdict_value).collect::<Vec<_>>(),
        "summary": summary,
    });
    emit(json, &value, &text);

    let code = match a.expect {
        None => ExitCode::SUCCESS,
        Some(Expect::Holds) => {
            if rows.iter().all(|r| r.verdict.is_holds()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Some(Expect::Fails) => {
            if rows.iter().any(|r| r.verdict.is_fails()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    };
    Ok(code)
}

fn dao_cmd(json: bool, a: &DaoArgs) -> Result<ExitCode, Box<dyn Error>> {
    let h = semigroup_of(&a.gens)?;
    let ring = StaircaseRing::new(h, RingModel::PowerSeries);
    let table = dao_power_table(&ring, a.max_power)?;
    let med = med_check(ring.semigroup());
    let mut text = format!(
        "gap table over ⟨{}⟩\n  level    μ      e     ll    ord   (μ-1)ll-e   e-(μ-1)ord",
        ring.semigroup()
            .gens()
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    for (l, d) in &table {
        text.push_str(&format!(
            "\n  {:>5} {:>4} {:>6} {:>5} {:>5} {:>11} {:>12}",
            l, d.mu, d.multiplicity, d.loewy_length, d.order, d.forward_gap, d.reverse_gap
        ));
    }
    text.push_str(&format!(
        "\n  μ(m) = {} and e(m) + 1 = {}: maximal embedding dimension {}",
        med.mu_m,
        med.e_m + 1,
        if med.holds { "holds" } else { "fails" }
    ));
    let value = json!({
        "gens": ring.semigroup().gens(),
        "rows": table.iter().map(|(l, d)| json!({
            "level": l,
            "mu": d.mu,
            "multiplicity": d.multiplicity,
            "loewy-length": d.loewy_length,
            "order": d.order,
            "forward-gap": d.forward_gap,
            "reverse-gap": d.reverse_gap,
        })).collect::<Vec<_>>(),
        "med": { "mu-m": med.mu_m, "e-m": med.e_m, "holds": med.holds },
    });
    emit(json, &value, &text);
    Ok(ExitCode::SUCCESS)
}

fn pg_cmd(json: bool, a: &PgArgs) -> Result<ExitCode, Box<dyn Error>> {
    let report = ordinary_point_check(a.ordinary_genus, a.max_power)?;
    let all = report.ord_formula_ok
        && report.mu_formula_ok
        && report.reduction_product_ok
        && report.cone_cm
        && report.med.holds;
    let text = format!(
        "ordinary point of genus {}\n  staircase order formula   {}\n  μ(mⁿ) = 1 + n(g+1)        {}\n  m·mⁿ = Q·mⁿ (n ≤ {})       {}\n  graded depth full         {}\n  maximal embedding dim     {}\n  all checks                {}",
        report.genus,
        report.ord_formula_ok,
        report.mu_formula_ok,
        report.levels_checked,
        report.reduction_product_ok,
        report.cone_cm,
        report.med.holds,
        if all { "pass" } else { "FAIL" },
    );
    let value = json!({
        "genus": report.genus,
        "levels-checked": report.levels_checked,
        "ord-formula-ok": report.ord_formula_ok,
        "mu-formula-ok": report.mu_formula_ok,
        "reduction-product-ok": report.reduction_product_ok,
        "cone-cm": report.cone_cm,
        "med": { "mu-m": report.med.mu_m, "e-m": report.med.e_m, "holds": report.med.holds },
        "pass": all,
    });
    emit(json, &value, &text);
    Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cycle_value(g: &DualGraph, z: &[i64]) -> Result<Value, Box<dyn Error>> {
    let inv = g.cycle_invariants(z)?;
    let gaps = if g.is_rational() {
        let r = g.dao_gaps(z)?;
        json!({ "forward": r.forward_gap.to_string(), "reverse": r.reverse_gap.to_string() })
    } else {
        Value::Null
    };
    Ok(json!({
        "z": inv.z,
        "self-intersection": inv.self_intersection.to_string(),
        "arithmetic-genus": inv.arithmetic_genus,
        "mu": inv.mu,
        "multiplicity": inv.multiplicity,
        "loewy-length": inv.loewy_length,
        "order": inv.order,
        "gaps": gaps,
    }))
}

fn graph_cmd(json: bool, a: &GraphAnalyzeArgs) -> Result<ExitCode, Box<dyn Error>> {
    let src = std::fs::read_to_string(&a.file)?;
    let graph = parse_graph_json(&src)?.build()?;
    let m = graph.fundamental_cycle().to_vec();
    let rational = graph.is_rational();
    let minimal = graph.is_minimal();
    let pa_m = graph.arithmetic_genus(&m);
    let m_sq = graph.pair(&m, &m);

    let mut text = format!(
        "dual graph: {} vertices, negative definite, connected\n  fundamental cycle  {:?}\n  M²                 {}\n  p_a(M)             {}\n  rational           {}\n  minimal            {}",
        graph.len(),
        m,
        m_sq,
        pa_m,
        rational,
        minimal,
    );
    let m_inv = cycle_value(&graph, &m)?;
    if rational {
        text.push_str(&format!(
            "\n  μ(M) = {}, e = {}, ll = ord = 1",
            m_inv["mu"], m_inv["multiplicity"]
        ));
    } else {
        let lb = graph.mu_lower_bound(&m, a.constant)?;
        text.push_str(&format!(
            "\n  not rational: μ(M) ≥ -M·M + 1 - {} = {}",
            a.constant, lb
        ));
    }

    let cycle = match &a.cycle {
        Some(src) => {
            let z: Vec<i64> = src
                .split(',')
                .map(|p| p.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|e| format!("bad cycle: {e}"))?;
            let v = cycle_value(&graph, &z)?;
            text.push_str(&format!("\n  cycle {:?}: μ = {}, e = {}, ll = {}, ord = {}, gaps = {}",
                z, v["mu"], v["multiplicity"], v["loewy-length"], v["order"], v["gaps"]));
            if !rational {
                let lb = graph.mu_lower_bound(&z, a.constant)?;
                text.push_str(&format!(", μ ≥ {lb}"));
            }
            v
        }
        None => Value::Null,
    };

    let mut enumerated = Value::Null;
    if let Some(b) = a.bound {
        let cycles = graph.enumerate_antinef(b)?;
        text.push_str(&format!("\n  anti-nef cycles with Z ≤ {b}·M: {}", cycles.len()));
        let mut rows = Vec::new();
        for z in &cycles {
            let v = cycle_value(&graph, z)?;
            text.push_str(&format!(
                "\n    {:?}: μ = {}, e = {}, ll = {}, ord = {}, gaps = {}",
                z, v["mu"], v["multiplicity"], v["loewy-length"], v["order"], v["gaps"]
            ));
            rows.push(v);
        }
        enumerated = Value::Array(rows);
    }

    let mut candidates = Value::Null;
    if a.candidates {
        let found = graph.srp_candidates(a.bound.expect("clap requires"))?;
        text.push_str(&format!("\n  strict-maximum candidates: {}", found.len()));
        for cand in &found {
            text.push_str(&format!("\n    {:?} with μ = {}", cand.z, cand.mu));
        }
        candidates = Value::Array(
            found
                .iter()
                .map(|cand| json!({ "z": cand.z, "mu": cand.mu }))
                .collect(),
        );
    }

    let value = json!({
        "vertices": graph.len(),
        "fundamental-cycle": m,
        "m-squared": m_sq.to_string(),
        "pa-m": pa_m,
        "rational": rational,
        "minimal": minimal,
        "fundamental-invariants": m_inv,
        "cycle": cycle,
        "anti-nef": enumerated,
        "candidates": candidates,
        "constant": a.constant,
    });
    emit(json, &value, &text);
    Ok(ExitCode::SUCCESS)
}

fn hyper_cmd(json: bool, a: &HyperArgs) -> Result<ExitCode, Box<dyn Error>> {
    let spec = HypersurfaceSpec::new(a.dim, a.deg)?;
    match (a.level, a.smax) {
        (Some(s), None) => {
            let mu = spec.power_mu(s);
            let e = spec.power_multiplicity(s);
            let c = spec.required_constant(s)?;
            let text = format!(
                "hypersurface dim {}, degree {}\n  μ(m^{s})          {}\n  e(m^{s})          {}\n  loewy = order    {}\n  constant c({s})   {}",
                a.dim, a.deg, mu, e, spec.power_loewy(s), ratio_string(c),
            );
            let value = json!({
                "dim": a.dim,
                "degree": a.deg,
                "level": s,
                "mu": mu.to_string(),
                "multiplicity": e.to_string(),
                "loewy-length": s,
                "constant": ratio_string(c),
            });
            emit(json, &value, &text);
        }
        (None, Some(top)) => {
            let scan = spec.constant_scan(top)?;
            let surface = spec.surface_constant_sup();
            let mut text = format!(
                "hypersurface dim {}, degree {}\n  sup c(s), s ≤ {}  {} (attained at s = {})\n  divergent         {}",
                a.dim, a.deg, top, ratio_string(scan.sup), scan.argmax, scan.divergent,
            );
            if let Some(c2) = surface {
                text.push_str(&format!("\n  surface closed form C(n-1, 2) = {}", ratio_string(c2)));
            }
            let value = json!({
                "dim": a.dim,
                "degree": a.deg,
                "scan-to": top,
                "sup": ratio_string(scan.sup),
                "argmax": scan.argmax,
                "divergent": scan.divergent,
                "surface-closed-form": surface.map(ratio_string),
            });
            emit(json, &value, &text);
        }
        _ => return Err("give exactly one of --level or --smax".into()),
    }
    Ok(ExitCode::SUCCESS)
}

fn papercheck_cmd(json: bool) -> Result<ExitCode, Box<dyn Error>> {
    let reports = srplab::fixtures::run_all();
    let all_pass = reports.iter().all(|r| r.passed);
    if json {
        let value = json!({
            "batteries": reports.iter().map(|r| json!({
                "id": r.id,
                "name": r.name,
                "passed": r.passed,
                "details": r.details,
            })).collect::<Vec<_>>(),
            "all-passed": all_pass,
        });
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        for r in &reports {
            println!(
                "battery {} {} — {}",
                r.id,
                if r.passed { "PASS" } else { "FAIL" },
                r.name
            );
            for d in &r.details {
                println!("    {d}");
            }
        }
        println!("{}", if all_pass { "all batteries passed" } else { "some batteries FAILED" });
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
