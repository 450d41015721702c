//! The `barhom` command line: tables, chain expansion, verification,
//! counting and bound reports.
//!
//! Every command is deterministic for fixed flags. Output goes to stdout (or
//! `--out`) in canonical term order; timing goes to stderr and the payload
//! is byte-identical across runs.

pub mod suites;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bounds::{self, BoundKind, BoundParams};
use crate::error::{Error, Result};
use crate::group_alg::{
    ConcreteGroup, EntryCodec, EntryEncode, FreeGroup, Group, MitosisAlgebra, MitosisElem,
    VerificationInstance,
};
use crate::homotopy::{
    homotopy_p, induct_q, mitosis_context, phi, psi, FormalContext, HomotopyContext, TowerHomotopy,
};
use crate::json::{chain_to_json, envelope, report_to_json, row_to_json, simplex_to_json};
use crate::moore::{count_degenerate, BarSimplex, Chain};
use crate::shuffle_ez::{edgewise, place, shuffles};
use suites::CheckResult;

pub const DEFAULT_TERM_CAP: u64 = 5_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "barhom",
    version,
    about = "Controlled chain homotopies in bar constructions, computed exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Abort when a chain would exceed this many terms.
    #[arg(long, global = true, default_value_t = DEFAULT_TERM_CAP)]
    pub term_cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Diameter tables for gamma, q, c, d and delta_bdh.
    Tables(TablesArgs),
    /// Expand Ed, P, Q, psi or phi on one simplex.
    Expand(ExpandArgs),
    /// Run identity checks and report residuals.
    Verify(VerifyArgs),
    /// Free-symbol diameters and degenerate counts against the recurrences.
    Count(CountArgs),
    /// Bound constants with their provenance.
    Bounds(BoundsArgs),
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long, default_value_t = 7)]
    pub max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Concrete,
    Freesym,
    Word,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Ed,
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    Psi,
    Phi,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(long, value_enum)]
    pub op: Op,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Mitosis level; defaults to `--dim`.
    #[arg(long)]
    pub level: Option<usize>,
    #[arg(long, default_value = "cyclic3")]
    pub group: ConcreteGroup,
    #[arg(long, value_enum, default_value_t = Mode::Concrete)]
    pub mode: Mode,
    /// The input simplex as a JSON array of group elements (concrete mode).
    #[arg(long)]
    pub simplex: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Order of the central factor of the verification instance.
    #[arg(long, default_value_t = 5)]
    pub central: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(name = "theorem45")]
    HomotopyIdentity,
    Cylinder,
    Psi,
    Chainmap,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value = "cyclic3")]
    pub group: ConcreteGroup,
    #[arg(long, default_value_t = 3)]
    pub maxdim: usize,
    /// Mitosis level for the psi suite; defaults to `--maxdim`.
    #[arg(long)]
    pub level: Option<usize>,
    /// Random samples per suite (per dimension for cylinders).
    #[arg(long, default_value_t = 200)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub central: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountOp {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    Psi,
    Phi,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value_t = CountOp::Psi)]
    pub op: CountOp,
    /// A single dimension.
    #[arg(long, conflicts_with = "max")]
    pub dim: Option<usize>,
    /// Every dimension from 0 to this bound.
    #[arg(long)]
    pub max: Option<usize>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Only this kind (general, prior_general, spherical, degree_map,
    /// two_handle, du_general).
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub n: i64,
    #[arg(long, default_value_t = 1)]
    pub r: i64,
    #[arg(long, default_value_t = 1)]
    pub deg: i64,
    #[arg(long, default_value_t = 1)]
    pub d_zeta: i64,
    #[arg(long, default_value_t = 1)]
    pub d_u: i64,
    /// Lens space parameter for `L(n, 1)`.
    #[arg(long, default_value_t = 4043523)]
    pub lens: i64,
    /// Report `q(M)/γ(M)`.
    #[arg(long, default_value_t = 200)]
    pub ratio: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Residual,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Residual => "residual",
        }
    }

    pub fn exit_code(self) -> i32 {
        if self == Status::Pass {
            0
        } else {
            1
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub command: String,
    pub status: Status,
    pub payload: String,
    pub artifacts: Vec<PathBuf>,
    pub elapsed: Duration,
    pub first_offending: Option<String>,
}

/// Exit code for an error raised while running a command: validation
/// problems count as usage errors.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Domain(_)
        | Error::InvalidKind(_)
        | Error::DimensionExceeded { .. } => 2,
        _ => 1,
    }
}

pub fn run(cli: &Cli) -> Result<RunReport> {
    let start = Instant::now();
    let (name, status, first_offending, payload) = match &cli.command {
        Command::Tables(a) => ("tables", Status::Pass, None, tables(a, cli.format)),
        Command::Expand(a) => {
            let p = expand(a, cli.format, cli.term_cap)?;
            ("expand", Status::Pass, None, p)
        }
        Command::Verify(a) => {
            let (status, first, p) = verify(a, cli.format)?;
            ("verify", status, first, p)
        }
        Command::Count(a) => {
            let (status, first, p) = count(a, cli.format, cli.term_cap)?;
            ("count", status, first, p)
        }
        Command::Bounds(a) => ("bounds", Status::Pass, None, bounds_cmd(a, cli.format)?),
    };
    let mut artifacts = Vec::new();
    if let Some(path) = &cli.out {
        std::fs::write(path, &payload)
            .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
        artifacts.push(path.clone());
    }
    Ok(RunReport {
        command: name.into(),
        status,
        payload,
        artifacts,
        elapsed: start.elapsed(),
        first_offending,
    })
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

fn tables(a: &TablesArgs, format: Format) -> String {
    let rows = bounds::table_rows(a.max);
    match format {
        Format::Tsv => {
            let mut s = String::from("m\tgamma\tq\tc\td\tdelta_bdh\n");
            for r in &rows {
                let delta = r
                    .delta_bdh
                    .as_ref()
                    .map_or_else(|| "-".to_string(), BigInt::to_string);
                writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    r.m, r.gamma, r.q, r.c, r.d, delta
                )
                .unwrap();
            }
            s
        }
        Format::Json => render_json(&envelope(
            "tables",
            json!({ "max": a.max, "rows": rows.iter().map(row_to_json).collect::<Vec<_>>() }),
        )),
    }
}

fn check_cap(estimate: &BigInt, cap: u64) -> Result<()> {
    if estimate > &BigInt::from(cap) {
        Err(Error::TermCapExceeded { cap })
    } else {
        Ok(())
    }
}

fn estimate(op: Op, dim: usize) -> BigInt {
    match op {
        Op::Ed => BigInt::from(1) << dim,
        Op::P => bounds::d(dim),
        Op::Q | Op::Psi | Op::Phi => bounds::gamma(dim),
    }
}

fn chain_tsv<A: EntryEncode>(alg: &A, c: &Chain<BarSimplex<A::Elem>>) -> String {
    let mut s = String::from("coeff\tsimplex\n");
    for (t, k) in c.iter() {
        writeln!(s, "{k}\t{}", simplex_to_json(alg, t)).unwrap();
    }
    s
}

/// Ed as rows `(p, rank, sign, image)` in dictionary order of shuffles.
fn ed_rows<S, T, F, G>(
    f: F,
    g: G,
    s: &BarSimplex<S>,
    encode: impl Fn(&BarSimplex<T>) -> Value,
) -> Vec<(usize, usize, i64, Value)>
where
    F: Fn(&S) -> T,
    G: Fn(&S) -> T,
{
    let n = s.dim();
    (0..=n)
        .flat_map(|p| shuffles(p, n - p))
        .map(|sh| (sh.p, sh.rank, sh.sign, encode(&place(&sh, &f, &g, s))))
        .collect()
}

struct Expansion {
    chain: Value,
    tsv: String,
    summary: Option<Value>,
}

fn expansion<A: EntryEncode>(
    alg: &A,
    c: &Chain<BarSimplex<A::Elem>>,
    summary: Option<Value>,
) -> Expansion {
    Expansion {
        chain: chain_to_json(alg, c),
        tsv: chain_tsv(alg, c),
        summary,
    }
}

fn concrete_simplex(a: &ExpandArgs) -> Result<BarSimplex<<ConcreteGroup as Group>::Elem>> {
    match &a.simplex {
        Some(text) => {
            let v: Value =
                serde_json::from_str(text).map_err(|e| Error::Parse(format!("--simplex: {e}")))?;
            let items = v
                .as_array()
                .ok_or_else(|| Error::Parse("--simplex must be a JSON array".into()))?;
            let entries = items
                .iter()
                .map(|x| a.group.decode(x))
                .collect::<Result<Vec<_>>>()?;
            Ok(BarSimplex(entries))
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            Ok(suites::random_simplex(&a.group, a.dim, &mut rng))
        }
    }
}

fn psi_summary<G: Group>(alg: &MitosisAlgebra<G>, c: &MitosisChain<G>, m: usize) -> Value {
    json!({
        "diameter": c.diameter(),
        "degenerate_count": count_degenerate(alg, c),
        "expected_gamma": bounds::gamma(m).to_string(),
        "expected_q": bounds::q_count(m).to_string(),
        "expected_c": bounds::c_bound(m).to_string(),
    })
}

type MitosisChain<G> = Chain<BarSimplex<MitosisElem<<G as Group>::Elem>>>;

fn mitosis_expand<G: Group>(
    alg: &MitosisAlgebra<G>,
    op: Op,
    level: usize,
    s: &BarSimplex<<G as Group>::Elem>,
) -> Result<(MitosisChain<G>, Option<Value>)> {
    let m = s.dim();
    let c = match op {
        Op::Ed => {
            let ctx = mitosis_context(alg, level.max(1));
            edgewise(alg, |x| ctx.f(x), |x| ctx.g(x), s)?
        }
        Op::P => homotopy_p(&mitosis_context(alg, level.max(1)), s)?,
        Op::Q => {
            if level == 0 {
                return Err(Error::Domain("Q needs level >= 1".into()));
            }
            induct_q(&TowerHomotopy::new(alg, level - 1), level, s)?
        }
        Op::Psi => psi(alg, level, s)?,
        Op::Phi => phi(alg, level, s)?,
    };
    let summary = matches!(op, Op::Q | Op::Psi | Op::Phi).then(|| psi_summary(alg, &c, m));
    Ok((c, summary))
}

fn expand(a: &ExpandArgs, format: Format, cap: u64) -> Result<String> {
    let level = a.level.unwrap_or(a.dim);
    if matches!(a.op, Op::Q | Op::Psi | Op::Phi) && a.dim > level {
        return Err(Error::DimensionExceeded { dim: a.dim, level });
    }
    let mut dim = a.dim;
    let mut ed_table = None;
    let result = match (a.mode, a.op) {
        (Mode::Concrete, Op::Ed | Op::P) => {
            let inst = VerificationInstance::new(a.group.clone(), a.central);
            let s = concrete_simplex(a)?;
            dim = s.dim();
            check_cap(&estimate(a.op, dim), cap)?;
            let c = if a.op == Op::Ed {
                ed_table = Some(ed_rows(
                    |x| inst.f(x),
                    |x| inst.g(x),
                    &s,
                    |t| simplex_to_json(&inst.target, t),
                ));
                edgewise(&inst.target, |x| inst.f(x), |x| inst.g(x), &s)?
            } else {
                homotopy_p(&inst, &s)?
            };
            expansion(&inst.target, &c, None)
        }
        (Mode::Freesym, Op::Ed | Op::P) => {
            let ctx = FormalContext::free(a.dim);
            let s = BarSimplex(ctx.alg.base.generators());
            check_cap(&estimate(a.op, dim), cap)?;
            let c = if a.op == Op::Ed {
                ed_table = Some(ed_rows(
                    |x| ctx.f(x),
                    |x| ctx.g(x),
                    &s,
                    |t| simplex_to_json(&ctx.alg, t),
                ));
                edgewise(&ctx.alg, |x| ctx.f(x), |x| ctx.g(x), &s)?
            } else {
                homotopy_p(&ctx, &s)?
            };
            expansion(&ctx.alg, &c, None)
        }
        (Mode::Concrete, _) => {
            let alg = MitosisAlgebra::new(a.group.clone());
            let s = concrete_simplex(a)?;
            dim = s.dim();
            if dim > level && a.op != Op::Ed && a.op != Op::P {
                return Err(Error::DimensionExceeded { dim, level });
            }
            check_cap(&estimate(a.op, dim), cap)?;
            let (c, summary) = mitosis_expand(&alg, a.op, level, &s)?;
            expansion(&alg, &c, summary)
        }
        (Mode::Freesym | Mode::Word, _) => {
            let alg = MitosisAlgebra::new(FreeGroup::new(a.dim));
            let s = BarSimplex(alg.base.generators());
            check_cap(&estimate(a.op, dim), cap)?;
            let (c, summary) = mitosis_expand(&alg, a.op, level, &s)?;
            expansion(&alg, &c, summary)
        }
    };
    let op_name = match a.op {
        Op::Ed => "ed",
        Op::P => "P",
        Op::Q => "Q",
        Op::Psi => "psi",
        Op::Phi => "phi",
    };
    Ok(match format {
        Format::Tsv => match ed_table {
            Some(rows) => {
                let mut s = String::from("p\trank\tsign\timage\n");
                for (p, rank, sign, img) in rows {
                    writeln!(s, "{p}\t{rank}\t{sign}\t{img}").unwrap();
                }
                s
            }
            None => result.tsv,
        },
        Format::Json => {
            let mut body =
                json!({ "op": op_name, "dim": dim, "level": level, "chain": result.chain });
            if let Some(sm) = result.summary {
                body["summary"] = sm;
            }
            render_json(&envelope("expand", body))
        }
    })
}

fn verify(a: &VerifyArgs, format: Format) -> Result<(Status, Option<String>, String)> {
    let level = a.level.unwrap_or(a.maxdim);
    if a.maxdim > level && matches!(a.suite, Suite::Psi | Suite::All) {
        return Err(Error::DimensionExceeded {
            dim: a.maxdim,
            level,
        });
    }
    let mut checks: Vec<CheckResult> = Vec::new();
    let run = |s: Suite, out: &mut Vec<CheckResult>| match s {
        Suite::HomotopyIdentity => out.extend(suites::homotopy_identity(
            &a.group, a.central, a.maxdim, a.samples, a.seed,
        )),
        Suite::Cylinder => out.extend(suites::cylinder(&a.group, a.maxdim, a.samples, a.seed)),
        Suite::Psi => out.extend(suites::psi_identity(level, a.maxdim, a.samples, a.seed)),
        Suite::Chainmap => out.extend(suites::chainmap(
            &a.group, a.central, a.maxdim, a.samples, a.seed,
        )),
        Suite::All => {}
    };
    if a.suite == Suite::All {
        for s in [
            Suite::HomotopyIdentity,
            Suite::Cylinder,
            Suite::Psi,
            Suite::Chainmap,
        ] {
            run(s, &mut checks);
        }
    } else {
        run(a.suite, &mut checks);
    }
    let failed = checks.iter().find(|c| !c.passed());
    let status = if failed.is_some() {
        Status::Residual
    } else {
        Status::Pass
    };
    let first = failed.and_then(|c| c.first_offending.clone());
    let payload = match format {
        Format::Tsv => {
            let mut s = String::from("check\tcases\tresidual_terms\tstatus\n");
            for c in &checks {
                let st = if c.passed() { "pass" } else { "residual" };
                writeln!(s, "{}\t{}\t{}\t{st}", c.name, c.cases, c.residual_terms).unwrap();
            }
            s
        }
        Format::Json => render_json(&envelope(
            "verify",
            json!({
                "group": a.group.to_string(),
                "maxdim": a.maxdim,
                "seed": a.seed,
                "status": status.as_str(),
                "first_offending": first,
                "checks": checks.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
            }),
        )),
    };
    Ok((status, first, payload))
}

/// One free-symbol count with the values the recurrences predict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub m: usize,
    pub diameter: u64,
    pub degenerate: u64,
    pub expected_diameter: BigInt,
    pub expected_degenerate: Option<BigInt>,
}

impl CountRow {
    pub fn matches(&self) -> bool {
        BigInt::from(self.diameter) == self.expected_diameter
            && self
                .expected_degenerate
                .as_ref()
                .is_none_or(|q| *q == BigInt::from(self.degenerate))
    }
}

/// Builds the operator on `[g_1..g_m]` over the free group and counts terms.
pub fn count_row(op: CountOp, m: usize, cap: u64) -> Result<CountRow> {
    let alg = MitosisAlgebra::new(FreeGroup::new(m));
    let s = BarSimplex(alg.base.generators());
    let level = m.max(1);
    let (expected_diameter, expected_degenerate) = match op {
        CountOp::P => {
            let base = (BigInt::from(1) << m) * BigInt::from(m as i64 - 1) + 1;
            (
                bounds::d(m),
                Some(if m == 0 { BigInt::from(0) } else { base }),
            )
        }
        CountOp::Q | CountOp::Psi => (bounds::gamma(m), Some(bounds::q_count(m))),
        CountOp::Phi => (bounds::c_bound(m), Some(BigInt::from(0))),
    };
    check_cap(&expected_diameter, cap)?;
    let c = match op {
        CountOp::P => homotopy_p(&mitosis_context(&alg, level), &s)?,
        CountOp::Q => induct_q(&TowerHomotopy::new(&alg, level - 1), level, &s)?,
        CountOp::Psi => psi(&alg, level, &s)?,
        CountOp::Phi => phi(&alg, level, &s)?,
    };
    Ok(CountRow {
        m,
        diameter: c.diameter(),
        degenerate: count_degenerate(&alg, &c),
        expected_diameter,
        expected_degenerate,
    })
}

fn count(a: &CountArgs, format: Format, cap: u64) -> Result<(Status, Option<String>, String)> {
    let dims: Vec<usize> = match (a.dim, a.max) {
        (Some(d), _) => vec![d],
        (None, Some(m)) => (0..=m).collect(),
        (None, None) => return Err(Error::Domain("count needs --dim or --max".into())),
    };
    let rows = dims
        .into_iter()
        .map(|m| count_row(a.op, m, cap))
        .collect::<Result<Vec<_>>>()?;
    let bad = rows.iter().find(|r| !r.matches());
    let status = if bad.is_some() {
        Status::Fail
    } else {
        Status::Pass
    };
    let first = bad.map(|r| {
        format!(
            "m = {}: diameter {} vs {}",
            r.m, r.diameter, r.expected_diameter
        )
    });
    let payload = match format {
        Format::Tsv => {
            let mut s = String::from(
                "m\tdiameter\tdegenerate\texpected_diameter\texpected_degenerate\tmatch\n",
            );
            for r in &rows {
                let q = r
                    .expected_degenerate
                    .as_ref()
                    .map_or_else(|| "-".into(), BigInt::to_string);
                writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{q}\t{}",
                    r.m,
                    r.diameter,
                    r.degenerate,
                    r.expected_diameter,
                    r.matches()
                )
                .unwrap();
            }
            s
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "m": r.m,
                        "diameter": r.diameter,
                        "degenerate_count": r.degenerate,
                        "expected_diameter": r.expected_diameter.to_string(),
                        "expected_degenerate": r.expected_degenerate.as_ref().map(BigInt::to_string),
                        "match": r.matches(),
                    })
                })
                .collect();
            render_json(&envelope(
                "count",
                json!({ "status": status.as_str(), "rows": items }),
            ))
        }
    };
    Ok((status, first, payload))
}

fn bounds_cmd(a: &BoundsArgs, format: Format) -> Result<String> {
    let params = BoundParams {
        n: a.n.into(),
        r: a.r.into(),
        deg: a.deg.into(),
        d_zeta: a.d_zeta.into(),
        d_u: a.d_u.into(),
    };
    let kinds: Vec<BoundKind> = match &a.kind {
        Some(k) => vec![k.parse()?],
        None => bounds::ALL_KINDS.to_vec(),
    };
    let mut reports = kinds
        .into_iter()
        .map(|k| bounds::rho_bound(k, &params))
        .collect::<Result<Vec<_>>>()?;
    if a.kind.is_none() {
        let (lo, hi) = bounds::lens_bounds(a.lens)?;
        reports.push(lo);
        reports.push(hi);
        reports.extend(bounds::complexity_table()?);
    }
    let ratio = bounds::ratio_limit(a.ratio)?;
    Ok(match format {
        Format::Tsv => {
            let mut s = String::from("name\tvalue\tprovenance\tformula\n");
            for r in &reports {
                let prov = if r.provenance == bounds::Provenance::Computed {
                    "computed"
                } else {
                    "stored"
                };
                writeln!(
                    s,
                    "{}\t{}\t{prov}\t{}",
                    r.name,
                    crate::json::rational_to_string(&r.value),
                    r.formula
                )
                .unwrap();
            }
            s
        }
        Format::Json => {
            let identities: Vec<Value> = bounds::observed_identities()
                .iter()
                .map(|i| json!({ "value": i.value.to_string(), "expression": i.expression, "holds": i.holds }))
                .collect();
            render_json(&envelope(
                "bounds",
                json!({
                    "reports": reports.iter().map(report_to_json).collect::<Vec<_>>(),
                    "observed_identities": identities,
                    "ratio": {
                        "m": ratio.m,
                        "exact": crate::json::rational_to_string(&ratio.exact),
                        "decimal": ratio.decimal,
                        "approx": ratio.exact.to_f64(),
                    },
                }),
            ))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("barhom").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn tables_tsv() {
        let r = run(&parse(&["tables", "--max", "7", "--format", "tsv"])).unwrap();
        let lines: Vec<&str> = r.payload.lines().collect();
        assert_eq!(lines[0], "m\tgamma\tq\tc\td\tdelta_bdh");
        assert_eq!(lines[8], "7\t1135024\t421699\t713325\t1024\t-");
        assert_eq!(lines[4], "3\t152\t55\t97\t32\t186");
    }

    #[test]
    fn count_psi_five() {
        let r = run(&parse(&["count", "--op", "psi", "--dim", "5"])).unwrap();
        assert_eq!(r.status, Status::Pass);
        let v: Value = serde_json::from_str(&r.payload).unwrap();
        assert_eq!(v["rows"][0]["diameter"], 9732);
        assert_eq!(v["rows"][0]["degenerate_count"], 3613);
    }

    #[test]
    fn count_p_base_terms() {
        for m in 0..=4 {
            assert!(
                count_row(CountOp::P, m, DEFAULT_TERM_CAP)
                    .unwrap()
                    .matches(),
                "m = {m}"
            );
        }
    }

    #[test]
    fn verify_homotopy_identity_passes() {
        let r = run(&parse(&[
            "verify",
            "--suite",
            "theorem45",
            "--group",
            "cyclic3",
            "--maxdim",
            "3",
            "--samples",
            "0",
        ]))
        .unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.payload.contains("\"schema\": \"barhom/1\""));
    }

    #[test]
    fn expand_is_deterministic() {
        let args = [
            "expand",
            "--op",
            "P",
            "--dim",
            "3",
            "--group",
            "product(cyclic2,sym3)",
            "--seed",
            "4",
        ];
        assert_eq!(
            run(&parse(&args)).unwrap().payload,
            run(&parse(&args)).unwrap().payload
        );
        let v: Value = serde_json::from_str(&run(&parse(&args)).unwrap().payload).unwrap();
        assert_eq!(v["chain"]["dim"], 4);
    }

    #[test]
    fn expand_ed_tsv_rows() {
        let r = run(&parse(&[
            "expand", "--op", "ed", "--mode", "freesym", "--dim", "2", "--format", "tsv",
        ]))
        .unwrap();
        assert_eq!(r.payload.lines().count(), 1 + 4);
    }

    #[test]
    fn expand_psi_summary() {
        let r = run(&parse(&[
            "expand", "--op", "psi", "--mode", "freesym", "--dim", "2",
        ]))
        .unwrap();
        let v: Value = serde_json::from_str(&r.payload).unwrap();
        assert_eq!(v["summary"]["diameter"], 24);
        assert_eq!(v["summary"]["expected_q"], "8");
    }

    #[test]
    fn term_cap_is_enforced() {
        let cli = parse(&["--term-cap", "100", "count", "--op", "psi", "--dim", "4"]);
        assert!(matches!(
            run(&cli),
            Err(Error::TermCapExceeded { cap: 100 })
        ));
    }

    #[test]
    fn usage_errors() {
        assert!(Cli::try_parse_from(["barhom", "expand", "--op", "nope"]).is_err());
        assert!(Cli::try_parse_from(["barhom", "verify", "--group", "cyclic0"]).is_err());
        let e = run(&parse(&[
            "expand", "--op", "psi", "--dim", "3", "--level", "2", "--mode", "freesym",
        ]))
        .unwrap_err();
        assert_eq!(error_exit_code(&e), 2);
        let e = run(&parse(&["bounds", "--kind", "cheap"])).unwrap_err();
        assert_eq!(error_exit_code(&e), 2);
    }

    #[test]
    fn bounds_json() {
        let r = run(&parse(&["bounds"])).unwrap();
        let v: Value = serde_json::from_str(&r.payload).unwrap();
        let reports = v["reports"].as_array().unwrap();
        assert!(reports
            .iter()
            .any(|x| x["name"] == "rho_general" && x["value"] == "189540"));
        assert!(reports
            .iter()
            .any(|x| x["name"] == "blackboard_prior" && x["provenance"] == "stored"));
    }
}
