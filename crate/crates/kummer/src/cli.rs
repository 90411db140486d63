//! Subcommands, argument parsing and output.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use kummer_core::codes::{ag_code, is_lcp, min_distance, verify_pair_divisors, weight, Distance, LinearCode};
use kummer_core::constructions::{teocodes1, teocodes2, teocodes_r, Construction, LcpConstructionResult};
use kummer_core::nonspecial::{
    check_effective_g, check_g, check_gminus1, classify, enum_lambda1_gminus1, enum_separable_gminus1,
    necessary_condition, scan_gminus1, Lambda1Outcome,
};
use kummer_core::rrspace::{dim_oracle, rr_basis};
use kummer_core::semigroup::beta;
use kummer_core::{presets, Divisor, Error, FieldElement, KummerCurve, Place, QTuple};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::formats::{self, StoredResult};
use crate::{tsv, CliError};

type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "kummer", version, about = "Kummer curves, non-special divisors and LCPs of AG codes")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Genus, ramification data and rational place count.
    CurveInfo(CurveArg),
    /// Every rational place id.
    CurvePlaces(CurveArg),
    /// l(D) for D = sum alpha_k Q_k on totally ramified places.
    Dim(DimArgs),
    /// Non-specialness criteria for degree g - 1 and g.
    NonspecialCheck(CheckArgs),
    /// Families of degree g - 1 non-special divisors.
    NonspecialEnumerate(EnumerateArgs),
    /// Build and verify an LCP of AG codes.
    LcpBuild(BuildArgs),
    /// Re-check a result written by lcp-build.
    LcpVerify(VerifyArgs),
    /// Parameters of a code export or of C_L(D, G).
    CodeInfo(CodeArgs),
}

#[derive(Args, Debug)]
struct CurveArg {
    /// Curve file (JSON).
    #[arg(long)]
    curve: PathBuf,
}

#[derive(Args, Debug)]
struct DimArgs {
    #[arg(long)]
    curve: PathBuf,
    /// Place ids, comma separated, in tuple order.
    #[arg(long, value_delimiter = ',', required = true)]
    places: Vec<String>,
    /// Coefficients in tuple order.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    alpha: Vec<i64>,
    /// Also print a basis of L(D).
    #[arg(long)]
    basis: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    curve: PathBuf,
    /// `all-ramified` or comma separated place ids.
    #[arg(long, default_value = "all-ramified")]
    tuple: String,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Option<Vec<i64>>,
    /// Only evaluate the necessary condition on the tuple.
    #[arg(long)]
    necessary_only: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumMethod {
    Auto,
    Separable,
    Lambda1,
    Scan,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    curve: PathBuf,
    #[arg(long, value_enum, default_value_t = EnumMethod::Auto)]
    method: EnumMethod,
    /// Tuple for the lambda1 and scan methods.
    #[arg(long, default_value = "all-ramified")]
    tuple: String,
    /// Restrict the separable method to one alpha_0.
    #[arg(long)]
    alpha0: Option<i64>,
}

#[derive(Args, Debug)]
struct BuildArgs {
    /// 1, 2 or R.
    #[arg(long)]
    construction: String,
    #[arg(long, allow_hyphen_values = true)]
    s: i64,
    /// Curve file; the Hermitian curve over GF(9) when omitted.
    #[arg(long)]
    curve: Option<PathBuf>,
    /// Divisor file for constructions 1 and R, `{"E1", "E2"}` for 2.
    #[arg(long = "E")]
    e: Option<PathBuf>,
    /// Restrict evaluation to these split x encodings.
    #[arg(long, value_delimiter = ',')]
    eval_x: Option<Vec<u32>>,
    /// Include both generator matrices in the output.
    #[arg(long)]
    emit_generators: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Output of lcp-build.
    #[arg(long)]
    result: PathBuf,
}

#[derive(Args, Debug)]
struct CodeArgs {
    /// Code export (JSON).
    #[arg(long, conflicts_with_all = ["curve", "g"])]
    code: Option<PathBuf>,
    #[arg(long, requires = "g")]
    curve: Option<PathBuf>,
    /// Divisor G (JSON) for C_L(D, G).
    #[arg(long = "G", requires = "curve")]
    g: Option<PathBuf>,
    /// Evaluation places; every split place when omitted.
    #[arg(long, value_delimiter = ',')]
    places: Option<Vec<String>>,
    /// Random codewords to weigh.
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include the code export in the output.
    #[arg(long)]
    export: bool,
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let error = CliError::Usage(e.to_string().trim_end().to_string());
            let _ = writeln!(err, "{}", error.to_json());
            return 2;
        }
    };
    match dispatch(&cli.command) {
        Ok(v) => {
            let text = match cli.format {
                OutputFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
                    s.push('\n');
                    s
                }
                OutputFormat::Tsv => tsv::render(&v),
            };
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{}", e.to_json());
            2
        }
    }
}

fn dispatch(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::CurveInfo(a) => curve_info(&load_curve(&a.curve)?),
        Command::CurvePlaces(a) => curve_places(&load_curve(&a.curve)?),
        Command::Dim(a) => dim(a),
        Command::NonspecialCheck(a) => nonspecial_check(a),
        Command::NonspecialEnumerate(a) => nonspecial_enumerate(a),
        Command::LcpBuild(a) => lcp_build(a),
        Command::LcpVerify(a) => lcp_verify(a),
        Command::CodeInfo(a) => code_info(a),
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let display = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| CliError::Io { path: display.clone(), message: e.to_string() })?;
    serde_json::from_str(&text).map_err(|e| CliError::Json { path: display, message: e.to_string() })
}

fn load_curve(path: &Path) -> Result<KummerCurve> {
    formats::curve_from_json(&read_json(path)?)
}

fn parse_places(curve: &KummerCurve, ids: &[String]) -> Result<Vec<Place>> {
    ids.iter()
        .map(|id| {
            let p = id.trim().parse::<Place>()?;
            curve.validate_place(&p)?;
            Ok(p)
        })
        .collect()
}

fn parse_tuple<'c>(curve: &'c KummerCurve, spec: &str) -> Result<QTuple<'c>> {
    if spec == "all-ramified" {
        return Ok(QTuple::all_ramified(curve)?);
    }
    let ids: Vec<String> = spec.split(',').map(str::to_string).collect();
    Ok(QTuple::new(curve, parse_places(curve, &ids)?)?)
}

fn curve_info(curve: &KummerCurve) -> Result<Value> {
    let places = curve.rational_places();
    let betas = (1..curve.m()).map(|i| beta(curve, i)).collect::<kummer_core::Result<Vec<_>>>()?;
    Ok(json!({
        "curve": formats::curve_to_json(curve),
        "deg_f": curve.deg_f(),
        "genus": curve.genus(),
        "genus_riemann_hurwitz": curve.genus_riemann_hurwitz(),
        "beta": betas,
        "separable": curve.is_separable(),
        "rational_places": places.places.len(),
        "rational_places_partial": places.partial,
        "totally_ramified": formats::places_to_json(&curve.totally_ramified_places()),
        "split_x_count": curve.split_x_values().len(),
    }))
}

fn curve_places(curve: &KummerCurve) -> Result<Value> {
    let places = curve.rational_places();
    Ok(json!({ "places": formats::places_to_json(&places.places), "partial": places.partial }))
}

/// Verdict from `l(D)`, `deg D` and `g`, for tuples the closed form does not cover.
fn verdict_from(dim: u64, degree: i64, g: i64) -> &'static str {
    if dim as i64 == degree + 1 - g {
        match degree - g {
            -1 => "NonspecialDegGminus1",
            0 => "NonspecialDegG",
            d if d > 0 => "NonspecialHighDeg",
            _ => "Special",
        }
    } else if degree < 0 {
        "NegativeDim"
    } else {
        "Special"
    }
}

fn dim(a: &DimArgs) -> Result<Value> {
    let curve = load_curve(&a.curve)?;
    let tuple = QTuple::new(&curve, parse_places(&curve, &a.places)?)?;
    tuple.check_alpha(&a.alpha)?;
    let d = tuple.divisor(&a.alpha);
    let oracle = dim_oracle(&curve, &d)?;
    let g = curve.genus() as i64;
    let (dim, degree, classification, method) = if tuple.require_formula_range().is_ok() {
        let c = classify(&tuple, &a.alpha)?;
        if c.dim != oracle {
            return Err(Error::DimensionMismatch(format!("formula {} vs decomposition {oracle}", c.dim)).into());
        }
        (c.dim, c.degree, c.verdict.as_str(), "formula")
    } else {
        let degree = d.degree(&curve);
        (oracle, degree, verdict_from(oracle, degree, g), "decomposition")
    };
    let mut v = json!({
        "dim": dim,
        "degree": degree,
        "genus": g,
        "classification": classification,
        "method": method,
        "divisor": formats::divisor_to_json(&d),
    });
    if a.basis {
        let basis: Vec<Value> = rr_basis(&curve, &d)?.iter().map(formats::function_to_json).collect();
        v["basis"] = Value::from(basis);
    }
    Ok(v)
}

fn nonspecial_check(a: &CheckArgs) -> Result<Value> {
    let curve = load_curve(&a.curve)?;
    let tuple = parse_tuple(&curve, &a.tuple)?;
    let nc = necessary_condition(&tuple);
    let necessary = json!({ "possible": nc.possible, "witness": nc.witness });
    if a.necessary_only {
        return Ok(necessary);
    }
    let alpha =
        a.alpha.as_ref().ok_or_else(|| CliError::Usage("--alpha is required without --necessary-only".into()))?;
    let effective = match check_effective_g(&tuple, alpha) {
        Ok(b) => Value::Bool(b),
        Err(Error::AlphaOutOfRange(_)) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let c = classify(&tuple, alpha)?;
    Ok(json!({
        "places": formats::places_to_json(tuple.places()),
        "degree": c.degree,
        "genus": curve.genus(),
        "dim": c.dim,
        "classification": c.verdict.as_str(),
        "nonspecial_g_minus_1": check_gminus1(&tuple, alpha)?,
        "nonspecial_g": check_g(&tuple, alpha)?,
        "effective_nonspecial_g": effective,
        "necessary": necessary,
    }))
}

fn nonspecial_enumerate(a: &EnumerateArgs) -> Result<Value> {
    let curve = load_curve(&a.curve)?;
    let method = match a.method {
        EnumMethod::Auto if curve.is_separable() && curve.d_infinity() == 1 && a.tuple == "all-ramified" => {
            EnumMethod::Separable
        }
        EnumMethod::Auto => {
            let tuple = parse_tuple(&curve, &a.tuple)?;
            let m = curve.m() as i64;
            if tuple.lambdas().iter().all(|l| l.rem_euclid(m) == 1) {
                EnumMethod::Lambda1
            } else {
                EnumMethod::Scan
            }
        }
        other => other,
    };
    match method {
        EnumMethod::Separable => {
            let alpha0s: Vec<i64> = match a.alpha0 {
                Some(k) => vec![k],
                None if curve.d_infinity() == 1 => (0..curve.m() as i64).collect(),
                None => vec![0],
            };
            let families = alpha0s
                .into_iter()
                .map(|k| enum_separable_gminus1(&curve, k).map(|f| formats::family_to_json(&f)))
                .collect::<kummer_core::Result<Vec<_>>>()?;
            Ok(json!({ "method": "separable", "families": families }))
        }
        EnumMethod::Lambda1 => {
            let tuple = parse_tuple(&curve, &a.tuple)?;
            Ok(match enum_lambda1_gminus1(&tuple)? {
                Lambda1Outcome::Family(f) => json!({ "method": "lambda1", "families": [formats::family_to_json(&f)] }),
                Lambda1Outcome::NonExistence { i, witness } => {
                    json!({ "method": "lambda1", "families": [], "nonexistence": { "i": i, "witness": witness } })
                }
            })
        }
        EnumMethod::Scan | EnumMethod::Auto => {
            let tuple = parse_tuple(&curve, &a.tuple)?;
            let divisors: Vec<Value> =
                scan_gminus1(&tuple)?.iter().map(|v| formats::divisor_to_json(&tuple.divisor(v))).collect();
            Ok(json!({ "method": "scan", "count": divisors.len(), "divisors": divisors }))
        }
    }
}

fn first_scanned(tuple: &QTuple<'_>) -> Result<Divisor> {
    let found = scan_gminus1(tuple)?;
    let alpha = found
        .first()
        .ok_or_else(|| Error::ENotCertified(format!("no non-special divisor of degree g-1 on {:?}", tuple.places())))?;
    Ok(tuple.divisor(alpha))
}

/// Inputs when `--E` is absent: fixed divisors on the default curve,
/// otherwise the first hit of the exhaustive scan on the relevant tuple.
fn default_inputs(curve: &KummerCurve, construction: Construction, is_default_curve: bool) -> Result<Value> {
    let roots: Vec<Place> = (0..curve.root_count()).map(Place::RamifiedRoot).collect();
    match construction {
        Construction::T1 if is_default_curve => Ok(formats::divisor_to_json(&Divisor::from_pairs([
            (Place::Infinity, -1),
            (Place::RamifiedRoot(1), 1),
            (Place::RamifiedRoot(2), 2),
        ]))),
        Construction::T1 => Ok(formats::divisor_to_json(&first_scanned(&QTuple::all_ramified(curve)?)?)),
        Construction::TR if is_default_curve => Ok(formats::divisor_to_json(&Divisor::from_pairs([
            (Place::RamifiedRoot(1), 1),
            (Place::RamifiedRoot(2), 2),
        ]))),
        Construction::TR => {
            let d = first_scanned(&QTuple::all_ramified(curve)?)?;
            let first = *d.support().next().expect("degree g-1 >= 0 or a negative coefficient");
            Ok(formats::divisor_to_json(&d.plus(&Divisor::single(first, 1))))
        }
        Construction::T2 if is_default_curve => Ok(json!({
            "E1": formats::divisor_to_json(&Divisor::from_pairs(roots.iter().copied().zip([-3, 2, 3]))),
            "E2": formats::divisor_to_json(&Divisor::from_pairs([
                (Place::Infinity, 3),
                (Place::RamifiedRoot(0), -3),
                (Place::RamifiedRoot(1), 2),
            ])),
        })),
        Construction::T2 => {
            let e1 = first_scanned(&QTuple::new(curve, roots.clone())?)?;
            let mut p2 = vec![Place::Infinity];
            p2.extend_from_slice(&roots[..roots.len().saturating_sub(1)]);
            let e2 = first_scanned(&QTuple::new(curve, p2)?)?;
            Ok(json!({ "E1": formats::divisor_to_json(&e1), "E2": formats::divisor_to_json(&e2) }))
        }
    }
}

fn lcp_build(a: &BuildArgs) -> Result<Value> {
    let construction = Construction::parse(&a.construction)?;
    let (curve, is_default) = match &a.curve {
        Some(p) => (load_curve(p)?, false),
        None => (presets::hermitian(3)?, true),
    };
    let inputs = match &a.e {
        Some(p) => read_json(p)?,
        None => default_inputs(&curve, construction, is_default)?,
    };
    let eval_x: Option<Vec<FieldElement>> = a
        .eval_x
        .as_ref()
        .map(|xs| xs.iter().map(|&x| curve.field().element(x)).collect::<kummer_core::Result<_>>())
        .transpose()?;
    let eval = eval_x.as_deref();
    let result: LcpConstructionResult = match construction {
        Construction::T1 => teocodes1(&curve, &formats::divisor_on(&curve, &inputs)?, a.s, eval)?,
        Construction::TR => teocodes_r(&curve, &formats::divisor_on(&curve, &inputs)?, a.s, eval)?,
        Construction::T2 => {
            let part = |key: &str| {
                inputs
                    .get(key)
                    .ok_or_else(|| {
                        CliError::Format(format!("construction 2 needs {{\"E1\", \"E2\"}}, missing {key:?}"))
                    })
                    .and_then(|v| formats::divisor_on(&curve, v))
            };
            teocodes2(&curve, &part("E1")?, &part("E2")?, a.s, eval)?
        }
    };
    let mut v = formats::result_to_json(&curve, &result, inputs, a.emit_generators);
    v["dims"] = json!([result.dims().0, result.dims().1]);
    v["all_pass"] = Value::Bool(result.all_pass());
    Ok(v)
}

fn lcp_verify(a: &VerifyArgs) -> Result<Value> {
    let stored_json = read_json(&a.result)?;
    let StoredResult { curve, d_places, g, h, certificates, codes } = formats::result_from_json(&stored_json)?;
    let checks = verify_pair_divisors(&curve, &d_places, &g, &h, &certificates)?;
    let (c1, c2, source) = match codes {
        Some((c1, c2)) => (c1, c2, "stored"),
        None => (ag_code(&curve, &d_places, &g)?, ag_code(&curve, &d_places, &h)?, "rebuilt"),
    };
    let mut report = is_lcp(&c1, &c2)?;
    report.checks = checks;
    let all_checks = report.checks.iter().all(|c| c.passed);
    let mut v = formats::report_to_json(&report);
    v["generators"] = Value::from(source);
    v["all_pass"] = Value::Bool(report.is_lcp && all_checks);
    v["stored_verdict"] = stored_json.pointer("/report/verdict").cloned().unwrap_or(Value::Null);
    Ok(v)
}

fn code_info(a: &CodeArgs) -> Result<Value> {
    let (code, curve): (LinearCode, Option<KummerCurve>) = match (&a.code, &a.curve, &a.g) {
        (Some(path), _, _) => (formats::code_from_json(&read_json(path)?)?, None),
        (None, Some(cpath), Some(gpath)) => {
            let curve = load_curve(cpath)?;
            let g = formats::divisor_on(&curve, &read_json(gpath)?)?;
            let places = match &a.places {
                Some(ids) => parse_places(&curve, ids)?,
                None => curve.split_x_values().into_iter().flat_map(|x| curve.affine_fiber(x)).collect(),
            };
            (ag_code(&curve, &places, &g)?, Some(curve))
        }
        _ => return Err(CliError::Usage("give --code, or --curve with --G".into())),
    };
    let (distance, kind) = match min_distance(&code, curve.as_ref()) {
        Distance::Exact(d) => (json!(d), "exact"),
        Distance::LowerBoundOnly(b) => (json!(b), "lower_bound"),
        Distance::Infinite => (Value::Null, "infinite"),
    };
    let goppa = match (&curve, code.divisor()) {
        (Some(c), Some(g)) => Some(code.len() as i64 - g.degree(c)),
        _ => None,
    };
    let mut v = json!({
        "N": code.len(),
        "k": code.dim(),
        "field": formats::field_to_json(code.field()),
        "distance": distance,
        "distance_kind": kind,
        "goppa_bound": goppa,
    });
    if let Some(ell) = code.ell() {
        v["ell_G"] = json!(ell);
    }
    if a.samples > 0 && code.dim() > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        let q = code.field().size();
        let mut min_weight: Option<usize> = None;
        let mut violations = 0;
        for _ in 0..a.samples {
            let msg: Vec<FieldElement> =
                (0..code.dim()).map(|_| FieldElement::from_encoding(rng.gen_range(0..q))).collect();
            let w = weight(&code.encode(&msg));
            if w == 0 {
                continue;
            }
            min_weight = Some(min_weight.map_or(w, |m| m.min(w)));
            if goppa.is_some_and(|b| (w as i64) < b) {
                violations += 1;
            }
        }
        v["samples"] =
            json!({ "count": a.samples, "seed": a.seed, "min_weight": min_weight, "goppa_violations": violations });
    }
    if a.export {
        v["code"] = formats::code_to_json(&code);
    }
    Ok(v)
}
