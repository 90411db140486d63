//! JSON encodings of fields, curves, divisors, functions, codes and LCP
//! results. Objects are built as `serde_json::Value`, whose maps keep keys
//! sorted, so output is byte-stable.

use kummer_core::codes::{Check, EquivalenceCertificate, LcpReport, PairCertificates};
use kummer_core::constructions::LcpConstructionResult;
use kummer_core::nonspecial::GMinus1Family;
use kummer_core::{
    CurveFunction, Divisor, Field, FieldElement, Generator, KummerCurve, LinearCode, Matrix, Place, Poly,
};
use serde_json::{json, Map, Value};

use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn bad(what: impl Into<String>) -> CliError {
    CliError::Format(what.into())
}

fn get<'v>(v: &'v Value, key: &str) -> Result<&'v Value> {
    v.get(key).ok_or_else(|| bad(format!("missing key {key:?}")))
}

fn get_i64(v: &Value, key: &str) -> Result<i64> {
    get(v, key)?.as_i64().ok_or_else(|| bad(format!("{key:?} must be an integer")))
}

fn get_u32(v: &Value, key: &str) -> Result<u32> {
    let x = get_i64(v, key)?;
    u32::try_from(x).map_err(|_| bad(format!("{key:?} = {x} out of range")))
}

fn get_array<'v>(v: &'v Value, key: &str) -> Result<&'v Vec<Value>> {
    get(v, key)?.as_array().ok_or_else(|| bad(format!("{key:?} must be an array")))
}

fn as_u32(v: &Value) -> Result<u32> {
    v.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(|| bad(format!("{v} is not an element encoding")))
}

fn element(field: &Field, v: &Value) -> Result<FieldElement> {
    Ok(field.element(as_u32(v)?)?)
}

pub fn field_to_json(field: &Field) -> Value {
    json!({ "p": field.characteristic(), "e": field.degree(), "modulus": field.modulus() })
}

/// Reads `{"p", "e", "modulus"?}`. A supplied modulus must be the canonical one.
pub fn field_from_json(v: &Value) -> Result<Field> {
    let field = Field::new(get_u32(v, "p")?, get_u32(v, "e")?)?;
    if let Some(m) = v.get("modulus") {
        let given: Vec<u32> = m
            .as_array()
            .ok_or_else(|| bad("\"modulus\" must be an array"))?
            .iter()
            .map(as_u32)
            .collect::<Result<_>>()?;
        if given != field.modulus() {
            return Err(bad(format!("modulus {given:?} is not the canonical {:?}", field.modulus())));
        }
    }
    Ok(field)
}

pub fn curve_to_json(curve: &KummerCurve) -> Value {
    let roots: Vec<Value> = curve.roots().iter().map(|r| json!({ "a": r.a.encoding(), "lambda": r.lambda })).collect();
    json!({
        "field": field_to_json(curve.field()),
        "m": curve.m(),
        "leading": curve.leading().encoding(),
        "roots": roots,
    })
}

pub fn curve_from_json(v: &Value) -> Result<KummerCurve> {
    let field = field_from_json(get(v, "field")?)?;
    let m = get_u32(v, "m")?;
    let leading = match v.get("leading") {
        Some(l) => element(&field, l)?,
        None => FieldElement::ONE,
    };
    let roots = get_array(v, "roots")?
        .iter()
        .map(|r| Ok((element(&field, get(r, "a")?)?, get_u32(r, "lambda")?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(KummerCurve::new(field, m, leading, roots)?)
}

pub fn divisor_to_json(d: &Divisor) -> Value {
    let coeffs: Vec<Value> = d.iter().map(|(p, &c)| json!({ "place": p.id(), "c": c })).collect();
    json!({ "coeffs": coeffs })
}

pub fn divisor_from_json(v: &Value) -> Result<Divisor> {
    let mut d = Divisor::zero();
    for entry in get_array(v, "coeffs")? {
        let id = get(entry, "place")?.as_str().ok_or_else(|| bad("\"place\" must be a string"))?;
        d.add_at(id.parse::<Place>()?, get_i64(entry, "c")?);
    }
    Ok(d)
}

/// Divisor on a curve: every place must exist there.
pub fn divisor_on(curve: &KummerCurve, v: &Value) -> Result<Divisor> {
    let d = divisor_from_json(v)?;
    for p in d.support() {
        curve.validate_place(p)?;
    }
    Ok(d)
}

fn poly_to_json(p: &Poly) -> Value {
    Value::from(p.coeffs().iter().map(|c| c.encoding()).collect::<Vec<_>>())
}

fn poly_from_json(field: &Field, v: &Value) -> Result<Poly> {
    let coeffs = v
        .as_array()
        .ok_or_else(|| bad("polynomial must be an array"))?
        .iter()
        .map(|c| element(field, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

/// `{"terms": [{"ypow", "num", "den"}]}`, zero coefficients omitted.
pub fn function_to_json(f: &CurveFunction) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .iter()
        .enumerate()
        .filter(|(_, (num, _))| !num.is_zero())
        .map(|(i, (num, den))| json!({ "ypow": i, "num": poly_to_json(num), "den": poly_to_json(den) }))
        .collect();
    json!({ "terms": terms })
}

pub fn function_from_json(curve: &KummerCurve, v: &Value) -> Result<CurveFunction> {
    let field = curve.field();
    let mut f = CurveFunction::zero(curve.m());
    for t in get_array(v, "terms")? {
        let i = get_u32(t, "ypow")? as usize;
        let term = CurveFunction::monomial(
            curve.m(),
            i,
            poly_from_json(field, get(t, "num")?)?,
            poly_from_json(field, get(t, "den")?)?,
        )?;
        f = f.add(&term, field);
    }
    Ok(f)
}

pub fn code_to_json(code: &LinearCode) -> Value {
    let gen = code.generator();
    let rows: Vec<Value> =
        gen.row_vecs().iter().map(|r| Value::from(r.iter().map(|a| a.encoding()).collect::<Vec<_>>())).collect();
    json!({ "N": code.len(), "k": code.dim(), "field": field_to_json(code.field()), "generator": rows })
}

/// Reads a code export; `k` and `N` must agree with the matrix.
pub fn code_from_json(v: &Value) -> Result<LinearCode> {
    let field = field_from_json(get(v, "field")?)?;
    let n = get_u32(v, "N")? as usize;
    let k = get_u32(v, "k")? as usize;
    let rows = get_array(v, "generator")?
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| bad("generator rows must be arrays"))?
                .iter()
                .map(|a| element(&field, a))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let matrix = Matrix::from_rows(field, n, rows)?;
    if matrix.rank() != k || matrix.rows() != k {
        return Err(bad(format!("generator has {} rows of rank {}, but k = {k}", matrix.rows(), matrix.rank())));
    }
    Ok(LinearCode::from_generator(matrix))
}

fn checks_to_json(checks: &[Check]) -> (Value, Value) {
    let mut passed = Map::new();
    let mut detail = Map::new();
    for c in checks {
        passed.insert(c.name.clone(), Value::Bool(c.passed));
        detail.insert(c.name.clone(), Value::String(c.detail.clone()));
    }
    (Value::Object(passed), Value::Object(detail))
}

pub fn report_to_json(r: &LcpReport) -> Value {
    let (checks, details) = checks_to_json(&r.checks);
    json!({
        "k1": r.k1,
        "k2": r.k2,
        "N": r.n,
        "rank_of_stack": r.rank_of_stack,
        "verdict": r.verdict(),
        "checks": checks,
        "check_details": details,
    })
}

fn generator_to_json(g: Generator, c: i64) -> Value {
    match g {
        Generator::Y => json!({ "generator": "y", "c": c }),
        Generator::XMinus(b) => json!({ "generator": "x-b", "b": b.encoding(), "c": c }),
    }
}

fn generator_from_json(field: &Field, v: &Value) -> Result<(Generator, i64)> {
    let c = get_i64(v, "c")?;
    match get(v, "generator")?.as_str() {
        Some("y") => Ok((Generator::Y, c)),
        Some("x-b") => Ok((Generator::XMinus(element(field, get(v, "b")?)?), c)),
        _ => Err(bad("generator must be \"y\" or \"x-b\"")),
    }
}

fn certificate_to_json(c: &EquivalenceCertificate) -> Value {
    let chain: Vec<Value> = c.chain.iter().map(|&(g, k)| generator_to_json(g, k)).collect();
    json!({ "chain": chain, "reduced": divisor_to_json(&c.reduced) })
}

fn certificate_from_json(curve: &KummerCurve, v: &Value) -> Result<EquivalenceCertificate> {
    let chain =
        get_array(v, "chain")?.iter().map(|g| generator_from_json(curve.field(), g)).collect::<Result<Vec<_>>>()?;
    Ok(EquivalenceCertificate { chain, reduced: divisor_on(curve, get(v, "reduced")?)? })
}

pub fn certificates_to_json(c: &PairCertificates) -> Value {
    json!({ "gcd": certificate_to_json(&c.gcd), "lmd_minus_d": certificate_to_json(&c.lmd_minus_d) })
}

pub fn certificates_from_json(curve: &KummerCurve, v: &Value) -> Result<PairCertificates> {
    Ok(PairCertificates {
        gcd: certificate_from_json(curve, get(v, "gcd")?)?,
        lmd_minus_d: certificate_from_json(curve, get(v, "lmd_minus_d")?)?,
    })
}

pub fn family_to_json(f: &GMinus1Family) -> Value {
    let places: Vec<String> = f.places.iter().map(Place::id).collect();
    json!({
        "places": places,
        "alpha0": f.alpha0,
        "alpha_multiset": f.alpha_multiset,
        "j_sum": f.j_sum,
        "canonical": divisor_to_json(&f.canonical),
    })
}

pub fn places_to_json(places: &[Place]) -> Value {
    Value::from(places.iter().map(Place::id).collect::<Vec<_>>())
}

pub fn places_from_json(curve: &KummerCurve, v: &Value) -> Result<Vec<Place>> {
    v.as_array()
        .ok_or_else(|| bad("place list must be an array"))?
        .iter()
        .map(|p| {
            let place = p.as_str().ok_or_else(|| bad("place ids are strings"))?.parse::<Place>()?;
            curve.validate_place(&place)?;
            Ok(place)
        })
        .collect()
}

/// The serialized construction result. `inputs` carries the `E` divisor(s)
/// as given; `emit_generators` adds both generator matrices.
pub fn result_to_json(curve: &KummerCurve, r: &LcpConstructionResult, inputs: Value, emit_generators: bool) -> Value {
    let mut v = json!({
        "construction": r.construction.as_str(),
        "s": r.s,
        "curve": curve_to_json(curve),
        "E": inputs,
        "d_places": places_to_json(&r.d_places),
        "G": divisor_to_json(&r.g),
        "H": divisor_to_json(&r.h),
        "certificates": certificates_to_json(&r.certificates),
        "report": report_to_json(&r.report),
        "expected_dims": [r.expected_dims.0, r.expected_dims.1],
        "kernel_degenerate": r.kernel_degenerate,
    });
    if emit_generators {
        v["codes"] = json!([code_to_json(&r.codes.0), code_to_json(&r.codes.1)]);
    }
    v
}

/// The parts of a serialized result needed to re-verify it.
pub struct StoredResult {
    pub curve: KummerCurve,
    pub d_places: Vec<Place>,
    pub g: Divisor,
    pub h: Divisor,
    pub certificates: PairCertificates,
    pub codes: Option<(LinearCode, LinearCode)>,
}

pub fn result_from_json(v: &Value) -> Result<StoredResult> {
    let curve = curve_from_json(get(v, "curve")?)?;
    let d_places = places_from_json(&curve, get(v, "d_places")?)?;
    let g = divisor_on(&curve, get(v, "G")?)?;
    let h = divisor_on(&curve, get(v, "H")?)?;
    let certificates = certificates_from_json(&curve, get(v, "certificates")?)?;
    let codes = match v.get("codes") {
        None | Some(Value::Null) => None,
        Some(c) => {
            let pair = c.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("\"codes\" must hold two codes"))?;
            Some((code_from_json(&pair[0])?, code_from_json(&pair[1])?))
        }
    };
    Ok(StoredResult { curve, d_places, g, h, certificates, codes })
}
