//! JSON request handling behind the `multischur` binary.
//!
//! A request is one JSON object carrying `command` plus that command's
//! fields. Responses are plain JSON values; failures become
//! `{"error": {"kind", "message", "operation"}}`.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::exactalg::{identifiers, Scalar};
use crate::expansions::{
    coefficients_json, eval_symfunc, expand_in_refined_basis, flagged_schur, hall_inner, multi_schur,
    refined_dual_grothendieck, schur_expand_multischur, skew_function, skew_multi_schur, stable_dual_in_g,
    stable_grothendieck_schur, truncated_dual_expansion, verify, SymFunc,
};
use crate::shapes::{Alphabet, AlphabetSequence, Partition, Sequence};

/// Names that user expressions may not bind.
pub const RESERVED: &[&str] = &["beta"];

/// Keys whose string values are selectors, not expressions.
const SELECTOR_KEYS: &[&str] = &["command", "basis", "theorem", "kind", "stem"];

/// A failed request, rendered as the error object.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub kind: String,
    pub message: String,
    pub operation: String,
}

impl CliError {
    fn usage(operation: &str, message: impl Into<String>) -> CliError {
        CliError { kind: "usage".into(), message: message.into(), operation: operation.into() }
    }

    fn from_error(operation: &str, e: Error) -> CliError {
        CliError { kind: e.kind().into(), message: e.to_string(), operation: operation.into() }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind, "message": self.message, "operation": self.operation}})
    }
}

/// Result of a request: the JSON body and whether it reports success.
/// A verification that runs to completion but finds a counterexample
/// yields `ok = false` with its report as the body.
#[derive(Debug, Clone, PartialEq)]
pub struct Response {
    pub body: Value,
    pub ok: bool,
}

impl Response {
    fn ok(body: Value) -> Response {
        Response { body, ok: true }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Request {
    #[serde(rename = "command")]
    _command: Option<String>,
    #[serde(alias = "λ")]
    lambda: Option<Partition>,
    #[serde(alias = "μ")]
    mu: Option<Partition>,
    bx: Option<AlphabetSequence>,
    by: Option<AlphabetSequence>,
    bp: Option<AlphabetSequence>,
    t: Option<Sequence>,
    basis: Option<String>,
    r: Option<usize>,
    #[serde(alias = "D", alias = "d")]
    truncation: Option<usize>,
    #[serde(rename = "maxWeight", alias = "max_weight")]
    max_weight: Option<usize>,
    #[serde(rename = "generalWeight", alias = "general_weight")]
    general_weight: Option<usize>,
    f: Option<SymFunc>,
    g: Option<SymFunc>,
    vals: Option<Alphabet>,
    flag: Option<Vec<usize>>,
    vars: Option<Alphabet>,
    theorem: Option<String>,
    n: Option<usize>,
    m: Option<usize>,
    nvars: Option<usize>,
    window: Option<i64>,
    seed: Option<u64>,
    cases: Option<usize>,
}

fn need<T: Clone>(op: &str, field: &str, v: &Option<T>) -> Result<T, CliError> {
    v.clone().ok_or_else(|| CliError::usage(op, format!("missing field `{field}`")))
}

/// Rejects reserved names inside expression strings anywhere in the request.
fn check_reserved(op: &str, v: &Value) -> Result<(), CliError> {
    match v {
        Value::String(s) => {
            if let Some(name) = identifiers(s).into_iter().find(|n| RESERVED.contains(&n.as_str())) {
                return Err(CliError::usage(op, format!("`{name}` is reserved and cannot name an indeterminate")));
            }
            Ok(())
        }
        Value::Array(items) => items.iter().try_for_each(|x| check_reserved(op, x)),
        Value::Object(map) => map
            .iter()
            .filter(|(k, _)| !SELECTOR_KEYS.contains(&k.as_str()))
            // full Scalar forms (`{"coefficient", "monomial"}`) are data, not declarations
            .filter(|(k, _)| k.as_str() != "monomial" && k.as_str() != "coefficient")
            .try_for_each(|(_, x)| check_reserved(op, x)),
        _ => Ok(()),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library values always serialize")
}

/// Runs one request.
pub fn run(request: &Value) -> Result<Response, CliError> {
    let command = request.get("command").and_then(Value::as_str).unwrap_or("").to_string();
    if command.is_empty() {
        return Err(CliError::usage("request", "missing `command`"));
    }
    check_reserved(&command, request)?;
    let req: Request =
        serde_json::from_value(request.clone()).map_err(|e| CliError::usage(&command, format!("invalid request: {e}")))?;
    match command.as_str() {
        "multischur" => run_multischur(&req),
        "expand" => run_expand(&req),
        "skew" => run_skew(&req),
        "inner" => run_inner(&req),
        "eval" => run_eval(&req),
        "verify" => run_verify(&req),
        other => Err(CliError::usage(
            "request",
            format!("unknown command `{other}` (expected expand, skew, inner, eval, multischur or verify)"),
        )),
    }
}

fn run_multischur(req: &Request) -> Result<Response, CliError> {
    let lambda = need("multischur", "lambda", &req.lambda)?;
    if let Some(flag) = &req.flag {
        let vars = need("flagged_schur", "vars", &req.vars)?;
        let s = flagged_schur(&lambda, flag, vars.entries()).map_err(|e| CliError::from_error("flagged_schur", e))?;
        return Ok(Response::ok(to_value(&s)));
    }
    let bx = need("multischur", "bx", &req.bx)?;
    let by = req.by.clone().unwrap_or_else(AlphabetSequence::empty);
    let s = match &req.mu {
        Some(mu) => {
            skew_multi_schur(&lambda, mu, &bx, &by).map_err(|e| CliError::from_error("skew_multi_schur", e))?
        }
        None => multi_schur(&lambda, &bx, &by).map_err(|e| CliError::from_error("multi_schur", e))?,
    };
    Ok(Response::ok(to_value(&s)))
}

fn run_expand(req: &Request) -> Result<Response, CliError> {
    let lambda = need("expand", "lambda", &req.lambda)?;
    let basis = need("expand", "basis", &req.basis)?;
    let by = || req.by.clone().unwrap_or_else(AlphabetSequence::empty);
    let body = match basis.as_str() {
        "multischur" => {
            let op = "schur_expand_multischur";
            to_value(&schur_expand_multischur(&lambda, &need(op, "bx", &req.bx)?, &by()).map_err(|e| CliError::from_error(op, e))?)
        }
        "refined" => {
            let op = "refined_dual_grothendieck";
            to_value(&refined_dual_grothendieck(&lambda, &need(op, "t", &req.t)?).map_err(|e| CliError::from_error(op, e))?)
        }
        "in-refined" => {
            let op = "expand_in_refined_basis";
            let c = expand_in_refined_basis(&lambda, &need(op, "bx", &req.bx)?, &by(), &need(op, "t", &req.t)?)
                .map_err(|e| CliError::from_error(op, e))?;
            coefficients_json("refined-dual-grothendieck", None, &c)
        }
        "grothendieck" => {
            let op = "stable_grothendieck_schur";
            let d = need(op, "truncation", &req.truncation)?;
            to_value(&stable_grothendieck_schur(&lambda, &need(op, "t", &req.t)?, d).map_err(|e| CliError::from_error(op, e))?)
        }
        "truncated-dual" => {
            let op = "truncated_dual_expansion";
            let d = need(op, "truncation", &req.truncation)?;
            let r = req.r.unwrap_or(lambda.len());
            to_value(&truncated_dual_expansion(&lambda, &need(op, "bx", &req.bx)?, r, d).map_err(|e| CliError::from_error(op, e))?)
        }
        "stable-dual-in-G" => {
            let op = "stable_dual_in_g";
            let d = need(op, "truncation", &req.truncation)?;
            let c = stable_dual_in_g(&lambda, &need(op, "bx", &req.bx)?, &need(op, "t", &req.t)?, d)
                .map_err(|e| CliError::from_error(op, e))?;
            coefficients_json("stable-grothendieck", Some(d), &c)
        }
        other => {
            return Err(CliError::usage(
                "expand",
                format!(
                    "unknown basis `{other}` (expected multischur, refined, in-refined, grothendieck, truncated-dual or stable-dual-in-G)"
                ),
            ))
        }
    };
    Ok(Response::ok(body))
}

fn run_skew(req: &Request) -> Result<Response, CliError> {
    let op = "skew_function";
    let lambda = need(op, "lambda", &req.lambda)?;
    let mu = req.mu.clone().unwrap_or_else(Partition::empty);
    let bx = need(op, "bx", &req.bx)?;
    let by = req.by.clone().unwrap_or_else(AlphabetSequence::empty);
    let bp = need(op, "bp", &req.bp)?;
    let f = skew_function(&lambda, &mu, &bx, &by, &bp).map_err(|e| CliError::from_error(op, e))?;
    Ok(Response::ok(to_value(&f)))
}

fn run_inner(req: &Request) -> Result<Response, CliError> {
    let op = "hall_inner";
    let f = need(op, "f", &req.f)?;
    let g = need(op, "g", &req.g)?;
    let s = hall_inner(&f, &g).map_err(|e| CliError::from_error(op, e))?;
    Ok(Response::ok(to_value(&s)))
}

fn run_eval(req: &Request) -> Result<Response, CliError> {
    let op = "eval_symfunc";
    let f = need(op, "f", &req.f)?;
    let vals = need(op, "vals", &req.vals)?;
    let s: Scalar = eval_symfunc(&f, vals.entries());
    Ok(Response::ok(to_value(&s)))
}

fn run_verify(req: &Request) -> Result<Response, CliError> {
    let theorem = need("verify", "theorem", &req.theorem)?;
    let op = format!("verify/{theorem}");
    let err = |e: Error| CliError::from_error(&op, e);
    let t = req.t.clone().unwrap_or_else(|| Sequence::symbolic("t"));
    let n = req.n.unwrap_or(2);
    let m = req.m.unwrap_or(2);
    let seed = req.seed.unwrap_or(0);
    let cases = req.cases.unwrap_or(50);
    let report = match theorem.as_str() {
        "orthonormality" => verify::orthonormality(&t, req.max_weight.unwrap_or(5)).map_err(err)?,
        "dual-engine" => verify::dual_engine(&t, req.max_weight.unwrap_or(4)).map_err(err)?,
        "hall-duality" => verify::hall_duality(&t, req.truncation.unwrap_or(5)).map_err(err)?,
        "cauchy" => verify::cauchy(&t, req.truncation.unwrap_or(3), n, m).map_err(err)?,
        "branching" => {
            let w = req.max_weight.unwrap_or(5);
            verify::branching(&t, w, n, m, req.general_weight.unwrap_or(w.min(3))).map_err(err)?
        }
        "truncation-stability" => verify::truncation_stability(
            &t,
            req.max_weight.unwrap_or(3),
            req.r.unwrap_or(3),
            req.truncation.unwrap_or(5),
        )
        .map_err(err)?,
        "beta-chain" => {
            verify::beta_chain(req.max_weight.unwrap_or(4), req.nvars.unwrap_or(2), req.truncation.unwrap_or(5))
                .map_err(err)?
        }
        "classical" => {
            verify::classical(req.max_weight.unwrap_or(6), req.nvars.unwrap_or(4), req.window.unwrap_or(3)).map_err(err)?
        }
        "ring-axioms" => verify::ring_axioms(seed, cases).map_err(err)?,
        "dressing" => verify::dressing(seed, cases).map_err(err)?,
        other => {
            return Err(CliError::usage(
                "verify",
                format!(
                    "unknown theorem `{other}` (expected orthonormality, dual-engine, hall-duality, cauchy, branching, \
                     truncation-stability, beta-chain, classical, ring-axioms or dressing)"
                ),
            ))
        }
    };
    Ok(Response { ok: report.passed, body: to_value(&report) })
}

/// Writes flag overrides into the raw request before validation.
pub fn apply_overrides(
    request: &mut Value,
    command: Option<&str>,
    max_weight: Option<usize>,
    truncation: Option<usize>,
    seed: Option<u64>,
) -> Result<(), CliError> {
    let Value::Object(map) = request else {
        return Err(CliError::usage("request", "request must be a JSON object"));
    };
    if let Some(c) = command {
        map.insert("command".into(), json!(c));
    }
    if let Some(w) = max_weight {
        map.remove("max_weight");
        map.insert("maxWeight".into(), json!(w));
    }
    if let Some(d) = truncation {
        map.remove("D");
        map.remove("d");
        map.insert("truncation".into(), json!(d));
    }
    if let Some(s) = seed {
        map.insert("seed".into(), json!(s));
    }
    Ok(())
}
