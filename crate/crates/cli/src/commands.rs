//! The `growth`, `rate` and `check` subcommands.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use coxgrowth::{
    classify_connected, classify_number, compactness_check, euler_characteristic, format_enclosure, gram_matrix,
    growth_rate, growth_series, has_hyperbolic_signature, is_self_reciprocal, reciprocity_type, series_coefficients,
    signature, solve_prism_length, validate_graph, Compactness, GrowthSeries, IntPolynomial, NumberClass,
    PrismLength, RootError, SignatureResult, VinbergGraph, DEFAULT_PRECISION_BITS,
};

use crate::input::{describe, digits_for, load_graph, parse_precision};
use crate::output::{compute_err, CliError, Record, Table};
use crate::InputArgs;

/// An integer as a JSON number when it fits in `i64`, else a string.
pub fn int_json(n: &BigInt) -> Value {
    i64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

#[derive(Serialize)]
pub struct GrowthResult {
    pub rank: usize,
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
    pub finite: bool,
    pub reciprocity: String,
    pub euler_characteristic: String,
    pub steinberg_terms: String,
    pub census_hash: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<Value>>,
}

pub fn growth_result(f: &GrowthSeries, coeffs: Option<usize>) -> GrowthResult {
    GrowthResult {
        rank: f.rank(),
        numerator: f.numerator().clone(),
        denominator: f.denominator().clone(),
        finite: f.is_polynomial(),
        reciprocity: reciprocity_type(f.function()).to_string(),
        euler_characteristic: euler_characteristic(f.function()).to_string(),
        steinberg_terms: coxgrowth::growth::format_steinberg_terms(f.steinberg_terms()),
        census_hash: f.census_hash().to_string(),
        coefficients: coeffs.map(|k| series_coefficients(f.function(), k).iter().map(int_json).collect()),
    }
}

pub fn growth(input: &InputArgs, coeffs: Option<usize>) -> Result<Record, CliError> {
    let g = load_graph(input)?;
    let f = growth_series(&g).map_err(compute_err)?;
    let r = growth_result(&f, coeffs);
    let mut t = Table::fields();
    t.field("rank", r.rank);
    t.field("numerator", f.numerator());
    t.field("denominator", f.denominator());
    t.field("reciprocity", &r.reciprocity);
    t.field("euler characteristic", &r.euler_characteristic);
    if let Some(cs) = &r.coefficients {
        let s: Vec<String> = cs.iter().map(|v| v.to_string().trim_matches('"').to_string()).collect();
        t.field("coefficients", s.join(", "));
    }
    let mut input_json = describe(input);
    input_json["coeffs"] = json!(coeffs);
    Record::new("growth", input_json, r, t)
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RateResult {
    Finite { tau: String },
    Subexponential { tau: String },
    Exponential(Box<ExponentialRate>),
}

#[derive(Serialize)]
pub struct ExponentialRate {
    pub tau: String,
    pub interval: [String; 2],
    pub radius: String,
    pub defining_polynomial: IntPolynomial,
    pub degree: usize,
    pub palindromic: String,
    pub cyclotomic_factors: Vec<(usize, u32)>,
    pub class: NumberClass,
    pub flags: Vec<&'static str>,
}

pub fn rate_result(g: &VinbergGraph, eps: &BigRational, warnings: &mut Vec<String>) -> Result<RateResult, CliError> {
    let f = growth_series(g).map_err(compute_err)?;
    let digits = digits_for(eps);
    let r = match growth_rate(f.function(), eps) {
        Ok(r) => r,
        Err(RootError::FiniteGroup) => return Ok(RateResult::Finite { tau: "1".into() }),
        Err(RootError::NotExponential) => return Ok(RateResult::Subexponential { tau: "1".into() }),
        Err(e) => return Err(compute_err(e)),
    };
    let class = classify_number(r.defining_polynomial(), &r.tau).map_err(compute_err)?;
    for (name, v) in [("salem", class.salem), ("pisot", class.pisot), ("perron", class.perron)] {
        if v.certification == coxgrowth::Certification::Heuristic {
            warnings.push(format!("{name} verdict is not certified"));
        }
    }
    let p = r.defining_polynomial().clone();
    Ok(RateResult::Exponential(Box::new(ExponentialRate {
        tau: r.tau.to_decimal(digits),
        interval: format_enclosure(r.tau.lo(), r.tau.hi(), digits + 4),
        radius: r.radius.to_decimal(digits),
        degree: p.degree_or_zero(),
        palindromic: is_self_reciprocal(&p).to_string(),
        defining_polynomial: p,
        cyclotomic_factors: r.cyclotomic.clone(),
        flags: class.flags(),
        class,
    })))
}

pub fn rate(input: &InputArgs, precision: Option<&str>) -> Result<Record, CliError> {
    let g = load_graph(input)?;
    let eps = match precision {
        Some(s) => parse_precision(s)?,
        None => BigRational::new(1.into(), BigInt::from(10u64).pow(12)),
    };
    let mut warnings = Vec::new();
    let r = rate_result(&g, &eps, &mut warnings)?;
    let mut t = Table::fields();
    match &r {
        RateResult::Finite { tau } => {
            t.field("growth rate", tau);
            t.field("kind", "finite group");
        }
        RateResult::Subexponential { tau } => {
            t.field("growth rate", tau);
            t.field("kind", "polynomial growth");
        }
        RateResult::Exponential(e) => {
            t.field("growth rate", &e.tau);
            t.field("interval", format!("[{}, {}]", e.interval[0], e.interval[1]));
            t.field("radius", &e.radius);
            t.field("defining polynomial", &e.defining_polynomial);
            t.field("degree", e.degree);
            t.field("self-reciprocity", &e.palindromic);
            let flags = if e.flags.is_empty() { "none".to_string() } else { e.flags.join(", ") };
            t.field("class", flags);
        }
    }
    let mut input_json = describe(input);
    input_json["precision"] = json!(precision);
    let mut rec = Record::new("rate", input_json, r, t)?;
    rec.warnings = warnings;
    Ok(rec)
}

#[derive(Serialize)]
pub struct CheckResult {
    pub dimension: usize,
    pub diagnostics: coxgrowth::GraphDiagnostics,
    pub diagram: Option<String>,
    pub signature: SignatureResult,
    pub hyperbolic: bool,
    pub compactness: Compactness,
    pub prism: Option<PrismLength>,
    pub verdict: String,
    pub invariant_violations: Vec<String>,
}

pub fn check_result(g: &VinbergGraph, n: usize, warnings: &mut Vec<String>) -> Result<CheckResult, CliError> {
    let diagnostics = validate_graph(g);
    let unknown = g.dotted_edges().filter(|(_, _, c)| c.is_none()).count();
    let prism = if unknown == 1 {
        match solve_prism_length(g, n, DEFAULT_PRECISION_BITS) {
            Ok(p) => Some(p),
            Err(e) => {
                warnings.push(format!("dotted distance not solved: {e}"));
                None
            }
        }
    } else {
        None
    };
    let gram = match &prism {
        Some(p) => p.gram.clone(),
        None => gram_matrix(g),
    };
    let defaulted = gram.defaulted_edges().len();
    if defaulted > 0 {
        warnings.push(format!("{defaulted} dotted edge(s) without a distance use the Gram entry -1"));
    }
    let sig = signature(&gram);
    let hyperbolic = has_hyperbolic_signature(&sig, n);
    let compactness = compactness_check(g, n).map_err(compute_err)?;
    let diagram = classify_connected(&g.coxeter_matrix()).ok().map(|t| format!("{:?}", t.kind).to_lowercase());
    let verdict = if hyperbolic && compactness.is_compact() {
        format!("compact hyperbolic polyhedron in H^{n}")
    } else if sig.negatives == 0 {
        "not hyperbolic: the Gram matrix is positive semidefinite".to_string()
    } else if !hyperbolic {
        "not hyperbolic".to_string()
    } else {
        "hyperbolic, not compact".to_string()
    };
    let mut invariant_violations = Vec::new();
    if !sig.certified {
        invariant_violations.push("signature is not certified".to_string());
    }
    if hyperbolic && compactness.is_compact() && !diagnostics.signature_condition_ok() {
        invariant_violations.push(format!(
            "compact verdict contradicts cut nodes {:?} separating dotted edges",
            diagnostics.cut_node_violations
        ));
    }
    Ok(CheckResult {
        dimension: n,
        diagnostics,
        diagram,
        signature: sig,
        hyperbolic,
        compactness,
        prism,
        verdict,
        invariant_violations,
    })
}

pub fn check(input: &InputArgs, dim: Option<usize>) -> Result<Record, CliError> {
    let g = load_graph(input)?;
    let n = dim
        .or(g.dimension())
        .ok_or_else(|| CliError::Input("--dim is required when the graph declares no dimension".into()))?;
    let mut warnings = Vec::new();
    let r = check_result(&g, n, &mut warnings)?;
    let mut t = Table::fields();
    t.field("rank", r.diagnostics.rank);
    t.field("connected", r.diagnostics.connected);
    t.field("dotted pairs", r.diagnostics.dotted_edges);
    if let Some(d) = &r.diagram {
        t.field("diagram", d);
    }
    t.field(
        "signature",
        format!("({}, {}, {})", r.signature.positives, r.signature.negatives, r.signature.zeros),
    );
    t.field(
        "compactness",
        match &r.compactness {
            Compactness::Compact => "compact".to_string(),
            Compactness::NotCompact { witness, extensions } => {
                let w: Vec<usize> = witness.iter().map(|v| v + 1).collect();
                format!("not compact: {w:?} extends to {extensions} vertices")
            }
        },
    );
    if let Some(p) = &r.prism {
        t.field("dotted edge", format!("{}-{}", p.edge.0 + 1, p.edge.1 + 1));
        t.field("cosh l", coxgrowth::format_decimal(&p.cosh.midpoint(), 12));
        t.field("cosh l exact", &p.closed_form);
    }
    t.field("verdict", &r.verdict);
    let failed = !r.invariant_violations.is_empty();
    let mut input_json = describe(input);
    input_json["dim"] = json!(n);
    let mut rec = Record::new("check", input_json, r, t)?;
    rec.warnings = warnings;
    rec.failed = failed;
    Ok(rec)
}
