//! Graph input and numeric flag parsing.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use coxgrowth::{parse_coxeter_symbol, parse_graph_file, symbol_to_graph, VinbergGraph};

use crate::output::CliError;
use crate::InputArgs;

pub fn load_graph(input: &InputArgs) -> Result<VinbergGraph, CliError> {
    match (&input.symbol, &input.file) {
        (Some(s), None) => parse_coxeter_symbol(s)
            .map(|s| symbol_to_graph(&s))
            .map_err(|e| CliError::Input(e.to_string())),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            parse_graph_file(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        _ => Err(CliError::Input("exactly one of --symbol and --file is required".into())),
    }
}

pub fn describe(input: &InputArgs) -> Value {
    match (&input.symbol, &input.file) {
        (Some(s), _) => json!({ "symbol": s }),
        (_, Some(p)) => json!({ "file": p.display().to_string() }),
        _ => Value::Null,
    }
}

/// Parse a positive decimal such as `0.001`, `1e-20` or `2.5E-8`.
pub fn parse_precision(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Input(format!("invalid precision `{s}`"));
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let ten = BigInt::from(10);
    let shift = exp - frac.len() as i32;
    let value = if shift >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, shift as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-shift) as usize))
    };
    if value <= BigRational::from_integer(0.into()) {
        return Err(bad());
    }
    Ok(value)
}

/// Number of decimal places resolved by an interval of width `eps`.
pub fn digits_for(eps: &BigRational) -> usize {
    let mut d: usize = 0;
    let mut scale = BigRational::from_integer(1.into());
    let ten = BigRational::from_integer(10.into());
    while &scale > eps && d < 60 {
        scale /= &ten;
        d += 1;
    }
    d.saturating_sub(1).max(1)
}
