use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Exact value of `cosh ρ` for the distance `ρ` between two disjoint facets.
///
/// Either a rational number or `(a + b√c)/d` with `c > 1` square-free,
/// `b != 0`, `d > 0`, and `gcd(a, b, d) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoshDistance {
    Rational(BigRational),
    Surd {
        a: BigInt,
        b: BigInt,
        c: u64,
        d: BigInt,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCoshError(pub String);

impl fmt::Display for ParseCoshError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ParseCoshError {}

/// Sign of `u + v√c` for `c >= 0`.
pub(crate) fn sign_of_surd(u: &BigInt, v: &BigInt, c: u64) -> Ordering {
    let su = u.sign();
    let sv = if c == 0 { num_bigint::Sign::NoSign } else { v.sign() };
    use num_bigint::Sign::*;
    match (su, sv) {
        (NoSign, NoSign) => Ordering::Equal,
        (Plus, Plus) | (Plus, NoSign) | (NoSign, Plus) => Ordering::Greater,
        (Minus, Minus) | (Minus, NoSign) | (NoSign, Minus) => Ordering::Less,
        (Plus, Minus) => (u * u).cmp(&(v * v * BigInt::from(c))),
        (Minus, Plus) => (v * v * BigInt::from(c)).cmp(&(u * u)),
    }
}

impl CoshDistance {
    pub fn integer(n: i64) -> Self {
        CoshDistance::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(r: BigRational) -> Self {
        CoshDistance::Rational(r)
    }

    /// `(a + b√c)/d`, normalised; collapses to a rational when `√c` is.
    pub fn surd(a: BigInt, b: BigInt, c: u64, d: BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (mut a, mut b, mut d) = (a, b, d);
        // Pull square factors out of c.
        let mut c_rest = c;
        let mut k = 2u64;
        while k * k <= c_rest {
            while c_rest % (k * k) == 0 {
                c_rest /= k * k;
                b *= BigInt::from(k);
            }
            k += 1;
        }
        if c_rest == 0 || b.is_zero() {
            return Some(CoshDistance::Rational(BigRational::new(a, d)));
        }
        if c_rest == 1 {
            return Some(CoshDistance::Rational(BigRational::new(a + b, d)));
        }
        if d.is_negative() {
            a = -a;
            b = -b;
            d = -d;
        }
        let g = a.gcd(&b).gcd(&d);
        Some(CoshDistance::Surd {
            a: a / &g,
            b: b / &g,
            c: c_rest,
            d: d / &g,
        })
    }

    /// Exact test `value > 1`.
    pub fn exceeds_one(&self) -> bool {
        match self {
            CoshDistance::Rational(r) => r > &BigRational::one(),
            CoshDistance::Surd { a, b, c, d } => sign_of_surd(&(a - d), b, *c) == Ordering::Greater,
        }
    }

    /// Square-free radicand, 1 for rationals.
    pub fn radicand(&self) -> u64 {
        match self {
            CoshDistance::Rational(_) => 1,
            CoshDistance::Surd { c, .. } => *c,
        }
    }

    /// `(p, q)` with value `p + q√c`.
    pub fn rational_parts(&self) -> (BigRational, BigRational) {
        match self {
            CoshDistance::Rational(r) => (r.clone(), BigRational::zero()),
            CoshDistance::Surd { a, b, d, .. } => (
                BigRational::new(a.clone(), d.clone()),
                BigRational::new(b.clone(), d.clone()),
            ),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            CoshDistance::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            CoshDistance::Surd { a, b, c, d } => {
                (a.to_f64().unwrap_or(f64::NAN) + b.to_f64().unwrap_or(f64::NAN) * (*c as f64).sqrt())
                    / d.to_f64().unwrap_or(f64::NAN)
            }
        }
    }
}

impl fmt::Display for CoshDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoshDistance::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            CoshDistance::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            CoshDistance::Surd { a, b, c, d } => {
                write!(f, "{a}")?;
                if b.is_negative() {
                    write!(f, "-{}*sqrt({c})", -b)?;
                } else {
                    write!(f, "+{b}*sqrt({c})")?;
                }
                if !d.is_one() {
                    write!(f, "/{d}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_int(s: &str) -> Result<BigInt, ParseCoshError> {
    let ok = !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !ok {
        return Err(ParseCoshError(format!("expected an integer, found `{s}`")));
    }
    BigInt::from_str(s).map_err(|e| ParseCoshError(e.to_string()))
}

fn parse_decimal(s: &str) -> Result<BigRational, ParseCoshError> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let r = if let Some((p, q)) = body.split_once('/') {
        let q = parse_int(q)?;
        if q.is_zero() {
            return Err(ParseCoshError("zero denominator".into()));
        }
        BigRational::new(parse_int(p)?, q)
    } else if let Some((ip, fp)) = body.split_once('.') {
        let ip = if ip.is_empty() { BigInt::zero() } else { parse_int(ip)? };
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        BigRational::new(ip * &scale + parse_int(fp)?, scale)
    } else {
        BigRational::from_integer(parse_int(body)?)
    };
    Ok(if neg { -r } else { r })
}

impl FromStr for CoshDistance {
    type Err = ParseCoshError;

    /// Accepts `n`, `p/q`, decimals like `1.25`, and surds
    /// `[a(+|-)][b*]sqrt(c)[/d]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(pos) = s.find("sqrt(") else {
            return parse_decimal(&s).map(CoshDistance::Rational);
        };
        let head = &s[..pos];
        let close = s[pos..]
            .find(')')
            .ok_or_else(|| ParseCoshError("unclosed sqrt(".into()))?
            + pos;
        let c = parse_int(&s[pos + 5..close])?
            .to_u64()
            .ok_or_else(|| ParseCoshError("radicand too large".into()))?;
        let tail = &s[close + 1..];
        let d = if tail.is_empty() {
            BigInt::one()
        } else {
            let t = tail
                .strip_prefix('/')
                .ok_or_else(|| ParseCoshError(format!("unexpected `{tail}`")))?;
            parse_int(t)?
        };
        if d.is_zero() {
            return Err(ParseCoshError("zero denominator".into()));
        }
        // head is `[a](+|-)[b*]` or `[-][b*]`.
        let head = head.strip_suffix('*').unwrap_or(head);
        let split = head
            .char_indices()
            .rev()
            .find(|&(i, ch)| (ch == '+' || ch == '-') && i > 0)
            .map(|(i, _)| i);
        let (a, b) = match split {
            Some(i) => {
                let a = if head[..i].starts_with('-') {
                    -parse_int(&head[1..i])?
                } else {
                    parse_int(&head[..i])?
                };
                let sign = if &head[i..i + 1] == "-" { -1 } else { 1 };
                let bt = &head[i + 1..];
                let b = if bt.is_empty() { BigInt::one() } else { parse_int(bt)? };
                (a, b * sign)
            }
            None => {
                let (sign, bt) = match head.strip_prefix('-') {
                    Some(r) => (-1, r),
                    None => (1, head.strip_prefix('+').unwrap_or(head)),
                };
                let b = if bt.is_empty() { BigInt::one() } else { parse_int(bt)? };
                (BigInt::zero(), b * sign)
            }
        };
        CoshDistance::surd(a, b, c, d).ok_or_else(|| ParseCoshError("zero denominator".into()))
    }
}
