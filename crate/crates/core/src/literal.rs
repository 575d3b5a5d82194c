//! Helpers for the textual element grammar.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{CuError, Result};

pub type Rational = BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `p/q` or `p` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p
        .parse()
        .map_err(|_| CuError::parse(format!("bad numerator in `{s}`")))?;
    let q: BigInt = q
        .parse()
        .map_err(|_| CuError::parse(format!("bad denominator in `{s}`")))?;
    if q.is_zero() {
        return Err(CuError::parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(p, q))
}

pub fn parse_nonneg_rational(s: &str) -> Result<Rational> {
    let q = parse_rational(s)?;
    if q.is_negative() {
        return Err(CuError::parse(format!("negative value `{s}`")));
    }
    Ok(q)
}

/// Always `p/q`, with `q = 1` for integers.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Splits on `sep` at nesting depth zero with respect to `()`, `{}`, `[]`.
pub fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts
}

/// Splits a comma list, treating an empty string as the empty list.
pub fn split_list(s: &str) -> Vec<&str> {
    if s.trim().is_empty() {
        Vec::new()
    } else {
        split_top_level(s, ',')
    }
}

pub fn strip_prefix<'a>(s: &'a str, prefix: &str) -> Result<&'a str> {
    s.trim()
        .strip_prefix(prefix)
        .ok_or_else(|| CuError::parse(format!("expected `{prefix}…`, got `{s}`")))
}

/// `1/2ⁱ`-style dyadic test: does `q` have a denominator dividing a power of `n`?
pub fn denominator_divides_power(q: &Rational, n: u64) -> bool {
    let n = BigInt::from(n);
    let mut d = q.denom().clone();
    loop {
        if d.is_one() {
            return true;
        }
        let g = num::integer::gcd(d.clone(), n.clone());
        if g.is_one() {
            return false;
        }
        d /= g;
    }
}
