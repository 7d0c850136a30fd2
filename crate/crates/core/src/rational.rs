//! Exact rationals. Everything numeric in the crate goes through here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serializer;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn in_unit_interval(q: &Rational) -> bool {
    !q.is_negative() && q <= &one()
}

/// Parses `p/q` or a plain integer. Whitespace around the tokens is ignored.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || {
        Error::Input(format!(
            "`{text}` is not a rational (expected p/q or an integer)"
        ))
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Input(format!("`{text}` has a zero denominator")));
    }
    Ok(BigRational::new(num, den))
}

/// Lowest-terms `p/q`; integers print without a denominator.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub fn serialize_vec<S: Serializer>(qs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(format_rational))
}

pub fn serialize_opt<S: Serializer>(
    q: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&format_rational(q)),
        None => s.serialize_none(),
    }
}
