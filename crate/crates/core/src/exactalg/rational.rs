use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`; surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |m: &str| Error::parse(format!("rational {s:?}"), m);
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Converts an integral rational to a `BigInt`.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}
