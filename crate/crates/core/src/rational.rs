//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders as `p/q`, always with an explicit denominator (`3` becomes `"3/1"`).
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q`, `p`, with an optional sign on the numerator.
pub fn parse_pq(s: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let valid = |x: &str, signed: bool| {
        let digits = if signed {
            x.strip_prefix('-')
                .or_else(|| x.strip_prefix('+'))
                .unwrap_or(x)
        } else {
            x
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Short human form used in tables: `3`, `-7/2`.
pub fn to_short(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_unit_magnitude(r: &Rational) -> bool {
    r.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_round_trip() {
        for s in ["0/1", "-1072/1", "3/4", "-5/12"] {
            assert_eq!(to_pq(&parse_pq(s).unwrap()), s);
        }
        assert_eq!(parse_pq("6/8").unwrap(), frac(3, 4));
        assert_eq!(parse_pq("-7").unwrap(), int(-7));
        assert_eq!(parse_pq("+2").unwrap(), int(2));
    }

    #[test]
    fn pq_rejects_garbage() {
        for s in ["", "1/0", "a/2", "1.5", "1/-2", "--3", "/", "3/"] {
            assert!(parse_pq(s).is_err(), "{s}");
        }
    }
}
