//! Exact rational scalars.
//!
//! Every weight and coefficient in the crate is a [`Rational`]: an
//! arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. Text form is `p` or `p/q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p` or `p/q` (optional leading `-` or `+`). Rejects zero
/// denominators, embedded whitespace and anything else.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num = parse_integer(num).ok_or_else(|| format!("malformed number `{s}`"))?;
    let den = match den {
        Some(d) => {
            if d.starts_with(['-', '+']) {
                return Err(format!("malformed denominator in `{s}`"));
            }
            parse_integer(d).ok_or_else(|| format!("malformed number `{s}`"))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(num, den))
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical string form: `p` for integers, `p/q` otherwise.
pub fn to_canonical_string(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-4/6").unwrap(), frac(-2, 3));
        assert_eq!(parse_rational("+1/2").unwrap(), frac(1, 2));
        assert_eq!(to_canonical_string(&frac(6, -4)), "-3/2");
        assert_eq!(to_canonical_string(&int(7)), "7");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_rational("2/0").unwrap_err().contains("zero denominator"));
        for bad in ["", "1.5", "a", "1/", "/2", "1/-2", "1 /2", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=12).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms_hold_exactly(a in small(), b in small(), c in small()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &b, &b + &a);
            if !b.is_zero() {
                prop_assert_eq!((&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn canonical_string_round_trips(a in small()) {
            let s = to_canonical_string(&a);
            prop_assert_eq!(parse_rational(&s).unwrap(), a.clone());
            prop_assert!(a.denom().is_positive());
        }
    }
}
