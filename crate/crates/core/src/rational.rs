//! Arbitrary-precision rationals.
//!
//! `num_rational::BigRational` keeps values reduced with a positive
//! denominator, which is exactly the invariant the rest of the crate needs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_big(value: BigInt) -> Rational {
    Rational::from_integer(value)
}

pub fn is_integer(value: &Rational) -> bool {
    value.denom().is_one()
}

/// Integer power with a possibly negative exponent.
pub fn pow(base: &Rational, exp: i32) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
    }
}

/// `"num/den"`, or just `"num"` for integers.
pub fn to_fraction_string(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `"a"`, `"-a"` or `"a/b"` into a reduced rational.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => Some(from_big(text.parse().ok()?)),
    }
}

pub fn is_odd_integer(value: &Rational) -> bool {
    is_integer(value) && (value.numer().abs() % BigInt::from(2)).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(frac(0, -7), int(0));
        assert!(frac(0, 5).denom().is_one());
    }

    #[test]
    fn fraction_strings() {
        assert_eq!(to_fraction_string(&frac(-3, 8)), "-3/8");
        assert_eq!(to_fraction_string(&int(271)), "271");
        assert_eq!(parse(" -3/8 "), Some(frac(-3, 8)));
        assert_eq!(parse("10/4"), Some(frac(5, 2)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow(&frac(2, 3), -2), frac(9, 4));
        assert_eq!(pow(&frac(2, 3), 0), int(1));
    }

    #[test]
    fn odd_integer_detection() {
        assert!(is_odd_integer(&int(-3)));
        assert!(!is_odd_integer(&int(6)));
        assert!(!is_odd_integer(&frac(3, 8)));
    }
}
