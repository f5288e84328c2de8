//! Exact integer and rational primitives shared by every other module.
//!
//! Everything downstream (determinants, series, path counts) is exact
//! arithmetic over these two types; nothing in this crate ever rounds.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Binomial coefficient with out-of-range indices sent to zero:
/// `binomial(n, k) == 0` whenever `k < 0` or `k > n`. Summations over open
/// index ranges can therefore skip boundary guards.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    // acc stays integral at every step: after the i-th pass it equals
    // binomial(n - k + i, i).
    for i in 1..=k {
        acc = acc * Integer::from(n - k + i) / Integer::from(i);
    }
    acc
}

/// Multinomial coefficient `(p1 + ... + pm)! / (p1! ... pm!)`, evaluated as
/// a telescoping product of binomials so intermediates stay integral.
pub fn multinomial(parts: &[u64]) -> Integer {
    let mut total = 0u64;
    let mut acc = Integer::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p as i64);
    }
    acc
}

/// `base^exp` with `0^0 == 1`. Repeated squaring under the hood.
pub fn signed_power(base: &Integer, exp: u64) -> Integer {
    if exp == 0 {
        return Integer::one();
    }
    num_traits::pow::pow(base.clone(), exp as usize)
}

/// `(-1)^exp` as an Integer, the sign factor attached to most identities.
pub fn neg_one_pow(exp: u64) -> Integer {
    if exp.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Canonical decimal rendering: optional leading `-`, digits, no grouping.
pub fn int_to_decimal(v: &Integer) -> String {
    v.to_string()
}

pub fn int_from_decimal(s: &str) -> Result<Integer> {
    s.trim()
        .parse::<Integer>()
        .map_err(|_| Error::Parse(format!("not a decimal integer: {s:?}")))
}

/// Rationals render as `num/den` in lowest terms with a positive
/// denominator, or as a bare integer when the denominator is 1.
pub fn rat_to_string(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Accepts both `p` and `p/q` forms; normalizes eagerly.
pub fn rat_from_string(s: &str) -> Result<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rational::from(int_from_decimal(s)?)),
        Some((num, den)) => {
            let num = int_from_decimal(num)?;
            let den = int_from_decimal(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator: {s:?}")));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Exact square root of a non-negative rational, if one exists.
pub fn rat_sqrt(v: &Rational) -> Option<Rational> {
    if v.is_negative() {
        return None;
    }
    let num = v.numer().sqrt();
    let den = v.denom().sqrt();
    if &(&num * &num) == v.numer() && &(&den * &den) == v.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), Integer::from(10));
        assert_eq!(binomial(5, 7), Integer::zero());
        assert_eq!(binomial(5, -1), Integer::zero());
        assert_eq!(binomial(0, 0), Integer::one());
        assert_eq!(binomial(52, 26).to_string(), "495918532948104");
    }

    #[test]
    fn binomial_pascal_rule() {
        for n in 1..40u64 {
            for k in 0..=n as i64 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "pascal fails at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn binomial_row_sums() {
        for n in 0..30u64 {
            let row: Integer = (0..=n as i64).map(|k| binomial(n, k)).sum();
            assert_eq!(row, signed_power(&Integer::from(2), n));
        }
    }

    #[test]
    fn multinomial_matches_factorials() {
        // (2,1,1): 4!/(2!1!1!) = 12
        assert_eq!(multinomial(&[2, 1, 1]), Integer::from(12));
        assert_eq!(multinomial(&[]), Integer::one());
        assert_eq!(multinomial(&[3, 3]), binomial(6, 3));
        assert_eq!(multinomial(&[1, 1, 1, 1]), Integer::from(24));
    }

    #[test]
    fn power_conventions() {
        let z = Integer::zero();
        assert_eq!(signed_power(&z, 0), Integer::one());
        assert_eq!(signed_power(&z, 5), Integer::zero());
        let m3 = Integer::from(-3);
        assert_eq!(signed_power(&m3, 3), Integer::from(-27));
        assert_eq!(neg_one_pow(4), Integer::one());
        assert_eq!(neg_one_pow(7), -Integer::one());
    }

    #[test]
    fn decimal_round_trip() {
        for s in ["0", "-1", "123456789012345678901234567890"] {
            let v = int_from_decimal(s).unwrap();
            assert_eq!(int_to_decimal(&v), s);
        }
        assert!(int_from_decimal("12x").is_err());
    }

    #[test]
    fn rational_strings_normalize() {
        let v = rat_from_string("6/4").unwrap();
        assert_eq!(rat_to_string(&v), "3/2");
        let v = rat_from_string("-6/3").unwrap();
        assert_eq!(rat_to_string(&v), "-2");
        let v = rat_from_string("5/-10").unwrap();
        assert_eq!(rat_to_string(&v), "-1/2");
        assert!(rat_from_string("1/0").is_err());
    }

    #[test]
    fn rational_sqrt() {
        let v = rat_from_string("9/4").unwrap();
        assert_eq!(rat_sqrt(&v).unwrap(), rat_from_string("3/2").unwrap());
        assert!(rat_sqrt(&rat_from_string("2").unwrap()).is_none());
        assert!(rat_sqrt(&rat_from_string("-1").unwrap()).is_none());
    }
}
