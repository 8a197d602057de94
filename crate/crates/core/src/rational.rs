//! Exact rational scalars: the base field of every computation in the crate.
//!
//! `Rat` is an arbitrary-precision fraction kept in canonical form:
//! gcd(|numerator|, denominator) = 1 and denominator >= 1, with zero stored
//! as 0/1. Field arithmetic comes from the operator impls; this module adds
//! the fallible pieces (inversion, parsing) and the canonical text form.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

/// The integer `n` as a `Rat`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `num/den`, reduced. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Multiplicative inverse. Zero has no inverse.
pub fn rat_inv(r: &Rat) -> Result<Rat> {
    if r.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(r.recip())
}

/// Parse the canonical base-10 form `num` or `num/den`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    if let Some((_, den)) = t.split_once('/') {
        if den.trim_start_matches(['+', '-']).chars().all(|c| c == '0')
            && !den.trim_start_matches(['+', '-']).is_empty()
        {
            return Err(Error::Parse(format!("zero denominator in '{t}'")));
        }
    }
    t.parse::<Rat>()
        .map_err(|e| Error::Parse(format!("bad rational '{t}': {e}")))
}

/// Canonical base-10 form: `num/den`, the `/den` part omitted when it is 1.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn add_reduces_to_canonical_form() {
        // 1/2 + 1/3 = 5/6
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
    }

    #[test]
    fn mul_of_inverse_pair_is_one() {
        assert!((rat(2, 3) * rat(3, 2)).is_one());
    }

    #[test]
    fn neg_and_sign_normalization() {
        assert_eq!(-rat(1, 2), rat(1, -2));
        assert_eq!(rat(-2, -4), rat(1, 2));
    }

    #[test]
    fn inv_of_zero_is_an_error() {
        assert_eq!(rat_inv(&Rat::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn inv_of_nonzero() {
        assert_eq!(rat_inv(&rat(-3, 7)).unwrap(), rat(-7, 3));
    }

    #[test]
    fn string_round_trip() {
        for s in ["0", "5", "-5", "1/2", "-22/7", "1000000000000000000000/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_rat("2/4").unwrap(), rat(1, 2));
        assert_eq!(rat_to_string(&parse_rat("3/1").unwrap()), "3");
        assert_eq!(parse_rat(" 7/2 ").unwrap(), rat(7, 2));
    }

    #[test]
    fn parse_rejects_garbage_and_zero_denominator() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1/").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1/-0").is_err());
        assert!(parse_rat("1.5").is_err());
    }
}
