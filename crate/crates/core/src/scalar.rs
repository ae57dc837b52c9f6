//! Exact rational coefficients.
//!
//! Everything in the crate is computed over `Q`; there is no floating point
//! anywhere. Text form is `p/q`, with `/q` omitted when the denominator is 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `(-1)^k` as a scalar.
pub fn sign(k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

pub fn format(s: &Scalar) -> String {
    s.to_string()
}

pub fn parse(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: `{text}`"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{text}`")));
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = text.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Exact conversion to `i64` for integral scalars.
pub fn to_i64(s: &Scalar) -> Option<i64> {
    if !s.is_integer() {
        return None;
    }
    i64::try_from(s.to_integer()).ok()
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_omits_unit_denominator() {
        assert_eq!(format(&frac(6, 3)), "2");
        assert_eq!(format(&frac(-2, 4)), "-1/2");
        assert_eq!(parse("4/6").unwrap(), frac(2, 3));
        assert_eq!(parse(" -7 ").unwrap(), int(-7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn lowest_terms() {
        let s = frac(10, -4);
        assert_eq!(s.numer(), &BigInt::from(-5));
        assert_eq!(s.denom(), &BigInt::from(2));
    }
}
