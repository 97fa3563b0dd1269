use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact fraction with a 128-bit numerator and a positive denominator, always in lowest terms.
///
/// Every arithmetic operation is checked; overflow surfaces as [`Error::Overflow`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    pub fn new(numer: i128, denom: i128) -> Result<Self> {
        if denom == 0 {
            return Err(Error::invalid("zero denominator"));
        }
        if numer == i128::MIN || denom == i128::MIN {
            return Err(Error::Overflow("Rational::new"));
        }
        Ok(Rational(Ratio::new(numer, denom)))
    }

    pub fn from_int(n: i128) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        CheckedAdd::checked_add(&self.0, &rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("rational addition"))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        CheckedSub::checked_sub(&self.0, &rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("rational subtraction"))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        CheckedMul::checked_mul(&self.0, &rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("rational multiplication"))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::invalid("division by zero"));
        }
        CheckedDiv::checked_div(&self.0, &rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("rational division"))
    }

    pub fn checked_mul_int(&self, rhs: i128) -> Result<Self> {
        self.checked_mul(&Rational::from_int(rhs))
    }

    pub fn checked_div_int(&self, rhs: i128) -> Result<Self> {
        self.checked_div(&Rational::from_int(rhs))
    }

    /// Sum of an iterator of fallible values; stops at the first error.
    pub fn try_sum<I>(iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = Result<Rational>>,
    {
        iter.into_iter()
            .try_fold(Rational::ZERO, |acc, x| acc.checked_add(&x?))
    }

    pub fn try_product<I>(iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = Result<Rational>>,
    {
        iter.into_iter()
            .try_fold(Rational::ONE, |acc, x| acc.checked_mul(&x?))
    }

    /// The value as an integer, if the denominator is 1.
    pub fn to_integer(&self) -> Option<i128> {
        self.is_integer().then(|| self.numer())
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n as i128)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_int(n as i128)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_int(n as i128)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `p` or `p/q`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::invalid(format!("not a rational number: {s:?}"));
        match s.split_once('/') {
            None => s.parse::<i128>().map(Rational::from_int).map_err(|_| bad()),
            Some((p, q)) => {
                let p = p.trim().parse::<i128>().map_err(|_| bad())?;
                let q = q.trim().parse::<i128>().map_err(|_| bad())?;
                Rational::new(p, q)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: i128,
    den: i128,
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalRepr {
            num: self.numer(),
            den: self.denom(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RationalRepr::deserialize(d)?;
        if repr.den <= 0 {
            return Err(serde::de::Error::custom("denominator must be positive"));
        }
        let r = Rational::new(repr.num, repr.den).map_err(serde::de::Error::custom)?;
        if r.numer() != repr.num {
            return Err(serde::de::Error::custom("fraction not in lowest terms"));
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_and_parse() {
        let r = Rational::new(70, 12).unwrap();
        assert_eq!(r.to_string(), "35/6");
        assert_eq!("35/6".parse::<Rational>().unwrap(), r);
        assert_eq!("-4/2".parse::<Rational>().unwrap().to_string(), "-2");
        assert_eq!(Rational::new(3, -6).unwrap().to_string(), "-1/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rational::from_int(i128::MAX / 2 + 1);
        assert_eq!(
            big.checked_add(&big),
            Err(Error::Overflow("rational addition"))
        );
        assert!(big.checked_mul_int(3).is_err());
    }

    proptest! {
        #[test]
        fn lowest_terms(n in -10_000i128..10_000, d in 1i128..10_000) {
            let r = Rational::new(n, d).unwrap();
            prop_assert!(r.denom() >= 1);
            prop_assert_eq!(num_integer::gcd(r.numer().abs(), r.denom()), if r.numer() == 0 { r.denom() } else { 1 });
            prop_assert_eq!(r.numer() * d, n * r.denom());
        }

        #[test]
        fn text_round_trip(n in -1_000_000i128..1_000_000, d in 1i128..1_000_000) {
            let r = Rational::new(n, d).unwrap();
            prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
}
