use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den.into())))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn int(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &other.0))
    }

    /// Integer value if this is an integer fitting in i64.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// `self * a + b` style helper used in elimination loops: self += c * x.
    pub fn add_mul(&mut self, c: &Rational, x: &Rational) {
        self.0 += &c.0 * &x.0;
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::int(n as i64)
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

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| -> Result<BigInt> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad rational `{s}`")))
        };
        match s.split_once('/') {
            Some((p, q)) => Rational::from_bigints(parse(p)?, parse(q)?),
            None => Ok(Rational(BigRational::from_integer(parse(s)?))),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            S(String),
            I(i64),
        }
        match Repr::deserialize(d)? {
            Repr::S(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::I(i) => Ok(Rational::int(i)),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                Rational(&self.0 $op &o.0)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                Rational(self.0 $op o.0)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                Rational(self.0 $op &o.0)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                Rational(&self.0 $op o.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

/// Panics on a zero divisor; use `checked_div` where the divisor is untrusted.
impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, o: &Rational) -> Rational {
        assert!(!o.is_zero(), "division by zero");
        Rational(&self.0 / &o.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, o: Rational) -> Rational {
        &self / &o
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, o: &Rational) {
        self.0 += &o.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, o: Rational) {
        self.0 += o.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, o: &Rational) {
        self.0 -= &o.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, o: &Rational) {
        self.0 *= &o.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}
