//! Exact scalars over the rationals or a prime field of odd characteristic.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ground field. Characteristic 2 is never representable: `1/2` must exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidField(
                "characteristic 2 is not allowed (1/2 must exist)".into(),
            ));
        }
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not an odd prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("modulus {p} is too large")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" || t == "q" || t == "rational" {
            return Ok(FieldSpec::Rational);
        }
        let digits = t
            .strip_prefix("fp:")
            .or_else(|| t.strip_prefix("F_"))
            .or_else(|| t.strip_prefix("GF"))
            .ok_or_else(|| Error::InvalidField(format!("unrecognised field `{s}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("unrecognised field `{s}`")))?;
        FieldSpec::prime(p)
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest quadratic non-residue modulo an odd prime.
pub fn smallest_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&a| pow_mod(a, (p - 1) / 2, p) == p - 1)
        .expect("every odd prime has a non-residue")
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// An element of a [`FieldSpec`]. Rationals are kept in lowest terms with a
/// positive denominator and residues in `[0, p)`, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Residue { value: 0, modulus: p },
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Scalar::from_int(field, 1)
    }

    pub fn from_int(field: FieldSpec, v: i64) -> Self {
        match field {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(v.into())),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_ratio(field: FieldSpec, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        let q = BigRational::new(num.into(), den.into());
        Scalar::Rational(q).to_field(field)
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Maps this scalar into `field`. Rationals reduce to residues when the
    /// denominator is a unit mod `p`; residues only map to their own field.
    pub fn to_field(&self, field: FieldSpec) -> Result<Self> {
        match (self, field) {
            (Scalar::Rational(_), FieldSpec::Rational) => Ok(self.clone()),
            (Scalar::Rational(q), FieldSpec::Prime(p)) => {
                let pb = BigInt::from(p);
                let den = q.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(Error::NotReducible {
                        value: self.to_string(),
                        modulus: p,
                    });
                }
                let num = q.numer().mod_floor(&pb).to_u64().unwrap();
                let den = den.to_u64().unwrap();
                Ok(Scalar::Residue {
                    value: num * inv_mod(den, p) % p,
                    modulus: p,
                })
            }
            (Scalar::Residue { modulus, .. }, FieldSpec::Prime(p)) if *modulus == p => {
                Ok(self.clone())
            }
            _ => Err(Error::FieldMismatch {
                expected: field,
                found: self.field(),
            }),
        }
    }

    /// Parses `"p/q"` or an integer; over `F_p` the rational is reduced.
    pub fn parse(field: FieldSpec, s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("malformed coefficient `{s}`"));
        let q = match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
        };
        Scalar::Rational(q).to_field(field)
    }

    /// `self -= a * b`, the inner step of every elimination loop.
    pub fn sub_mul_assign(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::Rational(s), Scalar::Rational(x), Scalar::Rational(y)) => {
                if x.is_integer() && y.is_integer() && s.is_integer() {
                    let v = s.numer() - x.numer() * y.numer();
                    *s = BigRational::from_integer(v);
                } else {
                    *s -= x * y;
                }
            }
            (
                Scalar::Residue { value, modulus },
                Scalar::Residue { value: x, modulus: mx },
                Scalar::Residue { value: y, modulus: my },
            ) if modulus == mx && modulus == my => {
                let m = *modulus;
                *value = (*value + m - x * y % m) % m;
            }
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    /// Numerator/denominator magnitude bound, used by tests on random input.
    pub fn height(&self) -> u64 {
        match self {
            Scalar::Rational(q) => {
                let n = q.numer().abs().to_u64().unwrap_or(u64::MAX);
                let d = q.denom().to_u64().unwrap_or(u64::MAX);
                n.max(d)
            }
            Scalar::Residue { value, .. } => *value,
        }
    }
}

fn mismatch() -> ! {
    panic!("field mismatch in scalar arithmetic")
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: m }, Scalar::Residue { value: b, modulus: n })
                if m == n =>
            {
                Scalar::Residue { value: (a + b) % m, modulus: *m }
            }
            _ => mismatch(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, modulus: m }, Scalar::Residue { value: b, modulus: n })
                if m == n =>
            {
                Scalar::Residue { value: (a + m - b) % m, modulus: *m }
            }
            _ => mismatch(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: m }, Scalar::Residue { value: b, modulus: n })
                if m == n =>
            {
                Scalar::Residue { value: a * b % m, modulus: *m }
            }
            _ => mismatch(),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}
