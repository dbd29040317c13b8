use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// The ground field: the rationals (characteristic 0) or a prime field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    /// Prime field of order `p`; `p` must be a prime below 2^31.
    pub fn prime(p: u32) -> Result<Self, Error> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec { characteristic: p })
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    /// Image of an integer under the canonical map Z -> k.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            p => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(n.clone())),
            p => {
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Scalar::Modular {
                    value: r.to_u32().expect("residue fits in u32"),
                    modulus: p,
                }
            }
        }
    }

    /// Whether `s` is an element of this field.
    pub fn owns(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rational(_) => self.characteristic == 0,
            Scalar::Modular { modulus, .. } => *modulus == self.characteristic,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::rationals());
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidField(format!("expected `Q` or `GF(p)`, found `{s}`")))?;
        let p: u32 = inner
            .trim()
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad characteristic `{inner}`")))?;
        FieldSpec::prime(p)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`FieldSpec`]. Mixing scalars of different fields is an
/// invariant violation and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::RATIONALS,
            Scalar::Modular { modulus, .. } => FieldSpec {
                characteristic: *modulus,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: mod_pow(*value as u64, (*modulus - 2) as u64, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// Integer value when the scalar is a rational integer or any residue.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) if r.is_integer() => r.to_integer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Modular { value, .. } => Some(*value as i64),
        }
    }

    fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalars from different fields: {} and {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Formats `coef * body` the way terms of a sum are written: `body`,
/// `-body`, `2*body`, `-1/2*body`. Returns the sign separately so callers can
/// join terms with ` + ` / ` - `.
pub(crate) fn signed_term(coef: &Scalar, body: &str) -> (bool, String) {
    let negative = coef.is_negative();
    let magnitude = if negative { -coef } else { coef.clone() };
    let text = if magnitude.is_one() {
        body.to_string()
    } else {
        format!("{magnitude}*{body}")
    };
    (negative, text)
}

/// Joins `(negative, text)` pieces into `a + b - c`; empty input renders as `0`.
pub(crate) fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, text)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => out.push_str(&text),
            (0, true) => {
                out.push('-');
                out.push_str(&text);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&text);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&text);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
