//! Exact coefficient rings.
//!
//! Three rings are supported: the integers, the rationals and the integers
//! modulo `m`. Every value carries its ring, so mixing rings is reported as
//! [`ScalarError::RingMismatch`] instead of being silently coerced.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("ZeroDenominator")]
    ZeroDenominator,
    #[error("RingMismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// Descriptor of a coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Ring {
    Integer,
    Rational,
    Mod(u64),
}

impl Ring {
    pub fn modular(modulus: u64) -> Result<Ring, ScalarError> {
        if modulus < 2 {
            return Err(ScalarError::BadModulus(modulus));
        }
        Ok(Ring::Mod(modulus))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, value: i64) -> Scalar {
        self.from_bigint(BigInt::from(value))
    }

    pub fn from_bigint(self, value: BigInt) -> Scalar {
        match self {
            Ring::Integer => Scalar::Integer(value),
            Ring::Rational => Scalar::Rational(BigRational::from_integer(value)),
            Ring::Mod(m) => Scalar::ModInt {
                residue: reduce_mod(&value, m),
                modulus: m,
            },
        }
    }

    /// Builds `num/den` inside this ring. For the integers the quotient must
    /// be exact; modulo `m` the denominator must be invertible.
    pub fn from_fraction(self, num: BigInt, den: BigInt) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        match self {
            Ring::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Ring::Integer => {
                let (q, r) = num.div_rem(&den);
                if !r.is_zero() {
                    return Err(ScalarError::Parse(format!("{num}/{den} is not an integer")));
                }
                Ok(Scalar::Integer(q))
            }
            Ring::Mod(m) => {
                let d = reduce_mod(&den, m);
                let inv = mod_inverse(d, m)
                    .ok_or_else(|| ScalarError::Parse(format!("{den} is not invertible mod {m}")))?;
                let n = reduce_mod(&num, m);
                Ok(Scalar::ModInt {
                    residue: mul_mod(n, inv, m),
                    modulus: m,
                })
            }
        }
    }

    /// Parses a scalar literal and coerces it into this ring.
    ///
    /// Accepts `p`, `p/q` and, for modular rings, `r mod m` with matching `m`.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, ScalarError> {
        let parsed: Scalar = text.parse()?;
        match (self, parsed) {
            (_, s @ Scalar::ModInt { .. }) => {
                if s.ring() == self {
                    Ok(s)
                } else {
                    Err(ScalarError::RingMismatch(self, s.ring()))
                }
            }
            (ring, Scalar::Integer(n)) => Ok(ring.from_bigint(n)),
            (ring, Scalar::Rational(q)) => {
                let (n, d) = q.into_raw();
                ring.from_fraction(n, d)
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integer => write!(f, "Z"),
            Ring::Rational => write!(f, "Q"),
            Ring::Mod(m) => write!(f, "Z/{m}"),
        }
    }
}

impl FromStr for Ring {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "Z" => Ok(Ring::Integer),
            "Q" => Ok(Ring::Rational),
            other => {
                let m = other
                    .strip_prefix("Z/")
                    .and_then(|m| m.parse::<u64>().ok())
                    .ok_or_else(|| ScalarError::Parse(other.to_string()))?;
                Ring::modular(m)
            }
        }
    }
}

impl TryFrom<String> for Ring {
    type Error = ScalarError;
    fn try_from(value: String) -> Result<Self, Self::Error> {
        value.parse()
    }
}

impl From<Ring> for String {
    fn from(value: Ring) -> Self {
        value.to_string()
    }
}

/// An element of one of the supported coefficient rings.
///
/// Rationals are kept normalized (`gcd(num, den) = 1`, `den > 0`) and
/// residues lie in `[0, modulus)`, so the derived equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Integer(BigInt),
    Rational(BigRational),
    ModInt { residue: u64, modulus: u64 },
}

pub fn make_rational(num: i64, den: i64) -> Result<Scalar, ScalarError> {
    Ring::Rational.from_fraction(BigInt::from(num), BigInt::from(den))
}

pub fn make_mod(value: i64, modulus: u64) -> Result<Scalar, ScalarError> {
    Ok(Ring::modular(modulus)?.from_i64(value))
}

fn reduce_mod(value: &BigInt, m: u64) -> u64 {
    let r = value.mod_floor(&BigInt::from(m));
    u64::try_from(r).expect("residue fits below modulus")
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    if !e.gcd.is_one() {
        return None;
    }
    Some(reduce_mod(&e.x, m))
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Integer(_) => Ring::Integer,
            Scalar::Rational(_) => Ring::Rational,
            Scalar::ModInt { modulus, .. } => Ring::Mod(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Integer(n) => n.is_zero(),
            Scalar::Rational(q) => q.is_zero(),
            Scalar::ModInt { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Integer(n) => n.is_one(),
            Scalar::Rational(q) => q.is_one(),
            Scalar::ModInt { residue, .. } => *residue == 1,
        }
    }

    /// True for integers and rationals below zero. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Integer(n) => n.is_negative(),
            Scalar::Rational(q) => q.is_negative(),
            Scalar::ModInt { .. } => false,
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Integer(a), Scalar::Integer(b)) => Ok(Scalar::Integer(a + b)),
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (
                Scalar::ModInt { residue: a, modulus: m },
                Scalar::ModInt { residue: b, modulus: n },
            ) if m == n => Ok(Scalar::ModInt {
                residue: ((*a as u128 + *b as u128) % *m as u128) as u64,
                modulus: *m,
            }),
            _ => Err(ScalarError::RingMismatch(self.ring(), other.ring())),
        }
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Integer(a), Scalar::Integer(b)) => Ok(Scalar::Integer(a * b)),
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (
                Scalar::ModInt { residue: a, modulus: m },
                Scalar::ModInt { residue: b, modulus: n },
            ) if m == n => Ok(Scalar::ModInt {
                residue: mul_mod(*a, *b, *m),
                modulus: *m,
            }),
            _ => Err(ScalarError::RingMismatch(self.ring(), other.ring())),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_add(&other.neg())
    }

    /// Ring equality; unlike `==` this refuses to compare across rings.
    pub fn try_eq(&self, other: &Scalar) -> Result<bool, ScalarError> {
        if self.ring() != other.ring() {
            return Err(ScalarError::RingMismatch(self.ring(), other.ring()));
        }
        Ok(self == other)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Integer(a) => Scalar::Integer(-a),
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::ModInt { residue, modulus } => Scalar::ModInt {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Renders the value the way series expressions spell coefficients:
    /// residues drop their ` mod m` suffix.
    pub fn to_expr_string(&self) -> String {
        match self {
            Scalar::ModInt { residue, .. } => residue.to_string(),
            other => other.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Integer(n) => write!(f, "{n}"),
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::ModInt { residue, modulus } => write!(f, "{residue} mod {modulus}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    /// `r mod m` gives a residue, `p/q` a rational, a bare integer an
    /// integer. Use [`Ring::parse_scalar`] to read a literal into a given ring.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let bad = || ScalarError::Parse(s.to_string());
        if let Some((r, m)) = text.split_once(" mod ") {
            let r: BigInt = r.trim().parse().map_err(|_| bad())?;
            let m: u64 = m.trim().parse().map_err(|_| bad())?;
            return Ok(Ring::modular(m)?.from_bigint(r));
        }
        if let Some((p, q)) = text.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            return Ring::Rational.from_fraction(p, q);
        }
        let n: BigInt = text.parse().map_err(|_| bad())?;
        Ok(Scalar::Integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        make_rational(n, d).unwrap()
    }

    #[test]
    fn rational_normalization() {
        assert_eq!(q(2, 4).to_string(), "1/2");
        assert_eq!(q(-3, -6), q(1, 2));
        assert_eq!(q(-3, -6).to_string(), "1/2");
        assert_eq!(q(0, 7).to_string(), "0");
        assert_eq!(q(0, 7), Ring::Rational.zero());
        assert_eq!(q(3, -9).to_string(), "-1/3");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(make_rational(1, 0), Err(ScalarError::ZeroDenominator));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(q(1, 2).try_add(&q(1, 3)).unwrap(), q(5, 6));
        let a = make_mod(3, 5).unwrap();
        let b = make_mod(4, 5).unwrap();
        assert_eq!(a.try_mul(&b).unwrap(), make_mod(2, 5).unwrap());
        assert!(q(2, 4).try_eq(&q(1, 2)).unwrap());
    }

    #[test]
    fn ring_mismatch() {
        let z = Ring::Integer.from_i64(1);
        let m5 = make_mod(1, 5).unwrap();
        let m7 = make_mod(1, 7).unwrap();
        assert!(matches!(q(1, 2).try_add(&z), Err(ScalarError::RingMismatch(..))));
        assert!(matches!(m5.try_mul(&m7), Err(ScalarError::RingMismatch(..))));
        assert!(matches!(m5.try_eq(&z), Err(ScalarError::RingMismatch(..))));
    }

    #[test]
    fn modulus_bounds() {
        assert_eq!(Ring::modular(1), Err(ScalarError::BadModulus(1)));
        assert_eq!(make_mod(-1, 5).unwrap().to_string(), "4 mod 5");
    }

    #[test]
    fn render_and_parse() {
        for text in ["-17", "3/4", "-1/2", "0", "4 mod 7"] {
            let s: Scalar = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert_eq!(Ring::Rational.parse_scalar("5").unwrap(), q(5, 1));
        assert_eq!(Ring::Mod(7).parse_scalar("1/2").unwrap(), make_mod(4, 7).unwrap());
        assert!(Ring::Integer.parse_scalar("1/2").is_err());
        assert!(Ring::Mod(6).parse_scalar("1/2").is_err());
        assert!("x".parse::<Scalar>().is_err());
        assert_eq!("Z/9".parse::<Ring>().unwrap(), Ring::Mod(9));
    }

    fn ring_strategy() -> impl Strategy<Value = Ring> {
        prop_oneof![
            Just(Ring::Integer),
            Just(Ring::Rational),
            (2u64..50).prop_map(Ring::Mod),
        ]
    }

    fn scalar_in(ring: Ring) -> impl Strategy<Value = Scalar> {
        (-1000i64..1000, 1i64..60).prop_map(move |(n, d)| match ring {
            Ring::Rational => make_rational(n, d).unwrap(),
            _ => ring.from_i64(n * d),
        })
    }

    fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
        ring_strategy().prop_flat_map(|r| (scalar_in(r), scalar_in(r), scalar_in(r)))
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in triple()) {
            let r = a.ring();
            let ab = a.try_add(&b).unwrap();
            prop_assert_eq!(ab.try_add(&c).unwrap(), a.try_add(&b.try_add(&c).unwrap()).unwrap());
            prop_assert_eq!(&ab, &b.try_add(&a).unwrap());
            prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
            prop_assert_eq!(
                a.try_mul(&b).unwrap().try_mul(&c).unwrap(),
                a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
                a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(a.try_add(&r.zero()).unwrap(), a.clone());
            prop_assert_eq!(a.try_mul(&r.one()).unwrap(), a.clone());
            prop_assert!(a.try_add(&a.neg()).unwrap().is_zero());
        }

        #[test]
        fn rendering_reparses(a in ring_strategy().prop_flat_map(scalar_in)) {
            let back = a.ring().parse_scalar(&a.to_string()).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
