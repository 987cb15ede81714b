//! Exact scalars: rationals, prime fields, and dual numbers `k[t]/(t²)`.
//!
//! A [`Scalar`] carries enough information to know which field it lives in,
//! so arithmetic between values of different fields is caught instead of
//! silently producing garbage. Operator impls panic on a mismatch (it is a
//! programming error inside the library); the `checked_*` methods report it
//! as [`Error::FieldMismatch`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Parses `"Q"` or `"Fp:<p>"`.
    pub fn parse(descriptor: &str) -> Result<Self> {
        let s = descriptor.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let rest = s
            .strip_prefix("Fp:")
            .ok_or_else(|| Error::Parse(format!("unknown field descriptor {descriptor:?}")))?;
        let p: u64 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad prime in field descriptor {descriptor:?}")))?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        // keep products of two residues inside u64
        if p > u32::MAX as u64 {
            return Err(Error::Parse(format!("prime {p} exceeds the supported 32-bit range")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    /// 0 for ℚ, p for 𝔽_p.
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Modular { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    /// Image of an integer under ℤ → k.
    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Image of `num/den`; fails when `den` vanishes in the field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            FieldSpec::PrimeField(p) => {
                let n = reduce_bigint(num, p);
                let d = reduce_bigint(den, p);
                let d = FieldSpec::PrimeField(p).from_u64(d);
                let n = FieldSpec::PrimeField(p).from_u64(n);
                Ok(n * d.inv()?)
            }
        }
    }

    fn from_u64(self, v: u64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => Scalar::Modular { value: v % p, modulus: p },
        }
    }

    /// Parses a serialized scalar: `"num/den"` or `"n"` (string or JSON number).
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad scalar {text:?}")))?;
        let den = BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad scalar {text:?}")))?;
        self.from_ratio(&num, &den)
    }

    /// Scalar from a JSON value: a string (`"1/2"`) or an integer.
    pub fn scalar_from_json(self, value: &serde_json::Value) -> Result<Scalar> {
        match value {
            serde_json::Value::String(s) => self.parse_scalar(s),
            serde_json::Value::Number(n) => match n.as_i64() {
                Some(i) => Ok(self.from_i64(i)),
                None => Err(Error::Parse(format!("non-integer numeric scalar {n}"))),
            },
            other => Err(Error::Parse(format!("scalar must be a string or integer, got {other}"))),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FieldSpec::parse(s)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        FieldSpec::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Free-function form of [`FieldSpec::parse`].
pub fn field_from_spec(descriptor: &str) -> Result<FieldSpec> {
    FieldSpec::parse(descriptor)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue fits in u64")
}

/// An element of ℚ (lowest terms, positive denominator) or of 𝔽_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::PrimeField(*modulus),
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

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.checked_mul(&other.inv()?)?)
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.clone() + other.clone())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self * other)
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }

    /// Canonical text form: `"num/den"` over ℚ, the residue over 𝔽_p.
    pub fn to_canonical_string(&self) -> String {
        match self {
            Scalar::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Scalar::Modular { value, .. } => value.to_string(),
        }
    }

    /// JSON form used in every schema: a `"num/den"` string over ℚ, an integer over 𝔽_p.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Rational(_) => serde_json::Value::String(self.to_canonical_string()),
            Scalar::Modular { value, .. } => serde_json::Value::from(*value),
        }
    }

    /// Representative as a rational number (residue for 𝔽_p).
    pub fn as_rational(&self) -> BigRational {
        match self {
            Scalar::Rational(r) => r.clone(),
            Scalar::Modular { value, .. } => BigRational::from_integer(BigInt::from(*value)),
        }
    }

    /// Symmetric representative for 𝔽_p (in `(-p/2, p/2]`), used for printing.
    fn signed_repr(&self) -> BigRational {
        match self {
            Scalar::Rational(r) => r.clone(),
            Scalar::Modular { value, modulus } => {
                let v = *value as i128;
                let p = *modulus as i128;
                let s = if v > p / 2 { v - p } else { v };
                BigRational::from_integer(BigInt::from(s))
            }
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative_repr(&self) -> bool {
        self.signed_repr().is_negative()
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
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

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.signed_repr();
        if r.is_integer() {
            write!(f, "{}", r.numer())
        } else {
            write!(f, "{}/{}", r.numer(), r.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(_) => write!(f, "{self}"),
            Scalar::Modular { value, modulus } => write!(f, "{value} (mod {modulus})"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $modop:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($rat(a, b)),
                    (
                        Scalar::Modular { value: a, modulus: p },
                        Scalar::Modular { value: b, modulus: q },
                    ) if p == q => Scalar::Modular { value: $modop(*a, *b, *p), modulus: *p },
                    (a, b) => panic!("scalar field mismatch: {} vs {}", a.field(), b.field()),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: u64, b: u64, p: u64| (a + b) % p);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: u64, b: u64, p: u64| (a + p - b) % p);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, |a: u64, b: u64, p: u64| a * b % p);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus,
            },
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Modular { value, modulus }, Scalar::Modular { value: b, modulus: q })
                if modulus == q =>
            {
                *value = (*value + b) % *modulus
            }
            (a, b) => panic!("scalar field mismatch: {} vs {}", a.field(), b.field()),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self += &(-rhs);
    }
}

/// `a0 + a1·t` with `t² = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualScalar {
    pub a0: Scalar,
    pub a1: Scalar,
}

impl DualScalar {
    pub fn new(a0: Scalar, a1: Scalar) -> Result<Self> {
        if a0.field() != a1.field() {
            return Err(Error::FieldMismatch(a0.field(), a1.field()));
        }
        Ok(DualScalar { a0, a1 })
    }

    /// The embedding k → k[t]/(t²).
    pub fn embed(a0: Scalar) -> Self {
        let a1 = a0.field().zero();
        DualScalar { a0, a1 }
    }

    pub fn t(field: FieldSpec) -> Self {
        DualScalar { a0: field.zero(), a1: field.one() }
    }

    pub fn field(&self) -> FieldSpec {
        self.a0.field()
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }

    pub fn checked_add(&self, other: &DualScalar) -> Result<DualScalar> {
        self.same_field(other)?;
        Ok(DualScalar { a0: &self.a0 + &other.a0, a1: &self.a1 + &other.a1 })
    }

    fn same_field(&self, other: &DualScalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }
}

/// `(a0 + a1 t)(b0 + b1 t) = a0 b0 + (a0 b1 + a1 b0) t`.
pub fn dual_mul(x: &DualScalar, y: &DualScalar) -> Result<DualScalar> {
    x.same_field(y)?;
    Ok(DualScalar {
        a0: &x.a0 * &y.a0,
        a1: &(&x.a0 * &y.a1) + &(&x.a1 * &y.a0),
    })
}

impl fmt::Display for DualScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a1.is_zero() {
            write!(f, "{}", self.a0)
        } else if self.a1.is_negative_repr() {
            write!(f, "{} - {}t", self.a0, -self.a1.clone())
        } else {
            write!(f, "{} + {}t", self.a0, self.a1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        FieldSpec::Rationals.from_ratio(&BigInt::from(n), &BigInt::from(d)).unwrap()
    }

    #[test]
    fn parses_field_descriptors() {
        assert_eq!(field_from_spec("Q").unwrap(), FieldSpec::Rationals);
        assert_eq!(field_from_spec("Fp:3").unwrap(), FieldSpec::PrimeField(3));
        assert!(matches!(field_from_spec("Fp:4"), Err(Error::NotPrime(4))));
        assert!(matches!(field_from_spec("Fp:x"), Err(Error::Parse(_))));
        assert!(matches!(field_from_spec("R"), Err(Error::Parse(_))));
        // char 2 is representable at this layer
        assert_eq!(field_from_spec("Fp:2").unwrap(), FieldSpec::PrimeField(2));
    }

    #[test]
    fn rationals_stay_reduced() {
        let x = q(6, -4);
        assert_eq!(x.to_canonical_string(), "-3/2");
        assert_eq!(FieldSpec::Rationals.parse_scalar("-3/2").unwrap(), x);
        assert_eq!(FieldSpec::Rationals.parse_scalar("4").unwrap().to_canonical_string(), "4/1");
    }

    #[test]
    fn modular_parse_inverts_denominator() {
        let f = FieldSpec::PrimeField(5);
        let half = f.parse_scalar("1/2").unwrap();
        assert_eq!(&half * &f.from_i64(2), f.one());
        assert!(matches!(f.parse_scalar("1/5"), Err(Error::DivisionByZero)));
    }

    #[test]
    fn dual_multiplication_examples() {
        let f = FieldSpec::Rationals;
        let t = DualScalar::t(f);
        assert!(dual_mul(&t, &t).unwrap().is_zero());
        let x = DualScalar::new(f.from_i64(1), f.from_i64(2)).unwrap();
        let y = DualScalar::new(f.from_i64(3), f.from_i64(5)).unwrap();
        // (1 + 2t)(3 + 5t) = 3 + 5t + 6t + 10t² → 3 + 11t
        let expected = DualScalar::new(f.from_i64(3), f.from_i64(11)).unwrap();
        assert_eq!(dual_mul(&x, &y).unwrap(), expected);
        let one = DualScalar::embed(f.one());
        assert_eq!(dual_mul(&one, &x).unwrap(), x);
    }

    #[test]
    fn dual_multiplication_rejects_mixed_fields() {
        let a = DualScalar::embed(FieldSpec::Rationals.one());
        let b = DualScalar::embed(FieldSpec::PrimeField(3).one());
        assert!(matches!(dual_mul(&a, &b), Err(Error::FieldMismatch(..))));
    }

    fn arb_field() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just(FieldSpec::Rationals),
            Just(FieldSpec::PrimeField(2)),
            Just(FieldSpec::PrimeField(3)),
            Just(FieldSpec::PrimeField(7)),
            Just(FieldSpec::PrimeField(101)),
        ]
    }

    fn arb_scalar(f: FieldSpec) -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20).prop_map(move |(n, d)| {
            f.from_ratio(&BigInt::from(n), &BigInt::from(d))
                .unwrap_or_else(|_| f.from_i64(n))
        })
    }

    fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
        arb_field().prop_flat_map(|f| (arb_scalar(f), arb_scalar(f), arb_scalar(f)))
    }

    fn six() -> impl Strategy<Value = [Scalar; 6]> {
        arb_field().prop_flat_map(|f| {
            (arb_scalar(f), arb_scalar(f), arb_scalar(f), arb_scalar(f), arb_scalar(f), arb_scalar(f))
                .prop_map(|(a, b, c, d, e, g)| [a, b, c, d, e, g])
        })
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in triple()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, a.field().zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), a.field().one());
            }
        }

        #[test]
        fn dual_ring_axioms([a, b, c, d, e, g] in six()) {
            let x = DualScalar::new(a, d).unwrap();
            let y = DualScalar::new(b, e).unwrap();
            let z = DualScalar::new(c, g).unwrap();
            let xy_z = dual_mul(&dual_mul(&x, &y).unwrap(), &z).unwrap();
            let x_yz = dual_mul(&x, &dual_mul(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(xy_z, x_yz);
            let lhs = dual_mul(&x, &y.checked_add(&z).unwrap()).unwrap();
            let rhs = dual_mul(&x, &y).unwrap().checked_add(&dual_mul(&x, &z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            // the ideal (t) squares to zero
            let tx = DualScalar::new(x.field().zero(), x.a1.clone()).unwrap();
            let ty = DualScalar::new(y.field().zero(), y.a1.clone()).unwrap();
            prop_assert!(dual_mul(&tx, &ty).unwrap().is_zero());
        }

        #[test]
        fn embedding_is_a_ring_homomorphism((a, b, _c) in triple()) {
            let ea = DualScalar::embed(a.clone());
            let eb = DualScalar::embed(b.clone());
            prop_assert_eq!(DualScalar::embed(&a + &b), ea.checked_add(&eb).unwrap());
            prop_assert_eq!(DualScalar::embed(&a * &b), dual_mul(&ea, &eb).unwrap());
        }
    }
}
