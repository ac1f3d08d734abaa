//! Exact scalars: arbitrary-precision rationals and residues modulo an odd prime.
//!
//! Every value carries its field. Mixing fields is a programming error for the
//! operator impls (they panic) and a recoverable [`Error::MixedFields`] for the
//! `try_*` methods.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus. Residue products must fit in a `u64`.
pub const MAX_PRIME: u64 = (1 << 32) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Rational,
    Prime(u64),
}

/// The ground field: `Q` or `F_p` with `p` an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec(Kind);

impl FieldSpec {
    pub const RATIONAL: FieldSpec = FieldSpec(Kind::Rational);

    pub fn rational() -> Self {
        Self::RATIONAL
    }

    /// `F_p`. Rejects `p = 2`, composites and moduli above [`MAX_PRIME`].
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidField("characteristic 2 is not supported".into()));
        }
        if p > MAX_PRIME {
            return Err(Error::InvalidField(format!("modulus {p} exceeds {MAX_PRIME}")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec(Kind::Prime(p)))
    }

    /// The modulus for a prime field, `None` for `Q`.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Rational => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.modulus().is_some()
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.0 {
            Kind::Rational => Scalar(Repr::Rational(BigRational::from_integer(BigInt::from(n)))),
            Kind::Prime(p) => Scalar(Repr::Prime {
                value: n.rem_euclid(p as i64) as u64,
                p,
            }),
        }
    }

    /// `num / den` in this field.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).try_div(&self.from_i64(den))
    }

    /// Every element of a prime field, in residue order.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        let p = self.modulus().ok_or(Error::NotFiniteField)?;
        Ok((0..p).map(|value| Scalar(Repr::Prime { value, p })).collect())
    }

    pub fn parse(&self, text: &str) -> Result<Scalar> {
        parse_scalar(text, *self)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rational => write!(f, "Q"),
            Kind::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Prime { value: u64, p: u64 },
}

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rational(_) => FieldSpec::RATIONAL,
            Repr::Prime { p, .. } => FieldSpec(Kind::Prime(*p)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_zero(),
            Repr::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_one(),
            Repr::Prime { value, .. } => *value == 1,
        }
    }

    /// Residue in `[0, p)` for prime fields.
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Prime { value, .. } => Some(*value),
            Repr::Rational(_) => None,
        }
    }

    /// Numerator and denominator (denominator > 0, coprime) for rationals.
    pub fn as_ratio(&self) -> Option<(&BigInt, &BigInt)> {
        match &self.0 {
            Repr::Rational(r) => Some((r.numer(), r.denom())),
            Repr::Prime { .. } => None,
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Ok(Scalar(Repr::Rational(a + b))),
            (Repr::Prime { value: a, p }, Repr::Prime { value: b, p: q }) if p == q => {
                Ok(Scalar(Repr::Prime { value: (a + b) % p, p: *p }))
            }
            _ => Err(Error::MixedFields),
        }
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.try_add(&rhs.neg_ref())
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Ok(Scalar(Repr::Rational(a * b))),
            (Repr::Prime { value: a, p }, Repr::Prime { value: b, p: q }) if p == q => {
                Ok(Scalar(Repr::Prime { value: (a * b) % p, p: *p }))
            }
            _ => Err(Error::MixedFields),
        }
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if self.field() != rhs.field() {
            return Err(Error::MixedFields);
        }
        self.try_mul(&rhs.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(r) => Scalar(Repr::Rational(r.recip())),
            Repr::Prime { value, p } => Scalar(Repr::Prime {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            }),
        })
    }

    fn neg_ref(&self) -> Scalar {
        match &self.0 {
            Repr::Rational(r) => Scalar(Repr::Rational(-r)),
            Repr::Prime { value, p } => Scalar(Repr::Prime {
                value: (p - value) % p,
                p: *p,
            }),
        }
    }

    /// A square root inside the field, if one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        match &self.0 {
            Repr::Rational(r) => {
                if r.is_negative() {
                    return None;
                }
                let n = r.numer().sqrt();
                let d = r.denom().sqrt();
                (&n * &n == *r.numer() && &d * &d == *r.denom())
                    .then(|| Scalar(Repr::Rational(BigRational::new(n, d))))
            }
            Repr::Prime { value, p } => (0..*p)
                .find(|x| (x * x) % p == *value)
                .map(|x| Scalar(Repr::Prime { value: x, p: *p })),
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar addition across fields")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar subtraction across fields")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar multiplication across fields")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// Canonical total order used for deterministic output: fields first, then
/// numeric order for rationals and residue order for `F_p`.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            (Repr::Prime { value: a, p }, Repr::Prime { value: b, p: q }) => {
                p.cmp(q).then(a.cmp(b))
            }
            (Repr::Rational(_), Repr::Prime { .. }) => Ordering::Less,
            (Repr::Prime { .. }, Repr::Rational(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Parse `[-]digits[/digits]` into `field`. Both `-` and the Unicode minus
/// sign are accepted. In `F_p`, `a/b` means `a * b^-1`.
pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar> {
    let trimmed = text.trim();
    let (negative, body) = match trimmed.strip_prefix('-').or_else(|| trimmed.strip_prefix('\u{2212}')) {
        Some(rest) => (true, rest),
        None => (false, trimmed),
    };
    let (num_text, den_text) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(text.to_string()));
        }
        s.parse::<BigInt>().map_err(|_| Error::Parse(text.to_string()))
    };
    let mut num = digits(num_text)?;
    if negative {
        num = -num;
    }
    let den = match den_text {
        Some(d) => digits(d)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::DenominatorZero(text.to_string()));
    }
    match field.0 {
        Kind::Rational => Ok(Scalar(Repr::Rational(BigRational::new(num, den)))),
        Kind::Prime(p) => {
            let reduce = |x: &BigInt| -> u64 {
                let m = BigInt::from(p);
                let r = ((x % &m) + &m) % &m;
                r.to_u64().expect("residue fits in u64")
            };
            let d = reduce(&den);
            if d == 0 {
                return Err(Error::DenominatorNotInvertible {
                    text: text.to_string(),
                    p,
                });
            }
            let n = Scalar(Repr::Prime { value: reduce(&num), p });
            let d = Scalar(Repr::Prime { value: d, p });
            n.try_div(&d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        parse_scalar(s, FieldSpec::rational()).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q("1/2") + &q("1/3"), q("5/6"));
    }

    #[test]
    fn inverse_in_f5() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.from_i64(4).inv().unwrap(), f5.from_i64(4));
    }

    #[test]
    fn parse_cases() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(q("-2"), FieldSpec::rational().from_i64(-2));
        assert_eq!(q("\u{2212}2"), FieldSpec::rational().from_i64(-2));
        // 4 * 4 = 16 = 1 mod 5
        assert_eq!(parse_scalar("1/4", f5).unwrap().residue(), Some(4));
        assert!(matches!(
            parse_scalar("3/5", f5),
            Err(Error::DenominatorNotInvertible { p: 5, .. })
        ));
        assert!(matches!(parse_scalar("1/0", FieldSpec::rational()), Err(Error::DenominatorZero(_))));
        assert!(matches!(parse_scalar("x", FieldSpec::rational()), Err(Error::Parse(_))));
        assert!(matches!(parse_scalar("1/-2", FieldSpec::rational()), Err(Error::Parse(_))));
        assert!(matches!(parse_scalar("", FieldSpec::rational()), Err(Error::Parse(_))));
    }

    #[test]
    fn lowest_terms() {
        let x = q("6/4");
        assert_eq!(x.to_string(), "3/2");
        assert_eq!(q("-6/4").to_string(), "-3/2");
        assert_eq!(q("0/7").to_string(), "0");
    }

    #[test]
    fn field_construction() {
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(7).is_ok());
    }

    #[test]
    fn errors() {
        let f3 = FieldSpec::prime(3).unwrap();
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f3.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(f3.one().try_add(&f5.one()), Err(Error::MixedFields));
        assert_eq!(f3.one().try_mul(&q("1")), Err(Error::MixedFields));
        assert_eq!(q("1").try_div(&q("0")), Err(Error::DivisionByZero));
    }

    #[test]
    fn square_roots() {
        assert_eq!(q("9/4").sqrt(), Some(q("3/2")));
        assert_eq!(q("2").sqrt(), None);
        assert_eq!(q("-1").sqrt(), None);
        let f5 = FieldSpec::prime(5).unwrap();
        // -1 = 4 = 2^2 in F_5
        assert!(f5.from_i64(-1).sqrt().is_some());
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(f3.from_i64(-1).sqrt().is_none());
    }
}
