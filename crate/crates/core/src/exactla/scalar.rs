//! Field specifications and exact scalars.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::LinAlgError;

/// The ground field: a prime field GF(p) or the rationals.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

impl FieldSpec {
    /// Prime field GF(p). Primality is checked by trial division.
    pub fn prime(p: u64) -> Result<FieldSpec, LinAlgError> {
        if p >= 1 << 31 {
            return Err(LinAlgError::PrimeTooLarge(p));
        }
        if p < 2 || (p > 2 && p % 2 == 0) {
            return Err(LinAlgError::NotPrime(p));
        }
        let mut d = 3;
        while d * d <= p {
            if p % d == 0 {
                return Err(LinAlgError::NotPrime(p));
            }
            d += 2;
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn rational() -> FieldSpec {
        FieldSpec::Rational
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Fp { v: 0, p: *p },
            FieldSpec::Rational => Scalar::Q(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Fp { v: 1, p: *p },
            FieldSpec::Rational => Scalar::Q(Box::new(BigRational::one())),
        }
    }

    /// Canonical embedding of a signed integer.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { v: m, p: *p }
            }
            FieldSpec::Rational => Scalar::Q(Box::new(BigRational::from(BigInt::from(n)))),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rational => write!(f, "QQ"),
        }
    }
}

/// An exact field element. Prime-field values are canonical representatives
/// `0 <= v < p`; rationals are kept reduced by `BigRational`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Fp { v: u64, p: u64 },
    Q(Box<BigRational>),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
            Scalar::Q(_) => FieldSpec::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: p2 }) => {
                check_same(*p, *p2);
                Scalar::Fp {
                    v: (a + b) % p,
                    p: *p,
                }
            }
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(&**a + &**b)),
            _ => panic!("scalar field mismatch in add"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: p2 }) => {
                check_same(*p, *p2);
                Scalar::Fp {
                    v: (a * b) % p,
                    p: *p,
                }
            }
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(&**a * &**b)),
            _ => panic!("scalar field mismatch in mul"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Fp { v, p } => Scalar::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
            Scalar::Q(q) => Scalar::Q(Box::new(-&**q)),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Fp { v, p } => {
                if *v == 0 {
                    None
                } else {
                    Some(Scalar::Fp {
                        v: inv_mod(*v, *p),
                        p: *p,
                    })
                }
            }
            Scalar::Q(q) => {
                if q.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(Box::new(q.recip())))
                }
            }
        }
    }

    /// The canonical `u64` representative for prime-field scalars.
    pub fn fp_value(&self) -> Option<u64> {
        match self {
            Scalar::Fp { v, .. } => Some(*v),
            Scalar::Q(_) => None,
        }
    }

    pub fn rational(q: BigRational) -> Scalar {
        Scalar::Q(Box::new(q))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { v, .. } => write!(f, "{v}"),
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

fn check_same(p: u64, p2: u64) {
    assert_eq!(p, p2, "scalar moduli differ: {p} vs {p2}");
}

/// Modular inverse by extended Euclid; `a` must be nonzero mod `p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "element not invertible mod {p}");
    t0.rem_euclid(p as i128) as u64
}

/// Parse a scalar from the JSON wire form: integers for prime fields,
/// integers or "a/b" strings for the rationals.
pub fn scalar_from_json(field: FieldSpec, value: &serde_json::Value) -> Result<Scalar, String> {
    match field {
        FieldSpec::Prime(_) => {
            let n = value
                .as_i64()
                .ok_or_else(|| format!("expected integer coefficient, got {value}"))?;
            Ok(field.from_i64(n))
        }
        FieldSpec::Rational => {
            if let Some(n) = value.as_i64() {
                return Ok(field.from_i64(n));
            }
            let s = value
                .as_str()
                .ok_or_else(|| format!("expected integer or \"a/b\" string, got {value}"))?;
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a, b),
                None => (s, "1"),
            };
            let num: BigInt = num.parse().map_err(|_| format!("bad numerator in {s}"))?;
            let den: BigInt = den.parse().map_err(|_| format!("bad denominator in {s}"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s}"));
            }
            Ok(Scalar::rational(BigRational::new(num, den)))
        }
    }
}

/// Serialize a scalar to the JSON wire form.
pub fn scalar_to_json(s: &Scalar) -> serde_json::Value {
    match s {
        Scalar::Fp { v, .. } => serde_json::Value::from(*v),
        Scalar::Q(q) => {
            if q.denom().is_one() && q.numer().abs() < BigInt::from(i64::MAX) {
                let n: i64 = q.numer().try_into().expect("checked range");
                serde_json::Value::from(n)
            } else {
                serde_json::Value::from(format!("{}/{}", q.numer(), q.denom()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_check() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(3).is_ok());
        assert!(FieldSpec::prime(5).is_ok());
        assert!(FieldSpec::prime(101).is_ok());
        assert_eq!(FieldSpec::prime(1), Err(LinAlgError::NotPrime(1)));
        assert_eq!(FieldSpec::prime(4), Err(LinAlgError::NotPrime(4)));
        assert_eq!(FieldSpec::prime(9), Err(LinAlgError::NotPrime(9)));
        assert_eq!(FieldSpec::prime(91), Err(LinAlgError::NotPrime(91)));
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::prime(3).unwrap();
        let two = f.from_i64(2);
        // 2 * 2 = 4 = 1 mod 3
        assert!(two.mul(&two).is_one());
        assert_eq!(two.inv().unwrap(), two);
        assert_eq!(f.from_i64(-1), two);
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn rational_arithmetic() {
        let f = FieldSpec::rational();
        let half = f.from_i64(1).mul(&f.from_i64(2).inv().unwrap());
        assert_eq!(half.add(&half), f.one());
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn json_round_trip() {
        let f = FieldSpec::prime(5).unwrap();
        let s = f.from_i64(3);
        assert_eq!(scalar_from_json(f, &scalar_to_json(&s)).unwrap(), s);

        let q = FieldSpec::Rational;
        let s = q.from_i64(7).mul(&q.from_i64(3).inv().unwrap());
        assert_eq!(scalar_from_json(q, &scalar_to_json(&s)).unwrap(), s);
    }
}
