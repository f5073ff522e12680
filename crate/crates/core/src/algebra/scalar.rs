use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// The coefficient field `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    /// ℚ with arbitrary-precision numerators and denominators.
    #[default]
    Rational,
    /// 𝔽_p for a prime `p < 2³¹`.
    Prime(u64),
}

/// A field element in canonical form: a reduced fraction or a least residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

const PRIME_LIMIT: u64 = 1 << 31;

impl Field {
    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        if !(2..PRIME_LIMIT).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::BadModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => Scalar::Residue(n.rem_euclid(p as i64) as u64),
        }
    }

    fn residue_of(p: u64, n: &BigInt) -> u64 {
        let r = n % BigInt::from(p);
        let r = if r.is_negative() {
            r + BigInt::from(p)
        } else {
            r
        };
        r.to_u64().expect("residue below modulus")
    }

    /// `num / den`. Fails when `den` vanishes in the field.
    pub fn ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar, AlgebraError> {
        match self {
            Field::Rational => {
                if den.is_zero() {
                    return Err(AlgebraError::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
            }
            Field::Prime(p) => {
                let d = Self::residue_of(p, den);
                if d == 0 {
                    return Err(AlgebraError::DivisionByZero);
                }
                let n = Self::residue_of(p, num);
                Ok(Scalar::Residue(mul_mod(n, pow_mod(d, p - 2, p), p)))
            }
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Field::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue((x + y) % p)
            }
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Field::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(mul_mod(*x, *y, p))
            }
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rational, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Field::Prime(p), Scalar::Residue(x)) => Scalar::Residue((p - x) % p),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn contains(self, a: &Scalar) -> bool {
        match (self, a) {
            (Field::Rational, Scalar::Rational(_)) => true,
            (Field::Prime(p), Scalar::Residue(x)) => *x < p,
            _ => false,
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Residue(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Residue(x) => *x == 1,
        }
    }

    /// Negative rationals; residues never are.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(x) if x.is_negative())
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(x.abs()),
            r => r.clone(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) if x.is_integer() => write!(f, "{}", x.numer()),
            Scalar::Rational(x) => write!(f, "{}/{}", x.numer(), x.denom()),
            Scalar::Residue(x) => write!(f, "{x}"),
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
