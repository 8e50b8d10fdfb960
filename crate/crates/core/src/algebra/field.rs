//! Ring and field abstractions shared by the polynomial, rational-function and
//! matrix code.
//!
//! Only two scalar fields are used by the zeta machinery: the rationals `Q`
//! ([`Rational`]) and rational functions in Bartholdi's indeterminate `q`
//! ([`QFunc`]). Everything else is generic over [`Field`] so that the same code
//! also runs over `Q(t)` and `Q(q)(t)`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Commutative ring with unity.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Ring without zero divisors, with exact division where it is defined.
pub trait IntegralDomain: Ring {
    /// Returns `self / rhs` when `rhs` divides `self`, `None` otherwise.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

/// A field: every nonzero element is invertible.
pub trait Field: IntegralDomain {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

/// A field that can serve as the weight field `K` of a zeta computation.
///
/// Besides the field operations this carries the embedding of `Q` and a
/// canonical textual form used for CLI output.
pub trait Scalar: Field {
    fn from_rational(r: &Rational) -> Self;

    /// Canonical string, e.g. `"-3/2"` or `"1 - q^2"`.
    fn render(&self) -> String;

    /// True when the rendering needs no parentheses as a product factor.
    fn is_atomic(&self) -> bool;

    /// Splits off a leading minus sign: `(true, -x)` when `x` renders negative.
    fn split_sign(&self) -> (bool, Self) {
        (false, self.clone())
    }

    /// Name of the field for reports.
    fn field_name() -> &'static str;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl IntegralDomain for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, rhs);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl IntegralDomain for Rational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn is_atomic(&self) -> bool {
        !self.is_negative()
    }

    fn split_sign(&self) -> (bool, Self) {
        if self.is_negative() {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }

    fn field_name() -> &'static str {
        "Q"
    }
}

/// Shorthand for building small rationals in code and tests.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
