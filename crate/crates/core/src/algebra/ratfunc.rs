//! Reduced rational functions over a field.
//!
//! Normal form: the denominator is monic and coprime to the numerator; zero
//! is `0/1`. With a unique normal form, equality is structural.

use super::field::{Field, IntegralDomain, Rational, Ring, Scalar};
use super::poly::{poly_gcd, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

/// The field `Q(q)` of rational functions in Bartholdi's indeterminate.
pub type QFunc = RatFunc<Rational>;

impl<F: Field> RatFunc<F> {
    /// `None` when `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    fn reduce(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den);
        let (mut n, mut d) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lead = d.leading().cloned().expect("nonzero denominator");
        if !lead.is_one() {
            let inv = lead.inv().expect("nonzero leading coefficient");
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The indeterminate.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The numerator when the denominator is one.
    pub fn to_poly(&self) -> Option<Poly<F>> {
        self.is_polynomial().then(|| self.num.clone())
    }

    /// Value at `x`, `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        self.num.eval(x).div(&self.den.eval(x))
    }
}

impl<F: Field> Ring for RatFunc<F> {
    fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        Self::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn from_int(n: i64) -> Self {
        Self::constant(F::from_int(n))
    }
}

impl<F: Field> IntegralDomain for RatFunc<F> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::reduce(self.den.clone(), self.num.clone()))
    }
}

impl<K: Scalar> RatFunc<K> {
    /// Renders as `num` or `(num)/(den)`.
    pub fn render(&self, var: &str) -> String {
        if self.is_polynomial() {
            return self.num.render(var);
        }
        let wrap = |p: &Poly<K>| {
            if p.is_single_term() {
                p.render(var)
            } else {
                format!("({})", p.render(var))
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Scalar for QFunc {
    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }

    fn render(&self) -> String {
        RatFunc::render(self, "q")
    }

    fn is_atomic(&self) -> bool {
        self.is_polynomial() && self.num.is_single_term()
    }

    fn split_sign(&self) -> (bool, Self) {
        let (neg, _) = self.num.leading().map_or((false, Rational::zero()), |c| c.split_sign());
        if neg {
            (true, self.neg())
        } else {
            (false, self.clone())
        }
    }

    fn field_name() -> &'static str {
        "Q(q)"
    }
}
