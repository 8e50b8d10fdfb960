//! Dense univariate polynomials.
//!
//! `Poly<R>` stores coefficients in ascending degree order. The representation
//! is canonical: the zero polynomial is the empty vector and otherwise the last
//! coefficient is nonzero.

use super::field::{Field, IntegralDomain, Ring, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Drops every term of degree above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order + 1).cloned().collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Substitutes `t -> c*t`.
    pub fn scale_var(&self, c: &R) -> Self {
        let mut pw = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.mul(&pw));
            pw = pw.mul(c);
        }
        Self::new(out)
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    /// Returns `None` for a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.leading()?.inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].mul(&lead_inv);
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = rem[i + j].sub(&c.mul(d));
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading().and_then(Field::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Ring::is_one)
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn poly_gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y).expect("nonzero divisor");
        x = y;
        y = r.monic();
    }
    x.monic()
}

/// Monic least common multiple; zero if either input is zero.
pub fn poly_lcm<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = poly_gcd(a, b);
    let (q, _) = a.div_rem(&g).expect("gcd is nonzero");
    q.mul(b).monic()
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }
    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }
    fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }
    fn from_int(n: i64) -> Self {
        Poly::constant(R::from_int(n))
    }
}

impl<F: Field> IntegralDomain for Poly<F> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs)?;
        r.is_zero().then_some(q)
    }
}

impl<K: Scalar> Poly<K> {
    /// Canonical ascending-power rendering, e.g. `1 - 2*t^2 + t^4`.
    pub fn render(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (negative, mag) = c.split_sign();
            let body = match k {
                0 => mag.render(),
                _ => {
                    let power = if k == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{k}")
                    };
                    if mag.is_one() {
                        power
                    } else if mag.is_atomic() {
                        format!("{}*{power}", mag.render())
                    } else {
                        format!("({})*{power}", mag.render())
                    }
                }
            };
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }

    /// True when the rendering is a single unsigned term.
    pub fn is_single_term(&self) -> bool {
        let mut terms = self.coeffs.iter().filter(|c| !c.is_zero());
        match (terms.next(), terms.next()) {
            (Some(c), None) => !c.split_sign().0 && c.is_atomic(),
            _ => false,
        }
    }
}
