//! Formal power series truncated at a fixed order `T` (coefficients of
//! `t^0..=t^T`).

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<K> {
    coeffs: Vec<K>,
}

impl<K: Field> TruncatedSeries<K> {
    /// Pads with zeros or cuts so that exactly `order + 1` coefficients remain.
    pub fn new(mut coeffs: Vec<K>, order: usize) -> Self {
        coeffs.resize(order + 1, K::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_poly(p: &Poly<K>, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![K::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &K {
        &self.coeffs[i]
    }

    pub fn to_poly(&self) -> Poly<K> {
        Poly::new(self.coeffs.clone())
    }

    fn check_order(&self, rhs: &Self) -> Result<()> {
        if self.order() != rhs.order() {
            return Err(Error::SeriesPrecondition("orders differ"));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect(),
        })
    }

    /// Cauchy product, truncated.
    pub fn product(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let n = self.coeffs.len();
        let mut out = vec![K::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0]
            .inv()
            .ok_or(Error::SeriesPrecondition("inverse needs a nonzero constant term"))?;
        let n = self.coeffs.len();
        let mut out: Vec<K> = Vec::with_capacity(n);
        out.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = K::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
                }
            }
            out.push(acc.neg().mul(&c0_inv));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `exp(f)` for `f(0) = 0`, from `n e_n = sum_{k=1..n} k f_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesPrecondition("exp needs a zero constant term"));
        }
        let n = self.coeffs.len();
        let mut out: Vec<K> = Vec::with_capacity(n);
        out.push(K::one());
        for m in 1..n {
            let mut acc = K::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&K::from_int(k as i64).mul(&self.coeffs[k]).mul(&out[m - k]));
                }
            }
            out.push(acc.div(&K::from_int(m as i64)).expect("nonzero integer"));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `log(f)` for `f(0) = 1`, from `f' = f (log f)'`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SeriesPrecondition("log needs constant term one"));
        }
        let n = self.coeffs.len();
        // g = log f; m g_m = m f_m - sum_{k=1..m-1} k g_k f_{m-k}
        let mut out: Vec<K> = vec![K::zero(); n];
        for m in 1..n {
            let mut acc = K::from_int(m as i64).mul(&self.coeffs[m]);
            for k in 1..m {
                if !out[k].is_zero() {
                    acc = acc.sub(&K::from_int(k as i64).mul(&out[k]).mul(&self.coeffs[m - k]));
                }
            }
            out[m] = acc.div(&K::from_int(m as i64)).expect("nonzero integer");
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}
