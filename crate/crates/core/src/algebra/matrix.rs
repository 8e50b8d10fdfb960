//! Dense row-major matrices over a ring, with exact determinants.

use std::ops::Range;

use super::field::{Field, IntegralDomain, Ring};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn diagonal(entries: Vec<R>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn same_shape(&self, rhs: &Self, op: &str) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "{op} of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs, "sum")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs, "difference")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg)
    }

    pub fn trace(&self) -> Result<R> {
        self.require_square()?;
        Ok((0..self.rows).fold(R::zero(), |acc, i| acc.add(self.get(i, i))))
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows.start + i, cols.start + j).clone()
        })
    }

    /// Selects rows and columns by index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Assembles `[[a, b], [c, d]]`.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::Dimension("incompatible blocks".into()));
        }
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        Ok(Self::from_fn(rows, cols, |i, j| {
            match (i < a.rows, j < a.cols) {
                (true, true) => a.get(i, j),
                (true, false) => b.get(i, j - a.cols),
                (false, true) => c.get(i - a.rows, j),
                (false, false) => d.get(i - a.rows, j - a.cols),
            }
            .clone()
        }))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<R: IntegralDomain> Matrix<R> {
    /// Fraction-free determinant (Bareiss elimination with row swaps).
    pub fn det_bareiss(&self) -> Result<R> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        negate = !negate;
                    }
                    None => return Ok(R::zero()),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let lead = a.get(i, k).clone();
                for j in k + 1..n {
                    let v = a.get(i, j).mul(&pivot).sub(&lead.mul(a.get(k, j)));
                    let v = v.div_exact(&prev).ok_or_else(|| {
                        Error::Consistency("Bareiss step is not an exact division".into())
                    })?;
                    a.set(i, j, v);
                }
                a.set(i, k, R::zero());
            }
            prev = pivot;
        }
        let det = a.get(n - 1, n - 1).clone();
        Ok(if negate { det.neg() } else { det })
    }
}

impl<F: Field> Matrix<F> {
    /// Determinant by Gaussian elimination, pivoting on the first nonzero
    /// entry of each column.
    pub fn det_over_field(&self) -> Result<F> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut det = F::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(F::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                det = det.neg();
            }
            let pivot = a.get(k, k).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("nonzero pivot");
            for i in k + 1..n {
                let factor = a.get(i, k).mul(&inv);
                if factor.is_zero() {
                    continue;
                }
                for j in k + 1..n {
                    let v = a.get(i, j).sub(&factor.mul(a.get(k, j)));
                    a.set(i, j, v);
                }
                a.set(i, k, F::zero());
            }
        }
        Ok(det)
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let p = (k..n)
                .find(|&i| !a.get(i, k).is_zero())
                .ok_or(Error::Singular)?;
            a.swap_rows(p, k);
            inv.swap_rows(p, k);
            let pivot_inv = a.get(k, k).inv().expect("nonzero pivot");
            for j in 0..n {
                a.set(k, j, a.get(k, j).mul(&pivot_inv));
                inv.set(k, j, inv.get(k, j).mul(&pivot_inv));
            }
            for i in 0..n {
                if i == k {
                    continue;
                }
                let factor = a.get(i, k).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a.set(i, j, a.get(i, j).sub(&factor.mul(a.get(k, j))));
                    inv.set(i, j, inv.get(i, j).sub(&factor.mul(inv.get(k, j))));
                }
            }
        }
        Ok(inv)
    }

    /// Characteristic polynomial `det(x I - M)` via reduction to upper
    /// Hessenberg form.
    pub fn charpoly(&self) -> Result<Poly<F>> {
        self.require_square()?;
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            h.swap_rows(i, m);
            h.swap_cols(i, m);
            let pivot_inv = h.get(m, m - 1).inv().expect("nonzero pivot");
            for i in m + 1..n {
                let u = h.get(i, m - 1).mul(&pivot_inv);
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = h.get(i, j).sub(&u.mul(h.get(m, j)));
                    h.set(i, j, v);
                }
                for j in 0..n {
                    let v = h.get(j, m).add(&u.mul(h.get(j, i)));
                    h.set(j, m, v);
                }
            }
        }
        // 1-based recurrence over the Hessenberg entries
        let e = |i: usize, j: usize| h.get(i - 1, j - 1);
        let mut p: Vec<Poly<F>> = vec![Poly::one()];
        for m in 1..=n {
            let mut pm = Poly::new(vec![e(m, m).neg(), F::one()]).mul(&p[m - 1]);
            let mut t = F::one();
            for i in (1..m).rev() {
                t = t.mul(e(i + 1, i));
                if t.is_zero() {
                    break;
                }
                let c = e(i, m).mul(&t);
                if !c.is_zero() {
                    pm = pm.sub(&p[i - 1].scale(&c));
                }
            }
            p.push(pm);
        }
        Ok(p.pop().expect("nonempty"))
    }

    /// `det(I - t M)`, the reversed characteristic polynomial.
    pub fn reciprocal_charpoly(&self) -> Result<Poly<F>> {
        let chi = self.charpoly()?;
        let mut coeffs = chi.into_coeffs();
        coeffs.reverse();
        Ok(Poly::new(coeffs))
    }
}
