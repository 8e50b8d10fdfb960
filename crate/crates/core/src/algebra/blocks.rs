//! Block-matrix and column-constant identities used to relate the arc-indexed
//! and vertex-indexed determinants.

use super::field::{Field, Ring};
use super::matrix::Matrix;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Which diagonal block a Schur complement is taken with respect to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    /// `M/A = D - C A^{-1} B`
    A,
    /// `M/D = A - B D^{-1} C`
    D,
}

/// True when all rows are identical (vacuously true with no rows).
pub fn is_column_constant<R: Ring>(m: &Matrix<R>) -> bool {
    (1..m.rows()).all(|i| m.row(i) == m.row(0))
}

/// The common row sum `rho_M` of a column-constant matrix.
pub fn row_sum<R: Ring>(m: &Matrix<R>) -> Result<R> {
    if !is_column_constant(m) {
        return Err(Error::NotColumnConstant);
    }
    if m.rows() == 0 {
        return Ok(R::zero());
    }
    Ok(m.row(0).iter().fold(R::zero(), |acc, x| acc.add(x)))
}

/// `(I + tM)^{-1} = det(I + tM)^{-1} (I - t(M - rho_M I))` with
/// `det(I + tM) = 1 + rho_M t`, for square column-constant `M`.
pub fn column_constant_inverse<K: Field>(m: &Matrix<K>) -> Result<Matrix<RatFunc<K>>> {
    m.require_square()?;
    let rho = row_sum(m)?;
    let n = m.rows();
    let t = Poly::<K>::var();
    let det = RatFunc::from_poly(Poly::new(vec![K::one(), rho.clone()]));
    let scale = det.inv().expect("1 + rho t is nonzero");
    Ok(Matrix::from_fn(n, n, |i, j| {
        let shifted = if i == j {
            m.get(i, j).sub(&rho)
        } else {
            m.get(i, j).clone()
        };
        let delta = if i == j { K::one() } else { K::zero() };
        let entry = Poly::constant(delta).sub(&t.scale(&shifted));
        RatFunc::from_poly(entry).mul(&scale)
    }))
}

/// Splits a square matrix into `[[A, B], [C, D]]` with `A` of size `split`.
pub fn split_blocks<R: Ring>(
    m: &Matrix<R>,
    split: usize,
) -> Result<(Matrix<R>, Matrix<R>, Matrix<R>, Matrix<R>)> {
    m.require_square()?;
    let n = m.rows();
    if split > n {
        return Err(Error::Dimension(format!("split {split} exceeds size {n}")));
    }
    Ok((
        m.submatrix(0..split, 0..split),
        m.submatrix(0..split, split..n),
        m.submatrix(split..n, 0..split),
        m.submatrix(split..n, split..n),
    ))
}

/// Schur complement of the selected diagonal block.
pub fn schur_complement<F: Field>(m: &Matrix<F>, split: usize, pivot: Pivot) -> Result<Matrix<F>> {
    let (a, b, c, d) = split_blocks(m, split)?;
    match pivot {
        Pivot::A => d.sub(&c.mul(&a.inverse()?)?.mul(&b)?),
        Pivot::D => a.sub(&b.mul(&d.inverse()?)?.mul(&c)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{rat, Rational};

    fn q(rows: &[&[(i64, i64)]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(n, d)| rat(n, d)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn row_sum_examples() {
        assert_eq!(row_sum(&q(&[&[(1, 1), (2, 1)], &[(1, 1), (2, 1)]])).unwrap(), rat(3, 1));
        assert_eq!(row_sum(&Matrix::<Rational>::zeros(3, 3)).unwrap(), rat(0, 1));
        let ups = q(&[&[(1, 2), (1, 3)], &[(1, 2), (1, 3)]]);
        assert_eq!(row_sum(&ups).unwrap(), rat(5, 6));
        assert_eq!(
            row_sum(&q(&[&[(1, 1), (2, 1)], &[(2, 1), (1, 1)]])),
            Err(Error::NotColumnConstant)
        );
    }

    #[test]
    fn scalar_column_constant_inverse() {
        let inv = column_constant_inverse(&q(&[&[(1, 1)]])).unwrap();
        let expected = RatFunc::new(Poly::one(), Poly::new(vec![rat(1, 1), rat(1, 1)])).unwrap();
        assert_eq!(inv.get(0, 0), &expected);
    }

    #[test]
    fn zero_column_constant_inverse_is_identity() {
        let inv = column_constant_inverse(&Matrix::<Rational>::zeros(3, 3)).unwrap();
        assert_eq!(inv, Matrix::identity(3));
    }

    #[test]
    fn all_ones_column_constant_inverse() {
        let m = q(&[&[(1, 1), (1, 1)], &[(1, 1), (1, 1)]]);
        let inv = column_constant_inverse(&m).unwrap();
        let den = Poly::new(vec![rat(1, 1), rat(2, 1)]);
        let diag = RatFunc::new(Poly::new(vec![rat(1, 1), rat(1, 1)]), den.clone()).unwrap();
        let off = RatFunc::new(Poly::new(vec![rat(0, 1), rat(-1, 1)]), den).unwrap();
        assert_eq!(inv.get(0, 0), &diag);
        assert_eq!(inv.get(1, 1), &diag);
        assert_eq!(inv.get(0, 1), &off);
        // (I + tM) * inverse = I
        let t = RatFunc::<Rational>::var();
        let lifted = m.map(|x| RatFunc::constant(x.clone()).mul(&t));
        let i_plus = Matrix::identity(2).add(&lifted).unwrap();
        assert_eq!(i_plus.mul(&inv).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn schur_of_identity_blocks() {
        // [[I, B], [C, I]] / I = I - C B
        let m = q(&[
            &[(1, 1), (0, 1), (2, 1)],
            &[(0, 1), (1, 1), (3, 1)],
            &[(5, 1), (7, 1), (1, 1)],
        ]);
        let s = schur_complement(&m, 2, Pivot::A).unwrap();
        assert_eq!(s, q(&[&[(1 - 10 - 21, 1)]]));
    }

    #[test]
    fn schur_with_zero_off_diagonal() {
        let m = q(&[
            &[(2, 1), (0, 1), (0, 1)],
            &[(4, 1), (3, 1), (1, 1)],
            &[(1, 1), (1, 1), (5, 1)],
        ]);
        let d = m.submatrix(1..3, 1..3);
        assert_eq!(schur_complement(&m, 1, Pivot::A).unwrap(), d);
    }

    #[test]
    fn schur_singular_block() {
        let m = q(&[&[(0, 1), (1, 1)], &[(1, 1), (0, 1)]]);
        assert_eq!(schur_complement(&m, 1, Pivot::A), Err(Error::Singular));
        assert!(schur_complement(&m, 3, Pivot::A).is_err());
    }
}
