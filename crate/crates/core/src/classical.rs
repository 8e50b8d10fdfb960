//! Closed-form Ihara expressions of the classical graph zetas for undirected
//! graphs, evaluated independently of the edge matrix.

use crate::algebra::{Field, Matrix, Poly, RatFunc, Ring, Scalar};
use crate::digraph::{EdgeArcs, Graph};
use crate::error::{Error, Result};
use crate::weights::WeightScheme;

/// Which closed form to evaluate, with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum ClassicalVariant<K> {
    /// `(1-t^2)^{|E|-|V|} det(I - tA + t^2(D - I))`
    BassIhara,
    /// `det(I - tW)`; `W` is vertex-indexed with `w_uv` the summed weight of
    /// the arcs from `u` to `v`.
    BowenLanford(Matrix<K>),
    /// `(1-t^2)^{|E|-|V|} det(I - tW + t^2(D - I))`
    MizunoSato(Matrix<K>),
    /// `(1-t^2)^{|E|-|V|} det(I - tW + t^2(D(w) - I))` with `D(w)` the
    /// diagonal of row sums of `W`.
    Sato(Matrix<K>),
    /// `(1+(1-q)t)^{|L|} (1-(1-q)^2 t^2)^{|E|-|L|-|V|}
    ///  det(I - tA + (1-q)t^2(D - (1-q)I))`
    Bartholdi(K),
}

/// `base^exp` in `K(t)`; negative exponents invert.
fn signed_power<K: Field>(base: &Poly<K>, exp: i64) -> RatFunc<K> {
    let p = RatFunc::from_poly(base.pow(exp.unsigned_abs() as u32));
    if exp < 0 {
        p.inv().expect("base has constant term one")
    } else {
        p
    }
}

fn finish<K: Scalar>(prefactor: RatFunc<K>, m: Matrix<Poly<K>>) -> Result<Poly<K>> {
    let det = m.det_bareiss()?;
    let value = prefactor.mul(&RatFunc::from_poly(det));
    value.to_poly().ok_or_else(|| {
        Error::Consistency(format!(
            "closed form left the denominator {}",
            value.den().render("t")
        ))
    })
}

/// `delta_ij (1 + t^2 diag_i) - t w_ij`
fn quadratic_matrix<K: Scalar>(w: &Matrix<K>, diag: &[K]) -> Matrix<Poly<K>> {
    let n = w.rows();
    Matrix::from_fn(n, n, |i, j| {
        let mut p = Poly::new(vec![K::zero(), w.get(i, j).neg()]);
        if i == j {
            p = p.add(&Poly::new(vec![K::one(), K::zero(), diag[i].clone()]));
        }
        p
    })
}

fn require_simple(g: &Graph) -> Result<()> {
    match g.simple_violation() {
        Some(why) => Err(Error::NotSimple(why)),
        None => Ok(()),
    }
}

fn check_weights<K: Scalar>(g: &Graph, w: &Matrix<K>) -> Result<()> {
    let n = g.vertex_count();
    if w.rows() != n || w.cols() != n {
        return Err(Error::Dimension(format!(
            "weighted matrix is {}x{}, graph has {n} vertices",
            w.rows(),
            w.cols()
        )));
    }
    let a: Matrix<K> = g.adjacency_matrix();
    for u in 0..n {
        for v in 0..n {
            if a.get(u, v).is_zero() && !w.get(u, v).is_zero() {
                return Err(Error::Scheme(format!(
                    "weight on ({u}, {v}) but no edge there"
                )));
            }
        }
    }
    Ok(())
}

fn one_minus_t2<K: Scalar>() -> Poly<K> {
    Poly::new(vec![K::one(), K::zero(), K::one().neg()])
}

pub fn bass_ihara_classical<K: Scalar>(g: &Graph) -> Result<Poly<K>> {
    classical_closed_form(g, &ClassicalVariant::BassIhara)
}

/// Evaluates the closed form. Bass-Ihara, Mizuno-Sato and Sato need a simple
/// graph; Bartholdi needs at most one edge per vertex pair and at most one
/// loop per vertex; Bowen-Lanford accepts any graph.
pub fn classical_closed_form<K: Scalar>(g: &Graph, variant: &ClassicalVariant<K>) -> Result<Poly<K>> {
    let n = g.vertex_count();
    let excess = g.edges().len() as i64 - n as i64;
    let a: Matrix<K> = g.adjacency_matrix();
    let deg: Vec<K> = (0..n)
        .map(|u| a.row(u).iter().fold(K::zero(), |acc, x| acc.add(x)))
        .collect();
    match variant {
        ClassicalVariant::BassIhara => {
            require_simple(g)?;
            let diag: Vec<K> = deg.iter().map(|d| d.sub(&K::one())).collect();
            finish(signed_power(&one_minus_t2(), excess), quadratic_matrix(&a, &diag))
        }
        ClassicalVariant::BowenLanford(w) => {
            check_weights(g, w)?;
            let zeros = vec![K::zero(); n];
            finish(RatFunc::one(), quadratic_matrix(w, &zeros))
        }
        ClassicalVariant::MizunoSato(w) => {
            require_simple(g)?;
            check_weights(g, w)?;
            let diag: Vec<K> = deg.iter().map(|d| d.sub(&K::one())).collect();
            finish(signed_power(&one_minus_t2(), excess), quadratic_matrix(w, &diag))
        }
        ClassicalVariant::Sato(w) => {
            require_simple(g)?;
            check_weights(g, w)?;
            let diag: Vec<K> = (0..n)
                .map(|u| {
                    w.row(u)
                        .iter()
                        .fold(K::zero(), |acc, x| acc.add(x))
                        .sub(&K::one())
                })
                .collect();
            finish(signed_power(&one_minus_t2(), excess), quadratic_matrix(w, &diag))
        }
        ClassicalVariant::Bartholdi(q) => {
            bartholdi_precondition(g)?;
            let s = K::one().sub(q);
            let loops = g.loop_count() as i64;
            let linear = Poly::new(vec![K::one(), s.clone()]);
            let quadratic = Poly::new(vec![K::one(), K::zero(), s.mul(&s).neg()]);
            let prefactor = signed_power(&linear, loops)
                .mul(&signed_power(&quadratic, excess - loops));
            let diag: Vec<K> = deg.iter().map(|d| s.mul(&d.sub(&s))).collect();
            finish(prefactor, quadratic_matrix(&a, &diag))
        }
    }
}

fn bartholdi_precondition(g: &Graph) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for &(u, v) in g.edges() {
        if !seen.insert((u.min(v), u.max(v))) {
            let why = if u == v {
                format!("two loops at vertex {u}")
            } else {
                format!("parallel edges between {u} and {v}")
            };
            return Err(Error::NotSimple(why));
        }
    }
    Ok(())
}

/// `W` with `w_uv` the summed `tau` of the arcs from `u` to `v` in the
/// symmetric digraph of `g`, arcs numbered as in [`Graph::symmetric_digraph`].
pub fn weighted_matrix<K: Scalar>(g: &Graph, scheme: &WeightScheme<K>) -> Result<Matrix<K>> {
    let sym = g.symmetric_digraph();
    scheme.check_digraph(&sym.digraph)?;
    let n = g.vertex_count();
    let mut w: Matrix<K> = Matrix::zeros(n, n);
    for (&(u, v), arcs) in g.edges().iter().zip(&sym.provenance) {
        let (lo, hi) = (u.min(v), u.max(v));
        match *arcs {
            EdgeArcs::Loop(a) => w.set(u, u, w.get(u, u).add(scheme.tau(a))),
            EdgeArcs::Pair { forward, backward } => {
                w.set(lo, hi, w.get(lo, hi).add(scheme.tau(forward)));
                w.set(hi, lo, w.get(hi, lo).add(scheme.tau(backward)));
            }
        }
    }
    Ok(w)
}
