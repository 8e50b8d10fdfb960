//! Hashimoto and Ihara expressions of the generalized weighted zeta function
//! and the exact identity between them:
//!
//! `det(I - t M) = f(t) det(I - t A(t) + t^2 D(t))`
//!
//! where `M` is the arc-indexed edge matrix, `f` the product of the per-pair
//! polynomials `f_(u,v)` and `A(t)`, `D(t)` the vertex-indexed weighted
//! adjacency and backtrack matrices.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::algebra::{poly_lcm, Field, IntegralDomain, Matrix, Poly, RatFunc, Ring, Scalar};
use crate::digraph::{ArcId, Digraph, PhiPartition, Vertex};
use crate::error::{Error, Result};
use crate::weights::{edge_matrix, Preset, WeightScheme};

/// `det(I - t M)` for the edge matrix `M`; a polynomial of degree at most
/// the arc count with constant term one.
pub fn hashimoto_polynomial<K: Scalar>(d: &Digraph, scheme: &WeightScheme<K>) -> Result<Poly<K>> {
    edge_matrix(d, scheme)?.reciprocal_charpoly()
}

fn upsilon_sum<K: Scalar>(scheme: &WeightScheme<K>, arcs: &[ArcId]) -> K {
    arcs.iter()
        .fold(K::zero(), |acc, &a| acc.add(scheme.upsilon(a)))
}

/// `f_(u,v)(t)`: `1 + t sum_{A_uu} upsilon` on the diagonal, otherwise
/// `1 - t^2 (sum_{A_uv} upsilon)(sum_{A_vu} upsilon)`. Symmetric in `u, v`.
pub fn f_pair<K: Scalar>(d: &Digraph, scheme: &WeightScheme<K>, pair: (Vertex, Vertex)) -> Result<Poly<K>> {
    scheme.check_digraph(d)?;
    let (u, v) = pair;
    let (uv, vu) = d.arcs_between(u, v)?;
    if u == v {
        Ok(Poly::new(vec![K::one(), upsilon_sum(scheme, &uv)]))
    } else {
        let c = upsilon_sum(scheme, &uv).mul(&upsilon_sum(scheme, &vu));
        Ok(Poly::new(vec![K::one(), K::zero(), c.neg()]))
    }
}

/// Everything the vertex-indexed side of the identity is built from.
#[derive(Clone, Debug, PartialEq)]
pub struct IharaData<K: Field> {
    pub phi: PhiPartition,
    /// Keyed by `(u, v)` with `u <= v`, one entry per pair in `Phi`.
    pub f_pairs: BTreeMap<(Vertex, Vertex), Poly<K>>,
    pub f_delta: Poly<K>,
    /// `a_ww' = sum_{a in A_ww'} tau(a)`.
    pub a_counts: Matrix<K>,
    /// `d_uv = sum_{a in A_uv, a' in A_vu} tau(a) upsilon(a')`, for both
    /// orientations of every bidirectional pair.
    pub d_pairs: BTreeMap<(Vertex, Vertex), K>,
    /// `a_ww'(t) = a_ww' / f_(w,w')`.
    pub a_weighted: Matrix<RatFunc<K>>,
    /// Diagonal: `sum` over bidirectional pairs at `w` of `d / f`.
    pub d_weighted: Matrix<RatFunc<K>>,
}

impl<K: Scalar> IharaData<K> {
    /// `f_(u,v)`, which is one off `Phi`.
    pub fn f(&self, u: Vertex, v: Vertex) -> Poly<K> {
        self.f_pairs
            .get(&(u.min(v), u.max(v)))
            .cloned()
            .unwrap_or_else(Poly::one)
    }

    /// `I - t A(t) + t^2 D(t)`.
    pub fn ihara_matrix(&self) -> Matrix<RatFunc<K>> {
        let n = self.a_weighted.rows();
        let t = RatFunc::<K>::var();
        let t2 = t.mul(&t);
        Matrix::from_fn(n, n, |i, j| {
            let delta = if i == j { RatFunc::one() } else { RatFunc::zero() };
            delta
                .sub(&t.mul(self.a_weighted.get(i, j)))
                .add(&t2.mul(self.d_weighted.get(i, j)))
        })
    }
}

pub fn ihara_data<K: Scalar>(d: &Digraph, scheme: &WeightScheme<K>) -> Result<IharaData<K>> {
    let phi = d.phi_partition();
    let pairs = phi.all();
    ihara_data_with_pair_order(d, scheme, phi, &pairs)
}

/// As [`ihara_data`], visiting the pairs of `Phi` in the given order.
pub fn ihara_data_with_pair_order<K: Scalar>(
    d: &Digraph,
    scheme: &WeightScheme<K>,
    phi: PhiPartition,
    pairs: &[(Vertex, Vertex)],
) -> Result<IharaData<K>> {
    scheme.check_digraph(d)?;
    let n = d.vertex_count();

    let mut f_pairs = BTreeMap::new();
    let mut f_delta = Poly::one();
    for &pair in pairs {
        let f = f_pair(d, scheme, pair)?;
        f_delta = f_delta.mul(&f);
        f_pairs.insert(pair, f);
    }

    let mut a_counts: Matrix<K> = Matrix::zeros(n, n);
    for a in 0..d.arc_count() {
        let (t, h) = (d.tail(a), d.head(a));
        a_counts.set(t, h, a_counts.get(t, h).add(scheme.tau(a)));
    }

    let mut d_pairs = BTreeMap::new();
    let mut d_diag = vec![RatFunc::<K>::zero(); n];
    for &(u, v) in pairs.iter().filter(|p| phi.two_way.contains(p)) {
        let f_inv = RatFunc::from_poly(f_pairs[&(u, v)].clone())
            .inv()
            .expect("f has constant term one");
        for (x, y) in [(u, v), (v, u)] {
            let (xy, yx) = d.arcs_between(x, y)?;
            let tau_sum = xy
                .iter()
                .fold(K::zero(), |acc, &a| acc.add(scheme.tau(a)));
            let value = tau_sum.mul(&upsilon_sum(scheme, &yx));
            d_diag[x] = d_diag[x].add(&f_inv.mul(&RatFunc::constant(value.clone())));
            d_pairs.insert((x, y), value);
        }
    }

    let lookup = |u: Vertex, v: Vertex| {
        f_pairs
            .get(&(u.min(v), u.max(v)))
            .cloned()
            .unwrap_or_else(Poly::one)
    };
    let a_weighted = Matrix::from_fn(n, n, |w, w2| {
        let count = a_counts.get(w, w2);
        if count.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(Poly::constant(count.clone()), lookup(w, w2)).expect("f is nonzero")
    });

    Ok(IharaData {
        phi,
        f_pairs,
        f_delta,
        a_counts,
        d_pairs,
        a_weighted,
        d_weighted: Matrix::diagonal(d_diag),
    })
}

fn require_polynomial<K: Scalar>(value: RatFunc<K>, what: &str) -> Result<Poly<K>> {
    value.to_poly().ok_or_else(|| {
        Error::Consistency(format!(
            "{what} left the nontrivial denominator {}",
            value.den().render("t")
        ))
    })
}

/// `f(t) det(I - t A(t) + t^2 D(t))`, with the determinant taken over the
/// rational-function field `K(t)`.
pub fn ihara_polynomial<K: Scalar>(d: &Digraph, scheme: &WeightScheme<K>) -> Result<Poly<K>> {
    let data = ihara_data(d, scheme)?;
    let det = data.ihara_matrix().det_over_field()?;
    require_polynomial(RatFunc::from_poly(data.f_delta).mul(&det), "Ihara expression")
}

/// The same polynomial computed without rational-function arithmetic in the
/// determinant: each row is cleared by the lcm of its denominators, the
/// polynomial matrix goes through Bareiss elimination, and the row
/// multipliers are divided back out of `f(t) det`.
pub fn ihara_polynomial_fraction_free<K: Scalar>(
    d: &Digraph,
    scheme: &WeightScheme<K>,
) -> Result<Poly<K>> {
    let data = ihara_data(d, scheme)?;
    let m = data.ihara_matrix();
    let n = m.rows();
    let mut multiplier = Poly::one();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let lcm = m
            .row(i)
            .iter()
            .fold(Poly::one(), |acc, e| poly_lcm(&acc, e.den()));
        let row: Vec<Poly<K>> = m
            .row(i)
            .iter()
            .map(|e| {
                let (q, r) = lcm.div_rem(e.den()).expect("nonzero denominator");
                debug_assert!(r.is_zero());
                e.num().mul(&q)
            })
            .collect();
        multiplier = multiplier.mul(&lcm);
        rows.push(row);
    }
    let det = Matrix::from_rows(rows)?.det_bareiss()?;
    data.f_delta.mul(&det).div_exact(&multiplier).ok_or_else(|| {
        Error::Consistency("row multipliers do not divide f(t) det".into())
    })
}

/// Both sides of the identity with their exact comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaReport<K> {
    pub preset: Preset,
    pub field: &'static str,
    pub hashimoto: Poly<K>,
    pub ihara: Poly<K>,
    pub identity_holds: bool,
    pub hashimoto_time: Duration,
    pub ihara_time: Duration,
}

pub fn verify_main_theorem<K: Scalar>(d: &Digraph, scheme: &WeightScheme<K>) -> Result<ZetaReport<K>> {
    let start = Instant::now();
    let hashimoto = hashimoto_polynomial(d, scheme)?;
    let hashimoto_time = start.elapsed();
    let start = Instant::now();
    let ihara = ihara_polynomial(d, scheme)?;
    let ihara_time = start.elapsed();
    Ok(ZetaReport {
        preset: scheme.preset(),
        field: K::field_name(),
        identity_holds: hashimoto == ihara,
        hashimoto,
        ihara,
        hashimoto_time,
        ihara_time,
    })
}

/// The arc-indexed matrices of the block decomposition `M = H - J = K L - J`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProofMatrices<K> {
    /// `h_aa' = tau(a') [h(a) = t(a')]`
    pub h: Matrix<K>,
    /// `j_aa' = upsilon(a') [a' in S(a)]`
    pub j: Matrix<K>,
    /// Arcs by vertices: `[h(a) = w]`.
    pub k: Matrix<K>,
    /// Vertices by arcs: `tau(a) [t(a) = w]`.
    pub l: Matrix<K>,
}

pub fn proof_matrices<K: Scalar>(d: &Digraph, scheme: &WeightScheme<K>) -> Result<ProofMatrices<K>> {
    scheme.check_digraph(d)?;
    let arcs = d.arc_count();
    let n = d.vertex_count();
    let indicator = |b: bool| if b { K::one() } else { K::zero() };
    Ok(ProofMatrices {
        h: Matrix::from_fn(arcs, arcs, |a, a2| {
            if d.head(a) == d.tail(a2) {
                scheme.tau(a2).clone()
            } else {
                K::zero()
            }
        }),
        j: Matrix::from_fn(arcs, arcs, |a, a2| {
            if d.is_inverse(a, a2) {
                scheme.upsilon(a2).clone()
            } else {
                K::zero()
            }
        }),
        k: Matrix::from_fn(arcs, n, |a, w| indicator(d.head(a) == w)),
        l: Matrix::from_fn(n, arcs, |w, a| {
            if d.tail(a) == w {
                scheme.tau(a).clone()
            } else {
                K::zero()
            }
        }),
    })
}

/// Per-pair blocks of [`ProofMatrices`] for one pair of `Phi`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairBlocks<K> {
    pub pair: (Vertex, Vertex),
    /// `A_uv` then `A_vu`, each ascending; just `A_uu` for a loop pair.
    pub arcs: Vec<ArcId>,
    pub j: Matrix<K>,
    pub k: Matrix<K>,
    pub l: Matrix<K>,
    /// `L K`
    pub a: Matrix<K>,
    /// `L J K`
    pub d: Matrix<K>,
}

pub fn pair_blocks<K: Scalar>(
    d: &Digraph,
    scheme: &WeightScheme<K>,
    pair: (Vertex, Vertex),
) -> Result<PairBlocks<K>> {
    let (u, v) = pair;
    let (mut arcs, vu) = d.arcs_between(u, v)?;
    if u != v {
        arcs.extend(vu);
    }
    let full = proof_matrices(d, scheme)?;
    let vertices: Vec<Vertex> = (0..d.vertex_count()).collect();
    let j = full.j.select(&arcs, &arcs);
    let k = full.k.select(&arcs, &vertices);
    let l = full.l.select(&vertices, &arcs);
    let a = l.mul(&k)?;
    let dd = l.mul(&j)?.mul(&k)?;
    Ok(PairBlocks {
        pair,
        arcs,
        j,
        k,
        l,
        a,
        d: dd,
    })
}
