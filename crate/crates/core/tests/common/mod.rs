#![allow(dead_code)]

use proptest::prelude::*;

use graph_zeta::algebra::{rat, Matrix, Poly, Rational};
use graph_zeta::digraph::{Digraph, Graph};
use graph_zeta::weights::{Preset, WeightScheme};

pub fn rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn rationals(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

pub fn poly(max_len: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Poly::new)
}

pub fn matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    rationals(n * n).prop_map(move |v| Matrix::new(n, n, v).unwrap())
}

pub fn digraph(max_vertices: usize, max_arcs: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_arcs).prop_map(move |arcs| Digraph::new(n, arcs).unwrap())
    })
}

/// Simple graphs given by a random subset of the pairs `u < v`.
pub fn simple_graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

pub const PRESETS: [Preset; 6] = [
    Preset::Ihara,
    Preset::BowenLanford,
    Preset::MizunoSato,
    Preset::Sato,
    Preset::General,
    Preset::Bartholdi,
];

pub fn scheme(preset: Preset, tau: Vec<Rational>, upsilon: Vec<Rational>) -> WeightScheme<Rational> {
    let n = tau.len();
    match preset {
        Preset::Ihara => WeightScheme::ihara(n),
        Preset::BowenLanford => WeightScheme::bowen_lanford(tau),
        Preset::MizunoSato => WeightScheme::mizuno_sato(tau),
        Preset::Sato => WeightScheme::sato(tau),
        Preset::General => WeightScheme::general(tau, upsilon).unwrap(),
        Preset::Bartholdi => WeightScheme::bartholdi(n, &rat(2, 3)),
    }
}

/// A digraph with a scheme of every preset, weights drawn per arc.
pub fn weighted_digraph(
    max_vertices: usize,
    max_arcs: usize,
) -> impl Strategy<Value = (Digraph, Vec<Rational>, Vec<Rational>)> {
    digraph(max_vertices, max_arcs).prop_flat_map(|d| {
        let m = d.arc_count();
        (Just(d), rationals(m), rationals(m))
    })
}

/// Leibniz expansion over all permutations.
pub fn leibniz_det(m: &Matrix<Rational>) -> Rational {
    use graph_zeta::algebra::Ring;
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let term = (0..n).fold(Rational::one(), |acc, i| Ring::mul(&acc, m.get(i, p[i])));
        total = if inversions % 2 == 0 { Ring::add(&total, &term) } else { Ring::sub(&total, &term) };
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}
