//! Arc weights `tau`, `upsilon`, the two-arc weight
//! `theta(a, a') = tau(a') [h(a) = t(a')] - upsilon(a') [a' in S(a)]`,
//! and the arc-indexed edge matrix.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Matrix, Ring, Scalar};
use crate::digraph::{ArcId, Digraph};
use crate::error::{Error, Result};

/// Which classical zeta a weight scheme specializes to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Preset {
    /// Arbitrary `tau`, `upsilon`.
    General,
    /// `tau = upsilon = 1`.
    Ihara,
    /// `upsilon = 0`.
    BowenLanford,
    /// `tau = upsilon`.
    MizunoSato,
    /// `upsilon = 1`.
    Sato,
    /// `tau = 1`, `upsilon = 1 - q`.
    Bartholdi,
}

impl Preset {
    pub const ALL: [Preset; 6] = [
        Preset::General,
        Preset::Ihara,
        Preset::BowenLanford,
        Preset::MizunoSato,
        Preset::Sato,
        Preset::Bartholdi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::General => "GENERAL",
            Preset::Ihara => "IHARA",
            Preset::BowenLanford => "BOWEN_LANFORD",
            Preset::MizunoSato => "MIZUNO_SATO",
            Preset::Sato => "SATO",
            Preset::Bartholdi => "BARTHOLDI",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace(['-', ' '], "_");
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == norm)
            .ok_or_else(|| Error::Scheme(format!("unknown preset {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightScheme<K> {
    tau: Vec<K>,
    upsilon: Vec<K>,
    preset: Preset,
}

impl<K: Scalar> WeightScheme<K> {
    /// Validates the preset's constraints on `tau` and `upsilon`.
    pub fn new(preset: Preset, tau: Vec<K>, upsilon: Vec<K>) -> Result<Self> {
        if tau.len() != upsilon.len() {
            return Err(Error::Scheme(format!(
                "{} tau values but {} upsilon values",
                tau.len(),
                upsilon.len()
            )));
        }
        let all = |v: &[K], x: &K| v.iter().all(|y| y == x);
        let ok = match preset {
            Preset::General => true,
            Preset::Ihara => all(&tau, &K::one()) && all(&upsilon, &K::one()),
            Preset::BowenLanford => all(&upsilon, &K::zero()),
            Preset::MizunoSato => tau == upsilon,
            Preset::Sato => all(&upsilon, &K::one()),
            Preset::Bartholdi => {
                all(&tau, &K::one()) && upsilon.first().is_none_or(|u| all(&upsilon, u))
            }
        };
        if !ok {
            return Err(Error::Scheme(format!(
                "weights violate the {preset} constraints"
            )));
        }
        Ok(WeightScheme {
            tau,
            upsilon,
            preset,
        })
    }

    pub fn general(tau: Vec<K>, upsilon: Vec<K>) -> Result<Self> {
        Self::new(Preset::General, tau, upsilon)
    }

    pub fn ihara(arc_count: usize) -> Self {
        WeightScheme {
            tau: vec![K::one(); arc_count],
            upsilon: vec![K::one(); arc_count],
            preset: Preset::Ihara,
        }
    }

    pub fn bowen_lanford(tau: Vec<K>) -> Self {
        let upsilon = vec![K::zero(); tau.len()];
        WeightScheme {
            tau,
            upsilon,
            preset: Preset::BowenLanford,
        }
    }

    pub fn mizuno_sato(tau: Vec<K>) -> Self {
        WeightScheme {
            upsilon: tau.clone(),
            tau,
            preset: Preset::MizunoSato,
        }
    }

    pub fn sato(tau: Vec<K>) -> Self {
        let upsilon = vec![K::one(); tau.len()];
        WeightScheme {
            tau,
            upsilon,
            preset: Preset::Sato,
        }
    }

    /// `tau = 1`, `upsilon = 1 - q`; `q` is either the indeterminate of
    /// `Q(q)` or a rational evaluation point.
    pub fn bartholdi(arc_count: usize, q: &K) -> Self {
        WeightScheme {
            tau: vec![K::one(); arc_count],
            upsilon: vec![K::one().sub(q); arc_count],
            preset: Preset::Bartholdi,
        }
    }

    /// Bartholdi-type deformation of arbitrary weights: `upsilon` is replaced
    /// by `(1 - q) upsilon`.
    pub fn generalized_bartholdi(tau: Vec<K>, upsilon: Vec<K>, q: &K) -> Result<Self> {
        let factor = K::one().sub(q);
        Self::general(tau, upsilon.iter().map(|u| u.mul(&factor)).collect())
    }

    pub fn preset(&self) -> Preset {
        self.preset
    }

    pub fn arc_count(&self) -> usize {
        self.tau.len()
    }

    pub fn tau(&self, a: ArcId) -> &K {
        &self.tau[a]
    }

    pub fn upsilon(&self, a: ArcId) -> &K {
        &self.upsilon[a]
    }

    pub fn taus(&self) -> &[K] {
        &self.tau
    }

    pub fn upsilons(&self) -> &[K] {
        &self.upsilon
    }

    /// Applies `f` to every weight, keeping the preset tag.
    pub fn map<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Result<WeightScheme<L>> {
        WeightScheme::new(
            self.preset,
            self.tau.iter().map(&f).collect(),
            self.upsilon.iter().map(&f).collect(),
        )
    }

    pub fn check_digraph(&self, d: &Digraph) -> Result<()> {
        if self.arc_count() != d.arc_count() {
            return Err(Error::Scheme(format!(
                "scheme has {} arcs, digraph has {}",
                self.arc_count(),
                d.arc_count()
            )));
        }
        Ok(())
    }
}

/// `theta(a, a2)` with Kronecker semantics.
pub fn theta_eval<K: Scalar>(d: &Digraph, scheme: &WeightScheme<K>, a: ArcId, a2: ArcId) -> K {
    let mut value = K::zero();
    if d.head(a) == d.tail(a2) {
        value = scheme.tau(a2).clone();
    }
    if d.is_inverse(a, a2) {
        value = value.sub(scheme.upsilon(a2));
    }
    value
}

/// `M = (theta(a, a'))` indexed by arcs in ascending id order.
pub fn edge_matrix<K: Scalar>(d: &Digraph, scheme: &WeightScheme<K>) -> Result<Matrix<K>> {
    scheme.check_digraph(d)?;
    let n = d.arc_count();
    Ok(Matrix::from_fn(n, n, |a, a2| theta_eval(d, scheme, a, a2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjacencyCondition {
    /// Nonzero only when `h(a) = t(a')` and `a'` is not an inverse of `a`.
    ReducedAdjacency,
    /// Nonzero only when `h(a) = t(a')`.
    Adjacency,
    Neither,
}

/// Classifies an arc-indexed matrix by scanning every arc pair.
pub fn check_adjacency_condition<R: Ring>(d: &Digraph, m: &Matrix<R>) -> Result<AdjacencyCondition> {
    let n = d.arc_count();
    if m.rows() != n || m.cols() != n {
        return Err(Error::Dimension(format!(
            "{}x{} matrix for {n} arcs",
            m.rows(),
            m.cols()
        )));
    }
    let mut reduced = true;
    for a in 0..n {
        for a2 in 0..n {
            if m.get(a, a2).is_zero() {
                continue;
            }
            if d.head(a) != d.tail(a2) {
                return Ok(AdjacencyCondition::Neither);
            }
            if d.is_inverse(a, a2) {
                reduced = false;
            }
        }
    }
    Ok(if reduced {
        AdjacencyCondition::ReducedAdjacency
    } else {
        AdjacencyCondition::Adjacency
    })
}
