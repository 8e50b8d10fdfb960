//! Closed paths, cycle classes and the series built from them.
//!
//! A periodic point of the shift over arcs is represented by its principal
//! `m`-section, a closed path of length `m`; infinite sequences are never
//! built. The exponential and Euler expressions are computed from explicit
//! enumeration, truncated at a fixed order.

use std::collections::BTreeMap;

use crate::algebra::{Scalar, TruncatedSeries};
use crate::digraph::{ArcId, Digraph};
use crate::error::{Error, Result};
use crate::weights::{theta_eval, WeightScheme};

/// Default cap on `|A|^m`, the number of candidate arc sequences.
pub const DEFAULT_MAX_CANDIDATES: u64 = 10_000_000;

/// Default truncation order for series.
pub const DEFAULT_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathOptions {
    /// Restrict to reduced closed paths (no backtracks, wrap-around included).
    pub reduced: bool,
    pub max_candidates: u64,
}

impl Default for PathOptions {
    fn default() -> Self {
        PathOptions {
            reduced: false,
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

impl PathOptions {
    pub fn reduced() -> Self {
        PathOptions {
            reduced: true,
            ..Self::default()
        }
    }
}

/// Arc sequence `(a_1, ..., a_m)` with `h(a_i) = t(a_{i+1})` cyclically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedPath {
    arcs: Vec<ArcId>,
}

impl ClosedPath {
    pub fn new(d: &Digraph, arcs: Vec<ArcId>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::Dimension("closed path must be nonempty".into()));
        }
        if let Some(&bad) = arcs.iter().find(|&&a| a >= d.arc_count()) {
            return Err(Error::InvalidArc(bad));
        }
        let m = arcs.len();
        if (0..m).any(|i| d.head(arcs[i]) != d.tail(arcs[(i + 1) % m])) {
            return Err(Error::Dimension(format!("{arcs:?} is not closed")));
        }
        Ok(ClosedPath { arcs })
    }

    pub fn arcs(&self) -> &[ArcId] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Cyclic shift starting at position `k`.
    pub fn rotate(&self, k: usize) -> Self {
        let m = self.arcs.len();
        ClosedPath {
            arcs: (0..m).map(|i| self.arcs[(i + k) % m]).collect(),
        }
    }

    /// Lexicographically least rotation.
    pub fn canonical_rotation(&self) -> Self {
        (0..self.len())
            .map(|k| self.rotate(k))
            .min()
            .expect("nonempty path")
    }

    /// Least `p` dividing the length such that the sequence is `p`-periodic.
    pub fn prime_period(&self) -> usize {
        let m = self.arcs.len();
        (1..=m)
            .filter(|p| m % p == 0)
            .find(|&p| (0..m).all(|i| self.arcs[i] == self.arcs[(i + p) % m]))
            .expect("m itself is a period")
    }

    pub fn is_prime(&self) -> bool {
        self.prime_period() == self.len()
    }

    /// No consecutive pair (including the wrap-around pair) is a backtrack.
    pub fn is_reduced(&self, d: &Digraph) -> bool {
        cbc(d, self) == 0
    }
}

/// Rotation class of closed paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleClass {
    /// Least rotation.
    pub representative: ClosedPath,
    pub length: usize,
    pub prime_period: usize,
    pub is_prime: bool,
    pub is_reduced: bool,
    /// Number of distinct rotations, which equals the prime period.
    pub members: usize,
}

fn candidate_guard(d: &Digraph, m: usize, bound: u64) -> Result<()> {
    let arcs = d.arc_count() as u128;
    let exceeded = u32::try_from(m)
        .ok()
        .and_then(|e| arcs.checked_pow(e))
        .is_none_or(|c| c > bound as u128);
    if exceeded {
        return Err(Error::ResourceLimit {
            arcs: d.arc_count(),
            length: m,
            bound,
        });
    }
    Ok(())
}

/// All closed paths of length `m`, in lexicographic arc-id order.
pub fn enumerate_closed_paths(
    d: &Digraph,
    m: usize,
    opts: &PathOptions,
) -> Result<Vec<ClosedPath>> {
    if m == 0 {
        return Err(Error::Dimension("closed path length must be at least 1".into()));
    }
    candidate_guard(d, m, opts.max_candidates)?;
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(m);
    for first in 0..d.arc_count() {
        stack.push(first);
        extend(d, m, opts.reduced, &mut stack, &mut out);
        stack.pop();
    }
    Ok(out)
}

fn extend(d: &Digraph, m: usize, reduced: bool, stack: &mut Vec<ArcId>, out: &mut Vec<ClosedPath>) {
    let last = *stack.last().expect("nonempty");
    if stack.len() == m {
        let first = stack[0];
        if d.head(last) == d.tail(first) && !(reduced && d.is_inverse(last, first)) {
            out.push(ClosedPath {
                arcs: stack.clone(),
            });
        }
        return;
    }
    for &next in d.out_arcs(d.head(last)) {
        if reduced && d.is_inverse(last, next) {
            continue;
        }
        stack.push(next);
        extend(d, m, reduced, stack, out);
        stack.pop();
    }
}

/// Groups equal-length closed paths into rotation classes, sorted by
/// representative.
pub fn cycle_classes(d: &Digraph, paths: &[ClosedPath]) -> Result<Vec<CycleClass>> {
    let Some(first) = paths.first() else {
        return Ok(Vec::new());
    };
    let m = first.len();
    let mut classes: BTreeMap<ClosedPath, usize> = BTreeMap::new();
    for p in paths {
        if p.len() != m {
            return Err(Error::Dimension(format!(
                "mixed path lengths {m} and {}",
                p.len()
            )));
        }
        *classes.entry(p.canonical_rotation()).or_default() += 1;
    }
    Ok(classes
        .into_keys()
        .map(|rep| {
            let period = rep.prime_period();
            CycleClass {
                length: m,
                prime_period: period,
                is_prime: period == m,
                is_reduced: rep.is_reduced(d),
                members: period,
                representative: rep,
            }
        })
        .collect())
}

/// Cyclic bump count: positions `i` with `a_{i+1}` an inverse of `a_i`,
/// indices taken cyclically.
pub fn cbc(d: &Digraph, c: &ClosedPath) -> usize {
    let m = c.arcs.len();
    (0..m)
        .filter(|&i| d.is_inverse(c.arcs[i], c.arcs[(i + 1) % m]))
        .count()
}

/// Circular product `prod_i theta(a_i, a_{i+1})`, indices cyclic.
pub fn circ_theta<K: Scalar>(d: &Digraph, c: &ClosedPath, scheme: &WeightScheme<K>) -> K {
    let m = c.arcs.len();
    let mut acc = K::one();
    for i in 0..m {
        acc = acc.mul(&theta_eval(d, scheme, c.arcs[i], c.arcs[(i + 1) % m]));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `N_m`: sum of circular weights over closed paths of length `m`.
pub fn n_m<K: Scalar>(
    d: &Digraph,
    scheme: &WeightScheme<K>,
    m: usize,
    opts: &PathOptions,
) -> Result<K> {
    if m == 0 {
        return Err(Error::Dimension("closed path length must be at least 1".into()));
    }
    Ok(n_m_up_to(d, scheme, m, opts)?.pop().expect("m >= 1"))
}

/// `[N_1, ..., N_T]`. Each rotation class is visited once through its least
/// rotation (a necklace over arc ids) and counted with its number of
/// distinct rotations, the prime period.
pub fn n_m_up_to<K: Scalar>(
    d: &Digraph,
    scheme: &WeightScheme<K>,
    order: usize,
    opts: &PathOptions,
) -> Result<Vec<K>> {
    // by_period[len - 1][p - 1] sums circ over necklaces of that length and period
    let mut by_period = vec![vec![K::zero(); order]; order];
    for_each_necklace(d, scheme, order, opts, |len, period, w| {
        let slot = &mut by_period[len - 1][period - 1];
        *slot = slot.add(w);
    })?;
    Ok(by_period
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .fold(K::zero(), |acc, (p, v)| acc.add(&K::from_int(p as i64 + 1).mul(v)))
        })
        .collect())
}

/// Calls `visit(length, prime period, circ)` for every closed path of length
/// at most `order` that is the least rotation in its class and has nonzero
/// circular weight.
fn for_each_necklace<K: Scalar>(
    d: &Digraph,
    scheme: &WeightScheme<K>,
    order: usize,
    opts: &PathOptions,
    mut visit: impl FnMut(usize, usize, &K),
) -> Result<()> {
    scheme.check_digraph(d)?;
    candidate_guard(d, order, opts.max_candidates)?;
    if order == 0 {
        return Ok(());
    }
    let n = d.arc_count();
    let theta = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    if opts.reduced && d.is_inverse(a, b) {
                        return None;
                    }
                    let w = theta_eval(d, scheme, a, b);
                    (!w.is_zero()).then_some(w)
                })
                .collect()
        })
        .collect();
    let walk = Walk { d, theta, order };
    let mut prefix = Vec::with_capacity(order);
    for first in 0..d.arc_count() {
        prefix.push(first);
        walk.prenecklaces(&mut prefix, 1, &K::one(), &mut visit);
        prefix.pop();
    }
    Ok(())
}

struct Walk<'a, K> {
    d: &'a Digraph,
    /// `theta[a][b]`, `None` when zero or a backtrack excluded by the reduced mode
    theta: Vec<Vec<Option<K>>>,
    order: usize,
}

impl<K: Scalar> Walk<'_, K> {
    /// Fredricksen-Kessler-Maiorana recursion restricted to arc sequences
    /// that are paths. `prefix` is a prenecklace with period `period` and
    /// `weight` the product of `theta` along it; prefixes of weight zero are
    /// not extended.
    fn prenecklaces(
        &self,
        prefix: &mut Vec<ArcId>,
        period: usize,
        weight: &K,
        visit: &mut impl FnMut(usize, usize, &K),
    ) {
        let len = prefix.len();
        let last = prefix[len - 1];
        if len % period == 0 {
            if let Some(close) = &self.theta[last][prefix[0]] {
                let w = weight.mul(close);
                if !w.is_zero() {
                    visit(len, period, &w);
                }
            }
        }
        if len == self.order {
            return;
        }
        let floor = prefix[len - period];
        for &next in self.d.out_arcs(self.d.head(last)) {
            if next < floor {
                continue;
            }
            let Some(w) = &self.theta[last][next] else {
                continue;
            };
            let next_period = if next == floor { period } else { len + 1 };
            prefix.push(next);
            self.prenecklaces(prefix, next_period, &weight.mul(w), visit);
            prefix.pop();
        }
    }
}

/// `exp(sum_{m<=T} N_m t^m / m)` truncated at `t^T`.
pub fn exp_expression_truncated<K: Scalar>(
    d: &Digraph,
    scheme: &WeightScheme<K>,
    order: usize,
    opts: &PathOptions,
) -> Result<TruncatedSeries<K>> {
    let mut log = vec![K::zero(); order + 1];
    for (m, n) in n_m_up_to(d, scheme, order, opts)?.into_iter().enumerate() {
        log[m + 1] = n.div(&K::from_int(m as i64 + 1)).expect("nonzero integer");
    }
    TruncatedSeries::new(log, order).exp()
}

/// Product over prime cycle classes of `(1 - circ(c) t^{|c|})^{-1}`,
/// truncated at `t^T`. Each class is visited once through its least
/// rotation; classes longer than `T` cannot contribute.
pub fn euler_expression_truncated<K: Scalar>(
    d: &Digraph,
    scheme: &WeightScheme<K>,
    order: usize,
    opts: &PathOptions,
) -> Result<TruncatedSeries<K>> {
    let mut acc = vec![K::zero(); order + 1];
    acc[0] = K::one();
    for_each_necklace(d, scheme, order, opts, |len, period, w| {
        if period == len {
            // in-place division by 1 - w t^len
            for n in len..=order {
                let carry = w.mul(&acc[n - len]);
                acc[n] = acc[n].add(&carry);
            }
        }
    })?;
    Ok(TruncatedSeries::new(acc, order))
}
