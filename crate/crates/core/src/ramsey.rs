//! Deciding whether a graph is k-Ramsey: no clique of size k and no
//! independent set of size k.
//!
//! Two routes are provided on purpose. [`is_k_ramsey`] runs a pruned exact
//! branch-and-bound over adjacency bitsets; [`brute_force_is_k_ramsey`]
//! enumerates every k-subset. They must agree bit for bit, and the test
//! suite holds them to that.

use crate::error::{Error, Result};
use crate::graph::{binom2, Graph};
use serde::{Deserialize, Serialize};

/// What a negative verdict points at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessKind {
    #[serde(rename = "none")]
    None,
    #[serde(rename = "clique")]
    Clique,
    #[serde(rename = "independent-set")]
    IndependentSet,
}

/// Outcome of a k-Ramsey check, with a size-k witness when the property
/// fails. `witness` is empty exactly when `is_ramsey` is true.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyVerdict {
    pub is_ramsey: bool,
    pub witness_kind: WitnessKind,
    pub witness: Vec<usize>,
}

impl RamseyVerdict {
    pub fn ramsey() -> Self {
        RamseyVerdict {
            is_ramsey: true,
            witness_kind: WitnessKind::None,
            witness: Vec::new(),
        }
    }

    pub fn clique(witness: Vec<usize>) -> Self {
        RamseyVerdict {
            is_ramsey: false,
            witness_kind: WitnessKind::Clique,
            witness,
        }
    }

    pub fn independent_set(witness: Vec<usize>) -> Self {
        RamseyVerdict {
            is_ramsey: false,
            witness_kind: WitnessKind::IndependentSet,
            witness,
        }
    }
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::Domain(format!("need 2 <= k <= n, got k={k}, n={n}")));
    }
    Ok(())
}

/// Flipped-edge copy of the graph.
pub fn complement(g: &Graph) -> Graph {
    let mut bits = g.edge_bits().clone();
    bits.flip_all();
    Graph::from_bits(g.n(), bits).expect("same length")
}

// Word-level candidate set for the clique search.
#[derive(Clone)]
struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64).max(1)];
        let rem = n % 64;
        if rem != 0 {
            let last = words.len() - 1;
            words[last] = (1u64 << rem) - 1;
        }
        VertexSet { words }
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn lowest(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    fn intersect(&self, row: &[u64]) -> VertexSet {
        VertexSet {
            words: self.words.iter().zip(row).map(|(a, b)| a & b).collect(),
        }
    }
}

/// Finds a clique with exactly k vertices, or proves none of size >= k
/// exists. The search branches on candidate vertices in ascending order,
/// so the clique it reports (if any) is the lexicographically smallest,
/// making the output deterministic for a fixed input.
pub fn find_clique_geq(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    check_k(k, g.n())?;
    let rows = g.adjacency_rows();
    let mut current = Vec::with_capacity(k);
    let mut found = None;
    extend_clique(&rows, k, &mut current, VertexSet::full(g.n()), &mut found);
    Ok(found)
}

fn extend_clique(
    rows: &[Vec<u64>],
    k: usize,
    current: &mut Vec<usize>,
    mut candidates: VertexSet,
    found: &mut Option<Vec<usize>>,
) -> bool {
    loop {
        // Candidates only shrink while we iterate this level.
        if current.len() + candidates.count() < k {
            return false;
        }
        let Some(v) = candidates.lowest() else {
            return false;
        };
        candidates.remove(v);
        current.push(v);
        if current.len() == k {
            *found = Some(current.clone());
            return true;
        }
        if extend_clique(rows, k, current, candidates.intersect(&rows[v]), found) {
            return true;
        }
        current.pop();
    }
}

/// Full k-Ramsey verdict: the clique side is checked first, then the
/// independent-set side as a clique in the complement.
pub fn is_k_ramsey(g: &Graph, k: usize) -> Result<RamseyVerdict> {
    check_k(k, g.n())?;
    if let Some(w) = find_clique_geq(g, k)? {
        return Ok(RamseyVerdict::clique(w));
    }
    if let Some(w) = find_clique_geq(&complement(g), k)? {
        return Ok(RamseyVerdict::independent_set(w));
    }
    Ok(RamseyVerdict::ramsey())
}

/// Guard for the brute-force oracle: at most this many subsets.
pub const BRUTE_FORCE_SUBSET_GUARD: u64 = 10_000_000;

/// Exhaustive oracle with the same semantics as [`is_k_ramsey`]: every
/// k-subset is scanned in lexicographic order, cliques first. Refuses to
/// run when C(n,k) exceeds [`BRUTE_FORCE_SUBSET_GUARD`].
pub fn brute_force_is_k_ramsey(g: &Graph, k: usize) -> Result<RamseyVerdict> {
    check_k(k, g.n())?;
    let n = g.n();
    let subsets = binom_saturating(n as u64, k as u64);
    if subsets > BRUTE_FORCE_SUBSET_GUARD {
        return Err(Error::Guard(format!(
            "C({n},{k}) = {subsets} exceeds the brute-force cap of {BRUTE_FORCE_SUBSET_GUARD}"
        )));
    }
    if let Some(w) = scan_subsets(g, k, true) {
        return Ok(RamseyVerdict::clique(w));
    }
    if let Some(w) = scan_subsets(g, k, false) {
        return Ok(RamseyVerdict::independent_set(w));
    }
    Ok(RamseyVerdict::ramsey())
}

fn scan_subsets(g: &Graph, k: usize, want_edges: bool) -> Option<Vec<usize>> {
    let n = g.n();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if subset.iter().enumerate().all(|(a, &u)| {
            subset[a + 1..]
                .iter()
                .all(|&v| g.has_edge(u, v) == want_edges)
        }) {
            return Some(subset);
        }
        // advance to the next k-combination in lexicographic order
        let mut i = k;
        while i > 0 && subset[i - 1] == n - k + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let i = i - 1;
        subset[i] += 1;
        for j in (i + 1)..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn binom_saturating(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * u128::from(n - j) / u128::from(j + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// log2 of the union bound (en/k)^k * 2^{1 - C(k,2)} on the probability
/// that a uniform (or C(k,2)-wise independent) graph has a k-clique or
/// k-independent set: k*log2(e*n/k) - C(k,2) + 1.
pub fn union_bound_log2(n: usize, k: usize) -> Result<f64> {
    check_k(k, n)?;
    let (nf, kf) = (n as f64, k as f64);
    Ok(kf * (std::f64::consts::E * nf / kf).log2() - binom2(k) as f64 + 1.0)
}
