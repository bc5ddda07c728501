//! Lexicographic graph products, under which Ramsey parameters multiply:
//! if G1 is k1-Ramsey and G2 is k2-Ramsey then G1 x G2 is (k1*k2)-Ramsey.
//!
//! The product vertex (u1, u2) is encoded as u1*n2 + u2. An edge joins
//! (u1, u2) and (v1, v2) iff {u1, v1} is an edge of G1, or u1 = v1 and
//! {u2, v2} is an edge of G2. Multi-factor products fold left, so the
//! encoding is left-nested and byte-reproducible.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Largest product graph that will be materialized.
pub const MATERIALIZE_VERTEX_GUARD: usize = 1 << 13;

/// Adjacency of the product graph straight from the factors, with no
/// materialization. `a` and `b` are encoded product vertices.
pub fn product_has_edge(g1: &Graph, g2: &Graph, a: usize, b: usize) -> bool {
    let n2 = g2.n();
    let (u1, u2) = (a / n2, a % n2);
    let (v1, v2) = (b / n2, b % n2);
    if u1 != v1 {
        g1.has_edge(u1, v1)
    } else {
        g2.has_edge(u2, v2)
    }
}

/// Materialized product of two graphs.
pub fn product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n = g1
        .n()
        .checked_mul(g2.n())
        .filter(|&n| n <= MATERIALIZE_VERTEX_GUARD)
        .ok_or_else(|| {
            Error::Guard(format!(
                "product on {}*{} vertices exceeds the {MATERIALIZE_VERTEX_GUARD}-vertex materialization cap; query product_has_edge instead",
                g1.n(),
                g2.n()
            ))
        })?;
    let mut out = Graph::empty(n);
    // Each factor-1 edge contributes a complete bipartite block; walking
    // edges beats testing all C(n,2) pairs for sparse factors.
    let n2 = g2.n();
    for (u1, v1) in g1.edges() {
        for u2 in 0..n2 {
            for v2 in 0..n2 {
                out.set_edge(u1 * n2 + u2, v1 * n2 + v2, true);
            }
        }
    }
    for u1 in 0..g1.n() {
        for (u2, v2) in g2.edges() {
            out.set_edge(u1 * n2 + u2, u1 * n2 + v2, true);
        }
    }
    Ok(out)
}

/// Left fold of [`product`] over a nonempty sequence of factors.
pub fn multi_product(graphs: &[Graph]) -> Result<Graph> {
    let (first, rest) = graphs
        .split_first()
        .ok_or_else(|| Error::Domain("product of an empty list of graphs".into()))?;
    let mut acc = first.clone();
    for g in rest {
        acc = product(&acc, g)?;
    }
    Ok(acc)
}

/// Parameter calculus for the product of m n-vertex factors of which an
/// alpha fraction may fail to be k-Ramsey: the product is t-Ramsey for
/// t = n^{alpha*m} * k^{(1-alpha)*m}, on N = n^m vertices.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductParams {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub alpha: f64,
    /// log2 of the product vertex count N = n^m.
    pub log2_vertices: f64,
    /// log2 of the product Ramsey parameter t.
    pub log2_ramsey: f64,
    /// Whether alpha <= 1/log2(n); when it holds, t <= (2k)^m.
    pub alpha_within_small_regime: bool,
    /// log2 of the (2k)^m cap on t.
    pub log2_ramsey_cap: f64,
}

pub fn product_params(n: usize, k: usize, m: usize, alpha: f64) -> Result<ProductParams> {
    if n < 2 || k < 2 || m < 1 {
        return Err(Error::Domain(format!(
            "need n >= 2, k >= 2, m >= 1; got n={n}, k={k}, m={m}"
        )));
    }
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    let (nf, kf, mf) = (n as f64, k as f64, m as f64);
    let log2_vertices = mf * nf.log2();
    let log2_ramsey = alpha * mf * nf.log2() + (1.0 - alpha) * mf * kf.log2();
    let log2_ramsey_cap = mf * (2.0 * kf).log2();
    let alpha_within_small_regime = alpha <= 1.0 / nf.log2();
    if alpha_within_small_regime {
        debug_assert!(log2_ramsey <= log2_ramsey_cap + 1e-9);
    }
    Ok(ProductParams {
        n,
        k,
        m,
        alpha,
        log2_vertices,
        log2_ramsey,
        alpha_within_small_regime,
        log2_ramsey_cap,
    })
}
