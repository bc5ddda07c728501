//! The polynomial sample space over graphs.
//!
//! A degree-(t-1) polynomial p over GF(2^q) is mapped to the n-vertex graph
//! whose edge bit at position i is the constant-term bit of p evaluated at
//! the field element with code i. Because evaluations of such a polynomial
//! at any t distinct points are jointly uniform, the resulting edge-bit
//! distribution is exactly t-wise independent, which is all the
//! probabilistic existence argument for k-Ramsey graphs consumes.
//!
//! The same index doubles as a concise representation: a single edge bit is
//! answerable in time polynomial in t*q via [`oracle_query`], no
//! materialization needed.

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::field::{ff_mul, poly_eval, FieldContext, FieldElement, MAX_Q};
use crate::graph::{binom2, edge_index, Graph};

/// Parameters fixing the sample space for a given (n, k).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplerParams {
    pub n: usize,
    pub k: usize,
    /// Field bit width: the minimal q with 2^q >= C(n,2).
    pub q: u32,
    /// Independence order = number of polynomial coefficients.
    pub t: usize,
    pub ctx: FieldContext,
}

impl SamplerParams {
    /// Total index length in bits.
    pub fn index_bits(&self) -> usize {
        self.t * self.q as usize
    }

    /// Hex digits used per coefficient in the index serialization.
    pub fn digits_per_coeff(&self) -> usize {
        (self.q as usize).div_ceil(4)
    }
}

/// Derives sampler parameters: q = ceil(log2 C(n,2)) (clamped to >= 1 for
/// the degenerate single-edge case), t = C(k,2) unless overridden.
///
/// t = C(k,2) is the number of edge bits a k-vertex subset pins down, which
/// is exactly the independence order the union-bound argument needs.
pub fn params_for(n: usize, k: usize, t_override: Option<usize>) -> Result<SamplerParams> {
    if n < 2 {
        return Err(Error::Domain(format!("need n >= 2 vertices, got {n}")));
    }
    if k < 2 || k > n {
        return Err(Error::Domain(format!("need 2 <= k <= n, got k={k}, n={n}")));
    }
    let pairs = binom2(n) as u64;
    let q = ceil_log2(pairs).max(1);
    if q > MAX_Q {
        return Err(Error::Domain(format!(
            "n={n} needs a field wider than {MAX_Q} bits"
        )));
    }
    let t = match t_override {
        Some(t) if t >= 1 => t,
        Some(t) => {
            return Err(Error::Domain(format!(
                "independence order must be >= 1, got {t}"
            )))
        }
        None => binom2(k),
    };
    Ok(SamplerParams {
        n,
        k,
        q,
        t,
        ctx: FieldContext::new(q)?,
    })
}

/// Smallest q with 2^q >= x (x >= 1).
fn ceil_log2(x: u64) -> u32 {
    debug_assert!(x >= 1);
    64 - (x - 1).leading_zeros()
}

/// The string indexing one graph of the sample space: t field elements,
/// coefficient of X^i at position i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIndex {
    pub coeffs: Vec<FieldElement>,
}

impl PolyIndex {
    /// Validates coefficient count and range against `params`.
    pub fn new(coeffs: Vec<FieldElement>, params: &SamplerParams) -> Result<Self> {
        if coeffs.len() != params.t {
            return Err(Error::Domain(format!(
                "index has {} coefficients, expected t={}",
                coeffs.len(),
                params.t
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| u64::from(c) >= params.ctx.order()) {
            return Err(Error::Domain(format!(
                "coefficient {c} exceeds field order 2^{}",
                params.q
            )));
        }
        Ok(PolyIndex { coeffs })
    }

    pub fn zero(params: &SamplerParams) -> Self {
        PolyIndex {
            coeffs: vec![0; params.t],
        }
    }

    /// Serializes as lowercase hex: coefficients in order 0..t-1, each as
    /// ceil(q/4) digits, big-endian within a coefficient.
    pub fn to_hex(&self, params: &SamplerParams) -> String {
        let width = params.digits_per_coeff();
        let mut s = String::with_capacity(self.coeffs.len() * width);
        for &c in &self.coeffs {
            s.push_str(&format!("{c:0width$x}"));
        }
        s
    }

    /// Parses the serialization produced by [`PolyIndex::to_hex`].
    pub fn from_hex(s: &str, params: &SamplerParams) -> Result<Self> {
        let width = params.digits_per_coeff();
        let expected = params.t * width;
        if s.len() != expected {
            return Err(Error::Parse(format!(
                "index hex has {} digits, expected {expected} (t={} coefficients of {width} digits)",
                s.len(),
                params.t
            )));
        }
        if let Some(bad) = s.chars().find(|c| !c.is_ascii_hexdigit()) {
            return Err(Error::Parse(format!("bad hex digit {bad:?} in index")));
        }
        let mut coeffs = Vec::with_capacity(params.t);
        for chunk_start in (0..s.len()).step_by(width) {
            let chunk = &s[chunk_start..chunk_start + width];
            let c = u32::from_str_radix(chunk, 16)
                .map_err(|_| Error::Parse(format!("bad hex coefficient {chunk:?}")))?;
            coeffs.push(c);
        }
        PolyIndex::new(coeffs, params)
    }
}

/// The field element used as evaluation point for edge position `i`:
/// the element with integer code `i`.
pub fn point_for_index(i: usize, ctx: &FieldContext) -> Result<FieldElement> {
    if i as u64 >= ctx.order() {
        return Err(Error::Domain(format!(
            "edge position {i} does not fit in GF(2^{})",
            ctx.q()
        )));
    }
    Ok(i as FieldElement)
}

/// Edge bit at position `i`: the constant-term bit of p at that position's
/// evaluation point.
pub fn bit_at(p: &PolyIndex, i: usize, params: &SamplerParams) -> Result<bool> {
    if i >= binom2(params.n) {
        return Err(Error::Domain(format!(
            "edge position {i} out of range for n={}",
            params.n
        )));
    }
    let a = point_for_index(i, &params.ctx)?;
    let value = poly_eval(&p.coeffs, a, &params.ctx)?;
    Ok(value & 1 == 1)
}

/// Materializes the whole graph indexed by `p`.
pub fn materialize(p: &PolyIndex, params: &SamplerParams) -> Result<Graph> {
    if p.coeffs.len() != params.t {
        return Err(Error::Domain(format!(
            "index has {} coefficients, expected t={}",
            p.coeffs.len(),
            params.t
        )));
    }
    let m = binom2(params.n);
    let mut bits = BitVec::zeros(m);
    for i in 0..m {
        if bit_at(p, i, params)? {
            bits.set(i, true);
        }
    }
    Graph::from_bits(params.n, bits)
}

/// Answers a single adjacency query against the graph indexed by `p`
/// without materializing it. Symmetric in (u, v).
pub fn oracle_query(p: &PolyIndex, params: &SamplerParams, u: usize, v: usize) -> Result<bool> {
    let i = edge_index(u, v, params.n)?;
    bit_at(p, i, params)
}

/// One bit of the powering small-bias generator over GF(2^m): the parity
/// of x AND y^i, powers taken modulo the smallest irreducible of degree m.
///
/// Over the full seed space the bit sequence at positions 0..l-1 has every
/// parity within (l-1)/2^m of fair.
pub fn smallbias_bit(x: u64, y: u64, i: usize, m: u32) -> Result<bool> {
    let ctx = FieldContext::new(m)?;
    if x >= ctx.order() || y >= ctx.order() {
        return Err(Error::Domain(format!(
            "small-bias seed ({x}, {y}) out of range for GF(2^{m})"
        )));
    }
    let mut yp: FieldElement = 1;
    for _ in 0..i {
        yp = ff_mul(yp, y as FieldElement, &ctx);
    }
    Ok((x as FieldElement & yp).count_ones() & 1 == 1)
}

/// Bit width of the small-bias seed halves for the given parameters.
///
/// max(8, q + k) keeps the bias small enough that the almost-k-wise
/// deviation stays below 2^{-k} at desk scale.
pub fn smallbias_width(params: &SamplerParams) -> u32 {
    (params.q + params.k as u32).max(8)
}

/// Materializes the small-bias graph for seed (x, y): edge bit i is
/// [`smallbias_bit`] at position i with m = [`smallbias_width`].
pub fn smallbias_graph(x: u64, y: u64, params: &SamplerParams) -> Result<Graph> {
    let m = smallbias_width(params);
    let ctx = FieldContext::new(m)?;
    if x >= ctx.order() || y >= ctx.order() {
        return Err(Error::Domain(format!(
            "small-bias seed ({x}, {y}) out of range for GF(2^{m})"
        )));
    }
    let len = binom2(params.n);
    let mut bits = BitVec::zeros(len);
    // Incremental powering: yp = y^i at step i.
    let mut yp: FieldElement = 1;
    for i in 0..len {
        if (x as FieldElement & yp).count_ones() & 1 == 1 {
            bits.set(i, true);
        }
        yp = ff_mul(yp, y as FieldElement, &ctx);
    }
    Graph::from_bits(params.n, bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expand::expand_seed;
    use crate::graph::edge_from_index;

    #[test]
    fn params_examples() {
        let p = params_for(3, 3, None).unwrap();
        assert_eq!((p.q, p.t), (2, 3));
        let p = params_for(32, 10, None).unwrap();
        assert_eq!((p.q, p.t), (9, 45));
        let p = params_for(1024, 20, None).unwrap();
        assert_eq!((p.q, p.t), (19, 190));
        // minimal sufficient field
        assert!(1u64 << p.q >= binom2(1024) as u64);
        assert!(1u64 << (p.q - 1) < binom2(1024) as u64);
    }

    #[test]
    fn params_domain_errors() {
        assert!(params_for(1, 2, None).is_err());
        assert!(params_for(5, 6, None).is_err());
        assert!(params_for(5, 1, None).is_err());
        assert!(params_for(10, 4, Some(0)).is_err());
        assert_eq!(params_for(10, 4, Some(7)).unwrap().t, 7);
        // C(n,2) past 2^32 would need q > 32
        assert!(params_for(100_000, 10, None).is_err());
        assert!(params_for(92_000, 10, None).is_ok());
    }

    #[test]
    fn index_bit_length_scales_cubically() {
        // n = 2^j, k = 2j: the index length t*q tracks j^3.
        for j in 4..=10u32 {
            let p = params_for(1 << j, 2 * j as usize, None).unwrap();
            let ratio = p.index_bits() as f64 / (j as f64).powi(3);
            assert!(
                (0.5..=8.0).contains(&ratio),
                "j={j}: t*q={} ratio {ratio}",
                p.index_bits()
            );
        }
    }

    #[test]
    fn points_are_identity_encoded() {
        let gf8 = crate::field::FieldContext::new(3).unwrap();
        assert_eq!(point_for_index(0, &gf8).unwrap(), 0);
        assert_eq!(point_for_index(5, &gf8).unwrap(), 0b101);
        assert!(point_for_index(8, &gf8).is_err());
        let gf4 = crate::field::FieldContext::new(2).unwrap();
        assert_eq!(point_for_index(3, &gf4).unwrap(), 0b11);
    }

    #[test]
    fn bit_at_linear_polynomial() {
        let params = params_for(3, 3, None).unwrap();
        let p = PolyIndex::new(vec![0, 1, 0], &params).unwrap(); // p(X) = X
        let bits: Vec<bool> = (0..3).map(|i| bit_at(&p, i, &params).unwrap()).collect();
        assert_eq!(bits, vec![false, true, false]);
    }

    #[test]
    fn constant_polynomials_give_empty_and_complete() {
        let params = params_for(5, 3, None).unwrap();
        let zero = PolyIndex::zero(&params);
        assert_eq!(materialize(&zero, &params).unwrap(), Graph::empty(5));
        let mut one = PolyIndex::zero(&params);
        one.coeffs[0] = 1;
        assert_eq!(materialize(&one, &params).unwrap(), Graph::complete(5));
    }

    #[test]
    fn linear_polynomial_graph_on_three_vertices() {
        let params = params_for(3, 3, None).unwrap();
        let p = PolyIndex::new(vec![0, 1, 0], &params).unwrap();
        let g = materialize(&p, &params).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 2));
        assert!(oracle_query(&p, &params, 0, 2).unwrap());
        assert!(oracle_query(&p, &params, 2, 0).unwrap());
        assert!(!oracle_query(&p, &params, 0, 1).unwrap());
        assert!(oracle_query(&p, &params, 1, 1).is_err());
    }

    #[test]
    fn oracle_matches_materialization() {
        for n in 4..=64usize {
            let params = params_for(n, 4, None).unwrap();
            for seed in 0..3u64 {
                let idx = index_from_stream(seed, &params);
                let g = materialize(&idx, &params).unwrap();
                for u in 0..n {
                    for v in (u + 1)..n {
                        assert_eq!(
                            oracle_query(&idx, &params, u, v).unwrap(),
                            g.has_edge(u, v),
                            "n={n} seed={seed} ({u},{v})"
                        );
                    }
                }
            }
        }
    }

    fn index_from_stream(seed: u64, params: &SamplerParams) -> PolyIndex {
        crate::list::index_from_bits(&expand_seed(seed, params.index_bits()), params).unwrap()
    }

    #[test]
    fn exact_threewise_independence_n3() {
        // q=2, t=3: all 64 polynomials, 3 edge bits, each pattern 8 times.
        let params = params_for(3, 3, None).unwrap();
        let mut counts = [0usize; 8];
        for c0 in 0..4u32 {
            for c1 in 0..4u32 {
                for c2 in 0..4u32 {
                    let p = PolyIndex::new(vec![c0, c1, c2], &params).unwrap();
                    let mut pattern = 0usize;
                    for i in 0..3 {
                        if bit_at(&p, i, &params).unwrap() {
                            pattern |= 1 << i;
                        }
                    }
                    counts[pattern] += 1;
                }
            }
        }
        assert_eq!(counts, [8; 8]);
    }

    #[test]
    fn exact_threewise_independence_n4() {
        // q=3, t=3: 512 polynomials, every 3-subset of the 6 edge positions
        // hits each of the 8 patterns exactly 64 times.
        let params = params_for(4, 3, None).unwrap();
        assert_eq!((params.q, params.t), (3, 3));
        let mut graphs = Vec::with_capacity(512);
        for c0 in 0..8u32 {
            for c1 in 0..8u32 {
                for c2 in 0..8u32 {
                    let p = PolyIndex::new(vec![c0, c1, c2], &params).unwrap();
                    let mut bits = 0usize;
                    for i in 0..6 {
                        if bit_at(&p, i, &params).unwrap() {
                            bits |= 1 << i;
                        }
                    }
                    graphs.push(bits);
                }
            }
        }
        for a in 0..6 {
            for b in (a + 1)..6 {
                for c in (b + 1)..6 {
                    let mut counts = [0usize; 8];
                    for &g in &graphs {
                        let pattern =
                            ((g >> a) & 1) | (((g >> b) & 1) << 1) | (((g >> c) & 1) << 2);
                        counts[pattern] += 1;
                    }
                    assert_eq!(counts, [64; 8], "positions ({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn hex_roundtrip() {
        let params = params_for(32, 10, None).unwrap();
        let idx = index_from_stream(99, &params);
        let hex = idx.to_hex(&params);
        assert_eq!(hex.len(), params.t * params.digits_per_coeff());
        assert!(hex
            .chars()
            .all(|c| c.is_ascii_hexdigit() && !c.is_ascii_uppercase()));
        assert_eq!(PolyIndex::from_hex(&hex, &params).unwrap(), idx);
        assert!(PolyIndex::from_hex(&hex[1..], &params).is_err());
        assert!(PolyIndex::from_hex(&"z".repeat(hex.len()), &params).is_err());
        // signs are not hex digits, whatever the integer parser thinks
        let signed = format!("+{}", &hex[1..]);
        assert!(PolyIndex::from_hex(&signed, &params).is_err());
    }

    #[test]
    fn smallbias_bit_examples() {
        // zero mask
        for i in 0..5 {
            assert!(!smallbias_bit(0, 3, i, 2).unwrap());
        }
        // i = 0: y^0 = 1, parity of x & 1 = bit 0 of x
        assert!(smallbias_bit(0b01, 0b10, 0, 2).unwrap());
        assert!(!smallbias_bit(0b10, 0b10, 0, 2).unwrap());
        // m=2: y = X, y^2 = X+1 = 0b11; parity(0b11 & 0b11) = 0
        assert!(!smallbias_bit(0b11, 0b10, 2, 2).unwrap());
        assert!(smallbias_bit(4, 1, 0, 2).is_err());
    }

    #[test]
    fn smallbias_graph_zero_mask_is_empty() {
        let params = params_for(5, 3, None).unwrap();
        assert_eq!(smallbias_width(&params), 8);
        let g = smallbias_graph(0, 77, &params).unwrap();
        assert_eq!(g, Graph::empty(5));
    }

    #[test]
    fn smallbias_graph_matches_bitwise_definition() {
        let params = params_for(6, 3, None).unwrap();
        let m = smallbias_width(&params);
        for (x, y) in [(1u64, 2u64), (173, 90), (255, 255), (7, 131)] {
            let g = smallbias_graph(x, y, &params).unwrap();
            for i in 0..binom2(6) {
                let (u, v) = edge_from_index(i, 6).unwrap();
                assert_eq!(g.has_edge(u, v), smallbias_bit(x, y, i, m).unwrap());
            }
        }
    }

    #[test]
    fn smallbias_exhaustive_bias_tiny_field() {
        // m=4, l=5: every nonempty parity over all 256 seeds stays within
        // (l-1)/2^m of fair. Small enough to enumerate completely here; the
        // acceptance suite runs the m=8 version.
        let m = 4u32;
        let l = 5usize;
        let mut max_dev = 0f64;
        for subset in 1usize..(1 << l) {
            let mut ones = 0usize;
            for x in 0..16u64 {
                for y in 0..16u64 {
                    let mut parity = false;
                    for i in 0..l {
                        if subset >> i & 1 == 1 && smallbias_bit(x, y, i, m).unwrap() {
                            parity = !parity;
                        }
                    }
                    if parity {
                        ones += 1;
                    }
                }
            }
            let dev = (ones as f64 / 256.0 - 0.5).abs();
            max_dev = max_dev.max(dev);
        }
        assert!(max_dev <= (l - 1) as f64 / 16.0, "max deviation {max_dev}");
    }
}
