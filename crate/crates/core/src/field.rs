//! Arithmetic in GF(2^q) for 1 <= q <= 32.
//!
//! Elements are q-bit integers; bit i is the coefficient of X^i. The
//! reduction polynomial is picked deterministically as the numerically
//! smallest irreducible of degree q, so two runs (or two implementations)
//! agree on every product without sharing a table.

use crate::error::{Error, Result};

/// Largest supported field exponent. Keeps carry-less products inside u64.
pub const MAX_Q: u32 = 32;

/// A field element, encoded as the integer whose bit i is the X^i coefficient.
pub type FieldElement = u32;

/// GF(2^q) together with its reduction polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldContext {
    q: u32,
    reduction: u64,
}

impl FieldContext {
    /// Builds the field GF(2^q) with the smallest-integer irreducible
    /// reduction polynomial.
    pub fn new(q: u32) -> Result<Self> {
        let reduction = find_irreducible(q)?;
        Ok(FieldContext { q, reduction })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The reduction polynomial as a (q+1)-bit integer.
    pub fn reduction(&self) -> u64 {
        self.reduction
    }

    /// Number of elements, 2^q.
    pub fn order(&self) -> u64 {
        1u64 << self.q
    }

    #[inline]
    fn fits(&self, a: FieldElement) -> bool {
        u64::from(a) < self.order()
    }
}

/// Degree of a polynomial over GF(2); -1 for the zero polynomial.
#[inline]
fn poly_degree(a: u64) -> i32 {
    63 - a.leading_zeros() as i32
}

/// Remainder of `a` modulo `m` as polynomials over GF(2). `m` must be nonzero.
fn poly_mod(mut a: u64, m: u64) -> u64 {
    debug_assert!(m != 0);
    let dm = poly_degree(m);
    while poly_degree(a) >= dm {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

/// Carry-less (XOR) product of two 32-bit polynomials; degree <= 62.
#[inline]
fn clmul(a: u32, b: u32) -> u64 {
    let a = u64::from(a);
    let mut acc = 0u64;
    let mut b = b;
    while b != 0 {
        let i = b.trailing_zeros();
        acc ^= a << i;
        b &= b - 1;
    }
    acc
}

/// Finds the numerically smallest irreducible polynomial of degree q,
/// encoded as an integer in [2^q, 2^{q+1}).
///
/// Irreducibility is decided by trial division: a degree-q polynomial is
/// irreducible iff no polynomial of degree 1..=q/2 divides it. Candidates
/// with a zero constant term are divisible by X, so only odd encodings are
/// tried (except at q = 1, where X itself is the smallest choice).
///
/// The search is deterministic, so results are memoized per q.
pub fn find_irreducible(q: u32) -> Result<u64> {
    if !(1..=MAX_Q).contains(&q) {
        return Err(Error::Domain(format!(
            "field exponent q must be in 1..={MAX_Q}, got {q}"
        )));
    }
    static CACHE: std::sync::OnceLock<[std::sync::OnceLock<u64>; MAX_Q as usize]> =
        std::sync::OnceLock::new();
    let cache = CACHE.get_or_init(|| std::array::from_fn(|_| std::sync::OnceLock::new()));
    Ok(*cache[(q - 1) as usize].get_or_init(|| search_irreducible(q)))
}

fn search_irreducible(q: u32) -> u64 {
    if q == 1 {
        // Both X and X+1 are irreducible; 0b10 is the smaller encoding.
        return 0b10;
    }
    let lo = 1u64 << q;
    let hi = 1u64 << (q + 1);
    let mut candidate = lo | 1;
    while candidate < hi {
        if trial_division_irreducible(candidate, q) {
            return candidate;
        }
        candidate += 2;
    }
    unreachable!("an irreducible polynomial of degree {q} always exists");
}

fn trial_division_irreducible(f: u64, q: u32) -> bool {
    // A divisor of an odd f is odd, so step by 2.
    let max_divisor_bits = q / 2 + 1;
    let mut d = 3u64;
    while d < (1u64 << max_divisor_bits) {
        if poly_mod(f, d) == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Field addition: coefficient-wise XOR.
#[inline]
pub fn ff_add(a: FieldElement, b: FieldElement) -> FieldElement {
    a ^ b
}

/// Field multiplication: carry-less product reduced modulo the context's
/// reduction polynomial.
#[inline]
pub fn ff_mul(a: FieldElement, b: FieldElement, ctx: &FieldContext) -> FieldElement {
    debug_assert!(ctx.fits(a) && ctx.fits(b));
    poly_mod(clmul(a, b), ctx.reduction) as FieldElement
}

/// Evaluates a polynomial with coefficients `coeffs` (coeffs[i] multiplies
/// X^i) at the point `x`, by Horner's rule.
pub fn poly_eval(
    coeffs: &[FieldElement],
    x: FieldElement,
    ctx: &FieldContext,
) -> Result<FieldElement> {
    if coeffs.is_empty() {
        return Err(Error::Domain(
            "poly_eval needs at least one coefficient".into(),
        ));
    }
    let mut acc = 0u32;
    for &c in coeffs.iter().rev() {
        acc = ff_add(ff_mul(acc, x, ctx), c);
    }
    Ok(acc)
}
