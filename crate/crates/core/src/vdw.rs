//! Constructive van der Waerden lower bounds: 2-colorings of {1..n} with
//! no monochromatic k-term arithmetic progression.
//!
//! The colorer is a Moser-Tardos resampler: start from a seeded random
//! coloring, and while some k-AP is monochromatic, redraw the colors of
//! the first violated one (in (step, start) order) from the continuation
//! of the same bit stream. Under the symmetric local-lemma condition
//! e*p*(d+1) <= 1 the expected number of redraws is linear in the number
//! of APs, and a sweep over seeds derandomizes the search.

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::expand::{expand_seed, SplitMixStream};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A k-term arithmetic progression inside {1..n}: start, start+step, ...,
/// start+(k-1)*step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct APInstance {
    pub start: usize,
    pub step: usize,
    pub k: usize,
}

impl APInstance {
    /// The progression's elements, ascending.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.k).map(move |j| self.start + j * self.step)
    }

    pub fn last(&self) -> usize {
        self.start + (self.k - 1) * self.step
    }
}

/// A 2-coloring of {1..n}; the color of element i sits at bit i-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub n: usize,
    pub colors: BitVec,
}

impl Coloring {
    pub fn new(n: usize, colors: BitVec) -> Result<Self> {
        if colors.len() != n {
            return Err(Error::Domain(format!(
                "coloring has {} bits, expected n={n}",
                colors.len()
            )));
        }
        Ok(Coloring { n, colors })
    }

    /// Color of element `i`, 1-based.
    #[inline]
    pub fn color(&self, i: usize) -> bool {
        self.colors.get(i - 1)
    }

    /// The n colors as a 0/1 string.
    pub fn to_bit_string(&self) -> String {
        self.colors
            .iter()
            .map(|b| if b { '1' } else { '0' })
            .collect()
    }
}

/// Bookkeeping for one resampling run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResampleStats {
    pub success: bool,
    pub resamples: u64,
    pub initial_seed: u64,
}

/// Cap on how many APs [`enumerate_aps`] will materialize.
pub const AP_ENUMERATION_GUARD: usize = 10_000_000;

fn check_ap_domain(n: usize, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Domain(format!(
            "AP length must be at least 2, got {k}"
        )));
    }
    if n < 1 {
        return Err(Error::Domain("domain size must be at least 1".into()));
    }
    Ok(())
}

/// All k-APs in {1..n}, ordered by (step, start). Refuses to materialize
/// more than [`AP_ENUMERATION_GUARD`] instances.
pub fn enumerate_aps(n: usize, k: usize) -> Result<Vec<APInstance>> {
    let total = count_aps(n, k)?;
    if total > AP_ENUMERATION_GUARD {
        return Err(Error::Guard(format!(
            "{{1..{n}}} holds {total} {k}-APs, beyond the {AP_ENUMERATION_GUARD} enumeration cap"
        )));
    }
    let mut out = Vec::with_capacity(total);
    let mut step = 1;
    while (k - 1) * step < n {
        for start in 1..=(n - (k - 1) * step) {
            out.push(APInstance { start, step, k });
        }
        step += 1;
    }
    debug_assert_eq!(out.len(), total);
    Ok(out)
}

/// Number of k-APs in {1..n} in closed form: with D = floor((n-1)/(k-1))
/// admissible steps, sum over steps d of n-(k-1)d = n*D - (k-1)*D*(D+1)/2.
pub fn count_aps(n: usize, k: usize) -> Result<usize> {
    check_ap_domain(n, k)?;
    let (n, km1) = (n as u128, (k - 1) as u128);
    let d = (n - 1) / km1;
    let total = n * d - km1 * d * (d + 1) / 2;
    usize::try_from(total)
        .map_err(|_| Error::Guard(format!("{total} k-APs overflow the platform word")))
}

/// The Gasarch-Haeupler domain size floor(2^{k-1}/(e*k) - 1), clamped to
/// at least 1.
pub fn gh_threshold(k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::Domain(format!("need k >= 2, got {k}")));
    }
    if k > 60 {
        return Err(Error::Domain(format!(
            "k={k} unsupported: 2^{} overflows the integer threshold",
            k - 1
        )));
    }
    let raw = (1u64 << (k - 1)) as f64 / (std::f64::consts::E * k as f64) - 1.0;
    Ok((raw.floor() as i64).max(1) as usize)
}

/// Upper bound on how many k-APs one k-AP can intersect: ceil(n*k^2/(k-1)).
pub fn degree_bound(n: usize, k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::Domain(format!("need k >= 2, got {k}")));
    }
    Ok((n * k * k).div_ceil(k - 1))
}

/// Probability model for the local-lemma check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PModel {
    /// Truly uniform colors: a fixed k-AP is monochromatic w.p. 2^{1-k}.
    Uniform,
    /// Almost-k-wise colors: the bias doubles the bound to 2^{2-k}.
    AlmostKwise,
}

/// The symmetric Lovasz Local Lemma condition e*p*(d+1) <= 1 with
/// d = [`degree_bound`] and p given by the chosen model.
pub fn lll_check(n: usize, k: usize, model: PModel) -> Result<bool> {
    let d = degree_bound(n, k)?;
    let exponent = match model {
        PModel::Uniform => 1 - (k as i32),
        PModel::AlmostKwise => 2 - (k as i32),
    };
    let p = (exponent as f64).exp2();
    Ok(std::f64::consts::E * p * (d as f64 + 1.0) <= 1.0)
}

/// The first n bits of the seed's expansion, as a coloring.
pub fn random_coloring(n: usize, seed: u64) -> Result<Coloring> {
    if n < 1 {
        return Err(Error::Domain("domain size must be at least 1".into()));
    }
    Coloring::new(n, expand_seed(seed, n))
}

/// First AP in the given order whose elements all share a color.
pub fn find_mono_ap(c: &Coloring, aps: &[APInstance]) -> Result<Option<APInstance>> {
    for ap in aps {
        if ap.last() > c.n || ap.start < 1 {
            return Err(Error::Domain(format!(
                "AP (start={}, step={}, k={}) leaves {{1..{}}}",
                ap.start, ap.step, ap.k, c.n
            )));
        }
        let first = c.color(ap.start);
        if ap.elements().skip(1).all(|e| c.color(e) == first) {
            return Ok(Some(*ap));
        }
    }
    Ok(None)
}

/// True iff no k-AP of {1..c.n} is monochromatic under `c`.
pub fn verify_coloring(c: &Coloring, k: usize) -> Result<bool> {
    Ok(find_mono_ap(c, &enumerate_aps(c.n, k)?)?.is_none())
}

/// Moser-Tardos resampling from the seed's bit stream: the first n bits
/// color {1..n}, and each violated AP redraws its k colors from the next
/// k bits. Exceeding `max_resamples` is reported as failure, not an error.
pub fn moser_tardos(
    n: usize,
    k: usize,
    seed: u64,
    max_resamples: u64,
) -> Result<(Coloring, ResampleStats)> {
    // Enumerate first: it validates the domain and guards the AP count
    // before the n-bit coloring is allocated.
    let aps = enumerate_aps(n, k)?;
    let mut stream = SplitMixStream::new(seed);
    let initial = Coloring::new(n, stream.take_bits(n))?;
    resample_loop(initial, &aps, &mut stream, seed, max_resamples)
}

/// The resampling loop itself, starting from an arbitrary coloring. This
/// is the test hook behind [`moser_tardos`]; redraws come from `stream`.
pub fn resample_from(
    coloring: Coloring,
    k: usize,
    stream: &mut SplitMixStream,
    initial_seed: u64,
    max_resamples: u64,
) -> Result<(Coloring, ResampleStats)> {
    let aps = enumerate_aps(coloring.n, k)?;
    resample_loop(coloring, &aps, stream, initial_seed, max_resamples)
}

fn resample_loop(
    mut coloring: Coloring,
    aps: &[APInstance],
    stream: &mut SplitMixStream,
    initial_seed: u64,
    max_resamples: u64,
) -> Result<(Coloring, ResampleStats)> {
    let mut resamples = 0u64;
    loop {
        match find_mono_ap(&coloring, aps)? {
            None => {
                return Ok((
                    coloring,
                    ResampleStats {
                        success: true,
                        resamples,
                        initial_seed,
                    },
                ));
            }
            Some(ap) => {
                if resamples == max_resamples {
                    return Ok((
                        coloring,
                        ResampleStats {
                            success: false,
                            resamples,
                            initial_seed,
                        },
                    ));
                }
                for e in ap.elements() {
                    let bit = stream.next_bit();
                    coloring.colors.set(e - 1, bit);
                }
                resamples += 1;
            }
        }
    }
}

/// Tries seeds 0, 1, 2, ... and returns the first one whose run succeeds,
/// with its coloring. Runs seeds in parallel; the returned seed is the
/// minimum succeeding one regardless of worker count.
pub fn seed_sweep(
    n: usize,
    k: usize,
    max_seeds: u64,
    max_resamples_per_seed: u64,
) -> Result<Option<(u64, Coloring)>> {
    if max_seeds < 1 {
        return Err(Error::Domain("must try at least one seed".into()));
    }
    let found = (0..max_seeds).into_par_iter().find_first(|&seed| {
        moser_tardos(n, k, seed, max_resamples_per_seed)
            .map(|(_, stats)| stats.success)
            .unwrap_or(false)
    });
    match found {
        Some(seed) => {
            let (coloring, stats) = moser_tardos(n, k, seed, max_resamples_per_seed)?;
            debug_assert!(stats.success);
            Ok(Some((seed, coloring)))
        }
        None => Ok(None),
    }
}

/// Serializes a coloring in the two-line text format:
/// `vdw-coloring v1 n=<n> k=<k>` then the n color bits.
pub fn emit_coloring(c: &Coloring, k: usize) -> String {
    format!("vdw-coloring v1 n={} k={}\n{}\n", c.n, k, c.to_bit_string())
}

/// Parses the format written by [`emit_coloring`]; returns the coloring
/// and the k recorded in the header.
pub fn parse_coloring(text: &str) -> Result<(Coloring, usize)> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty coloring file".into()))?;
    let rest: Vec<&str> = header.split_whitespace().collect();
    let (n, k) = match rest.as_slice() {
        ["vdw-coloring", "v1", nf, kf] => {
            let n = nf
                .strip_prefix("n=")
                .and_then(|v| v.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("bad n field {nf:?}")))?;
            let k = kf
                .strip_prefix("k=")
                .and_then(|v| v.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("bad k field {kf:?}")))?;
            (n, k)
        }
        _ => {
            return Err(Error::Parse(format!(
                "bad coloring header {header:?} (expected 'vdw-coloring v1 n=<n> k=<k>')"
            )))
        }
    };
    let body = lines
        .next()
        .ok_or_else(|| Error::Parse("coloring file is missing its bit line".into()))?;
    if body.len() != n {
        return Err(Error::Parse(format!(
            "coloring body has {} characters, expected n={n}",
            body.len()
        )));
    }
    let mut colors = BitVec::zeros(n);
    for (i, ch) in body.chars().enumerate() {
        match ch {
            '0' => {}
            '1' => colors.set(i, true),
            other => return Err(Error::Parse(format!("bad color character {other:?}"))),
        }
    }
    if let Some(extra) = lines.next() {
        if !extra.trim().is_empty() {
            return Err(Error::Parse("trailing content after coloring body".into()));
        }
    }
    Ok((Coloring::new(n, colors)?, k))
}
