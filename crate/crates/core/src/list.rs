//! Building lists of candidate graphs and checking each one.
//!
//! Four generation modes share one pipeline: derive an index, materialize
//! its graph, run the k-Ramsey check, aggregate. Every item's randomness
//! is a pure function of (seed, item number), so lists come out identical
//! no matter how many workers run the items.

use crate::error::{Error, Result};
use crate::expand::expand_seed;
use crate::graph::Graph;
use crate::ramsey::is_k_ramsey;
use crate::sampler::{
    materialize, params_for, smallbias_graph, smallbias_width, PolyIndex, SamplerParams,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Guard on exhaustive enumerations: at most 2^24 items.
pub const EXHAUSTIVE_GUARD_BITS: u32 = 24;

/// How the list items are generated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ListMode {
    /// Every polynomial index in the 2^{t*q} space.
    #[serde(rename = "poly-exhaustive")]
    PolyExhaustive,
    /// `count` indices, item i drawn from the expansion of seed + i.
    #[serde(rename = "poly-sampled")]
    PolySampled,
    /// Seeds (x, y) of the small-bias generator, enumerated when the
    /// 2^{2m} support fits in `count`, sampled otherwise.
    #[serde(rename = "smallbias")]
    SmallBias,
    /// Short seeds 0..count-1, each expanded to a full index.
    #[serde(rename = "expander")]
    Expander,
}

impl ListMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            ListMode::PolyExhaustive => "poly-exhaustive",
            ListMode::PolySampled => "poly-sampled",
            ListMode::SmallBias => "smallbias",
            ListMode::Expander => "expander",
        }
    }
}

impl std::str::FromStr for ListMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "poly-exhaustive" => Ok(ListMode::PolyExhaustive),
            "poly-sampled" => Ok(ListMode::PolySampled),
            "smallbias" => Ok(ListMode::SmallBias),
            "expander" => Ok(ListMode::Expander),
            other => Err(Error::Parse(format!(
                "unknown list mode {other:?} (expected poly-exhaustive, poly-sampled, smallbias, or expander)"
            ))),
        }
    }
}

/// Per-item record: the index that generated the graph and its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListItem {
    pub index_hex: String,
    pub is_ramsey: bool,
    pub witness_kind: crate::ramsey::WitnessKind,
    pub witness: Vec<usize>,
}

/// Aggregate result of a list build.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ListReport {
    pub n: usize,
    pub k: usize,
    pub mode: ListMode,
    pub seed: u64,
    pub total: usize,
    pub ramsey_count: usize,
    pub fraction: f64,
    pub elapsed_sec: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub items: Option<Vec<ListItem>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub items_omitted: Option<bool>,
}

impl ListReport {
    /// The report as a single JSON document.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Packs a bit string into a polynomial index: consecutive q-bit groups
/// become coefficients 0..t-1, bit 0 of each group being the lowest bit.
pub fn index_from_bits(bits: &crate::bits::BitVec, params: &SamplerParams) -> Result<PolyIndex> {
    let need = params.index_bits();
    if bits.len() < need {
        return Err(Error::Domain(format!(
            "bit string has {} bits, need t*q = {need}",
            bits.len()
        )));
    }
    let q = params.q as usize;
    let coeffs = (0..params.t)
        .map(|i| bits.read_word(i * q, q) as u32)
        .collect();
    PolyIndex::new(coeffs, params)
}

// One generated item before checking.
enum Candidate {
    Poly(PolyIndex),
    SmallBias { x: u64, y: u64 },
}

fn candidate_for_item(
    mode: ListMode,
    item: usize,
    seed: u64,
    enumerated: bool,
    params: &SamplerParams,
) -> Result<(String, Candidate)> {
    match mode {
        ListMode::PolyExhaustive => {
            // The item number itself is the index, lowest bit first.
            let bits = crate::bits::BitVec::from_fn(params.index_bits(), |i| item >> i & 1 == 1);
            let idx = index_from_bits(&bits, params)?;
            Ok((idx.to_hex(params), Candidate::Poly(idx)))
        }
        ListMode::PolySampled => {
            let bits = expand_seed(seed.wrapping_add(item as u64), params.index_bits());
            let idx = index_from_bits(&bits, params)?;
            Ok((idx.to_hex(params), Candidate::Poly(idx)))
        }
        ListMode::Expander => {
            let bits = expand_seed(item as u64, params.index_bits());
            let idx = index_from_bits(&bits, params)?;
            Ok((idx.to_hex(params), Candidate::Poly(idx)))
        }
        ListMode::SmallBias => {
            let m = smallbias_width(params);
            let (x, y) = if enumerated {
                // enumeration order: x in the low half of the item number,
                // y in the high half
                (item as u64 & ((1u64 << m) - 1), (item as u64) >> m)
            } else {
                let bits = expand_seed(seed.wrapping_add(item as u64), 2 * m as usize);
                (
                    bits.read_word(0, m as usize),
                    bits.read_word(m as usize, m as usize),
                )
            };
            let digits = (m as usize).div_ceil(4);
            Ok((
                format!("{x:0digits$x}{y:0digits$x}"),
                Candidate::SmallBias { x, y },
            ))
        }
    }
}

// Whether small-bias mode enumerates the full support for this `count`.
fn smallbias_enumerated(params: &SamplerParams, count: usize) -> bool {
    let m = smallbias_width(params);
    2 * m <= 63 && count as u64 >= 1u64 << (2 * m)
}

fn materialize_candidate(c: &Candidate, params: &SamplerParams) -> Result<Graph> {
    match c {
        Candidate::Poly(idx) => materialize(idx, params),
        Candidate::SmallBias { x, y } => smallbias_graph(*x, *y, params),
    }
}

/// Generates and checks a whole list.
///
/// `count` is the requested list size; exhaustive modes override it with
/// the full support size (and refuse supports larger than 2^24).
pub fn build_list(
    n: usize,
    k: usize,
    mode: ListMode,
    count: usize,
    seed: u64,
) -> Result<ListReport> {
    if count < 1 {
        return Err(Error::Domain("list size must be at least 1".into()));
    }
    let params = params_for(n, k, None)?;
    let total = match mode {
        ListMode::PolyExhaustive => {
            let bits = params.index_bits();
            if bits > EXHAUSTIVE_GUARD_BITS as usize {
                return Err(Error::Guard(format!(
                    "exhaustive index space 2^{bits} exceeds 2^{EXHAUSTIVE_GUARD_BITS}"
                )));
            }
            1usize << bits
        }
        ListMode::SmallBias => {
            if smallbias_enumerated(&params, count) {
                let m = smallbias_width(&params);
                if 2 * m > EXHAUSTIVE_GUARD_BITS {
                    return Err(Error::Guard(format!(
                        "small-bias support 2^{} exceeds 2^{EXHAUSTIVE_GUARD_BITS}; use a smaller count to sample instead",
                        2 * m
                    )));
                }
                1usize << (2 * m)
            } else {
                count
            }
        }
        ListMode::PolySampled | ListMode::Expander => count,
    };

    let enumerated = mode == ListMode::SmallBias && smallbias_enumerated(&params, count);
    let start = Instant::now();
    let items: Result<Vec<ListItem>> = (0..total)
        .into_par_iter()
        .map(|item| {
            let (index_hex, cand) = candidate_for_item(mode, item, seed, enumerated, &params)?;
            let graph = materialize_candidate(&cand, &params)?;
            let verdict = is_k_ramsey(&graph, k)?;
            Ok(ListItem {
                index_hex,
                is_ramsey: verdict.is_ramsey,
                witness_kind: verdict.witness_kind,
                witness: verdict.witness,
            })
        })
        .collect();
    let items = items?;
    let elapsed_sec = start.elapsed().as_secs_f64();

    let ramsey_count = items.iter().filter(|i| i.is_ramsey).count();
    Ok(ListReport {
        n,
        k,
        mode,
        seed,
        total,
        ramsey_count,
        fraction: ramsey_count as f64 / total as f64,
        elapsed_sec,
        items: Some(items),
        items_omitted: None,
    })
}

/// Drops the per-item records, leaving a summary.
pub fn summarize(mut report: ListReport) -> ListReport {
    report.items = None;
    report.items_omitted = Some(true);
    report
}

/// First listed graph that verified k-Ramsey, rebuilt from its index.
pub fn select_good(report: &ListReport) -> Result<Option<(String, Graph)>> {
    let Some(items) = &report.items else {
        return Err(Error::Domain(
            "report has no items (built in summary mode?)".into(),
        ));
    };
    let params = params_for(report.n, report.k, None)?;
    for item in items {
        if item.is_ramsey {
            let graph = graph_for_index_hex(&item.index_hex, report.mode, &params)?;
            return Ok(Some((item.index_hex.clone(), graph)));
        }
    }
    Ok(None)
}

/// Rebuilds the graph a report item refers to.
pub fn graph_for_index_hex(
    index_hex: &str,
    mode: ListMode,
    params: &SamplerParams,
) -> Result<Graph> {
    match mode {
        ListMode::SmallBias => {
            let m = smallbias_width(params);
            let digits = (m as usize).div_ceil(4);
            if index_hex.len() != 2 * digits {
                return Err(Error::Parse(format!(
                    "small-bias index hex has {} digits, expected {}",
                    index_hex.len(),
                    2 * digits
                )));
            }
            if let Some(bad) = index_hex.chars().find(|c| !c.is_ascii_hexdigit()) {
                return Err(Error::Parse(format!("bad hex digit {bad:?} in index")));
            }
            let x = u64::from_str_radix(&index_hex[..digits], 16)
                .map_err(|_| Error::Parse(format!("bad hex in {index_hex:?}")))?;
            let y = u64::from_str_radix(&index_hex[digits..], 16)
                .map_err(|_| Error::Parse(format!("bad hex in {index_hex:?}")))?;
            smallbias_graph(x, y, params)
        }
        _ => {
            let idx = PolyIndex::from_hex(index_hex, params)?;
            materialize(&idx, params)
        }
    }
}
