//! Desk-scale constructions of short graph lists of which most members are
//! k-Ramsey (no k-clique, no k-independent-set), plus the machinery around
//! them:
//!
//! - [`field`]: GF(2^q) arithmetic with deterministic reduction-polynomial
//!   selection.
//! - [`sampler`]: the t-wise independent polynomial sample space over
//!   n-vertex graphs, a constant-time-per-edge adjacency oracle on the
//!   index, and a small-bias alternative.
//! - [`ramsey`]: exact k-Ramsey checking by pruned branch-and-bound, with
//!   an independent brute-force oracle and the union-bound calculator.
//! - [`list`]: exhaustive, sampled, seed-expanded, and small-bias list
//!   builders with JSON reports.
//! - [`product`]: lexicographic graph products, which multiply Ramsey
//!   parameters.
//! - [`vdw`]: van der Waerden 2-colorings by Moser-Tardos resampling and
//!   seed sweeps.
//! - [`io`]: graph file formats.
//!
//! Everything is deterministic given its seeds: the only randomness source
//! is the splitmix counter mixer in [`expand`].

pub mod bits;
pub mod error;
pub mod expand;
pub mod field;
pub mod graph;
pub mod io;
pub mod list;
pub mod product;
pub mod ramsey;
pub mod sampler;
pub mod vdw;

pub use bits::BitVec;
pub use error::{Error, Result};
pub use expand::{expand_seed, SplitMixStream};
pub use field::{ff_add, ff_mul, find_irreducible, poly_eval, FieldContext, FieldElement};
pub use graph::{binom2, edge_from_index, edge_index, Graph};
pub use io::{emit_graph, parse_graph, GraphForm};
pub use list::{build_list, index_from_bits, select_good, ListItem, ListMode, ListReport};
pub use product::{multi_product, product, product_has_edge, product_params, ProductParams};
pub use ramsey::{
    brute_force_is_k_ramsey, complement, find_clique_geq, is_k_ramsey, union_bound_log2,
    RamseyVerdict, WitnessKind,
};
pub use sampler::{
    bit_at, materialize, oracle_query, params_for, point_for_index, smallbias_bit, smallbias_graph,
    PolyIndex, SamplerParams,
};
pub use vdw::{
    count_aps, degree_bound, enumerate_aps, find_mono_ap, gh_threshold, lll_check, moser_tardos,
    random_coloring, seed_sweep, verify_coloring, APInstance, Coloring, PModel, ResampleStats,
};
