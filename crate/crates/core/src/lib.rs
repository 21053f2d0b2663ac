//! Spiro and polyphenyl hexagonal chains.
//!
//! A chain of `n` hexagons is named by a [`CodeWord`] over `{O, M, P}`. This
//! crate builds the explicit chain graphs, computes their Wiener indices by
//! breadth-first search, by recurrence, by closed form and (for the constant
//! chains) by cubic polynomial, relates each polyphenyl chain to its
//! hexagonal squeeze, and enumerates all chains of a length to rank extremal
//! ones and check averages.
//!
//! ```
//! use hexchain_core::{parse_code, build_spiro, wiener_bfs, wiener_closed, ChainKind};
//!
//! let code = parse_code("PMMMO", None).unwrap();
//! let graph = build_spiro(&code);
//! assert_eq!(graph.vertex_count(), 36);
//! assert_eq!(
//!     wiener_bfs(&graph.graph).unwrap(),
//!     wiener_closed(ChainKind::Spiro, &code).unwrap(),
//! );
//! ```

pub mod code;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod verify;
pub mod wiener;

pub use code::{canonicalize, parse_code, CodeWord, Letter};
pub use enumeration::{
    average_wiener, count_chains, enumerate_chains, enumerate_chains_par, family_mean,
    predicted_extremal, rank_extremal, summarize, wiener_census, ChainCensus, Direction,
    ExhaustiveSummary, ExtremalRanking, RankCheck, RankEntry, DEFAULT_MAX_N,
};
pub use error::{Error, Result};
pub use graph::{
    build_chain, build_polyphenyl, build_spiro, squeeze_graph, ChainGraph, ChainKind, Graph,
};
pub use verify::{verify, InvariantTally, VerifyReport};
pub use wiener::{
    compute_report, f_weight, g_weight, squeeze_relation, vertex_distance_sum, wiener_bfs,
    wiener_closed, wiener_homogeneous, wiener_poly_closed, wiener_poly_recurrence,
    wiener_recurrence, wiener_spiro_closed, wiener_spiro_recurrence, Method, WienerReport,
};
