//! Analysis of finite tolerance relations and their coverings.
//!
//! A tolerance is a reflexive symmetric relation: similarity without
//! transitivity. This crate provides the machinery built on that idea —
//! block (maximal clique) enumeration over bitset neighborhoods, coverings
//! with irredundancy, normality, and canonical-base decisions, the
//! neighborhood quasiorder with its Helly-number tests, rough-set upper and
//! lower approximation lattices, the concept lattice of the complementary
//! context, and the tolerance a finite lattice induces on its nonzero part.
//!
//! Everything is immutable after construction and safe to share across
//! threads. All emitted sets are sorted by label, so results are
//! deterministic.
//!
//! The [`verify`] module re-checks the classical equivalences between these
//! notions over every instance of a small scale; the `tolrel` CLI exposes
//! those suites, along with file analysis and DOT export.

mod bitset;
mod blocks;
mod concepts;
mod covering;
mod enumerate;
mod error;
mod finite_lattice;
mod fixtures;
mod helly;
mod quasiorder;
mod report;
mod set_lattice;
mod tolerance;
mod universe;
pub mod verify;

pub use blocks::{
    blocks, blocks_with_cap, is_block, is_preblock, neighborhood_block_report,
    tolerance_from_blocks, BlockFamily, NeighborhoodBlockReport, DEFAULT_BLOCK_CAP,
};
pub use concepts::{concept_extent_lattice, Concept, FormalContext};
pub use covering::{
    canonical_bases, find_irredundant_covering_by_search, irredundant_covering_of,
    is_canonical_base, Covering, COVERING_SEARCH_BOUND, DEFAULT_BASE_SEARCH_LIMIT,
    NORMALITY_ORACLE_BOUND,
};
pub use enumerate::{
    all_coverings, all_quasiorders, all_tolerances, downset_lattices, random_tolerance,
    MAX_COVERING_N, MAX_POSET_N, MAX_QUASIORDER_N, MAX_TOLERANCE_N,
};
pub use error::{Error, Result};
pub use finite_lattice::FiniteLattice;
pub use helly::{
    check_characterization, check_helly_theorem, check_main_equivalence, has_helly2,
    helly2_by_triples, helly_number, NeighborhoodPoset, DEFAULT_HELLY_BOUND,
};
pub use quasiorder::Quasiorder;
pub use report::{Condition, EquivalenceReport};
pub use set_lattice::{
    check_c1_c2_c3, lower_definable, upper_definable, verify_lattice_isomorphisms, SetLattice,
};
pub use tolerance::Tolerance;
pub use universe::{Subset, Universe};

pub mod fixture {
    //! Canonical example relations, re-exported for tests and docs.
    pub use crate::fixtures::{
        overlap_tolerance, path_of_four, point_filter_covering, punctured_cube,
        punctured_cube_covering, triangle_with_tail, triangle_with_tail_covering,
    };
}
