//! Preblocks, blocks, and exhaustive block enumeration.
//!
//! A preblock is a nonempty set whose members are pairwise related — a
//! clique, in graph terms. Blocks are the maximal ones. Enumeration is a
//! pivoting branch-and-bound over neighborhood bitsets; the worst case is
//! inherently exponential, so a soft cap aborts with a distinct error
//! instead of exhausting memory.

use std::fmt;
use std::ops::ControlFlow;

use crate::bitset::BitSet;
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::tolerance::Tolerance;
use crate::universe::{sort_family, Subset, Universe};

/// Default limit on the number of enumerated blocks.
pub const DEFAULT_BLOCK_CAP: usize = 1_000_000;

/// All blocks of a tolerance, in canonical order: lexicographic on the
/// sorted member labels. Blocks cover the universe and are pairwise
/// distinct by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct BlockFamily {
    universe: Universe,
    blocks: Vec<Subset>,
}

impl BlockFamily {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.blocks.iter()
    }

    pub fn contains(&self, set: &Subset) -> bool {
        self.blocks.iter().any(|b| b == set)
    }

    /// The block family viewed as a covering of the universe.
    pub fn to_covering(&self) -> Covering {
        Covering::new(&self.universe, self.blocks.iter().cloned())
            .expect("blocks always form a covering")
    }
}

impl fmt::Debug for BlockFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.blocks.iter()).finish()
    }
}

/// Whether `x` is nonempty with all members pairwise related.
pub fn is_preblock(r: &Tolerance, x: &Subset) -> Result<bool> {
    r.universe().check_same(x.universe())?;
    Ok(!x.is_empty() && x.indices().all(|i| x.bits().is_subset(r.row(i))))
}

/// Whether `x` is a maximal preblock. Decided through the fixed-point test
/// `x = {y | x ⊆ R(y)}`, which is equivalent to maximality.
pub fn is_block(r: &Tolerance, x: &Subset) -> Result<bool> {
    r.universe().check_same(x.universe())?;
    if x.is_empty() {
        return Ok(false);
    }
    let mut closure = BitSet::new(r.len());
    for y in 0..r.len() {
        if x.bits().is_subset(r.row(y)) {
            closure.insert(y);
        }
    }
    Ok(*x.bits() == closure)
}

/// Enumerates all blocks with the default cap.
pub fn blocks(r: &Tolerance) -> Result<BlockFamily> {
    blocks_with_cap(r, DEFAULT_BLOCK_CAP)
}

/// Enumerates all blocks, aborting with [`Error::BlockCapExceeded`] once
/// more than `cap` blocks have been found.
pub fn blocks_with_cap(r: &Tolerance, cap: usize) -> Result<BlockFamily> {
    let mut found: Vec<BitSet> = Vec::new();
    let flow = visit_blocks(r, &mut |b| {
        if found.len() >= cap {
            return ControlFlow::Break(Error::BlockCapExceeded { cap });
        }
        found.push(b.clone());
        ControlFlow::Continue(())
    });
    if let ControlFlow::Break(e) = flow {
        return Err(e);
    }
    let mut blocks: Vec<Subset> = found
        .into_iter()
        .map(|b| Subset::from_bits(r.universe(), b))
        .collect();
    sort_family(&mut blocks);
    Ok(BlockFamily {
        universe: r.universe().clone(),
        blocks,
    })
}

/// Calls `visit` on every block, in enumeration order. Short-circuits when
/// the visitor breaks.
pub(crate) fn visit_blocks<B>(
    r: &Tolerance,
    visit: &mut impl FnMut(&BitSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let n = r.len();
    let mut clique = BitSet::new(n);
    bron_kerbosch(r.rows(), &mut clique, BitSet::full(n), BitSet::new(n), visit)
}

/// Bron–Kerbosch with pivoting over closed neighborhoods. `p` holds the
/// candidates, `x` the excluded vertices; a clique is maximal exactly when
/// both are exhausted.
fn bron_kerbosch<B>(
    rows: &[BitSet],
    clique: &mut BitSet,
    p: BitSet,
    x: BitSet,
    visit: &mut impl FnMut(&BitSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if p.is_empty() && x.is_empty() {
        return visit(clique);
    }
    // Pivot on the vertex covering the most candidates; only its
    // non-neighbors need to be branched on. Neighborhoods are closed, so
    // the pivot itself is re-added to the branch set when still pending.
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection_count(&rows[u]))
        .expect("p or x is nonempty");
    let mut branch = p.difference(&rows[pivot]);
    if p.contains(pivot) {
        branch.insert(pivot);
    }
    let mut p = p;
    let mut x = x;
    for v in branch.iter().collect::<Vec<_>>() {
        let neighbors = &rows[v];
        let mut next_p = p.intersection(neighbors);
        next_p.remove(v);
        let next_x = x.intersection(neighbors);
        clique.insert(v);
        bron_kerbosch(rows, clique, next_p, next_x, visit)?;
        clique.remove(v);
        p.remove(v);
        x.insert(v);
    }
    ControlFlow::Continue(())
}

/// The four equivalent ways a neighborhood can be a block, evaluated
/// independently. They must all agree; a disagreement is a library bug,
/// not a user error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeighborhoodBlockReport {
    /// The neighborhood is a maximal preblock.
    pub is_block: bool,
    /// All members of the neighborhood are pairwise related.
    pub pairwise_related: bool,
    /// Every member's neighborhood contains this one.
    pub contained_in_member_neighborhoods: bool,
    /// The neighborhood equals the intersection of its members'
    /// neighborhoods.
    pub equals_member_intersection: bool,
}

impl NeighborhoodBlockReport {
    pub fn is_consistent(&self) -> bool {
        self.pairwise_related == self.is_block
            && self.contained_in_member_neighborhoods == self.is_block
            && self.equals_member_intersection == self.is_block
    }

    pub fn holds(&self) -> bool {
        self.is_block
    }
}

/// Evaluates the four equivalent block conditions for the neighborhood of
/// `x`.
pub fn neighborhood_block_report(r: &Tolerance, x: &str) -> Result<NeighborhoodBlockReport> {
    let i = r.universe().resolve(x)?;
    let hood = r.neighborhood_at(i);

    let is_block = is_block(r, &hood)?;
    let pairwise_related = hood
        .indices()
        .all(|a| hood.indices().all(|b| r.related_at(a, b)));
    let contained_in_member_neighborhoods =
        hood.indices().all(|a| hood.bits().is_subset(r.row(a)));
    let mut intersection = BitSet::full(r.len());
    for a in hood.indices() {
        intersection.intersect_with(r.row(a));
    }
    let equals_member_intersection = *hood.bits() == intersection;

    let report = NeighborhoodBlockReport {
        is_block,
        pairwise_related,
        contained_in_member_neighborhoods,
        equals_member_intersection,
    };
    debug_assert!(report.is_consistent(), "block conditions disagree at {x}");
    Ok(report)
}

/// Rebuilds a tolerance from a family of blocks (or any covering): two
/// elements are related exactly when some member contains both.
pub fn tolerance_from_blocks(universe: &Universe, family: &[Subset]) -> Result<Tolerance> {
    let covering = Covering::new_dedup(universe, family.iter().cloned())?;
    Ok(covering.induced_tolerance())
}
