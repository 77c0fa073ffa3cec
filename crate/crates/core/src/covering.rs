//! Coverings of a universe and the tolerances they induce: irredundancy,
//! normality, canonical bases, and the extraction of the irredundant
//! covering a tolerance admits, when it admits one.

use std::collections::BTreeSet;
use std::fmt;

use crate::bitset::BitSet;
use crate::blocks;
use crate::error::{Error, Result};
use crate::tolerance::Tolerance;
use crate::universe::{sort_family, Subset, Universe};

/// Default limit on the number of subfamilies examined by
/// [`canonical_bases`].
pub const DEFAULT_BASE_SEARCH_LIMIT: u128 = 1 << 20;

/// Maximum universe size for the literal normality oracle, which
/// quantifies over all subsets of the universe.
pub const NORMALITY_ORACLE_BOUND: usize = 8;

/// A family of nonempty subsets whose union is the whole universe.
/// Members are pairwise distinct and kept in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct Covering {
    universe: Universe,
    sets: Vec<Subset>,
}

impl Covering {
    /// Builds a covering. Duplicate members are an error; they silently
    /// break irredundancy semantics. Use [`Covering::new_dedup`] to collapse
    /// them instead.
    pub fn new<I>(universe: &Universe, sets: I) -> Result<Covering>
    where
        I: IntoIterator<Item = Subset>,
    {
        Covering::build(universe, sets, false)
    }

    /// Builds a covering, deduplicating equal members.
    pub fn new_dedup<I>(universe: &Universe, sets: I) -> Result<Covering>
    where
        I: IntoIterator<Item = Subset>,
    {
        Covering::build(universe, sets, true)
    }

    fn build<I>(universe: &Universe, sets: I, dedup: bool) -> Result<Covering>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut members: Vec<Subset> = Vec::new();
        let mut seen = BTreeSet::new();
        let mut union = BitSet::new(universe.len());
        for (position, set) in sets.into_iter().enumerate() {
            universe.check_same(set.universe())?;
            if set.is_empty() {
                return Err(Error::EmptyMember(position));
            }
            if !seen.insert(set.bits().clone()) {
                if dedup {
                    continue;
                }
                return Err(Error::DuplicateMember(position));
            }
            union.union_with(set.bits());
            members.push(set);
        }
        if !union.is_full() {
            let missing = union.complement().first().expect("not full");
            return Err(Error::NotACovering(universe.label(missing).to_string()));
        }
        sort_family(&mut members);
        Ok(Covering {
            universe: universe.clone(),
            sets: members,
        })
    }

    /// Convenience constructor from label lists.
    pub fn from_labels(universe: &Universe, sets: &[&[&str]]) -> Result<Covering> {
        let subsets = sets
            .iter()
            .map(|labels| Subset::from_labels(universe, labels.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Covering::new(universe, subsets)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.sets.iter()
    }

    pub fn contains(&self, set: &Subset) -> bool {
        self.sets.iter().any(|s| s == set)
    }

    /// The induced tolerance: two elements are related exactly when some
    /// member contains both. Every member is a preblock of the result.
    pub fn induced_tolerance(&self) -> Tolerance {
        let n = self.universe.len();
        let mut rows = vec![BitSet::new(n); n];
        for set in &self.sets {
            for x in set.indices() {
                rows[x].union_with(set.bits());
            }
        }
        for (i, row) in rows.iter_mut().enumerate() {
            row.insert(i);
        }
        Tolerance::from_rows(&self.universe, rows)
    }

    /// True when no member can be dropped, i.e. every member contains an
    /// element covered by no other member.
    pub fn is_irredundant(&self) -> bool {
        self.sets.iter().enumerate().all(|(k, set)| {
            let mut others = BitSet::new(self.universe.len());
            for (j, other) in self.sets.iter().enumerate() {
                if j != k {
                    others.union_with(other.bits());
                }
            }
            !set.bits().is_subset(&others)
        })
    }

    /// True when every member equals some neighborhood of `r`. Against the
    /// covering's own induced tolerance this agrees with irredundancy.
    pub fn is_neighborhood_family(&self, r: &Tolerance) -> Result<bool> {
        self.universe.check_same(r.universe())?;
        Ok(self
            .sets
            .iter()
            .all(|set| (0..r.len()).any(|x| set.bits() == r.row(x))))
    }

    /// Whether this covering is exactly the block family of the tolerance it
    /// induces — equivalently, the block family of any tolerance at all.
    pub fn is_normal(&self) -> Result<bool> {
        let family = blocks::blocks(&self.induced_tolerance())?;
        Ok(self.sets == family.blocks())
    }

    /// Literal normality check: the covering is an antichain, and every set
    /// that fits in no member contains a two-element subset that fits in no
    /// member. Exponential in the universe size, so only available as an
    /// oracle for small universes.
    pub fn normality_oracle(&self) -> Result<bool> {
        let n = self.universe.len();
        if n > NORMALITY_ORACLE_BOUND {
            return Err(Error::UniverseTooLarge {
                n,
                max: NORMALITY_ORACLE_BOUND,
            });
        }
        let antichain = self.sets.iter().all(|a| {
            self.sets
                .iter()
                .all(|b| a == b || !a.bits().is_subset(b.bits()))
        });
        if !antichain {
            return Ok(false);
        }
        let fits = |set: &BitSet| self.sets.iter().any(|b| set.is_subset(b.bits()));
        for mask in 0u32..(1u32 << n) {
            let mut m = BitSet::new(n);
            for i in 0..n {
                if mask & (1 << i) != 0 {
                    m.insert(i);
                }
            }
            if fits(&m) {
                continue;
            }
            let members: Vec<usize> = m.iter().collect();
            let mut witness = false;
            'pairs: for (k, &a) in members.iter().enumerate() {
                for &b in &members[k + 1..] {
                    let mut pair = BitSet::new(n);
                    pair.insert(a);
                    pair.insert(b);
                    if !fits(&pair) {
                        witness = true;
                        break 'pairs;
                    }
                }
            }
            if !witness {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.sets.iter()).finish()
    }
}

impl fmt::Display for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sets.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Strict related pairs of `r` packed into one bitset, plus per-member pair
/// masks: the machinery behind base searches.
struct PairMasks {
    target_pairs: BitSet,
    target_cover: BitSet,
    member_pairs: Vec<BitSet>,
    member_cover: Vec<BitSet>,
}

fn pair_masks(r: &Tolerance, family: &[Subset]) -> PairMasks {
    let n = r.len();
    let pair_bits = n * n;
    let mut target_pairs = BitSet::new(pair_bits);
    for (i, j) in r.strict_pairs() {
        target_pairs.insert(i * n + j);
    }
    let member_pairs = family
        .iter()
        .map(|set| {
            let mut mask = BitSet::new(pair_bits);
            let members: Vec<usize> = set.indices().collect();
            for (k, &i) in members.iter().enumerate() {
                for &j in &members[k + 1..] {
                    mask.insert(i * n + j);
                }
            }
            mask
        })
        .collect();
    let member_cover = family.iter().map(|set| set.bits().clone()).collect();
    PairMasks {
        target_pairs,
        target_cover: BitSet::full(n),
        member_pairs,
        member_cover,
    }
}

/// True when the family of blocks `k` induces `r` and no single member can
/// be removed without changing the induced tolerance. Families that fail to
/// cover the universe cannot induce the reflexive `r` and simply yield
/// `false`. Duplicate members are collapsed first.
pub fn is_canonical_base(k: &[Subset], r: &Tolerance) -> Result<bool> {
    for set in k {
        r.universe().check_same(set.universe())?;
    }
    let mut seen = BTreeSet::new();
    let family: Vec<Subset> = k
        .iter()
        .filter(|s| seen.insert(s.bits().clone()))
        .cloned()
        .collect();
    for set in &family {
        if !blocks::is_block(r, set)? {
            return Ok(false);
        }
    }
    let masks = pair_masks(r, &family);
    Ok(base_mask_is_canonical(
        &masks,
        &(0..family.len()).collect::<Vec<_>>(),
    ))
}

fn base_mask_is_canonical(masks: &PairMasks, selected: &[usize]) -> bool {
    let n_pairs = masks.target_pairs.len();
    let n = masks.target_cover.len();
    let mut pairs = BitSet::new(n_pairs);
    let mut cover = BitSet::new(n);
    for &i in selected {
        pairs.union_with(&masks.member_pairs[i]);
        cover.union_with(&masks.member_cover[i]);
    }
    if pairs != masks.target_pairs || cover != masks.target_cover {
        return false;
    }
    // Every member must contribute a pair or an element nobody else covers.
    selected.iter().all(|&i| {
        let mut other_pairs = BitSet::new(n_pairs);
        let mut other_cover = BitSet::new(n);
        for &j in selected {
            if j != i {
                other_pairs.union_with(&masks.member_pairs[j]);
                other_cover.union_with(&masks.member_cover[j]);
            }
        }
        !masks.member_pairs[i].is_subset(&other_pairs)
            || !masks.member_cover[i].is_subset(&other_cover)
    })
}

/// All canonical bases of `r`: subfamilies of its blocks that induce `r`
/// with every member necessary. The search is exhaustive over subfamilies;
/// `limit` bounds the number of candidates and trips
/// [`Error::SearchCapExceeded`] beyond it.
pub fn canonical_bases(r: &Tolerance, limit: u128) -> Result<Vec<Vec<Subset>>> {
    let family = blocks::blocks(r)?;
    let m = family.len();
    let space = if m >= 127 { u128::MAX } else { 1u128 << m };
    if space > limit {
        return Err(Error::SearchCapExceeded { space, limit });
    }
    let masks = pair_masks(r, family.blocks());
    let mut bases = Vec::new();
    for mask in 0u128..space {
        let selected: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        if base_mask_is_canonical(&masks, &selected) {
            bases.push(
                selected
                    .into_iter()
                    .map(|i| family.blocks()[i].clone())
                    .collect::<Vec<Subset>>(),
            );
        }
    }
    // Canonical order: members are already canonically sorted within the
    // block family, so compare base by member keys.
    bases.sort_by_cached_key(|base| {
        base.iter()
            .map(|s| s.canonical_key())
            .collect::<Vec<_>>()
    });
    Ok(bases)
}

/// The irredundant covering inducing `r`, when one exists: the deduplicated
/// upsets of the minimal elements of the neighborhood quasiorder. Absence
/// is a legitimate mathematical answer, hence the `Option`.
pub fn irredundant_covering_of(r: &Tolerance) -> Option<Covering> {
    let q = r.quasiorder();
    if !q.is_bounded_by_minimal() || q.tolerance() != *r {
        return None;
    }
    let upsets: Vec<Subset> = q.minimal_elements().indices().map(|m| q.upset_at(m)).collect();
    let covering = Covering::new_dedup(r.universe(), upsets)
        .expect("upsets of minimal elements cover a bounded universe");
    debug_assert!(covering.is_irredundant());
    debug_assert_eq!(covering.induced_tolerance(), *r);
    Some(covering)
}

/// Maximum universe size for the exhaustive covering search.
pub const COVERING_SEARCH_BOUND: usize = 4;

/// Decides by exhaustive search over all coverings whether some irredundant
/// covering induces `r`. Only feasible for tiny universes; serves as the
/// independent route in theorem verification.
pub fn find_irredundant_covering_by_search(r: &Tolerance) -> Result<Option<Covering>> {
    let n = r.len();
    if n > COVERING_SEARCH_BOUND {
        return Err(Error::UniverseTooLarge {
            n,
            max: COVERING_SEARCH_BOUND,
        });
    }
    for covering in crate::enumerate::all_coverings(r.universe())? {
        if covering.is_irredundant() && covering.induced_tolerance() == *r {
            return Ok(Some(covering));
        }
    }
    Ok(None)
}
