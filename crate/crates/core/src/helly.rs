//! Helly numbers of quasiordered sets and the verifiers tying them to
//! blocks, irredundant coverings, and normality.

use std::ops::ControlFlow;

use crate::blocks;
use crate::covering::{self, Covering};
use crate::error::{Error, Result};
use crate::quasiorder::Quasiorder;
use crate::report::EquivalenceReport;
use crate::tolerance::Tolerance;
use crate::universe::{sort_family, Subset, Universe};

/// Default universe bound for the brute-force Helly number search.
pub const DEFAULT_HELLY_BOUND: usize = 12;

/// Hard ceiling for the subset dynamic program inside [`helly_number`].
const HELLY_HARD_BOUND: usize = 20;

/// The distinct neighborhoods of a tolerance, partially ordered by
/// inclusion, together with the map sending each element to its
/// neighborhood. Comparing elements in the quasiorder is the same as
/// comparing their images here.
#[derive(Clone, Debug)]
pub struct NeighborhoodPoset {
    universe: Universe,
    sets: Vec<Subset>,
    image: Vec<usize>,
}

impl NeighborhoodPoset {
    pub fn of(r: &Tolerance) -> NeighborhoodPoset {
        let mut sets: Vec<Subset> = Vec::new();
        for x in 0..r.len() {
            let hood = r.neighborhood_at(x);
            if !sets.contains(&hood) {
                sets.push(hood);
            }
        }
        sort_family(&mut sets);
        let image = (0..r.len())
            .map(|x| {
                let hood = r.neighborhood_at(x);
                sets.iter().position(|s| *s == hood).expect("collected above")
            })
            .collect();
        NeighborhoodPoset {
            universe: r.universe().clone(),
            sets,
            image,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index into [`NeighborhoodPoset::sets`] of the neighborhood of the
    /// element with universe index `x`.
    pub fn image_index(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image_of(&self, x: usize) -> &Subset {
        &self.sets[self.image[x]]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.sets[i].is_subset_of(&self.sets[j])
    }

    /// Whether `sets[i]` is inclusion-minimal in the poset.
    pub fn is_minimal(&self, i: usize) -> bool {
        (0..self.sets.len()).all(|j| j == i || !self.leq(j, i))
    }

    pub fn minimal_sets(&self) -> Vec<&Subset> {
        (0..self.sets.len())
            .filter(|&i| self.is_minimal(i))
            .map(|i| &self.sets[i])
            .collect()
    }
}

/// The least `k` such that whenever every at-most-`k`-element subset of a
/// set `A` has a common lower bound, `A` itself has one. Computed by an
/// exhaustive dynamic program over all subsets, so the universe size is
/// bounded by `cap`. Always between 1 and the universe size.
pub fn helly_number(q: &Quasiorder, cap: usize) -> Result<usize> {
    let n = q.len();
    let max = cap.min(HELLY_HARD_BOUND);
    if n > max {
        return Err(Error::UniverseTooLarge { n, max });
    }
    let upsets: Vec<u32> = (0..n)
        .map(|z| {
            let mut mask = 0u32;
            for y in q.upset_at(z).indices() {
                mask |= 1 << y;
            }
            mask
        })
        .collect();
    let full = (1u32 << n) - 1;
    // min_bad[a] = smallest size of a subset of `a` without a lower bound.
    let mut min_bad = vec![usize::MAX; (full as usize) + 1];
    let mut worst = 0usize;
    for set in 1..=full {
        let has_bound = upsets.iter().any(|&up| set & !up == 0);
        let mut best = if has_bound {
            usize::MAX
        } else {
            set.count_ones() as usize
        };
        let mut rest = set;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            best = best.min(min_bad[(set ^ bit) as usize]);
        }
        min_bad[set as usize] = best;
        if !has_bound {
            worst = worst.max(best);
        }
    }
    Ok(worst.max(1))
}

/// Whether the Helly number of `q` is at most two. Decided by checking that
/// every block of the induced tolerance has a common lower bound, which
/// suffices because every preblock lies in a block. The block walk
/// short-circuits on the first unbounded block, so this stays cheap even
/// when the full block family would be enormous.
pub fn has_helly2(q: &Quasiorder) -> bool {
    let t = q.tolerance();
    let flow = blocks::visit_blocks(&t, &mut |block| {
        if q.lower_bound_of(block).is_some() {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    flow.is_continue()
}

/// The finite triple criterion: for every three distinct minimal elements
/// whose upsets pairwise intersect, some minimal element's upset must
/// contain the union of the three pairwise intersections. Agrees with
/// [`has_helly2`] on every finite quasiorder.
pub fn helly2_by_triples(q: &Quasiorder) -> bool {
    let minimal: Vec<usize> = q.minimal_elements().indices().collect();
    for (i, &a) in minimal.iter().enumerate() {
        for (j, &b) in minimal.iter().enumerate().skip(i + 1) {
            for &c in minimal.iter().skip(j + 1) {
                let ab = q.upset_at(a).intersection(&q.upset_at(b));
                let ac = q.upset_at(a).intersection(&q.upset_at(c));
                let bc = q.upset_at(b).intersection(&q.upset_at(c));
                if ab.is_empty() || ac.is_empty() || bc.is_empty() {
                    continue;
                }
                let union = ab.union(&ac).union(&bc);
                let covered = minimal
                    .iter()
                    .any(|&m| union.is_subset_of(&q.upset_at(m)));
                if !covered {
                    return false;
                }
            }
        }
    }
    true
}

/// Verifies the equivalence between "some irredundant covering induces the
/// tolerance" and "the neighborhood quasiorder is bounded by minimal
/// elements and the relation coincides with the common-lower-bound
/// product". The first side is decided by exhaustive covering search on
/// tiny universes and by construct-and-verify beyond that.
pub fn check_characterization(r: &Tolerance) -> EquivalenceReport {
    let induced = if r.len() <= covering::COVERING_SEARCH_BOUND {
        covering::find_irredundant_covering_by_search(r)
            .expect("bound checked")
            .is_some()
    } else {
        construct_and_verify(r)
    };
    let q = r.quasiorder();
    let bounded_and_product = q.is_bounded_by_minimal() && q.tolerance() == *r;
    EquivalenceReport::new(vec![
        ("induced_by_irredundant_covering", induced),
        ("bounded_and_coincides_with_product", bounded_and_product),
    ])
}

/// Builds the candidate covering from minimal-element upsets and verifies
/// directly that it is an irredundant covering inducing `r`.
fn construct_and_verify(r: &Tolerance) -> bool {
    let q = r.quasiorder();
    let upsets: Vec<Subset> = q
        .minimal_elements()
        .indices()
        .map(|m| q.upset_at(m))
        .collect();
    match Covering::new_dedup(r.universe(), upsets) {
        Ok(h) => h.is_irredundant() && h.induced_tolerance() == *r,
        Err(_) => false, // upsets do not even cover the universe
    }
}

/// Verifies the three-way equivalence for a quasiordered set: Helly number
/// at most two, blocks of the product tolerance being exactly the minimal
/// upsets, and those blocks forming an irredundant covering of a universe
/// bounded by minimal elements. Each side is evaluated independently.
pub fn check_helly_theorem(q: &Quasiorder) -> Result<EquivalenceReport> {
    let helly_two = has_helly2(q);

    let t = q.tolerance();
    let family = blocks::blocks(&t)?;
    let mut upsets: Vec<Subset> = Vec::new();
    for m in q.minimal_elements().indices() {
        let up = q.upset_at(m);
        if !upsets.contains(&up) {
            upsets.push(up);
        }
    }
    sort_family(&mut upsets);
    let blocks_are_upsets = family.blocks() == upsets.as_slice();

    let blocks_irredundant =
        family.to_covering().is_irredundant() && q.is_bounded_by_minimal();

    Ok(EquivalenceReport::new(vec![
        ("helly_number_at_most_two", helly_two),
        ("blocks_are_minimal_upsets", blocks_are_upsets),
        ("blocks_irredundant_and_bounded", blocks_irredundant),
    ]))
}

/// For a tolerance induced by an irredundant covering `H`, verifies the
/// four-way equivalence: `H` is the whole block family, `H` is normal, the
/// triple-intersection condition holds inside `H`, and the Helly number of
/// the neighborhood quasiorder is at most two. Errs when the precondition
/// fails, i.e. no irredundant covering induces `r`.
pub fn check_main_equivalence(r: &Tolerance) -> Result<EquivalenceReport> {
    let h = covering::irredundant_covering_of(r).ok_or(Error::NotIrredundantlyInduced)?;
    let family = blocks::blocks(r)?;

    let covers_all_blocks = h.sets() == family.blocks();
    let normal = h.is_normal()?;
    let triples = triple_intersection_condition(&h);
    let helly_two = has_helly2(&r.quasiorder());

    Ok(EquivalenceReport::new(vec![
        ("covering_is_block_family", covers_all_blocks),
        ("covering_is_normal", normal),
        ("triple_intersections_covered", triples),
        ("helly_number_at_most_two", helly_two),
    ]))
}

/// Whenever three distinct members pairwise intersect, some member must
/// contain the union of the three pairwise intersections.
fn triple_intersection_condition(h: &Covering) -> bool {
    let sets = h.sets();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate().skip(i + 1) {
            for c in sets.iter().skip(j + 1) {
                let ab = a.intersection(b);
                let ac = a.intersection(c);
                let bc = b.intersection(c);
                if ab.is_empty() || ac.is_empty() || bc.is_empty() {
                    continue;
                }
                let union = ab.union(&ac).union(&bc);
                if !sets.iter().any(|s| union.is_subset_of(s)) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::quasiorder::Quasiorder;

    fn two_chain() -> Quasiorder {
        let u = Universe::letters(2).unwrap();
        Quasiorder::from_pairs(&u, [("a", "b")], false).unwrap()
    }

    #[test]
    fn helly_number_examples() {
        assert_eq!(helly_number(&two_chain(), 12).unwrap(), 1);

        let u = Universe::letters(2).unwrap();
        assert_eq!(helly_number(&Quasiorder::antichain(&u), 12).unwrap(), 2);

        let t3 = fixtures::punctured_cube();
        assert_eq!(helly_number(&t3.quasiorder(), 12).unwrap(), 3);

        // Nonzero part of the four-element Boolean lattice: two atoms below
        // a common top.
        let v = Universe::new(["p", "q", "t"]).unwrap();
        let square = Quasiorder::from_pairs(&v, [("p", "t"), ("q", "t")], false).unwrap();
        assert_eq!(helly_number(&square, 12).unwrap(), 2);

        let big = Universe::letters(13).unwrap();
        assert_eq!(
            helly_number(&Quasiorder::antichain(&big), 12).unwrap_err(),
            Error::UniverseTooLarge { n: 13, max: 12 }
        );
    }

    #[test]
    fn helly2_examples() {
        assert!(has_helly2(&two_chain()));
        assert!(has_helly2(&fixtures::triangle_with_tail().quasiorder()));
        assert!(!has_helly2(&fixtures::punctured_cube().quasiorder()));
    }

    #[test]
    fn triples_examples() {
        // Fewer than three minimal elements: vacuous.
        assert!(helly2_by_triples(&two_chain()));
        assert!(helly2_by_triples(&fixtures::path_of_four().quasiorder()));

        assert!(!helly2_by_triples(&fixtures::punctured_cube().quasiorder()));
        let overlap = fixtures::overlap_tolerance(3).unwrap();
        assert!(!helly2_by_triples(&overlap.quasiorder()));
    }

    #[test]
    fn characterization_examples() {
        let u = Universe::letters(2).unwrap();
        let delta = Tolerance::identity(&u);
        let rep = check_characterization(&delta);
        assert!(rep.is_consistent() && rep.all_hold());

        let rep = check_characterization(&fixtures::triangle_with_tail());
        assert!(rep.is_consistent() && rep.all_hold());

        let rep = check_characterization(&fixtures::path_of_four());
        assert!(rep.is_consistent() && !rep.all_hold());

        // Above the search bound the construct-and-verify route is taken.
        let rep = check_characterization(&fixtures::punctured_cube());
        assert!(rep.is_consistent() && rep.all_hold());
        let rep = check_characterization(&fixtures::overlap_tolerance(3).unwrap());
        assert!(rep.is_consistent() && rep.all_hold());
    }

    #[test]
    fn helly_theorem_examples() {
        let u = Universe::letters(3).unwrap();
        let rep = check_helly_theorem(&Quasiorder::antichain(&u)).unwrap();
        assert!(rep.is_consistent() && rep.all_hold());

        let rep = check_helly_theorem(&fixtures::triangle_with_tail().quasiorder()).unwrap();
        assert!(rep.is_consistent() && rep.all_hold());

        let rep = check_helly_theorem(&fixtures::punctured_cube().quasiorder()).unwrap();
        assert!(rep.is_consistent() && !rep.all_hold());
    }

    #[test]
    fn main_equivalence_examples() {
        let u = Universe::letters(2).unwrap();
        let rep = check_main_equivalence(&Tolerance::identity(&u)).unwrap();
        assert!(rep.is_consistent() && rep.all_hold());

        let rep = check_main_equivalence(&fixtures::triangle_with_tail()).unwrap();
        assert!(rep.is_consistent() && rep.all_hold());

        let rep = check_main_equivalence(&fixtures::punctured_cube()).unwrap();
        assert!(rep.is_consistent() && !rep.all_hold());

        assert_eq!(
            check_main_equivalence(&fixtures::path_of_four()).unwrap_err(),
            Error::NotIrredundantlyInduced
        );
    }

    #[test]
    fn neighborhood_poset_transfer() {
        for t in [
            fixtures::triangle_with_tail(),
            fixtures::path_of_four(),
            fixtures::punctured_cube(),
        ] {
            let poset = NeighborhoodPoset::of(&t);
            let q = t.quasiorder();
            let minimal = q.minimal_elements();
            for x in 0..t.len() {
                assert_eq!(poset.image_of(x), &t.neighborhood_at(x));
                assert_eq!(
                    minimal.contains_index(x),
                    poset.is_minimal(poset.image_index(x)),
                    "transfer of minimality failed at index {x}"
                );
                for y in 0..t.len() {
                    assert_eq!(
                        q.leq_at(x, y),
                        poset.leq(poset.image_index(x), poset.image_index(y))
                    );
                }
            }
        }
    }

    #[test]
    fn neighborhood_poset_of_path() {
        let poset = NeighborhoodPoset::of(&fixtures::path_of_four());
        assert_eq!(poset.len(), 4);
        assert_eq!(poset.minimal_sets().len(), 2);
    }
}
