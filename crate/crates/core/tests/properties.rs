//! Cross-module invariants, checked exhaustively on tiny universes and by
//! property testing on random instances.

use proptest::prelude::*;

use tolrel::{
    all_coverings, all_quasiorders, all_tolerances, blocks, canonical_bases,
    check_characterization, find_irredundant_covering_by_search, fixture, has_helly2,
    helly2_by_triples, helly_number, irredundant_covering_of, is_block, is_canonical_base,
    is_preblock, neighborhood_block_report, random_tolerance, upper_definable, Covering, Subset,
    Tolerance, Universe, DEFAULT_BASE_SEARCH_LIMIT,
};

fn tolerance_from_mask(n: usize, mask: u64) -> Tolerance {
    let u = Universe::letters(n).unwrap();
    let labels = u.labels().to_vec();
    let mut pairs = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if mask & (1 << bit) != 0 {
                pairs.push((i, j));
            }
            bit += 1;
        }
    }
    let edges: Vec<(&str, &str)> = pairs
        .iter()
        .map(|&(i, j)| (labels[i].as_str(), labels[j].as_str()))
        .collect();
    Tolerance::from_edges(&u, edges, true).unwrap()
}

fn subset_from_mask(u: &Universe, mask: u32) -> Subset {
    Subset::from_indices(u, (0..u.len()).filter(|i| mask & (1 << i) != 0))
}

proptest! {
    #[test]
    fn approximation_laws(n in 1usize..=8, mask in any::<u64>(), xm in any::<u32>(), ym in any::<u32>()) {
        let t = tolerance_from_mask(n, mask);
        let u = t.universe().clone();
        let x = subset_from_mask(&u, xm & ((1 << n) - 1));
        let y = subset_from_mask(&u, ym & ((1 << n) - 1));

        let upper = t.upper_approx(&x).unwrap();
        let lower = t.lower_approx(&x).unwrap();

        // Union form of the upper approximation.
        let mut union = Subset::empty(&u);
        for i in x.indices() {
            union = union.union(&t.neighborhood_at(i));
        }
        prop_assert_eq!(&upper, &union);

        // Duality.
        prop_assert_eq!(&lower, &t.upper_approx(&x.complement()).unwrap().complement());

        // Sandwich.
        prop_assert!(lower.is_subset_of(&x));
        prop_assert!(x.is_subset_of(&upper));

        // Monotonicity.
        let xy = x.union(&y);
        prop_assert!(upper.is_subset_of(&t.upper_approx(&xy).unwrap()));
        prop_assert!(lower.is_subset_of(&t.lower_approx(&xy).unwrap()));
    }

    #[test]
    fn product_tolerance_membership_formula(n in 1usize..=7, mask in any::<u64>()) {
        let t = tolerance_from_mask(n, mask);
        let q = t.quasiorder();
        let approx = q.tolerance();
        for x in 0..n {
            for y in 0..n {
                // Reflexive and symmetric.
                prop_assert!(approx.related_at(x, x));
                prop_assert_eq!(approx.related_at(x, y), approx.related_at(y, x));
                // Membership matches the witness formula.
                let witness = (0..n).any(|a| {
                    t.neighborhood_at(a)
                        .is_subset_of(&t.neighborhood_at(x).intersection(&t.neighborhood_at(y)))
                });
                prop_assert_eq!(approx.related_at(x, y), witness);
            }
        }
    }

    #[test]
    fn upsets_are_preblocks_of_the_product(n in 1usize..=7, mask in any::<u64>()) {
        let t = tolerance_from_mask(n, mask);
        let q = t.quasiorder();
        let approx = q.tolerance();
        for x in 0..n {
            prop_assert!(is_preblock(&approx, &q.upset_at(x)).unwrap());
        }
    }

    #[test]
    fn every_preblock_extends_to_a_block(n in 1usize..=6, mask in any::<u64>(), xm in any::<u32>()) {
        let t = tolerance_from_mask(n, mask);
        // Greedily thin a random subset into a preblock.
        let seed = subset_from_mask(t.universe(), (xm | 1) & ((1 << n) - 1));
        let mut kept: Vec<usize> = Vec::new();
        for i in seed.indices() {
            if kept.iter().all(|&j| t.related_at(i, j)) {
                kept.push(i);
            }
        }
        let x = Subset::from_indices(t.universe(), kept);
        prop_assert!(is_preblock(&t, &x).unwrap());
        let family = blocks(&t).unwrap();
        prop_assert!(family.iter().any(|b| x.is_subset_of(b)));
    }

    #[test]
    fn helly_routes_agree_on_random_instances(n in 1usize..=8, mask in any::<u64>()) {
        let q = tolerance_from_mask(n, mask).quasiorder();
        let two = has_helly2(&q);
        prop_assert_eq!(two, helly2_by_triples(&q));
        prop_assert_eq!(two, helly_number(&q, 8).unwrap() <= 2);
    }

    #[test]
    fn sampled_coverings_keep_d1_d2_equivalent(member_masks in prop::collection::vec(1u32..32, 1..7)) {
        // Size-5 universes are beyond the exhaustive sweep; sample instead.
        let u = Universe::letters(5).unwrap();
        let mut sets: Vec<Subset> = member_masks
            .iter()
            .map(|&m| subset_from_mask(&u, m))
            .collect();
        let mut union = Subset::empty(&u);
        for s in &sets {
            union = union.union(s);
        }
        sets.push(union.complement().union(&subset_from_mask(&u, 1)));
        let covering = Covering::new_dedup(&u, sets).unwrap();
        let induced = covering.induced_tolerance();
        prop_assert_eq!(
            covering.is_irredundant(),
            covering.is_neighborhood_family(&induced).unwrap()
        );
        // Irredundant coverings consist of blocks of their induced relation.
        if covering.is_irredundant() {
            for member in covering.iter() {
                prop_assert!(is_block(&induced, member).unwrap());
            }
        }
    }
}

#[test]
fn quasiorder_axioms_exhaustive() {
    for n in 1..=4 {
        let u = Universe::letters(n).unwrap();
        for t in all_tolerances(&u).unwrap() {
            let q = t.quasiorder();
            for x in 0..n {
                assert!(q.leq_at(x, x));
                for y in 0..n {
                    for z in 0..n {
                        if q.leq_at(x, y) && q.leq_at(y, z) {
                            assert!(q.leq_at(x, z));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn block_reconstruction_exhaustive() {
    // Every tolerance is the union of the squares of its blocks.
    for n in 1..=5 {
        let u = Universe::letters(n).unwrap();
        for t in all_tolerances(&u).unwrap() {
            let family = blocks(&t).unwrap();
            let rebuilt =
                tolrel::tolerance_from_blocks(t.universe(), family.blocks()).unwrap();
            assert_eq!(rebuilt, t);
        }
    }
}

#[test]
fn block_report_consistent_exhaustive() {
    for n in 1..=4 {
        let u = Universe::letters(n).unwrap();
        let labels = u.labels().to_vec();
        for t in all_tolerances(&u).unwrap() {
            for label in &labels {
                let report = neighborhood_block_report(&t, label).unwrap();
                assert!(report.is_consistent(), "{t:?} at {label}");
            }
        }
    }
}

#[test]
fn minimal_elements_are_block_neighborhoods_for_induced_tolerances() {
    // When an irredundant covering induces the relation, the minimal
    // elements are exactly those whose neighborhood is a block.
    for n in 1..=4 {
        let u = Universe::letters(n).unwrap();
        for t in all_tolerances(&u).unwrap() {
            if irredundant_covering_of(&t).is_none() {
                continue;
            }
            let q = t.quasiorder();
            let minimal = q.minimal_elements();
            for x in 0..n {
                let hood_is_block = is_block(&t, &t.neighborhood_at(x)).unwrap();
                assert_eq!(minimal.contains_index(x), hood_is_block);
            }
        }
    }
}

#[test]
fn extraction_agrees_with_exhaustive_search() {
    for n in 1..=4 {
        let u = Universe::letters(n).unwrap();
        for t in all_tolerances(&u).unwrap() {
            let constructed = irredundant_covering_of(&t);
            let searched = find_irredundant_covering_by_search(&t).unwrap();
            assert_eq!(constructed.is_some(), searched.is_some(), "{t:?}");
            if let Some(h) = constructed {
                assert!(h.is_irredundant());
                assert_eq!(h.induced_tolerance(), t);
                // Neighborhoods decompose into members of the covering.
                for x in 0..n {
                    let hood = t.neighborhood_at(x);
                    let mut union = Subset::empty(t.universe());
                    for member in h.iter() {
                        if member.is_subset_of(&hood) {
                            union = union.union(member);
                        }
                    }
                    assert_eq!(union, hood, "{t:?} neighborhood of index {x}");
                }
            }
        }
    }
}

#[test]
fn unique_base_equivalence_exhaustive() {
    // For a subfamily of blocks inducing the relation: irredundance holds
    // exactly when the subfamily is the unique canonical base and a
    // neighborhood family.
    for n in 1..=4 {
        let u = Universe::letters(n).unwrap();
        for t in all_tolerances(&u).unwrap() {
            let family = blocks(&t).unwrap();
            let m = family.len();
            let bases = canonical_bases(&t, DEFAULT_BASE_SEARCH_LIMIT).unwrap();
            for mask in 1u32..(1 << m) {
                let sub: Vec<Subset> = (0..m)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| family.blocks()[i].clone())
                    .collect();
                let covers = {
                    let mut union = Subset::empty(t.universe());
                    for s in &sub {
                        union = union.union(s);
                    }
                    union == Subset::full(t.universe())
                };
                if !covers {
                    continue;
                }
                let h = Covering::new(t.universe(), sub.clone()).unwrap();
                if h.induced_tolerance() != t {
                    continue;
                }
                let lhs = h.is_irredundant();
                let rhs = bases.len() == 1
                    && bases[0] == h.sets().to_vec()
                    && h.is_neighborhood_family(&t).unwrap();
                assert_eq!(lhs, rhs, "{t:?} with subfamily {h}");
            }
        }
    }
}

#[test]
fn canonical_base_predicate_matches_search() {
    for n in 1..=4 {
        let u = Universe::letters(n).unwrap();
        for t in all_tolerances(&u).unwrap() {
            let bases = canonical_bases(&t, DEFAULT_BASE_SEARCH_LIMIT).unwrap();
            for base in &bases {
                assert!(is_canonical_base(base, &t).unwrap());
            }
            // At least one canonical base always exists.
            assert!(!bases.is_empty(), "{t:?}");
        }
    }
}

#[test]
fn normality_oracle_agrees_exhaustive() {
    for n in 1..=4 {
        let u = Universe::letters(n).unwrap();
        for covering in all_coverings(&u).unwrap() {
            assert_eq!(
                covering.is_normal().unwrap(),
                covering.normality_oracle().unwrap(),
                "normality routes disagree on {covering}"
            );
        }
    }
}

#[test]
fn irredundant_members_are_blocks_exhaustive() {
    for n in 1..=4 {
        let u = Universe::letters(n).unwrap();
        for covering in all_coverings(&u).unwrap() {
            if !covering.is_irredundant() {
                continue;
            }
            let induced = covering.induced_tolerance();
            for member in covering.iter() {
                assert!(
                    is_block(&induced, member).unwrap(),
                    "member {member} of irredundant {covering} is not a block"
                );
            }
        }
    }
}

#[test]
fn concept_lattices_are_ortholattices_exhaustive() {
    for n in 1..=3 {
        let u = Universe::letters(n).unwrap();
        for t in all_tolerances(&u).unwrap() {
            let extents = tolrel::concept_extent_lattice(&t);
            assert!(extents.is_ortholattice().unwrap(), "{t:?}");
        }
    }
}

#[test]
fn definable_join_is_union_exhaustive() {
    for n in 1..=3 {
        let u = Universe::letters(n).unwrap();
        for t in all_tolerances(&u).unwrap() {
            let upper = upper_definable(&t);
            for i in 0..upper.len() {
                for j in 0..upper.len() {
                    let k = upper.join_index(i, j).unwrap();
                    assert_eq!(*upper.member(k), upper.member(i).union(upper.member(j)));
                }
            }
        }
    }
}

#[test]
fn neighborhoods_decompose_into_covering_members() {
    // The neighborhood of every element of an irredundantly-induced
    // tolerance is a union of covering members.
    let t = fixture::punctured_cube();
    let h = fixture::punctured_cube_covering();
    for x in 0..t.len() {
        let hood = t.neighborhood_at(x);
        let mut union = Subset::empty(t.universe());
        for member in h.iter() {
            if member.is_subset_of(&hood) {
                union = union.union(member);
            }
        }
        assert_eq!(union, hood);
    }
}

#[test]
fn characterization_check_respects_quasiorder_count() {
    // Cross-module sanity: consistent reports on every quasiorder-derived
    // tolerance of four elements.
    let u = Universe::letters(4).unwrap();
    for q in all_quasiorders(&u).unwrap() {
        let report = check_characterization(&q.tolerance());
        assert!(report.is_consistent());
    }
}

#[test]
fn random_helly_routes_on_larger_universes() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    for _ in 0..60 {
        let u = Universe::letters(8).unwrap();
        let t = random_tolerance(&mut rng, &u, 0.45);
        let q = t.quasiorder();
        let two = has_helly2(&q);
        assert_eq!(two, helly2_by_triples(&q));
        assert_eq!(two, helly_number(&q, 8).unwrap() <= 2);
    }
}
