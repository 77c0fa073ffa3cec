//! Small named relations used throughout the tests, the verification
//! suites, and the documentation. Each is pinned by structural facts that
//! the test suite re-derives, so a typo here cannot survive.

use crate::covering::Covering;
use crate::error::Result;
use crate::tolerance::Tolerance;
use crate::universe::{Subset, Universe};

/// A triangle `{a, b, c}` with the tail edge `c — d`.
///
/// The neighborhoods of `a`, `b`, and `d` are cliques, so those three
/// elements are minimal in the neighborhood quasiorder; the blocks are
/// `{a,b,c}` and `{c,d}`, and together they form an irredundant covering
/// inducing the relation back.
pub fn triangle_with_tail() -> Tolerance {
    let u = Universe::letters(4).expect("four letters");
    Tolerance::from_edges(&u, [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d")], true)
        .expect("edges are in range")
}

/// The irredundant covering `{{a,b,c}, {c,d}}` inducing
/// [`triangle_with_tail`].
pub fn triangle_with_tail_covering() -> Covering {
    let t = triangle_with_tail();
    Covering::from_labels(t.universe(), &[&["a", "b", "c"], &["c", "d"]])
        .expect("covers the four letters")
}

/// The path `a — b — c — d`.
///
/// Its three blocks `{a,b}`, `{b,c}`, `{c,d}` form the unique canonical
/// base, yet no irredundant covering induces the relation: `b` and `c` are
/// related but no neighborhood fits inside both of theirs.
pub fn path_of_four() -> Tolerance {
    let u = Universe::letters(4).expect("four letters");
    Tolerance::from_edges(&u, [("a", "b"), ("b", "c"), ("c", "d")], true)
        .expect("edges are in range")
}

/// A seven-element tolerance whose neighborhood quasiorder is the Boolean
/// lattice on three atoms with the least element removed: minimal elements
/// `a`, `c`, `g` (the atoms), top `d`, and coatoms `b`, `e`, `f`.
///
/// It is induced by the irredundant covering of the three principal upsets
/// (see [`punctured_cube_covering`]), whose pairwise intersections are
/// `{b,d}`, `{d,e}`, and `{d,f}`. The union `{b,d,e,f}` of those
/// intersections lies in no member and is the one block outside the
/// covering, which is why the Helly number here is three, not two.
pub fn punctured_cube() -> Tolerance {
    punctured_cube_covering().induced_tolerance()
}

/// The covering `{{a,b,d,e}, {b,c,d,f}, {d,e,f,g}}` of the seven-element
/// universe: the upsets of the three minimal elements of
/// [`punctured_cube`].
pub fn punctured_cube_covering() -> Covering {
    let u = Universe::letters(7).expect("seven letters");
    Covering::from_labels(
        &u,
        &[
            &["a", "b", "d", "e"],
            &["b", "c", "d", "f"],
            &["d", "e", "f", "g"],
        ],
    )
    .expect("the three upsets cover all seven elements")
}

/// Labels for the nonempty subsets of `{1, ..., n}`: digit strings in
/// binary-mask order, e.g. `1, 2, 12, 3, 13, 23, 123` for `n = 3`.
fn subset_labels(n: usize) -> Vec<String> {
    assert!(n <= 9, "digit labels support at most 9 points");
    (1u32..(1 << n))
        .map(|mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| (i + 1).to_string())
                .collect::<String>()
        })
        .collect()
}

/// The overlap tolerance on the nonempty subsets of `{1, ..., n}`: two
/// subsets are related exactly when they intersect.
pub fn overlap_tolerance(n: usize) -> Result<Tolerance> {
    let universe = Universe::new(subset_labels(n))?;
    let masks: Vec<u32> = (1..(1u32 << n)).collect();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); masks.len()];
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            if a & b != 0 {
                rows[i].push(j);
            }
        }
    }
    let labels = universe.labels().to_vec();
    let mut pairs = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for &j in row {
            if j > i {
                pairs.push((labels[i].as_str(), labels[j].as_str()));
            }
        }
    }
    Tolerance::from_edges(&universe, pairs, true)
}

/// The point filters of `{1, ..., n}` viewed as a covering: the n-th member
/// holds every subset containing `n`. Each member is the neighborhood of
/// the singleton `{n}`, so the covering is irredundant and induces the
/// overlap tolerance.
pub fn point_filter_covering(n: usize) -> Result<Covering> {
    let universe = Universe::new(subset_labels(n))?;
    let masks: Vec<u32> = (1..(1u32 << n)).collect();
    let members = (0..n).map(|point| {
        Subset::from_indices(
            &universe,
            masks
                .iter()
                .enumerate()
                .filter(|(_, &m)| m & (1 << point) != 0)
                .map(|(i, _)| i),
        )
    });
    Covering::new(&universe, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks;

    #[test]
    fn subset_labels_for_three_points() {
        assert_eq!(
            subset_labels(3),
            vec!["1", "2", "12", "3", "13", "23", "123"]
        );
    }

    #[test]
    fn punctured_cube_reconstruction_facts() {
        // Every structural fact pinning the fixture, re-derived.
        let t = punctured_cube();
        let q = t.quasiorder();
        assert_eq!(q.minimal_elements().labels(), vec!["a", "c", "g"]);
        assert!(q.is_bounded_by_minimal());
        assert_eq!(q.tolerance(), t);

        let up_a = q.upset("a").unwrap();
        let up_c = q.upset("c").unwrap();
        let up_g = q.upset("g").unwrap();
        assert_eq!(up_a.intersection(&up_c).labels(), vec!["b", "d"]);
        assert_eq!(up_a.intersection(&up_g).labels(), vec!["d", "e"]);
        assert_eq!(up_c.intersection(&up_g).labels(), vec!["d", "f"]);

        let family = blocks::blocks(&t).unwrap();
        assert_eq!(family.len(), 4);
        let h = punctured_cube_covering();
        let outside: Vec<_> = family.iter().filter(|b| !h.contains(b)).collect();
        assert_eq!(outside.len(), 1);
        assert_eq!(outside[0].labels(), vec!["b", "d", "e", "f"]);

        // The neighborhood of each minimal element is its upset.
        for m in ["a", "c", "g"] {
            assert_eq!(t.neighborhood(m).unwrap(), q.upset(m).unwrap());
        }
    }

    #[test]
    fn point_filters_are_neighborhoods_of_singletons() {
        let h = point_filter_covering(3).unwrap();
        let t = overlap_tolerance(3).unwrap();
        assert_eq!(h.induced_tolerance(), t);
        assert_eq!(h.len(), 3);
        // Canonical member order lines up with the singleton labels.
        for (point, member) in ["1", "2", "3"].iter().zip(h.iter()) {
            assert_eq!(*member, t.neighborhood(point).unwrap());
        }
        assert!(h.is_irredundant());
    }

    #[test]
    fn overlap_tolerance_small_cases() {
        let t1 = overlap_tolerance(1).unwrap();
        assert_eq!(t1.len(), 1);
        let t2 = overlap_tolerance(2).unwrap();
        assert_eq!(t2.len(), 3);
        assert!(!t2.related("1", "2").unwrap());
        assert!(t2.related("1", "12").unwrap());
        assert!(t2.related("2", "12").unwrap());
    }
}
