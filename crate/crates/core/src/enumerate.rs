//! Exhaustive generators for small relational structures, plus seeded
//! random tolerances. These feed the theorem-verification suites, so they
//! favor obvious correctness over cleverness.

use rand::Rng;

use crate::bitset::BitSet;
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::finite_lattice::FiniteLattice;
use crate::quasiorder::Quasiorder;
use crate::tolerance::Tolerance;
use crate::universe::{Subset, Universe};

/// Bound on exhaustive tolerance enumeration: 2^(n choose 2) relations.
pub const MAX_TOLERANCE_N: usize = 6;
/// Bound on exhaustive quasiorder enumeration: filters 2^(n²-n) candidates.
pub const MAX_QUASIORDER_N: usize = 5;
/// Bound on exhaustive covering enumeration: 2^(2^n - 1) families.
pub const MAX_COVERING_N: usize = 4;
/// Bound on poset enumeration for distributive-lattice generation.
pub const MAX_POSET_N: usize = 5;

/// Every tolerance on the universe, one per subset of the strict pairs.
pub fn all_tolerances(universe: &Universe) -> Result<impl Iterator<Item = Tolerance>> {
    let n = universe.len();
    if n > MAX_TOLERANCE_N {
        return Err(Error::UniverseTooLarge {
            n,
            max: MAX_TOLERANCE_N,
        });
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    let universe = universe.clone();
    Ok((0u64..(1u64 << pairs.len())).map(move |mask| {
        let mut rows: Vec<BitSet> = (0..n).map(|i| BitSet::singleton(n, i)).collect();
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
        Tolerance::from_rows(&universe, rows)
    }))
}

/// Every quasiorder on the universe, found by filtering all reflexive
/// relations for transitivity. Known counts (1, 4, 29, 355, 6942 for
/// n = 1..=5) are asserted in tests.
pub fn all_quasiorders(universe: &Universe) -> Result<Vec<Quasiorder>> {
    let n = universe.len();
    if n > MAX_QUASIORDER_N {
        return Err(Error::UniverseTooLarge {
            n,
            max: MAX_QUASIORDER_N,
        });
    }
    let mut off_diagonal = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off_diagonal.push((i, j));
            }
        }
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << off_diagonal.len()) {
        let mut rows = vec![0u32; n];
        for (i, row) in rows.iter_mut().enumerate() {
            *row = 1 << i;
        }
        for (bit, &(i, j)) in off_diagonal.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                rows[i] |= 1 << j;
            }
        }
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| rows[i] & (1 << j) == 0 || rows[j] & !rows[i] == 0)
        });
        if transitive {
            let up = rows
                .iter()
                .map(|&row| {
                    let mut set = BitSet::new(n);
                    for j in 0..n {
                        if row & (1 << j) != 0 {
                            set.insert(j);
                        }
                    }
                    set
                })
                .collect();
            out.push(Quasiorder::from_upsets(universe, up));
        }
    }
    Ok(out)
}

/// Every covering of the universe: every family of distinct nonempty
/// subsets whose union is everything.
pub fn all_coverings(universe: &Universe) -> Result<impl Iterator<Item = Covering>> {
    let n = universe.len();
    if n > MAX_COVERING_N {
        return Err(Error::UniverseTooLarge {
            n,
            max: MAX_COVERING_N,
        });
    }
    let subsets = (1u32 << n) - 1; // nonempty subsets, encoded 1..=subsets
    let universe = universe.clone();
    let full = subsets;
    Ok((1u64..(1u64 << subsets)).filter_map(move |family_mask| {
        let mut union = 0u32;
        for k in 0..subsets {
            if family_mask & (1 << k) != 0 {
                union |= k + 1;
            }
        }
        if union != full {
            return None;
        }
        let members: Vec<Subset> = (0..subsets)
            .filter(|&k| family_mask & (1 << k) != 0)
            .map(|k| {
                Subset::from_indices(
                    &universe,
                    (0..n).filter(|&i| (k + 1) & (1 << i) != 0),
                )
            })
            .collect();
        Some(Covering::new(&universe, members).expect("members are nonempty, distinct, covering"))
    }))
}

/// All partial orders on `n` labeled points, as upset masks (bit `j` of
/// row `i` means `i ≤ j`). With `up_to_iso`, one representative per
/// isomorphism class.
pub(crate) fn all_posets(n: usize, up_to_iso: bool) -> Vec<Vec<u32>> {
    assert!(n <= MAX_POSET_N, "poset enumeration bound exceeded");
    let mut off_diagonal = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off_diagonal.push((i, j));
            }
        }
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << off_diagonal.len()) {
        let mut rows = vec![0u32; n];
        for (i, row) in rows.iter_mut().enumerate() {
            *row = 1 << i;
        }
        for (bit, &(i, j)) in off_diagonal.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                rows[i] |= 1 << j;
            }
        }
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| rows[i] & (1 << j) == 0 || rows[j] & !rows[i] == 0)
        });
        let antisymmetric = (0..n).all(|i| {
            (0..n).all(|j| i == j || rows[i] & (1 << j) == 0 || rows[j] & (1 << i) == 0)
        });
        if !(transitive && antisymmetric) {
            continue;
        }
        if up_to_iso && canonical_form(&rows) != flatten(&rows) {
            continue;
        }
        out.push(rows);
    }
    out
}

fn flatten(rows: &[u32]) -> u64 {
    let n = rows.len();
    let mut out = 0u64;
    for (i, &row) in rows.iter().enumerate() {
        for j in 0..n {
            if row & (1 << j) != 0 {
                out |= 1 << (i * n + j);
            }
        }
    }
    out
}

/// Smallest flattened matrix over all relabelings.
fn canonical_form(rows: &[u32]) -> u64 {
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let relabeled: Vec<u32> = (0..n)
            .map(|i| {
                let mut row = 0u32;
                for j in 0..n {
                    if rows[p[i]] & (1 << p[j]) != 0 {
                        row |= 1 << j;
                    }
                }
                row
            })
            .collect();
        best = best.min(flatten(&relabeled));
    });
    best
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Downset lattices of all posets with exactly `poset_size` elements, one
/// per poset isomorphism class. These exhaust the distributive lattices
/// representable at this scale.
pub fn downset_lattices(poset_size: usize) -> Result<Vec<FiniteLattice>> {
    if poset_size == 0 || poset_size > MAX_POSET_N {
        return Err(Error::UniverseTooLarge {
            n: poset_size,
            max: MAX_POSET_N,
        });
    }
    let labels: Vec<String> = Universe::letters(poset_size)?.labels().to_vec();
    Ok(all_posets(poset_size, true)
        .into_iter()
        .map(|rows| {
            let up = rows
                .iter()
                .map(|&row| {
                    let mut set = BitSet::new(poset_size);
                    for j in 0..poset_size {
                        if row & (1 << j) != 0 {
                            set.insert(j);
                        }
                    }
                    set
                })
                .collect::<Vec<_>>();
            FiniteLattice::downsets(&labels, &up)
        })
        .collect())
}

/// A random tolerance with each strict pair related independently with
/// probability `edge_prob`.
pub fn random_tolerance(rng: &mut impl Rng, universe: &Universe, edge_prob: f64) -> Tolerance {
    let n = universe.len();
    let mut rows: Vec<BitSet> = (0..n).map(|i| BitSet::singleton(n, i)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(edge_prob) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    Tolerance::from_rows(universe, rows)
}
