//! Abstract finite lattices given by their order relation, the tolerance a
//! lattice induces on its nonzero part, and the two-atom criterion for
//! distributive lattices.

use std::fmt;

use crate::bitset::BitSet;
use crate::blocks;
use crate::error::{Error, Result};
use crate::helly::has_helly2;
use crate::quasiorder::Quasiorder;
use crate::report::EquivalenceReport;
use crate::tolerance::Tolerance;
use crate::universe::{sort_family, Subset, Universe};

/// A finite lattice: a partial order in which every pair of elements has a
/// least upper bound and a greatest lower bound (hence a least and a
/// greatest element). Join and meet tables are precomputed.
#[derive(Clone)]
pub struct FiniteLattice {
    labels: Vec<String>,
    /// `up[x] = {y | x ≤ y}`.
    up: Vec<BitSet>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds a lattice from Hasse-style cover pairs `(lower, upper)`. The
    /// reflexive-transitive closure is applied, then all lattice axioms are
    /// validated.
    pub fn from_covers<'a, I, S>(labels: &[S], covers: I) -> Result<FiniteLattice>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
        S: AsRef<str>,
    {
        let universe = Universe::new(labels.iter().map(|s| s.as_ref().to_string()))?;
        let n = universe.len();
        let mut up: Vec<BitSet> = (0..n).map(|i| BitSet::singleton(n, i)).collect();
        for (x, y) in covers {
            let i = universe.resolve(x)?;
            let j = universe.resolve(y)?;
            up[i].insert(j);
        }
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    let row = up[k].clone();
                    up[i].union_with(&row);
                }
            }
        }
        FiniteLattice::from_leq(universe.labels().to_vec(), up)
    }

    pub(crate) fn from_leq(labels: Vec<String>, up: Vec<BitSet>) -> Result<FiniteLattice> {
        let n = labels.len();
        for i in 0..n {
            for j in up[i].iter() {
                if i != j && up[j].contains(i) {
                    return Err(Error::NotAntisymmetric {
                        x: labels[i].clone(),
                        y: labels[j].clone(),
                    });
                }
                if !up[j].is_subset(&up[i]) {
                    let k = up[j].difference(&up[i]).first().unwrap();
                    return Err(Error::NotTransitive {
                        x: labels[i].clone(),
                        y: labels[j].clone(),
                        z: labels[k].clone(),
                    });
                }
            }
        }
        let mut join = vec![0usize; n * n];
        let mut meet = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let l = unique_least(&up, i, j).ok_or_else(|| {
                    Error::NotALattice(format!(
                        "`{}` and `{}` have no least upper bound",
                        labels[i], labels[j]
                    ))
                })?;
                join[i * n + j] = l;
                let g = unique_greatest(&up, i, j).ok_or_else(|| {
                    Error::NotALattice(format!(
                        "`{}` and `{}` have no greatest lower bound",
                        labels[i], labels[j]
                    ))
                })?;
                meet[i * n + j] = g;
            }
        }
        let mut bottom = 0;
        let mut top = 0;
        for i in 0..n {
            bottom = meet[bottom * n + i];
            top = join[top * n + i];
        }
        Ok(FiniteLattice {
            labels,
            up,
            join,
            meet,
            bottom,
            top,
        })
    }

    /// The Boolean lattice of all subsets of `{1, ..., atoms}`, labeled
    /// `{}`, `{1}`, `{1,2}`, ...
    pub fn boolean(atoms: usize) -> FiniteLattice {
        assert!(atoms <= 10, "boolean lattice of 2^{atoms} elements");
        let n = 1usize << atoms;
        let labels: Vec<String> = (0..n).map(mask_label).collect();
        let up = (0..n)
            .map(|mask| {
                let mut row = BitSet::new(n);
                for other in 0..n {
                    if mask & !other == 0 {
                        row.insert(other);
                    }
                }
                row
            })
            .collect();
        FiniteLattice::from_leq(labels, up).expect("subset order is a lattice")
    }

    /// A chain of `n` elements labeled `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Result<FiniteLattice> {
        if n == 0 {
            return Err(Error::EmptyUniverse);
        }
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let up = (0..n)
            .map(|i| {
                let mut row = BitSet::new(n);
                for j in i..n {
                    row.insert(j);
                }
                row
            })
            .collect();
        FiniteLattice::from_leq(labels, up)
    }

    /// The lattice of downsets of a poset given by its upset rows, ordered
    /// by inclusion. Always distributive.
    pub(crate) fn downsets(element_labels: &[String], up: &[BitSet]) -> FiniteLattice {
        let k = element_labels.len();
        assert!(k <= 16, "downset lattice of 2^{k} elements");
        let mut downsets: Vec<u32> = Vec::new();
        for mask in 0u32..(1 << k) {
            let closed = (0..k).all(|x| {
                mask & (1 << x) == 0 || {
                    // everything below x must be present
                    (0..k).all(|y| !up[y].contains(x) || mask & (1 << y) != 0)
                }
            });
            if closed {
                downsets.push(mask);
            }
        }
        let labels: Vec<String> = downsets
            .iter()
            .map(|&mask| {
                let names: Vec<&str> = (0..k)
                    .filter(|&x| mask & (1 << x) != 0)
                    .map(|x| element_labels[x].as_str())
                    .collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        let m = downsets.len();
        let rows = (0..m)
            .map(|i| {
                let mut row = BitSet::new(m);
                for j in 0..m {
                    if downsets[i] & !downsets[j] == 0 {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        FiniteLattice::from_leq(labels, rows).expect("downsets form a lattice")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq_at(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn join_at(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    pub fn meet_at(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| {
                a != self.bottom
                    && (0..self.len())
                        .all(|x| x == a || x == self.bottom || !self.leq_at(x, a))
            })
            .collect()
    }

    /// Checks `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` over all triples.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet_at(x, self.join_at(y, z));
                    let rhs = self.join_at(self.meet_at(x, y), self.meet_at(x, z));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Cover pairs `(lower, upper)` of the Hasse diagram, in index order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq_at(i, j) {
                    let between = (0..n)
                        .any(|k| k != i && k != j && self.leq_at(i, k) && self.leq_at(k, j));
                    if !between {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    /// The universe of nonzero elements.
    pub fn nonzero_universe(&self) -> Result<Universe> {
        if self.len() < 2 {
            return Err(Error::TrivialLattice);
        }
        Universe::new(
            (0..self.len())
                .filter(|&i| i != self.bottom)
                .map(|i| self.labels[i].clone()),
        )
    }

    /// The order restricted to the nonzero elements.
    pub fn nonzero_order(&self) -> Result<Quasiorder> {
        let universe = self.nonzero_universe()?;
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != self.bottom).collect();
        let up = keep
            .iter()
            .map(|&i| {
                let mut row = BitSet::new(keep.len());
                for (new_j, &j) in keep.iter().enumerate() {
                    if self.leq_at(i, j) {
                        row.insert(new_j);
                    }
                }
                row
            })
            .collect();
        Ok(Quasiorder::from_upsets(&universe, up))
    }

    /// The tolerance on the nonzero part relating two elements exactly when
    /// they have a common nonzero lower bound.
    pub fn bowtie_tolerance(&self) -> Result<Tolerance> {
        let universe = self.nonzero_universe()?;
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != self.bottom).collect();
        let n = keep.len();
        let mut rows = vec![BitSet::new(n); n];
        for (xi, &x) in keep.iter().enumerate() {
            for (yi, &y) in keep.iter().enumerate() {
                let witness = keep
                    .iter()
                    .any(|&z| self.leq_at(z, x) && self.leq_at(z, y));
                if witness {
                    rows[xi].insert(yi);
                }
            }
        }
        let out = Tolerance::from_rows(&universe, rows);
        debug_assert_eq!(out, self.nonzero_order()?.tolerance());
        Ok(out)
    }

    /// For a distributive lattice, verifies the equivalence of: Helly number
    /// of the nonzero part at most two, at most two atoms, and the blocks of
    /// the induced tolerance being exactly the atom upsets. Errs on
    /// non-distributive or trivial lattices.
    pub fn check_distributive_corollary(&self) -> Result<EquivalenceReport> {
        if !self.is_distributive() {
            return Err(Error::NotDistributive);
        }
        let order = self.nonzero_order()?;
        let helly_two = has_helly2(&order);

        let at_most_two_atoms = self.atoms().len() <= 2;

        let bowtie = self.bowtie_tolerance()?;
        let family = blocks::blocks(&bowtie)?;
        let universe = bowtie.universe();
        let mut atom_upsets: Vec<Subset> = self
            .atoms()
            .iter()
            .map(|&a| {
                Subset::from_labels(
                    universe,
                    self.up[a].iter().map(|i| self.labels[i].as_str()),
                )
                .expect("upsets of atoms avoid the bottom")
            })
            .collect();
        sort_family(&mut atom_upsets);
        let blocks_are_atom_upsets = family.blocks() == atom_upsets.as_slice();

        Ok(EquivalenceReport::new(vec![
            ("helly_number_at_most_two", helly_two),
            ("at_most_two_atoms", at_most_two_atoms),
            ("blocks_are_atom_upsets", blocks_are_atom_upsets),
        ]))
    }
}

fn unique_least(up: &[BitSet], i: usize, j: usize) -> Option<usize> {
    let bounds = up[i].intersection(&up[j]);
    let mut best: Option<usize> = None;
    for k in bounds.iter() {
        if bounds.is_subset(&up[k]) {
            if best.is_some() {
                return None;
            }
            best = Some(k);
        }
    }
    best
}

fn unique_greatest(up: &[BitSet], i: usize, j: usize) -> Option<usize> {
    let n = up.len();
    let lower: Vec<usize> = (0..n)
        .filter(|&k| up[k].contains(i) && up[k].contains(j))
        .collect();
    let mut best: Option<usize> = None;
    for &k in &lower {
        if lower.iter().all(|&l| up[l].contains(k)) {
            if best.is_some() {
                return None;
            }
            best = Some(k);
        }
    }
    best
}

fn mask_label(mask: usize) -> String {
    let digits: Vec<String> = (0..10)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| (b + 1).to_string())
        .collect();
    format!("{{{}}}", digits.join(","))
}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .cover_pairs()
            .iter()
            .map(|&(i, j)| format!("{}<{}", self.labels[i], self.labels[j]))
            .collect();
        write!(f, "FiniteLattice({})", covers.join(", "))
    }
}
