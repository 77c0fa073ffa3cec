//! Tolerances: reflexive symmetric relations, a.k.a. simple graphs with an
//! implicit loop at every vertex.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::quasiorder::Quasiorder;
use crate::universe::{Subset, Universe};

/// A reflexive symmetric relation over a universe, stored as one
/// neighborhood bitset per element.
#[derive(Clone, PartialEq, Eq)]
pub struct Tolerance {
    universe: Universe,
    rows: Vec<BitSet>,
}

impl Tolerance {
    /// The identity tolerance: every element related only to itself.
    pub fn identity(universe: &Universe) -> Tolerance {
        let n = universe.len();
        Tolerance {
            universe: universe.clone(),
            rows: (0..n).map(|i| BitSet::singleton(n, i)).collect(),
        }
    }

    /// Builds a tolerance from labeled pairs. The reflexive closure is always
    /// applied; loops in the input are accepted and ignored. With
    /// `symmetrize` off, the pair set must already be symmetric — silent
    /// repair would hide data bugs.
    pub fn from_edges<'a, I>(universe: &Universe, pairs: I, symmetrize: bool) -> Result<Tolerance>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let n = universe.len();
        let mut rows: Vec<BitSet> = (0..n).map(|i| BitSet::singleton(n, i)).collect();
        for (x, y) in pairs {
            let i = universe.resolve(x)?;
            let j = universe.resolve(y)?;
            rows[i].insert(j);
            if symmetrize {
                rows[j].insert(i);
            }
        }
        if !symmetrize {
            for i in 0..n {
                for j in rows[i].iter() {
                    if !rows[j].contains(i) {
                        return Err(Error::NotSymmetric {
                            x: universe.label(i).to_string(),
                            y: universe.label(j).to_string(),
                        });
                    }
                }
            }
        }
        Ok(Tolerance {
            universe: universe.clone(),
            rows,
        })
    }

    /// Rows must already be reflexive and symmetric.
    pub(crate) fn from_rows(universe: &Universe, rows: Vec<BitSet>) -> Tolerance {
        debug_assert_eq!(rows.len(), universe.len());
        debug_assert!((0..rows.len()).all(|i| rows[i].contains(i)));
        debug_assert!((0..rows.len())
            .all(|i| rows[i].iter().all(|j| rows[j].contains(i))));
        Tolerance {
            universe: universe.clone(),
            rows,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn related(&self, x: &str, y: &str) -> Result<bool> {
        let i = self.universe.resolve(x)?;
        let j = self.universe.resolve(y)?;
        Ok(self.rows[i].contains(j))
    }

    #[inline]
    pub fn related_at(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// The neighborhood of `x`: everything related to `x`, including `x`.
    pub fn neighborhood(&self, x: &str) -> Result<Subset> {
        Ok(self.neighborhood_at(self.universe.resolve(x)?))
    }

    pub fn neighborhood_at(&self, i: usize) -> Subset {
        Subset::from_bits(&self.universe, self.rows[i].clone())
    }

    pub(crate) fn row(&self, i: usize) -> &BitSet {
        &self.rows[i]
    }

    pub(crate) fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    /// Upper approximation: elements whose neighborhood touches `x`.
    /// By symmetry this coincides with the union of the neighborhoods of the
    /// members of `x`.
    pub fn upper_approx(&self, x: &Subset) -> Result<Subset> {
        self.universe.check_same(x.universe())?;
        let mut out = BitSet::new(self.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.intersects(x.bits()) {
                out.insert(i);
            }
        }
        #[cfg(debug_assertions)]
        {
            let mut union = BitSet::new(self.len());
            for i in x.bits().iter() {
                union.union_with(&self.rows[i]);
            }
            debug_assert_eq!(out, union, "the two forms of the upper approximation differ");
        }
        Ok(Subset::from_bits(&self.universe, out))
    }

    /// Lower approximation: elements whose whole neighborhood fits in `x`.
    pub fn lower_approx(&self, x: &Subset) -> Result<Subset> {
        self.universe.check_same(x.universe())?;
        let mut out = BitSet::new(self.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_subset(x.bits()) {
                out.insert(i);
            }
        }
        debug_assert_eq!(
            Subset::from_bits(&self.universe, out.clone()),
            self.upper_approx(&x.complement())?.complement(),
            "duality with the upper approximation failed"
        );
        Ok(Subset::from_bits(&self.universe, out))
    }

    /// The quasiorder comparing elements by neighborhood inclusion:
    /// `x ≲ y` iff the neighborhood of `x` is contained in that of `y`.
    pub fn quasiorder(&self) -> Quasiorder {
        let n = self.len();
        let mut up = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = BitSet::new(n);
            for j in 0..n {
                if self.rows[i].is_subset(&self.rows[j]) {
                    row.insert(j);
                }
            }
            up.push(row);
        }
        Quasiorder::from_upsets(&self.universe, up)
    }

    /// Related pairs (i, j) with i < j, in index order. Loops are implicit.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in self.rows[i].iter() {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.strict_pairs().len()
    }
}

impl fmt::Debug for Tolerance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .strict_pairs()
            .iter()
            .map(|&(i, j)| format!("{}-{}", self.universe.label(i), self.universe.label(j)))
            .collect();
        write!(f, "Tolerance({})", edges.join(", "))
    }
}
