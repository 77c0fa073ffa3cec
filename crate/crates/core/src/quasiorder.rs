//! Quasiorders (reflexive transitive relations) and the tolerance each one
//! induces through common lower bounds.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::tolerance::Tolerance;
use crate::universe::{Subset, Universe};

/// A reflexive transitive relation, stored as one upset per element:
/// row `x` holds `{y | x ≲ y}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Quasiorder {
    universe: Universe,
    up: Vec<BitSet>,
}

impl Quasiorder {
    /// The discrete quasiorder: every element comparable only to itself.
    pub fn antichain(universe: &Universe) -> Quasiorder {
        let n = universe.len();
        Quasiorder {
            universe: universe.clone(),
            up: (0..n).map(|i| BitSet::singleton(n, i)).collect(),
        }
    }

    /// Builds a quasiorder from directed pairs `x ≲ y`. The reflexive
    /// closure is always applied. With `transitive_closure` off the pair set
    /// must already be transitive.
    pub fn from_pairs<'a, I>(
        universe: &Universe,
        pairs: I,
        transitive_closure: bool,
    ) -> Result<Quasiorder>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let n = universe.len();
        let mut up: Vec<BitSet> = (0..n).map(|i| BitSet::singleton(n, i)).collect();
        for (x, y) in pairs {
            let i = universe.resolve(x)?;
            let j = universe.resolve(y)?;
            up[i].insert(j);
        }
        if transitive_closure {
            // Warshall, row-parallel.
            for k in 0..n {
                for i in 0..n {
                    if up[i].contains(k) {
                        let row_k = up[k].clone();
                        up[i].union_with(&row_k);
                    }
                }
            }
        } else {
            for i in 0..n {
                for j in up[i].iter() {
                    if !up[j].is_subset(&up[i]) {
                        let k = up[j].difference(&up[i]).first().unwrap();
                        return Err(Error::NotTransitive {
                            x: universe.label(i).to_string(),
                            y: universe.label(j).to_string(),
                            z: universe.label(k).to_string(),
                        });
                    }
                }
            }
        }
        Ok(Quasiorder {
            universe: universe.clone(),
            up,
        })
    }

    /// Upsets must already be reflexive and transitive.
    pub(crate) fn from_upsets(universe: &Universe, up: Vec<BitSet>) -> Quasiorder {
        debug_assert_eq!(up.len(), universe.len());
        debug_assert!((0..up.len()).all(|i| up[i].contains(i)));
        debug_assert!((0..up.len()).all(|i| up[i].iter().all(|j| up[j].is_subset(&up[i]))));
        Quasiorder {
            universe: universe.clone(),
            up,
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

    pub fn leq(&self, x: &str, y: &str) -> Result<bool> {
        let i = self.universe.resolve(x)?;
        let j = self.universe.resolve(y)?;
        Ok(self.up[i].contains(j))
    }

    #[inline]
    pub fn leq_at(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// The upset of `x`: all elements above it, including `x` itself.
    pub fn upset(&self, x: &str) -> Result<Subset> {
        Ok(self.upset_at(self.universe.resolve(x)?))
    }

    pub fn upset_at(&self, i: usize) -> Subset {
        Subset::from_bits(&self.universe, self.up[i].clone())
    }

    /// The tolerance relating two elements exactly when they share a lower
    /// bound. Always reflexive and symmetric.
    pub fn tolerance(&self) -> Tolerance {
        let n = self.len();
        let mut rows = vec![BitSet::new(n); n];
        for up in &self.up {
            for x in up.iter() {
                rows[x].union_with(up);
            }
        }
        Tolerance::from_rows(&self.universe, rows)
    }

    /// Elements `x` such that everything below `x` is also above it.
    pub fn minimal_elements(&self) -> Subset {
        let n = self.len();
        let mut down = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in self.up[i].iter() {
                down[j].insert(i);
            }
        }
        let mut out = BitSet::new(n);
        for (i, below) in down.iter().enumerate() {
            if below.is_subset(&self.up[i]) {
                out.insert(i);
            }
        }
        Subset::from_bits(&self.universe, out)
    }

    /// True when every element has a minimal element below it. Finite
    /// quasiorders always do; the check is kept as a guard for the generic
    /// code path.
    pub fn is_bounded_by_minimal(&self) -> bool {
        let mut covered = BitSet::new(self.len());
        for m in self.minimal_elements().indices() {
            covered.union_with(&self.up[m]);
        }
        covered.is_full()
    }

    /// Whether `z` is below every member of `block`.
    pub(crate) fn bounds(&self, z: usize, set: &BitSet) -> bool {
        set.is_subset(&self.up[z])
    }

    /// Some common lower bound of `set`, if one exists.
    pub(crate) fn lower_bound_of(&self, set: &BitSet) -> Option<usize> {
        (0..self.len()).find(|&z| self.bounds(z, set))
    }
}

impl fmt::Debug for Quasiorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pairs = Vec::new();
        for i in 0..self.len() {
            for j in self.up[i].iter() {
                if i != j {
                    pairs.push(format!(
                        "{}≲{}",
                        self.universe.label(i),
                        self.universe.label(j)
                    ));
                }
            }
        }
        write!(f, "Quasiorder({})", pairs.join(", "))
    }
}
