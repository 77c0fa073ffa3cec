//! The carrier set and its subsets.
//!
//! Elements are addressed by index internally and by label at every public
//! interface. Labels stay in the order they were given; whenever a set is
//! emitted (display, reports), its members are sorted by label so output is
//! deterministic regardless of how the set was built.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Debug)]
struct Inner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `rank[i]` is the position of `labels[i]` in lexicographic label order.
    rank: Vec<u32>,
}

/// An ordered finite set of distinctly labeled elements. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Universe {
    inner: Arc<Inner>,
}

impl Universe {
    /// Builds a universe from distinct, whitespace-free, nonempty labels.
    pub fn new<I, S>(labels: I) -> Result<Universe>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut rank = vec![0u32; labels.len()];
        for (pos, &i) in order.iter().enumerate() {
            rank[i] = pos as u32;
        }
        Ok(Universe {
            inner: Arc::new(Inner { labels, index, rank }),
        })
    }

    /// Universe `a, b, c, ...` of size `n` (at most 26).
    pub fn letters(n: usize) -> Result<Universe> {
        if n == 0 {
            return Err(Error::EmptyUniverse);
        }
        if n > 26 {
            return Err(Error::UniverseTooLarge { n, max: 26 });
        }
        Universe::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    /// Universe `p0, p1, ...` of arbitrary size.
    pub fn indexed(prefix: &str, n: usize) -> Result<Universe> {
        Universe::new((0..n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty universes
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.inner.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.index.get(label).copied()
    }

    pub(crate) fn resolve(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub(crate) fn rank(&self, index: usize) -> u32 {
        self.inner.rank[index]
    }

    pub(crate) fn same_as(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }

    pub(crate) fn check_same(&self, other: &Universe) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}

/// A subset of a universe, with extensional equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subset {
    universe: Universe,
    bits: BitSet,
}

impl Subset {
    pub fn empty(universe: &Universe) -> Subset {
        Subset {
            universe: universe.clone(),
            bits: BitSet::new(universe.len()),
        }
    }

    pub fn full(universe: &Universe) -> Subset {
        Subset {
            universe: universe.clone(),
            bits: BitSet::full(universe.len()),
        }
    }

    pub fn from_labels<'a, I>(universe: &Universe, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut bits = BitSet::new(universe.len());
        for label in labels {
            bits.insert(universe.resolve(label)?);
        }
        Ok(Subset {
            universe: universe.clone(),
            bits,
        })
    }

    /// Indices must be in range; this is an internal-style constructor.
    pub fn from_indices<I>(universe: &Universe, indices: I) -> Subset
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = BitSet::new(universe.len());
        for i in indices {
            assert!(i < universe.len(), "index {i} out of range");
            bits.insert(i);
        }
        Subset {
            universe: universe.clone(),
            bits,
        }
    }

    pub(crate) fn from_bits(universe: &Universe, bits: BitSet) -> Subset {
        debug_assert_eq!(bits.len(), universe.len());
        Subset {
            universe: universe.clone(),
            bits,
        }
    }

    pub(crate) fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, label: &str) -> Result<bool> {
        Ok(self.bits.contains(self.universe.resolve(label)?))
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.bits.contains(index)
    }

    /// Member indices in universe order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    /// Member labels, sorted lexicographically.
    pub fn labels(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.bits.iter().map(|i| self.universe.label(i)).collect();
        out.sort_unstable();
        out
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        assert!(self.universe.same_as(&other.universe), "universe mismatch");
        self.bits.is_subset(&other.bits)
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        assert!(self.universe.same_as(&other.universe), "universe mismatch");
        self.bits.intersects(&other.bits)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        assert!(self.universe.same_as(&other.universe), "universe mismatch");
        Subset::from_bits(&self.universe, self.bits.union(&other.bits))
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        assert!(self.universe.same_as(&other.universe), "universe mismatch");
        Subset::from_bits(&self.universe, self.bits.intersection(&other.bits))
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        assert!(self.universe.same_as(&other.universe), "universe mismatch");
        Subset::from_bits(&self.universe, self.bits.difference(&other.bits))
    }

    pub fn complement(&self) -> Subset {
        Subset::from_bits(&self.universe, self.bits.complement())
    }

    /// Sort key: member label ranks, ascending. Lexicographic comparison of
    /// these keys matches lexicographic comparison of sorted label lists.
    pub(crate) fn canonical_key(&self) -> Vec<u32> {
        let mut key: Vec<u32> = self.bits.iter().map(|i| self.universe.rank(i)).collect();
        key.sort_unstable();
        key
    }
}

/// Sorts a family of subsets into canonical order: lexicographic on the
/// sorted member labels.
pub(crate) fn sort_family(sets: &mut [Subset]) {
    sets.sort_by_cached_key(|s| s.canonical_key());
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_universes() {
        assert_eq!(
            Universe::new(Vec::<String>::new()).unwrap_err(),
            Error::EmptyUniverse
        );
        assert_eq!(
            Universe::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert_eq!(
            Universe::new(["a", "b c"]).unwrap_err(),
            Error::InvalidLabel("b c".into())
        );
        assert_eq!(
            Universe::new(["a", ""]).unwrap_err(),
            Error::InvalidLabel(String::new())
        );
    }

    #[test]
    fn label_index_bijection() {
        let u = Universe::new(["d", "c", "b", "a"]).unwrap();
        assert_eq!(u.len(), 4);
        for (i, label) in u.labels().iter().enumerate() {
            assert_eq!(u.index_of(label), Some(i));
            assert_eq!(u.label(i), label);
        }
        assert_eq!(u.index_of("z"), None);
    }

    #[test]
    fn labels_are_emitted_sorted() {
        let u = Universe::new(["d", "c", "b", "a"]).unwrap();
        let s = Subset::from_labels(&u, ["d", "a"]).unwrap();
        assert_eq!(s.labels(), vec!["a", "d"]);
        assert_eq!(s.to_string(), "{a, d}");
    }

    #[test]
    fn extensional_equality() {
        let u = Universe::letters(3).unwrap();
        let v = Universe::letters(3).unwrap();
        let a = Subset::from_labels(&u, ["a", "c"]).unwrap();
        let b = Subset::from_labels(&v, ["c", "a"]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, Subset::from_labels(&u, ["a"]).unwrap());
    }

    #[test]
    fn set_algebra() {
        let u = Universe::letters(4).unwrap();
        let a = Subset::from_labels(&u, ["a", "b"]).unwrap();
        let b = Subset::from_labels(&u, ["b", "c"]).unwrap();
        assert_eq!(a.union(&b).labels(), vec!["a", "b", "c"]);
        assert_eq!(a.intersection(&b).labels(), vec!["b"]);
        assert_eq!(a.difference(&b).labels(), vec!["a"]);
        assert_eq!(a.complement().labels(), vec!["c", "d"]);
        assert!(a.intersection(&b).is_subset_of(&a));
        assert!(Subset::empty(&u).is_empty());
        assert_eq!(Subset::full(&u).len(), 4);
    }

    #[test]
    fn canonical_family_order_follows_labels() {
        let u = Universe::new(["d", "c", "b", "a"]).unwrap();
        let mut family = vec![
            Subset::from_labels(&u, ["c", "a"]).unwrap(),
            Subset::from_labels(&u, ["a", "b", "d"]).unwrap(),
            Subset::from_labels(&u, ["b"]).unwrap(),
        ];
        sort_family(&mut family);
        let rendered: Vec<String> = family.iter().map(|s| s.to_string()).collect();
        assert_eq!(rendered, vec!["{a, b, d}", "{a, c}", "{b}"]);
    }
}
