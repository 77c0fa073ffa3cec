//! Formal contexts, their concepts, and the concept lattice of the
//! complementary context of a tolerance.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::Result;
use crate::set_lattice::SetLattice;
use crate::tolerance::Tolerance;
use crate::universe::{Subset, Universe};

/// A binary relation between a set of objects and a set of attributes.
#[derive(Clone)]
pub struct FormalContext {
    objects: Universe,
    attributes: Universe,
    /// One attribute row per object.
    rows: Vec<BitSet>,
    /// One object column per attribute.
    cols: Vec<BitSet>,
}

/// A Galois-closed pair: the extent holds exactly the objects sharing the
/// intent, the intent exactly the attributes common to the extent.
#[derive(Clone, PartialEq, Eq)]
pub struct Concept {
    pub extent: Subset,
    pub intent: Subset,
}

impl fmt::Debug for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.extent, self.intent)
    }
}

impl FormalContext {
    pub fn new<'a, I>(objects: &Universe, attributes: &Universe, incidence: I) -> Result<FormalContext>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut rows = vec![BitSet::new(attributes.len()); objects.len()];
        let mut cols = vec![BitSet::new(objects.len()); attributes.len()];
        for (g, m) in incidence {
            let i = objects.resolve(g)?;
            let j = attributes.resolve(m)?;
            rows[i].insert(j);
            cols[j].insert(i);
        }
        Ok(FormalContext {
            objects: objects.clone(),
            attributes: attributes.clone(),
            rows,
            cols,
        })
    }

    /// The context over (U, U) whose incidence is the complement of the
    /// tolerance: object and attribute are incident exactly when unrelated.
    pub fn complement_of(r: &Tolerance) -> FormalContext {
        let n = r.len();
        let rows: Vec<BitSet> = (0..n).map(|i| r.row(i).complement()).collect();
        let cols = rows.clone(); // the complement of a symmetric relation is symmetric
        FormalContext {
            objects: r.universe().clone(),
            attributes: r.universe().clone(),
            rows,
            cols,
        }
    }

    pub fn objects(&self) -> &Universe {
        &self.objects
    }

    pub fn attributes(&self) -> &Universe {
        &self.attributes
    }

    pub fn incident(&self, g: &str, m: &str) -> Result<bool> {
        let i = self.objects.resolve(g)?;
        let j = self.attributes.resolve(m)?;
        Ok(self.rows[i].contains(j))
    }

    /// Attributes shared by every object in `objs`.
    pub fn common_attributes(&self, objs: &Subset) -> Result<Subset> {
        self.objects.check_same(objs.universe())?;
        Ok(Subset::from_bits(
            &self.attributes,
            self.derive_rows(objs.bits()),
        ))
    }

    /// Objects carrying every attribute in `attrs`.
    pub fn common_objects(&self, attrs: &Subset) -> Result<Subset> {
        self.attributes.check_same(attrs.universe())?;
        Ok(Subset::from_bits(
            &self.objects,
            self.derive_cols(attrs.bits()),
        ))
    }

    fn derive_rows(&self, objs: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.attributes.len());
        for i in objs.iter() {
            out.intersect_with(&self.rows[i]);
        }
        out
    }

    fn derive_cols(&self, attrs: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.objects.len());
        for j in attrs.iter() {
            out.intersect_with(&self.cols[j]);
        }
        out
    }

    fn close_extent(&self, objs: &BitSet) -> BitSet {
        self.derive_cols(&self.derive_rows(objs))
    }

    /// All concepts, ordered by extent (canonical set order). The extents
    /// form a complete lattice: intersections of extents are extents, and
    /// the join of two extents is the closure of their union.
    pub fn concepts(&self) -> Vec<Concept> {
        let seed = self.close_extent(&BitSet::new(self.objects.len()));
        let mut extents: std::collections::BTreeSet<BitSet> =
            std::iter::once(seed.clone()).collect();
        let mut queue = vec![seed];
        while let Some(current) = queue.pop() {
            for g in 0..self.objects.len() {
                if current.contains(g) {
                    continue;
                }
                let mut bigger = current.clone();
                bigger.insert(g);
                let closed = self.close_extent(&bigger);
                if extents.insert(closed.clone()) {
                    queue.push(closed);
                }
            }
        }
        let mut concepts: Vec<Concept> = extents
            .into_iter()
            .map(|extent| Concept {
                intent: Subset::from_bits(&self.attributes, self.derive_rows(&extent)),
                extent: Subset::from_bits(&self.objects, extent),
            })
            .collect();
        concepts.sort_by_cached_key(|c| c.extent.canonical_key());
        concepts
    }
}

/// The concept lattice of the complementary context of `r`, realized as the
/// set lattice of concept extents with the concept-flipping
/// orthocomplement: the orthocomplement of an extent is the corresponding
/// intent.
pub fn concept_extent_lattice(r: &Tolerance) -> SetLattice {
    let context = FormalContext::complement_of(r);
    let concepts = context.concepts();
    let members: Vec<Subset> = concepts.iter().map(|c| c.extent.clone()).collect();
    SetLattice::new(r.universe(), members)
        .expect("extents are distinct and include bottom and top")
        .with_ortho_by(move |extent| {
            context
                .common_attributes(extent)
                .expect("same universe by construction")
        })
        .expect("intents of concepts are themselves extents")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::set_lattice::lower_definable;

    #[test]
    fn full_incidence_has_single_concept() {
        let g = Universe::letters(2).unwrap();
        let m = Universe::new(["x", "y", "z"]).unwrap();
        let all: Vec<(&str, &str)> = g
            .labels()
            .iter()
            .flat_map(|o| m.labels().iter().map(move |a| (o.as_str(), a.as_str())))
            .collect();
        let k = FormalContext::new(&g, &m, all).unwrap();
        let concepts = k.concepts();
        assert_eq!(concepts.len(), 1);
        assert_eq!(concepts[0].extent, Subset::full(&g));
        assert_eq!(concepts[0].intent, Subset::full(&m));
    }

    #[test]
    fn empty_incidence_on_a_point() {
        let u = Universe::letters(1).unwrap();
        let k = FormalContext::new(&u, &u, []).unwrap();
        let concepts = k.concepts();
        assert_eq!(concepts.len(), 2);
        assert_eq!(concepts[0].extent, Subset::empty(&u));
        assert_eq!(concepts[0].intent, Subset::full(&u));
        assert_eq!(concepts[1].extent, Subset::full(&u));
        assert_eq!(concepts[1].intent, Subset::empty(&u));
    }

    #[test]
    fn concepts_are_galois_closed() {
        let t = fixtures::triangle_with_tail();
        let k = FormalContext::complement_of(&t);
        for c in k.concepts() {
            assert_eq!(k.common_attributes(&c.extent).unwrap(), c.intent);
            assert_eq!(k.common_objects(&c.intent).unwrap(), c.extent);
        }
    }

    #[test]
    fn extents_match_lower_definable_family() {
        for t in [
            fixtures::triangle_with_tail(),
            fixtures::path_of_four(),
            fixtures::punctured_cube(),
        ] {
            let lattice = concept_extent_lattice(&t);
            let lower = lower_definable(&t);
            assert_eq!(lattice.members(), lower.members());
        }
    }

    #[test]
    fn concept_orthocomplement_flips_extent_and_intent() {
        let t = fixtures::path_of_four();
        let k = FormalContext::complement_of(&t);
        let lattice = concept_extent_lattice(&t);
        assert!(lattice.is_ortholattice().unwrap());
        for (i, extent) in lattice.members().iter().enumerate() {
            let o = lattice.orthocomplement_index(i).unwrap();
            assert_eq!(lattice.member(o), &k.common_attributes(extent).unwrap());
        }
    }

    #[test]
    fn extent_meets_and_joins_exist() {
        let t = fixtures::triangle_with_tail();
        let lattice = concept_extent_lattice(&t);
        assert!(lattice.is_lattice());
        // Meets of extents are plain intersections.
        for (i, a) in lattice.members().iter().enumerate() {
            for (j, b) in lattice.members().iter().enumerate() {
                let k = lattice.meet_index(i, j).unwrap();
                assert_eq!(*lattice.member(k), a.intersection(b));
            }
        }
    }
}
