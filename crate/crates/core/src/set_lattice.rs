//! Families of subsets ordered by inclusion: the lattices of upper- and
//! lower-definable sets of a tolerance, with their orthocomplementations,
//! and the structural predicates (ortholattice, atomistic, Boolean) used by
//! the equivalence verifiers.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::BitSet;
use crate::concepts;
use crate::error::{Error, Result};
use crate::helly::check_characterization;
use crate::report::EquivalenceReport;
use crate::tolerance::Tolerance;
use crate::universe::{sort_family, Subset, Universe};

/// A family of distinct subsets containing the empty set and the universe,
/// ordered by inclusion, optionally carrying an orthocomplement map.
///
/// Construction does not prove the family is a lattice; use
/// [`SetLattice::is_lattice`] (the families built by [`upper_definable`] and
/// [`lower_definable`] are complete lattices by closure).
#[derive(Clone)]
pub struct SetLattice {
    universe: Universe,
    family: Vec<Subset>,
    index: HashMap<BitSet, usize>,
    ortho: Option<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl SetLattice {
    pub fn new(universe: &Universe, members: Vec<Subset>) -> Result<SetLattice> {
        let mut family = members;
        for set in &family {
            universe.check_same(set.universe())?;
        }
        sort_family(&mut family);
        let mut index = HashMap::with_capacity(family.len());
        for (i, set) in family.iter().enumerate() {
            if index.insert(set.bits().clone(), i).is_some() {
                return Err(Error::DuplicateMember(i));
            }
        }
        let bottom = *index
            .get(&BitSet::new(universe.len()))
            .ok_or_else(|| Error::NotALattice("family lacks the empty set".into()))?;
        let top = *index
            .get(&BitSet::full(universe.len()))
            .ok_or_else(|| Error::NotALattice("family lacks the universe".into()))?;
        Ok(SetLattice {
            universe: universe.clone(),
            family,
            index,
            ortho: None,
            bottom,
            top,
        })
    }

    /// Installs an orthocomplement computed memberwise by `f`. The image of
    /// every member must itself be a member.
    pub fn with_ortho_by(mut self, f: impl Fn(&Subset) -> Subset) -> Result<SetLattice> {
        let mut ortho = Vec::with_capacity(self.family.len());
        for set in &self.family {
            let image = f(set);
            let at = self.position(&image).ok_or_else(|| {
                Error::NotALattice(format!("orthocomplement image {image} is not in the family"))
            })?;
            ortho.push(at);
        }
        self.ortho = Some(ortho);
        Ok(self)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always holds the empty set and the universe
    }

    pub fn members(&self) -> &[Subset] {
        &self.family
    }

    pub fn member(&self, i: usize) -> &Subset {
        &self.family[i]
    }

    pub fn position(&self, set: &Subset) -> Option<usize> {
        self.index.get(set.bits()).copied()
    }

    pub fn bottom_index(&self) -> usize {
        self.bottom
    }

    pub fn top_index(&self) -> usize {
        self.top
    }

    pub fn orthocomplement_index(&self, i: usize) -> Result<usize> {
        self.ortho
            .as_ref()
            .map(|o| o[i])
            .ok_or(Error::MissingOrthocomplement)
    }

    /// Least upper bound of two members inside the family, if a unique one
    /// exists. When the set union itself is a member, that is the join.
    pub fn join_index(&self, i: usize, j: usize) -> Option<usize> {
        let union = self.family[i].bits().union(self.family[j].bits());
        if let Some(&k) = self.index.get(&union) {
            return Some(k);
        }
        self.least_above(&union)
    }

    /// Greatest lower bound of two members inside the family, if a unique
    /// one exists.
    pub fn meet_index(&self, i: usize, j: usize) -> Option<usize> {
        let inter = self.family[i].bits().intersection(self.family[j].bits());
        if let Some(&k) = self.index.get(&inter) {
            return Some(k);
        }
        self.greatest_below(&inter)
    }

    fn least_above(&self, bits: &BitSet) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (k, set) in self.family.iter().enumerate() {
            if bits.is_subset(set.bits()) {
                match best {
                    None => best = Some(k),
                    Some(b) if set.bits().count() < self.family[b].bits().count() => {
                        best = Some(k)
                    }
                    _ => {}
                }
            }
        }
        let b = best?;
        for set in self.family.iter() {
            if bits.is_subset(set.bits()) && !self.family[b].bits().is_subset(set.bits()) {
                return None; // upper bounds have no least element
            }
        }
        Some(b)
    }

    fn greatest_below(&self, bits: &BitSet) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (k, set) in self.family.iter().enumerate() {
            if set.bits().is_subset(bits) {
                match best {
                    None => best = Some(k),
                    Some(b) if set.bits().count() > self.family[b].bits().count() => {
                        best = Some(k)
                    }
                    _ => {}
                }
            }
        }
        let b = best?;
        for set in self.family.iter() {
            if set.bits().is_subset(bits) && !set.bits().is_subset(self.family[b].bits()) {
                return None; // lower bounds have no greatest element
            }
        }
        Some(b)
    }

    /// Whether every pair of members has a join and a meet in the family.
    pub fn is_lattice(&self) -> bool {
        let m = self.len();
        (0..m).all(|i| {
            (i..m).all(|j| self.join_index(i, j).is_some() && self.meet_index(i, j).is_some())
        })
    }

    /// Inclusion-minimal nonempty members.
    pub fn atom_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                i != self.bottom
                    && (0..self.len()).all(|j| {
                        j == i
                            || j == self.bottom
                            || !self.family[j].bits().is_subset(self.family[i].bits())
                    })
            })
            .collect()
    }

    pub fn atoms(&self) -> Vec<&Subset> {
        self.atom_indices().iter().map(|&i| &self.family[i]).collect()
    }

    /// Whether every member is the join of the atoms below it.
    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atom_indices();
        (0..self.len()).all(|i| {
            let mut union = BitSet::new(self.universe.len());
            for &a in &atoms {
                if self.family[a].bits().is_subset(self.family[i].bits()) {
                    union.union_with(self.family[a].bits());
                }
            }
            match self.least_above(&union) {
                Some(j) => j == i,
                None => false,
            }
        })
    }

    /// Whether the family is a distributive lattice in which every member
    /// has exactly one complement.
    pub fn is_boolean(&self) -> bool {
        let m = self.len();
        let mut join = vec![0usize; m * m];
        let mut meet = vec![0usize; m * m];
        for i in 0..m {
            for j in i..m {
                let (Some(a), Some(b)) = (self.join_index(i, j), self.meet_index(i, j)) else {
                    return false;
                };
                join[i * m + j] = a;
                join[j * m + i] = a;
                meet[i * m + j] = b;
                meet[j * m + i] = b;
            }
        }
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if meet[x * m + join[y * m + z]]
                        != join[meet[x * m + y] * m + meet[x * m + z]]
                    {
                        return false;
                    }
                }
            }
        }
        (0..m).all(|x| {
            let complements = (0..m)
                .filter(|&y| meet[x * m + y] == self.bottom && join[x * m + y] == self.top)
                .count();
            complements == 1
        })
    }

    /// Whether the installed orthocomplement is involutive, order-reversing,
    /// and complementing. Errs when no orthocomplement is installed.
    pub fn is_ortholattice(&self) -> Result<bool> {
        let ortho = self.ortho.as_ref().ok_or(Error::MissingOrthocomplement)?;
        let m = self.len();
        for i in 0..m {
            if ortho[ortho[i]] != i {
                return Ok(false);
            }
            match (self.meet_index(i, ortho[i]), self.join_index(i, ortho[i])) {
                (Some(b), Some(t)) if b == self.bottom && t == self.top => {}
                _ => return Ok(false),
            }
        }
        for i in 0..m {
            for j in 0..m {
                let leq = self.family[i].bits().is_subset(self.family[j].bits());
                if leq
                    && !self.family[ortho[j]]
                        .bits()
                        .is_subset(self.family[ortho[i]].bits())
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for SetLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.family.iter()).finish()
    }
}

/// The lattice of upper-definable sets: every union of neighborhoods,
/// together with the empty set. Carries the orthocomplement
/// `M ↦ upper(complement(M))`.
pub fn upper_definable(r: &Tolerance) -> SetLattice {
    let n = r.len();
    let mut seen: std::collections::BTreeSet<BitSet> = std::iter::once(BitSet::new(n)).collect();
    let mut queue = vec![BitSet::new(n)];
    while let Some(current) = queue.pop() {
        for y in 0..n {
            let bigger = current.union(r.row(y));
            if seen.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
    }
    let members: Vec<Subset> = seen
        .into_iter()
        .map(|bits| Subset::from_bits(r.universe(), bits))
        .collect();
    SetLattice::new(r.universe(), members)
        .expect("closure family is distinct and bounded")
        .with_ortho_by(|m| {
            r.upper_approx(&m.complement())
                .expect("same universe by construction")
        })
        .expect("upper approximations of members stay in the family")
}

/// The lattice of lower-definable sets: complements of the upper-definable
/// family. Carries the orthocomplement `M ↦ lower(complement(M))`.
pub fn lower_definable(r: &Tolerance) -> SetLattice {
    let upper = upper_definable(r);
    let members: Vec<Subset> = upper.members().iter().map(Subset::complement).collect();
    SetLattice::new(r.universe(), members)
        .expect("complements of a distinct family are distinct")
        .with_ortho_by(|m| {
            r.lower_approx(&m.complement())
                .expect("same universe by construction")
        })
        .expect("lower approximations of members stay in the family")
}

/// Verifies that the lower-definable, upper-definable, and concept-extent
/// lattices are pairwise order-isomorphic, through explicit maps: extents
/// coincide with the lower-definable family, and `A ↦ upper(A)` takes the
/// lower family bijectively and order-faithfully onto the upper family.
pub fn verify_lattice_isomorphisms(r: &Tolerance) -> bool {
    let lower = lower_definable(r);
    let upper = upper_definable(r);
    let extents = concepts::concept_extent_lattice(r);

    if lower.members() != extents.members() {
        return false;
    }
    if lower.len() != upper.len() {
        return false;
    }
    let image: Vec<usize> = lower
        .members()
        .iter()
        .map(|a| {
            let ua = r.upper_approx(a).expect("same universe");
            match upper.position(&ua) {
                Some(k) => k,
                None => usize::MAX,
            }
        })
        .collect();
    if image.contains(&usize::MAX) {
        return false;
    }
    let mut seen = vec![false; upper.len()];
    for &k in &image {
        if seen[k] {
            return false; // not injective
        }
        seen[k] = true;
    }
    for i in 0..lower.len() {
        for j in 0..lower.len() {
            let a = lower.member(i).bits().is_subset(lower.member(j).bits());
            let b = upper
                .member(image[i])
                .bits()
                .is_subset(upper.member(image[j]).bits());
            if a != b {
                return false;
            }
        }
    }
    true
}

/// Verifies the three-way equivalence between irredundant-covering
/// inducibility and the Boolean-lattice structure of the definable and
/// concept lattices. The sides are evaluated independently; the explicit
/// isomorphism between the three lattices is additionally verified and a
/// failure there is a library bug.
pub fn check_c1_c2_c3(r: &Tolerance) -> EquivalenceReport {
    let c1 = check_characterization(r)
        .get("induced_by_irredundant_covering")
        .expect("condition present");

    let upper = upper_definable(r);
    let lower = lower_definable(r);
    let c2 = upper.is_atomistic()
        && upper.is_boolean()
        && lower.is_atomistic()
        && lower.is_boolean();

    let extents = concepts::concept_extent_lattice(r);
    let c3 = extents.is_atomistic() && extents.is_boolean();

    assert!(
        verify_lattice_isomorphisms(r),
        "definable and concept lattices failed to be isomorphic"
    );

    EquivalenceReport::new(vec![
        ("induced_by_irredundant_covering", c1),
        ("definable_families_atomistic_boolean", c2),
        ("concept_lattice_atomistic_boolean", c3),
    ])
}
