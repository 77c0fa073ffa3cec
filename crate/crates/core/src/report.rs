//! Carrier for theorem-equivalence checks: several independently evaluated
//! conditions that a theorem asserts to be equivalent.

/// One named condition of an equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub holds: bool,
}

/// A bundle of conditions evaluated independently. The report is consistent
/// exactly when all conditions agree; an inconsistent report on a valid
/// input means the corresponding theorem (or this library) is broken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    conditions: Vec<Condition>,
}

impl EquivalenceReport {
    pub fn new(conditions: Vec<(&'static str, bool)>) -> EquivalenceReport {
        EquivalenceReport {
            conditions: conditions
                .into_iter()
                .map(|(name, holds)| Condition { name, holds })
                .collect(),
        }
    }

    pub fn conditions(&self) -> &[Condition] {
        &self.conditions
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.conditions
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.holds)
    }

    /// True when every condition evaluated to the same truth value.
    pub fn is_consistent(&self) -> bool {
        self.conditions.windows(2).all(|w| w[0].holds == w[1].holds)
    }

    /// True when every condition holds.
    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }
}

impl std::fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, c) in self.conditions.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}={}", c.name, c.holds)?;
        }
        if !self.is_consistent() {
            write!(f, " [INCONSISTENT]")?;
        }
        Ok(())
    }
}
