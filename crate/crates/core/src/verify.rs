//! Exhaustive and randomized verification suites.
//!
//! Each suite re-checks an equivalence or an enumeration result over every
//! instance of a small scale, against independently coded brute-force
//! oracles where one exists. A suite reports the number of instances
//! checked and a bounded list of failure descriptions; any failure means a
//! broken theorem implementation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blocks;
use crate::covering;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::finite_lattice::FiniteLattice;
use crate::helly::{self, check_characterization, check_main_equivalence};
use crate::set_lattice::{lower_definable, upper_definable};
use crate::tolerance::Tolerance;
use crate::universe::{sort_family, Subset, Universe};

/// Maximum number of failure descriptions retained per suite.
const MAX_FAILURES: usize = 8;

/// Universe bound for the brute-force block and definable-family oracles.
pub const MAX_ORACLE_N: usize = 13;

/// Result of one verification suite.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checked: u64,
    pub failures: Vec<String>,
    /// Failures beyond the retained descriptions.
    pub truncated: u64,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> SuiteOutcome {
        SuiteOutcome {
            name,
            checked: 0,
            failures: Vec::new(),
            truncated: 0,
        }
    }

    fn fail(&mut self, message: String) {
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(message);
        } else {
            self.truncated += 1;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.truncated == 0
    }

    pub fn summary(&self) -> String {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        let mut line = format!(
            "suite {}: {} — {} instances checked",
            self.name, verdict, self.checked
        );
        if !self.passed() {
            line.push_str(&format!(
                ", {} failures",
                self.failures.len() as u64 + self.truncated
            ));
        }
        line
    }
}

/// Independent block oracle: filters all nonempty subsets for pairwise
/// relatedness and maximality by single-element extension. Shares no code
/// with the pivoting enumeration.
pub fn brute_force_blocks(r: &Tolerance) -> Result<Vec<Subset>> {
    let n = r.len();
    if n > MAX_ORACLE_N {
        return Err(Error::UniverseTooLarge { n, max: MAX_ORACLE_N });
    }
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let clique = members
            .iter()
            .all(|&i| members.iter().all(|&j| r.related_at(i, j)));
        if !clique {
            continue;
        }
        let maximal = (0..n)
            .filter(|i| mask & (1 << i) == 0)
            .all(|y| !members.iter().all(|&i| r.related_at(y, i)));
        if maximal {
            out.push(Subset::from_indices(r.universe(), members));
        }
    }
    sort_family(&mut out);
    Ok(out)
}

/// Result of the definable-family oracle.
pub struct DefinableOracle {
    pub upper: Vec<Subset>,
    pub lower: Vec<Subset>,
    /// Whether the complement duality between the approximations held on
    /// every subset.
    pub duality_holds: bool,
}

/// Independent definable-family oracle: evaluates the approximation of
/// every subset directly as a union of neighborhoods, collecting the
/// distinct results, and re-checks the complement duality of the two
/// approximations on every subset.
pub fn brute_force_definable(r: &Tolerance) -> Result<DefinableOracle> {
    let n = r.len();
    if n > MAX_ORACLE_N {
        return Err(Error::UniverseTooLarge { n, max: MAX_ORACLE_N });
    }
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    let mut duality_holds = true;
    for mask in 0u32..(1u32 << n) {
        let x = Subset::from_indices(r.universe(), (0..n).filter(|i| mask & (1 << i) != 0));
        // Upper approximation as the union of member neighborhoods.
        let mut up = Subset::empty(r.universe());
        for y in x.indices() {
            up = up.union(&r.neighborhood_at(y));
        }
        // Lower approximation through the duality with the upper one.
        let mut up_of_complement = Subset::empty(r.universe());
        for y in x.complement().indices() {
            up_of_complement = up_of_complement.union(&r.neighborhood_at(y));
        }
        let low = up_of_complement.complement();
        duality_holds &= r.lower_approx(&x)? == low && r.upper_approx(&x)? == up;
        if !upper.contains(&up) {
            upper.push(up);
        }
        if !lower.contains(&low) {
            lower.push(low);
        }
    }
    sort_family(&mut upper);
    sort_family(&mut lower);
    Ok(DefinableOracle {
        upper,
        lower,
        duality_holds,
    })
}

/// Whether some relabeling turns `a` into `b`. Brute-force permutation
/// search, so both universes must be tiny.
pub fn tolerances_isomorphic(a: &Tolerance, b: &Tolerance) -> Result<bool> {
    let n = a.len();
    if n > 8 {
        return Err(Error::UniverseTooLarge { n, max: 8 });
    }
    if n != b.len() {
        return Ok(false);
    }
    let mut degrees_a: Vec<usize> = (0..n).map(|i| a.row(i).count()).collect();
    let mut degrees_b: Vec<usize> = (0..n).map(|i| b.row(i).count()).collect();
    degrees_a.sort_unstable();
    degrees_b.sort_unstable();
    if degrees_a != degrees_b {
        return Ok(false);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    Ok(search_isomorphism(a, b, &mut perm, 0))
}

fn search_isomorphism(a: &Tolerance, b: &Tolerance, perm: &mut Vec<usize>, k: usize) -> bool {
    let n = perm.len();
    if k == n {
        return true;
    }
    for i in k..n {
        perm.swap(k, i);
        // perm[k] is the image of k; check consistency with earlier rows.
        let consistent =
            (0..=k).all(|j| a.related_at(j, k) == b.related_at(perm[j], perm[k]));
        if consistent && search_isomorphism(a, b, perm, k + 1) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}

fn letters(n: usize) -> Universe {
    Universe::letters(n).expect("suite sizes stay within the alphabet")
}

/// Reproduces the worked examples end to end: blocks, minimal elements,
/// irredundant coverings, canonical bases, and Helly verdicts of the three
/// core fixtures.
pub fn examples_suite() -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("examples");
    let mut check = |ok: bool, what: &str| {
        outcome.checked += 1;
        if !ok {
            outcome.fail(format!("example failed: {what}"));
        }
    };

    let t1 = fixtures::triangle_with_tail();
    match blocks::blocks(&t1) {
        Ok(family) => {
            let labels: Vec<Vec<&str>> = family.iter().map(|b| b.labels()).collect();
            check(
                labels == vec![vec!["a", "b", "c"], vec!["c", "d"]],
                "triangle-with-tail blocks",
            );
        }
        Err(e) => check(false, &format!("triangle-with-tail blocks errored: {e}")),
    }
    check(
        t1.quasiorder().minimal_elements().labels() == vec!["a", "b", "d"],
        "triangle-with-tail minimal elements",
    );
    check(
        covering::irredundant_covering_of(&t1) == Some(fixtures::triangle_with_tail_covering()),
        "triangle-with-tail irredundant covering",
    );
    match covering::canonical_bases(&t1, covering::DEFAULT_BASE_SEARCH_LIMIT) {
        Ok(bases) => check(
            bases.len() == 1
                && bases[0] == fixtures::triangle_with_tail_covering().sets().to_vec(),
            "triangle-with-tail canonical base",
        ),
        Err(e) => check(false, &format!("triangle-with-tail bases errored: {e}")),
    }
    check(
        helly::has_helly2(&t1.quasiorder()),
        "triangle-with-tail Helly verdict",
    );

    let t2 = fixtures::path_of_four();
    match blocks::blocks(&t2) {
        Ok(family) => {
            let labels: Vec<Vec<&str>> = family.iter().map(|b| b.labels()).collect();
            check(
                labels == vec![vec!["a", "b"], vec!["b", "c"], vec!["c", "d"]],
                "path-of-four blocks",
            );
        }
        Err(e) => check(false, &format!("path-of-four blocks errored: {e}")),
    }
    match covering::canonical_bases(&t2, covering::DEFAULT_BASE_SEARCH_LIMIT) {
        Ok(bases) => {
            let expected: Vec<Vec<&str>> =
                vec![vec!["a", "b"], vec!["b", "c"], vec!["c", "d"]];
            check(
                bases.len() == 1
                    && bases[0].iter().map(|s| s.labels()).collect::<Vec<_>>() == expected,
                "path-of-four unique canonical base",
            );
        }
        Err(e) => check(false, &format!("path-of-four bases errored: {e}")),
    }
    check(
        covering::irredundant_covering_of(&t2).is_none(),
        "path-of-four has no irredundant covering",
    );

    let t3 = fixtures::punctured_cube();
    let h3 = fixtures::punctured_cube_covering();
    match blocks::blocks(&t3) {
        Ok(family) => {
            let outside: Vec<&Subset> =
                family.iter().filter(|b| !h3.contains(b)).collect();
            check(
                family.len() == 4
                    && outside.len() == 1
                    && outside[0].labels() == vec!["b", "d", "e", "f"],
                "punctured-cube extra block",
            );
        }
        Err(e) => check(false, &format!("punctured-cube blocks errored: {e}")),
    }
    check(
        !helly::has_helly2(&t3.quasiorder()),
        "punctured-cube Helly verdict",
    );
    check(
        t3.quasiorder().minimal_elements().labels() == vec!["a", "c", "g"],
        "punctured-cube minimal elements",
    );

    outcome
}

/// Irredundancy coincides with being a neighborhood family of the induced
/// tolerance, over every covering of every universe up to the bound.
pub fn d1d2_suite(max_n: usize) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("d1d2");
    if max_n > enumerate::MAX_COVERING_N {
        return Err(Error::UniverseTooLarge {
            n: max_n,
            max: enumerate::MAX_COVERING_N,
        });
    }
    for n in 1..=max_n {
        let u = letters(n);
        for covering in enumerate::all_coverings(&u)? {
            outcome.checked += 1;
            let induced = covering.induced_tolerance();
            let d1 = covering.is_irredundant();
            let d2 = covering.is_neighborhood_family(&induced)?;
            if d1 != d2 {
                outcome.fail(format!(
                    "covering {covering} of size-{n} universe: irredundant={d1} neighborhood-family={d2}"
                ));
            }
        }
    }
    Ok(outcome)
}

/// The irredundant-covering characterization holds on every tolerance up to
/// the bound, with the existence side decided independently.
pub fn characterization_suite(max_n: usize) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("characterization");
    if max_n > enumerate::MAX_TOLERANCE_N {
        return Err(Error::UniverseTooLarge {
            n: max_n,
            max: enumerate::MAX_TOLERANCE_N,
        });
    }
    for n in 1..=max_n {
        let u = letters(n);
        for t in enumerate::all_tolerances(&u)? {
            outcome.checked += 1;
            let report = check_characterization(&t);
            if !report.is_consistent() {
                outcome.fail(format!("characterization split on {t:?}: {report}"));
            }
        }
    }
    Ok(outcome)
}

/// The Helly-number characterization and the triple criterion agree with
/// each other and with the brute-force Helly number, over every quasiorder
/// up to the bound.
pub fn helly_suite(max_n: usize) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("helly");
    if max_n > enumerate::MAX_QUASIORDER_N {
        return Err(Error::UniverseTooLarge {
            n: max_n,
            max: enumerate::MAX_QUASIORDER_N,
        });
    }
    for n in 1..=max_n {
        let u = letters(n);
        let quasiorders = enumerate::all_quasiorders(&u)?;
        if n == 4 && quasiorders.len() != 355 {
            outcome.fail(format!(
                "expected 355 quasiorders on 4 elements, enumerated {}",
                quasiorders.len()
            ));
        }
        for q in quasiorders {
            outcome.checked += 1;
            let report = helly::check_helly_theorem(&q)?;
            if !report.is_consistent() {
                outcome.fail(format!("helly characterization split on {q:?}: {report}"));
                continue;
            }
            let two = helly::has_helly2(&q);
            let triples = helly::helly2_by_triples(&q);
            let number = helly::helly_number(&q, helly::DEFAULT_HELLY_BOUND)?;
            if two != triples || two != (number <= 2) {
                outcome.fail(format!(
                    "helly routes split on {q:?}: blocks={two} triples={triples} number={number}"
                ));
            }
        }
    }
    Ok(outcome)
}

/// The four-way normality equivalence holds on every tolerance that is
/// induced by an irredundant covering, up to the bound.
pub fn main_equivalence_suite(max_n: usize) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("main");
    if max_n > enumerate::MAX_TOLERANCE_N {
        return Err(Error::UniverseTooLarge {
            n: max_n,
            max: enumerate::MAX_TOLERANCE_N,
        });
    }
    for n in 1..=max_n {
        let u = letters(n);
        for t in enumerate::all_tolerances(&u)? {
            if !check_characterization(&t).all_hold() {
                continue;
            }
            outcome.checked += 1;
            let report = check_main_equivalence(&t)?;
            if !report.is_consistent() {
                outcome.fail(format!("main equivalence split on {t:?}: {report}"));
            }
        }
    }
    Ok(outcome)
}

/// The lattice-theoretic characterization agrees with the covering one on
/// every tolerance up to the bound, and in the positive cases the atoms of
/// the upper-definable lattice are exactly the block neighborhoods.
pub fn c1c2c3_suite(max_n: usize) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("c1c2c3");
    if max_n > 5 {
        return Err(Error::UniverseTooLarge { n: max_n, max: 5 });
    }
    for n in 1..=max_n {
        let u = letters(n);
        for t in enumerate::all_tolerances(&u)? {
            outcome.checked += 1;
            let report = crate::set_lattice::check_c1_c2_c3(&t);
            if !report.is_consistent() {
                outcome.fail(format!("c1c2c3 split on {t:?}: {report}"));
                continue;
            }
            if report.all_hold() {
                let upper = upper_definable(&t);
                let mut atoms: Vec<Subset> =
                    upper.atoms().into_iter().cloned().collect();
                sort_family(&mut atoms);
                let mut block_neighborhoods: Vec<Subset> = Vec::new();
                for x in 0..t.len() {
                    let hood = t.neighborhood_at(x);
                    if blocks::is_block(&t, &hood)? && !block_neighborhoods.contains(&hood) {
                        block_neighborhoods.push(hood);
                    }
                }
                sort_family(&mut block_neighborhoods);
                if atoms != block_neighborhoods {
                    outcome.fail(format!(
                        "atoms of the upper-definable lattice differ from block neighborhoods on {t:?}"
                    ));
                }
            }
        }
    }
    Ok(outcome)
}

/// The two-atom criterion is internally consistent on every downset lattice
/// of posets up to the bound, and the spot checks on the Boolean lattices
/// come out as expected.
pub fn distributive_suite(max_poset: usize) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("distributive");
    if max_poset > enumerate::MAX_POSET_N {
        return Err(Error::UniverseTooLarge {
            n: max_poset,
            max: enumerate::MAX_POSET_N,
        });
    }
    for k in 1..=max_poset {
        for lattice in enumerate::downset_lattices(k)? {
            outcome.checked += 1;
            let report = lattice.check_distributive_corollary()?;
            if !report.is_consistent() {
                outcome.fail(format!("two-atom criterion split on {lattice:?}: {report}"));
            }
        }
    }

    outcome.checked += 1;
    let square = FiniteLattice::boolean(2).check_distributive_corollary()?;
    if !(square.is_consistent() && square.all_hold()) {
        outcome.fail(format!("square spot check: {square}"));
    }
    outcome.checked += 1;
    let cube_lattice = FiniteLattice::boolean(3);
    let cube = cube_lattice.check_distributive_corollary()?;
    if !(cube.is_consistent() && !cube.all_hold()) {
        outcome.fail(format!("cube spot check: {cube}"));
    }
    outcome.checked += 1;
    if !tolerances_isomorphic(
        &cube_lattice.bowtie_tolerance()?,
        &fixtures::punctured_cube(),
    )? {
        outcome.fail("cube tolerance is not isomorphic to the punctured-cube fixture".into());
    }
    Ok(outcome)
}

/// The pivoting block enumeration matches the subset-filtering oracle on
/// seeded random tolerances.
pub fn blocks_oracle_suite(samples: u64, max_n: usize, seed: u64) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("blocks-oracle");
    if max_n > MAX_ORACLE_N {
        return Err(Error::UniverseTooLarge {
            n: max_n,
            max: MAX_ORACLE_N,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.random_range(1..=max_n);
        let p = rng.random_range(0.1..0.9);
        let u = Universe::indexed("x", n)?;
        let t = enumerate::random_tolerance(&mut rng, &u, p);
        outcome.checked += 1;
        let fast = blocks::blocks(&t)?;
        let slow = brute_force_blocks(&t)?;
        if fast.blocks() != slow.as_slice() {
            outcome.fail(format!("block enumeration differs from oracle on {t:?}"));
        }
    }
    Ok(outcome)
}

/// The closure construction of the definable families matches direct
/// evaluation of every approximation, and the complement duality holds,
/// on seeded random tolerances.
pub fn definable_oracle_suite(samples: u64, max_n: usize, seed: u64) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome::new("definable-oracle");
    if max_n > MAX_ORACLE_N {
        return Err(Error::UniverseTooLarge {
            n: max_n,
            max: MAX_ORACLE_N,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.random_range(1..=max_n);
        let p = rng.random_range(0.1..0.9);
        let u = Universe::indexed("x", n)?;
        let t = enumerate::random_tolerance(&mut rng, &u, p);
        outcome.checked += 1;
        let oracle = brute_force_definable(&t)?;
        if !oracle.duality_holds {
            outcome.fail(format!("approximation duality broken on {t:?}"));
        }
        if upper_definable(&t).members() != oracle.upper.as_slice() {
            outcome.fail(format!("upper-definable family differs from oracle on {t:?}"));
        }
        if lower_definable(&t).members() != oracle.lower.as_slice() {
            outcome.fail(format!("lower-definable family differs from oracle on {t:?}"));
        }
    }
    Ok(outcome)
}

/// The overlap relation on nonempty subsets of a three-point set: the three
/// point filters are blocks forming an irredundant covering that induces
/// the relation, exactly one further block exists, and the Helly number
/// exceeds two.
pub fn schreider_suite() -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("schreider");
    let mut check = |ok: bool, what: &str| {
        outcome.checked += 1;
        if !ok {
            outcome.fail(format!("overlap fixture failed: {what}"));
        }
    };

    let t = match fixtures::overlap_tolerance(3) {
        Ok(t) => t,
        Err(e) => {
            check(false, &format!("construction errored: {e}"));
            return outcome;
        }
    };
    let h = fixtures::point_filter_covering(3).expect("three points");

    check(h.induced_tolerance() == t, "point filters induce the overlap relation");
    check(h.is_irredundant(), "point filters are irredundant");
    check(
        h.is_neighborhood_family(&t).unwrap_or(false),
        "point filters are singleton neighborhoods",
    );

    match blocks::blocks(&t) {
        Ok(family) => {
            for member in h.iter() {
                check(family.contains(member), "each point filter is a block");
            }
            check(family.len() == 4, "exactly one block outside the point filters");
            let outside: Vec<&Subset> = family.iter().filter(|b| !h.contains(b)).collect();
            check(
                outside.len() == 1 && outside[0].labels() == vec!["12", "123", "13", "23"],
                "the extra block is the pairwise-overlap family",
            );
        }
        Err(e) => check(false, &format!("block enumeration errored: {e}")),
    }

    check(!helly::has_helly2(&t.quasiorder()), "Helly number exceeds two");
    check(
        covering::irredundant_covering_of(&t).as_ref() == Some(&h),
        "extraction recovers the point filters",
    );

    // The atoms of the upper-definable lattice are the point filters.
    let upper = upper_definable(&t);
    let mut atoms: Vec<Subset> = upper.atoms().into_iter().cloned().collect();
    sort_family(&mut atoms);
    check(
        atoms == h.sets().to_vec(),
        "atoms of the upper-definable lattice are the point filters",
    );

    outcome
}

/// Dispatches a suite by CLI name. `bound` falls back to each suite's
/// specified scale; `samples` and `seed` only affect the randomized
/// oracles.
pub fn run_suite(
    name: &str,
    bound: Option<usize>,
    samples: Option<u64>,
    seed: u64,
) -> Result<Vec<SuiteOutcome>> {
    let outcome = match name {
        "examples" => examples_suite(),
        "d1d2" => d1d2_suite(bound.unwrap_or(4))?,
        "characterization" => characterization_suite(bound.unwrap_or(5))?,
        "helly" => helly_suite(bound.unwrap_or(4))?,
        "main" => main_equivalence_suite(bound.unwrap_or(5))?,
        "c1c2c3" => c1c2c3_suite(bound.unwrap_or(5))?,
        "distributive" => distributive_suite(bound.unwrap_or(4))?,
        "blocks-oracle" => blocks_oracle_suite(samples.unwrap_or(500), bound.unwrap_or(12), seed)?,
        "definable-oracle" => {
            definable_oracle_suite(samples.unwrap_or(200), bound.unwrap_or(12), seed)?
        }
        "schreider" => schreider_suite(),
        "all" => {
            let mut all = Vec::new();
            for suite in SUITE_NAMES.iter().filter(|&&s| s != "all") {
                all.extend(run_suite(suite, bound_for_all(suite, bound), samples, seed)?);
            }
            return Ok(all);
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(vec![outcome])
}

/// When running `all`, a user-supplied bound only applies to suites it is
/// valid for; the rest keep their defaults.
fn bound_for_all(suite: &str, bound: Option<usize>) -> Option<usize> {
    let cap = match suite {
        "d1d2" => enumerate::MAX_COVERING_N,
        "characterization" | "main" => enumerate::MAX_TOLERANCE_N,
        "helly" => enumerate::MAX_QUASIORDER_N,
        "c1c2c3" => 5,
        "distributive" => enumerate::MAX_POSET_N,
        "blocks-oracle" | "definable-oracle" => MAX_ORACLE_N,
        _ => return None,
    };
    bound.filter(|&b| b <= cap)
}

/// All suite names accepted by [`run_suite`].
pub const SUITE_NAMES: [&str; 11] = [
    "examples",
    "d1d2",
    "characterization",
    "helly",
    "main",
    "c1c2c3",
    "distributive",
    "blocks-oracle",
    "definable-oracle",
    "schreider",
    "all",
];
