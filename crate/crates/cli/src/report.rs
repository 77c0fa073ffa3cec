//! The analysis report: a pure function of the input file, emitted as JSON
//! with a fixed key order or as a plain-text table.

use serde::Serialize;

use tolrel::{
    blocks_with_cap, canonical_bases, check_c1_c2_c3, check_characterization,
    check_helly_theorem, check_main_equivalence, concept_extent_lattice, has_helly2,
    helly2_by_triples, helly_number, irredundant_covering_of, lower_definable, upper_definable,
    verify, Covering, EquivalenceReport, Error, SetLattice, Subset, Tolerance,
    DEFAULT_BASE_SEARCH_LIMIT, DEFAULT_HELLY_BOUND, NORMALITY_ORACLE_BOUND,
};

use crate::error::CliError;
use crate::file::{Kind, RelationFile};

/// Universe bound beyond which the exponential lattice sections are skipped.
const LATTICE_SECTION_BOUND: usize = 8;

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub oracle: bool,
    pub block_cap: usize,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    universe: Vec<String>,
    kind: &'static str,
    element_count: usize,
    edge_count: usize,
    neighborhoods: Vec<Neighborhood>,
    blocks: Vec<Vec<String>>,
    minimal_elements: Vec<String>,
    bounded_by_minimal: bool,
    coincides_with_product: bool,
    irredundant_covering: Option<Vec<Vec<String>>>,
    canonical_bases: Vec<Vec<Vec<String>>>,
    helly: HellySection,
    covering: Option<CoveringSection>,
    lattices: Option<LatticeSection>,
    theorems: TheoremSection,
    oracle: Option<OracleSection>,
}

#[derive(Serialize)]
struct Neighborhood {
    element: String,
    members: Vec<String>,
}

#[derive(Serialize)]
struct HellySection {
    bound: usize,
    number: Option<usize>,
    at_most_two: bool,
    by_triples: bool,
}

#[derive(Serialize)]
struct CoveringSection {
    sets: Vec<Vec<String>>,
    is_irredundant: bool,
    is_neighborhood_family: bool,
    is_normal: bool,
    members_all_blocks: bool,
    extra_blocks: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct LatticeSection {
    upper: LatticeSummary,
    lower: LatticeSummary,
    concept_count: usize,
}

#[derive(Serialize)]
struct LatticeSummary {
    size: usize,
    atoms: Vec<Vec<String>>,
    is_ortholattice: bool,
    is_atomistic: bool,
    is_boolean: bool,
}

#[derive(Serialize)]
struct TheoremSection {
    characterization: Equivalence,
    helly: Equivalence,
    main: Option<Equivalence>,
    c1c2c3: Option<Equivalence>,
}

#[derive(Serialize)]
struct Equivalence {
    conditions: Vec<NamedCondition>,
    consistent: bool,
}

#[derive(Serialize)]
struct NamedCondition {
    name: String,
    holds: bool,
}

#[derive(Serialize)]
struct OracleSection {
    blocks_agree: bool,
    definable_families_agree: bool,
    duality_holds: bool,
    normality_agrees: Option<bool>,
}

impl From<&EquivalenceReport> for Equivalence {
    fn from(report: &EquivalenceReport) -> Equivalence {
        Equivalence {
            conditions: report
                .conditions()
                .iter()
                .map(|c| NamedCondition {
                    name: c.name.to_string(),
                    holds: c.holds,
                })
                .collect(),
            consistent: report.is_consistent(),
        }
    }
}

fn set_labels(s: &Subset) -> Vec<String> {
    s.labels().into_iter().map(str::to_string).collect()
}

fn family_labels<'a, I: IntoIterator<Item = &'a Subset>>(family: I) -> Vec<Vec<String>> {
    family.into_iter().map(set_labels).collect()
}

fn summarize_lattice(lattice: &SetLattice) -> Result<LatticeSummary, CliError> {
    Ok(LatticeSummary {
        size: lattice.len(),
        atoms: family_labels(lattice.atoms()),
        is_ortholattice: lattice.is_ortholattice()?,
        is_atomistic: lattice.is_atomistic(),
        is_boolean: lattice.is_boolean(),
    })
}

pub fn analyze(file: &RelationFile, options: AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    let tolerance = file.to_tolerance()?;
    let universe = tolerance.universe().clone();
    let n = universe.len();

    let mut element_labels: Vec<String> = universe.labels().to_vec();
    element_labels.sort();

    let neighborhoods = element_labels
        .iter()
        .map(|label| {
            Ok(Neighborhood {
                element: label.clone(),
                members: set_labels(&tolerance.neighborhood(label)?),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let block_family = blocks_with_cap(&tolerance, options.block_cap)?;
    let quasiorder = tolerance.quasiorder();
    let minimal = quasiorder.minimal_elements();
    let product = quasiorder.tolerance();

    let irredundant = irredundant_covering_of(&tolerance);
    let bases = canonical_bases(&tolerance, DEFAULT_BASE_SEARCH_LIMIT)?;

    let helly = HellySection {
        bound: DEFAULT_HELLY_BOUND,
        number: if n <= DEFAULT_HELLY_BOUND {
            Some(helly_number(&quasiorder, DEFAULT_HELLY_BOUND)?)
        } else {
            None
        },
        at_most_two: has_helly2(&quasiorder),
        by_triples: helly2_by_triples(&quasiorder),
    };

    let covering_section = if file.kind == Kind::Covering {
        let covering = file.to_covering()?;
        Some(build_covering_section(&covering, &tolerance, block_family.blocks())?)
    } else {
        None
    };

    let lattices = if n <= LATTICE_SECTION_BOUND {
        let upper = upper_definable(&tolerance);
        let lower = lower_definable(&tolerance);
        let extents = concept_extent_lattice(&tolerance);
        Some(LatticeSection {
            upper: summarize_lattice(&upper)?,
            lower: summarize_lattice(&lower)?,
            concept_count: extents.len(),
        })
    } else {
        None
    };

    let main = match check_main_equivalence(&tolerance) {
        Ok(report) => Some(Equivalence::from(&report)),
        Err(Error::NotIrredundantlyInduced) => None,
        Err(e) => return Err(e.into()),
    };
    let theorems = TheoremSection {
        characterization: Equivalence::from(&check_characterization(&tolerance)),
        helly: Equivalence::from(&check_helly_theorem(&quasiorder)?),
        main,
        c1c2c3: if n <= LATTICE_SECTION_BOUND {
            Some(Equivalence::from(&check_c1_c2_c3(&tolerance)))
        } else {
            None
        },
    };

    let oracle = if options.oracle {
        let slow_blocks = verify::brute_force_blocks(&tolerance)?;
        let definable = verify::brute_force_definable(&tolerance)?;
        let normality_agrees = match &covering_section {
            Some(section) if n <= NORMALITY_ORACLE_BOUND => {
                let covering = file.to_covering()?;
                Some(covering.normality_oracle()? == section.is_normal)
            }
            _ => None,
        };
        Some(OracleSection {
            blocks_agree: block_family.blocks() == slow_blocks.as_slice(),
            definable_families_agree: n > LATTICE_SECTION_BOUND || {
                upper_definable(&tolerance).members() == definable.upper.as_slice()
                    && lower_definable(&tolerance).members() == definable.lower.as_slice()
            },
            duality_holds: definable.duality_holds,
            normality_agrees,
        })
    } else {
        None
    };

    Ok(AnalysisReport {
        universe: universe.labels().to_vec(),
        kind: file.kind.as_str(),
        element_count: n,
        edge_count: tolerance.edge_count(),
        neighborhoods,
        blocks: family_labels(block_family.blocks()),
        minimal_elements: set_labels(&minimal),
        bounded_by_minimal: quasiorder.is_bounded_by_minimal(),
        coincides_with_product: product == tolerance,
        irredundant_covering: irredundant.map(|h| family_labels(h.sets())),
        canonical_bases: bases
            .iter()
            .map(family_labels)
            .collect(),
        helly,
        covering: covering_section,
        lattices,
        theorems,
        oracle,
    })
}

fn build_covering_section(
    covering: &Covering,
    tolerance: &Tolerance,
    blocks: &[Subset],
) -> Result<CoveringSection, CliError> {
    let members_all_blocks = covering
        .iter()
        .all(|member| blocks.iter().any(|b| b == member));
    let extra_blocks: Vec<Vec<String>> = blocks
        .iter()
        .filter(|b| !covering.contains(b))
        .map(set_labels)
        .collect();
    // Normality is equality with the block family of the induced tolerance,
    // which is exactly the family already enumerated here.
    let is_normal = covering.sets() == blocks;
    Ok(CoveringSection {
        sets: family_labels(covering.sets()),
        is_irredundant: covering.is_irredundant(),
        is_neighborhood_family: covering.is_neighborhood_family(tolerance)?,
        is_normal,
        members_all_blocks,
        extra_blocks,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let fam = |family: &[Vec<String>]| {
            family
                .iter()
                .map(|set| format!("{{{}}}", set.join(" ")))
                .collect::<Vec<_>>()
                .join(", ")
        };
        out.push_str(&format!(
            "universe          {} ({} elements, {} edges)\n",
            self.universe.join(" "),
            self.element_count,
            self.edge_count
        ));
        out.push_str("neighborhoods\n");
        for hood in &self.neighborhoods {
            out.push_str(&format!(
                "  R({})            {{{}}}\n",
                hood.element,
                hood.members.join(" ")
            ));
        }
        out.push_str(&format!("blocks            {}\n", fam(&self.blocks)));
        out.push_str(&format!(
            "minimal elements  {{{}}}\n",
            self.minimal_elements.join(" ")
        ));
        out.push_str(&format!(
            "bounded by minimal elements: {}; coincides with product tolerance: {}\n",
            self.bounded_by_minimal, self.coincides_with_product
        ));
        match &self.irredundant_covering {
            Some(h) => out.push_str(&format!("irredundant cover {}\n", fam(h))),
            None => out.push_str("irredundant cover (none exists)\n"),
        }
        for (i, base) in self.canonical_bases.iter().enumerate() {
            out.push_str(&format!("canonical base #{} {}\n", i + 1, fam(base)));
        }
        out.push_str(&format!(
            "helly             number={} at-most-two={} by-triples={}\n",
            self.helly
                .number
                .map_or("n/a".to_string(), |k| k.to_string()),
            self.helly.at_most_two,
            self.helly.by_triples
        ));
        if let Some(c) = &self.covering {
            out.push_str(&format!(
                "input covering    irredundant={} neighborhood-family={} normal={}\n",
                c.is_irredundant, c.is_neighborhood_family, c.is_normal
            ));
            if !c.extra_blocks.is_empty() {
                out.push_str(&format!(
                    "                  blocks outside the covering: {}\n",
                    fam(&c.extra_blocks)
                ));
            }
        }
        if let Some(l) = &self.lattices {
            out.push_str(&format!(
                "upper lattice     size={} atoms={} ortholattice={} atomistic={} boolean={}\n",
                l.upper.size,
                fam(&l.upper.atoms),
                l.upper.is_ortholattice,
                l.upper.is_atomistic,
                l.upper.is_boolean
            ));
            out.push_str(&format!(
                "lower lattice     size={} ortholattice={} atomistic={} boolean={}\n",
                l.lower.size, l.lower.is_ortholattice, l.lower.is_atomistic, l.lower.is_boolean
            ));
            out.push_str(&format!("concepts          {}\n", l.concept_count));
        }
        let theorem = |name: &str, eq: &Equivalence| {
            let mut line = format!("theorem {name:<10}");
            for c in &eq.conditions {
                line.push_str(&format!(" {}={}", c.name, c.holds));
            }
            line.push_str(&format!(" consistent={}\n", eq.consistent));
            line
        };
        out.push_str(&theorem("charact.", &self.theorems.characterization));
        out.push_str(&theorem("helly", &self.theorems.helly));
        if let Some(main) = &self.theorems.main {
            out.push_str(&theorem("main", main));
        }
        if let Some(c) = &self.theorems.c1c2c3 {
            out.push_str(&theorem("c1c2c3", c));
        }
        if let Some(o) = &self.oracle {
            out.push_str(&format!(
                "oracle            blocks-agree={} definable-agree={} duality={} normality-agrees={}\n",
                o.blocks_agree,
                o.definable_families_agree,
                o.duality_holds,
                o.normality_agrees
                    .map_or("n/a".to_string(), |b| b.to_string())
            ));
        }
        out
    }
}
