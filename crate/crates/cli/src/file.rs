//! The relation file formats: a line-oriented text form and a JSON mirror
//! of the same schema, selected by the `.json` extension.
//!
//! Text form:
//!
//! ```text
//! universe: a b c d
//! kind: tolerance
//! edge: a b
//! ```
//!
//! `edge:` lines are unordered pairs for tolerances and directed pairs for
//! quasiorders; loops are accepted and ignored. Covering files use
//! `set: x y z` lines; lattice files use `cover: x y` Hasse pairs with
//! optional `bottom:` and `top:` sanity hints. Blank lines and `#` comments
//! are skipped.

use serde::Deserialize;

use tolrel::{Covering, FiniteLattice, Quasiorder, Subset, Tolerance, Universe};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Tolerance,
    Quasiorder,
    Covering,
    Lattice,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Tolerance => "tolerance",
            Kind::Quasiorder => "quasiorder",
            Kind::Covering => "covering",
            Kind::Lattice => "lattice",
        }
    }

    fn parse(s: &str) -> Result<Kind, CliError> {
        match s {
            "tolerance" => Ok(Kind::Tolerance),
            "quasiorder" => Ok(Kind::Quasiorder),
            "covering" => Ok(Kind::Covering),
            "lattice" => Ok(Kind::Lattice),
            other => Err(CliError::Parse(format!(
                "unknown kind `{other}` (expected tolerance, quasiorder, covering, or lattice)"
            ))),
        }
    }
}

/// A parsed relation file, not yet validated against the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFile {
    pub universe: Vec<String>,
    pub kind: Kind,
    pub edges: Vec<(String, String)>,
    pub sets: Vec<Vec<String>>,
    pub covers: Vec<(String, String)>,
    pub bottom: Option<String>,
    pub top: Option<String>,
}

impl RelationFile {
    pub fn parse(contents: &str, json: bool) -> Result<RelationFile, CliError> {
        if json {
            RelationFile::parse_json(contents)
        } else {
            RelationFile::parse_text(contents)
        }
    }

    fn parse_text(contents: &str) -> Result<RelationFile, CliError> {
        let mut universe: Option<Vec<String>> = None;
        let mut kind: Option<Kind> = None;
        let mut edges = Vec::new();
        let mut sets = Vec::new();
        let mut covers = Vec::new();
        let mut bottom = None;
        let mut top = None;

        for (number, raw) in contents.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (directive, rest) = line.split_once(':').ok_or_else(|| {
                CliError::Parse(format!("line {}: expected `directive: ...`", number + 1))
            })?;
            let tokens: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            let at = |wanted: usize| -> Result<(), CliError> {
                if tokens.len() == wanted {
                    Ok(())
                } else {
                    Err(CliError::Parse(format!(
                        "line {}: `{directive}:` takes {wanted} labels, found {}",
                        number + 1,
                        tokens.len()
                    )))
                }
            };
            match directive.trim() {
                "universe" => {
                    if universe.is_some() {
                        return Err(CliError::Parse(format!(
                            "line {}: repeated `universe:` header",
                            number + 1
                        )));
                    }
                    if tokens.is_empty() {
                        return Err(CliError::Parse(format!(
                            "line {}: `universe:` needs at least one label",
                            number + 1
                        )));
                    }
                    universe = Some(tokens);
                }
                "kind" => {
                    if kind.is_some() {
                        return Err(CliError::Parse(format!(
                            "line {}: repeated `kind:` header",
                            number + 1
                        )));
                    }
                    at(1)?;
                    if universe.is_none() {
                        return Err(CliError::Parse(format!(
                            "line {}: `kind:` must follow `universe:`",
                            number + 1
                        )));
                    }
                    kind = Some(Kind::parse(&tokens[0])?);
                }
                body => {
                    let Some(kind) = kind else {
                        return Err(CliError::Parse(format!(
                            "line {}: `{body}:` before `kind:` header",
                            number + 1
                        )));
                    };
                    match (kind, body) {
                        (Kind::Tolerance | Kind::Quasiorder, "edge") => {
                            at(2)?;
                            edges.push((tokens[0].clone(), tokens[1].clone()));
                        }
                        (Kind::Covering, "set") => {
                            if tokens.is_empty() {
                                return Err(CliError::Parse(format!(
                                    "line {}: `set:` needs at least one label",
                                    number + 1
                                )));
                            }
                            sets.push(tokens);
                        }
                        (Kind::Lattice, "cover") => {
                            at(2)?;
                            covers.push((tokens[0].clone(), tokens[1].clone()));
                        }
                        (Kind::Lattice, "bottom") => {
                            at(1)?;
                            bottom = Some(tokens[0].clone());
                        }
                        (Kind::Lattice, "top") => {
                            at(1)?;
                            top = Some(tokens[0].clone());
                        }
                        (kind, other) => {
                            return Err(CliError::Parse(format!(
                                "line {}: `{other}:` is not valid in a {} file",
                                number + 1,
                                kind.as_str()
                            )));
                        }
                    }
                }
            }
        }

        let universe = universe
            .ok_or_else(|| CliError::Parse("missing `universe:` header".into()))?;
        let kind = kind.ok_or_else(|| CliError::Parse("missing `kind:` header".into()))?;
        Ok(RelationFile {
            universe,
            kind,
            edges,
            sets,
            covers,
            bottom,
            top,
        })
    }

    fn parse_json(contents: &str) -> Result<RelationFile, CliError> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct JsonFile {
            universe: Vec<String>,
            kind: String,
            #[serde(default)]
            edges: Vec<(String, String)>,
            #[serde(default)]
            sets: Vec<Vec<String>>,
            #[serde(default)]
            covers: Vec<(String, String)>,
            #[serde(default)]
            bottom: Option<String>,
            #[serde(default)]
            top: Option<String>,
        }
        let parsed: JsonFile = serde_json::from_str(contents)
            .map_err(|e| CliError::Parse(format!("invalid JSON: {e}")))?;
        let kind = Kind::parse(&parsed.kind)?;
        let file = RelationFile {
            universe: parsed.universe,
            kind,
            edges: parsed.edges,
            sets: parsed.sets,
            covers: parsed.covers,
            bottom: parsed.bottom,
            top: parsed.top,
        };
        if file.universe.is_empty() {
            return Err(CliError::Parse("`universe` needs at least one label".into()));
        }
        let misplaced = match kind {
            Kind::Tolerance | Kind::Quasiorder => {
                !file.sets.is_empty()
                    || !file.covers.is_empty()
                    || file.bottom.is_some()
                    || file.top.is_some()
            }
            Kind::Covering => {
                !file.edges.is_empty()
                    || !file.covers.is_empty()
                    || file.bottom.is_some()
                    || file.top.is_some()
            }
            Kind::Lattice => !file.edges.is_empty() || !file.sets.is_empty(),
        };
        if misplaced {
            return Err(CliError::Parse(format!(
                "fields not valid for kind `{}` are present",
                kind.as_str()
            )));
        }
        Ok(file)
    }

    /// Canonical text rendering: body lines deduplicated and sorted, loops
    /// dropped. Parsing the result reproduces the same canonical file.
    #[cfg_attr(not(test), allow(dead_code))]
    pub fn emit_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("universe: {}\n", self.universe.join(" ")));
        out.push_str(&format!("kind: {}\n", self.kind.as_str()));
        match self.kind {
            Kind::Tolerance => {
                let mut edges: Vec<(String, String)> = self
                    .edges
                    .iter()
                    .filter(|(x, y)| x != y)
                    .map(|(x, y)| {
                        if x <= y {
                            (x.clone(), y.clone())
                        } else {
                            (y.clone(), x.clone())
                        }
                    })
                    .collect();
                edges.sort();
                edges.dedup();
                for (x, y) in edges {
                    out.push_str(&format!("edge: {x} {y}\n"));
                }
            }
            Kind::Quasiorder => {
                let mut edges: Vec<(String, String)> = self
                    .edges
                    .iter()
                    .filter(|(x, y)| x != y)
                    .cloned()
                    .collect();
                edges.sort();
                edges.dedup();
                for (x, y) in edges {
                    out.push_str(&format!("edge: {x} {y}\n"));
                }
            }
            Kind::Covering => {
                let mut sets: Vec<Vec<String>> = self
                    .sets
                    .iter()
                    .map(|s| {
                        let mut s = s.clone();
                        s.sort();
                        s.dedup();
                        s
                    })
                    .collect();
                sets.sort();
                sets.dedup();
                for set in sets {
                    out.push_str(&format!("set: {}\n", set.join(" ")));
                }
            }
            Kind::Lattice => {
                let mut covers = self.covers.clone();
                covers.sort();
                covers.dedup();
                for (x, y) in covers {
                    out.push_str(&format!("cover: {x} {y}\n"));
                }
                if let Some(b) = &self.bottom {
                    out.push_str(&format!("bottom: {b}\n"));
                }
                if let Some(t) = &self.top {
                    out.push_str(&format!("top: {t}\n"));
                }
            }
        }
        out
    }

    pub fn to_universe(&self) -> Result<Universe, CliError> {
        Ok(Universe::new(self.universe.clone())?)
    }

    /// The tolerance named by the file: direct for tolerance files, induced
    /// for covering files.
    pub fn to_tolerance(&self) -> Result<Tolerance, CliError> {
        let universe = self.to_universe()?;
        match self.kind {
            Kind::Tolerance => {
                let pairs: Vec<(&str, &str)> = self
                    .edges
                    .iter()
                    .map(|(x, y)| (x.as_str(), y.as_str()))
                    .collect();
                Ok(Tolerance::from_edges(&universe, pairs, true)?)
            }
            Kind::Covering => Ok(self.to_covering()?.induced_tolerance()),
            other => Err(CliError::Validation(format!(
                "expected a tolerance or covering file, found kind `{}`",
                other.as_str()
            ))),
        }
    }

    pub fn to_covering(&self) -> Result<Covering, CliError> {
        if self.kind != Kind::Covering {
            return Err(CliError::Validation(format!(
                "expected a covering file, found kind `{}`",
                self.kind.as_str()
            )));
        }
        let universe = self.to_universe()?;
        let members = self
            .sets
            .iter()
            .map(|labels| Subset::from_labels(&universe, labels.iter().map(String::as_str)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Covering::new(&universe, members)?)
    }

    pub fn to_quasiorder(&self, closure: bool) -> Result<Quasiorder, CliError> {
        if self.kind != Kind::Quasiorder {
            return Err(CliError::Validation(format!(
                "expected a quasiorder file, found kind `{}`",
                self.kind.as_str()
            )));
        }
        let universe = self.to_universe()?;
        let pairs: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|(x, y)| (x.as_str(), y.as_str()))
            .collect();
        Ok(Quasiorder::from_pairs(&universe, pairs, closure)?)
    }

    pub fn to_lattice(&self) -> Result<FiniteLattice, CliError> {
        if self.kind != Kind::Lattice {
            return Err(CliError::Validation(format!(
                "expected a lattice file, found kind `{}`",
                self.kind.as_str()
            )));
        }
        let covers: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|(x, y)| (x.as_str(), y.as_str()))
            .collect();
        let lattice = FiniteLattice::from_covers(&self.universe, covers)?;
        if let Some(declared) = &self.bottom {
            let computed = lattice.label(lattice.bottom());
            if declared != computed {
                return Err(CliError::Validation(format!(
                    "declared bottom `{declared}` but the least element is `{computed}`"
                )));
            }
        }
        if let Some(declared) = &self.top {
            let computed = lattice.label(lattice.top());
            if declared != computed {
                return Err(CliError::Validation(format!(
                    "declared top `{declared}` but the greatest element is `{computed}`"
                )));
            }
        }
        Ok(lattice)
    }
}
