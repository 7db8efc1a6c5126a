//! The JSON instance and spec file formats.
//!
//! An instance is a single document
//! `{"n": int, "h": {"colors": int, "edges": [[c1,c2],...]}, "coloring":
//! [[u,v,color],...]}` with edges and coloring entries sorted
//! lexicographically and pattern loops written `[c,c]`. The `h` field may
//! instead be the string `"complete_loopless"`, expanded on load to the
//! complete loopless pattern over the colors in use. An optional `labels`
//! table names the vertices. The graph is the set of colored pairs; a
//! complete-graph instance therefore lists all `n(n-1)/2` edges.
//!
//! A search spec travels in the same envelope under a `"spec"` key.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use hcolor::factory::{Constraint, SearchSpec};
use hcolor::model::{HColoredGraph, PatternGraph, SimpleGraph};

pub const COMPLETE_LOOPLESS: &str = "complete_loopless";

/// Pretty JSON with scalar arrays kept on one line, so edge lists and
/// colorings stay readable.
pub fn pretty_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("serializable");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn is_inline(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        _ => !v.is_object(),
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize, out: &mut String| out.push_str(&"  ".repeat(n));
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if is_inline(v) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&item.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                pad(indent + 1, out);
                write_value(item, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            pad(indent, out);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (key, item)) in map.iter().enumerate() {
                pad(indent + 1, out);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(item, indent + 1, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            pad(indent, out);
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PatternField {
    Sentinel(String),
    Explicit { colors: usize, edges: Vec<(usize, usize)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub n: usize,
    pub h: PatternField,
    pub coloring: Vec<(usize, usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Errors that make a document unusable (as opposed to instance
/// violations, which load fine and are reported by validation).
#[derive(Debug)]
pub enum FormatError {
    Json(serde_json::Error),
    Structure(String),
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormatError::Json(e) => write!(f, "json parse error at line {} column {}: {e}", e.line(), e.column()),
            FormatError::Structure(s) => write!(f, "malformed document: {s}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e)
    }
}

fn structure(msg: impl Into<String>) -> FormatError {
    FormatError::Structure(msg.into())
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let file: InstanceFile = serde_json::from_str(text)?;
        file.check_structure()?;
        Ok(file)
    }

    fn check_structure(&self) -> Result<(), FormatError> {
        if self.n > hcolor::model::MAX_VERTICES {
            return Err(structure(format!("order {} exceeds 64", self.n)));
        }
        match &self.h {
            PatternField::Sentinel(s) if s == COMPLETE_LOOPLESS => {}
            PatternField::Sentinel(s) => {
                return Err(structure(format!("unknown pattern sentinel {s:?}")));
            }
            PatternField::Explicit { colors, edges } => {
                if *colors > hcolor::model::MAX_VERTICES {
                    return Err(structure(format!("palette {colors} exceeds 64")));
                }
                for &(a, b) in edges {
                    if a >= *colors || b >= *colors {
                        return Err(structure(format!("pattern edge ({a}, {b}) out of palette")));
                    }
                }
            }
        }
        for &(u, v, _) in &self.coloring {
            if u >= self.n || v >= self.n {
                return Err(structure(format!("coloring endpoint ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(structure(format!("coloring entry ({u}, {v}) is a loop")));
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(structure(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    self.n
                )));
            }
        }
        Ok(())
    }

    /// Builds the in-memory instance. The graph's edges are the colored
    /// pairs (duplicates collapse there but stay visible to validation).
    pub fn to_instance(&self) -> Result<HColoredGraph, FormatError> {
        self.check_structure()?;
        let mut g = SimpleGraph::new(self.n).map_err(|e| structure(e.to_string()))?;
        for &(u, v, _) in &self.coloring {
            let _ = g.add_edge(u, v); // duplicate entries collapse
        }
        let h = match &self.h {
            PatternField::Sentinel(_) => {
                let palette =
                    self.coloring.iter().map(|&(_, _, c)| c + 1).max().unwrap_or(0);
                PatternGraph::complete_loopless(palette)
                    .map_err(|e| structure(e.to_string()))?
            }
            PatternField::Explicit { colors, edges } => {
                PatternGraph::from_pairs(*colors, edges).map_err(|e| structure(e.to_string()))?
            }
        };
        Ok(HColoredGraph::from_parts(g, h, self.coloring.iter().copied()))
    }

    /// Canonical document for an instance: sorted edges and entries.
    pub fn from_instance(inst: &HColoredGraph, labels: Option<Vec<String>>) -> Self {
        let mut coloring = inst.coloring().entries().to_vec();
        coloring.sort_unstable();
        InstanceFile {
            n: inst.order(),
            h: PatternField::Explicit {
                colors: inst.pattern().color_count(),
                edges: inst.pattern().pairs(),
            },
            coloring,
            labels,
        }
    }

    pub fn to_json(&self) -> String {
        pretty_json(self)
    }
}

// ---------------------------------------------------------------------------
// Search specs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintDoc {
    PartCount { vertex: usize, k: usize },
    CycleObstructions { cycle: Vec<usize>, obstructions: Vec<usize> },
    ObstructionAt { cycle: Vec<usize>, vertex: usize },
    NoHCycleThrough { vertex: usize, length: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<usize>,
    pub budget: u64,
    #[serde(default)]
    pub seed: u64,
    pub constraints: Vec<ConstraintDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecFile {
    pub spec: SpecDoc,
}

impl From<&Constraint> for ConstraintDoc {
    fn from(c: &Constraint) -> Self {
        match c {
            Constraint::PartCount { vertex, k } => {
                ConstraintDoc::PartCount { vertex: *vertex, k: *k }
            }
            Constraint::CycleObstructions { cycle, obstructions } => {
                ConstraintDoc::CycleObstructions {
                    cycle: cycle.clone(),
                    obstructions: obstructions.clone(),
                }
            }
            Constraint::ObstructionAt { cycle, vertex } => {
                ConstraintDoc::ObstructionAt { cycle: cycle.clone(), vertex: *vertex }
            }
            Constraint::NoHCycleThrough { vertex, length } => {
                ConstraintDoc::NoHCycleThrough { vertex: *vertex, length: *length }
            }
        }
    }
}

impl From<ConstraintDoc> for Constraint {
    fn from(c: ConstraintDoc) -> Self {
        match c {
            ConstraintDoc::PartCount { vertex, k } => Constraint::PartCount { vertex, k },
            ConstraintDoc::CycleObstructions { cycle, obstructions } => {
                Constraint::CycleObstructions { cycle, obstructions }
            }
            ConstraintDoc::ObstructionAt { cycle, vertex } => {
                Constraint::ObstructionAt { cycle, vertex }
            }
            ConstraintDoc::NoHCycleThrough { vertex, length } => {
                Constraint::NoHCycleThrough { vertex, length }
            }
        }
    }
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_spec(&self) -> SearchSpec {
        SearchSpec {
            n: self.spec.n,
            colors: self.spec.colors,
            constraints: self.spec.constraints.iter().cloned().map(Into::into).collect(),
            budget: self.spec.budget,
            seed: self.spec.seed,
        }
    }

    pub fn from_spec(spec: &SearchSpec) -> Self {
        SpecFile {
            spec: SpecDoc {
                n: spec.n,
                colors: spec.colors,
                budget: spec.budget,
                seed: spec.seed,
                constraints: spec.constraints.iter().map(Into::into).collect(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        pretty_json(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hcolor::model::validate_instance;

    #[test]
    fn parses_and_rebuilds() {
        let text = r#"{"n": 3, "h": {"colors": 2, "edges": [[0,1]]},
                       "coloring": [[0,1,0],[0,2,1],[1,2,0]]}"#;
        let file = InstanceFile::parse(text).unwrap();
        let inst = file.to_instance().unwrap();
        assert!(validate_instance(&inst).is_empty());
        assert!(inst.graph().is_complete());
        let rebuilt = InstanceFile::from_instance(&inst, None);
        assert_eq!(file, rebuilt);
    }

    #[test]
    fn sentinel_expands() {
        let text = r#"{"n": 3, "h": "complete_loopless",
                       "coloring": [[0,1,0],[0,2,1],[1,2,2]]}"#;
        let inst = InstanceFile::parse(text).unwrap().to_instance().unwrap();
        assert_eq!(inst.pattern().color_count(), 3);
        assert_eq!(inst.pattern().pairs(), vec![(0, 1), (0, 2), (1, 2)]);

        let bad = r#"{"n": 3, "h": "rainbow", "coloring": []}"#;
        assert!(InstanceFile::parse(bad).is_err());
    }

    #[test]
    fn structural_rejects() {
        for bad in [
            r#"{"n": 3, "h": {"colors": 1, "edges": []}, "coloring": [[0,3,0]]}"#,
            r#"{"n": 3, "h": {"colors": 1, "edges": []}, "coloring": [[1,1,0]]}"#,
            r#"{"n": 3, "h": {"colors": 1, "edges": [[0,5]]}, "coloring": []}"#,
            r#"{"n": 3, "h": {"colors": 1, "edges": []}, "coloring": [], "labels": ["a"]}"#,
            r#"{"n": 900, "h": {"colors": 1, "edges": []}, "coloring": []}"#,
        ] {
            assert!(InstanceFile::parse(bad).is_err(), "accepted: {bad}");
        }
    }

    #[test]
    fn soft_violations_still_load() {
        // unknown color and duplicate entry parse fine; validation reports
        let text = r#"{"n": 3, "h": {"colors": 1, "edges": []},
                       "coloring": [[0,1,0],[0,1,0],[0,2,7],[1,2,0]]}"#;
        let inst = InstanceFile::parse(text).unwrap().to_instance().unwrap();
        let violations = validate_instance(&inst);
        assert_eq!(violations.len(), 2);
    }

    #[test]
    fn spec_round_trip() {
        let spec = hcolor::factory::figure2_spec();
        let doc = SpecFile::from_spec(&spec);
        let text = doc.to_json();
        let parsed = SpecFile::parse(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(parsed.to_spec(), spec);
    }
}
