//! Reading and writing spaces, and DOT export of representing trees.
//!
//! Matrix format (UTF-8, LF line endings; `#` starts a comment, blank
//! lines are skipped):
//!
//! ```text
//! n 3
//! a b c
//! 1
//! 2 2
//! ```
//!
//! The first line gives the point count, the second the labels, and line
//! `k` of the remainder holds the distances from point `k + 1` to points
//! `0..=k`. The structured form is a JSON object with `format`, `version`,
//! `labels` and `dist`, where `dist` holds the same rows as arrays of
//! decimal strings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::UltrametricSpace;
use crate::tree::RepresentingTree;
use crate::weight::Weight;

pub const DOCUMENT_FORMAT: &str = "ultrametric-space";
pub const DOCUMENT_VERSION: u32 = 1;

/// Structured form of a space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDocument {
    pub format: String,
    pub version: u32,
    pub labels: Vec<String>,
    /// Strict lower triangle; row `k` has `k + 1` entries.
    pub dist: Vec<Vec<String>>,
}

impl SpaceDocument {
    pub fn from_space(space: &UltrametricSpace) -> SpaceDocument {
        SpaceDocument {
            format: DOCUMENT_FORMAT.into(),
            version: DOCUMENT_VERSION,
            labels: space.labels().to_vec(),
            dist: lower_rows(space)
                .map(|row| row.iter().map(Weight::to_string).collect())
                .collect(),
        }
    }

    pub fn to_space(&self) -> Result<UltrametricSpace> {
        let doc_err = |message: String| Error::Parse { line: 0, message };
        if self.format != DOCUMENT_FORMAT {
            return Err(doc_err(format!("unknown format `{}`", self.format)));
        }
        if self.version != DOCUMENT_VERSION {
            return Err(doc_err(format!("unsupported version {}", self.version)));
        }
        let n = self.labels.len();
        if self.dist.len() != n.saturating_sub(1) {
            return Err(doc_err(format!(
                "`dist` has {} rows, expected {}",
                self.dist.len(),
                n.saturating_sub(1)
            )));
        }
        let mut rows = Vec::with_capacity(self.dist.len());
        for (k, row) in self.dist.iter().enumerate() {
            if row.len() != k + 1 {
                return Err(doc_err(format!("`dist[{k}]` has {} entries, expected {}", row.len(), k + 1)));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(c, s)| {
                    s.parse::<Weight>()
                        .map_err(|_| doc_err(format!("`dist[{k}][{c}]`: invalid weight `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        from_lower_rows(self.labels.clone(), rows)
    }
}

fn lower_rows(space: &UltrametricSpace) -> impl Iterator<Item = Vec<Weight>> + '_ {
    (1..space.len()).map(move |i| (0..i).map(|j| space.d(i, j)).collect())
}

fn from_lower_rows(labels: Vec<String>, rows: Vec<Vec<Weight>>) -> Result<UltrametricSpace> {
    let n = labels.len();
    let mut matrix = vec![vec![Weight::ZERO; n]; n];
    for (k, row) in rows.into_iter().enumerate() {
        let i = k + 1;
        for (j, w) in row.into_iter().enumerate() {
            matrix[i][j] = w;
            matrix[j][i] = w;
        }
    }
    UltrametricSpace::new(labels, matrix)
}

/// Parses either encoding; a leading `{` selects the structured form.
pub fn parse_space(text: &str) -> Result<UltrametricSpace> {
    if text.trim_start().starts_with('{') {
        parse_document(text)
    } else {
        parse_matrix(text)
    }
}

pub fn parse_document(text: &str) -> Result<UltrametricSpace> {
    let doc: SpaceDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    doc.to_space()
}

pub fn parse_matrix(text: &str) -> Result<UltrametricSpace> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: String| Error::Parse { line, message };

    let (line, header) = lines.next().ok_or_else(|| err(1, "missing `n <count>` header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| err(line, format!("invalid point count `{count}`")))?,
        _ => return Err(err(line, format!("expected `n <count>`, found `{header}`"))),
    };
    if n == 0 {
        return Err(Error::EmptySpace);
    }
    let (line, label_line) = lines.next().ok_or_else(|| err(line + 1, "missing label line".into()))?;
    let labels: Vec<String> = label_line.split_whitespace().map(str::to_string).collect();
    if labels.len() != n {
        return Err(err(line, format!("expected {n} labels, found {}", labels.len())));
    }
    let mut last = line;
    let mut rows = Vec::with_capacity(n - 1);
    for k in 0..n - 1 {
        let (line, row) = lines
            .next()
            .ok_or_else(|| err(last + 1, format!("missing distance row for `{}`", labels[k + 1])))?;
        last = line;
        let fields: Vec<&str> = row.split_whitespace().collect();
        if fields.len() != k + 1 {
            return Err(err(line, format!("expected {} distances, found {}", k + 1, fields.len())));
        }
        let parsed = fields
            .iter()
            .enumerate()
            .map(|(c, f)| {
                f.parse::<Weight>()
                    .map_err(|_| err(line, format!("field {}: invalid weight `{f}`", c + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(parsed);
    }
    if let Some((line, extra)) = lines.next() {
        return Err(err(line, format!("unexpected trailing content `{extra}`")));
    }
    from_lower_rows(labels, rows)
}

/// Matrix-format text of `space`.
pub fn to_matrix_text(space: &UltrametricSpace) -> String {
    let mut out = format!("n {}\n{}\n", space.len(), space.labels().join(" "));
    for row in lower_rows(space) {
        let fields: Vec<String> = row.iter().map(Weight::to_string).collect();
        out.push_str(&fields.join(" "));
        out.push('\n');
    }
    out
}

pub fn to_document_json(space: &UltrametricSpace) -> String {
    serde_json::to_string_pretty(&SpaceDocument::from_space(space)).expect("document serializes")
}

/// DOT rendering of the tree: internal nodes show their diameter, leaves
/// the point label. Nodes and edges are emitted in node-id order.
pub fn export_tree_dot(space: &UltrametricSpace, tree: &RepresentingTree) -> String {
    let mut out = String::from("digraph representing_tree {\n");
    out.push_str("  node [shape=circle];\n");
    for (id, node) in tree.nodes().iter().enumerate() {
        let (label, shape) = if node.is_leaf() && tree.len() > 1 {
            (space.label(node.ball.first().expect("leaf")).to_string(), "box")
        } else {
            (node.label.to_string(), "circle")
        };
        let _ = writeln!(out, "  n{id} [label=\"{}\", shape={shape}];", escape(&label));
    }
    for (id, node) in tree.nodes().iter().enumerate() {
        for c in &node.children {
            let _ = writeln!(out, "  n{id} -> n{c};");
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
