//! Graph documents: the 0-based edge-list text format and its JSON twin.
//!
//! ```text
//! c optional comment
//! p 4 3
//! v 2 c
//! e 0 1
//! e 1 2
//! e 2 3
//! ```
//!
//! `p n m` must come first and `m` must equal the number of `e` lines.
//! `v id name` lines name vertices (all or none). An `m s1 s2 ...` line
//! declares the graph complete multipartite with consecutive parts.

use std::fmt::Write as _;

use oneext::Graph;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<usize>>,
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, col, msg: msg.into() }
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument { n: g.n(), edges: g.edges().to_vec(), names: None, parts: None }
    }

    pub fn graph(&self) -> Result<Graph, CliError> {
        Ok(Graph::from_edges(self.n, self.edges.iter().copied())?)
    }

    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    /// Parses either format; JSON is recognized by a leading `{`.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc = if text.trim_start().starts_with('{') {
            serde_json::from_str(text)
                .map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?
        } else {
            Self::parse_edge_list(text)?
        };
        doc.validate()?;
        Ok(doc)
    }

    fn parse_edge_list(text: &str) -> Result<Self, CliError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut names: Vec<Option<String>> = Vec::new();
        let mut parts = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let mut fields = Vec::new();
            let mut rest = raw;
            let mut offset = 0;
            while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
                let tail = &rest[start..];
                let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
                fields.push((offset + start + 1, &tail[..len]));
                offset += start + len;
                rest = &tail[len..];
            }
            let Some(&(col, tag)) = fields.first() else { continue };
            let num = |k: usize| -> Result<usize, CliError> {
                let &(c, w) = fields
                    .get(k)
                    .ok_or_else(|| parse_err(line, raw.len() + 1, "missing field"))?;
                w.parse().map_err(|_| parse_err(line, c, format!("expected a nonnegative integer, got `{w}`")))
            };
            if tag == "c" {
                continue;
            }
            let n = match (tag, header) {
                ("p", None) => {
                    if fields.len() != 3 {
                        return Err(parse_err(line, col, "expected `p n m`"));
                    }
                    let (n, m) = (num(1)?, num(2)?);
                    header = Some((n, m));
                    names = vec![None; n];
                    continue;
                }
                ("p", Some(_)) => return Err(parse_err(line, col, "second `p` line")),
                (_, None) => return Err(parse_err(line, col, "expected `p n m` before other lines")),
                (_, Some((n, _))) => n,
            };
            let vertex = |k: usize| -> Result<usize, CliError> {
                let v = num(k)?;
                if v >= n {
                    return Err(parse_err(line, fields[k].0, format!("vertex {v} out of range 0..{n}")));
                }
                Ok(v)
            };
            match tag {
                "e" => {
                    if fields.len() != 3 {
                        return Err(parse_err(line, col, "expected `e u v`"));
                    }
                    let (u, v) = (vertex(1)?, vertex(2)?);
                    if u == v {
                        return Err(parse_err(line, fields[2].0, format!("self-loop on vertex {u}")));
                    }
                    edges.push((u.min(v), u.max(v)));
                }
                "v" => {
                    if fields.len() != 3 {
                        return Err(parse_err(line, col, "expected `v id name`"));
                    }
                    let v = vertex(1)?;
                    if names[v].is_some() {
                        return Err(parse_err(line, fields[1].0, format!("vertex {v} named twice")));
                    }
                    names[v] = Some(fields[2].1.to_string());
                }
                "m" => {
                    if parts.is_some() {
                        return Err(parse_err(line, col, "second `m` line"));
                    }
                    parts = Some((1..fields.len()).map(num).collect::<Result<Vec<_>, _>>()?);
                }
                _ => return Err(parse_err(line, col, format!("unknown line type `{tag}`"))),
            }
        }
        let (n, m) = header.ok_or_else(|| parse_err(1, 1, "missing `p n m` header"))?;
        if edges.len() != m {
            return Err(parse_err(1, 1, format!("header declares {m} edges, found {}", edges.len())));
        }
        let names = if names.iter().all(Option::is_none) {
            None
        } else if let Some(v) = names.iter().position(Option::is_none) {
            return Err(parse_err(1, 1, format!("vertex {v} has no name while others do")));
        } else {
            Some(names.into_iter().flatten().collect())
        };
        Ok(GraphDocument { n, edges, names, parts })
    }

    fn validate(&self) -> Result<(), CliError> {
        let g = self.graph()?;
        if g.edge_count() != self.edges.len() {
            return Err(CliError::Invalid("duplicate edge".into()));
        }
        if let Some(names) = &self.names {
            if names.len() != self.n {
                return Err(CliError::Invalid(format!("{} names for {} vertices", names.len(), self.n)));
            }
            let mut sorted: Vec<&String> = names.iter().collect();
            sorted.sort();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(CliError::Invalid("vertex names are not distinct".into()));
            }
        }
        if let Some(parts) = &self.parts {
            let (mp, _) = Graph::complete_multipartite(parts)?;
            if mp.n() != self.n || mp.edges() != g.edges() {
                return Err(CliError::Invalid("edges do not match the declared multipartite parts".into()));
            }
        }
        Ok(())
    }

    /// Canonical edge-list text: edges sorted, one `e` line each.
    pub fn to_edge_list(&self) -> String {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        let mut out = format!("p {} {}\n", self.n, edges.len());
        if let Some(parts) = &self.parts {
            out.push('m');
            for s in parts {
                let _ = write!(out, " {s}");
            }
            out.push('\n');
        }
        if let Some(names) = &self.names {
            for (v, name) in names.iter().enumerate() {
                let _ = writeln!(out, "v {v} {name}");
            }
        }
        for (u, v) in edges {
            let _ = writeln!(out, "e {u} {v}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut canon = self.clone();
        canon.edges.sort_unstable();
        let mut out = serde_json::to_string(&canon).expect("plain data serializes");
        out.push('\n');
        out
    }
}
