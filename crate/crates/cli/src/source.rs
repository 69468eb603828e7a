use std::fs;

use ricci_core::graph::{parse_edge_list, parse_graph6};
use ricci_core::Graph;

use crate::error::CliError;
use crate::expr::parse_expr;
use crate::SourceArgs;

/// A graph plus whatever naming the input carried.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// Original labels for edge-list input.
    pub labels: Option<Vec<String>>,
    pub designated_edge: Option<(usize, usize)>,
}

impl LoadedGraph {
    pub fn load(src: &SourceArgs) -> Result<Self, CliError> {
        if let Some(text) = &src.family {
            let expr = parse_expr(&[text])?;
            return Ok(LoadedGraph {
                graph: expr.build()?,
                labels: None,
                designated_edge: expr.designated_edge(),
            });
        }
        if let Some(path) = &src.file {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            let el = parse_edge_list(&text)?;
            return Ok(LoadedGraph {
                graph: el.graph,
                labels: Some(el.labels),
                designated_edge: None,
            });
        }
        if let Some(g6) = &src.graph6 {
            return Ok(LoadedGraph {
                graph: parse_graph6(g6.as_bytes())?,
                labels: None,
                designated_edge: None,
            });
        }
        Err(CliError::Input("no graph source given".into()))
    }

    /// Resolves a command-line vertex token to an index.
    pub fn vertex(&self, token: &str) -> Result<usize, CliError> {
        if let Some(labels) = &self.labels {
            return labels
                .iter()
                .position(|l| l == token)
                .ok_or_else(|| CliError::Domain(format!("no vertex labelled `{token}`")));
        }
        let v: usize = token
            .parse()
            .map_err(|_| CliError::Input(format!("`{token}` is not a vertex index")))?;
        if v >= self.graph.n() {
            return Err(CliError::Domain(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.graph.n()
            )));
        }
        Ok(v)
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }
}
