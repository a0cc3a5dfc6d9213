//! TOML graph documents.
//!
//! ```toml
//! vertices = ["v", "w"]
//!
//! [[edges]]
//! name = "a"
//! dom = "v"
//! cod = "w"
//! ```
//!
//! Edges out of a vertex are ranked by listing order; unknown keys are errors.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{AnickError, Result};
use crate::leavitt::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeRecord>,
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| AnickError::GraphParse(e.to_string().trim_end().to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| AnickError::GraphParse(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            AnickError::GraphParse(msg) => AnickError::GraphParse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(&str, &str, &str)> = self
            .edges
            .iter()
            .map(|e| (e.name.as_str(), e.dom.as_str(), e.cod.as_str()))
            .collect();
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        Graph::new(&vertices, &edges)
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            vertices: g.vertices().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    name: e.name.clone(),
                    dom: g.vertices()[e.dom].clone(),
                    cod: g.vertices()[e.cod].clone(),
                })
                .collect(),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("graph documents always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leavitt::suite;

    #[test]
    fn parses_parallel_edges() {
        let doc = GraphDocument::parse(
            r#"
vertices = ["v", "w"]

[[edges]]
name = "a"
dom = "v"
cod = "w"

[[edges]]
name = "b"
dom = "v"
cod = "w"
"#,
        )
        .unwrap();
        let g = doc.to_graph().unwrap();
        assert_eq!(g.edges_from(0), vec![0, 1]);
        assert_eq!(g.top_edge(0), Some(0));
    }

    #[test]
    fn unknown_key_is_positional_error() {
        let err = GraphDocument::parse("vertices = [\"v\"]\ncolour = 3\n").unwrap_err();
        let AnickError::GraphParse(msg) = err else {
            panic!("wrong error")
        };
        assert!(msg.contains("line 2"), "{msg}");
        assert!(msg.contains("colour"), "{msg}");
    }

    #[test]
    fn dangling_vertex_is_graph_error() {
        let doc = GraphDocument::parse(
            "vertices = [\"v\"]\n[[edges]]\nname = \"e\"\ndom = \"v\"\ncod = \"u\"\n",
        )
        .unwrap();
        assert!(matches!(doc.to_graph(), Err(AnickError::InvalidGraph(_))));
    }

    #[test]
    fn round_trip_through_toml() {
        for (_, g) in suite() {
            let doc = GraphDocument::from_graph(&g);
            let back = GraphDocument::parse(&doc.to_toml()).unwrap();
            assert_eq!(back.to_graph().unwrap(), g);
        }
    }
}
