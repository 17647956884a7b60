//! JSON file formats and DOT export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::constructions::TwoSwitchStep;
use crate::error::{Error, Result};
use crate::forcing::{ForcingCertificate, SpectrumResult};
use crate::graph::{Coord, Edge, FamilyTag, Graph, VertexId};
use crate::matching::{EdgeSet, Matching};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub family: String,
    pub params: Map<String, Value>,
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<BTreeMap<VertexId, [u32; 2]>>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile {
            family: g.family().name.clone(),
            params: g.family().params.clone(),
            vertex_count: g.vertex_count(),
            edges: g.edges().to_vec(),
            coords: g.coords().map(|cs| {
                cs.iter()
                    .enumerate()
                    .map(|(v, c)| (v, [c.row, c.col]))
                    .collect()
            }),
        }
    }
}

impl TryFrom<GraphFile> for Graph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Graph> {
        let coords = match file.coords {
            None => None,
            Some(map) => {
                if map.len() != file.vertex_count || map.keys().enumerate().any(|(i, &v)| i != v) {
                    return Err(Error::InvalidGraph(
                        "coords must list every vertex exactly once".into(),
                    ));
                }
                Some(
                    map.values()
                        .map(|&[row, col]| Coord::new(row, col))
                        .collect(),
                )
            }
        };
        Graph::new(
            file.vertex_count,
            file.edges,
            coords,
            FamilyTag {
                name: file.family,
                params: file.params,
            },
        )
    }
}

/// Compact canonical serialization; the graph hash is taken over it.
pub fn graph_to_canonical_json(g: &Graph) -> String {
    serde_json::to_string(&GraphFile::from(g)).expect("graph serialization cannot fail")
}

pub fn graph_to_json(g: &Graph) -> String {
    let mut out =
        serde_json::to_string_pretty(&GraphFile::from(g)).expect("graph serialization cannot fail");
    out.push('\n');
    out
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text)?;
    Graph::try_from(file)
}

pub fn graph_hash(g: &Graph) -> String {
    hex::encode(Sha256::digest(graph_to_canonical_json(g).as_bytes()))
}

/// Matching files and edge-set files share one layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListFile {
    pub graph_hash: String,
    pub edges: Vec<Edge>,
}

impl EdgeListFile {
    pub fn new(g: &Graph, edges: &[Edge]) -> Self {
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        EdgeListFile {
            graph_hash: g.graph_hash(),
            edges,
        }
    }

    pub fn check_hash(&self, g: &Graph) -> Result<()> {
        let expected = g.graph_hash();
        if self.graph_hash != expected {
            return Err(Error::HashMismatch {
                expected,
                found: self.graph_hash.clone(),
            });
        }
        Ok(())
    }

    pub fn to_matching(&self, g: &Graph) -> Result<Matching> {
        self.check_hash(g)?;
        Matching::from_edges(g, self.edges.iter().copied())
    }

    pub fn to_edge_set(&self, g: &Graph) -> Result<EdgeSet> {
        self.check_hash(g)?;
        if let Some(&e) = self.edges.iter().find(|&&e| !g.contains_edge(e)) {
            return Err(Error::EdgeNotInGraph(e));
        }
        Ok(EdgeSet::from_edges(self.edges.iter().copied()))
    }
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable");
    out.push('\n');
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub graph_hash: String,
    pub matching: Vec<Edge>,
    pub forcing_set: Vec<Edge>,
    pub forcing_number: usize,
    pub packing_number: usize,
}

impl CertificateFile {
    pub fn new(g: &Graph, cert: &ForcingCertificate, packing_number: usize) -> Self {
        CertificateFile {
            graph_hash: g.graph_hash(),
            matching: cert.matching.edges().to_vec(),
            forcing_set: cert.set.as_slice().to_vec(),
            forcing_number: cert.size,
            packing_number,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumFile {
    pub graph_hash: String,
    pub values: Vec<usize>,
    pub f_min: usize,
    pub f_max: usize,
    pub matching_count: usize,
    pub witnesses: BTreeMap<usize, Vec<Edge>>,
}

impl SpectrumFile {
    pub fn new(g: &Graph, spectrum: &SpectrumResult) -> Self {
        SpectrumFile {
            graph_hash: g.graph_hash(),
            values: spectrum.values(),
            f_min: spectrum.f_min,
            f_max: spectrum.f_max,
            matching_count: spectrum.matching_count,
            witnesses: spectrum
                .witnesses
                .iter()
                .map(|(&f, m)| (f, m.edges().to_vec()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepFile {
    pub cycle: [VertexId; 4],
    pub removed: [Edge; 2],
    pub added: [Edge; 2],
}

impl From<&TwoSwitchStep> for TraceStepFile {
    fn from(step: &TwoSwitchStep) -> Self {
        TraceStepFile {
            cycle: step.cycle,
            removed: step.removed(),
            added: step.added(),
        }
    }
}

impl TryFrom<&TraceStepFile> for TwoSwitchStep {
    type Error = Error;

    fn try_from(file: &TraceStepFile) -> Result<TwoSwitchStep> {
        let step = TwoSwitchStep::new(file.cycle);
        let mut removed = file.removed;
        let mut added = file.added;
        removed.sort_unstable();
        added.sort_unstable();
        if removed != step.removed() || added != step.added() {
            return Err(Error::InvalidSwitch(format!(
                "edges of step {:?} disagree with its cycle",
                file.cycle
            )));
        }
        Ok(step)
    }
}

pub fn trace_to_json(steps: &[TwoSwitchStep]) -> String {
    to_pretty_json(&steps.iter().map(TraceStepFile::from).collect::<Vec<_>>())
}

pub fn trace_from_json(text: &str) -> Result<Vec<TwoSwitchStep>> {
    let files: Vec<TraceStepFile> = serde_json::from_str(text)?;
    files.iter().map(TwoSwitchStep::try_from).collect()
}

/// One undirected `graph` block; grid coordinates become pinned positions.
pub fn to_dot(g: &Graph, highlight: Option<&[Edge]>) -> String {
    let mut out = String::new();
    let name = g
        .family()
        .name
        .replace(|c: char| !c.is_ascii_alphanumeric(), "_");
    let _ = writeln!(out, "graph {name} {{");
    for v in 0..g.vertex_count() {
        match g.coord(v) {
            Some(c) => {
                let _ = writeln!(out, "  {v} [pos=\"{},-{}!\"];", c.col, c.row);
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for e in g.edges() {
        let bold = highlight.is_some_and(|h| h.binary_search(e).is_ok());
        if bold {
            let _ = writeln!(out, "  {} -- {} [penwidth=3];", e.lo(), e.hi());
        } else {
            let _ = writeln!(out, "  {} -- {};", e.lo(), e.hi());
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_gadget_g, make_grid, make_stop_sign};

    #[test]
    fn graph_round_trip() {
        for g in [
            make_grid(3, 4).unwrap(),
            make_stop_sign(3, 1).unwrap(),
            make_gadget_g(3).unwrap().0,
        ] {
            let text = graph_to_json(&g);
            let back = graph_from_json(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(graph_to_json(&back), text);
            assert_eq!(back.graph_hash(), g.graph_hash());
        }
    }

    #[test]
    fn hash_separates_graphs() {
        assert_ne!(
            make_grid(2, 3).unwrap().graph_hash(),
            make_grid(3, 2).unwrap().graph_hash()
        );
    }

    #[test]
    fn json_layout() {
        let g = make_grid(1, 2).unwrap();
        assert_eq!(
            graph_to_canonical_json(&g),
            r#"{"family":"grid","params":{"m":1,"n":2},"vertex_count":2,"edges":[[0,1]],"coords":{"0":[1,1],"1":[1,2]}}"#
        );
    }

    #[test]
    fn rejects_loops_and_bad_coords() {
        let loop_edge = r#"{"family":"x","params":{},"vertex_count":2,"edges":[[1,1]]}"#;
        assert!(graph_from_json(loop_edge).is_err());
        let gap = r#"{"family":"x","params":{},"vertex_count":2,"edges":[[0,1]],"coords":{"0":[1,1],"2":[1,2]}}"#;
        assert!(graph_from_json(gap).is_err());
    }

    #[test]
    fn hash_mismatch_detected() {
        let g = make_grid(2, 2).unwrap();
        let other = make_grid(2, 4).unwrap();
        let file = EdgeListFile::new(&other, &[Edge::new(0, 1)]);
        assert!(matches!(
            file.to_matching(&g),
            Err(Error::HashMismatch { .. })
        ));
    }

    #[test]
    fn dot_positions() {
        let dot = to_dot(&make_grid(2, 2).unwrap(), None);
        assert!(dot.starts_with("graph grid {"));
        assert!(dot.contains("3 [pos=\"2,-2!\"];"));
        assert!(dot.contains("0 -- 1;"));
    }
}
