#![allow(dead_code)]

pub mod oracle;

use forcing_core::{Edge, Graph};

pub fn raw(edges: &[Edge]) -> Vec<oracle::RawEdge> {
    edges.iter().map(|e| e.endpoints()).collect()
}

pub fn raw_graph(g: &Graph) -> (usize, Vec<oracle::RawEdge>) {
    (g.vertex_count(), raw(g.edges()))
}
