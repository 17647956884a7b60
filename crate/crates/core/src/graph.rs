//! Immutable simple graphs with a canonical vertex order.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// Dense vertex index in `[0, vertex_count)`.
pub type VertexId = usize;

/// Undirected edge stored as `(min, max)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[VertexId; 2]", try_from = "[VertexId; 2]")]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Builds an edge from two distinct endpoints in either order.
    ///
    /// Panics on a loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: VertexId, b: VertexId) -> Self {
        Self::try_new(a, b).expect("loops are not edges")
    }

    pub fn try_new(a: VertexId, b: VertexId) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::InvalidGraph(format!("loop at vertex {a}"))),
        }
    }

    pub fn lo(self) -> VertexId {
        self.u
    }

    pub fn hi(self) -> VertexId {
        self.v
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn contains(self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(self, x: VertexId) -> VertexId {
        debug_assert!(self.contains(x));
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl From<Edge> for [VertexId; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[VertexId; 2]> for Edge {
    type Error = Error;

    fn try_from(pair: [VertexId; 2]) -> Result<Self> {
        Edge::try_new(pair[0], pair[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Grid position, 1-based; `row` is the row number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord {
    pub row: u32,
    pub col: u32,
}

impl Coord {
    pub fn new(row: u32, col: u32) -> Self {
        Coord { row, col }
    }
}

/// Generator name plus the parameters it was called with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTag {
    pub name: String,
    pub params: Map<String, Value>,
}

impl FamilyTag {
    pub fn new(name: impl Into<String>, params: Value) -> Self {
        let params = match params {
            Value::Object(map) => map,
            Value::Null => Map::new(),
            other => {
                let mut map = Map::new();
                map.insert("value".into(), other);
                map
            }
        };
        FamilyTag {
            name: name.into(),
            params,
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::json!({ "family": self.name, "params": self.params })
    }

    fn from_value(value: &Value) -> Option<FamilyTag> {
        let name = value.get("family")?.as_str()?;
        let params = value.get("params")?.as_object()?.clone();
        Some(FamilyTag {
            name: name.to_string(),
            params,
        })
    }

    fn param_u64(&self, key: &str) -> Option<u64> {
        self.params.get(key).and_then(Value::as_u64)
    }

    /// Planarity as implied by the generator that produced the graph.
    pub fn planarity(&self) -> Planarity {
        match self.name.as_str() {
            "grid" | "cylinder" | "stop-sign" | "gadget-g" | "glued-spectrum" => Planarity::Planar,
            "torus" => Planarity::NonPlanar,
            "hypercube" => match self.param_u64("d") {
                Some(d) if d <= 3 => Planarity::Planar,
                Some(_) => Planarity::NonPlanar,
                None => Planarity::Unknown,
            },
            "disjoint-union" => {
                let part = |key: &str| {
                    self.params
                        .get(key)
                        .and_then(FamilyTag::from_value)
                        .map_or(Planarity::Unknown, |tag| tag.planarity())
                };
                match (part("left"), part("right")) {
                    (Planarity::Planar, Planarity::Planar) => Planarity::Planar,
                    (Planarity::NonPlanar, _) | (_, Planarity::NonPlanar) => Planarity::NonPlanar,
                    _ => Planarity::Unknown,
                }
            }
            _ => Planarity::Unknown,
        }
    }
}

/// Provenance-based planarity; never computed from the edge set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Planarity {
    Planar,
    NonPlanar,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<VertexId>>,
    coords: Option<Vec<Coord>>,
    family: FamilyTag,
}

impl Graph {
    /// Validates and canonicalizes a graph. Edges are sorted; duplicates,
    /// loops and out-of-range endpoints are rejected, as are non-injective
    /// coordinates.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = Edge>,
        coords: Option<Vec<Coord>>,
        family: FamilyTag,
    ) -> Result<Graph> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        for pair in edges.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidGraph(format!("parallel edge {}", pair[0])));
            }
        }
        if let Some(e) = edges.iter().find(|e| e.hi() >= vertex_count) {
            return Err(Error::InvalidGraph(format!(
                "edge {e} out of range for {vertex_count} vertices"
            )));
        }
        if let Some(coords) = &coords {
            if coords.len() != vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "{} coordinates for {vertex_count} vertices",
                    coords.len()
                )));
            }
            let mut seen = HashMap::with_capacity(coords.len());
            for (v, c) in coords.iter().enumerate() {
                if c.row == 0 || c.col == 0 {
                    return Err(Error::InvalidGraph(format!(
                        "vertex {v} has a zero coordinate"
                    )));
                }
                if let Some(w) = seen.insert(*c, v) {
                    return Err(Error::InvalidGraph(format!(
                        "vertices {w} and {v} share coordinate ({},{})",
                        c.row, c.col
                    )));
                }
            }
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for e in &edges {
            adjacency[e.lo()].push(e.hi());
            adjacency[e.hi()].push(e.lo());
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges,
            adjacency,
            coords,
            family,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors in increasing order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.vertex_count && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.lo(), e.hi())
    }

    pub fn coords(&self) -> Option<&[Coord]> {
        self.coords.as_deref()
    }

    pub fn coord(&self, v: VertexId) -> Option<Coord> {
        self.coords.as_ref().map(|c| c[v])
    }

    pub fn family(&self) -> &FamilyTag {
        &self.family
    }

    pub fn planarity(&self) -> Planarity {
        self.family.planarity()
    }

    /// Breadth-first two-coloring; `Some(side)` with `side[v]` in `{0, 1}`
    /// when the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        const UNSET: u8 = u8::MAX;
        let mut side = vec![UNSET; self.vertex_count];
        let mut queue = VecDeque::new();
        for root in 0..self.vertex_count {
            if side[root] != UNSET {
                continue;
            }
            side[root] = 0;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if side[w] == UNSET {
                        side[w] = side[v] ^ 1;
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True when planarity is guaranteed by the generator and the graph is
    /// bipartite.
    pub fn is_planar_bipartite(&self) -> bool {
        self.planarity() == Planarity::Planar && self.is_bipartite()
    }

    pub fn coord_index(&self) -> Result<CoordIndex> {
        let coords = self.coords.as_ref().ok_or(Error::MissingCoords)?;
        Ok(CoordIndex::new(coords))
    }

    /// Stable digest of the canonical serialization.
    pub fn graph_hash(&self) -> String {
        crate::io::graph_hash(self)
    }
}

/// Reverse lookup from grid position to vertex.
#[derive(Clone, Debug)]
pub struct CoordIndex {
    by_coord: HashMap<Coord, VertexId>,
    rows: u32,
    cols: u32,
}

impl CoordIndex {
    fn new(coords: &[Coord]) -> Self {
        let by_coord = coords.iter().enumerate().map(|(v, &c)| (c, v)).collect();
        let rows = coords.iter().map(|c| c.row).max().unwrap_or(0);
        let cols = coords.iter().map(|c| c.col).max().unwrap_or(0);
        CoordIndex {
            by_coord,
            rows,
            cols,
        }
    }

    /// Vertex at `(row, col)`; out-of-range or signed-negative positions give `None`.
    pub fn at(&self, row: i64, col: i64) -> Option<VertexId> {
        if row < 1 || col < 1 {
            return None;
        }
        self.by_coord
            .get(&Coord::new(row as u32, col as u32))
            .copied()
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }
}
