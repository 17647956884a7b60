//! Generators for the graph families studied here.
//!
//! Grid-derived families number vertices row-major: `(i, j) -> (i-1)*ncols + (j-1)`.
//! Gadget and glued graphs number base vertices first and then every added
//! vertex in creation order.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{Coord, Edge, FamilyTag, Graph, VertexId};
use crate::matching::{EdgeSet, Matching};

fn grid_coords(m: usize, n: usize) -> Vec<Coord> {
    (0..m * n)
        .map(|v| Coord::new((v / n + 1) as u32, (v % n + 1) as u32))
        .collect()
}

fn grid_edges(m: usize, n: usize, wrap_rows: bool, wrap_cols: bool) -> Vec<Edge> {
    let id = |i: usize, j: usize| i * n + j;
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if j + 1 < n {
                edges.push(Edge::new(id(i, j), id(i, j + 1)));
            } else if wrap_cols {
                edges.push(Edge::new(id(i, j), id(i, 0)));
            }
            if i + 1 < m {
                edges.push(Edge::new(id(i, j), id(i + 1, j)));
            } else if wrap_rows {
                edges.push(Edge::new(id(i, j), id(0, j)));
            }
        }
    }
    edges
}

/// `P_m x P_n`: `m` rows and `n` columns.
pub fn make_grid(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "grid needs m, n >= 1, got ({m},{n})"
        )));
    }
    Graph::new(
        m * n,
        grid_edges(m, n, false, false),
        Some(grid_coords(m, n)),
        FamilyTag::new("grid", json!({ "m": m, "n": n })),
    )
}

/// `P_m x C_n`: `m` rows, `n` columns, column `n` joined back to column 1.
pub fn make_cylinder(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cylinder needs m >= 1 and n >= 3, got ({m},{n})"
        )));
    }
    Graph::new(
        m * n,
        grid_edges(m, n, false, true),
        Some(grid_coords(m, n)),
        FamilyTag::new("cylinder", json!({ "m": m, "n": n })),
    )
}

/// `C_m x C_n` with both directions wrapped.
pub fn make_torus(m: usize, n: usize) -> Result<Graph> {
    if m < 3 || n < 3 {
        return Err(Error::InvalidParameter(format!(
            "torus needs m, n >= 3, got ({m},{n})"
        )));
    }
    Graph::new(
        m * n,
        grid_edges(m, n, true, true),
        Some(grid_coords(m, n)),
        FamilyTag::new("torus", json!({ "m": m, "n": n })),
    )
}

/// The `(n, k)` stop sign: `P_2n x P_2n` minus, at each corner, every vertex
/// within L1-distance `k - 1` of that corner. Surviving vertices keep their
/// grid coordinates and are renumbered row-major.
pub fn make_stop_sign(n: usize, k: usize) -> Result<Graph> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "stop sign needs n >= 2 and 1 <= k <= n-1, got (n={n}, k={k})"
        )));
    }
    let side = 2 * n;
    let far = side - 1;
    let deleted = |i: usize, j: usize| {
        let corner_dist = [i + j, i + (far - j), (far - i) + j, (far - i) + (far - j)];
        corner_dist.iter().any(|&d| d < k)
    };
    let mut index = vec![usize::MAX; side * side];
    let mut coords = Vec::new();
    for i in 0..side {
        for j in 0..side {
            if !deleted(i, j) {
                index[i * side + j] = coords.len();
                coords.push(Coord::new(i as u32 + 1, j as u32 + 1));
            }
        }
    }
    let edges = grid_edges(side, side, false, false)
        .into_iter()
        .filter_map(|e| {
            let (a, b) = (index[e.lo()], index[e.hi()]);
            (a != usize::MAX && b != usize::MAX).then(|| Edge::new(a, b))
        })
        .collect::<Vec<_>>();
    Graph::new(
        coords.len(),
        edges,
        Some(coords),
        FamilyTag::new("stop-sign", json!({ "n": n, "k": k })),
    )
}

/// Edges of the gadget `G_n` together with its forcing edges, with the cycle
/// vertices relabeled through `label` and new vertices drawn from `fresh`.
fn gadget_edges(
    n: usize,
    label: impl Fn(usize) -> VertexId,
    fresh: &mut impl FnMut() -> VertexId,
) -> (Vec<Edge>, Vec<Edge>) {
    let len = 2 * n;
    let mut edges = Vec::new();
    let mut forcing = Vec::new();
    for p in 0..len {
        let (a, b) = (label(p), label((p + 1) % len));
        edges.push(Edge::new(a, b));
        if p % 2 == 0 {
            forcing.push(Edge::new(a, b));
        } else {
            // {a,b} becomes one side of the 4-cycle a-b-q-p-a.
            let pv = fresh();
            let qv = fresh();
            edges.push(Edge::new(a, pv));
            edges.push(Edge::new(pv, qv));
            edges.push(Edge::new(qv, b));
        }
    }
    (edges, forcing)
}

/// `G_n`: every other edge of `C_2n` is widened into a 4-cycle. Returns the
/// graph and its `n` forcing edges (the cycle edges at even positions).
pub fn make_gadget_g(n: usize) -> Result<(Graph, EdgeSet)> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "gadget G_n needs n >= 2, got {n}"
        )));
    }
    let mut next = 2 * n;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let (edges, forcing) = gadget_edges(n, |p| p, &mut fresh);
    let graph = Graph::new(
        4 * n,
        edges,
        None,
        FamilyTag::new("gadget-g", json!({ "n": n })),
    )?;
    Ok((graph, EdgeSet::from_edges(forcing)))
}

/// A graph whose forcing spectrum is exactly `values`.
///
/// The set is shifted down so it contains 1; one gadget `G_a` per remaining
/// value `a` is glued onto a shared forcing edge `{0, 1}`, and the shift is
/// restored by appending disjoint 4-cycles. A singleton `{a}` is `a`
/// disjoint 4-cycles.
pub fn make_glued_spectrum_graph(values: &BTreeSet<usize>) -> Result<Graph> {
    let (&lowest, _) = values
        .first()
        .zip(values.last())
        .ok_or_else(|| Error::InvalidParameter("spectrum set must be nonempty".into()))?;
    if lowest == 0 {
        return Err(Error::InvalidParameter(
            "spectrum values must be >= 1".into(),
        ));
    }
    let set: Vec<usize> = values.iter().copied().collect();
    let tag = FamilyTag::new("glued-spectrum", json!({ "values": set }));
    if values.len() == 1 {
        // No gadget to glue: `lowest` disjoint 4-cycles alone.
        return Graph::new(4 * lowest, square_edges(0, lowest), None, tag);
    }
    let shift = lowest - 1;
    let (u, v) = (0, 1);
    let mut next = 2;
    let mut edges = vec![Edge::new(u, v)];
    for &value in values.iter().filter(|&&a| a - shift != 1) {
        let size = value - shift;
        // Cycle positions 0 and 1 form the gadget's first forcing edge.
        let base = next;
        next += 2 * size - 2;
        let cycle_label = |p: usize| match p {
            0 => u,
            1 => v,
            p => base + p - 2,
        };
        let mut fresh = || {
            next += 1;
            next - 1
        };
        let (gadget, _) = gadget_edges(size, cycle_label, &mut fresh);
        edges.extend(gadget.into_iter().filter(|&e| e != Edge::new(u, v)));
    }
    edges.extend(square_edges(next, shift));
    Graph::new(next + 4 * shift, edges, None, tag)
}

/// `count` disjoint 4-cycles on the vertices `first..first + 4 * count`.
fn square_edges(first: VertexId, count: usize) -> Vec<Edge> {
    (0..count)
        .flat_map(|i| {
            let b = first + 4 * i;
            [
                Edge::new(b, b + 1),
                Edge::new(b + 1, b + 2),
                Edge::new(b + 2, b + 3),
                Edge::new(b, b + 3),
            ]
        })
        .collect()
}

/// The two vertices and three edges added for one non-matching edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionGadget {
    pub edge: Edge,
    pub x_e: VertexId,
    pub y_e: VertexId,
    pub added: [Edge; 3],
}

/// Builds `H` from a bipartite `G` with maximum degree at most 3 and a
/// perfect matching `M` of `G`: for every `e = {x, y}` outside `M` (with
/// `x < y`), two vertices `x_e, y_e` are appended together with the edges
/// `{x, y_e}`, `{x_e, y_e}` and `{x_e, y}`.
pub fn make_reduction_h(g: &Graph, m: &Matching) -> Result<(Graph, Vec<ReductionGadget>)> {
    if !g.is_bipartite() {
        return Err(Error::Precondition(
            "reduction input must be bipartite".into(),
        ));
    }
    if g.max_degree() > 3 {
        return Err(Error::Precondition(format!(
            "reduction input must have maximum degree <= 3, found {}",
            g.max_degree()
        )));
    }
    m.check_perfect_on(g)?;
    let mut next = g.vertex_count();
    let mut edges = g.edges().to_vec();
    let mut gadgets = Vec::new();
    for &e in g.edges().iter().filter(|&&e| !m.contains(e)) {
        let (x, y) = e.endpoints();
        let (x_e, y_e) = (next, next + 1);
        next += 2;
        let added = [Edge::new(x, y_e), Edge::new(x_e, y_e), Edge::new(x_e, y)];
        edges.extend(added);
        gadgets.push(ReductionGadget {
            edge: e,
            x_e,
            y_e,
            added,
        });
    }
    let graph = Graph::new(
        next,
        edges,
        None,
        FamilyTag::new(
            "reduction-h",
            json!({ "source": g.family().to_value(), "source_hash": g.graph_hash() }),
        ),
    )?;
    Ok((graph, gadgets))
}

/// `Q_d` on binary labels; adjacent labels differ in one bit.
pub fn make_hypercube(d: usize) -> Result<Graph> {
    if d == 0 || d > 20 {
        return Err(Error::InvalidParameter(format!(
            "hypercube needs 1 <= d <= 20, got {d}"
        )));
    }
    let count = 1usize << d;
    let edges = (0..count)
        .flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b))))
        .filter(|&(v, w)| v < w)
        .map(|(v, w)| Edge::new(v, w));
    Graph::new(
        count,
        edges,
        None,
        FamilyTag::new("hypercube", json!({ "d": d })),
    )
}

/// Disjoint union; the second operand's vertices follow the first's. When
/// both carry coordinates the second is placed to the right of the first
/// with one empty column between them.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let offset = g1.vertex_count();
    let edges = g1.edges().iter().copied().chain(
        g2.edges()
            .iter()
            .map(|e| Edge::new(e.lo() + offset, e.hi() + offset)),
    );
    let coords = match (g1.coords(), g2.coords()) {
        (Some(a), Some(b)) => {
            let shift = a.iter().map(|c| c.col).max().unwrap_or(0) + 1;
            Some(
                a.iter()
                    .copied()
                    .chain(b.iter().map(|c| Coord::new(c.row, c.col + shift)))
                    .collect(),
            )
        }
        _ => None,
    };
    Graph::new(
        offset + g2.vertex_count(),
        edges,
        coords,
        FamilyTag::new(
            "disjoint-union",
            json!({ "left": g1.family().to_value(), "right": g2.family().to_value() }),
        ),
    )
}

/// Adds `k` disjoint 4-cycles to `g`.
pub fn pad_with_squares(g: &Graph, k: usize) -> Result<Graph> {
    let square = make_grid(2, 2)?;
    (0..k).try_fold(g.clone(), |acc, _| disjoint_union(&acc, &square))
}
