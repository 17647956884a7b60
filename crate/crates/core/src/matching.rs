//! Perfect matchings: representation, validation and exhaustive enumeration.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

const UNMATCHED: VertexId = VertexId::MAX;

/// Sorted, duplicate-free set of edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        EdgeSet(edges)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        match self.0.binary_search(&e) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, e);
                true
            }
        }
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet::from_edges(iter)
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A perfect matching as an involution on the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    partner: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl Matching {
    /// Validates that `edges` is a perfect matching of `g`.
    pub fn from_edges(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Matching> {
        let mut partner = vec![UNMATCHED; g.vertex_count()];
        let mut list = Vec::new();
        for e in edges {
            if !g.contains_edge(e) {
                return Err(Error::EdgeNotInGraph(e));
            }
            let (a, b) = e.endpoints();
            if partner[a] != UNMATCHED || partner[b] != UNMATCHED {
                return Err(Error::NotPerfect(format!("edges overlap at {e}")));
            }
            partner[a] = b;
            partner[b] = a;
            list.push(e);
        }
        if let Some(v) = partner.iter().position(|&p| p == UNMATCHED) {
            return Err(Error::NotPerfect(format!("vertex {v} is uncovered")));
        }
        list.sort_unstable();
        Ok(Matching {
            partner,
            edges: list,
        })
    }

    fn from_partner(partner: Vec<VertexId>) -> Matching {
        let edges = partner
            .iter()
            .enumerate()
            .filter(|&(v, &w)| v < w)
            .map(|(v, &w)| Edge::new(v, w))
            .collect();
        Matching { partner, edges }
    }

    pub fn partner(&self, v: VertexId) -> VertexId {
        self.partner[v]
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.partner.len()
    }

    pub fn contains(&self, e: Edge) -> bool {
        let (a, b) = e.endpoints();
        a < self.partner.len() && self.partner[a] == b
    }

    /// Position of `e` in [`Matching::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Checks that this matching is a perfect matching of `g`.
    pub fn check_perfect_on(&self, g: &Graph) -> Result<()> {
        if self.partner.len() != g.vertex_count() {
            return Err(Error::NotPerfect(format!(
                "matching covers {} vertices, graph has {}",
                self.partner.len(),
                g.vertex_count()
            )));
        }
        match self.edges.iter().find(|&&e| !g.contains_edge(e)) {
            Some(&e) => Err(Error::EdgeNotInGraph(e)),
            None => Ok(()),
        }
    }

    /// Checks `set ⊆ self`.
    pub fn check_subset(&self, set: &EdgeSet) -> Result<()> {
        match set.iter().find(|&&e| !self.contains(e)) {
            Some(&e) => Err(Error::NotSubset(e)),
            None => Ok(()),
        }
    }

    /// Replaces `removed` with `added`; the result must still be an involution.
    pub(crate) fn swapped(&self, removed: &[Edge], added: &[Edge]) -> Matching {
        let mut partner = self.partner.clone();
        for e in removed {
            partner[e.lo()] = UNMATCHED;
            partner[e.hi()] = UNMATCHED;
        }
        for e in added {
            partner[e.lo()] = e.hi();
            partner[e.hi()] = e.lo();
        }
        debug_assert!(partner.iter().all(|&p| p != UNMATCHED));
        Matching::from_partner(partner)
    }
}

/// True iff `edges` are pairwise disjoint and cover every vertex. An edge
/// outside `g` is a validation error rather than `false`.
pub fn is_perfect_matching(g: &Graph, edges: &[Edge]) -> Result<bool> {
    if let Some(&e) = edges.iter().find(|&&e| !g.contains_edge(e)) {
        return Err(Error::EdgeNotInGraph(e));
    }
    let mut covered = vec![false; g.vertex_count()];
    for e in edges {
        for x in [e.lo(), e.hi()] {
            if std::mem::replace(&mut covered[x], true) {
                return Ok(false);
            }
        }
    }
    Ok(covered.into_iter().all(|c| c))
}

/// Depth-first enumeration of perfect matchings.
///
/// The lowest uncovered vertex is always matched next, trying neighbors in
/// increasing order, so matchings come out in lexicographic order of their
/// sorted edge lists.
pub struct PerfectMatchings<'g> {
    graph: &'g Graph,
    partner: Vec<VertexId>,
    // (vertex, index of the neighbor it is currently matched through)
    stack: Vec<(VertexId, usize)>,
    yielded: bool,
    done: bool,
}

impl<'g> PerfectMatchings<'g> {
    fn new(graph: &'g Graph, prefix: &[Edge]) -> Result<Self> {
        let mut partner = vec![UNMATCHED; graph.vertex_count()];
        let mut done = graph.vertex_count() % 2 == 1;
        for &e in prefix {
            if !graph.contains_edge(e) {
                return Err(Error::EdgeNotInGraph(e));
            }
            let (a, b) = e.endpoints();
            if partner[a] != UNMATCHED || partner[b] != UNMATCHED {
                done = true;
            }
            partner[a] = b;
            partner[b] = a;
        }
        Ok(PerfectMatchings {
            graph,
            partner,
            stack: Vec::new(),
            yielded: false,
            done,
        })
    }

    fn lowest_uncovered(&self) -> Option<VertexId> {
        let start = self.stack.last().map_or(0, |&(v, _)| v + 1);
        (start..self.partner.len()).find(|&v| self.partner[v] == UNMATCHED)
    }

    /// Matches the top frame's vertex to its next free neighbor, popping the
    /// frame when none is left.
    fn place_top(&mut self) -> bool {
        let Some(&(v, from)) = self.stack.last() else {
            return false;
        };
        let neighbors = self.graph.neighbors(v);
        for (k, &w) in neighbors.iter().enumerate().skip(from) {
            if self.partner[w] == UNMATCHED {
                self.partner[v] = w;
                self.partner[w] = v;
                *self.stack.last_mut().unwrap() = (v, k + 1);
                return true;
            }
        }
        self.stack.pop();
        false
    }

    fn backtrack(&mut self) -> bool {
        while let Some(&(v, _)) = self.stack.last() {
            let w = self.partner[v];
            self.partner[v] = UNMATCHED;
            self.partner[w] = UNMATCHED;
            if self.place_top() {
                return true;
            }
        }
        false
    }
}

impl Iterator for PerfectMatchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        if self.yielded {
            self.yielded = false;
            if !self.backtrack() {
                self.done = true;
                return None;
            }
        }
        loop {
            match self.lowest_uncovered() {
                None => {
                    self.yielded = true;
                    if self.stack.is_empty() {
                        // The prefix alone was perfect; yield it once.
                        self.done = true;
                    }
                    return Some(Matching::from_partner(self.partner.clone()));
                }
                Some(v) => {
                    self.stack.push((v, 0));
                    if !self.place_top() && !self.backtrack() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// All perfect matchings of `g`, lexicographically ordered.
pub fn enumerate_perfect_matchings(g: &Graph) -> PerfectMatchings<'_> {
    PerfectMatchings::new(g, &[]).expect("empty prefix is always valid")
}

/// Perfect matchings containing every edge of `prefix`.
pub fn enumerate_with_prefix<'g>(g: &'g Graph, prefix: &[Edge]) -> Result<PerfectMatchings<'g>> {
    PerfectMatchings::new(g, prefix)
}

/// Work partition by the edge chosen for vertex 0: enumerating with each
/// returned edge as a one-edge prefix visits every matching exactly once.
pub fn first_edge_choices(g: &Graph) -> Vec<Edge> {
    if g.vertex_count() == 0 {
        return Vec::new();
    }
    g.neighbors(0).iter().map(|&w| Edge::new(0, w)).collect()
}

/// Number of perfect matchings, by the same backtracking without
/// materializing matchings.
pub fn count_perfect_matchings(g: &Graph) -> u64 {
    fn go(g: &Graph, covered: &mut [bool], from: VertexId) -> u64 {
        let Some(v) = (from..covered.len()).find(|&v| !covered[v]) else {
            return 1;
        };
        covered[v] = true;
        let mut total = 0;
        for &w in g.neighbors(v) {
            if !covered[w] {
                covered[w] = true;
                total += go(g, covered, v + 1);
                covered[w] = false;
            }
        }
        covered[v] = false;
        total
    }
    if g.vertex_count() % 2 == 1 {
        return 0;
    }
    go(g, &mut vec![false; g.vertex_count()], 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_cylinder, make_grid};

    #[test]
    fn perfect_matching_checks() {
        let g = make_grid(2, 2).unwrap();
        // 0 1
        // 2 3
        assert!(is_perfect_matching(&g, &[Edge::new(0, 1), Edge::new(2, 3)]).unwrap());
        assert!(!is_perfect_matching(&g, &[Edge::new(0, 1)]).unwrap());
        assert!(matches!(
            is_perfect_matching(&g, &[Edge::new(0, 3)]),
            Err(Error::EdgeNotInGraph(_))
        ));
        let odd = make_grid(3, 3).unwrap();
        assert!(!is_perfect_matching(&odd, &[Edge::new(0, 1), Edge::new(3, 4)]).unwrap());
        assert_eq!(count_perfect_matchings(&odd), 0);
        assert_eq!(enumerate_perfect_matchings(&odd).count(), 0);
    }

    #[test]
    fn small_counts() {
        assert_eq!(
            enumerate_perfect_matchings(&make_grid(2, 2).unwrap()).count(),
            2
        );
        assert_eq!(
            enumerate_perfect_matchings(&make_grid(2, 3).unwrap()).count(),
            3
        );
        assert_eq!(
            enumerate_perfect_matchings(&make_grid(4, 4).unwrap()).count(),
            36
        );
        assert_eq!(count_perfect_matchings(&make_grid(1, 2).unwrap()), 1);
        assert_eq!(count_perfect_matchings(&make_cylinder(1, 4).unwrap()), 2);
    }

    #[test]
    fn enumeration_is_lexicographic_and_partitionable() {
        let g = make_grid(4, 4).unwrap();
        let all: Vec<Matching> = enumerate_perfect_matchings(&g).collect();
        for pair in all.windows(2) {
            assert!(pair[0].edges() < pair[1].edges());
        }
        let mut merged: Vec<Matching> = first_edge_choices(&g)
            .into_iter()
            .flat_map(|e| enumerate_with_prefix(&g, &[e]).unwrap().collect::<Vec<_>>())
            .collect();
        merged.sort_by(|a, b| a.edges().cmp(b.edges()));
        assert_eq!(merged, all);
    }

    #[test]
    fn full_prefix_yields_once() {
        let g = make_grid(2, 2).unwrap();
        let prefix = [Edge::new(0, 1), Edge::new(2, 3)];
        assert_eq!(enumerate_with_prefix(&g, &prefix).unwrap().count(), 1);
        let clash = [Edge::new(0, 1), Edge::new(1, 3)];
        assert_eq!(enumerate_with_prefix(&g, &clash).unwrap().count(), 0);
    }

    #[test]
    fn rejects_bad_matchings() {
        let g = make_grid(2, 2).unwrap();
        assert!(matches!(
            Matching::from_edges(&g, [Edge::new(0, 1)]),
            Err(Error::NotPerfect(_))
        ));
        assert!(matches!(
            Matching::from_edges(&g, [Edge::new(0, 1), Edge::new(0, 2)]),
            Err(Error::NotPerfect(_))
        ));
        let m = Matching::from_edges(&g, [Edge::new(2, 3), Edge::new(0, 1)]).unwrap();
        assert_eq!(m.edges(), &[Edge::new(0, 1), Edge::new(2, 3)]);
        assert_eq!(m.partner(3), 2);
    }
}
