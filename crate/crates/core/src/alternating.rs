//! Alternating cycles of a perfect matching.
//!
//! Searches run on a digraph whose nodes are traversal directions of the
//! matching edges: node `x` is the matching edge `tail(x) -> head(x)`, and an
//! arc `x -> y` exists when `head(x)` is adjacent to `tail(y)`. A directed
//! cycle that never uses two directions of one edge is exactly an
//! alternating cycle. For bipartite graphs only the white-to-black direction
//! is kept, which makes every directed cycle simple and lets plain
//! breadth/depth-first searches decide existence exactly.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::matching::{EdgeSet, Matching};

/// An `M`-alternating cycle in canonical form: the smallest vertex first,
/// oriented toward its smaller cycle neighbor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlternatingCycle {
    vertices: Vec<VertexId>,
    m_edges: Vec<Edge>,
}

impl AlternatingCycle {
    /// Canonicalizes a cyclic vertex sequence whose edges alternate with
    /// respect to `m`.
    pub fn new(mut vertices: Vec<VertexId>, m: &Matching) -> AlternatingCycle {
        let len = vertices.len();
        let start = (0..len).min_by_key(|&i| vertices[i]).unwrap_or(0);
        vertices.rotate_left(start);
        if len > 2 && vertices[len - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        let mut m_edges: Vec<Edge> = (0..len)
            .map(|i| Edge::new(vertices[i], vertices[(i + 1) % len]))
            .filter(|&e| m.contains(e))
            .collect();
        m_edges.sort_unstable();
        AlternatingCycle { vertices, m_edges }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Cycle edges that belong to the matching, sorted.
    pub fn m_edges(&self) -> &[Edge] {
        &self.m_edges
    }

    /// All cycle edges in traversal order.
    pub fn edges(&self) -> Vec<Edge> {
        let len = self.vertices.len();
        (0..len)
            .map(|i| Edge::new(self.vertices[i], self.vertices[(i + 1) % len]))
            .collect()
    }

    /// Cycle edges outside the matching, sorted.
    pub fn non_m_edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .edges()
            .into_iter()
            .filter(|e| self.m_edges.binary_search(e).is_err())
            .collect();
        out.sort_unstable();
        out
    }

    /// Checks the alternating-cycle invariants against `g` and `m`.
    pub fn is_valid(&self, g: &Graph, m: &Matching) -> bool {
        let len = self.vertices.len();
        if len < 4 || len % 2 == 1 {
            return false;
        }
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != len {
            return false;
        }
        let edges = self.edges();
        let first_in_m = m.contains(edges[0]);
        edges
            .iter()
            .enumerate()
            .all(|(i, &e)| g.contains_edge(e) && m.contains(e) == (first_in_m == (i % 2 == 0)))
    }

    /// The matching obtained by exchanging matched and unmatched cycle edges.
    pub fn flip(&self, m: &Matching) -> Matching {
        m.swapped(&self.m_edges, &self.non_m_edges())
    }
}

/// Directed search structure over `(G, M)`; see the module docs.
pub(crate) struct AltGraph<'a> {
    matching: &'a Matching,
    oriented: bool,
    /// `(tail, head)` per node.
    ends: Vec<(VertexId, VertexId)>,
    /// Matching-edge index per node.
    edge_of: Vec<usize>,
    succ: Vec<Vec<usize>>,
}

impl<'a> AltGraph<'a> {
    pub fn new(g: &Graph, m: &'a Matching) -> AltGraph<'a> {
        let side = g.bipartition();
        let mut ends = Vec::new();
        let mut edge_of = Vec::new();
        for (idx, e) in m.edges().iter().enumerate() {
            let (a, b) = e.endpoints();
            match &side {
                Some(side) => {
                    let (white, black) = if side[a] == 0 { (a, b) } else { (b, a) };
                    ends.push((white, black));
                    edge_of.push(idx);
                }
                None => {
                    ends.push((a, b));
                    ends.push((b, a));
                    edge_of.extend([idx, idx]);
                }
            }
        }
        let node_of_tail = {
            let mut map = vec![Vec::new(); g.vertex_count()];
            for (x, &(tail, _)) in ends.iter().enumerate() {
                map[tail].push(x);
            }
            map
        };
        let succ = ends
            .iter()
            .enumerate()
            .map(|(x, &(_, head))| {
                let mut out: Vec<usize> = g
                    .neighbors(head)
                    .iter()
                    .flat_map(|&w| node_of_tail[w].iter().copied())
                    .filter(|&y| edge_of[y] != edge_of[x])
                    .collect();
                out.sort_unstable();
                out
            })
            .collect();
        AltGraph {
            matching: m,
            oriented: side.is_some(),
            ends,
            edge_of,
            succ,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.matching.len()
    }

    pub fn edge(&self, idx: usize) -> Edge {
        self.matching.edges()[idx]
    }

    /// Alive mask with every edge of `set` removed.
    pub fn alive_without(&self, set: &EdgeSet) -> Result<Vec<bool>> {
        let mut alive = vec![true; self.edge_count()];
        for &e in set {
            let idx = self.matching.edge_index(e).ok_or(Error::NotSubset(e))?;
            alive[idx] = false;
        }
        Ok(alive)
    }

    fn node_alive(&self, alive: &[bool], x: usize) -> bool {
        alive[self.edge_of[x]]
    }

    /// Matching-edge indices of a node cycle, sorted.
    pub fn cycle_edges(&self, cycle: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = cycle.iter().map(|&x| self.edge_of[x]).collect();
        out.sort_unstable();
        out
    }

    pub fn to_cycle(&self, cycle: &[usize]) -> AlternatingCycle {
        let vertices = cycle
            .iter()
            .flat_map(|&x| {
                let (tail, head) = self.ends[x];
                [tail, head]
            })
            .collect();
        AlternatingCycle::new(vertices, self.matching)
    }

    /// Some alternating cycle among alive edges, if one exists: depth-first,
    /// rooted at alive edges in canonical order.
    pub fn find_cycle(&self, alive: &[bool]) -> Option<Vec<usize>> {
        if self.oriented {
            self.find_cycle_oriented(alive)
        } else {
            let mut budget = u64::MAX;
            self.search_general(alive, &mut budget, false)
        }
    }

    fn find_cycle_oriented(&self, alive: &[bool]) -> Option<Vec<usize>> {
        // 0 = unvisited, 1 = on stack, 2 = finished
        let mut state = vec![0u8; self.ends.len()];
        let mut path: Vec<usize> = Vec::new();
        let mut cursor: Vec<usize> = Vec::new();
        for root in 0..self.ends.len() {
            if state[root] != 0 || !self.node_alive(alive, root) {
                continue;
            }
            state[root] = 1;
            path.push(root);
            cursor.push(0);
            while let Some(&x) = path.last() {
                let k = cursor.last_mut().unwrap();
                if let Some(&y) = self.succ[x].get(*k) {
                    *k += 1;
                    if !self.node_alive(alive, y) {
                        continue;
                    }
                    match state[y] {
                        0 => {
                            state[y] = 1;
                            path.push(y);
                            cursor.push(0);
                        }
                        1 => {
                            let start = path.iter().position(|&z| z == y).unwrap();
                            return Some(path[start..].to_vec());
                        }
                        _ => {}
                    }
                } else {
                    state[x] = 2;
                    path.pop();
                    cursor.pop();
                }
            }
        }
        None
    }

    /// A shortest alternating cycle among alive edges. Exact for bipartite
    /// graphs; for general graphs the search stops after `budget` expanded
    /// nodes and returns the shortest cycle seen so far (or, failing that,
    /// the first cycle found).
    pub fn shortest_cycle(&self, alive: &[bool], budget: u64) -> Option<Vec<usize>> {
        if !self.oriented {
            let mut remaining = budget;
            return self
                .search_general(alive, &mut remaining, true)
                .or_else(|| self.find_cycle(alive));
        }
        let n = self.ends.len();
        let mut best: Option<Vec<usize>> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if !self.node_alive(alive, s) {
                continue;
            }
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            queue.clear();
            dist[s] = 0;
            queue.push_back(s);
            let limit = best.as_ref().map_or(usize::MAX, Vec::len);
            'bfs: while let Some(x) = queue.pop_front() {
                if dist[x] + 1 >= limit {
                    break;
                }
                for &y in &self.succ[x] {
                    if !self.node_alive(alive, y) {
                        continue;
                    }
                    if y == s {
                        let mut cycle = vec![x];
                        let mut z = x;
                        while z != s {
                            z = parent[z];
                            cycle.push(z);
                        }
                        cycle.reverse();
                        best = Some(cycle);
                        break 'bfs;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if best.as_ref().is_some_and(|c| c.len() == 2) {
                break;
            }
        }
        best
    }

    /// Backtracking over simple alternating paths for non-bipartite graphs.
    /// Each cycle is rooted at its smallest edge, traversed in that edge's
    /// first direction. With `shortest`, keeps searching for shorter cycles
    /// while the budget lasts.
    fn search_general(
        &self,
        alive: &[bool],
        budget: &mut u64,
        shortest: bool,
    ) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        let mut used = vec![false; self.edge_count()];
        let mut path = Vec::new();
        for root_edge in 0..self.edge_count() {
            if !alive[root_edge] {
                continue;
            }
            for root in [2 * root_edge, 2 * root_edge + 1] {
                used[root_edge] = true;
                path.clear();
                path.push(root);
                self.extend_general(
                    alive, root_edge, &mut used, &mut path, &mut best, budget, shortest,
                );
                used[root_edge] = false;
                if best.is_some() && (!shortest || *budget == 0) {
                    return best;
                }
                if best.as_ref().is_some_and(|c| c.len() == 2) {
                    return best;
                }
            }
        }
        best
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_general(
        &self,
        alive: &[bool],
        root_edge: usize,
        used: &mut [bool],
        path: &mut Vec<usize>,
        best: &mut Option<Vec<usize>>,
        budget: &mut u64,
        shortest: bool,
    ) -> bool {
        if *budget == 0 {
            return true;
        }
        *budget -= 1;
        let limit = best.as_ref().map_or(usize::MAX, Vec::len);
        if path.len() + 1 > limit {
            return false;
        }
        let x = *path.last().unwrap();
        let root = path[0];
        for &y in &self.succ[x] {
            if y == root && path.len() >= 2 {
                *best = Some(path.clone());
                if !shortest || path.len() == 2 {
                    return true;
                }
                return false;
            }
            let e = self.edge_of[y];
            if e <= root_edge || used[e] || !alive[e] {
                continue;
            }
            if path.len() + 2 > best.as_ref().map_or(usize::MAX, Vec::len) {
                continue;
            }
            used[e] = true;
            path.push(y);
            let stop = self.extend_general(alive, root_edge, used, path, best, budget, shortest);
            path.pop();
            used[e] = false;
            if stop {
                return true;
            }
        }
        false
    }

    /// Every alternating cycle through `root_edge` that uses only alive
    /// edges, each reported once.
    pub fn cycles_through(&self, alive: &[bool], root_edge: usize) -> Vec<Vec<usize>> {
        let root = if self.oriented {
            root_edge
        } else {
            2 * root_edge
        };
        let mut out = Vec::new();
        let mut used = vec![false; self.edge_count()];
        used[root_edge] = true;
        let mut path = vec![root];
        self.collect_cycles(alive, root, &mut used, &mut path, &mut out);
        out
    }

    fn collect_cycles(
        &self,
        alive: &[bool],
        root: usize,
        used: &mut [bool],
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let x = *path.last().unwrap();
        for &y in &self.succ[x] {
            if y == root {
                if path.len() >= 2 {
                    out.push(path.clone());
                }
                continue;
            }
            let e = self.edge_of[y];
            if used[e] || !alive[e] {
                continue;
            }
            used[e] = true;
            path.push(y);
            self.collect_cycles(alive, root, used, path, out);
            path.pop();
            used[e] = false;
        }
    }

    /// Greedy vertex-disjoint packing of shortest cycles; a lower bound on
    /// both the maximum packing and the forcing number of the residual.
    pub fn greedy_packing(&self, alive: &[bool], budget: u64) -> Vec<Vec<usize>> {
        let mut alive = alive.to_vec();
        let mut out = Vec::new();
        while let Some(cycle) = self.shortest_cycle(&alive, budget) {
            for &x in &cycle {
                alive[self.edge_of[x]] = false;
            }
            out.push(cycle);
        }
        out
    }

    /// Drops alive edges that lie on no alive cycle and returns an upper
    /// bound on the number of disjoint cycles left. Exact pruning needs the
    /// oriented digraph; for general graphs only the counting bound is used.
    pub fn prune_and_bound(&self, alive: &mut [bool]) -> usize {
        if !self.oriented {
            return alive.iter().filter(|&&a| a).count() / 2;
        }
        let components = self.strong_components(alive);
        let mut size = vec![0usize; self.ends.len()];
        for &c in components.iter().flatten() {
            size[c] += 1;
        }
        let mut bound = 0;
        for x in 0..self.ends.len() {
            if let Some(c) = components[x] {
                if size[c] < 2 {
                    alive[self.edge_of[x]] = false;
                }
            }
        }
        for s in size {
            if s >= 2 {
                bound += s / 2;
            }
        }
        bound
    }

    /// Tarjan's strongly connected components over alive nodes.
    fn strong_components(&self, alive: &[bool]) -> Vec<Option<usize>> {
        let n = self.ends.len();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comp = vec![None; n];
        let mut next_index = 0;
        let mut next_comp = 0;
        for root in 0..n {
            if index[root] != usize::MAX || !self.node_alive(alive, root) {
                continue;
            }
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (x, ref mut k)) = call.last_mut() {
                if let Some(&y) = self.succ[x].get(*k) {
                    *k += 1;
                    if !self.node_alive(alive, y) {
                        continue;
                    }
                    if index[y] == usize::MAX {
                        index[y] = next_index;
                        low[y] = next_index;
                        next_index += 1;
                        stack.push(y);
                        on_stack[y] = true;
                        call.push((y, 0));
                    } else if on_stack[y] {
                        low[x] = low[x].min(index[y]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[x]);
                    }
                    if low[x] == index[x] {
                        while let Some(z) = stack.pop() {
                            on_stack[z] = false;
                            comp[z] = Some(next_comp);
                            if z == x {
                                break;
                            }
                        }
                        next_comp += 1;
                    }
                }
            }
        }
        comp
    }
}

/// An alternating cycle of `m` that avoids every edge (and so every vertex)
/// of `set`, or `None` when `set` forces `m`.
pub fn find_alternating_cycle_avoiding(
    g: &Graph,
    m: &Matching,
    set: &EdgeSet,
) -> Result<Option<AlternatingCycle>> {
    m.check_perfect_on(g)?;
    m.check_subset(set)?;
    let alt = AltGraph::new(g, m);
    let alive = alt.alive_without(set)?;
    Ok(alt.find_cycle(&alive).map(|c| alt.to_cycle(&c)))
}

/// Decomposes `m1 Δ m2` into its vertex-disjoint cycles, each alternating
/// with respect to both matchings. Cycles are canonical relative to `m1`
/// and sorted.
pub fn symmetric_difference_cycles(m1: &Matching, m2: &Matching) -> Result<Vec<AlternatingCycle>> {
    if m1.vertex_count() != m2.vertex_count() {
        return Err(Error::Precondition(format!(
            "matchings cover {} and {} vertices",
            m1.vertex_count(),
            m2.vertex_count()
        )));
    }
    let n = m1.vertex_count();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] || m1.partner(start) == m2.partner(start) {
            continue;
        }
        let mut vertices = Vec::new();
        let mut v = start;
        let mut use_first = true;
        loop {
            seen[v] = true;
            vertices.push(v);
            v = if use_first {
                m1.partner(v)
            } else {
                m2.partner(v)
            };
            use_first = !use_first;
            if v == start {
                break;
            }
        }
        cycles.push(AlternatingCycle::new(vertices, m1));
    }
    cycles.sort();
    Ok(cycles)
}

/// Maximum number of vertex-disjoint `m`-alternating cycles, with a packing
/// that attains it. Exhaustive branch and bound: the smallest live matching
/// edge is either covered by one of the cycles through it or excluded.
pub fn max_disjoint_alternating_cycles(
    g: &Graph,
    m: &Matching,
) -> Result<(usize, Vec<AlternatingCycle>)> {
    m.check_perfect_on(g)?;
    let alt = AltGraph::new(g, m);
    let alive = vec![true; alt.edge_count()];
    let mut best = alt.greedy_packing(&alive, 10_000);
    let mut current = Vec::new();
    pack(&alt, alive, &mut current, &mut best);
    let mut cycles: Vec<AlternatingCycle> = best.iter().map(|c| alt.to_cycle(c)).collect();
    cycles.sort();
    Ok((cycles.len(), cycles))
}

fn pack(
    alt: &AltGraph<'_>,
    mut alive: Vec<bool>,
    current: &mut Vec<Vec<usize>>,
    best: &mut Vec<Vec<usize>>,
) {
    let bound = alt.prune_and_bound(&mut alive);
    if current.len() + bound <= best.len() {
        return;
    }
    let Some(root) = alive.iter().position(|&a| a) else {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    };
    for cycle in alt.cycles_through(&alive, root) {
        let mut next = alive.clone();
        for e in alt.cycle_edges(&cycle) {
            next[e] = false;
        }
        current.push(cycle);
        pack(alt, next, current, best);
        current.pop();
    }
    alive[root] = false;
    pack(alt, alive, current, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_cylinder, make_grid};
    use crate::matching::enumerate_perfect_matchings;

    fn horizontal_2x2() -> (Graph, Matching) {
        let g = make_grid(2, 2).unwrap();
        let m = Matching::from_edges(&g, [Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        (g, m)
    }

    #[test]
    fn square_cycle_and_its_blocking() {
        let (g, m) = horizontal_2x2();
        let c = find_alternating_cycle_avoiding(&g, &m, &EdgeSet::new())
            .unwrap()
            .unwrap();
        assert_eq!(c.vertices(), &[0, 1, 3, 2]);
        assert!(c.is_valid(&g, &m));
        let set = EdgeSet::from_edges([Edge::new(0, 1)]);
        assert!(find_alternating_cycle_avoiding(&g, &m, &set)
            .unwrap()
            .is_none());
        let bad = EdgeSet::from_edges([Edge::new(0, 2)]);
        assert!(matches!(
            find_alternating_cycle_avoiding(&g, &m, &bad),
            Err(Error::NotSubset(_))
        ));
    }

    #[test]
    fn canonical_orientation() {
        let (_, m) = horizontal_2x2();
        let a = AlternatingCycle::new(vec![3, 2, 0, 1], &m);
        let b = AlternatingCycle::new(vec![1, 0, 2, 3], &m);
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &[0, 1, 3, 2]);
    }

    #[test]
    fn symmetric_difference_of_square() {
        let (g, m1) = horizontal_2x2();
        let m2 = Matching::from_edges(&g, [Edge::new(0, 2), Edge::new(1, 3)]).unwrap();
        assert!(symmetric_difference_cycles(&m1, &m1).unwrap().is_empty());
        let cycles = symmetric_difference_cycles(&m1, &m2).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 4);
        assert_eq!(cycles[0].flip(&m1), m2);
    }

    #[test]
    fn non_bipartite_search_matches_oriented_count() {
        // C_6 as a 6-cycle is bipartite; the triangle-free odd case needs
        // the general search, so compare on cylinder(2,3) which has triangles.
        let g = make_cylinder(2, 3).unwrap();
        assert!(!g.is_bipartite());
        for m in enumerate_perfect_matchings(&g) {
            let cycle = find_alternating_cycle_avoiding(&g, &m, &EdgeSet::new()).unwrap();
            let others = enumerate_perfect_matchings(&g).filter(|o| *o != m).count();
            assert_eq!(cycle.is_some(), others > 0);
            if let Some(c) = cycle {
                assert!(c.is_valid(&g, &m));
                assert!(c.flip(&m).check_perfect_on(&g).is_ok());
            }
        }
    }

    #[test]
    fn packing_small() {
        let (g, m) = horizontal_2x2();
        assert_eq!(max_disjoint_alternating_cycles(&g, &m).unwrap().0, 1);
        let g = make_grid(4, 4).unwrap();
        let horizontal = Matching::from_edges(
            &g,
            (0..16).filter(|v| v % 2 == 0).map(|v| Edge::new(v, v + 1)),
        )
        .unwrap();
        let (count, cycles) = max_disjoint_alternating_cycles(&g, &horizontal).unwrap();
        assert_eq!(count, 4);
        assert!(cycles.iter().all(|c| c.is_valid(&g, &horizontal)));
    }
}
