//! Brute-force reference implementations on raw edge lists. Nothing here
//! calls into the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

pub type RawEdge = (usize, usize);

fn norm((a, b): RawEdge) -> RawEdge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Two-coloring by BFS, `None` if an odd cycle exists.
pub fn two_coloring(n: usize, edges: &[RawEdge]) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut color = vec![usize::MAX; n];
    for s in 0..n {
        if color[s] != usize::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if color[w] == usize::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Ryser's formula: `perm(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij`.
pub fn permanent(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut total: i128 = 0;
    for mask in 1u64..(1u64 << n) {
        let mut prod: i128 = 1;
        for row in a {
            let s: i64 = (0..n).filter(|&j| mask >> j & 1 == 1).map(|j| row[j]).sum();
            prod *= s as i128;
            if prod == 0 {
                break;
            }
        }
        let sign = if (n - mask.count_ones() as usize).is_multiple_of(2) {
            1
        } else {
            -1
        };
        total += sign * prod;
    }
    total
}

/// Perfect matchings of a bipartite graph counted as the permanent of its
/// biadjacency matrix; `None` for non-bipartite input.
pub fn bipartite_matching_count(n: usize, edges: &[RawEdge]) -> Option<i128> {
    let color = two_coloring(n, edges)?;
    let left: Vec<usize> = (0..n).filter(|&v| color[v] == 0).collect();
    let right: Vec<usize> = (0..n).filter(|&v| color[v] == 1).collect();
    if left.len() != right.len() {
        return Some(0);
    }
    let pos = |side: &[usize], v: usize| side.iter().position(|&x| x == v).unwrap();
    let mut a = vec![vec![0i64; left.len()]; left.len()];
    for &(x, y) in edges {
        let (l, r) = if color[x] == 0 { (x, y) } else { (y, x) };
        a[pos(&left, l)][pos(&right, r)] = 1;
    }
    Some(permanent(&a))
}

/// Every perfect matching as a sorted edge list, via bitmask recursion on
/// the lowest unmatched vertex.
pub fn perfect_matchings(n: usize, edges: &[RawEdge]) -> Vec<Vec<RawEdge>> {
    assert!(n <= 64);
    let mut adj = vec![Vec::new(); n];
    for &e in edges {
        let (a, b) = norm(e);
        adj[a].push(b);
        adj[b].push(a);
    }
    fn rec(
        adj: &[Vec<usize>],
        used: u64,
        n: usize,
        cur: &mut Vec<RawEdge>,
        out: &mut Vec<Vec<RawEdge>>,
    ) {
        let Some(v) = (0..n).find(|&v| used >> v & 1 == 0) else {
            let mut m = cur.clone();
            m.sort_unstable();
            out.push(m);
            return;
        };
        for &w in &adj[v] {
            if used >> w & 1 == 0 {
                cur.push(norm((v, w)));
                rec(adj, used | 1 << v | 1 << w, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&adj, 0, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// True iff `m` is the only matching in `all` containing `s`.
pub fn is_forcing(all: &[Vec<RawEdge>], m: &[RawEdge], s: &[RawEdge]) -> bool {
    let containing: Vec<_> = all
        .iter()
        .filter(|x| s.iter().all(|e| x.contains(e)))
        .collect();
    containing.len() == 1 && containing[0].as_slice() == m
}

/// Smallest forcing subset of `m` by exhaustive subset search.
pub fn forcing_number(all: &[Vec<RawEdge>], m: &[RawEdge]) -> usize {
    let others: Vec<&Vec<RawEdge>> = all.iter().filter(|x| x.as_slice() != m).collect();
    let k = m.len();
    let mut best = k;
    for mask in 0u64..(1u64 << k) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let s: Vec<RawEdge> = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| m[i])
            .collect();
        if others.iter().all(|o| !s.iter().all(|e| o.contains(e))) {
            best = size;
        }
    }
    best
}

/// Every `m`-alternating cycle as its vertex set.
pub fn alternating_cycles(n: usize, edges: &[RawEdge], m: &[RawEdge]) -> BTreeSet<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &e in edges {
        let (a, b) = norm(e);
        adj[a].push(b);
        adj[b].push(a);
    }
    let in_m = |a: usize, b: usize| m.contains(&norm((a, b)));
    let mut found = BTreeSet::new();
    // Cycles rooted at their smallest vertex, leaving it by its M-edge.
    for root in 0..n {
        let Some(&(a, b)) = m.iter().find(|&&(a, b)| a == root || b == root) else {
            continue;
        };
        let first = if a == root { b } else { a };
        let mut path = vec![root, first];
        let mut on = vec![false; n];
        on[root] = true;
        on[first] = true;
        fn walk(
            adj: &[Vec<usize>],
            in_m: &dyn Fn(usize, usize) -> bool,
            root: usize,
            path: &mut Vec<usize>,
            on: &mut Vec<bool>,
            found: &mut BTreeSet<Vec<usize>>,
        ) {
            let v = *path.last().unwrap();
            let want_m = path.len() % 2 == 1;
            for &w in &adj[v] {
                if in_m(v, w) != want_m {
                    continue;
                }
                if w == root && !want_m && path.len() >= 4 {
                    let mut vs = path.clone();
                    vs.sort_unstable();
                    found.insert(vs);
                    continue;
                }
                if w < root || on[w] {
                    continue;
                }
                on[w] = true;
                path.push(w);
                walk(adj, in_m, root, path, on, found);
                path.pop();
                on[w] = false;
            }
        }
        walk(&adj, &in_m, root, &mut path, &mut on, &mut found);
    }
    found
}

/// Maximum number of pairwise vertex-disjoint sets among `cycles`.
pub fn max_disjoint(cycles: &[Vec<usize>]) -> usize {
    fn rec(cycles: &[Vec<usize>], i: usize, used: u64, count: usize, best: &mut usize) {
        if count + (cycles.len() - i) <= *best {
            return;
        }
        if i == cycles.len() {
            *best = count;
            return;
        }
        let mask = cycles[i].iter().fold(0u64, |acc, &v| acc | 1 << v);
        if mask & used == 0 {
            rec(cycles, i + 1, used | mask, count + 1, best);
        }
        rec(cycles, i + 1, used, count, best);
    }
    let mut best = 0;
    rec(cycles, 0, 0, 0, &mut best);
    best
}
