//! Brackets, skew brackets and the 2-switch procedure that removes them
//! from matchings of column-continuous subgrids.
//!
//! Positions are `(row, column)`, 1-based. An `(i,j,k)`-bracket is the
//! horizontal edge at `(i,j)`, `k` vertical edges pairing rows
//! `i+1..=i+2k` of column `j`, and the horizontal edge at `(i+2k+1, j)`.
//! Skew brackets replace one of the two horizontal ends by an edge shifted
//! one column to the right.

use std::collections::BTreeMap;

use crate::constructions::switch::{apply_two_switch, TwoSwitchStep};
use crate::error::{Error, Result};
use crate::graph::{CoordIndex, Graph, VertexId};
use crate::matching::Matching;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BracketKind {
    Bracket,
    SkewI,
    SkewII,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bracket {
    pub kind: BracketKind,
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl Bracket {
    /// The pattern's edges as pairs of `(row, column)` positions.
    pub fn edge_positions(&self) -> Vec<((u32, u32), (u32, u32))> {
        let (i, j, k) = (self.i, self.j, self.k);
        let mut out = Vec::new();
        match self.kind {
            BracketKind::Bracket => {
                out.push(((i, j), (i, j + 1)));
                out.extend((0..k).map(|t| ((i + 2 * t + 1, j), (i + 2 * t + 2, j))));
                out.push(((i + 2 * k + 1, j), (i + 2 * k + 1, j + 1)));
            }
            BracketKind::SkewI => {
                out.push(((i, j), (i, j + 1)));
                out.extend((0..k).map(|t| ((i + 2 * t + 1, j), (i + 2 * t + 2, j))));
                out.push(((i + 2 * k, j + 1), (i + 2 * k, j + 2)));
            }
            BracketKind::SkewII => {
                out.push(((i, j + 1), (i, j + 2)));
                out.extend((0..k).map(|t| ((i + 2 * t, j), (i + 2 * t + 1, j))));
                out.push(((i + 2 * k, j), (i + 2 * k, j + 1)));
            }
        }
        out
    }
}

/// Read-only view of a matching through grid positions.
struct GridView<'a> {
    index: &'a CoordIndex,
    matching: &'a Matching,
}

impl GridView<'_> {
    fn at(&self, row: i64, col: i64) -> Option<VertexId> {
        self.index.at(row, col)
    }

    fn matched(&self, a: (i64, i64), b: (i64, i64)) -> bool {
        match (self.at(a.0, a.1), self.at(b.0, b.1)) {
            (Some(x), Some(y)) => self.matching.partner(x) == y,
            _ => false,
        }
    }

    fn right(&self, row: i64, col: i64) -> bool {
        self.matched((row, col), (row, col + 1))
    }

    fn down(&self, row: i64, col: i64) -> bool {
        self.matched((row, col), (row + 1, col))
    }

    /// Rows past the run of vertical pairs in `col` starting at `row`.
    fn vertical_run_end(&self, mut row: i64, col: i64) -> i64 {
        while self.down(row, col) {
            row += 2;
        }
        row
    }

    fn scan(&self, kinds: &[BracketKind]) -> Vec<Bracket> {
        let want = |k: BracketKind| kinds.contains(&k);
        let mut out = Vec::new();
        let (rows, cols) = (self.index.rows() as i64, self.index.cols() as i64);
        for j in 1..=cols {
            for i in 1..=rows {
                if self.right(i, j) {
                    let end = self.vertical_run_end(i + 1, j);
                    let k = (end - i - 1) / 2;
                    if want(BracketKind::Bracket) && self.right(end, j) {
                        out.push(make(BracketKind::Bracket, i, j, k));
                    }
                    if want(BracketKind::SkewI) {
                        for t in 1..=k {
                            if self.right(i + 2 * t, j + 1) {
                                out.push(make(BracketKind::SkewI, i, j, t));
                            }
                        }
                    }
                }
                if want(BracketKind::SkewII) && self.right(i, j + 1) {
                    let end = self.vertical_run_end(i, j);
                    let k = (end - i) / 2;
                    if k >= 1 && self.right(end, j) {
                        out.push(make(BracketKind::SkewII, i, j, k));
                    }
                }
            }
        }
        out.sort();
        out
    }
}

fn make(kind: BracketKind, i: i64, j: i64, k: i64) -> Bracket {
    Bracket {
        kind,
        i: i as u32,
        j: j as u32,
        k: k as u32,
    }
}

/// Every bracket and skew bracket of `m`, sorted by kind then position.
pub fn find_brackets(g: &Graph, m: &Matching) -> Result<Vec<Bracket>> {
    let index = g.coord_index()?;
    m.check_perfect_on(g)?;
    let view = GridView {
        index: &index,
        matching: m,
    };
    Ok(view.scan(&[
        BracketKind::Bracket,
        BracketKind::SkewI,
        BracketKind::SkewII,
    ]))
}

/// Induced subgraph of its bounding grid with no vertical holes in any column.
pub fn is_column_continuous(g: &Graph) -> Result<bool> {
    let coords = g.coords().ok_or(Error::MissingCoords)?;
    let index = g.coord_index()?;
    for e in g.edges() {
        let (a, b) = (coords[e.lo()], coords[e.hi()]);
        if a.row.abs_diff(b.row) + a.col.abs_diff(b.col) != 1 {
            return Ok(false);
        }
    }
    let mut columns: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (v, c) in coords.iter().enumerate() {
        for (dr, dc) in [(0, 1), (1, 0)] {
            if let Some(w) = index.at(c.row as i64 + dr, c.col as i64 + dc) {
                if !g.has_edge(v, w) {
                    return Ok(false);
                }
            }
        }
        columns.entry(c.col).or_default().push(c.row);
    }
    Ok(columns.values_mut().all(|rows| {
        rows.sort_unstable();
        rows.windows(2).all(|w| w[1] == w[0] + 1)
    }))
}

struct Eliminator<'g> {
    graph: &'g Graph,
    index: CoordIndex,
    matching: Matching,
    trace: Vec<TwoSwitchStep>,
    /// Rows `lo..=hi`, columns `>= col` of the bracket being cleared.
    window: (i64, i64, i64),
}

impl Eliminator<'_> {
    fn view(&self) -> GridView<'_> {
        GridView {
            index: &self.index,
            matching: &self.matching,
        }
    }

    fn vertex(&self, row: i64, col: i64) -> Result<VertexId> {
        self.index
            .at(row, col)
            .ok_or_else(|| Error::Precondition(format!("no vertex at ({row},{col})")))
    }

    /// 2-switch on the square with top-left `(row, col)`. `vertical_pair`
    /// selects whether the current matching edges are its two columns.
    fn switch_square(&mut self, row: i64, col: i64, vertical_pair: bool) -> Result<()> {
        let (lo, hi, min_col) = self.window;
        if row < lo || row + 1 > hi || col < min_col {
            return Err(Error::InvalidSwitch(format!(
                "square at ({row},{col}) leaves the window rows {lo}..={hi}, columns >= {min_col}"
            )));
        }
        let tl = self.vertex(row, col)?;
        let tr = self.vertex(row, col + 1)?;
        let bl = self.vertex(row + 1, col)?;
        let br = self.vertex(row + 1, col + 1)?;
        let cycle = if vertical_pair {
            [tl, bl, br, tr]
        } else {
            [tl, tr, br, bl]
        };
        let step = TwoSwitchStep::new(cycle);
        self.matching = apply_two_switch(self.graph, &self.matching, &step)?;
        self.trace.push(step);
        Ok(())
    }

    /// Makes column `j`, rows `i..=i+2k+1`, entirely vertical, touching only
    /// vertices in rows `i..=i+2k+1` and columns `>= j`.
    fn clear(&mut self, i: i64, j: i64, k: i64) -> Result<()> {
        loop {
            let view = self.view();
            let horizontal: Vec<i64> = (i + 1..=i + 2 * k)
                .filter(|&x| view.right(x, j + 1))
                .collect();
            if horizontal.is_empty() {
                break;
            }
            let (x, y) = match horizontal.as_slice() {
                [x, y, ..] => (*x, *y),
                _ => {
                    return Err(Error::Precondition(format!(
                        "odd number of horizontal edges beside the ({i},{j},{k})-bracket"
                    )))
                }
            };
            let t = (y - x - 1) / 2;
            if view.vertical_run_end(x + 1, j + 1) != y {
                return Err(Error::Precondition(format!(
                    "rows {x}..={y} of column {} do not form a bracket",
                    j + 1
                )));
            }
            self.clear(x, j + 1, t)?;
        }
        for t in 0..k {
            self.switch_square(i + 2 * t + 1, j, true)?;
            self.switch_square(i + 2 * t, j, false)?;
        }
        self.switch_square(i + 2 * k, j, false)
    }
}

/// Removes every bracket by 2-switches, leftmost column first and topmost
/// bracket first within a column. Returns the bracket-free matching and the
/// steps taken; replaying the steps from `m` reproduces it.
pub fn eliminate_brackets(g: &Graph, m: &Matching) -> Result<(Matching, Vec<TwoSwitchStep>)> {
    if !is_column_continuous(g)? {
        return Err(Error::Precondition(
            "graph is not a column-continuous subgrid".into(),
        ));
    }
    m.check_perfect_on(g)?;
    let mut state = Eliminator {
        graph: g,
        index: g.coord_index()?,
        matching: m.clone(),
        trace: Vec::new(),
        window: (0, 0, 0),
    };
    let limit = g.vertex_count().pow(2) + 1;
    for _ in 0..limit {
        let next = state
            .view()
            .scan(&[BracketKind::Bracket])
            .into_iter()
            .min_by_key(|b| (b.j, b.i));
        let Some(b) = next else {
            return Ok((state.matching, state.trace));
        };
        let (i, j, k) = (b.i as i64, b.j as i64, b.k as i64);
        state.window = (i, i + 2 * k + 1, j);
        state.clear(i, j, k)?;
    }
    Err(Error::Precondition(format!(
        "bracket elimination did not finish within {limit} rounds"
    )))
}

/// Applies `steps` in order, validating each.
pub fn replay(g: &Graph, m: &Matching, steps: &[TwoSwitchStep]) -> Result<Matching> {
    steps
        .iter()
        .try_fold(m.clone(), |acc, step| apply_two_switch(g, &acc, step))
}

/// A 2-switch sequence from `m1` to `m2`: both are reduced to the common
/// bracket-free matching, and the second reduction is run backwards.
pub fn connect_matchings(g: &Graph, m1: &Matching, m2: &Matching) -> Result<Vec<TwoSwitchStep>> {
    let (b1, mut steps) = eliminate_brackets(g, m1)?;
    let (b2, back) = eliminate_brackets(g, m2)?;
    if b1 != b2 {
        return Err(Error::Precondition(
            "bracket-free reductions of the two matchings differ".into(),
        ));
    }
    if m1 == m2 {
        return Ok(Vec::new());
    }
    for step in back.iter().rev().map(TwoSwitchStep::inverse) {
        if steps.last() == Some(&step.inverse()) {
            steps.pop();
        } else {
            steps.push(step);
        }
    }
    if replay(g, m1, &steps)? != *m2 {
        return Err(Error::Precondition(
            "switch sequence does not reach the target".into(),
        ));
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cacm::{all_horizontal_matching, cacm};
    use crate::generators::{make_cylinder, make_gadget_g, make_grid, make_stop_sign};
    use crate::graph::Edge;

    fn vertical_matching(g: &Graph) -> Matching {
        let index = g.coord_index().unwrap();
        let edges = g
            .coords()
            .unwrap()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.row % 2 == 1)
            .map(|(v, c)| Edge::new(v, index.at(c.row as i64 + 1, c.col as i64).unwrap()));
        Matching::from_edges(g, edges).unwrap()
    }

    #[test]
    fn column_continuity() {
        assert!(is_column_continuous(&make_grid(3, 5).unwrap()).unwrap());
        assert!(is_column_continuous(&make_stop_sign(3, 1).unwrap()).unwrap());
        assert!(is_column_continuous(&make_stop_sign(3, 2).unwrap()).unwrap());
        assert!(!is_column_continuous(&make_cylinder(2, 4).unwrap()).unwrap());
        assert!(matches!(
            is_column_continuous(&make_gadget_g(4).unwrap().0),
            Err(Error::MissingCoords)
        ));
    }

    #[test]
    fn vertical_matching_has_no_brackets() {
        let g = make_grid(4, 4).unwrap();
        let m = vertical_matching(&g);
        assert!(find_brackets(&g, &m).unwrap().is_empty());
        let (out, steps) = eliminate_brackets(&g, &m).unwrap();
        assert_eq!(out, m);
        assert!(steps.is_empty());
    }

    #[test]
    fn hand_built_bracket_is_detected() {
        // Column 1 of grid(4,4): (1,1)-(1,2), (2,1)-(3,1), (4,1)-(4,2); the
        // rest of the grid is completed by vertical and horizontal pairs.
        let g = make_grid(4, 4).unwrap();
        let id = |r: usize, c: usize| (r - 1) * 4 + (c - 1);
        let edges = [
            Edge::new(id(1, 1), id(1, 2)),
            Edge::new(id(2, 1), id(3, 1)),
            Edge::new(id(4, 1), id(4, 2)),
            Edge::new(id(2, 2), id(3, 2)),
            Edge::new(id(1, 3), id(2, 3)),
            Edge::new(id(3, 3), id(4, 3)),
            Edge::new(id(1, 4), id(2, 4)),
            Edge::new(id(3, 4), id(4, 4)),
        ];
        let m = Matching::from_edges(&g, edges).unwrap();
        let found = find_brackets(&g, &m).unwrap();
        assert_eq!(
            found,
            vec![Bracket {
                kind: BracketKind::Bracket,
                i: 1,
                j: 1,
                k: 1
            }]
        );
        let expected = [((1, 1), (1, 2)), ((2, 1), (3, 1)), ((4, 1), (4, 2))];
        assert_eq!(found[0].edge_positions(), expected);
    }

    #[test]
    fn horizontal_grid_is_cleaned() {
        let g = make_grid(4, 4).unwrap();
        let m = all_horizontal_matching(&g).unwrap();
        let (out, steps) = eliminate_brackets(&g, &m).unwrap();
        assert!(!steps.is_empty());
        assert!(find_brackets(&g, &out).unwrap().is_empty());
        assert_eq!(replay(&g, &m, &steps).unwrap(), out);
        assert_eq!(out, vertical_matching(&g));
    }

    #[test]
    fn cacm_is_cleaned() {
        let g = make_grid(6, 6).unwrap();
        let m = cacm(6, 6).unwrap();
        let (out, steps) = eliminate_brackets(&g, &m).unwrap();
        assert!(find_brackets(&g, &out).unwrap().is_empty());
        assert_eq!(replay(&g, &m, &steps).unwrap(), out);
    }

    #[test]
    fn connect_square() {
        let g = make_grid(2, 2).unwrap();
        let h = all_horizontal_matching(&g).unwrap();
        let v = vertical_matching(&g);
        assert!(connect_matchings(&g, &h, &h).unwrap().is_empty());
        assert_eq!(connect_matchings(&g, &h, &v).unwrap().len(), 1);
    }

    #[test]
    fn rejects_cylinder() {
        let g = make_cylinder(2, 4).unwrap();
        let m = all_horizontal_matching(&g).unwrap();
        assert!(matches!(
            eliminate_brackets(&g, &m),
            Err(Error::Precondition(_))
        ));
    }
}
