//! Concentrated alternating cycles matchings and their row-trimmed variants.

use crate::error::{Error, Result};
use crate::generators::make_grid;
use crate::graph::{Coord, Edge, Graph};
use crate::matching::{EdgeSet, Matching};

/// A matching edge as two 1-based grid positions.
pub(crate) type CoordEdge = (Coord, Coord);

pub(crate) fn horizontal(row: u32, col: u32) -> CoordEdge {
    (Coord::new(row, col), Coord::new(row, col + 1))
}

pub(crate) fn vertical(row: u32, col: u32) -> CoordEdge {
    (Coord::new(row, col), Coord::new(row + 1, col))
}

/// CACM edges of a `rows x cols` block whose top-left cell is `(top, left)`.
/// Ring `t` matches its first and last rows horizontally and the rest of its
/// first and last columns vertically.
pub(crate) fn cacm_block(top: u32, left: u32, rows: u32, cols: u32) -> Vec<CoordEdge> {
    debug_assert!(rows.is_multiple_of(2) && cols.is_multiple_of(2));
    let mut out = Vec::new();
    let mut t = 0;
    while 2 * t < rows && 2 * t < cols {
        let (r0, r1) = (top + t, top + rows - 1 - t);
        let (c0, c1) = (left + t, left + cols - 1 - t);
        for c in (c0..c1).step_by(2) {
            out.push(horizontal(r0, c));
            out.push(horizontal(r1, c));
        }
        for r in (r0 + 1..r1 - 1).step_by(2) {
            out.push(vertical(r, c0));
            out.push(vertical(r, c1));
        }
        t += 1;
    }
    out
}

/// Maps coordinate edges onto the vertices of `g`.
pub(crate) fn edges_on(g: &Graph, edges: &[CoordEdge]) -> Result<Vec<Edge>> {
    let index = g.coord_index()?;
    edges
        .iter()
        .map(|&(a, b)| {
            let lookup = |c: Coord| {
                index.at(c.row as i64, c.col as i64).ok_or_else(|| {
                    Error::Precondition(format!("no vertex at ({},{})", c.row, c.col))
                })
            };
            Ok(Edge::new(lookup(a)?, lookup(b)?))
        })
        .collect()
}

fn check_even(what: &str, value: usize) -> Result<()> {
    if value == 0 || value % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "{what} must be even and >= 2, got {value}"
        )));
    }
    Ok(())
}

fn check_odd(what: &str, value: usize) -> Result<()> {
    if value.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "{what} must be odd, got {value}"
        )));
    }
    Ok(())
}

/// The CACM of the `m x n` grid (`m`, `n` even).
pub fn cacm(m: usize, n: usize) -> Result<Matching> {
    check_even("rows", m)?;
    check_even("columns", n)?;
    let g = make_grid(m, n)?;
    let edges = edges_on(&g, &cacm_block(1, 1, m as u32, n as u32))?;
    Matching::from_edges(&g, edges)
}

/// CACM edges of a `(rows + 1) x cols` block with its first row dropped,
/// shifted so the block starts at `(top, left)`.
pub(crate) fn ucacm_block(top: u32, left: u32, rows: u32, cols: u32) -> Vec<CoordEdge> {
    cacm_block(top - 1, left, rows + 1, cols)
        .into_iter()
        .filter(|(a, _)| a.row >= top)
        .collect()
}

/// CACM edges of a `(rows + 1) x cols` block with its last row dropped.
pub(crate) fn dcacm_block(top: u32, left: u32, rows: u32, cols: u32) -> Vec<CoordEdge> {
    cacm_block(top, left, rows + 1, cols)
        .into_iter()
        .filter(|(_, b)| b.row < top + rows)
        .collect()
}

/// CACM of the `(rows + 1) x cols` grid without its first row.
pub fn ucacm(rows: usize, cols: usize) -> Result<Matching> {
    check_odd("rows", rows)?;
    check_even("columns", cols)?;
    let g = make_grid(rows, cols)?;
    let edges = edges_on(&g, &ucacm_block(1, 1, rows as u32, cols as u32))?;
    Matching::from_edges(&g, edges)
}

/// CACM of the `(rows + 1) x cols` grid without its last row.
pub fn dcacm(rows: usize, cols: usize) -> Result<Matching> {
    check_odd("rows", rows)?;
    check_even("columns", cols)?;
    let g = make_grid(rows, cols)?;
    let edges = edges_on(&g, &dcacm_block(1, 1, rows as u32, cols as u32))?;
    Matching::from_edges(&g, edges)
}

/// A forcing set of the CACM of a `rows x cols` block: the top-left
/// horizontal edge of every full ring, and the top edge of each square in
/// a final two-row strip (or the left edge of each square in a final
/// two-column strip).
pub(crate) fn cacm_block_forcing(top: u32, left: u32, rows: u32, cols: u32) -> Vec<CoordEdge> {
    let mut out = Vec::new();
    let mut t = 0;
    while 2 * t < rows && 2 * t < cols {
        let (h, w) = (rows - 2 * t, cols - 2 * t);
        let (r0, c0) = (top + t, left + t);
        if h == 2 {
            out.extend((0..w / 2).map(|s| horizontal(r0, c0 + 2 * s)));
        } else if w == 2 {
            out.push(horizontal(r0, c0));
            out.extend((0..(h - 2) / 2).map(|s| vertical(r0 + 1 + 2 * s, c0)));
        } else {
            out.push(horizontal(r0, c0));
        }
        t += 1;
    }
    out
}

/// A forcing set of [`cacm`]`(m, n)` of size equal to its forcing number.
pub fn cacm_forcing_set(m: usize, n: usize) -> Result<EdgeSet> {
    check_even("rows", m)?;
    check_even("columns", n)?;
    let g = make_grid(m, n)?;
    Ok(EdgeSet::from_edges(edges_on(
        &g,
        &cacm_block_forcing(1, 1, m as u32, n as u32),
    )?))
}

/// Pairs columns `(1,2), (3,4), ...` in every row. Works on grids,
/// cylinders and tori whose rows have even length.
pub fn all_horizontal_matching(g: &Graph) -> Result<Matching> {
    let coords = g.coords().ok_or(Error::MissingCoords)?;
    let index = g.coord_index()?;
    let mut edges = Vec::new();
    for (v, c) in coords.iter().enumerate() {
        if c.col % 2 == 0 {
            continue;
        }
        match index.at(c.row as i64, c.col as i64 + 1) {
            Some(w) if g.has_edge(v, w) => edges.push(Edge::new(v, w)),
            _ => {
                return Err(Error::Precondition(format!(
                    "row {} has odd length or a gap at column {}",
                    c.row,
                    c.col + 1
                )))
            }
        }
    }
    Matching::from_edges(g, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cacm_2x2_is_horizontal() {
        let m = cacm(2, 2).unwrap();
        assert_eq!(m.edges(), &[Edge::new(0, 1), Edge::new(2, 3)]);
    }

    #[test]
    fn cacm_family_is_perfect() {
        for m in (2..=8).step_by(2) {
            for n in (2..=12).step_by(2) {
                assert!(cacm(m, n).is_ok(), "cacm({m},{n})");
            }
        }
        for rows in (1..=7).step_by(2) {
            for cols in (2..=10).step_by(2) {
                assert!(ucacm(rows, cols).is_ok(), "ucacm({rows},{cols})");
                assert!(dcacm(rows, cols).is_ok(), "dcacm({rows},{cols})");
            }
        }
        assert!(cacm(3, 4).is_err());
        assert!(ucacm(2, 4).is_err());
    }

    #[test]
    fn ucacm_single_row() {
        let m = ucacm(1, 6).unwrap();
        assert_eq!(
            m.edges(),
            &[Edge::new(0, 1), Edge::new(2, 3), Edge::new(4, 5)]
        );
    }

    #[test]
    fn dcacm_mirrors_ucacm() {
        let (rows, cols) = (3, 4);
        let up = ucacm(rows, cols).unwrap();
        let down = dcacm(rows, cols).unwrap();
        let mirror = |v: usize| (rows - 1 - v / cols) * cols + v % cols;
        let mirrored: EdgeSet = up
            .edges()
            .iter()
            .map(|e| Edge::new(mirror(e.lo()), mirror(e.hi())))
            .collect();
        assert_eq!(mirrored.as_slice(), down.edges());
    }

    #[test]
    fn all_horizontal_needs_even_rows() {
        assert!(all_horizontal_matching(&make_grid(2, 2).unwrap()).is_ok());
        assert!(all_horizontal_matching(&make_grid(2, 3).unwrap()).is_err());
        let cyl = crate::generators::make_cylinder(3, 4).unwrap();
        assert_eq!(all_horizontal_matching(&cyl).unwrap().len(), 6);
    }
}
