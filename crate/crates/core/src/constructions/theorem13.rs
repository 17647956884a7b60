//! Block patterns on `P_m x P_n` with small forcing sets.
//!
//! Even height `2k x ((2k+1)l + r)`: vertically matched separator columns
//! `1, (2k+1)+1, ..., (l-1)(2k+1)+1` (plus the last column when `r` is odd)
//! with a CACM in every block between them.
//!
//! Odd height `(2k+1) x ((2k+2)l + 2r)`: `l-1` blocks of width `2k+2` and a
//! last block of width `2k+2r+2`, filled alternately with UCACM and DCACM.

use serde::{Deserialize, Serialize};

use super::cacm::{
    cacm_block, cacm_block_forcing, dcacm_block, edges_on, ucacm_block, vertical, CoordEdge,
};
use crate::error::{Error, Result};
use crate::forcing::is_forcing_set;
use crate::generators::make_grid;
use crate::graph::{Coord, Graph};
use crate::matching::{EdgeSet, Matching};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HeightCase {
    EvenHeight,
    OddHeight,
}

#[derive(Clone, Debug)]
pub struct Theorem13Instance {
    pub graph: Graph,
    pub matching: Matching,
    pub forcing_set: EdgeSet,
    pub bound: usize,
}

/// Grid dimensions `(rows, cols)` for the parameters.
pub fn theorem13_dimensions(
    k: usize,
    l: usize,
    r: usize,
    case: HeightCase,
) -> Result<(usize, usize)> {
    check_params(k, l, r, case)?;
    Ok(match case {
        HeightCase::EvenHeight => (2 * k, (2 * k + 1) * l + r),
        HeightCase::OddHeight => (2 * k + 1, (2 * k + 2) * l + 2 * r),
    })
}

/// `kl + ceil((r-1)/2)` for even height, `kl + r` for odd height.
pub fn theorem13_bound(k: usize, l: usize, r: usize, case: HeightCase) -> Result<usize> {
    check_params(k, l, r, case)?;
    Ok(match case {
        // ceil((r-1)/2) is 0 at r = 0 and r/2 rounded down otherwise.
        HeightCase::EvenHeight => k * l + r / 2,
        HeightCase::OddHeight => k * l + r,
    })
}

fn check_params(k: usize, l: usize, r: usize, case: HeightCase) -> Result<()> {
    let ok = match case {
        HeightCase::EvenHeight => k >= 1 && l >= 1 && r <= 2 * k,
        HeightCase::OddHeight => l >= 1 && 2 * r <= 2 * k + 1,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "block pattern parameters out of range for {case:?}: k={k}, l={l}, r={r}"
        )))
    }
}

/// Builds the matching and a forcing set of exactly the bound's size; the
/// set is checked with [`is_forcing_set`] before returning.
pub fn theorem13_matching(
    k: usize,
    l: usize,
    r: usize,
    case: HeightCase,
) -> Result<Theorem13Instance> {
    let inst = theorem13_pattern(k, l, r, case)?;
    if inst.forcing_set.len() != inst.bound {
        return Err(Error::Precondition(format!(
            "pattern produced {} forcing edges, bound is {}",
            inst.forcing_set.len(),
            inst.bound
        )));
    }
    if !is_forcing_set(&inst.graph, &inst.matching, &inst.forcing_set)? {
        return Err(Error::Precondition(
            "pattern set does not force the matching".into(),
        ));
    }
    Ok(inst)
}

/// The matching and candidate set without the forcing check.
pub fn theorem13_pattern(
    k: usize,
    l: usize,
    r: usize,
    case: HeightCase,
) -> Result<Theorem13Instance> {
    let (rows, cols) = theorem13_dimensions(k, l, r, case)?;
    let bound = theorem13_bound(k, l, r, case)?;
    let graph = make_grid(rows, cols)?;
    let (edges, forcing) = match case {
        HeightCase::EvenHeight => even_pattern(k as u32, l as u32, r as u32),
        HeightCase::OddHeight => odd_pattern(k as u32, l as u32, r as u32),
    };
    let matching = Matching::from_edges(&graph, edges_on(&graph, &edges)?)?;
    let forcing_set = EdgeSet::from_edges(edges_on(&graph, &forcing)?);
    Ok(Theorem13Instance {
        graph,
        matching,
        forcing_set,
        bound,
    })
}

fn vertical_column(rows: u32, col: u32) -> impl Iterator<Item = CoordEdge> {
    (1..rows).step_by(2).map(move |row| vertical(row, col))
}

fn even_pattern(k: u32, l: u32, r: u32) -> (Vec<CoordEdge>, Vec<CoordEdge>) {
    let rows = 2 * k;
    let cols = (2 * k + 1) * l + r;
    let mut edges = Vec::new();
    let mut forcing = Vec::new();
    for b in 0..l {
        let sep = b * (2 * k + 1) + 1;
        edges.extend(vertical_column(rows, sep));
        let last = b + 1 == l;
        let width = if !last {
            2 * k
        } else if r % 2 == 1 {
            edges.extend(vertical_column(rows, cols));
            2 * k + r - 1
        } else {
            2 * k + r
        };
        edges.extend(cacm_block(1, sep + 1, rows, width));
        forcing.extend(cacm_block_forcing(1, sep + 1, rows, width));
    }
    (edges, forcing)
}

fn mirror_rows((a, b): CoordEdge, rows: u32) -> CoordEdge {
    let flip = |c: Coord| Coord::new(rows + 1 - c.row, c.col);
    (flip(b), flip(a))
}

fn odd_pattern(k: u32, l: u32, r: u32) -> (Vec<CoordEdge>, Vec<CoordEdge>) {
    let rows = 2 * k + 1;
    let mut edges = Vec::new();
    let mut forcing = Vec::new();
    let mut left = 1;
    for b in 0..l {
        let width = if b + 1 == l {
            2 * k + 2 * r + 2
        } else {
            2 * k + 2
        };
        // DCACM blocks mirror the UCACM pattern, forcing edges included.
        let ring_edges = if k > 0 {
            cacm_block_forcing(0, left, rows + 1, width)
                .into_iter()
                .skip(1)
                .collect()
        } else {
            Vec::new()
        };
        if b % 2 == 0 {
            edges.extend(ucacm_block(1, left, rows, width));
            forcing.extend(ring_edges);
        } else {
            edges.extend(dcacm_block(1, left, rows, width));
            forcing.extend(ring_edges.into_iter().map(|e| mirror_rows(e, rows)));
        }
        left += width;
    }
    (edges, forcing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::forcing_number;

    #[test]
    fn bounds() {
        assert_eq!(theorem13_bound(1, 1, 0, HeightCase::EvenHeight).unwrap(), 1);
        assert_eq!(
            theorem13_bound(4, 2, 7, HeightCase::EvenHeight).unwrap(),
            11
        );
        assert_eq!(theorem13_bound(2, 4, 2, HeightCase::OddHeight).unwrap(), 10);
        assert_eq!(
            theorem13_dimensions(4, 2, 7, HeightCase::EvenHeight).unwrap(),
            (8, 25)
        );
        assert_eq!(
            theorem13_dimensions(2, 4, 2, HeightCase::OddHeight).unwrap(),
            (5, 28)
        );
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(theorem13_matching(1, 1, 3, HeightCase::EvenHeight).is_err());
        assert!(theorem13_matching(0, 1, 0, HeightCase::EvenHeight).is_err());
        assert!(theorem13_matching(1, 0, 0, HeightCase::OddHeight).is_err());
        assert!(theorem13_matching(1, 1, 2, HeightCase::OddHeight).is_err());
    }

    #[test]
    fn small_instance_is_tight() {
        let inst = theorem13_matching(1, 1, 0, HeightCase::EvenHeight).unwrap();
        assert_eq!((inst.graph.vertex_count(), inst.forcing_set.len()), (6, 1));
        assert_eq!(forcing_number(&inst.graph, &inst.matching).unwrap().0, 1);
    }

    #[test]
    fn published_instances() {
        assert_eq!(
            theorem13_matching(4, 2, 7, HeightCase::EvenHeight)
                .unwrap()
                .forcing_set
                .len(),
            11
        );
        assert_eq!(
            theorem13_matching(2, 4, 2, HeightCase::OddHeight)
                .unwrap()
                .forcing_set
                .len(),
            10
        );
    }
}
