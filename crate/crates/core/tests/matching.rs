mod common;

use common::{oracle, raw, raw_graph};
use forcing_core::generators::{
    make_cylinder, make_gadget_g, make_glued_spectrum_graph, make_grid, make_hypercube,
    make_stop_sign, make_torus,
};
use forcing_core::{
    count_perfect_matchings, enumerate_perfect_matchings, is_perfect_matching, Edge, Graph,
};

fn corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for m in 1..=4 {
        for n in 1..=5 {
            if m * n % 2 == 0 {
                out.push(make_grid(m, n).unwrap());
            }
        }
    }
    out.push(make_cylinder(2, 4).unwrap());
    out.push(make_cylinder(3, 6).unwrap());
    out.push(make_stop_sign(2, 1).unwrap());
    out.push(make_gadget_g(3).unwrap().0);
    out.push(make_gadget_g(5).unwrap().0);
    out.push(make_hypercube(4).unwrap());
    out.push(make_torus(4, 4).unwrap());
    out.push(make_glued_spectrum_graph(&[1, 2, 3].into()).unwrap());
    out
}

#[test]
fn counts_equal_the_permanent() {
    for g in corpus() {
        let (n, edges) = raw_graph(&g);
        let perm = oracle::bipartite_matching_count(n, &edges).expect("corpus is bipartite");
        assert_eq!(
            count_perfect_matchings(&g) as i128,
            perm,
            "{}",
            g.family().name
        );
    }
}

#[test]
fn known_counts() {
    assert_eq!(count_perfect_matchings(&make_grid(4, 4).unwrap()), 36);
    assert_eq!(count_perfect_matchings(&make_grid(6, 6).unwrap()), 6728);
    assert_eq!(count_perfect_matchings(&make_grid(2, 8).unwrap()), 34);
    assert_eq!(count_perfect_matchings(&make_hypercube(4).unwrap()), 272);
    assert_eq!(count_perfect_matchings(&make_grid(3, 3).unwrap()), 0);
}

#[test]
fn enumeration_is_sorted_and_matches_oracle() {
    for g in corpus().into_iter().filter(|g| g.vertex_count() <= 20) {
        let (n, edges) = raw_graph(&g);
        let expected = oracle::perfect_matchings(n, &edges);
        let got: Vec<_> = enumerate_perfect_matchings(&g)
            .map(|m| raw(m.edges()))
            .collect();
        assert_eq!(got, expected);
    }
}

#[test]
fn perfect_matching_check() {
    let g = make_grid(2, 2).unwrap();
    assert!(is_perfect_matching(&g, &[Edge::new(0, 1), Edge::new(2, 3)]).unwrap());
    assert!(!is_perfect_matching(&g, &[Edge::new(0, 1)]).unwrap());
    assert!(is_perfect_matching(&g, &[Edge::new(0, 3), Edge::new(1, 2)]).is_err());
}
