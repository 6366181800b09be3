//! The oracle edge guardrail and its environment override. Kept in its own
//! test binary because the override is process-global.

use num_bigint::BigInt;
use treecount::error::Error;
use treecount::graph::BipartiteGraph;
use treecount::oracle::{brute_tau, MAX_EDGES_ENV};

#[test]
fn env_var_overrides_the_edge_guardrail() {
    // a 31-edge zigzag tree: over the default cap of 30, trivial to enumerate
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..16 {
        edges.push((i, i));
        if i < 15 {
            edges.push((i, i + 1));
        }
    }
    let g = BipartiteGraph::new(16, 16, &edges).unwrap();
    assert_eq!(g.edge_count(), 31);

    assert!(matches!(brute_tau(&g), Err(Error::TooLarge { edges: 31, max: 30 })));

    std::env::set_var(MAX_EDGES_ENV, "40");
    let tau = brute_tau(&g);
    std::env::remove_var(MAX_EDGES_ENV);
    assert_eq!(tau.unwrap(), BigInt::from(1));
}
