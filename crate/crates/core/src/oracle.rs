//! Brute-force ground truth: explicit spanning-tree enumeration for small
//! graphs, with counts and per-vertex degree histograms.
//!
//! The enumerator backtracks over edges in index order, rejecting cycles
//! with a union-find and pruning any branch whose remaining edges cannot
//! reconnect the current components. Trees are produced in lexicographic
//! edge-index order, each exactly once.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, VertexRef};

/// Default edge guardrail; worst cases stay under seconds.
pub const DEFAULT_MAX_EDGES: usize = 30;

/// Environment variable overriding the guardrail (at your own runtime risk).
pub const MAX_EDGES_ENV: &str = "TREECOUNT_MAX_EDGES";

fn max_edges() -> usize {
    std::env::var(MAX_EDGES_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_EDGES)
}

fn check_size(g: &BipartiteGraph) -> Result<()> {
    let cap = max_edges();
    if g.edge_count() > cap {
        return Err(Error::TooLarge {
            edges: g.edge_count(),
            max: cap,
        });
    }
    Ok(())
}

/// Edge set of one spanning tree, in graph edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEdgeSet {
    pub edges: Vec<(usize, usize)>,
}

impl TreeEdgeSet {
    /// Independent validity check: right edge count, acyclic, spans all
    /// vertices. Used by tests; deliberately not shared with the enumerator.
    pub fn is_spanning_tree_of(&self, g: &BipartiteGraph) -> bool {
        let total = g.vertex_count();
        if self.edges.len() + 1 != total {
            return false;
        }
        let mut uf = UnionFind::new(total);
        for &(i, j) in &self.edges {
            if !g.has_edge(i, j) {
                return false;
            }
            if !uf.union(i, g.first_size() + j) {
                return false; // cycle
            }
        }
        uf.components() == 1
    }
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size).collect(),
            components: size,
        }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    /// Returns false when both endpoints were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.components -= 1;
        true
    }

    fn components(&self) -> usize {
        self.components
    }
}

/// Calls `visit` once per spanning tree, in lexicographic edge-index order.
fn for_each_tree(g: &BipartiteGraph, mut visit: impl FnMut(&[usize])) -> Result<()> {
    check_size(g)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let total = g.vertex_count();
    let need = total - 1;
    let mut chosen: Vec<usize> = Vec::with_capacity(need);

    fn feasible(uf: &UnionFind, edges: &[(usize, usize)], next: usize, n: usize) -> bool {
        // can the remaining edges still connect everything?
        let mut scratch = UnionFind {
            parent: uf.parent.clone(),
            components: uf.components,
        };
        for &(i, j) in &edges[next..] {
            scratch.union(i, n + j);
            if scratch.components() == 1 {
                return true;
            }
        }
        scratch.components() == 1
    }

    fn rec(
        edges: &[(usize, usize)],
        n: usize,
        need: usize,
        next: usize,
        uf: &mut UnionFind,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if chosen.len() == need {
            visit(chosen);
            return;
        }
        if next == edges.len() || !feasible(uf, edges, next, n) {
            return;
        }
        let (i, j) = edges[next];
        let (a, b) = (i, n + j);
        // include the edge when it joins two components
        let mut with = UnionFind {
            parent: uf.parent.clone(),
            components: uf.components,
        };
        if with.union(a, b) {
            chosen.push(next);
            rec(edges, n, need, next + 1, &mut with, chosen, visit);
            chosen.pop();
        }
        // exclude the edge
        rec(edges, n, need, next + 1, uf, chosen, visit);
    }

    let mut uf = UnionFind::new(total);
    rec(
        &edges,
        g.first_size(),
        need,
        0,
        &mut uf,
        &mut chosen,
        &mut |tree| visit(tree),
    );
    Ok(())
}

/// Materializes every spanning tree. Fine for test-sized graphs; for plain
/// counting prefer [`brute_tau`].
pub fn enumerate_trees(g: &BipartiteGraph) -> Result<Vec<TreeEdgeSet>> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for_each_tree(g, |tree| {
        out.push(TreeEdgeSet {
            edges: tree.iter().map(|&e| edges[e]).collect(),
        });
    })?;
    Ok(out)
}

/// Number of spanning trees by explicit enumeration.
pub fn brute_tau(g: &BipartiteGraph) -> Result<BigInt> {
    let mut count: u64 = 0;
    for_each_tree(g, |_| count += 1)?;
    Ok(BigInt::from(count))
}

/// Histogram of the degree a fixed vertex takes across all spanning trees.
pub fn degree_histogram(g: &BipartiteGraph, v: VertexRef) -> Result<BTreeMap<usize, BigInt>> {
    g.check_vertex(v)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let touches: Vec<bool> = edges
        .iter()
        .map(|&(i, j)| match v.side {
            Side::First => i == v.index,
            Side::Second => j == v.index,
        })
        .collect();
    let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
    for_each_tree(g, |tree| {
        let deg = tree.iter().filter(|&&e| touches[e]).count();
        *hist.entry(deg).or_insert(0) += 1;
    })?;
    Ok(hist
        .into_iter()
        .map(|(deg, count)| (deg, BigInt::from(count)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Partition;

    #[test]
    fn single_edge_has_one_tree() {
        let g = BipartiteGraph::new(1, 1, &[(0, 0)]).unwrap();
        let trees = enumerate_trees(&g).unwrap();
        assert_eq!(trees.len(), 1);
        assert!(trees[0].is_spanning_tree_of(&g));
    }

    #[test]
    fn four_cycle_trees_each_omit_one_edge() {
        let g = BipartiteGraph::complete(2, 2).unwrap();
        let trees = enumerate_trees(&g).unwrap();
        assert_eq!(trees.len(), 4);
        let all: Vec<(usize, usize)> = g.edges().collect();
        for tree in &trees {
            assert!(tree.is_spanning_tree_of(&g));
            let omitted: Vec<_> = all
                .iter()
                .filter(|e| !tree.edges.contains(e))
                .collect();
            assert_eq!(omitted.len(), 1);
        }
    }

    #[test]
    fn disconnected_graph_yields_nothing() {
        let g = BipartiteGraph::new(2, 2, &[(0, 0), (1, 1)]).unwrap();
        assert!(enumerate_trees(&g).unwrap().is_empty());
        assert_eq!(brute_tau(&g).unwrap(), BigInt::from(0));
    }

    #[test]
    fn counts_on_known_graphs() {
        assert_eq!(
            brute_tau(&BipartiteGraph::complete(2, 3).unwrap()).unwrap(),
            BigInt::from(12)
        );
        assert_eq!(
            brute_tau(&BipartiteGraph::cycle(3).unwrap()).unwrap(),
            BigInt::from(6)
        );
        let fig = BipartiteGraph::from_partition(
            &Partition::new(vec![4, 4, 3, 3, 1]).unwrap(),
        )
        .unwrap();
        assert_eq!(brute_tau(&fig).unwrap(), BigInt::from(1152));
    }

    #[test]
    fn histograms_on_known_graphs() {
        let c6 = BipartiteGraph::cycle(3).unwrap();
        let hist = degree_histogram(&c6, VertexRef::second(0)).unwrap();
        assert_eq!(
            hist,
            BTreeMap::from([(1, BigInt::from(2)), (2, BigInt::from(4))])
        );
        let k22 = BipartiteGraph::complete(2, 2).unwrap();
        let hist = degree_histogram(&k22, VertexRef::second(0)).unwrap();
        assert_eq!(
            hist,
            BTreeMap::from([(1, BigInt::from(2)), (2, BigInt::from(2))])
        );
        let star = BipartiteGraph::new(1, 3, &[(0, 0), (0, 1), (0, 2)]).unwrap();
        let hist = degree_histogram(&star, VertexRef::first(0)).unwrap();
        assert_eq!(hist, BTreeMap::from([(3, BigInt::from(1))]));
    }

    #[test]
    fn histogram_totals_match_count() {
        let g = BipartiteGraph::complete(3, 3).unwrap();
        let tau = brute_tau(&g).unwrap();
        for j in 0..3 {
            let hist = degree_histogram(&g, VertexRef::second(j)).unwrap();
            let total: BigInt = hist.values().sum();
            assert_eq!(total, tau);
        }
    }

    #[test]
    fn trees_come_out_in_lexicographic_order() {
        let g = BipartiteGraph::complete(2, 3).unwrap();
        let all: Vec<(usize, usize)> = g.edges().collect();
        let index_of = |e: &(usize, usize)| all.iter().position(|x| x == e).unwrap();
        let trees = enumerate_trees(&g).unwrap();
        let orders: Vec<Vec<usize>> = trees
            .iter()
            .map(|t| t.edges.iter().map(|e| index_of(e)).collect())
            .collect();
        let mut sorted = orders.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(orders, sorted, "lexicographic and duplicate-free");
    }

    #[test]
    fn guardrail_rejects_large_graphs() {
        let g = BipartiteGraph::complete(6, 6).unwrap(); // 36 edges
        assert!(matches!(brute_tau(&g), Err(Error::TooLarge { .. })));
    }

}
