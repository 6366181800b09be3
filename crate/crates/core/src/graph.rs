//! Bipartite graphs with bit-set adjacency, integer partitions, and Ferrers
//! graph construction/recognition.
//!
//! Vertices are split into a first class of size `n` (indices `0..n`) and a
//! second class of size `m` (indices `0..m`); every edge joins the two
//! classes. Adjacency is one 64-bit mask per first-class vertex, which caps
//! the total vertex count at [`MAX_VERTICES`] and keeps exhaustive searches
//! fast.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};

/// Upper limit on `n + m` imposed by the bit-set representation.
pub const MAX_VERTICES: usize = 64;

/// Which bipartition class a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    First,
    Second,
}

/// A vertex identified by its class and 0-based index within the class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexRef {
    pub side: Side,
    pub index: usize,
}

impl VertexRef {
    pub fn first(index: usize) -> Self {
        VertexRef {
            side: Side::First,
            index,
        }
    }

    pub fn second(index: usize) -> Self {
        VertexRef {
            side: Side::Second,
            index,
        }
    }
}

impl FromStr for VertexRef {
    type Err = Error;

    /// Parses `first:3` / `second:0` (also `a:3` / `b:0`).
    fn from_str(s: &str) -> Result<Self> {
        let (side, index) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected side:index, got {s:?}")))?;
        let side = match side.trim().to_ascii_lowercase().as_str() {
            "first" | "a" | "left" => Side::First,
            "second" | "b" | "right" => Side::Second,
            other => return Err(Error::Parse(format!("unknown side {other:?}"))),
        };
        let index = index
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("bad vertex index {index:?}: {e}")))?;
        Ok(VertexRef { side, index })
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::First => write!(f, "first:{}", self.index),
            Side::Second => write!(f, "second:{}", self.index),
        }
    }
}

/// Degree uniformity of the two classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegularityClass {
    /// Both classes have uniform degree (`a` on the first, `b` on the second).
    Biregular { a: usize, b: usize },
    /// Only the first class is uniform.
    LeftRegular { a: usize },
    /// Only the second class is uniform.
    RightRegular { b: usize },
    Irregular,
}

impl RegularityClass {
    pub fn is_one_side_regular(&self) -> bool {
        !matches!(self, RegularityClass::Irregular)
    }

    pub fn label(&self) -> &'static str {
        match self {
            RegularityClass::Biregular { .. } => "biregular",
            RegularityClass::LeftRegular { .. } => "left-regular",
            RegularityClass::RightRegular { .. } => "right-regular",
            RegularityClass::Irregular => "irregular",
        }
    }
}

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty partitions
    }

    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    /// Column counts of the diagram (the conjugate partition).
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|col| self.parts.iter().filter(|&&p| p >= col).count())
            .collect();
        Partition { parts }
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated decreasing integers, e.g. `4,4,3,3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad partition part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Bipartite graph on `n + m` vertices with bit-set adjacency.
///
/// Immutable after construction; cheap to clone and safe to share across
/// threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    n: usize,
    m: usize,
    /// Bit `j` of `adj[i]` is set iff edge `(i, j)` is present.
    adj: Vec<u64>,
    edge_count: usize,
}

impl BipartiteGraph {
    /// Builds a graph from an explicit edge list.
    pub fn new(n: usize, m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::EmptySide);
        }
        if n + m > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                total: n + m,
                max: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        for &(i, j) in edges {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, size: n });
            }
            if j >= m {
                return Err(Error::IndexOutOfRange { index: j, size: m });
            }
            let bit = 1u64 << j;
            if adj[i] & bit != 0 {
                return Err(Error::DuplicateEdge { i, j });
            }
            adj[i] |= bit;
        }
        Ok(BipartiteGraph {
            n,
            m,
            adj,
            edge_count: edges.len(),
        })
    }

    /// Builds a graph directly from adjacency masks (bit `j` of `masks[i]`
    /// set iff edge `(i, j)`). Used by the exhaustive search.
    pub fn from_masks(n: usize, m: usize, masks: Vec<u64>) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::EmptySide);
        }
        if n + m > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                total: n + m,
                max: MAX_VERTICES,
            });
        }
        assert_eq!(masks.len(), n);
        let column_space = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        assert!(masks.iter().all(|&mask| mask & !column_space == 0));
        let edge_count = masks.iter().map(|mask| mask.count_ones() as usize).sum();
        Ok(BipartiteGraph {
            n,
            m,
            adj: masks,
            edge_count,
        })
    }

    /// The complete bipartite graph `K_{n,m}`.
    pub fn complete(n: usize, m: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
        Self::new(n, m, &edges)
    }

    /// The even cycle `C_{2h}`: first-class vertex `i` is adjacent to
    /// second-class vertices `i` and `(i + 1) mod h`.
    pub fn cycle(h: usize) -> Result<Self> {
        if h < 2 {
            return Err(Error::InfeasibleSpec(
                "a cycle needs at least 2 vertices per side".into(),
            ));
        }
        let edges: Vec<(usize, usize)> = (0..h).flat_map(|i| [(i, i), (i, (i + 1) % h)]).collect();
        Self::new(h, h, &edges)
    }

    /// The Ferrers graph of a partition: first-class vertex `i` is adjacent
    /// to second-class vertices `0..parts[i]`. The second class has
    /// `parts[0]` vertices, so the graph is connected.
    pub fn from_partition(p: &Partition) -> Result<Self> {
        let n = p.len();
        let m = p.largest();
        if n + m > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                total: n + m,
                max: MAX_VERTICES,
            });
        }
        let adj: Vec<u64> = p
            .parts()
            .iter()
            .map(|&parts| {
                if parts == 64 {
                    u64::MAX
                } else {
                    (1u64 << parts) - 1
                }
            })
            .collect();
        let edge_count = p.parts().iter().sum();
        Ok(BipartiteGraph {
            n,
            m,
            adj,
            edge_count,
        })
    }

    pub fn first_size(&self) -> usize {
        self.n
    }

    pub fn second_size(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.n + self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] & (1u64 << j) != 0
    }

    /// Adjacency mask of first-class vertex `i` (bit `j` = edge `(i, j)`).
    pub fn neighbors_mask(&self, i: usize) -> u64 {
        self.adj[i]
    }

    /// Edges in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.m).filter_map(move |j| self.has_edge(i, j).then_some((i, j)))
        })
    }

    pub fn first_degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn second_degree(&self, j: usize) -> usize {
        let bit = 1u64 << j;
        self.adj.iter().filter(|&&mask| mask & bit != 0).count()
    }

    pub fn degree(&self, v: VertexRef) -> usize {
        match v.side {
            Side::First => self.first_degree(v.index),
            Side::Second => self.second_degree(v.index),
        }
    }

    pub fn first_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.first_degree(i)).collect()
    }

    pub fn second_degrees(&self) -> Vec<usize> {
        (0..self.m).map(|j| self.second_degree(j)).collect()
    }

    /// Checks that a vertex reference is in range.
    pub fn check_vertex(&self, v: VertexRef) -> Result<()> {
        let size = match v.side {
            Side::First => self.n,
            Side::Second => self.m,
        };
        if v.index >= size {
            return Err(Error::IndexOutOfRange {
                index: v.index,
                size,
            });
        }
        Ok(())
    }

    /// Product of all vertex degrees, `D(G)`, exactly. Isolated vertices
    /// contribute a factor 0.
    pub fn degree_product(&self) -> BigInt {
        let mut d = BigInt::one();
        for i in 0..self.n {
            d *= BigInt::from(self.first_degree(i));
        }
        for j in 0..self.m {
            d *= BigInt::from(self.second_degree(j));
        }
        d
    }

    /// True iff the whole vertex set is reachable from vertex (first, 0).
    /// A single vertex counts as connected, but both sides are always
    /// non-empty here, so the minimum is two vertices joined by an edge.
    pub fn is_connected(&self) -> bool {
        // combined indexing: first class 0..n, second class n..n+m
        let total = self.n + self.m;
        let mut seen = 0u64;
        let mut stack = vec![0usize];
        seen |= 1;
        while let Some(v) = stack.pop() {
            if v < self.n {
                let mask = self.adj[v];
                for j in 0..self.m {
                    let w = self.n + j;
                    if mask & (1u64 << j) != 0 && seen & (1u64 << w) == 0 {
                        seen |= 1u64 << w;
                        stack.push(w);
                    }
                }
            } else {
                let bit = 1u64 << (v - self.n);
                for (i, &mask) in self.adj.iter().enumerate() {
                    if mask & bit != 0 && seen & (1u64 << i) == 0 {
                        seen |= 1u64 << i;
                        stack.push(i);
                    }
                }
            }
        }
        seen.count_ones() as usize == total
    }

    /// Degree uniformity of the two classes. Biregular when both are
    /// uniform, in which case `a * n == b * m` (handshake).
    pub fn classify_regularity(&self) -> RegularityClass {
        let left = self.first_degrees();
        let right = self.second_degrees();
        let left_uniform = left.windows(2).all(|w| w[0] == w[1]);
        let right_uniform = right.windows(2).all(|w| w[0] == w[1]);
        match (left_uniform, right_uniform) {
            (true, true) => RegularityClass::Biregular {
                a: left[0],
                b: right[0],
            },
            (true, false) => RegularityClass::LeftRegular { a: left[0] },
            (false, true) => RegularityClass::RightRegular { b: right[0] },
            (false, false) => RegularityClass::Irregular,
        }
    }

    /// Repeatedly removes degree-one vertices (and their edges) until none
    /// remain or only a single edge is left. Leaf removal never changes the
    /// spanning-tree count, so `tau` is preserved at every step.
    ///
    /// Removal order is deterministic: the lowest-index degree-one vertex,
    /// first class before second.
    pub fn strip_degree_one(&self) -> BipartiteGraph {
        let mut first_alive: Vec<bool> = vec![true; self.n];
        let mut second_alive: Vec<bool> = vec![true; self.m];
        let mut adj = self.adj.clone();
        let mut edges = self.edge_count;

        loop {
            if edges <= 1 {
                break;
            }
            let first_deg =
                |adj: &[u64], i: usize| -> usize { adj[i].count_ones() as usize };
            let second_deg = |adj: &[u64], alive: &[bool], j: usize| -> usize {
                adj.iter()
                    .enumerate()
                    .filter(|&(i, &mask)| alive[i] && mask & (1u64 << j) != 0)
                    .count()
            };
            let leaf_first = (0..self.n)
                .find(|&i| first_alive[i] && first_deg(&adj, i) == 1);
            if let Some(i) = leaf_first {
                first_alive[i] = false;
                adj[i] = 0;
                edges -= 1;
                continue;
            }
            let leaf_second = (0..self.m)
                .find(|&j| second_alive[j] && second_deg(&adj, &first_alive, j) == 1);
            if let Some(j) = leaf_second {
                second_alive[j] = false;
                for mask in adj.iter_mut() {
                    if *mask & (1u64 << j) != 0 {
                        *mask &= !(1u64 << j);
                        edges -= 1;
                    }
                }
                continue;
            }
            break;
        }

        // compact the surviving indices
        let first_map: Vec<Option<usize>> = {
            let mut next = 0;
            first_alive
                .iter()
                .map(|&alive| {
                    alive.then(|| {
                        let id = next;
                        next += 1;
                        id
                    })
                })
                .collect()
        };
        let second_map: Vec<Option<usize>> = {
            let mut next = 0;
            second_alive
                .iter()
                .map(|&alive| {
                    alive.then(|| {
                        let id = next;
                        next += 1;
                        id
                    })
                })
                .collect()
        };
        let new_edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|i| (0..self.m).map(move |j| (i, j)))
            .filter(|&(i, j)| first_alive[i] && adj[i] & (1u64 << j) != 0 && second_alive[j])
            .map(|(i, j)| (first_map[i].unwrap(), second_map[j].unwrap()))
            .collect();
        let n = first_map.iter().flatten().count();
        let m = second_map.iter().flatten().count();
        BipartiteGraph::new(n.max(1), m.max(1), &new_edges)
            .expect("stripped graph stays within the original bounds")
    }

    /// Recognizes Ferrers graphs: sorts both classes by descending degree
    /// (ties broken by descending adjacency mask, then index) and tests the
    /// staircase property. Returns the recovered partition of first-class
    /// degrees, or `None`.
    ///
    /// A bipartite graph admits a Ferrers ordering iff the neighborhoods of
    /// one class are totally ordered by inclusion; vertices of equal degree
    /// then have identical neighborhoods, so the degree sort is
    /// decision-complete and the tie-break only fixes a canonical order.
    pub fn is_ferrers(&self) -> Option<Partition> {
        let mut rows: Vec<usize> = (0..self.n).collect();
        rows.sort_by_key(|&i| (std::cmp::Reverse(self.first_degree(i)), std::cmp::Reverse(self.adj[i]), i));
        let mut cols: Vec<usize> = (0..self.m).collect();
        let col_mask = |j: usize| -> u64 {
            let mut mask = 0u64;
            for (i, &row) in self.adj.iter().enumerate() {
                if row & (1u64 << j) != 0 {
                    mask |= 1u64 << i;
                }
            }
            mask
        };
        cols.sort_by_key(|&j| {
            (
                std::cmp::Reverse(self.second_degree(j)),
                std::cmp::Reverse(col_mask(j)),
                j,
            )
        });
        let mut parts = Vec::with_capacity(self.n);
        for &i in &rows {
            let deg = self.first_degree(i);
            if deg == 0 {
                return None;
            }
            // row must cover exactly the first `deg` sorted columns
            for (pos, &j) in cols.iter().enumerate() {
                if self.has_edge(i, j) != (pos < deg) {
                    return None;
                }
            }
            parts.push(deg);
        }
        Some(Partition::new(parts).expect("degrees are positive and sorted"))
    }

    /// Adjacency bit pattern in row-major order (bit `i*m + j` = edge), as a
    /// big unsigned integer. Stable identifier for search reports.
    pub fn adjacency_id(&self) -> BigUint {
        let mut bytes = Vec::new();
        let mut acc: u8 = 0;
        let mut filled = 0;
        for i in 0..self.n {
            for j in 0..self.m {
                if self.has_edge(i, j) {
                    acc |= 1 << filled;
                }
                filled += 1;
                if filled == 8 {
                    bytes.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push(acc);
        }
        BigUint::from_bytes_le(&bytes)
    }

    /// Lowercase hex form of [`Self::adjacency_id`].
    pub fn graph_id(&self) -> String {
        format!("{:x}", self.adjacency_id())
    }

    /// Renders the graph text format: a `n m` header line followed by one
    /// `i j` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (i, j) in self.edges() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    /// Parses the graph text format. Empty lines and `#`-comments are
    /// ignored; the first data line is `n m`, every later line an edge `i j`.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace().map(|f| {
                f.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))
            });
            let (a, b) = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), None) => (a?, b?),
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected two integers",
                        lineno + 1
                    )))
                }
            };
            match header {
                None => header = Some((a, b)),
                Some(_) => edges.push((a, b)),
            }
        }
        let (n, m) = header.ok_or_else(|| Error::Parse("missing n m header line".into()))?;
        BipartiteGraph::new(n, m, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn figure_partition() -> Partition {
        Partition::new(vec![4, 4, 3, 3, 1]).unwrap()
    }

    #[test]
    fn build_complete_2_2() {
        let g = BipartiteGraph::new(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(g.first_degrees(), vec![2, 2]);
        assert_eq!(g.second_degrees(), vec![2, 2]);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn build_star() {
        let g = BipartiteGraph::new(1, 3, &[(0, 0), (0, 1), (0, 2)]).unwrap();
        assert_eq!(g.first_degrees(), vec![3]);
        assert_eq!(g.second_degrees(), vec![1, 1, 1]);
    }

    #[test]
    fn build_rejects_duplicates_and_bad_indices() {
        assert!(matches!(
            BipartiteGraph::new(2, 2, &[(0, 0), (0, 0)]),
            Err(Error::DuplicateEdge { i: 0, j: 0 })
        ));
        assert!(matches!(
            BipartiteGraph::new(2, 2, &[(2, 0)]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            BipartiteGraph::new(0, 2, &[]),
            Err(Error::EmptySide)
        ));
    }

    #[test]
    fn build_rejects_oversized_graphs() {
        assert!(matches!(
            BipartiteGraph::new(40, 40, &[]),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn ferrers_graph_from_staircase_partition() {
        let g = BipartiteGraph::from_partition(&figure_partition()).unwrap();
        assert_eq!(g.first_degrees(), vec![4, 4, 3, 3, 1]);
        assert_eq!(g.second_degrees(), vec![5, 4, 4, 2]);
        assert_eq!(g.edge_count(), 15);
        assert!(g.is_connected());
    }

    #[test]
    fn full_partition_gives_complete_graph() {
        let p = Partition::new(vec![3, 3]).unwrap();
        let g = BipartiteGraph::from_partition(&p).unwrap();
        assert_eq!(g, BipartiteGraph::complete(2, 3).unwrap());
    }

    #[test]
    fn partition_2_1_gives_path() {
        let g = BipartiteGraph::from_partition(&Partition::new(vec![2, 1]).unwrap()).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 0), (0, 1), (1, 0)]);
    }

    #[test]
    fn degree_products() {
        assert_eq!(
            BipartiteGraph::complete(2, 2).unwrap().degree_product(),
            BigInt::from(16)
        );
        let fig = BipartiteGraph::from_partition(&figure_partition()).unwrap();
        assert_eq!(fig.degree_product(), BigInt::from(23040));
        let star = BipartiteGraph::new(1, 3, &[(0, 0), (0, 1), (0, 2)]).unwrap();
        assert_eq!(star.degree_product(), BigInt::from(3));
    }

    #[test]
    fn connectivity() {
        assert!(BipartiteGraph::complete(2, 2).unwrap().is_connected());
        let disjoint = BipartiteGraph::new(2, 2, &[(0, 0), (1, 1)]).unwrap();
        assert!(!disjoint.is_connected());
        let isolated = BipartiteGraph::new(2, 1, &[(0, 0)]).unwrap();
        assert!(!isolated.is_connected());
    }

    #[test]
    fn regularity_classes() {
        assert_eq!(
            BipartiteGraph::cycle(3).unwrap().classify_regularity(),
            RegularityClass::Biregular { a: 2, b: 2 }
        );
        let fig = BipartiteGraph::from_partition(&figure_partition()).unwrap();
        assert_eq!(fig.classify_regularity(), RegularityClass::Irregular);
        assert_eq!(
            BipartiteGraph::complete(2, 3).unwrap().classify_regularity(),
            RegularityClass::Biregular { a: 3, b: 2 }
        );
        let left_only = BipartiteGraph::new(2, 3, &[(0, 0), (0, 1), (1, 1), (1, 2)]).unwrap();
        assert_eq!(
            left_only.classify_regularity(),
            RegularityClass::LeftRegular { a: 2 }
        );
    }

    #[test]
    fn strip_star_to_single_edge() {
        let star = BipartiteGraph::new(1, 3, &[(0, 0), (0, 1), (0, 2)]).unwrap();
        let core = star.strip_degree_one();
        assert_eq!(core.edge_count(), 1);
        assert_eq!((core.first_size(), core.second_size()), (1, 1));
    }

    #[test]
    fn strip_leaves_cycle_alone() {
        let c6 = BipartiteGraph::cycle(3).unwrap();
        assert_eq!(c6.strip_degree_one(), c6);
    }

    #[test]
    fn strip_figure_graph_removes_last_row() {
        let fig = BipartiteGraph::from_partition(&figure_partition()).unwrap();
        let core = fig.strip_degree_one();
        assert_eq!(core.first_degrees(), vec![4, 4, 3, 3]);
        assert_eq!(core.second_degrees(), vec![4, 4, 4, 2]);
    }

    #[test]
    fn ferrers_recognition() {
        let fig = BipartiteGraph::from_partition(&figure_partition()).unwrap();
        assert_eq!(fig.is_ferrers(), Some(figure_partition()));
        assert_eq!(BipartiteGraph::cycle(3).unwrap().is_ferrers(), None);
        assert_eq!(
            BipartiteGraph::complete(2, 3).unwrap().is_ferrers(),
            Some(Partition::new(vec![3, 3]).unwrap())
        );
    }

    #[test]
    fn ferrers_recognition_with_shuffled_labels() {
        // figure graph with both sides relabeled
        let fig = BipartiteGraph::from_partition(&figure_partition()).unwrap();
        let rperm = [3usize, 0, 4, 1, 2];
        let cperm = [2usize, 3, 0, 1];
        let edges: Vec<(usize, usize)> = fig.edges().map(|(i, j)| (rperm[i], cperm[j])).collect();
        let shuffled = BipartiteGraph::new(5, 4, &edges).unwrap();
        assert_eq!(shuffled.is_ferrers(), Some(figure_partition()));
    }

    #[test]
    fn graph_id_row_major_hex() {
        let g = BipartiteGraph::new(2, 2, &[(0, 0), (1, 1)]).unwrap();
        // bits 0 and 3 -> 0b1001 = 9
        assert_eq!(g.graph_id(), "9");
        assert_eq!(BipartiteGraph::complete(2, 2).unwrap().graph_id(), "f");
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# sample\n2 2\n0 0\n0 1  # trailing comment\n\n1 0\n1 1\n";
        let g = BipartiteGraph::parse_text(text).unwrap();
        assert_eq!(g, BipartiteGraph::complete(2, 2).unwrap());
        let back = BipartiteGraph::parse_text(&g.to_text()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn text_format_errors() {
        assert!(BipartiteGraph::parse_text("").is_err());
        assert!(BipartiteGraph::parse_text("2 2\n0\n").is_err());
        assert!(BipartiteGraph::parse_text("2 2\n0 0 0\n").is_err());
        assert!(BipartiteGraph::parse_text("2 2\n0 5\n").is_err());
    }

    #[test]
    fn partition_parse_and_validate() {
        assert_eq!(
            "4,4,3,3,1".parse::<Partition>().unwrap(),
            figure_partition()
        );
        assert!("".parse::<Partition>().is_err());
        assert!("3,4".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!(figure_partition().to_string(), "4,4,3,3,1");
    }

    #[test]
    fn conjugate_partition() {
        assert_eq!(
            figure_partition().conjugate(),
            Partition::new(vec![5, 4, 4, 2]).unwrap()
        );
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..=6, 1..=6).prop_map(|mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts).unwrap()
        })
    }

    proptest! {
        #[test]
        fn handshake_holds(p in arb_partition()) {
            let g = BipartiteGraph::from_partition(&p).unwrap();
            let left: usize = g.first_degrees().iter().sum();
            let right: usize = g.second_degrees().iter().sum();
            prop_assert_eq!(left, g.edge_count());
            prop_assert_eq!(right, g.edge_count());
        }

        #[test]
        fn partition_round_trips_through_ferrers_check(p in arb_partition()) {
            let g = BipartiteGraph::from_partition(&p).unwrap();
            prop_assert_eq!(g.is_ferrers(), Some(p));
        }

        #[test]
        fn text_round_trip(p in arb_partition()) {
            let g = BipartiteGraph::from_partition(&p).unwrap();
            prop_assert_eq!(BipartiteGraph::parse_text(&g.to_text()).unwrap(), g);
        }
    }
}
