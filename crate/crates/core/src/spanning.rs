//! Everything Kirchhoff: Laplacian construction, exact spanning-tree counts
//! via cofactors, the spectral cross-check, the rational reduced matrix
//! obtained by transvection elimination, and the one-variable degree
//! generating polynomial with its tail counts.
//!
//! Vertex order everywhere is first class `0..n`, then second class
//! `n..n+m`, which puts the Laplacian in block form with diagonal degree
//! blocks and the (negated) bi-adjacency off the diagonal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::eigen::DEFAULT_TOL;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, VertexRef};
use crate::matrix::{IntMatrix, RatMatrix};
use crate::poly::{IntPolynomial, PolyMatrix};

/// Which tail of the degree distribution a query asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailMode {
    /// Spanning trees where the vertex degree is `> k`.
    StrictlyGreater,
    /// Spanning trees where the vertex degree is `<= k`.
    AtMost,
}

/// Count spanning trees by the degree a distinguished vertex takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeTailQuery {
    pub vertex: VertexRef,
    pub threshold: usize,
    pub mode: TailMode,
}

/// Graph Laplacian (degree matrix minus adjacency) in block vertex order.
pub fn laplacian(g: &BipartiteGraph) -> IntMatrix {
    let n = g.first_size();
    let total = g.vertex_count();
    let mut l = IntMatrix::zero(total);
    for i in 0..n {
        l.set(i, i, BigInt::from(g.first_degree(i)));
    }
    for j in 0..g.second_size() {
        l.set(n + j, n + j, BigInt::from(g.second_degree(j)));
    }
    for (i, j) in g.edges() {
        l.set(i, n + j, BigInt::from(-1));
        l.set(n + j, i, BigInt::from(-1));
    }
    l
}

/// Exact number of spanning trees: the (0,0) cofactor of the Laplacian.
/// Zero iff the graph is disconnected.
pub fn tau(g: &BipartiteGraph) -> BigInt {
    laplacian(g)
        .minor(0, 0)
        .expect("laplacian has at least two rows")
        .det()
}

/// Floating spanning-tree count from the Laplacian spectrum: the product of
/// the N-1 largest eigenvalues divided by N. Verification-only; the exact
/// path never depends on it.
pub fn tau_spectral(g: &BipartiteGraph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let eigs = laplacian(g).sym_eigenvalues(DEFAULT_TOL)?;
    let total = g.vertex_count() as f64;
    // the smallest eigenvalue is the structural zero; drop it
    let product: f64 = eigs[..eigs.len() - 1].iter().product();
    Ok(product / total)
}

/// The n x n rational matrix left in the first-class block after the
/// second-class rows and columns are eliminated by transvections:
/// `c_ii = a_i - sum_{(i,k) in E} 1/b_k`, and `c_ij` for `i != j` is
/// `-sum 1/b_k` over common neighbors `k`.
///
/// It is symmetric, positive semidefinite, singular, its diagonal cofactors
/// are all equal, and `det(C|(i,i)) * prod b_j = tau(G)`.
pub fn reduced_matrix(g: &BipartiteGraph) -> Result<RatMatrix> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.first_size();
    let m = g.second_size();
    let inv_b: Vec<BigRational> = (0..m)
        .map(|j| BigRational::new(BigInt::one(), BigInt::from(g.second_degree(j))))
        .collect();
    let mut c = RatMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let shared = g.neighbors_mask(i) & g.neighbors_mask(j);
            let mut sum = BigRational::zero();
            for k in 0..m {
                if shared & (1u64 << k) != 0 {
                    sum += &inv_b[k];
                }
            }
            if i == j {
                c.set(i, i, BigRational::from_integer(BigInt::from(g.first_degree(i))) - sum);
            } else {
                c.set(i, j, -sum);
            }
        }
    }
    Ok(c)
}

/// Applies the transvection pair for every edge `(i, j)` to the Laplacian —
/// add `1/b_j` times row `n+j` to row `i`, and the same for the columns —
/// and verifies the result is exactly block-diagonal: the reduced matrix in
/// the first-class block and `diag(b_1..b_m)` in the second. All arithmetic
/// is rational, so the comparison is exact.
pub fn transvection_check(g: &BipartiteGraph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.first_size();
    let m = g.second_size();
    let total = n + m;
    let mut x = laplacian(g).to_rational();
    for (i, j) in g.edges() {
        let factor = BigRational::new(BigInt::one(), BigInt::from(g.second_degree(j)));
        let row = n + j;
        for col in 0..total {
            let add = x.get(row, col) * &factor;
            x.set(i, col, x.get(i, col) + add);
        }
        for r in 0..total {
            let add = x.get(r, row) * &factor;
            x.set(r, i, x.get(r, i) + add);
        }
    }

    let c = reduced_matrix(g)?;
    for i in 0..n {
        for j in 0..n {
            if x.get(i, j) != c.get(i, j) {
                return Ok(false);
            }
        }
    }
    for j in 0..m {
        for jj in 0..m {
            let expected = if j == jj {
                BigRational::from_integer(BigInt::from(g.second_degree(j)))
            } else {
                BigRational::zero()
            };
            if x.get(n + j, n + jj) != &expected {
                return Ok(false);
            }
        }
    }
    for i in 0..n {
        for j in 0..m {
            if !x.get(i, n + j).is_zero() || !x.get(n + j, i).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Generating polynomial of spanning trees by the degree of `v`: the
/// coefficient of `y^d` counts spanning trees in which `v` has degree `d`.
///
/// Built from the weighted Laplacian where every edge at `v` has weight `y`
/// and every other edge weight 1; any cofactor avoiding `v` equals the
/// polynomial, so the deleted row/column is (0,0) for second-class `v` and
/// (n,n) for first-class `v`.
pub fn degree_polynomial(g: &BipartiteGraph, v: VertexRef) -> Result<IntPolynomial> {
    g.check_vertex(v)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.first_size();
    let total = g.vertex_count();
    let position = |w: VertexRef| match w.side {
        Side::First => w.index,
        Side::Second => n + w.index,
    };
    let vpos = position(v);
    let mut l = PolyMatrix::zero(total);
    // diagonal: sum of incident edge weights
    for i in 0..n {
        let u = VertexRef::first(i);
        let deg = g.first_degree(i);
        l.set(i, i, diagonal_entry(u, v, deg, g));
    }
    for j in 0..g.second_size() {
        let u = VertexRef::second(j);
        let deg = g.second_degree(j);
        l.set(n + j, n + j, diagonal_entry(u, v, deg, g));
    }
    for (i, j) in g.edges() {
        let weight = if vpos == i || vpos == n + j {
            IntPolynomial::linear(0, -1) // -y
        } else {
            IntPolynomial::constant(-1)
        };
        l.set(i, n + j, weight.clone());
        l.set(n + j, i, weight);
    }
    let delete = match v.side {
        Side::Second => 0,
        Side::First => n,
    };
    l.minor(delete, delete)?.det()
}

fn diagonal_entry(u: VertexRef, v: VertexRef, deg: usize, g: &BipartiteGraph) -> IntPolynomial {
    if u == v {
        // every incident edge carries weight y
        IntPolynomial::linear(0, deg as i64)
    } else {
        let adjacent = match (u.side, v.side) {
            (Side::First, Side::Second) => g.has_edge(u.index, v.index),
            (Side::Second, Side::First) => g.has_edge(v.index, u.index),
            _ => false,
        };
        if adjacent {
            // one incident edge has weight y, the rest weight 1
            IntPolynomial::linear(deg as i64 - 1, 1)
        } else {
            IntPolynomial::constant(deg as i64)
        }
    }
}

/// Exact count of spanning trees in the requested degree tail of `v`,
/// summed from the generating polynomial's coefficients.
pub fn tail_count(g: &BipartiteGraph, q: &DegreeTailQuery) -> Result<BigInt> {
    let poly = degree_polynomial(g, q.vertex)?;
    let top = poly.degree().unwrap_or(0);
    Ok(match q.mode {
        TailMode::StrictlyGreater => poly.coeff_sum(q.threshold + 1, top),
        TailMode::AtMost => poly.coeff_sum(0, q.threshold),
    })
}

/// Determinant identity behind the Ferrers equality: order both sides by
/// descending degree, delete the first column and the first second-class row
/// from the Laplacian, and the determinant of what remains equals
/// `(-1)^n * prod_{i>=2} a_i * prod_{j>=2} b_j` whenever the two largest
/// first-class degrees both equal `m`.
///
/// Returns the determinant of the arranged minor; callers compare it to the
/// closed form.
pub fn sorted_block_minor_det(g: &BipartiteGraph) -> BigInt {
    let n = g.first_size();
    let m = g.second_size();
    let mut rows: Vec<usize> = (0..n).collect();
    rows.sort_by_key(|&i| (std::cmp::Reverse(g.first_degree(i)), i));
    let mut cols: Vec<usize> = (0..m).collect();
    cols.sort_by_key(|&j| (std::cmp::Reverse(g.second_degree(j)), j));
    let edges: Vec<(usize, usize)> = {
        let rpos: Vec<usize> = {
            let mut pos = vec![0; n];
            for (p, &i) in rows.iter().enumerate() {
                pos[i] = p;
            }
            pos
        };
        let cpos: Vec<usize> = {
            let mut pos = vec![0; m];
            for (p, &j) in cols.iter().enumerate() {
                pos[j] = p;
            }
            pos
        };
        g.edges().map(|(i, j)| (rpos[i], cpos[j])).collect()
    };
    let sorted = BipartiteGraph::new(n, m, &edges).expect("relabeling preserves validity");
    laplacian(&sorted)
        .minor(n, 0)
        .expect("laplacian of a graph with >= 2 vertices")
        .det()
}
