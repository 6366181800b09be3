//! Floating-point eigenvalues of symmetric matrices by cyclic Jacobi
//! rotations. This backs the spectral cross-check of the exact spanning-tree
//! count; nothing exact ever depends on it.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, RatMatrix};

const MAX_SWEEPS: usize = 64;

/// Default off-diagonal Frobenius-norm threshold.
pub const DEFAULT_TOL: f64 = 1e-12;

impl IntMatrix {
    /// Eigenvalues in descending order, for symmetric input.
    pub fn sym_eigenvalues(&self, tol: f64) -> Result<Vec<f64>> {
        if !self.is_symmetric() {
            return Err(Error::NonSymmetric);
        }
        let s = self.size();
        let data: Vec<f64> = (0..s)
            .flat_map(|i| (0..s).map(move |j| self.get(i, j).to_f64().unwrap()))
            .collect();
        jacobi_eigenvalues(s, data, tol)
    }
}

impl RatMatrix {
    /// Eigenvalues in descending order, for symmetric input.
    pub fn sym_eigenvalues(&self, tol: f64) -> Result<Vec<f64>> {
        if !self.is_symmetric() {
            return Err(Error::NonSymmetric);
        }
        let s = self.size();
        let data: Vec<f64> = (0..s)
            .flat_map(|i| {
                (0..s).map(move |j| crate::matrix::rational_to_f64(self.get(i, j)))
            })
            .collect();
        jacobi_eigenvalues(s, data, tol)
    }
}

/// Cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops below
/// `tol`. `data` is row-major and assumed symmetric.
pub fn jacobi_eigenvalues(size: usize, mut data: Vec<f64>, tol: f64) -> Result<Vec<f64>> {
    if size == 0 {
        return Ok(Vec::new());
    }
    let idx = |i: usize, j: usize| i * size + j;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..size {
            for j in i + 1..size {
                off += 2.0 * data[idx(i, j)] * data[idx(i, j)];
            }
        }
        if off.sqrt() < tol {
            let mut eigs: Vec<f64> = (0..size).map(|i| data[idx(i, i)]).collect();
            eigs.sort_by(|a, b| b.partial_cmp(a).unwrap());
            return Ok(eigs);
        }
        for p in 0..size {
            for q in p + 1..size {
                let apq = data[idx(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let app = data[idx(p, p)];
                let aqq = data[idx(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                // smaller-magnitude root keeps the rotation stable
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..size {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = data[idx(k, p)];
                    let akq = data[idx(k, q)];
                    data[idx(k, p)] = c * akp - s * akq;
                    data[idx(p, k)] = data[idx(k, p)];
                    data[idx(k, q)] = s * akp + c * akq;
                    data[idx(q, k)] = data[idx(k, q)];
                }
                data[idx(p, p)] = app - t * apq;
                data[idx(q, q)] = aqq + t * apq;
                data[idx(p, q)] = 0.0;
                data[idx(q, p)] = 0.0;
            }
        }
    }
    Err(Error::NoConvergence)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() <= tol, "{a} vs {e} (tol {tol})");
        }
    }

    #[test]
    fn laplacian_of_single_edge() {
        let l = IntMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]);
        let eigs = l.sym_eigenvalues(DEFAULT_TOL).unwrap();
        assert_close(&eigs, &[2.0, 0.0], 1e-12);
    }

    #[test]
    fn laplacian_of_complete_2_2() {
        let l = IntMatrix::from_rows(&[
            vec![2, 0, -1, -1],
            vec![0, 2, -1, -1],
            vec![-1, -1, 2, 0],
            vec![-1, -1, 0, 2],
        ]);
        let eigs = l.sym_eigenvalues(DEFAULT_TOL).unwrap();
        assert_close(&eigs, &[4.0, 2.0, 2.0, 0.0], 1e-10);
    }

    #[test]
    fn zero_matrix() {
        let eigs = IntMatrix::zero(3).sym_eigenvalues(DEFAULT_TOL).unwrap();
        assert_close(&eigs, &[0.0, 0.0, 0.0], 0.0);
    }

    #[test]
    fn non_symmetric_rejected() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert!(matches!(
            m.sym_eigenvalues(DEFAULT_TOL),
            Err(Error::NonSymmetric)
        ));
    }

    #[test]
    fn gram_matrices_are_psd() {
        // A = B^T B is positive semidefinite for any integer B
        let mut state = 0xfeed_face_dead_beefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 7) as i64 - 3
        };
        for _ in 0..50 {
            let s = 5usize;
            let b: Vec<Vec<i64>> = (0..s).map(|_| (0..s).map(|_| next()).collect()).collect();
            let mut a = vec![vec![0i64; s]; s];
            for (i, row_i) in a.iter_mut().enumerate() {
                for (j, cell) in row_i.iter_mut().enumerate() {
                    *cell = (0..s).map(|k| b[k][i] * b[k][j]).sum();
                }
            }
            let m = IntMatrix::from_rows(&a);
            let eigs = m.sym_eigenvalues(DEFAULT_TOL).unwrap();
            for e in eigs {
                assert!(e >= -1e-9, "negative eigenvalue {e}");
            }
        }
    }
}
