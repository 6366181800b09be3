//! Exact square matrices over arbitrary-precision integers and rationals.
//!
//! Determinants are computed by fraction-free (Bareiss) elimination: every
//! division in the pivot update is exact over the integers, so no rounding
//! ever occurs. Rational matrices clear denominators row by row, run the
//! integer elimination, and divide the scale factors back out.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    size: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a matrix from row-major entries. Panics if `data` is not
    /// `size * size` long.
    pub fn new(size: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), size * size, "entry count must be size^2");
        IntMatrix { size, data }
    }

    pub fn zero(size: usize) -> Self {
        IntMatrix {
            size,
            data: vec![BigInt::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Convenience constructor from machine integers.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let size = rows.len();
        let mut data = Vec::with_capacity(size * size);
        for row in rows {
            assert_eq!(row.len(), size, "matrix must be square");
            data.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        IntMatrix { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.data[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.data[row * self.size + col] = value;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// The matrix with `row` and `col` removed.
    pub fn minor(&self, row: usize, col: usize) -> Result<IntMatrix> {
        minor_impl(self.size, row, col, |i, j| self.get(i, j).clone())
            .map(|(size, data)| IntMatrix { size, data })
    }

    /// Exact determinant by fraction-free elimination.
    ///
    /// The empty 0x0 matrix has determinant 1.
    pub fn det(&self) -> BigInt {
        let s = self.size;
        if s == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let at = |a: &Vec<BigInt>, i: usize, j: usize| a[i * s + j].clone();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..s - 1 {
            if a[k * s + k].is_zero() {
                // pivot from a lower row; a fully zero column means det = 0
                match (k + 1..s).find(|&r| !a[r * s + k].is_zero()) {
                    Some(r) => {
                        for j in 0..s {
                            a.swap(k * s + j, r * s + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..s {
                for j in k + 1..s {
                    let num = at(&a, i, j) * at(&a, k, k) - at(&a, i, k) * at(&a, k, j);
                    a[i * s + j] = num / &prev; // exact by the Bareiss identity
                }
                a[i * s + k] = BigInt::zero();
            }
            prev = at(&a, k, k);
        }
        let det = at(&a, s - 1, s - 1);
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            size: self.size,
            data: self
                .data
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect(),
        }
    }
}

/// Square matrix of exact rationals, row-major. Entries are kept in lowest
/// terms by `BigRational` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    size: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(size: usize, data: Vec<BigRational>) -> Self {
        assert_eq!(data.len(), size * size, "entry count must be size^2");
        RatMatrix { size, data }
    }

    pub fn zero(size: usize) -> Self {
        RatMatrix {
            size,
            data: vec![BigRational::zero(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.data[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigRational) {
        self.data[row * self.size + col] = value;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn minor(&self, row: usize, col: usize) -> Result<RatMatrix> {
        minor_impl(self.size, row, col, |i, j| self.get(i, j).clone())
            .map(|(size, data)| RatMatrix { size, data })
    }

    /// Exact determinant. Each row is scaled by the lcm of its denominators,
    /// the integer elimination runs on the scaled matrix, and the product of
    /// the scale factors is divided back out.
    pub fn det(&self) -> BigRational {
        let s = self.size;
        if s == 0 {
            return BigRational::one();
        }
        let mut scale = BigInt::one();
        let mut data = Vec::with_capacity(s * s);
        for i in 0..s {
            let mut lcm = BigInt::one();
            for j in 0..s {
                lcm = lcm.lcm(self.get(i, j).denom());
            }
            for j in 0..s {
                let e = self.get(i, j);
                data.push(e.numer() * (&lcm / e.denom()));
            }
            scale *= lcm;
        }
        let det = IntMatrix { size: s, data }.det();
        BigRational::new(det, scale)
    }
}

fn minor_impl<T>(
    size: usize,
    row: usize,
    col: usize,
    get: impl Fn(usize, usize) -> T,
) -> Result<(usize, Vec<T>)> {
    if size < 1 || row >= size || col >= size {
        return Err(Error::IndexOutOfRange {
            index: row.max(col),
            size,
        });
    }
    let mut data = Vec::with_capacity((size - 1) * (size - 1));
    for i in (0..size).filter(|&i| i != row) {
        for j in (0..size).filter(|&j| j != col) {
            data.push(get(i, j));
        }
    }
    Ok((size - 1, data))
}

/// Formats a rational compactly: integers without a denominator, everything
/// else as `num/den`.
pub fn rational_to_string(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `p` or `p/q` into an exact rational.
pub fn rational_from_str(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let parse_int = |s: &str| -> Result<BigInt> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(text)?)),
    }
}

/// Converts a rational to the nearest f64.
pub fn rational_to_f64(value: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or_else(|| {
        // fall back to a quotient of leading digits when numerator or
        // denominator individually overflow f64
        let digits = 30usize;
        let num = value.numer().abs().to_string();
        let den = value.denom().to_string();
        let head = |s: &str| -> f64 {
            let take = s.len().min(digits);
            let lead: f64 = s[..take].parse().unwrap_or(f64::MAX);
            lead * 10f64.powi((s.len() - take) as i32)
        };
        let q = head(&num) / head(&den);
        if value.is_negative() {
            -q
        } else {
            q
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive Laplace cofactor expansion, kept independent of the Bareiss path.
    fn laplace_det(m: &IntMatrix) -> BigInt {
        let s = m.size();
        if s == 0 {
            return BigInt::one();
        }
        if s == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..s {
            if m.get(0, j).is_zero() {
                continue;
            }
            let cofactor = laplace_det(&m.minor(0, j).unwrap());
            let term = m.get(0, j) * cofactor;
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn det_identity() {
        assert_eq!(IntMatrix::identity(3).det(), BigInt::from(1));
    }

    #[test]
    fn det_2x2() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(m.det(), BigInt::from(3));
    }

    #[test]
    fn det_empty_matrix_is_one() {
        assert_eq!(IntMatrix::zero(0).det(), BigInt::one());
    }

    #[test]
    fn det_singular() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.det(), BigInt::zero());
    }

    #[test]
    fn det_needs_pivot_swap() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.det(), BigInt::from(-1));
    }

    #[test]
    fn det_matches_laplace_oracle_on_random_matrices() {
        // deterministic xorshift so the 1000 cases are reproducible
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..1000 {
            let size = 5;
            let data: Vec<i64> = (0..size * size).map(|_| (next() % 19) as i64 - 9).collect();
            let rows: Vec<Vec<i64>> = data.chunks(size).map(|c| c.to_vec()).collect();
            let m = IntMatrix::from_rows(&rows);
            assert_eq!(m.det(), laplace_det(&m));
        }
    }

    #[test]
    fn minor_of_identity() {
        let m = IntMatrix::identity(2).minor(0, 0).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[vec![1]]));
    }

    #[test]
    fn minor_of_path_laplacian() {
        // Laplacian of the path a - b - c
        let l = IntMatrix::from_rows(&[vec![1, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]]);
        let m = l.minor(0, 0).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[vec![2, -1], vec![-1, 1]]));
    }

    #[test]
    fn minor_out_of_range() {
        assert!(IntMatrix::identity(2).minor(2, 0).is_err());
        assert!(IntMatrix::from_rows(&[vec![1]]).minor(0, 0).is_ok());
    }

    #[test]
    fn minor_of_minor_commutes_with_index_adjustment() {
        let m = IntMatrix::from_rows(&[
            vec![1, 2, 3, 4],
            vec![5, 6, 7, 8],
            vec![9, 10, 11, 12],
            vec![13, 14, 15, 16],
        ]);
        // deleting (1,1) then (1,2) equals deleting (2,3) then (1,1)
        let a = m.minor(1, 1).unwrap().minor(1, 2).unwrap();
        let b = m.minor(2, 3).unwrap().minor(1, 1).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rat_det_singular() {
        let m = RatMatrix::new(2, vec![rat(1, 1), rat(-1, 1), rat(-1, 1), rat(1, 1)]);
        assert_eq!(m.det(), BigRational::zero());
    }

    #[test]
    fn rat_det_1x1() {
        let m = RatMatrix::new(1, vec![rat(1, 2)]);
        assert_eq!(m.det(), rat(1, 2));
    }

    #[test]
    fn rat_det_matches_int_det_on_integer_entries() {
        let mut state = 0xdeadbeefcafef00du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let size = 4;
            let vals: Vec<i64> = (0..size * size).map(|_| (next() % 15) as i64 - 7).collect();
            let rows: Vec<Vec<i64>> = vals.chunks(size).map(|c| c.to_vec()).collect();
            let int_m = IntMatrix::from_rows(&rows);
            assert_eq!(
                int_m.to_rational().det(),
                BigRational::from_integer(int_m.det())
            );
        }
    }

    #[test]
    fn rational_string_round_trip() {
        assert_eq!(rational_to_string(&rat(3, 1)), "3");
        assert_eq!(rational_to_string(&rat(64, 9)), "64/9");
        assert_eq!(rational_from_str("64/9").unwrap(), rat(64, 9));
        assert_eq!(rational_from_str("-5").unwrap(), rat(-5, 1));
        assert!(rational_from_str("1/0").is_err());
    }
}
