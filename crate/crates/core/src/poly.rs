//! One-variable polynomials with arbitrary-precision integer coefficients,
//! and square matrices of degree-at-most-one polynomial entries.
//!
//! The determinant of an s x s matrix whose entries have degree <= 1 is a
//! polynomial of degree <= s, so it is recovered exactly by evaluating the
//! matrix at the integer nodes 0..=s, taking exact integer determinants, and
//! interpolating. The interpolation runs over exact rationals and the result
//! is checked to have integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Dense polynomial `c0 + c1*y + ... + cd*y^d` with trailing zeros trimmed.
/// The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(value: i64) -> Self {
        Self::new(vec![BigInt::from(value)])
    }

    /// The monomial `c0 + c1*y`.
    pub fn linear(c0: i64, c1: i64) -> Self {
        Self::new(vec![BigInt::from(c0), BigInt::from(c1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `y^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, at: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Sum of the coefficients `c_lo + ... + c_hi` (inclusive, saturating at
    /// the degree).
    pub fn coeff_sum(&self, lo: usize, hi: usize) -> BigInt {
        let mut acc = BigInt::zero();
        for d in lo..=hi.min(self.coeffs.len().saturating_sub(1)) {
            acc += self.coeff(d);
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if d == 1 {
                        write!(f, "y")?;
                    } else {
                        write!(f, "y^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Square matrix whose entries are polynomials of degree at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    data: Vec<IntPolynomial>,
}

impl PolyMatrix {
    /// Panics if an entry has degree > 1 or the data is not `size * size`.
    pub fn new(size: usize, data: Vec<IntPolynomial>) -> Self {
        assert_eq!(data.len(), size * size, "entry count must be size^2");
        assert!(
            data.iter().all(|p| p.degree().unwrap_or(0) <= 1),
            "entries must have degree <= 1"
        );
        PolyMatrix { size, data }
    }

    pub fn zero(size: usize) -> Self {
        PolyMatrix {
            size,
            data: vec![IntPolynomial::zero(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &IntPolynomial {
        &self.data[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: IntPolynomial) {
        assert!(value.degree().unwrap_or(0) <= 1, "degree must be <= 1");
        self.data[row * self.size + col] = value;
    }

    pub fn minor(&self, row: usize, col: usize) -> Result<PolyMatrix> {
        if self.size < 1 || row >= self.size || col >= self.size {
            return Err(Error::IndexOutOfRange {
                index: row.max(col),
                size: self.size,
            });
        }
        let mut data = Vec::with_capacity((self.size - 1) * (self.size - 1));
        for i in (0..self.size).filter(|&i| i != row) {
            for j in (0..self.size).filter(|&j| j != col) {
                data.push(self.get(i, j).clone());
            }
        }
        Ok(PolyMatrix {
            size: self.size - 1,
            data,
        })
    }

    /// Substitutes `y = at` in every entry.
    pub fn eval(&self, at: &BigInt) -> IntMatrix {
        let mut m = IntMatrix::zero(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                m.set(i, j, self.get(i, j).eval(at));
            }
        }
        m
    }

    /// Exact determinant polynomial by evaluation at 0..=s and Lagrange
    /// interpolation over exact rationals.
    pub fn det(&self) -> Result<IntPolynomial> {
        let s = self.size;
        if s == 0 {
            return Ok(IntPolynomial::constant(1));
        }
        let values: Vec<BigInt> = (0..=s)
            .map(|t| self.eval(&BigInt::from(t)).det())
            .collect();
        interpolate_integer(&values)
    }
}

/// Interpolates the polynomial with `p(t) = values[t]` for `t = 0..values.len()`
/// and verifies the coefficients are integers.
fn interpolate_integer(values: &[BigInt]) -> Result<IntPolynomial> {
    let count = values.len();
    // master numerator prod_t (y - t)
    let mut master = vec![BigRational::one()];
    for t in 0..count {
        master = poly_mul_linear(&master, -BigRational::from_integer(BigInt::from(t)));
    }
    let mut acc = vec![BigRational::zero(); count];
    for (t, value) in values.iter().enumerate() {
        if value.is_zero() {
            continue;
        }
        // basis numerator = master / (y - t), by exact synthetic division
        let basis = poly_div_linear(&master, BigRational::from_integer(BigInt::from(t)));
        // denominator prod_{u != t} (t - u)
        let mut denom = BigRational::one();
        for u in 0..count {
            if u != t {
                denom *= BigRational::from_integer(BigInt::from(t as i64 - u as i64));
            }
        }
        let scale = BigRational::from_integer(value.clone()) / denom;
        for (a, b) in acc.iter_mut().zip(basis.iter()) {
            *a += b * &scale;
        }
    }
    let mut coeffs = Vec::with_capacity(count);
    for c in acc {
        if !c.denom().is_one() {
            return Err(Error::NonIntegerInterpolation);
        }
        coeffs.push(c.numer().clone());
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Multiplies `p` by `(y + shift)`.
fn poly_mul_linear(p: &[BigRational], shift: BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (d, c) in p.iter().enumerate() {
        out[d + 1] += c;
        out[d] += c * &shift;
    }
    out
}

/// Divides `p` by `(y - root)` exactly (the root is assumed to be a root of
/// the leading-basis construction, so the remainder is discarded).
fn poly_div_linear(p: &[BigRational], root: BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.len() - 1];
    let mut carry = BigRational::zero();
    for d in (0..p.len() - 1).rev() {
        carry = &p[d + 1] + &carry * &root;
        out[d] = carry.clone();
    }
    out
}
