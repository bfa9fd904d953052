//! Polynomials with exact rational coefficients.
//!
//! All sequence analysis works over `BigRational`: acceptance of a fit is
//! integer equality, so floating point is never used anywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Polynomial over the rationals, coefficients stored ascending by power.
///
/// The representation is normalized: no trailing zero coefficients, and the
/// zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Constant polynomial `c`.
    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the convention `deg 0 = 0` for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Evaluate at an integer point (Horner).
    pub fn eval_int(&self, x: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(x));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// True iff `p(x)` equals the integer `value`.
    pub fn matches(&self, x: i64, value: i64) -> bool {
        self.eval_int(x) == BigRational::from_integer(BigInt::from(value))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }

    pub fn scale(&self, factor: &BigRational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }

    /// Unique polynomial of degree `< points.len()` through the given points.
    ///
    /// Sample x-coordinates must be pairwise distinct.
    pub fn interpolate(points: &[(i64, i64)]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (i, &(xi, yi)) in points.iter().enumerate() {
            // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
            let mut basis = Polynomial::constant(BigRational::one());
            let mut denom = BigRational::one();
            for (j, &(xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&Polynomial::from_coeffs(vec![
                    BigRational::from_integer(BigInt::from(-xj)),
                    BigRational::one(),
                ]));
                denom *= BigRational::from_integer(BigInt::from(xi - xj));
            }
            let weight = BigRational::from_integer(BigInt::from(yi)) / denom;
            acc = acc.add(&basis.scale(&weight));
        }
        acc
    }

    /// Render with the given variable name, e.g. `n - 1` or `(1/2)n^2 - (1/2)n`.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let power = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else if mag.is_integer() {
                out.push_str(&format!("{mag}{power}"));
            } else {
                out.push_str(&format!("({mag}){power}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("n"))
    }
}
