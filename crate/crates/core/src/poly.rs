//! Univariate polynomials with exact rational coefficients.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPoly {
    variable: String,
    /// Ascending degree, trailing zeros trimmed.
    coeffs: Vec<Rational>,
}

impl ExactPoly {
    pub fn new(variable: impl Into<String>, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { variable: variable.into(), coeffs }
    }

    /// `scale * Σ coeffs[k] v^k`.
    pub fn from_ints(variable: impl Into<String>, coeffs: &[i64], scale: Rational) -> Self {
        Self::new(variable, coeffs.iter().map(|&c| rational::int(c) * &scale).collect())
    }

    pub fn zero(variable: impl Into<String>) -> Self {
        Self::new(variable, Vec::new())
    }

    pub fn variable(&self) -> &str {
        &self.variable
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn evaluate(&self, at: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * at + c)
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let mag = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mag_str = rational::to_fraction_string(&mag);
            match k {
                0 => f.write_str(&mag_str)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag_str}*")?;
                    }
                    f.write_str(&self.variable)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Fits the unique polynomial of degree `<= max_degree` through the first
/// `max_degree + 1` points and checks every remaining point against it.
pub fn interpolate_poly(variable: &str, points: &[(Rational, Rational)], max_degree: usize) -> Result<ExactPoly> {
    let needed = max_degree + 1;
    if points.len() < needed {
        return Err(Error::TooFewPoints { needed, got: points.len() });
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::RepeatedAbscissa);
        }
    }
    let (fit, check) = points.split_at(needed);

    // Newton divided differences, then expansion into the monomial basis.
    let xs: Vec<&Rational> = fit.iter().map(|(x, _)| x).collect();
    let mut table: Vec<Rational> = fit.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut coeffs = vec![Rational::zero(); needed];
    for k in (0..needed).rev() {
        // coeffs <- coeffs * (v - xs[k]) + table[k]
        let mut next = vec![Rational::zero(); needed];
        for d in 0..needed {
            if coeffs[d].is_zero() {
                continue;
            }
            if d + 1 < needed {
                next[d + 1] += &coeffs[d];
            }
            next[d] -= &coeffs[d] * xs[k];
        }
        next[0] += &table[k];
        coeffs = next;
    }
    let poly = ExactPoly::new(variable, coeffs);
    if check.iter().any(|(x, y)| &poly.evaluate(x) != y) {
        return Err(Error::DegreeExceeded { max_degree });
    }
    Ok(poly)
}
