//! Truncated Laurent series in one formal variable `x` over exact rationals.
//!
//! A series stores the dense coefficient window `min_degree..=trunc_order`.
//! Degrees above `trunc_order` are unknown, not zero. Every arithmetic
//! operation tracks how far its result is actually known: a product of a
//! series known through `x^p` with one of valuation `v` is known through
//! `x^(p+v)`, and a quotient keeps the smaller relative precision of its
//! operands. Divisions by series with vanishing constant term therefore cost
//! precision, which callers pay for with guard terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    min_degree: i64,
    coeffs: Vec<Rational>,
    trunc_order: i64,
}

impl TruncSeries {
    /// Builds a series from the coefficients of `x^min_degree ..= x^trunc_order`.
    /// Panics if the window length disagrees with the bounds.
    pub fn new(min_degree: i64, coeffs: Vec<Rational>, trunc_order: i64) -> Self {
        assert_eq!(
            coeffs.len() as i64,
            (trunc_order - min_degree + 1).max(0),
            "coefficient window must cover min_degree..=trunc_order"
        );
        Self { min_degree, coeffs, trunc_order }.normalized()
    }

    /// Power series `c_0 + c_1 x + ...` known through `x^(len-1)`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let top = coeffs.len() as i64 - 1;
        Self::new(0, coeffs, top)
    }

    pub fn zero(trunc_order: i64) -> Self {
        Self::new(0, vec![Rational::zero(); (trunc_order + 1).max(0) as usize], trunc_order)
    }

    pub fn one(trunc_order: i64) -> Self {
        Self::constant(Rational::one(), trunc_order)
    }

    pub fn constant(value: Rational, trunc_order: i64) -> Self {
        Self::monomial(value, 0, trunc_order)
    }

    /// `value * x^degree`, known through `x^trunc_order`.
    pub fn monomial(value: Rational, degree: i64, trunc_order: i64) -> Self {
        if degree > trunc_order {
            return Self::zero(trunc_order);
        }
        let mut coeffs = vec![Rational::zero(); (trunc_order - degree + 1) as usize];
        coeffs[0] = value;
        Self::new(degree, coeffs, trunc_order)
    }

    /// Series of `exp(rate * x)` through `x^trunc_order`.
    pub fn exp_linear(rate: &Rational, trunc_order: i64) -> Self {
        assert!(trunc_order >= 0, "exp_linear needs a non-negative truncation order");
        let mut coeffs = Vec::with_capacity(trunc_order as usize + 1);
        let mut term = Rational::one();
        coeffs.push(term.clone());
        for d in 1..=trunc_order {
            term = term * rate / rational::int(d);
            coeffs.push(term.clone());
        }
        Self::new(0, coeffs, trunc_order)
    }

    fn normalized(mut self) -> Self {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) => self,
            Some(k) => {
                self.coeffs.drain(..k);
                self.min_degree += k as i64;
                self
            }
            None => {
                let len = (self.trunc_order + 1).max(0) as usize;
                Self { min_degree: 0, coeffs: vec![Rational::zero(); len], trunc_order: self.trunc_order }
            }
        }
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn trunc_order(&self) -> i64 {
        self.trunc_order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest degree with a nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_degree)
    }

    /// Valuation used for precision bookkeeping: a zero series could be
    /// nonzero only above its truncation order.
    fn effective_valuation(&self) -> i64 {
        self.valuation().unwrap_or(self.trunc_order + 1)
    }

    pub fn coefficient(&self, degree: i64) -> Result<Rational> {
        if degree > self.trunc_order {
            return Err(Error::UnknownCoefficient { degree, trunc_order: self.trunc_order });
        }
        if degree < self.min_degree {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[(degree - self.min_degree) as usize].clone())
    }

    /// Coefficients of `x^0 ..= x^order`; fails if any is unknown or if the
    /// series still has a pole.
    pub fn power_coefficients(&self, order: i64) -> Result<Vec<Rational>> {
        if self.valuation().is_some_and(|v| v < 0) {
            return Err(Error::CancellationFailure { n: self.min_degree });
        }
        (0..=order).map(|d| self.coefficient(d)).collect()
    }

    /// Drops everything above `x^order`.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.trunc_order {
            return self.clone();
        }
        let keep = (order - self.min_degree + 1).max(0) as usize;
        let coeffs = self.coeffs.iter().take(keep).cloned().collect::<Vec<_>>();
        if coeffs.is_empty() {
            return Self::zero(order);
        }
        Self::new(self.min_degree, coeffs, order)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        Self::new(self.min_degree, coeffs, self.trunc_order)
    }

    pub fn add_constant(&self, value: &Rational) -> Self {
        self + &Self::constant(value.clone(), self.trunc_order)
    }

    /// The series with `x` replaced by `-x`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if (self.min_degree + k as i64) % 2 == 0 { c.clone() } else { -c })
            .collect();
        Self::new(self.min_degree, coeffs, self.trunc_order)
    }

    /// Exact Laurent quotient `self / den`.
    pub fn checked_div(&self, den: &TruncSeries) -> Result<Self> {
        let den_val = den.valuation().ok_or(Error::DivisionByZeroSeries)?;
        let Some(num_val) = self.valuation() else {
            let top = self.trunc_order - den_val;
            if top < 0 {
                return Err(Error::TruncationUnderflow { top });
            }
            return Ok(Self::zero(top));
        };
        let rel = self.coeffs.len().min(den.coeffs.len());
        let min_degree = num_val - den_val;
        let top = min_degree + rel as i64 - 1;
        if top < 0 {
            return Err(Error::TruncationUnderflow { top });
        }
        let lead_inv = den.coeffs[0].recip();
        let mut quot: Vec<Rational> = Vec::with_capacity(rel);
        for k in 0..rel {
            let mut acc = self.coeffs[k].clone();
            for (i, q) in quot.iter().enumerate() {
                acc -= q * &den.coeffs[k - i];
            }
            quot.push(acc * &lead_inv);
        }
        Ok(Self::new(min_degree, quot, top))
    }

    /// `1 / self`.
    pub fn recip(&self) -> Result<Self> {
        Self::one(self.trunc_order - self.effective_valuation().min(0)).checked_div(self)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let top = self.trunc_order.min(rhs.trunc_order);
        let low = self.min_degree.min(rhs.min_degree);
        if top < low {
            return TruncSeries::zero(top);
        }
        let coeffs = (low..=top)
            .map(|d| {
                let a = self.coefficient(d).unwrap_or_default();
                let b = rhs.coefficient(d).unwrap_or_default();
                a + b
            })
            .collect();
        TruncSeries::new(low, coeffs, top)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries::new(self.min_degree, self.coeffs.iter().map(|c| -c).collect(), self.trunc_order)
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self + &(-rhs)
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let va = self.effective_valuation();
        let vb = rhs.effective_valuation();
        let top = (self.trunc_order + vb).min(rhs.trunc_order + va);
        if self.is_zero() || rhs.is_zero() {
            return TruncSeries::zero(top);
        }
        let low = va + vb;
        if top < low {
            return TruncSeries::zero(top);
        }
        let len = (top - low + 1) as usize;
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncSeries::new(low, coeffs, top)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: TruncSeries) -> TruncSeries {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: &TruncSeries) -> TruncSeries {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        -&self
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = self.min_degree + k as i64;
            if wrote {
                f.write_str(" + ")?;
            }
            match d {
                0 => write!(f, "{}", rational::to_fraction_string(c))?,
                1 => write!(f, "({})x", rational::to_fraction_string(c))?,
                _ => write!(f, "({})x^{}", rational::to_fraction_string(c), d)?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.trunc_order + 1)
    }
}
