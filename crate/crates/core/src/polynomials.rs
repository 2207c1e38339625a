//! Torus-knot quantum invariants as truncated series in `x`.
//!
//! Each evaluator works at a concrete group parameter. The variable `t` is
//! replaced by `exp(x)` for SU(N) and SU(2) and by `exp(x/2)` for SO(N), so
//! every `t^a` becomes an exact exponential series. Internal divisions by
//! series with vanishing constant term lose precision; each evaluator runs
//! at `order + guard + pole budget` and fails with
//! [`Error::GuardInsufficient`] rather than return a coefficient it does not
//! know.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupFamily, GroupInstance};
use crate::knot::TorusKnot;
use crate::rational::{frac, int, Rational};
use crate::series::TruncSeries;
use crate::{DEFAULT_GUARD, MAX_ORDER};

/// Requested truncation order and the number of guard terms to carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Precision {
    pub order: i64,
    pub guard: u32,
}

impl Precision {
    pub const fn new(order: i64, guard: u32) -> Self {
        Self { order, guard }
    }

    fn working(&self, pole_budget: i64) -> i64 {
        self.order + self.guard as i64 + pole_budget
    }

    fn finish(&self, series: TruncSeries) -> Result<TruncSeries> {
        if series.trunc_order() < self.order {
            return Err(Error::GuardInsufficient { requested: self.order, achieved: series.trunc_order() });
        }
        Ok(series.truncate(self.order))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::new(MAX_ORDER as i64, DEFAULT_GUARD)
    }
}

/// `t^exponent` with `t = exp(scale * x)`.
pub fn qpower(exponent: &Rational, scale: &Rational, trunc_order: i64) -> TruncSeries {
    TruncSeries::exp_linear(&(exponent * scale), trunc_order)
}

/// Powers of `t` at a fixed substitution scale and working precision.
struct QVar {
    scale: Rational,
    top: i64,
}

impl QVar {
    fn new(scale: Rational, top: i64) -> Self {
        Self { scale, top }
    }

    fn pow(&self, exponent: Rational) -> TruncSeries {
        qpower(&exponent, &self.scale, self.top)
    }

    fn powi(&self, exponent: i64) -> TruncSeries {
        self.pow(int(exponent))
    }

    fn one(&self) -> TruncSeries {
        TruncSeries::one(self.top)
    }

    /// `t^(a/2) - t^(-a/2)`.
    fn sym_diff(&self, half_exponent: Rational) -> TruncSeries {
        self.pow(half_exponent.clone()) - self.pow(-half_exponent)
    }
}

fn require_positive_n(knot: &TorusKnot) -> Result<()> {
    if !knot.is_coprime() {
        return Err(Error::NotAKnot { n: knot.n, m: knot.m });
    }
    if knot.n < 1 {
        return Err(Error::CancellationFailure { n: knot.n });
    }
    Ok(())
}

/// Normalized HOMFLY invariant of `{n,m}` at SU(N), `λ = t^(N-1)`, `t = e^x`.
///
/// The prefactor `1/(λt - 1)` cancels the `j = 0` factor of every summand's
/// product `Π_{j=-p}^{i} (λt - t^j)`, so that factor is skipped rather than
/// divided out.
pub fn homfly_normalized(knot: &TorusKnot, big_n: i64, precision: Precision) -> Result<TruncSeries> {
    require_positive_n(knot)?;
    if big_n < 2 {
        return Err(Error::InvalidGroup(format!("SU(N) needs N >= 2, got {big_n}")));
    }
    let (n, m) = (knot.n, knot.m);
    let t = QVar::new(Rational::one(), precision.working(n));
    let lambda_t = t.powi(big_n);
    let qfactorial = |k: i64| (1..=k).fold(t.one(), |acc, a| acc * (t.powi(a) - t.one()));

    let mut sum = TruncSeries::zero(t.top);
    for p in 0..n {
        let i = n - 1 - p;
        let mut term = t.pow(int(m * i) + frac(p * (p + 1), 2));
        if i % 2 == 1 {
            term = -term;
        }
        for j in (-p..=i).filter(|&j| j != 0) {
            term = term * (&lambda_t - &t.powi(j));
        }
        term = term.checked_div(&(qfactorial(i) * qfactorial(p)))?;
        sum = sum + term;
    }
    let prefactor = (t.one() - t.powi(1)).checked_div(&(t.one() - t.powi(n)))?;
    let lambda_power = t.pow(frac((big_n - 1) * (m - 1) * (n - 1), 2));
    precision.finish(prefactor * lambda_power * sum)
}

/// Normalized Kauffman invariant of `{n,m}` at SO(N), `λ = t^((N-1)/2)`,
/// `t = e^(x/2)`, with `[p] = t^(p/2) - t^(-p/2)` and
/// `[p;q] = t^(p/2) λ^q - t^(-p/2) λ^(-q)`.
pub fn kauffman_normalized(knot: &TorusKnot, big_n: i64, precision: Precision) -> Result<TruncSeries> {
    require_positive_n(knot)?;
    if big_n < 3 {
        return Err(Error::InvalidGroup(format!("SO(N) needs N >= 3, got {big_n}")));
    }
    let (n, m) = (knot.n, knot.m);
    let t = QVar::new(frac(1, 2), precision.working(n + 1));
    // λ^q = t^(q(N-1)/2)
    let lambda_pow = |q: i64| t.pow(frac(q * (big_n - 1), 2));
    let bracket = |p: i64| t.sym_diff(frac(p, 2));
    // [p;1] = t^((p + N - 1)/2) - t^(-(p + N - 1)/2)
    let bracket_lambda = |p: i64| t.sym_diff(frac(p + big_n - 1, 2));
    let bfactorial = |k: i64| (1..=k).fold(t.one(), |acc, a| acc * bracket(a));

    let inv_bracket_n = t.one().checked_div(&bracket(n))?;
    let mut sum = TruncSeries::zero(t.top);
    for gamma in 0..n {
        let beta = n - 1 - gamma;
        let diff = beta - gamma;
        if diff + big_n - 1 == 0 {
            return Err(Error::SingularBracket { p: diff, big_n });
        }
        let mut term = t.pow(frac(-m * diff, 2)) * lambda_pow(-m);
        if gamma % 2 == 1 {
            term = -term;
        }
        let inner = &inv_bracket_n + &t.one().checked_div(&bracket_lambda(diff))?;
        term = term * inner;
        for j in -gamma..=beta {
            term = term * bracket_lambda(j);
        }
        term = term.checked_div(&(bfactorial(beta) * bfactorial(gamma)))?;
        sum = sum + term;
    }
    if n % 2 == 0 {
        sum = sum.add_constant(&Rational::one());
    }
    let prefactor = (bracket(1) * lambda_pow(n * m)).checked_div(&(bracket(1) + bracket_lambda(0)))?;
    precision.finish(prefactor * sum)
}

/// Normalized SU(2) spin-`j/2` invariant (Jones for `j = 1`), `t = e^x`.
pub fn akutsu_wadati_normalized(knot: &TorusKnot, j: i64, precision: Precision) -> Result<TruncSeries> {
    require_positive_n(knot)?;
    if j < 1 {
        return Err(Error::InvalidGroup(format!("SU(2) needs j >= 1, got {j}")));
    }
    let (n, m) = (knot.n, knot.m);
    let t = QVar::new(Rational::one(), precision.working(1));
    let mut sum = TruncSeries::zero(t.top);
    for l in 0..=j {
        let term = t.powi(n * (1 + m * l) * (j - l)) * (t.powi(1 + m * l) - t.powi(m * (j - l)));
        sum = sum + term;
    }
    let prefactor = t.pow(frac(j * (n - 1) * (m - 1), 2)).checked_div(&(t.powi(j + 1) - t.one()))?;
    precision.finish(prefactor * sum)
}

/// Value of the invariant on the unknot (quantum dimension); its constant
/// term is the classical dimension.
pub fn unknot_factor(group: &GroupInstance, precision: Precision) -> Result<TruncSeries> {
    let factors = group.factors();
    if factors.len() > 1 {
        let mut out = TruncSeries::one(precision.order);
        for g in &factors {
            out = out * unknot_factor(g, precision)?;
        }
        return Ok(out);
    }
    let t = QVar::new(group.substitution_scale(), precision.working(1));
    let half = t.sym_diff(frac(1, 2));
    let series = match group.family() {
        GroupFamily::SuN => {
            // λt = t^N
            let big_n = group.big_n().unwrap_or_default();
            t.sym_diff(frac(big_n, 2)).checked_div(&half)?
        }
        GroupFamily::SoN => {
            // λ = t^((N-1)/2)
            let big_n = group.big_n().unwrap_or_default();
            t.sym_diff(frac(big_n - 1, 2)).checked_div(&half)?.add_constant(&Rational::one())
        }
        _ => {
            let j = group.spin_label().unwrap_or_default();
            t.sym_diff(frac(j + 1, 2)).checked_div(&half)?
        }
    };
    precision.finish(series)
}

/// Normalized invariant for any group instance. The knot label is first
/// moved to its evaluation orientation (`1 <= n <= |m|`).
pub fn normalized_series(knot: &TorusKnot, group: &GroupInstance, precision: Precision) -> Result<TruncSeries> {
    let k = knot.evaluation_orientation();
    match group.family() {
        GroupFamily::SuN => homfly_normalized(&k, group.big_n().unwrap_or_default(), precision),
        GroupFamily::SoN => kauffman_normalized(&k, group.big_n().unwrap_or_default(), precision),
        GroupFamily::Su2 => akutsu_wadati_normalized(&k, group.spin_label().unwrap_or_default(), precision),
        GroupFamily::SuNxSu2 => {
            let mut out = TruncSeries::one(precision.order);
            for g in group.factors() {
                out = out * normalized_series(&k, &g, precision)?;
            }
            Ok(out)
        }
    }
}

/// Unnormalized invariant: normalized series times the unknot factor. For a
/// product group this is the product of the factors' unnormalized series.
pub fn unnormalized_series(knot: &TorusKnot, group: &GroupInstance, precision: Precision) -> Result<TruncSeries> {
    if group.family() == GroupFamily::SuNxSu2 {
        let mut out = TruncSeries::one(precision.order);
        for g in group.factors() {
            out = out * unnormalized_series(knot, &g, precision)?;
        }
        return Ok(out);
    }
    Ok(normalized_series(knot, group, precision)? * unknot_factor(group, precision)?)
}

/// Checks that a normalized series has no pole and constant term 1.
pub fn is_unit_normalized(series: &TruncSeries) -> bool {
    series.min_degree() >= 0 && series.coefficient(0).is_ok_and(|c| c.is_one())
}

/// Convenience: coefficients `x^0..=x^order` of a normalized series.
pub fn normalized_coefficients(knot: &TorusKnot, group: &GroupInstance, precision: Precision) -> Result<Vec<Rational>> {
    normalized_series(knot, group, precision)?.power_coefficients(precision.order)
}

/// Coefficient of `x^degree`, treating a missing low degree as zero.
pub fn coefficient_or_zero(series: &TruncSeries, degree: i64) -> Rational {
    series.coefficient(degree).unwrap_or_else(|_| Rational::zero())
}
