//! Exact extraction of `α̃_ij` and `α_ij` from series expansions.
//!
//! For every group instance in a plan, the coefficient of `x^i` in the
//! expansion is `Σ_j r_ij α_ij`. Each instance contributes one row per
//! order; the system is solved exactly and must have full column rank with
//! every surplus row consistent.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::closed_form::beta_from_alpha_tilde;
use crate::error::{Error, Result};
use crate::group::{GroupFactorVector, GroupInstance};
use crate::invariants::{slots, InvariantKind, InvariantTable, DIMENSIONS};
use crate::knot::TorusKnot;
use crate::linalg::{solve_exact, ExactMatrix};
use crate::polynomials::{coefficient_or_zero, normalized_series, unnormalized_series, Precision};
use crate::rational::Rational;
use crate::series::TruncSeries;
use crate::MAX_ORDER;

/// Group instances used to generate equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstantiationPlan {
    pub instances: Vec<GroupInstance>,
}

impl InstantiationPlan {
    /// SU(N) for N = 2..=7, six SO(N) starting above the knot's smaller
    /// label, SU(2) for j = 1..=6 and seven SU(N)×SU(2) pairs.
    pub fn default_for(knot: &TorusKnot) -> Self {
        let n = knot.evaluation_orientation().n;
        let so_start = 5.max(n + 2);
        let mut instances = Vec::new();
        instances.extend((2..=7).map(|big_n| GroupInstance::su_n(big_n).expect("N >= 2")));
        instances.extend((so_start..so_start + 6).map(|big_n| GroupInstance::so_n(big_n).expect("N >= 5")));
        instances.extend((1..=6).map(|j| GroupInstance::su2(j).expect("j >= 1")));
        for (big_n, j) in [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2), (5, 3)] {
            instances.push(GroupInstance::su_n_x_su2(big_n, j).expect("valid product"));
        }
        Self { instances }
    }

    pub fn new(instances: Vec<GroupInstance>) -> Self {
        Self { instances }
    }
}

/// Which expansion the equations are taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// Normalized series; unknowns are `α̃_ij`.
    Normalized,
    /// Unnormalized series divided by `d(R)`; unknowns are `α_ij`.
    Unnormalized,
}

/// Diagnostics of one order's system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub order: u8,
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub consistent: bool,
    /// `(row, A·x − b)` for rows not satisfied by the solution.
    pub residuals: Vec<(usize, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExtractionReport {
    pub orders: Vec<OrderReport>,
}

impl ExtractionReport {
    pub fn is_clean(&self) -> bool {
        self.orders.iter().all(|o| o.consistent && o.rank == o.unknowns && o.residuals.is_empty())
    }

    pub fn rank(&self, order: u8) -> Option<usize> {
        self.orders.iter().find(|o| o.order == order).map(|o| o.rank)
    }
}

struct Instantiated {
    factors: GroupFactorVector,
    series: TruncSeries,
}

fn instantiate(
    knot: &TorusKnot,
    instances: &[GroupInstance],
    precision: Precision,
    expansion: Expansion,
) -> Result<Vec<Instantiated>> {
    instances
        .par_iter()
        .map(|g| {
            let factors = g.group_factors()?;
            let series = match expansion {
                Expansion::Normalized => normalized_series(knot, g, precision)?,
                Expansion::Unnormalized => {
                    unnormalized_series(knot, g, precision)?.scale(&(Rational::one() / &factors.dim))
                }
            };
            Ok(Instantiated { factors, series })
        })
        .collect()
}

fn build_system(rows: &[Instantiated], order: u8) -> ExactMatrix {
    let unknowns = slots(order);
    let mut system = ExactMatrix::augmented(unknowns.len());
    for row in rows {
        let coefficients = unknowns.iter().map(|s| row.factors.get(s.order, s.index)).collect();
        system.push_row(coefficients, coefficient_or_zero(&row.series, order as i64));
    }
    system
}

/// One row `[r_i1 … r_id | c_i]` per instance.
pub fn assemble_system(
    knot: &TorusKnot,
    order: u8,
    instances: &[GroupInstance],
    precision: Precision,
    expansion: Expansion,
) -> Result<ExactMatrix> {
    if order > MAX_ORDER || precision.order < order as i64 {
        return Err(Error::Unsupported(format!("order {order} at truncation {}", precision.order)));
    }
    let rows = instantiate(knot, instances, precision, expansion)?;
    Ok(build_system(&rows, order))
}

fn extract(
    knot: &TorusKnot,
    precision: Precision,
    plan: &InstantiationPlan,
    expansion: Expansion,
) -> Result<(InvariantTable, ExtractionReport)> {
    if !knot.is_coprime() {
        return Err(Error::NotAKnot { n: knot.n, m: knot.m });
    }
    if precision.order > MAX_ORDER as i64 || precision.order < 0 {
        return Err(Error::Unsupported(format!("truncation order {} (supported: 0..={MAX_ORDER})", precision.order)));
    }
    let kind = match expansion {
        Expansion::Normalized => InvariantKind::AlphaTilde,
        Expansion::Unnormalized => InvariantKind::Alpha,
    };
    let rows = instantiate(knot, &plan.instances, precision, expansion)?;
    let mut table = InvariantTable::new(kind, *knot);
    let mut report = ExtractionReport::default();
    for order in 0..=precision.order as u8 {
        let system = build_system(&rows, order);
        let unknowns = slots(order);
        if unknowns.is_empty() {
            // Order 1 has no group structure: the coefficient must vanish.
            let residuals: Vec<(usize, Rational)> = system
                .rhs()
                .unwrap_or_default()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect();
            let consistent = residuals.is_empty();
            report.orders.push(OrderReport {
                order,
                unknowns: 0,
                equations: system.rows(),
                rank: 0,
                consistent,
                residuals,
            });
            if !consistent {
                return Err(Error::Inconsistent { order });
            }
            continue;
        }
        let solution = solve_exact(&system);
        let residuals = match &solution.solution {
            Some(x) => system
                .apply(x)
                .into_iter()
                .zip(system.rhs().unwrap_or_default())
                .enumerate()
                .filter(|(_, (ax, b))| ax != *b)
                .map(|(i, (ax, b))| (i, ax - b))
                .collect(),
            None => Vec::new(),
        };
        report.orders.push(OrderReport {
            order,
            unknowns: unknowns.len(),
            equations: system.rows(),
            rank: solution.rank,
            consistent: solution.consistent,
            residuals,
        });
        if solution.rank < DIMENSIONS[order as usize] {
            return Err(Error::RankDeficient { order, rank: solution.rank, unknowns: unknowns.len() });
        }
        let Some(values) = solution.solution.filter(|_| solution.consistent) else {
            return Err(Error::Inconsistent { order });
        };
        if order >= 2 {
            for (slot, value) in unknowns.into_iter().zip(values) {
                table.set(slot, value);
            }
        } else if !values[0].is_one() {
            return Err(Error::Inconsistent { order });
        }
    }
    Ok((table, report))
}

/// Solves for `α̃_ij` from the normalized expansions.
pub fn extract_alpha_tilde(
    knot: &TorusKnot,
    precision: Precision,
    plan: &InstantiationPlan,
) -> Result<(InvariantTable, ExtractionReport)> {
    extract(knot, precision, plan, Expansion::Normalized)
}

/// Solves for `α_ij` from the unnormalized expansions divided by `d(R)`.
pub fn extract_alpha(
    knot: &TorusKnot,
    precision: Precision,
    plan: &InstantiationPlan,
) -> Result<(InvariantTable, ExtractionReport)> {
    extract(knot, precision, plan, Expansion::Unnormalized)
}

/// All three tables for one knot from the solver, with the extraction
/// reports. `β` is normalized by the trefoil's solved `α̃`.
#[derive(Clone, Debug)]
pub struct SolvedInvariants {
    pub alpha_tilde: InvariantTable,
    pub alpha: InvariantTable,
    pub beta: InvariantTable,
    pub alpha_tilde_report: ExtractionReport,
    pub alpha_report: ExtractionReport,
}

pub fn solve_invariants(knot: &TorusKnot, precision: Precision) -> Result<SolvedInvariants> {
    let plan = InstantiationPlan::default_for(knot);
    let (alpha_tilde, alpha_tilde_report) = extract_alpha_tilde(knot, precision, &plan)?;
    let (alpha, alpha_report) = extract_alpha(knot, precision, &plan)?;
    let trefoil = TorusKnot::trefoil();
    let full = Precision::new(MAX_ORDER as i64, precision.guard);
    let trefoil_tilde = if *knot == trefoil && precision.order == full.order {
        alpha_tilde.clone()
    } else {
        extract_alpha_tilde(&trefoil, full, &InstantiationPlan::default_for(&trefoil))?.0
    };
    let order = precision.order.clamp(0, MAX_ORDER as i64) as u8;
    let beta = beta_from_alpha_tilde(&alpha_tilde, &trefoil_tilde).restricted(order);
    Ok(SolvedInvariants { alpha_tilde, alpha, beta, alpha_tilde_report, alpha_report })
}
