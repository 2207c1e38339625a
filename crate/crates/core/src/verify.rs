//! Verification suites behind the `verify` command.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use crate::analysis::{
    auxiliary_scalars, canonical_grid, dependency_relations_check, distinguishing_check, integrality_scan,
    proposition_modular_checks, ScanReport,
};
use crate::ansatz::{compare_with_printed, fit_ansatz, EntryStatus};
use crate::closed_form::{
    beta_from_alpha_tilde, closed_form_alpha, closed_form_alpha_tilde, closed_form_beta, BETA_FACTORS,
};
use crate::error::Result;
use crate::extract::{extract_alpha, extract_alpha_tilde, InstantiationPlan};
use crate::group::{GroupFamily, GroupInstance};
use crate::invariants::{slots, InvariantTable, Slot, COMPOUND_SLOTS, DIMENSIONS, PRIMITIVE_SLOTS};
use crate::knot::TorusKnot;
use crate::polynomials::{
    akutsu_wadati_normalized, coefficient_or_zero, homfly_normalized, kauffman_normalized, normalized_series, Precision,
};
use crate::rational::{frac, int, Rational};
use crate::series::TruncSeries;

/// Knots on which the solver is compared with the closed forms.
pub const SOLVER_GRID: [(i64, i64); 10] =
    [(2, 3), (2, 5), (2, 7), (2, 9), (3, 4), (3, 5), (4, 5), (5, 6), (2, -3), (3, -5)];

/// Knots sampled by the series cross-checks.
pub const SAMPLE_KNOTS: [(i64, i64); 5] = [(2, 3), (2, -5), (3, 4), (3, -7), (4, 5)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    ClosedForms,
    Relations,
    Integrality,
    Injectivity,
    CrossChecks,
    Ansatz,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::ClosedForms,
        Suite::Relations,
        Suite::Integrality,
        Suite::Injectivity,
        Suite::CrossChecks,
        Suite::Ansatz,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::ClosedForms => "closed-forms",
            Suite::Relations => "relations",
            Suite::Integrality => "integrality",
            Suite::Injectivity => "injectivity",
            Suite::CrossChecks => "cross-checks",
            Suite::Ansatz => "ansatz",
            Suite::All => "all",
        }
    }

    fn default_bound(&self) -> i64 {
        match self {
            Suite::Relations => 12,
            Suite::Integrality => 30,
            Suite::Injectivity => 40,
            Suite::CrossChecks => 12,
            _ => 0,
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::EACH
            .iter()
            .chain([&Suite::All])
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Overrides the suite's default range.
    pub bound: Option<i64>,
    /// Bound for the single-integer divisibility lemmas.
    pub lemma_bound: i64,
    /// Flips the sign of `β_{2,1}` in the `β` oracle, to exercise failure
    /// reporting.
    pub inject_sign_error: bool,
    pub precision: Precision,
}

impl VerifyOptions {
    pub fn new() -> Self {
        Self { bound: None, lemma_bound: 10_000, inject_sign_error: false, precision: Precision::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: String,
    pub checked: u64,
    /// Human-readable failures; empty when the check passed.
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(id: impl Into<String>, checked: u64, failures: Vec<String>) -> Self {
        Self { id: id.into(), checked, failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub bound: Option<i64>,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed())
    }
}

fn scan_outcomes(prefix: &str, report: &ScanReport) -> Vec<CheckOutcome> {
    report
        .entries
        .iter()
        .map(|e| {
            let failures = e
                .violations
                .iter()
                .map(|v| match v.m {
                    Some(m) => format!("({}, {m}): {} = {}", v.n, v.id, v.value),
                    None => format!("n = {}: {} leaves remainder {}", v.n, v.id, v.value),
                })
                .collect();
            CheckOutcome::new(format!("{prefix}.{}", e.id), e.checked, failures)
        })
        .collect()
}

fn beta_oracle(knot: &TorusKnot, options: &VerifyOptions) -> InvariantTable {
    let mut t = closed_form_beta(knot);
    if options.inject_sign_error {
        let flipped = -t.get(2, 1);
        t.set(Slot::new(2, 1), flipped);
    }
    t
}

fn diff_lines(knot: &TorusKnot, got: &InvariantTable, want: &InvariantTable) -> Vec<String> {
    got.differences(want).into_iter().map(|(s, a, b)| format!("{knot} {s}: {a} != {b}")).collect()
}

/// Runs one suite, or every suite in order for [`Suite::All`].
pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    if suite == Suite::All {
        return Suite::EACH.iter().map(|s| run_single(*s, options)).collect();
    }
    Ok(vec![run_single(suite, options)?])
}

fn run_single(suite: Suite, options: &VerifyOptions) -> Result<SuiteReport> {
    let bound = options.bound.unwrap_or(suite.default_bound());
    let checks = match suite {
        Suite::ClosedForms => closed_form_checks(options)?,
        Suite::Relations => relation_checks(bound, options),
        Suite::Integrality => {
            let mut checks = scan_outcomes("integrality", &integrality_scan(bound, true));
            checks.push(witness_check(bound));
            checks.extend(scan_outcomes("modular", &proposition_modular_checks(options.lemma_bound, bound)));
            checks
        }
        Suite::Injectivity => scan_outcomes("distinguishing", &distinguishing_check(bound)),
        Suite::CrossChecks => cross_checks(bound, options.precision)?,
        Suite::Ansatz => ansatz_checks(options.precision)?,
        Suite::All => unreachable!("expanded by run_suite"),
    };
    let bound = (suite.default_bound() > 0).then_some(bound);
    Ok(SuiteReport { suite, bound, checks })
}

fn closed_form_checks(options: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let grid: Vec<TorusKnot> = SOLVER_GRID.iter().map(|&(n, m)| TorusKnot::pair(n, m)).collect();
    let solved = grid
        .par_iter()
        .map(|k| {
            let plan = InstantiationPlan::default_for(k);
            let tilde = extract_alpha_tilde(k, options.precision, &plan)?;
            let alpha = extract_alpha(k, options.precision, &plan)?;
            Ok((tilde, alpha))
        })
        .collect::<Result<Vec<_>>>()?;
    let n = grid.len() as u64;
    let mut tilde_fail = Vec::new();
    let mut rank_fail = Vec::new();
    let mut alpha_prim = Vec::new();
    let mut alpha_odd = Vec::new();
    let mut alpha_compound = Vec::new();
    for (k, ((tilde, tilde_report), (alpha, alpha_report))) in grid.iter().zip(&solved) {
        tilde_fail.extend(diff_lines(k, tilde, &closed_form_alpha_tilde(k)));
        for report in [tilde_report, alpha_report] {
            for o in &report.orders {
                if o.rank != DIMENSIONS[o.order as usize] || !o.consistent || !o.residuals.is_empty() {
                    rank_fail.push(format!("{k} order {}: rank {} of {}", o.order, o.rank, o.unknowns));
                }
            }
        }
        let oracle = closed_form_alpha(k);
        for slot in PRIMITIVE_SLOTS.iter().filter(|s| s.order % 2 == 0) {
            if alpha.at(*slot) != oracle.at(*slot) {
                alpha_prim.push(format!("{k} {slot}: {} != {}", alpha.at(*slot), oracle.at(*slot)));
            }
        }
        for slot in PRIMITIVE_SLOTS.iter().filter(|s| s.order % 2 == 1) {
            if alpha.at(*slot) != tilde.at(*slot) {
                alpha_odd.push(format!("{k} {slot}: alpha {} != alpha_tilde {}", alpha.at(*slot), tilde.at(*slot)));
            }
        }
        for (slot, parts) in COMPOUND_SLOTS {
            let product = parts.iter().fold(int(1), |acc, s| acc * alpha.at(*s));
            let weight = match (slot.order, slot.index) {
                (4, 1) | (6, 2) => frac(1, 2),
                (6, 1) => frac(1, 6),
                _ => int(1),
            };
            if alpha.at(slot) != &weight * &product {
                alpha_compound.push(format!("{k} {slot}: {} != {}", alpha.at(slot), weight * product));
            }
        }
    }
    let trefoil = oracle_trefoil_check(options);
    let trefoil_tilde = &solved[0].0 .0;
    let via_solver = beta_from_alpha_tilde(trefoil_tilde, trefoil_tilde);
    let solver_normalizers = BETA_FACTORS
        .iter()
        .filter(|(s, f)| via_solver.at(*s) != int(*f))
        .map(|(s, f)| format!("{s}: {} != {f}", via_solver.at(*s)))
        .collect();
    let mut routes = Vec::new();
    for (k, ((tilde, _), _)) in grid.iter().zip(&solved) {
        let via = beta_from_alpha_tilde(tilde, trefoil_tilde);
        routes.extend(diff_lines(k, &via, &beta_oracle(k, options)));
    }
    Ok(vec![
        trefoil,
        CheckOutcome::new("closed_forms.trefoil_normalizers_from_solver", 12, solver_normalizers),
        CheckOutcome::new("closed_forms.alpha_tilde_solver_vs_closed_form", n, tilde_fail),
        CheckOutcome::new("closed_forms.extraction_rank_and_consistency", n, rank_fail),
        CheckOutcome::new("closed_forms.alpha_even_primitives", n, alpha_prim),
        CheckOutcome::new("closed_forms.alpha_odd_equals_alpha_tilde", n, alpha_odd),
        CheckOutcome::new("closed_forms.alpha_compound_identities", n, alpha_compound),
        CheckOutcome::new("closed_forms.beta_routes_agree", n, routes),
    ])
}

fn oracle_trefoil_check(options: &VerifyOptions) -> CheckOutcome {
    let t = beta_oracle(&TorusKnot::trefoil(), options);
    let failures = BETA_FACTORS
        .iter()
        .filter(|(s, f)| t.at(*s) != int(*f))
        .map(|(s, f)| format!("{s}: {} != {f}", t.at(*s)))
        .collect();
    CheckOutcome::new("closed_forms.trefoil_normalizers", 12, failures)
}

fn relation_checks(bound: i64, options: &VerifyOptions) -> Vec<CheckOutcome> {
    let grid = canonical_grid(bound);
    if options.inject_sign_error {
        // Re-run the relations on the perturbed oracle.
        let failures: Vec<String> = grid
            .iter()
            .filter_map(|k| {
                let t = beta_oracle(k, options);
                let r = (crate::analysis::RELATIONS[0].residual)(&t);
                (!r.is_zero()).then(|| format!("{k}: order4 residual {r}"))
            })
            .collect();
        return vec![CheckOutcome::new("relations.order4", grid.len() as u64, failures)];
    }
    scan_outcomes("relations", &dependency_relations_check(&grid))
}

fn witness_check(bound: i64) -> CheckOutcome {
    let report = integrality_scan(bound.min(12), true);
    let failures = (2..=6u8)
        .filter(|order| !report.witnesses.iter().any(|w| w.id.starts_with(&format!("beta_{order}_"))))
        .map(|order| format!("no non-integral witness at order {order}"))
        .collect();
    CheckOutcome::new("integrality.non_coprime_witness_per_order", 5, failures)
}

/// Evaluator for a simple group without relabeling the knot; the label
/// must have `n >= 1`.
pub fn direct_series(knot: &TorusKnot, group: &GroupInstance, precision: Precision) -> Result<TruncSeries> {
    match group.family() {
        GroupFamily::SuN => homfly_normalized(knot, group.big_n().unwrap_or_default(), precision),
        GroupFamily::SoN => kauffman_normalized(knot, group.big_n().unwrap_or_default(), precision),
        GroupFamily::Su2 => akutsu_wadati_normalized(knot, group.spin_label().unwrap_or_default(), precision),
        GroupFamily::SuNxSu2 => {
            let mut out = TruncSeries::one(precision.order);
            for g in group.factors() {
                out = out * direct_series(knot, &g, precision)?;
            }
            Ok(out)
        }
    }
}

fn coefficients(series: &TruncSeries, order: i64) -> Vec<Rational> {
    (0..=order).map(|d| coefficient_or_zero(series, d)).collect()
}

/// Representative groups for the per-family properties.
pub fn sample_groups() -> Vec<GroupInstance> {
    vec![
        GroupInstance::su_n(3).expect("valid"),
        GroupInstance::so_n(9).expect("valid"),
        GroupInstance::su2(2).expect("valid"),
        GroupInstance::su_n_x_su2(3, 2).expect("valid"),
    ]
}

fn cross_checks(bound: i64, precision: Precision) -> Result<Vec<CheckOutcome>> {
    let order = precision.order;
    let knots: Vec<TorusKnot> = SAMPLE_KNOTS.iter().map(|&(n, m)| TorusKnot::pair(n, m)).collect();
    let mut checks = Vec::new();

    let mut fail = Vec::new();
    let su2 = GroupInstance::su_n(2)?;
    let spin = GroupInstance::su2(1)?;
    for k in &knots {
        let a = coefficients(&normalized_series(k, &su2, precision)?, order);
        let b = coefficients(&normalized_series(k, &spin, precision)?, order);
        if a != b {
            fail.push(format!("{k}: homfly N=2 {a:?} != akutsu-wadati j=1 {b:?}"));
        }
    }
    checks.push(CheckOutcome::new("cross_checks.homfly_n2_equals_akutsu_wadati_j1", knots.len() as u64, fail));

    let mut fail = Vec::new();
    let mut predicted = Vec::new();
    for k in &knots {
        let tilde = closed_form_alpha_tilde(k);
        for (big_n, j) in [(2, 1), (3, 2), (4, 3)] {
            let product = GroupInstance::su_n_x_su2(big_n, j)?;
            let whole = coefficients(&normalized_series(k, &product, precision)?, order);
            let mut parts = TruncSeries::one(order);
            for g in product.factors() {
                parts = parts * direct_series(&k.evaluation_orientation(), &g, precision)?;
            }
            if whole != coefficients(&parts, order) {
                fail.push(format!("{k} {product}: product series differs from product of factors"));
            }
            let r = product.group_factors()?;
            for i in 2..=order as u8 {
                let sum = slots(i).iter().fold(Rational::zero(), |acc, s| acc + r.get(s.order, s.index) * tilde.at(*s));
                if sum != whole[i as usize] {
                    predicted.push(format!("{k} {product} x^{i}: {sum} != {}", whole[i as usize]));
                }
            }
        }
    }
    checks.push(CheckOutcome::new("cross_checks.product_group_factorizes", knots.len() as u64 * 3, fail));
    checks.push(CheckOutcome::new(
        "cross_checks.product_group_factors_predict_series",
        knots.len() as u64 * 3,
        predicted,
    ));

    let mut unit = Vec::new();
    let mut swap = Vec::new();
    let mut mirror = Vec::new();
    let one = coefficients(&TruncSeries::one(order), order);
    for g in sample_groups() {
        for m in [2, 5, -3] {
            let s = direct_series(&TorusKnot::pair(1, m), &g, precision)?;
            if coefficients(&s, order) != one {
                unit.push(format!("{g} (1,{m}): not identically 1"));
            }
        }
        for k in &knots {
            let k = k.evaluation_orientation();
            let swapped = TorusKnot::pair(k.m.abs(), k.n * k.m.signum());
            let a = direct_series(&k, &g, precision)?;
            let b = direct_series(&swapped, &g, precision)?;
            if coefficients(&a, order) != coefficients(&b, order) {
                swap.push(format!("{g} {k} vs {swapped}"));
            }
            let mirrored = direct_series(&k.mirror(), &g, precision)?;
            if coefficients(&mirrored, order) != coefficients(&a.reflect(), order) {
                mirror.push(format!("{g} {k}: mirror is not x -> -x"));
            }
        }
    }
    let per_family = sample_groups().len() as u64;
    checks.push(CheckOutcome::new("cross_checks.unknot_normalizes_to_one", per_family * 3, unit));
    checks.push(CheckOutcome::new("cross_checks.n_m_symmetry", per_family * knots.len() as u64, swap));
    checks.push(CheckOutcome::new("cross_checks.mirror_parity", per_family * knots.len() as u64, mirror));

    let v3 = (1..=10)
        .filter_map(|p| {
            let got = auxiliary_scalars(&TorusKnot::pair(2, 2 * p + 1)).v3;
            (got != Some(int(p * p * p - p))).then(|| format!("p = {p}: {got:?}"))
        })
        .collect();
    checks.push(CheckOutcome::new("cross_checks.v3_law", 10, v3));

    let grid = canonical_grid(bound);
    let mut parity = Vec::new();
    let mut compounds = Vec::new();
    for k in &grid {
        let t = closed_form_beta(k);
        let mt = closed_form_beta(&k.mirror());
        for slot in PRIMITIVE_SLOTS {
            let expected = if slot.order % 2 == 0 { t.at(slot) } else { -t.at(slot) };
            if mt.at(slot) != expected {
                parity.push(format!("{k} {slot}"));
            }
        }
        for (slot, parts) in COMPOUND_SLOTS {
            if t.at(slot) != parts.iter().fold(int(1), |acc, s| acc * t.at(*s)) {
                compounds.push(format!("{k} {slot}"));
            }
        }
    }
    checks.push(CheckOutcome::new("cross_checks.beta_parity", grid.len() as u64, parity));
    checks.push(CheckOutcome::new("cross_checks.beta_compounds_are_products", grid.len() as u64, compounds));
    Ok(checks)
}

fn ansatz_checks(precision: Precision) -> Result<Vec<CheckOutcome>> {
    let mut checks = Vec::new();
    for family in [GroupFamily::SuN, GroupFamily::SoN, GroupFamily::Su2] {
        let fit = fit_ansatz(family, precision)?;
        let comparison = compare_with_printed(&fit)?;
        let failures = comparison
            .iter()
            .filter(|c| c.status == EntryStatus::Mismatch)
            .map(|c| format!("g{}: fitted {} but table has {}", c.slot, c.fitted, c.printed_text))
            .collect();
        checks.push(CheckOutcome::new(format!("ansatz.{}.table", family.name()), comparison.len() as u64, failures));
    }
    Ok(checks)
}
