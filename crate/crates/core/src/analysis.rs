//! Scans and identities over families of torus knots: injectivity of the
//! low-order pair, linear relations among the `β`, integrality, the
//! divisibility lemmas behind it, and a few derived scalars.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_form::{closed_form_beta, primitive_betas};
use crate::invariants::{InvariantTable, Slot, PRIMITIVE_SLOTS};
use crate::knot::{canonical_knots, TorusKnot};
use crate::rational::{self, frac, int, Rational};

/// A failed check, or a witness in a witness search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub n: i64,
    /// Absent for checks on a single integer.
    pub m: Option<i64>,
    pub id: String,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanEntry {
    pub id: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub name: String,
    pub bound: i64,
    pub entries: Vec<ScanEntry>,
    /// Witnesses found by searches that are expected to find some.
    pub witnesses: Vec<Violation>,
}

impl ScanReport {
    fn new(name: &str, bound: i64) -> Self {
        Self { name: name.to_string(), bound, entries: Vec::new(), witnesses: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.violations.is_empty())
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.entries.iter().flat_map(|e| e.violations.iter())
    }

    pub fn entry(&self, id: &str) -> Option<&ScanEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

fn beta_id(slot: Slot) -> String {
    format!("beta_{}_{}", slot.order, slot.index)
}

/// Pairwise injectivity of `(β_{2,1}, β_{3,1})` on canonical knots with
/// `n <= max_n`, plus the equivalent statement on `(nm, n²+m²)`.
pub fn distinguishing_check(max_n: i64) -> ScanReport {
    let knots = canonical_knots(max_n);
    let mut report = ScanReport::new("distinguishing", max_n);
    let mut by_beta: BTreeMap<(Rational, Rational), Vec<TorusKnot>> = BTreeMap::new();
    let mut by_ps: BTreeMap<(i64, i64), BTreeSet<(Rational, Rational)>> = BTreeMap::new();
    for k in &knots {
        let k = k.knot();
        let b = closed_form_beta(&k);
        let key = (b.get(2, 1), b.get(3, 1));
        by_beta.entry(key.clone()).or_default().push(k);
        by_ps.entry((k.n * k.m, k.n * k.n + k.m * k.m)).or_default().insert(key);
    }
    let mut collisions = Vec::new();
    for (value, class) in &by_beta {
        for k in class.iter().skip(1) {
            collisions.push(Violation {
                n: k.n,
                m: Some(k.m),
                id: format!("collides_with_{}", class[0]),
                value: value.0.clone(),
            });
        }
    }
    report.entries.push(ScanEntry {
        id: "beta_2_1_beta_3_1_injective".into(),
        checked: knots.len() as u64,
        violations: collisions,
    });
    // The pair determines (nm, n²+m²) and conversely.
    let mut venus = Vec::new();
    for ((p, s), images) in &by_ps {
        if images.len() != 1 {
            venus.push(Violation {
                n: *p,
                m: Some(*s),
                id: "nm_and_square_sum_give_several_values".into(),
                value: int(images.len() as i64),
            });
        }
    }
    if by_ps.len() != by_beta.len() {
        venus.push(Violation {
            n: max_n,
            m: None,
            id: "class_counts_differ".into(),
            value: int(by_ps.len() as i64 - by_beta.len() as i64),
        });
    }
    report.entries.push(ScanEntry {
        id: "equivalent_to_nm_and_square_sum".into(),
        checked: knots.len() as u64,
        violations: venus,
    });
    report
}

/// A relation `lhs = rhs` among `β` values, evaluated as `lhs - rhs`.
pub struct Relation {
    pub id: &'static str,
    pub text: &'static str,
    pub residual: fn(&InvariantTable) -> Rational,
}

fn b(t: &InvariantTable, i: u8, j: u8) -> Rational {
    t.get(i, j)
}

/// The order-4, order-5 and order-6 relations. At order five the
/// right-hand sides use `β_{5,4}`.
pub const RELATIONS: [Relation; 6] = [
    Relation {
        id: "order4",
        text: "b42 = 4 b43 + 12 b21^2 - b21",
        residual: |t| b(t, 4, 2) - (int(4) * b(t, 4, 3) + int(12) * b(t, 2, 1) * b(t, 2, 1) - b(t, 2, 1)),
    },
    Relation {
        id: "order5_a",
        text: "b52 = 6 b54 + 27/5 b21 b31 - 2/5 b31",
        residual: |t| {
            b(t, 5, 2) - (int(6) * b(t, 5, 4) + frac(27, 5) * b(t, 2, 1) * b(t, 3, 1) - frac(2, 5) * b(t, 3, 1))
        },
    },
    Relation {
        id: "order5_b",
        text: "b53 = 3/4 b54 + 3/10 b21 b31 - 1/20 b31",
        residual: |t| {
            b(t, 5, 3) - (frac(3, 4) * b(t, 5, 4) + frac(3, 10) * b(t, 2, 1) * b(t, 3, 1) - frac(1, 20) * b(t, 3, 1))
        },
    },
    Relation {
        id: "order6_a",
        text: "b65 = 58/9 b69 - 80/3 b43 + 41/9 b21 - 680/3 b21 b43 + 5280 b31^2 - 2080/3 b21^3",
        residual: |t| {
            let (b21, b31, b43) = (b(t, 2, 1), b(t, 3, 1), b(t, 4, 3));
            b(t, 6, 5)
                - (frac(58, 9) * b(t, 6, 9) - frac(80, 3) * &b43 + frac(41, 9) * &b21 - frac(680, 3) * &b21 * &b43
                    + int(5280) * &b31 * &b31
                    - frac(2080, 3) * &b21 * &b21 * &b21)
        },
    },
    Relation {
        id: "order6_b",
        text: "b66 = -5/12 b69 - 5/3 b43 + 1/4 b21 - 10 b21 b43 + 240 b31^2 - 40 b21^3",
        residual: |t| {
            let (b21, b31, b43) = (b(t, 2, 1), b(t, 3, 1), b(t, 4, 3));
            b(t, 6, 6)
                - (frac(-5, 12) * b(t, 6, 9) - frac(5, 3) * &b43 + frac(1, 4) * &b21 - int(10) * &b21 * &b43
                    + int(240) * &b31 * &b31
                    - int(40) * &b21 * &b21 * &b21)
        },
    },
    Relation {
        id: "order6_c",
        text: "b67 = 9/2 b69 - 5 b43 + 1/2 b21 + 432 b31^2 - 96 b21^3",
        residual: |t| {
            let (b21, b31, b43) = (b(t, 2, 1), b(t, 3, 1), b(t, 4, 3));
            b(t, 6, 7)
                - (frac(9, 2) * b(t, 6, 9) - int(5) * &b43 + frac(1, 2) * &b21 + int(432) * &b31 * &b31
                    - int(96) * &b21 * &b21 * &b21)
        },
    },
];

/// Other readings of the order-5 relations: the two as typeset and the
/// second with `β_{5,4}` moved to the left. None of them is an identity.
pub const LITERAL_ORDER5_RELATIONS: [Relation; 3] = [
    Relation {
        id: "order5_a_literal",
        text: "b52 = 6 b53 + 27/5 b21 b31 - 2/5 b31",
        residual: |t| {
            b(t, 5, 2) - (int(6) * b(t, 5, 3) + frac(27, 5) * b(t, 2, 1) * b(t, 3, 1) - frac(2, 5) * b(t, 3, 1))
        },
    },
    Relation {
        id: "order5_b_literal",
        text: "b53 = 3/4 b53 + 3/10 b21 b31 - 1/20 b31",
        residual: |t| {
            b(t, 5, 3) - (frac(3, 4) * b(t, 5, 3) + frac(3, 10) * b(t, 2, 1) * b(t, 3, 1) - frac(1, 20) * b(t, 3, 1))
        },
    },
    Relation {
        id: "order5_b_lhs_b54",
        text: "b54 = 3/4 b53 + 3/10 b21 b31 - 1/20 b31",
        residual: |t| {
            b(t, 5, 4) - (frac(3, 4) * b(t, 5, 3) + frac(3, 10) * b(t, 2, 1) * b(t, 3, 1) - frac(1, 20) * b(t, 3, 1))
        },
    },
];

/// Evaluates `relations` on every knot of the grid.
pub fn check_relations(relations: &[Relation], grid: &[TorusKnot]) -> ScanReport {
    let bound = grid.iter().map(|k| k.n.abs().max(k.m.abs())).max().unwrap_or(0);
    let mut report = ScanReport::new("relations", bound);
    let tables: Vec<InvariantTable> = grid.par_iter().map(closed_form_beta).collect();
    for rel in relations {
        let violations = grid
            .iter()
            .zip(&tables)
            .filter_map(|(k, t)| {
                let r = (rel.residual)(t);
                (!r.is_zero()).then(|| Violation { n: k.n, m: Some(k.m), id: rel.id.to_string(), value: r })
            })
            .collect();
        report.entries.push(ScanEntry { id: rel.id.to_string(), checked: grid.len() as u64, violations });
    }
    report
}

pub fn dependency_relations_check(grid: &[TorusKnot]) -> ScanReport {
    check_relations(&RELATIONS, grid)
}

/// Canonical knots with `n <= max_n`, as plain labels.
pub fn canonical_grid(max_n: i64) -> Vec<TorusKnot> {
    canonical_knots(max_n).iter().map(|k| k.knot()).collect()
}

fn coprime_pairs(bound: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for n in -bound..=bound {
        for m in -bound..=bound {
            if n != 0 && m != 0 && n.gcd(&m) == 1 {
                out.push((n, m));
            }
        }
    }
    out
}

/// Checks that every primitive `β` is an integer on all coprime pairs with
/// `|n|, |m| <= bound`. With `include_noncoprime`, also collects the first
/// non-integral value of each primitive `β` on non-coprime pairs.
pub fn integrality_scan(bound: i64, include_noncoprime: bool) -> ScanReport {
    let pairs = coprime_pairs(bound);
    let values: Vec<Vec<Rational>> = pairs.par_iter().map(|&(n, m)| primitive_betas(&TorusKnot::pair(n, m))).collect();
    let mut report = ScanReport::new("integrality", bound);
    for (s, slot) in PRIMITIVE_SLOTS.iter().enumerate() {
        let violations = pairs
            .iter()
            .zip(&values)
            .filter(|(_, v)| !rational::is_integer(&v[s]))
            .map(|(&(n, m), v)| Violation { n, m: Some(m), id: beta_id(*slot), value: v[s].clone() })
            .collect();
        report.entries.push(ScanEntry { id: beta_id(*slot), checked: pairs.len() as u64, violations });
    }
    if include_noncoprime {
        let witnesses = non_integer_witnesses(bound);
        for slot in PRIMITIVE_SLOTS {
            if let Some(w) = witnesses.iter().find(|w| w.id == beta_id(slot)).cloned() {
                report.witnesses.push(w);
            }
        }
    }
    report
}

/// Every non-integral primitive `β` on non-coprime pairs `2 <= n <= m <= max`.
pub fn non_integer_witnesses(max: i64) -> Vec<Violation> {
    let mut pairs = Vec::new();
    for n in 2..=max {
        for m in n..=max {
            if n.gcd(&m) != 1 {
                pairs.push((n, m));
            }
        }
    }
    pairs
        .par_iter()
        .map(|&(n, m)| {
            let values = primitive_betas(&TorusKnot::pair(n, m));
            PRIMITIVE_SLOTS
                .iter()
                .zip(values)
                .filter(|(_, v)| !rational::is_integer(v))
                .map(|(slot, v)| Violation { n, m: Some(m), id: beta_id(*slot), value: v })
                .collect::<Vec<_>>()
        })
        .flatten()
        .collect()
}

/// A divisibility lemma on a single integer: premise and conclusion.
struct Lemma {
    id: &'static str,
    premise: fn(i128) -> bool,
    value: fn(i128) -> i128,
    modulus: i128,
}

const LEMMAS: [Lemma; 9] = [
    Lemma { id: "odd_n_square_minus_one_mod_8", premise: |n| n % 2 != 0, value: |n| n * n - 1, modulus: 8 },
    Lemma { id: "n_not_0_mod_3_square_minus_one_mod_3", premise: |n| n % 3 != 0, value: |n| n * n - 1, modulus: 3 },
    Lemma {
        id: "odd_n_not_0_mod_3_square_minus_one_mod_24",
        premise: |n| n % 2 != 0 && n % 3 != 0,
        value: |n| n * n - 1,
        modulus: 24,
    },
    Lemma {
        id: "odd_n_0_mod_3_cubic_mod_24",
        premise: |n| n % 2 != 0 && n % 3 == 0,
        value: |n| n * (n * n - 1),
        modulus: 24,
    },
    Lemma { id: "cubic_mod_6", premise: |_| true, value: |n| n * (n * n - 1), modulus: 6 },
    Lemma { id: "odd_n_square_plus_one_mod_2", premise: |n| n % 2 != 0, value: |n| n * n + 1, modulus: 2 },
    Lemma {
        id: "n_2_3_mod_5_square_plus_one_mod_5",
        premise: |n| matches!(n % 5, 2 | 3),
        value: |n| n * n + 1,
        modulus: 5,
    },
    Lemma { id: "n_not_0_mod_5_quartic_minus_one_mod_5", premise: |n| n % 5 != 0, value: |n| n.pow(4) - 1, modulus: 5 },
    Lemma {
        id: "odd_n_not_0_mod_3_or_5_quartic_minus_one_mod_240",
        premise: |n| n % 2 != 0 && n % 3 != 0 && n % 5 != 0,
        value: |n| n.pow(4) - 1,
        modulus: 240,
    },
];

/// Pair-level divisibility statements for coprime `(n, m)`.
struct PairClaim {
    id: &'static str,
    value: fn(i128, i128) -> i128,
    modulus: i128,
}

const PAIR_CLAIMS: [PairClaim; 5] = [
    PairClaim { id: "one_label_odd", value: |n, m| (n % 2 == 0 && m % 2 == 0) as i128, modulus: 2 },
    PairClaim { id: "beta_2_1_numerator_mod_24", value: |n, m| (n * n - 1) * (m * m - 1), modulus: 24 },
    PairClaim { id: "beta_3_1_numerator_mod_144", value: |n, m| n * m * (n * n - 1) * (m * m - 1), modulus: 144 },
    PairClaim { id: "beta_4_3_numerator_mod_240", value: |n, m| (n.pow(4) - 1) * (m.pow(4) - 1), modulus: 240 },
    PairClaim {
        id: "beta_4_2_numerator_mod_240",
        value: |n, m| (n * n - 1) * (m * m - 1) * (9 * n * n * m * m - n * n - m * m - 1),
        modulus: 240,
    },
];

/// Verifies the single-integer lemmas for `1 <= |n| <= lemma_bound` and the
/// pair-level statements for coprime `|n|, |m| <= pair_bound`.
pub fn proposition_modular_checks(lemma_bound: i64, pair_bound: i64) -> ScanReport {
    let mut report = ScanReport::new("modular", lemma_bound);
    for lemma in &LEMMAS {
        let mut checked = 0;
        let mut violations = Vec::new();
        for n in (-lemma_bound..=lemma_bound).filter(|&n| n != 0) {
            let n = n as i128;
            if !(lemma.premise)(n) {
                continue;
            }
            checked += 1;
            let r = (lemma.value)(n).rem_euclid(lemma.modulus);
            if r != 0 {
                violations.push(Violation { n: n as i64, m: None, id: lemma.id.into(), value: int(r as i64) });
            }
        }
        report.entries.push(ScanEntry { id: lemma.id.into(), checked, violations });
    }
    let pairs = coprime_pairs(pair_bound);
    for claim in &PAIR_CLAIMS {
        let violations = pairs
            .iter()
            .filter_map(|&(n, m)| {
                let v = (claim.value)(n as i128, m as i128);
                let r = v.rem_euclid(claim.modulus);
                (r != 0).then(|| Violation { n, m: Some(m), id: claim.id.into(), value: int(r as i64) })
            })
            .collect();
        report.entries.push(ScanEntry { id: claim.id.into(), checked: pairs.len() as u64, violations });
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LissajousVerdict {
    /// Odd `β_{2,1}`: the Arf invariant is 1, so the knot is not Lissajous.
    Obstructed,
    Inconclusive,
}

pub fn lissajous_obstruction(knot: &TorusKnot) -> LissajousVerdict {
    if rational::is_odd_integer(&closed_form_beta(knot).get(2, 1)) {
        LissajousVerdict::Obstructed
    } else {
        LissajousVerdict::Inconclusive
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryScalars {
    /// `3(β_{3,1} - β_{2,1})`, only when one label is `±2`.
    pub v3: Option<Rational>,
    /// `(|n|-1)(|m|-1)/2`.
    pub gordian: Rational,
    /// `β_{3,1}² - (2/3) β_{2,1}³`.
    pub curve_residual: Rational,
}

pub fn auxiliary_scalars(knot: &TorusKnot) -> AuxiliaryScalars {
    let t = closed_form_beta(knot);
    let (b21, b31) = (t.get(2, 1), t.get(3, 1));
    let v3 = (knot.n.abs() == 2 || knot.m.abs() == 2).then(|| int(3) * (&b31 - &b21));
    let gordian = frac((knot.n.abs() - 1) * (knot.m.abs() - 1), 2);
    let curve_residual = &b31 * &b31 - frac(2, 3) * &b21 * &b21 * &b21;
    AuxiliaryScalars { v3, gordian, curve_residual }
}

/// `β_{3,1}² / ((2/3) β_{2,1}³)`, which tends to 1 along the image curve.
pub fn curve_ratio(knot: &TorusKnot) -> Option<Rational> {
    let t = closed_form_beta(knot);
    let b21 = t.get(2, 1);
    let den = frac(2, 3) * &b21 * &b21 * &b21;
    (!den.is_zero()).then(|| t.get(3, 1).pow(2) / den)
}

/// Canonical knots with odd `β_{2,1}`, both chiralities.
pub fn lissajous_obstructed(max_n: i64) -> Vec<TorusKnot> {
    canonical_grid(max_n).into_iter().filter(|k| lissajous_obstruction(k) == LissajousVerdict::Obstructed).collect()
}

/// `(β_{2,1}, β_{3,1})` for canonical knots with `n <= max_n`.
pub fn beta_curve(max_n: i64) -> Vec<(TorusKnot, Rational, Rational)> {
    canonical_grid(max_n)
        .into_iter()
        .map(|k| {
            let t = closed_form_beta(&k);
            (k, t.get(2, 1), t.get(3, 1))
        })
        .collect()
}

/// Distance of `r` from 1, for asymptotic checks.
pub fn distance_from_one(r: &Rational) -> Rational {
    (r - int(1)).abs()
}
