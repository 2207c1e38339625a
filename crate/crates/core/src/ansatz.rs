//! The `g_ij` ansatz: the coefficient of `x^i` in a normalized torus-knot
//! series is a fixed prefactor times a symmetric polynomial in `n², m²`
//! whose coefficients `g_ij` depend only on the group parameter.
//!
//! [`fit_ansatz`] recovers the `g_ij` exactly: at each parameter value it
//! solves for them over a grid of knots, then interpolates in `N` (or in
//! `A = -j(j+2)/4` for SU(2)). [`printed_table`] holds the reference
//! tables, transcribed literally, for comparison.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{GroupFamily, GroupInstance};
use crate::invariants::Slot;
use crate::knot::TorusKnot;
use crate::linalg::{solve_exact, ExactMatrix};
use crate::poly::{interpolate_poly, ExactPoly};
use crate::polynomials::{coefficient_or_zero, normalized_series, Precision};
use crate::rational::{frac, int, Rational};
use crate::MAX_ORDER;

/// Number of `g` slots at each order 0..=6.
pub const ANSATZ_LAYOUT: [usize; 7] = [0, 0, 1, 1, 3, 3, 6];

/// Knots used to fit the ansatz at each group parameter.
pub const FIT_GRID: [(i64, i64); 10] = [(2, 3), (2, 5), (2, 7), (2, 9), (3, 4), (3, 5), (4, 5), (5, 6), (3, 8), (4, 7)];

/// Monomials in `a = n², b = m²` multiplying `g_{i,1..}`.
fn monomials(order: u8, knot: &TorusKnot) -> Vec<Rational> {
    let a = int(knot.n * knot.n);
    let b = int(knot.m * knot.m);
    let ab = &a * &b;
    let mut out = vec![Rational::from_integer(1.into())];
    if order >= 4 {
        out.push(&a + &b);
        out.push(ab.clone());
    }
    if order >= 6 {
        out.push(&ab * (&a + &b));
        out.push(&a * &a + &b * &b);
        out.push(&ab * &ab);
    }
    out
}

/// `(n²-1)(m²-1)`, times `nm` at odd orders.
pub fn prefactor(order: u8, knot: &TorusKnot) -> Rational {
    let base = int(knot.n * knot.n - 1) * int(knot.m * knot.m - 1);
    if order % 2 == 1 {
        base * int(knot.n * knot.m)
    } else {
        base
    }
}

/// Fitted `g_ij` for one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsatzFit {
    pub family: GroupFamily,
    /// Keyed by `(order, index)`, index 1-based as in [`ANSATZ_LAYOUT`].
    pub g: BTreeMap<Slot, ExactPoly>,
}

impl AnsatzFit {
    pub fn get(&self, order: u8, index: u8) -> Option<&ExactPoly> {
        self.g.get(&Slot::new(order, index))
    }

    /// Coefficient of `x^order` predicted for `knot` at the interpolation
    /// variable `value` (`N`, or `A` for SU(2)).
    pub fn coefficient(&self, value: &Rational, knot: &TorusKnot, order: u8) -> Rational {
        if order == 0 {
            return int(1);
        }
        let sum = monomials(order, knot)
            .iter()
            .enumerate()
            .map(|(k, mono)| match self.get(order, k as u8 + 1) {
                Some(g) => g.evaluate(value) * mono,
                None => Rational::zero(),
            })
            .fold(Rational::zero(), |acc, v| acc + v);
        prefactor(order, knot) * sum
    }
}

/// Fit parameters for one family.
struct FitPlan {
    variable: &'static str,
    parameters: Vec<i64>,
    max_degree: usize,
}

fn fit_plan(family: GroupFamily) -> Result<FitPlan> {
    match family {
        GroupFamily::SuN => Ok(FitPlan { variable: "N", parameters: (2..=10).collect(), max_degree: 6 }),
        GroupFamily::SoN => Ok(FitPlan { variable: "N", parameters: (7..=15).collect(), max_degree: 6 }),
        GroupFamily::Su2 => Ok(FitPlan { variable: "A", parameters: (1..=7).collect(), max_degree: 3 }),
        GroupFamily::SuNxSu2 => Err(Error::Unsupported("the ansatz is fitted per simple family".into())),
    }
}

fn instance(family: GroupFamily, parameter: i64) -> Result<GroupInstance> {
    match family {
        GroupFamily::SuN => GroupInstance::su_n(parameter),
        GroupFamily::SoN => GroupInstance::so_n(parameter),
        _ => GroupInstance::su2(parameter),
    }
}

/// `A = -j(j+2)/4`.
pub fn spin_variable(j: i64) -> Rational {
    frac(-j * (j + 2), 4)
}

fn variable_value(family: GroupFamily, parameter: i64) -> Rational {
    match family {
        GroupFamily::Su2 => spin_variable(parameter),
        _ => int(parameter),
    }
}

/// Solves for the `g` values at one parameter, order by order.
fn fit_at(family: GroupFamily, parameter: i64, precision: Precision) -> Result<BTreeMap<Slot, Rational>> {
    let group = instance(family, parameter)?;
    let knots: Vec<TorusKnot> = FIT_GRID.iter().map(|&(n, m)| TorusKnot::pair(n, m)).collect();
    let series = knots.iter().map(|k| normalized_series(k, &group, precision)).collect::<Result<Vec<_>>>()?;
    let mut out = BTreeMap::new();
    for order in 1..=precision.order as u8 {
        let width = ANSATZ_LAYOUT[order as usize];
        if width == 0 {
            if let Some(k) = series.iter().position(|s| !coefficient_or_zero(s, order as i64).is_zero()) {
                return Err(Error::AnsatzMismatch(format!("{group}: x^{order} coefficient nonzero for {}", knots[k])));
            }
            continue;
        }
        let mut system = ExactMatrix::augmented(width);
        for (k, s) in knots.iter().zip(&series) {
            system.push_row(monomials(order, k), coefficient_or_zero(s, order as i64) / prefactor(order, k));
        }
        let solution = solve_exact(&system);
        if !solution.consistent {
            return Err(Error::AnsatzMismatch(format!("{group}: order {order} coefficients do not fit the ansatz")));
        }
        let Some(values) = solution.solution else {
            return Err(Error::RankDeficient { order, rank: solution.rank, unknowns: width });
        };
        for (index, v) in values.into_iter().enumerate() {
            out.insert(Slot::new(order, index as u8 + 1), v);
        }
    }
    Ok(out)
}

/// Fits every `g_ij` of `family` through `precision.order`.
pub fn fit_ansatz(family: GroupFamily, precision: Precision) -> Result<AnsatzFit> {
    if precision.order > MAX_ORDER as i64 {
        return Err(Error::Unsupported(format!("truncation order {}", precision.order)));
    }
    let plan = fit_plan(family)?;
    let samples = plan
        .parameters
        .par_iter()
        .map(|&p| Ok((variable_value(family, p), fit_at(family, p, precision)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut g = BTreeMap::new();
    for slot in samples[0].1.keys() {
        let points: Vec<(Rational, Rational)> =
            samples.iter().map(|(x, vals)| (x.clone(), vals[slot].clone())).collect();
        let poly = interpolate_poly(plan.variable, &points, plan.max_degree)
            .map_err(|e| Error::AnsatzMismatch(format!("g{slot} of {}: {e}", family.name())))?;
        g.insert(*slot, poly);
    }
    Ok(AnsatzFit { family, g })
}

/// One entry of a reference table, read literally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedEntry {
    pub slot: Slot,
    pub text: &'static str,
    pub poly: ExactPoly,
    /// Set when the printed form is known to be garbled.
    pub suspected_typo: Option<&'static str>,
}

type Row = ((u8, u8), &'static str, i64, i64, &'static [i64], Option<&'static str>);

const SU_N_TABLE: [Row; 14] = [
    ((2, 1), "-(N^2-1)/24", -1, 24, &[-1, 0, 1], None),
    ((3, 1), "-N(N^2-1)/144", -1, 144, &[0, -1, 0, 1], None),
    ((4, 1), "(7N^4-10N^2+3)/5760", 1, 5760, &[3, 0, -10, 0, 7], None),
    ((4, 2), "-(3N^4-10N^2+7)/5760", -1, 5760, &[7, 0, -10, 0, 3], None),
    ((4, 3), "-(N^4-1)/1920", -1, 1920, &[-1, 0, 0, 0, 1], None),
    ((5, 1), "N(29N^4-60N^2+31)/86400", 1, 86400, &[0, 31, 0, -60, 0, 29], None),
    ((5, 2), "-N(11N^4-40N^2+29)/86400", -1, 86400, &[0, 29, 0, -40, 0, 11], None),
    (
        (5, 3),
        "-N(N^4-10N+11)/86400",
        -1,
        86400,
        &[0, 11, -10, 0, 0, 1],
        Some("the N^2 term is printed as N; every other SU(N) entry is even or odd in N"),
    ),
    ((6, 1), "-(31N^6-49N^4+21N^2-3)/967680", -1, 967680, &[-3, 0, 21, 0, -49, 0, 31], None),
    ((6, 2), "(9N^6-35N^4+35N^2-9)/483840", 1, 483840, &[-9, 0, 35, 0, -35, 0, 9], None),
    ((6, 3), "(55N^6-98N^4-35N^2+78)/1451520", 1, 1451520, &[78, 0, -35, 0, -98, 0, 55], None),
    ((6, 4), "-(22N^6-77N^4+28N^2+27)/1451520", -1, 1451520, &[27, 0, 28, 0, -77, 0, 22], None),
    ((6, 5), "-(3N^6-21N^4+49N^2-31)/967680", -1, 967680, &[-31, 0, 49, 0, -21, 0, 3], None),
    ((6, 6), "(5N^6-49N^4+35N^2+9)/2903040", 1, 2903040, &[9, 0, 35, 0, -49, 0, 5], None),
];

const SO_N_TABLE: [Row; 14] = [
    ((2, 1), "-(N^2-3N+2)/96", -1, 96, &[2, -3, 1], None),
    ((3, 1), "-(N-2)^2(N-1)/1152", -1, 1152, &[-4, 8, -5, 1], None),
    ((4, 1), "(7N^4-45N^3+110N^2-120N+48)/92160", 1, 92160, &[48, -120, 110, -45, 7], None),
    ((4, 2), "-(3N^4-15N^3+20N^2-8)/92160", -1, 92160, &[-8, 0, 20, -15, 3], None),
    ((4, 3), "-(3N^4-25N^3+70N^2-80N+32)/92160", -1, 92160, &[32, -80, 70, -25, 3], None),
    (
        (5, 1),
        "(58N^5-469N^4+1455N^3-2120N^2+1412N-336)/5529600",
        1,
        5529600,
        &[-336, 1412, -2120, 1455, -469, 58],
        None,
    ),
    ((5, 2), "-(22N^5-141N^4+295N^3-180N^2-92N+96)/5529600", -1, 5529600, &[96, -92, -180, 295, -141, 22], None),
    ((5, 3), "-(2N^5-51N^4+245N^3-480N^2+428N-144)/5529600", -1, 5529600, &[-144, 428, -480, 245, -51, 2], None),
    (
        (6, 1),
        "-(31N^6-315N^5+1358N^4-3150N^3+4116N^2-2856N+816)/61931520",
        -1,
        61931520,
        &[816, -2856, 4116, -3150, 1358, -315, 31],
        None,
    ),
    (
        (6, 2),
        "(18N^6-147N^5+455N^4-630N^3+280N^2+168N-144)/61931520",
        1,
        61931520,
        &[-144, 168, 280, -630, 455, -147, 18],
        None,
    ),
    (
        (6, 3),
        "(550N^6-5768N^5+23443N^4-46865N^3+47740N^2-22652N+3552)/928972800",
        1,
        928972800,
        &[3552, -22652, 47740, -46865, 23443, -5768, 550],
        None,
    ),
    (
        (6, 4),
        "-(220N^6-1757N^5+5152N^4-6335N^3+1540N^2+3052N-1872)/928972800",
        -1,
        928972800,
        &[-1872, 3052, 1540, -6335, 5152, -1757, 220],
        None,
    ),
    ((6, 5), "-(3N^6-21N^5+42N^4-56N^2+32)/61931520", -1, 61931520, &[32, 0, -56, 0, 42, -21, 3], None),
    (
        (6, 6),
        "(25N^6+112N^5-1442N^4+4585N^3-6860N^2+5068N-1488)/928972800",
        1,
        928972800,
        &[-1488, 5068, -6860, 4585, -1442, 112, 25],
        None,
    ),
];

const SU2_TABLE: [Row; 14] = [
    ((2, 1), "A/6", 1, 6, &[0, 1], None),
    ((3, 1), "A/18", 1, 18, &[0, 1], None),
    ((4, 1), "A(7A-1)/360", 1, 360, &[0, -1, 7], None),
    ((4, 2), "-A(3A+1)/360", -1, 360, &[0, 1, 3], None),
    ((4, 3), "A(7A+9)/360", 1, 360, &[0, 9, 7], None),
    ((5, 1), "A(10A-1)/1080", 1, 1080, &[0, -1, 10], None),
    ((5, 2), "-A(6A+3)/1080", -1, 1080, &[0, 3, 6], None),
    ((5, 3), "A(18A+15)/1080", 1, 1080, &[0, 15, 18], None),
    (
        (6, 1),
        "A(155A^2-55A^2+5)/75600",
        1,
        75600,
        &[0, 5, 0, 100],
        Some("two A^2 terms and no A term; the second A^2 presumably stands for A"),
    ),
    ((6, 2), "-A(90A^2+20A-5)/75600", -1, 75600, &[0, -5, 20, 90], None),
    (
        (6, 3),
        "A(260A^2+358A-9))/75600",
        1,
        75600,
        &[0, -9, 358, 260],
        Some("unbalanced parenthesis; read with the extra parenthesis dropped"),
    ),
    ((6, 4), "-A(90A^2+342A+184)/75600", -1, 75600, &[0, 184, 342, 90], None),
    ((6, 5), "A(15A^2+15A+5)/75600", 1, 75600, &[0, 5, 15, 15], None),
    ((6, 6), "A(155A^2+1023A+691)/75600", 1, 75600, &[0, 691, 1023, 155], None),
];

/// The reference `g` table of a family, each entry read literally.
pub fn printed_table(family: GroupFamily) -> Result<Vec<PrintedEntry>> {
    let (rows, variable): (&[Row], &str) = match family {
        GroupFamily::SuN => (&SU_N_TABLE, "N"),
        GroupFamily::SoN => (&SO_N_TABLE, "N"),
        GroupFamily::Su2 => (&SU2_TABLE, "A"),
        GroupFamily::SuNxSu2 => return Err(Error::Unsupported("no table for product groups".into())),
    };
    Ok(rows
        .iter()
        .map(|&((order, index), text, sign, den, coeffs, typo)| PrintedEntry {
            slot: Slot::new(order, index),
            text,
            poly: ExactPoly::from_ints(variable, coeffs, frac(sign, den)),
            suspected_typo: typo,
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryStatus {
    /// Fitted polynomial equals the printed one.
    Match,
    /// A suspected typo whose literal reading the fit confirms anyway.
    TypoButMatches,
    /// A suspected typo; the fit differs and is taken as authoritative.
    TypoDiffers,
    /// An entry not flagged as a typo that the fit contradicts.
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryComparison {
    pub slot: Slot,
    pub printed_text: &'static str,
    pub printed: ExactPoly,
    pub fitted: ExactPoly,
    pub note: Option<&'static str>,
    pub status: EntryStatus,
}

/// Compares a fit with the reference table entry by entry.
pub fn compare_with_printed(fit: &AnsatzFit) -> Result<Vec<EntryComparison>> {
    let printed = printed_table(fit.family)?;
    printed
        .into_iter()
        .map(|entry| {
            let fitted = fit
                .g
                .get(&entry.slot)
                .cloned()
                .ok_or_else(|| Error::Unsupported(format!("fit does not reach g{}", entry.slot)))?;
            let equal = fitted == entry.poly;
            let status = match (entry.suspected_typo.is_some(), equal) {
                (false, true) => EntryStatus::Match,
                (true, true) => EntryStatus::TypoButMatches,
                (true, false) => EntryStatus::TypoDiffers,
                (false, false) => EntryStatus::Mismatch,
            };
            Ok(EntryComparison {
                slot: entry.slot,
                printed_text: entry.text,
                printed: entry.poly,
                fitted,
                note: entry.suspected_typo,
                status,
            })
        })
        .collect()
}
