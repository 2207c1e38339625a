//! Casimir tables and the group factors `r_ij` built from them.
//!
//! Conventions: generators normalized so `Tr(T_a T_b) = -δ_ab / 2` in the
//! fundamental representation. The SU(2) table is a polynomial in
//! `σ(σ+1)` where `σ = j/2` is the spin of the `(j+1)`-dimensional
//! representation, so that `C2 = C3 = -j(j+2)/4`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{Slot, COMPOUND_SLOTS};
use crate::rational::{self, frac, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupFamily {
    /// SU(N), fundamental representation (HOMFLY).
    SuN,
    /// SO(N), fundamental representation (Kauffman).
    SoN,
    /// SU(2), spin j/2 (Jones / Akutsu-Wadati).
    Su2,
    /// SU(N) x SU(2), fundamental times spin j/2.
    SuNxSu2,
}

impl GroupFamily {
    pub fn name(&self) -> &'static str {
        match self {
            Self::SuN => "su_n",
            Self::SoN => "so_n",
            Self::Su2 => "su2",
            Self::SuNxSu2 => "su_n_x_su2",
        }
    }
}

/// A concrete group and representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupInstance {
    family: GroupFamily,
    big_n: Option<i64>,
    j: Option<i64>,
}

impl GroupInstance {
    pub fn su_n(big_n: i64) -> Result<Self> {
        if big_n < 2 {
            return Err(Error::InvalidGroup(format!("SU(N) needs N >= 2, got {big_n}")));
        }
        Ok(Self { family: GroupFamily::SuN, big_n: Some(big_n), j: None })
    }

    pub fn so_n(big_n: i64) -> Result<Self> {
        if big_n < 5 {
            return Err(Error::InvalidGroup(format!("SO(N) needs N >= 5, got {big_n}")));
        }
        Ok(Self { family: GroupFamily::SoN, big_n: Some(big_n), j: None })
    }

    pub fn su2(j: i64) -> Result<Self> {
        if j < 1 {
            return Err(Error::InvalidGroup(format!("SU(2) needs j >= 1, got {j}")));
        }
        Ok(Self { family: GroupFamily::Su2, big_n: None, j: Some(j) })
    }

    pub fn su_n_x_su2(big_n: i64, j: i64) -> Result<Self> {
        Self::su_n(big_n)?;
        Self::su2(j)?;
        Ok(Self { family: GroupFamily::SuNxSu2, big_n: Some(big_n), j: Some(j) })
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn big_n(&self) -> Option<i64> {
        self.big_n
    }

    pub fn spin_label(&self) -> Option<i64> {
        self.j
    }

    /// Rate in `t = exp(scale * x)`: 1 for SU(N) and SU(2), 1/2 for SO(N).
    pub fn substitution_scale(&self) -> Rational {
        match self.family {
            GroupFamily::SoN => frac(1, 2),
            _ => Rational::one(),
        }
    }

    /// The simple factors of a product group, or the group itself.
    pub fn factors(&self) -> Vec<GroupInstance> {
        match self.family {
            GroupFamily::SuNxSu2 => vec![
                Self { family: GroupFamily::SuN, big_n: self.big_n, j: None },
                Self { family: GroupFamily::Su2, big_n: None, j: self.j },
            ],
            _ => vec![*self],
        }
    }

    pub fn casimir_sets(&self) -> Vec<CasimirSet> {
        self.factors()
            .iter()
            .map(|g| match g.family {
                GroupFamily::SuN => CasimirSet::su_n(g.big_n.unwrap_or_default()),
                GroupFamily::SoN => CasimirSet::so_n(g.big_n.unwrap_or_default()),
                _ => CasimirSet::su2(g.j.unwrap_or_default()),
            })
            .collect()
    }

    /// Classical dimension `d(R)`.
    pub fn dim(&self) -> Rational {
        self.casimir_sets().iter().fold(Rational::one(), |acc, c| acc * &c.dim)
    }

    pub fn group_factors(&self) -> Result<GroupFactorVector> {
        group_factor_vector(&self.casimir_sets())
    }
}

impl fmt::Display for GroupInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.big_n, self.j) {
            (GroupFamily::SuN, Some(n), _) => write!(f, "SU({n})"),
            (GroupFamily::SoN, Some(n), _) => write!(f, "SO({n})"),
            (GroupFamily::Su2, _, Some(j)) => write!(f, "SU(2)[j={j}]"),
            (GroupFamily::SuNxSu2, Some(n), Some(j)) => write!(f, "SU({n})xSU(2)[j={j}]"),
            _ => write!(f, "{:?}", self.family),
        }
    }
}

/// Casimir values of one simple group in one representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirSet {
    pub c2: Rational,
    pub c3: Rational,
    pub c4: Rational,
    pub c5: Rational,
    pub c6_1: Rational,
    pub c6_2: Rational,
    pub dim: Rational,
}

impl CasimirSet {
    pub fn su_n(big_n: i64) -> Self {
        let n = int(big_n);
        let n2 = &n * &n;
        let a = &n2 - int(1);
        Self {
            c2: -&a / (int(2) * &n),
            c3: -&a * frac(1, 4),
            c4: &a * (&n2 + int(2)) * frac(1, 16),
            c5: &n * &a * (&n2 + int(1)) * frac(1, 32),
            c6_1: &a * (&n2 * &n2 + &n2 + int(2)) * frac(1, 64),
            c6_2: &a * (int(3) * &n2 - int(2)) * frac(1, 64),
            dim: n,
        }
    }

    pub fn so_n(big_n: i64) -> Self {
        let n = int(big_n);
        let n2 = &n * &n;
        let base = (&n - int(1)) * (&n - int(2));
        Self {
            c2: -(&n - int(1)) * frac(1, 4),
            c3: -&base * frac(1, 16),
            c4: &base * (&n2 - int(5) * &n + int(10)) * frac(1, 256),
            c5: &base * (&n2 * &n - int(7) * &n2 + int(17) * &n - int(10)) * frac(1, 1024),
            c6_1: &base * (&n2 - int(7) * &n + int(14)) * (&n2 - int(2) * &n + int(3)) * frac(1, 4096),
            c6_2: &base * (&n - int(3)) * (int(7) * &n - int(18)) * frac(1, 4096),
            dim: n,
        }
    }

    /// Spin `j/2` representation; the table is evaluated at `σ = j/2`.
    pub fn su2(j: i64) -> Self {
        let sigma = frac(j, 2);
        let q = &sigma * (&sigma + int(1));
        let q2 = &q * &q;
        let q3 = &q2 * &q;
        Self {
            c2: -q.clone(),
            c3: -q.clone(),
            c4: int(2) * &q2,
            c5: int(3) * &q2 - &q,
            c6_1: int(2) * &q3 + int(3) * &q2 - int(2) * &q,
            c6_2: int(-2) * &q3 + int(5) * &q2 - int(2) * &q,
            dim: int(j + 1),
        }
    }
}

/// Casimirs of a simple family at an integer parameter (`N` or `j`).
pub fn casimirs(family: GroupFamily, parameter: i64) -> Result<CasimirSet> {
    match family {
        GroupFamily::SuN if parameter >= 2 => Ok(CasimirSet::su_n(parameter)),
        GroupFamily::SoN if parameter >= 3 => Ok(CasimirSet::so_n(parameter)),
        GroupFamily::Su2 if parameter >= 1 => Ok(CasimirSet::su2(parameter)),
        GroupFamily::SuNxSu2 => Err(Error::InvalidGroup("product groups have one Casimir set per factor".into())),
        _ => Err(Error::InvalidGroup(format!("{} does not accept parameter {parameter}", family.name()))),
    }
}

/// Group factors `r_ij` for orders 0..=6, indexed like the invariant tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFactorVector {
    pub values: BTreeMap<Slot, Rational>,
    pub dim: Rational,
}

impl GroupFactorVector {
    pub fn get(&self, order: u8, index: u8) -> Rational {
        self.values.get(&Slot::new(order, index)).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Builds `r_ij` from the Casimirs of each simple factor: primitive factors
/// are sums over factors of Casimir monomials, compound ones are products of
/// primitive ones.
pub fn group_factor_vector(sets: &[CasimirSet]) -> Result<GroupFactorVector> {
    assert!(!sets.is_empty(), "a group has at least one simple factor");
    for (l, c) in sets.iter().enumerate() {
        if c.c2.is_zero() {
            return Err(Error::ZeroCasimirDivision { factor: l });
        }
    }
    let sum = |f: &dyn Fn(&CasimirSet) -> Rational| sets.iter().map(f).fold(Rational::zero(), |a, b| a + b);
    let p = rational::pow;
    let mut values = BTreeMap::new();
    values.insert(Slot::new(0, 1), Rational::one());
    values.insert(Slot::new(2, 1), sum(&|c| c.c3.clone()));
    values.insert(Slot::new(3, 1), sum(&|c| p(&c.c3, 2) / &c.c2));
    values.insert(Slot::new(4, 2), sum(&|c| p(&c.c3, 3) * p(&c.c2, -2)));
    values.insert(Slot::new(4, 3), sum(&|c| c.c4.clone()));
    values.insert(Slot::new(5, 2), sum(&|c| p(&c.c3, 4) * p(&c.c2, -3)));
    values.insert(Slot::new(5, 3), sum(&|c| &c.c4 * &c.c3 / &c.c2));
    values.insert(Slot::new(5, 4), sum(&|c| c.c5.clone()));
    values.insert(Slot::new(6, 5), sum(&|c| p(&c.c3, 5) * p(&c.c2, -4)));
    values.insert(Slot::new(6, 6), sum(&|c| &c.c4 * p(&c.c3, 2) * p(&c.c2, -2)));
    values.insert(Slot::new(6, 7), sum(&|c| &c.c5 * &c.c3 / &c.c2));
    values.insert(Slot::new(6, 8), sum(&|c| c.c6_1.clone()));
    values.insert(Slot::new(6, 9), sum(&|c| c.c6_2.clone()));
    for (slot, parts) in COMPOUND_SLOTS {
        let v = parts.iter().fold(Rational::one(), |acc, s| acc * &values[s]);
        values.insert(slot, v);
    }
    let dim = sets.iter().fold(Rational::one(), |acc, c| acc * &c.dim);
    Ok(GroupFactorVector { values, dim })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su_n_values() {
        let c = CasimirSet::su_n(2);
        assert_eq!(c.c2, frac(-3, 4));
        assert_eq!(c.c3, frac(-3, 4));
        assert_eq!(c.c4, frac(9, 8));
        assert_eq!(c.dim, int(2));
    }

    #[test]
    fn so_n_values() {
        assert_eq!(CasimirSet::so_n(5).c3, frac(-3, 4));
        assert_eq!(CasimirSet::so_n(5).c2, int(-1));
    }

    #[test]
    fn su2_matches_su_n_at_two() {
        assert_eq!(CasimirSet::su2(1), CasimirSet::su_n(2));
        // C2 = -j(j+2)/4
        for j in 1..8 {
            assert_eq!(CasimirSet::su2(j).c2, frac(-j * (j + 2), 4));
        }
    }

    #[test]
    fn single_factor_vector() {
        let r = group_factor_vector(&[CasimirSet::su_n(3)]).unwrap();
        assert_eq!(r.get(0, 1), int(1));
        assert_eq!(r.get(2, 1), int(-2));
        assert_eq!(r.get(4, 1), r.get(2, 1) * r.get(2, 1));
        assert_eq!(r.get(1, 1), int(0));
        let c = CasimirSet::su_n(3);
        assert_eq!(r.get(3, 1) * &c.c2, &c.c3 * &c.c3);
    }

    #[test]
    fn compound_relations() {
        let r = GroupInstance::su_n_x_su2(3, 2).unwrap().group_factors().unwrap();
        let g = |i, j| r.get(i, j);
        assert_eq!(g(4, 1), g(2, 1) * g(2, 1));
        assert_eq!(g(5, 1), g(2, 1) * g(3, 1));
        assert_eq!(g(6, 1), g(2, 1) * g(2, 1) * g(2, 1));
        assert_eq!(g(6, 2), g(3, 1) * g(3, 1));
        assert_eq!(g(6, 3), g(2, 1) * g(4, 2));
        assert_eq!(g(6, 4), g(2, 1) * g(4, 3));
    }

    #[test]
    fn product_sums_primitives() {
        let r = GroupInstance::su_n_x_su2(2, 1).unwrap().group_factors().unwrap();
        assert_eq!(r.get(2, 1), frac(-3, 2));
        assert_eq!(r.dim, int(4));

        let single = group_factor_vector(&[CasimirSet::so_n(7)]).unwrap();
        let double = group_factor_vector(&[CasimirSet::so_n(7), CasimirSet::so_n(7)]).unwrap();
        for slot in crate::invariants::PRIMITIVE_SLOTS {
            assert_eq!(double.values[&slot], int(2) * &single.values[&slot]);
        }
        assert_eq!(double.dim, int(49));
    }

    #[test]
    fn zero_c2_is_rejected() {
        let mut c = CasimirSet::su_n(2);
        c.c2 = int(0);
        assert_eq!(group_factor_vector(&[c]), Err(Error::ZeroCasimirDivision { factor: 0 }));
    }

    #[test]
    fn instance_validation() {
        assert!(GroupInstance::su_n(1).is_err());
        assert!(GroupInstance::so_n(4).is_err());
        assert!(GroupInstance::su2(0).is_err());
        assert!(GroupInstance::su_n_x_su2(2, 0).is_err());
        assert!(casimirs(GroupFamily::SoN, 3).is_ok());
        assert!(casimirs(GroupFamily::SuNxSu2, 3).is_err());
        assert_eq!(GroupInstance::so_n(7).unwrap().substitution_scale(), frac(1, 2));
        assert_eq!(GroupInstance::su_n_x_su2(3, 2).unwrap().dim(), int(9));
    }
}
