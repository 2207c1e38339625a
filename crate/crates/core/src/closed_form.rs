//! Closed-form polynomial tables for `α̃_ij`, `α_ij` and `β_ij`.
//!
//! These are evaluated directly from the published polynomials in `n, m`
//! and serve as oracles for the series-and-solve pipeline. The `α̃_{4,2}`
//! entry uses the `n↔m`-symmetric reading `9 n² m²`.

use num_traits::One;

use crate::invariants::{InvariantKind, InvariantTable, Slot, COMPOUND_SLOTS, PRIMITIVE_SLOTS};
use crate::knot::TorusKnot;
use crate::rational::{frac, int, Rational};

/// Integer factors applied on top of the trefoil normalization.
pub const BETA_FACTORS: [(Slot, i64); 12] = [
    (Slot::new(2, 1), 1),
    (Slot::new(3, 1), 1),
    (Slot::new(4, 2), 31),
    (Slot::new(4, 3), 5),
    (Slot::new(5, 2), 11),
    (Slot::new(5, 3), 1),
    (Slot::new(5, 4), 1),
    (Slot::new(6, 5), 5071),
    (Slot::new(6, 6), 29),
    (Slot::new(6, 7), 1531),
    (Slot::new(6, 8), 17),
    (Slot::new(6, 9), 271),
];

pub fn beta_factor(slot: Slot) -> Option<i64> {
    BETA_FACTORS.iter().find(|(s, _)| *s == slot).map(|(_, f)| *f)
}

/// Powers of `n²` and `m²` and the recurring factors.
struct Vars {
    nm: Rational,
    n2: Rational,
    m2: Rational,
    a: Rational,
    b: Rational,
}

impl Vars {
    fn new(knot: &TorusKnot) -> Self {
        let n = int(knot.n);
        let m = int(knot.m);
        let n2 = &n * &n;
        let m2 = &m * &m;
        Self { nm: &n * &m, a: &n2 - int(1), b: &m2 - int(1), n2, m2 }
    }

    /// `(n²-1)(m²-1)`
    fn ab(&self) -> Rational {
        &self.a * &self.b
    }

    /// `(n⁴-1)(m⁴-1)`
    fn ab4(&self) -> Rational {
        self.ab() * (&self.n2 + int(1)) * (&self.m2 + int(1))
    }

    /// `c1 n⁴m⁴ + c2 (n²m⁴ + n⁴m²) + c3 n²m² + c4 (n⁴+m⁴) + c5 (n²+m²) + c6`
    fn sym6(&self, c: [i64; 6]) -> Rational {
        let (n2, m2) = (&self.n2, &self.m2);
        let p = n2 * m2;
        int(c[0]) * &p * &p
            + int(c[1]) * &p * (n2 + m2)
            + int(c[2]) * &p
            + int(c[3]) * (n2 * n2 + m2 * m2)
            + int(c[4]) * (n2 + m2)
            + int(c[5])
    }

    /// Even-order unnormalized form in `n⁶m⁶, n⁴m⁶+n⁶m⁴, n⁴m⁴, n²m⁶+n⁶m²,
    /// n²m⁴+n⁴m², n⁶+m⁶, n²m²`.
    fn sym_alpha6(&self, c: [i64; 7]) -> Rational {
        let (n2, m2) = (&self.n2, &self.m2);
        let (n4, m4) = (n2 * n2, m2 * m2);
        let (n6, m6) = (&n4 * n2, &m4 * m2);
        int(c[0]) * &n6 * &m6
            + int(c[1]) * (&n4 * &m6 + &n6 * &m4)
            + int(c[2]) * &n4 * &m4
            + int(c[3]) * (n2 * &m6 + &n6 * m2)
            + int(c[4]) * (n2 * &m4 + &n4 * m2)
            + int(c[5]) * (&n6 + &m6)
            + int(c[6]) * n2 * m2
    }
}

fn fill_compounds(table: &mut InvariantTable, factorials: bool) {
    for (slot, parts) in COMPOUND_SLOTS {
        let mut v = parts.iter().fold(Rational::one(), |acc, s| acc * table.at(*s));
        if factorials {
            // α̃ compounds carry 1/k! for a k-fold repeated factor.
            v = match (slot.order, slot.index) {
                (4, 1) | (6, 2) => v * frac(1, 2),
                (6, 1) => v * frac(1, 6),
                _ => v,
            };
        }
        table.set(slot, v);
    }
}

/// The eighteen `α̃_ij` of orders 2..=6.
pub fn closed_form_alpha_tilde(knot: &TorusKnot) -> InvariantTable {
    let v = Vars::new(knot);
    let ab = v.ab();
    let nm_ab = &v.nm * &ab;
    let mut t = InvariantTable::new(InvariantKind::AlphaTilde, *knot);
    let (n2, m2) = (&v.n2, &v.m2);
    t.set(Slot::new(2, 1), &ab * frac(1, 6));
    t.set(Slot::new(3, 1), &nm_ab * frac(1, 18));
    t.set(Slot::new(4, 1), &ab * &ab * frac(1, 72));
    t.set(Slot::new(4, 2), &ab * (int(9) * n2 * m2 - m2 - n2 - int(1)) * frac(1, 360));
    t.set(Slot::new(4, 3), v.ab4() * frac(1, 360));
    t.set(Slot::new(5, 1), &nm_ab * &ab * frac(1, 108));
    t.set(Slot::new(5, 2), &nm_ab * (int(69) * n2 * m2 - int(21) * (n2 + m2) - int(11)) * frac(1, 5400));
    t.set(Slot::new(5, 3), &nm_ab * (int(11) * n2 * m2 + n2 + m2 - int(9)) * frac(1, 5400));
    t.set(Slot::new(5, 4), &v.nm * v.ab4() * frac(1, 900));
    t.set(Slot::new(6, 1), &ab * &ab * &ab * frac(1, 1296));
    t.set(Slot::new(6, 2), &ab * &ab * n2 * m2 * frac(1, 648));
    t.set(Slot::new(6, 3), &ab * &ab * (int(9) * n2 * m2 - n2 - m2 - int(1)) * frac(1, 2160));
    t.set(Slot::new(6, 4), &ab * &ab * (n2 + int(1)) * (m2 + int(1)) * frac(1, 2160));
    t.set(Slot::new(6, 5), &ab * v.sym6([516, -289, -44, 5, 5, 5]) * frac(1, 75600));
    t.set(Slot::new(6, 6), &ab * v.sym6([53, -101, -115, -24, -24, -24]) * frac(1, 90720));
    t.set(Slot::new(6, 7), &ab * v.sym6([419, 209, -1, 20, 20, 20]) * frac(1, 226800));
    t.set(Slot::new(6, 8), &ab * v.sym6([13, 13, 13, -50, -50, -50]) * frac(1, 453600));
    t.set(Slot::new(6, 9), &ab * v.sym6([31, 31, 31, 10, 10, 10]) * frac(1, 151200));
    t
}

/// The `α_ij` of orders 2..=6: printed even-order primitives, odd orders
/// equal to `α̃`, compounds from the primitives.
pub fn closed_form_alpha(knot: &TorusKnot) -> InvariantTable {
    let v = Vars::new(knot);
    let tilde = closed_form_alpha_tilde(knot);
    let (n2, m2) = (&v.n2, &v.m2);
    let (n4, m4) = (n2 * n2, m2 * m2);
    let mut t = InvariantTable::new(InvariantKind::Alpha, *knot);
    t.set(Slot::new(2, 1), (n2 * m2 - n2 - m2) * frac(1, 6));
    for odd in [Slot::new(3, 1), Slot::new(5, 2), Slot::new(5, 3), Slot::new(5, 4)] {
        t.set(odd, tilde.at(odd));
    }
    t.set(
        Slot::new(4, 2),
        (int(9) * &n4 * &m4 - int(10) * (n2 * &m4 + &n4 * m2) + (&n4 + &m4) + int(10) * n2 * m2) * frac(1, 360),
    );
    t.set(Slot::new(4, 3), (&n4 * &m4 - &n4 - &m4) * frac(1, 360));
    t.set(Slot::new(6, 5), v.sym_alpha6([516, -805, 1050, 294, -245, -5, -49]) * frac(1, 75600));
    t.set(Slot::new(6, 6), v.sym_alpha6([53, -154, 140, 77, 14, 24, -91]) * frac(1, 90720));
    t.set(Slot::new(6, 7), v.sym_alpha6([419, -210, 0, -189, 210, -20, -21]) * frac(1, 226800));
    t.set(Slot::new(6, 8), v.sym_alpha6([13, 0, 0, -63, 0, 50, 63]) * frac(1, 453600));
    t.set(Slot::new(6, 9), v.sym_alpha6([31, 0, 0, -21, 0, -10, 21]) * frac(1, 151200));
    fill_compounds(&mut t, true);
    t
}

/// The `β_ij` polynomials in `n, m`, compounds as plain products.
pub fn closed_form_beta(knot: &TorusKnot) -> InvariantTable {
    let v = Vars::new(knot);
    let ab = v.ab();
    let nm_ab = &v.nm * &ab;
    let (n2, m2) = (&v.n2, &v.m2);
    let mut t = InvariantTable::new(InvariantKind::Beta, *knot);
    t.set(Slot::new(2, 1), &ab * frac(1, 24));
    t.set(Slot::new(3, 1), &nm_ab * frac(1, 144));
    t.set(Slot::new(4, 2), &ab * (int(9) * n2 * m2 - n2 - m2 - int(1)) * frac(1, 240));
    t.set(Slot::new(4, 3), v.ab4() * frac(1, 240));
    t.set(Slot::new(5, 2), &nm_ab * (int(69) * n2 * m2 - int(21) * (n2 + m2) - int(11)) * frac(1, 28800));
    t.set(Slot::new(5, 3), &nm_ab * (int(11) * n2 * m2 + n2 + m2 - int(9)) * frac(1, 57600));
    t.set(Slot::new(5, 4), &v.nm * v.ab4() * frac(1, 7200));
    t.set(Slot::new(6, 5), &ab * v.sym6([516, -289, -44, 5, 5, 5]) * frac(1, 2520));
    t.set(Slot::new(6, 6), &ab * v.sym6([53, -101, -115, -24, -24, -24]) * frac(1, 12096));
    t.set(Slot::new(6, 7), &ab * v.sym6([419, 209, -1, 20, 20, 20]) * frac(1, 10080));
    t.set(Slot::new(6, 8), &ab * v.sym6([13, 13, 13, -50, -50, -50]) * frac(1, 25200));
    t.set(Slot::new(6, 9), &ab * v.sym6([31, 31, 31, 10, 10, 10]) * frac(1, 5040));
    fill_compounds(&mut t, false);
    t
}

/// Rescales a complete `α̃` table by the trefoil values and integer factors.
pub fn beta_from_alpha_tilde(table: &InvariantTable, trefoil: &InvariantTable) -> InvariantTable {
    let mut t = InvariantTable::new(InvariantKind::Beta, table.knot);
    for slot in PRIMITIVE_SLOTS {
        let factor = int(beta_factor(slot).expect("primitive slot has a factor"));
        t.set(slot, factor * table.at(slot) / trefoil.at(slot));
    }
    fill_compounds(&mut t, false);
    t
}

/// Just the primitive `β` values, in [`PRIMITIVE_SLOTS`] order, for scans.
pub fn primitive_betas(knot: &TorusKnot) -> Vec<Rational> {
    let table = closed_form_beta(knot);
    PRIMITIVE_SLOTS.iter().map(|s| table.at(*s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_tilde_examples() {
        let t = closed_form_alpha_tilde(&TorusKnot::trefoil());
        assert_eq!(t.get(2, 1), int(4));
        assert_eq!(t.get(3, 1), int(8));
        assert_eq!(t.get(4, 2), frac(62, 3));
        assert_eq!(t.get(4, 3), frac(10, 3));
        assert_eq!(t.get(5, 2), frac(176, 3));
        assert_eq!(closed_form_alpha_tilde(&TorusKnot::pair(2, 5)).get(2, 1), int(12));
        let unknot = closed_form_alpha_tilde(&TorusKnot::pair(1, 7));
        assert!(unknot.entries.values().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn alpha_tilde_compounds_carry_factorials() {
        let t = closed_form_alpha_tilde(&TorusKnot::pair(3, 5));
        assert_eq!(t.get(4, 1), t.get(2, 1) * t.get(2, 1) * frac(1, 2));
        assert_eq!(t.get(5, 1), t.get(2, 1) * t.get(3, 1));
        assert_eq!(t.get(6, 1), t.get(2, 1) * t.get(2, 1) * t.get(2, 1) * frac(1, 6));
        assert_eq!(t.get(6, 2), t.get(3, 1) * t.get(3, 1) * frac(1, 2));
        assert_eq!(t.get(6, 3), t.get(2, 1) * t.get(4, 2));
        assert_eq!(t.get(6, 4), t.get(2, 1) * t.get(4, 3));
    }

    #[test]
    fn alpha_examples() {
        let t = closed_form_alpha(&TorusKnot::trefoil());
        assert_eq!(t.get(2, 1), frac(23, 6));
        assert_eq!(t.get(3, 1), int(8));
        assert_eq!(t.get(4, 1), frac(529, 72));
    }

    #[test]
    fn trefoil_betas_are_the_normalizers() {
        let t = closed_form_beta(&TorusKnot::trefoil());
        for (slot, factor) in BETA_FACTORS {
            assert_eq!(t.at(slot), int(factor), "{slot}");
        }
    }

    #[test]
    fn beta_examples() {
        let b = closed_form_beta(&TorusKnot::pair(2, 5));
        assert_eq!(b.get(2, 1), int(3));
        assert_eq!(b.get(3, 1), int(5));
        assert_eq!(closed_form_beta(&TorusKnot::pair(2, 2)).get(2, 1), frac(3, 8));
        assert_eq!(closed_form_beta(&TorusKnot::pair(4, 3)).get(3, 1), int(10));
    }

    #[test]
    fn beta_routes_agree() {
        let trefoil = closed_form_alpha_tilde(&TorusKnot::trefoil());
        for (n, m) in [(2, 3), (2, 7), (3, 4), (5, -7), (4, 9), (6, 11)] {
            let k = TorusKnot::pair(n, m);
            assert_eq!(beta_from_alpha_tilde(&closed_form_alpha_tilde(&k), &trefoil), closed_form_beta(&k));
        }
    }
}
