//! Slot layout of the order-`i` invariants and the tables that hold them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::knot::TorusKnot;
use crate::rational::{self, Rational};

/// Number of group structures `d_i` at order `i = 0..=6`.
pub const DIMENSIONS: [usize; 7] = [1, 0, 1, 1, 3, 4, 9];

/// Position `(i, j)`: order `i`, group structure `j` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub order: u8,
    pub index: u8,
}

impl Slot {
    pub const fn new(order: u8, index: u8) -> Self {
        Self { order, index }
    }

    pub fn is_primitive(&self) -> bool {
        PRIMITIVE_SLOTS.contains(self)
    }

    /// Stable textual id, e.g. `"6,9"`.
    pub fn id(&self) -> String {
        format!("{},{}", self.order, self.index)
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.order, self.index)
    }
}

const fn s(order: u8, index: u8) -> Slot {
    Slot::new(order, index)
}

/// The twelve slots that are not products of lower-order ones.
pub const PRIMITIVE_SLOTS: [Slot; 12] =
    [s(2, 1), s(3, 1), s(4, 2), s(4, 3), s(5, 2), s(5, 3), s(5, 4), s(6, 5), s(6, 6), s(6, 7), s(6, 8), s(6, 9)];

/// Compound slots and the primitive slots whose product they are.
pub const COMPOUND_SLOTS: [(Slot, &[Slot]); 6] = [
    (s(4, 1), &[s(2, 1), s(2, 1)]),
    (s(5, 1), &[s(2, 1), s(3, 1)]),
    (s(6, 1), &[s(2, 1), s(2, 1), s(2, 1)]),
    (s(6, 2), &[s(3, 1), s(3, 1)]),
    (s(6, 3), &[s(2, 1), s(4, 2)]),
    (s(6, 4), &[s(2, 1), s(4, 3)]),
];

/// Slots of one order, in index order.
pub fn slots(order: u8) -> Vec<Slot> {
    let d = DIMENSIONS.get(order as usize).copied().unwrap_or(0);
    (1..=d as u8).map(|j| Slot::new(order, j)).collect()
}

/// All slots of orders `2..=max_order`.
pub fn slots_through(max_order: u8) -> Vec<Slot> {
    (2..=max_order).flat_map(slots).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    /// Coefficients of the normalized expansion.
    AlphaTilde,
    /// Coefficients of the unnormalized expansion.
    Alpha,
    /// Trefoil-normalized integer form.
    Beta,
}

impl InvariantKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::AlphaTilde => "alpha_tilde",
            Self::Alpha => "alpha",
            Self::Beta => "beta",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    pub kind: InvariantKind,
    pub knot: TorusKnot,
    pub entries: BTreeMap<Slot, Rational>,
}

impl InvariantTable {
    pub fn new(kind: InvariantKind, knot: TorusKnot) -> Self {
        Self { kind, knot, entries: BTreeMap::new() }
    }

    /// Entry `(order, index)`; missing entries read as zero.
    pub fn get(&self, order: u8, index: u8) -> Rational {
        self.entries.get(&Slot::new(order, index)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn at(&self, slot: Slot) -> Rational {
        self.get(slot.order, slot.index)
    }

    pub fn set(&mut self, slot: Slot, value: Rational) {
        self.entries.insert(slot, value);
    }

    pub fn is_complete(&self) -> bool {
        slots_through(6).iter().all(|s| self.entries.contains_key(s))
    }

    /// Keeps only slots with order `<= max_order`.
    pub fn restricted(&self, max_order: u8) -> Self {
        let entries = self.entries.iter().filter(|(s, _)| s.order <= max_order).map(|(s, v)| (*s, v.clone())).collect();
        Self { kind: self.kind, knot: self.knot, entries }
    }

    /// Entries whose values differ from `other`, as `(slot, self, other)`.
    pub fn differences(&self, other: &InvariantTable) -> Vec<(Slot, Rational, Rational)> {
        let mut keys: Vec<Slot> = self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let (a, b) = (self.at(k), other.at(k));
                (a != b).then_some((k, a, b))
            })
            .collect()
    }
}

impl fmt::Display for InvariantTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} for {}", self.kind.name(), self.knot)?;
        for (slot, value) in &self.entries {
            writeln!(f, "  {:<6} {}", slot.to_string(), rational::to_fraction_string(value))?;
        }
        Ok(())
    }
}
