//! Torus knot labels and their equivalences.
//!
//! `{n,m}`, `{m,n}`, `{-n,-m}` and `{-m,-n}` are the same knot; `{n,-m}` is
//! its mirror image. Pairs with `|n| = 1` or `|m| = 1` are the unknot.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusKnot {
    pub n: i64,
    pub m: i64,
}

impl TorusKnot {
    /// A validated torus knot: both labels nonzero and coprime.
    pub fn new(n: i64, m: i64) -> Result<Self> {
        let knot = Self { n, m };
        if knot.is_coprime() {
            Ok(knot)
        } else {
            Err(Error::NotAKnot { n, m })
        }
    }

    /// Any integer pair, for evaluating polynomial closed forms.
    pub const fn pair(n: i64, m: i64) -> Self {
        Self { n, m }
    }

    pub const fn trefoil() -> Self {
        Self { n: 2, m: 3 }
    }

    pub fn is_coprime(&self) -> bool {
        self.n != 0 && self.m != 0 && self.n.gcd(&self.m) == 1
    }

    pub fn is_unknot(&self) -> bool {
        self.n.abs() == 1 || self.m.abs() == 1
    }

    pub fn mirror(&self) -> Self {
        Self { n: self.n, m: -self.m }
    }

    pub fn swapped(&self) -> Self {
        Self { n: self.m, m: self.n }
    }

    /// Equivalent label with `1 <= n <= |m|`, the cheapest orientation for
    /// the polynomial evaluators (their sums run over `n` terms).
    pub fn evaluation_orientation(&self) -> Self {
        let sign = (self.n * self.m).signum();
        let (small, large) =
            if self.n.abs() <= self.m.abs() { (self.n.abs(), self.m.abs()) } else { (self.m.abs(), self.n.abs()) };
        Self { n: small, m: sign * large }
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.n, self.m)
    }
}

/// Representative with `n > |m| >= 2`; the sign of `m` carries chirality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalTorusKnot {
    n: i64,
    m: i64,
}

impl CanonicalTorusKnot {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn knot(&self) -> TorusKnot {
        TorusKnot { n: self.n, m: self.m }
    }
}

impl fmt::Display for CanonicalTorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.knot().fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalForm {
    Unknot,
    Torus(CanonicalTorusKnot),
}

pub fn canonicalize(n: i64, m: i64) -> Result<CanonicalForm> {
    let knot = TorusKnot::new(n, m)?;
    if knot.is_unknot() {
        return Ok(CanonicalForm::Unknot);
    }
    let sign = (n * m).signum();
    let (big, small) = if n.abs() > m.abs() { (n.abs(), m.abs()) } else { (m.abs(), n.abs()) };
    Ok(CanonicalForm::Torus(CanonicalTorusKnot { n: big, m: sign * small }))
}

/// Every canonical knot with `2 < n <= max_n`, both chiralities, in
/// increasing `(n, m)` order.
pub fn canonical_knots(max_n: i64) -> Vec<CanonicalTorusKnot> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for m in -(n - 1)..=(n - 1) {
            if m.abs() >= 2 && n.gcd(&m) == 1 {
                out.push(CanonicalTorusKnot { n, m });
            }
        }
    }
    out
}
