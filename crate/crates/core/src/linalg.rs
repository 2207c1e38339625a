//! Dense exact linear algebra over the rationals.

use num_traits::Zero;

use crate::rational::Rational;

/// A dense rational matrix, optionally augmented with a right-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    cols: usize,
    entries: Vec<Vec<Rational>>,
    rhs: Option<Vec<Rational>>,
}

/// Outcome of [`solve_exact`]. `solution` is present only for a consistent
/// system of full column rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub solution: Option<Vec<Rational>>,
    pub rank: usize,
    pub consistent: bool,
}

impl ExactMatrix {
    pub fn new(cols: usize) -> Self {
        Self { cols, entries: Vec::new(), rhs: None }
    }

    pub fn augmented(cols: usize) -> Self {
        Self { cols, entries: Vec::new(), rhs: Some(Vec::new()) }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Self {
        assert_eq!(rows.len(), rhs.len());
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::augmented(cols);
        for (row, b) in rows.into_iter().zip(rhs) {
            m.push_row(row, b);
        }
        m
    }

    /// Appends `row | b`. Panics on a width mismatch or when the matrix is
    /// not augmented.
    pub fn push_row(&mut self, row: Vec<Rational>, b: Rational) {
        assert_eq!(row.len(), self.cols, "row width");
        self.entries.push(row);
        self.rhs.as_mut().expect("matrix is not augmented").push(b);
    }

    pub fn push_coefficients(&mut self, row: Vec<Rational>) {
        assert_eq!(row.len(), self.cols, "row width");
        assert!(self.rhs.is_none(), "augmented matrix needs a right-hand side");
        self.entries.push(row);
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i]
    }

    pub fn rhs(&self) -> Option<&[Rational]> {
        self.rhs.as_deref()
    }

    /// `self * v`.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.entries.iter().map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b)).collect()
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rhs = None;
        work.eliminate().len()
    }

    /// Gauss-Jordan elimination in place; returns pivot columns in row order.
    /// The pivot in each column is the first nonzero entry at or below the
    /// current row.
    fn eliminate(&mut self) -> Vec<usize> {
        let rows = self.entries.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.entries[i][c].is_zero()) else {
                continue;
            };
            self.entries.swap(r, p);
            if let Some(rhs) = self.rhs.as_mut() {
                rhs.swap(r, p);
            }
            let inv = self.entries[r][c].recip();
            for v in self.entries[r].iter_mut() {
                *v *= &inv;
            }
            if let Some(rhs) = self.rhs.as_mut() {
                rhs[r] *= &inv;
            }
            for i in 0..rows {
                if i == r || self.entries[i][c].is_zero() {
                    continue;
                }
                let f = self.entries[i][c].clone();
                let (pivot_row, target) = if i < r {
                    let (head, tail) = self.entries.split_at_mut(r);
                    (&tail[0], &mut head[i])
                } else {
                    let (head, tail) = self.entries.split_at_mut(i);
                    (&head[r], &mut tail[0])
                };
                for (t, p) in target.iter_mut().zip(pivot_row.iter()).skip(c) {
                    *t -= &f * p;
                }
                if let Some(rhs) = self.rhs.as_mut() {
                    let pr = rhs[r].clone();
                    rhs[i] -= &f * pr;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

/// Solves an augmented system exactly, diagnosing rank and consistency.
pub fn solve_exact(system: &ExactMatrix) -> Solution {
    let mut work = system.clone();
    if work.rhs.is_none() {
        work.rhs = Some(vec![Rational::zero(); work.rows()]);
    }
    let pivots = work.eliminate();
    let rank = pivots.len();
    let rhs = work.rhs.as_ref().expect("augmented");
    let consistent = rhs[rank..].iter().all(Zero::is_zero);
    let solution = (consistent && rank == work.cols).then(|| {
        let mut x = vec![Rational::zero(); work.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = rhs[row].clone();
        }
        x
    });
    Solution { solution, rank, consistent }
}
