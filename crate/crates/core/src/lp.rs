//! Exact feasibility of `A x = b, x >= 0` over the rationals.
//!
//! Phase-one simplex on a dense tableau with one artificial column per row
//! and Bland's smallest-index rule, so it terminates on degenerate input.
//! Every answer carries a certificate that is checked before it is returned:
//! a non-negative solution, or a Farkas vector `y` with `y A >= 0` and
//! `y b < 0`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A basic feasible solution.
    Feasible(Vec<BigRational>),
    /// A Farkas certificate of infeasibility.
    Infeasible(Vec<BigRational>),
}

/// A linear system `A x = b` with `x >= 0`.
#[derive(Debug, Clone)]
pub struct System {
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    cols: usize,
}

impl System {
    /// Panics when the row lengths disagree or `rhs` has the wrong length.
    pub fn new(rows: Vec<Vec<BigRational>>, rhs: Vec<BigRational>) -> Self {
        assert_eq!(rows.len(), rhs.len(), "one right-hand side per row");
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged constraint matrix");
        System { rows, rhs, cols }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn solve(&self) -> Feasibility {
        let outcome = phase_one(self);
        debug_assert!(self.verify(&outcome));
        outcome
    }

    /// Re-check a certificate against the original data.
    pub fn verify(&self, outcome: &Feasibility) -> bool {
        match outcome {
            Feasibility::Feasible(x) => {
                x.len() == self.cols
                    && x.iter().all(|v| !v.is_negative())
                    && self.rows.iter().zip(&self.rhs).all(|(row, b)| dot(row, x) == *b)
            }
            Feasibility::Infeasible(y) => {
                y.len() == self.rows.len()
                    && (0..self.cols).all(|j| {
                        let s: BigRational = self.rows.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
                        !s.is_negative()
                    })
                    && dot(y, &self.rhs).is_negative()
            }
        }
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn phase_one(sys: &System) -> Feasibility {
    let m = sys.rows.len();
    let n = sys.cols;
    let width = n + m + 1;
    let rhs_col = n + m;

    // Row signs make every right-hand side non-negative.
    let flip: Vec<bool> = sys.rhs.iter().map(|b| b.is_negative()).collect();
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![BigRational::zero(); width];
        for (cell, a) in row.iter_mut().zip(&sys.rows[i]) {
            *cell = if flip[i] { -a } else { a.clone() };
        }
        row[n + i] = BigRational::one();
        row[rhs_col] = if flip[i] { -&sys.rhs[i] } else { sys.rhs[i].clone() };
        tab.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs for minimizing the sum of artificials; the last entry
    // holds the negated objective value.
    let mut cost = vec![BigRational::zero(); width];
    for j in (0..n).chain(std::iter::once(rhs_col)) {
        cost[j] = -tab.iter().map(|row| &row[j]).sum::<BigRational>();
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[rhs_col] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (pivot_row, _) = leave.expect("phase-one objective is bounded below");
        pivot(&mut tab, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }

    if cost[rhs_col].is_zero() {
        let mut x = vec![BigRational::zero(); n];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < n {
                x[bv] = tab[i][rhs_col].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        // Simplex multipliers are y_i = 1 - reduced cost of artificial i; the
        // Farkas vector is -y, mapped back through the row flips.
        let y = (0..m)
            .map(|i| {
                let yi = BigRational::one() - &cost[n + i];
                if flip[i] {
                    yi
                } else {
                    -yi
                }
            })
            .collect();
        Feasibility::Infeasible(y)
    }
}

fn pivot(tab: &mut [Vec<BigRational>], cost: &mut [BigRational], r: usize, c: usize) {
    let p = tab[r][c].clone();
    for v in tab[r].iter_mut() {
        *v /= &p;
    }
    let pivot_row = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}
