//! Exact linear programming over the rationals.
//!
//! Dense two-phase simplex on systems `A x = b, x >= 0`. Entering column:
//! lowest index with negative reduced cost. Leaving row: minimum ratio, ties
//! broken by the lowest basic variable index. Both rules together (Bland)
//! guarantee termination without any perturbation, and every pivot is exact,
//! so feasibility answers are decisions, not estimates.

use super::rational::Rational;
use num_traits::{One, Signed, Zero};

/// An equality system `A x = b` with the implicit bound `x >= 0`.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    ncols: usize,
    rows: Vec<(Vec<Rational>, Rational)>,
}

impl LinearSystem {
    pub fn new(ncols: usize) -> Self {
        LinearSystem { ncols, rows: Vec::new() }
    }

    pub fn push_row(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.ncols, "row width mismatch");
        self.rows.push((coeffs, rhs));
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }
}

/// Result of an optimisation run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, point: Vec<Rational> },
}

struct Tableau {
    nstruct: usize,
    ncols: usize,
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cost: Vec<Rational>,
}

impl Tableau {
    /// Phase-1 tableau: one artificial column per row, basic at start.
    fn phase1(sys: &LinearSystem) -> Tableau {
        let m = sys.nrows();
        let n = sys.ncols();
        let ncols = n + m;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        for (i, (coeffs, rhs)) in sys.rows.iter().enumerate() {
            let mut row = vec![Rational::zero(); ncols + 1];
            let flip = rhs.is_negative();
            for (j, c) in coeffs.iter().enumerate() {
                row[j] = if flip { -c } else { c.clone() };
            }
            row[n + i] = Rational::one();
            row[ncols] = if flip { -rhs } else { rhs.clone() };
            rows.push(row);
            basis.push(n + i);
        }
        let mut t = Tableau {
            nstruct: n,
            ncols,
            rows,
            basis,
            cost: Vec::new(),
        };
        let mut c = vec![Rational::zero(); ncols];
        for j in n..ncols {
            c[j] = Rational::one();
        }
        t.canonicalize(&c);
        t
    }

    /// Install objective `minimise c . x` and zero the reduced costs of the
    /// basic columns.
    fn canonicalize(&mut self, c: &[Rational]) {
        let mut cost = c.to_vec();
        cost.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() {
                let coef = cost[b].clone();
                let row = &self.rows[i];
                for (cell, r) in cost.iter_mut().zip(row.iter()) {
                    *cell -= &coef * r;
                }
            }
        }
        self.cost = cost;
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = {
            let p = &self.rows[r][c];
            assert!(!p.is_zero());
            p.clone()
        };
        for cell in self.rows[r].iter_mut() {
            *cell = &*cell / &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (cell, p) in row.iter_mut().zip(pivot_row.iter()) {
                *cell -= &f * p;
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (cell, p) in self.cost.iter_mut().zip(pivot_row.iter()) {
                *cell -= &f * p;
            }
        }
        self.basis[r] = c;
    }

    /// Minimise until optimal or unbounded, scanning columns `0..limit`.
    fn run(&mut self, limit: usize) -> bool {
        loop {
            let entering = (0..limit).find(|&j| self.cost[j].is_negative());
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rows[i][self.ncols] / a;
                let better = match &leave {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, c);
        }
    }

    /// Current objective value (valid at optimum of the installed objective).
    fn objective(&self) -> Rational {
        -self.cost[self.ncols].clone()
    }

    fn structural_point(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.nstruct];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.nstruct {
                x[b] = self.rows[i][self.ncols].clone();
            }
        }
        x
    }

    /// Pivot artificial variables out of the basis; drop rows that are
    /// redundant (all-zero over the structural columns). Then forget the
    /// artificial columns entirely.
    fn strip_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.nstruct {
                let col = (0..self.nstruct).find(|&j| !self.rows[i][j].is_zero());
                match col {
                    Some(j) => self.pivot(i, j),
                    None => {
                        // Redundant constraint: its rhs is zero at a feasible
                        // optimum, so the row can go.
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        let n = self.nstruct;
        for row in &mut self.rows {
            let rhs = row.pop().unwrap();
            row.truncate(n);
            row.push(rhs);
        }
        self.ncols = n;
    }
}

/// Does `A x = b, x >= 0` admit a solution?
pub fn feasible(sys: &LinearSystem) -> bool {
    feasible_point(sys).is_some()
}

/// A solution of `A x = b, x >= 0`, if any exists.
pub fn feasible_point(sys: &LinearSystem) -> Option<Vec<Rational>> {
    let mut t = Tableau::phase1(sys);
    let finished = t.run(t.ncols);
    assert!(finished, "phase 1 cannot be unbounded");
    if t.objective().is_zero() {
        Some(t.structural_point())
    } else {
        None
    }
}

/// Maximise `obj . x` over `A x = b, x >= 0`.
pub fn maximize(sys: &LinearSystem, obj: &[Rational]) -> LpOutcome {
    assert_eq!(obj.len(), sys.ncols(), "objective width mismatch");
    let mut t = Tableau::phase1(sys);
    let finished = t.run(t.ncols);
    assert!(finished, "phase 1 cannot be unbounded");
    if !t.objective().is_zero() {
        return LpOutcome::Infeasible;
    }
    t.strip_artificials();
    let c: Vec<Rational> = obj.iter().map(|v| -v).collect();
    t.canonicalize(&c);
    if !t.run(t.nstruct) {
        return LpOutcome::Unbounded;
    }
    // Minimum of -obj equals -(maximum of obj).
    LpOutcome::Optimal {
        value: -t.objective(),
        point: t.structural_point(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::{rat, rat_int};

    fn sys(ncols: usize, rows: &[(&[i64], i64)]) -> LinearSystem {
        let mut s = LinearSystem::new(ncols);
        for (coeffs, rhs) in rows {
            s.push_row(coeffs.iter().map(|&c| rat_int(c)).collect(), rat_int(*rhs));
        }
        s
    }

    #[test]
    fn simplex_split_line() {
        let s = sys(2, &[(&[1, 1], 1)]);
        let x = feasible_point(&s).unwrap();
        assert_eq!(&x[0] + &x[1], rat_int(1));
        assert!(!x[0].is_negative() && !x[1].is_negative());
    }

    #[test]
    fn negative_sum_is_infeasible() {
        let s = sys(2, &[(&[1, 1], -1)]);
        assert!(!feasible(&s));
    }

    #[test]
    fn inconsistent_rows_are_infeasible() {
        let s = sys(1, &[(&[1], 1), (&[1], 2)]);
        assert!(!feasible(&s));
    }

    #[test]
    fn redundant_rows_are_fine() {
        let s = sys(1, &[(&[1], 1), (&[1], 1), (&[2], 2)]);
        assert_eq!(feasible_point(&s), Some(vec![rat_int(1)]));
    }

    #[test]
    fn maximize_on_a_segment() {
        let s = sys(2, &[(&[1, 1], 1)]);
        let out = maximize(&s, &[rat_int(1), rat_int(0)]);
        assert_eq!(
            out,
            LpOutcome::Optimal { value: rat_int(1), point: vec![rat_int(1), rat_int(0)] }
        );
    }

    #[test]
    fn maximize_detects_unbounded_rays() {
        let s = sys(2, &[(&[1, -1], 0)]);
        assert_eq!(maximize(&s, &[rat_int(1), rat_int(0)]), LpOutcome::Unbounded);
    }

    #[test]
    fn maximize_reports_infeasible() {
        let s = sys(1, &[(&[0], 5)]);
        assert_eq!(maximize(&s, &[rat_int(1)]), LpOutcome::Infeasible);
    }

    #[test]
    fn fractional_optimum_is_exact() {
        // x + 3y = 1, maximise y: optimum 1/3.
        let s = sys(2, &[(&[1, 3], 1)]);
        match maximize(&s, &[rat_int(0), rat_int(1)]) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, rat(1, 3));
                assert_eq!(point, vec![rat_int(0), rat(1, 3)]);
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn zero_columns_zero_rows() {
        assert!(feasible(&LinearSystem::new(0)));
        let s = sys(0, &[(&[], 3)]);
        assert!(!feasible(&s));
        let free = LinearSystem::new(1);
        assert_eq!(maximize(&free, &[rat_int(1)]), LpOutcome::Unbounded);
    }
}
