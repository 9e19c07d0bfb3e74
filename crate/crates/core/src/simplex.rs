//! Exact rational simplex for small feasibility and optimization problems
//! in standard form: maximize `c.x` subject to `A x = b`, `x >= 0`.
//!
//! Two-phase dense tableau with Bland's anti-cycling rule, so every run
//! terminates. Infeasible problems yield a Farkas certificate `y` with
//! `y.A >= 0` componentwise and `y.b < 0`; optimal solutions come with the
//! dual vector for the equality constraints.

use num_traits::{One, Signed, Zero};

use crate::rational::Rat;

#[derive(Debug, Clone)]
pub struct StandardLp {
    /// m x n constraint matrix.
    pub a: Vec<Vec<Rat>>,
    /// right-hand side, length m.
    pub b: Vec<Rat>,
    /// objective, length n (maximized).
    pub c: Vec<Rat>,
}

#[derive(Debug, Clone)]
pub enum LpOutcome {
    Optimal {
        value: Rat,
        x: Vec<Rat>,
        /// dual values of the equality constraints (c_B B^-1, original row signs)
        dual: Vec<Rat>,
    },
    Infeasible {
        /// y with y.A >= 0 componentwise and y.b < 0
        farkas: Vec<Rat>,
    },
    Unbounded,
}

struct Tableau {
    /// m rows of width n + m + 1 (original, artificial, rhs)
    rows: Vec<Vec<Rat>>,
    /// column index of the basic variable per row
    basis: Vec<usize>,
    n: usize,
    m: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rat {
        &self.rows[i][self.n + self.m]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let lead = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v = &*v / &lead;
        }
        for r in 0..self.m {
            if r != row && !self.rows[r][col].is_zero() {
                let factor = self.rows[r][col].clone();
                for c in 0..self.rows[r].len() {
                    let delta = &self.rows[row][c] * &factor;
                    self.rows[r][c] = &self.rows[r][c] - &delta;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Runs simplex to optimality for the given costs (length n + m).
    /// `enterable` masks columns allowed to enter the basis.
    /// Returns false if unbounded.
    fn optimize(&mut self, costs: &[Rat], enterable: &[bool]) -> bool {
        loop {
            // Bland: first enterable column with positive reduced cost
            // (reduced_j = c_j - c_B^T T_j with T_j the current tableau column)
            let mut entering = None;
            for j in 0..self.n + self.m {
                if !enterable[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = costs[j].clone();
                for i in 0..self.m {
                    if !self.rows[i][j].is_zero() {
                        reduced -= &costs[self.basis[i]] * &self.rows[i][j];
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else {
                return true;
            };
            // ratio test, Bland ties by smallest basis column
            let mut leaving: Option<(usize, Rat)> = None;
            for i in 0..self.m {
                if self.rows[i][col].is_positive() {
                    let ratio = self.rhs(i) / &self.rows[i][col];
                    match &leaving {
                        None => leaving = Some((i, ratio)),
                        Some((best_row, best_ratio)) => {
                            if ratio < *best_ratio
                                || (ratio == *best_ratio && self.basis[i] < self.basis[*best_row])
                            {
                                leaving = Some((i, ratio));
                            }
                        }
                    }
                }
            }
            let Some((row, _)) = leaving else {
                return false;
            };
            self.pivot(row, col);
        }
    }

    /// Dual vector c_B B^-1, read off the artificial block.
    fn dual(&self, costs: &[Rat]) -> Vec<Rat> {
        (0..self.m)
            .map(|i| {
                let mut acc = Rat::zero();
                for r in 0..self.m {
                    if !self.rows[r][self.n + i].is_zero() {
                        acc += &costs[self.basis[r]] * &self.rows[r][self.n + i];
                    }
                }
                acc
            })
            .collect()
    }

    fn objective(&self, costs: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.m {
            acc += &costs[self.basis[i]] * self.rhs(i);
        }
        acc
    }
}

pub fn solve(lp: &StandardLp) -> LpOutcome {
    let m = lp.b.len();
    let n = lp.c.len();
    assert!(lp.a.len() == m && lp.a.iter().all(|r| r.len() == n));

    // orient rows so the right-hand side is non-negative
    let row_sign: Vec<bool> = lp.b.iter().map(|v| v.is_negative()).collect();
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Rat> = Vec::with_capacity(n + m + 1);
        for j in 0..n {
            row.push(if row_sign[i] { -lp.a[i][j].clone() } else { lp.a[i][j].clone() });
        }
        for j in 0..m {
            row.push(if i == j { Rat::one() } else { Rat::zero() });
        }
        row.push(if row_sign[i] { -lp.b[i].clone() } else { lp.b[i].clone() });
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        n,
        m,
    };

    // phase 1: maximize minus the sum of artificials
    let mut phase1_costs = vec![Rat::zero(); n + m];
    for j in n..n + m {
        phase1_costs[j] = -Rat::one();
    }
    let enterable_all = vec![true; n + m];
    let bounded = t.optimize(&phase1_costs, &enterable_all);
    debug_assert!(bounded, "phase 1 is bounded by construction");
    let phase1_value = t.objective(&phase1_costs);
    if phase1_value.is_negative() {
        // infeasible: y = c_B B^-1 satisfies y.A' >= 0, y.b' < 0; undo row signs
        let y = t.dual(&phase1_costs);
        let farkas = (0..m)
            .map(|i| if row_sign[i] { -y[i].clone() } else { y[i].clone() })
            .collect();
        return LpOutcome::Infeasible { farkas };
    }

    // phase 2: real objective, artificials may stay basic at zero but may
    // not re-enter
    let mut phase2_costs = vec![Rat::zero(); n + m];
    phase2_costs[..n].clone_from_slice(&lp.c);
    let mut enterable = vec![true; n + m];
    for e in enterable.iter_mut().skip(n) {
        *e = false;
    }
    if !t.optimize(&phase2_costs, &enterable) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rat::zero(); n];
    for i in 0..m {
        if t.basis[i] < n {
            x[t.basis[i]] = t.rhs(i).clone();
        }
    }
    let y = t.dual(&phase2_costs);
    let dual = (0..m)
        .map(|i| if row_sign[i] { -y[i].clone() } else { y[i].clone() })
        .collect();
    LpOutcome::Optimal {
        value: t.objective(&phase2_costs),
        x,
        dual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn lp(a: Vec<Vec<i64>>, b: Vec<i64>, c: Vec<i64>) -> StandardLp {
        StandardLp {
            a: a.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
            b: b.into_iter().map(rat).collect(),
            c: c.into_iter().map(rat).collect(),
        }
    }

    #[test]
    fn feasible_optimum() {
        // max x1 + x2 s.t. x1 + x2 + s = 4, x1 - x2 = 0
        let p = lp(
            vec![vec![1, 1, 1], vec![1, -1, 0]],
            vec![4, 0],
            vec![1, 1, 0],
        );
        match solve(&p) {
            LpOutcome::Optimal { value, x, .. } => {
                assert_eq!(value, rat(4));
                assert_eq!(x[0], rat(2));
                assert_eq!(x[1], rat(2));
            }
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_with_farkas() {
        // x1 + x2 = -1 with x >= 0 is infeasible
        let p = lp(vec![vec![1, 1]], vec![-1], vec![0, 0]);
        match solve(&p) {
            LpOutcome::Infeasible { farkas } => {
                // y.A >= 0 componentwise and y.b < 0
                let ya0 = &farkas[0] * rat(1);
                assert!(!ya0.is_negative());
                let yb = &farkas[0] * rat(-1);
                assert!(yb.is_negative());
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn farkas_on_equality_system() {
        // x1 - x2 = 1, x2 - x1 = 1: inconsistent
        let p = lp(vec![vec![1, -1], vec![-1, 1]], vec![1, 1], vec![0, 0]);
        match solve(&p) {
            LpOutcome::Infeasible { farkas } => {
                // verify y.A >= 0 and y.b < 0 against the original data
                for j in 0..2 {
                    let col = &farkas[0] * &p.a[0][j] + &farkas[1] * &p.a[1][j];
                    assert!(!col.is_negative());
                }
                let yb = &farkas[0] * &p.b[0] + &farkas[1] * &p.b[1];
                assert!(yb.is_negative());
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_detected() {
        // max x1 with x1 - x2 = 0: ray (t, t)
        let p = lp(vec![vec![1, -1]], vec![0], vec![1, 0]);
        assert!(matches!(solve(&p), LpOutcome::Unbounded));
    }

    #[test]
    fn dual_matches_value() {
        // max 3x1 + x2, x1 + x2 = 2: optimum at x = (2, 0), dual y = 3
        let p = lp(vec![vec![1, 1]], vec![2], vec![3, 1]);
        match solve(&p) {
            LpOutcome::Optimal { value, dual, .. } => {
                assert_eq!(value, rat(6));
                // strong duality: y.b = value
                assert_eq!(&dual[0] * &p.b[0], rat(6));
            }
            other => panic!("expected optimum, got {other:?}"),
        }
    }
}
