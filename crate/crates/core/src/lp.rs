//! Exact two-phase simplex over Q with Bland's rule.
//!
//! Variables are free; each is split into a difference of two
//! nonnegative columns internally.

use crate::rational::Q;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub rel: Rel,
    pub rhs: Q,
}

impl Constraint {
    pub fn new(coeffs: Vec<Q>, rel: Rel, rhs: Q) -> Self {
        Constraint { coeffs, rel, rhs }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Q, point: Vec<Q> },
}

impl LpOutcome {
    pub fn point(&self) -> Option<&[Q]> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    obj: Vec<Q>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Q {
        &self.rows[r][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Q::one() / &self.rows[r][c];
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (x, p) in self.obj.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes the objective row; `obj[j]` holds reduced costs and
    /// `obj[ncols]` holds minus the current value.
    fn run(&mut self, allowed: &[bool]) -> bool {
        loop {
            let Some(c) = (0..self.ncols).find(|&j| allowed[j] && self.obj[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Q)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][c];
                if a.is_positive() {
                    let ratio = self.rhs(r) / a;
                    let better = match &best {
                        None => true,
                        Some((br, bv)) => {
                            ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br])
                        }
                    };
                    if better {
                        best = Some((r, ratio));
                    }
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }
}

/// Maximizes `objective . x` subject to the constraints, x free.
pub fn maximize(nvars: usize, constraints: &[Constraint], objective: &[Q]) -> LpOutcome {
    assert_eq!(objective.len(), nvars, "objective arity");
    let m = constraints.len();
    let nsplit = 2 * nvars;
    let nslack = constraints.iter().filter(|c| c.rel != Rel::Eq).count();
    let nart = m;
    let ncols = nsplit + nslack + nart;
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut slack_col = nsplit;
    for (i, c) in constraints.iter().enumerate() {
        assert_eq!(c.coeffs.len(), nvars, "constraint arity");
        let mut row = vec![Q::zero(); ncols + 1];
        let flip = c.rhs.is_negative();
        let sgn = if flip { -Q::one() } else { Q::one() };
        for j in 0..nvars {
            row[j] = &sgn * &c.coeffs[j];
            row[nvars + j] = -&row[j];
        }
        let rel = match (c.rel, flip) {
            (Rel::Le, true) => Rel::Ge,
            (Rel::Ge, true) => Rel::Le,
            (r, _) => r,
        };
        match rel {
            Rel::Le => {
                row[slack_col] = Q::one();
                slack_col += 1;
            }
            Rel::Ge => {
                row[slack_col] = -Q::one();
                slack_col += 1;
            }
            Rel::Eq => {}
        }
        row[nsplit + nslack + i] = Q::one();
        row[ncols] = &sgn * &c.rhs;
        rows.push(row);
        basis.push(nsplit + nslack + i);
    }
    // Phase one: maximize minus the sum of artificials.
    let mut obj = vec![Q::zero(); ncols + 1];
    for row in &rows {
        for j in 0..nsplit + nslack {
            obj[j] += &row[j];
        }
        obj[ncols] += &row[ncols];
    }
    let mut t = Tableau { rows, obj, basis, ncols };
    let all = vec![true; ncols];
    t.run(&all);
    if t.obj[ncols].is_positive() {
        return LpOutcome::Infeasible;
    }
    // Drive remaining artificials out of the basis.
    let art_start = nsplit + nslack;
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= art_start {
            if let Some(c) = (0..art_start).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
                r += 1;
            } else {
                t.rows.remove(r);
                t.basis.remove(r);
            }
        } else {
            r += 1;
        }
    }
    // Phase two.
    let mut cost = vec![Q::zero(); ncols + 1];
    for j in 0..nvars {
        cost[j] = objective[j].clone();
        cost[nvars + j] = -objective[j].clone();
    }
    let mut obj = cost.clone();
    for (row, &b) in t.rows.iter().zip(&t.basis) {
        if !cost[b].is_zero() {
            for j in 0..=ncols {
                obj[j] -= &cost[b] * &row[j];
            }
        }
    }
    t.obj = obj;
    let allowed: Vec<bool> = (0..ncols).map(|j| j < art_start).collect();
    if !t.run(&allowed) {
        return LpOutcome::Unbounded;
    }
    let mut split = vec![Q::zero(); ncols];
    for (r, &b) in t.basis.iter().enumerate() {
        split[b] = t.rhs(r).clone();
    }
    let point: Vec<Q> = (0..nvars).map(|j| &split[j] - &split[nvars + j]).collect();
    let value = point.iter().zip(objective).fold(Q::zero(), |a, (x, c)| a + x * c);
    LpOutcome::Optimal { value, point }
}

pub fn feasible_point(nvars: usize, constraints: &[Constraint]) -> Option<Vec<Q>> {
    match maximize(nvars, constraints, &vec![Q::zero(); nvars]) {
        LpOutcome::Optimal { point, .. } => Some(point),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn c(coeffs: &[i64], rel: Rel, rhs: Q) -> Constraint {
        Constraint::new(coeffs.iter().map(|&x| qi(x)).collect(), rel, rhs)
    }

    #[test]
    fn small_max() {
        // max x + y, x + 2y <= 4, 3x + y <= 6, x,y >= 0
        let cons = vec![
            c(&[1, 2], Rel::Le, qi(4)),
            c(&[3, 1], Rel::Le, qi(6)),
            c(&[1, 0], Rel::Ge, qi(0)),
            c(&[0, 1], Rel::Ge, qi(0)),
        ];
        match maximize(2, &cons, &[qi(1), qi(1)]) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, q(14, 5));
                assert_eq!(point, vec![q(8, 5), q(6, 5)]);
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let cons = vec![c(&[1], Rel::Ge, qi(2)), c(&[1], Rel::Le, qi(1))];
        assert_eq!(maximize(1, &cons, &[qi(1)]), LpOutcome::Infeasible);
        let cons = vec![c(&[1], Rel::Ge, qi(-3))];
        assert_eq!(maximize(1, &cons, &[qi(1)]), LpOutcome::Unbounded);
        match maximize(1, &cons, &[qi(-1)]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, qi(3)),
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn equality_and_redundant_rows() {
        let cons = vec![
            c(&[1, 1], Rel::Eq, qi(2)),
            c(&[2, 2], Rel::Eq, qi(4)),
            c(&[1, -1], Rel::Le, qi(0)),
        ];
        match maximize(2, &cons, &[qi(1), qi(0)]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, qi(1)),
            o => panic!("{o:?}"),
        }
    }
}
