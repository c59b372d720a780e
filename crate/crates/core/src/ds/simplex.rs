//! Phase-I simplex over exact rationals.
//!
//! Decides whether `A x = b, x >= 0` has a solution and returns a basic one.
//! One artificial variable per row starts as the basis; the sum of the
//! artificials is minimised with Bland's rule, which cannot cycle. The system
//! is feasible exactly when that minimum is zero. Redundant rows are fine:
//! their artificials simply stay basic at level zero.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

struct Tableau {
    /// `rows x (vars + rows + 1)`; the last column is the right-hand side.
    cells: Vec<Vec<Rational>>,
    /// Reduced costs of the phase-I objective, same width as a row.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    vars: usize,
}

impl Tableau {
    fn width(&self) -> usize {
        self.cost.len()
    }

    fn rhs(&self) -> usize {
        self.width() - 1
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.cells[row][col].clone();
        for v in self.cells[row].iter_mut() {
            *v /= &piv;
        }
        let pivot_row = self.cells[row].clone();
        let eliminate = |target: &mut Vec<Rational>| {
            let factor = target[col].clone();
            if factor.is_zero() {
                return;
            }
            for (t, p) in target.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *t -= &factor * p;
                }
            }
        };
        for (r, cells) in self.cells.iter_mut().enumerate() {
            if r != row {
                eliminate(cells);
            }
        }
        eliminate(&mut self.cost);
        self.basis[row] = col;
    }

    /// Bland: lowest-index column with negative reduced cost.
    fn entering(&self) -> Option<usize> {
        (0..self.rhs()).find(|&j| self.cost[j].is_negative())
    }

    /// Minimum ratio test, ties to the lowest basic variable index.
    fn leaving(&self, col: usize) -> Option<usize> {
        let rhs = self.rhs();
        let mut best: Option<(usize, Rational)> = None;
        for (r, cells) in self.cells.iter().enumerate() {
            if !cells[col].is_positive() {
                continue;
            }
            let ratio = &cells[rhs] / &cells[col];
            let better = match &best {
                None => true,
                Some((br, bratio)) => {
                    ratio < *bratio || (ratio == *bratio && self.basis[r] < self.basis[*br])
                }
            };
            if better {
                best = Some((r, ratio));
            }
        }
        best.map(|(r, _)| r)
    }
}

/// Returns some `x >= 0` with `A x = b`, or `None` if there is none.
///
/// `a` is row-major with `vars` columns per row.
pub(crate) fn find_feasible(
    a: &[Vec<Rational>],
    b: &[Rational],
    vars: usize,
) -> Option<Vec<Rational>> {
    let rows = a.len();
    debug_assert_eq!(rows, b.len());
    let width = vars + rows + 1;
    let mut cells = Vec::with_capacity(rows);
    for (r, (row, rhs)) in a.iter().zip(b).enumerate() {
        debug_assert_eq!(row.len(), vars);
        let flip = rhs.is_negative();
        let mut line = vec![Rational::zero(); width];
        for (j, v) in row.iter().enumerate() {
            line[j] = if flip { -v } else { v.clone() };
        }
        line[vars + r] = Rational::from_integer(1.into());
        line[width - 1] = if flip { -rhs } else { rhs.clone() };
        cells.push(line);
    }
    // Phase-I cost is 1 on each artificial; price out the initial basis.
    let mut cost = vec![Rational::zero(); width];
    for line in &cells {
        for j in 0..vars {
            cost[j] -= &line[j];
        }
        cost[width - 1] -= &line[width - 1];
    }
    let mut t = Tableau {
        cells,
        cost,
        basis: (vars..vars + rows).collect(),
        vars,
    };
    while let Some(col) = t.entering() {
        // Phase-I objective is bounded below by zero, so a leaving row exists.
        let row = t.leaving(col).expect("phase-I objective is bounded");
        t.pivot(row, col);
    }
    let rhs = t.rhs();
    if !t.cost[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); t.vars];
    for (r, &var) in t.basis.iter().enumerate() {
        if var < t.vars {
            x[var] = t.cells[r][rhs].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_int, parse_rational};

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn check(a: &[Vec<Rational>], b: &[Rational], x: &[Rational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (row, rhs) in a.iter().zip(b) {
            let lhs: Rational = row.iter().zip(x).map(|(p, v)| p * v).sum();
            assert_eq!(&lhs, rhs);
        }
    }

    #[test]
    fn simple_feasible_system() {
        // x + y = 1, x - y = 1/2
        let a = vec![
            vec![from_int(1), from_int(1)],
            vec![from_int(1), from_int(-1)],
        ];
        let b = vec![from_int(1), q("1/2")];
        let x = find_feasible(&a, &b, 2).unwrap();
        assert_eq!(x, vec![q("3/4"), q("1/4")]);
        check(&a, &b, &x);
    }

    #[test]
    fn infeasible_sign() {
        // x + y = -1 has no non-negative solution
        let a = vec![vec![from_int(1), from_int(1)]];
        assert!(find_feasible(&a, &[from_int(-1)], 2).is_none());
    }

    #[test]
    fn redundant_rows() {
        let a = vec![
            vec![from_int(1), from_int(1), from_int(0)],
            vec![from_int(2), from_int(2), from_int(0)],
            vec![from_int(0), from_int(1), from_int(1)],
        ];
        let b = vec![from_int(1), from_int(2), from_int(1)];
        let x = find_feasible(&a, &b, 3).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn inconsistent_rows() {
        let a = vec![
            vec![from_int(1), from_int(1)],
            vec![from_int(1), from_int(1)],
        ];
        assert!(find_feasible(&a, &[from_int(1), from_int(2)], 2).is_none());
    }

    #[test]
    fn degenerate_system_terminates() {
        // A classic cycling-prone shape under the textbook rule.
        let a = vec![
            vec![q("1/4"), from_int(-8), from_int(-1), from_int(9)],
            vec![q("1/2"), from_int(-12), q("-1/2"), from_int(3)],
            vec![from_int(0), from_int(0), from_int(1), from_int(0)],
        ];
        let b = vec![from_int(0), from_int(0), from_int(1)];
        let x = find_feasible(&a, &b, 4).unwrap();
        check(&a, &b, &x);
    }
}
