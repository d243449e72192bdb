//! Exact rational linear programming for open-region feasibility.
//!
//! The one exported question: does a system of equalities, weak
//! inequalities, and strict inequalities have a point satisfying every
//! strict row with positive slack? Answered by slack maximization:
//! maximize t subject to (strict rows relaxed by t, t ≤ 1); the open
//! region is nonempty iff the optimum is positive. All pivoting is over
//! `BigRational`, so the verdict is exact and the returned point is an
//! exact rational interior point.

use num::{One, Signed, Zero};

use super::LinearSystem;
use crate::lenvec::Rat;

/// Dantzig pricing runs this many iterations before switching to Bland's
/// rule, which cannot cycle.
const DANTZIG_LIMIT: usize = 200;
const ITERATION_CAP: usize = 100_000;

struct Tableau {
    rows: Vec<Vec<Rat>>, // m rows, each n_cols coefficients then rhs
    basis: Vec<usize>,
    n_cols: usize,
    art_start: usize, // columns ≥ this are phase-1 artificials
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rat {
        &self.rows[r][self.n_cols]
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let p = self.rows[r][e].clone();
        debug_assert!(!p.is_zero());
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let f = self.rows[i][e].clone();
            for c in 0..=self.n_cols {
                let delta = &f * &self.rows[r][c];
                self.rows[i][c] = &self.rows[i][c] - delta;
            }
        }
        self.basis[r] = e;
    }

    /// Maximize the objective with reduced costs `obj` (updated in place),
    /// starting from the current basic feasible solution. Returns the
    /// objective gain; the caller tracks absolute values.
    fn optimize(&mut self, obj: &mut Vec<Rat>, allow_artificial: bool) -> Rat {
        let mut gain = Rat::zero();
        for iter in 0..ITERATION_CAP {
            let limit = if allow_artificial { self.n_cols } else { self.art_start };
            let entering = if iter < DANTZIG_LIMIT {
                (0..limit)
                    .filter(|&j| obj[j].is_positive())
                    .max_by(|&a, &b| obj[a].cmp(&obj[b]).then(b.cmp(&a)))
            } else {
                (0..limit).find(|&j| obj[j].is_positive())
            };
            let Some(e) = entering else {
                return gain;
            };
            // ratio test; ties by smallest basis variable (Bland-compatible)
            let mut leave: Option<(usize, Rat)> = None;
            for r in 0..self.rows.len() {
                if !self.rows[r][e].is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / &self.rows[r][e];
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < *lratio || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let (r, _) = leave.expect("objective is bounded by construction");
            self.pivot(r, e);
            // same elimination applied to the objective row
            let f = obj[e].clone();
            for c in 0..self.n_cols {
                let delta = &f * &self.rows[r][c];
                obj[c] = &obj[c] - delta;
            }
            gain += &f * self.rhs(r);
        }
        panic!("simplex did not terminate within {ITERATION_CAP} iterations");
    }
}

/// Search for a rational point satisfying every constraint of `sys`, with
/// strictly positive slack on every strict row. Returns `None` exactly when
/// no such point exists. Deterministic for fixed input.
pub fn feasible_interior(sys: &LinearSystem) -> Option<Vec<Rat>> {
    let n = sys.n_vars;
    // columns: u_i, v_i (x_i = u_i − v_i), t, one slack per inequality row
    let t_col = 2 * n;
    let n_slacks = sys.weak.len() + sys.strict.len() + 1; // + the t ≤ 1 row
    let n_real = 2 * n + 1 + n_slacks;
    let m = sys.equalities.len() + n_slacks;
    let n_cols = n_real + m; // artificials appended
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);

    let push_row = |coeffs: Vec<(usize, Rat)>, rhs: Rat, rows: &mut Vec<Vec<Rat>>| {
        let mut row = vec![Rat::zero(); n_cols + 1];
        for (c, v) in coeffs {
            row[c] = v;
        }
        row[n_cols] = rhs;
        rows.push(row);
    };

    let split = |c: &[Rat]| -> Vec<(usize, Rat)> {
        let mut out = Vec::new();
        for (i, v) in c.iter().enumerate() {
            if !v.is_zero() {
                out.push((i, v.clone()));
                out.push((n + i, -v.clone()));
            }
        }
        out
    };

    let mut slack = 2 * n + 1;
    for eq in &sys.equalities {
        push_row(split(&eq.coeffs), eq.rhs.clone(), &mut rows);
    }
    for w in &sys.weak {
        let mut coeffs = split(&w.coeffs);
        coeffs.push((slack, -Rat::one()));
        slack += 1;
        push_row(coeffs, w.rhs.clone(), &mut rows);
    }
    for s in &sys.strict {
        let mut coeffs = split(&s.coeffs);
        coeffs.push((t_col, -Rat::one()));
        coeffs.push((slack, -Rat::one()));
        slack += 1;
        push_row(coeffs, s.rhs.clone(), &mut rows);
    }
    push_row(vec![(t_col, Rat::one()), (slack, Rat::one())], Rat::one(), &mut rows);

    // b ≥ 0 normalization, then an identity block of artificials
    let mut basis = Vec::with_capacity(m);
    for (r, row) in rows.iter_mut().enumerate() {
        if row[n_cols].is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
        }
        row[n_real + r] = Rat::one();
        basis.push(n_real + r);
    }

    let mut t = Tableau { rows, basis, n_cols, art_start: n_real };

    // phase 1: maximize −Σ artificials up to 0
    let mut obj = vec![Rat::zero(); n_cols];
    let mut val = Rat::zero();
    for r in 0..m {
        for (j, o) in obj.iter_mut().enumerate().take(n_real) {
            *o += &t.rows[r][j];
        }
        val -= t.rhs(r);
    }
    val += t.optimize(&mut obj, true);
    if val.is_negative() {
        return None; // even the closed relaxation is empty
    }
    // drive surviving artificials out of the basis; rows with no real
    // coefficients left are redundant and get dropped
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= t.art_start {
            match (0..t.art_start).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.rows.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // phase 2: maximize t, artificials barred
    let mut obj = vec![Rat::zero(); n_cols];
    obj[t_col] = Rat::one();
    let mut t_val = Rat::zero();
    for r in 0..t.rows.len() {
        if t.basis[r] == t_col {
            t_val = t.rhs(r).clone();
            for c in 0..n_cols {
                let delta = &t.rows[r][c];
                obj[c] = &obj[c] - delta;
            }
        }
    }
    t_val += t.optimize(&mut obj, false);
    if !t_val.is_positive() {
        return None;
    }

    let mut point = vec![Rat::zero(); 2 * n];
    for r in 0..t.rows.len() {
        if t.basis[r] < 2 * n {
            point[t.basis[r]] = t.rhs(r).clone();
        }
    }
    Some((0..n).map(|i| &point[i] - &point[n + i]).collect())
}
