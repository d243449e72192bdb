//! Fourier-Motzkin elimination as an independent feasibility oracle.
//!
//! Decides strict feasibility by projecting variables out one at a time,
//! which is exponential in the worst case but exact and entirely unlike the
//! simplex path, so the two can cross-check each other. Capped at 12
//! variables.

use std::collections::BTreeSet;

use num::{BigInt, Integer, Signed, Zero};

use super::LinearSystem;
use crate::lenvec::Rat;

pub const MAX_VARS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    TooManyVariables { n_vars: usize },
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::TooManyVariables { n_vars } => {
                write!(f, "elimination is capped at {MAX_VARS} variables, got {n_vars}")
            }
        }
    }
}

impl std::error::Error for Error {}

/// `coeffs · x ≥ rhs`, or `>` when strict; integer form, content removed.
type Row = (Vec<BigInt>, BigInt, bool);

enum Insert {
    Kept,
    Trivial,
    Infeasible,
}

/// Scale a rational row to coprime integers and file it. All-zero rows are
/// resolved on the spot.
fn insert_row(rows: &mut BTreeSet<Row>, coeffs: &[Rat], rhs: &Rat, strict: bool) -> Insert {
    let mut lcm = rhs.denom().clone();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let mut ic: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut ir = rhs.numer() * (&lcm / rhs.denom());
    if ic.iter().all(|c| c.is_zero()) {
        // 0 ≥ rhs / 0 > rhs
        let bad = if strict { !ir.is_negative() } else { ir.is_positive() };
        return if bad { Insert::Infeasible } else { Insert::Trivial };
    }
    let mut g = ir.abs();
    for c in &ic {
        g = g.gcd(c);
    }
    if !g.is_zero() {
        for c in ic.iter_mut() {
            *c = &*c / &g;
        }
        ir = &ir / &g;
    }
    rows.insert((ic, ir, strict));
    Insert::Kept
}

/// Exact strict-feasibility decision. `Ok(true)` iff some point satisfies
/// every equality, weak, and strict constraint (the latter strictly).
pub fn strictly_feasible(sys: &LinearSystem) -> Result<bool, Error> {
    if sys.n_vars > MAX_VARS {
        return Err(Error::TooManyVariables { n_vars: sys.n_vars });
    }
    let mut rows: BTreeSet<Row> = BTreeSet::new();
    for eq in &sys.equalities {
        // two opposite weak rows
        let neg: Vec<Rat> = eq.coeffs.iter().map(|c| -c).collect();
        if matches!(insert_row(&mut rows, &eq.coeffs, &eq.rhs, false), Insert::Infeasible)
            || matches!(insert_row(&mut rows, &neg, &(-&eq.rhs), false), Insert::Infeasible)
        {
            return Ok(false);
        }
    }
    for w in &sys.weak {
        if matches!(insert_row(&mut rows, &w.coeffs, &w.rhs, false), Insert::Infeasible) {
            return Ok(false);
        }
    }
    for s in &sys.strict {
        if matches!(insert_row(&mut rows, &s.coeffs, &s.rhs, true), Insert::Infeasible) {
            return Ok(false);
        }
    }

    let mut remaining: Vec<usize> = (0..sys.n_vars).collect();
    while !remaining.is_empty() {
        // cheapest variable first: fewest lower×upper combinations
        let (pos, &var) = remaining
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| {
                let pos = rows.iter().filter(|(c, _, _)| c[v].is_positive()).count();
                let neg = rows.iter().filter(|(c, _, _)| c[v].is_negative()).count();
                pos * neg
            })
            .expect("nonempty");
        remaining.remove(pos);

        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), BTreeSet::new());
        for row in std::mem::take(&mut rows) {
            if row.0[var].is_positive() {
                lower.push(row);
            } else if row.0[var].is_negative() {
                upper.push(row);
            } else {
                rest.insert(row);
            }
        }
        rows = rest;
        for (lc, lr, ls) in &lower {
            for (uc, ur, us) in &upper {
                // positive combination cancelling `var`
                let a = -&uc[var]; // > 0
                let b = lc[var].clone(); // > 0
                let coeffs: Vec<Rat> = lc
                    .iter()
                    .zip(uc)
                    .map(|(l, u)| Rat::from_integer(&a * l + &b * u))
                    .collect();
                let rhs = Rat::from_integer(&a * lr + &b * ur);
                if matches!(
                    insert_row(&mut rows, &coeffs, &rhs, *ls || *us),
                    Insert::Infeasible
                ) {
                    return Ok(false);
                }
            }
        }
    }
    // every variable eliminated; all remaining rows were resolved on insert
    debug_assert!(rows.is_empty());
    Ok(true)
}
