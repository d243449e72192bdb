//! Strict feasibility over the rationals, answered two ways: a two-phase
//! simplex that maximizes slack, and Fourier-Motzkin elimination.

use linkage::chambers::{fm, lp, Constraint, LinearSystem};
use linkage::lenvec::{rat_int, Rat};

// coefficient row for "the bars in `short` weigh less than the rest"
fn wall(n: usize, short: &[usize]) -> Constraint {
    let mut coeffs = vec![rat_int(1); n];
    for &i in short {
        coeffs[i - 1] = rat_int(-1);
    }
    Constraint { coeffs, rhs: rat_int(0) }
}

fn solve(label: &str, sys: &LinearSystem) {
    let lp_answer = lp::feasible_interior(sys);
    let fm_answer = fm::strictly_feasible(sys).unwrap();
    assert_eq!(lp_answer.is_some(), fm_answer);
    match lp_answer {
        Some(x) => {
            assert!(sys.strictly_satisfied_by(&x));
            let shown: Vec<String> = x.iter().map(Rat::to_string).collect();
            println!("{label}: interior point ({})", shown.join(", "));
        }
        None => println!("{label}: empty interior"),
    }
}

fn main() {
    // the sorted positive simplex alone has plenty of room
    solve("ordered simplex", &LinearSystem::ordered_simplex(4));

    // {4} short of the rest: still fine
    let mut sys = LinearSystem::ordered_simplex(4);
    sys.strict.push(wall(4, &[4]));
    solve("{4} short", &sys);

    // {3,4} short contradicts the ordering, so both solvers say no
    let mut sys = LinearSystem::ordered_simplex(4);
    sys.strict.push(wall(4, &[3, 4]));
    solve("{3,4} short", &sys);

    // an equality can also close the interior: forcing the {4} wall
    // exactly leaves nothing strictly on either side
    let mut sys = LinearSystem::ordered_simplex(4);
    sys.equalities.push(wall(4, &[4]));
    sys.strict.push(wall(4, &[4]));
    solve("{4} pinned to the wall", &sys);
}
