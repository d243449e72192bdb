//! Stratification bookkeeping for 9 bars in dimension 5.

use linkage::strat::{
    check_inclusion_allowability, check_projection_allowability, dim_moduli, lemma_strata_margin,
    perversity_p, perversity_q, perversity_top, perversity_zero, BarStratProfile, StarMode,
};

fn main() {
    let (n, d) = (9, 5);

    println!("dim = {}", dim_moduli(n, d).unwrap());

    let bar = BarStratProfile::new(n, d).unwrap();
    for k in 2..=d - 2 {
        println!(
            "stratum k={k}: codim {} (bar outer {}, inner {})",
            linkage::strat::codim_stratum(n, d, k).unwrap(),
            bar.codim_outer(k).unwrap(),
            bar.codim_inner(k).unwrap(),
        );
    }

    // the linear tables, their duals, and the growth conditions
    println!("zero = {:?}, top = {:?}", perversity_zero(d).as_map(), perversity_top(n, d).unwrap().as_map());
    for j in 1..=n - d {
        let p = perversity_p(j, d);
        println!(
            "p_{j} = {:?}  dual = {:?}  gm = {}",
            p.as_map(),
            p.dual(n).unwrap().as_map(),
            p.is_goresky_macpherson(n),
        );
    }

    // bar-space tables carry an extra star value; level 1 is special when truncated
    for r in 0..=n - d - 1 {
        let q = perversity_q(r, d, StarMode::Truncated);
        println!(
            "q_{r}: outer {:?} inner {:?} star {} (plain star {})",
            q.outer.as_map(),
            q.inner.as_map(),
            q.star,
            perversity_q(r, d, StarMode::GoreskyMacPherson).star,
        );
    }

    // both margin identities hold at every admissible level
    for r in 0..=n - d - 1 {
        println!(
            "level {r}: inclusion {}  projection {}",
            check_inclusion_allowability(n, d, r).unwrap(),
            check_projection_allowability(n, d, r).unwrap(),
        );
    }

    // and the stratum margin for odd d = 2k+1
    let check = lemma_strata_margin(n, 5, 2, 0).unwrap();
    println!("margin at (k=2, l=0): {} vs {} -> {}", check.lhs, check.rhs, check.holds());
}
