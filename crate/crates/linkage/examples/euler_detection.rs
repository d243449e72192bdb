//! Which degree-1 classes square to R times themselves everywhere: the
//! candidate set is {R} alone, or {R, X_1 + ... + X_k}, depending on
//! whether any two-generator product survives.

use linkage::ring::build_ring;
use linkage::LengthVector;

fn report(label: &str, ints: &[i64], d: usize) {
    let l = LengthVector::from_ints(ints).unwrap();
    let ring = build_ring(&l, d).unwrap();
    match ring.detect_euler_candidates() {
        Ok(cands) => {
            println!("{label}: k = {}, a_2 = {}", ring.generator_count(), ring.a_vector().0[2]);
            for c in &cands {
                println!("  candidate: {c}");
            }
        }
        Err(e) => println!("{label}: {e}"),
    }
}

fn main() {
    // plenty of surviving pairs: R is the only solution
    report("equilateral 9", &[1; 9], 5);

    // one long bar dominates, every X_i X_j dies, and the full sum joins R
    report("(1,1,1,1,1,1,1,4)", &[1, 1, 1, 1, 1, 1, 1, 4], 5);

    // no generators at all still leaves R
    report("(1,1,1,1,1,1,1,6)", &[1, 1, 1, 1, 1, 1, 1, 6], 5);

    // the detection needs room: n = d + 2 has no degree-2 constraints
    report("(1,1,1,1,1,1,3)", &[1, 1, 1, 1, 1, 1, 3], 5);
}
