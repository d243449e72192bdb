//! Same-chamber decisions: fingerprint equality after sorting, and the
//! ring-model comparison that refines a negative verdict.

use linkage::complex::same_chamber_up_to_permutation;
use linkage::ring::compare_rings;
use linkage::LengthVector;

fn v(s: &str) -> LengthVector {
    s.parse().unwrap()
}

fn main() {
    // permutations land in the same chamber
    let verdict = same_chamber_up_to_permutation(&v("1,1,1,2"), &v("2,1,1,1")).unwrap();
    println!("(1,1,1,2) vs (2,1,1,1): same = {verdict}");

    // different short pairs, different chamber
    let verdict = same_chamber_up_to_permutation(&v("1,1,1,2"), &v("1,2,2,2")).unwrap();
    println!("(1,1,1,2) vs (1,2,2,2): same = {verdict}");

    // scaling never moves a vector off its chamber
    let a = v("3,1,1,1,1,1,1");
    let b = a.scale(&linkage::lenvec::rat(7, 2));
    println!("{a} vs {b}: same = {}", same_chamber_up_to_permutation(&a, &b).unwrap());

    // walls are rejected, not classified
    let near = v("1,1,1,1,1,1,1,1,2");
    match same_chamber_up_to_permutation(&v("1,1,1,1,1,1,1,1,1"), &near) {
        Err(e) => println!("equilateral 9 vs {near}: {e}"),
        Ok(_) => unreachable!("the second vector sits on a wall"),
    }

    // different chambers usually show up in the model rings too
    let p = v("1,1,1,1,1,1,3");
    let q = v("1,1,1,1,1,1,5");
    println!("rings of {p} and {q} in dimension 5: {}", compare_rings(&p, &q, 5).unwrap());
    println!("ring of {p} against itself: {}", compare_rings(&p, &p, 5).unwrap());
}
