//! Classify one length vector: subset verdicts, genericity, regularity.

use linkage::{Classification, Fingerprint, LengthVector, SubsetMask};

fn main() {
    let l: LengthVector = "1,1,1,1,1,4".parse().unwrap();
    let n = l.n();

    println!("vector {l}  (n = {n})");
    println!("total weight: {}", l.total_weight());

    let j = SubsetMask::from_indices(&[1, 2, 6]);
    println!("subset {j} is {:?}", l.classify(j));

    match l.tight_witness() {
        Some(w) => println!("on a wall: {w} weighs exactly half"),
        None => println!("generic: no subset is tight"),
    }

    for d in [2, 3, 5] {
        println!("{d}-regular: {}", l.is_d_regular(d).unwrap());
    }

    let fp = Fingerprint::of(&l).unwrap();
    println!("a-vector: {}", fp.a_vector());
    println!("fingerprint: {}", fp.canonical_json());

    // a wall example: the equilateral square has {1,4} tight
    let square: LengthVector = "1,1,1,1".parse().unwrap();
    let w = square.tight_witness().unwrap();
    assert_eq!(square.classify(w), Classification::Tight);
    println!("\n{square} is not generic, witness {w}");
}
