// Shared fixtures for the integration suites. Not every helper is used by
// every suite.
#![allow(dead_code)]

use linkage::LengthVector;
use rand::Rng;

pub fn v(s: &str) -> LengthVector {
    s.parse().unwrap_or_else(|e| panic!("bad fixture {s:?}: {e}"))
}

/// Vectors that admit the ring model, with the dimension to build it in:
/// generic, d-regular, at least d+2 bars. Chosen to cover both branches of
/// the squaring-class dichotomy, a generator-free chamber, the n = d+2
/// boundary, infinitesimal entries, and dimension 7.
pub fn ring_cases() -> Vec<(LengthVector, usize)> {
    vec![
        (v("1,1,1,1,1,1,1,1,1"), 5),
        (v("1,1,1,1,1,1,3"), 5),
        (v("1,1,1,1,1,1,1,4"), 5),
        (v("1,1,1,1,1,1,1,6"), 5),
        (v("1,1,1,1,1,1,1,1,5"), 5),
        (v("1,1,2,2,2,2,7+eps"), 5),
        (v("1,1,1,1,1,1,1,1,1,4"), 7),
        (v("1,1,1,1,1,1,1,1,1,1,1,1,1"), 7),
    ]
}

/// Random integer vector with odd total: an odd sum cannot split evenly, so
/// the vector is generic by construction.
pub fn random_generic(rng: &mut impl Rng, n: usize) -> LengthVector {
    let mut ints: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=9)).collect();
    if ints.iter().sum::<i64>() % 2 == 0 {
        let i = rng.gen_range(0..n);
        ints[i] += 1;
    }
    let l = LengthVector::from_ints(&ints).unwrap();
    debug_assert!(l.is_generic());
    l
}

/// All subsets of {1, …, k} of the given size, as sorted index lists.
pub fn index_subsets(k: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 1)];
    while let Some((prefix, next)) = stack.pop() {
        if prefix.len() == size {
            out.push(prefix);
            continue;
        }
        for j in (next..=k).rev() {
            let mut p = prefix.clone();
            p.push(j);
            stack.push((p, j + 1));
        }
    }
    out.sort();
    out
}

#[test]
fn subset_helper_counts() {
    assert_eq!(index_subsets(5, 2).len(), 10);
    assert_eq!(index_subsets(4, 0), vec![Vec::<usize>::new()]);
    assert_eq!(index_subsets(3, 3), vec![vec![1, 2, 3]]);
}
