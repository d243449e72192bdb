//! Exact combinatorics and algebra of linkage configuration chambers.
//!
//! A closed linkage with `n` bars of lengths `ℓ = (ℓ₁, …, ℓₙ)` has a moduli
//! space of configurations in `ℝ^d` whose topology depends on ℓ only through
//! which subsets of bars are "short" (can be outweighed by the rest) and
//! which are "long". The positive cone of length vectors is cut by the
//! hyperplanes "subset weight = complement weight" into chambers; everything
//! this crate computes is an invariant of the chamber.
//!
//! The crate works entirely in exact arithmetic: rationals extended by one
//! shared infinitesimal `eps`, so wall membership is decided exactly, never
//! by floating-point proximity.
//!
//! Module map:
//!
//! * [`lenvec`]: length vectors over ℚ(ε), subset weights, short/long/tight
//!   classification, genericity, d-regularity, contraction and the ± derived
//!   vectors.
//! * [`complex`]: the short-subset complex, a-vectors, chamber fingerprints
//!   and the permutation-invariant same-chamber test.
//! * [`strat`]: dimension/codimension bookkeeping for the stratified moduli
//!   space and its perversity tables.
//! * [`ring`]: the Z/2 intersection-ring model, normal-form monomials,
//!   graded dimensions, the face-ring quotient and Euler-class detection.
//! * [`chambers`]: exact feasibility (rational simplex + Fourier-Motzkin),
//!   chamber enumeration by wall-crossing, sampling, and the atlas file
//!   format.
//! * [`cli`]: the `linkage` command-line tool built on all of the above.
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --example analyze_vector        # one vector end to end
//! cargo run --example compare_chambers      # same-chamber tests, ring comparison
//! cargo run --example perversity_tables     # stratification arithmetic for (n, d)
//! cargo run --example intersection_ring     # normal forms, products, graded data
//! cargo run --example euler_detection       # the squaring-class dichotomy
//! cargo run --example enumerate_chambers    # full atlas for small n
//! cargo run --example exact_feasibility     # simplex vs Fourier-Motzkin
//! ```

pub mod chambers;
pub mod cli;
pub mod complex;
pub mod lenvec;
pub mod ring;
pub mod strat;

pub use complex::{AVector, Fingerprint, ShortComplex};
pub use lenvec::{Classification, LengthEntry, LengthVector, Rat, SubsetMask, Weight};
