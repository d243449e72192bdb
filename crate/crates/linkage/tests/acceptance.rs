//! End-to-end acceptance checks. Each test prints one PASS/FAIL line; a
//! failure also panics with the collected evidence.

mod common;

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use linkage::chambers::{annotate_regularity, enumerate_chambers, sample_fingerprints};
use linkage::complex::same_chamber_up_to_permutation;
use linkage::lenvec::{rat_int, Classification, Rat};
use linkage::ring::{build_ring, compare_rings, RingComparison};
use linkage::strat::{
    check_inclusion_allowability, check_projection_allowability, codim_stratum, dim_moduli,
    lemma_strata_margin, perversity_p, perversity_top, perversity_zero,
};
use linkage::{Fingerprint, LengthVector, SubsetMask};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{index_subsets, random_generic, ring_cases, v};

fn report(num: u32, desc: &str, errs: &[String]) {
    let verdict = if errs.is_empty() { "PASS" } else { "FAIL" };
    println!("[acceptance] criterion {num} ({desc}): {verdict}");
    assert!(errs.is_empty(), "criterion {num} ({desc}):\n  {}", errs.join("\n  "));
}

// independent count of short (size+1)-subsets containing n
fn short_count(sorted: &LengthVector, size: usize) -> usize {
    let n = sorted.n();
    index_subsets(n - 1, size)
        .into_iter()
        .filter(|js| {
            let mask = SubsetMask::from_indices(js).with(n);
            sorted.classify(mask) == Classification::Short
        })
        .count()
}

#[test]
fn criterion_1_formula_suite() {
    let t0 = Instant::now();
    let mut errs = Vec::new();
    for d in (5..=9i64).step_by(2) {
        for n in (d + 1)..=12 {
            let dim = dim_moduli(n, d).unwrap();
            // independent count: n directions on a (d−1)-sphere, minus the
            // closure condition, minus the rotation group
            if dim != n * (d - 1) - d - d * (d - 1) / 2 {
                errs.push(format!("dim({n},{d}) = {dim} disagrees with the direct count"));
            }
            for k in 2..=d - 2 {
                // the rank-k degenerate stratum is the top stratum of the
                // (d−k)-dimensional space, so its codimension is a difference
                // of two dimension values
                let codim = codim_stratum(n, d, k).unwrap();
                if codim != dim - dim_moduli(n, d - k).unwrap() {
                    errs.push(format!("codim({n},{d},{k}) = {codim} is not dim(d) - dim(d-k)"));
                }
            }
            let top = perversity_top(n, d).unwrap();
            if !top.is_goresky_macpherson(n) || !perversity_zero(d).is_goresky_macpherson(n) {
                errs.push(format!("zero/top growth conditions fail at ({n},{d})"));
            }
            for j in 1..=n - d {
                let p = perversity_p(j, d);
                let dual = p.dual(n).unwrap();
                if p.add(&dual).as_ref() != Some(&top) {
                    errs.push(format!("p_{j} + dual != top at ({n},{d})"));
                }
                if dual.dual(n).unwrap() != p {
                    errs.push(format!("dual is not an involution for p_{j} at ({n},{d})"));
                }
                if p.is_goresky_macpherson(n) != (j <= n - d - 1) {
                    errs.push(format!("growth condition for p_{j} at ({n},{d}) misclassified"));
                }
            }
            for r in 0..=n - d - 1 {
                if !check_inclusion_allowability(n, d, r).unwrap() {
                    errs.push(format!("inclusion margin fails at ({n},{d}), level {r}"));
                }
                if !check_projection_allowability(n, d, r).unwrap() {
                    errs.push(format!("projection margin fails at ({n},{d}), level {r}"));
                }
            }
            let half = (d - 1) / 2;
            for l in 0..=half - 2 {
                if !lemma_strata_margin(n, d, half, l).unwrap().holds() {
                    errs.push(format!("stratum margin fails at ({n},{d}), l = {l}"));
                }
            }
        }
    }
    if t0.elapsed() >= Duration::from_secs(1) {
        errs.push(format!("took {:?}, budget 1 s", t0.elapsed()));
    }
    report(1, "closed-form dimension and perversity identities", &errs);
}

#[test]
fn criterion_2_regularity_equivalence() {
    let t0 = Instant::now();
    let mut errs = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut vectors = 0;
    while vectors < 520 {
        let n = rng.gen_range(6..=12);
        let l = random_generic(&mut rng, n);
        let (sorted, _) = l.sorted();
        for d in (5..n).step_by(2) {
            let fast = sorted.is_d_regular_ordered(d).unwrap();
            let slow = l.is_d_regular(d).unwrap();
            if fast != slow {
                errs.push(format!("{l}: ordered says {fast}, general says {slow} for d = {d}"));
            }
        }
        vectors += 1;
    }
    if t0.elapsed() >= Duration::from_secs(10) {
        errs.push(format!("took {:?}, budget 10 s", t0.elapsed()));
    }
    report(2, "ordered regularity shortcut matches the general definition", &errs);
}

#[test]
fn criterion_3_regularity_counts() {
    let mut errs = Vec::new();

    // (a) 2-regularity is universal: two disjoint bars cannot both outweigh
    // the rest
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut tested: Vec<LengthVector> = ring_cases().into_iter().map(|(l, _)| l).collect();
    for _ in 0..200 {
        let n = rng.gen_range(4..=12);
        tested.push(random_generic(&mut rng, n));
    }
    for l in &tested {
        if l.is_d_regular(2) != Ok(true) {
            errs.push(format!("{l} is not 2-regular"));
        }
    }

    // (b) five bars: exactly one chamber class fails 3-regularity
    let mut atlas5 = enumerate_chambers(5, 8).unwrap();
    annotate_regularity(&mut atlas5, &[3]).unwrap();
    let irregular3 = atlas5.records().iter().filter(|r| r.regularity[&3] == false).count();
    if irregular3 != 1 {
        errs.push(format!("n = 5: {irregular3} classes fail 3-regularity, expected 1"));
    }

    // (c) six bars: exactly two chamber classes are 5-regular
    let mut atlas6 = enumerate_chambers(6, 8).unwrap();
    annotate_regularity(&mut atlas6, &[5]).unwrap();
    let regular5 = atlas6.records().iter().filter(|r| r.regularity[&5]).count();
    if regular5 != 2 {
        errs.push(format!("n = 6: {regular5} classes are 5-regular, expected 2"));
    }

    report(3, "regularity counts across the small atlases", &errs);
}

#[test]
fn criterion_4_degree_one_dimension() {
    let mut errs = Vec::new();
    for (l, d) in ring_cases() {
        let ring = build_ring(&l, d).unwrap();
        let a1 = short_count(ring.sorted_vector(), 1);
        let got = ring.graded_dimension(1).unwrap();
        if got != 1 + a1 {
            errs.push(format!("{l} (d = {d}): degree-1 dimension {got}, expected 1 + {a1}"));
        }
    }
    report(4, "degree-1 dimension is 1 + #short pairs", &errs);
}

#[test]
fn criterion_5_face_ring_quotient() {
    let mut errs = Vec::new();
    for (l, d) in ring_cases() {
        let ring = build_ring(&l, d).unwrap();
        let k = ring.generator_count();
        let dims = ring.face_ring_dimensions();
        for (m, &dim) in dims.iter().enumerate() {
            // counting two independent ways: short faces straight off the
            // vector, and surviving square-free products in the ring
            let faces = short_count(ring.sorted_vector(), m);
            let mut products = 0;
            for js in index_subsets(k, m) {
                let mut p = ring.one();
                for j in js {
                    p = ring.multiply(&p, &ring.x(j).unwrap()).unwrap();
                }
                if !p.is_zero() {
                    products += 1;
                }
            }
            if dim != faces || dim != products {
                errs.push(format!(
                    "{l} (d = {d}), degree {m}: reported {dim}, faces {faces}, products {products}"
                ));
            }
        }
    }
    report(5, "R = 0 quotient counts the short faces", &errs);
}

#[test]
fn criterion_6_squaring_class_dichotomy() {
    let mut errs = Vec::new();
    let mut branches = [0usize; 3];
    for (l, d) in ring_cases() {
        let ring = build_ring(&l, d).unwrap();
        if ring.n() < ring.d() + 3 {
            // too few bars: no degree-2 constraints to pin the solution down
            if ring.detect_euler_candidates().is_ok() {
                errs.push(format!("{l} (d = {d}): detection should refuse n < d + 3"));
            }
            continue;
        }
        let cands = ring.detect_euler_candidates().unwrap();
        let k = ring.generator_count();
        let a2 = short_count(ring.sorted_vector(), 2);
        let r = ring.r_class();
        if a2 > 0 || k == 0 {
            branches[if a2 > 0 { 0 } else { 2 }] += 1;
            if cands != vec![r] {
                errs.push(format!("{l} (d = {d}): expected R alone, got {} candidates", cands.len()));
            }
        } else {
            branches[1] += 1;
            let mut sum = ring.zero();
            for j in 1..=k {
                sum = ring.add(&sum, &ring.x(j).unwrap()).unwrap();
            }
            if cands.len() != 2 || !cands.contains(&r) || !cands.contains(&sum) {
                errs.push(format!("{l} (d = {d}): expected R and the generator sum"));
            }
        }
    }
    // both live branches and the degenerate one must actually occur
    if branches.iter().any(|&c| c == 0) {
        errs.push(format!("dichotomy coverage incomplete: {branches:?}"));
    }
    report(6, "squaring-class detection dichotomy", &errs);
}

#[test]
fn criterion_7_ring_identities() {
    let mut errs = Vec::new();
    let mut long_supports = 0;
    for (l, d) in ring_cases() {
        let ring = build_ring(&l, d).unwrap();
        let k = ring.generator_count();
        let r = ring.r_class();
        let n = ring.n();
        for i in 1..=k {
            let xi = ring.x(i).unwrap();
            if ring.multiply(&xi, &xi).unwrap() != ring.multiply(&r, &xi).unwrap() {
                errs.push(format!("{l} (d = {d}): X{{{i}}}^2 != R*X{{{i}}}"));
            }
            // the reflected generator annihilates its partner but nothing else
            if !ring.multiply(&ring.x_minus(i).unwrap(), &xi).unwrap().is_zero() {
                errs.push(format!("{l} (d = {d}): X{{{i}}}^- * X{{{i}}} != 0"));
            }
            for j in 1..=k {
                if i != j && ring.multiply(&xi, &ring.x_minus(j).unwrap()).unwrap().is_zero() {
                    errs.push(format!("{l} (d = {d}): X{{{i}}} * X{{{j}}}^- = 0"));
                }
            }
        }
        for m in 2..=ring.truncation() {
            for js in index_subsets(k, m) {
                let mask = SubsetMask::from_indices(&js).with(n);
                if ring.sorted_vector().classify(mask) != Classification::Long {
                    continue;
                }
                long_supports += 1;
                let mut p = ring.one();
                for j in js.iter() {
                    p = ring.multiply(&p, &ring.x(*j).unwrap()).unwrap();
                }
                if !p.is_zero() {
                    errs.push(format!("{l} (d = {d}): long support {mask} survives"));
                }
            }
        }
    }
    if long_supports == 0 {
        errs.push("no long support was exercised".into());
    }
    report(7, "defining relations hold as ring identities", &errs);
}

#[test]
fn criterion_8_enumeration_sound_and_complete() {
    let t0 = Instant::now();
    let mut errs = Vec::new();
    let atlas4 = enumerate_chambers(4, 8).unwrap();
    if atlas4.records().len() != 3 {
        errs.push(format!("n = 4: {} classes, expected 3", atlas4.records().len()));
    }
    for n in 4..=6 {
        let atlas = enumerate_chambers(n, 8).unwrap();
        let sampled = sample_fingerprints(n, 100_000, 8);
        if !sampled.is_subset(&atlas.fingerprints()) {
            errs.push(format!("n = {n}: sampling found a fingerprint outside the atlas"));
        }
        for rec in atlas.records() {
            if Fingerprint::of(&rec.witness).as_ref() != Ok(&rec.fingerprint) {
                errs.push(format!("n = {n}: witness {} does not reproduce its record", rec.witness));
            }
        }
    }
    if t0.elapsed() >= Duration::from_secs(300) {
        errs.push(format!("took {:?}, budget 5 min", t0.elapsed()));
    }
    report(8, "chamber enumeration is sound and complete at small n", &errs);
}

#[test]
fn criterion_9_pipeline_consistency() {
    let mut errs = Vec::new();

    // distinct atlas records are pairwise in different chambers
    for n in 4..=6 {
        let atlas = enumerate_chambers(n, 8).unwrap();
        let recs = atlas.records();
        for i in 0..recs.len() {
            for j in i + 1..recs.len() {
                if same_chamber_up_to_permutation(&recs[i].witness, &recs[j].witness) != Ok(false) {
                    errs.push(format!("n = {n}: records {i} and {j} merge"));
                }
            }
        }
    }

    // with seven or more bars the ring model can tell chambers apart too
    let different = [
        ("1,1,1,1,1,1,3", "1,1,1,1,1,1,5"),
        ("1,1,1,1,1,1,1,4", "1,1,1,1,1,1,1,2"),
        ("1,1,1,1,1,1,1,1,1", "1,1,1,1,1,1,1,1,5"),
    ];
    for (a, b) in different {
        let (a, b) = (v(a), v(b));
        if same_chamber_up_to_permutation(&a, &b) != Ok(true) {
            match compare_rings(&a, &b, 5).unwrap() {
                RingComparison::Different { first_differing_level: Some(_), .. } => {}
                other => errs.push(format!("{a} vs {b}: expected a differing level, got {other}")),
            }
        } else {
            errs.push(format!("{a} vs {b}: fixture pair merged"));
        }
        let scaled = b.scale(&rat_int(3));
        if compare_rings(&b, &scaled, 5).unwrap() != RingComparison::SameFaceData {
            errs.push(format!("{b} vs its triple: ring data diverged"));
        }
    }

    // midpoints toward the recorded witness stay inside the chamber
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let witnesses: BTreeMap<usize, BTreeMap<Fingerprint, LengthVector>> = (4..=6)
        .map(|n| {
            let atlas = enumerate_chambers(n, 8).unwrap();
            let by_fp =
                atlas.records().iter().map(|r| (r.fingerprint.clone(), r.witness.clone())).collect();
            (n, by_fp)
        })
        .collect();
    let mut trials = 0;
    while trials < 100 {
        let n = 4 + trials % 3;
        let by_fp = &witnesses[&n];
        let u = random_generic(&mut rng, n);
        let w = &by_fp[&Fingerprint::of(&u).unwrap()];
        let (sorted, _) = u.sorted();
        let mid: Vec<Rat> = (1..=n)
            .map(|i| {
                (sorted.get(i).weight().base() + w.get(i).weight().base()) / rat_int(2)
            })
            .collect();
        let mid = LengthVector::from_rats(mid).unwrap();
        if same_chamber_up_to_permutation(&mid, &u) != Ok(true) {
            errs.push(format!("midpoint of {sorted} and {w} left the chamber"));
        }
        trials += 1;
    }

    report(9, "chamber verdicts and ring comparisons are consistent", &errs);
}

#[test]
fn criterion_10_cli_determinism() {
    let mut errs = Vec::new();
    let dir = tempfile::tempdir().unwrap();
    let atlas = dir.path().join("atlas.txt");
    let atlas_arg = atlas.to_str().unwrap();

    let commands: Vec<(&str, Vec<&str>)> = vec![
        ("analyze", vec!["analyze", "--vector", "1,1,1,1,1,4", "--d", "5"]),
        ("analyze eps", vec!["analyze", "--vector", "eps,eps,1,1,3"]),
        ("analyze wall", vec!["analyze", "--vector", "1,1,1,1"]),
        ("compare", vec!["compare", "--a", "1,1,1,2", "--b", "2,1,1,1"]),
        ("compare rings", vec!["compare", "--a", "1,1,1,1,1,1,3", "--b", "1,1,1,1,1,1,5"]),
        ("ring", vec!["ring", "--vector", "1,1,1,1,1,1,1,1,1", "--d", "5"]),
        ("ring pretty", vec!["ring", "--vector", "1,1,1,1,1,1,1,4", "--d", "5", "--pretty"]),
        ("perversities", vec!["perversities", "--n", "9", "--d", "5"]),
        ("enumerate", vec!["enumerate", "--n", "5", "--out", atlas_arg]),
        ("annotate", vec!["annotate", "--atlas", atlas_arg, "--d", "3"]),
    ];
    for (label, args) in commands {
        let run = || {
            let out = Command::new(env!("CARGO_BIN_EXE_linkage"))
                .args(&args)
                .env_remove("LINKAGE_MAX_N")
                .output()
                .unwrap();
            let file = std::fs::read(&atlas).unwrap_or_default();
            (out.status.code(), out.stdout, file)
        };
        let first = run();
        let second = run();
        if first != second {
            errs.push(format!("{label}: two runs differ"));
        }
    }
    report(10, "CLI output is byte-deterministic", &errs);
}
