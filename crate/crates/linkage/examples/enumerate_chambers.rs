//! Enumerate every chamber class for five bars, tag 3-regularity, and
//! write the atlas to disk.

use linkage::chambers::{annotate_regularity, enumerate_chambers, sample_fingerprints, ChamberAtlas};

fn main() {
    let mut atlas = enumerate_chambers(5, 8).unwrap();
    annotate_regularity(&mut atlas, &[3]).unwrap();

    println!("n = {}: {} chamber classes", atlas.n(), atlas.records().len());
    for rec in atlas.records() {
        println!(
            "  {}  witness {}  regular {:?}",
            rec.fingerprint.canonical_json(),
            rec.witness,
            rec.regularity,
        );
    }

    // random sampling finds the same classes (it cannot find more)
    let sampled = sample_fingerprints(5, 2000, 11);
    println!("sampling hit {} of {}", sampled.len(), atlas.records().len());
    assert!(sampled.is_subset(&atlas.fingerprints()));

    let path = std::env::temp_dir().join("linkage-atlas-n5.txt");
    atlas.save(&path).unwrap();
    let back = ChamberAtlas::load(&path).unwrap();
    assert_eq!(back, atlas);
    println!("saved to {}", path.display());
}
