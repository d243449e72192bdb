//! The short-subset complex of a generic length vector.
//!
//! For generic ℓ, level `k` collects the subsets of size `k+1` that contain
//! the last bar `n` and are ℓ-short. Levels run over `k = 0 .. n−3` (larger
//! subsets containing `n` are forced long by ordering and positivity). The
//! level data is downward closed and, after sorting ℓ, is a complete
//! invariant of the chamber: two sorted generic vectors lie in the same
//! chamber exactly when their level data agree.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lenvec::{subsets_of_size, Classification, LengthVector, SubsetMask};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The vector is on a wall; carries one Tight witness.
    NotGeneric(SubsetMask),
    /// Two vectors of different lengths were compared.
    LengthMismatch { a: usize, b: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotGeneric(w) => write!(f, "vector is not generic: subset {w} is tight"),
            Error::LengthMismatch { a, b } => {
                write!(f, "length mismatch: {a} vs {b} bars")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Counts per level: `a[k] = |level k|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AVector(pub Vec<usize>);

impl fmt::Display for AVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Sorted short subsets containing bar `n`, stored per level. Levels are kept
/// even when empty so that the shape alone determines `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShortComplex {
    n: usize,
    levels: Vec<Vec<SubsetMask>>,
}

impl ShortComplex {
    /// Enumerate the short subsets of a generic vector.
    pub fn compute(l: &LengthVector) -> Result<Self, Error> {
        if let Some(w) = l.tight_witness() {
            return Err(Error::NotGeneric(w));
        }
        let n = l.n();
        let top = 1u64 << (n - 1);
        let oracle = l.weight_oracle();
        let mut levels = Vec::with_capacity(n - 2);
        for k in 0..=n - 3 {
            let mut level = Vec::new();
            for low in subsets_of_size(n - 1, k) {
                let mask = low | top;
                if oracle.classify(mask) == Classification::Short {
                    level.push(SubsetMask::from_bits(mask));
                }
            }
            levels.push(level);
        }
        Ok(ShortComplex { n, levels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `levels()[k]` lists the size-(k+1) short subsets containing `n`,
    /// ascending as integers.
    pub fn levels(&self) -> &[Vec<SubsetMask>] {
        &self.levels
    }

    pub fn level(&self, k: usize) -> &[SubsetMask] {
        &self.levels[k]
    }

    pub fn contains(&self, mask: SubsetMask) -> bool {
        let size = mask.len();
        if size == 0 || size > self.levels.len() {
            return false;
        }
        self.levels[size - 1].binary_search(&mask).is_ok()
    }

    pub fn a_vector(&self) -> AVector {
        AVector(self.levels.iter().map(|l| l.len()).collect())
    }

    /// Every subset of a member (still containing `n`) is a member.
    pub fn is_downward_closed(&self) -> bool {
        for k in 1..self.levels.len() {
            for &mask in &self.levels[k] {
                for i in mask.indices() {
                    if i == self.n {
                        continue;
                    }
                    if !self.contains(mask.without(i)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Canonical chamber label: the short complex of the sorted vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    complex: ShortComplex,
}

impl Fingerprint {
    /// Sort ℓ, then record its short complex. Errors if ℓ is on a wall.
    pub fn of(l: &LengthVector) -> Result<Self, Error> {
        let (sorted, _) = l.sorted();
        Ok(Fingerprint { complex: ShortComplex::compute(&sorted)? })
    }

    pub fn from_complex(complex: ShortComplex) -> Self {
        Fingerprint { complex }
    }

    pub fn n(&self) -> usize {
        self.complex.n
    }

    pub fn complex(&self) -> &ShortComplex {
        &self.complex
    }

    pub fn a_vector(&self) -> AVector {
        self.complex.a_vector()
    }

    /// Stable serialized form; also the sort key for atlas records.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("fingerprint serialization cannot fail")
    }
}

impl Serialize for Fingerprint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Fingerprint", 2)?;
        st.serialize_field("n", &self.complex.n)?;
        let levels: Vec<Vec<String>> = self
            .complex
            .levels
            .iter()
            .map(|lv| lv.iter().map(|m| m.to_hex()).collect())
            .collect();
        st.serialize_field("levels", &levels)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Fingerprint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            levels: Vec<Vec<String>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.n < 3 || raw.n > 64 {
            return Err(D::Error::custom(format!("bad fingerprint n={}", raw.n)));
        }
        if raw.levels.len() != raw.n - 2 {
            return Err(D::Error::custom(format!(
                "fingerprint for n={} must have {} levels, got {}",
                raw.n,
                raw.n - 2,
                raw.levels.len()
            )));
        }
        let mut levels = Vec::with_capacity(raw.levels.len());
        for (k, lv) in raw.levels.iter().enumerate() {
            let mut parsed = Vec::with_capacity(lv.len());
            for s in lv {
                let m = SubsetMask::from_hex(s).map_err(D::Error::custom)?;
                if !m.fits_within(raw.n) || !m.contains(raw.n) || m.len() != k + 1 {
                    return Err(D::Error::custom(format!(
                        "mask {s} invalid at level {k} of an n={} fingerprint",
                        raw.n
                    )));
                }
                parsed.push(m);
            }
            let mut sorted = parsed.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != parsed.len() {
                return Err(D::Error::custom("duplicate mask in fingerprint level"));
            }
            levels.push(sorted);
        }
        Ok(Fingerprint { complex: ShortComplex { n: raw.n, levels } })
    }
}

/// Fingerprint after sorting; the chamber label of ℓ up to permutation.
pub fn fingerprint(l: &LengthVector) -> Result<Fingerprint, Error> {
    Fingerprint::of(l)
}

/// Do two generic vectors lie in the same chamber up to permutation?
pub fn same_chamber_up_to_permutation(a: &LengthVector, b: &LengthVector) -> Result<bool, Error> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch { a: a.n(), b: b.n() });
    }
    Ok(Fingerprint::of(a)? == Fingerprint::of(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lenvec::rat;

    fn v(s: &str) -> LengthVector {
        s.parse().unwrap()
    }

    #[test]
    fn equilateral_nine_counts() {
        let c = ShortComplex::compute(&v("1,1,1,1,1,1,1,1,1")).unwrap();
        assert_eq!(c.a_vector().0, vec![1, 8, 28, 56, 0, 0, 0]);
        assert!(c.is_downward_closed());
    }

    #[test]
    fn seven_bar_counts() {
        let c = ShortComplex::compute(&v("1,1,1,1,1,1,3")).unwrap();
        assert_eq!(c.a_vector().0, vec![1, 6, 0, 0, 0]);
    }

    #[test]
    fn dominated_vector_has_empty_levels() {
        let c = ShortComplex::compute(&v("eps,eps,eps,eps,eps,1")).unwrap();
        assert_eq!(c.a_vector().0, vec![0, 0, 0, 0]);
        assert!(c.levels().iter().all(|l| l.is_empty()));
    }

    #[test]
    fn not_generic_is_an_error_with_witness() {
        match ShortComplex::compute(&v("1,1,1,1")) {
            Err(Error::NotGeneric(w)) => {
                assert_eq!(v("1,1,1,1").classify(w), Classification::Tight)
            }
            other => panic!("expected NotGeneric, got {other:?}"),
        }
    }

    #[test]
    fn level_counts_match_independent_scan() {
        for s in ["1,1,1,1,1,1,3", "1,1,1,2", "2,3,5,7,11,13", "eps,eps,1,1,3"] {
            let l = v(s);
            let (sorted, _) = l.sorted();
            let c = ShortComplex::compute(&sorted).unwrap();
            let n = sorted.n();
            for k in 0..=n - 3 {
                let brute: Vec<SubsetMask> = (0..(1u64 << n))
                    .map(SubsetMask::from_bits)
                    .filter(|m| {
                        m.contains(n)
                            && m.len() == k + 1
                            && sorted.classify(*m) == Classification::Short
                    })
                    .collect();
                assert_eq!(c.level(k), &brute[..], "level {k} mismatch on {s}");
            }
        }
    }

    #[test]
    fn fingerprints_are_permutation_and_scale_invariant() {
        assert!(same_chamber_up_to_permutation(
            &v("1,3,2,1,1,1,1,1,2"),
            &v("1,1,1,1,1,1,2,2,3")
        )
        .unwrap());
        // the even-total cousin sits on a wall ({1,2,3} carries half of it)
        assert!(matches!(
            Fingerprint::of(&v("1,3,2,1,1,1,1,1,1")),
            Err(Error::NotGeneric(_))
        ));
        let nine = v("1,1,1,1,1,1,1,1,1");
        assert_eq!(
            Fingerprint::of(&nine).unwrap(),
            Fingerprint::of(&nine.scale(&rat(2, 1))).unwrap()
        );
        assert!(same_chamber_up_to_permutation(&v("1,1,1,2"), &v("2,1,1,1")).unwrap());
        assert!(!same_chamber_up_to_permutation(&v("1,1,1,2"), &v("1,2,2,2")).unwrap());
    }

    #[test]
    fn near_equilateral_nine_is_on_a_wall() {
        let a = v("1,1,1,1,1,1,1,1,1");
        let b = v("1,1,1,1,1,1,1,1,2");
        match same_chamber_up_to_permutation(&a, &b) {
            Err(Error::NotGeneric(w)) => {
                assert_eq!(b.classify(w), Classification::Tight);
            }
            other => panic!("expected NotGeneric, got {other:?}"),
        }
    }

    #[test]
    fn mismatched_lengths_error() {
        assert!(matches!(
            same_chamber_up_to_permutation(&v("1,1,1"), &v("1,1,1,1,1")),
            Err(Error::LengthMismatch { a: 3, b: 5 })
        ));
    }

    #[test]
    fn fingerprint_json_round_trips() {
        let fp = Fingerprint::of(&v("1,1,1,1,1,1,3")).unwrap();
        let json = fp.canonical_json();
        let back: Fingerprint = serde_json::from_str(&json).unwrap();
        assert_eq!(fp, back);
        assert_eq!(json, back.canonical_json());

        let fp = Fingerprint::of(&v("eps,eps,eps,eps,eps,1")).unwrap();
        let json = fp.canonical_json();
        assert_eq!(json, r#"{"n":6,"levels":[[],[],[],[]]}"#);
        let back: Fingerprint = serde_json::from_str(&json).unwrap();
        assert_eq!(fp, back);
    }

    #[test]
    fn fingerprint_json_rejects_malformed_levels() {
        for bad in [
            r#"{"n":4,"levels":[["8"]]}"#,
            r#"{"n":4,"levels":[["8"],["8"]]}"#,
            r#"{"n":4,"levels":[["1"],[]]}"#,
            r#"{"n":4,"levels":[["zz"],[]]}"#,
        ] {
            assert!(serde_json::from_str::<Fingerprint>(bad).is_err(), "accepted {bad}");
        }
    }
}
