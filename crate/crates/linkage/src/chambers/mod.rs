//! Chamber enumeration for the wall arrangement, up to permutation.
//!
//! Working inside the ordered cone 0 < x₁ ≤ … ≤ x_n (every vector is a
//! permutation of an ordered one), each chamber class meets the cone in one
//! convex region, cut out by a strict verdict for every subset containing
//! bar n of size 1..n−2. Enumeration is breadth-first wall crossing: flip
//! one verdict at a time and ask the exact LP solver whether the flipped
//! region is nonempty. Two independent safety nets back the search: a
//! Fourier-Motzkin oracle for the solver ([`fm`]) and random sampling for
//! completeness ([`sample_fingerprints`]).

pub mod fm;
pub mod lp;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::io::{self, BufRead, Write};
use std::path::Path;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::Fingerprint;
use crate::lenvec::{subsets_of_size, LengthEntry, LengthVector, Rat, SubsetMask};

/// Enumeration refuses n above this unless explicitly overridden.
pub const DEFAULT_GUARD: usize = 8;

#[derive(Debug)]
pub enum Error {
    /// Enumeration needs n ≥ 4.
    DomainN { n: usize },
    GuardExceeded { n: usize, guard: usize },
    /// Regularity annotation got a d outside 2..=n+1.
    BadDimension { d: usize },
    Io(io::Error),
    Malformed { line: usize, msg: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DomainN { n } => write!(f, "enumeration needs n >= 4, got {n}"),
            Error::GuardExceeded { n, guard } => {
                write!(f, "n={n} exceeds the enumeration guard {guard}")
            }
            Error::BadDimension { d } => write!(f, "cannot annotate regularity for d={d}"),
            Error::Io(e) => write!(f, "atlas i/o: {e}"),
            Error::Malformed { line, msg } => write!(f, "atlas line {line}: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<io::Error> for Error {
    fn from(e: io::Error) -> Self {
        Error::Io(e)
    }
}

/// `coeffs · x` compared against `rhs`; the comparison lives in the system
/// bucket the row is filed under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

impl Constraint {
    fn dot(&self, x: &[Rat]) -> Rat {
        self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

/// Equalities, weak inequalities (≥), and strict inequalities (>) over
/// x₁..x_n. Variables are free; sign conditions are ordinary rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub n_vars: usize,
    pub equalities: Vec<Constraint>,
    pub weak: Vec<Constraint>,
    pub strict: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(n_vars: usize) -> Self {
        LinearSystem { n_vars, equalities: Vec::new(), weak: Vec::new(), strict: Vec::new() }
    }

    /// The open ordered cone, normalized: Σ x_i = 1, x_{i+1} ≥ x_i, x₁ > 0.
    pub fn ordered_simplex(n: usize) -> Self {
        let mut sys = LinearSystem::new(n);
        sys.equalities.push(Constraint { coeffs: vec![Rat::one(); n], rhs: Rat::one() });
        for i in 0..n - 1 {
            let mut coeffs = vec![Rat::zero(); n];
            coeffs[i] = -Rat::one();
            coeffs[i + 1] = Rat::one();
            sys.weak.push(Constraint { coeffs, rhs: Rat::zero() });
        }
        let mut first = vec![Rat::zero(); n];
        first[0] = Rat::one();
        sys.strict.push(Constraint { coeffs: first, rhs: Rat::zero() });
        sys
    }

    pub fn strictly_satisfied_by(&self, x: &[Rat]) -> bool {
        self.equalities.iter().all(|c| c.dot(x) == c.rhs)
            && self.weak.iter().all(|c| c.dot(x) >= c.rhs)
            && self.strict.iter().all(|c| c.dot(x) > c.rhs)
    }
}

/// The strict system describing the chamber with exactly the given short
/// levels (levels[k] = short sets of size k+1 containing n, over a sorted
/// vector). Every set not listed at its level is constrained long.
pub(crate) fn system_for_levels(n: usize, levels: &[Vec<SubsetMask>]) -> LinearSystem {
    let mut sys = LinearSystem::ordered_simplex(n);
    for (k, level) in levels.iter().enumerate() {
        for bars in subsets_of_size(n - 1, k) {
            let j = SubsetMask::from_bits(bars).with(n);
            let short = level.binary_search(&j).is_ok();
            let coeffs = (1..=n)
                .map(|i| {
                    if j.contains(i) == short {
                        -Rat::one()
                    } else {
                        Rat::one()
                    }
                })
                .collect();
            sys.strict.push(Constraint { coeffs, rhs: Rat::zero() });
        }
    }
    sys
}

/// Necessary conditions for a level family to be realizable by an ordered
/// vector: dropping an element of a short set stays short, and lowering an
/// element to a smaller unused index stays short.
pub(crate) fn closed_family(n: usize, levels: &[Vec<SubsetMask>]) -> bool {
    let member = |k: usize, m: SubsetMask| levels[k].binary_search(&m).is_ok();
    for (k, level) in levels.iter().enumerate() {
        for &j in level {
            for b in j.without(n).indices() {
                if k == 0 {
                    unreachable!("level 0 sets are {{n}} only");
                }
                if !member(k - 1, j.without(b)) {
                    return false;
                }
                for lower in 1..b {
                    if !j.contains(lower) && !member(k, j.without(b).with(lower)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// One chamber class: its fingerprint, an exact interior witness (sorted),
/// and regularity verdicts keyed by d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberRecord {
    pub fingerprint: Fingerprint,
    pub witness: LengthVector,
    pub regularity: BTreeMap<usize, bool>,
}

/// All chamber classes for one n, sorted by fingerprint serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberAtlas {
    n: usize,
    records: Vec<ChamberRecord>,
}

type LevelKey = Vec<Vec<u64>>;

fn level_key(levels: &[Vec<SubsetMask>]) -> LevelKey {
    levels.iter().map(|l| l.iter().map(|m| m.bits()).collect()).collect()
}

/// Replace ε by 1/M, doubling M until the fingerprint is unchanged twice in
/// a row; returns that rational stand-in.
fn stabilized(l: &LengthVector) -> LengthVector {
    let mut prev: Option<(Fingerprint, LengthVector)> = None;
    let mut streak = 0;
    let mut m = 16u64;
    while m <= 1 << 40 {
        if let Ok(v) = l.substitute_eps(m) {
            if v.is_generic() {
                let fp = Fingerprint::of(&v).expect("just checked generic");
                match &prev {
                    Some((pfp, _)) if *pfp == fp => streak += 1,
                    _ => streak = 0,
                }
                if streak == 2 {
                    return prev.expect("streak implies a previous").1;
                }
                prev = Some((fp, v));
            }
        }
        m *= 2;
    }
    panic!("epsilon substitution did not stabilize");
}

fn seeds(n: usize) -> Vec<LengthVector> {
    let mut ones = vec![1i64; n];
    ones[n - 1] = n as i64 - 2;
    let mut twos = vec![2i64; n];
    twos[n - 1] = 3; // odd total, hence generic
    let mut eps = vec![LengthEntry::new(Rat::zero(), 1).expect("eps is positive"); n - 1];
    eps.push(LengthEntry::new(Rat::one(), 0).expect("1 is positive"));
    vec![
        LengthVector::from_ints(&ones).expect("valid seed"),
        LengthVector::from_ints(&twos).expect("valid seed"),
        stabilized(&LengthVector::new(eps).expect("valid seed")),
    ]
}

/// Enumerate every chamber class via breadth-first wall crossing from the
/// seed chambers. `guard` rejects n that would explode the subset lattice;
/// [`DEFAULT_GUARD`] is the usual value.
pub fn enumerate_chambers(n: usize, guard: usize) -> Result<ChamberAtlas, Error> {
    if n < 4 {
        return Err(Error::DomainN { n });
    }
    if n > guard {
        return Err(Error::GuardExceeded { n, guard });
    }
    let mut visited: BTreeMap<LevelKey, (Fingerprint, LengthVector)> = BTreeMap::new();
    let mut dead: BTreeSet<LevelKey> = BTreeSet::new();
    let mut queue: VecDeque<Vec<Vec<SubsetMask>>> = VecDeque::new();

    for seed in seeds(n) {
        let (sorted, _) = seed.sorted();
        let fp = Fingerprint::of(&sorted).expect("seeds are generic");
        let levels = fp.complex().levels().to_vec();
        let key = level_key(&levels);
        if !visited.contains_key(&key) {
            visited.insert(key, (fp, sorted));
            queue.push_back(levels);
        }
    }

    while let Some(levels) = queue.pop_front() {
        for k in 0..levels.len() {
            for bars in subsets_of_size(n - 1, k) {
                let j = SubsetMask::from_bits(bars).with(n);
                let mut candidate = levels.clone();
                match candidate[k].binary_search(&j) {
                    Ok(pos) => {
                        candidate[k].remove(pos);
                    }
                    Err(pos) => candidate[k].insert(pos, j),
                }
                let key = level_key(&candidate);
                if visited.contains_key(&key) || dead.contains(&key) {
                    continue;
                }
                if !closed_family(n, &candidate) {
                    dead.insert(key);
                    continue;
                }
                match lp::feasible_interior(&system_for_levels(n, &candidate)) {
                    Some(point) => {
                        let witness =
                            LengthVector::from_rats(point).expect("interior point is positive");
                        let fp = Fingerprint::of(&witness)
                            .expect("interior point avoids every wall");
                        assert_eq!(
                            level_key(fp.complex().levels()),
                            key,
                            "solver point must realize the flipped verdicts"
                        );
                        visited.insert(key, (fp, witness));
                        queue.push_back(candidate);
                    }
                    None => {
                        dead.insert(key);
                    }
                }
            }
        }
    }

    let mut records: Vec<ChamberRecord> = visited
        .into_values()
        .map(|(fingerprint, witness)| {
            let regularity = (5..n)
                .step_by(2)
                .map(|d| {
                    let flag = witness
                        .is_d_regular_ordered(d)
                        .expect("witness is sorted and 5 <= d <= n-1");
                    (d, flag)
                })
                .collect();
            ChamberRecord { fingerprint, witness, regularity }
        })
        .collect();
    records.sort_by(|a, b| a.fingerprint.canonical_json().cmp(&b.fingerprint.canonical_json()));
    Ok(ChamberAtlas { n, records })
}

/// Fingerprints of random generic vectors: integer entries in [1, 4n], with
/// every fourth draw mixing ε entries in. Deterministic for a fixed seed.
pub fn sample_fingerprints(n: usize, trials: u64, seed: u64) -> BTreeSet<Fingerprint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = BTreeSet::new();
    for t in 0..trials {
        let eps_trial = t % 4 == 3;
        let entries: Vec<LengthEntry> = (0..n)
            .map(|_| {
                let int = rng.gen_range(1..=4 * n as i64);
                if eps_trial && rng.gen_bool(0.5) {
                    LengthEntry::new(Rat::zero(), 1).expect("eps is positive")
                } else {
                    LengthEntry::new(Rat::from_integer(int.into()), 0).expect("positive")
                }
            })
            .collect();
        let v = LengthVector::new(entries).expect("n >= 3 and entries positive");
        if v.is_generic() {
            out.insert(Fingerprint::of(&v).expect("just checked generic"));
        }
    }
    out
}

/// Compute and store `is_d_regular` of every witness for every listed d.
pub fn annotate_regularity(atlas: &mut ChamberAtlas, ds: &[usize]) -> Result<(), Error> {
    for &d in ds {
        for record in &mut atlas.records {
            let flag =
                record.witness.is_d_regular(d).map_err(|_| Error::BadDimension { d })?;
            record.regularity.insert(d, flag);
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct RecordLine {
    fingerprint: Fingerprint,
    witness: String,
    regular: BTreeMap<String, bool>,
}

impl ChamberAtlas {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn records(&self) -> &[ChamberRecord] {
        &self.records
    }

    pub fn fingerprints(&self) -> BTreeSet<Fingerprint> {
        self.records.iter().map(|r| r.fingerprint.clone()).collect()
    }

    pub fn write_to(&self, w: &mut impl Write) -> io::Result<()> {
        writeln!(w, "LINKAGE-ATLAS v1 n={}", self.n)?;
        for r in &self.records {
            let line = RecordLine {
                fingerprint: r.fingerprint.clone(),
                witness: r.witness.to_string(),
                regular: r.regularity.iter().map(|(d, f)| (d.to_string(), *f)).collect(),
            };
            writeln!(w, "{}", serde_json::to_string(&line).expect("serializable"))?;
        }
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("vec write cannot fail");
        buf
    }

    /// Whole-file atomic write: temp sibling, then rename over the target.
    pub fn save(&self, path: &Path) -> Result<(), Error> {
        let mut name = path.file_name().unwrap_or_default().to_os_string();
        name.push(".tmp");
        let tmp = path.with_file_name(name);
        std::fs::write(&tmp, self.to_bytes())?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn read_from(r: impl BufRead) -> Result<ChamberAtlas, Error> {
        let mut lines = r.lines();
        let header = lines.next().ok_or(Error::Malformed {
            line: 1,
            msg: "empty file".into(),
        })??;
        let n: usize = header
            .strip_prefix("LINKAGE-ATLAS v1 n=")
            .and_then(|rest| rest.parse().ok())
            .ok_or_else(|| Error::Malformed { line: 1, msg: format!("bad header {header:?}") })?;
        let mut records = Vec::new();
        let mut prev_json: Option<String> = None;
        for (i, line) in lines.enumerate() {
            let lineno = i + 2;
            let malformed = |msg: String| Error::Malformed { line: lineno, msg };
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let parsed: RecordLine =
                serde_json::from_str(&line).map_err(|e| malformed(e.to_string()))?;
            if parsed.fingerprint.n() != n {
                return Err(malformed(format!(
                    "fingerprint n={} in an n={n} atlas",
                    parsed.fingerprint.n()
                )));
            }
            let witness: LengthVector = parsed
                .witness
                .parse()
                .map_err(|e| malformed(format!("witness: {e}")))?;
            let wfp = Fingerprint::of(&witness)
                .map_err(|e| malformed(format!("witness: {e}")))?;
            if wfp != parsed.fingerprint {
                return Err(malformed("witness does not reproduce the fingerprint".into()));
            }
            let json = parsed.fingerprint.canonical_json();
            if let Some(p) = &prev_json {
                if *p >= json {
                    return Err(malformed("records out of canonical order".into()));
                }
            }
            prev_json = Some(json);
            let mut regularity = BTreeMap::new();
            for (key, flag) in parsed.regular {
                let d: usize = key
                    .parse()
                    .map_err(|_| malformed(format!("bad regularity key {key:?}")))?;
                regularity.insert(d, flag);
            }
            records.push(ChamberRecord { fingerprint: parsed.fingerprint, witness, regularity });
        }
        Ok(ChamberAtlas { n, records })
    }

    pub fn load(path: &Path) -> Result<ChamberAtlas, Error> {
        let file = std::fs::File::open(path)?;
        Self::read_from(io::BufReader::new(file))
    }
}
