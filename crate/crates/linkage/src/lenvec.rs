//! Length vectors over the ordered field ℚ(ε).
//!
//! Every quantity here is exact. An entry is `base + eps·ε` where `base` is a
//! rational and ε is one shared positive infinitesimal: smaller than every
//! positive rational, so comparisons are lexicographic in `(base, ε-count)`.
//! Writing a bar length as `eps` means "short enough that shrinking it
//! further never changes any subset comparison".
//!
//! Text format for a vector: comma-separated entries, each one of
//!
//! * an integer `3` or a fraction `5/6` (positive),
//! * `eps` (or `2eps` for a doubled infinitesimal),
//! * a combination `5-eps`, `1/2+3eps` (these arise from derived vectors;
//!   plain parsing of user input normally sees only the first two forms).
//!
//! Indices are 1-based throughout: bar `i` of an `n`-bar vector is
//! `i ∈ {1, …, n}`, and [`SubsetMask`] bit `i − 1` stands for bar `i`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used everywhere in the crate.
pub type Rat = BigRational;

/// Convenience constructor for a rational `p/q` with `q > 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    assert!(q > 0, "rat() wants a positive denominator, got {q}");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Convenience constructor for an integer rational.
pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Vectors must have at least three bars.
    TooFewEntries(usize),
    /// Entry at `index` (1-based) is not strictly positive in ℚ(ε).
    NonPositiveEntry { index: usize },
    /// Malformed vector or entry text.
    Parse(String),
    /// Bar index outside `1..=limit`.
    IndexOutOfRange { index: usize, limit: usize },
    /// Subset mask mentions bars beyond `n`.
    MaskOutOfRange { mask: SubsetMask, n: usize },
    /// Operation requires an ordered (non-decreasing) vector.
    NotOrdered,
    /// Dimension parameter outside the meaningful range.
    DimensionOutOfRange { d: usize, n: usize },
    /// `derive_minus` would produce a non-positive last entry.
    NonPositiveResult { j: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooFewEntries(n) => write!(f, "length vector needs at least 3 entries, got {n}"),
            Error::NonPositiveEntry { index } => {
                write!(f, "entry {index} is not strictly positive")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::IndexOutOfRange { index, limit } => {
                write!(f, "bar index {index} out of range 1..={limit}")
            }
            Error::MaskOutOfRange { mask, n } => {
                write!(f, "subset {mask} mentions bars beyond n={n}")
            }
            Error::NotOrdered => write!(f, "vector is not sorted in non-decreasing order"),
            Error::DimensionOutOfRange { d, n } => {
                write!(f, "dimension d={d} out of range for n={n}")
            }
            Error::NonPositiveResult { j } => {
                write!(f, "shortening by bar {j} gives a non-positive last entry")
            }
        }
    }
}

impl std::error::Error for Error {}

/// A subset of bar indices `{1, …, n}`, bit `i − 1` ↔ bar `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Build from 1-based indices.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u64;
        for &i in indices {
            assert!((1..=64).contains(&i), "bar index {i} out of range");
            bits |= 1 << (i - 1);
        }
        SubsetMask(bits)
    }

    /// The full set `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 64);
        if n == 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && i <= 64 && self.0 & (1 << (i - 1)) != 0
    }

    pub fn with(self, i: usize) -> Self {
        assert!((1..=64).contains(&i));
        SubsetMask(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: usize) -> Self {
        assert!((1..=64).contains(&i));
        SubsetMask(self.0 & !(1 << (i - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement_within(self, n: usize) -> Self {
        SubsetMask(Self::full(n).0 & !self.0)
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn fits_within(self, n: usize) -> bool {
        self.is_subset_of(Self::full(n))
    }

    /// 1-based indices, ascending.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (1..=64usize).filter(move |i| bits & (1 << (i - 1)) != 0)
    }

    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self, Error> {
        u64::from_str_radix(s, 16)
            .map(SubsetMask)
            .map_err(|_| Error::Parse(format!("bad subset mask {s:?}")))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.indices() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Verdict of a subset against its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Short,
    Long,
    Tight,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Short => write!(f, "short"),
            Classification::Long => write!(f, "long"),
            Classification::Tight => write!(f, "tight"),
        }
    }
}

/// A total weight in ℚ(ε): `base + eps_count·ε`, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    base: Rat,
    eps: i64,
}

impl Weight {
    pub fn new(base: Rat, eps_count: i64) -> Self {
        Weight { base, eps: eps_count }
    }

    pub fn zero() -> Self {
        Weight { base: Rat::zero(), eps: 0 }
    }

    pub fn base(&self) -> &Rat {
        &self.base
    }

    pub fn eps_count(&self) -> i64 {
        self.eps
    }

    pub fn is_positive(&self) -> bool {
        *self > Weight::zero()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}eps)", self.base, self.eps)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight { base: self.base + rhs.base, eps: self.eps + rhs.eps }
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        self.base += rhs.base;
        self.eps += rhs.eps;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight { base: self.base - rhs.base, eps: self.eps - rhs.eps }
    }
}

/// One bar length: `base + eps·ε`, strictly positive.
///
/// Parsed input only ever has `(base > 0, eps = 0)` or `(0, eps = 1)`;
/// derived vectors (`derive_minus`, `contract`) may carry other exact
/// combinations such as `5 - eps`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LengthEntry {
    base: Rat,
    eps: i64,
}

impl LengthEntry {
    pub fn new(base: Rat, eps: i64) -> Result<Self, Error> {
        let e = LengthEntry { base, eps };
        if e.weight().is_positive() {
            Ok(e)
        } else {
            Err(Error::NonPositiveEntry { index: 0 })
        }
    }

    pub fn rational(base: Rat) -> Result<Self, Error> {
        Self::new(base, 0)
    }

    pub fn epsilon() -> Self {
        LengthEntry { base: Rat::zero(), eps: 1 }
    }

    pub fn base(&self) -> &Rat {
        &self.base
    }

    pub fn eps_count(&self) -> i64 {
        self.eps
    }

    pub fn weight(&self) -> Weight {
        Weight { base: self.base.clone(), eps: self.eps }
    }

    pub fn is_epsilon(&self) -> bool {
        self.base.is_zero()
    }
}

impl fmt::Display for LengthEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn eps_part(k: i64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match k {
                1 => write!(f, "eps"),
                k => write!(f, "{k}eps"),
            }
        }
        if self.eps == 0 {
            write!(f, "{}", self.base)
        } else if self.base.is_zero() {
            eps_part(self.eps, f)
        } else if self.eps > 0 {
            write!(f, "{}+", self.base)?;
            eps_part(self.eps, f)
        } else {
            write!(f, "{}-", self.base)?;
            eps_part(-self.eps, f)
        }
    }
}

fn parse_rat(tok: &str) -> Result<Rat, Error> {
    let bad = || Error::Parse(format!("bad rational {tok:?}"));
    if let Some((p, q)) = tok.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q <= BigInt::zero() {
            return Err(Error::Parse(format!("denominator in {tok:?} must be positive")));
        }
        Ok(Rat::new(p, q))
    } else {
        let p = BigInt::from_str(tok.trim()).map_err(|_| bad())?;
        Ok(Rat::from_integer(p))
    }
}

impl FromStr for LengthEntry {
    type Err = Error;

    /// Grammar: `RAT`, `eps`, `<k>eps`, `RAT+eps`, `RAT-<k>eps`, ...
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty entry".into()));
        }
        let parse_eps_count = |t: &str| -> Result<i64, Error> {
            let t = t.trim();
            if t == "eps" {
                return Ok(1);
            }
            let digits = t.strip_suffix("eps").ok_or_else(|| {
                Error::Parse(format!("bad entry {s:?} (expected p/q, integer, or eps)"))
            })?;
            digits
                .trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad eps multiplier in {s:?}")))
        };
        let entry = if s.ends_with("eps") {
            // split a trailing ±eps-part off a possible rational head
            if let Some(pos) = s.rfind('+') {
                let (head, tail) = (&s[..pos], &s[pos + 1..]);
                if head.is_empty() {
                    return Err(Error::Parse(format!("bad entry {s:?}")));
                }
                LengthEntry { base: parse_rat(head)?, eps: parse_eps_count(tail)? }
            } else if let Some(pos) = s.rfind('-').filter(|&p| p > 0) {
                let (head, tail) = (&s[..pos], &s[pos + 1..]);
                LengthEntry { base: parse_rat(head)?, eps: -parse_eps_count(tail)? }
            } else {
                LengthEntry { base: Rat::zero(), eps: parse_eps_count(s)? }
            }
        } else {
            let base = parse_rat(s)?;
            if base.is_zero() {
                return Err(Error::Parse(format!(
                    "entry {s:?} is zero; write an infinitesimal bar as \"eps\""
                )));
            }
            LengthEntry { base, eps: 0 }
        };
        if !entry.weight().is_positive() {
            return Err(Error::Parse(format!("entry {s:?} is not strictly positive")));
        }
        Ok(entry)
    }
}

/// An `n`-bar length vector, `n ≥ 3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LengthVector {
    entries: Vec<LengthEntry>,
}

impl LengthVector {
    pub fn new(entries: Vec<LengthEntry>) -> Result<Self, Error> {
        if entries.len() < 3 {
            return Err(Error::TooFewEntries(entries.len()));
        }
        if entries.len() > 64 {
            return Err(Error::Parse(format!(
                "length vectors are limited to 64 bars, got {}",
                entries.len()
            )));
        }
        Ok(LengthVector { entries })
    }

    /// All-rational vector from integer lengths.
    pub fn from_ints(values: &[i64]) -> Result<Self, Error> {
        let mut entries = Vec::with_capacity(values.len());
        for (i, &v) in values.iter().enumerate() {
            entries.push(
                LengthEntry::rational(rat_int(v))
                    .map_err(|_| Error::NonPositiveEntry { index: i + 1 })?,
            );
        }
        LengthVector::new(entries)
    }

    pub fn from_rats(values: Vec<Rat>) -> Result<Self, Error> {
        let mut entries = Vec::with_capacity(values.len());
        for (i, v) in values.into_iter().enumerate() {
            entries.push(
                LengthEntry::rational(v).map_err(|_| Error::NonPositiveEntry { index: i + 1 })?,
            );
        }
        LengthVector::new(entries)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// 1-based access.
    pub fn get(&self, i: usize) -> &LengthEntry {
        &self.entries[i - 1]
    }

    pub fn entries(&self) -> &[LengthEntry] {
        &self.entries
    }

    pub fn total_weight(&self) -> Weight {
        let mut w = Weight::zero();
        for e in &self.entries {
            w += e.weight();
        }
        w
    }

    /// Weight of the subset `j ⊆ {1..n}`. Panics if the mask exceeds `n`.
    pub fn subset_weight(&self, j: SubsetMask) -> Weight {
        assert!(j.fits_within(self.n()), "subset {j} exceeds n={}", self.n());
        let mut w = Weight::zero();
        for i in j.indices() {
            w += self.get(i).weight();
        }
        w
    }

    /// Compare `weight(J)` against `weight(Jᶜ)`.
    pub fn classify(&self, j: SubsetMask) -> Classification {
        let w = self.subset_weight(j);
        let rest = self.total_weight() - w.clone();
        match w.cmp(&rest) {
            Ordering::Less => Classification::Short,
            Ordering::Greater => Classification::Long,
            Ordering::Equal => Classification::Tight,
        }
    }

    /// First Tight subset containing bar `n`, scanning masks in ascending
    /// order; `None` means the vector is generic. Every Tight subset or its
    /// complement contains `n`, so scanning half the subsets suffices.
    pub fn tight_witness(&self) -> Option<SubsetMask> {
        let n = self.n();
        let oracle = self.weight_oracle();
        let top = 1u64 << (n - 1);
        for low in 0..top {
            let mask = low | top;
            if oracle.classify(mask) == Classification::Tight {
                return Some(SubsetMask(mask));
            }
        }
        None
    }

    /// No subset is Tight: the vector lies in an open chamber.
    pub fn is_generic(&self) -> bool {
        self.tight_witness().is_none()
    }

    pub fn is_ordered(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    /// Stable sort into non-decreasing order. The returned permutation lists,
    /// for each sorted position, the 1-based index the entry came from.
    pub fn sorted(&self) -> (LengthVector, Vec<usize>) {
        let mut idx: Vec<usize> = (0..self.entries.len()).collect();
        idx.sort_by(|&a, &b| self.entries[a].cmp(&self.entries[b]));
        let entries = idx.iter().map(|&i| self.entries[i].clone()).collect();
        let perm = idx.iter().map(|&i| i + 1).collect();
        (LengthVector { entries }, perm)
    }

    /// d-regularity, general form: all long (d−1)-subsets share a bar.
    pub fn is_d_regular(&self, d: usize) -> Result<bool, Error> {
        let n = self.n();
        if d < 2 || d.saturating_sub(1) > n {
            return Err(Error::DimensionOutOfRange { d, n });
        }
        let size = d - 1;
        let oracle = self.weight_oracle();
        let mut common = SubsetMask::full(n).bits();
        let mut any_long = false;
        for mask in subsets_of_size(n, size) {
            if oracle.classify(mask) == Classification::Long {
                any_long = true;
                common &= mask;
                if common == 0 {
                    return Ok(false);
                }
            }
        }
        Ok(!any_long || common != 0)
    }

    /// d-regularity via the ordered shortcut: the d−1 largest bars below the
    /// top one must not form a long subset. Agrees with [`Self::is_d_regular`]
    /// on every ordered vector.
    pub fn is_d_regular_ordered(&self, d: usize) -> Result<bool, Error> {
        let n = self.n();
        if !self.is_ordered() {
            return Err(Error::NotOrdered);
        }
        if d < 2 || d.saturating_sub(1) > n {
            return Err(Error::DimensionOutOfRange { d, n });
        }
        if d == 2 {
            return Ok(true);
        }
        if d == n + 1 {
            // the only (d−1)-subset is everything; it intersects itself
            return Ok(true);
        }
        let mut mask = SubsetMask::EMPTY;
        for i in (n - d + 1)..=(n - 1) {
            mask = mask.with(i);
        }
        Ok(self.classify(mask) != Classification::Long)
    }

    /// Remove the bars in `j ⊆ {1..n−1}` and grow the last bar by their
    /// total weight. Also known as freezing `j` against the longest bar.
    pub fn contract(&self, j: SubsetMask) -> Result<LengthVector, Error> {
        let n = self.n();
        if !j.fits_within(n - 1) {
            return Err(Error::MaskOutOfRange { mask: j, n: n - 1 });
        }
        let k = j.len();
        if n - k < 3 {
            return Err(Error::TooFewEntries(n - k));
        }
        let mut entries = Vec::with_capacity(n - k);
        let mut extra = Weight::zero();
        for i in 1..=n - 1 {
            if j.contains(i) {
                extra += self.get(i).weight();
            } else {
                entries.push(self.get(i).clone());
            }
        }
        let last = self.get(n).weight() + extra;
        entries.push(LengthEntry { base: last.base, eps: last.eps });
        Ok(LengthVector { entries })
    }

    /// Drop bar `j` and lengthen the last bar by `ℓ_j`.
    pub fn derive_plus(&self, j: usize) -> Result<LengthVector, Error> {
        self.derive(j, true)
    }

    /// Drop bar `j` and shorten the last bar by `ℓ_j`. The result is not
    /// re-sorted; callers wanting ordered output sort it themselves.
    pub fn derive_minus(&self, j: usize) -> Result<LengthVector, Error> {
        self.derive(j, false)
    }

    fn derive(&self, j: usize, plus: bool) -> Result<LengthVector, Error> {
        let n = self.n();
        if !(1..=n - 1).contains(&j) {
            return Err(Error::IndexOutOfRange { index: j, limit: n - 1 });
        }
        if n - 1 < 3 {
            return Err(Error::TooFewEntries(n - 1));
        }
        let lj = self.get(j).weight();
        let last = if plus {
            self.get(n).weight() + lj
        } else {
            let w = self.get(n).weight() - lj;
            if !w.is_positive() {
                return Err(Error::NonPositiveResult { j });
            }
            w
        };
        let mut entries = Vec::with_capacity(n - 1);
        for i in 1..=n - 1 {
            if i != j {
                entries.push(self.get(i).clone());
            }
        }
        entries.push(LengthEntry { base: last.base, eps: last.eps });
        Ok(LengthVector { entries })
    }

    /// Multiply every entry by a positive rational. All classifications are
    /// invariant under this.
    pub fn scale(&self, c: &Rat) -> LengthVector {
        assert!(c.is_positive(), "scale factor must be positive");
        let entries = self
            .entries
            .iter()
            .map(|e| LengthEntry { base: &e.base * c, eps: e.eps })
            .collect();
        LengthVector { entries }
    }

    /// Replace every `eps` by the literal rational `1/m`.
    pub fn substitute_eps(&self, m: u64) -> Result<LengthVector, Error> {
        let unit = Rat::new(BigInt::one(), BigInt::from(m));
        let mut entries = Vec::with_capacity(self.n());
        for (i, e) in self.entries.iter().enumerate() {
            let base = &e.base + &unit * BigInt::from(e.eps);
            entries.push(
                LengthEntry::rational(base).map_err(|_| Error::NonPositiveEntry { index: i + 1 })?,
            );
        }
        LengthVector::new(entries)
    }

    pub fn has_eps(&self) -> bool {
        self.entries.iter().any(|e| e.eps != 0)
    }

    /// Fast exact comparator for subset scans. Falls back to full rational
    /// arithmetic when scaled numerators do not fit in machine words.
    pub(crate) fn weight_oracle(&self) -> WeightOracle<'_> {
        let mut lcm = BigInt::one();
        for e in &self.entries {
            lcm = lcm.lcm(e.base.denom());
        }
        let mut vals = Vec::with_capacity(self.n());
        let mut total = (0i128, 0i64);
        let mut ok = true;
        'build: {
            for e in &self.entries {
                let scaled = e.base.numer() * (&lcm / e.base.denom());
                let Some(v) = scaled.to_i128() else {
                    ok = false;
                    break 'build;
                };
                let (Some(tb), Some(te)) =
                    (total.0.checked_add(v.abs()), total.1.checked_add(e.eps.abs()))
                else {
                    ok = false;
                    break 'build;
                };
                if tb > i128::MAX / 8 || te > i64::MAX / 8 {
                    ok = false;
                    break 'build;
                }
                total = (tb, te);
                vals.push((v, e.eps));
            }
        }
        if ok {
            let mut t = (0i128, 0i64);
            for &(b, e) in &vals {
                t.0 += b;
                t.1 += e;
            }
            WeightOracle::Fast { vals, total: t }
        } else {
            WeightOracle::Slow { v: self, total: self.total_weight() }
        }
    }
}

impl fmt::Display for LengthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for LengthVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut entries = Vec::new();
        for tok in s.split(',') {
            entries.push(tok.parse::<LengthEntry>()?);
        }
        LengthVector::new(entries)
    }
}

/// Exact subset classifier; `Fast` works on common-denominator integers.
pub(crate) enum WeightOracle<'a> {
    Fast { vals: Vec<(i128, i64)>, total: (i128, i64) },
    Slow { v: &'a LengthVector, total: Weight },
}

impl WeightOracle<'_> {
    pub(crate) fn classify(&self, mask: u64) -> Classification {
        match self {
            WeightOracle::Fast { vals, total } => {
                let mut b = 0i128;
                let mut e = 0i64;
                let mut m = mask;
                while m != 0 {
                    let i = m.trailing_zeros() as usize;
                    b += vals[i].0;
                    e += vals[i].1;
                    m &= m - 1;
                }
                match (2 * b, 2 * e).cmp(&(total.0, total.1)) {
                    Ordering::Less => Classification::Short,
                    Ordering::Greater => Classification::Long,
                    Ordering::Equal => Classification::Tight,
                }
            }
            WeightOracle::Slow { v, total } => {
                let w = v.subset_weight(SubsetMask(mask));
                let rest = total.clone() - w.clone();
                match w.cmp(&rest) {
                    Ordering::Less => Classification::Short,
                    Ordering::Greater => Classification::Long,
                    Ordering::Equal => Classification::Tight,
                }
            }
        }
    }
}

/// All masks over `{1..n}` with exactly `size` bits, ascending.
/// Gosper's hack; `size == 0` yields just the empty mask.
pub(crate) fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut cur = if size == 0 { Some(0u64) } else { Some((1u64 << size) - 1) };
    std::iter::from_fn(move || {
        let m = cur?;
        if m > limit {
            cur = None;
            return None;
        }
        if size == 0 || m == 0 {
            cur = None;
            return Some(m);
        }
        let c = m & m.wrapping_neg();
        let r = m + c;
        cur = if r == 0 { None } else { Some((((r ^ m) >> 2) / c) | r) };
        Some(m)
    })
}
