//! A Z/2 model of the intersection ring of a linkage moduli space.
//!
//! For a generic, d-regular ℓ (d odd ≥ 5, n ≥ d+2) the ring is presented by
//! one degree-1 class `R` and one degree-1 class `X_j` for every bar `j`
//! with `{j, n}` short; after sorting, those bars are exactly `1..=k` with
//! `k = a₁(ℓ)`. Products are reduced by two relations:
//!
//! 1. `X_j² = R·X_j`,
//! 2. a squarefree product `X_J` vanishes when `J ∪ {n}` is long,
//!
//! and every monomial of degree above `n − d` is truncated to zero. Normal
//! forms are therefore `R^a · X_J` with `J ∪ {n}` short and `a + |J| ≤ n−d`.
//! In degrees 0..2 this is the exact ring; the relations above are not
//! claimed to be complete in degrees ≥ 3, so those graded dimensions are
//! upper bounds.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::complex::{AVector, ShortComplex};
use crate::lenvec::{LengthVector, SubsetMask};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotGeneric(SubsetMask),
    NotRegular { d: usize },
    /// `{n}` itself is long: the moduli space is empty.
    EmptySpace,
    /// The model only exists for odd d ≥ 5.
    UnsupportedDimension(usize),
    /// Too few bars for the requested operation.
    TooFewLinks { n: usize, needed: usize },
    /// Elements from different presentations were mixed.
    PresentationMismatch,
    UnknownGenerator { j: usize, k: usize },
    DegreeOutOfRange { r: usize, truncation: usize },
    ParseElement(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotGeneric(w) => write!(f, "vector is not generic: subset {w} is tight"),
            Error::NotRegular { d } => write!(f, "vector is not {d}-regular"),
            Error::EmptySpace => write!(f, "the longest bar outweighs the rest: empty moduli space"),
            Error::UnsupportedDimension(d) => {
                if d % 2 == 0 {
                    write!(f, "d={d} is even; the even case is handled by other methods")
                } else {
                    write!(f, "d={d} is below 5; low odd dimensions are handled by other methods")
                }
            }
            Error::TooFewLinks { n, needed } => {
                write!(f, "need at least {needed} bars, got {n}")
            }
            Error::PresentationMismatch => {
                write!(f, "ring elements belong to different presentations")
            }
            Error::UnknownGenerator { j, k } => {
                write!(f, "generator X{{{j}}} out of range 1..={k}")
            }
            Error::DegreeOutOfRange { r, truncation } => {
                write!(f, "degree {r} outside 0..={truncation}")
            }
            Error::ParseElement(msg) => write!(f, "bad ring element: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// A normal-form monomial `R^a · X_J` (support over generator indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub r_exp: u32,
    pub support: SubsetMask,
}

impl Monomial {
    pub fn degree(&self) -> usize {
        self.r_exp as usize + self.support.len()
    }

    pub const ONE: Monomial = Monomial { r_exp: 0, support: SubsetMask::EMPTY };
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(other.r_exp.cmp(&self.r_exp))
            .then(self.support.cmp(&other.support))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.r_exp {
            0 => {}
            1 => parts.push("R".into()),
            a => parts.push(format!("R^{a}")),
        }
        if !self.support.is_empty() {
            let ix: Vec<String> = self.support.indices().map(|i| i.to_string()).collect();
            parts.push(format!("X{{{}}}", ix.join(",")));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A Z/2 combination of normal-form monomials (presence = coefficient 1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RingElement {
    sig: u64,
    monomials: BTreeSet<Monomial>,
}

impl RingElement {
    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn term_count(&self) -> usize {
        self.monomials.len()
    }

    /// Degree of the top monomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.monomials.iter().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.monomials.iter().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.monomials.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// One monomial of unreduced input: `R^a · Π X_j^{e_j}`.
#[derive(Debug, Clone, Default)]
pub struct RawMonomial {
    pub r_exp: u32,
    pub x_factors: Vec<(usize, u32)>,
}

/// Unreduced Z/2 polynomial.
#[derive(Debug, Clone, Default)]
pub struct RawPoly(pub Vec<RawMonomial>);

/// Frozen presentation for one chamber: generator set, short data, and the
/// truncation degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    n: usize,
    d: usize,
    k: usize,
    truncation: usize,
    sorted: LengthVector,
    permutation: Vec<usize>,
    a: AVector,
    complex: ShortComplex,
    short: HashSet<u64>,
    sig: u64,
}

/// Build the ring model for `ℓ` in ℝ^d. The vector is sorted internally;
/// the permutation from the input ordering is kept for provenance.
pub fn build_ring(l: &LengthVector, d: usize) -> Result<Ring, Error> {
    if d % 2 == 0 || d < 5 {
        return Err(Error::UnsupportedDimension(d));
    }
    let n = l.n();
    if n < d + 2 {
        return Err(Error::TooFewLinks { n, needed: d + 2 });
    }
    let (sorted, permutation) = l.sorted();
    let complex = ShortComplex::compute(&sorted).map_err(|e| match e {
        crate::complex::Error::NotGeneric(w) => Error::NotGeneric(w),
        other => unreachable!("unexpected complex error: {other}"),
    })?;
    let a = complex.a_vector();
    if a.0[0] == 0 {
        return Err(Error::EmptySpace);
    }
    if !sorted.is_d_regular_ordered(d).expect("d validated above") {
        return Err(Error::NotRegular { d });
    }
    debug_assert_eq!(a.0[n - d], 0, "regularity must empty level n-d");
    let k = a.0[1];
    // the bars pairing short with n form an initial segment 1..=k
    for (j, &mask) in complex.level(1).iter().enumerate() {
        debug_assert_eq!(
            mask,
            SubsetMask::from_indices(&[j + 1, n]),
            "short pairs of an ordered vector must be an initial segment"
        );
    }
    let mut short = HashSet::new();
    for level in complex.levels() {
        for m in level {
            short.insert(m.bits());
        }
    }
    let mut h = DefaultHasher::new();
    (n, d).hash(&mut h);
    for level in complex.levels() {
        for m in level {
            m.bits().hash(&mut h);
        }
        u64::MAX.hash(&mut h); // level separator
    }
    let sig = h.finish();
    Ok(Ring { n, d, k, truncation: n - d, sorted, permutation, a, complex, short, sig })
}

impl Ring {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of `X` generators (`a₁` of the sorted vector).
    pub fn generator_count(&self) -> usize {
        self.k
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn a_vector(&self) -> &AVector {
        &self.a
    }

    pub fn complex(&self) -> &ShortComplex {
        &self.complex
    }

    /// The sorted vector the generators refer to.
    pub fn sorted_vector(&self) -> &LengthVector {
        &self.sorted
    }

    /// For each sorted position, the 1-based index in the build input.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    fn support_is_short(&self, support: SubsetMask) -> bool {
        if support.is_empty() {
            return true;
        }
        self.short.contains(&(support.bits() | 1 << (self.n - 1)))
    }

    fn is_normal(&self, m: Monomial) -> bool {
        m.degree() <= self.truncation && self.support_is_short(m.support)
    }

    fn element(&self, monomials: BTreeSet<Monomial>) -> RingElement {
        RingElement { sig: self.sig, monomials }
    }

    fn check_owned(&self, e: &RingElement) -> Result<(), Error> {
        if e.sig == self.sig {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    pub fn zero(&self) -> RingElement {
        self.element(BTreeSet::new())
    }

    pub fn one(&self) -> RingElement {
        self.element(BTreeSet::from([Monomial::ONE]))
    }

    pub fn r_class(&self) -> RingElement {
        self.element(BTreeSet::from([Monomial { r_exp: 1, support: SubsetMask::EMPTY }]))
    }

    pub fn x(&self, j: usize) -> Result<RingElement, Error> {
        if j < 1 || j > self.k {
            return Err(Error::UnknownGenerator { j, k: self.k });
        }
        Ok(self.element(BTreeSet::from([Monomial {
            r_exp: 0,
            support: SubsetMask::from_indices(&[j]),
        }])))
    }

    /// The class of the reversed bar: `X_j⁻ = R + X_j` over Z/2.
    pub fn x_minus(&self, j: usize) -> Result<RingElement, Error> {
        let mut m = BTreeSet::new();
        m.insert(Monomial { r_exp: 1, support: SubsetMask::EMPTY });
        m.insert(Monomial { r_exp: 0, support: SubsetMask::from_indices(&[j]) });
        if j < 1 || j > self.k {
            return Err(Error::UnknownGenerator { j, k: self.k });
        }
        Ok(self.element(m))
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, Error> {
        self.check_owned(a)?;
        self.check_owned(b)?;
        let mut out = a.monomials.clone();
        for m in &b.monomials {
            if !out.remove(m) {
                out.insert(*m);
            }
        }
        Ok(self.element(out))
    }

    fn multiply_monomials(&self, a: Monomial, b: Monomial) -> Option<Monomial> {
        let overlap = a.support.intersection(b.support).len() as u32;
        let m = Monomial {
            r_exp: a.r_exp + b.r_exp + overlap,
            support: a.support.union(b.support),
        };
        self.is_normal(m).then_some(m)
    }

    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, Error> {
        self.check_owned(a)?;
        self.check_owned(b)?;
        let mut out: BTreeSet<Monomial> = BTreeSet::new();
        for ma in &a.monomials {
            for mb in &b.monomials {
                if let Some(m) = self.multiply_monomials(*ma, *mb) {
                    if !out.remove(&m) {
                        out.insert(m);
                    }
                }
            }
        }
        Ok(self.element(out))
    }

    /// Reduce an unreduced polynomial to normal form: `X_j^e → R^{e−1}·X_j`,
    /// kill long supports, truncate above degree `n−d`.
    pub fn normalize(&self, poly: &RawPoly) -> Result<RingElement, Error> {
        let mut out: BTreeSet<Monomial> = BTreeSet::new();
        for raw in &poly.0 {
            let mut exps: BTreeMap<usize, u32> = BTreeMap::new();
            for &(j, e) in &raw.x_factors {
                if j < 1 || j > self.k {
                    return Err(Error::UnknownGenerator { j, k: self.k });
                }
                *exps.entry(j).or_insert(0) += e;
            }
            let mut r_exp = raw.r_exp;
            let mut support = SubsetMask::EMPTY;
            for (j, e) in exps {
                if e == 0 {
                    continue;
                }
                r_exp += e - 1;
                support = support.with(j);
            }
            let m = Monomial { r_exp, support };
            if self.is_normal(m) && !out.remove(&m) {
                out.insert(m);
            }
        }
        Ok(self.element(out))
    }

    /// Count of normal-form monomials of total degree `r`.
    pub fn graded_dimension(&self, r: usize) -> Result<usize, Error> {
        if r > self.truncation {
            return Err(Error::DegreeOutOfRange { r, truncation: self.truncation });
        }
        // degree r = R^{r−m}·X_J over supports J of size m ≤ r
        Ok((0..=r).map(|m| self.a.0[m]).sum())
    }

    /// Dimensions of the quotient by `R`, degree by degree: the face counts
    /// of the short complex, truncated at degree `n−d`.
    pub fn face_ring_dimensions(&self) -> Vec<usize> {
        (0..=self.truncation).map(|r| self.a.0[r]).collect()
    }

    /// Graded dimensions for every degree `0..=n−d`. Degrees 0..2 are exact;
    /// degrees ≥ 3 are upper bounds (the relation list is not claimed
    /// complete there).
    pub fn graded_dimensions(&self) -> Vec<usize> {
        (0..=self.truncation).map(|r| self.graded_dimension(r).unwrap()).collect()
    }

    /// All degree-1 classes `Z = εR + Σ_{i∈S} X_i` with `Z·X_j = X_j²` for
    /// every generator `X_j`, found by exact F₂ elimination over the
    /// degree-2 coordinates. The zero class is excluded.
    ///
    /// Outcome: `{R}` whenever some product of two distinct generators
    /// survives (`a₂ > 0`), and `{R, X₁+…+X_k}` otherwise.
    pub fn detect_euler_candidates(&self) -> Result<Vec<RingElement>, Error> {
        if self.n < self.d + 3 {
            return Err(Error::TooFewLinks { n: self.n, needed: self.d + 3 });
        }
        // unknowns: bit 0 ↔ ε (coefficient of R), bit j ↔ s_j
        let unknowns = self.k + 1;
        assert!(unknowns <= 63, "generator count exceeds solver width");

        // degree-2 basis and coordinates
        let mut basis_index: BTreeMap<Monomial, usize> = BTreeMap::new();
        let coords = |e: &RingElement, basis_index: &mut BTreeMap<Monomial, usize>| -> Vec<usize> {
            e.monomials
                .iter()
                .map(|m| {
                    debug_assert_eq!(m.degree(), 2);
                    let next = basis_index.len();
                    *basis_index.entry(*m).or_insert(next)
                })
                .collect()
        };

        // row per (generator j, degree-2 coordinate): lhs bits over unknowns
        let mut rows: BTreeMap<(usize, usize), (u64, bool)> = BTreeMap::new();
        for j in 1..=self.k {
            let xj = self.x(j)?;
            let rxj = self.multiply(&self.r_class(), &xj)?;
            for c in coords(&rxj, &mut basis_index) {
                rows.entry((j, c)).or_insert((0, false)).0 |= 1;
            }
            for i in 1..=self.k {
                let prod = self.multiply(&self.x(i)?, &xj)?;
                for c in coords(&prod, &mut basis_index) {
                    rows.entry((j, c)).or_insert((0, false)).0 ^= 1 << i;
                }
            }
            let rhs = self.multiply(&xj, &xj)?;
            for c in coords(&rhs, &mut basis_index) {
                rows.entry((j, c)).or_insert((0, false)).1 ^= true;
            }
        }

        // Gaussian elimination over F₂
        let mut system: Vec<(u64, bool)> = rows.into_values().collect();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; unknowns];
        let mut rank_rows: Vec<(u64, bool)> = Vec::new();
        for &(mut row, mut rhs) in &system {
            for col in 0..unknowns {
                if row & (1 << col) != 0 {
                    if let Some(p) = pivot_of_col[col] {
                        let (prow, prhs) = rank_rows[p];
                        row ^= prow;
                        rhs ^= prhs;
                    }
                }
            }
            if row != 0 {
                let col = row.trailing_zeros() as usize;
                pivot_of_col[col] = Some(rank_rows.len());
                rank_rows.push((row, rhs));
            } else if rhs {
                return Ok(Vec::new()); // inconsistent: no candidate at all
            }
        }
        system.clear();

        let free_cols: Vec<usize> =
            (0..unknowns).filter(|&c| pivot_of_col[c].is_none()).collect();
        assert!(
            free_cols.len() <= 10,
            "unexpectedly large solution space in Euler detection"
        );

        let mut found: Vec<RingElement> = Vec::new();
        for assign in 0u64..(1 << free_cols.len()) {
            let mut sol = 0u64;
            for (bit, &col) in free_cols.iter().enumerate() {
                if assign & (1 << bit) != 0 {
                    sol |= 1 << col;
                }
            }
            // back-substitute pivots in descending column order
            for col in (0..unknowns).rev() {
                if let Some(p) = pivot_of_col[col] {
                    let (row, rhs) = rank_rows[p];
                    let mut v = rhs;
                    let mut rest = row & !(1 << col);
                    while rest != 0 {
                        let c = rest.trailing_zeros() as usize;
                        if sol & (1 << c) != 0 {
                            v = !v;
                        }
                        rest &= rest - 1;
                    }
                    if v {
                        sol |= 1 << col;
                    } else {
                        sol &= !(1 << col);
                    }
                }
            }
            let mut monos = BTreeSet::new();
            if sol & 1 != 0 {
                monos.insert(Monomial { r_exp: 1, support: SubsetMask::EMPTY });
            }
            for j in 1..=self.k {
                if sol & (1 << j) != 0 {
                    monos.insert(Monomial { r_exp: 0, support: SubsetMask::from_indices(&[j]) });
                }
            }
            let z = self.element(monos);
            if z.is_zero() {
                continue;
            }
            // the solver is exact, but verify each candidate anyway
            for j in 1..=self.k {
                let xj = self.x(j)?;
                debug_assert_eq!(
                    self.multiply(&z, &xj)?,
                    self.multiply(&xj, &xj)?,
                    "solver produced a non-solution"
                );
            }
            found.push(z);
        }
        found.sort();
        found.dedup();
        Ok(found)
    }

    /// Parse `"+"`-separated monomials like `R^2*X{1,3}+X{2}` and reduce.
    pub fn parse_element(&self, s: &str) -> Result<RingElement, Error> {
        let mut poly = RawPoly::default();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::ParseElement("empty term".into()));
            }
            let mut raw = RawMonomial::default();
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor == "1" {
                    continue;
                } else if factor == "R" {
                    raw.r_exp += 1;
                } else if let Some(exp) = factor.strip_prefix("R^") {
                    let e: u32 = exp
                        .parse()
                        .map_err(|_| Error::ParseElement(format!("bad exponent in {factor:?}")))?;
                    raw.r_exp += e;
                } else if let Some(body) =
                    factor.strip_prefix("X{").and_then(|b| b.strip_suffix('}'))
                {
                    for ix in body.split(',') {
                        let j: usize = ix
                            .trim()
                            .parse()
                            .map_err(|_| Error::ParseElement(format!("bad index in {factor:?}")))?;
                        raw.x_factors.push((j, 1));
                    }
                } else {
                    return Err(Error::ParseElement(format!("unrecognized factor {factor:?}")));
                }
            }
            poly.0.push(raw);
        }
        self.normalize(&poly)
    }
}

/// Verdict of comparing two chambers through their ring models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingComparison {
    /// All level data agree: the models are identical.
    SameFaceData,
    Different { reason: String, first_differing_level: Option<usize> },
}

impl fmt::Display for RingComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingComparison::SameFaceData => write!(f, "SameFaceData"),
            RingComparison::Different { reason, .. } => write!(f, "Different ({reason})"),
        }
    }
}

/// Build both rings and compare every derived invariant. The verdict is
/// `SameFaceData` exactly when the sorted level data agree, which is the
/// same-chamber test; the dimension and Euler comparisons are reported when
/// they are what first distinguishes the two.
pub fn compare_rings(a: &LengthVector, b: &LengthVector, d: usize) -> Result<RingComparison, Error> {
    let ra = build_ring(a, d)?;
    let rb = build_ring(b, d)?;
    if ra.n() != rb.n() {
        return Ok(RingComparison::Different {
            reason: format!("bar counts differ: {} vs {}", ra.n(), rb.n()),
            first_differing_level: None,
        });
    }
    let first_diff = ra
        .complex()
        .levels()
        .iter()
        .zip(rb.complex().levels())
        .position(|(x, y)| x != y);
    if ra.graded_dimensions() != rb.graded_dimensions() {
        return Ok(RingComparison::Different {
            reason: format!(
                "graded dimensions differ: {:?} vs {:?}",
                ra.graded_dimensions(),
                rb.graded_dimensions()
            ),
            first_differing_level: first_diff,
        });
    }
    if ra.face_ring_dimensions() != rb.face_ring_dimensions() {
        return Ok(RingComparison::Different {
            reason: "face-ring dimensions differ".into(),
            first_differing_level: first_diff,
        });
    }
    if ra.n() >= ra.d() + 3 && rb.n() >= rb.d() + 3 {
        let ea = ra.detect_euler_candidates()?.len();
        let eb = rb.detect_euler_candidates()?.len();
        if ea != eb {
            return Ok(RingComparison::Different {
                reason: format!("euler candidate counts differ: {ea} vs {eb}"),
                first_differing_level: first_diff,
            });
        }
    }
    match first_diff {
        None => Ok(RingComparison::SameFaceData),
        Some(k) => Ok(RingComparison::Different {
            reason: format!("short subsets differ at level {k}"),
            first_differing_level: Some(k),
        }),
    }
}
