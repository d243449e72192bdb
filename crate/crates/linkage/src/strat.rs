//! Dimension, codimension, and perversity bookkeeping for the stratified
//! moduli space of an n-bar linkage in ℝ^d.
//!
//! The open stratum has dimension `(n−3)(d−1) − (d−2)(d−3)/2`; the stratum
//! indexed by `k ∈ {2, …, d−2}` has codimension `k(n−d) + k(k−1)/2`. All
//! values here are plain integers, so every identity is checked exactly.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// n must be at least d for the moduli space to make sense.
    BadPair { n: i64, d: i64 },
    /// Stratum index outside `{2, …, d−2}`.
    BadStratum { k: i64, d: i64 },
    /// Perversity step index outside the usable range.
    BadLevel(i64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadPair { n, d } => write!(f, "need n >= d >= 2, got n={n}, d={d}"),
            Error::BadStratum { k, d } => {
                write!(f, "stratum index k={k} outside 2..={} for d={d}", d - 2)
            }
            Error::BadLevel(r) => write!(f, "level index {r} out of range"),
        }
    }
}

impl std::error::Error for Error {}

/// Dimension of the open stratum of the moduli space.
pub fn dim_moduli(n: i64, d: i64) -> Result<i64, Error> {
    if d < 2 || n < d {
        return Err(Error::BadPair { n, d });
    }
    Ok((n - 3) * (d - 1) - (d - 2) * (d - 3) / 2)
}

/// Codimension of stratum `k ∈ {2, …, d−2}`.
pub fn codim_stratum(n: i64, d: i64, k: i64) -> Result<i64, Error> {
    if d < 2 || n < d {
        return Err(Error::BadPair { n, d });
    }
    if k < 2 || k > d - 2 {
        return Err(Error::BadStratum { k, d });
    }
    Ok(k * (n - d) + k * (k - 1) / 2)
}

/// Codimension pair of stratum `k` inside the doubled (bar) space:
/// outer piece `codim + k − 1`, inner piece `codim + k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BarStratProfile {
    pub n: i64,
    pub d: i64,
}

impl BarStratProfile {
    pub fn new(n: i64, d: i64) -> Result<Self, Error> {
        if d < 2 || n < d {
            return Err(Error::BadPair { n, d });
        }
        Ok(BarStratProfile { n, d })
    }

    pub fn codim_outer(&self, k: i64) -> Result<i64, Error> {
        Ok(codim_stratum(self.n, self.d, k)? + k - 1)
    }

    pub fn codim_inner(&self, k: i64) -> Result<i64, Error> {
        Ok(codim_stratum(self.n, self.d, k)? + k)
    }
}

/// A perversity: one integer per stratum index `k ∈ {2, …, d−2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerversityTable {
    d: i64,
    values: Vec<i64>, // index 0 ↔ k = 2
}

impl PerversityTable {
    pub fn from_fn(d: i64, f: impl Fn(i64) -> i64) -> Self {
        let values = (2..=d - 2).map(f).collect();
        PerversityTable { d, values }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Stratum indices this table is defined on (empty when d < 4).
    pub fn domain(&self) -> impl Iterator<Item = i64> {
        2..=self.d - 2
    }

    pub fn get(&self, k: i64) -> Result<i64, Error> {
        if k < 2 || k > self.d - 2 {
            return Err(Error::BadStratum { k, d: self.d });
        }
        Ok(self.values[(k - 2) as usize])
    }

    pub fn as_map(&self) -> BTreeMap<i64, i64> {
        self.domain().zip(self.values.iter().copied()).collect()
    }

    /// Pointwise sum; both tables must share `d`.
    pub fn add(&self, other: &PerversityTable) -> Option<PerversityTable> {
        if self.d != other.d {
            return None;
        }
        Some(PerversityTable {
            d: self.d,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    /// Growth conditions: `p(2) ≤ 2(n−d) − 1` and
    /// `p(k+1) − p(k) ≤ n − d + k` across the domain.
    pub fn is_goresky_macpherson(&self, n: i64) -> bool {
        let d = self.d;
        if d < 4 {
            return true;
        }
        if self.get(2).unwrap() > 2 * (n - d) - 1 {
            return false;
        }
        for k in 2..=d - 3 {
            if self.get(k + 1).unwrap() - self.get(k).unwrap() > n - d + k {
                return false;
            }
        }
        true
    }

    /// Complementary perversity with respect to the top table for (n, d).
    pub fn dual(&self, n: i64) -> Result<PerversityTable, Error> {
        let top = perversity_top(n, self.d)?;
        Ok(PerversityTable {
            d: self.d,
            values: self
                .domain()
                .map(|k| top.get(k).unwrap() - self.get(k).unwrap())
                .collect(),
        })
    }
}

/// The linear perversity `p_j(k) = j·k`.
pub fn perversity_p(j: i64, d: i64) -> PerversityTable {
    PerversityTable::from_fn(d, |k| j * k)
}

/// The zero perversity.
pub fn perversity_zero(d: i64) -> PerversityTable {
    PerversityTable::from_fn(d, |_| 0)
}

/// The top perversity `t(k) = codim(k) − 2`.
pub fn perversity_top(n: i64, d: i64) -> Result<PerversityTable, Error> {
    if d < 2 || n < d {
        return Err(Error::BadPair { n, d });
    }
    Ok(PerversityTable::from_fn(d, |k| codim_stratum(n, d, k).unwrap() - 2))
}

/// How the star stratum of the doubled space is weighted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarMode {
    /// Plain `r(d−2)` for every level.
    GoreskyMacPherson,
    /// Same, except level 1 drops to 0 (the truncated quotient forces a
    /// non-growth value there).
    Truncated,
}

/// Two-level perversity on the bar space: `outer(k) = rk − 1`,
/// `inner(k) = rk`, plus the star-stratum value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarPerversity {
    pub r: i64,
    pub outer: PerversityTable,
    pub inner: PerversityTable,
    pub star: i64,
}

/// The level-`r` bar perversity.
pub fn perversity_q(r: i64, d: i64, mode: StarMode) -> BarPerversity {
    let star = match mode {
        StarMode::Truncated if r == 1 => 0,
        _ => r * (d - 2),
    };
    BarPerversity {
        r,
        outer: PerversityTable::from_fn(d, |k| r * k - 1),
        inner: PerversityTable::from_fn(d, |k| r * k),
        star,
    }
}

/// For every stratum `k`: the level-`r` margin against the plain codimension
/// equals the level-`r+1` margin against the inner bar codimension.
/// Returns `true` when the identity holds across the whole domain.
pub fn check_inclusion_allowability(n: i64, d: i64, r: i64) -> Result<bool, Error> {
    if r < 0 || r > n - d - 1 {
        return Err(Error::BadLevel(r));
    }
    let bar = BarStratProfile::new(n, d)?;
    let p = perversity_p(r, d);
    let q_next = perversity_q(r + 1, d, StarMode::Truncated);
    for k in 2..=d - 2 {
        let lhs = p.get(k)? - codim_stratum(n, d, k)?;
        let rhs = q_next.inner.get(k)? - bar.codim_inner(k)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Companion identity for the outer bar strata:
/// level-`r+1` margin against the outer codimension equals the level-`r`
/// margin against the plain codimension.
pub fn check_projection_allowability(n: i64, d: i64, r: i64) -> Result<bool, Error> {
    if r < 0 || r > n - d - 1 {
        return Err(Error::BadLevel(r));
    }
    let bar = BarStratProfile::new(n, d)?;
    let p = perversity_p(r, d);
    let q_next = perversity_q(r + 1, d, StarMode::Truncated);
    for k in 2..=d - 2 {
        let lhs = q_next.outer.get(k)? - bar.codim_outer(k)?;
        let rhs = p.get(k)? - codim_stratum(n, d, k)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Margin comparison at the stratum of index `m = 2(k−l−1)` for odd
/// `d = 2k+1`: the dual of `p₁` there against `codim − 2(k−l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarginCheck {
    pub lhs: i64,
    pub rhs: i64,
}

impl MarginCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn lemma_strata_margin(n: i64, d: i64, k: i64, l: i64) -> Result<MarginCheck, Error> {
    if d != 2 * k + 1 || k < 2 {
        return Err(Error::BadPair { n, d });
    }
    if l < 0 || l > k - 2 {
        return Err(Error::BadLevel(l));
    }
    let m = 2 * (k - l - 1);
    let p1_dual = perversity_p(1, d).dual(n)?;
    let lhs = p1_dual.get(m)?;
    let rhs = codim_stratum(n, d, m)? - 2 * (k - l);
    Ok(MarginCheck { lhs, rhs })
}
