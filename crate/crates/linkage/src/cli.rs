//! Command-line front end: JSON reports over the library, stable enough to
//! diff byte-for-byte between runs.
//!
//! Exit codes: 0 success; 1 domain errors; 2 parse/usage errors; 3 the
//! vector sits on a wall (the tight witness is in the JSON); 4 the requested
//! d has no odd high-dimensional model; 5 the enumeration guard tripped.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::chambers::{self, ChamberAtlas, DEFAULT_GUARD};
use crate::complex::{self, Fingerprint};
use crate::lenvec::{self, LengthVector};
use crate::ring::{self, RingComparison};
use crate::strat::{self, StarMode};

#[derive(Parser)]
#[command(
    name = "linkage",
    about = "exact chamber and intersection-ring calculations for closed linkages",
    version
)]
pub struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Genericity, regularity, subset counts, and stratification data for one vector.
    Analyze {
        /// Comma-separated lengths, e.g. "1,1,1,2" or "eps,eps,1,1,1".
        #[arg(long)]
        vector: String,
        /// Ambient dimension for the moduli-space figures.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Decide whether two vectors lie in the same chamber up to permutation.
    Compare {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Dimension for the ring comparison half of the report.
        #[arg(long, default_value_t = 5)]
        d: usize,
    },
    /// Build the Z/2 intersection-ring model and report its invariants.
    Ring {
        #[arg(long)]
        vector: String,
        #[arg(long)]
        d: usize,
    },
    /// Perversity tables, duals, and allowability identities for (n, d).
    Perversities {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
    },
    /// Enumerate all chamber classes and write the atlas file.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recompute regularity flags of an existing atlas, in place.
    Annotate {
        #[arg(long)]
        atlas: PathBuf,
        /// Comma-separated list of dimensions, e.g. "3,5".
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<usize>,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    error: String,
    witness: Option<String>,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: &'a Option<String>,
}

fn render<T: Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("reports serialize")
    } else {
        serde_json::to_string(value).expect("reports serialize")
    }
}

/// Parse argv, run the requested command, print one JSON value to stdout,
/// and return the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let pretty = cli.pretty;
    let result = match &cli.command {
        Command::Analyze { vector, d } => analyze(vector, *d, pretty),
        Command::Compare { a, b, d } => compare(a, b, *d, pretty),
        Command::Ring { vector, d } => ring_report(vector, *d, pretty),
        Command::Perversities { n, d } => perversities(*n, *d, pretty),
        Command::Enumerate { n, out } => enumerate(*n, out, pretty),
        Command::Annotate { atlas, d } => annotate(atlas, d, pretty),
    };
    match result {
        Ok(body) => {
            println!("{body}");
            0
        }
        Err(f) => {
            let report = ErrorReport { error: &f.error, witness: &f.witness };
            println!("{}", render(&report, pretty));
            f.code
        }
    }
}

fn vector_failure(e: lenvec::Error) -> Failure {
    Failure { code: 2, error: e.to_string(), witness: None }
}

fn complex_failure(e: complex::Error) -> Failure {
    match e {
        complex::Error::NotGeneric(w) => {
            Failure { code: 3, error: e.to_string(), witness: Some(w.to_string()) }
        }
        complex::Error::LengthMismatch { .. } => {
            Failure { code: 2, error: e.to_string(), witness: None }
        }
    }
}

fn ring_failure(e: ring::Error) -> Failure {
    let (code, witness) = match &e {
        ring::Error::NotGeneric(w) => (3, Some(w.to_string())),
        ring::Error::UnsupportedDimension(_) => (4, None),
        _ => (1, None),
    };
    Failure { code, error: e.to_string(), witness }
}

fn strat_failure(e: strat::Error) -> Failure {
    Failure { code: 1, error: e.to_string(), witness: None }
}

fn chambers_failure(e: chambers::Error) -> Failure {
    let code = match &e {
        chambers::Error::GuardExceeded { .. } => 5,
        chambers::Error::Malformed { .. } => 2,
        _ => 1,
    };
    Failure { code, error: e.to_string(), witness: None }
}

fn domain_failure(e: lenvec::Error) -> Failure {
    Failure { code: 1, error: e.to_string(), witness: None }
}

#[derive(Serialize)]
struct AnalyzeReport {
    n: usize,
    generic: bool,
    sorted: String,
    permutation: Vec<usize>,
    a_vector: Vec<usize>,
    /// Regularity per dimension: every odd d in [3, n−1], plus the requested one.
    regular: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_regular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim_moduli: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    codim_strata: Option<BTreeMap<String, i64>>,
    fingerprint: Fingerprint,
}

fn analyze(vector: &str, d: Option<usize>, pretty: bool) -> Result<String, Failure> {
    let v: LengthVector = vector.parse().map_err(vector_failure)?;
    let fingerprint = Fingerprint::of(&v).map_err(complex_failure)?;
    let (sorted, permutation) = v.sorted();
    let n = v.n();

    let mut ds: Vec<usize> = (3..n).step_by(2).collect();
    if let Some(d) = d {
        if !ds.contains(&d) {
            ds.push(d);
        }
    }
    let mut regular = BTreeMap::new();
    for dd in ds {
        let flag = sorted.is_d_regular_ordered(dd).map_err(domain_failure)?;
        regular.insert(dd.to_string(), flag);
    }

    let (d_regular, dim_moduli, codim_strata) = match d {
        None => (None, None, None),
        Some(d) => {
            let dim = strat::dim_moduli(n as i64, d as i64).map_err(strat_failure)?;
            let mut codim = BTreeMap::new();
            for k in 2..=d as i64 - 2 {
                let c = strat::codim_stratum(n as i64, d as i64, k).map_err(strat_failure)?;
                codim.insert(k.to_string(), c);
            }
            (Some(regular[&d.to_string()]), Some(dim), Some(codim))
        }
    };

    let report = AnalyzeReport {
        n,
        generic: true,
        sorted: sorted.to_string(),
        permutation,
        a_vector: fingerprint.a_vector().0.clone(),
        regular,
        d,
        d_regular,
        dim_moduli,
        codim_strata,
        fingerprint,
    };
    Ok(render(&report, pretty))
}

#[derive(Serialize)]
struct CompareDetail {
    first_differing_level: Option<usize>,
    reason: String,
}

#[derive(Serialize)]
struct CompareReport {
    n: usize,
    d: usize,
    same_chamber_up_to_permutation: bool,
    /// "SameFaceData" or "Different"; null when no ring model exists at this (n, d).
    ring_comparison: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<CompareDetail>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ring_note: Option<String>,
}

fn compare(a: &str, b: &str, d: usize, pretty: bool) -> Result<String, Failure> {
    let va: LengthVector = a.parse().map_err(vector_failure)?;
    let vb: LengthVector = b.parse().map_err(vector_failure)?;
    let same = complex::same_chamber_up_to_permutation(&va, &vb).map_err(complex_failure)?;
    let (ring_comparison, detail, ring_note) = match ring::compare_rings(&va, &vb, d) {
        Ok(RingComparison::SameFaceData) => (Some("SameFaceData"), None, None),
        Ok(RingComparison::Different { reason, first_differing_level }) => {
            (Some("Different"), Some(CompareDetail { first_differing_level, reason }), None)
        }
        // the chamber verdict stands even where the ring model is undefined
        Err(
            e @ (ring::Error::UnsupportedDimension(_)
            | ring::Error::TooFewLinks { .. }
            | ring::Error::NotRegular { .. }
            | ring::Error::EmptySpace),
        ) => (None, None, Some(e.to_string())),
        Err(e) => return Err(ring_failure(e)),
    };
    if let Some(verdict) = ring_comparison {
        debug_assert_eq!(same, verdict == "SameFaceData");
    }
    let report = CompareReport {
        n: va.n(),
        d,
        same_chamber_up_to_permutation: same,
        ring_comparison,
        detail,
        ring_note,
    };
    Ok(render(&report, pretty))
}

#[derive(Serialize)]
struct RingReport {
    n: usize,
    d: usize,
    sorted: String,
    permutation: Vec<usize>,
    generators: Vec<String>,
    truncation: usize,
    graded_dimensions: Vec<usize>,
    /// Dimensions from this degree up are upper bounds, not exact values.
    upper_bound_from_degree: Option<usize>,
    face_ring_dimensions: Vec<usize>,
    /// Null when n = d+2: the uniqueness regime needs n ≥ d+3.
    euler_candidates: Option<Vec<String>>,
}

fn ring_report(vector: &str, d: usize, pretty: bool) -> Result<String, Failure> {
    let v: LengthVector = vector.parse().map_err(vector_failure)?;
    let r = ring::build_ring(&v, d).map_err(ring_failure)?;
    let euler_candidates = if r.n() >= r.d() + 3 {
        let cands = r.detect_euler_candidates().map_err(ring_failure)?;
        Some(cands.iter().map(ToString::to_string).collect())
    } else {
        None
    };
    let mut generators = vec!["R".to_string()];
    generators.extend((1..=r.generator_count()).map(|j| format!("X{{{j}}}")));
    let report = RingReport {
        n: r.n(),
        d: r.d(),
        sorted: r.sorted_vector().to_string(),
        permutation: r.permutation().to_vec(),
        generators,
        truncation: r.truncation(),
        graded_dimensions: r.graded_dimensions(),
        upper_bound_from_degree: if r.truncation() >= 3 { Some(3) } else { None },
        face_ring_dimensions: r.face_ring_dimensions(),
        euler_candidates,
    };
    Ok(render(&report, pretty))
}

#[derive(Serialize)]
struct StratumRow {
    k: i64,
    codim: i64,
    bar_outer: i64,
    bar_inner: i64,
}

#[derive(Serialize)]
struct PerversityRow {
    j: i64,
    values: BTreeMap<String, i64>,
    goresky_macpherson: bool,
    dual: BTreeMap<String, i64>,
}

#[derive(Serialize)]
struct BarLevelRow {
    r: i64,
    outer: BTreeMap<String, i64>,
    inner: BTreeMap<String, i64>,
    star: i64,
    star_truncated: i64,
    inclusion_allowable: bool,
    projection_allowable: bool,
}

#[derive(Serialize)]
struct PerversityReport {
    n: i64,
    d: i64,
    dim_moduli: i64,
    strata: Vec<StratumRow>,
    zero: BTreeMap<String, i64>,
    top: BTreeMap<String, i64>,
    perversities: Vec<PerversityRow>,
    bar_levels: Vec<BarLevelRow>,
}

fn string_keys(map: BTreeMap<i64, i64>) -> BTreeMap<String, i64> {
    map.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn perversities(n: i64, d: i64, pretty: bool) -> Result<String, Failure> {
    let dim_moduli = strat::dim_moduli(n, d).map_err(strat_failure)?;
    let bar = strat::BarStratProfile::new(n, d).map_err(strat_failure)?;
    let mut strata = Vec::new();
    for k in 2..=d - 2 {
        strata.push(StratumRow {
            k,
            codim: strat::codim_stratum(n, d, k).map_err(strat_failure)?,
            bar_outer: bar.codim_outer(k).map_err(strat_failure)?,
            bar_inner: bar.codim_inner(k).map_err(strat_failure)?,
        });
    }
    let top = strat::perversity_top(n, d).map_err(strat_failure)?;
    let mut perversities = Vec::new();
    for j in 1..=(n - d).max(0) {
        let p = strat::perversity_p(j, d);
        let dual = p.dual(n).map_err(strat_failure)?;
        perversities.push(PerversityRow {
            j,
            values: string_keys(p.as_map()),
            goresky_macpherson: p.is_goresky_macpherson(n),
            dual: string_keys(dual.as_map()),
        });
    }
    let mut bar_levels = Vec::new();
    for r in 0..=n - d - 1 {
        let q = strat::perversity_q(r, d, StarMode::GoreskyMacPherson);
        let q_truncated = strat::perversity_q(r, d, StarMode::Truncated);
        bar_levels.push(BarLevelRow {
            r,
            outer: string_keys(q.outer.as_map()),
            inner: string_keys(q.inner.as_map()),
            star: q.star,
            star_truncated: q_truncated.star,
            inclusion_allowable: strat::check_inclusion_allowability(n, d, r)
                .map_err(strat_failure)?,
            projection_allowable: strat::check_projection_allowability(n, d, r)
                .map_err(strat_failure)?,
        });
    }
    let report = PerversityReport {
        n,
        d,
        dim_moduli,
        strata,
        zero: string_keys(strat::perversity_zero(d).as_map()),
        top: string_keys(top.as_map()),
        perversities,
        bar_levels,
    };
    Ok(render(&report, pretty))
}

#[derive(Serialize)]
struct EnumerateReport {
    n: usize,
    guard: usize,
    chambers: usize,
    out: String,
}

fn guard_from_env() -> Result<usize, Failure> {
    match std::env::var("LINKAGE_MAX_N") {
        Ok(s) => s.trim().parse().map_err(|_| Failure {
            code: 1,
            error: format!("LINKAGE_MAX_N must be a non-negative integer, got {s:?}"),
            witness: None,
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_GUARD),
        Err(e) => Err(Failure { code: 1, error: format!("LINKAGE_MAX_N: {e}"), witness: None }),
    }
}

fn enumerate(n: usize, out: &Path, pretty: bool) -> Result<String, Failure> {
    let guard = guard_from_env()?;
    let atlas = chambers::enumerate_chambers(n, guard).map_err(chambers_failure)?;
    atlas.save(out).map_err(chambers_failure)?;
    let report = EnumerateReport {
        n,
        guard,
        chambers: atlas.records().len(),
        out: out.display().to_string(),
    };
    Ok(render(&report, pretty))
}

#[derive(Serialize)]
struct AnnotateReport {
    n: usize,
    chambers: usize,
    annotated_d: Vec<usize>,
    out: String,
}

fn annotate(path: &Path, ds: &[usize], pretty: bool) -> Result<String, Failure> {
    let mut atlas = ChamberAtlas::load(path).map_err(chambers_failure)?;
    chambers::annotate_regularity(&mut atlas, ds).map_err(chambers_failure)?;
    atlas.save(path).map_err(chambers_failure)?;
    let report = AnnotateReport {
        n: atlas.n(),
        chambers: atlas.records().len(),
        annotated_d: ds.to_vec(),
        out: path.display().to_string(),
    };
    Ok(render(&report, pretty))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_single_digit_exit_codes() {
        // the mapping is part of the contract; pin it here
        assert_eq!(vector_failure(lenvec::Error::Parse("x".into())).code, 2);
        assert_eq!(
            complex_failure(complex::Error::NotGeneric(
                crate::lenvec::SubsetMask::from_indices(&[1, 4])
            ))
            .code,
            3
        );
        assert_eq!(ring_failure(ring::Error::UnsupportedDimension(4)).code, 4);
        assert_eq!(ring_failure(ring::Error::EmptySpace).code, 1);
        assert_eq!(
            chambers_failure(chambers::Error::GuardExceeded { n: 9, guard: 8 }).code,
            5
        );
    }

    #[test]
    fn analyze_reports_requested_dimension() {
        let body = analyze("1,1,1,1,1,4", Some(5), false).unwrap();
        let v: serde_json::Value = serde_json::from_str(&body).unwrap();
        assert_eq!(v["d_regular"], serde_json::json!(true));
        assert_eq!(v["dim_moduli"], serde_json::json!(9));
        assert_eq!(v["regular"]["3"], serde_json::json!(true));
    }

    #[test]
    fn analyze_flags_the_irregular_chamber() {
        let body = analyze("eps,eps,eps,1,1,1", Some(3), false).unwrap();
        let v: serde_json::Value = serde_json::from_str(&body).unwrap();
        assert_eq!(v["d_regular"], serde_json::json!(false));
    }

    #[test]
    fn analyze_rejects_walls_with_witness() {
        let f = analyze("1,1,1,1", None, false).unwrap_err();
        assert_eq!(f.code, 3);
        assert_eq!(f.witness.as_deref(), Some("{1,4}"));
    }

    #[test]
    fn compare_handles_missing_ring_models() {
        let body = compare("1,1,1,2", "2,1,1,1", 5, false).unwrap();
        let v: serde_json::Value = serde_json::from_str(&body).unwrap();
        assert_eq!(v["same_chamber_up_to_permutation"], serde_json::json!(true));
        assert_eq!(v["ring_comparison"], serde_json::Value::Null);
        assert!(v["ring_note"].as_str().unwrap().contains("at least 7 bars"));
    }

    #[test]
    fn compare_reports_ring_verdicts_when_available() {
        let body = compare("1,1,1,1,1,1,3", "1,1,1,1,1,1,5", 5, false).unwrap();
        let v: serde_json::Value = serde_json::from_str(&body).unwrap();
        assert_eq!(v["same_chamber_up_to_permutation"], serde_json::json!(false));
        assert_eq!(v["ring_comparison"], serde_json::json!("Different"));
        assert_eq!(v["detail"]["first_differing_level"], serde_json::json!(1));
    }
}
