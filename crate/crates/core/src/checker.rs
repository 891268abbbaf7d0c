//! Batch verification of knot tables.
//!
//! A table is a JSONL file of `{"name": ..., "pd": [[a, b, c, d], ...]}`
//! rows with optional `alternating`, `crossing_number` and `amphicheiral`
//! metadata. Every entry gets the full set of invariants and a
//! pass/fail/not-applicable outcome for each requested check.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::adequacy::{
    extreme_coefficient_check_with, is_minus_adequate, is_plus_adequate, semiadequacy_data, SemiadequacyData,
};
use crate::bracket::{jones_with, BracketConfig, BracketError, Smoothing};
use crate::classical::alexander;
use crate::diagram::{Diagram, EdgeLabel};
use crate::laurent::LaurentPoly;
use crate::moves::greedy_simplify;

/// Result of one check on one table entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable => "na",
        })
    }
}

#[derive(Debug, Error)]
pub enum CheckerError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{0} contains no table rows")]
    EmptyTable(String),
    #[error("unknown check {0:?} (expected tait1, tait24 or semiadequacy)")]
    UnknownCheck(String),
    #[error("invariant cache {path} is corrupt: {source}")]
    Cache { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub name: String,
    /// 1-based line in the source file.
    pub line: usize,
    pub diagram: Diagram,
    pub alternating: Option<bool>,
    pub crossing_number: Option<usize>,
    pub amphicheiral: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IngestError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub entries: Vec<TableEntry>,
    pub errors: Vec<IngestError>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PdField {
    Records(Vec<[EdgeLabel; 4]>),
    Text(String),
}

#[derive(Deserialize)]
struct Row {
    name: String,
    pd: PdField,
    #[serde(default)]
    alternating: Option<bool>,
    #[serde(default)]
    crossing_number: Option<usize>,
    #[serde(default)]
    amphicheiral: Option<bool>,
}

/// Reads a JSONL table. Malformed rows are recorded in [`Table::errors`]
/// and skipped; a file without any rows is an error.
pub fn ingest(path: &Path) -> Result<Table, CheckerError> {
    let text = std::fs::read_to_string(path).map_err(|source| CheckerError::Read { path: path.into(), source })?;
    parse_table(&text, &path.display().to_string())
}

pub fn parse_table(text: &str, source: &str) -> Result<Table, CheckerError> {
    let mut table = Table::default();
    let mut names = HashSet::new();
    let mut rows = 0;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        rows += 1;
        let mut fail = |message: String| table.errors.push(IngestError { line: line_no, message });
        let row: Row = match serde_json::from_str(line) {
            Ok(r) => r,
            Err(e) => {
                fail(format!("malformed row: {e}"));
                continue;
            }
        };
        let diagram = match row.pd {
            PdField::Records(xs) => Diagram::new(xs),
            PdField::Text(s) => Diagram::parse_pd(&s),
        };
        let diagram = match diagram {
            Ok(d) => d,
            Err(e) => {
                fail(format!("{}: {e}", row.name));
                continue;
            }
        };
        if !names.insert(row.name.clone()) {
            fail(format!("duplicate name {}", row.name));
            continue;
        }
        table.entries.push(TableEntry {
            name: row.name,
            line: line_no,
            diagram,
            alternating: row.alternating,
            crossing_number: row.crossing_number,
            amphicheiral: row.amphicheiral,
        });
    }
    if rows == 0 {
        return Err(CheckerError::EmptyTable(source.to_string()));
    }
    Ok(table)
}

/// Everything computed for one diagram. Depends only on the diagram, so it
/// can be cached by a hash of the canonical PD code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub crossings: usize,
    pub writhe: i64,
    pub alternating: bool,
    pub reduced: bool,
    pub plus_adequate: bool,
    pub minus_adequate: bool,
    pub jones: LaurentPoly<BigInt>,
    pub jones_span: i64,
    pub jones_symmetric: bool,
    pub alexander: LaurentPoly<BigInt>,
    #[serde(with = "decimal")]
    pub determinant: BigInt,
    #[serde(with = "decimal")]
    pub extreme_lowest: BigInt,
    #[serde(with = "decimal")]
    pub extreme_highest: BigInt,
    pub extreme_plus: Outcome,
    pub extreme_minus: Outcome,
    pub jones_nontrivial: bool,
    pub simplifies_to_unknot: bool,
    pub semiadequacy_a: SemiadequacyData,
    pub semiadequacy_b: SemiadequacyData,
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

impl Invariants {
    pub fn compute(d: &Diagram, cfg: &BracketConfig) -> Result<Self, BracketError> {
        // work on the canonical form so cached and fresh values coincide
        let d = d.canonical();
        let jones = jones_with(&d, cfg)?;
        let ext = extreme_coefficient_check_with(&d, &jones);
        let alex = alexander(&d);
        let determinant = alex.eval(&BigInt::from(-1)).expect("nonzero point").to_integer();
        Ok(Invariants {
            crossings: d.crossing_count(),
            writhe: d.writhe(),
            alternating: d.is_alternating(),
            reduced: d.is_reduced(),
            plus_adequate: is_plus_adequate(&d),
            minus_adequate: is_minus_adequate(&d),
            jones_span: jones.span().expect("Jones polynomial of a knot is nonzero"),
            jones_symmetric: jones == jones.substitute_inverse(),
            jones_nontrivial: !num_traits::One::is_one(&jones),
            jones,
            alexander: alex,
            determinant: num_traits::Signed::abs(&determinant),
            extreme_lowest: ext.lowest,
            extreme_highest: ext.highest,
            extreme_plus: ext.plus_side,
            extreme_minus: ext.minus_side,
            simplifies_to_unknot: greedy_simplify(&d).is_unknot_diagram(),
            semiadequacy_a: semiadequacy_data(&d, Smoothing::A),
            semiadequacy_b: semiadequacy_data(&d, Smoothing::B),
        })
    }

    pub fn semiadequate(&self) -> bool {
        self.plus_adequate || self.minus_adequate
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Reduced alternating diagrams have `span V` equal to their crossing
    /// count.
    Tait1,
    /// Amphicheiral reduced alternating entries have even crossing count,
    /// writhe 0 and symmetric `V`; entries with asymmetric `V` are not
    /// flagged amphicheiral.
    Tait24,
    /// Semiadequate entries have extreme coefficients `+-1` on their
    /// adequate sides and nontrivial `V` unless they simplify to the
    /// 0-crossing diagram.
    Semiadequacy,
}

impl Check {
    pub const ALL: [Check; 3] = [Check::Tait1, Check::Tait24, Check::Semiadequacy];

    pub fn name(self) -> &'static str {
        match self {
            Check::Tait1 => "tait1",
            Check::Tait24 => "tait24",
            Check::Semiadequacy => "semiadequacy",
        }
    }

    /// Parses a comma-separated list such as `tait1,tait24`.
    pub fn parse_list(s: &str) -> Result<Vec<Check>, CheckerError> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let c = Check::ALL
                .into_iter()
                .find(|c| c.name() == part)
                .ok_or_else(|| CheckerError::UnknownCheck(part.to_string()))?;
            if !out.contains(&c) {
                out.push(c);
            }
        }
        Ok(out)
    }

    pub fn evaluate(self, entry: &TableEntry, inv: &Invariants) -> Outcome {
        match self {
            Check::Tait1 => check_tait_one(inv),
            Check::Tait24 => check_tait_two_four(entry, inv),
            Check::Semiadequacy => check_semiadequacy_theorems(inv),
        }
    }
}

pub fn check_tait_one(inv: &Invariants) -> Outcome {
    if inv.alternating && inv.reduced {
        Outcome::from_bool(inv.jones_span == inv.crossings as i64)
    } else {
        Outcome::NotApplicable
    }
}

pub fn check_tait_two_four(entry: &TableEntry, inv: &Invariants) -> Outcome {
    let flagged = entry.amphicheiral == Some(true);
    if !inv.jones_symmetric {
        Outcome::from_bool(!flagged)
    } else if flagged && inv.alternating && inv.reduced {
        Outcome::from_bool(inv.crossings.is_multiple_of(2) && inv.writhe == 0)
    } else {
        Outcome::NotApplicable
    }
}

pub fn check_semiadequacy_theorems(inv: &Invariants) -> Outcome {
    if !inv.semiadequate() {
        return Outcome::NotApplicable;
    }
    let coefficients = inv.extreme_plus != Outcome::Fail && inv.extreme_minus != Outcome::Fail;
    let nontrivial = inv.jones_nontrivial || inv.simplifies_to_unknot;
    Outcome::from_bool(coefficients && nontrivial)
}

/// Invariants keyed by the SHA-256 of the canonical PD code, persisted as
/// a JSON file.
#[derive(Debug, Clone, Default)]
pub struct InvariantCache {
    entries: BTreeMap<String, Invariants>,
    dirty: bool,
}

impl InvariantCache {
    pub fn key(d: &Diagram) -> String {
        hex::encode(Sha256::digest(d.canonical().to_string().as_bytes()))
    }

    /// Loads a cache file; a missing file is an empty cache.
    pub fn load(path: &Path) -> Result<Self, CheckerError> {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Self::default()),
            Err(source) => return Err(CheckerError::Read { path: path.into(), source }),
        };
        let entries =
            serde_json::from_str(&text).map_err(|source| CheckerError::Cache { path: path.into(), source })?;
        Ok(InvariantCache { entries, dirty: false })
    }

    pub fn save(&self, path: &Path) -> Result<(), CheckerError> {
        if !self.dirty && path.exists() {
            return Ok(());
        }
        let text = serde_json::to_string(&self.entries).expect("invariants serialize");
        std::fs::write(path, text).map_err(|source| CheckerError::Write { path: path.into(), source })
    }

    pub fn get(&self, d: &Diagram) -> Option<&Invariants> {
        self.entries.get(&Self::key(d))
    }

    pub fn insert(&mut self, d: &Diagram, inv: Invariants) {
        self.entries.insert(Self::key(d), inv);
        self.dirty = true;
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub line: usize,
    #[serde(flatten)]
    pub invariants: Invariants,
    pub span_equals_crossings: bool,
    pub checks: BTreeMap<Check, Outcome>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub name: String,
    pub check: Check,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub entries: usize,
    pub checks: BTreeMap<Check, Tally>,
    pub failures: Vec<Failure>,
    pub ingest_errors: Vec<IngestError>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
}

impl CheckReport {
    pub fn has_failures(&self) -> bool {
        !self.summary.failures.is_empty()
    }
}

/// Computes invariants for every entry (in parallel, reusing `cache` where
/// possible) and evaluates the requested checks. Rows keep input order.
pub fn run_checks(
    table: &Table,
    checks: &[Check],
    cfg: &BracketConfig,
    cache: Option<&mut InvariantCache>,
) -> Result<CheckReport, CheckerError> {
    let cached: Vec<Option<Invariants>> =
        table.entries.iter().map(|e| cache.as_deref().and_then(|c| c.get(&e.diagram)).cloned()).collect();
    let computed: Vec<Invariants> = table
        .entries
        .par_iter()
        .zip(cached)
        .map(|(e, hit)| match hit {
            Some(inv) => Ok(inv),
            None => Invariants::compute(&e.diagram, cfg),
        })
        .collect::<Result<_, _>>()?;
    if let Some(cache) = cache {
        for (e, inv) in table.entries.iter().zip(&computed) {
            if cache.get(&e.diagram).is_none() {
                cache.insert(&e.diagram, inv.clone());
            }
        }
    }

    let mut tallies: BTreeMap<Check, Tally> = checks.iter().map(|&c| (c, Tally::default())).collect();
    let mut failures = Vec::new();
    let mut entries = Vec::with_capacity(computed.len());
    for (e, inv) in table.entries.iter().zip(computed) {
        let mut outcomes = BTreeMap::new();
        for &c in checks {
            let o = c.evaluate(e, &inv);
            let t = tallies.get_mut(&c).expect("tally per check");
            match o {
                Outcome::Pass => t.pass += 1,
                Outcome::Fail => {
                    t.fail += 1;
                    failures.push(Failure { name: e.name.clone(), check: c });
                }
                Outcome::NotApplicable => t.not_applicable += 1,
            }
            outcomes.insert(c, o);
        }
        entries.push(EntryReport {
            name: e.name.clone(),
            line: e.line,
            span_equals_crossings: inv.jones_span == inv.crossings as i64,
            invariants: inv,
            checks: outcomes,
        });
    }
    Ok(CheckReport {
        checks: checks.to_vec(),
        summary: Summary { entries: entries.len(), checks: tallies, failures, ingest_errors: table.errors.clone() },
        entries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            _ => Err(format!("unknown format {s:?} (expected csv or json)")),
        }
    }
}

const CSV_COLUMNS: [&str; 16] = [
    "name",
    "crossings",
    "writhe",
    "alternating",
    "reduced",
    "plus_adequate",
    "minus_adequate",
    "jones",
    "jones_span",
    "span_equals_crossings",
    "jones_symmetric",
    "alexander",
    "determinant",
    "extreme_lowest",
    "extreme_highest",
    "jones_nontrivial",
];

/// Renders the report. CSV has one row per entry followed by a `#summary`
/// row holding `pass/fail/na` counts in the check columns.
pub fn render_report(report: &CheckReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let header: Vec<&str> = CSV_COLUMNS.iter().copied().chain(report.checks.iter().map(|c| c.name())).collect();
            w.write_record(&header).expect("in-memory write");
            for e in &report.entries {
                let v = &e.invariants;
                let mut row = vec![
                    e.name.clone(),
                    v.crossings.to_string(),
                    v.writhe.to_string(),
                    v.alternating.to_string(),
                    v.reduced.to_string(),
                    v.plus_adequate.to_string(),
                    v.minus_adequate.to_string(),
                    v.jones.to_string(),
                    v.jones_span.to_string(),
                    e.span_equals_crossings.to_string(),
                    v.jones_symmetric.to_string(),
                    v.alexander.to_string(),
                    v.determinant.to_string(),
                    v.extreme_lowest.to_string(),
                    v.extreme_highest.to_string(),
                    v.jones_nontrivial.to_string(),
                ];
                row.extend(report.checks.iter().map(|c| e.checks[c].to_string()));
                w.write_record(&row).expect("in-memory write");
            }
            let mut trailer = vec![String::new(); CSV_COLUMNS.len()];
            trailer[0] = "#summary".to_string();
            trailer[1] = report.summary.entries.to_string();
            for c in &report.checks {
                let t = report.summary.checks[c];
                trailer.push(format!("pass={} fail={} na={}", t.pass, t.fail, t.not_applicable));
            }
            w.write_record(&trailer).expect("in-memory write");
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    }
}

pub fn write_report(report: &CheckReport, format: ReportFormat, path: &Path) -> Result<(), CheckerError> {
    std::fs::write(path, render_report(report, format))
        .map_err(|source| CheckerError::Write { path: path.into(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    const ROWS: &str = r#"{"name": "3_1", "pd": [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], "alternating": true, "crossing_number": 3, "amphicheiral": false}
{"name": "4_1", "pd": "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]", "amphicheiral": true}

{"name": "bad", "pd": [[1, 3, 2, 3]]}
{"name": "kink", "pd": [[1, 1, 2, 2]]}
not json
{"name": "3_1", "pd": [[1, 1, 2, 2]]}
"#;

    fn table() -> Table {
        parse_table(ROWS, "rows").unwrap()
    }

    #[test]
    fn ingest_keeps_valid_rows() {
        let t = table();
        let names: Vec<&str> = t.entries.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, vec!["3_1", "4_1", "kink"]);
        let lines: Vec<usize> = t.errors.iter().map(|e| e.line).collect();
        assert_eq!(lines, vec![4, 6, 7]);
        assert!(matches!(parse_table("\n  \n", "empty"), Err(CheckerError::EmptyTable(_))));
    }

    #[test]
    fn outcomes() {
        let report = run_checks(&table(), &Check::ALL, &BracketConfig::default(), None).unwrap();
        let get = |name: &str, c: Check| report.entries.iter().find(|e| e.name == name).unwrap().checks[&c];
        assert_eq!(get("3_1", Check::Tait1), Outcome::Pass);
        assert_eq!(get("4_1", Check::Tait1), Outcome::Pass);
        assert_eq!(get("kink", Check::Tait1), Outcome::NotApplicable);
        assert_eq!(get("3_1", Check::Tait24), Outcome::Pass);
        assert_eq!(get("4_1", Check::Tait24), Outcome::Pass);
        assert_eq!(get("kink", Check::Semiadequacy), Outcome::Pass);
        assert!(!report.has_failures());
        assert_eq!(report.summary.checks[&Check::Tait1], Tally { pass: 2, fail: 0, not_applicable: 1 });
    }

    #[test]
    fn flagged_chiral_entry_fails() {
        let t = parse_table(r#"{"name": "x", "pd": "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "amphicheiral": true}"#, "x")
            .unwrap();
        let report = run_checks(&t, &[Check::Tait24], &BracketConfig::default(), None).unwrap();
        assert_eq!(report.summary.failures, vec![Failure { name: "x".into(), check: Check::Tait24 }]);
    }

    #[test]
    fn check_lists() {
        assert_eq!(Check::parse_list("tait24, tait1,tait1").unwrap(), vec![Check::Tait24, Check::Tait1]);
        assert!(Check::parse_list("tait3").is_err());
    }

    #[test]
    fn csv_layout() {
        let report = run_checks(&table(), &[Check::Tait1], &BracketConfig::default(), None).unwrap();
        let csv = render_report(&report, ReportFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].ends_with("jones_nontrivial,tait1"));
        assert!(
            lines[1].starts_with(
                "3_1,3,-3,true,true,true,true,t^-1 + t^-3 - t^-4,3,true,false,t - 1 + t^-1,3,-1,1,true,pass"
            ),
            "{}",
            lines[1]
        );
        assert_eq!(lines[4], "#summary,3,,,,,,,,,,,,,,,pass=2 fail=0 na=1");
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        let t = table();
        let mut cache = InvariantCache::load(&path).unwrap();
        assert!(cache.is_empty());
        let fresh = run_checks(&t, &Check::ALL, &BracketConfig::default(), Some(&mut cache)).unwrap();
        cache.save(&path).unwrap();
        let mut reloaded = InvariantCache::load(&path).unwrap();
        assert_eq!(reloaded.len(), 3);
        let again = run_checks(&t, &Check::ALL, &BracketConfig::default(), Some(&mut reloaded)).unwrap();
        assert_eq!(fresh, again);
        let plain = run_checks(&t, &Check::ALL, &BracketConfig::default(), None).unwrap();
        assert_eq!(fresh, plain);
    }
}
