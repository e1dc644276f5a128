//! Corpus ingestion, batch classification, survey sweeps and the
//! serializable reports they produce.
//!
//! Output is deterministic: entries keep their input order regardless of
//! parallel scheduling, every map in the report is ordered, and identical
//! inputs produce byte-identical JSON/CSV.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{apply_cgw, Classification, Options, Outcome};
use crate::error::{Error, Result};
use crate::families::{two_bridge_presentation, TwoBridgeParams};
use crate::grammar::{render_word, Presentation};
use crate::roots::RootReport;
use crate::syllables::Transform;
use crate::zero_weight::{StepRecord, Variant};

pub const FORMAT_VERSION: u32 = 1;

/// One corpus item: a named relator or relation, optionally with the
/// expected outcome for regression checking.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Biorderable,
    NotBiorderable,
    Inconclusive,
}

impl Expected {
    fn matches(self, outcome: Outcome) -> bool {
        matches!(
            (self, outcome),
            (Expected::Biorderable, Outcome::BiOrderable)
                | (Expected::NotBiorderable, Outcome::NotBiOrderable)
                | (Expected::Inconclusive, Outcome::Inconclusive)
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Expected::Biorderable => "biorderable",
            Expected::NotBiorderable => "not_biorderable",
            Expected::Inconclusive => "inconclusive",
        }
    }
}

/// Per-entry slice of the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub name: String,
    pub input: String,
    /// "biorderable" | "not_biorderable" | "inconclusive" | "error"
    pub outcome: String,
    pub theorem: String,
    pub word_class: String,
    pub symmetry_transform: Transform,
    pub variant: Option<Variant>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Images of the original generators under the composed change of
    /// generators, in grammar notation.
    pub substitution: [String; 2],
    pub substitution_inverse: [String; 2],
    /// Canonical coefficients, constant term first, as decimal strings.
    pub alexander: Vec<String>,
    pub alexander_raw: Vec<String>,
    pub unit_shift: i64,
    pub unit_negated: bool,
    pub syllables: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_report: Option<RootReport>,
    pub trace: Vec<StepRecord>,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches_expected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub biorderable: usize,
    pub not_biorderable: usize,
    pub inconclusive: usize,
    pub errors: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub format_version: u32,
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
}

fn coeff_strings(p: &crate::poly::IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Renders the full evidence chain of a classification into report form.
pub fn entry_from_classification(
    name: &str,
    input: &str,
    expected: Option<Expected>,
    c: &Classification,
) -> EntryReport {
    let outcome = c.verdict.outcome;
    let sub = &c.zero_weight.composed_substitution;
    let inv = &c.zero_weight.inverse_substitution;
    EntryReport {
        name: name.to_string(),
        input: input.to_string(),
        outcome: outcome.as_str().to_string(),
        theorem: c.verdict.theorem.as_str().to_string(),
        word_class: c.verdict.word_class.level.to_string(),
        symmetry_transform: c.verdict.symmetry_transform,
        variant: Some(c.variant_used),
        reason: c.verdict.reason.map(|r| r.as_str().to_string()),
        substitution: [render_word(sub.image_of_a()), render_word(sub.image_of_b())],
        substitution_inverse: [render_word(inv.image_of_a()), render_word(inv.image_of_b())],
        alexander: coeff_strings(&c.alexander.poly),
        alexander_raw: coeff_strings(&c.alexander.raw),
        unit_shift: c.alexander.unit_shift,
        unit_negated: c.alexander.negated,
        syllables: c.syllables.pairs().iter().map(|&(m, d)| [m, d]).collect(),
        root_report: Some(c.verdict.root_report.clone()),
        trace: c.zero_weight.trace.clone(),
        notes: c.verdict.notes.clone(),
        expected: expected.map(|e| e.as_str().to_string()),
        matches_expected: expected.map(|e| e.matches(outcome)),
        error: None,
    }
}

fn error_entry(name: &str, input: &str, expected: Option<Expected>, err: &Error) -> EntryReport {
    EntryReport {
        name: name.to_string(),
        input: input.to_string(),
        outcome: "error".to_string(),
        theorem: "none".to_string(),
        word_class: "not_zero_weight".to_string(),
        symmetry_transform: Transform::default(),
        variant: None,
        reason: None,
        substitution: [String::new(), String::new()],
        substitution_inverse: [String::new(), String::new()],
        alexander: Vec::new(),
        alexander_raw: Vec::new(),
        unit_shift: 0,
        unit_negated: false,
        syllables: Vec::new(),
        root_report: None,
        trace: Vec::new(),
        notes: Vec::new(),
        expected: expected.map(|e| e.as_str().to_string()),
        matches_expected: expected.map(|_| false),
        error: Some(err.to_string()),
    }
}

fn entry_presentation(entry: &CorpusEntry) -> Result<Presentation> {
    match (&entry.relator, &entry.relation) {
        (Some(r), None) => Ok(Presentation::from_relator_text(r)?.with_label(entry.name.clone())),
        (None, Some(r)) => Ok(Presentation::from_relation_text(r)?.with_label(entry.name.clone())),
        _ => Err(Error::Parse {
            offset: 0,
            message: format!(
                "entry {:?} must have exactly one of \"relator\" or \"relation\"",
                entry.name
            ),
        }),
    }
}

fn classify_entry(entry: &CorpusEntry, options: &Options) -> EntryReport {
    let input = entry
        .relator
        .clone()
        .or_else(|| entry.relation.clone())
        .unwrap_or_default();
    match entry_presentation(entry).and_then(|p| apply_cgw(&p, options)) {
        Ok(c) => entry_from_classification(&entry.name, &input, entry.expected, &c),
        Err(e) => error_entry(&entry.name, &input, entry.expected, &e),
    }
}

fn summarize(entries: &[EntryReport]) -> Summary {
    let mut s = Summary::default();
    for e in entries {
        match e.outcome.as_str() {
            "biorderable" => s.biorderable += 1,
            "not_biorderable" => s.not_biorderable += 1,
            "inconclusive" => s.inconclusive += 1,
            _ => s.errors += 1,
        }
        if e.matches_expected == Some(false) {
            s.mismatches += 1;
        }
    }
    s
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}

/// Classifies every entry (in parallel) and assembles the report. Entry
/// order in the report always matches the input order.
pub fn run_batch(entries: &[CorpusEntry], options: &Options, jobs: Option<usize>) -> Report {
    let reports: Vec<EntryReport> = with_pool(jobs, || {
        entries
            .par_iter()
            .map(|e| classify_entry(e, options))
            .collect()
    });
    let summary = summarize(&reports);
    Report {
        format_version: FORMAT_VERSION,
        entries: reports,
        summary,
    }
}

/// Exit code for a finished batch: 3 on any expectation mismatch, 2 on any
/// structural per-entry error, 0 otherwise.
pub fn batch_exit_code(report: &Report) -> u8 {
    if report.summary.mismatches > 0 {
        3
    } else if report.summary.errors > 0 {
        2
    } else {
        0
    }
}

pub fn parse_corpus(json: &str) -> Result<Vec<CorpusEntry>> {
    let entries: Vec<CorpusEntry> = serde_json::from_str(json).map_err(|e| Error::Parse {
        offset: 0,
        message: format!("corpus JSON: {e}"),
    })?;
    for entry in &entries {
        if entry.relator.is_some() == entry.relation.is_some() {
            return Err(Error::Parse {
                offset: 0,
                message: format!(
                    "entry {:?} must have exactly one of \"relator\" or \"relation\"",
                    entry.name
                ),
            });
        }
    }
    Ok(entries)
}

pub fn render_report_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

/// One survey row for a two-bridge knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub p: i64,
    pub q: i64,
    pub word_class: String,
    /// Space-separated canonical coefficients, constant term first.
    pub alexander: String,
    pub positive_roots: usize,
    pub all_real_positive: bool,
    pub outcome: String,
    pub theorem: String,
}

/// Classifies every two-bridge knot with `q <= max_q`, one row per valid
/// parameter pair, ordered by (q, p).
pub fn run_survey(max_q: i64, options: &Options, jobs: Option<usize>) -> Result<Vec<SurveyRow>> {
    let params = TwoBridgeParams::enumerate(max_q);
    let rows: Vec<Result<SurveyRow>> = with_pool(jobs, || {
        params
            .par_iter()
            .map(|pr| {
                let presentation = two_bridge_presentation(pr);
                let c = apply_cgw(&presentation, options)?;
                Ok(SurveyRow {
                    p: pr.p(),
                    q: pr.q(),
                    word_class: c.verdict.word_class.level.to_string(),
                    alexander: c
                        .alexander
                        .poly
                        .coeffs()
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    positive_roots: c.verdict.root_report.positive_real_count,
                    all_real_positive: c.verdict.root_report.all_roots_real_and_positive,
                    outcome: c.verdict.outcome.as_str().to_string(),
                    theorem: c.verdict.theorem.as_str().to_string(),
                })
            })
            .collect()
    });
    rows.into_iter().collect()
}

pub fn render_survey_csv(rows: &[SurveyRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!("# biorder survey format_version={FORMAT_VERSION}\n"));
    out.push_str("p,q,word_class,alexander,positive_roots,all_real_positive,outcome,theorem\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.p,
            r.q,
            r.word_class,
            r.alexander,
            r.positive_roots,
            r.all_real_positive,
            r.outcome,
            r.theorem
        ));
    }
    out
}

/// Human-oriented rendering of one classification.
pub fn describe_classification(c: &Classification) -> String {
    let mut out = String::new();
    if let Some(label) = &c.label {
        out.push_str(&format!("{label}\n"));
    }
    let v = &c.verdict;
    let sub = &c.zero_weight.composed_substitution;
    if !sub.is_identity() {
        out.push_str(&format!(
            "  substitution: a -> {}, b -> {}\n",
            render_word(sub.image_of_a()),
            render_word(sub.image_of_b())
        ));
    }
    out.push_str(&format!(
        "  relator (normalized): {}\n",
        render_word(&c.zero_weight.final_word)
    ));
    out.push_str(&format!(
        "  word class: {} (symmetry: {})\n",
        v.word_class.level,
        v.symmetry_transform.describe()
    ));
    out.push_str(&format!("  Δ(t) = {}\n", c.alexander.poly));
    let rr = &v.root_report;
    out.push_str(&format!(
        "  roots: {} positive, {} negative of {} distinct; all real positive: {}\n",
        rr.positive_real_count, rr.negative_real_count, rr.squarefree_degree,
        rr.all_roots_real_and_positive
    ));
    let verdict_line = match v.outcome {
        Outcome::BiOrderable => format!("BI-ORDERABLE via {}", v.theorem.as_str()),
        Outcome::NotBiOrderable => format!("NOT bi-orderable via {}", v.theorem.as_str()),
        Outcome::Inconclusive => format!(
            "INCONCLUSIVE ({})",
            v.reason.map(|r| r.as_str()).unwrap_or("unspecified")
        ),
    };
    out.push_str(&format!("  verdict: {verdict_line}\n"));
    for note in &v.notes {
        out.push_str(&format!("  note: {note}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twist_corpus() -> Vec<CorpusEntry> {
        vec![
            CorpusEntry {
                name: "trefoil".into(),
                relator: Some("abaBAB".into()),
                relation: None,
                expected: Some(Expected::NotBiorderable),
            },
            CorpusEntry {
                name: "figure-eight".into(),
                relator: None,
                relation: Some("abABa=bABab".into()),
                expected: None,
            },
        ]
    }

    #[test]
    fn batch_reports_in_input_order() {
        let report = run_batch(&twist_corpus(), &Options::default(), Some(2));
        assert_eq!(report.entries.len(), 2);
        assert_eq!(report.entries[0].name, "trefoil");
        assert_eq!(report.entries[0].outcome, "not_biorderable");
        assert_eq!(report.entries[0].matches_expected, Some(true));
        assert_eq!(batch_exit_code(&report), 0);
    }

    #[test]
    fn mismatch_is_flagged() {
        let mut corpus = twist_corpus();
        corpus[0].expected = Some(Expected::Biorderable);
        let report = run_batch(&corpus, &Options::default(), None);
        assert_eq!(report.summary.mismatches, 1);
        assert_eq!(batch_exit_code(&report), 3);
    }

    #[test]
    fn error_entries_are_reported_not_fatal() {
        let corpus = vec![CorpusEntry {
            name: "bad".into(),
            relator: Some("a2b2".into()),
            relation: None,
            expected: None,
        }];
        let report = run_batch(&corpus, &Options::default(), None);
        assert_eq!(report.entries[0].outcome, "error");
        assert_eq!(report.summary.errors, 1);
        assert_eq!(batch_exit_code(&report), 2);
    }

    #[test]
    fn corpus_requires_exactly_one_word_field() {
        let json = r#"[{"name": "x", "relator": "ab", "relation": "a=b"}]"#;
        assert!(parse_corpus(json).is_err());
        let json = r#"[{"name": "x"}]"#;
        assert!(parse_corpus(json).is_err());
        let json = r#"[{"name": "x", "relator": "abaBAB", "expected": "not_biorderable"}]"#;
        let entries = parse_corpus(json).unwrap();
        assert_eq!(entries[0].expected, Some(Expected::NotBiorderable));
    }

    #[test]
    fn report_json_round_trips() {
        let report = run_batch(&twist_corpus(), &Options::default(), None);
        let json = render_report_json(&report);
        let parsed: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(render_report_json(&parsed), json);
    }

    #[test]
    fn batch_is_deterministic_across_parallelism() {
        let corpus = twist_corpus();
        let a = render_report_json(&run_batch(&corpus, &Options::default(), Some(1)));
        let b = render_report_json(&run_batch(&corpus, &Options::default(), Some(4)));
        assert_eq!(a, b);
    }

    #[test]
    fn survey_has_one_row_per_fraction() {
        let rows = run_survey(9, &Options::default(), None).unwrap();
        // q=3: p=1; q=5: 1,3; q=7: 1,3,5; q=9: 1,5,7
        assert_eq!(rows.len(), 1 + 2 + 3 + 3);
        let csv = render_survey_csv(&rows);
        assert!(csv.starts_with("# biorder survey format_version=1\np,q,word_class,"));
        assert_eq!(csv.lines().count(), 2 + rows.len());
    }
}
