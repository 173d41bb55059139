use serde::{Deserialize, Serialize};

use super::{CoverageReport, Fraction, MorphReport, SpellReport};

pub const UNDEFINED: &str = "—";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Tsv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" | "text" => Ok(ReportFormat::Table),
            "tsv" => Ok(ReportFormat::Tsv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown format `{other}` (table, tsv or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Spell(SpellReport),
    Morph(MorphReport),
    Coverage(CoverageReport),
}

const SPELL_HEADER: [&str; 13] = [
    "System",
    "Test set",
    "TP",
    "FP",
    "TN",
    "FN",
    "Acc (%)",
    "P",
    "R",
    "F1",
    "Sugg1 (%)",
    "Sugg3 (%)",
    "Sugg>3 (%)",
];

fn ratio(f: Option<Fraction>) -> String {
    f.map_or_else(|| UNDEFINED.to_string(), |f| format!("{:.2}", f.value()))
}

fn percent(f: Option<Fraction>) -> String {
    f.map_or_else(|| UNDEFINED.to_string(), |f| format!("{:.2}", f.percent()))
}

fn spell_row(r: &SpellReport) -> Vec<String> {
    let s = r.suggestions;
    vec![
        r.system.clone(),
        r.testset.clone(),
        r.counts.tp.to_string(),
        r.counts.fp.to_string(),
        r.counts.tn.to_string(),
        r.counts.fn_.to_string(),
        percent(r.metrics.acc),
        ratio(r.metrics.precision),
        ratio(r.metrics.recall),
        ratio(r.metrics.f1),
        percent(s.map(|s| s.sugg1)),
        percent(s.map(|s| s.sugg3)),
        percent(s.map(|s| s.sugg_all)),
    ]
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join(" | ").trim_end())
    };
    let mut out = line(header.to_vec());
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&format!("{}\n", rule.join("-+-")));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn tsv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("{}\n", header.join("\t"));
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

fn layout(header: &[&str], rows: &[Vec<String>], format: ReportFormat) -> String {
    match format {
        ReportFormat::Tsv => tsv(header, rows),
        _ => table(header, rows),
    }
}

/// Arbitrary rows under `header`; JSON is an array of objects keyed by the
/// header cells.
pub fn render_rows(header: &[&str], rows: &[Vec<String>], format: ReportFormat) -> String {
    if format != ReportFormat::Json {
        return layout(header, rows, format);
    }
    let objects: Vec<serde_json::Map<String, serde_json::Value>> = rows
        .iter()
        .map(|row| {
            header
                .iter()
                .zip(row)
                .map(|(h, c)| (h.to_string(), serde_json::Value::String(c.clone())))
                .collect()
        })
        .collect();
    format!(
        "{}\n",
        serde_json::to_string_pretty(&objects).expect("rows serialize")
    )
}

/// Several spell reports as one table, one row each.
pub fn render_spell_table(reports: &[SpellReport], format: ReportFormat) -> String {
    if format == ReportFormat::Json {
        let wrapped: Vec<Report> = reports.iter().cloned().map(Report::Spell).collect();
        return format!(
            "{}\n",
            serde_json::to_string_pretty(&wrapped).expect("reports serialize")
        );
    }
    let rows: Vec<Vec<String>> = reports.iter().map(spell_row).collect();
    layout(&SPELL_HEADER, &rows, format)
}

pub fn render_report(report: &Report, format: ReportFormat) -> String {
    if format == ReportFormat::Json {
        return format!(
            "{}\n",
            serde_json::to_string_pretty(report).expect("report serializes")
        );
    }
    match report {
        Report::Spell(r) => layout(&SPELL_HEADER, &[spell_row(r)], format),
        Report::Morph(r) => layout(
            &["Aspect", "Correct", "Total", "Accuracy (%)"],
            &[vec![
                r.aspect.to_string(),
                r.correct.to_string(),
                r.total.to_string(),
                percent(Some(r.accuracy)),
            ]],
            format,
        ),
        Report::Coverage(r) => layout(
            &["Analyzed", "Total", "Coverage (%)"],
            &[vec![
                r.analyzed.to_string(),
                r.total.to_string(),
                percent(Some(r.coverage)),
            ]],
            format,
        ),
    }
}
