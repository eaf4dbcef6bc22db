//! Deterministic rendering of computed results.
//!
//! A [`Report`] is a list of titled tables plus a metadata header: the tool
//! version, an optional timestamp, and the fixed block of sign/orientation
//! conventions that every consumer needs in order to reproduce a number.
//! Three renderings are supported — aligned text tables, CSV, and JSON —
//! and all of them are byte-identical across runs once the timestamp is
//! suppressed. Fractions are always written exactly as `p/q`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

/// Output format selector (`table` is the default everywhere).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

impl OutputFormat {
    pub const ALL: [OutputFormat; 3] = [OutputFormat::Table, OutputFormat::Csv, OutputFormat::Json];

    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Table => "table",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!(
                "unknown output format {other:?} (expected table, csv, or json)"
            )),
        }
    }
}

/// The orientation and sign conventions this engine computes under. Every
/// report carries these so a number can be compared against other software
/// without guessing.
pub fn conventions() -> &'static [(&'static str, &'static str)] {
    &[
        (
            "composition",
            "operators compose right-to-left: in `g . f`, `f` applies first",
        ),
        (
            "chain-rotation",
            "on the algebra side the cyclic generator moves the last tensor factor to the front",
        ),
        (
            "cochain-rotation",
            "on the coalgebra side the cyclic generator moves the first tensor factor to the back",
        ),
        (
            "signed-rotation",
            "the signed rotation in degree n carries the sign (-1)^n",
        ),
        (
            "boundaries",
            "b alternates the faces 0..=n+1 with signs (-1)^j; b' omits the last face",
        ),
        (
            "degree-shift",
            "S xi = -b z where (1 - signed rotation) z = b' xi / (p+1)",
        ),
        (
            "numbers",
            "all arithmetic is exact; rationals are rendered as p/q",
        ),
        (
            "safe-window",
            "a truncation at level N certifies degrees <= N-1; larger requests are refused",
        ),
    ]
}

/// A titled table of string cells. Numeric cells are pre-rendered by the
/// caller (fractions via `format_q`) so every format agrees on the digits.
#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(
        title: impl Into<String>,
        columns: impl IntoIterator<Item = impl Into<String>>,
    ) -> Self {
        Table {
            title: title.into(),
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: impl IntoIterator<Item = impl Into<String>>) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width does not match header width in table {:?}",
            self.title
        );
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, Serialize)]
struct ConventionEntry {
    name: &'static str,
    rule: &'static str,
}

/// A full report: metadata header plus tables.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    tool: String,
    /// RFC 3339 UTC; `None` when suppressed for reproducible output.
    timestamp: Option<String>,
    conventions: Vec<ConventionEntry>,
    tables: Vec<Table>,
}

impl Report {
    /// Creates an empty report. With `with_timestamp = false` the rendered
    /// bytes depend only on the pushed tables.
    pub fn new(with_timestamp: bool) -> Self {
        let timestamp = with_timestamp
            .then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
        Report {
            tool: format!("cychom {}", env!("CARGO_PKG_VERSION")),
            timestamp,
            conventions: conventions()
                .iter()
                .map(|&(name, rule)| ConventionEntry { name, rule })
                .collect(),
            tables: Vec::new(),
        }
    }

    pub fn push(&mut self, table: Table) {
        self.tables.push(table);
    }

    pub fn tables(&self) -> &[Table] {
        &self.tables
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.render_table(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        }
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.tool));
        if let Some(ts) = &self.timestamp {
            out.push_str(&format!("# generated: {ts}\n"));
        }
        for entry in &self.conventions {
            out.push_str(&format!("# convention {}: {}\n", entry.name, entry.rule));
        }
        for table in &self.tables {
            out.push('\n');
            out.push_str(&table.title);
            out.push('\n');
            let widths: Vec<usize> = (0..table.columns.len())
                .map(|j| {
                    table
                        .rows
                        .iter()
                        .map(|r| r[j].chars().count())
                        .chain(std::iter::once(table.columns[j].chars().count()))
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let render_row = |cells: &[String]| -> String {
                let mut line = String::new();
                for (j, cell) in cells.iter().enumerate() {
                    if j > 0 {
                        line.push_str("  ");
                    }
                    line.push_str(cell);
                    if j + 1 < cells.len() {
                        for _ in cell.chars().count()..widths[j] {
                            line.push(' ');
                        }
                    }
                }
                line.push('\n');
                line
            };
            out.push_str(&render_row(&table.columns));
            let rule_len = widths.iter().sum::<usize>() + 2 * widths.len().saturating_sub(1);
            out.push_str(&"-".repeat(rule_len));
            out.push('\n');
            for row in &table.rows {
                out.push_str(&render_row(row));
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        fn field(cell: &str) -> String {
            if cell.contains([',', '"', '\n']) {
                format!("\"{}\"", cell.replace('"', "\"\""))
            } else {
                cell.to_string()
            }
        }
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.tool));
        if let Some(ts) = &self.timestamp {
            out.push_str(&format!("# generated: {ts}\n"));
        }
        for entry in &self.conventions {
            out.push_str(&format!("# convention {}: {}\n", entry.name, entry.rule));
        }
        for table in &self.tables {
            out.push_str(&format!("# table: {}\n", table.title));
            let header: Vec<String> = table.columns.iter().map(|c| field(c)).collect();
            out.push_str(&header.join(","));
            out.push('\n');
            for row in &table.rows {
                let cells: Vec<String> = row.iter().map(|c| field(c)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        out
    }

    fn render_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        text.push('\n');
        text
    }
}
