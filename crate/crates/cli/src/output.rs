//! Rendering of command results as JSON or tab-separated tables.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

/// Rows under a header line. The title goes above the header and `notes`
/// below the rows, both prefixed with `#`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub title: Option<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(title) = &self.title {
            out.push_str("# ");
            out.push_str(title);
            out.push('\n');
        }
        out.push_str(&self.columns.join("\t"));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        for note in &self.notes {
            out.push_str("# ");
            out.push_str(note);
            out.push('\n');
        }
        out
    }
}

/// What a command prints and the status it exits with.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub json: Value,
    pub tables: Vec<Table>,
    pub exit_code: i32,
}

impl Output {
    pub fn new(json: Value, tables: Vec<Table>) -> Self {
        Output {
            json,
            tables,
            exit_code: 0,
        }
    }

    pub fn failing_if(mut self, failed: bool) -> Self {
        if failed {
            self.exit_code = 1;
        }
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Tsv => self
                .tables
                .iter()
                .map(Table::render)
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }
}
