//! Versioned text output: comma-separated tables and key-value documents.
//!
//! Every file starts with `# avg-sfde v1 <command>`.

use std::fmt::Write as _;

pub const SCHEMA: &str = "avg-sfde v1";

pub fn header(command: &str) -> String {
    format!("# {SCHEMA} {command}")
}

/// Shortest round-trip decimal; scientific notation outside [1e-4, 1e15).
pub fn fmt_f64(x: f64) -> String {
    let m = x.abs();
    if x == 0.0 || !x.is_finite() || (1e-4..1e15).contains(&m) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Bool(bool),
    Int(u64),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(x) => fmt_f64(*x),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Int(n) => n.to_string(),
        }
    }
}

/// A table with a header row.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub command: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(command: &str, columns: &[&str]) -> Table {
        Table {
            command: command.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row.iter().map(Cell::render).collect());
    }

    pub fn render(&self) -> String {
        let mut out = header(&self.command);
        out.push('\n');
        out += &self.columns.join(",");
        out.push('\n');
        for r in &self.rows {
            out += &r.join(",");
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`Table::render`].
    pub fn parse(text: &str) -> Result<Table, String> {
        let mut lines = text.lines();
        let command = parse_header(lines.next())?;
        let columns: Vec<String> = lines
            .next()
            .ok_or("missing column row")?
            .split(',')
            .map(str::to_string)
            .collect();
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            if line.is_empty() {
                continue;
            }
            let row: Vec<String> = line.split(',').map(str::to_string).collect();
            if row.len() != columns.len() {
                return Err(format!(
                    "row {} has {} fields, expected {}",
                    i + 1,
                    row.len(),
                    columns.len()
                ));
            }
            rows.push(row);
        }
        Ok(Table {
            command,
            columns,
            rows,
        })
    }

    /// A numeric column by name.
    pub fn column(&self, name: &str) -> Result<Vec<f64>, String> {
        let k = self
            .columns
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| format!("no column '{name}'"))?;
        self.rows
            .iter()
            .map(|r| {
                r[k].parse::<f64>()
                    .map_err(|_| format!("'{}' is not a number", r[k]))
            })
            .collect()
    }
}

/// The command named by a `# avg-sfde v1 <command>` line.
pub fn parse_header(line: Option<&str>) -> Result<String, String> {
    let line = line.ok_or("empty file")?;
    line.strip_prefix(&format!("# {SCHEMA} "))
        .map(str::to_string)
        .ok_or_else(|| format!("missing '# {SCHEMA}' header, got '{line}'"))
}

/// Header line followed by a TOML body.
pub fn render_document(command: &str, body: &str) -> String {
    let mut out = header(command);
    out.push('\n');
    let _ = write!(out, "{body}");
    out
}

/// Splits a document into its command and TOML body.
pub fn parse_document(text: &str) -> Result<(String, toml::Table), String> {
    let command = parse_header(text.lines().next())?;
    let table = text.parse::<toml::Table>().map_err(|e| e.to_string())?;
    Ok((command, table))
}
