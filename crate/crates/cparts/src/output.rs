//! Textual output formats shared by the CLI: plain lines, CSV and JSON
//! lines, plus strict parsers for the two structured ones.
//!
//! Byte stability is a contract: emitting a table, parsing it back and
//! emitting it again must reproduce the bytes. To keep that checkable the
//! parsers are strict — CSV must carry exactly the expected header and
//! column count, JSON lines must carry exactly the expected keys, and
//! every numeric field must already be in canonical form (the form the
//! renderer produces). Values are decimal-digit strings or `a/b`
//! rationals; nothing is ever emitted in floating-point notation.

use serde::{Deserialize, Serialize};

use crate::exact::{parse_rat, rat_render, ExactRat};
use crate::identities::VerificationReport;
use crate::{Error, Result};

/// Output flavor selected with `--format`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    JsonLines,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Self::Plain),
            "csv" => Ok(Self::Csv),
            "json-lines" => Ok(Self::JsonLines),
            _ => Err(Error::Parse {
                what: "format (plain|csv|json-lines)",
                input: s.to_string(),
            }),
        }
    }
}

/// One cell of the `p_{-r}(n)` grid. The value is carried as canonical
/// digit text so no format ever reinterprets it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableCell {
    pub n: u64,
    pub r: u64,
    pub value: String,
}

const TABLE_CSV_HEADER: &str = "n,r,p_r_n";

/// Renders the grid; cells are emitted in the order given (the CLI emits
/// n-major, r-minor).
pub fn render_table(cells: &[TableCell], format: OutputFormat) -> String {
    let mut out = String::new();
    if format == OutputFormat::Csv {
        out.push_str(TABLE_CSV_HEADER);
        out.push('\n');
    }
    for cell in cells {
        match format {
            OutputFormat::Plain => out.push_str(&format!("{} {} {}\n", cell.n, cell.r, cell.value)),
            OutputFormat::Csv => out.push_str(&format!("{},{},{}\n", cell.n, cell.r, cell.value)),
            OutputFormat::JsonLines => {
                out.push_str(&serde_json::to_string(cell).expect("plain struct serializes"));
                out.push('\n');
            }
        }
    }
    out
}

/// A `u64` in canonical decimal form: digits only, no leading zero unless
/// the value is exactly "0", no sign.
fn parse_canonical_u64(field: &str, what: &'static str) -> Result<u64> {
    let value: u64 = field.parse().map_err(|_| Error::Parse {
        what,
        input: field.to_string(),
    })?;
    if value.to_string() != field {
        return Err(Error::Parse {
            what,
            input: field.to_string(),
        });
    }
    Ok(value)
}

/// A rational in canonical `rat_render` form; returns it parsed and
/// verified to round-trip.
fn parse_canonical_rat(field: &str) -> Result<ExactRat> {
    let value = parse_rat(field)?;
    if rat_render(&value) != field {
        return Err(Error::Parse {
            what: "canonical rational",
            input: field.to_string(),
        });
    }
    Ok(value)
}

/// Parses a CSV table produced by [`render_table`]. Strict: exact header,
/// exactly three columns, canonical numeric text in each field, every line
/// (header included) terminated by a newline.
pub fn parse_table_csv(text: &str) -> Result<Vec<TableCell>> {
    let body = text.strip_suffix('\n').ok_or_else(|| Error::Parse {
        what: "csv table (missing final newline)",
        input: text.to_string(),
    })?;
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or("");
    if header != TABLE_CSV_HEADER {
        return Err(Error::Parse {
            what: "csv header",
            input: header.to_string(),
        });
    }
    let mut cells = Vec::new();
    for line in lines {
        let mut fields = line.split(',');
        let (n, r, value) = match (fields.next(), fields.next(), fields.next(), fields.next()) {
            (Some(n), Some(r), Some(v), None) => (n, r, v),
            _ => {
                return Err(Error::Parse {
                    what: "csv row",
                    input: line.to_string(),
                })
            }
        };
        let n = parse_canonical_u64(n, "csv column n")?;
        let r = parse_canonical_u64(r, "csv column r")?;
        let value = parse_canonical_rat(value)?;
        cells.push(TableCell {
            n,
            r,
            value: rat_render(&value),
        });
    }
    Ok(cells)
}

/// Parses a JSON-lines table produced by [`render_table`]. Strict about
/// keys and canonical numeric text, tolerant of JSON whitespace.
pub fn parse_table_json_lines(text: &str) -> Result<Vec<TableCell>> {
    let mut cells = Vec::new();
    for line in text.split('\n') {
        if line.is_empty() {
            continue;
        }
        let cell: TableCell = serde_json::from_str(line).map_err(|_| Error::Parse {
            what: "json-lines record",
            input: line.to_string(),
        })?;
        let value = parse_canonical_rat(&cell.value)?;
        cells.push(TableCell {
            value: rat_render(&value),
            ..cell
        });
    }
    Ok(cells)
}

#[derive(Serialize)]
struct ReportSummaryLine<'a> {
    identity: &'a str,
    range: &'a str,
    checked: u64,
    failures: usize,
    elapsed_ms: u128,
    verdict: &'a str,
}

#[derive(Serialize)]
struct ReportFailureLine<'a> {
    identity: &'a str,
    params: String,
    expected: String,
    actual: String,
}

fn params_text(params: &[(&'static str, u64)]) -> String {
    params
        .iter()
        .map(|(name, value)| format!("{name}={value}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders a verification report.
///
/// - plain: one summary line, then one line per counterexample;
/// - csv: a `identity,params,expected,actual` failure table (header always
///   present, body empty on a pass);
/// - json-lines: one summary record, then one record per counterexample.
pub fn render_report(report: &VerificationReport, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            out.push_str(&format!(
                "identity={} range={} checked={} failures={} elapsed_ms={} verdict={}\n",
                report.identity,
                report.range,
                report.checked,
                report.failures.len(),
                report.elapsed_ms,
                report.verdict()
            ));
            for failure in &report.failures {
                out.push_str(&format!(
                    "counterexample {}: expected {}, got {}\n",
                    params_text(&failure.params),
                    rat_render(&failure.expected),
                    rat_render(&failure.actual)
                ));
            }
        }
        OutputFormat::Csv => {
            out.push_str("identity,params,expected,actual\n");
            for failure in &report.failures {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    report.identity,
                    params_text(&failure.params),
                    rat_render(&failure.expected),
                    rat_render(&failure.actual)
                ));
            }
        }
        OutputFormat::JsonLines => {
            let summary = ReportSummaryLine {
                identity: report.identity,
                range: &report.range,
                checked: report.checked,
                failures: report.failures.len(),
                elapsed_ms: report.elapsed_ms,
                verdict: report.verdict(),
            };
            out.push_str(&serde_json::to_string(&summary).expect("plain struct serializes"));
            out.push('\n');
            for failure in &report.failures {
                let line = ReportFailureLine {
                    identity: report.identity,
                    params: params_text(&failure.params),
                    expected: rat_render(&failure.expected),
                    actual: rat_render(&failure.actual),
                };
                out.push_str(&serde_json::to_string(&line).expect("plain struct serializes"));
                out.push('\n');
            }
        }
    }
    out
}

/// One row of the `p(0..=N)` listing emitted by the partitions command.
#[derive(Serialize)]
struct PartitionLine<'a> {
    n: u64,
    value: &'a str,
}

/// Renders the plain partition-number listing in the chosen format;
/// csv header is `n,p_n`.
pub fn render_partition_list(values: &[crate::ExactInt], format: OutputFormat) -> String {
    let mut out = String::new();
    if format == OutputFormat::Csv {
        out.push_str("n,p_n\n");
    }
    for (n, value) in values.iter().enumerate() {
        match format {
            OutputFormat::Plain => out.push_str(&format!("{n} {value}\n")),
            OutputFormat::Csv => out.push_str(&format!("{n},{value}\n")),
            OutputFormat::JsonLines => {
                let text = value.to_string();
                let line = PartitionLine {
                    n: n as u64,
                    value: &text,
                };
                out.push_str(&serde_json::to_string(&line).expect("plain struct serializes"));
                out.push('\n');
            }
        }
    }
    out
}
