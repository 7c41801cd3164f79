use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};
use zigzag::report::Report;

use crate::error::{CliError, EXIT_FAIL};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// A computation with nothing to verify.
    Ok,
    Pass,
    Fail,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// Result of a subcommand: a JSON payload, a text rendering and a status.
pub struct Output {
    pub result: Value,
    pub text: String,
    /// Extra lines shown only with `--verbose`.
    pub detail: String,
    pub status: Status,
}

impl Output {
    pub fn info(result: Value, text: impl Into<String>) -> Self {
        Output { result, text: text.into(), detail: String::new(), status: Status::Ok }
    }

    pub fn verdict(result: Value, text: impl Into<String>, pass: bool) -> Self {
        Output {
            result,
            text: text.into(),
            detail: String::new(),
            status: if pass { Status::Pass } else { Status::Fail },
        }
    }

    /// Pass/fail output for a report; the text lists failures, and every
    /// check under `--verbose`.
    pub fn from_report(what: &str, r: &Report) -> Self {
        let failed: Vec<_> = r.failures().collect();
        let mut text = if failed.is_empty() {
            format!("{what}: all {} checks pass", r.len())
        } else {
            format!("{what}: {} of {} checks fail", failed.len(), r.len())
        };
        for c in &failed {
            text.push_str(&format!("\n  FAIL {} on {}{}", c.relation, c.object, witness(&c.witness)));
        }
        let detail = r
            .checks
            .iter()
            .map(|c| format!("  {} {} on {}{}", if c.pass { "pass" } else { "FAIL" }, c.relation, c.object, witness(&c.witness)))
            .collect::<Vec<_>>()
            .join("\n");
        let result = json!({
            "checks": r.to_json(),
            "passed": r.len() - failed.len(),
            "total": r.len(),
        });
        Output { result, text, detail, status: if failed.is_empty() { Status::Pass } else { Status::Fail } }
    }

    /// Rendered document. A failed verification always carries the JSON
    /// report.
    pub fn render(&self, command: &str, as_json: bool, verbose: bool) -> String {
        if !as_json && self.status != Status::Fail {
            return self.text_body(verbose);
        }
        let doc = json!({
            "schema": "zz/1",
            "command": command,
            "status": self.status.as_str(),
            "result": self.result,
        });
        let json = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
        if as_json {
            json
        } else {
            format!("{}\n{json}", self.text_body(verbose))
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Fail => EXIT_FAIL,
            _ => 0,
        }
    }

    /// Writes the rendered output and returns the exit code.
    pub fn emit(&self, command: &str, as_json: bool, verbose: bool, out: Option<&Path>) -> Result<u8, CliError> {
        let body = self.render(command, as_json, verbose);
        match out {
            Some(path) => std::fs::write(path, format!("{body}\n"))
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?,
            None => {
                let mut stdout = std::io::stdout().lock();
                writeln!(stdout, "{body}").map_err(CliError::internal)?;
            }
        }
        Ok(self.exit_code())
    }

    fn text_body(&self, verbose: bool) -> String {
        if verbose && !self.detail.is_empty() {
            format!("{}\n{}", self.text, self.detail)
        } else {
            self.text.clone()
        }
    }
}

fn witness(w: &Option<String>) -> String {
    w.as_ref().map(|w| format!(" ({w})")).unwrap_or_default()
}

/// Renders rows of cells as an aligned table.
pub fn table(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .map(|(j, c)| format!("{c:<w$}", w = widths[j]))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failing() -> Output {
        let mut r = Report::new();
        r.push("E F = F E", "L_a", true, None);
        r.push("E E = 0", "P_b", false, Some("dims 1 vs 0".into()));
        Output::from_report("relations", &r)
    }

    #[test]
    fn failed_report_exits_one_with_json() {
        let out = failing();
        assert_eq!(out.exit_code(), EXIT_FAIL);
        let text = out.render("adjoint verify-uq", false, false);
        assert!(text.starts_with("relations: 1 of 2 checks fail\n  FAIL E E = 0 on P_b (dims 1 vs 0)"));
        let json_start = text.find('{').unwrap();
        let doc: Value = serde_json::from_str(&text[json_start..]).unwrap();
        assert_eq!(doc["schema"], "zz/1");
        assert_eq!(doc["status"], "fail");
        assert_eq!(doc["result"]["passed"], 1);
    }

    #[test]
    fn passing_report_is_text_only() {
        let mut r = Report::new();
        r.push("x", "y", true, None);
        let out = Output::from_report("rel", &r);
        assert_eq!(out.exit_code(), 0);
        assert_eq!(out.render("c", false, false), "rel: all 1 checks pass");
        assert_eq!(out.render("c", false, true), "rel: all 1 checks pass\n  pass x on y");
    }

    #[test]
    fn table_aligns_columns() {
        let t = table(&[vec!["a".into(), "bb".into()], vec!["ccc".into(), "d".into()]]);
        assert_eq!(t, "a    bb\nccc  d");
    }
}
