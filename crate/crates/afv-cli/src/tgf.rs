//! Trivial graph format reader: node ids one per line, a `#` separator, then
//! `src dst` edge lines. Unlike APX, TGF declares every node explicitly, so
//! an edge naming an unknown node is always an error.

use crate::apx::{ParseDiagnostic, ParseError, ParsedAf, Severity};
use afv_core::build_af;

fn valid_name(token: &str) -> bool {
    !token.is_empty() && token.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_tgf(text: &str) -> Result<ParsedAf, ParseError> {
    let mut warnings: Vec<ParseDiagnostic> = Vec::new();
    let mut nodes: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut seen_separator = false;
    let mut line_count = 0;

    let fail = |warnings: Vec<ParseDiagnostic>, line, column, message: String| -> ParseError {
        let mut diagnostics = warnings;
        diagnostics.push(ParseDiagnostic { line, column, message, severity: Severity::Error });
        ParseError { diagnostics }
    };

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        line_count = lineno;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if !seen_separator {
            if line == "#" {
                seen_separator = true;
                continue;
            }
            // First token is the id, anything after it is a label.
            let id = line.split_whitespace().next().unwrap();
            if !valid_name(id) {
                return Err(fail(warnings, lineno, 1, format!("invalid node id `{id}`")));
            }
            if nodes.iter().any(|n| n == id) {
                warnings.push(ParseDiagnostic {
                    line: lineno,
                    column: 1,
                    message: format!("duplicate node `{id}`"),
                    severity: Severity::Warning,
                });
            } else {
                nodes.push(id.to_string());
            }
        } else {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(fail(
                    warnings,
                    lineno,
                    1,
                    format!("edge line needs exactly `src dst`, found {} token(s)", tokens.len()),
                ));
            }
            for t in &tokens {
                if !nodes.iter().any(|n| n == t) {
                    return Err(fail(warnings, lineno, 1, format!("unknown node `{t}` in edge")));
                }
            }
            let pair = (tokens[0].to_string(), tokens[1].to_string());
            if edges.contains(&pair) {
                warnings.push(ParseDiagnostic {
                    line: lineno,
                    column: 1,
                    message: format!("duplicate edge {} {}", tokens[0], tokens[1]),
                    severity: Severity::Warning,
                });
            } else {
                edges.push(pair);
            }
        }
    }

    if !seen_separator {
        return Err(fail(warnings, line_count + 1, 1, "missing `#` separator".to_string()));
    }

    let node_refs: Vec<&str> = nodes.iter().map(String::as_str).collect();
    let edge_refs: Vec<(&str, &str)> =
        edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Ok(ParsedAf { af: build_af(&node_refs, &edge_refs), warnings })
}
