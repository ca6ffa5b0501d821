//! APX reader and writer.
//!
//! The grammar is the usual solver-competition one: `arg(<name>).` declares
//! an argument, `att(<src>,<dst>).` an attack. Whitespace is free-form,
//! `%` starts a line comment, names are `[A-Za-z0-9_]+`. Attacks may mention
//! undeclared arguments; by default they are added with a warning, in strict
//! mode they are an error.

use afv_core::{build_af, Af};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Severity {
    Warning,
    Error,
}

/// A located parser message. Every error carries the source position.
#[derive(Clone, Debug)]
pub struct ParseDiagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub severity: Severity,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Warning => "warning",
            Severity::Error => "error",
        };
        write!(f, "{}:{}: {tag}: {}", self.line, self.column, self.message)
    }
}

#[derive(Debug)]
pub struct ParsedAf {
    pub af: Af,
    pub warnings: Vec<ParseDiagnostic>,
}

/// Parsing failed; the last diagnostic is the fatal one, any earlier entries
/// are warnings collected on the way.
#[derive(Debug)]
pub struct ParseError {
    pub diagnostics: Vec<ParseDiagnostic>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.diagnostics.last() {
            Some(d) => write!(f, "{d}"),
            None => write!(f, "parse error"),
        }
    }
}

impl std::error::Error for ParseError {}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { chars: text.chars().peekable(), line: 1, column: 1 }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '%' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn error(&self, message: String) -> ParseDiagnostic {
        ParseDiagnostic { line: self.line, column: self.column, message, severity: Severity::Error }
    }

    fn name(&mut self) -> Result<String, ParseDiagnostic> {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if is_name_char(c) {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if out.is_empty() {
            let message = match self.peek() {
                Some(c) => format!("expected a name, found `{c}`"),
                None => "expected a name, found end of input".to_string(),
            };
            return Err(self.error(message));
        }
        Ok(out)
    }

    fn expect(&mut self, wanted: char) -> Result<(), ParseDiagnostic> {
        match self.peek() {
            Some(c) if c == wanted => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{wanted}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{wanted}`, found end of input"))),
        }
    }
}

enum Statement {
    Arg { name: String, line: usize, column: usize },
    Att { src: String, dst: String, line: usize, column: usize },
}

pub fn parse_apx(text: &str, strict: bool) -> Result<ParsedAf, ParseError> {
    let mut scanner = Scanner::new(text);
    let mut statements = Vec::new();
    let mut warnings = Vec::new();

    let fail = |warnings: Vec<ParseDiagnostic>, error: ParseDiagnostic| -> ParseError {
        let mut diagnostics = warnings;
        diagnostics.push(error);
        ParseError { diagnostics }
    };

    loop {
        scanner.skip_trivia();
        if scanner.peek().is_none() {
            break;
        }
        let (line, column) = (scanner.line, scanner.column);
        let head = match scanner.name() {
            Ok(h) => h,
            Err(e) => return Err(fail(warnings, e)),
        };
        let result = (|| -> Result<Statement, ParseDiagnostic> {
            match head.as_str() {
                "arg" => {
                    scanner.skip_trivia();
                    scanner.expect('(')?;
                    scanner.skip_trivia();
                    let name = scanner.name()?;
                    scanner.skip_trivia();
                    scanner.expect(')')?;
                    scanner.skip_trivia();
                    scanner.expect('.')?;
                    Ok(Statement::Arg { name, line, column })
                }
                "att" => {
                    scanner.skip_trivia();
                    scanner.expect('(')?;
                    scanner.skip_trivia();
                    let src = scanner.name()?;
                    scanner.skip_trivia();
                    scanner.expect(',')?;
                    scanner.skip_trivia();
                    let dst = scanner.name()?;
                    scanner.skip_trivia();
                    scanner.expect(')')?;
                    scanner.skip_trivia();
                    scanner.expect('.')?;
                    Ok(Statement::Att { src, dst, line, column })
                }
                other => Err(ParseDiagnostic {
                    line,
                    column,
                    message: format!("unknown statement `{other}`, expected `arg` or `att`"),
                    severity: Severity::Error,
                }),
            }
        })();
        match result {
            Ok(stmt) => statements.push(stmt),
            Err(e) => return Err(fail(warnings, e)),
        }
    }

    let mut args: Vec<String> = Vec::new();
    for stmt in &statements {
        if let Statement::Arg { name, line, column } = stmt {
            if args.contains(name) {
                warnings.push(ParseDiagnostic {
                    line: *line,
                    column: *column,
                    message: format!("duplicate declaration of argument `{name}`"),
                    severity: Severity::Warning,
                });
            } else {
                args.push(name.clone());
            }
        }
    }

    let mut attacks: Vec<(String, String)> = Vec::new();
    for stmt in &statements {
        if let Statement::Att { src, dst, line, column } = stmt {
            for endpoint in [src, dst] {
                if !args.contains(endpoint) {
                    let diag = ParseDiagnostic {
                        line: *line,
                        column: *column,
                        message: format!("attack mentions undeclared argument `{endpoint}`"),
                        severity: if strict { Severity::Error } else { Severity::Warning },
                    };
                    if strict {
                        return Err(fail(warnings, diag));
                    }
                    warnings.push(diag);
                    args.push(endpoint.clone());
                }
            }
            let pair = (src.clone(), dst.clone());
            if attacks.contains(&pair) {
                warnings.push(ParseDiagnostic {
                    line: *line,
                    column: *column,
                    message: format!("duplicate attack ({src},{dst})"),
                    severity: Severity::Warning,
                });
            } else {
                attacks.push(pair);
            }
        }
    }

    let attack_refs: Vec<(&str, &str)> =
        attacks.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let arg_refs: Vec<&str> = args.iter().map(String::as_str).collect();
    Ok(ParsedAf { af: build_af(&arg_refs, &attack_refs), warnings })
}

/// Serializes with arguments sorted by name and attacks sorted by name pair,
/// so output is deterministic and `parse_apx(write_apx(af))` restores the
/// framework.
pub fn write_apx(af: &Af) -> String {
    let mut names: Vec<&str> = af.table().names().collect();
    names.sort_unstable();
    let mut out = String::new();
    for name in &names {
        out.push_str(&format!("arg({name}).\n"));
    }
    let mut attacks: Vec<(&str, &str)> = af
        .attack_pairs()
        .map(|(a, b)| (af.table().name(a), af.table().name(b)))
        .collect();
    attacks.sort_unstable();
    for (src, dst) in attacks {
        out.push_str(&format!("att({src},{dst}).\n"));
    }
    out
}
