//! The line-oriented Lewis diagram file format.
//!
//! ```text
//! # comment
//! p: 3
//! top.generators: 2
//! top.relations: []
//! bottom.generators: 1
//! bottom.relations: []
//! action: [[1]]
//! res: [[1, 3]]
//! tr: [[0], [1]]
//! ```
//!
//! Matrices are lists of rows; entry `[i][j]` is the coefficient of target
//! generator `i` in the image of source generator `j`. Relations are listed
//! one relation vector per row.

use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::abgroup::AbGroup;
use crate::intlin::Matrix;
use crate::mackey::{MackeyFunctor, Prime, Structure};
use crate::Int;

const FIELDS: [&str; 8] =
    ["p", "top.generators", "top.relations", "bottom.generators", "bottom.relations", "action", "res", "tr"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown field `{field}`")]
    UnknownField { line: usize, field: String },
    #[error("line {line}: field `{field}` given twice")]
    DuplicateField { line: usize, field: String },
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error("field `{field}`: expected a {}x{} matrix, found {}x{}", expected.0, expected.1, found.0, found.1)]
    Dimension { field: &'static str, expected: (usize, usize), found: (usize, usize) },
    #[error("field `{field}`: {found} entries in row {row}, expected {expected}")]
    RaggedRow { field: &'static str, row: usize, expected: usize, found: usize },
    #[error("p = {0} is not a prime")]
    NotPrime(u64),
    #[error("field `{0}` is not a well-defined homomorphism")]
    IllDefined(&'static str),
}

impl DocumentError {
    /// Stable identifier printed alongside the message.
    pub fn code(&self) -> &'static str {
        match self {
            DocumentError::Syntax { .. } => "syntax",
            DocumentError::UnknownField { .. } => "unknown-field",
            DocumentError::DuplicateField { .. } => "duplicate-field",
            DocumentError::MissingField(_) => "missing-field",
            DocumentError::Dimension { .. } | DocumentError::RaggedRow { .. } => "dimension",
            DocumentError::NotPrime(_) => "not-prime",
            DocumentError::IllDefined(_) => "ill-defined",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TierDocument {
    pub generators: usize,
    /// One relation vector per row.
    pub relations: Vec<Vec<Int>>,
}

/// A parsed and validated Lewis diagram file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyDocument {
    pub p: Prime,
    pub top: TierDocument,
    pub bottom: TierDocument,
    pub action: Matrix<Int>,
    pub res: Matrix<Int>,
    pub tr: Matrix<Int>,
}

impl MackeyDocument {
    pub fn from_functor(m: &MackeyFunctor<Int>) -> Self {
        let tier = |g: &AbGroup<Int>| TierDocument { generators: g.ngens(), relations: g.relations().transpose().row_vecs() };
        MackeyDocument {
            p: m.p(),
            top: tier(m.top()),
            bottom: tier(m.bottom()),
            action: m.action().clone(),
            res: m.res().clone(),
            tr: m.tr().clone(),
        }
    }

    pub fn to_functor(&self) -> MackeyFunctor<Int> {
        let group = |t: &TierDocument| {
            let rel = Matrix::from_rows(&t.relations, t.generators).transpose();
            AbGroup::new(t.generators, rel).expect("validated on parse")
        };
        MackeyFunctor::new(
            self.p,
            group(&self.top),
            group(&self.bottom),
            self.action.clone(),
            self.res.clone(),
            self.tr.clone(),
        )
        .expect("validated on parse")
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("# C_p-Mackey functor, Lewis diagram\n");
        out.push_str("# matrices are lists of rows: entry [i][j] is the coefficient of target generator i in the image of source generator j\n");
        out.push_str("# relations: one relation vector per row\n");
        let _ = writeln!(out, "p: {}", self.p);
        let _ = writeln!(out, "top.generators: {}", self.top.generators);
        let _ = writeln!(out, "top.relations: {}", rows_literal(&self.top.relations));
        let _ = writeln!(out, "bottom.generators: {}", self.bottom.generators);
        let _ = writeln!(out, "bottom.relations: {}", rows_literal(&self.bottom.relations));
        let _ = writeln!(out, "action: {}", self.action);
        let _ = writeln!(out, "res: {}", self.res);
        let _ = writeln!(out, "tr: {}", self.tr);
        out
    }
}

fn rows_literal(rows: &[Vec<Int>]) -> String {
    let parts: Vec<String> = rows
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", parts.join(", "))
}

/// Canonical machine serialization of `m`.
pub fn render_machine(m: &MackeyFunctor<Int>) -> String {
    MackeyDocument::from_functor(m).render()
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    text: &'a str,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn err(&self, message: impl Into<String>) -> DocumentError {
        DocumentError::Syntax { line: self.line, message: message.into() }
    }

    fn expect(&mut self, want: char) -> Result<(), DocumentError> {
        self.skip_ws();
        match self.chars.next() {
            Some((_, c)) if c == want => Ok(()),
            Some((_, c)) => Err(self.err(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.err(format!("expected `{want}`, found end of line"))),
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn integer(&mut self) -> Result<Int, DocumentError> {
        self.skip_ws();
        let start = match self.chars.peek() {
            Some(&(i, _)) => i,
            None => return Err(self.err("expected an integer, found end of line")),
        };
        let mut end = start;
        if let Some(&(i, c)) = self.chars.peek() {
            if c == '-' || c == '+' {
                end = i + 1;
                self.chars.next();
            }
        }
        while let Some(&(i, c)) = self.chars.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            end = i + 1;
            self.chars.next();
        }
        let token = &self.text[start..end];
        token.parse::<BigInt>().map_err(|_| self.err(format!("expected an integer, found `{}`", self.text[start..].trim())))
    }

    fn finish(&mut self) -> Result<(), DocumentError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected `{c}` after value"))),
        }
    }
}

/// `[[a, b], [c, d]]`, `[]` or `[[], []]`.
fn parse_rows(text: &str, line: usize) -> Result<Vec<Vec<Int>>, DocumentError> {
    let mut cur = Cursor { chars: text.char_indices().peekable(), text, line };
    cur.expect('[')?;
    let mut rows = Vec::new();
    if cur.peek() == Some(']') {
        cur.expect(']')?;
        cur.finish()?;
        return Ok(rows);
    }
    loop {
        cur.expect('[')?;
        let mut row = Vec::new();
        if cur.peek() == Some(']') {
            cur.expect(']')?;
        } else {
            loop {
                row.push(cur.integer()?);
                match cur.peek() {
                    Some(',') => cur.expect(',')?,
                    Some(']') => {
                        cur.expect(']')?;
                        break;
                    }
                    Some(c) => return Err(cur.err(format!("expected `,` or `]`, found `{c}`"))),
                    None => return Err(cur.err("unterminated row")),
                }
            }
        }
        rows.push(row);
        match cur.peek() {
            Some(',') => cur.expect(',')?,
            Some(']') => {
                cur.expect(']')?;
                break;
            }
            Some(c) => return Err(cur.err(format!("expected `,` or `]`, found `{c}`"))),
            None => return Err(cur.err("unterminated matrix")),
        }
    }
    cur.finish()?;
    Ok(rows)
}

fn parse_count(text: &str, line: usize) -> Result<u64, DocumentError> {
    text.parse::<u64>()
        .map_err(|_| DocumentError::Syntax { line, message: format!("expected a non-negative integer, found `{text}`") })
}

fn to_matrix(
    field: &'static str,
    rows: &[Vec<Int>],
    expected: (usize, usize),
) -> Result<Matrix<Int>, DocumentError> {
    let found_cols = rows.first().map_or(expected.1, Vec::len);
    for (i, r) in rows.iter().enumerate() {
        if r.len() != found_cols {
            return Err(DocumentError::RaggedRow { field, row: i, expected: found_cols, found: r.len() });
        }
    }
    if rows.len() != expected.0 || (expected.0 > 0 && found_cols != expected.1) {
        return Err(DocumentError::Dimension { field, expected, found: (rows.len(), found_cols) });
    }
    Ok(Matrix::from_rows(rows, expected.1))
}

fn relation_rows(field: &'static str, rows: Vec<Vec<Int>>, generators: usize) -> Result<Vec<Vec<Int>>, DocumentError> {
    for (i, r) in rows.iter().enumerate() {
        if r.len() != generators {
            return Err(DocumentError::RaggedRow { field, row: i, expected: generators, found: r.len() });
        }
    }
    Ok(rows)
}

pub fn parse_document(text: &str) -> Result<MackeyDocument, DocumentError> {
    let mut values: [Option<(usize, String)>; 8] = Default::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((key, value)) = trimmed.split_once(':') else {
            return Err(DocumentError::Syntax { line, message: "expected `key: value`".into() });
        };
        let key = key.trim();
        let Some(slot) = FIELDS.iter().position(|f| *f == key) else {
            return Err(DocumentError::UnknownField { line, field: key.to_string() });
        };
        if values[slot].is_some() {
            return Err(DocumentError::DuplicateField { line, field: key.to_string() });
        }
        values[slot] = Some((line, value.trim().to_string()));
    }
    let mut take = |i: usize| values[i].take().ok_or(DocumentError::MissingField(FIELDS[i]));
    let raw: Vec<(usize, String)> = (0..FIELDS.len()).map(&mut take).collect::<Result<_, _>>()?;

    let p_value = parse_count(&raw[0].1, raw[0].0)?;
    let p = Prime::new(p_value).map_err(|_| DocumentError::NotPrime(p_value))?;
    let top_gens = parse_count(&raw[1].1, raw[1].0)? as usize;
    let top_rel = relation_rows("top.relations", parse_rows(&raw[2].1, raw[2].0)?, top_gens)?;
    let bottom_gens = parse_count(&raw[3].1, raw[3].0)? as usize;
    let bottom_rel = relation_rows("bottom.relations", parse_rows(&raw[4].1, raw[4].0)?, bottom_gens)?;
    let action = to_matrix("action", &parse_rows(&raw[5].1, raw[5].0)?, (bottom_gens, bottom_gens))?;
    let res = to_matrix("res", &parse_rows(&raw[6].1, raw[6].0)?, (bottom_gens, top_gens))?;
    let tr = to_matrix("tr", &parse_rows(&raw[7].1, raw[7].0)?, (top_gens, bottom_gens))?;

    let doc = MackeyDocument {
        p,
        top: TierDocument { generators: top_gens, relations: top_rel },
        bottom: TierDocument { generators: bottom_gens, relations: bottom_rel },
        action,
        res,
        tr,
    };
    if let Some(s) = doc.to_functor().well_definedness_failures().first() {
        return Err(DocumentError::IllDefined(match s {
            Structure::Action => "action",
            Structure::Restriction => "res",
            Structure::Transfer => "tr",
        }));
    }
    Ok(doc)
}
