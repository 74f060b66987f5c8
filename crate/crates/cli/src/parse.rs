//! The ideal file format.
//!
//! ```text
//! # comment
//! label: optional free text
//! vars: x y z
//! gens: x*y^2, y*z^2, [2 0 1], x*y*z
//! ```

use std::collections::HashMap;

use num_bigint::BigUint;
use sympow_core::{Monomial, MonomialIdeal};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDocument {
    pub vars: Vec<String>,
    pub gens: Vec<Monomial>,
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `vars:` line")]
    MissingVars,
    #[error("missing `gens:` line")]
    MissingGens,
    #[error("`gens:` appears before `vars:`")]
    GensBeforeVars,
    #[error("duplicate `{0}:` line")]
    DuplicateKey(&'static str),
    #[error("expected `vars:`, `gens:` or `label:`")]
    UnexpectedLine,
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("no variables declared")]
    NoVariables,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed exponent `{0}`")]
    MalformedExponent(String),
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("empty generator")]
    EmptyGenerator,
    #[error("exponent vector has {found} entries, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("unterminated exponent vector")]
    Unterminated,
}

/// A parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

fn err(line: usize, col: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, col, kind }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `text` on `sep`, yielding each piece with its byte offset.
fn split_with_offsets(text: &str, sep: char) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    text.split(sep).map(move |piece| {
        let at = offset;
        offset += piece.len() + sep.len_utf8();
        (at, piece)
    })
}

fn trimmed(offset: usize, piece: &str) -> (usize, &str) {
    let start = piece.len() - piece.trim_start().len();
    (offset + start, piece.trim())
}

fn parse_exponent(text: &str, line: usize, col: usize) -> Result<BigUint, ParseError> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, col, ParseErrorKind::MalformedExponent(text.to_string())));
    }
    Ok(text.parse().expect("digits only"))
}

fn parse_generator(
    text: &str,
    col: usize,
    line: usize,
    index: &HashMap<&str, usize>,
    dim: usize,
) -> Result<Monomial, ParseError> {
    if text.is_empty() {
        return Err(err(line, col, ParseErrorKind::EmptyGenerator));
    }
    if let Some(rest) = text.strip_prefix('[') {
        let Some(inner) = rest.strip_suffix(']') else {
            return Err(err(line, col, ParseErrorKind::Unterminated));
        };
        let mut exponents = Vec::new();
        for (off, piece) in split_with_offsets(inner, ' ') {
            if piece.is_empty() {
                continue;
            }
            exponents.push(parse_exponent(piece, line, col + 1 + off)?);
        }
        if exponents.len() != dim {
            return Err(err(
                line,
                col,
                ParseErrorKind::WrongLength {
                    expected: dim,
                    found: exponents.len(),
                },
            ));
        }
        return Ok(Monomial::new(exponents));
    }
    let mut exponents = vec![BigUint::from(0u32); dim];
    for (off, factor) in split_with_offsets(text, '*') {
        let (off, factor) = trimmed(off, factor);
        let fcol = col + off;
        if factor.is_empty() {
            return Err(err(line, fcol, ParseErrorKind::EmptyGenerator));
        }
        let (name, power) = match factor.split_once('^') {
            Some((name, power)) => {
                let pcol = fcol + name.len() + 1;
                let p = parse_exponent(power.trim(), line, pcol)?;
                if p == BigUint::from(0u32) {
                    return Err(err(line, pcol, ParseErrorKind::MalformedExponent(power.to_string())));
                }
                (name.trim(), p)
            }
            None => (factor, BigUint::from(1u32)),
        };
        let Some(&v) = index.get(name) else {
            return Err(err(line, fcol, ParseErrorKind::UnknownVariable(name.to_string())));
        };
        exponents[v] += power;
    }
    Ok(Monomial::new(exponents))
}

/// Parses an ideal document. Blank lines and `#` comments are ignored.
pub fn parse_document(text: &str) -> Result<IdealDocument, ParseError> {
    let mut vars: Option<Vec<String>> = None;
    let mut gens: Option<Vec<Monomial>> = None;
    let mut label = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let body = content.trim_start();
        let Some((key, value)) = body.split_once(':') else {
            return Err(err(line, lead + 1, ParseErrorKind::UnexpectedLine));
        };
        let value_col = lead + key.len() + 2;
        match key.trim() {
            "label" => {
                if label.is_some() {
                    return Err(err(line, lead + 1, ParseErrorKind::DuplicateKey("label")));
                }
                label = Some(value.trim().to_string());
            }
            "vars" => {
                if vars.is_some() {
                    return Err(err(line, lead + 1, ParseErrorKind::DuplicateKey("vars")));
                }
                let mut names: Vec<String> = Vec::new();
                for (off, name) in split_with_offsets(value, ' ') {
                    if name.is_empty() {
                        continue;
                    }
                    let col = value_col + off;
                    if !valid_name(name) {
                        return Err(err(line, col, ParseErrorKind::InvalidName(name.to_string())));
                    }
                    if names.iter().any(|n| n == name) {
                        return Err(err(line, col, ParseErrorKind::DuplicateVariable(name.to_string())));
                    }
                    names.push(name.to_string());
                }
                if names.is_empty() {
                    return Err(err(line, value_col, ParseErrorKind::NoVariables));
                }
                vars = Some(names);
            }
            "gens" => {
                if gens.is_some() {
                    return Err(err(line, lead + 1, ParseErrorKind::DuplicateKey("gens")));
                }
                let Some(names) = &vars else {
                    return Err(err(line, lead + 1, ParseErrorKind::GensBeforeVars));
                };
                let index: HashMap<&str, usize> =
                    names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
                if value.trim().is_empty() {
                    return Err(err(line, value_col, ParseErrorKind::EmptyGenerators));
                }
                let mut list = Vec::new();
                for (off, piece) in split_with_offsets(value, ',') {
                    let (off, piece) = trimmed(off, piece);
                    list.push(parse_generator(piece, value_col + off, line, &index, names.len())?);
                }
                gens = Some(list);
            }
            _ => return Err(err(line, lead + 1, ParseErrorKind::UnexpectedLine)),
        }
    }
    let end = last_line.max(1);
    let vars = vars.ok_or_else(|| err(end, 1, ParseErrorKind::MissingVars))?;
    let gens = gens.ok_or_else(|| err(end, 1, ParseErrorKind::MissingGens))?;
    Ok(IdealDocument { vars, gens, label })
}

impl IdealDocument {
    pub fn from_ideal(ideal: &MonomialIdeal, label: Option<String>) -> Self {
        IdealDocument {
            vars: default_names(ideal.dim()),
            gens: ideal.gens().to_vec(),
            label,
        }
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.vars.len(), self.gens.iter().cloned()).expect("validated at parse time")
    }

    /// Re-parsable text with generators in exponent-vector form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(label) = &self.label {
            out.push_str(&format!("label: {label}\n"));
        }
        out.push_str(&format!("vars: {}\n", self.vars.join(" ")));
        let gens: Vec<String> = self.gens.iter().map(vector_form).collect();
        out.push_str(&format!("gens: {}\n", gens.join(", ")));
        out
    }
}

/// `[a b c]`.
pub fn vector_form(m: &Monomial) -> String {
    let parts: Vec<String> = m.exponents().iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(" "))
}

/// `x y z` for up to three variables, `x0 … x_n` beyond.
pub fn default_names(dim: usize) -> Vec<String> {
    match dim {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        4 => vec!["x".into(), "y".into(), "z".into(), "w".into()],
        _ => (0..dim).map(|i| format!("x{i}")).collect(),
    }
}

/// Parses a document and builds its (minimalized) ideal.
pub fn parse_ideal(text: &str) -> Result<(IdealDocument, MonomialIdeal), ParseError> {
    let doc = parse_document(text)?;
    let ideal = doc.ideal();
    Ok((doc, ideal))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example4() -> MonomialIdeal {
        MonomialIdeal::from_rows(3, [[1, 2, 0], [0, 1, 2], [2, 0, 1], [1, 1, 1]]).unwrap()
    }

    #[test]
    fn monomial_form() {
        let (doc, i) = parse_ideal("vars: x y z\ngens: x*y^2, y*z^2, z*x^2, x*y*z\n").unwrap();
        assert_eq!(i, example4());
        assert_eq!(doc.vars, vec!["x", "y", "z"]);
        assert_eq!(doc.label, None);
    }

    #[test]
    fn vector_form_matches() {
        let (_, a) = parse_ideal("vars: x y z\ngens: [1 2 0], [0 1 2]").unwrap();
        let (_, b) = parse_ideal("vars: x y z\ngens: x*y^2, y*z^2").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn principal_and_comments() {
        let text = "# a cube\n\nlabel: cube\nvars: x   # one variable\ngens: x^3\n";
        let (doc, i) = parse_ideal(text).unwrap();
        assert_eq!(i.gens(), &[Monomial::from_exponents(&[3])]);
        assert_eq!(doc.label.as_deref(), Some("cube"));
    }

    #[test]
    fn repeated_factors_multiply() {
        let (_, i) = parse_ideal("vars: a b\ngens: a*a*b^2").unwrap();
        assert_eq!(i.gens(), &[Monomial::from_exponents(&[2, 2])]);
    }

    #[test]
    fn round_trip_through_text() {
        let doc = IdealDocument::from_ideal(&example4(), Some("ex".into()));
        let (back, i) = parse_ideal(&doc.to_text()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(i, example4());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_document("vars: x y\ngens: x*q").unwrap_err();
        assert_eq!((e.line, e.col), (2, 9));
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("q".into()));

        let e = parse_document("vars: x y\ngens: x^a").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MalformedExponent("a".into()));
        assert_eq!((e.line, e.col), (2, 9));

        let e = parse_document("vars: x y\ngens:   ").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::EmptyGenerators);

        let e = parse_document("vars: x x").unwrap_err();
        assert_eq!((e.line, e.col, e.kind), (1, 9, ParseErrorKind::DuplicateVariable("x".into())));

        let e = parse_document("vars: x y\ngens: [1 2 3]").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::WrongLength { expected: 2, found: 3 });

        let e = parse_document("vars: x y\ngens: x^0").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MalformedExponent(_)));

        let e = parse_document("gens: x").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::GensBeforeVars);

        assert_eq!(parse_document("vars: x").unwrap_err().kind, ParseErrorKind::MissingGens);
        assert_eq!(parse_document("").unwrap_err().kind, ParseErrorKind::MissingVars);
        assert_eq!(parse_document("vars: x\nfoo").unwrap_err().kind, ParseErrorKind::UnexpectedLine);
        assert_eq!(
            parse_document("vars: x\ngens: x,").unwrap_err().kind,
            ParseErrorKind::EmptyGenerator
        );
    }
}
